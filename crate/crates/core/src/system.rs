//! Steiner triple systems and their validation.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Largest point count accepted by [`validate_sts`].
pub const MAX_POINTS: usize = 1023;

/// Maximum number of violations kept in a [`ValidationReport`].
pub const VIOLATION_CAP: usize = 100;

/// A Steiner triple system on the points `0..v`.
///
/// Blocks are stored sorted within and across, so two systems are equal
/// exactly when they have the same point count and the same block set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TripleSystem {
    v: usize,
    blocks: Vec<[usize; 3]>,
}

impl TripleSystem {
    /// Canonicalizes and validates a block list.
    pub fn new(v: usize, blocks: Vec<[usize; 3]>) -> Result<Self> {
        let report = validate_sts(v, &blocks);
        if let Some(first) = report.violations.into_iter().next() {
            return Err(Error::InvalidSystem { rule: first.rule.name(), witness: first.witness });
        }
        Ok(Self::from_valid(v, blocks))
    }

    /// Canonicalizes a block list that is already known to be valid.
    pub(crate) fn from_valid(v: usize, mut blocks: Vec<[usize; 3]>) -> Self {
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort_unstable();
        debug_assert!(validate_sts(v, &blocks).valid);
        TripleSystem { v, blocks }
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn blocks(&self) -> &[[usize; 3]] {
        &self.blocks
    }

    /// Applies the point bijection `perm` (point `p` becomes `perm[p]`).
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        check_permutation(perm, self.v)?;
        let blocks = self.blocks.iter().map(|b| [perm[b[0]], perm[b[1]], perm[b[2]]]).collect();
        Ok(Self::from_valid(self.v, blocks))
    }

    /// `third[x * v + y]` is the third point of the block through `x != y`;
    /// the diagonal holds `x`.
    pub(crate) fn completion_table(&self) -> Vec<usize> {
        let v = self.v;
        let mut third = vec![0; v * v];
        for x in 0..v {
            third[x * v + x] = x;
        }
        for &[a, b, c] in &self.blocks {
            third[a * v + b] = c;
            third[b * v + a] = c;
            third[a * v + c] = b;
            third[c * v + a] = b;
            third[b * v + c] = a;
            third[c * v + b] = a;
        }
        third
    }
}

pub(crate) fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    if perm.len() != n {
        return Err(Error::Shape { expected: n, found: perm.len() });
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n {
            return Err(Error::OutOfRange { element: p, order: n });
        }
        if core::mem::replace(&mut seen[p], true) {
            return Err(Error::NotDistinct { x: p, y: p, z: p });
        }
    }
    Ok(())
}

/// `v ≡ 1, 3 (mod 6)`, with the degenerate orders 0 and 1 admitted.
pub fn is_admissible_order(v: usize) -> bool {
    v <= 1 || v % 6 == 1 || v % 6 == 3
}

/// The rule broken by a [`Violation`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    /// The point count exceeds [`MAX_POINTS`].
    OrderLimit,
    /// A block mentions a point outside `[0, v)`.
    PointRange,
    /// A block repeats a point.
    RepeatedPoint,
    /// A pair lies in two blocks.
    PairCoveredTwice,
    /// A pair lies in no block.
    PairUncovered,
    /// The block count differs from `v(v-1)/6`.
    BlockCount,
    /// `v` is not 0, 1 or congruent to 1 or 3 mod 6.
    InadmissibleOrder,
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::OrderLimit => "order-limit",
            Rule::PointRange => "point-range",
            Rule::RepeatedPoint => "repeated-point",
            Rule::PairCoveredTwice => "pair-covered-twice",
            Rule::PairUncovered => "pair-uncovered",
            Rule::BlockCount => "block-count",
            Rule::InadmissibleOrder => "inadmissible-order",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub rule: Rule,
    /// The offending block, pair, or `[expected, found]` counts.
    pub witness: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub valid: bool,
    /// At most [`VIOLATION_CAP`] entries.
    pub violations: Vec<Violation>,
    /// Violations dropped once the cap was reached.
    pub truncated: usize,
}

impl ValidationReport {
    fn push(&mut self, rule: Rule, witness: Vec<usize>) {
        self.valid = false;
        if self.violations.len() < VIOLATION_CAP {
            self.violations.push(Violation { rule, witness });
        } else {
            self.truncated += 1;
        }
    }

    pub fn count(&self, rule: Rule) -> usize {
        self.violations.iter().filter(|v| v.rule == rule).count()
    }
}

/// Checks that `blocks` is a Steiner triple system on `v` points.
///
/// Every pair covered twice is reported at its second covering block, every
/// uncovered pair is reported in lexicographic order, then the cardinality
/// rules follow.
pub fn validate_sts(v: usize, blocks: &[[usize; 3]]) -> ValidationReport {
    let mut report = ValidationReport { valid: true, ..Default::default() };
    if v > MAX_POINTS {
        report.push(Rule::OrderLimit, vec![v, MAX_POINTS]);
        return report;
    }
    let mut covered = vec![false; v * v];
    for block in blocks {
        if let Some(&p) = block.iter().find(|&&p| p >= v) {
            report.push(Rule::PointRange, vec![p]);
            continue;
        }
        let [a, b, c] = *block;
        if a == b || b == c || a == c {
            report.push(Rule::RepeatedPoint, block.to_vec());
            continue;
        }
        for (x, y) in [(a, b), (a, c), (b, c)] {
            let (x, y) = (x.min(y), x.max(y));
            if core::mem::replace(&mut covered[x * v + y], true) {
                report.push(Rule::PairCoveredTwice, vec![x, y]);
            }
        }
    }
    for x in 0..v {
        for y in x + 1..v {
            if !covered[x * v + y] {
                report.push(Rule::PairUncovered, vec![x, y]);
            }
        }
    }
    let expected = v * v.saturating_sub(1) / 6;
    if blocks.len() != expected {
        report.push(Rule::BlockCount, vec![expected, blocks.len()]);
    }
    if !is_admissible_order(v) {
        report.push(Rule::InadmissibleOrder, vec![v]);
    }
    report
}
