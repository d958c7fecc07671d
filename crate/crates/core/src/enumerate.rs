//! Exhaustive enumeration of Steiner triple systems up to isomorphism.
//!
//! Blocks are added in lexicographic order of the first uncovered pair, so
//! each labelled system is built once. Every system can be relabelled so that
//! point 0 lies on `{0,1,2}, {0,3,4}, ...` and point 1 on `{1,3,5}`; those
//! blocks are placed up front. Each completed system is compared against the
//! representatives found so far with the same Pasch signature.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::iso::{are_isomorphic, canonical_form, pasch_signature};
use crate::system::{is_admissible_order, TripleSystem};

/// Largest order enumerated without the slow flag.
pub const MAX_FAST_ORDER: usize = 9;
/// Largest order enumerated at all.
pub const MAX_ORDER: usize = 13;

/// Snapshot passed to the progress callback.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Progress {
    /// Completed labelled systems examined so far.
    pub systems: u64,
    /// Isomorphism classes found so far.
    pub classes: usize,
}

/// Canonical representatives of every isomorphism class of STS(`v`), sorted.
///
/// Orders above [`MAX_FAST_ORDER`] require `allow_slow`.
pub fn enumerate_sts(v: usize, allow_slow: bool) -> Result<Vec<TripleSystem>> {
    enumerate_sts_with_progress(v, allow_slow, &mut |_| {})
}

pub fn enumerate_sts_with_progress(
    v: usize,
    allow_slow: bool,
    progress: &mut dyn FnMut(Progress),
) -> Result<Vec<TripleSystem>> {
    if !is_admissible_order(v) {
        return Err(Error::InadmissibleOrder(v));
    }
    if v > MAX_ORDER {
        return Err(Error::Parameter { name: "order", value: v, max: MAX_ORDER });
    }
    if v > MAX_FAST_ORDER && !allow_slow {
        return Err(Error::Parameter {
            name: "order (without the slow flag)",
            value: v,
            max: MAX_FAST_ORDER,
        });
    }
    if v <= 1 {
        return Ok(vec![TripleSystem::from_valid(v, Vec::new())]);
    }

    let mut search = Search::new(v);
    for i in 0..(v - 1) / 2 {
        search.place(0, 2 * i + 1, 2 * i + 2);
    }
    if v >= 7 {
        search.place(1, 3, 5);
    }
    let mut reps: BTreeMap<Vec<usize>, Vec<TripleSystem>> = BTreeMap::new();
    let mut classes = 0usize;
    let mut systems = 0u64;
    search.run(&mut |blocks| {
        let s = TripleSystem::from_valid(v, blocks.to_vec());
        let bucket = reps.entry(pasch_signature(&s)).or_default();
        if !bucket.iter().any(|r| are_isomorphic(r, &s).is_some()) {
            bucket.push(s);
            classes += 1;
        }
        systems += 1;
        if systems.is_multiple_of(1024) {
            progress(Progress { systems, classes });
        }
    });
    progress(Progress { systems, classes });

    let mut out: Vec<TripleSystem> = reps.into_values().flatten().map(|s| canonical_form(&s).0).collect();
    out.sort();
    Ok(out)
}

struct Search {
    v: usize,
    covered: Vec<bool>,
    blocks: Vec<[usize; 3]>,
}

impl Search {
    fn new(v: usize) -> Self {
        Search { v, covered: vec![false; v * v], blocks: Vec::with_capacity(v * (v - 1) / 6) }
    }

    fn set(&mut self, a: usize, b: usize, value: bool) {
        self.covered[a * self.v + b] = value;
        self.covered[b * self.v + a] = value;
    }

    fn is_covered(&self, a: usize, b: usize) -> bool {
        self.covered[a * self.v + b]
    }

    fn place(&mut self, a: usize, b: usize, c: usize) {
        self.set(a, b, true);
        self.set(a, c, true);
        self.set(b, c, true);
        self.blocks.push([a, b, c]);
    }

    fn remove(&mut self) {
        let [a, b, c] = self.blocks.pop().expect("placed block");
        self.set(a, b, false);
        self.set(a, c, false);
        self.set(b, c, false);
    }

    fn first_uncovered(&self) -> Option<(usize, usize)> {
        let v = self.v;
        (0..v).flat_map(|x| (x + 1..v).map(move |y| (x, y))).find(|&(x, y)| !self.is_covered(x, y))
    }

    fn run(&mut self, emit: &mut dyn FnMut(&[[usize; 3]])) {
        let Some((x, y)) = self.first_uncovered() else {
            emit(&self.blocks);
            return;
        };
        // Every pair before (x, y) is covered, so the third point exceeds y.
        for z in y + 1..self.v {
            if !self.is_covered(x, z) && !self.is_covered(y, z) {
                self.place(x, y, z);
                self.run(emit);
                self.remove();
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{affine_ag23, fano};

    #[test]
    fn small_orders() {
        assert_eq!(enumerate_sts(0, false).unwrap().len(), 1);
        assert_eq!(enumerate_sts(1, false).unwrap().len(), 1);
        let three = enumerate_sts(3, false).unwrap();
        assert_eq!(three, [TripleSystem::new(3, vec![[0, 1, 2]]).unwrap()]);
    }

    #[test]
    fn fano_is_the_only_sts7() {
        let found = enumerate_sts(7, false).unwrap();
        assert_eq!(found.len(), 1);
        assert!(are_isomorphic(&found[0], &fano()).is_some());
        assert_eq!(found[0], canonical_form(&fano()).0);
    }

    #[test]
    fn ag23_is_the_only_sts9() {
        let found = enumerate_sts(9, false).unwrap();
        assert_eq!(found.len(), 1);
        assert!(are_isomorphic(&found[0], &affine_ag23()).is_some());
    }

    #[test]
    fn bad_orders() {
        assert_eq!(enumerate_sts(5, false), Err(Error::InadmissibleOrder(5)));
        assert!(matches!(enumerate_sts(13, false), Err(Error::Parameter { .. })));
        assert!(matches!(enumerate_sts(15, true), Err(Error::Parameter { .. })));
    }
}
