//! Search for small identities that hold in one Steiner loop and fail in
//! another.
//!
//! A failing witness that is itself a Steiner loop certifies that an identity
//! does not follow from the Steiner loop laws. This is a heuristic tool for
//! probing the equational theory of a loop: it produces candidate identities,
//! not a basis.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::identity::{assignment_count, check_identity};
use crate::table::{CayleyTable, LoopTable};
use crate::term::{Identity, ParseError, ParseErrorKind, Term};

/// Upper bound on `max_leaves`.
pub const MAX_LEAVES: usize = 8;
/// Leaf budget used when none is given.
pub const DEFAULT_MAX_LEAVES: usize = 6;
/// Upper bound on the assignments evaluated per table.
pub const MAX_ASSIGNMENTS: u64 = 1 << 20;

#[derive(Clone, Copy)]
enum Node {
    Var(usize),
    Product(usize, usize),
}

/// Canonical terms (commutative children ordered) indexed by construction.
struct Arena {
    nodes: Vec<Node>,
    terms: Vec<Term>,
    /// `levels[l]` is the index range of terms with `l + 1` leaves.
    levels: Vec<core::ops::Range<usize>>,
}

fn check_variables(variables: &[char]) -> Result<()> {
    for (i, &c) in variables.iter().enumerate() {
        if !c.is_ascii_lowercase() || variables[..i].contains(&c) {
            return Err(Error::Parse(ParseError { offset: i, kind: ParseErrorKind::IllegalChar(c) }));
        }
    }
    Ok(())
}

impl Arena {
    fn build(variables: &[char], max_leaves: usize) -> Result<Arena> {
        if max_leaves > MAX_LEAVES {
            return Err(Error::Parameter { name: "max_leaves", value: max_leaves, max: MAX_LEAVES });
        }
        check_variables(variables)?;
        let mut arena = Arena { nodes: Vec::new(), terms: Vec::new(), levels: Vec::new() };
        for leaves in 1..=max_leaves {
            let mut level: Vec<(Term, Node)> = Vec::new();
            if leaves == 1 {
                level.extend(variables.iter().enumerate().map(|(i, &c)| (Term::Var(c), Node::Var(i))));
            } else {
                for left in 1..=leaves / 2 {
                    let right = leaves - left;
                    for a in arena.levels[left - 1].clone() {
                        for b in arena.levels[right - 1].clone() {
                            // Levels are sorted, so index order is term order.
                            if left == right && b < a {
                                continue;
                            }
                            let t = Term::product(arena.terms[a].clone(), arena.terms[b].clone());
                            level.push((t, Node::Product(a, b)));
                        }
                    }
                }
            }
            level.sort_by(|x, y| x.0.cmp(&y.0));
            let start = arena.terms.len();
            for (t, n) in level {
                arena.terms.push(t);
                arena.nodes.push(n);
            }
            arena.levels.push(start..arena.terms.len());
        }
        Ok(arena)
    }

    /// A 64-bit digest of each term's value table over all assignments.
    ///
    /// Equal tables give equal digests; unequal digests prove unequal tables.
    fn digests(&self, table: &LoopTable, k: usize) -> Result<Vec<u64>> {
        let n = table.order();
        if n > 256 {
            return Err(Error::Order { order: n, min: 1, max: 256 });
        }
        let count = assignment_count(n, k);
        if count > MAX_ASSIGNMENTS {
            return Err(Error::Parameter {
                name: "assignments",
                value: count as usize,
                max: MAX_ASSIGNMENTS as usize,
            });
        }
        let count = count as usize;
        let top = self.levels.len().saturating_sub(1);
        let keep_below = self.levels.get(top).map_or(0, |r| r.start);
        let mut values: Vec<Vec<u8>> = Vec::with_capacity(keep_below);
        let mut digests = Vec::with_capacity(self.terms.len());
        let mut scratch = vec![0u8; count];
        for (i, node) in self.nodes.iter().enumerate() {
            match *node {
                Node::Var(slot) => {
                    let stride = n.pow((k - 1 - slot) as u32);
                    for (a, out) in scratch.iter_mut().enumerate() {
                        *out = (a / stride % n) as u8;
                    }
                }
                Node::Product(l, r) => {
                    for (a, out) in scratch.iter_mut().enumerate() {
                        *out = table.mul(values[l][a] as usize, values[r][a] as usize) as u8;
                    }
                }
            }
            digests.push(fnv1a(&scratch));
            if i < keep_below {
                values.push(scratch.clone());
            }
        }
        Ok(digests)
    }
}

fn fnv1a(bytes: &[u8]) -> u64 {
    bytes.iter().fold(0xcbf2_9ce4_8422_2325, |h, &b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

/// Every product tree over `variables` with at most `max_leaves` leaves, up to
/// commutativity of each product, in increasing term order.
pub fn enumerate_terms(variables: &[char], max_leaves: usize) -> Result<Vec<Term>> {
    Ok(Arena::build(variables, max_leaves)?.terms)
}

/// Puts the children of every product in increasing order.
pub fn commutative_canonical(t: &Term) -> Term {
    match t {
        Term::Product(l, r) => {
            let (l, r) = (commutative_canonical(l), commutative_canonical(r));
            if r < l {
                Term::product(r, l)
            } else {
                Term::product(l, r)
            }
        }
        other => other.clone(),
    }
}

/// Normal form modulo `aa = 1`, `a(ab) = b` and `1a = a`, with commutative
/// matching and canonically ordered children.
///
/// Rewriting happens bottom-up; every rewrite at a node returns an already
/// normal subterm, so one pass reaches the normal form.
pub fn steiner_normalize(t: &Term) -> Term {
    let Term::Product(l, r) = t else { return t.clone() };
    let (a, b) = (steiner_normalize(l), steiner_normalize(r));
    if a == b {
        return Term::One;
    }
    if a == Term::One {
        return b;
    }
    if b == Term::One {
        return a;
    }
    if let Some(rest) = cancel(&a, &b).or_else(|| cancel(&b, &a)) {
        return rest;
    }
    if b < a {
        Term::product(b, a)
    } else {
        Term::product(a, b)
    }
}

/// `a(ab) = b` and `a(ba) = b`.
fn cancel(a: &Term, other: &Term) -> Option<Term> {
    match other {
        Term::Product(u, w) if **u == *a => Some((**w).clone()),
        Term::Product(u, w) if **w == *a => Some((**u).clone()),
        _ => None,
    }
}

/// Canonical representative of an identity up to renaming its variables,
/// commutativity, and swapping sides.
pub fn identity_class_key(i: &Identity, variables: &[char]) -> (Term, Term) {
    let mut best: Option<(Term, Term)> = None;
    let mut perm: Vec<usize> = (0..variables.len()).collect();
    loop {
        let rename = |c: char| variables.iter().position(|&v| v == c).map_or(c, |p| variables[perm[p]]);
        let l = commutative_canonical(&i.lhs.rename(&rename));
        let r = commutative_canonical(&i.rhs.rename(&rename));
        let pair = if r < l { (r, l) } else { (l, r) };
        if best.as_ref().is_none_or(|b| pair < *b) {
            best = Some(pair);
        }
        if !next_perm(&mut perm) {
            break;
        }
    }
    best.expect("at least one renaming")
}

fn next_perm(xs: &mut [usize]) -> bool {
    let Some(i) = (1..xs.len()).rev().find(|&i| xs[i - 1] < xs[i]) else {
        return false;
    };
    let j = (i..xs.len()).rev().find(|&j| xs[j] > xs[i - 1]).expect("successor exists");
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExploreOptions {
    pub variables: Vec<char>,
    pub max_leaves: usize,
}

impl Default for ExploreOptions {
    fn default() -> Self {
        ExploreOptions { variables: vec!['x', 'y', 'z'], max_leaves: DEFAULT_MAX_LEAVES }
    }
}

/// An identity holding in the target and failing in `witnesses[witness]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoundIdentity {
    pub identity: Identity,
    pub witness: usize,
}

/// Identities between enumerated terms that hold in `target`, fail in at
/// least one witness, and are not equal modulo the Steiner rewrites.
///
/// One identity is reported per class of renamings, sorted by total leaf count
/// then by sides. The reported witness is the first one in which it fails.
pub fn find_identities(
    target: &LoopTable,
    witnesses: &[LoopTable],
    options: &ExploreOptions,
) -> Result<Vec<FoundIdentity>> {
    target.require_steiner()?;
    for w in witnesses {
        w.require_steiner()?;
    }
    let arena = Arena::build(&options.variables, options.max_leaves)?;
    if witnesses.is_empty() || arena.terms.is_empty() {
        return Ok(Vec::new());
    }
    let k = options.variables.len();

    // One representative per Steiner normal form: the least term with it.
    let mut seen = BTreeSet::new();
    let reps: Vec<usize> =
        (0..arena.terms.len()).filter(|&i| seen.insert(steiner_normalize(&arena.terms[i]))).collect();

    let target_digests = arena.digests(target, k)?;
    let witness_digests = witnesses.iter().map(|w| arena.digests(w, k)).collect::<Result<Vec<_>>>()?;

    let mut groups: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
    for &i in &reps {
        groups.entry(target_digests[i]).or_default().push(i);
    }

    let mut found: BTreeMap<(Term, Term), FoundIdentity> = BTreeMap::new();
    for members in groups.values().filter(|m| m.len() > 1) {
        for (p, &a) in members.iter().enumerate() {
            for &b in &members[p + 1..] {
                let Some(witness) = witness_digests.iter().position(|d| d[a] != d[b]) else {
                    continue;
                };
                let identity = Identity::new(arena.terms[a].clone(), arena.terms[b].clone());
                // Digest collisions must not produce a false claim.
                if !check_identity(&identity, target)?.holds {
                    continue;
                }
                let key = identity_class_key(&identity, &options.variables);
                found.entry(key).or_insert(FoundIdentity { identity, witness });
            }
        }
    }
    let mut out: Vec<FoundIdentity> = found.into_values().collect();
    out.sort_by(|x, y| {
        x.identity
            .leaves()
            .cmp(&y.identity.leaves())
            .then_with(|| x.identity.lhs.cmp(&y.identity.lhs))
            .then_with(|| x.identity.rhs.cmp(&y.identity.rhs))
    });
    Ok(out)
}
