//! Isomorphism and canonical labelling of Steiner triple systems.

use alloc::vec;
use alloc::vec::Vec;

use crate::configurations::find_pasch_configs;
use crate::system::TripleSystem;

/// Number of Pasch configurations through each point.
pub fn pasch_counts(s: &TripleSystem) -> Vec<usize> {
    let mut counts = vec![0; s.v()];
    for c in find_pasch_configs(s) {
        for p in c.points() {
            counts[p] += 1;
        }
    }
    counts
}

/// Sorted per-point Pasch counts; equal for isomorphic systems.
pub fn pasch_signature(s: &TripleSystem) -> Vec<usize> {
    let mut counts = pasch_counts(s);
    counts.sort_unstable();
    counts
}

struct Matcher<'a> {
    v: usize,
    third1: &'a [usize],
    third2: &'a [usize],
    inv1: &'a [usize],
    inv2: &'a [usize],
}

#[derive(Clone)]
struct Partial {
    map: Vec<Option<usize>>,
    used: Vec<bool>,
    order: Vec<usize>,
}

impl Matcher<'_> {
    /// Maps `a` to `b` and everything the block structure then forces.
    fn extend(&self, state: &mut Partial, a: usize, b: usize) -> bool {
        let mut queue = vec![(a, b)];
        while let Some((a, b)) = queue.pop() {
            match state.map[a] {
                Some(existing) if existing == b => continue,
                Some(_) => return false,
                None => {}
            }
            if state.used[b] || self.inv1[a] != self.inv2[b] {
                return false;
            }
            state.map[a] = Some(b);
            state.used[b] = true;
            for &c in &state.order {
                let d = state.map[c].expect("ordered points are mapped");
                queue.push((self.third1[a * self.v + c], self.third2[b * self.v + d]));
            }
            state.order.push(a);
        }
        true
    }

    fn search(&self, state: Partial) -> Option<Vec<usize>> {
        let Some(a) = state.map.iter().position(Option::is_none) else {
            return Some(state.map.into_iter().map(|m| m.expect("complete")).collect());
        };
        for b in (0..self.v).filter(|&b| !state.used[b] && self.inv1[a] == self.inv2[b]) {
            let mut next = state.clone();
            if self.extend(&mut next, a, b) {
                if let Some(found) = self.search(next) {
                    return Some(found);
                }
            }
        }
        None
    }
}

/// A point bijection `perm` with `s1.relabel(perm) == s2`, if one exists.
///
/// Points are matched one at a time; each choice is propagated through block
/// completion, and only points with equal Pasch counts may be matched.
pub fn are_isomorphic(s1: &TripleSystem, s2: &TripleSystem) -> Option<Vec<usize>> {
    if s1.v() != s2.v() {
        return None;
    }
    let v = s1.v();
    if v <= 1 {
        return Some((0..v).collect());
    }
    let inv1 = pasch_counts(s1);
    let inv2 = pasch_counts(s2);
    let (mut sorted1, mut sorted2) = (inv1.clone(), inv2.clone());
    sorted1.sort_unstable();
    sorted2.sort_unstable();
    if sorted1 != sorted2 {
        return None;
    }
    let third1 = s1.completion_table();
    let third2 = s2.completion_table();
    let matcher = Matcher { v, third1: &third1, third2: &third2, inv1: &inv1, inv2: &inv2 };
    let start = Partial { map: vec![None; v], used: vec![false; v], order: Vec::new() };
    let perm = matcher.search(start)?;
    debug_assert_eq!(s1.relabel(&perm).ok().as_ref(), Some(s2));
    Some(perm)
}

/// The lexicographically least block list among all relabellings of `s`,
/// together with the relabelling that produces it.
///
/// In the least list point 0 lies on `{0,1,2}, {0,3,4}, ...`, and a labelling
/// with that property is fixed by the point sent to 0 and the order and
/// orientation of the blocks through it, so only those labellings are tried.
pub fn canonical_form(s: &TripleSystem) -> (TripleSystem, Vec<usize>) {
    let v = s.v();
    if v <= 1 {
        return (s.clone(), (0..v).collect());
    }
    let third = s.completion_table();
    let half = (v - 1) / 2;
    let mut best: Option<(Vec<[usize; 3]>, Vec<usize>)> = None;
    let mut label = vec![0; v];
    let mut blocks = Vec::with_capacity(s.blocks().len());
    for p in 0..v {
        let pairs: Vec<(usize, usize)> =
            (0..v).filter(|&a| a != p && a < third[p * v + a]).map(|a| (a, third[p * v + a])).collect();
        debug_assert_eq!(pairs.len(), half);
        let mut order: Vec<usize> = (0..half).collect();
        loop {
            for mask in 0..1u32 << half {
                label[p] = 0;
                for (slot, &pi) in order.iter().enumerate() {
                    let (a, b) = pairs[pi];
                    let (a, b) = if mask >> slot & 1 == 1 { (b, a) } else { (a, b) };
                    label[a] = 2 * slot + 1;
                    label[b] = 2 * slot + 2;
                }
                blocks.clear();
                blocks.extend(s.blocks().iter().map(|b| {
                    let mut r = b.map(|x| label[x]);
                    r.sort_unstable();
                    r
                }));
                blocks.sort_unstable();
                if best.as_ref().is_none_or(|(bb, _)| blocks < *bb) {
                    best = Some((blocks.clone(), label.clone()));
                }
            }
            if !next_permutation(&mut order) {
                break;
            }
        }
    }
    let (blocks, perm) = best.expect("at least one labelling");
    (TripleSystem::from_valid(v, blocks), perm)
}

/// Advances to the next lexicographic permutation; false after the last.
fn next_permutation(xs: &mut [usize]) -> bool {
    let Some(i) = (1..xs.len()).rev().find(|&i| xs[i - 1] < xs[i]) else {
        return false;
    };
    let j = (i..xs.len()).rev().find(|&j| xs[j] > xs[i - 1]).expect("pivot has a successor");
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}
