//! Subloops, group tests, and three deciders for the property "whenever
//! `x(yz) = (xy)z`, the subloop `<x, y, z>` is a group" (Moufang's theorem).
//!
//! * [`satisfies_mt_definition`] applies the definition to any loop.
//! * [`satisfies_mt_prop1`] checks, for Steiner loops only, that every
//!   associating triple also satisfies `x(yz) = y(xz)`.
//! * [`satisfies_mt_fano`] checks, for Steiner loops only, that every Pasch
//!   configuration of the triple system closes to a Fano plane.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::configurations::every_pasch_generates_fano;
use crate::convert::loop_to_sts;
use crate::error::{Error, Result};
use crate::identity::{check_identity, Builtin, CheckReport};
use crate::table::{CayleyTable, LoopTable, MAX_ORDER};

/// The smallest subloop containing `generators`, ascending.
///
/// Only closure under the product is computed. For a finite loop that is
/// enough: on a finite set `S` closed under the product, each translation
/// `s -> as` is injective (rows of a Latin square), hence a bijection of `S`,
/// so the left and right quotients of elements of `S` also lie in `S`.
pub fn subloop_generated(t: &LoopTable, generators: &[usize]) -> Result<Vec<usize>> {
    for &g in generators {
        t.check_element(g)?;
    }
    let mut inside = vec![false; t.order()];
    let mut list = vec![0];
    inside[0] = true;
    for &g in generators {
        if !core::mem::replace(&mut inside[g], true) {
            list.push(g);
        }
    }
    let mut i = 0;
    while i < list.len() {
        for j in 0..=i {
            let (a, b) = (list[i], list[j]);
            for r in [t.mul(a, b), t.mul(b, a)] {
                if !core::mem::replace(&mut inside[r], true) {
                    list.push(r);
                }
            }
        }
        i += 1;
    }
    list.sort_unstable();
    Ok(list)
}

/// Whether the product restricted to `subset` is associative.
///
/// `subset` must contain the identity and be closed under the product.
pub fn is_group_on(t: &LoopTable, subset: &[usize]) -> Result<bool> {
    let mut inside = vec![false; t.order()];
    for &s in subset {
        t.check_element(s)?;
        inside[s] = true;
    }
    if !inside[0] {
        return Err(Error::MissingIdentity { witness: 0 });
    }
    for &a in subset {
        for &b in subset {
            if !inside[t.mul(a, b)] {
                return Err(Error::NotClosed { x: a, y: b });
            }
        }
    }
    Ok(associative_on(t, subset))
}

fn associative_on(t: &LoopTable, subset: &[usize]) -> bool {
    subset.iter().all(|&x| {
        subset.iter().all(|&y| {
            let xy = t.mul(x, y);
            subset.iter().all(|&z| t.mul(x, t.mul(y, z)) == t.mul(xy, z))
        })
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MtMethod {
    Definition,
    Prop1,
    Fano,
}

impl MtMethod {
    pub fn name(self) -> &'static str {
        match self {
            MtMethod::Definition => "definition",
            MtMethod::Prop1 => "prop1",
            MtMethod::Fano => "fano",
        }
    }
}

impl fmt::Display for MtMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MTReport {
    pub satisfies: bool,
    pub method: MtMethod,
    /// First failing triple in lexicographic order, in loop indices.
    pub counterexample: Option<(usize, usize, usize)>,
    pub triples_examined: u64,
}

/// Decides the property directly: every associating triple must generate a
/// subloop that is a group.
///
/// In a Steiner loop any two elements generate a group (`{1, x, y, xy}` is a
/// Klein group or smaller), so triples containing the identity, repeating an
/// element, or lying on one block are accepted without a closure. Other loops
/// get no such shortcut.
pub fn satisfies_mt_definition(t: &LoopTable) -> MTReport {
    let steiner = t.is_steiner();
    let n = t.order();
    let mut by_generators: BTreeMap<[usize; 3], bool> = BTreeMap::new();
    let mut by_subloop: BTreeMap<Vec<usize>, bool> = BTreeMap::new();
    let mut examined = 0u64;
    for x in 0..n {
        for y in 0..n {
            let xy = t.mul(x, y);
            for z in 0..n {
                examined += 1;
                if t.mul(x, t.mul(y, z)) != t.mul(xy, z) {
                    continue;
                }
                if steiner && (x == 0 || y == 0 || z == 0 || x == y || z == x || z == y || z == xy) {
                    continue;
                }
                let mut key = [x, y, z];
                key.sort_unstable();
                let group = *by_generators.entry(key).or_insert_with(|| {
                    let sub = subloop_generated(t, &key).expect("elements in range");
                    *by_subloop.entry(sub).or_insert_with_key(|sub| associative_on(t, sub))
                });
                if !group {
                    return MTReport {
                        satisfies: false,
                        method: MtMethod::Definition,
                        counterexample: Some((x, y, z)),
                        triples_examined: examined,
                    };
                }
            }
        }
    }
    MTReport {
        satisfies: true,
        method: MtMethod::Definition,
        counterexample: None,
        triples_examined: examined,
    }
}

/// Checks `x(yz) = (xy)z  =>  x(yz) = y(xz)` over all triples of a Steiner loop.
pub fn satisfies_mt_prop1(t: &LoopTable) -> Result<MTReport> {
    t.require_steiner()?;
    let n = t.order();
    let mut examined = 0u64;
    for x in 0..n {
        for y in 0..n {
            let xy = t.mul(x, y);
            for z in 0..n {
                examined += 1;
                let lhs = t.mul(x, t.mul(y, z));
                if lhs == t.mul(xy, z) && lhs != t.mul(y, t.mul(x, z)) {
                    return Ok(MTReport {
                        satisfies: false,
                        method: MtMethod::Prop1,
                        counterexample: Some((x, y, z)),
                        triples_examined: examined,
                    });
                }
            }
        }
    }
    Ok(MTReport {
        satisfies: true,
        method: MtMethod::Prop1,
        counterexample: None,
        triples_examined: examined,
    })
}

/// Checks that every Pasch configuration of the loop's triple system lies in
/// a Fano subplane.
pub fn satisfies_mt_fano(t: &LoopTable) -> Result<MTReport> {
    t.require_steiner()?;
    if t.order() < 2 {
        return Err(Error::Order { order: t.order(), min: 2, max: MAX_ORDER });
    }
    let report = every_pasch_generates_fano(&loop_to_sts(t)?);
    let counterexample = report.counterexample.map(|a| {
        let v: Vec<usize> = a.values().map(|p| p + 1).collect();
        (v[0], v[1], v[2])
    });
    Ok(MTReport {
        satisfies: report.holds,
        method: MtMethod::Fano,
        counterexample,
        triples_examined: report.assignments_checked,
    })
}

/// Checks the Moufang identity `x(y(xz)) = ((xy)x)z`.
pub fn is_moufang(t: &LoopTable) -> CheckReport {
    check_identity(&Builtin::Moufang.identity(), t).expect("loops carry an identity")
}
