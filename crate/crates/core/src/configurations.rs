//! Pasch configurations and Fano subplanes of Steiner triple systems.
//!
//! In a Steiner quasigroup, three points `x, y, z` not on a common block
//! satisfy `x(yz) = (xy)z` exactly when they span a Pasch configuration with
//! blocks `{x, y, xy}`, `{y, z, yz}`, `{x, yz, c}`, `{xy, z, c}` where
//! `c = x(yz)`. Such triples are called Pasch triples below.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::convert::sts_to_quasigroup;
use crate::error::{Error, Result};
use crate::identity::{Assignment, CheckReport};
use crate::system::TripleSystem;
use crate::table::{CayleyTable, QuasigroupTable};

/// Four blocks on six points, each point on exactly two of them.
///
/// Blocks are sorted internally and among themselves, so configurations
/// compare equal regardless of which triple produced them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PaschConfig {
    blocks: [[usize; 3]; 4],
}

impl PaschConfig {
    fn canonical(mut blocks: [[usize; 3]; 4]) -> Self {
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort_unstable();
        PaschConfig { blocks }
    }

    /// The configuration spanned by the Pasch triple `(x, y, z)`.
    pub fn from_triple<Q: CayleyTable + ?Sized>(q: &Q, x: usize, y: usize, z: usize) -> Self {
        let xy = q.mul(x, y);
        let yz = q.mul(y, z);
        let c = q.mul(x, yz);
        PaschConfig::canonical([[x, y, xy], [y, z, yz], [x, yz, c], [xy, z, c]])
    }

    pub fn blocks(&self) -> &[[usize; 3]; 4] {
        &self.blocks
    }

    /// The six points, ascending.
    pub fn points(&self) -> Vec<usize> {
        let set: BTreeSet<usize> = self.blocks.iter().flatten().copied().collect();
        set.into_iter().collect()
    }
}

/// Ordered triples of distinct, non-collinear points with `x(yz) = (xy)z`,
/// in lexicographic order.
pub fn associating_triples(q: &QuasigroupTable) -> Result<Vec<(usize, usize, usize)>> {
    q.require_steiner()?;
    let n = q.order();
    let mut out = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if y == x {
                continue;
            }
            let xy = q.mul(x, y);
            for z in 0..n {
                if z == x || z == y || z == xy {
                    continue;
                }
                if q.mul(x, q.mul(y, z)) == q.mul(xy, z) {
                    out.push((x, y, z));
                }
            }
        }
    }
    Ok(out)
}

/// All Pasch configurations, found from the associating triples.
pub fn find_pasch_configs(s: &TripleSystem) -> BTreeSet<PaschConfig> {
    if s.v() <= 3 {
        return BTreeSet::new();
    }
    let q = sts_to_quasigroup(s).expect("valid system of positive order");
    associating_triples(&q)
        .expect("quasigroup of a triple system is Steiner")
        .into_iter()
        .map(|(x, y, z)| PaschConfig::from_triple(&q, x, y, z))
        .collect()
}

/// All Pasch configurations, found by scanning every set of four blocks.
///
/// Quartic in the number of blocks; kept as an independent reference for
/// [`find_pasch_configs`].
pub fn find_pasch_configs_by_quadruples(s: &TripleSystem) -> BTreeSet<PaschConfig> {
    let blocks = s.blocks();
    let meets = |a: &[usize; 3], b: &[usize; 3]| a.iter().filter(|p| b.contains(p)).count();
    let mut out = BTreeSet::new();
    let b = blocks.len();
    for i in 0..b {
        for j in i + 1..b {
            if meets(&blocks[i], &blocks[j]) != 1 {
                continue;
            }
            for k in j + 1..b {
                if meets(&blocks[i], &blocks[k]) != 1 || meets(&blocks[j], &blocks[k]) != 1 {
                    continue;
                }
                for l in k + 1..b {
                    let quad = [blocks[i], blocks[j], blocks[k], blocks[l]];
                    if is_pasch_shape(&quad) {
                        out.insert(PaschConfig::canonical(quad));
                    }
                }
            }
        }
    }
    out
}

fn is_pasch_shape(quad: &[[usize; 3]; 4]) -> bool {
    let mut points: Vec<usize> = quad.iter().flatten().copied().collect();
    points.sort_unstable();
    points.dedup();
    if points.len() != 6 {
        return false;
    }
    let on_two = points.iter().all(|p| quad.iter().filter(|b| b.contains(p)).count() == 2);
    let pairwise =
        (0..4).all(|i| (i + 1..4).all(|j| quad[i].iter().filter(|p| quad[j].contains(p)).count() == 1));
    on_two && pairwise
}

/// True when the triple system has no Pasch configuration.
pub fn is_anti_pasch(s: &TripleSystem) -> bool {
    find_pasch_configs(s).is_empty()
}

/// Whether the Pasch triple `(x, y, z)` also satisfies `x(yz) = y(xz)` and
/// `(xy)(yz) = xz`, completing the configuration to a Fano plane.
pub fn triple_closes_fano(q: &QuasigroupTable, x: usize, y: usize, z: usize) -> Result<bool> {
    let n = q.order();
    for p in [x, y, z] {
        if p >= n {
            return Err(Error::OutOfRange { element: p, order: n });
        }
    }
    if x == y || y == z || x == z {
        return Err(Error::NotDistinct { x, y, z });
    }
    let (xy, yz, xz) = (q.mul(x, y), q.mul(y, z), q.mul(x, z));
    if z == xy {
        return Err(Error::Collinear { x, y, z });
    }
    let c = q.mul(x, yz);
    if c != q.mul(xy, z) {
        return Err(Error::NotAssociating { x, y, z });
    }
    Ok(c == q.mul(y, xz) && q.mul(xy, yz) == xz)
}

/// Closure of `points` under completion of blocks, as a point set in a
/// Steiner quasigroup.
pub(crate) fn close_points<Q: CayleyTable + ?Sized>(q: &Q, points: &[usize]) -> Vec<usize> {
    let mut inside = vec![false; q.order()];
    let mut list = Vec::new();
    for &p in points {
        if !core::mem::replace(&mut inside[p], true) {
            list.push(p);
        }
    }
    let mut i = 0;
    while i < list.len() {
        for j in 0..i {
            let r = q.mul(list[i], list[j]);
            if !core::mem::replace(&mut inside[r], true) {
                list.push(r);
            }
        }
        i += 1;
    }
    list.sort_unstable();
    list
}

/// Smallest point set containing `points` and closed under block completion,
/// ascending.
pub fn subsystem_generated(s: &TripleSystem, points: &[usize]) -> Result<Vec<usize>> {
    if let Some(&p) = points.iter().find(|&&p| p >= s.v()) {
        return Err(Error::OutOfRange { element: p, order: s.v() });
    }
    if points.is_empty() {
        return Ok(Vec::new());
    }
    let q = sts_to_quasigroup(s)?;
    Ok(close_points(&q, points))
}

/// Whether every Pasch configuration extends to a Fano subplane, checked
/// triple by triple; the counterexample is the first failing Pasch triple.
pub fn every_pasch_generates_fano(s: &TripleSystem) -> CheckReport {
    if s.v() <= 3 {
        return CheckReport::holds(0);
    }
    let q = sts_to_quasigroup(s).expect("valid system of positive order");
    let triples = associating_triples(&q).expect("quasigroup of a triple system is Steiner");
    for (seen, &(x, y, z)) in triples.iter().enumerate() {
        if !triple_closes_fano(&q, x, y, z).expect("associating triples are Pasch triples") {
            let witness = Assignment(vec![('x', x), ('y', y), ('z', z)]);
            return CheckReport::fails(witness, seen as u64 + 1);
        }
    }
    CheckReport::holds(triples.len() as u64)
}
