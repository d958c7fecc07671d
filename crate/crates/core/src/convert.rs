//! The bijections between Steiner triple systems, Steiner quasigroups and
//! Steiner loops.
//!
//! Loops always carry their identity at index 0, so quasigroup element `i`
//! becomes loop element `i + 1`.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::system::TripleSystem;
use crate::table::{CayleyTable, LoopTable, QuasigroupTable};

/// `xy = z` whenever `{x, y, z}` is a block, and `xx = x`.
pub fn sts_to_quasigroup(s: &TripleSystem) -> Result<QuasigroupTable> {
    if s.v() == 0 {
        return Err(Error::Order { order: 0, min: 1, max: crate::table::MAX_ORDER });
    }
    QuasigroupTable::new(s.v(), &s.completion_table())
}

/// Declares `{x, y, xy}` a block for every `x != y`.
pub fn quasigroup_to_sts(q: &QuasigroupTable) -> Result<TripleSystem> {
    q.require_steiner()?;
    let n = q.order();
    let mut blocks = Vec::with_capacity(n * (n - 1) / 6);
    for x in 0..n {
        for y in x + 1..n {
            let z = q.mul(x, y);
            if z > y {
                blocks.push([x, y, z]);
            }
        }
    }
    Ok(TripleSystem::from_valid(n, blocks))
}

/// Adjoins a new identity at index 0 and sets `xx = 1`.
pub fn quasigroup_to_loop(q: &QuasigroupTable) -> Result<LoopTable> {
    q.require_steiner()?;
    LoopTable::from_fn(q.order() + 1, |x, y| match (x, y) {
        (0, _) => y,
        (_, 0) => x,
        _ if x == y => 0,
        _ => q.mul(x - 1, y - 1) + 1,
    })
}

/// Removes the identity and sets `xx = x`.
pub fn loop_to_quasigroup(t: &LoopTable) -> Result<QuasigroupTable> {
    t.require_steiner()?;
    if t.order() < 2 {
        return Err(Error::Order { order: t.order(), min: 2, max: crate::table::MAX_ORDER });
    }
    QuasigroupTable::from_fn(t.order() - 1, |x, y| if x == y { x } else { t.mul(x + 1, y + 1) - 1 })
}

/// The Steiner loop of a triple system with `v >= 1` points.
pub fn sts_to_loop(s: &TripleSystem) -> Result<LoopTable> {
    quasigroup_to_loop(&sts_to_quasigroup(s)?)
}

/// The triple system of a Steiner loop of order at least 2.
pub fn loop_to_sts(t: &LoopTable) -> Result<TripleSystem> {
    quasigroup_to_sts(&loop_to_quasigroup(t)?)
}
