//! Concrete triple systems and loops.

use alloc::vec;
use alloc::vec::Vec;

use crate::convert::sts_to_loop;
use crate::error::{Error, Result};
use crate::system::TripleSystem;
use crate::table::LoopTable;

/// The Fano plane on points `0..7`.
pub fn fano() -> TripleSystem {
    TripleSystem::from_valid(
        7,
        vec![[0, 1, 2], [0, 3, 4], [0, 5, 6], [1, 3, 5], [1, 4, 6], [2, 3, 6], [2, 4, 5]],
    )
}

/// The affine plane AG(2,3): point `(i, j)` of `Z_3 x Z_3` has index `3i + j`,
/// and `{p, q, r}` is a block when `p + q + r = 0`.
///
/// Its quasigroup is `p . q = -p - q`.
pub fn affine_ag23() -> TripleSystem {
    let mut blocks = Vec::with_capacity(12);
    for p in 0..9usize {
        for q in p + 1..9 {
            let r = 3 * ((6 - p / 3 - q / 3) % 3) + (6 - p % 3 - q % 3) % 3;
            if r > q {
                blocks.push([p, q, r]);
            }
        }
    }
    TripleSystem::from_valid(9, blocks)
}

/// The Steiner loop of order 10, built on AG(2,3).
pub fn steiner_loop_10() -> LoopTable {
    sts_to_loop(&affine_ag23()).expect("AG(2,3) is a valid system")
}

/// Largest dimension accepted by [`projective`].
pub const MAX_PROJECTIVE_DIMENSION: usize = 5;

/// The points and lines of PG(n, 2): nonzero vectors of `F_2^(n+1)` with
/// index `value - 1`, blocks `{x, y, x ^ y}`.
pub fn projective(n: usize) -> Result<TripleSystem> {
    if !(1..=MAX_PROJECTIVE_DIMENSION).contains(&n) {
        return Err(Error::Parameter { name: "dimension", value: n, max: MAX_PROJECTIVE_DIMENSION });
    }
    let size = 1usize << (n + 1);
    let mut blocks = Vec::new();
    for x in 1..size {
        for y in x + 1..size {
            let z = x ^ y;
            if z > y {
                blocks.push([x - 1, y - 1, z - 1]);
            }
        }
    }
    Ok(TripleSystem::from_valid(size - 1, blocks))
}

/// Largest parameter accepted by [`bose`].
pub const MAX_BOSE: usize = 40;

/// Bose's STS(6k+3) on `Z_(2k+1) x {0, 1, 2}`; point `(a, i)` has index
/// `i * (2k + 1) + a`.
///
/// Blocks are `{(a,0), (a,1), (a,2)}` and, for `a < b`,
/// `{(a,i), (b,i), (a∘b, i+1)}` where `a∘b = (a + b)(k + 1) mod 2k+1` is the
/// idempotent commutative quasigroup (halving) on `Z_(2k+1)`.
pub fn bose(k: usize) -> Result<TripleSystem> {
    if !(1..=MAX_BOSE).contains(&k) {
        return Err(Error::Parameter { name: "k", value: k, max: MAX_BOSE });
    }
    let m = 2 * k + 1;
    let point = |a: usize, i: usize| i * m + a;
    let mut blocks = Vec::with_capacity(m * (3 * m - 1) / 2);
    for a in 0..m {
        blocks.push([point(a, 0), point(a, 1), point(a, 2)]);
        for b in a + 1..m {
            let c = (a + b) * (k + 1) % m;
            for i in 0..3 {
                blocks.push([point(a, i), point(b, i), point(c, (i + 1) % 3)]);
            }
        }
    }
    TripleSystem::new(3 * m, blocks)
}

/// Largest exponent accepted by [`elementary_abelian_loop`].
pub const MAX_ELEMENTARY_ABELIAN: usize = 6;

/// `Z_2^n` under bitwise xor.
pub fn elementary_abelian_loop(n: usize) -> Result<LoopTable> {
    if n > MAX_ELEMENTARY_ABELIAN {
        return Err(Error::Parameter { name: "n", value: n, max: MAX_ELEMENTARY_ABELIAN });
    }
    LoopTable::from_fn(1 << n, |x, y| x ^ y)
}

/// The cyclic STS(13) with base blocks `{0, 1, 4}` and `{0, 2, 7}` mod 13.
pub fn cyclic_sts13() -> TripleSystem {
    let mut blocks = Vec::with_capacity(26);
    for base in [[0, 1, 4], [0, 2, 7]] {
        for shift in 0..13 {
            blocks.push(base.map(|p| (p + shift) % 13));
        }
    }
    TripleSystem::new(13, blocks).expect("difference family")
}
