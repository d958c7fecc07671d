#![allow(dead_code)]

use steiner_core::{
    bose, cyclic_sts13, elementary_abelian_loop, projective, steiner_loop_10, sts_to_loop, CayleyTable,
    LoopTable,
};

/// Steiner loops buildable from the constructions alone.
pub fn steiner_loops() -> Vec<(&'static str, LoopTable)> {
    vec![
        ("ea1", elementary_abelian_loop(1).unwrap()),
        ("ea2", elementary_abelian_loop(2).unwrap()),
        ("ea3", elementary_abelian_loop(3).unwrap()),
        ("loop10", steiner_loop_10()),
        ("cyclic13", sts_to_loop(&cyclic_sts13()).unwrap()),
        ("pg3", sts_to_loop(&projective(3).unwrap()).unwrap()),
        ("bose2", sts_to_loop(&bose(2).unwrap()).unwrap()),
    ]
}

/// The cyclic group of order `n` as a loop.
pub fn cyclic_group(n: usize) -> LoopTable {
    LoopTable::from_fn(n, |x, y| (x + y) % n).unwrap()
}

/// A non-associative loop of order 5; not Steiner.
pub fn loop5() -> LoopTable {
    #[rustfmt::skip]
    let entries = [
        0, 1, 2, 3, 4,
        1, 0, 3, 4, 2,
        2, 3, 4, 0, 1,
        3, 4, 1, 2, 0,
        4, 2, 0, 1, 3,
    ];
    LoopTable::new(5, &entries).unwrap()
}

/// Copy of `t` with element `x` renamed `perm[x]`; `perm[0]` must be 0.
pub fn relabel_loop(t: &LoopTable, perm: &[usize]) -> LoopTable {
    let n = t.order();
    let mut inv = vec![0; n];
    for (x, &p) in perm.iter().enumerate() {
        inv[p] = x;
    }
    LoopTable::from_fn(n, |x, y| perm[t.mul(inv[x], inv[y])]).unwrap()
}

/// Associativity by three nested loops; the first failing triple.
pub fn first_non_associative(t: &impl CayleyTable) -> Option<(usize, usize, usize)> {
    let n = t.order();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if t.mul(x, t.mul(y, z)) != t.mul(t.mul(x, y), z) {
                    return Some((x, y, z));
                }
            }
        }
    }
    None
}
