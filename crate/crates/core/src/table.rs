//! Cayley tables of quasigroups and loops.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Line, Result};

/// Largest table order accepted by the constructors.
pub const MAX_ORDER: usize = 1024;

/// A finite magma given by its Cayley table over `0..order`.
pub trait CayleyTable {
    fn order(&self) -> usize;

    /// Product of `x` and `y`; both must be below [`order`](Self::order).
    fn mul(&self, x: usize, y: usize) -> usize;

    /// The two-sided identity, when the table carries one.
    fn identity(&self) -> Option<usize>;

    /// First pair violating `xy = yx` or `x(xy) = y`.
    fn steiner_violation(&self) -> Option<Error> {
        let n = self.order();
        for x in 0..n {
            for y in 0..n {
                if self.mul(x, y) != self.mul(y, x) {
                    return Some(Error::NotSteiner { law: "xy=yx", x, y });
                }
                if self.mul(x, self.mul(x, y)) != y {
                    return Some(Error::NotSteiner { law: "x(xy)=y", x, y });
                }
            }
        }
        None
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct Square {
    n: usize,
    cells: Vec<u16>,
}

impl Square {
    fn new(n: usize, entries: &[usize]) -> Result<Self> {
        if n == 0 || n > MAX_ORDER {
            return Err(Error::Order { order: n, min: 1, max: MAX_ORDER });
        }
        if entries.len() != n * n {
            return Err(Error::Shape { expected: n * n, found: entries.len() });
        }
        if let Some(&e) = entries.iter().find(|&&e| e >= n) {
            return Err(Error::OutOfRange { element: e, order: n });
        }
        let square = Square { n, cells: entries.iter().map(|&e| e as u16).collect() };
        square.check_latin()?;
        Ok(square)
    }

    fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let mut entries = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                entries.push(f(x, y));
            }
        }
        Square::new(n, &entries)
    }

    fn check_latin(&self) -> Result<()> {
        let n = self.n;
        let mut seen = vec![usize::MAX; n];
        for r in 0..n {
            for c in 0..n {
                let e = self.get(r, c);
                if seen[e] == r {
                    return Err(Error::NotLatin { line: Line::Row, index: r });
                }
                seen[e] = r;
            }
        }
        seen.fill(usize::MAX);
        for c in 0..n {
            for r in 0..n {
                let e = self.get(r, c);
                if seen[e] == c {
                    return Err(Error::NotLatin { line: Line::Column, index: c });
                }
                seen[e] = c;
            }
        }
        Ok(())
    }

    #[inline]
    fn get(&self, x: usize, y: usize) -> usize {
        self.cells[x * self.n + y] as usize
    }

    fn entries(&self) -> Vec<usize> {
        self.cells.iter().map(|&c| c as usize).collect()
    }
}

/// A quasigroup: a Latin square with no distinguished element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuasigroupTable(Square);

impl QuasigroupTable {
    /// Builds a table from row-major entries.
    pub fn new(n: usize, entries: &[usize]) -> Result<Self> {
        Square::new(n, entries).map(QuasigroupTable)
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        Square::from_fn(n, f).map(QuasigroupTable)
    }

    /// Row-major entries.
    pub fn entries(&self) -> Vec<usize> {
        self.0.entries()
    }

    /// Commutative, idempotent and `x(xy) = y`.
    pub fn is_steiner(&self) -> bool {
        self.steiner_violation().is_none() && (0..self.order()).all(|x| self.mul(x, x) == x)
    }

    pub(crate) fn require_steiner(&self) -> Result<()> {
        if let Some(e) = self.steiner_violation() {
            return Err(e);
        }
        match (0..self.order()).find(|&x| self.mul(x, x) != x) {
            Some(x) => Err(Error::NotSteiner { law: "xx=x", x, y: x }),
            None => Ok(()),
        }
    }
}

impl CayleyTable for QuasigroupTable {
    fn order(&self) -> usize {
        self.0.n
    }

    #[inline]
    fn mul(&self, x: usize, y: usize) -> usize {
        self.0.get(x, y)
    }

    fn identity(&self) -> Option<usize> {
        None
    }
}

/// A loop whose identity element is index 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LoopTable(Square);

impl LoopTable {
    /// Builds a table from row-major entries; row and column 0 must be the identity.
    pub fn new(m: usize, entries: &[usize]) -> Result<Self> {
        let square = Square::new(m, entries)?;
        if let Some(x) = (0..m).find(|&x| square.get(0, x) != x || square.get(x, 0) != x) {
            return Err(Error::MissingIdentity { witness: x });
        }
        Ok(LoopTable(square))
    }

    pub fn from_fn(m: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let mut entries = Vec::with_capacity(m * m);
        for x in 0..m {
            for y in 0..m {
                entries.push(f(x, y));
            }
        }
        LoopTable::new(m, &entries)
    }

    pub fn entries(&self) -> Vec<usize> {
        self.0.entries()
    }

    /// Commutative with `x(xy) = y`.
    pub fn is_steiner(&self) -> bool {
        self.steiner_violation().is_none()
    }

    pub(crate) fn require_steiner(&self) -> Result<()> {
        self.steiner_violation().map_or(Ok(()), Err)
    }

    /// Reinterprets the table as a quasigroup (every loop is one).
    pub fn as_quasigroup(&self) -> QuasigroupTable {
        QuasigroupTable(self.0.clone())
    }

    pub(crate) fn check_element(&self, x: usize) -> Result<()> {
        if x < self.order() {
            Ok(())
        } else {
            Err(Error::OutOfRange { element: x, order: self.order() })
        }
    }
}

impl CayleyTable for LoopTable {
    fn order(&self) -> usize {
        self.0.n
    }

    #[inline]
    fn mul(&self, x: usize, y: usize) -> usize {
        self.0.get(x, y)
    }

    fn identity(&self) -> Option<usize> {
        Some(0)
    }
}

/// Steiner loop laws `xy = yx` and `x(xy) = y` on a validated loop table.
pub fn is_steiner_loop(t: &LoopTable) -> bool {
    t.is_steiner()
}

/// Steiner quasigroup laws, including `xx = x`, on a validated table.
pub fn is_steiner_quasigroup(t: &QuasigroupTable) -> bool {
    t.is_steiner()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn klein() -> LoopTable {
        LoopTable::from_fn(4, |x, y| x ^ y).unwrap()
    }

    fn cyclic(n: usize) -> LoopTable {
        LoopTable::from_fn(n, |x, y| (x + y) % n).unwrap()
    }

    #[test]
    fn klein_is_steiner() {
        assert!(is_steiner_loop(&klein()));
    }

    #[test]
    fn cyclic_four_is_not_steiner() {
        // 1(1·1) = 3 != 1
        assert_eq!(cyclic(4).steiner_violation(), Some(Error::NotSteiner { law: "x(xy)=y", x: 1, y: 0 }));
        assert!(!is_steiner_loop(&cyclic(4)));
    }

    #[test]
    fn ag23_quasigroup_is_steiner() {
        let neg_sum = |p: usize, q: usize| {
            let (a, b) = (p / 3, p % 3);
            let (c, d) = (q / 3, q % 3);
            3 * ((6 - a - c) % 3) + (6 - b - d) % 3
        };
        let q = QuasigroupTable::from_fn(9, neg_sum).unwrap();
        assert!(is_steiner_quasigroup(&q));
    }

    #[test]
    fn groups_are_not_steiner_quasigroups() {
        for n in 2..6 {
            assert!(!is_steiner_quasigroup(&cyclic(n).as_quasigroup()));
        }
        assert!(!is_steiner_quasigroup(&klein().as_quasigroup()));
        assert!(is_steiner_quasigroup(&QuasigroupTable::new(1, &[0]).unwrap()));
    }

    #[test]
    fn rejects_malformed_tables() {
        assert!(matches!(LoopTable::new(2, &[0, 1, 1, 1]), Err(Error::NotLatin { .. })));
        assert!(matches!(LoopTable::new(2, &[1, 0, 0, 1]), Err(Error::MissingIdentity { .. })));
        assert!(matches!(LoopTable::new(2, &[0, 1, 1]), Err(Error::Shape { .. })));
        assert!(matches!(LoopTable::new(2, &[0, 1, 1, 2]), Err(Error::OutOfRange { .. })));
        assert!(matches!(QuasigroupTable::new(0, &[]), Err(Error::Order { .. })));
        assert!(matches!(
            QuasigroupTable::new(3, &[0, 1, 2, 1, 1, 0, 2, 0, 1]),
            Err(Error::NotLatin { line: Line::Row, index: 1 })
        ));
        assert!(matches!(
            QuasigroupTable::new(2, &[0, 1, 0, 1]),
            Err(Error::NotLatin { line: Line::Column, index: 0 })
        ));
    }
}
