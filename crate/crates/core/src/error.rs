use core::fmt;

use crate::term::ParseError;

/// Errors raised by the algebraic operations of this crate.
///
/// Validation of triple systems never raises; it produces a
/// [`ValidationReport`](crate::ValidationReport) instead. Everything else that
/// has a precondition reports its violation through this type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A triple system failed validation; the first violation is carried.
    InvalidSystem {
        rule: &'static str,
        witness: alloc::vec::Vec<usize>,
    },
    /// The table is not a square of the declared size.
    Shape {
        expected: usize,
        found: usize,
    },
    /// An order outside the supported range.
    Order {
        order: usize,
        min: usize,
        max: usize,
    },
    /// A table row or column is not a permutation.
    NotLatin {
        line: Line,
        index: usize,
    },
    /// Element 0 is not a two-sided identity.
    MissingIdentity {
        witness: usize,
    },
    /// A Steiner law fails at the given pair.
    NotSteiner {
        law: &'static str,
        x: usize,
        y: usize,
    },
    /// An element or point index outside `[0, order)`.
    OutOfRange {
        element: usize,
        order: usize,
    },
    /// A parameter outside its guard.
    Parameter {
        name: &'static str,
        value: usize,
        max: usize,
    },
    /// `v` is not congruent to 1 or 3 modulo 6.
    InadmissibleOrder(usize),
    UnassignedVariable(char),
    /// The constant `1` was evaluated against a table without identity.
    ConstantWithoutIdentity,
    /// Three points that are not pairwise distinct.
    NotDistinct {
        x: usize,
        y: usize,
        z: usize,
    },
    /// Three points lying on a common block.
    Collinear {
        x: usize,
        y: usize,
        z: usize,
    },
    /// A triple with `x(yz) != (xy)z`.
    NotAssociating {
        x: usize,
        y: usize,
        z: usize,
    },
    /// A subset that is not closed under the product or misses the identity.
    NotClosed {
        x: usize,
        y: usize,
    },
    Parse(ParseError),
}

/// Which kind of line of a Cayley table is faulty.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Line {
    Row,
    Column,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidSystem { rule, witness } => {
                write!(f, "invalid triple system: {rule} at {witness:?}")
            }
            Error::Shape { expected, found } => {
                write!(f, "table has {found} entries, expected {expected}")
            }
            Error::Order { order, min, max } => {
                write!(f, "order {order} outside supported range [{min}, {max}]")
            }
            Error::NotLatin { line, index } => {
                let kind = match line {
                    Line::Row => "row",
                    Line::Column => "column",
                };
                write!(f, "{kind} {index} is not a permutation")
            }
            Error::MissingIdentity { witness } => {
                write!(f, "element 0 is not an identity (fails at {witness})")
            }
            Error::NotSteiner { law, x, y } => {
                write!(f, "not Steiner: {law} fails at x={x}, y={y}")
            }
            Error::OutOfRange { element, order } => {
                write!(f, "element {element} out of range for order {order}")
            }
            Error::Parameter { name, value, max } => {
                write!(f, "parameter {name}={value} out of range (max {max})")
            }
            Error::InadmissibleOrder(v) => write!(f, "inadmissible order {v}"),
            Error::UnassignedVariable(c) => write!(f, "variable '{c}' is not assigned"),
            Error::ConstantWithoutIdentity => {
                write!(f, "constant 1 used with a table that has no identity")
            }
            Error::NotDistinct { x, y, z } => {
                write!(f, "points {x}, {y}, {z} are not pairwise distinct")
            }
            Error::Collinear { x, y, z } => write!(f, "points {x}, {y}, {z} lie on a block"),
            Error::NotAssociating { x, y, z } => {
                write!(f, "x(yz) != (xy)z for x={x}, y={y}, z={z}")
            }
            Error::NotClosed { x, y } => {
                write!(f, "subset not closed: product of {x} and {y} escapes it")
            }
            Error::Parse(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for Error {}

impl From<ParseError> for Error {
    fn from(e: ParseError) -> Self {
        Error::Parse(e)
    }
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
