//! Term evaluation and brute-force identity checking over Cayley tables.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Range;

use crate::error::{Error, Result};
use crate::table::CayleyTable;
use crate::term::{parse_identity, Identity, Term};

/// Values for named variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Assignment(pub Vec<(char, usize)>);

impl Assignment {
    pub fn get(&self, name: char) -> Option<usize> {
        self.0.iter().find(|(c, _)| *c == name).map(|&(_, e)| e)
    }

    pub fn values(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|&(_, e)| e)
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (c, e)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}={e}")?;
        }
        Ok(())
    }
}

/// Outcome of checking a universally quantified statement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub holds: bool,
    /// Lexicographically first failing assignment.
    pub counterexample: Option<Assignment>,
    /// Assignments visited up to and including the counterexample.
    pub assignments_checked: u64,
}

impl CheckReport {
    pub(crate) fn holds(checked: u64) -> Self {
        CheckReport { holds: true, counterexample: None, assignments_checked: checked }
    }

    pub(crate) fn fails(witness: Assignment, checked: u64) -> Self {
        CheckReport { holds: false, counterexample: Some(witness), assignments_checked: checked }
    }
}

/// Evaluates `t` under `assignment`.
pub fn eval_term<T: CayleyTable + ?Sized>(t: &Term, table: &T, assignment: &Assignment) -> Result<usize> {
    match t {
        Term::Var(c) => {
            let e = assignment.get(*c).ok_or(Error::UnassignedVariable(*c))?;
            if e >= table.order() {
                return Err(Error::OutOfRange { element: e, order: table.order() });
            }
            Ok(e)
        }
        Term::One => table.identity().ok_or(Error::ConstantWithoutIdentity),
        Term::Product(l, r) => {
            let a = eval_term(l, table, assignment)?;
            let b = eval_term(r, table, assignment)?;
            Ok(table.mul(a, b))
        }
    }
}

#[derive(Clone, Copy)]
enum Op {
    Push(usize),
    Const(usize),
    Mul,
}

/// A term flattened into postfix form over variable slots.
struct Program(Vec<Op>);

impl Program {
    fn compile(t: &Term, vars: &[char], one: Option<usize>) -> Result<Program> {
        fn go(t: &Term, vars: &[char], one: Option<usize>, out: &mut Vec<Op>) -> Result<()> {
            match t {
                Term::Var(c) => {
                    let slot = vars.iter().position(|v| v == c).ok_or(Error::UnassignedVariable(*c))?;
                    out.push(Op::Push(slot));
                }
                Term::One => out.push(Op::Const(one.ok_or(Error::ConstantWithoutIdentity)?)),
                Term::Product(l, r) => {
                    go(l, vars, one, out)?;
                    go(r, vars, one, out)?;
                    out.push(Op::Mul);
                }
            }
            Ok(())
        }
        let mut ops = Vec::new();
        go(t, vars, one, &mut ops)?;
        Ok(Program(ops))
    }

    #[inline]
    fn run<T: CayleyTable + ?Sized>(&self, table: &T, values: &[usize], stack: &mut Vec<usize>) -> usize {
        stack.clear();
        for op in &self.0 {
            match *op {
                Op::Push(slot) => stack.push(values[slot]),
                Op::Const(e) => stack.push(e),
                Op::Mul => {
                    let b = stack.pop().unwrap();
                    let a = stack.pop().unwrap();
                    stack.push(table.mul(a, b));
                }
            }
        }
        stack[0]
    }
}

/// Number of assignments of `k` variables over `n` elements.
pub fn assignment_count(n: usize, k: usize) -> u64 {
    (n as u64).saturating_pow(k as u32)
}

/// Checks `i` over every assignment in lexicographic order of its variable
/// list, the first variable being most significant.
pub fn check_identity<T: CayleyTable + ?Sized>(i: &Identity, table: &T) -> Result<CheckReport> {
    let first = if i.variables().is_empty() { 0..1 } else { 0..table.order() };
    check_identity_partition(i, table, first)
}

/// Checks only the assignments whose first variable lies in `first`.
///
/// The union of the reports over a partition of `0..order` agrees with
/// [`check_identity`] once merged by lexicographically least counterexample;
/// `assignments_checked` is the global rank of the counterexample plus one, or
/// the full count when the identity holds.
pub fn check_identity_partition<T: CayleyTable + ?Sized>(
    i: &Identity,
    table: &T,
    first: Range<usize>,
) -> Result<CheckReport> {
    let vars = i.variables();
    let n = table.order();
    let lhs = Program::compile(&i.lhs, vars, table.identity())?;
    let rhs = Program::compile(&i.rhs, vars, table.identity())?;
    let total = assignment_count(n, vars.len());
    let mut stack = Vec::with_capacity(i.leaves());
    if vars.is_empty() {
        if first.is_empty() {
            return Ok(CheckReport::holds(total));
        }
        let holds = lhs.run(table, &[], &mut stack) == rhs.run(table, &[], &mut stack);
        return Ok(if holds { CheckReport::holds(1) } else { CheckReport::fails(Assignment::default(), 1) });
    }
    let first = first.start.min(n)..first.end.min(n);
    if first.is_empty() {
        return Ok(CheckReport::holds(total));
    }
    let mut values = vec![0; vars.len()];
    values[0] = first.start;
    loop {
        if lhs.run(table, &values, &mut stack) != rhs.run(table, &values, &mut stack) {
            let rank = values.iter().fold(0u64, |acc, &e| acc * n as u64 + e as u64);
            let witness = Assignment(vars.iter().copied().zip(values.iter().copied()).collect());
            return Ok(CheckReport::fails(witness, rank + 1));
        }
        // Odometer step, last variable fastest.
        let mut pos = vars.len();
        loop {
            pos -= 1;
            values[pos] += 1;
            let limit = if pos == 0 { first.end } else { n };
            if values[pos] < limit {
                break;
            }
            if pos == 0 {
                return Ok(CheckReport::holds(total));
            }
            values[pos] = 0;
        }
    }
}

/// The named identities used throughout the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Builtin {
    /// `xy=yx`
    SteinerComm,
    /// `x(xy)=y`
    SteinerKey,
    /// `xx=x`
    Idempotent,
    /// `x(y(xz))=((xy)x)z`
    Moufang,
    /// `(xz)(((xy)z)(yz))=((xz)((xy)z))(yz)`
    Id4,
    /// `(xy)(y(xz))=x(y((xy)z))`
    Extra10,
    /// `x(yz)=(xy)z`
    Assoc,
}

impl Builtin {
    pub const ALL: [Builtin; 7] = [
        Builtin::SteinerComm,
        Builtin::SteinerKey,
        Builtin::Idempotent,
        Builtin::Moufang,
        Builtin::Id4,
        Builtin::Extra10,
        Builtin::Assoc,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Builtin::SteinerComm => "STEINER_COMM",
            Builtin::SteinerKey => "STEINER_KEY",
            Builtin::Idempotent => "IDEMPOTENT",
            Builtin::Moufang => "MOUFANG",
            Builtin::Id4 => "ID4",
            Builtin::Extra10 => "EXTRA10",
            Builtin::Assoc => "ASSOC",
        }
    }

    /// Source text, written with every product parenthesized.
    pub fn text(self) -> &'static str {
        match self {
            Builtin::SteinerComm => "xy=yx",
            Builtin::SteinerKey => "x(xy)=y",
            Builtin::Idempotent => "xx=x",
            Builtin::Moufang => "x(y(xz))=((xy)x)z",
            Builtin::Id4 => "(xz)(((xy)z)(yz))=((xz)((xy)z))(yz)",
            Builtin::Extra10 => "(xy)(y(xz))=x(y((xy)z))",
            Builtin::Assoc => "x(yz)=(xy)z",
        }
    }

    pub fn identity(self) -> Identity {
        parse_identity(self.text()).expect("builtin identities parse")
    }

    /// Looks a builtin up by name, ignoring ASCII case.
    pub fn from_name(name: &str) -> Option<Builtin> {
        Builtin::ALL.into_iter().find(|b| b.name().eq_ignore_ascii_case(name))
    }
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Comma-separated builtin names, for help and error text.
pub fn builtin_names() -> String {
    let names: Vec<&str> = Builtin::ALL.iter().map(|b| b.name()).collect();
    names.join(", ")
}
