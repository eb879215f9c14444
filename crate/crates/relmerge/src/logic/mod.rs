//! Propositional formulas, satisfiability, and model enumeration.
//!
//! Formulas range over a [`Universe`] of named variables fixed when the
//! problem is loaded. Two independent routes decide satisfiability: a
//! DPLL-style search over a clausal conversion ([`satisfiable`]) and plain
//! truth-table enumeration ([`models`]); the test suite checks them against
//! each other.

mod dpll;
mod parser;

use std::collections::HashMap;
use std::fmt;

use crate::{Error, Result};

/// Default cap on universe size for model enumeration.
pub const DEFAULT_VAR_CAP: usize = 20;

/// The set of propositional variables in play, in order of first appearance.
#[derive(Clone, Debug, Default)]
pub struct Universe {
    names: Vec<String>,
    index: HashMap<String, u32>,
}

impl PartialEq for Universe {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names
    }
}

impl Eq for Universe {}

impl Universe {
    pub fn new() -> Self {
        Universe::default()
    }

    /// Universe containing `names` in the given order.
    pub fn from_names<S: AsRef<str>>(names: impl IntoIterator<Item = S>) -> Self {
        let mut u = Universe::new();
        for n in names {
            u.intern(n.as_ref());
        }
        u
    }

    /// Index of `name`, adding it if absent.
    pub fn intern(&mut self, name: &str) -> u32 {
        if let Some(&i) = self.index.get(name) {
            return i;
        }
        let i = self.names.len() as u32;
        self.names.push(name.to_string());
        self.index.insert(name.to_string(), i);
        i
    }

    pub fn lookup(&self, name: &str) -> Option<u32> {
        self.index.get(name).copied()
    }

    pub fn name(&self, var: u32) -> &str {
        &self.names[var as usize]
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.names.iter().map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// Every interpretation over this universe, in increasing bit order.
    pub fn interpretations(&self) -> impl Iterator<Item = Interpretation> {
        debug_assert!(self.len() < 63);
        (0..(1u64 << self.len())).map(Interpretation)
    }
}

/// A truth assignment to the universe, one bit per variable.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Interpretation(pub u64);

impl Interpretation {
    pub fn is_true(self, var: u32) -> bool {
        self.0 >> var & 1 == 1
    }

    pub fn set(self, var: u32, value: bool) -> Self {
        if value {
            Interpretation(self.0 | 1 << var)
        } else {
            Interpretation(self.0 & !(1 << var))
        }
    }

    /// Number of variables on which the two assignments differ.
    pub fn hamming(self, other: Interpretation) -> u32 {
        (self.0 ^ other.0).count_ones()
    }

    /// Renders as `{x, !y, z}` over the universe.
    pub fn label(self, universe: &Universe) -> String {
        let lits: Vec<String> = (0..universe.len() as u32)
            .map(|v| {
                if self.is_true(v) {
                    universe.name(v).to_string()
                } else {
                    format!("!{}", universe.name(v))
                }
            })
            .collect();
        format!("{{{}}}", lits.join(", "))
    }
}

/// A propositional formula over universe variable indices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula {
    Const(bool),
    Var(u32),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn var(v: u32) -> Self {
        Formula::Var(v)
    }

    pub fn not(f: Formula) -> Self {
        Formula::Not(Box::new(f))
    }

    pub fn and(l: Formula, r: Formula) -> Self {
        Formula::And(Box::new(l), Box::new(r))
    }

    pub fn or(l: Formula, r: Formula) -> Self {
        Formula::Or(Box::new(l), Box::new(r))
    }

    pub fn implies(l: Formula, r: Formula) -> Self {
        Formula::Implies(Box::new(l), Box::new(r))
    }

    pub fn iff(l: Formula, r: Formula) -> Self {
        Formula::Iff(Box::new(l), Box::new(r))
    }

    /// Conjunction of `fs`, `true` when empty.
    pub fn conjunction(fs: impl IntoIterator<Item = Formula>) -> Self {
        let mut iter = fs.into_iter();
        match iter.next() {
            None => Formula::Const(true),
            Some(first) => iter.fold(first, Formula::and),
        }
    }

    /// Disjunction of `fs`, `false` when empty.
    pub fn disjunction(fs: impl IntoIterator<Item = Formula>) -> Self {
        let mut iter = fs.into_iter();
        match iter.next() {
            None => Formula::Const(false),
            Some(first) => iter.fold(first, Formula::or),
        }
    }

    /// Truth value under `m`.
    pub fn eval(&self, m: Interpretation) -> bool {
        match self {
            Formula::Const(b) => *b,
            Formula::Var(v) => m.is_true(*v),
            Formula::Not(f) => !f.eval(m),
            Formula::And(l, r) => l.eval(m) && r.eval(m),
            Formula::Or(l, r) => l.eval(m) || r.eval(m),
            Formula::Implies(l, r) => !l.eval(m) || r.eval(m),
            Formula::Iff(l, r) => l.eval(m) == r.eval(m),
        }
    }

    /// Grammar-compatible text; parses back to the same tree.
    pub fn display<'a>(&'a self, universe: &'a Universe) -> DisplayFormula<'a> {
        DisplayFormula { formula: self, universe }
    }
}

/// Operator precedence levels used by printing; higher binds tighter.
const PREC_IFF: u8 = 1;
const PREC_IMP: u8 = 2;
const PREC_OR: u8 = 3;
const PREC_AND: u8 = 4;
const PREC_NOT: u8 = 5;
const PREC_ATOM: u8 = 6;

pub struct DisplayFormula<'a> {
    formula: &'a Formula,
    universe: &'a Universe,
}

impl fmt::Display for DisplayFormula<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_prec(f, self.formula, self.universe, 0)
    }
}

fn write_prec(
    f: &mut fmt::Formatter<'_>,
    formula: &Formula,
    u: &Universe,
    min: u8,
) -> fmt::Result {
    // Binary connectives print the chained side at their own level and the
    // other side one tighter, so associativity survives the round trip:
    // `<->` and the lattice connectives chain to the left, `->` to the right.
    let prec = match formula {
        Formula::Const(_) | Formula::Var(_) => PREC_ATOM,
        Formula::Not(_) => PREC_NOT,
        Formula::And(..) => PREC_AND,
        Formula::Or(..) => PREC_OR,
        Formula::Implies(..) => PREC_IMP,
        Formula::Iff(..) => PREC_IFF,
    };
    if prec < min {
        f.write_str("(")?;
    }
    match formula {
        Formula::Const(true) => f.write_str("true")?,
        Formula::Const(false) => f.write_str("false")?,
        Formula::Var(v) => f.write_str(u.name(*v))?,
        Formula::Not(g) => {
            f.write_str("!")?;
            write_prec(f, g, u, PREC_NOT)?;
        }
        Formula::And(l, r) => {
            write_prec(f, l, u, PREC_AND)?;
            f.write_str(" & ")?;
            write_prec(f, r, u, PREC_AND + 1)?;
        }
        Formula::Or(l, r) => {
            write_prec(f, l, u, PREC_OR)?;
            f.write_str(" | ")?;
            write_prec(f, r, u, PREC_OR + 1)?;
        }
        Formula::Implies(l, r) => {
            write_prec(f, l, u, PREC_IMP + 1)?;
            f.write_str(" -> ")?;
            write_prec(f, r, u, PREC_IMP)?;
        }
        Formula::Iff(l, r) => {
            write_prec(f, l, u, PREC_IFF)?;
            f.write_str(" <-> ")?;
            write_prec(f, r, u, PREC_IFF + 1)?;
        }
    }
    if prec < min {
        f.write_str(")")?;
    }
    Ok(())
}

/// Parses `text`, interning new variables into `universe`.
pub fn parse_formula(text: &str, universe: &mut Universe) -> Result<Formula> {
    let ast = parser::parse(text)?;
    Ok(bind_interning(&ast, universe))
}

/// Parses `text` against a fixed universe; unknown variables are errors.
pub fn parse_formula_in(text: &str, universe: &Universe) -> Result<Formula> {
    let ast = parser::parse(text)?;
    bind_fixed(&ast, universe)
}

fn bind_interning(ast: &parser::Ast, u: &mut Universe) -> Formula {
    match ast {
        parser::Ast::Const(b) => Formula::Const(*b),
        parser::Ast::Var(name) => Formula::Var(u.intern(name)),
        parser::Ast::Not(g) => Formula::not(bind_interning(g, u)),
        parser::Ast::And(l, r) => Formula::and(bind_interning(l, u), bind_interning(r, u)),
        parser::Ast::Or(l, r) => Formula::or(bind_interning(l, u), bind_interning(r, u)),
        parser::Ast::Implies(l, r) => {
            Formula::implies(bind_interning(l, u), bind_interning(r, u))
        }
        parser::Ast::Iff(l, r) => Formula::iff(bind_interning(l, u), bind_interning(r, u)),
    }
}

fn bind_fixed(ast: &parser::Ast, u: &Universe) -> Result<Formula> {
    Ok(match ast {
        parser::Ast::Const(b) => Formula::Const(*b),
        parser::Ast::Var(name) => Formula::Var(
            u.lookup(name)
                .ok_or_else(|| Error::UnknownVariable(name.clone()))?,
        ),
        parser::Ast::Not(g) => Formula::not(bind_fixed(g, u)?),
        parser::Ast::And(l, r) => Formula::and(bind_fixed(l, u)?, bind_fixed(r, u)?),
        parser::Ast::Or(l, r) => Formula::or(bind_fixed(l, u)?, bind_fixed(r, u)?),
        parser::Ast::Implies(l, r) => Formula::implies(bind_fixed(l, u)?, bind_fixed(r, u)?),
        parser::Ast::Iff(l, r) => Formula::iff(bind_fixed(l, u)?, bind_fixed(r, u)?),
    })
}

/// Whether the conjunction of `formulas` has a model. The empty set is
/// satisfiable.
pub fn satisfiable<'a>(formulas: impl IntoIterator<Item = &'a Formula>) -> bool {
    dpll::satisfiable(formulas)
}

/// Whether every formula of `set` plus `f` are jointly satisfiable.
///
/// Adding formulas to `set` can only shrink the set of `f` consistent
/// with it.
pub fn consistent_with<'a>(
    set: impl IntoIterator<Item = &'a Formula>,
    f: &'a Formula,
) -> bool {
    satisfiable(set.into_iter().chain(std::iter::once(f)))
}

/// Models of the conjunction of `formulas` over the whole universe, in
/// increasing bit order. Errors when the universe exceeds `var_cap`.
pub fn models(
    formulas: &[&Formula],
    universe: &Universe,
    var_cap: usize,
) -> Result<Vec<Interpretation>> {
    if universe.len() > var_cap {
        return Err(Error::UniverseTooLarge { actual: universe.len(), cap: var_cap });
    }
    Ok(enumerate_models(formulas, universe))
}

/// Truth-table enumeration without a cap; callers gate the universe size.
pub fn enumerate_models(formulas: &[&Formula], universe: &Universe) -> Vec<Interpretation> {
    universe
        .interpretations()
        .filter(|&m| formulas.iter().all(|f| f.eval(m)))
        .collect()
}
