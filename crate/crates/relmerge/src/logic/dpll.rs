//! Satisfiability by DPLL with unit propagation over a clausal conversion.
//!
//! Each formula is constant-folded, then translated to clauses with one
//! auxiliary variable per binary connective; the defining literal of every
//! formula is asserted as a unit clause. Input variables keep their universe
//! indices, so the search branches on them first.

use super::Formula;

/// Positive literal for variable v is v+1, negative is -(v+1).
type Lit = i32;

enum Folded {
    True,
    False,
    Formula(Formula),
}

/// Removes `Const` nodes; the result either is a constant verdict or contains
/// no constants.
fn fold(f: &Formula) -> Folded {
    match f {
        Formula::Const(true) => Folded::True,
        Formula::Const(false) => Folded::False,
        Formula::Var(v) => Folded::Formula(Formula::Var(*v)),
        Formula::Not(g) => match fold(g) {
            Folded::True => Folded::False,
            Folded::False => Folded::True,
            Folded::Formula(g) => Folded::Formula(Formula::not(g)),
        },
        Formula::And(l, r) => match (fold(l), fold(r)) {
            (Folded::False, _) | (_, Folded::False) => Folded::False,
            (Folded::True, other) | (other, Folded::True) => other,
            (Folded::Formula(l), Folded::Formula(r)) => Folded::Formula(Formula::and(l, r)),
        },
        Formula::Or(l, r) => match (fold(l), fold(r)) {
            (Folded::True, _) | (_, Folded::True) => Folded::True,
            (Folded::False, other) | (other, Folded::False) => other,
            (Folded::Formula(l), Folded::Formula(r)) => Folded::Formula(Formula::or(l, r)),
        },
        Formula::Implies(l, r) => match (fold(l), fold(r)) {
            (Folded::False, _) | (_, Folded::True) => Folded::True,
            (Folded::True, other) => other,
            (Folded::Formula(l), Folded::False) => Folded::Formula(Formula::not(l)),
            (Folded::Formula(l), Folded::Formula(r)) => {
                Folded::Formula(Formula::implies(l, r))
            }
        },
        Formula::Iff(l, r) => match (fold(l), fold(r)) {
            (Folded::True, other) | (other, Folded::True) => other,
            (Folded::False, Folded::False) => Folded::True,
            (Folded::False, Folded::Formula(g)) | (Folded::Formula(g), Folded::False) => {
                Folded::Formula(Formula::not(g))
            }
            (Folded::Formula(l), Folded::Formula(r)) => Folded::Formula(Formula::iff(l, r)),
        },
    }
}

struct Clausifier {
    next_var: i32,
    clauses: Vec<Vec<Lit>>,
}

impl Clausifier {
    fn fresh(&mut self) -> Lit {
        self.next_var += 1;
        self.next_var
    }

    /// Literal equisatisfiably defining `f`; `f` is constant-free.
    fn literal(&mut self, f: &Formula) -> Lit {
        match f {
            Formula::Const(_) => unreachable!("constants folded away"),
            Formula::Var(v) => *v as Lit + 1,
            Formula::Not(g) => -self.literal(g),
            Formula::And(l, r) => {
                let (a, b) = (self.literal(l), self.literal(r));
                let x = self.fresh();
                self.clauses.push(vec![-x, a]);
                self.clauses.push(vec![-x, b]);
                self.clauses.push(vec![x, -a, -b]);
                x
            }
            Formula::Or(l, r) => {
                let (a, b) = (self.literal(l), self.literal(r));
                let x = self.fresh();
                self.clauses.push(vec![-x, a, b]);
                self.clauses.push(vec![x, -a]);
                self.clauses.push(vec![x, -b]);
                x
            }
            Formula::Implies(l, r) => {
                let (a, b) = (self.literal(l), self.literal(r));
                let x = self.fresh();
                self.clauses.push(vec![-x, -a, b]);
                self.clauses.push(vec![x, a]);
                self.clauses.push(vec![x, -b]);
                x
            }
            Formula::Iff(l, r) => {
                let (a, b) = (self.literal(l), self.literal(r));
                let x = self.fresh();
                self.clauses.push(vec![-x, -a, b]);
                self.clauses.push(vec![-x, a, -b]);
                self.clauses.push(vec![x, a, b]);
                self.clauses.push(vec![x, -a, -b]);
                x
            }
        }
    }
}

fn max_var(f: &Formula) -> i32 {
    match f {
        Formula::Const(_) => 0,
        Formula::Var(v) => *v as i32 + 1,
        Formula::Not(g) => max_var(g),
        Formula::And(l, r)
        | Formula::Or(l, r)
        | Formula::Implies(l, r)
        | Formula::Iff(l, r) => max_var(l).max(max_var(r)),
    }
}

pub(super) fn satisfiable<'a>(formulas: impl IntoIterator<Item = &'a Formula>) -> bool {
    let mut kept = Vec::new();
    for f in formulas {
        match fold(f) {
            Folded::False => return false,
            Folded::True => {}
            Folded::Formula(g) => kept.push(g),
        }
    }
    if kept.is_empty() {
        return true;
    }
    let base = kept.iter().map(max_var).max().unwrap_or(0);
    let mut c = Clausifier { next_var: base, clauses: Vec::new() };
    for f in &kept {
        let root = c.literal(f);
        c.clauses.push(vec![root]);
    }
    let num_vars = c.next_var as usize;
    let mut assign = vec![None; num_vars];
    solve(&c.clauses, &mut assign)
}

fn lit_value(assign: &[Option<bool>], lit: Lit) -> Option<bool> {
    assign[lit.unsigned_abs() as usize - 1].map(|v| v == (lit > 0))
}

enum Propagation {
    Conflict,
    Settled,
}

/// Unit propagation to fixpoint over the full clause list.
fn propagate(clauses: &[Vec<Lit>], assign: &mut [Option<bool>]) -> Propagation {
    loop {
        let mut changed = false;
        for clause in clauses {
            let mut unassigned: Option<Lit> = None;
            let mut satisfied = false;
            let mut open = 0;
            for &lit in clause {
                match lit_value(assign, lit) {
                    Some(true) => {
                        satisfied = true;
                        break;
                    }
                    Some(false) => {}
                    None => {
                        open += 1;
                        unassigned = Some(lit);
                    }
                }
            }
            if satisfied {
                continue;
            }
            match open {
                0 => return Propagation::Conflict,
                1 => {
                    let lit = unassigned.unwrap();
                    assign[lit.unsigned_abs() as usize - 1] = Some(lit > 0);
                    changed = true;
                }
                _ => {}
            }
        }
        if !changed {
            return Propagation::Settled;
        }
    }
}

fn solve(clauses: &[Vec<Lit>], assign: &mut [Option<bool>]) -> bool {
    if let Propagation::Conflict = propagate(clauses, assign) {
        return false;
    }
    let Some(var) = assign.iter().position(Option::is_none) else {
        return true;
    };
    for value in [true, false] {
        let mut branch = assign.to_vec();
        branch[var] = Some(value);
        if solve(clauses, &mut branch) {
            return true;
        }
    }
    false
}
