//! Dense-tableau two-phase simplex over exact rationals with Bland's rule.

use num::{One, Signed, Zero};

use super::{LinearProgram, LpSolution, LpStatus, Relation};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Column {
    /// Original variable `j`, sign `+1` or `-1` for the split of a free variable.
    Var(usize, bool),
    Slack(usize),
    Artificial(usize),
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
    columns: Vec<Column>,
}

enum Outcome {
    Optimal,
    Unbounded,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].recip();
        for v in self.rows[r].iter_mut() {
            *v *= &inv;
        }
        self.rhs[r] *= &inv;
        let pivot_row = self.rows[r].clone();
        let pivot_rhs = self.rhs[r].clone();
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][c].is_zero() {
                continue;
            }
            let factor = self.rows[i][c].clone();
            for (v, p) in self.rows[i].iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &factor * p;
                }
            }
            self.rhs[i] -= &factor * &pivot_rhs;
        }
        self.basis[r] = c;
    }

    /// Maximizes `cost · x` over columns with `allowed[j]`.
    fn run(&mut self, cost: &[Rational], allowed: &[bool]) -> Outcome {
        loop {
            let ncols = self.columns.len();
            let entering = (0..ncols).find(|&j| {
                if !allowed[j] || self.basis.contains(&j) {
                    return false;
                }
                let mut reduced = cost[j].clone();
                for (i, &b) in self.basis.iter().enumerate() {
                    if !cost[b].is_zero() && !self.rows[i][j].is_zero() {
                        reduced -= &cost[b] * &self.rows[i][j];
                    }
                }
                reduced.is_positive()
            });
            let Some(c) = entering else {
                return Outcome::Optimal;
            };
            let mut leave: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][c];
                if !a.is_positive() {
                    continue;
                }
                let ratio = &self.rhs[i] / a;
                let better = match &leave {
                    None => true,
                    Some((li, best)) => {
                        ratio < *best || (ratio == *best && self.basis[i] < self.basis[*li])
                    }
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            match leave {
                None => return Outcome::Unbounded,
                Some((r, _)) => self.pivot(r, c),
            }
        }
    }

    fn value(&self, cost: &[Rational]) -> Rational {
        self.basis
            .iter()
            .zip(&self.rhs)
            .map(|(&b, v)| &cost[b] * v)
            .sum()
    }

    fn name(&self, lp: &LinearProgram, j: usize) -> String {
        match self.columns[j] {
            Column::Var(v, true) if lp.variables[v].nonnegative => lp.variables[v].name.clone(),
            Column::Var(v, true) => format!("{}+", lp.variables[v].name),
            Column::Var(v, false) => format!("{}-", lp.variables[v].name),
            Column::Slack(i) => format!("s[{}]", lp.constraints[i].name),
            Column::Artificial(i) => format!("a[{}]", lp.constraints[i].name),
        }
    }
}

pub fn simplex_solve(lp: &LinearProgram) -> LpSolution {
    let nvars = lp.variables.len();
    let mut columns = Vec::new();
    for (j, v) in lp.variables.iter().enumerate() {
        columns.push(Column::Var(j, true));
        if !v.nonnegative {
            columns.push(Column::Var(j, false));
        }
    }
    let structural = columns.len();
    // normalise to nonnegative right-hand sides
    let rows: Vec<(Vec<Rational>, Relation, Rational)> = lp
        .constraints
        .iter()
        .map(|c| {
            if c.rhs.is_negative() {
                (
                    c.coeffs.iter().map(|a| -a).collect(),
                    c.relation.flipped(),
                    -c.rhs.clone(),
                )
            } else {
                (c.coeffs.clone(), c.relation, c.rhs.clone())
            }
        })
        .collect();
    for (i, (_, rel, _)) in rows.iter().enumerate() {
        if *rel != Relation::Eq {
            columns.push(Column::Slack(i));
        }
    }
    for (i, (_, rel, _)) in rows.iter().enumerate() {
        if *rel != Relation::Le {
            columns.push(Column::Artificial(i));
        }
    }
    let ncols = columns.len();
    let mut t = Tableau {
        rows: Vec::with_capacity(rows.len()),
        rhs: Vec::with_capacity(rows.len()),
        basis: Vec::with_capacity(rows.len()),
        columns,
    };
    for (i, (coeffs, rel, b)) in rows.iter().enumerate() {
        let mut row = vec![Rational::zero(); ncols];
        for (j, col) in t.columns.iter().enumerate() {
            match *col {
                Column::Var(v, plus) => {
                    row[j] = if plus {
                        coeffs[v].clone()
                    } else {
                        -coeffs[v].clone()
                    }
                }
                Column::Slack(r) if r == i => {
                    row[j] = if *rel == Relation::Le {
                        Rational::one()
                    } else {
                        -Rational::one()
                    }
                }
                Column::Artificial(r) if r == i => row[j] = Rational::one(),
                _ => {}
            }
        }
        let basic = t
            .columns
            .iter()
            .position(|c| match (*rel, *c) {
                (Relation::Le, Column::Slack(r)) => r == i,
                (_, Column::Artificial(r)) => r == i,
                _ => false,
            })
            .expect("every row has a starting basic column");
        t.rows.push(row);
        t.rhs.push(b.clone());
        t.basis.push(basic);
    }

    let is_artificial: Vec<bool> = t
        .columns
        .iter()
        .map(|c| matches!(c, Column::Artificial(_)))
        .collect();

    // phase one
    if is_artificial.iter().any(|&a| a) {
        let cost: Vec<Rational> = is_artificial
            .iter()
            .map(|&a| if a { -Rational::one() } else { Rational::zero() })
            .collect();
        let all = vec![true; ncols];
        t.run(&cost, &all);
        if t.value(&cost).is_negative() {
            return LpSolution {
                status: LpStatus::Infeasible,
                value: None,
                assignment: Vec::new(),
                basis: Vec::new(),
            };
        }
        // drive remaining (zero-valued) artificials out of the basis
        let mut i = 0;
        while i < t.rows.len() {
            if is_artificial[t.basis[i]] {
                match (0..ncols).find(|&j| !is_artificial[j] && !t.rows[i][j].is_zero()) {
                    Some(j) => t.pivot(i, j),
                    None => {
                        // redundant row
                        t.rows.remove(i);
                        t.rhs.remove(i);
                        t.basis.remove(i);
                        continue;
                    }
                }
            }
            i += 1;
        }
    }

    // phase two
    let mut cost = vec![Rational::zero(); ncols];
    for j in 0..structural {
        if let Column::Var(v, plus) = t.columns[j] {
            cost[j] = if plus {
                lp.objective[v].clone()
            } else {
                -lp.objective[v].clone()
            };
        }
    }
    let allowed: Vec<bool> = is_artificial.iter().map(|a| !a).collect();
    let outcome = t.run(&cost, &allowed);
    let basis = t.basis.iter().map(|&j| t.name(lp, j)).collect();
    if let Outcome::Unbounded = outcome {
        return LpSolution {
            status: LpStatus::Unbounded,
            value: None,
            assignment: Vec::new(),
            basis,
        };
    }
    let mut x = vec![Rational::zero(); nvars];
    for (i, &b) in t.basis.iter().enumerate() {
        if let Column::Var(v, plus) = t.columns[b] {
            if plus {
                x[v] += &t.rhs[i];
            } else {
                x[v] -= &t.rhs[i];
            }
        }
    }
    LpSolution {
        status: LpStatus::Optimal,
        value: Some(lp.objective_at(&x)),
        assignment: x,
        basis,
    }
}
