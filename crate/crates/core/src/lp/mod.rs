//! Exact-rational linear programming: a two-phase simplex, the
//! Charnes–Cooper reduction for linear-fractional objectives, and the
//! per-`k` optimization of Gallai quadruples.

mod fractional;
mod optimize;
mod simplex;

pub use fractional::{charnes_cooper, recover, AffineForm, FractionalProgram, FractionalSolution};
pub use optimize::{
    build_fractional_program, optimize_quadruple, BranchOutcome, Optimization, ZBranch,
};
pub use simplex::simplex_solve;

use std::fmt::Write as _;

use num::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{serde_fraction, serde_fraction_opt, serde_fraction_vec, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = ">=")]
    Ge,
    #[serde(rename = "=")]
    Eq,
}

impl Relation {
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Le => "<=",
            Relation::Ge => ">=",
            Relation::Eq => "=",
        }
    }

    pub fn holds(self, lhs: &Rational, rhs: &Rational) -> bool {
        match self {
            Relation::Le => lhs <= rhs,
            Relation::Ge => lhs >= rhs,
            Relation::Eq => lhs == rhs,
        }
    }

    fn flipped(self) -> Relation {
        match self {
            Relation::Le => Relation::Ge,
            Relation::Ge => Relation::Le,
            Relation::Eq => Relation::Eq,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Variable {
    pub name: String,
    pub nonnegative: bool,
}

impl Variable {
    pub fn nonnegative(name: &str) -> Self {
        Variable {
            name: name.into(),
            nonnegative: true,
        }
    }

    pub fn free(name: &str) -> Self {
        Variable {
            name: name.into(),
            nonnegative: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Constraint {
    pub name: String,
    #[serde(with = "serde_fraction_vec")]
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    #[serde(with = "serde_fraction")]
    pub rhs: Rational,
}

impl Constraint {
    pub fn new(name: &str, coeffs: Vec<Rational>, relation: Relation, rhs: Rational) -> Self {
        Constraint {
            name: name.into(),
            coeffs,
            relation,
            rhs,
        }
    }

    pub fn lhs_at(&self, x: &[Rational]) -> Rational {
        self.coeffs.iter().zip(x).map(|(a, v)| a * v).sum()
    }
}

/// Maximize `objective · x` subject to the constraints.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearProgram {
    pub variables: Vec<Variable>,
    #[serde(with = "serde_fraction_vec")]
    pub objective: Vec<Rational>,
    pub constraints: Vec<Constraint>,
}

impl LinearProgram {
    pub fn new(variables: Vec<Variable>, objective: Vec<Rational>) -> Result<Self> {
        if objective.len() != variables.len() {
            return Err(Error::Invalid(format!(
                "objective has {} coefficients for {} variables",
                objective.len(),
                variables.len()
            )));
        }
        Ok(LinearProgram {
            variables,
            objective,
            constraints: Vec::new(),
        })
    }

    pub fn add(&mut self, c: Constraint) -> Result<()> {
        if c.coeffs.len() != self.variables.len() {
            return Err(Error::Invalid(format!(
                "constraint `{}` has {} coefficients for {} variables",
                c.name,
                c.coeffs.len(),
                self.variables.len()
            )));
        }
        self.constraints.push(c);
        Ok(())
    }

    pub fn objective_at(&self, x: &[Rational]) -> Rational {
        self.objective.iter().zip(x).map(|(a, v)| a * v).sum()
    }

    /// Signed residual `rhs - lhs` per constraint, in order, plus whether
    /// every constraint and sign restriction holds.
    pub fn residuals(&self, x: &[Rational]) -> (Vec<Rational>, bool) {
        let mut ok = x.len() == self.variables.len();
        for (v, val) in self.variables.iter().zip(x) {
            if v.nonnegative && *val < Rational::zero() {
                ok = false;
            }
        }
        let res = self
            .constraints
            .iter()
            .map(|c| {
                let lhs = c.lhs_at(x);
                ok &= c.relation.holds(&lhs, &c.rhs);
                &c.rhs - lhs
            })
            .collect();
        (res, ok)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let names: Vec<&str> = self.variables.iter().map(|v| v.name.as_str()).collect();
        let _ = writeln!(out, "maximize {}", render_row(&self.objective, &names));
        let _ = writeln!(out, "subject to");
        for c in &self.constraints {
            let _ = writeln!(
                out,
                "  {:<12} {} {} {}",
                c.name,
                render_row(&c.coeffs, &names),
                c.relation.symbol(),
                c.rhs
            );
        }
        let free: Vec<&str> = self
            .variables
            .iter()
            .filter(|v| !v.nonnegative)
            .map(|v| v.name.as_str())
            .collect();
        let nonneg: Vec<&str> = self
            .variables
            .iter()
            .filter(|v| v.nonnegative)
            .map(|v| v.name.as_str())
            .collect();
        if !nonneg.is_empty() {
            let _ = writeln!(out, "  {} >= 0", nonneg.join(", "));
        }
        if !free.is_empty() {
            let _ = writeln!(out, "  {} free", free.join(", "));
        }
        out
    }
}

fn render_row(coeffs: &[Rational], names: &[&str]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .zip(names)
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, n)| format!("({c})*{n}"))
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LpSolution {
    pub status: LpStatus,
    #[serde(with = "serde_fraction_opt")]
    pub value: Option<Rational>,
    /// One value per original variable; empty unless optimal.
    #[serde(with = "serde_fraction_vec")]
    pub assignment: Vec<Rational>,
    /// Names of the basic columns at termination.
    pub basis: Vec<String>,
}

impl LpSolution {
    pub fn to_text(&self, lp: &LinearProgram) -> String {
        let mut out = format!("status: {:?}\n", self.status).to_lowercase();
        if let Some(v) = &self.value {
            let _ = writeln!(out, "value: {v}");
        }
        for (var, val) in lp.variables.iter().zip(&self.assignment) {
            let _ = writeln!(out, "  {} = {}", var.name, val);
        }
        if !self.basis.is_empty() {
            let _ = writeln!(out, "basis: {}", self.basis.join(" "));
        }
        out
    }
}
