use num::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{simplex_solve, Constraint, LinearProgram, LpSolution, LpStatus, Variable};
use crate::error::{Error, Result};
use crate::rational::{int, serde_fraction, serde_fraction_vec, Rational};

/// `constant + coeffs · x`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineForm {
    #[serde(with = "serde_fraction")]
    pub constant: Rational,
    #[serde(with = "serde_fraction_vec")]
    pub coeffs: Vec<Rational>,
}

impl AffineForm {
    pub fn new(constant: Rational, coeffs: Vec<Rational>) -> Self {
        AffineForm { constant, coeffs }
    }

    pub fn at(&self, x: &[Rational]) -> Rational {
        &self.constant + self.coeffs.iter().zip(x).map(|(a, v)| a * v).sum::<Rational>()
    }

    fn is_identically_zero(&self) -> bool {
        self.constant.is_zero() && self.coeffs.iter().all(Zero::is_zero)
    }
}

/// Maximize `numerator(x) / denominator(x)` subject to linear constraints,
/// assuming the denominator is positive on the feasible region.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FractionalProgram {
    pub variables: Vec<Variable>,
    pub numerator: AffineForm,
    pub denominator: AffineForm,
    pub constraints: Vec<Constraint>,
    pub denominator_positive: bool,
}

impl FractionalProgram {
    pub fn new(
        variables: Vec<Variable>,
        numerator: AffineForm,
        denominator: AffineForm,
        constraints: Vec<Constraint>,
    ) -> Result<Self> {
        let n = variables.len();
        if numerator.coeffs.len() != n || denominator.coeffs.len() != n {
            return Err(Error::Invalid("objective forms do not match the variables".into()));
        }
        if denominator.is_identically_zero() {
            return Err(Error::Invalid("denominator is identically zero".into()));
        }
        if let Some(c) = constraints.iter().find(|c| c.coeffs.len() != n) {
            return Err(Error::Invalid(format!(
                "constraint `{}` does not match the variables",
                c.name
            )));
        }
        Ok(FractionalProgram {
            variables,
            numerator,
            denominator,
            constraints,
            denominator_positive: true,
        })
    }

    pub fn value_at(&self, x: &[Rational]) -> Rational {
        self.numerator.at(x) / self.denominator.at(x)
    }
}

/// Substitutes `y = t·x` with `t = 1/denominator(x)`; the last LP variable is `t`.
pub fn charnes_cooper(fp: &FractionalProgram) -> LinearProgram {
    let mut variables = fp.variables.clone();
    variables.push(Variable::nonnegative("t"));
    let mut objective = fp.numerator.coeffs.clone();
    objective.push(fp.numerator.constant.clone());
    let mut lp = LinearProgram {
        variables,
        objective,
        constraints: Vec::new(),
    };
    let mut norm = fp.denominator.coeffs.clone();
    norm.push(fp.denominator.constant.clone());
    lp.constraints.push(Constraint::new(
        "denominator",
        norm,
        super::Relation::Eq,
        int(1),
    ));
    for c in &fp.constraints {
        let mut coeffs = c.coeffs.clone();
        coeffs.push(-c.rhs.clone());
        lp.constraints
            .push(Constraint::new(&c.name, coeffs, c.relation, Rational::zero()));
    }
    lp
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FractionalSolution {
    pub status: LpStatus,
    #[serde(with = "crate::rational::serde_fraction_opt")]
    pub value: Option<Rational>,
    #[serde(with = "serde_fraction_vec")]
    pub assignment: Vec<Rational>,
    pub lp: LpSolution,
}

/// Maps an LP optimum back to the fractional program, checking the
/// denominator at the recovered point.
pub fn recover(fp: &FractionalProgram, sol: LpSolution) -> Result<FractionalSolution> {
    if sol.status != LpStatus::Optimal {
        return Ok(FractionalSolution {
            status: sol.status,
            value: None,
            assignment: Vec::new(),
            lp: sol,
        });
    }
    let n = fp.variables.len();
    let t = sol.assignment[n].clone();
    if !t.is_positive() {
        return Err(Error::Invalid(
            "Charnes-Cooper recovery failed: t = 0 at the optimum".into(),
        ));
    }
    let x: Vec<Rational> = sol.assignment[..n].iter().map(|y| y / &t).collect();
    let d = fp.denominator.at(&x);
    if !d.is_positive() {
        return Err(Error::Invalid(format!(
            "denominator {d} is not positive at the recovered optimum"
        )));
    }
    let value = fp.numerator.at(&x) / d;
    if Some(&value) != sol.value.as_ref() {
        return Err(Error::Invalid(
            "recovered value disagrees with the linear program".into(),
        ));
    }
    Ok(FractionalSolution {
        status: LpStatus::Optimal,
        value: Some(value),
        assignment: x,
        lp: sol,
    })
}

impl FractionalProgram {
    pub fn solve(&self) -> Result<FractionalSolution> {
        recover(self, simplex_solve(&charnes_cooper(self)))
    }
}
