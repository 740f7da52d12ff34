use serde::{Deserialize, Serialize};

use super::{AffineForm, Constraint, FractionalProgram, LpStatus, Relation, Variable};
use crate::bounds::{best_known_bound, bound_from_theorem, z_upper, BoundResult, Theorem};
use crate::error::{Error, Result};
use crate::quadruple::{check_sufficient_conditions, ConditionReport, Quadruple};
use crate::rational::{int, rat, serde_fraction_opt, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ZBranch {
    /// `z = 0`, evaluated with the `z0` variant of the theorem.
    Zero,
    /// `2 <= z <= 6(k-1)/k`.
    Positive,
}

fn base(theorem: Theorem) -> Theorem {
    match theorem {
        Theorem::T7z0 => Theorem::T7,
        Theorem::T5z0 => Theorem::T5,
        Theorem::T4z0 => Theorem::T4,
        t => t,
    }
}

fn variant(theorem: Theorem, branch: ZBranch) -> Theorem {
    match (base(theorem), branch) {
        (t, ZBranch::Positive) => t,
        (Theorem::T7, ZBranch::Zero) => Theorem::T7z0,
        (Theorem::T5, ZBranch::Zero) => Theorem::T5z0,
        (_, ZBranch::Zero) => Theorem::T4z0,
    }
}

/// Column layout: `p`, then `h` unless the theorem forces `h = 0`, then `z`
/// on the positive branch, then the free variable `f`.
struct Layout {
    has_h: bool,
    has_z: bool,
}

impl Layout {
    fn variables(&self) -> Vec<Variable> {
        let mut v = vec![Variable::nonnegative("p")];
        if self.has_h {
            v.push(Variable::nonnegative("h"));
        }
        if self.has_z {
            v.push(Variable::nonnegative("z"));
        }
        v.push(Variable::free("f"));
        v
    }

    fn row(&self, p: Rational, h: Rational, z: Rational, f: Rational) -> Vec<Rational> {
        let mut r = vec![p];
        if self.has_h {
            r.push(h);
        }
        if self.has_z {
            r.push(z);
        }
        r.push(f);
        r
    }

    fn unpack(&self, x: &[Rational]) -> (Rational, Rational, Rational, Rational) {
        let mut it = x.iter().cloned();
        let p = it.next().unwrap_or_else(|| int(0));
        let h = if self.has_h { it.next().unwrap_or_else(|| int(0)) } else { int(0) };
        let z = if self.has_z { it.next().unwrap_or_else(|| int(0)) } else { int(0) };
        let f = it.next().unwrap_or_else(|| int(0));
        (p, h, z, f)
    }
}

fn layout(theorem: Theorem, branch: ZBranch) -> Layout {
    Layout {
        has_h: !matches!(base(theorem), Theorem::T4),
        has_z: branch == ZBranch::Positive,
    }
}

pub fn build_fractional_program(
    k: usize,
    theorem: Theorem,
    branch: ZBranch,
) -> Result<FractionalProgram> {
    if theorem == Theorem::ClosedForm {
        return Err(Error::Invalid("the closed form has no program".into()));
    }
    let t = variant(theorem, branch);
    if k < t.min_k() {
        return Err(Error::KTooSmall { k, min: t.min_k() });
    }
    let lay = layout(theorem, branch);
    let kk = k as i64;
    let zero = || int(0);
    let mut rows = vec![
        Constraint::new(
            "c1",
            lay.row(int(kk - 1), int(kk - 1), zero(), int(1)),
            Relation::Ge,
            int(kk - 1),
        ),
        Constraint::new(
            "c2",
            lay.row(int(kk - 2), zero(), rat(1, 2), zero()),
            Relation::Ge,
            int(3),
        ),
        Constraint::new(
            "c3",
            lay.row(int(1), int(-1), zero(), zero()),
            Relation::Ge,
            int(5 - kk),
        ),
        Constraint::new(
            "c4",
            lay.row(int(kk - 2), int(-1), zero(), zero()),
            Relation::Ge,
            int(2),
        ),
        Constraint::new(
            "c5",
            lay.row(int(kk - 1), int(kk - 3), int(1), zero()),
            Relation::Ge,
            int(kk + 1),
        ),
        Constraint::new(
            "clique_free",
            lay.row(int(kk - 2), zero(), zero(), zero()),
            Relation::Ge,
            int(if branch == ZBranch::Positive { 2 } else { 3 }),
        ),
    ];
    if branch == ZBranch::Positive {
        rows.push(Constraint::new(
            "z_lower",
            lay.row(zero(), zero(), int(1), zero()),
            Relation::Ge,
            int(2),
        ));
        rows.push(Constraint::new(
            "z_upper",
            lay.row(zero(), zero(), int(1), zero()),
            Relation::Le,
            z_upper(k),
        ));
    }
    let h_sign = match base(theorem) {
        Theorem::T7 => int(2),
        Theorem::T5 => int(1),
        _ => zero(),
    };
    rows.push(Constraint::new(
        "sign",
        lay.row(zero(), h_sign, zero(), int(1)),
        Relation::Le,
        zero(),
    ));

    let ((nc, [np, nh, nz]), (dc, [dp, dh, dz])) = t.excess_forms(k);
    FractionalProgram::new(
        lay.variables(),
        AffineForm::new(nc, lay.row(np, nh, nz, zero())),
        AffineForm::new(dc, lay.row(dp, dh, dz, zero())),
        rows,
    )
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchOutcome {
    pub branch: ZBranch,
    pub theorem: Theorem,
    pub status: LpStatus,
    #[serde(with = "serde_fraction_opt")]
    pub value: Option<Rational>,
    pub witness: Option<Quadruple>,
    pub basis: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Optimization {
    pub k: usize,
    pub branches: Vec<BranchOutcome>,
    pub chosen: ZBranch,
    pub quadruple: Quadruple,
    pub bound: BoundResult,
    pub conditions: Option<ConditionReport>,
    /// Best bound from the registered families, for comparison.
    pub reference: BoundResult,
    /// `bound.excess - reference.excess`.
    #[serde(with = "serde_fraction_opt")]
    pub gap: Option<Rational>,
}

fn solve_branch(k: usize, theorem: Theorem, branch: ZBranch) -> Result<BranchOutcome> {
    let fp = build_fractional_program(k, theorem, branch)?;
    let sol = fp.solve()?;
    let t = variant(theorem, branch);
    let witness = if sol.status == LpStatus::Optimal {
        for c in &fp.constraints {
            if !c.relation.holds(&c.lhs_at(&sol.assignment), &c.rhs) {
                return Err(Error::Invalid(format!(
                    "optimum violates constraint `{}`",
                    c.name
                )));
            }
        }
        let (p, h, z, f) = layout(theorem, branch).unpack(&sol.assignment);
        Some(Quadruple::custom(k, p, h, z, f)?)
    } else {
        None
    };
    Ok(BranchOutcome {
        branch,
        theorem: t,
        status: sol.status,
        value: sol.value,
        witness,
        basis: sol.lp.basis,
    })
}

/// Solves the program on each `z` branch (only the zero branch for a `z0`
/// theorem) and returns the better witness, re-verified.
pub fn optimize_quadruple(k: usize, theorem: Theorem) -> Result<Optimization> {
    let branches: Vec<ZBranch> = if theorem.is_z0() {
        vec![ZBranch::Zero]
    } else {
        vec![ZBranch::Positive, ZBranch::Zero]
    };
    let outcomes = branches
        .iter()
        .map(|&b| solve_branch(k, theorem, b))
        .collect::<Result<Vec<_>>>()?;
    let best = outcomes
        .iter()
        .filter(|o| o.value.is_some())
        .fold(None::<&BranchOutcome>, |acc, o| match acc {
            Some(a) if a.value >= o.value => Some(a),
            _ => Some(o),
        })
        .ok_or_else(|| Error::Invalid(format!("every branch is infeasible at k = {k}")))?;
    let quadruple = best.witness.clone().expect("optimal branch has a witness");
    let value = best.value.clone().expect("optimal branch has a value");

    let bound = bound_from_theorem(&quadruple, best.theorem)?;
    if bound.excess != value {
        return Err(Error::Invalid(
            "bound evaluated at the witness disagrees with the program value".into(),
        ));
    }
    let conditions = if k >= 5 {
        let report = check_sufficient_conditions(&quadruple)?;
        if !report.pass {
            return Err(Error::Invalid(
                "optimizer witness fails the sufficient conditions".into(),
            ));
        }
        Some(report)
    } else {
        None
    };
    let reference = best_known_bound(k)?;
    let gap = Some(&bound.excess - &reference.excess);
    Ok(Optimization {
        k,
        chosen: best.branch,
        branches: outcomes,
        quadruple,
        bound,
        conditions,
        reference,
        gap,
    })
}
