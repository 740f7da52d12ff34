use num::Zero;
use serde::{Deserialize, Serialize};

use super::Quadruple;
use crate::error::{Error, Result};
use crate::rational::{self, int, serde_fraction, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = ">=")]
    Ge,
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = "=")]
    Eq,
    /// `lhs = 0` or `lhs >= rhs`.
    #[serde(rename = "zero-or->=")]
    ZeroOrGe,
}

impl Relation {
    pub fn holds(self, lhs: &Rational, rhs: &Rational) -> bool {
        match self {
            Relation::Ge => lhs >= rhs,
            Relation::Le => lhs <= rhs,
            Relation::Eq => lhs == rhs,
            Relation::ZeroOrGe => lhs.is_zero() || lhs >= rhs,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Ge => ">=",
            Relation::Le => "<=",
            Relation::Eq => "=",
            Relation::ZeroOrGe => "0 or >=",
        }
    }

    /// Nonnegative exactly when the relation holds (for `Eq`, zero).
    fn slack(self, lhs: &Rational, rhs: &Rational) -> Rational {
        match self {
            Relation::Ge => lhs - rhs,
            Relation::Le | Relation::Eq => rhs - lhs,
            Relation::ZeroOrGe if lhs.is_zero() => Rational::zero(),
            Relation::ZeroOrGe => lhs - rhs,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Condition {
    pub name: String,
    pub relation: Relation,
    #[serde(with = "serde_fraction")]
    pub lhs: Rational,
    #[serde(with = "serde_fraction")]
    pub rhs: Rational,
    #[serde(with = "serde_fraction")]
    pub slack: Rational,
    pub pass: bool,
    /// Optional conditions are reported but do not affect the overall verdict.
    pub required: bool,
}

impl Condition {
    fn new(name: &str, lhs: Rational, relation: Relation, rhs: Rational, required: bool) -> Self {
        let pass = relation.holds(&lhs, &rhs);
        let slack = relation.slack(&lhs, &rhs);
        Condition {
            name: name.into(),
            relation,
            lhs,
            rhs,
            slack,
            pass,
            required,
        }
    }

    pub fn is_tight(&self) -> bool {
        self.slack.is_zero()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionReport {
    pub k: usize,
    pub conditions: Vec<Condition>,
    pub pass: bool,
}

impl ConditionReport {
    pub fn get(&self, name: &str) -> Option<&Condition> {
        self.conditions.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Condition> {
        self.conditions.iter().filter(|c| c.required && !c.pass)
    }
}

/// Evaluates the sufficient conditions for a quadruple to be 5-Gallai, plus
/// the two optional sign conditions that remove the `c*` term from the
/// bounds. Needs `k >= 5`.
pub fn check_sufficient_conditions(q: &Quadruple) -> Result<ConditionReport> {
    if q.k < 5 {
        return Err(Error::KTooSmall { k: q.k, min: 5 });
    }
    let k = q.k as i64;
    let (p, h, z, f) = (&q.p, &q.h, &q.z, &q.f);
    let two = int(2);
    let km2 = int(k - 2);
    use Relation::*;
    let conditions = vec![
        Condition::new("c1", f.clone(), Ge, int(k - 1) * (int(1) - p - h), true),
        Condition::new("c2", p.clone(), Ge, (int(3) - z / &two) / &km2, true),
        Condition::new("c3", p.clone(), Ge, h + int(5 - k), true),
        Condition::new("c4", p.clone(), Ge, (&two + h) / &km2, true),
        Condition::new(
            "c5",
            int(k - 1) * p + int(k - 3) * h + z,
            Ge,
            int(k + 1),
            true,
        ),
        Condition::new(
            "clique_free",
            p.clone(),
            Ge,
            rational::max(two.clone(), int(3) - z) / &km2,
            true,
        ),
        Condition::new("z_domain", z.clone(), ZeroOrGe, two.clone(), true),
        Condition::new("sign_2h_f", &two * h + f, Le, int(0), false),
        Condition::new("sign_h_f", h + f, Le, int(0), false),
    ];
    let pass = conditions.iter().all(|c| !c.required || c.pass);
    Ok(ConditionReport {
        k: q.k,
        conditions,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::super::{evaluate_family, Family};
    use super::*;

    #[test]
    fn gallai7up_at_seven() {
        let q = evaluate_family(Family::Gallai7Up, 7, None).unwrap();
        let r = check_sufficient_conditions(&q).unwrap();
        assert!(r.pass);
        let sign = r.get("sign_2h_f").unwrap();
        assert!(sign.pass && sign.is_tight());
    }

    #[test]
    fn r_family_tight_on_c5() {
        let q = Quadruple::custom(5, int(1), int(0), int(2), int(0)).unwrap();
        let r = check_sufficient_conditions(&q).unwrap();
        assert!(r.pass);
        let c5 = r.get("c5").unwrap();
        assert_eq!((c5.lhs.clone(), c5.rhs.clone()), (int(6), int(6)));
        assert!(c5.is_tight());
    }

    #[test]
    fn zero_quadruple_fails_c5() {
        let q = Quadruple::custom(5, int(0), int(0), int(0), int(0)).unwrap();
        let r = check_sufficient_conditions(&q).unwrap();
        assert!(!r.pass);
        assert!(!r.get("c5").unwrap().pass);
    }

    #[test]
    fn z_between_zero_and_two_rejected() {
        let q = Quadruple::custom(7, int(1), int(0), rational::rat(1, 2), int(0)).unwrap();
        let r = check_sufficient_conditions(&q).unwrap();
        assert!(!r.get("z_domain").unwrap().pass);
        assert!(!r.pass);
    }

    #[test]
    fn needs_k_at_least_five() {
        let q = evaluate_family(Family::R, 4, None).unwrap();
        assert!(matches!(
            check_sufficient_conditions(&q),
            Err(Error::KTooSmall { k: 4, min: 5 })
        ));
    }
}
