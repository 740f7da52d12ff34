//! Average-degree lower bounds `d(G) >= k - 1 + excess` from Gallai
//! quadruples, the closed forms, and the comparison table.

mod table;

pub use table::{render_table_text, reproduce_table, TableRow, HISTORICAL_KR, HISTORICAL_KS};

use std::fmt;
use std::str::FromStr;

use num::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quadruple::{evaluate_family, Family, Quadruple};
use crate::rational::{from_usize, int, rat, serde_fraction, to_fraction_string, truncate_decimal, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Theorem {
    T7,
    T5,
    T4,
    T7z0,
    T5z0,
    T4z0,
    #[serde(rename = "closed-form")]
    ClosedForm,
}

impl Theorem {
    pub const ALL: [Theorem; 6] = [
        Theorem::T7,
        Theorem::T5,
        Theorem::T4,
        Theorem::T7z0,
        Theorem::T5z0,
        Theorem::T4z0,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::T7 => "T7",
            Theorem::T5 => "T5",
            Theorem::T4 => "T4",
            Theorem::T7z0 => "T7z0",
            Theorem::T5z0 => "T5z0",
            Theorem::T4z0 => "T4z0",
            Theorem::ClosedForm => "closed-form",
        }
    }

    pub fn min_k(self) -> usize {
        match self {
            Theorem::T7 | Theorem::T7z0 | Theorem::ClosedForm => 7,
            Theorem::T5 | Theorem::T5z0 => 5,
            Theorem::T4 | Theorem::T4z0 => 4,
        }
    }

    pub fn is_z0(self) -> bool {
        matches!(self, Theorem::T7z0 | Theorem::T5z0 | Theorem::T4z0)
    }

    /// Multiple of `h` in the denominator; zero for the `k >= 4` theorems,
    /// which require `h = 0`.
    fn h_weight(self) -> i64 {
        match self {
            Theorem::T7 | Theorem::T7z0 => 3,
            Theorem::T5 | Theorem::T5z0 => 4,
            _ => 0,
        }
    }

    /// Coefficient of `c*` in the full form: `2h + f`, `h + f`, or `f`.
    pub fn c_star_coefficient(self, q: &Quadruple) -> Rational {
        match self {
            Theorem::T7 | Theorem::T7z0 => int(2) * &q.h + &q.f,
            Theorem::T5 | Theorem::T5z0 => &q.h + &q.f,
            _ => q.f.clone(),
        }
    }

    pub fn sign_condition_name(self) -> &'static str {
        match self {
            Theorem::T7 | Theorem::T7z0 => "2h+f <= 0",
            Theorem::T5 | Theorem::T5z0 => "h+f <= 0",
            _ => "f <= 0",
        }
    }

    /// Numerator and denominator of the asymptotic excess as affine forms:
    /// `(constant, [p, h, z])` each.
    pub fn excess_forms(self, k: usize) -> ((Rational, [Rational; 3]), (Rational, [Rational; 3])) {
        let k = k as i64;
        let z0 = self.is_z0();
        let zn = if z0 { int(0) } else { rat(-1, k - 1) };
        let zd = if z0 { int(0) } else { rat(-(k - 2), 2 * (k - 1)) };
        let base = if z0 { k + 2 } else { k + 1 };
        (
            (int(2), [int(-1), int(0), zn]),
            (int(base), [int(-1), int(self.h_weight()), zd]),
        )
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s.trim()))
            .ok_or(Error::Unknown {
                kind: "theorem",
                name: s.to_string(),
            })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundResult {
    pub k: usize,
    pub theorem: Theorem,
    pub quadruple: Option<Quadruple>,
    #[serde(with = "serde_fraction")]
    pub excess: Rational,
    /// `k - 1 + excess`.
    #[serde(with = "serde_fraction")]
    pub bound: Rational,
    /// `bound` truncated to four places.
    pub decimal: String,
}

impl BoundResult {
    fn new(k: usize, theorem: Theorem, quadruple: Option<Quadruple>, excess: Rational) -> Self {
        let bound = from_usize(k - 1) + &excess;
        BoundResult {
            k,
            theorem,
            quadruple,
            decimal: truncate_decimal(&bound, 4),
            excess,
            bound,
        }
    }
}

impl fmt::Display for BoundResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {} ≈ {}", self.k - 1, self.excess, self.decimal)
    }
}

fn eval(form: &(Rational, [Rational; 3]), q: &Quadruple) -> Rational {
    let (c, [a, b, d]) = form;
    c + a * &q.p + b * &q.h + d * &q.z
}

/// Upper end of the admissible `z` range, `6(k-1)/k`.
pub fn z_upper(k: usize) -> Rational {
    rat(6 * (k as i64 - 1), k as i64)
}

fn check_applicable(q: &Quadruple, theorem: Theorem) -> Result<()> {
    if theorem == Theorem::ClosedForm {
        return Err(Error::Invalid(
            "the closed form is not evaluated from a quadruple".into(),
        ));
    }
    if q.k < theorem.min_k() {
        return Err(Error::KTooSmall {
            k: q.k,
            min: theorem.min_k(),
        });
    }
    if theorem.h_weight() == 0 && !q.h.is_zero() {
        return Err(Error::OutOfRange {
            name: "h",
            value: to_fraction_string(&q.h),
            range: format!("{{0}} (required by {theorem})"),
        });
    }
    if theorem.is_z0() {
        if !q.z.is_zero() {
            return Err(Error::OutOfRange {
                name: "z",
                value: to_fraction_string(&q.z),
                range: format!("{{0}} (required by {theorem})"),
            });
        }
    } else {
        let hi = z_upper(q.k);
        if q.z < int(2) || q.z > hi {
            return Err(Error::OutOfRange {
                name: "z",
                value: to_fraction_string(&q.z),
                range: format!("[2, {}]", to_fraction_string(&hi)),
            });
        }
    }
    Ok(())
}

fn excess_parts(q: &Quadruple, theorem: Theorem) -> Result<(Rational, Rational)> {
    let (num, den) = theorem.excess_forms(q.k);
    let d = eval(&den, q);
    if !d.is_positive() {
        return Err(Error::Invalid(format!(
            "denominator {} is not positive",
            to_fraction_string(&d)
        )));
    }
    Ok((eval(&num, q), d))
}

/// The asymptotic bound, valid when the `c*` coefficient is nonpositive.
pub fn bound_from_theorem(q: &Quadruple, theorem: Theorem) -> Result<BoundResult> {
    check_applicable(q, theorem)?;
    let coef = theorem.c_star_coefficient(q);
    if coef.is_positive() {
        return Err(Error::SignCondition {
            condition: theorem.sign_condition_name(),
            value: to_fraction_string(&coef),
        });
    }
    let (n, d) = excess_parts(q, theorem)?;
    Ok(BoundResult::new(q.k, theorem, Some(q.clone()), n / d))
}

/// The bound for a particular graph with `order` vertices whose low-vertex
/// subgraph has `c_star` components containing `K_{k-1}`.
pub fn bound_full_form(
    q: &Quadruple,
    theorem: Theorem,
    order: usize,
    c_star: usize,
) -> Result<BoundResult> {
    check_applicable(q, theorem)?;
    if order == 0 {
        return Err(Error::Invalid("graph order must be positive".into()));
    }
    let (n, d) = excess_parts(q, theorem)?;
    let zterm = if theorem.is_z0() {
        int(0)
    } else {
        &q.z / int(q.k as i64 - 1)
    };
    let extra = (zterm - theorem.c_star_coefficient(q) * from_usize(c_star)) / from_usize(order);
    Ok(BoundResult::new(q.k, theorem, Some(q.clone()), (n + extra) / d))
}

pub fn main_theorem_closed_form(k: usize) -> Result<BoundResult> {
    let excess = match k {
        0..=5 => return Err(Error::KTooSmall { k, min: 6 }),
        6 => rat(93, 766),
        _ => {
            let k = int(k as i64);
            let k3 = &k - int(3);
            let num = &k3 * &k3 * (int(2) * &k - int(3));
            let k2 = &k * &k;
            let den = &k2 * &k2 - int(2) * &k2 * &k - int(11) * &k2 + int(28) * &k - int(14);
            num / den
        }
    };
    Ok(BoundResult::new(k, Theorem::ClosedForm, None, excess))
}

/// The strongest bound among the registered pipelines.
pub fn best_known_bound(k: usize) -> Result<BoundResult> {
    match k {
        0..=3 => Err(Error::KTooSmall { k, min: 4 }),
        4 | 5 => bound_from_theorem(&evaluate_family(Family::R, k, None)?, Theorem::T4),
        6 => bound_from_theorem(&evaluate_family(Family::Gallai6Up, 6, None)?, Theorem::T5),
        _ => bound_from_theorem(&evaluate_family(Family::Gallai7Up, k, None)?, Theorem::T7),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(f: Family, k: usize) -> Quadruple {
        evaluate_family(f, k, None).unwrap()
    }

    #[test]
    fn headline_values() {
        let b = bound_from_theorem(&fam(Family::Gallai7Up, 7), Theorem::T7).unwrap();
        assert_eq!(b.excess, rat(88, 679));
        assert_eq!(b.decimal, "6.1296");
        let b = bound_from_theorem(&fam(Family::R, 4), Theorem::T4).unwrap();
        assert_eq!(b.excess, rat(1, 10));
        let b = bound_from_theorem(&fam(Family::Gallai, 4), Theorem::T4z0).unwrap();
        assert_eq!(b.excess, rat(1, 13));
        assert_eq!(b.decimal, "3.0769");
    }

    #[test]
    fn closed_forms() {
        assert_eq!(main_theorem_closed_form(7).unwrap().excess, rat(88, 679));
        assert_eq!(main_theorem_closed_form(6).unwrap().excess, rat(93, 766));
        let b = main_theorem_closed_form(15).unwrap();
        assert_eq!(b.excess, rat(3888, 41806));
        assert_eq!(b.decimal, "14.0930");
        assert!(main_theorem_closed_form(5).is_err());
    }

    #[test]
    fn best_known() {
        assert_eq!(best_known_bound(6).unwrap().excess, rat(93, 766));
        assert_eq!(best_known_bound(5).unwrap().excess, rat(2, 17));
        let via_t5 = bound_from_theorem(&fam(Family::R, 5), Theorem::T5).unwrap();
        assert_eq!(via_t5.excess, rat(2, 17));
        assert_eq!(best_known_bound(9).unwrap().excess, rat(540, 4450));
        assert!(best_known_bound(3).is_err());
    }

    #[test]
    fn preconditions_enforced() {
        let g7 = fam(Family::Gallai7Up, 6);
        assert!(matches!(
            bound_from_theorem(&g7, Theorem::T7),
            Err(Error::KTooSmall { .. })
        ));
        assert!(bound_from_theorem(&g7, Theorem::T4).is_err());
        // z = 0 outside [2, 6(k-1)/k]
        assert!(bound_from_theorem(&fam(Family::Cr, 7), Theorem::T7).is_err());
        // z0 variants need z = 0
        assert!(bound_from_theorem(&fam(Family::R, 5), Theorem::T4z0).is_err());
        // parametric with large z has 2h + f > 0
        let par = evaluate_family(Family::Parametric, 7, Some(&rat(14, 5))).unwrap();
        assert!(matches!(
            bound_from_theorem(&par, Theorem::T7),
            Err(Error::SignCondition { .. })
        ));
    }

    #[test]
    fn full_form_dominates_asymptotic() {
        for k in 7..15 {
            let q = fam(Family::Gallai7Up, k);
            let asym = bound_from_theorem(&q, Theorem::T7).unwrap();
            for (order, c) in [(k + 1, 0), (20, 3), (100, 10)] {
                let full = bound_full_form(&q, Theorem::T7, order, c).unwrap();
                assert!(full.excess >= asym.excess);
            }
        }
    }

    #[test]
    fn theorem_names() {
        for t in Theorem::ALL {
            assert_eq!(t.name().parse::<Theorem>().unwrap(), t);
        }
        assert_eq!("t5".parse::<Theorem>().unwrap(), Theorem::T5);
    }
}
