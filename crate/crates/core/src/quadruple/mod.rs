//! Gallai quadruples `(p, h, z, f)`: the named families, the symbolic
//! sufficient conditions, and exhaustive verification against trees.

mod conditions;
mod verify;

pub use conditions::{check_sufficient_conditions, Condition, ConditionReport, Relation};
pub use verify::{
    verify_against_trees, verify_with_catalog, QuadrupleReport, TreeCatalog, TreeVerdict,
    TreeWitness,
};

use std::fmt;
use std::str::FromStr;

use num::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, int, serde_fraction, to_fraction_string, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Gallai,
    Ks,
    Cr,
    R,
    Gallai7Up,
    Gallai6Up,
    Parametric,
    Custom,
}

impl Family {
    /// The six fixed families, in display order.
    pub const REGISTERED: [Family; 6] = [
        Family::Gallai,
        Family::Ks,
        Family::Cr,
        Family::R,
        Family::Gallai7Up,
        Family::Gallai6Up,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Gallai => "gallai",
            Family::Ks => "ks",
            Family::Cr => "cr",
            Family::R => "r",
            Family::Gallai7Up => "gallai7up",
            Family::Gallai6Up => "gallai6up",
            Family::Parametric => "parametric",
            Family::Custom => "custom",
        }
    }

    /// Smallest `k` for which the family is known to be Gallai.
    pub fn r(self) -> Option<usize> {
        match self {
            Family::Gallai | Family::R => Some(4),
            Family::Ks => Some(7),
            Family::Cr | Family::Gallai7Up | Family::Gallai6Up | Family::Parametric => Some(5),
            Family::Custom => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        [
            Family::Gallai,
            Family::Ks,
            Family::Cr,
            Family::R,
            Family::Gallai7Up,
            Family::Gallai6Up,
            Family::Parametric,
            Family::Custom,
        ]
        .into_iter()
        .find(|f| f.name() == lower)
        .ok_or(Error::Unknown {
            kind: "family",
            name: s.to_string(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quadruple {
    pub k: usize,
    #[serde(with = "serde_fraction")]
    pub p: Rational,
    #[serde(with = "serde_fraction")]
    pub h: Rational,
    #[serde(with = "serde_fraction")]
    pub z: Rational,
    #[serde(with = "serde_fraction")]
    pub f: Rational,
    pub family: Family,
}

impl Quadruple {
    /// Raw values, e.g. an optimizer witness. Rejects negative `p`, `h`, `z`.
    pub fn custom(k: usize, p: Rational, h: Rational, z: Rational, f: Rational) -> Result<Self> {
        for (name, v) in [("p", &p), ("h", &h), ("z", &z)] {
            if v.is_negative() {
                return Err(Error::OutOfRange {
                    name,
                    value: to_fraction_string(v),
                    range: ">= 0".into(),
                });
            }
        }
        Ok(Quadruple {
            k,
            p,
            h,
            z,
            f,
            family: Family::Custom,
        })
    }

    pub fn values(&self) -> [&Rational; 4] {
        [&self.p, &self.h, &self.z, &self.f]
    }
}

impl fmt::Display for Quadruple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}@k={} ({}, {}, {}, {})",
            self.family,
            self.k,
            self.p,
            self.h,
            self.z,
            self.f
        )
    }
}

/// Upper end of the parametric family's `z` range, `k(k-3)/(k-2)`.
pub fn parametric_z_max(k: usize) -> Rational {
    let k = k as i64;
    rational::rat(k * (k - 3), k - 2)
}

pub fn evaluate_family(
    family: Family,
    k: usize,
    z_param: Option<&Rational>,
) -> Result<Quadruple> {
    let Some(r) = family.r() else {
        return Err(Error::Invalid(
            "custom quadruples are built from explicit values".into(),
        ));
    };
    if k < r {
        return Err(Error::KTooSmall { k, min: r });
    }
    let kk = k as i64;
    let q = |n: i64, d: i64| rational::rat(n, d);
    let (p, h, z, f) = match family {
        Family::Gallai => (q(kk + 1, kk - 1), int(0), int(0), int(-2)),
        Family::Ks => {
            let d = kk * kk - 3 * kk + 4;
            (
                q(4 * (kk - 1), d),
                q(kk * kk - 3 * kk, d),
                int(0),
                q(-4 * (kk * kk - 3 * kk + 2), d),
            )
        }
        Family::Cr => {
            let d = kk * kk - 4 * kk + 5;
            (
                q(3 * kk - 5, d),
                q(kk * (kk - 3), d),
                int(0),
                q(-2 * (kk - 1) * (2 * kk - 5), d),
            )
        }
        Family::R => (int(1), int(0), int(2), int(0)),
        Family::Gallai7Up => {
            let d = kk * kk - 4 * kk + 5;
            (
                q(3 * kk - 7, d),
                q((kk - 1) * (kk - 4), d),
                int(2),
                q(-2 * (kk - 1) * (kk - 4), d),
            )
        }
        Family::Gallai6Up => {
            let d = kk * kk - 3 * kk + 3;
            (
                q(3 * kk - 5, d),
                q((kk - 1) * (kk - 4), d),
                q((3 * kk - 5) * (kk - 2), d),
                q(-(kk - 1) * (kk - 4), d),
            )
        }
        Family::Parametric => {
            let z = z_param.cloned().ok_or_else(|| {
                Error::Invalid("the parametric family needs a value for z".into())
            })?;
            let zmax = parametric_z_max(k);
            if !(z.is_zero() || (z >= int(2) && z <= zmax)) {
                return Err(Error::OutOfRange {
                    name: "z",
                    value: to_fraction_string(&z),
                    range: format!("{{0}} or [2, {}]", to_fraction_string(&zmax)),
                });
            }
            let h = (int(kk * (kk - 3)) - int(kk - 2) * &z) / int(kk * kk - 4 * kk + 5);
            let p = (int(2) + &h) / int(kk - 2);
            let f = int(kk - 1) * (int(1) - &h - &p);
            (p, h, z, f)
        }
        Family::Custom => unreachable!(),
    };
    Ok(Quadruple {
        k,
        p,
        h,
        z,
        f,
        family,
    })
}
