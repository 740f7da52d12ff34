use num::Zero;
use serde::{Deserialize, Serialize};

use super::{check_sufficient_conditions, ConditionReport, Family, Quadruple};
use crate::error::{Error, Result};
use crate::gallai::{enumerate_gallai_trees_with, tree_stats, GallaiTree};
use crate::graph::Graph;
use crate::limits::Limits;
use crate::rational::{from_usize, int, serde_fraction, Rational};

/// Tight trees kept verbatim in a verdict; the count is always exact.
const KEEP_TIGHT: usize = 32;

/// Gallai trees enumerated once for the largest `k` of interest and
/// filtered for smaller `k`.
#[derive(Clone, Debug)]
pub struct TreeCatalog {
    max_n: usize,
    k_max: usize,
    trees: Vec<GallaiTree>,
}

impl TreeCatalog {
    pub fn build(max_n: usize, k_max: usize) -> Result<Self> {
        Self::build_with(max_n, k_max, &Limits::default())
    }

    pub fn build_with(max_n: usize, k_max: usize, limits: &Limits) -> Result<Self> {
        Ok(TreeCatalog {
            max_n,
            k_max,
            trees: enumerate_gallai_trees_with(max_n, k_max, limits)?,
        })
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    /// Trees with maximum degree at most `k - 1`, other than `K_k`.
    pub fn for_k(&self, k: usize) -> Result<impl Iterator<Item = &GallaiTree> + '_> {
        if k > self.k_max || k < 4 {
            return Err(Error::OutOfRange {
                name: "k",
                value: k.to_string(),
                range: format!("[4, {}]", self.k_max),
            });
        }
        Ok(self.trees.iter().filter(move |t| {
            let g = t.graph();
            g.max_degree() < k && !(g.order() == k && g.is_complete())
        }))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeWitness {
    pub graph: Graph,
    pub code: String,
    pub order: usize,
    pub size: usize,
    pub q: usize,
    pub beta: usize,
    pub has_clique: bool,
    /// `2‖T‖`.
    #[serde(with = "serde_fraction")]
    pub lhs: Rational,
    #[serde(with = "serde_fraction")]
    pub rhs: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeVerdict {
    pub max_n: usize,
    pub trees_checked: usize,
    pub tight_count: usize,
    /// The first few tight trees in catalog order.
    pub tight: Vec<TreeWitness>,
    pub counterexample: Option<TreeWitness>,
}

impl TreeVerdict {
    pub fn pass(&self) -> bool {
        self.counterexample.is_none()
    }
}

fn witness(q: &Quadruple, t: &GallaiTree) -> Result<TreeWitness> {
    let s = tree_stats(t, q.k)?;
    let lhs = from_usize(2 * s.size);
    let mut rhs = (int(q.k as i64 - 3) + &q.p) * from_usize(s.order) + &q.z * from_usize(s.beta);
    if s.has_clique {
        rhs += &q.h * from_usize(s.q) + &q.f;
    }
    Ok(TreeWitness {
        graph: t.graph().clone(),
        code: t.canonical_code(),
        order: s.order,
        size: s.size,
        q: s.q,
        beta: s.beta,
        has_clique: s.has_clique,
        lhs,
        rhs,
    })
}

/// Checks the defining tree inequality for every catalogued tree, stopping
/// at the first failure in catalog order.
pub fn verify_with_catalog(q: &Quadruple, r: usize, catalog: &TreeCatalog) -> Result<TreeVerdict> {
    if q.k < r {
        return Err(Error::KTooSmall { k: q.k, min: r });
    }
    let mut verdict = TreeVerdict {
        max_n: catalog.max_n,
        trees_checked: 0,
        tight_count: 0,
        tight: Vec::new(),
        counterexample: None,
    };
    for t in catalog.for_k(q.k)? {
        let w = witness(q, t)?;
        verdict.trees_checked += 1;
        if w.lhs > w.rhs {
            verdict.counterexample = Some(w);
            break;
        }
        if (&w.rhs - &w.lhs).is_zero() {
            verdict.tight_count += 1;
            if verdict.tight.len() < KEEP_TIGHT {
                verdict.tight.push(w);
            }
        }
    }
    Ok(verdict)
}

pub fn verify_against_trees(q: &Quadruple, r: usize, max_n: usize) -> Result<TreeVerdict> {
    let catalog = TreeCatalog::build(max_n, q.k.max(4))?;
    verify_with_catalog(q, r, &catalog)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadrupleReport {
    pub family: Family,
    pub k: usize,
    pub quadruple: Quadruple,
    /// Absent when `k < 5`, where the symbolic conditions do not apply.
    pub conditions: Option<ConditionReport>,
    pub tree_check: TreeVerdict,
}

impl QuadrupleReport {
    pub fn build(q: &Quadruple, r: usize, catalog: &TreeCatalog) -> Result<Self> {
        let conditions = if q.k >= 5 {
            Some(check_sufficient_conditions(q)?)
        } else {
            None
        };
        Ok(QuadrupleReport {
            family: q.family,
            k: q.k,
            quadruple: q.clone(),
            conditions,
            tree_check: verify_with_catalog(q, r, catalog)?,
        })
    }

    pub fn pass(&self) -> bool {
        self.conditions.as_ref().map_or(true, |c| c.pass) && self.tree_check.pass()
    }
}

#[cfg(test)]
mod tests {
    use super::super::evaluate_family;
    use super::*;

    #[test]
    fn zero_quadruple_fails_on_k4() {
        let q = Quadruple::custom(5, int(0), int(0), int(0), int(0)).unwrap();
        let v = verify_against_trees(&q, 5, 6).unwrap();
        let c = v.counterexample.expect("K4 violates");
        assert!(c.graph.is_complete() && c.order == 4);
        assert_eq!((c.lhs, c.rhs), (int(12), int(8)));
    }

    #[test]
    fn r_family_passes_at_five() {
        let q = evaluate_family(Family::R, 5, None).unwrap();
        let v = verify_against_trees(&q, 4, 8).unwrap();
        assert!(v.pass());
        assert!(v.tight.iter().any(|w| w.graph.is_complete() && w.order == 4));
    }

    #[test]
    fn gallai_family_passes_at_four() {
        let q = evaluate_family(Family::Gallai, 4, None).unwrap();
        let v = verify_against_trees(&q, 4, 8).unwrap();
        assert!(v.pass());
        assert!(v.tight_count >= 1);
    }

    #[test]
    fn catalog_filters_by_k() {
        let cat = TreeCatalog::build(5, 6).unwrap();
        assert!(cat.for_k(5).unwrap().all(|t| t.graph().max_degree() <= 4));
        assert!(!cat
            .for_k(5)
            .unwrap()
            .any(|t| t.graph().order() == 5 && t.graph().is_complete()));
        assert!(cat.for_k(6).unwrap().any(|t| t.graph().order() == 5 && t.graph().is_complete()));
        assert!(cat.for_k(7).is_err());
    }
}
