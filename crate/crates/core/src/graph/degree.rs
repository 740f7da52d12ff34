use serde::{Deserialize, Serialize};

use super::{Graph, VertexSet};
use crate::error::{Error, Result};

/// Vertices split by degree relative to `k`: exactly `k-1` (low), exactly
/// `k` (mid), at least `k+1` (high).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreePartition {
    pub k: usize,
    pub low: VertexSet,
    pub mid: VertexSet,
    pub high: VertexSet,
    pub all_high: VertexSet,
}

pub fn degree_partition(g: &Graph, k: usize) -> Result<DegreePartition> {
    if k < 3 {
        return Err(Error::KTooSmall { k, min: 3 });
    }
    let mut p = DegreePartition {
        k,
        low: VertexSet::new(),
        mid: VertexSet::new(),
        high: VertexSet::new(),
        all_high: VertexSet::new(),
    };
    for v in g.vertices() {
        let d = g.degree(v);
        if d + 1 < k {
            return Err(Error::DegreeBelow {
                vertex: v,
                degree: d,
                min: k - 1,
            });
        }
        if d == k - 1 {
            p.low.insert(v);
        } else if d == k {
            p.mid.insert(v);
            p.all_high.insert(v);
        } else {
            p.high.insert(v);
            p.all_high.insert(v);
        }
    }
    Ok(p)
}
