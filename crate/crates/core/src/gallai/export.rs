use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{tree_stats, GallaiTree};
use crate::error::Result;

pub const CATALOG_SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub index: usize,
    pub file: String,
    pub order: usize,
    pub size: usize,
    pub q: usize,
    pub beta: usize,
    pub has_clique: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogSidecar {
    pub schema_version: u32,
    pub k: usize,
    pub entries: Vec<CatalogEntry>,
}

/// Statistics sidecar for a list of trees, with file names `tree_NNNNN.txt`.
pub fn catalog_sidecar(trees: &[GallaiTree], k: usize) -> Result<CatalogSidecar> {
    let entries = trees
        .iter()
        .enumerate()
        .map(|(index, t)| {
            let s = tree_stats(t, k)?;
            Ok(CatalogEntry {
                index,
                file: format!("tree_{index:05}.txt"),
                order: s.order,
                size: s.size,
                q: s.q,
                beta: s.beta,
                has_clique: s.has_clique,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CatalogSidecar {
        schema_version: CATALOG_SCHEMA_VERSION,
        k,
        entries,
    })
}

/// Writes one edge-list file per tree plus `catalog.json` into `dir`.
pub fn export_catalog(trees: &[GallaiTree], k: usize, dir: &Path) -> Result<CatalogSidecar> {
    let sidecar = catalog_sidecar(trees, k)?;
    fs::create_dir_all(dir)?;
    for (t, e) in trees.iter().zip(&sidecar.entries) {
        fs::write(dir.join(&e.file), t.graph().to_edge_list())?;
    }
    fs::write(
        dir.join("catalog.json"),
        serde_json::to_string_pretty(&sidecar)? + "\n",
    )?;
    Ok(sidecar)
}
