/// Vertex/edge-count guards for the exponential searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Independence number and mic.
    pub max_search_order: usize,
    pub max_chromatic_order: usize,
    pub max_tree_order: usize,
    pub max_at_order: usize,
    pub max_at_size: usize,
    pub max_choosability_order: usize,
    pub max_choosability_list: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_search_order: 24,
            max_chromatic_order: 16,
            max_tree_order: 12,
            max_at_order: 12,
            max_at_size: 24,
            max_choosability_order: 8,
            max_choosability_list: 4,
        }
    }
}

impl Limits {
    pub(crate) fn check(what: &'static str, limit: usize, actual: usize) -> crate::Result<()> {
        if actual > limit {
            Err(crate::Error::Guard {
                what,
                limit,
                actual,
            })
        } else {
            Ok(())
        }
    }
}
