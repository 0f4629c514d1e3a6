use std::collections::BTreeMap;

use serde::Serialize;

use super::bidegree::Bidegree;

/// Dimensions of a bigraded vector space inside a window.
///
/// Only nonzero entries are stored; any bidegree inside the window that is
/// missing has dimension zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PoincareTable {
    pub window: Bidegree,
    pub entries: BTreeMap<Bidegree, u64>,
}

impl PoincareTable {
    pub fn new(window: Bidegree, mut entries: BTreeMap<Bidegree, u64>) -> Self {
        entries.retain(|b, d| *d > 0 && b.dominated_by(window));
        PoincareTable { window, entries }
    }

    /// Dimension at `b`, or `None` when `b` is outside the window.
    pub fn dim(&self, b: Bidegree) -> Option<u64> {
        b.dominated_by(self.window)
            .then(|| self.entries.get(&b).copied().unwrap_or(0))
    }

    /// Single-graded view: dimension in degree `d` at weight zero.
    pub fn dim_in_degree(&self, d: i64) -> u64 {
        self.dim(Bidegree::degree(d)).unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Bidegree, u64)> + '_ {
        self.entries.iter().map(|(b, d)| (*b, *d))
    }

    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }
}
