use std::fmt;
use std::ops::{Add, Mul};

use serde::Serialize;

/// Total degree `t` and weight `w`. In charts the weight is the filtration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
pub struct Bidegree {
    pub t: i64,
    pub w: i64,
}

impl Bidegree {
    pub const ZERO: Bidegree = Bidegree { t: 0, w: 0 };

    pub const fn new(t: i64, w: i64) -> Self {
        Bidegree { t, w }
    }

    /// Single-graded objects (the dual Steenrod algebra) sit in weight zero.
    pub const fn degree(t: i64) -> Self {
        Bidegree { t, w: 0 }
    }

    /// True when `self` lies in the window `t <= bound.t, w <= bound.w`.
    pub fn dominated_by(self, bound: Bidegree) -> bool {
        self.t <= bound.t && self.w <= bound.w
    }
}

impl Add for Bidegree {
    type Output = Bidegree;
    fn add(self, rhs: Bidegree) -> Bidegree {
        Bidegree::new(self.t + rhs.t, self.w + rhs.w)
    }
}

impl Mul<i64> for Bidegree {
    type Output = Bidegree;
    fn mul(self, k: i64) -> Bidegree {
        Bidegree::new(self.t * k, self.w * k)
    }
}

impl fmt::Display for Bidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.t, self.w)
    }
}
