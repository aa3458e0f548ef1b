use std::fmt;

use crate::error::{Error, Result};

/// Order `m` of a Polymatrix or Polynacci family. Always at least 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Order(usize);

impl Order {
    pub const MIN: usize = 2;

    pub fn new(m: usize) -> Result<Self> {
        if m < Self::MIN {
            return Err(Error::UnsupportedOrder(m));
        }
        Ok(Order(m))
    }

    #[inline]
    pub fn get(self) -> usize {
        self.0
    }

    /// Orders `lo..=hi`, clamped below at 2.
    pub fn range(lo: usize, hi: usize) -> impl Iterator<Item = Order> {
        (lo.max(Self::MIN)..=hi).map(Order)
    }
}

impl TryFrom<usize> for Order {
    type Error = Error;

    fn try_from(m: usize) -> Result<Self> {
        Order::new(m)
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
