use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_traits::{PrimInt, Unsigned};

use crate::error::{Error, Result};

/// Unsigned machine integer used for monomial exponents.
///
/// All arithmetic on exponents is checked; overflow surfaces as
/// [`Error::Overflow`] instead of wrapping.
pub trait Exponent:
    PrimInt + Unsigned + Hash + Debug + Display + Default + Send + Sync + 'static
{
    fn from_u64(value: u64) -> Result<Self> {
        <Self as num_traits::NumCast>::from(value).ok_or(Error::Overflow)
    }

    fn as_u64(self) -> u64 {
        self.to_u64().expect("unsigned exponent fits in u64")
    }

    fn add_checked(self, other: Self) -> Result<Self> {
        self.checked_add(&other).ok_or(Error::Overflow)
    }
}

impl<T> Exponent for T where
    T: PrimInt + Unsigned + Hash + Debug + Display + Default + Send + Sync + 'static
{
}
