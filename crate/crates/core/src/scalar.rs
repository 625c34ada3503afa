use std::fmt::{Debug, Display};

use num_traits::{FromPrimitive, Num, Signed};

/// Exact field elements usable as polynomial coefficients.
///
/// Equality must be decidable, so this is implemented for the rational
/// types from `num-rational` (`BigRational`, `Ratio<i64>`, `Ratio<i128>`)
/// and deliberately not for floats, which lack `Eq`.
pub trait Scalar:
    Num + Signed + FromPrimitive + Clone + Eq + Debug + Display + Send + Sync + 'static
{
    fn from_count(v: u64) -> Self {
        <Self as FromPrimitive>::from_u64(v).expect("integer representable in scalar type")
    }

    fn from_int(v: i64) -> Self {
        <Self as FromPrimitive>::from_i64(v).expect("integer representable in scalar type")
    }

    /// `k!` computed in the scalar type.
    fn factorial(k: u32) -> Self {
        (2..=k as u64).fold(Self::one(), |acc, i| acc * Self::from_count(i))
    }
}

impl<T> Scalar for T where
    T: Num + Signed + FromPrimitive + Clone + Eq + Debug + Display + Send + Sync + 'static
{
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::{BigRational, Ratio};

    #[test]
    fn factorials() {
        assert_eq!(<BigRational as Scalar>::factorial(0), BigRational::from_integer(1.into()));
        assert_eq!(<BigRational as Scalar>::factorial(5), BigRational::from_integer(120.into()));
        assert_eq!(<Ratio<i64> as Scalar>::factorial(4), Ratio::from_integer(24));
    }
}
