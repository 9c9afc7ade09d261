//! The coefficient field: arbitrary-precision rationals.
//!
//! `num_rational::BigRational` already keeps values in lowest terms with a
//! positive denominator, which is exactly the invariant we need, so the crate
//! uses it directly rather than rolling its own fraction type.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact rational scalar.
pub type Scalar = BigRational;

/// The scalar `n/1`.
pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// The scalar `p/q`; panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> Scalar {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// Renders a scalar as `p` or `p/q`.
pub fn render(s: &Scalar) -> String {
    if s.is_integer() {
        s.numer().to_string()
    } else {
        format!("{}/{}", s.numer(), s.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    // Exactness oracle: a/b + c/d recomputed by raw big-integer cross
    // multiplication, for 1000 seeded random pairs.
    #[test]
    fn addition_matches_big_integer_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5EED);
        for _ in 0..1000 {
            let a = BigInt::from(rng.gen_range(-1_000_000i64..=1_000_000));
            let b = BigInt::from(rng.gen_range(1i64..=1_000_000));
            let c = BigInt::from(rng.gen_range(-1_000_000i64..=1_000_000));
            let d = BigInt::from(rng.gen_range(1i64..=1_000_000));
            let sum = BigRational::new(a.clone(), b.clone()) + BigRational::new(c.clone(), d.clone());
            let oracle = BigRational::new(&a * &d + &c * &b, &b * &d);
            assert_eq!(sum, oracle);
        }
    }

    #[test]
    fn lowest_terms_invariant() {
        let s = ratio(4, -6);
        assert_eq!(s.numer(), &BigInt::from(-2));
        assert_eq!(s.denom(), &BigInt::from(3));
        assert_eq!(render(&s), "-2/3");
        assert_eq!(render(&int(7)), "7");
    }
}
