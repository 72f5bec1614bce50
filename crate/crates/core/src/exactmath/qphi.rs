//! Exact arithmetic in the real quadratic field Q(phi), phi = (1+sqrt 5)/2.
//!
//! Elements are stored as `a + b*phi` with arbitrary-precision rationals.
//! Products reduce through phi^2 = phi + 1. Signs, comparisons and floors
//! are decided exactly, so every geometric predicate built on top of this
//! type is certified.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Exact sign of a real quantity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of_rational(r: &BigRational) -> Sign {
        if r.is_zero() {
            Sign::Zero
        } else if r.is_positive() {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }

    pub fn is_zero(self) -> bool {
        self == Sign::Zero
    }

    pub fn is_positive(self) -> bool {
        self == Sign::Positive
    }

    pub fn is_negative(self) -> bool {
        self == Sign::Negative
    }
}

/// `a + b*phi` with exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QPhi {
    pub a: BigRational,
    pub b: BigRational,
}

impl QPhi {
    pub fn new(a: BigRational, b: BigRational) -> QPhi {
        QPhi { a, b }
    }

    pub fn zero() -> QPhi {
        QPhi::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> QPhi {
        QPhi::new(BigRational::one(), BigRational::zero())
    }

    pub fn phi() -> QPhi {
        QPhi::new(BigRational::zero(), BigRational::one())
    }

    pub fn from_int(n: i64) -> QPhi {
        QPhi::new(BigRational::from_integer(BigInt::from(n)), BigRational::zero())
    }

    pub fn from_rational(r: BigRational) -> QPhi {
        QPhi::new(r, BigRational::zero())
    }

    /// `n + m*phi` for machine integers.
    pub fn from_pair(n: i64, m: i64) -> QPhi {
        QPhi::new(
            BigRational::from_integer(BigInt::from(n)),
            BigRational::from_integer(BigInt::from(m)),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn add_ref(&self, other: &QPhi) -> QPhi {
        QPhi::new(&self.a + &other.a, &self.b + &other.b)
    }

    pub fn sub_ref(&self, other: &QPhi) -> QPhi {
        QPhi::new(&self.a - &other.a, &self.b - &other.b)
    }

    pub fn neg_ref(&self) -> QPhi {
        QPhi::new(-&self.a, -&self.b)
    }

    /// Product, reduced through phi^2 = phi + 1.
    pub fn mul_ref(&self, other: &QPhi) -> QPhi {
        let bb = &self.b * &other.b;
        QPhi::new(
            &self.a * &other.a + &bb,
            &self.a * &other.b + &self.b * &other.a + bb,
        )
    }

    pub fn scale(&self, r: &BigRational) -> QPhi {
        QPhi::new(&self.a * r, &self.b * r)
    }

    /// Galois conjugate `a + b - b*phi` (phi -> 1 - phi = -1/phi).
    pub fn galois(&self) -> QPhi {
        QPhi::new(&self.a + &self.b, -&self.b)
    }

    /// Field norm `x * galois(x) = a^2 + a*b - b^2`, a rational.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a + &self.a * &self.b - &self.b * &self.b
    }

    pub fn inverse(&self) -> QPhi {
        assert!(!self.is_zero(), "division by zero in Q(phi)");
        let n = self.norm();
        self.galois().scale(&n.recip())
    }

    pub fn div_ref(&self, other: &QPhi) -> QPhi {
        self.mul_ref(&other.inverse())
    }

    /// Exact sign. For mixed-sign coefficients this compares the rational
    /// root candidate against phi through the minimal polynomial
    /// x^2 - x - 1, never through floating point.
    pub fn sign(&self) -> Sign {
        let sa = Sign::of_rational(&self.a);
        let sb = Sign::of_rational(&self.b);
        match (sa, sb) {
            (s, Sign::Zero) => s,
            (Sign::Zero, s) => s,
            (Sign::Positive, Sign::Positive) => Sign::Positive,
            (Sign::Negative, Sign::Negative) => Sign::Negative,
            (Sign::Negative, Sign::Positive) => {
                // a + b*phi = b*(phi - t) with t = -a/b > 0.
                let t = -&self.a / &self.b;
                // For t >= 0: t < phi  iff  t^2 - t - 1 < 0.
                let disc = &t * &t - &t - BigRational::one();
                Sign::of_rational(&disc).flip()
            }
            (Sign::Positive, Sign::Negative) => self.neg_ref().sign().flip(),
        }
    }

    pub fn cmp_ref(&self, other: &QPhi) -> std::cmp::Ordering {
        match self.sub_ref(other).sign() {
            Sign::Negative => std::cmp::Ordering::Less,
            Sign::Zero => std::cmp::Ordering::Equal,
            Sign::Positive => std::cmp::Ordering::Greater,
        }
    }

    /// Largest integer n with n <= a + b*phi, decided exactly.
    pub fn floor(&self) -> BigInt {
        // Rational bracket for phi good to ~1e-19 (consecutive Fibonacci
        // ratios F(46)/F(45) < phi < F(47)/F(46)).
        let lo = BigRational::new(BigInt::from(1_836_311_903i64), BigInt::from(1_134_903_170i64));
        let hi = BigRational::new(BigInt::from(2_971_215_073i64), BigInt::from(1_836_311_903i64));
        let (vlo, vhi) = if self.b.is_negative() {
            (&self.a + &self.b * &hi, &self.a + &self.b * &lo)
        } else {
            (&self.a + &self.b * &lo, &self.a + &self.b * &hi)
        };
        let mut n = vlo.floor().to_integer();
        let top = vhi.floor().to_integer();
        // The bracket is almost always a single integer; walk up the rare
        // leftover exactly.
        while n < top {
            let next = &n + BigInt::one();
            let diff = self.sub_ref(&QPhi::from_rational(BigRational::from_integer(next.clone())));
            if diff.sign() == Sign::Negative {
                break;
            }
            n = next;
        }
        n
    }

    /// Certified f64 bracket (lo <= value <= hi), for display and hints.
    pub fn to_f64_bracket(&self) -> (f64, f64) {
        let lo = BigRational::new(BigInt::from(1_836_311_903i64), BigInt::from(1_134_903_170i64));
        let hi = BigRational::new(BigInt::from(2_971_215_073i64), BigInt::from(1_836_311_903i64));
        let (vlo, vhi) = if self.b.is_negative() {
            (&self.a + &self.b * &hi, &self.a + &self.b * &lo)
        } else {
            (&self.a + &self.b * &lo, &self.a + &self.b * &hi)
        };
        (
            vlo.to_f64().unwrap_or(f64::NEG_INFINITY),
            vhi.to_f64().unwrap_or(f64::INFINITY),
        )
    }

    /// Midpoint f64 approximation.
    pub fn to_f64(&self) -> f64 {
        let (lo, hi) = self.to_f64_bracket();
        0.5 * (lo + hi)
    }
}

impl fmt::Debug for QPhi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}*phi", self.a, self.b)
    }
}

impl fmt::Display for QPhi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+{}phi", self.a, self.b)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $inner:ident) => {
        impl $trait for QPhi {
            type Output = QPhi;
            fn $method(self, rhs: QPhi) -> QPhi {
                self.$inner(&rhs)
            }
        }
        impl $trait for &QPhi {
            type Output = QPhi;
            fn $method(self, rhs: &QPhi) -> QPhi {
                self.$inner(rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);
forward_binop!(Div, div, div_ref);

impl Neg for QPhi {
    type Output = QPhi;
    fn neg(self) -> QPhi {
        self.neg_ref()
    }
}

impl Neg for &QPhi {
    type Output = QPhi;
    fn neg(self) -> QPhi {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn phi_squared_is_phi_plus_one() {
        let phi = QPhi::phi();
        let sq = phi.mul_ref(&phi);
        assert_eq!(sq, QPhi::from_pair(1, 1));
    }

    #[test]
    fn sign_mixed_coefficients() {
        // phi - 1.6 = (-8/5) + phi > 0
        let x = QPhi::new(rat(-8, 5), BigRational::one());
        assert_eq!(x.sign(), Sign::Positive);
        // phi - 1.7 < 0
        let y = QPhi::new(rat(-17, 10), BigRational::one());
        assert_eq!(y.sign(), Sign::Negative);
        assert_eq!(QPhi::zero().sign(), Sign::Zero);
    }

    #[test]
    fn floor_of_phi_powers() {
        // phi^2 = 1 + phi, floor = 2
        assert_eq!(QPhi::from_pair(1, 1).floor(), BigInt::from(2));
        // phi^4 = 2 + 3 phi = 6.854..., floor 6
        assert_eq!(QPhi::from_pair(2, 3).floor(), BigInt::from(6));
        // -phi floor = -2
        assert_eq!(QPhi::from_pair(0, -1).floor(), BigInt::from(-2));
        assert_eq!(QPhi::from_int(5).floor(), BigInt::from(5));
    }

    #[test]
    fn inverse_roundtrip() {
        let x = QPhi::new(rat(3, 7), rat(-2, 5));
        let prod = x.mul_ref(&x.inverse());
        assert_eq!(prod, QPhi::one());
    }
}
