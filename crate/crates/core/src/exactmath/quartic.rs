//! The coordinate ring of the construction: numbers `(a + b*phi) + (c + d*phi)*xi`
//! where xi = exp(i*pi/3), so xi^2 = xi - 1. The plane is identified with the
//! complex numbers and every vertex, edge endpoint and lattice vector lives in
//! this ring.
//!
//! Real and imaginary parts decompose over Q(phi):
//!   Re = (a + b*phi) + (c + d*phi)/2,  Im = (c + d*phi) * sqrt(3)/2,
//! so orientation tests reduce to exact signs in Q(phi). Quantities that mix
//! sqrt 3 (areas, imaginary parts as numbers) live in [`RealQuartic`].

use super::qphi::{QPhi, Sign};
use num_bigint::BigInt;
use num_rational::BigRational;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Element of Z[phi, xi] / Q(phi, xi): `x + y*xi` with `x`, `y` in Q(phi).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Quartic {
    pub x: QPhi,
    pub y: QPhi,
}

impl Quartic {
    pub fn new(x: QPhi, y: QPhi) -> Quartic {
        Quartic { x, y }
    }

    /// From the coefficient quadruple `(a + b*phi) + (c + d*phi)*xi`.
    pub fn from_coeffs(a: BigRational, b: BigRational, c: BigRational, d: BigRational) -> Quartic {
        Quartic::new(QPhi::new(a, b), QPhi::new(c, d))
    }

    /// Machine-integer quadruple.
    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Quartic {
        Quartic::new(QPhi::from_pair(a, b), QPhi::from_pair(c, d))
    }

    pub fn coeffs(&self) -> [BigRational; 4] {
        [
            self.x.a.clone(),
            self.x.b.clone(),
            self.y.a.clone(),
            self.y.b.clone(),
        ]
    }

    pub fn zero() -> Quartic {
        Quartic::new(QPhi::zero(), QPhi::zero())
    }

    pub fn one() -> Quartic {
        Quartic::new(QPhi::one(), QPhi::zero())
    }

    pub fn xi() -> Quartic {
        Quartic::new(QPhi::zero(), QPhi::one())
    }

    pub fn phi() -> Quartic {
        Quartic::new(QPhi::phi(), QPhi::zero())
    }

    /// xi^k for any integer k.
    pub fn xi_pow(k: i64) -> Quartic {
        // xi^0..xi^5 as integer pairs in the (1, xi) basis.
        const POWS: [(i64, i64); 6] = [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)];
        let (p, q) = POWS[k.rem_euclid(6) as usize];
        Quartic::from_ints(p, 0, q, 0)
    }

    /// Grid point `a + b*xi`.
    pub fn grid(a: i64, b: i64) -> Quartic {
        Quartic::from_ints(a, 0, b, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn add_ref(&self, o: &Quartic) -> Quartic {
        Quartic::new(self.x.add_ref(&o.x), self.y.add_ref(&o.y))
    }

    pub fn sub_ref(&self, o: &Quartic) -> Quartic {
        Quartic::new(self.x.sub_ref(&o.x), self.y.sub_ref(&o.y))
    }

    pub fn neg_ref(&self) -> Quartic {
        Quartic::new(self.x.neg_ref(), self.y.neg_ref())
    }

    /// Complex product, reduced through xi^2 = xi - 1.
    pub fn mul_ref(&self, o: &Quartic) -> Quartic {
        let yy = self.y.mul_ref(&o.y);
        let x = self.x.mul_ref(&o.x).sub_ref(&yy);
        let y = self
            .x
            .mul_ref(&o.y)
            .add_ref(&self.y.mul_ref(&o.x))
            .add_ref(&yy);
        Quartic::new(x, y)
    }

    pub fn scale(&self, r: &QPhi) -> Quartic {
        Quartic::new(self.x.mul_ref(r), self.y.mul_ref(r))
    }

    /// Complex conjugate: xi -> 1 - xi.
    pub fn conj(&self) -> Quartic {
        Quartic::new(self.x.add_ref(&self.y), self.y.neg_ref())
    }

    /// Squared modulus `x^2 + x*y + y^2`, an element of Q(phi).
    pub fn norm_sq(&self) -> QPhi {
        self.x
            .mul_ref(&self.x)
            .add_ref(&self.x.mul_ref(&self.y))
            .add_ref(&self.y.mul_ref(&self.y))
    }

    pub fn inverse(&self) -> Quartic {
        assert!(!self.is_zero(), "division by zero");
        self.conj().scale(&self.norm_sq().inverse())
    }

    pub fn div_ref(&self, o: &Quartic) -> Quartic {
        self.mul_ref(&o.inverse())
    }

    /// Twice the real part, an exact element of Q(phi).
    pub fn re2(&self) -> QPhi {
        self.x.add_ref(&self.x).add_ref(&self.y)
    }

    /// Imaginary part divided by sqrt(3)/2, an exact element of Q(phi).
    pub fn im_coeff(&self) -> QPhi {
        self.y.clone()
    }

    /// Real part as a [`RealQuartic`].
    pub fn re(&self) -> RealQuartic {
        RealQuartic::new(self.re2().scale(&half_rat()), QPhi::zero())
    }

    /// Imaginary part as a [`RealQuartic`] (`(c + d*phi) * sqrt3 / 2`).
    pub fn im(&self) -> RealQuartic {
        RealQuartic::new(QPhi::zero(), self.y.scale(&half_rat()))
    }

    /// Midpoint of two points.
    pub fn midpoint(p: &Quartic, q: &Quartic) -> Quartic {
        p.add_ref(q).scale(&half())
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        let re = self.re2().to_f64() * 0.5;
        let im = self.y.to_f64() * 0.8660254037844386;
        (re, im)
    }
}

fn half() -> QPhi {
    QPhi::from_rational(half_rat())
}

fn half_rat() -> BigRational {
    BigRational::new(BigInt::from(1), BigInt::from(2))
}

impl fmt::Debug for Quartic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}) + ({:?})*xi", self.x, self.y)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $inner:ident) => {
        impl $trait for Quartic {
            type Output = Quartic;
            fn $method(self, rhs: Quartic) -> Quartic {
                self.$inner(&rhs)
            }
        }
        impl $trait for &Quartic {
            type Output = Quartic;
            fn $method(self, rhs: &Quartic) -> Quartic {
                self.$inner(rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl Neg for Quartic {
    type Output = Quartic;
    fn neg(self) -> Quartic {
        self.neg_ref()
    }
}

/// `p + q*phi + (r + s*phi)*sqrt(3)`, the field where areas and imaginary
/// parts live. Sign determination is exact: compare `alpha^2` against
/// `3*beta^2` inside Q(phi) when the two halves disagree in sign.
#[derive(Clone, PartialEq, Eq)]
pub struct RealQuartic {
    /// Rational-phi part.
    pub alpha: QPhi,
    /// Coefficient of sqrt(3).
    pub beta: QPhi,
}

impl RealQuartic {
    pub fn new(alpha: QPhi, beta: QPhi) -> RealQuartic {
        RealQuartic { alpha, beta }
    }

    pub fn zero() -> RealQuartic {
        RealQuartic::new(QPhi::zero(), QPhi::zero())
    }

    pub fn from_qphi(alpha: QPhi) -> RealQuartic {
        RealQuartic::new(alpha, QPhi::zero())
    }

    pub fn sqrt3_times(beta: QPhi) -> RealQuartic {
        RealQuartic::new(QPhi::zero(), beta)
    }

    pub fn coeffs(&self) -> [BigRational; 4] {
        [
            self.alpha.a.clone(),
            self.alpha.b.clone(),
            self.beta.a.clone(),
            self.beta.b.clone(),
        ]
    }

    pub fn is_zero(&self) -> bool {
        self.alpha.is_zero() && self.beta.is_zero()
    }

    pub fn add_ref(&self, o: &RealQuartic) -> RealQuartic {
        RealQuartic::new(self.alpha.add_ref(&o.alpha), self.beta.add_ref(&o.beta))
    }

    pub fn sub_ref(&self, o: &RealQuartic) -> RealQuartic {
        RealQuartic::new(self.alpha.sub_ref(&o.alpha), self.beta.sub_ref(&o.beta))
    }

    pub fn neg_ref(&self) -> RealQuartic {
        RealQuartic::new(self.alpha.neg_ref(), self.beta.neg_ref())
    }

    pub fn mul_ref(&self, o: &RealQuartic) -> RealQuartic {
        let three = QPhi::from_int(3);
        RealQuartic::new(
            self.alpha
                .mul_ref(&o.alpha)
                .add_ref(&three.mul_ref(&self.beta.mul_ref(&o.beta))),
            self.alpha
                .mul_ref(&o.beta)
                .add_ref(&self.beta.mul_ref(&o.alpha)),
        )
    }

    pub fn scale(&self, r: &QPhi) -> RealQuartic {
        RealQuartic::new(self.alpha.mul_ref(r), self.beta.mul_ref(r))
    }

    /// Exact sign. When the Q(phi) part and the sqrt(3) part disagree,
    /// squaring inside Q(phi) settles the comparison; Q(phi) signs then
    /// resolve through the minimal polynomial of phi. No floating point.
    pub fn sign(&self) -> Sign {
        let sa = self.alpha.sign();
        let sb = self.beta.sign();
        match (sa, sb) {
            (s, Sign::Zero) => s,
            (Sign::Zero, s) => s,
            (Sign::Positive, Sign::Positive) => Sign::Positive,
            (Sign::Negative, Sign::Negative) => Sign::Negative,
            (Sign::Positive, Sign::Negative) | (Sign::Negative, Sign::Positive) => {
                // alpha + beta*sqrt3 ~ 0 iff alpha^2 ~ 3*beta^2 (sides swap
                // with the sign of alpha).
                let a2 = self.alpha.mul_ref(&self.alpha);
                let b23 = self.beta.mul_ref(&self.beta).mul_ref(&QPhi::from_int(3));
                let diff = a2.sub_ref(&b23).sign();
                if sa == Sign::Positive {
                    diff
                } else {
                    diff.flip()
                }
            }
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.alpha.to_f64() + self.beta.to_f64() * 1.7320508075688772
    }
}

impl fmt::Debug for RealQuartic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}) + ({:?})*sqrt3", self.alpha, self.beta)
    }
}

impl fmt::Display for RealQuartic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+({})sqrt3", self.alpha, self.beta)
    }
}

/// Orientation predicate: sign of the cross product of `w1` and `w2` as
/// plane vectors (positive when `w2` lies counterclockwise from `w1`).
pub fn cross_sign(w1: &Quartic, w2: &Quartic) -> Sign {
    // Im(conj(w1)*w2) is proportional to X1*Y2 - X2*Y1 with X = 2*Re,
    // Y = (2/sqrt3)*Im, all inside Q(phi).
    let x1 = w1.re2();
    let y1 = w1.im_coeff();
    let x2 = w2.re2();
    let y2 = w2.im_coeff();
    x1.mul_ref(&y2).sub_ref(&x2.mul_ref(&y1)).sign()
}

/// Orientation of the triangle (p, q, r).
pub fn orient(p: &Quartic, q: &Quartic, r: &Quartic) -> Sign {
    cross_sign(&q.sub_ref(p), &r.sub_ref(p))
}

/// Twice the signed area of a polygon, as an exact [`RealQuartic`]
/// (counterclockwise positive).
pub fn polygon_area_twice(vertices: &[Quartic]) -> RealQuartic {
    // cross(w1, w2) in true area units is (sqrt3/4) * (X1*Y2 - X2*Y1).
    let mut acc = QPhi::zero();
    let n = vertices.len();
    for i in 0..n {
        let p = &vertices[i];
        let q = &vertices[(i + 1) % n];
        acc = acc.add_ref(
            &p.re2()
                .mul_ref(&q.im_coeff())
                .sub_ref(&q.re2().mul_ref(&p.im_coeff())),
        );
    }
    let quarter = QPhi::from_rational(BigRational::new(BigInt::from(1), BigInt::from(4)));
    RealQuartic::sqrt3_times(acc.mul_ref(&quarter))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn xi_relations() {
        let xi = Quartic::xi();
        assert_eq!(xi.mul_ref(&xi), Quartic::from_ints(-1, 0, 1, 0));
        let mut p = Quartic::one();
        for _ in 0..6 {
            p = p.mul_ref(&xi);
        }
        assert_eq!(p, Quartic::one());
        assert_eq!(Quartic::xi_pow(6), Quartic::one());
        assert_eq!(Quartic::xi_pow(-1), Quartic::xi_pow(5));
    }

    #[test]
    fn conjugation_and_norm() {
        let w = Quartic::from_ints(1, 2, -3, 1);
        let n = w.mul_ref(&w.conj());
        assert!(n.y.is_zero());
        assert_eq!(n.x, w.norm_sq());
        assert_eq!(w.norm_sq().sign(), Sign::Positive);
    }

    #[test]
    fn real_quartic_sign_cases() {
        // phi^2 + phi*sqrt3 - 2*sqrt3 - 1 = phi + (phi - 2)*sqrt3
        // = 1.618... + (-0.382)*1.732 = 0.956 > 0
        let x = RealQuartic::new(QPhi::from_pair(0, 1), QPhi::from_pair(-2, 1));
        assert_eq!(x.sign(), Sign::Positive);
        // sqrt3 - phi - 0.2 > 0 ? sqrt3 = 1.732, phi + 0.2 = 1.818 -> negative
        let y = RealQuartic::new(
            QPhi::new(
                BigRational::new(BigInt::from(-1), BigInt::from(5)),
                BigRational::from_integer(BigInt::from(-1)),
            ),
            QPhi::one(),
        );
        assert_eq!(y.sign(), Sign::Negative);
        assert_eq!(RealQuartic::zero().sign(), Sign::Zero);
    }

    #[test]
    fn orientation_of_basis() {
        // xi is counterclockwise from 1.
        assert_eq!(cross_sign(&Quartic::one(), &Quartic::xi()), Sign::Positive);
        assert_eq!(cross_sign(&Quartic::xi(), &Quartic::one()), Sign::Negative);
    }

    #[test]
    fn unit_triangle_area() {
        // Triangle (0, 1, xi): area sqrt3/4.
        let a2 = polygon_area_twice(&[Quartic::zero(), Quartic::one(), Quartic::xi()]);
        assert_eq!(
            a2,
            RealQuartic::sqrt3_times(QPhi::from_rational(BigRational::new(
                BigInt::from(1),
                BigInt::from(2)
            )))
        );
    }
}
