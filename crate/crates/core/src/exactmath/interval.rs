//! Certified interval evaluation of ring elements.
//!
//! Intervals carry exact rational endpoints, so containment is a theorem,
//! not a rounding convention. Square roots are bracketed by Newton
//! iterations from above together with the conjugate quotient from below,
//! with endpoints truncated to dyadic rationals of bounded size.

use super::qphi::QPhi;
use super::quartic::Quartic;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Closed rational interval `[lo, hi]`.
#[derive(Clone, Debug, PartialEq)]
pub struct RatInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RatInterval {
    pub fn new(lo: BigRational, hi: BigRational) -> RatInterval {
        debug_assert!(lo <= hi);
        RatInterval { lo, hi }
    }

    pub fn point(v: BigRational) -> RatInterval {
        RatInterval {
            lo: v.clone(),
            hi: v,
        }
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, v: &BigRational) -> bool {
        &self.lo <= v && v <= &self.hi
    }

    pub fn add(&self, o: &RatInterval) -> RatInterval {
        RatInterval::new(&self.lo + &o.lo, &self.hi + &o.hi)
    }

    pub fn sub(&self, o: &RatInterval) -> RatInterval {
        RatInterval::new(&self.lo - &o.hi, &self.hi - &o.lo)
    }

    pub fn mul(&self, o: &RatInterval) -> RatInterval {
        let cands = [
            &self.lo * &o.lo,
            &self.lo * &o.hi,
            &self.hi * &o.lo,
            &self.hi * &o.hi,
        ];
        let mut lo = cands[0].clone();
        let mut hi = cands[0].clone();
        for c in &cands[1..] {
            if c < &lo {
                lo = c.clone();
            }
            if c > &hi {
                hi = c.clone();
            }
        }
        RatInterval::new(lo, hi)
    }

    pub fn scale(&self, r: &BigRational) -> RatInterval {
        if r.is_negative() {
            RatInterval::new(&self.hi * r, &self.lo * r)
        } else {
            RatInterval::new(&self.lo * r, &self.hi * r)
        }
    }

    /// Interval strictly excludes zero?
    pub fn excludes_zero(&self) -> bool {
        self.lo.is_positive() || self.hi.is_negative()
    }

    /// Upper bound on |x| over the interval.
    pub fn abs_upper(&self) -> BigRational {
        let a = self.lo.abs();
        let b = self.hi.abs();
        if a > b {
            a
        } else {
            b
        }
    }

    pub fn mid_f64(&self) -> f64 {
        let mid = (&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2));
        mid.to_f64().unwrap_or(0.0)
    }
}

/// Round `r` down to a dyadic rational with denominator `2^bits`.
fn dyadic_floor(r: &BigRational, bits: u32) -> BigRational {
    let scale = BigInt::one() << bits;
    let scaled = r * BigRational::from_integer(scale.clone());
    BigRational::new(scaled.floor().to_integer(), scale)
}

fn dyadic_ceil(r: &BigRational, bits: u32) -> BigRational {
    let scale = BigInt::one() << bits;
    let scaled = r * BigRational::from_integer(scale.clone());
    BigRational::new(scaled.ceil().to_integer(), scale)
}

/// Certified bracket of sqrt(n) with width at most 2^-bits.
pub fn sqrt_bracket(n: u32, bits: u32) -> RatInterval {
    let nn = BigRational::from_integer(BigInt::from(n));
    // Newton from above converges monotonically to sqrt(n).
    let mut hi = if n >= 4 {
        BigRational::from_integer(BigInt::from(n / 2 + 1))
    } else {
        BigRational::from_integer(BigInt::from(2))
    };
    let two = BigRational::from_integer(BigInt::from(2));
    let tol = BigRational::new(BigInt::one(), BigInt::one() << bits);
    loop {
        // x -> (x + n/x)/2 stays above sqrt(n); truncate upward to keep
        // denominators dyadic.
        let next = dyadic_ceil(&((&hi + &nn / &hi) / &two), bits + 8);
        let lo = dyadic_floor(&(&nn / &next), bits + 8);
        if &next - &lo <= tol {
            return RatInterval::new(lo, next);
        }
        hi = next;
    }
}

/// Bracket of phi = (1 + sqrt5)/2 with width at most 2^-bits.
pub fn phi_bracket(bits: u32) -> RatInterval {
    let s5 = sqrt_bracket(5, bits + 2);
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    RatInterval::new(
        (&s5.lo + BigRational::one()) * &half,
        (&s5.hi + BigRational::one()) * &half,
    )
}

/// Evaluate `a + b*phi` within certified bounds of width <= 2^-bits * (1+|a|+|b|)-ish.
pub fn qphi_bracket(v: &QPhi, bits: u32) -> RatInterval {
    let phi = phi_bracket(bits);
    RatInterval::point(v.a.clone()).add(&phi.scale(&v.b))
}

/// Certified axis-aligned rectangle containing a complex value.
#[derive(Clone, Debug)]
pub struct ComplexBox {
    pub re: RatInterval,
    pub im: RatInterval,
}

impl ComplexBox {
    pub fn width(&self) -> BigRational {
        let wr = self.re.width();
        let wi = self.im.width();
        if wr > wi {
            wr
        } else {
            wi
        }
    }
}

/// Certified rectangle for the complex embedding of `z`, of width at most
/// `2^(1-precision) * (1 + |z|)`. Requires `precision >= 32`.
pub fn embed(z: &Quartic, precision: u32) -> ComplexBox {
    assert!(precision >= 32, "embedding precision must be at least 32 bits");
    let mut bits = precision + 8;
    loop {
        let rect = embed_at(z, bits);
        // target width: 2^(1-precision) * (1 + |z|); use the certified
        // lower bound 1 + max(|re|, |im|) >= something <= 1+|z|; any
        // sound lower bound of the target keeps the guarantee.
        let one = BigRational::one();
        let mag_lower = {
            // max(|re_lo|,|re_hi|,|im_lo|,|im_hi|) minus widths is a lower
            // bound for |z|; clamp at 0.
            let m = {
                let a = rect.re.abs_upper() - rect.re.width();
                let b = rect.im.abs_upper() - rect.im.width();
                if a > b {
                    a
                } else {
                    b
                }
            };
            if m.is_negative() {
                BigRational::zero()
            } else {
                m
            }
        };
        let target = BigRational::new(BigInt::one(), BigInt::one() << (precision - 1))
            * (one + mag_lower);
        if rect.width() <= target {
            return rect;
        }
        bits *= 2;
    }
}

fn embed_at(z: &Quartic, bits: u32) -> ComplexBox {
    let phi = phi_bracket(bits);
    let s3 = sqrt_bracket(3, bits);
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    // Re = a + b*phi + (c + d*phi)/2
    let xpart = RatInterval::point(z.x.a.clone()).add(&phi.scale(&z.x.b));
    let ypart = RatInterval::point(z.y.a.clone()).add(&phi.scale(&z.y.b));
    let re = xpart.add(&ypart.scale(&half));
    // Im = (c + d*phi) * sqrt3/2
    let im = ypart.mul(&s3).scale(&half);
    ComplexBox { re, im }
}
