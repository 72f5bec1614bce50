//! The translation lattice of the torus: `Lambda = <u, v>` with
//! `u = phi^2 + xi` and `v = xi*u`. Reduction modulo the lattice is exact:
//! the real coordinates of a point in the (u, v) basis live in Q(phi), where
//! floors are decidable.

use super::qphi::{QPhi, Sign};
use super::quartic::{Quartic, RealQuartic};
use num_bigint::BigInt;

#[derive(Clone, Debug)]
pub struct Lattice {
    pub u: Quartic,
    pub v: Quartic,
    det_inv: QPhi,
}

impl Default for Lattice {
    fn default() -> Self {
        Lattice::standard()
    }
}

impl Lattice {
    /// The lattice generated by `u = phi^2 + xi` and `v = xi * u`.
    pub fn standard() -> Lattice {
        let u = Quartic::from_ints(1, 1, 1, 0);
        let v = Quartic::xi().mul_ref(&u);
        Lattice::from_basis(u, v)
    }

    pub fn from_basis(u: Quartic, v: Quartic) -> Lattice {
        let det = u
            .re2()
            .mul_ref(&v.im_coeff())
            .sub_ref(&v.re2().mul_ref(&u.im_coeff()));
        assert!(det.sign() != Sign::Zero, "degenerate lattice basis");
        let det_inv = det.inverse();
        Lattice { u, v, det_inv }
    }

    /// Mirror lattice, generated by the conjugated basis.
    pub fn conj(&self) -> Lattice {
        Lattice::from_basis(self.u.conj(), self.v.conj())
    }

    /// `Im(u * conj(v))`, the (signed) covolume of the lattice.
    pub fn covolume(&self) -> RealQuartic {
        self.u.mul_ref(&self.v.conj()).im().neg_ref()
    }

    /// Real coordinates (s, t) of `z` in the basis (u, v); both lie in Q(phi).
    pub fn coordinates(&self, z: &Quartic) -> (QPhi, QPhi) {
        let xz = z.re2();
        let yz = z.im_coeff();
        let xu = self.u.re2();
        let yu = self.u.im_coeff();
        let xv = self.v.re2();
        let yv = self.v.im_coeff();
        let s = xz
            .mul_ref(&yv)
            .sub_ref(&xv.mul_ref(&yz))
            .mul_ref(&self.det_inv);
        let t = xu
            .mul_ref(&yz)
            .sub_ref(&xz.mul_ref(&yu))
            .mul_ref(&self.det_inv);
        (s, t)
    }

    /// Point `s*u + t*v` for exact coordinates.
    pub fn point(&self, s: &QPhi, t: &QPhi) -> Quartic {
        self.u.scale(s).add_ref(&self.v.scale(t))
    }

    /// Reduce `z` modulo the lattice: returns the representative with
    /// coordinates in [0, 1)^2 and the integer pair subtracted.
    pub fn reduce(&self, z: &Quartic) -> (Quartic, (BigInt, BigInt)) {
        let (s, t) = self.coordinates(z);
        let m = s.floor();
        let n = t.floor();
        let shift = self
            .u
            .scale(&QPhi::from_rational(num_rational::BigRational::from_integer(m.clone())))
            .add_ref(&self.v.scale(&QPhi::from_rational(
                num_rational::BigRational::from_integer(n.clone()),
            )));
        (z.sub_ref(&shift), (m, n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn basis_values() {
        let l = Lattice::standard();
        assert_eq!(l.u, Quartic::from_ints(1, 1, 1, 0));
        assert_eq!(l.v, Quartic::from_ints(-1, 0, 2, 1));
    }

    #[test]
    fn covolume_identity() {
        // Im(u * conj v) = 2*phi^2*sqrt3 = (2 + 2*phi)*sqrt3
        let l = Lattice::standard();
        assert_eq!(
            l.covolume(),
            RealQuartic::sqrt3_times(QPhi::from_pair(2, 2))
        );
    }

    #[test]
    fn reduce_lattice_vectors() {
        let l = Lattice::standard();
        let (rep, (m, n)) = l.reduce(&l.u);
        assert!(rep.is_zero());
        assert_eq!((m, n), (BigInt::from(1), BigInt::from(0)));

        // 1 has coordinates ((phi+2)/(4 phi^2), -1/(4 phi^2)) in the basis,
        // so u + v + 1 reduces by u alone.
        let z = l.u.add_ref(&l.v).add_ref(&Quartic::one());
        let (rep, (m, n)) = l.reduce(&z);
        assert_eq!(rep, l.v.add_ref(&Quartic::one()));
        assert_eq!((m, n), (BigInt::from(1), BigInt::from(0)));
    }

    #[test]
    fn reduce_is_idempotent() {
        let l = Lattice::standard();
        let z = Quartic::from_ints(17, 0, 13, 0);
        let (rep, _) = l.reduce(&z);
        let (s, t) = l.coordinates(&rep);
        assert!(s.sign() != Sign::Negative && t.sign() != Sign::Negative);
        assert_eq!(s.sub_ref(&QPhi::one()).sign(), Sign::Negative);
        assert_eq!(t.sub_ref(&QPhi::one()).sign(), Sign::Negative);
        let (rep2, (m, n)) = l.reduce(&rep);
        assert_eq!(rep, rep2);
        assert!(m.is_zero() && n.is_zero());
    }
}
