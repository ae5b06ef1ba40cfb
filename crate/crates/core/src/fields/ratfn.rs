//! Reduced fractions of F_p[t] polynomials: the rational function field F_p(t).

use std::fmt;

use super::fp;
use super::fppoly::FpPoly;

/// A rational function `num/den` with `gcd(num, den) = 1` and `den` monic.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFn {
    num: FpPoly,
    den: FpPoly,
}

impl RatFn {
    /// Builds and normalizes `num/den`; `None` when `den` is zero.
    pub fn new(num: FpPoly, den: FpPoly) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        Some(Self::reduced(num, den))
    }

    fn reduced(num: FpPoly, den: FpPoly) -> Self {
        let p = num.p();
        if num.is_zero() {
            return RatFn { num, den: FpPoly::one(p) };
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() { (num, den) } else { (num.divrem(&g).0, den.divrem(&g).0) };
        if !den.is_monic() {
            let c = fp::inv(den.leading(), p);
            num = num.scale(c);
            den = den.scale(c);
        }
        RatFn { num, den }
    }

    pub fn from_poly(num: FpPoly) -> Self {
        let p = num.p();
        RatFn { num, den: FpPoly::one(p) }
    }

    pub fn zero(p: u32) -> Self {
        RatFn::from_poly(FpPoly::zero(p))
    }

    pub fn one(p: u32) -> Self {
        RatFn::from_poly(FpPoly::one(p))
    }

    pub fn p(&self) -> u32 {
        self.num.p()
    }

    pub fn num(&self) -> &FpPoly {
        &self.num
    }

    pub fn den(&self) -> &FpPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn add(&self, other: &RatFn) -> RatFn {
        if self.den == other.den {
            return RatFn::reduced(self.num.add(&other.num), self.den.clone());
        }
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        RatFn::reduced(num, self.den.mul(&other.den))
    }

    pub fn neg(&self) -> RatFn {
        RatFn { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, other: &RatFn) -> RatFn {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RatFn) -> RatFn {
        if self.is_zero() || other.is_zero() {
            return RatFn::zero(self.p());
        }
        // cross-cancel first to keep the operands small
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let (n1, d2) = (self.num.divrem(&g1).0, other.den.divrem(&g1).0);
        let (n2, d1) = (other.num.divrem(&g2).0, self.den.divrem(&g2).0);
        let num = n1.mul(&n2);
        let den = d1.mul(&d2);
        let c = fp::inv(den.leading(), self.p());
        RatFn { num: num.scale(c), den: den.scale(c) }
    }

    pub fn inv(&self) -> Option<RatFn> {
        if self.is_zero() {
            return None;
        }
        Some(RatFn::reduced(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &RatFn) -> Option<RatFn> {
        Some(self.mul(&other.inv()?))
    }

    pub fn frobenius(&self) -> RatFn {
        RatFn { num: self.num.frobenius(), den: self.den.frobenius() }
    }

    /// Present iff numerator and denominator are p-th powers in F_p[t].
    pub fn pth_root(&self) -> Option<RatFn> {
        Some(RatFn { num: self.num.pth_root()?, den: self.den.pth_root()? })
    }

    pub fn fmt_var(&self, var: &str) -> String {
        let wrap = |f: &FpPoly| {
            let s = f.fmt_var(var);
            if f.term_count() > 1 || (f.term_count() == 1 && f.leading() != 1 && !f.is_constant()) {
                format!("({s})")
            } else {
                s
            }
        };
        if self.den.is_one() {
            self.num.fmt_var(var)
        } else {
            format!("{}/{}", wrap(&self.num), wrap(&self.den))
        }
    }
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_var("t"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ratfn(p: u32, n: &[u32], d: &[u32]) -> RatFn {
        RatFn::new(FpPoly::new(p, n.to_vec()), FpPoly::new(p, d.to_vec())).unwrap()
    }

    #[test]
    fn sum_of_simple_fractions() {
        // 1/t + 1/(t+1) = 1/(t^2+t) over F_2: (t+1+t)/(t(t+1))
        let sum = ratfn(2, &[1], &[0, 1]).add(&ratfn(2, &[1], &[1, 1]));
        assert_eq!(sum, ratfn(2, &[1], &[0, 1, 1]));
        assert_eq!(sum.to_string(), "1/(t^2+t)");
    }

    #[test]
    fn normal_form_is_reduced_and_monic() {
        let f = ratfn(3, &[0, 2, 2], &[0, 2]);
        assert_eq!(f, ratfn(3, &[1, 1], &[1]));
        assert!(RatFn::new(FpPoly::one(3), FpPoly::zero(3)).is_none());
    }

    #[test]
    fn roots() {
        assert!(ratfn(2, &[0, 1], &[1]).pth_root().is_none());
        assert_eq!(ratfn(2, &[0, 0, 1], &[1, 0, 1]).pth_root(), Some(ratfn(2, &[0, 1], &[1, 1])));
    }
}
