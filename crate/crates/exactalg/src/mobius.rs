//! Fractional linear maps over Q(√2), acting as x -> (px+q)/(rx+s).
//!
//! Composition corresponds to 2x2 matrix product, and two maps are the same
//! transformation exactly when their matrices are proportional.

use crate::quadext::QuadExt;
use crate::ring::{IntegralDomain, Ring};
use crate::unipoly::UniPoly;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MobiusMap {
    pub p: QuadExt,
    pub q: QuadExt,
    pub r: QuadExt,
    pub s: QuadExt,
}

impl MobiusMap {
    /// Panics if the determinant ps - qr vanishes.
    pub fn new(p: QuadExt, q: QuadExt, r: QuadExt, s: QuadExt) -> Self {
        let m = MobiusMap { p, q, r, s };
        assert!(!m.det().is_zero(), "mobius map must be invertible");
        m
    }

    pub fn from_ints(p: (i64, i64), q: (i64, i64), r: (i64, i64), s: (i64, i64)) -> Self {
        Self::new(
            QuadExt::from_ints(p.0, p.1),
            QuadExt::from_ints(q.0, q.1),
            QuadExt::from_ints(r.0, r.1),
            QuadExt::from_ints(s.0, s.1),
        )
    }

    pub fn identity() -> Self {
        Self::from_ints((1, 0), (0, 0), (0, 0), (1, 0))
    }

    /// A(x) = (σx + 1)/(x - σ)
    pub fn a_map() -> Self {
        Self::new(
            QuadExt::sigma(),
            QuadExt::one(),
            QuadExt::one(),
            QuadExt::sigma().neg(),
        )
    }

    /// Ā(x) = (-x + σ)/(σx + 1)
    pub fn a_bar_map() -> Self {
        Self::new(
            QuadExt::one().neg(),
            QuadExt::sigma(),
            QuadExt::sigma(),
            QuadExt::one(),
        )
    }

    /// B(x) = (δx + 1)/(x - δ)
    pub fn b_map() -> Self {
        Self::new(
            QuadExt::delta(),
            QuadExt::one(),
            QuadExt::one(),
            QuadExt::delta().neg(),
        )
    }

    /// B̄(x) = B(-1/x) = (-σx + 1)/(x + σ)
    pub fn b_bar_map() -> Self {
        Self::new(
            QuadExt::sigma().neg(),
            QuadExt::one(),
            QuadExt::one(),
            QuadExt::sigma(),
        )
    }

    /// t(x) = (x - σ²)/(σ²x - 1)
    pub fn t_map() -> Self {
        let s2 = QuadExt::sigma().mul(&QuadExt::sigma());
        Self::new(
            QuadExt::one(),
            s2.neg(),
            s2,
            QuadExt::one().neg(),
        )
    }

    /// ρ(x) = -1/x
    pub fn rho_map() -> Self {
        Self::from_ints((0, 0), (-1, 0), (1, 0), (0, 0))
    }

    pub fn det(&self) -> QuadExt {
        self.p.mul(&self.s).sub(&self.q.mul(&self.r))
    }

    /// self ∘ other as transformations, i.e. x -> self(other(x)).
    pub fn compose(&self, other: &Self) -> Self {
        MobiusMap {
            p: self.p.mul(&other.p).add(&self.q.mul(&other.r)),
            q: self.p.mul(&other.q).add(&self.q.mul(&other.s)),
            r: self.r.mul(&other.p).add(&self.s.mul(&other.r)),
            s: self.r.mul(&other.q).add(&self.s.mul(&other.s)),
        }
    }

    pub fn inverse(&self) -> Self {
        MobiusMap {
            p: self.s.clone(),
            q: self.q.neg(),
            r: self.r.neg(),
            s: self.p.clone(),
        }
    }

    /// Numerator px + q as a polynomial.
    pub fn numerator(&self) -> UniPoly<QuadExt> {
        UniPoly::new(vec![self.q.clone(), self.p.clone()])
    }

    /// Denominator rx + s as a polynomial.
    pub fn denominator(&self) -> UniPoly<QuadExt> {
        UniPoly::new(vec![self.s.clone(), self.r.clone()])
    }

    /// Apply to a field element; `None` on the pole.
    pub fn apply(&self, x: &QuadExt) -> Option<QuadExt> {
        let den = self.r.mul(x).add(&self.s);
        let num = self.p.mul(x).add(&self.q);
        num.exact_div(&den)
    }

    /// Same transformation, i.e. proportional matrices.
    pub fn is_same_map(&self, other: &Self) -> bool {
        let a = [&self.p, &self.q, &self.r, &self.s];
        let b = [&other.p, &other.q, &other.r, &other.s];
        for i in 0..4 {
            for j in (i + 1)..4 {
                if a[i].mul(b[j]) != a[j].mul(b[i]) {
                    return false;
                }
            }
        }
        true
    }
}

/// True when the set of maps is closed under composition.
pub fn group_closed(maps: &[MobiusMap]) -> bool {
    for m1 in maps {
        for m2 in maps {
            let c = m1.compose(m2);
            if !maps.iter().any(|m| m.is_same_map(&c)) {
                return false;
            }
        }
    }
    true
}
