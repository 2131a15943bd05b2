//! Dense bivariate polynomials, stored as a vector of rows: row i is the
//! coefficient of x^i, itself a univariate polynomial in the second
//! variable.  The second variable is written y here; in the iterated
//! resultants it plays the role of x_n.

use num_bigint::BigInt;

use crate::quadext::QuadExt;
use crate::ring::{Gf2, Ring};
use crate::unipoly::UniPoly;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BiPoly<R> {
    rows: Vec<UniPoly<R>>,
}

impl<R: Ring> BiPoly<R> {
    pub fn new(mut rows: Vec<UniPoly<R>>) -> Self {
        while rows.last().is_some_and(|r| r.is_zero()) {
            rows.pop();
        }
        BiPoly { rows }
    }

    pub fn zero() -> Self {
        BiPoly { rows: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    /// Build from an i64 matrix: entry [i][j] is the coefficient of x^i y^j.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::new(rows.iter().map(|r| UniPoly::from_i64_slice(r)).collect())
    }

    /// Reinterpret a nested polynomial (outer variable y, inner variable x)
    /// as a bivariate polynomial.
    pub fn from_nested_yx(p: &UniPoly<UniPoly<R>>) -> Self {
        let mut rows: Vec<Vec<R>> = Vec::new();
        for (j, cj) in p.coeffs().iter().enumerate() {
            for (i, c) in cj.coeffs().iter().enumerate() {
                if rows.len() <= i {
                    rows.resize(i + 1, Vec::new());
                }
                let row = &mut rows[i];
                if row.len() <= j {
                    row.resize(j + 1, R::zero());
                }
                row[j] = c.clone();
            }
        }
        Self::new(rows.into_iter().map(UniPoly::new).collect())
    }

    /// The nested form with outer variable y and inner variable x.
    pub fn to_nested_yx(&self) -> UniPoly<UniPoly<R>> {
        let dy = self.deg_y();
        let mut coeffs: Vec<Vec<R>> = vec![Vec::new(); dy + 1];
        for (i, row) in self.rows.iter().enumerate() {
            for (j, c) in row.coeffs().iter().enumerate() {
                let col = &mut coeffs[j];
                if col.len() <= i {
                    col.resize(i + 1, R::zero());
                }
                col[i] = c.clone();
            }
        }
        UniPoly::new(coeffs.into_iter().map(UniPoly::new).collect())
    }

    pub fn coeff(&self, i: usize, j: usize) -> R {
        self.rows
            .get(i)
            .map(|r| r.coeff(j))
            .unwrap_or_else(R::zero)
    }

    pub fn rows(&self) -> &[UniPoly<R>] {
        &self.rows
    }

    pub fn deg_x(&self) -> usize {
        self.rows.len().saturating_sub(1)
    }

    pub fn deg_y(&self) -> usize {
        self.rows.iter().map(|r| r.deg_or_zero()).max().unwrap_or(0)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.rows.len().max(rhs.rows.len());
        let zero = UniPoly::zero();
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.rows.get(i).unwrap_or(&zero);
            let b = rhs.rows.get(i).unwrap_or(&zero);
            out.push(a.add(b));
        }
        Self::new(out)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        BiPoly {
            rows: self.rows.iter().map(|r| r.neg()).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![UniPoly::zero(); self.rows.len() + rhs.rows.len() - 1];
        for (i, a) in self.rows.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.rows.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::new(self.rows.iter().map(|r| r.scale(c)).collect())
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S + Copy) -> BiPoly<S> {
        BiPoly::new(self.rows.iter().map(|r| r.map(f)).collect())
    }

    /// Swap the two variables: f(x,y) -> f(y,x).
    pub fn swap_vars(&self) -> Self {
        let dx = self.deg_x();
        let dy = self.deg_y();
        let mut rows = vec![vec![R::zero(); dx + 1]; dy + 1];
        for i in 0..=dx {
            for (j, row) in rows.iter_mut().enumerate() {
                row[i] = self.coeff(i, j);
            }
        }
        Self::new(rows.into_iter().map(UniPoly::new).collect())
    }

    /// Substitute x -> x^2, y -> y^2.
    pub fn square_variables(&self) -> Self {
        let mut rows = Vec::with_capacity(self.rows.len() * 2);
        for r in &self.rows {
            rows.push(r.stretch(2));
            rows.push(UniPoly::zero());
        }
        Self::new(rows)
    }

    /// Substitute y -> -y.
    pub fn negate_y(&self) -> Self {
        Self::new(self.rows.iter().map(|r| r.negate_variable()).collect())
    }

    pub fn eval(&self, x: &R, y: &R) -> R {
        let mut acc = R::zero();
        for row in self.rows.iter().rev() {
            acc = acc.mul(x).add(&row.eval(y));
        }
        acc
    }

    /// Homogenized substitution of fractions in both variables:
    /// f(nx/dx, ny/dy) · dx^(deg_x f) · dy^(deg_y f).
    ///
    /// `nx, dx` are polynomials in x; `ny, dy` polynomials in y.
    pub fn compose_fraction_xy(
        &self,
        nx: &UniPoly<R>,
        dx: &UniPoly<R>,
        ny: &UniPoly<R>,
        dy: &UniPoly<R>,
    ) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let dxdeg = self.deg_x();
        let dydeg = self.deg_y();
        let pows = |n: &UniPoly<R>, d: &UniPoly<R>, top: usize| -> Vec<UniPoly<R>> {
            let mut np = Vec::with_capacity(top + 1);
            let mut p = UniPoly::one();
            for _ in 0..=top {
                np.push(p.clone());
                p = p.mul(n);
            }
            let mut dp = Vec::with_capacity(top + 1);
            let mut p = UniPoly::one();
            for _ in 0..=top {
                dp.push(p.clone());
                p = p.mul(d);
            }
            (0..=top).map(|i| np[i].mul(&dp[top - i])).collect()
        };
        let xparts = pows(nx, dx, dxdeg);
        let yparts = pows(ny, dy, dydeg);
        let mut acc = Self::zero();
        for (i, row) in self.rows.iter().enumerate() {
            for (j, c) in row.coeffs().iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                // outer product xparts[i] (in x) with yparts[j] (in y), scaled by c
                let ypart = yparts[j].scale(c);
                let term = Self::new(
                    xparts[i]
                        .coeffs()
                        .iter()
                        .map(|xa| ypart.scale(xa))
                        .collect(),
                );
                acc = acc.add(&term);
            }
        }
        acc
    }
}

impl BiPoly<BigInt> {
    pub fn to_quadext(&self) -> BiPoly<QuadExt> {
        self.map(QuadExt::from_bigint)
    }

    pub fn reduce_mod2(&self) -> BiPoly<Gf2> {
        self.map(Gf2::from_bigint)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type BZ = BiPoly<BigInt>;

    fn sample() -> BZ {
        // 1 + x y + 3 x^2 y^2 - y
        BZ::from_i64_rows(&[&[1, -1], &[0, 1], &[0, 0, 3]])
    }

    #[test]
    fn degrees_and_coeffs() {
        let p = sample();
        assert_eq!(p.deg_x(), 2);
        assert_eq!(p.deg_y(), 2);
        assert_eq!(p.coeff(1, 1), BigInt::from(1));
        assert_eq!(p.coeff(0, 1), BigInt::from(-1));
        assert_eq!(p.coeff(2, 1), BigInt::from(0));
    }

    #[test]
    fn swap_and_eval() {
        let p = sample();
        let q = p.swap_vars();
        let (a, b) = (BigInt::from(5), BigInt::from(-3));
        assert_eq!(p.eval(&a, &b), q.eval(&b, &a));
    }

    #[test]
    fn nested_round_trip() {
        let p = sample();
        assert_eq!(BZ::from_nested_yx(&p.to_nested_yx()), p);
    }

    #[test]
    fn mul_matches_eval() {
        let p = sample();
        let q = BZ::from_i64_rows(&[&[2, 1], &[1]]);
        let prod = p.mul(&q);
        let (a, b) = (BigInt::from(2), BigInt::from(7));
        assert_eq!(prod.eval(&a, &b), p.eval(&a, &b) * q.eval(&a, &b));
    }

    #[test]
    fn fraction_substitution_homogenizes() {
        // f(x,y) = x y; substitute x -> 1/x, y -> y, homogenized by x^1:
        // result should be y.
        let f = BZ::from_i64_rows(&[&[0], &[0, 1]]);
        let one = UniPoly::one();
        let x = UniPoly::x();
        let comp = f.compose_fraction_xy(&one, &x, &UniPoly::x(), &one);
        assert_eq!(comp, BZ::from_i64_rows(&[&[0, 1]]));
    }
}
