//! Truncated power series in `q` with exact integer coefficients.

use std::ops::Mul;

/// `Σ c_i q^i` for `i <= degree`; every operation drops terms past the
/// truncation degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesPoly {
    coeffs: Vec<i128>,
}

impl SeriesPoly {
    pub fn zero(degree: usize) -> Self {
        Self { coeffs: vec![0; degree + 1] }
    }

    pub fn one(degree: usize) -> Self {
        Self::monomial(degree, 0, 1)
    }

    /// `c q^e`, or zero when `e` exceeds the degree.
    pub fn monomial(degree: usize, exponent: usize, c: i128) -> Self {
        let mut s = Self::zero(degree);
        if exponent <= degree {
            s.coeffs[exponent] = c;
        }
        s
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> i128 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn coefficients(&self) -> &[i128] {
        &self.coeffs
    }

    /// In-place multiplication by `1 + c q^e`.
    pub fn mul_binomial(&mut self, c: i128, e: usize) {
        if e == 0 {
            self.coeffs.iter_mut().for_each(|x| *x *= 1 + c);
            return;
        }
        for i in (e..self.coeffs.len()).rev() {
            self.coeffs[i] += c * self.coeffs[i - e];
        }
    }

    /// In-place multiplication by `1 / (1 - q^e)`, `e >= 1`.
    pub fn div_one_minus(&mut self, e: usize) {
        assert!(e >= 1, "1/(1 - q^0) is not a power series");
        for i in e..self.coeffs.len() {
            self.coeffs[i] += self.coeffs[i - e];
        }
    }

    /// Multiplication by `q^e`.
    pub fn shift(&mut self, e: usize) {
        let n = self.coeffs.len();
        if e >= n {
            self.coeffs.iter_mut().for_each(|x| *x = 0);
            return;
        }
        self.coeffs.copy_within(0..n - e, e);
        self.coeffs[..e].iter_mut().for_each(|x| *x = 0);
    }
}

impl Mul for &SeriesPoly {
    type Output = SeriesPoly;

    fn mul(self, rhs: &SeriesPoly) -> SeriesPoly {
        let degree = self.degree().min(rhs.degree());
        let mut out = SeriesPoly::zero(degree);
        for (i, &a) in self.coeffs.iter().enumerate().take(degree + 1) {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate().take(degree + 1 - i) {
                out.coeffs[i + j] += a * b;
            }
        }
        out
    }
}
