use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::DenseMatrix;
use crate::error::{Error, Result};

/// Real polynomial stored by ascending powers: `coeffs[k]` multiplies `x^k`.
/// Trailing (leading-power) zeros are trimmed; the zero polynomial has no
/// coefficients.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(from = "Vec<f64>", into = "Vec<f64>")]
pub struct RealPoly {
    coeffs: Vec<f64>,
}

impl RealPoly {
    pub fn zero() -> Self {
        RealPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: f64) -> Self {
        Self::from_ascending(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::from_ascending(vec![0.0, 1.0])
    }

    pub fn from_ascending(mut coeffs: Vec<f64>) -> Self {
        while coeffs.last() == Some(&0.0) {
            coeffs.pop();
        }
        RealPoly { coeffs }
    }

    /// Coefficients from the highest power down.
    pub fn from_descending(coeffs: &[f64]) -> Self {
        Self::from_ascending(coeffs.iter().rev().copied().collect())
    }

    /// Monic polynomial `∏ (x − r)`.
    pub fn from_roots(roots: &[f64]) -> Self {
        roots
            .iter()
            .fold(Self::constant(1.0), |acc, &r| &acc * &Self::from_ascending(vec![-r, 1.0]))
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> f64 {
        self.coeffs.get(k).copied().unwrap_or(0.0)
    }

    pub fn descending(&self) -> Vec<f64> {
        self.coeffs.iter().rev().copied().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading_coefficient(&self) -> f64 {
        self.coeffs.last().copied().unwrap_or(0.0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coefficient() == 1.0
    }

    pub fn scale(&self, factor: f64) -> Self {
        Self::from_ascending(self.coeffs.iter().map(|c| c * factor).collect())
    }

    /// Horner evaluation.
    pub fn evaluate(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    /// `Σ |c_k| |x|^k`, the natural scale for the rounding error of `evaluate`.
    pub fn evaluation_scale(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x.abs() + c.abs())
    }

    /// `|p(x)| / Σ |c_k| max(1, |x|)^k`. Near `x = 0` this is an absolute
    /// residual, so a root at zero is not judged against a rounded-off `c_0`.
    pub fn relative_residual(&self, x: f64) -> f64 {
        let scale = self.evaluation_scale(x.abs().max(1.0));
        if scale == 0.0 {
            0.0
        } else {
            self.evaluate(x).abs() / scale
        }
    }

    /// Largest `|a_k − b_k| / max(1, |b_k|)` over all coefficients.
    pub fn max_relative_coefficient_error(&self, reference: &RealPoly) -> f64 {
        let len = self.coeffs.len().max(reference.coeffs.len());
        (0..len)
            .map(|k| (self.coeff(k) - reference.coeff(k)).abs() / reference.coeff(k).abs().max(1.0))
            .fold(0.0, f64::max)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(f64, f64) -> f64) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::from_ascending((0..len).map(|k| f(self.coeff(k), other.coeff(k))).collect())
    }
}

impl From<Vec<f64>> for RealPoly {
    fn from(coeffs: Vec<f64>) -> Self {
        Self::from_ascending(coeffs)
    }
}

impl From<RealPoly> for Vec<f64> {
    fn from(p: RealPoly) -> Self {
        p.coeffs
    }
}

impl Add for &RealPoly {
    type Output = RealPoly;

    fn add(self, rhs: &RealPoly) -> RealPoly {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &RealPoly {
    type Output = RealPoly;

    fn sub(self, rhs: &RealPoly) -> RealPoly {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for &RealPoly {
    type Output = RealPoly;

    fn neg(self) -> RealPoly {
        self.scale(-1.0)
    }
}

impl Mul for &RealPoly {
    type Output = RealPoly;

    fn mul(self, rhs: &RealPoly) -> RealPoly {
        if self.is_zero() || rhs.is_zero() {
            return RealPoly::zero();
        }
        let mut out = vec![0.0; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RealPoly::from_ascending(out)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for RealPoly {
            type Output = RealPoly;

            fn $method(self, rhs: RealPoly) -> RealPoly {
                (&self).$method(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl fmt::Display for RealPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0.0 {
                continue;
            }
            let sign = if c < 0.0 { "-" } else { "+" };
            if first {
                if c < 0.0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match k {
                0 => write!(f, "{a}")?,
                _ if a != 1.0 => write!(f, "{a}")?,
                _ => {}
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

/// Characteristic polynomial `det(xI − M)` by the Faddeev–LeVerrier recurrence
/// `M_k = A M_{k−1} + c_{n−k+1} I`, `c_{n−k} = −tr(A M_k) / k`.
///
/// Coefficients lose accuracy quickly with the dimension; intended for `n <= 20`.
pub fn char_poly(m: &DenseMatrix) -> Result<RealPoly> {
    if !m.is_square() {
        return Err(Error::SizeMismatch(format!(
            "characteristic polynomial of a {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    let n = m.rows();
    let mut coeffs = vec![0.0; n + 1];
    coeffs[n] = 1.0;
    let mut acc = DenseMatrix::zeros(n, n);
    for k in 1..=n {
        let mut next = m.matmul(&acc)?;
        for i in 0..n {
            next[(i, i)] += coeffs[n - k + 1];
        }
        acc = next;
        let am = m.matmul(&acc)?;
        coeffs[n - k] = -am.trace() / k as f64;
    }
    Ok(RealPoly::from_ascending(coeffs))
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;

    /// Determinant by Gaussian elimination with partial pivoting; used as an
    /// independent route to `det(xI − M)`.
    fn det(mut a: DenseMatrix) -> f64 {
        let n = a.rows();
        let mut d = 1.0;
        for col in 0..n {
            let pivot = (col..n).max_by(|&i, &j| a[(i, col)].abs().total_cmp(&a[(j, col)].abs())).unwrap();
            if a[(pivot, col)] == 0.0 {
                return 0.0;
            }
            if pivot != col {
                for j in 0..n {
                    let tmp = a[(col, j)];
                    a[(col, j)] = a[(pivot, j)];
                    a[(pivot, j)] = tmp;
                }
                d = -d;
            }
            d *= a[(col, col)];
            for i in col + 1..n {
                let f = a[(i, col)] / a[(col, col)];
                for j in col..n {
                    let v = a[(col, j)];
                    a[(i, j)] -= f * v;
                }
            }
        }
        d
    }

    #[test]
    fn arithmetic() {
        let a = RealPoly::from_ascending(vec![-1.0, 1.0]);
        let b = RealPoly::from_ascending(vec![1.0, 1.0]);
        assert_eq!(&a * &b, RealPoly::from_ascending(vec![-1.0, 0.0, 1.0]));
        assert_eq!(&a + &b, RealPoly::from_ascending(vec![0.0, 2.0]));
        assert_eq!(&a - &a, RealPoly::zero());
        assert_eq!(a.scale(0.0), RealPoly::zero());
        assert_eq!(RealPoly::zero().evaluate(3.7), 0.0);
        assert_eq!(RealPoly::from_roots(&[1.0, -1.0]), RealPoly::from_descending(&[1.0, 0.0, -1.0]));
        assert_eq!(RealPoly::from_descending(&[1.0, -2.0, 1.0]).to_string(), "x^2 - 2x + 1");
    }

    #[test]
    fn one_is_a_root_of_k2_polynomial() {
        for i in 0..=10 {
            let alpha = f64::from(i) / 10.0;
            let p = RealPoly::from_descending(&[1.0, -2.0 * alpha, 2.0 * alpha - 1.0]);
            assert!(p.evaluate(1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn char_poly_of_k2_l_alpha() {
        for i in 0..=10 {
            let alpha = f64::from(i) / 10.0;
            let m = DenseMatrix::from_rows(&[vec![alpha, alpha - 1.0], vec![alpha - 1.0, alpha]]).unwrap();
            let p = char_poly(&m).unwrap();
            // expanding det [[x - a, 1 - a], [1 - a, x - a]] by hand
            let expected = RealPoly::from_descending(&[1.0, -2.0 * alpha, 2.0 * alpha - 1.0]);
            assert!(p.max_relative_coefficient_error(&expected) < 1e-14, "{p} vs {expected}");
            assert!(p.is_monic());
        }
    }

    #[test]
    fn char_poly_of_zero_matrix() {
        assert_eq!(char_poly(&DenseMatrix::zeros(3, 3)).unwrap(), RealPoly::from_descending(&[1.0, 0.0, 0.0, 0.0]));
        assert_eq!(char_poly(&DenseMatrix::zeros(0, 0)).unwrap(), RealPoly::constant(1.0));
        assert!(char_poly(&DenseMatrix::zeros(2, 3)).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn char_poly_matches_determinant(
            n in 1usize..7,
            raw in proptest::collection::vec(-3.0f64..3.0, 36),
            xs in proptest::collection::vec(-4.0f64..4.0, 3),
        ) {
            let m = DenseMatrix::from_fn(n, n, |i, j| raw[i * 6 + j]);
            let p = char_poly(&m).unwrap();
            prop_assert_eq!(p.degree(), n);
            prop_assert!(p.is_monic());
            // Newton: the x^(n-1) coefficient is -trace
            prop_assert!((p.coeff(n - 1) + m.trace()).abs() < 1e-10);
            for x in xs {
                let shifted = DenseMatrix::from_fn(n, n, |i, j| if i == j { x - m[(i, j)] } else { -m[(i, j)] });
                let d = det(shifted);
                prop_assert!((p.evaluate(x) - d).abs() <= 1e-9 * p.evaluation_scale(x).max(1.0));
            }
        }
    }
}
