use num_bigint::BigInt;
use num_traits::Zero;

use super::bivariate::BivariatePolynomial;
use super::rational::Rational;
use super::univariate::UniPoly;
use super::binomial;

/// A power series in `x` known through `x^cutoff`, whose coefficients are polynomials in `t`.
///
/// `offset` is the exponent of the first stored coefficient; it is negative for
/// series with poles at `x = 0` (such as logarithmic-form Hilbert series).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    offset: i64,
    coeffs: Vec<UniPoly>,
}

impl TruncatedSeries {
    /// `coeffs[k]` is the coefficient of `x^(offset + k)`; the cutoff is the last exponent.
    pub fn new(offset: i64, coeffs: Vec<UniPoly>) -> Self {
        Self { offset, coeffs }
    }

    pub fn zero(offset: i64, cutoff: i64) -> Self {
        let len = (cutoff - offset + 1).max(0) as usize;
        Self::new(offset, vec![UniPoly::zero(); len])
    }

    /// Truncation of a polynomial (all terms of x-degree above `cutoff` dropped).
    pub fn from_polynomial(p: &BivariatePolynomial, cutoff: i64) -> Self {
        let coeffs = (0..=cutoff.max(-1)).map(|i| p.x_coefficient(i as u32)).collect();
        Self::new(0, coeffs)
    }

    pub fn from_rationals(offset: i64, values: &[Rational]) -> Self {
        Self::new(offset, values.iter().cloned().map(UniPoly::constant).collect())
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn cutoff(&self) -> i64 {
        self.offset + self.coeffs.len() as i64 - 1
    }

    /// Coefficient of `x^e`: zero below the offset, `None` above the cutoff.
    pub fn coefficient(&self, e: i64) -> Option<UniPoly> {
        if e > self.cutoff() {
            None
        } else if e < self.offset {
            Some(UniPoly::zero())
        } else {
            Some(self.coeffs[(e - self.offset) as usize].clone())
        }
    }

    pub fn coefficients(&self) -> &[UniPoly] {
        &self.coeffs
    }

    /// Coefficients as plain rationals when no coefficient involves `t`.
    pub fn constant_coefficients(&self) -> Option<Vec<Rational>> {
        self.coeffs
            .iter()
            .map(|c| match c.degree() {
                None => Some(Rational::zero()),
                Some(0) => Some(c.coeff(0)),
                Some(_) => None,
            })
            .collect()
    }

    /// Sum, known through the smaller of the two cutoffs.
    pub fn add(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let offset = self.offset.min(other.offset);
        let cutoff = self.cutoff().min(other.cutoff());
        let coeffs = (offset..=cutoff)
            .map(|e| &self.coefficient(e).unwrap() + &other.coefficient(e).unwrap())
            .collect();
        Self::new(offset, coeffs)
    }

    /// Product with a polynomial, truncated at the same cutoff.
    pub fn mul_poly(&self, p: &BivariatePolynomial) -> TruncatedSeries {
        let mut out = Self::zero(self.offset, self.cutoff());
        let dx = p.deg_x().unwrap_or(0);
        let slices: Vec<UniPoly> = (0..=dx).map(|i| p.x_coefficient(i)).collect();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (i, s) in slices.iter().enumerate() {
                let target = k + i;
                if target >= out.coeffs.len() {
                    break;
                }
                if !s.is_zero() {
                    out.coeffs[target] = &out.coeffs[target] + &(c * s);
                }
            }
        }
        out
    }

    /// Multiplies by `x^k` (moves both offset and cutoff).
    pub fn shift_x(&self, k: i64) -> TruncatedSeries {
        Self::new(self.offset + k, self.coeffs.clone())
    }

    /// Agreement with a polynomial at every exponent from the offset through the cutoff.
    pub fn matches_polynomial(&self, p: &BivariatePolynomial) -> bool {
        (self.offset..=self.cutoff()).all(|e| {
            let expected = if e < 0 { UniPoly::zero() } else { p.x_coefficient(e as u32) };
            self.coefficient(e).unwrap() == expected
        })
    }

    /// Number of consecutive vanishing coefficients ending at the cutoff.
    pub fn zero_tail_len(&self) -> usize {
        self.coeffs.iter().rev().take_while(|c| c.is_zero()).count()
    }

    /// Promotes to a polynomial if nothing sits below `x^0` and at least `min_zero_tail`
    /// top coefficients vanish.
    pub fn to_polynomial(&self, min_zero_tail: usize) -> Option<BivariatePolynomial> {
        if self.zero_tail_len() < min_zero_tail {
            return None;
        }
        let mut out = BivariatePolynomial::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            let e = self.offset + k as i64;
            if c.is_zero() {
                continue;
            }
            if e < 0 {
                return None;
            }
            for (j, a) in c.coeffs().iter().enumerate() {
                out.add_term(e as u32, j as u32, a.clone());
            }
        }
        Some(out)
    }
}

/// Coefficient of `x^m` in `1/(1-x)^ell`.
pub fn inverse_power_coeff(ell: usize, m: i64) -> u128 {
    if m < 0 {
        0
    } else if ell == 0 {
        u128::from(m == 0)
    } else {
        binomial(m + ell as i64 - 1, ell as i64 - 1)
    }
}

/// Expands `numerator(x) / (1-x)^ell` through `x^cutoff`.
pub fn series_from_rational(numerator: &UniPoly, ell: usize, cutoff: usize) -> TruncatedSeries {
    let coeffs = (0..=cutoff as i64)
        .map(|d| {
            let mut acc = Rational::zero();
            for (k, c) in numerator.coeffs().iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let b = inverse_power_coeff(ell, d - k as i64);
                if b != 0 {
                    acc += c * Rational::from_integer(BigInt::from(b));
                }
            }
            UniPoly::constant(acc)
        })
        .collect();
    TruncatedSeries::new(0, coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::int;

    fn values(s: &TruncatedSeries) -> Vec<Rational> {
        s.constant_coefficients().unwrap()
    }

    #[test]
    fn shifted_binomials() {
        let s = series_from_rational(&UniPoly::from_i64s(&[0, 1]), 3, 3);
        assert_eq!(values(&s), [0, 1, 3, 6].map(int));
    }

    #[test]
    fn plus_one_generated_numerator() {
        let s = series_from_rational(&UniPoly::from_i64s(&[0, 1, 0, 3, -1]), 3, 4);
        assert_eq!(values(&s), [0, 1, 3, 9, 18].map(int));
    }

    #[test]
    fn ell_zero_is_the_numerator() {
        let s = series_from_rational(&UniPoly::one(), 0, 5);
        assert_eq!(values(&s), [1, 0, 0, 0, 0, 0].map(int));
    }

    #[test]
    fn polynomial_round_trip_and_tail() {
        let p = BivariatePolynomial::from_int_terms(&[(0, 0, 1), (1, 1, -2), (2, 2, 1)]);
        let s = TruncatedSeries::from_polynomial(&p, 6);
        assert!(s.matches_polynomial(&p));
        assert_eq!(s.zero_tail_len(), 4);
        assert_eq!(s.to_polynomial(3), Some(p.clone()));
        assert_eq!(TruncatedSeries::from_polynomial(&p, 3).to_polynomial(3), None);
    }

    #[test]
    fn mixed_cutoffs_take_the_minimum() {
        let a = series_from_rational(&UniPoly::one(), 1, 4);
        let b = series_from_rational(&UniPoly::one(), 1, 2).shift_x(-1);
        let s = a.add(&b);
        assert_eq!((s.offset(), s.cutoff()), (-1, 1));
        assert_eq!(values(&s), [1, 2, 2].map(int));
    }
}
