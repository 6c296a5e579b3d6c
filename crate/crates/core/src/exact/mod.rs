//! Exact arithmetic shared by every other module: rationals, univariate and
//! bivariate polynomials, truncated Hilbert-type series, sparse multivariate
//! polynomials and exact linear algebra.

pub mod bivariate;
pub mod linalg;
pub mod mpoly;
pub mod rational;
pub mod series;
pub mod univariate;

pub use bivariate::{BivariatePolynomial, Var};
pub use mpoly::MPoly;
pub use rational::{parse_rational, rational_to_string, Rational};
pub use series::{series_from_rational, TruncatedSeries};
pub use univariate::UniPoly;

/// Binomial coefficient `C(n, k)` with the convention that it vanishes for
/// `k < 0` or `k > n`, and `C(n, k) = 0` for negative `n` as well.
pub fn binomial(n: i64, k: i64) -> u128 {
    if n < 0 || k < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k) as u128;
    let n = n as u128;
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Dimension of the degree-`d` part of a polynomial ring in `nvars` variables.
pub fn graded_dim(nvars: usize, d: i64) -> u128 {
    if d < 0 {
        return 0;
    }
    if nvars == 0 {
        return u128::from(d == 0);
    }
    binomial(d + nvars as i64 - 1, nvars as i64 - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(5, 0), 1);
        assert_eq!(binomial(5, 6), 0);
        assert_eq!(binomial(-1, 0), 0);
        assert_eq!(binomial(40, 20), 137_846_528_820);
    }

    #[test]
    fn graded_dims() {
        assert_eq!(graded_dim(3, 2), 6);
        assert_eq!(graded_dim(4, 16), 969);
        assert_eq!(graded_dim(0, 0), 1);
        assert_eq!(graded_dim(0, 3), 0);
        assert_eq!(graded_dim(2, -1), 0);
    }
}
