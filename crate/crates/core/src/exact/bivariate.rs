use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::rational::{int, parse_rational, rational_display, rational_to_string, Rational};
use super::univariate::UniPoly;

/// The two variables of the Solomon-Terao ring `Q[x, t]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    X,
    T,
}

/// Sparse polynomial in `x` and `t` with exact rational coefficients.
///
/// Keys are `(i, j)` for the monomial `x^i t^j`; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct BivariatePolynomial {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl BivariatePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: Rational, i: u32, j: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(i, j, c);
        p
    }

    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1, 0)
    }

    pub fn t() -> Self {
        Self::monomial(Rational::one(), 0, 1)
    }

    /// Builds from `(i, j, c)` triples; repeated exponents accumulate.
    pub fn from_terms<I: IntoIterator<Item = (u32, u32, Rational)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (i, j, c) in terms {
            p.add_term(i, j, c);
        }
        p
    }

    /// Shorthand for integer coefficients.
    pub fn from_int_terms(terms: &[(u32, u32, i64)]) -> Self {
        Self::from_terms(terms.iter().map(|&(i, j, c)| (i, j, int(c))))
    }

    /// Embeds a polynomial in `x` (coefficient `k` multiplies `x^k`).
    pub fn from_x_poly(p: &UniPoly) -> Self {
        Self::from_terms(p.coeffs().iter().enumerate().map(|(k, c)| (k as u32, 0, c.clone())))
    }

    /// Embeds a polynomial in `t`.
    pub fn from_t_poly(p: &UniPoly) -> Self {
        Self::from_terms(p.coeffs().iter().enumerate().map(|(k, c)| (0, k as u32, c.clone())))
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((i, j)).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn coeff(&self, i: u32, j: u32) -> Rational {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in lexicographic `(i, j)` order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &Rational)> {
        self.terms.iter().map(|(&(i, j), c)| (i, j, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn deg_x(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, _)| i).max()
    }

    pub fn deg_t(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, j)| j).max()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_terms(self.terms().map(|(i, j, a)| (i, j, a * c)))
    }

    /// Multiplies by `x^k`.
    pub fn shift_x(&self, k: u32) -> Self {
        Self::from_terms(self.terms().map(|(i, j, a)| (i + k, j, a.clone())))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes a rational value for one variable. The result only involves the other one.
    pub fn substitute(&self, var: Var, value: &Rational) -> Self {
        let mut out = Self::zero();
        for (i, j, c) in self.terms() {
            match var {
                Var::X => out.add_term(0, j, c * pow_rational(value, i)),
                Var::T => out.add_term(i, 0, c * pow_rational(value, j)),
            }
        }
        out
    }

    /// The coefficient of `t^j` as a polynomial in `x`.
    pub fn t_coefficient(&self, j: u32) -> UniPoly {
        let deg = self.deg_x().unwrap_or(0) as usize;
        let mut coeffs = vec![Rational::zero(); deg + 1];
        for (i, jj, c) in self.terms() {
            if jj == j {
                coeffs[i as usize] = c.clone();
            }
        }
        UniPoly::new(coeffs)
    }

    /// The coefficient of `x^i` as a polynomial in `t`.
    pub fn x_coefficient(&self, i: u32) -> UniPoly {
        let deg = self.deg_t().unwrap_or(0) as usize;
        let mut coeffs = vec![Rational::zero(); deg + 1];
        for (ii, j, c) in self.terms() {
            if ii == i {
                coeffs[j as usize] = c.clone();
            }
        }
        UniPoly::new(coeffs)
    }

    /// Reads the polynomial as univariate in `x`, provided `t` does not occur.
    pub fn as_x_poly(&self) -> Option<UniPoly> {
        (self.deg_t().unwrap_or(0) == 0).then(|| self.t_coefficient(0))
    }

    /// Reads the polynomial as univariate in `t`, provided `x` does not occur.
    pub fn as_t_poly(&self) -> Option<UniPoly> {
        (self.deg_x().unwrap_or(0) == 0).then(|| self.x_coefficient(0))
    }

    /// JSON form: `[[i, j, "p/q"], …]` sorted by `(i, j)`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms()
                .map(|(i, j, c)| serde_json::json!([i, j, rational_to_string(c)]))
                .collect(),
        )
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self, String> {
        let arr = value.as_array().ok_or("polynomial must be a JSON array")?;
        let mut p = Self::zero();
        for item in arr {
            let triple = item.as_array().filter(|t| t.len() == 3).ok_or("expected [i, j, \"p/q\"]")?;
            let i = triple[0].as_u64().ok_or("x-exponent must be a nonnegative integer")?;
            let j = triple[1].as_u64().ok_or("t-exponent must be a nonnegative integer")?;
            let c = triple[2].as_str().ok_or("coefficient must be a string")?;
            let c = parse_rational(c).map_err(|e| e.to_string())?;
            p.add_term(i as u32, j as u32, c);
        }
        Ok(p)
    }
}

fn pow_rational(base: &Rational, e: u32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..e {
        acc *= base;
    }
    acc
}

impl Add for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn add(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = self.clone();
        for (i, j, c) in rhs.terms() {
            out.add_term(i, j, c.clone());
        }
        out
    }
}

impl Sub for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn sub(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = self.clone();
        for (i, j, c) in rhs.terms() {
            out.add_term(i, j, -c);
        }
        out
    }
}

impl Mul for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn mul(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut acc: BTreeMap<(u32, u32), Rational> = BTreeMap::new();
        for (i, j, a) in self.terms() {
            for (k, l, b) in rhs.terms() {
                *acc.entry((i + k, j + l)).or_insert_with(Rational::zero) += a * b;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        BivariatePolynomial { terms: acc }
    }
}

impl Neg for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn neg(self) -> BivariatePolynomial {
        BivariatePolynomial::from_terms(self.terms().map(|(i, j, c)| (i, j, -c)))
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for BivariatePolynomial {
            type Output = BivariatePolynomial;
            fn $m(self, rhs: BivariatePolynomial) -> BivariatePolynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Serialize for BivariatePolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BivariatePolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let value = serde_json::Value::deserialize(deserializer)?;
        Self::from_json(&value).map_err(D::Error::custom)
    }
}

/// Grouped by powers of `t`, e.g. `(1 + 2x) - (x + 5x^2)t + 4x^3t^2 - x^4t^3`.
impl fmt::Display for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for j in 0..=self.deg_t().unwrap_or(0) {
            let slice = self.t_coefficient(j);
            if slice.is_zero() {
                continue;
            }
            let nonzero = slice.coeffs().iter().filter(|c| !c.is_zero()).count();
            let neg = slice.coeffs().iter().all(|c| c.is_zero() || c.is_negative());
            let shown = if neg { -&slice } else { slice };
            let body = if nonzero == 1 {
                shown.display_in("x")
            } else {
                format!("({})", shown.display_in("x"))
            };
            let body = match (body.as_str(), j) {
                ("1", 0) => "1".to_string(),
                ("1", 1) => "t".to_string(),
                ("1", _) => format!("t^{j}"),
                (_, 0) => body,
                (_, 1) => format!("{body}t"),
                _ => format!("{body}t^{j}"),
            };
            match (first, neg) {
                (true, true) => write!(f, "-{body}")?,
                (true, false) => f.write_str(&body)?,
                (false, true) => write!(f, " - {body}")?,
                (false, false) => write!(f, " + {body}")?,
            }
            first = false;
        }
        Ok(())
    }
}

/// Convenience for readable tests: coefficients given as display strings.
pub fn coeff_display(p: &BivariatePolynomial, i: u32, j: u32) -> String {
    rational_display(&p.coeff(i, j))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one_minus_tx() -> BivariatePolynomial {
        BivariatePolynomial::from_int_terms(&[(0, 0, 1), (1, 1, -1)])
    }

    #[test]
    fn difference_of_squares() {
        let a = BivariatePolynomial::from_int_terms(&[(0, 0, 1), (1, 0, 1)]);
        let b = BivariatePolynomial::from_int_terms(&[(0, 0, 1), (1, 0, -1)]);
        assert_eq!(&a * &b, BivariatePolynomial::from_int_terms(&[(0, 0, 1), (2, 0, -1)]));
        assert!((&a * &BivariatePolynomial::zero()).is_zero());
    }

    #[test]
    fn binomial_square() {
        let sq = one_minus_tx().pow(2);
        assert_eq!(sq, BivariatePolynomial::from_int_terms(&[(0, 0, 1), (1, 1, -2), (2, 2, 1)]));
        let at_one = sq.substitute(Var::X, &int(1));
        assert_eq!(at_one, BivariatePolynomial::from_int_terms(&[(0, 0, 1), (0, 1, -2), (0, 2, 1)]));
    }

    #[test]
    fn empty_arrangement_value() {
        let minus_t_cubed = BivariatePolynomial::from_int_terms(&[(0, 3, -1)]);
        assert_eq!(minus_t_cubed.substitute(Var::T, &int(-1)), BivariatePolynomial::one());
    }

    #[test]
    fn json_is_sorted_triples() {
        let p = BivariatePolynomial::from_int_terms(&[(2, 0, 3), (0, 1, -1), (0, 0, 1)]);
        let json = p.to_json();
        assert_eq!(json.to_string(), r#"[[0,0,"1/1"],[0,1,"-1/1"],[2,0,"3/1"]]"#);
        assert_eq!(BivariatePolynomial::from_json(&json).unwrap(), p);
    }

    #[test]
    fn display_groups_by_t() {
        let p = BivariatePolynomial::from_int_terms(&[
            (0, 0, 1),
            (1, 0, 2),
            (1, 1, -1),
            (2, 1, -5),
            (3, 2, 4),
            (4, 3, -1),
        ]);
        assert_eq!(p.to_string(), "(1 + 2x) - (x + 5x^2)t + 4x^3t^2 - x^4t^3");
    }
}
