use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rational::{rational_display, Rational};

/// Sparse polynomial in a fixed number of variables with rational coefficients.
///
/// Monomials are exponent vectors compared lexicographically (variable 0 most
/// significant); the leading term is the largest key.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, Rational::one())
    }

    pub fn monomial(exps: Vec<u32>, c: Rational) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(exps, c);
        p
    }

    /// `Σ coeffs[i] · x_i`.
    pub fn linear(coeffs: &[BigInt]) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(n);
        for (i, c) in coeffs.iter().enumerate() {
            let mut e = vec![0; n];
            e[i] = 1;
            p.add_term(e, Rational::from_integer(c.clone()));
        }
        p
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: Rational) {
        assert_eq!(exps.len(), self.nvars, "exponent vector length");
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    pub fn leading_term(&self) -> Option<(&Vec<u32>, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.nvars);
        if !c.is_zero() {
            for (e, a) in &self.terms {
                out.terms.insert(e.clone(), a * c);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Division by a single polynomial under lex order. The remainder is zero
    /// exactly when `divisor` divides `self`.
    pub fn div_rem(&self, divisor: &MPoly) -> (MPoly, MPoly) {
        let (lead_e, lead_c) = divisor.leading_term().expect("division by the zero polynomial");
        let mut quot = Self::zero(self.nvars);
        let mut rem = Self::zero(self.nvars);
        let mut p = self.clone();
        while let Some((e, c)) = p.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
            if e.iter().zip(lead_e).all(|(a, b)| a >= b) {
                let shift: Vec<u32> = e.iter().zip(lead_e).map(|(a, b)| a - b).collect();
                let q = &c / lead_c;
                for (de, dc) in &divisor.terms {
                    let m: Vec<u32> = de.iter().zip(&shift).map(|(a, b)| a + b).collect();
                    p.add_term(m, -(dc * &q));
                }
                quot.add_term(shift, q);
            } else {
                p.terms.remove(&e);
                rem.add_term(e, c);
            }
        }
        (quot, rem)
    }

    pub fn exact_div(&self, divisor: &MPoly) -> Option<MPoly> {
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    /// Renders with the given variable names, leading term first.
    pub fn display_with(&self, names: &[&str]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (e, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let abs = c.abs();
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| if k == 1 { names[i].to_string() } else { format!("{}^{k}", names[i]) })
                .collect();
            if mono.is_empty() {
                out.push_str(&rational_display(&abs));
            } else {
                if !abs.is_one() {
                    out.push_str(&rational_display(&abs));
                }
                out.push_str(&mono.join(""));
            }
        }
        out
    }
}

/// Default variable names `x1, x2, …` (or `x, y, z, w` for up to four variables).
pub fn default_names(nvars: usize) -> Vec<String> {
    const SHORT: [&str; 4] = ["x", "y", "z", "w"];
    if nvars <= 4 {
        SHORT[..nvars].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=nvars).map(|i| format!("x{i}")).collect()
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = default_names(self.nvars);
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        f.write_str(&self.display_with(&refs))
    }
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        self.scale(&-Rational::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lin(c: &[i64]) -> MPoly {
        MPoly::linear(&c.iter().map(|&v| BigInt::from(v)).collect::<Vec<_>>())
    }

    #[test]
    fn product_of_forms_divides_exactly() {
        let y = lin(&[1, 0, 0]);
        let z = lin(&[0, 1, 0]);
        let yz = lin(&[1, 1, 0]);
        let prod = &(&y * &z) * &yz;
        assert_eq!(prod.degree(), Some(3));
        assert!(prod.is_homogeneous());
        let q = prod.exact_div(&yz).unwrap();
        assert_eq!(q, &y * &z);
        let (_, r) = (&prod + &MPoly::var(3, 2).pow(3)).div_rem(&y);
        assert_eq!(r, MPoly::var(3, 2).pow(3));
        assert!(prod.exact_div(&lin(&[0, 0, 1])).is_none());
    }

    #[test]
    fn display() {
        let p = &lin(&[1, -2, 0]).pow(2) - &MPoly::one(3);
        assert_eq!(p.to_string(), "x^2 - 4xy + 4y^2 - 1");
    }
}
