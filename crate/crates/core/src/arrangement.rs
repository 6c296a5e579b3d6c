//! Central arrangements given by integer linear forms, with deletion,
//! restriction, localization and Terao's polynomial B on a hyperplane.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exact::linalg::{canonical_row_basis, rank_of_rows};
use crate::exact::mpoly::{default_names, MPoly};
use crate::exact::Rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArrangementError {
    #[error("line {line}: {message}")]
    MalformedInput { line: usize, message: String },
    #[error("line {line}: the zero vector does not define a hyperplane")]
    ZeroForm { line: usize },
    #[error("hyperplanes {first} and {second} coincide")]
    DuplicateHyperplane { first: usize, second: usize },
    #[error("unsupported field `{0}`: only the rationals are supported")]
    UnsupportedField(String),
    #[error("hyperplane index {index} out of range for {len} hyperplanes")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("form has {found} coefficients but the ambient dimension is {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("the given subspace is not an intersection of hyperplanes of the arrangement")]
    NotAFlat,
    #[error("the coordinate change is singular")]
    SingularChange,
    #[error("unknown builtin arrangement `{0}`")]
    UnknownName(String),
}

/// A nonzero integer linear form, stored with content 1 and positive first nonzero entry.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearForm {
    coeffs: Vec<BigInt>,
}

impl LinearForm {
    /// Canonical representative of the line spanned by `coeffs`; `None` for the zero vector.
    pub fn new(coeffs: Vec<BigInt>) -> Option<Self> {
        let g = coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if g.is_zero() {
            return None;
        }
        let first_negative = coeffs.iter().find(|c| !c.is_zero()).is_some_and(Signed::is_negative);
        let g = if first_negative { -g } else { g };
        Some(Self { coeffs: coeffs.into_iter().map(|c| c / &g).collect() })
    }

    pub fn from_i64s(coeffs: &[i64]) -> Option<Self> {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    /// Index of the first nonzero coefficient.
    pub fn pivot(&self) -> usize {
        self.coeffs.iter().position(|c| !c.is_zero()).expect("forms are nonzero")
    }

    /// `Some(k)` when the form is the coordinate function `x_k`.
    pub fn coordinate(&self) -> Option<usize> {
        let k = self.pivot();
        let rest_zero = self.coeffs.iter().enumerate().all(|(i, c)| i == k || c.is_zero());
        (rest_zero && self.coeffs[k].is_one()).then_some(k)
    }

    pub fn to_mpoly(&self) -> MPoly {
        MPoly::linear(&self.coeffs)
    }

    /// Pullback along the coordinate change `x = g·y` (row vector times `g`).
    pub fn pullback(&self, g: &[Vec<BigInt>]) -> Option<LinearForm> {
        let n = self.coeffs.len();
        let row = (0..n)
            .map(|j| (0..n).fold(BigInt::zero(), |acc, i| acc + &self.coeffs[i] * &g[i][j]))
            .collect();
        LinearForm::new(row)
    }

    pub fn display_with(&self, names: &[String]) -> String {
        let mut out = String::new();
        for (c, name) in self.coeffs.iter().zip(names) {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let a = c.abs();
            if !a.is_one() {
                out.push_str(&a.to_string());
            }
            out.push_str(name);
        }
        out
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(&default_names(self.dim())))
    }
}

/// Coordinates on a hyperplane `H`: the pivot coordinate of `α_H` is eliminated and
/// the others are kept in order.
///
/// A form `β` restricts to the form with coefficients `a_k·b_j − b_k·a_j` (`j ≠ k`),
/// i.e. `a_k·β` with `x_k = −(Σ_{j≠k} a_j x_j)/a_k` substituted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chart {
    pub hyperplane: LinearForm,
    pub pivot: usize,
    pub kept: Vec<usize>,
}

impl Chart {
    pub fn new(hyperplane: LinearForm) -> Self {
        let pivot = hyperplane.pivot();
        let kept = (0..hyperplane.dim()).filter(|&j| j != pivot).collect();
        Self { hyperplane, pivot, kept }
    }

    /// Image coefficients of a form (not canonicalized; zero iff proportional to `α_H`).
    pub fn image_coeffs(&self, beta: &[BigInt]) -> Vec<BigInt> {
        let a = self.hyperplane.coeffs();
        let k = self.pivot;
        self.kept.iter().map(|&j| &a[k] * &beta[j] - &beta[k] * &a[j]).collect()
    }

    pub fn image(&self, beta: &LinearForm) -> Option<LinearForm> {
        LinearForm::new(self.image_coeffs(beta.coeffs()))
    }

    /// Reduction of a polynomial modulo `α_H`, written in the kept coordinates:
    /// `x_k ↦ −(Σ_{j≠k} a_j x_j)/a_k`.
    pub fn reduce(&self, p: &MPoly) -> MPoly {
        let a = self.hyperplane.coeffs();
        let k = self.pivot;
        let n = self.kept.len();
        let ak = Rational::from_integer(a[k].clone());
        let mut sub = MPoly::zero(n);
        for (slot, &j) in self.kept.iter().enumerate() {
            let mut e = vec![0; n];
            e[slot] = 1;
            sub.add_term(e, -Rational::from_integer(a[j].clone()) / &ak);
        }
        let mut powers = vec![MPoly::one(n)];
        let mut out = MPoly::zero(n);
        for (e, c) in p.terms() {
            let ek = e[k] as usize;
            while powers.len() <= ek {
                let next = powers.last().unwrap() * &sub;
                powers.push(next);
            }
            let rest: Vec<u32> = self.kept.iter().map(|&j| e[j]).collect();
            let term = &MPoly::monomial(rest, c.clone()) * &powers[ek];
            out = &out + &term;
        }
        out
    }

    /// Names of the kept coordinates, taken from the ambient names.
    pub fn names(&self, ambient: &[String]) -> Vec<String> {
        self.kept.iter().map(|&j| ambient[j].clone()).collect()
    }
}

/// The restriction `A^H` together with its chart and the preimages of each restricted form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Restriction {
    pub arrangement: Arrangement,
    pub chart: Chart,
    /// `sources[i]` lists the indices in `A` (never `H` itself) mapping onto form `i`.
    pub sources: Vec<Vec<usize>>,
}

/// `B̄ = Q(A')‾ / Q(A^H)` on `H`: one factor for each extra preimage of a restricted form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BPolynomial {
    pub chart: Chart,
    pub factors: Vec<LinearForm>,
    pub polynomial: MPoly,
}

impl BPolynomial {
    pub fn degree(&self) -> usize {
        self.factors.len()
    }
}

/// A central arrangement: pairwise non-proportional canonical forms in a fixed order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrangement {
    dim: usize,
    forms: Vec<LinearForm>,
    label: Option<String>,
}

impl Arrangement {
    pub fn new(dim: usize, forms: Vec<LinearForm>) -> Result<Self, ArrangementError> {
        for f in &forms {
            if f.dim() != dim {
                return Err(ArrangementError::DimensionMismatch { expected: dim, found: f.dim() });
            }
        }
        for (i, f) in forms.iter().enumerate() {
            if let Some(j) = forms[..i].iter().position(|g| g == f) {
                return Err(ArrangementError::DuplicateHyperplane { first: j, second: i });
            }
        }
        Ok(Self { dim, forms, label: None })
    }

    /// Builds from integer rows, canonicalizing each.
    pub fn from_rows(dim: usize, rows: &[Vec<i64>]) -> Result<Self, ArrangementError> {
        let forms = rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                if r.len() != dim {
                    return Err(ArrangementError::DimensionMismatch { expected: dim, found: r.len() });
                }
                LinearForm::from_i64s(r).ok_or(ArrangementError::ZeroForm { line: i + 1 })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(dim, forms)
    }

    pub fn empty(dim: usize) -> Self {
        Self { dim, forms: Vec::new(), label: None }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    /// The ambient dimension ℓ.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }

    pub fn forms(&self) -> &[LinearForm] {
        &self.forms
    }

    pub fn form(&self, h: usize) -> Result<&LinearForm, ArrangementError> {
        self.forms.get(h).ok_or(ArrangementError::IndexOutOfRange { index: h, len: self.len() })
    }

    pub fn index_of(&self, form: &LinearForm) -> Option<usize> {
        self.forms.iter().position(|f| f == form)
    }

    /// Dimension of the span of the forms.
    pub fn rank(&self) -> usize {
        rank_of_rows(&self.rows())
    }

    pub fn is_essential(&self) -> bool {
        self.rank() == self.dim
    }

    pub fn rows(&self) -> Vec<Vec<BigInt>> {
        self.forms.iter().map(|f| f.coeffs.clone()).collect()
    }

    /// `Q(A)`, the product of the defining forms.
    pub fn defining_polynomial(&self) -> MPoly {
        self.forms.iter().fold(MPoly::one(self.dim), |acc, f| &acc * &f.to_mpoly())
    }

    /// Order-independent identity: ambient dimension and the sorted forms.
    pub fn canonical_key(&self) -> (usize, Vec<LinearForm>) {
        let mut forms = self.forms.clone();
        forms.sort();
        (self.dim, forms)
    }

    pub fn names(&self) -> Vec<String> {
        default_names(self.dim)
    }

    /// `A' = A ∖ {H}` (order of the remaining forms preserved).
    pub fn delete(&self, h: usize) -> Result<Arrangement, ArrangementError> {
        self.form(h)?;
        let mut forms = self.forms.clone();
        forms.remove(h);
        Ok(Self { dim: self.dim, forms, label: None })
    }

    /// Appends a form (the addition direction).
    pub fn add(&self, form: LinearForm) -> Result<Arrangement, ArrangementError> {
        let mut forms = self.forms.clone();
        forms.push(form);
        Self::new(self.dim, forms)
    }

    /// `A^H` in the canonical chart of `H`, first-occurrence order.
    pub fn restrict(&self, h: usize) -> Result<Restriction, ArrangementError> {
        let chart = Chart::new(self.form(h)?.clone());
        let mut forms: Vec<LinearForm> = Vec::new();
        let mut sources: Vec<Vec<usize>> = Vec::new();
        for (i, f) in self.forms.iter().enumerate() {
            if i == h {
                continue;
            }
            let img = chart.image(f).expect("distinct forms never restrict to zero");
            match forms.iter().position(|g| *g == img) {
                Some(j) => sources[j].push(i),
                None => {
                    forms.push(img);
                    sources.push(vec![i]);
                }
            }
        }
        let arrangement = Self { dim: self.dim - 1, forms, label: None };
        Ok(Restriction { arrangement, chart, sources })
    }

    /// Indices of the forms vanishing on the subspace cut out by `conormal`
    /// (the forms whose row lies in the span of the given rows).
    pub fn localize_indices(&self, conormal: &[Vec<BigInt>]) -> Result<Vec<usize>, ArrangementError> {
        for r in conormal {
            if r.len() != self.dim {
                return Err(ArrangementError::DimensionMismatch { expected: self.dim, found: r.len() });
            }
        }
        let basis = canonical_row_basis(conormal);
        let span_rank = basis.len();
        let inside: Vec<usize> = (0..self.len())
            .filter(|&i| {
                let mut rows = basis.clone();
                rows.push(self.forms[i].coeffs.clone());
                rank_of_rows(&rows) == span_rank
            })
            .collect();
        let rows: Vec<Vec<BigInt>> = inside.iter().map(|&i| self.forms[i].coeffs.clone()).collect();
        if rank_of_rows(&rows) != span_rank {
            return Err(ArrangementError::NotAFlat);
        }
        Ok(inside)
    }

    /// `A_X`, same ambient space.
    pub fn localize(&self, conormal: &[Vec<BigInt>]) -> Result<Arrangement, ArrangementError> {
        let idx = self.localize_indices(conormal)?;
        self.subarrangement(&idx)
    }

    pub fn subarrangement(&self, indices: &[usize]) -> Result<Arrangement, ArrangementError> {
        let forms = indices
            .iter()
            .map(|&i| self.form(i).cloned())
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(self.dim, forms)
    }

    /// `B̄` on `H`; its degree is `|A| − 1 − |A^H|`.
    pub fn b_polynomial(&self, h: usize) -> Result<BPolynomial, ArrangementError> {
        let res = self.restrict(h)?;
        let mut factors = Vec::new();
        for (form, src) in res.arrangement.forms.iter().zip(&res.sources) {
            for _ in 1..src.len() {
                factors.push(form.clone());
            }
        }
        let polynomial = factors
            .iter()
            .fold(MPoly::one(self.dim - 1), |acc, f| &acc * &f.to_mpoly());
        Ok(BPolynomial { chart: res.chart, factors, polynomial })
    }

    /// The arrangement of pullbacks along `x = g·y` for an invertible integer matrix `g`.
    pub fn transform(&self, g: &[Vec<BigInt>]) -> Result<Arrangement, ArrangementError> {
        let forms = self
            .forms
            .iter()
            .map(|f| f.pullback(g).ok_or(ArrangementError::SingularChange))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(self.dim, forms)
    }

    /// Parses the text format: `#` comments, an optional `field` line, `dim <ℓ>`,
    /// then one row of ℓ integers per hyperplane.
    pub fn parse(text: &str) -> Result<Arrangement, ArrangementError> {
        let mut dim: Option<usize> = None;
        let mut forms: Vec<LinearForm> = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let line_no = n + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let malformed = |message: &str| ArrangementError::MalformedInput {
                line: line_no,
                message: message.to_string(),
            };
            let mut words = line.split_whitespace();
            let head = words.next().unwrap_or("");
            if head == "field" || head == "char" {
                let value: Vec<&str> = words.collect();
                let value = value.join(" ");
                let ok = matches!(value.as_str(), "Q" | "QQ" | "rational" | "rationals" | "0");
                if !ok {
                    return Err(ArrangementError::UnsupportedField(value));
                }
                continue;
            }
            if head == "dim" {
                if dim.is_some() {
                    return Err(malformed("repeated `dim` line"));
                }
                let value = words.next().ok_or_else(|| malformed("missing dimension"))?;
                if words.next().is_some() {
                    return Err(malformed("trailing tokens after dimension"));
                }
                let d: usize = value.parse().map_err(|_| malformed("dimension must be a positive integer"))?;
                if d == 0 {
                    return Err(malformed("dimension must be a positive integer"));
                }
                dim = Some(d);
                continue;
            }
            let d = dim.ok_or_else(|| malformed("expected `dim <n>` before the first hyperplane"))?;
            let row = line
                .split_whitespace()
                .map(|w| w.parse::<BigInt>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| malformed("hyperplane rows must contain integers only"))?;
            if row.len() != d {
                return Err(malformed(&format!("expected {d} coefficients, found {}", row.len())));
            }
            let form = LinearForm::new(row).ok_or(ArrangementError::ZeroForm { line: line_no })?;
            if let Some(j) = forms.iter().position(|g| *g == form) {
                return Err(ArrangementError::DuplicateHyperplane { first: j, second: forms.len() });
            }
            forms.push(form);
        }
        let dim = dim.ok_or(ArrangementError::MalformedInput {
            line: text.lines().count().max(1),
            message: "missing `dim <n>` line".into(),
        })?;
        Self::new(dim, forms)
    }

    /// Text form accepted by [`Arrangement::parse`].
    pub fn to_file_string(&self) -> String {
        let mut out = String::new();
        if let Some(l) = &self.label {
            out.push_str(&format!("# {l}\n"));
        }
        out.push_str(&format!("dim {}\n", self.dim));
        for f in &self.forms {
            let row: Vec<String> = f.coeffs.iter().map(ToString::to_string).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for Arrangement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = self.names();
        let parts: Vec<String> = self
            .forms
            .iter()
            .map(|h| {
                let s = h.display_with(&names);
                if s.contains(' ') { format!("({s})") } else { s }
            })
            .collect();
        if parts.is_empty() {
            write!(f, "empty arrangement in dimension {}", self.dim)
        } else {
            f.write_str(&parts.join(""))
        }
    }
}

/// Named arrangements.
pub mod builtin {
    use super::{Arrangement, ArrangementError};

    fn unit(dim: usize, i: usize) -> Vec<i64> {
        let mut r = vec![0; dim];
        r[i] = 1;
        r
    }

    /// The coordinate hyperplanes of `K^ℓ`.
    pub fn boolean(ell: usize) -> Arrangement {
        let rows: Vec<Vec<i64>> = (0..ell).map(|i| unit(ell, i)).collect();
        Arrangement::from_rows(ell, &rows).unwrap().with_label(format!("boolean{ell}"))
    }

    /// `x_1, …, x_ℓ, x_1 + ⋯ + x_ℓ`.
    pub fn generic_plus_one(ell: usize) -> Arrangement {
        let mut rows: Vec<Vec<i64>> = (0..ell).map(|i| unit(ell, i)).collect();
        rows.push(vec![1; ell]);
        Arrangement::from_rows(ell, &rows).unwrap().with_label(format!("generic_plus_one{ell}"))
    }

    /// `n` lines through the origin of `K^2`: `x, y, x + y, x + 2y, …`.
    pub fn concurrent(n: usize) -> Arrangement {
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|i| match i {
                0 => vec![1, 0],
                1 => vec![0, 1],
                _ => vec![1, i as i64 - 1],
            })
            .collect();
        Arrangement::from_rows(2, &rows).unwrap().with_label(format!("concurrent{n}"))
    }

    /// `xyzw(x+y)(x+z)(x+w)(x+y+z)(x+y+w)(x+z+w)`, free with exponents (1,3,3,3).
    pub fn x3() -> Arrangement {
        let rows = vec![
            vec![1, 0, 0, 0],
            vec![0, 1, 0, 0],
            vec![0, 0, 1, 0],
            vec![0, 0, 0, 1],
            vec![1, 1, 0, 0],
            vec![1, 0, 1, 0],
            vec![1, 0, 0, 1],
            vec![1, 1, 1, 0],
            vec![1, 1, 0, 1],
            vec![1, 0, 1, 1],
        ];
        Arrangement::from_rows(4, &rows).unwrap().with_label("x3")
    }

    pub const X3_X: usize = 0;
    pub const X3_Y: usize = 1;

    /// `x3` with `y = 0` deleted.
    pub fn x3_h_y() -> Arrangement {
        x3().delete(X3_Y).unwrap().with_label("x3_h_y")
    }

    /// `x3` with `x = 0` deleted.
    pub fn x3_h_x() -> Arrangement {
        x3().delete(X3_X).unwrap().with_label("x3_h_x")
    }

    /// The restriction of `x3` to `x = 0`: `yzw(y+z)(y+w)(z+w)` in coordinates `(y, z, w)`.
    pub fn x3_restricted_x() -> Arrangement {
        x3().restrict(X3_X).unwrap().arrangement.with_label("x3_restricted_x")
    }

    /// The restriction of `x3` to `y = 0`, in coordinates `(x, z, w)`.
    pub fn x3_restricted_y() -> Arrangement {
        x3().restrict(X3_Y).unwrap().arrangement.with_label("x3_restricted_y")
    }

    /// `xyz(x+y+z)`.
    pub fn three_generic() -> Arrangement {
        generic_plus_one(3).with_label("three_generic")
    }

    /// Every name accepted by [`by_name`], with a placeholder for the numeric families.
    pub const NAMES: [&str; 10] = [
        "boolean<l>",
        "generic_plus_one<l>",
        "concurrent<n>",
        "x3",
        "x3_h_y",
        "x3_h_x",
        "x3_restricted_x",
        "x3_restricted_y",
        "three_generic",
        "empty<l>",
    ];

    fn numeric_suffix(name: &str, prefix: &str) -> Option<usize> {
        let rest = name.strip_prefix(prefix)?;
        let rest = rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')).unwrap_or(rest);
        let rest = rest.strip_prefix('_').unwrap_or(rest);
        rest.parse().ok()
    }

    /// Looks up a builtin: `boolean3`, `boolean(3)`, `generic_plus_one4`, `concurrent5`, `x3`, ….
    pub fn by_name(name: &str) -> Result<Arrangement, ArrangementError> {
        let unknown = || ArrangementError::UnknownName(name.to_string());
        match name {
            "x3" => return Ok(x3()),
            "x3_h_y" => return Ok(x3_h_y()),
            "x3_h_x" => return Ok(x3_h_x()),
            "x3_restricted_x" => return Ok(x3_restricted_x()),
            "x3_restricted_y" => return Ok(x3_restricted_y()),
            "three_generic" | "3generic" => return Ok(three_generic()),
            _ => {}
        }
        if let Some(l) = numeric_suffix(name, "generic_plus_one") {
            return if l >= 1 { Ok(generic_plus_one(l)) } else { Err(unknown()) };
        }
        if let Some(l) = numeric_suffix(name, "boolean") {
            return if l >= 1 { Ok(boolean(l)) } else { Err(unknown()) };
        }
        if let Some(n) = numeric_suffix(name, "concurrent") {
            return Ok(concurrent(n));
        }
        if let Some(l) = numeric_suffix(name, "empty") {
            return if l >= 1 { Ok(Arrangement::empty(l).with_label(name)) } else { Err(unknown()) };
        }
        Err(unknown())
    }
}

#[cfg(test)]
mod tests {
    use super::builtin::*;
    use super::*;

    fn form(c: &[i64]) -> LinearForm {
        LinearForm::from_i64s(c).unwrap()
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(form(&[0, -2, 4]).coeffs(), form(&[0, 1, -2]).coeffs());
        assert!(LinearForm::from_i64s(&[0, 0]).is_none());
        assert_eq!(form(&[0, 3, 0]).coordinate(), Some(1));
        assert_eq!(form(&[1, 1]).coordinate(), None);
    }

    #[test]
    fn parse_boolean_and_x3() {
        let a = Arrangement::parse("dim 2\n1 0\n0 1\n").unwrap();
        assert_eq!((a.dim(), a.forms()), (2, boolean(2).forms()));
        let text = "# X3\ndim 4\n1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n1 1 0 0\n1 0 1 0\n1 0 0 1\n1 1 1 0\n1 1 0 1\n1 0 1 1\n";
        let x = Arrangement::parse(text).unwrap();
        assert_eq!(x.forms(), x3().forms());
        assert_eq!(x.to_string(), "xyzw(x + y)(x + z)(x + w)(x + y + z)(x + y + w)(x + z + w)");
    }

    #[test]
    fn parse_errors() {
        assert_eq!(
            Arrangement::parse("dim 2\n1 0\n2 0\n"),
            Err(ArrangementError::DuplicateHyperplane { first: 0, second: 1 })
        );
        assert_eq!(Arrangement::parse("dim 2\n0 0\n"), Err(ArrangementError::ZeroForm { line: 2 }));
        assert!(matches!(
            Arrangement::parse("dim 2\n1 0 1\n"),
            Err(ArrangementError::MalformedInput { line: 2, .. })
        ));
        assert!(matches!(Arrangement::parse("1 0\n"), Err(ArrangementError::MalformedInput { .. })));
        assert_eq!(
            Arrangement::parse("field GF(3)\ndim 1\n1\n"),
            Err(ArrangementError::UnsupportedField("GF(3)".into()))
        );
        let round = x3().to_file_string();
        assert_eq!(Arrangement::parse(&round).unwrap().forms(), x3().forms());
    }

    #[test]
    fn deletion() {
        let a = boolean(2).delete(1).unwrap();
        assert_eq!(a.forms(), &[form(&[1, 0])]);
        assert_eq!(x3().delete(X3_Y).unwrap().len(), 9);
        assert_eq!(
            boolean(2).delete(2),
            Err(ArrangementError::IndexOutOfRange { index: 2, len: 2 })
        );
    }

    #[test]
    fn restrictions_of_x3() {
        let r = x3().restrict(X3_Y).unwrap();
        let expect: Vec<LinearForm> = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 0], [1, 0, 1], [1, 1, 1]]
            .iter()
            .map(|c| form(c))
            .collect();
        assert_eq!(r.arrangement.forms(), &expect[..]);
        assert_eq!(r.chart.kept, vec![0, 2, 3]);
        let r = x3().restrict(X3_X).unwrap();
        let expect: Vec<LinearForm> = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 0], [1, 0, 1], [0, 1, 1]]
            .iter()
            .map(|c| form(c))
            .collect();
        assert_eq!(r.arrangement.forms(), &expect[..]);
        let names = r.chart.names(&x3().names());
        assert_eq!(r.arrangement.forms()[5].display_with(&names), "z + w");
        let b = boolean(2).restrict(0).unwrap();
        assert_eq!(b.arrangement.dim(), 1);
        assert_eq!(b.arrangement.len(), 1);
    }

    #[test]
    fn localization() {
        let b3 = boolean(3);
        let z = |v: [i64; 3]| v.iter().map(|&c| BigInt::from(c)).collect::<Vec<_>>();
        assert!(b3.localize(&[]).unwrap().is_empty());
        assert_eq!(b3.localize(&[z([0, 1, 0])]).unwrap().forms(), &[form(&[0, 1, 0])]);
        let xy = b3.localize(&[z([1, 1, 0]), z([1, -1, 0])]).unwrap();
        assert_eq!(xy.forms(), &[form(&[1, 0, 0]), form(&[0, 1, 0])]);
        assert_eq!(b3.localize(&[z([1, 1, 0])]), Err(ArrangementError::NotAFlat));
    }

    #[test]
    fn b_polynomials() {
        let b = boolean(2).b_polynomial(1).unwrap();
        assert_eq!(b.degree(), 0);
        assert_eq!(b.polynomial, MPoly::one(1));
        let c = concurrent(5);
        for h in 0..5 {
            assert_eq!(c.b_polynomial(h).unwrap().degree(), 3);
        }
        let x = x3();
        let b = x.b_polynomial(X3_X).unwrap();
        assert_eq!(b.degree(), 3);
        let names = b.chart.names(&x.names());
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        assert_eq!(b.polynomial.display_with(&refs), "yzw");
        for h in 0..x.len() {
            let deg = x.b_polynomial(h).unwrap().degree();
            assert_eq!(deg, x.len() - 1 - x.restrict(h).unwrap().arrangement.len());
        }
    }

    #[test]
    fn builtins() {
        assert_eq!(by_name("three_generic").unwrap().to_string(), "xyz(x + y + z)");
        assert_eq!(by_name("boolean(2)").unwrap().len(), 2);
        assert_eq!(by_name("generic_plus_one4").unwrap().len(), 5);
        assert_eq!(by_name("concurrent4").unwrap().to_string(), "xy(x + y)(x + 2y)");
        assert!(matches!(by_name("nope"), Err(ArrangementError::UnknownName(_))));
        assert_eq!(x3_restricted_x().to_string(), "xyz(x + y)(x + z)(y + z)");
    }
}
