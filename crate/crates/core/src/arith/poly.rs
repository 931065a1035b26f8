use std::cmp::Ordering;
use std::fmt;

use super::coef::{Coef, Field};
use super::monomial::Monomial;
use crate::error::{Error, Result};

/// Sparse multivariate polynomial over `Q` or `F_p`.
///
/// Terms are kept strictly descending in degree-reverse-lexicographic order
/// with no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    nvars: usize,
    field: Field,
    terms: Vec<(Monomial, Coef)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Checked ring operation: rejects operands from different rings.
pub fn poly_arith(a: &Poly, b: &Poly, op: ArithOp) -> Result<Poly> {
    if a.nvars != b.nvars || a.field != b.field {
        return Err(Error::InputMismatch(format!(
            "operands live in {}[{} vars] and {}[{} vars]",
            a.field, a.nvars, b.field, b.nvars
        )));
    }
    Ok(match op {
        ArithOp::Add => a.add(b),
        ArithOp::Sub => a.sub(b),
        ArithOp::Mul => a.mul(b),
    })
}

impl Poly {
    pub fn zero(nvars: usize, field: Field) -> Self {
        Poly {
            nvars,
            field,
            terms: Vec::new(),
        }
    }

    pub fn constant(nvars: usize, c: Coef) -> Self {
        Poly::monomial(Monomial::one(nvars), c)
    }

    pub fn one(nvars: usize, field: Field) -> Self {
        Poly::constant(nvars, field.one())
    }

    pub fn monomial(m: Monomial, c: Coef) -> Self {
        let field = c.field();
        let nvars = m.nvars();
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Poly { nvars, field, terms }
    }

    pub fn var(nvars: usize, field: Field, i: usize) -> Self {
        Poly::monomial(Monomial::var(nvars, i), field.one())
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms(nvars: usize, field: Field, mut terms: Vec<(Monomial, Coef)>) -> Self {
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(Monomial, Coef)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), nvars);
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = lc.add(&c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Poly {
            nvars,
            field,
            terms: out,
        }
    }

    /// Terms already sorted descending with nonzero coefficients.
    pub(crate) fn from_sorted_terms(nvars: usize, field: Field, terms: Vec<(Monomial, Coef)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Poly {
            nvars,
            field,
            terms,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn terms(&self) -> &[(Monomial, Coef)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Coef)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn leading(&self) -> Option<&(Monomial, Coef)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    /// Total degree of the leading (hence largest) term.
    pub fn degree(&self) -> Option<u32> {
        self.terms.first().map(|t| t.0.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => self.terms.iter().all(|(t, _)| t.degree() == m.degree()),
        }
    }

    /// Coefficient of the constant monomial.
    pub fn constant_term(&self) -> Coef {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => self.field.zero(),
        }
    }

    pub fn coefficient_of(&self, m: &Monomial) -> Coef {
        match self.terms.binary_search_by(|(t, _)| m.cmp(t)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => self.field.zero(),
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.combine(other, true)
    }

    fn combine(&self, other: &Poly, subtract: bool) -> Poly {
        debug_assert_eq!(self.field, other.field);
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (a, ca) = &self.terms[i];
            let (b, cb) = &other.terms[j];
            match a.cmp(b) {
                Ordering::Greater => {
                    out.push((a.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b.clone(), if subtract { cb.neg() } else { cb.clone() }));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if subtract { ca.sub(cb) } else { ca.add(cb) };
                    if !c.is_zero() {
                        out.push((a.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(
            other.terms[j..]
                .iter()
                .map(|(m, c)| (m.clone(), if subtract { c.neg() } else { c.clone() })),
        );
        Poly {
            nvars: self.nvars,
            field: self.field,
            terms: out,
        }
    }

    pub fn neg(&self) -> Poly {
        Poly {
            nvars: self.nvars,
            field: self.field,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &Coef) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars, self.field);
        }
        Poly {
            nvars: self.nvars,
            field: self.field,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a.mul(c))).collect(),
        }
    }

    /// Multiplication by a single term; order is preserved by monomial shifts.
    pub fn mul_term(&self, m: &Monomial, c: &Coef) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars, self.field);
        }
        Poly {
            nvars: self.nvars,
            field: self.field,
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a.mul(c))).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.nvars, self.field);
        }
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                terms.push((a.mul(b), ca.mul(cb)));
            }
        }
        Poly::from_terms(self.nvars, self.field, terms)
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one(self.nvars, self.field);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Scales so the leading coefficient is one.
    pub fn monic(&self) -> Poly {
        match self.terms.first() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.inv().expect("nonzero leading coefficient")),
        }
    }

    pub fn fmt_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative_display();
            let abs = if neg { c.neg() } else { c.clone() };
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = m.fmt_with(names);
            if m.is_one() {
                s.push_str(&abs.to_string());
            } else if abs.is_one() {
                s.push_str(&mono);
            } else {
                s.push_str(&format!("{abs}*{mono}"));
            }
        }
        s
    }
}

/// Default variable names: `x, y, z, w` for small rings, `x1..xn` otherwise.
pub fn default_var_names(nvars: usize) -> Vec<String> {
    if nvars <= 4 {
        ["x", "y", "z", "w"][..nvars].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=nvars).map(|i| format!("x{i}")).collect()
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.fmt_with(&default_var_names(self.nvars)))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy(field: Field) -> (Poly, Poly) {
        (Poly::var(2, field, 0), Poly::var(2, field, 1))
    }

    #[test]
    fn difference_of_squares() {
        let (x, y) = xy(Field::Rational);
        let p = x.add(&y).mul(&x.sub(&y));
        let expected = x.mul(&x).sub(&y.mul(&y));
        assert_eq!(p, expected);
        assert_eq!(p.to_string(), "x^2 - y^2");
    }

    #[test]
    fn zero_absorbs() {
        let (x, y) = xy(Field::Rational);
        let f = x.add(&y).pow(3);
        assert!(f.mul(&Poly::zero(2, Field::Rational)).is_zero());
    }

    #[test]
    fn frobenius_in_characteristic_two() {
        let f2 = Field::prime(2).unwrap();
        let (x, y) = xy(f2);
        let sq = x.add(&y).pow(2);
        assert_eq!(sq, x.mul(&x).add(&y.mul(&y)));
    }

    #[test]
    fn mismatched_rings_are_rejected() {
        let a = Poly::var(2, Field::Rational, 0);
        let b = Poly::var(3, Field::Rational, 0);
        let c = Poly::var(2, Field::Prime(7), 0);
        assert!(matches!(poly_arith(&a, &b, ArithOp::Add), Err(Error::InputMismatch(_))));
        assert!(matches!(poly_arith(&a, &c, ArithOp::Mul), Err(Error::InputMismatch(_))));
        assert!(poly_arith(&a, &a, ArithOp::Sub).unwrap().is_zero());
    }

    #[test]
    fn homogeneity() {
        let (x, y) = xy(Field::Rational);
        assert!(x.mul(&x).add(&x.mul(&y)).is_homogeneous());
        assert!(!y.sub(&x.mul(&x)).is_homogeneous());
    }
}
