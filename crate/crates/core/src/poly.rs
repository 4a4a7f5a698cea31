//! Sparse multivariate polynomials over [`Q`] on a chart of at most eight
//! coordinates.
//!
//! Exponent vectors are packed into a `u64`, one byte per variable, so a
//! monomial product is a single integer addition. Each exponent must stay
//! below 128; every operation that could exceed that panics instead of
//! silently wrapping.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Q;

pub const MAX_VARS: usize = 8;
const HIGH_BITS: u64 = 0x8080_8080_8080_8080;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Monomial(u64);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    pub fn from_exps(exps: &[u32]) -> Result<Self> {
        if exps.len() > MAX_VARS {
            return Err(Error::Invalid(format!(
                "at most {MAX_VARS} variables supported, got {}",
                exps.len()
            )));
        }
        let mut packed = 0u64;
        for (i, &e) in exps.iter().enumerate() {
            if e >= 128 {
                return Err(Error::Invalid(format!("exponent {e} too large")));
            }
            packed |= (e as u64) << (8 * i);
        }
        Ok(Monomial(packed))
    }

    pub fn var(i: usize) -> Self {
        assert!(i < MAX_VARS);
        Monomial(1 << (8 * i))
    }

    pub fn exp(self, i: usize) -> u32 {
        ((self.0 >> (8 * i)) & 0xff) as u32
    }

    pub fn exps(self, n: usize) -> Vec<u32> {
        (0..n).map(|i| self.exp(i)).collect()
    }

    pub fn total_degree(self) -> u32 {
        (0..MAX_VARS).map(|i| self.exp(i)).sum()
    }

    /// Whether any variable at index `>= n` has a nonzero exponent.
    fn uses_beyond(self, n: usize) -> bool {
        n < MAX_VARS && (self.0 >> (8 * n)) != 0
    }

    pub fn times(self, other: Monomial) -> Monomial {
        let s = self.0 + other.0;
        assert!(
            (self.0 | other.0 | s) & HIGH_BITS == 0,
            "monomial exponent overflow"
        );
        Monomial(s)
    }

    /// `x_i^{e_i - 1}` with the exponent of `x_i` as multiplier, or `None`
    /// when the variable is absent.
    pub fn diff(self, i: usize) -> Option<(u32, Monomial)> {
        let e = self.exp(i);
        if e == 0 {
            None
        } else {
            Some((e, Monomial(self.0 - (1 << (8 * i)))))
        }
    }
}

/// A polynomial in `nvars` variables with rational coefficients.
///
/// No zero coefficients are stored, so equality of term tables is equality of
/// polynomials.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Q>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS, "at most {MAX_VARS} variables");
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Q) -> Self {
        let mut p = Polynomial::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Monomial::ONE, c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Polynomial::constant(nvars, Q::one())
    }

    /// The coordinate function `x^{i+1}` (0-based `i`).
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars);
        Polynomial::monomial(nvars, Monomial::var(i), Q::one())
    }

    pub fn monomial(nvars: usize, m: Monomial, c: Q) -> Self {
        assert!(!m.uses_beyond(nvars), "monomial uses too many variables");
        let mut p = Polynomial::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Q)>>(nvars: usize, it: I) -> Self {
        let mut p = Polynomial::zero(nvars);
        for (m, c) in it {
            p.add_term(m, &c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Q)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: Monomial) -> Q {
        self.terms.get(&m).cloned().unwrap_or_else(Q::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    /// Leading term in the internal monomial order, used for residual
    /// summaries.
    pub fn leading_term(&self) -> Option<(Monomial, Q)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c.clone()))
    }

    pub fn add_term(&mut self, m: Monomial, c: &Q) {
        if c.is_zero() {
            return;
        }
        assert!(!m.uses_beyond(self.nvars), "monomial uses too many variables");
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &Polynomial, c: &Q) {
        assert_eq!(self.nvars, other.nvars, "polynomial variable count mismatch");
        if c.is_zero() {
            return;
        }
        for (m, v) in &other.terms {
            let t = v * c;
            self.add_term(*m, &t);
        }
    }

    /// `self += c * a * b`.
    pub fn add_product(&mut self, a: &Polynomial, b: &Polynomial, c: &Q) {
        assert_eq!(a.nvars, b.nvars, "polynomial variable count mismatch");
        assert_eq!(self.nvars, a.nvars, "polynomial variable count mismatch");
        if c.is_zero() {
            return;
        }
        for (ma, ca) in &a.terms {
            let cac = ca * c;
            for (mb, cb) in &b.terms {
                let t = &cac * cb;
                self.add_term(ma.times(*mb), &t);
            }
        }
    }

    pub fn scale(&self, c: &Q) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, v)| (*m, -v)).collect(),
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut r = self.clone();
        r.add_scaled(other, &Q::one());
        r
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let mut r = self.clone();
        r.add_scaled(other, &Q::from_int(-1));
        r
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut r = Polynomial::zero(self.nvars);
        r.add_product(self, other, &Q::one());
        r
    }

    /// Partial derivative with respect to coordinate `i` (0-based).
    pub fn diff(&self, i: usize) -> Polynomial {
        assert!(i < self.nvars);
        let mut r = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            if let Some((e, dm)) = m.diff(i) {
                let t = c * &Q::from_int(e as i64);
                r.add_term(dm, &t);
            }
        }
        r
    }

    /// Exact integral over the unit cube `[0,1]^n`.
    pub fn integrate_unit_cube(&self) -> Q {
        let mut total = Q::zero();
        for (m, c) in &self.terms {
            let mut den = 1i64;
            for i in 0..self.nvars {
                den *= m.exp(i) as i64 + 1;
            }
            total += &(c * &Q::new(1, den));
        }
        total
    }

    /// Evaluates at a rational point.
    pub fn eval(&self, point: &[Q]) -> Q {
        assert_eq!(point.len(), self.nvars);
        let mut total = Q::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, x) in point.iter().enumerate() {
                for _ in 0..m.exp(i) {
                    t *= x;
                }
            }
            total += &t;
        }
        total
    }

    pub fn to_wire(&self) -> Vec<WireTerm> {
        self.terms
            .iter()
            .map(|(m, c)| WireTerm {
                exps: m.exps(self.nvars),
                coeff: c.clone(),
            })
            .collect()
    }

    pub fn from_wire(nvars: usize, terms: &[WireTerm]) -> Result<Self> {
        if nvars > MAX_VARS {
            return Err(Error::Invalid(format!(
                "at most {MAX_VARS} variables supported, got {nvars}"
            )));
        }
        let mut p = Polynomial::zero(nvars);
        for t in terms {
            if t.exps.len() != nvars {
                return Err(Error::DimensionMismatch(t.exps.len(), nvars));
            }
            p.add_term(Monomial::from_exps(&t.exps)?, &t.coeff);
        }
        Ok(p)
    }
}

/// One term of a serialized polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WireTerm {
    pub exps: Vec<u32>,
    pub coeff: Q,
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let (sign, mag) = if c.is_negative() {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mut factors = Vec::new();
            for i in 0..self.nvars {
                match m.exp(i) {
                    0 => {}
                    1 => factors.push(format!("x{}", i + 1)),
                    e => factors.push(format!("x{}^{}", i + 1, e)),
                }
            }
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{mag}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, i: usize) -> Polynomial {
        Polynomial::var(n, i)
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let p = x(2, 0).add(&x(2, 1));
        let q = p.sub(&x(2, 1)).sub(&x(2, 0));
        assert!(q.is_zero());
        assert_eq!(q, Polynomial::zero(2));
    }

    #[test]
    fn product_and_derivative() {
        // (x1 + x2)^2 = x1^2 + 2 x1 x2 + x2^2
        let p = x(2, 0).add(&x(2, 1));
        let sq = p.mul(&p);
        assert_eq!(sq.len(), 3);
        let m = Monomial::from_exps(&[1, 1]).unwrap();
        assert_eq!(sq.coeff(m), Q::from_int(2));
        // d/dx1 = 2 x1 + 2 x2
        let d = sq.diff(0);
        assert_eq!(d, p.scale(&Q::from_int(2)));
    }

    #[test]
    fn cube_integral() {
        // ∫ x1 x2^2 over [0,1]^2 = 1/2 * 1/3
        let m = Monomial::from_exps(&[1, 2]).unwrap();
        let p = Polynomial::monomial(2, m, Q::one());
        assert_eq!(p.integrate_unit_cube(), Q::new(1, 6));
        assert_eq!(Polynomial::one(3).integrate_unit_cube(), Q::one());
    }

    #[test]
    fn display() {
        let p = x(2, 0).mul(&x(2, 0)).sub(&Polynomial::constant(2, Q::new(1, 2)));
        assert_eq!(p.to_string(), "x1^2 - 1/2");
    }

    #[test]
    #[should_panic(expected = "overflow")]
    fn exponent_overflow_panics() {
        let m = Monomial::from_exps(&[100]).unwrap();
        let _ = m.times(m);
    }
}
