//! Polynomial exterior calculus on a single chart of ℝⁿ.
//!
//! A p-form is stored as a map from strictly increasing index sets (bitmasks,
//! bit `i` standing for `dx^{i+1}`) to polynomial coefficients. The metric is
//! Euclidean with the standard orientation, and integration is over the unit
//! cube `[0,1]ⁿ`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial, WireTerm, MAX_VARS};
use crate::rational::Q;

pub type IndexSet = u16;

/// Sign of `dx^I ∧ dx^J` relative to `dx^{I∪J}`, or `None` when they overlap.
pub fn basis_wedge_sign(i: IndexSet, j: IndexSet) -> Option<bool> {
    if i & j != 0 {
        return None;
    }
    // Each element of J must move past the elements of I that are larger.
    let mut inversions = 0u32;
    let mut rest = j;
    while rest != 0 {
        let b = rest.trailing_zeros();
        rest &= rest - 1;
        inversions += (i >> (b + 1)).count_ones();
    }
    Some(inversions % 2 == 1)
}

fn indices_of(set: IndexSet) -> Vec<usize> {
    (0..16).filter(|b| set & (1 << b) != 0).collect()
}

/// An ordinary p-form with polynomial coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OrdinaryForm {
    dim: usize,
    degree: i32,
    comps: BTreeMap<IndexSet, Polynomial>,
}

impl OrdinaryForm {
    pub fn zero(dim: usize, degree: i32) -> Self {
        assert!(dim <= MAX_VARS, "chart dimension at most {MAX_VARS}");
        OrdinaryForm {
            dim,
            degree,
            comps: BTreeMap::new(),
        }
    }

    /// Degree is out of range, so the only such form is zero.
    pub fn is_degenerate_degree(dim: usize, degree: i32) -> bool {
        degree < 0 || degree as usize > dim
    }

    /// A 0-form.
    pub fn function(f: Polynomial) -> Self {
        let dim = f.nvars();
        let mut r = OrdinaryForm::zero(dim, 0);
        if !f.is_zero() {
            r.comps.insert(0, f);
        }
        r
    }

    /// `f dx^{i1} ∧ … ∧ dx^{ip}` with 1-based indices in any order; repeated
    /// indices give zero.
    pub fn monomial(f: Polynomial, indices: &[usize]) -> Result<Self> {
        let dim = f.nvars();
        let degree = indices.len() as i32;
        let mut set: IndexSet = 0;
        let mut sign = false;
        for &ix in indices {
            if ix == 0 || ix > dim {
                return Err(Error::Invalid(format!(
                    "index {ix} out of range for dimension {dim}"
                )));
            }
            let bit: IndexSet = 1 << (ix - 1);
            match basis_wedge_sign(set, bit) {
                None => return Ok(OrdinaryForm::zero(dim, degree)),
                Some(s) => sign ^= s,
            }
            set |= bit;
        }
        let mut r = OrdinaryForm::zero(dim, degree);
        let f = if sign { f.neg() } else { f };
        r.insert(set, f);
        Ok(r)
    }

    /// `dx^{i1} ∧ … ∧ dx^{ip}`.
    pub fn dx(dim: usize, indices: &[usize]) -> Self {
        OrdinaryForm::monomial(Polynomial::one(dim), indices).expect("valid basis indices")
    }

    /// The standard volume form `dx^1 ∧ … ∧ dx^n`.
    pub fn volume(dim: usize) -> Self {
        let idx: Vec<usize> = (1..=dim).collect();
        OrdinaryForm::dx(dim, &idx)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> i32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn components(&self) -> impl Iterator<Item = (IndexSet, &Polynomial)> {
        self.comps.iter().map(|(k, v)| (*k, v))
    }

    pub fn component(&self, set: IndexSet) -> Option<&Polynomial> {
        self.comps.get(&set)
    }

    /// Number of nonzero coefficient monomials, a rough size measure.
    pub fn term_count(&self) -> usize {
        self.comps.values().map(Polynomial::len).sum()
    }

    fn insert(&mut self, set: IndexSet, f: Polynomial) {
        if Self::is_degenerate_degree(self.dim, self.degree) || f.is_zero() {
            return;
        }
        debug_assert_eq!(set.count_ones() as i32, self.degree);
        self.comps.insert(set, f);
    }

    fn accumulate(&mut self, set: IndexSet, f: &Polynomial, c: &Q) {
        if Self::is_degenerate_degree(self.dim, self.degree) {
            return;
        }
        match self.comps.get_mut(&set) {
            Some(p) => {
                p.add_scaled(f, c);
                if p.is_zero() {
                    self.comps.remove(&set);
                }
            }
            None => {
                let p = f.scale(c);
                if !p.is_zero() {
                    self.comps.insert(set, p);
                }
            }
        }
    }

    fn check_same_shape(&self, other: &OrdinaryForm) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch(self.degree, other.degree));
        }
        Ok(())
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &OrdinaryForm, c: &Q) -> Result<()> {
        self.check_same_shape(other)?;
        if c.is_zero() {
            return Ok(());
        }
        for (set, f) in &other.comps {
            self.accumulate(*set, f, c);
        }
        Ok(())
    }

    pub fn add(&self, other: &OrdinaryForm) -> Result<OrdinaryForm> {
        let mut r = self.clone();
        r.add_scaled(other, &Q::one())?;
        Ok(r)
    }

    pub fn sub(&self, other: &OrdinaryForm) -> Result<OrdinaryForm> {
        let mut r = self.clone();
        r.add_scaled(other, &Q::from_int(-1))?;
        Ok(r)
    }

    pub fn scale(&self, c: &Q) -> OrdinaryForm {
        let mut r = OrdinaryForm::zero(self.dim, self.degree);
        if c.is_zero() {
            return r;
        }
        for (set, f) in &self.comps {
            r.comps.insert(*set, f.scale(c));
        }
        r
    }

    pub fn neg(&self) -> OrdinaryForm {
        self.scale(&Q::from_int(-1))
    }

    /// Multiplication by a 0-form coefficient function.
    pub fn mul_function(&self, f: &Polynomial) -> OrdinaryForm {
        assert_eq!(f.nvars(), self.dim, "function and form live on different charts");
        let mut r = OrdinaryForm::zero(self.dim, self.degree);
        for (set, p) in &self.comps {
            r.insert(*set, p.mul(f));
        }
        r
    }

    /// `self += c * (a ∧ b)`.
    pub fn add_wedge(&mut self, a: &OrdinaryForm, b: &OrdinaryForm, c: &Q) -> Result<()> {
        if a.dim != b.dim {
            return Err(Error::DimensionMismatch(a.dim, b.dim));
        }
        if self.dim != a.dim {
            return Err(Error::DimensionMismatch(self.dim, a.dim));
        }
        if self.degree != a.degree + b.degree {
            return Err(Error::DegreeMismatch(self.degree, a.degree + b.degree));
        }
        if c.is_zero() || Self::is_degenerate_degree(self.dim, self.degree) {
            return Ok(());
        }
        let neg = -c;
        for (si, fi) in &a.comps {
            for (sj, fj) in &b.comps {
                let Some(flip) = basis_wedge_sign(*si, *sj) else {
                    continue;
                };
                let coeff = if flip { &neg } else { c };
                let set = si | sj;
                let mut prod = Polynomial::zero(self.dim);
                prod.add_product(fi, fj, coeff);
                self.accumulate(set, &prod, &Q::one());
            }
        }
        Ok(())
    }

    /// Exterior derivative; the result of a top-degree form is zero.
    pub fn ext_d(&self) -> OrdinaryForm {
        let mut r = OrdinaryForm::zero(self.dim, self.degree + 1);
        if Self::is_degenerate_degree(self.dim, self.degree + 1) {
            return r;
        }
        for (set, f) in &self.comps {
            for i in 0..self.dim {
                let bit: IndexSet = 1 << i;
                if set & bit != 0 {
                    continue;
                }
                let df = f.diff(i);
                if df.is_zero() {
                    continue;
                }
                // dx^i ∧ dx^I: move dx^i past the indices below it.
                let below = (set & (bit - 1)).count_ones();
                let c = Q::sign(below as i64);
                r.accumulate(set | bit, &df, &c);
            }
        }
        r
    }

    /// Euclidean Hodge star: `*(dx^I) = sign(I, Iᶜ) dx^{Iᶜ}`.
    pub fn hodge(&self) -> OrdinaryForm {
        let n = self.dim;
        let mut r = OrdinaryForm::zero(n, n as i32 - self.degree);
        let full: IndexSet = if n == 0 { 0 } else { ((1u32 << n) - 1) as IndexSet };
        for (set, f) in &self.comps {
            let comp = full & !set;
            let flip = basis_wedge_sign(*set, comp).expect("disjoint by construction");
            let c = if flip { Q::from_int(-1) } else { Q::one() };
            r.accumulate(comp, f, &c);
        }
        r
    }

    /// Exact integral of a top-degree form over `[0,1]ⁿ`.
    pub fn integrate_cube(&self) -> Result<Q> {
        if self.degree != self.dim as i32 {
            return Err(Error::NotTopDegree {
                degree: self.degree,
                dim: self.dim,
            });
        }
        Ok(self
            .comps
            .values()
            .next()
            .map(Polynomial::integrate_unit_cube)
            .unwrap_or_else(Q::zero))
    }

    /// Wire representation: one entry per component with 1-based indices.
    pub fn to_wire(&self) -> WireForm {
        WireForm {
            dim: self.dim,
            degree: self.degree,
            components: self
                .comps
                .iter()
                .map(|(set, f)| WireComponent {
                    indices: indices_of(*set).into_iter().map(|i| i + 1).collect(),
                    poly: f.to_wire(),
                })
                .collect(),
        }
    }

    pub fn from_wire(w: &WireForm) -> Result<OrdinaryForm> {
        if w.dim > MAX_VARS {
            return Err(Error::Invalid(format!(
                "chart dimension {} exceeds {MAX_VARS}",
                w.dim
            )));
        }
        if w.degree < 0 || w.degree as usize > w.dim {
            return Err(Error::Invalid(format!(
                "degree {} is out of range on a {}-dimensional chart",
                w.degree, w.dim
            )));
        }
        let mut r = OrdinaryForm::zero(w.dim, w.degree);
        for c in &w.components {
            if c.indices.len() as i32 != w.degree {
                return Err(Error::DegreeMismatch(c.indices.len() as i32, w.degree));
            }
            if c.indices.windows(2).any(|p| p[0] >= p[1]) {
                return Err(Error::Invalid(format!(
                    "indices {:?} are not strictly increasing",
                    c.indices
                )));
            }
            let poly = Polynomial::from_wire(w.dim, &c.poly)?;
            let piece = OrdinaryForm::monomial(poly, &c.indices)?;
            r.add_scaled(&piece, &Q::one())?;
        }
        Ok(r)
    }

    /// The first nonzero component and its leading term, for reports.
    pub fn leading_term(&self) -> Option<(Vec<usize>, Monomial, Q)> {
        self.comps.iter().next().and_then(|(set, f)| {
            f.leading_term()
                .map(|(m, c)| (indices_of(*set).into_iter().map(|i| i + 1).collect(), m, c))
        })
    }
}

pub fn wedge(a: &OrdinaryForm, b: &OrdinaryForm) -> Result<OrdinaryForm> {
    if a.dim != b.dim {
        return Err(Error::DimensionMismatch(a.dim, b.dim));
    }
    let mut r = OrdinaryForm::zero(a.dim, a.degree + b.degree);
    r.add_wedge(a, b, &Q::one())?;
    Ok(r)
}

pub fn ext_d(a: &OrdinaryForm) -> OrdinaryForm {
    a.ext_d()
}

pub fn hodge(a: &OrdinaryForm) -> OrdinaryForm {
    a.hodge()
}

pub fn integrate_cube(a: &OrdinaryForm) -> Result<Q> {
    a.integrate_cube()
}

/// `Σ cᵢ formsᵢ`; all forms must share dimension and degree.
pub fn linear_combine(coeffs: &[Q], forms: &[OrdinaryForm]) -> Result<OrdinaryForm> {
    if coeffs.len() != forms.len() {
        return Err(Error::Invalid(format!(
            "{} coefficients for {} forms",
            coeffs.len(),
            forms.len()
        )));
    }
    let Some(first) = forms.first() else {
        return Err(Error::Invalid("empty linear combination".into()));
    };
    let mut r = OrdinaryForm::zero(first.dim, first.degree);
    for (c, f) in coeffs.iter().zip(forms) {
        r.add_scaled(f, c)?;
    }
    Ok(r)
}

/// `((a, b)) = ∫ a ∧ *b` over the unit cube.
pub fn inner(a: &OrdinaryForm, b: &OrdinaryForm) -> Result<Q> {
    a.check_same_shape(b)?;
    wedge(a, &b.hodge())?.integrate_cube()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WireComponent {
    pub indices: Vec<usize>,
    pub poly: Vec<WireTerm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WireForm {
    pub dim: usize,
    pub degree: i32,
    pub components: Vec<WireComponent>,
}

impl fmt::Display for OrdinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.comps.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (set, p) in &self.comps {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let basis: Vec<String> = indices_of(*set)
                .into_iter()
                .map(|i| format!("dx{}", i + 1))
                .collect();
            if basis.is_empty() {
                write!(f, "({p})")?;
            } else {
                write!(f, "({p}) {}", basis.join("^"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for OrdinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OrdinaryForm[n={}, p={}]({self})", self.dim, self.degree)
    }
}
