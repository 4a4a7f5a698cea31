//! Generalized forms with matrix-valued coefficients: connections of a matrix
//! Lie algebra, their curvature and covariant derivative, and gauge
//! transformations by `(1 + μξ)π` and `(1 + μξ¹ + νξ¹ξ²)π`.

use crate::algebra::AlgebraValuedForm;
use crate::error::{Error, Result};
use crate::exterior::OrdinaryForm;
use crate::genform::{deriv_slots, sign, slot_offsets, wedge_slots, DerivativeContext, Slot};
use crate::group::PolyMatrix;
use crate::rational::Q;

/// A square matrix of ordinary `degree`-forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixForm {
    size: usize,
    dim: usize,
    degree: i32,
    entries: Vec<OrdinaryForm>,
}

impl MatrixForm {
    pub fn zero(size: usize, dim: usize, degree: i32) -> Self {
        MatrixForm {
            size,
            dim,
            degree,
            entries: vec![OrdinaryForm::zero(dim, degree); size * size],
        }
    }

    /// A matrix of functions as a matrix 0-form.
    pub fn function(m: &PolyMatrix) -> Self {
        MatrixForm {
            size: m.size(),
            dim: m.nvars(),
            degree: 0,
            entries: m.entries().iter().cloned().map(OrdinaryForm::function).collect(),
        }
    }

    /// `Σ_a X_a ω^a` through the matrix realization of the value algebra.
    pub fn from_algebra(u: &AlgebraValuedForm) -> Result<Self> {
        let basis = u
            .algebra()
            .realization()
            .ok_or_else(|| Error::MissingData(format!("matrix realization of {}", u.algebra().name())))?;
        let size = basis.first().map(|m| m.rows()).unwrap_or(0);
        let mut r = Self::zero(size, u.dim(), u.degree());
        for (a, x) in basis.iter().enumerate() {
            let c = u.component(a);
            if c.is_zero() {
                continue;
            }
            for i in 0..size {
                for j in 0..size {
                    let v = x.get(i, j);
                    if !v.is_zero() {
                        r.entries[i * size + j].add_scaled(c, v)?;
                    }
                }
            }
        }
        Ok(r)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> i32 {
        self.degree
    }

    pub fn get(&self, i: usize, j: usize) -> &OrdinaryForm {
        &self.entries[i * self.size + j]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(OrdinaryForm::is_zero)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.size != other.size {
            return Err(Error::Shape(format!("{}x{} against {}x{}", self.size, self.size, other.size, other.size)));
        }
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch(self.degree, other.degree));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.add(b))
            .collect::<Result<_>>()?;
        Ok(MatrixForm { entries, ..self.clone() })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Q) -> Self {
        MatrixForm {
            entries: self.entries.iter().map(|a| a.scale(c)).collect(),
            ..self.clone()
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&Q::from_int(-1))
    }

    /// `(a ∧ b)_ij = Σ_k a_ik ∧ b_kj`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let n = self.size;
        let mut r = Self::zero(n, self.dim, self.degree + other.degree);
        if OrdinaryForm::is_degenerate_degree(self.dim, r.degree) {
            return Ok(r);
        }
        let one = Q::one();
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        r.entries[i * n + j].add_wedge(a, b, &one)?;
                    }
                }
            }
        }
        Ok(r)
    }

    /// Graded commutator `a b − (−1)^{pq} b a`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        let s = sign(self.degree * other.degree);
        self.mul(other)?.sub(&other.mul(self)?.scale(&s))
    }

    pub fn ext_d(&self) -> Self {
        MatrixForm {
            degree: self.degree + 1,
            entries: self.entries.iter().map(OrdinaryForm::ext_d).collect(),
            ..self.clone()
        }
    }
}

impl Slot for MatrixForm {
    fn degree(&self) -> i32 {
        self.degree
    }
    fn plus(&self, other: &Self) -> Result<Self> {
        self.add(other)
    }
    fn times(&self, c: &Q) -> Self {
        self.scale(c)
    }
    fn d(&self) -> Self {
        self.ext_d()
    }
}

/// `dπ = Σ ∂ᵢπ dxⁱ`.
pub fn differential(m: &PolyMatrix) -> Result<MatrixForm> {
    let n = m.size();
    let dim = m.nvars();
    let mut r = MatrixForm::zero(n, dim, 1);
    for i in 0..dim {
        let di = m.diff(i);
        for (e, f) in r.entries.iter_mut().zip(di.entries()) {
            if !f.is_zero() {
                *e = e.add(&OrdinaryForm::monomial(f.clone(), &[i + 1])?)?;
            }
        }
    }
    Ok(r)
}

/// A type-N generalized form with matrix-valued slots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlainForm {
    n_type: u8,
    degree: i32,
    slots: Vec<MatrixForm>,
}

impl PlainForm {
    pub fn new(n_type: u8, degree: i32, slots: Vec<MatrixForm>) -> Result<Self> {
        let offsets = slot_offsets(n_type);
        if n_type > 2 || slots.len() != offsets.len() {
            return Err(Error::Invalid(format!("type {n_type} with {} slots", slots.len())));
        }
        for (s, off) in slots.iter().zip(offsets) {
            s.check(&slots[0])?;
            if s.degree != degree + off {
                return Err(Error::DegreeMismatch(degree + off, s.degree));
            }
        }
        Ok(PlainForm { n_type, degree, slots })
    }

    pub fn from_slots(slots: Vec<MatrixForm>) -> Result<Self> {
        let n_type = match slots.len() {
            1 => 0,
            2 => 1,
            4 => 2,
            n => return Err(Error::Invalid(format!("{n} slots"))),
        };
        let degree = slots[0].degree;
        Self::new(n_type, degree, slots)
    }

    /// The generalized 0-form equal to the constant identity matrix.
    pub fn unit(n_type: u8, size: usize, dim: usize) -> Result<Self> {
        let slots = slot_offsets(n_type)
            .iter()
            .enumerate()
            .map(|(i, off)| {
                if i == 0 {
                    MatrixForm::function(&PolyMatrix::identity(size, dim))
                } else {
                    MatrixForm::zero(size, dim, *off)
                }
            })
            .collect();
        Self::new(n_type, 0, slots)
    }

    pub fn n_type(&self) -> u8 {
        self.n_type
    }

    pub fn degree(&self) -> i32 {
        self.degree
    }

    pub fn slots(&self) -> &[MatrixForm] {
        &self.slots
    }

    pub fn slot(&self, i: usize) -> &MatrixForm {
        &self.slots[i]
    }

    pub fn is_zero(&self) -> bool {
        self.slots.iter().all(MatrixForm::is_zero)
    }

    fn zip(&self, other: &Self, f: impl Fn(&MatrixForm, &MatrixForm) -> Result<MatrixForm>) -> Result<Self> {
        if self.n_type != other.n_type {
            return Err(Error::TypeMismatch(self.n_type, other.n_type));
        }
        let slots = self.slots.iter().zip(&other.slots).map(|(a, b)| f(a, b)).collect::<Result<_>>()?;
        Self::new(self.n_type, self.degree, slots)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip(other, MatrixForm::add)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip(other, MatrixForm::sub)
    }

    pub fn scale(&self, c: &Q) -> Self {
        PlainForm {
            slots: self.slots.iter().map(|s| s.scale(c)).collect(),
            ..self.clone()
        }
    }

    /// `self ⊼ other`.
    pub fn wedge(&self, other: &Self) -> Result<Self> {
        if self.n_type != other.n_type {
            return Err(Error::TypeMismatch(self.n_type, other.n_type));
        }
        let slots = wedge_slots(other.degree, &self.slots, &other.slots, MatrixForm::mul)?;
        Self::new(self.n_type, self.degree + other.degree, slots)
    }

    /// `d̲` with `dξⁱ = kⁱ`.
    pub fn deriv(&self, ctx: &DerivativeContext) -> Result<Self> {
        if ctx.n_type != self.n_type {
            return Err(Error::TypeMismatch(ctx.n_type, self.n_type));
        }
        let id = |m: &MatrixForm| Ok(m.clone());
        let slots = deriv_slots(self.degree, &self.slots, ctx, id, id)?;
        Self::new(self.n_type, self.degree + 1, slots)
    }
}

/// `ℱ = d̲𝒜 + 𝒜 ⊼ 𝒜`.
pub fn plain_curvature(a: &PlainForm, ctx: &DerivativeContext) -> Result<PlainForm> {
    a.deriv(ctx)?.add(&a.wedge(a)?)
}

/// Curvature slots assembled term by term from the connection components.
pub fn plain_curvature_components(a: &PlainForm, ctx: &DerivativeContext) -> Result<PlainForm> {
    let s = a.slots();
    let a1 = &s[0];
    let f2 = a1.ext_d().add(&a1.mul(a1)?)?;
    let slots = match a.n_type() {
        1 => vec![f2.add(&s[1].scale(&ctx.k))?, s[1].ext_d().add(&a1.commutator(&s[1])?)?],
        2 => vec![
            f2.add(&s[1].scale(&ctx.k1))?.add(&s[2].scale(&ctx.k2))?,
            s[1].ext_d().add(&a1.commutator(&s[1])?)?.add(&s[3].scale(&ctx.k2))?,
            s[2].ext_d().add(&a1.commutator(&s[2])?)?.sub(&s[3].scale(&ctx.k1))?,
            s[3].ext_d().add(&a1.commutator(&s[3])?)?.add(&s[1].commutator(&s[2])?)?,
        ],
        n => return Err(Error::TypeMismatch(n, 1)),
    };
    PlainForm::from_slots(slots)
}

/// `𝐃𝒲 = d̲𝒲 + 𝒜 ⊼ 𝒲 + (−1)^{p+1} 𝒲 ⊼ 𝒜`.
pub fn plain_covariant(a: &PlainForm, w: &PlainForm, ctx: &DerivativeContext) -> Result<PlainForm> {
    let right = w.wedge(a)?.scale(&sign(w.degree() + 1));
    w.deriv(ctx)?.add(&a.wedge(w)?)?.add(&right)
}

/// `(1 + μξ)π` or `(1 + μξ¹ + νξ¹ξ²)π` with `π` unipotent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlainElement {
    pub pi: PolyMatrix,
    pub mu: MatrixForm,
    pub nu: Option<MatrixForm>,
}

impl PlainElement {
    pub fn new(pi: PolyMatrix, mu: MatrixForm, nu: Option<MatrixForm>) -> Result<Self> {
        if !pi.is_unipotent() {
            return Err(Error::Shape("π is not unipotent".into()));
        }
        if mu.degree() != 1 || nu.as_ref().is_some_and(|n| n.degree() != 2) {
            return Err(Error::Shape("μ must be a 1-form and ν a 2-form".into()));
        }
        Ok(PlainElement { pi, mu, nu })
    }

    pub fn n_type(&self) -> u8 {
        if self.nu.is_some() {
            2
        } else {
            1
        }
    }

    fn zero1(&self) -> MatrixForm {
        MatrixForm::zero(self.pi.size(), self.pi.nvars(), 1)
    }

    /// The element as a generalized 0-form, coefficients left of ξ.
    pub fn as_form(&self) -> Result<PlainForm> {
        let pi = MatrixForm::function(&self.pi);
        let mut slots = vec![pi.clone(), self.mu.mul(&pi)?];
        if let Some(nu) = &self.nu {
            slots.push(self.zero1());
            slots.push(nu.mul(&pi)?);
        }
        PlainForm::from_slots(slots)
    }

    /// `π⁻¹(1 − μξ¹ − νξ¹ξ²)`.
    pub fn inverse_form(&self) -> Result<PlainForm> {
        let pinv = MatrixForm::function(&self.pi.inverse_unipotent()?);
        let mut slots = vec![pinv.clone(), pinv.mul(&self.mu)?.neg()];
        if let Some(nu) = &self.nu {
            slots.push(self.zero1());
            slots.push(pinv.mul(nu)?.neg());
        }
        PlainForm::from_slots(slots)
    }

    fn conjugate(&self, m: &MatrixForm) -> Result<MatrixForm> {
        let pinv = MatrixForm::function(&self.pi.inverse_unipotent()?);
        pinv.mul(m)?.mul(&MatrixForm::function(&self.pi))
    }
}

/// `𝒜 ↦ g⁻¹ d̲g + g⁻¹ 𝒜 g`, by generalized products.
pub fn plain_gauge(a: &PlainForm, g: &PlainElement, ctx: &DerivativeContext) -> Result<PlainForm> {
    let (gf, ginv) = (g.as_form()?, g.inverse_form()?);
    ginv.wedge(&gf.deriv(ctx)?)?.add(&ginv.wedge(a)?.wedge(&gf)?)
}

/// `ℱ ↦ g⁻¹ ℱ g`, by generalized products.
pub fn plain_conjugate(f: &PlainForm, g: &PlainElement) -> Result<PlainForm> {
    g.inverse_form()?.wedge(f)?.wedge(&g.as_form()?)
}

/// The transformed connection written out slot by slot.
pub fn plain_gauge_components(a: &PlainForm, g: &PlainElement, ctx: &DerivativeContext) -> Result<PlainForm> {
    let s = a.slots();
    let mu = &g.mu;
    let pinv = MatrixForm::function(&g.pi.inverse_unipotent()?);
    let mc = pinv.mul(&differential(&g.pi)?)?;
    let c = |m: &MatrixForm| g.conjugate(m);
    let k1 = if a.n_type() == 1 { &ctx.k } else { &ctx.k1 };
    let base = mc.add(&c(&s[0].sub(&mu.scale(k1))?)?)?;
    let xi1 = mu
        .ext_d()
        .sub(&mu.mul(mu)?.scale(k1))?
        .add(&mu.mul(&s[0])?)?
        .add(&s[0].mul(mu)?)?
        .add(&s[1])?;
    match &g.nu {
        None => PlainForm::from_slots(vec![base, c(&xi1)?]),
        Some(nu) => {
            let xi1 = xi1.sub(&nu.scale(&ctx.k2))?;
            let xi2 = nu.scale(&ctx.k1).add(&s[2])?;
            let top = nu
                .ext_d()
                .add(&nu.commutator(mu)?.scale(&ctx.k1))?
                .add(&s[3])?
                .add(&s[0].mul(nu)?)?
                .sub(&nu.mul(&s[0])?)?
                .add(&s[2].mul(mu)?)?
                .sub(&mu.mul(&s[2])?)?;
            PlainForm::from_slots(vec![base, c(&xi1)?, c(&xi2)?, c(&top)?])
        }
    }
}

/// The transformed curvature written out slot by slot.
pub fn plain_conjugate_components(f: &PlainForm, g: &PlainElement) -> Result<PlainForm> {
    let s = f.slots();
    let mu = &g.mu;
    let c = |m: &MatrixForm| g.conjugate(m);
    let xi1 = s[1].add(&s[0].mul(mu)?)?.sub(&mu.mul(&s[0])?)?;
    match &g.nu {
        None => PlainForm::from_slots(vec![c(&s[0])?, c(&xi1)?]),
        Some(nu) => {
            let top = s[3]
                .add(&s[0].mul(nu)?)?
                .sub(&nu.mul(&s[0])?)?
                .add(&s[2].mul(mu)?)?
                .add(&mu.mul(&s[2])?)?;
            PlainForm::from_slots(vec![c(&s[0])?, c(&xi1)?, c(&s[2])?, c(&top)?])
        }
    }
}
