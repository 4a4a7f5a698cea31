//! Lie algebras, Lie 2- and 3-algebras (differential crossed modules and
//! 2-crossed modules), and forms valued in them.
//!
//! Every map on algebras extends to forms component-wise: for `A = A^a ⊗ X_a`
//! and `B = B^b ⊗ Y_b`, a bilinear map `⋆` gives `A ⋆ B = A^a ∧ B^b ⊗ X_a ⋆ Y_b`.

use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exterior::OrdinaryForm;
use crate::linalg::{Bilinear, Matrix};
use crate::poly::Polynomial;
use crate::rational::Q;

/// A finite-dimensional Lie algebra given by structure constants
/// `[X_a, X_b] = f^c_{ab} X_c`, optionally realized by matrices.
#[derive(Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    name: String,
    labels: Vec<String>,
    structure: Bilinear,
    realization: Option<Vec<Matrix>>,
}

impl LieAlgebra {
    pub fn new(name: impl Into<String>, labels: Vec<String>, structure: Bilinear) -> Result<Self> {
        let m = labels.len();
        if structure.left_dim() != m || structure.right_dim() != m || structure.out_dim() != m {
            return Err(Error::Invalid(format!(
                "structure tensor shape does not match {m} basis labels"
            )));
        }
        Ok(LieAlgebra {
            name: name.into(),
            labels,
            structure,
            realization: None,
        })
    }

    pub fn abelian(name: impl Into<String>, labels: &[&str]) -> Self {
        let m = labels.len();
        LieAlgebra::new(
            name,
            labels.iter().map(|s| s.to_string()).collect(),
            Bilinear::zero(m, m, m),
        )
        .expect("consistent shape")
    }

    /// Builds the algebra spanned by the given matrices, reading structure
    /// constants off their commutators. Fails if the span is not closed.
    pub fn from_matrices(name: impl Into<String>, labels: &[&str], basis: Vec<Matrix>) -> Result<Self> {
        let decomp = MatrixSpan::new(&basis)?;
        let m = basis.len();
        let mut entries = Vec::new();
        for a in 0..m {
            for b in 0..m {
                let comm = basis[a].mul(&basis[b])?.sub(&basis[b].mul(&basis[a])?)?;
                let coords = decomp.coordinates(&comm)?;
                for (c, v) in coords.into_iter().enumerate() {
                    if !v.is_zero() {
                        entries.push((a, b, c, v));
                    }
                }
            }
        }
        let mut alg = LieAlgebra::new(
            name,
            labels.iter().map(|s| s.to_string()).collect(),
            Bilinear::from_entries(m, m, m, entries),
        )?;
        alg.realization = Some(basis);
        Ok(alg)
    }

    /// The one-dimensional abelian algebra used for real-valued forms.
    pub fn scalar() -> Arc<LieAlgebra> {
        static SCALAR: OnceLock<Arc<LieAlgebra>> = OnceLock::new();
        SCALAR
            .get_or_init(|| Arc::new(LieAlgebra::abelian("R", &["1"])))
            .clone()
    }

    pub fn with_realization(mut self, basis: Vec<Matrix>) -> Self {
        self.realization = Some(basis);
        self
    }

    pub fn renamed(&self, name: impl Into<String>) -> Self {
        let mut a = self.clone();
        a.name = name.into();
        a
    }

    pub fn with_structure(&self, structure: Bilinear) -> Self {
        let mut a = self.clone();
        a.structure = structure;
        a
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn structure(&self) -> &Bilinear {
        &self.structure
    }

    pub fn realization(&self) -> Option<&[Matrix]> {
        self.realization.as_deref()
    }

    pub fn is_abelian(&self) -> bool {
        self.structure.is_zero()
    }

    pub fn is_scalar(&self) -> bool {
        self.name == "R" && self.dim() == 1
    }

    /// `[x, y]` on coordinate vectors.
    pub fn bracket_vec(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        self.structure.apply(x, y)
    }
}

impl fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LieAlgebra({}, dim {})", self.name, self.dim())
    }
}

/// Decomposes matrices in the span of a fixed linearly independent basis.
#[derive(Clone, Debug)]
pub struct MatrixSpan {
    size: usize,
    basis: Vec<Matrix>,
    left_inverse: Matrix,
}

impl MatrixSpan {
    pub fn new(basis: &[Matrix]) -> Result<Self> {
        let size = basis.first().map(Matrix::rows).unwrap_or(0);
        for b in basis {
            if b.rows() != size || b.cols() != size {
                return Err(Error::Invalid("basis matrices must share a square shape".into()));
            }
        }
        // Columns are the flattened basis matrices.
        let flat = Matrix::from_fn(size * size, basis.len(), |i, a| {
            basis[a].get(i / size, i % size).clone()
        });
        Ok(MatrixSpan {
            size,
            basis: basis.to_vec(),
            left_inverse: flat.left_inverse()?,
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    /// Coordinates of `m` in the basis, or `NotInSpan`.
    pub fn coordinates(&self, m: &Matrix) -> Result<Vec<Q>> {
        let flat: Vec<Q> = (0..self.size * self.size)
            .map(|i| m.get(i / self.size, i % self.size).clone())
            .collect();
        let coords = self.left_inverse.apply(&flat);
        let mut back = Matrix::zeros(self.size, self.size);
        for (a, c) in coords.iter().enumerate() {
            if !c.is_zero() {
                back = back.add(&self.basis[a].scale(c))?;
            }
        }
        if &back != m {
            return Err(Error::NotInSpan);
        }
        Ok(coords)
    }

    /// Coordinates of a polynomial matrix, entry by entry in the monomials.
    pub fn poly_coordinates(&self, entries: &[Polynomial], nvars: usize) -> Result<Vec<Polynomial>> {
        let n = self.size;
        let mut monos = std::collections::BTreeSet::new();
        for p in entries {
            for (m, _) in p.terms() {
                monos.insert(*m);
            }
        }
        let mut out = vec![Polynomial::zero(nvars); self.basis.len()];
        for m in monos {
            let slice = Matrix::from_fn(n, n, |i, j| entries[i * n + j].coeff(m));
            let coords = self.coordinates(&slice)?;
            for (a, c) in coords.into_iter().enumerate() {
                out[a].add_term(m, &c);
            }
        }
        Ok(out)
    }
}

/// A form valued in a Lie algebra, `A = A^a ⊗ X_a`.
#[derive(Clone)]
pub struct AlgebraValuedForm {
    alg: Arc<LieAlgebra>,
    dim: usize,
    degree: i32,
    comps: Vec<OrdinaryForm>,
}

impl PartialEq for AlgebraValuedForm {
    fn eq(&self, other: &Self) -> bool {
        same_algebra(&self.alg, &other.alg)
            && self.dim == other.dim
            && self.degree == other.degree
            && self.comps == other.comps
    }
}

impl Eq for AlgebraValuedForm {}

pub fn same_algebra(a: &LieAlgebra, b: &LieAlgebra) -> bool {
    a.name == b.name && a.dim() == b.dim()
}

fn mismatch(expected: &LieAlgebra, found: &LieAlgebra) -> Error {
    Error::AlgebraMismatch {
        expected: expected.name.clone(),
        found: found.name.clone(),
    }
}

impl AlgebraValuedForm {
    pub fn zero(alg: Arc<LieAlgebra>, dim: usize, degree: i32) -> Self {
        let comps = vec![OrdinaryForm::zero(dim, degree); alg.dim()];
        AlgebraValuedForm {
            alg,
            dim,
            degree,
            comps,
        }
    }

    pub fn from_components(alg: Arc<LieAlgebra>, comps: Vec<OrdinaryForm>) -> Result<Self> {
        if comps.len() != alg.dim() {
            return Err(Error::Invalid(format!(
                "{} components for algebra {} of dimension {}",
                comps.len(),
                alg.name,
                alg.dim()
            )));
        }
        let Some(first) = comps.first() else {
            return Err(Error::Invalid("algebra of dimension zero".into()));
        };
        let (dim, degree) = (first.dim(), first.degree());
        for c in &comps {
            if c.dim() != dim {
                return Err(Error::DimensionMismatch(dim, c.dim()));
            }
            if c.degree() != degree {
                return Err(Error::DegreeMismatch(degree, c.degree()));
            }
        }
        Ok(AlgebraValuedForm {
            alg,
            dim,
            degree,
            comps,
        })
    }

    /// `form ⊗ X_a`.
    pub fn basis_multiple(alg: Arc<LieAlgebra>, a: usize, form: OrdinaryForm) -> Self {
        let mut r = AlgebraValuedForm::zero(alg, form.dim(), form.degree());
        r.comps[a] = form;
        r
    }

    /// A real-valued form as a form over the scalar algebra.
    pub fn real(form: OrdinaryForm) -> Self {
        AlgebraValuedForm::from_components(LieAlgebra::scalar(), vec![form]).expect("one component")
    }

    pub fn algebra(&self) -> &Arc<LieAlgebra> {
        &self.alg
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> i32 {
        self.degree
    }

    pub fn components(&self) -> &[OrdinaryForm] {
        &self.comps
    }

    pub fn component(&self, a: usize) -> &OrdinaryForm {
        &self.comps[a]
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(OrdinaryForm::is_zero)
    }

    pub fn term_count(&self) -> usize {
        self.comps.iter().map(OrdinaryForm::term_count).sum()
    }

    pub fn is_real(&self) -> bool {
        self.alg.is_scalar()
    }

    /// The underlying ordinary form of a real-valued form.
    pub fn as_real(&self) -> Result<&OrdinaryForm> {
        if !self.is_real() {
            return Err(mismatch(&LieAlgebra::scalar(), &self.alg));
        }
        Ok(&self.comps[0])
    }

    pub fn expect_algebra(&self, alg: &LieAlgebra) -> Result<()> {
        if same_algebra(&self.alg, alg) {
            Ok(())
        } else {
            Err(mismatch(alg, &self.alg))
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        other.expect_algebra(&self.alg)?;
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch(self.degree, other.degree));
        }
        Ok(())
    }

    pub fn add_scaled(&mut self, other: &Self, c: &Q) -> Result<()> {
        self.check_compatible(other)?;
        for (a, b) in self.comps.iter_mut().zip(&other.comps) {
            a.add_scaled(b, c)?;
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let mut r = self.clone();
        r.add_scaled(other, &Q::one())?;
        Ok(r)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        let mut r = self.clone();
        r.add_scaled(other, &Q::from_int(-1))?;
        Ok(r)
    }

    pub fn scale(&self, c: &Q) -> Self {
        self.map_components(|f| f.scale(c))
    }

    pub fn neg(&self) -> Self {
        self.scale(&Q::from_int(-1))
    }

    pub fn ext_d(&self) -> Self {
        let mut r = self.map_components(OrdinaryForm::ext_d);
        r.degree = self.degree + 1;
        r
    }

    pub fn hodge(&self) -> Self {
        let mut r = self.map_components(OrdinaryForm::hodge);
        r.degree = self.dim as i32 - self.degree;
        r
    }

    pub fn mul_function(&self, f: &Polynomial) -> Self {
        self.map_components(|c| c.mul_function(f))
    }

    fn map_components(&self, f: impl Fn(&OrdinaryForm) -> OrdinaryForm) -> Self {
        let comps: Vec<OrdinaryForm> = self.comps.iter().map(f).collect();
        let degree = comps.first().map(OrdinaryForm::degree).unwrap_or(self.degree);
        AlgebraValuedForm {
            alg: self.alg.clone(),
            dim: self.dim,
            degree,
            comps,
        }
    }

    /// `a ∧ self` for a real-valued form `a`.
    pub fn wedge_real_left(&self, a: &OrdinaryForm) -> Result<Self> {
        let comps = self
            .comps
            .iter()
            .map(|c| crate::exterior::wedge(a, c))
            .collect::<Result<Vec<_>>>()?;
        Ok(AlgebraValuedForm {
            alg: self.alg.clone(),
            dim: self.dim,
            degree: a.degree() + self.degree,
            comps,
        })
    }

    /// `self ∧ b` for a real-valued form `b`.
    pub fn wedge_real_right(&self, b: &OrdinaryForm) -> Result<Self> {
        let comps = self
            .comps
            .iter()
            .map(|c| crate::exterior::wedge(c, b))
            .collect::<Result<Vec<_>>>()?;
        Ok(AlgebraValuedForm {
            alg: self.alg.clone(),
            dim: self.dim,
            degree: self.degree + b.degree(),
            comps,
        })
    }

    /// The first nonzero component with its leading term, for reports.
    pub fn leading_term(&self) -> Option<String> {
        self.comps.iter().enumerate().find_map(|(a, c)| {
            c.leading_term().map(|(idx, m, q)| {
                let exps = m.exps(self.dim);
                format!(
                    "{}: {} x^{:?} dx{:?}",
                    self.alg.labels.get(a).cloned().unwrap_or_else(|| a.to_string()),
                    q,
                    exps,
                    idx
                )
            })
        })
    }
}

impl fmt::Debug for AlgebraValuedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} p={}]", self.alg.name, self.degree)?;
        for (a, c) in self.comps.iter().enumerate() {
            if !c.is_zero() {
                write!(f, " {}:({})", self.alg.labels[a], c)?;
            }
        }
        Ok(())
    }
}

/// `(A ⋆ B)^c = Σ T[a][b][c] A^a ∧ B^b`.
pub fn contract(
    t: &Bilinear,
    a: &AlgebraValuedForm,
    b: &AlgebraValuedForm,
    out: &Arc<LieAlgebra>,
) -> Result<AlgebraValuedForm> {
    if a.dim != b.dim {
        return Err(Error::DimensionMismatch(a.dim, b.dim));
    }
    if t.left_dim() != a.alg.dim() || t.right_dim() != b.alg.dim() || t.out_dim() != out.dim() {
        return Err(Error::Invalid("tensor shape does not match the algebras".into()));
    }
    let mut r = AlgebraValuedForm::zero(out.clone(), a.dim, a.degree + b.degree);
    if OrdinaryForm::is_degenerate_degree(a.dim, a.degree + b.degree) {
        return Ok(r);
    }
    for (i, j, k, v) in t.nonzero() {
        let (fa, fb) = (&a.comps[*i], &b.comps[*j]);
        if fa.is_zero() || fb.is_zero() {
            continue;
        }
        r.comps[*k].add_wedge(fa, fb, v)?;
    }
    Ok(r)
}

/// `(M A)^i = Σ_j M[i][j] A^j`.
pub fn apply_linear(m: &Matrix, a: &AlgebraValuedForm, out: &Arc<LieAlgebra>) -> Result<AlgebraValuedForm> {
    if m.cols() != a.alg.dim() || m.rows() != out.dim() {
        return Err(Error::Invalid("linear map shape does not match the algebras".into()));
    }
    let mut r = AlgebraValuedForm::zero(out.clone(), a.dim, a.degree);
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let c = m.get(i, j);
            if !c.is_zero() && !a.comps[j].is_zero() {
                r.comps[i].add_scaled(&a.comps[j], c)?;
            }
        }
    }
    Ok(r)
}

/// `Σ M[a][b] A^a ∧ B^b`.
pub fn pair_with(m: &Matrix, a: &AlgebraValuedForm, b: &AlgebraValuedForm) -> Result<OrdinaryForm> {
    if a.dim != b.dim {
        return Err(Error::DimensionMismatch(a.dim, b.dim));
    }
    if m.rows() != a.alg.dim() || m.cols() != b.alg.dim() {
        return Err(Error::Invalid("pairing matrix shape does not match the algebras".into()));
    }
    let mut r = OrdinaryForm::zero(a.dim, a.degree + b.degree);
    for i in 0..m.rows() {
        if a.comps[i].is_zero() {
            continue;
        }
        for j in 0..m.cols() {
            let c = m.get(i, j);
            if !c.is_zero() {
                r.add_wedge(&a.comps[i], &b.comps[j], c)?;
            }
        }
    }
    Ok(r)
}

/// `[A, B] = A^a ∧ B^b ⊗ [X_a, X_b]`.
pub fn bracket(a: &AlgebraValuedForm, b: &AlgebraValuedForm) -> Result<AlgebraValuedForm> {
    b.expect_algebra(&a.alg)?;
    contract(a.alg.structure(), a, b, &a.alg)
}

/// Selects one of the bilinear forms of [`PairingData`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PairingKind {
    /// Invariant pairing between 𝔤 and 𝔥.
    Gh,
    /// Invariant pairing between 𝔤 and 𝔩.
    Gl,
    /// Antisymmetric invariant form on 𝔥.
    HAnti,
    SymG,
    SymH,
    SymL,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairingData {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gh: Option<Matrix>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gl: Option<Matrix>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h_anti: Option<Matrix>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sym_g: Option<Matrix>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sym_h: Option<Matrix>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sym_l: Option<Matrix>,
}

impl PairingData {
    pub fn get(&self, which: PairingKind) -> Option<&Matrix> {
        match which {
            PairingKind::Gh => self.gh.as_ref(),
            PairingKind::Gl => self.gl.as_ref(),
            PairingKind::HAnti => self.h_anti.as_ref(),
            PairingKind::SymG => self.sym_g.as_ref(),
            PairingKind::SymH => self.sym_h.as_ref(),
            PairingKind::SymL => self.sym_l.as_ref(),
        }
    }
}

/// A Lie algebra, a differential crossed module `(𝔥 → 𝔤; α, ▷)`, or a
/// differential 2-crossed module `(𝔩 → 𝔥 → 𝔤; β, α, ▷, {·,·})`, together
/// with whatever pairings are available.
#[derive(Clone, Debug)]
pub struct HigherAlgebra {
    pub name: String,
    pub g: Arc<LieAlgebra>,
    pub h: Option<Arc<LieAlgebra>>,
    pub l: Option<Arc<LieAlgebra>>,
    /// `α: 𝔥 → 𝔤`, a `dim 𝔤 × dim 𝔥` matrix.
    pub alpha: Option<Matrix>,
    /// `β: 𝔩 → 𝔥`, a `dim 𝔥 × dim 𝔩` matrix.
    pub beta: Option<Matrix>,
    pub act_h: Option<Bilinear>,
    pub act_l: Option<Bilinear>,
    /// Peiffer lifting `{·,·}: 𝔥 × 𝔥 → 𝔩`.
    pub peiffer: Option<Bilinear>,
    pub pairings: PairingData,
    /// Declared `α(Y)▷Z = Y▷′Z`.
    pub fine: bool,
    /// Declared abelian 𝔥 with α = 0.
    pub abelian_h: bool,
}

impl HigherAlgebra {
    pub fn lie(name: impl Into<String>, g: LieAlgebra) -> Self {
        HigherAlgebra {
            name: name.into(),
            g: Arc::new(g),
            h: None,
            l: None,
            alpha: None,
            beta: None,
            act_h: None,
            act_l: None,
            peiffer: None,
            pairings: PairingData::default(),
            fine: false,
            abelian_h: false,
        }
    }

    pub fn crossed(
        name: impl Into<String>,
        g: LieAlgebra,
        h: LieAlgebra,
        alpha: Matrix,
        act: Bilinear,
    ) -> Result<Self> {
        let mut r = HigherAlgebra::lie(name, g);
        r.h = Some(Arc::new(h));
        r.alpha = Some(alpha);
        r.act_h = Some(act);
        r.check_shapes()?;
        Ok(r)
    }

    #[allow(clippy::too_many_arguments)]
    pub fn two_crossed(
        name: impl Into<String>,
        g: LieAlgebra,
        h: LieAlgebra,
        l: LieAlgebra,
        alpha: Matrix,
        beta: Matrix,
        act_h: Bilinear,
        act_l: Bilinear,
        peiffer: Bilinear,
    ) -> Result<Self> {
        let mut r = HigherAlgebra::crossed(name, g, h, alpha, act_h)?;
        r.l = Some(Arc::new(l));
        r.beta = Some(beta);
        r.act_l = Some(act_l);
        r.peiffer = Some(peiffer);
        r.check_shapes()?;
        Ok(r)
    }

    pub fn with_pairings(mut self, p: PairingData) -> Self {
        self.pairings = p;
        self
    }

    pub fn with_flags(mut self, fine: bool, abelian_h: bool) -> Self {
        self.fine = fine;
        self.abelian_h = abelian_h;
        self
    }

    /// 1 for a Lie algebra, 2 for a crossed module, 3 for a 2-crossed module.
    pub fn level(&self) -> u8 {
        if self.l.is_some() {
            3
        } else if self.h.is_some() {
            2
        } else {
            1
        }
    }

    pub fn check_shapes(&self) -> Result<()> {
        let dg = self.g.dim();
        let bad = |what: &str| Err(Error::Invalid(format!("{what} has the wrong shape")));
        if let Some(h) = &self.h {
            let dh = h.dim();
            if let Some(a) = &self.alpha {
                if a.rows() != dg || a.cols() != dh {
                    return bad("alpha");
                }
            }
            if let Some(t) = &self.act_h {
                if (t.left_dim(), t.right_dim(), t.out_dim()) != (dg, dh, dh) {
                    return bad("action on h");
                }
            }
            if let Some(l) = &self.l {
                let dl = l.dim();
                if let Some(b) = &self.beta {
                    if b.rows() != dh || b.cols() != dl {
                        return bad("beta");
                    }
                }
                if let Some(t) = &self.act_l {
                    if (t.left_dim(), t.right_dim(), t.out_dim()) != (dg, dl, dl) {
                        return bad("action on l");
                    }
                }
                if let Some(t) = &self.peiffer {
                    if (t.left_dim(), t.right_dim(), t.out_dim()) != (dh, dh, dl) {
                        return bad("Peiffer lifting");
                    }
                }
            }
        }
        let p = &self.pairings;
        let dims = |k: PairingKind| -> Option<(usize, usize)> {
            let dh = self.h.as_ref().map(|h| h.dim());
            let dl = self.l.as_ref().map(|l| l.dim());
            match k {
                PairingKind::Gh => dh.map(|d| (dg, d)),
                PairingKind::Gl => dl.map(|d| (dg, d)),
                PairingKind::HAnti | PairingKind::SymH => dh.map(|d| (d, d)),
                PairingKind::SymG => Some((dg, dg)),
                PairingKind::SymL => dl.map(|d| (d, d)),
            }
        };
        for k in ALL_PAIRINGS {
            if let Some(m) = p.get(k) {
                match dims(k) {
                    Some((r, c)) if m.rows() == r && m.cols() == c => {}
                    _ => return bad(&format!("pairing {k:?}")),
                }
            }
        }
        Ok(())
    }

    pub fn h(&self) -> Result<&Arc<LieAlgebra>> {
        self.h.as_ref().ok_or_else(|| Error::MissingData(format!("{} has no 𝔥", self.name)))
    }

    pub fn l(&self) -> Result<&Arc<LieAlgebra>> {
        self.l.as_ref().ok_or_else(|| Error::MissingData(format!("{} has no 𝔩", self.name)))
    }

    fn missing(&self, what: &str) -> Error {
        Error::MissingData(format!("{} has no {what}", self.name))
    }

    pub fn alpha_matrix(&self) -> Result<&Matrix> {
        self.alpha.as_ref().ok_or_else(|| self.missing("alpha"))
    }

    pub fn beta_matrix(&self) -> Result<&Matrix> {
        self.beta.as_ref().ok_or_else(|| self.missing("beta"))
    }

    pub fn act_h_tensor(&self) -> Result<&Bilinear> {
        self.act_h.as_ref().ok_or_else(|| self.missing("action on h"))
    }

    pub fn act_l_tensor(&self) -> Result<&Bilinear> {
        self.act_l.as_ref().ok_or_else(|| self.missing("action on l"))
    }

    pub fn peiffer_tensor(&self) -> Result<&Bilinear> {
        self.peiffer.as_ref().ok_or_else(|| self.missing("Peiffer lifting"))
    }

    /// Tensor of the induced action `Y ▷′ Z = −{β(Z), Y}` of 𝔥 on 𝔩.
    pub fn act_prime_tensor(&self) -> Result<Bilinear> {
        let beta = self.beta_matrix()?;
        let pf = self.peiffer_tensor()?;
        let (dh, dl) = (self.h()?.dim(), self.l()?.dim());
        Ok(Bilinear::from_fn(dh, dl, dl, |a, z, c| {
            // −{β(z), e_a}_c = −Σ_b β[b][z] {e_b, e_a}_c
            -(0..dh).map(|b| beta.get(b, z) * pf.get(b, a, c)).sum::<Q>()
        }))
    }

    pub fn apply_alpha(&self, b: &AlgebraValuedForm) -> Result<AlgebraValuedForm> {
        b.expect_algebra(self.h()?)?;
        apply_linear(self.alpha_matrix()?, b, &self.g)
    }

    pub fn apply_beta(&self, c: &AlgebraValuedForm) -> Result<AlgebraValuedForm> {
        c.expect_algebra(self.l()?)?;
        apply_linear(self.beta_matrix()?, c, self.h()?)
    }

    /// `A ▷ E` for 𝔤-valued `A` and 𝔥- or 𝔩-valued `E`; on 𝔤-valued `E` this
    /// is the bracket.
    pub fn act(&self, a: &AlgebraValuedForm, e: &AlgebraValuedForm) -> Result<AlgebraValuedForm> {
        a.expect_algebra(&self.g)?;
        if let Some(h) = &self.h {
            if same_algebra(e.algebra(), h) {
                return contract(self.act_h_tensor()?, a, e, h);
            }
        }
        if let Some(l) = &self.l {
            if same_algebra(e.algebra(), l) {
                return contract(self.act_l_tensor()?, a, e, l);
            }
        }
        if same_algebra(e.algebra(), &self.g) {
            return bracket(a, e);
        }
        Err(mismatch(self.h.as_deref().unwrap_or(&self.g), e.algebra()))
    }

    pub fn peiffer(&self, y1: &AlgebraValuedForm, y2: &AlgebraValuedForm) -> Result<AlgebraValuedForm> {
        let h = self.h()?;
        y1.expect_algebra(h)?;
        y2.expect_algebra(h)?;
        contract(self.peiffer_tensor()?, y1, y2, self.l()?)
    }

    /// `Y ▷′ Z`, extended to forms component-wise.
    pub fn act_prime(&self, y: &AlgebraValuedForm, z: &AlgebraValuedForm) -> Result<AlgebraValuedForm> {
        y.expect_algebra(self.h()?)?;
        z.expect_algebra(self.l()?)?;
        contract(&self.act_prime_tensor()?, y, z, self.l()?)
    }

    /// `φφ := ½[φ, φ]` in 𝔥.
    pub fn half_square_h(&self, phi: &AlgebraValuedForm) -> Result<AlgebraValuedForm> {
        Ok(bracket(phi, phi)?.scale(&Q::half()))
    }

    /// The pairing selected by `which`, checking the value algebras.
    pub fn pair_forms(
        &self,
        a: &AlgebraValuedForm,
        b: &AlgebraValuedForm,
        which: PairingKind,
    ) -> Result<OrdinaryForm> {
        let (left, right) = self.pairing_algebras(which)?;
        a.expect_algebra(left)?;
        b.expect_algebra(right)?;
        let m = self
            .pairings
            .get(which)
            .ok_or_else(|| self.missing(&format!("pairing {which:?}")))?;
        pair_with(m, a, b)
    }

    pub fn pairing_algebras(&self, which: PairingKind) -> Result<(&Arc<LieAlgebra>, &Arc<LieAlgebra>)> {
        Ok(match which {
            PairingKind::Gh => (&self.g, self.h()?),
            PairingKind::Gl => (&self.g, self.l()?),
            PairingKind::HAnti | PairingKind::SymH => (self.h()?, self.h()?),
            PairingKind::SymG => (&self.g, &self.g),
            PairingKind::SymL => (self.l()?, self.l()?),
        })
    }

    /// The symmetric form matching the value algebra of `a`.
    pub fn sym_kind_for(&self, a: &AlgebraValuedForm) -> Result<PairingKind> {
        if same_algebra(a.algebra(), &self.g) {
            return Ok(PairingKind::SymG);
        }
        if self.h.as_ref().is_some_and(|h| same_algebra(a.algebra(), h)) {
            return Ok(PairingKind::SymH);
        }
        if self.l.as_ref().is_some_and(|l| same_algebra(a.algebra(), l)) {
            return Ok(PairingKind::SymL);
        }
        Err(mismatch(&self.g, a.algebra()))
    }

    /// `∫ ⟨a, *b⟩` with the symmetric form of their value algebra.
    pub fn inner(&self, a: &AlgebraValuedForm, b: &AlgebraValuedForm) -> Result<Q> {
        if a.degree() != b.degree() {
            return Err(Error::DegreeMismatch(a.degree(), b.degree()));
        }
        let which = self.sym_kind_for(a)?;
        self.pair_forms(a, &b.hodge(), which)?.integrate_cube()
    }
}

pub const ALL_PAIRINGS: [PairingKind; 6] = [
    PairingKind::Gh,
    PairingKind::Gl,
    PairingKind::HAnti,
    PairingKind::SymG,
    PairingKind::SymH,
    PairingKind::SymL,
];
