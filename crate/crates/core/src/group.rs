//! Group-valued generalized 0-forms `𝒢 = (1 + φξ)g` and
//! `(1 + φ₁ξ¹ + φ₂ξ² + ψξ¹ξ²)g`, with `g` a unipotent polynomial matrix
//! function in the realization of 𝔤.
//!
//! Every group element is `exp` of a nilpotent polynomial combination of
//! strictly upper triangular basis elements, so `log`, `exp`, inverses and
//! the induced actions on 𝔥 and 𝔩 are finite sums.

use std::sync::Arc;

use crate::algebra::{AlgebraValuedForm, HigherAlgebra, LieAlgebra, MatrixSpan, PairingKind};
use crate::error::{Error, Result};
use crate::exterior::OrdinaryForm;
use crate::genform::{gbracket, gderiv, DerivativeContext, GeneralizedForm};
use crate::linalg::{Bilinear, Matrix};
use crate::poly::Polynomial;
use crate::random::Sampler;
use crate::rational::Q;
use crate::validate::ValidationReport;

/// A square matrix of polynomials on a chart.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    nvars: usize,
    size: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn zero(size: usize, nvars: usize) -> Self {
        PolyMatrix {
            nvars,
            size,
            entries: vec![Polynomial::zero(nvars); size * size],
        }
    }

    pub fn identity(size: usize, nvars: usize) -> Self {
        let mut m = Self::zero(size, nvars);
        for i in 0..size {
            m.entries[i * size + i] = Polynomial::one(nvars);
        }
        m
    }

    pub fn from_constant(c: &Matrix, nvars: usize) -> Self {
        let size = c.rows();
        let mut m = Self::zero(size, nvars);
        for i in 0..size {
            for j in 0..c.cols() {
                m.entries[i * size + j] = Polynomial::constant(nvars, c.get(i, j).clone());
            }
        }
        m
    }

    /// `Σ_a c_a M_a` for constant matrices `M_a`.
    pub fn combination(coeffs: &[Polynomial], mats: &[Matrix], nvars: usize) -> Self {
        let size = mats.first().map(Matrix::rows).unwrap_or(0);
        let mut m = Self::zero(size, nvars);
        for (c, mat) in coeffs.iter().zip(mats) {
            if c.is_zero() {
                continue;
            }
            for i in 0..size {
                for j in 0..size {
                    let v = mat.get(i, j);
                    if !v.is_zero() {
                        m.entries[i * size + j].add_scaled(c, v);
                    }
                }
            }
        }
        m
    }

    /// Row-major entries of a `size × size` matrix.
    pub fn from_entries(size: usize, nvars: usize, entries: Vec<Polynomial>) -> Result<Self> {
        if entries.len() != size * size {
            return Err(Error::Shape(format!("{} entries for a {size}×{size} matrix", entries.len())));
        }
        if entries.iter().any(|p| p.nvars() != nvars) {
            return Err(Error::Shape(format!("entries must be polynomials in {nvars} variables")));
        }
        Ok(PolyMatrix { nvars, size, entries })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.size + j]
    }

    pub fn entries(&self) -> &[Polynomial] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Polynomial::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.size, self.nvars)
    }

    /// Unit diagonal, zero below it.
    pub fn is_unipotent(&self) -> bool {
        (0..self.size).all(|i| {
            (0..=i).all(|j| {
                let e = self.get(i, j);
                if i == j {
                    *e == Polynomial::one(self.nvars)
                } else {
                    e.is_zero()
                }
            })
        })
    }

    pub fn add(&self, other: &Self) -> Self {
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a.add(b)).collect();
        PolyMatrix { entries, ..*self }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a.sub(b)).collect();
        PolyMatrix { entries, ..*self }
    }

    pub fn scale(&self, c: &Q) -> Self {
        let entries = self.entries.iter().map(|a| a.scale(c)).collect();
        PolyMatrix { entries, ..*self }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.size;
        let mut r = Self::zero(n, self.nvars);
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
                        r.entries[i * n + j].add_product(a, b, &one);
                    }
                }
            }
        }
        r
    }

    pub fn transpose(&self) -> Self {
        let n = self.size;
        let mut r = Self::zero(n, self.nvars);
        for i in 0..n {
            for j in 0..n {
                r.entries[j * n + i] = self.get(i, j).clone();
            }
        }
        r
    }

    /// `∂ᵢ` entrywise.
    pub fn diff(&self, i: usize) -> Self {
        let entries = self.entries.iter().map(|a| a.diff(i)).collect();
        PolyMatrix { entries, ..*self }
    }

    /// `exp(N) = Σ Nʲ/j!` for nilpotent `N`.
    pub fn exp_nilpotent(&self) -> Result<Self> {
        let mut term = Self::identity(self.size, self.nvars);
        let mut sum = term.clone();
        for j in 1..=self.size {
            term = term.mul(self).scale(&Q::new(1, j as i64));
            if term.is_zero() {
                return Ok(sum);
            }
            sum = sum.add(&term);
        }
        Err(Error::NotNilpotent(format!("{}x{} matrix", self.size, self.size)))
    }

    /// `log(I + N) = Σ (−1)^{j+1} Nʲ/j` for unipotent input.
    pub fn log_unipotent(&self) -> Result<Self> {
        let n = self.sub(&Self::identity(self.size, self.nvars));
        let mut power = n.clone();
        let mut sum = Self::zero(self.size, self.nvars);
        for j in 1..=self.size {
            if power.is_zero() {
                return Ok(sum);
            }
            sum = sum.add(&power.scale(&Q::new(if j % 2 == 1 { 1 } else { -1 }, j as i64)));
            power = power.mul(&n);
        }
        if power.is_zero() {
            Ok(sum)
        } else {
            Err(Error::NotNilpotent("log of a non-unipotent matrix".into()))
        }
    }

    /// `(I + N)⁻¹ = Σ (−N)ʲ`.
    pub fn inverse_unipotent(&self) -> Result<Self> {
        let minus_n = Self::identity(self.size, self.nvars).sub(self);
        let mut power = Self::identity(self.size, self.nvars);
        let mut sum = power.clone();
        for _ in 1..=self.size {
            power = power.mul(&minus_n);
            if power.is_zero() {
                return Ok(sum);
            }
            sum = sum.add(&power);
        }
        Err(Error::NotNilpotent("inverse of a non-unipotent matrix".into()))
    }

    /// `(M U)^b = Σ_a M[b][a] U^a`, landing in `out`.
    pub fn apply(&self, u: &AlgebraValuedForm, out: &Arc<LieAlgebra>) -> Result<AlgebraValuedForm> {
        if u.algebra().dim() != self.size || out.dim() != self.size {
            return Err(Error::Invalid("action matrix does not match the algebra".into()));
        }
        let comps = (0..self.size)
            .map(|b| {
                let mut c = OrdinaryForm::zero(u.dim(), u.degree());
                for a in 0..self.size {
                    let m = self.get(b, a);
                    if !m.is_zero() && !u.component(a).is_zero() {
                        c.add_scaled(&u.component(a).mul_function(m), &Q::one())?;
                    }
                }
                Ok(c)
            })
            .collect::<Result<Vec<_>>>()?;
        AlgebraValuedForm::from_components(out.clone(), comps)
    }
}

impl std::fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list()
            .entries((0..self.size).map(|i| (0..self.size).map(|j| self.get(i, j).to_string()).collect::<Vec<_>>()))
            .finish()
    }
}

/// `ρ(X)[c][b] = Σ_a X^a T[a][b][c]` for polynomial coordinates `X^a`.
fn representation(t: &Bilinear, coords: &[Polynomial], nvars: usize) -> PolyMatrix {
    let n = t.out_dim();
    let mut m = PolyMatrix::zero(n, nvars);
    for (a, b, c, v) in t.nonzero() {
        if !coords[*a].is_zero() {
            m.entries[c * n + b].add_scaled(&coords[*a], v);
        }
    }
    m
}

/// The matrices by which a group element acts on 𝔤, 𝔥 and 𝔩.
#[derive(Clone, Debug)]
pub struct Action {
    pub ad: PolyMatrix,
    pub on_h: Option<PolyMatrix>,
    pub on_l: Option<PolyMatrix>,
}

/// A higher algebra together with the unipotent group realizing it.
#[derive(Clone, Debug)]
pub struct GroupModel {
    pub alg: HigherAlgebra,
    span: MatrixSpan,
    generators: Vec<usize>,
}

impl GroupModel {
    pub fn new(alg: HigherAlgebra) -> Result<Self> {
        let basis = alg
            .g
            .realization()
            .ok_or_else(|| Error::MissingData(format!("{}: matrix realization of 𝔤", alg.name)))?
            .to_vec();
        let span = MatrixSpan::new(&basis)?;
        let generators: Vec<usize> = basis
            .iter()
            .enumerate()
            .filter(|(_, m)| (0..m.rows()).all(|i| (0..=i).all(|j| m.get(i, j).is_zero())))
            .map(|(a, _)| a)
            .collect();
        if generators.is_empty() {
            return Err(Error::MissingData(format!("{}: no nilpotent directions in 𝔤", alg.name)));
        }
        Ok(GroupModel { alg, span, generators })
    }

    pub fn size(&self) -> usize {
        self.span.size()
    }

    /// Basis directions of 𝔤 along which group elements are generated.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// `exp(Σ c_a X_a)` in the realization.
    pub fn exp(&self, coords: &[Polynomial], nvars: usize) -> Result<PolyMatrix> {
        PolyMatrix::combination(coords, self.span.basis(), nvars).exp_nilpotent()
    }

    /// Coordinates of `log g` in the basis of 𝔤.
    pub fn log(&self, g: &PolyMatrix) -> Result<Vec<Polynomial>> {
        let l = g.log_unipotent()?;
        self.span.poly_coordinates(l.entries(), g.nvars())
    }

    fn coordinates(&self, m: &PolyMatrix) -> Result<Vec<Polynomial>> {
        self.span.poly_coordinates(m.entries(), m.nvars())
    }

    /// `Ad_g` by conjugation in the realization.
    pub fn ad(&self, g: &PolyMatrix) -> Result<PolyMatrix> {
        let ginv = g.inverse_unipotent()?;
        let m = self.alg.g.dim();
        let mut r = PolyMatrix::zero(m, g.nvars());
        for (a, x) in self.span.basis().iter().enumerate() {
            let conj = g.mul(&PolyMatrix::from_constant(x, g.nvars())).mul(&ginv);
            for (b, c) in self.coordinates(&conj)?.into_iter().enumerate() {
                r.entries[b * m + a] = c;
            }
        }
        Ok(r)
    }

    /// `exp(ad_{log g})`, computed from the structure constants alone.
    pub fn ad_from_log(&self, g: &PolyMatrix) -> Result<PolyMatrix> {
        let coords = self.log(g)?;
        representation(self.alg.g.structure(), &coords, g.nvars()).exp_nilpotent()
    }

    fn rho(&self, t: &Bilinear, coords: &[Polynomial], nvars: usize) -> Result<PolyMatrix> {
        representation(t, coords, nvars).exp_nilpotent()
    }

    pub fn action(&self, g: &PolyMatrix) -> Result<Action> {
        let coords = self.log(g)?;
        let n = g.nvars();
        let on_h = match &self.alg.act_h {
            Some(t) => Some(self.rho(t, &coords, n)?),
            None => None,
        };
        let on_l = match &self.alg.act_l {
            Some(t) => Some(self.rho(t, &coords, n)?),
            None => None,
        };
        Ok(Action {
            ad: self.ad(g)?,
            on_h,
            on_l,
        })
    }

    /// `g⁻¹dg` (`left = true`) or `dg g⁻¹` as a 𝔤-valued 1-form.
    pub fn maurer_cartan(&self, g: &PolyMatrix, left: bool) -> Result<AlgebraValuedForm> {
        let n = g.nvars();
        let ginv = g.inverse_unipotent()?;
        let m = self.alg.g.dim();
        let mut comps = vec![OrdinaryForm::zero(n, 1); m];
        for i in 0..n {
            let dg = g.diff(i);
            if dg.is_zero() {
                continue;
            }
            let prod = if left { ginv.mul(&dg) } else { dg.mul(&ginv) };
            for (a, c) in self.coordinates(&prod)?.into_iter().enumerate() {
                if !c.is_zero() {
                    comps[a] = comps[a].add(&OrdinaryForm::monomial(c, &[i + 1])?)?;
                }
            }
        }
        AlgebraValuedForm::from_components(self.alg.g.clone(), comps)
    }

    /// A random group function `exp(Σ f_a X_a)` over the nilpotent directions.
    pub fn random_function(&self, s: &mut Sampler) -> Result<PolyMatrix> {
        let n = s.bounds.dim;
        let mut coords = vec![Polynomial::zero(n); self.alg.g.dim()];
        for &a in &self.generators {
            coords[a] = s.polynomial();
        }
        self.exp(&coords, n)
    }

    pub fn identity(&self, n_type: u8, dim: usize) -> Result<GroupElement> {
        let g = PolyMatrix::identity(self.size(), dim);
        let h = self.alg.h()?.clone();
        let phi = vec![AlgebraValuedForm::zero(h.clone(), dim, 1); n_type as usize];
        let psi = if n_type == 2 {
            Some(AlgebraValuedForm::zero(self.alg.l()?.clone(), dim, 2))
        } else {
            None
        };
        GroupElement::new(g, phi, psi)
    }

    /// A random element; for type 2 `simplified` keeps `φ₂ = 0`.
    pub fn random_element(&self, s: &mut Sampler, n_type: u8, simplified: bool) -> Result<GroupElement> {
        let g = self.random_function(s)?;
        let h = self.alg.h()?.clone();
        let mut phi = vec![s.algebra_form(&h, 1)];
        let mut psi = None;
        if n_type == 2 {
            phi.push(if simplified {
                AlgebraValuedForm::zero(h, s.bounds.dim, 1)
            } else {
                s.algebra_form(&h, 1)
            });
            psi = Some(s.algebra_form(self.alg.l()?, 2));
        }
        GroupElement::new(g, phi, psi)
    }

    fn act_with(&self, act: &Action, x: &AlgebraValuedForm) -> Result<AlgebraValuedForm> {
        let alg = x.algebra();
        if crate::algebra::same_algebra(alg, &self.alg.g) {
            return act.ad.apply(x, &self.alg.g);
        }
        if let (Some(h), Some(m)) = (&self.alg.h, &act.on_h) {
            if crate::algebra::same_algebra(alg, h) {
                return m.apply(x, h);
            }
        }
        if let (Some(l), Some(m)) = (&self.alg.l, &act.on_l) {
            if crate::algebra::same_algebra(alg, l) {
                return m.apply(x, l);
            }
        }
        Err(Error::AlgebraMismatch {
            expected: self.alg.name.clone(),
            found: alg.name().to_string(),
        })
    }

    /// `g ▷ x`, with `Ad_g` on 𝔤-valued `x`.
    pub fn act(&self, g: &PolyMatrix, x: &AlgebraValuedForm) -> Result<AlgebraValuedForm> {
        self.act_with(&self.action(g)?, x)
    }

    pub fn compose(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        if a.n_type() != b.n_type() {
            return Err(Error::TypeMismatch(a.n_type(), b.n_type()));
        }
        let act = self.action(&a.g)?;
        let phi = a
            .phi
            .iter()
            .zip(&b.phi)
            .map(|(x, y)| x.add(&self.act_with(&act, y)?))
            .collect::<Result<Vec<_>>>()?;
        let psi = match (&a.psi, &b.psi) {
            (Some(x), Some(y)) => Some(x.add(&self.act_with(&act, y)?)?),
            _ => None,
        };
        GroupElement::new(a.g.mul(&b.g), phi, psi)
    }

    pub fn inverse(&self, a: &GroupElement) -> Result<GroupElement> {
        let ginv = a.g.inverse_unipotent()?;
        let act = self.action(&ginv)?;
        let phi = a
            .phi
            .iter()
            .map(|x| Ok(self.act_with(&act, x)?.neg()))
            .collect::<Result<Vec<_>>>()?;
        let psi = match &a.psi {
            Some(x) => Some(self.act_with(&act, x)?.neg()),
            None => None,
        };
        GroupElement::new(ginv, phi, psi)
    }

    /// `ℓ₂ = g⁻¹dg − k g⁻¹α(φ)g + g⁻¹▷(dφ − kφφ) ξ`.
    pub fn mc2(&self, e: &GroupElement, ctx: &DerivativeContext) -> Result<GeneralizedForm> {
        if e.n_type() != 1 || ctx.n_type != 1 {
            return Err(Error::TypeMismatch(e.n_type(), 1));
        }
        let k = &ctx.k;
        let inv = self.action(&e.g.inverse_unipotent()?)?;
        let phi = &e.phi[0];
        let u = self
            .maurer_cartan(&e.g, true)?
            .sub(&self.act_with(&inv, &self.alg.apply_alpha(phi)?)?.scale(k))?;
        let inner = phi.ext_d().sub(&self.alg.half_square_h(phi)?.scale(k))?;
        GeneralizedForm::lie2(u, self.act_with(&inv, &inner)?)
    }

    /// `ℓ₃` for the simplified shape `(1 + φξ¹ + ψξ¹ξ²)g`.
    pub fn mc3(&self, e: &GroupElement, ctx: &DerivativeContext) -> Result<GeneralizedForm> {
        if e.n_type() != 2 || ctx.n_type != 2 {
            return Err(Error::TypeMismatch(e.n_type(), 2));
        }
        if !e.is_simplified() {
            return Err(Error::Shape("the Maurer–Cartan form needs φ₂ = 0".into()));
        }
        let (k1, k2) = (&ctx.k1, &ctx.k2);
        let inv = self.action(&e.g.inverse_unipotent()?)?;
        let (phi, psi) = (&e.phi[0], e.psi.as_ref().expect("type 2"));
        let a = &self.alg;
        let beta_psi = a.apply_beta(psi)?;
        let u = self
            .maurer_cartan(&e.g, true)?
            .sub(&self.act_with(&inv, &a.apply_alpha(phi)?)?.scale(k1))?;
        let v = phi
            .ext_d()
            .sub(&a.half_square_h(phi)?.scale(k1))?
            .sub(&beta_psi.scale(k2))?;
        let v2 = beta_psi.scale(k1);
        let w = psi.ext_d().sub(&a.act_prime(phi, psi)?.scale(k1))?;
        GeneralizedForm::lie3(
            u,
            self.act_with(&inv, &v)?,
            self.act_with(&inv, &v2)?,
            self.act_with(&inv, &w)?,
        )
    }

    /// `d̲ℓ + ½[ℓ, ℓ]`.
    pub fn mc_residual(&self, e: &GroupElement, ctx: &DerivativeContext) -> Result<GeneralizedForm> {
        let l = match e.n_type() {
            1 => self.mc2(e, ctx)?,
            _ => self.mc3(e, ctx)?,
        };
        gderiv(&l, ctx, Some(&self.alg))?.add(&gbracket(&self.alg, &l, &l)?.scale(&Q::half()))
    }

    /// `𝐀𝐝_𝒢 𝒲`.
    pub fn adjoint(&self, e: &GroupElement, w: &GeneralizedForm) -> Result<GeneralizedForm> {
        if e.n_type() != w.n_type() {
            return Err(Error::TypeMismatch(e.n_type(), w.n_type()));
        }
        let act = self.action(&e.g)?;
        let s = w.slots();
        let a = &self.alg;
        let ad_u = self.act_with(&act, &s[0])?;
        let phi = &e.phi[0];
        let v = self.act_with(&act, &s[1])?.sub(&a.act(&ad_u, phi)?)?;
        match e.n_type() {
            1 => GeneralizedForm::lie2(ad_u, v),
            _ => {
                if !e.is_simplified() {
                    return Err(Error::Shape("the adjoint action needs φ₂ = 0".into()));
                }
                let psi = e.psi.as_ref().expect("type 2");
                let gv2 = self.act_with(&act, &s[2])?;
                let w3 = self
                    .act_with(&act, &s[3])?
                    .sub(&a.act(&ad_u, psi)?)?
                    .sub(&a.peiffer(&gv2, phi)?)?
                    .add(&a.peiffer(phi, &gv2)?)?;
                GeneralizedForm::lie3(ad_u, v, gv2, w3)
            }
        }
    }

    /// The group-level identities relating `Ad`, `▷` on 𝔥 and 𝔩, α, β and
    /// `{·,·}`, checked exactly on the given group functions.
    pub fn validate_identities(&self, samples: &[PolyMatrix]) -> Result<ValidationReport> {
        let mut r = ValidationReport::new(format!("{} group", self.alg.name));
        let a = &self.alg;
        let nv = samples.first().map(PolyMatrix::nvars).unwrap_or(0);
        for (i, g) in samples.iter().enumerate() {
            let w = [i];
            r.begin("unipotent");
            r.expect("unipotent", &w, g.is_unipotent());
            let act = self.action(g)?;
            r.begin("ad-conjugation-matches-exp-ad");
            r.expect("ad-conjugation-matches-exp-ad", &w, act.ad == self.ad_from_log(g)?);
            let j = (i + 1) % samples.len();
            let other = self.action(&samples[j])?;
            let prod = self.action(&g.mul(&samples[j]))?;
            r.begin("ad-homomorphism");
            r.expect("ad-homomorphism", &w, prod.ad == act.ad.mul(&other.ad));
            if let (Some(rh), Some(t)) = (&act.on_h, &a.act_h) {
                let oh = other.on_h.as_ref().expect("same model");
                r.begin("A.6");
                r.expect("A.6", &w, prod.on_h.as_ref() == Some(&rh.mul(oh)));
                r.begin("A.7");
                r.expect("A.7", &w, equivariant(&act.ad, rh, t, nv));
                r.begin("gY2");
                r.expect("gY2", &w, intertwines(a.alpha_matrix()?, rh, &act.ad, nv));
                if let Some(m) = a.pairings.get(PairingKind::Gh) {
                    r.begin("gin-gh");
                    r.expect("gin-gh", &w, invariant(&act.ad, rh, m, nv));
                }
                if let Some(m) = a.pairings.get(PairingKind::HAnti) {
                    r.begin("gin-h");
                    r.expect("gin-h", &w, invariant(rh, rh, m, nv));
                }
            }
            if let (Some(rl), Some(t)) = (&act.on_l, &a.act_l) {
                let rh = act.on_h.as_ref().expect("3-level model");
                let ol = other.on_l.as_ref().expect("same model");
                r.begin("l-action-homomorphism");
                r.expect("l-action-homomorphism", &w, prod.on_l.as_ref() == Some(&rl.mul(ol)));
                r.begin("A.24");
                r.expect("A.24", &w, equivariant(&act.ad, rl, t, nv));
                r.begin("gZ");
                r.expect("gZ", &w, intertwines(a.beta_matrix()?, rl, rh, nv));
                r.begin("gyy");
                r.expect("gyy", &w, peiffer_equivariant(rh, rl, a.peiffer_tensor()?, nv));
                if let Some(m) = a.pairings.get(PairingKind::Gl) {
                    r.begin("gin-gl");
                    r.expect("gin-gl", &w, invariant(&act.ad, rl, m, nv));
                }
            }
        }
        Ok(r)
    }
}

/// `M ∘ src = dst ∘ M` for a constant linear map `M` from the space of
/// `src` to the space of `dst`.
fn intertwines(m: &Matrix, src: &PolyMatrix, dst: &PolyMatrix, nv: usize) -> bool {
    (0..m.rows()).all(|i| {
        (0..m.cols()).all(|j| {
            let mut lhs = Polynomial::zero(nv);
            for k in 0..m.cols() {
                lhs.add_scaled(src.get(k, j), m.get(i, k));
            }
            let mut rhs = Polynomial::zero(nv);
            for k in 0..m.rows() {
                rhs.add_scaled(dst.get(i, k), m.get(k, j));
            }
            lhs == rhs
        })
    })
}

/// `ρ(g) T(X_a) = Σ_b Ad[b][a] T(X_b) ρ(g)` for every basis `X_a`.
fn equivariant(ad: &PolyMatrix, rho: &PolyMatrix, t: &Bilinear, nv: usize) -> bool {
    let mats: Vec<PolyMatrix> = (0..t.left_dim())
        .map(|a| PolyMatrix::from_constant(&t.left_matrix(a), nv))
        .collect();
    (0..mats.len()).all(|a| {
        let lhs = rho.mul(&mats[a]);
        let mut rhs = PolyMatrix::zero(rho.size, nv);
        for (b, mb) in mats.iter().enumerate() {
            let c = ad.get(b, a);
            if !c.is_zero() {
                let scaled = PolyMatrix {
                    entries: mb.entries.iter().map(|e| e.mul(c)).collect(),
                    ..mb.clone()
                };
                rhs = rhs.add(&scaled);
            }
        }
        lhs == rhs.mul(rho)
    })
}

/// `Lᵀ M R = M` for a constant bilinear form `M`.
fn invariant(left: &PolyMatrix, right: &PolyMatrix, m: &Matrix, nv: usize) -> bool {
    (0..m.rows()).all(|i| {
        (0..m.cols()).all(|j| {
            let mut s = Polynomial::zero(nv);
            for a in 0..m.rows() {
                for b in 0..m.cols() {
                    let c = m.get(a, b);
                    if !c.is_zero() {
                        s.add_product(left.get(a, i), right.get(b, j), c);
                    }
                }
            }
            s == Polynomial::constant(nv, m.get(i, j).clone())
        })
    })
}

/// `g▷{e_i, e_j} = {g▷e_i, g▷e_j}`.
fn peiffer_equivariant(rh: &PolyMatrix, rl: &PolyMatrix, p: &Bilinear, nv: usize) -> bool {
    let (dh, dl) = (p.left_dim(), p.out_dim());
    (0..dh).all(|i| {
        (0..dh).all(|j| {
            (0..dl).all(|c| {
                let mut lhs = Polynomial::zero(nv);
                for e in 0..dl {
                    let v = p.get(i, j, e);
                    if !v.is_zero() {
                        lhs.add_scaled(rl.get(c, e), v);
                    }
                }
                let mut rhs = Polynomial::zero(nv);
                for (k, m, e, v) in p.nonzero() {
                    if *e == c {
                        rhs.add_product(rh.get(*k, i), rh.get(*m, j), v);
                    }
                }
                lhs == rhs
            })
        })
    })
}

/// `𝒢 = (1 + φ₁ξ¹ [+ φ₂ξ² + ψξ¹ξ²]) g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupElement {
    pub g: PolyMatrix,
    /// `[φ]` for type 1, `[φ₁, φ₂]` for type 2.
    pub phi: Vec<AlgebraValuedForm>,
    pub psi: Option<AlgebraValuedForm>,
}

impl GroupElement {
    pub fn new(g: PolyMatrix, phi: Vec<AlgebraValuedForm>, psi: Option<AlgebraValuedForm>) -> Result<Self> {
        let ok = match (phi.len(), &psi) {
            (1, None) => true,
            (2, Some(p)) => p.degree() == 2,
            _ => false,
        };
        if !ok || phi.iter().any(|p| p.degree() != 1) {
            return Err(Error::Shape("expected (φ) or (φ₁, φ₂, ψ) of degrees 1, 1, 2".into()));
        }
        if !g.is_unipotent() {
            return Err(Error::Shape("group function is not unipotent".into()));
        }
        Ok(GroupElement { g, phi, psi })
    }

    pub fn n_type(&self) -> u8 {
        self.phi.len() as u8
    }

    pub fn is_simplified(&self) -> bool {
        self.n_type() == 2 && self.phi[1].is_zero()
    }

    pub fn is_identity(&self) -> bool {
        self.g.is_identity() && self.phi.iter().all(AlgebraValuedForm::is_zero) && self.psi.as_ref().is_none_or(|p| p.is_zero())
    }
}
