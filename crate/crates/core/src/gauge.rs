//! 2- and 3-connections over (2-)crossed modules: fake curvatures, Bianchi
//! identities, gauge transformations, Chern–Simons and Chern forms, and the
//! action functionals.

use std::fmt;

use crate::algebra::{bracket, AlgebraValuedForm, HigherAlgebra, PairingKind};
use crate::error::{Error, Result};
use crate::exterior::OrdinaryForm;
use crate::genform::{gbracket, gderiv, ginner, gpairing, DerivativeContext, GeneralizedForm};
use crate::group::{GroupElement, GroupModel};
use crate::random::Sampler;
use crate::rational::Q;

fn expect_degree(name: &str, w: &AlgebraValuedForm, degree: i32) -> Result<()> {
    if w.degree() != degree {
        return Err(Error::Invalid(format!("{name} must have degree {degree}, found {}", w.degree())));
    }
    Ok(())
}

fn expect_dim(forms: &[&AlgebraValuedForm]) -> Result<usize> {
    let n = forms[0].dim();
    for f in &forms[1..] {
        if f.dim() != n {
            return Err(Error::DimensionMismatch(n, f.dim()));
        }
    }
    Ok(n)
}

/// `(A, B)`: a 𝔤-valued 1-form and an 𝔥-valued 2-form.
#[derive(Clone, PartialEq, Eq)]
pub struct TwoConnection {
    pub a: AlgebraValuedForm,
    pub b: AlgebraValuedForm,
}

impl TwoConnection {
    pub fn new(alg: &HigherAlgebra, a: AlgebraValuedForm, b: AlgebraValuedForm) -> Result<Self> {
        expect_degree("A", &a, 1)?;
        expect_degree("B", &b, 2)?;
        a.expect_algebra(&alg.g)?;
        b.expect_algebra(alg.h()?)?;
        expect_dim(&[&a, &b])?;
        Ok(TwoConnection { a, b })
    }

    pub fn zero(alg: &HigherAlgebra, dim: usize) -> Result<Self> {
        Ok(TwoConnection {
            a: AlgebraValuedForm::zero(alg.g.clone(), dim, 1),
            b: AlgebraValuedForm::zero(alg.h()?.clone(), dim, 2),
        })
    }

    pub fn random(alg: &HigherAlgebra, s: &mut Sampler) -> Result<Self> {
        let a = s.algebra_form(&alg.g, 1);
        let b = s.algebra_form(alg.h()?, 2);
        Self::new(alg, a, b)
    }

    pub fn dim(&self) -> usize {
        self.a.dim()
    }

    /// `𝒜 = A + Bξ`.
    pub fn as_generalized(&self) -> Result<GeneralizedForm> {
        GeneralizedForm::lie2(self.a.clone(), self.b.clone())
    }

    pub fn from_generalized(alg: &HigherAlgebra, w: &GeneralizedForm) -> Result<Self> {
        if w.n_type() != 1 || w.degree() != 1 {
            return Err(Error::Invalid("a 2-connection is a type-1 form of degree 1".into()));
        }
        Self::new(alg, w.slot(0).clone(), w.slot(1).clone())
    }
}

impl fmt::Debug for TwoConnection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TwoConnection").field("A", &self.a).field("B", &self.b).finish()
    }
}

/// `(A, B, C)`: 𝔤-, 𝔥- and 𝔩-valued forms of degrees 1, 2, 3.
#[derive(Clone, PartialEq, Eq)]
pub struct ThreeConnection {
    pub a: AlgebraValuedForm,
    pub b: AlgebraValuedForm,
    pub c: AlgebraValuedForm,
}

impl ThreeConnection {
    pub fn new(alg: &HigherAlgebra, a: AlgebraValuedForm, b: AlgebraValuedForm, c: AlgebraValuedForm) -> Result<Self> {
        expect_degree("A", &a, 1)?;
        expect_degree("B", &b, 2)?;
        expect_degree("C", &c, 3)?;
        a.expect_algebra(&alg.g)?;
        b.expect_algebra(alg.h()?)?;
        c.expect_algebra(alg.l()?)?;
        expect_dim(&[&a, &b, &c])?;
        Ok(ThreeConnection { a, b, c })
    }

    pub fn zero(alg: &HigherAlgebra, dim: usize) -> Result<Self> {
        Ok(ThreeConnection {
            a: AlgebraValuedForm::zero(alg.g.clone(), dim, 1),
            b: AlgebraValuedForm::zero(alg.h()?.clone(), dim, 2),
            c: AlgebraValuedForm::zero(alg.l()?.clone(), dim, 3),
        })
    }

    pub fn random(alg: &HigherAlgebra, s: &mut Sampler) -> Result<Self> {
        let a = s.algebra_form(&alg.g, 1);
        let b = s.algebra_form(alg.h()?, 2);
        let c = s.algebra_form(alg.l()?, 3);
        Self::new(alg, a, b, c)
    }

    pub fn dim(&self) -> usize {
        self.a.dim()
    }

    /// `𝒜 = A + Bξ¹ + Bξ² + Cξ¹ξ²`.
    pub fn as_generalized(&self) -> Result<GeneralizedForm> {
        GeneralizedForm::lie3(self.a.clone(), self.b.clone(), self.b.clone(), self.c.clone())
    }

    /// Reads `(A, B, C)` off the `1`, `ξ¹` and `ξ¹ξ²` slots; the `ξ²` slot is
    /// returned separately since it need not equal the `ξ¹` slot.
    pub fn from_generalized(alg: &HigherAlgebra, w: &GeneralizedForm) -> Result<(Self, AlgebraValuedForm)> {
        if w.n_type() != 2 || w.degree() != 1 {
            return Err(Error::Invalid("a 3-connection is a type-2 form of degree 1".into()));
        }
        let c = Self::new(alg, w.slot(0).clone(), w.slot(1).clone(), w.slot(3).clone())?;
        Ok((c, w.slot(2).clone()))
    }
}

impl fmt::Debug for ThreeConnection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ThreeConnection")
            .field("A", &self.a)
            .field("B", &self.b)
            .field("C", &self.c)
            .finish()
    }
}

/// Fake curvatures `Ω₁, Ω₂ (, Ω₃)` and the ordinary curvature `F` of `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurvatureSet {
    pub omega1: AlgebraValuedForm,
    pub omega2: AlgebraValuedForm,
    pub omega3: Option<AlgebraValuedForm>,
    pub f: AlgebraValuedForm,
}

/// `F = dA + ½[A, A]`.
pub fn field_strength(a: &AlgebraValuedForm) -> Result<AlgebraValuedForm> {
    a.ext_d().add(&bracket(a, a)?.scale(&Q::half()))
}

/// `Ω₁ = F − α(B)`, `Ω₂ = dB + A▷B`.
pub fn curvature2(alg: &HigherAlgebra, c: &TwoConnection) -> Result<CurvatureSet> {
    let f = field_strength(&c.a)?;
    let omega1 = f.sub(&alg.apply_alpha(&c.b)?)?;
    let omega2 = c.b.ext_d().add(&alg.act(&c.a, &c.b)?)?;
    Ok(CurvatureSet {
        omega1,
        omega2,
        omega3: None,
        f,
    })
}

/// `Ω₂ = dB + A▷B − β(C)`, `Ω₃ = dC + A▷C + {B, B}`.
pub fn curvature3(alg: &HigherAlgebra, c: &ThreeConnection) -> Result<CurvatureSet> {
    let f = field_strength(&c.a)?;
    let omega1 = f.sub(&alg.apply_alpha(&c.b)?)?;
    let omega2 = c
        .b
        .ext_d()
        .add(&alg.act(&c.a, &c.b)?)?
        .sub(&alg.apply_beta(&c.c)?)?;
    let omega3 = c
        .c
        .ext_d()
        .add(&alg.act(&c.a, &c.c)?)?
        .add(&alg.peiffer(&c.b, &c.b)?)?;
    Ok(CurvatureSet {
        omega1,
        omega2,
        omega3: Some(omega3),
        f,
    })
}

/// `ℱ = d̲𝒜 + ½[𝒜, 𝒜]`.
pub fn generalized_curvature(alg: &HigherAlgebra, a: &GeneralizedForm, ctx: &DerivativeContext) -> Result<GeneralizedForm> {
    gderiv(a, ctx, Some(alg))?.add(&gbracket(alg, a, a)?.scale(&Q::half()))
}

/// `Ω₁ + Ω₂ξ`.
pub fn curvature2_form(cs: &CurvatureSet) -> Result<GeneralizedForm> {
    GeneralizedForm::lie2(cs.omega1.clone(), cs.omega2.clone())
}

/// `Ω₁ + Ω₂ξ¹ + (Ω₂ + β(C))ξ² + Ω₃ξ¹ξ²`, the components of ℱ at `(k¹, k²) = (0, −1)`.
pub fn curvature3_form(alg: &HigherAlgebra, c: &ThreeConnection, cs: &CurvatureSet) -> Result<GeneralizedForm> {
    let omega3 = cs.omega3.clone().ok_or_else(|| Error::MissingData("Ω₃".into()))?;
    let shifted = cs.omega2.add(&alg.apply_beta(&c.c)?)?;
    GeneralizedForm::lie3(cs.omega1.clone(), cs.omega2.clone(), shifted, omega3)
}

/// `ℱ̄ = Ω₁ + Ω₂ξ¹ + Ω₂ξ² + Ω₃ξ¹ξ²`.
pub fn reduced_curvature3(cs: &CurvatureSet) -> Result<GeneralizedForm> {
    let omega3 = cs.omega3.clone().ok_or_else(|| Error::MissingData("Ω₃".into()))?;
    GeneralizedForm::lie3(cs.omega1.clone(), cs.omega2.clone(), cs.omega2.clone(), omega3)
}

/// `ℱ̃ = Ω₁ + ½Ω₂ξ¹ + ½Ω₂ξ² + Ω₃ξ¹ξ²`.
pub fn halved_curvature3(cs: &CurvatureSet) -> Result<GeneralizedForm> {
    let omega3 = cs.omega3.clone().ok_or_else(|| Error::MissingData("Ω₃".into()))?;
    let half = cs.omega2.scale(&Q::half());
    GeneralizedForm::lie3(cs.omega1.clone(), half.clone(), half, omega3)
}

/// `dΩ₁ + [A, Ω₁] + α(Ω₂)` and `dΩ₂ + A▷Ω₂ − Ω₁▷B`.
pub fn bianchi2(alg: &HigherAlgebra, c: &TwoConnection) -> Result<Vec<AlgebraValuedForm>> {
    let cs = curvature2(alg, c)?;
    let r1 = cs
        .omega1
        .ext_d()
        .add(&bracket(&c.a, &cs.omega1)?)?
        .add(&alg.apply_alpha(&cs.omega2)?)?;
    let r2 = cs
        .omega2
        .ext_d()
        .add(&alg.act(&c.a, &cs.omega2)?)?
        .sub(&alg.act(&cs.omega1, &c.b)?)?;
    Ok(vec![r1, r2])
}

/// The three 3-Bianchi left-hand sides.
pub fn bianchi3(alg: &HigherAlgebra, c: &ThreeConnection) -> Result<Vec<AlgebraValuedForm>> {
    let cs = curvature3(alg, c)?;
    let omega3 = cs.omega3.as_ref().expect("curvature3 sets Ω₃");
    let r1 = cs
        .omega1
        .ext_d()
        .add(&bracket(&c.a, &cs.omega1)?)?
        .add(&alg.apply_alpha(&cs.omega2)?)?;
    let r2 = cs
        .omega2
        .ext_d()
        .add(&alg.act(&c.a, &cs.omega2)?)?
        .sub(&alg.act(&cs.omega1, &c.b)?)?
        .add(&alg.apply_beta(omega3)?)?;
    let r3 = omega3
        .ext_d()
        .add(&alg.act(&c.a, omega3)?)?
        .sub(&alg.act(&cs.omega1, &c.c)?)?
        .sub(&alg.peiffer(&c.b, &cs.omega2)?)?
        .sub(&alg.peiffer(&cs.omega2, &c.b)?)?;
    Ok(vec![r1, r2, r3])
}

/// `d̲ℱ + [𝒜, ℱ]`.
pub fn generalized_bianchi(alg: &HigherAlgebra, a: &GeneralizedForm, ctx: &DerivativeContext) -> Result<GeneralizedForm> {
    let f = generalized_curvature(alg, a, ctx)?;
    gderiv(&f, ctx, Some(alg))?.add(&gbracket(alg, a, &f)?)
}

/// `𝒜′ = 𝐀𝐝_{𝒢⁻¹}𝒜 + 𝒢⁻¹d̲𝒢`.
pub fn gauge_transform2(
    group: &GroupModel,
    c: &TwoConnection,
    e: &GroupElement,
    ctx: &DerivativeContext,
) -> Result<TwoConnection> {
    let w = group
        .adjoint(&group.inverse(e)?, &c.as_generalized()?)?
        .add(&group.mc2(e, ctx)?)?;
    TwoConnection::from_generalized(&group.alg, &w)
}

/// `A′ = Ad_{g⁻¹}(A + dg g⁻¹ − kα(φ))`, `B′ = g⁻¹▷(B + A▷φ + dφ − kφφ)`.
pub fn gauge_transform2_components(group: &GroupModel, c: &TwoConnection, e: &GroupElement, k: &Q) -> Result<TwoConnection> {
    let alg = &group.alg;
    let ginv = e.g.inverse_unipotent()?;
    let phi = &e.phi[0];
    let right = group.maurer_cartan(&e.g, false)?;
    let a = group.act(&ginv, &c.a.add(&right)?.sub(&alg.apply_alpha(phi)?.scale(k))?)?;
    let inner = c
        .b
        .add(&alg.act(&c.a, phi)?)?
        .add(&phi.ext_d())?
        .sub(&alg.half_square_h(phi)?.scale(k))?;
    TwoConnection::new(alg, a, group.act(&ginv, &inner)?)
}

/// The transformation written with `Ad_g`: `A′ = Ad_g A − dg g⁻¹ + kα(φ)`,
/// `B′ = g▷B − dφ + kφφ − A′▷φ`. Agrees with [`gauge_transform2`] by `𝒢⁻¹`.
pub fn gauge_transform2_by_ad(group: &GroupModel, c: &TwoConnection, e: &GroupElement, k: &Q) -> Result<TwoConnection> {
    let alg = &group.alg;
    let phi = &e.phi[0];
    let a = group
        .act(&e.g, &c.a)?
        .sub(&group.maurer_cartan(&e.g, false)?)?
        .add(&alg.apply_alpha(phi)?.scale(k))?;
    let b = group
        .act(&e.g, &c.b)?
        .sub(&phi.ext_d())?
        .add(&alg.half_square_h(phi)?.scale(k))?
        .sub(&alg.act(&a, phi)?)?;
    TwoConnection::new(alg, a, b)
}

/// `Ω₁′ = Ad_{g⁻¹}Ω₁`, `Ω₂′ = g⁻¹▷(Ω₂ + Ω₁▷φ)`.
pub fn transformed_curvature2(group: &GroupModel, cs: &CurvatureSet, e: &GroupElement) -> Result<(AlgebraValuedForm, AlgebraValuedForm)> {
    let ginv = e.g.inverse_unipotent()?;
    let omega1 = group.act(&ginv, &cs.omega1)?;
    let omega2 = group.act(&ginv, &cs.omega2.add(&group.alg.act(&cs.omega1, &e.phi[0])?)?)?;
    Ok((omega1, omega2))
}

/// The 2-gauge consistency constant `t` in `k¹ + t`; fixed to `k² = −1`.
pub const THREE_GAUGE_SHIFT: i64 = -1;

/// `𝒜′ = 𝐀𝐝_{𝒢⁻¹}𝒜 + 𝒢⁻¹d̲𝒢` with the Maurer–Cartan form taken at
/// `(k¹ + t, k²)`, under `(k¹, k²) = (0, −1)`. Returns the new connection and
/// the `ξ²` slot, which equals `g⁻¹▷(B − β(ψ))`.
pub fn gauge_transform3(group: &GroupModel, c: &ThreeConnection, e: &GroupElement) -> Result<(ThreeConnection, AlgebraValuedForm)> {
    if !e.is_simplified() {
        return Err(Error::Shape("3-gauge transformations need φ₂ = 0".into()));
    }
    let ctx = DerivativeContext::three_gauge();
    let shifted = DerivativeContext::type2(&ctx.k1 + &Q::from_int(THREE_GAUGE_SHIFT), ctx.k2.clone());
    let w = group
        .adjoint(&group.inverse(e)?, &c.as_generalized()?)?
        .add(&group.mc3(e, &shifted)?)?;
    ThreeConnection::from_generalized(&group.alg, &w)
}

/// `A′ = Ad_{g⁻¹}A + g⁻¹dg + g⁻¹α(φ)g`,
/// `B′ = g⁻¹▷(B + A▷φ + dφ + φφ + β(ψ))`,
/// `C′ = g⁻¹▷(C + A▷ψ + {B,φ} − {φ,B} + dψ + φ▷′ψ)`.
pub fn gauge_transform3_components(group: &GroupModel, c: &ThreeConnection, e: &GroupElement) -> Result<ThreeConnection> {
    if !e.is_simplified() {
        return Err(Error::Shape("3-gauge transformations need φ₂ = 0".into()));
    }
    let alg = &group.alg;
    let ginv = e.g.inverse_unipotent()?;
    let (phi, psi) = (&e.phi[0], e.psi.as_ref().expect("type 2"));
    let a = group
        .act(&ginv, &c.a)?
        .add(&group.maurer_cartan(&e.g, true)?)?
        .add(&group.act(&ginv, &alg.apply_alpha(phi)?)?)?;
    let b = c
        .b
        .add(&alg.act(&c.a, phi)?)?
        .add(&phi.ext_d())?
        .add(&alg.half_square_h(phi)?)?
        .add(&alg.apply_beta(psi)?)?;
    let cc = c
        .c
        .add(&alg.act(&c.a, psi)?)?
        .add(&alg.peiffer(&c.b, phi)?)?
        .sub(&alg.peiffer(phi, &c.b)?)?
        .add(&psi.ext_d())?
        .add(&alg.act_prime(phi, psi)?)?;
    ThreeConnection::new(alg, a, group.act(&ginv, &b)?, group.act(&ginv, &cc)?)
}

/// `⟨⟨𝒜, d̲𝒜 + ⅓[𝒜, 𝒜]⟩⟩`.
fn chern_simons_generalized(alg: &HigherAlgebra, a: &GeneralizedForm, ctx: &DerivativeContext) -> Result<OrdinaryForm> {
    let rhs = gderiv(a, ctx, Some(alg))?.add(&gbracket(alg, a, a)?.scale(&Q::new(1, 3)))?;
    gpairing(alg, ctx, a, &rhs)
}

/// CS₄ from the generalized pairing at `k = −1`.
pub fn cs4(alg: &HigherAlgebra, c: &TwoConnection) -> Result<OrdinaryForm> {
    chern_simons_generalized(alg, &c.as_generalized()?, &DerivativeContext::two_gauge())
}

/// `⟨2F − α(B), B⟩ − d⟨A, B⟩`.
pub fn cs4_components(alg: &HigherAlgebra, c: &TwoConnection) -> Result<OrdinaryForm> {
    let f = field_strength(&c.a)?;
    let left = f.scale(&Q::from_int(2)).sub(&alg.apply_alpha(&c.b)?)?;
    alg.pair_forms(&left, &c.b, PairingKind::Gh)?
        .sub(&alg.pair_forms(&c.a, &c.b, PairingKind::Gh)?.ext_d())
}

/// `P₅ = 2⟨Ω₁, Ω₂⟩`.
pub fn chern5(alg: &HigherAlgebra, cs: &CurvatureSet) -> Result<OrdinaryForm> {
    Ok(alg.pair_forms(&cs.omega1, &cs.omega2, PairingKind::Gh)?.scale(&Q::from_int(2)))
}

/// `⟨⟨ℱ, ℱ⟩⟩` at `k = −1`.
pub fn chern5_generalized(alg: &HigherAlgebra, c: &TwoConnection) -> Result<OrdinaryForm> {
    let ctx = DerivativeContext::two_gauge();
    let f = generalized_curvature(alg, &c.as_generalized()?, &ctx)?;
    gpairing(alg, &ctx, &f, &f)
}

/// `CS₄(A′, B′) − CS₄(A, B)` together with the candidate boundary 3-form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cs4Variation {
    pub difference: OrdinaryForm,
    pub boundary: OrdinaryForm,
}

impl Cs4Variation {
    /// `d(CS₄′ − CS₄)`; zero since P₅ is invariant.
    pub fn closedness_residual(&self) -> OrdinaryForm {
        self.difference.ext_d()
    }

    /// `CS₄′ − CS₄ + d(boundary)`.
    pub fn boundary_residual(&self) -> Result<OrdinaryForm> {
        self.difference.add(&self.boundary.ext_d())
    }
}

/// The boundary 3-form is
/// `⟨gAg⁻¹, F(φ)⟩ + ⟨α(φ), dφ + ⅓[φ,φ]⟩ − ⟨dg g⁻¹ + α(φ), g▷B + F(φ)⟩`
/// with `F(φ) = dφ + ½[φ, φ]`; `(A′, B′)` is the transformation written
/// with `Ad_g` at `k = −1`.
pub fn cs4_gauge_variation(group: &GroupModel, c: &TwoConnection, e: &GroupElement) -> Result<Cs4Variation> {
    let alg = &group.alg;
    let k = Q::from_int(-1);
    let transformed = gauge_transform2_by_ad(group, c, e, &k)?;
    let difference = cs4_components(alg, &transformed)?.sub(&cs4_components(alg, c)?)?;
    let phi = &e.phi[0];
    let f_phi = phi.ext_d().add(&alg.half_square_h(phi)?)?;
    let third = bracket(phi, phi)?.scale(&Q::new(1, 3));
    let alpha_phi = alg.apply_alpha(phi)?;
    let right = group.maurer_cartan(&e.g, false)?;
    let mut boundary = alg.pair_forms(&group.act(&e.g, &c.a)?, &f_phi, PairingKind::Gh)?;
    boundary = boundary.add(&alg.pair_forms(&alpha_phi, &phi.ext_d().add(&third)?, PairingKind::Gh)?)?;
    boundary = boundary.sub(&alg.pair_forms(
        &right.add(&alpha_phi)?,
        &group.act(&e.g, &c.b)?.add(&f_phi)?,
        PairingKind::Gh,
    )?)?;
    Ok(Cs4Variation { difference, boundary })
}

/// CS₅ from the generalized pairing at `(k¹, k²) = (0, −1)`.
pub fn cs5(alg: &HigherAlgebra, c: &ThreeConnection) -> Result<OrdinaryForm> {
    chern_simons_generalized(alg, &c.as_generalized()?, &DerivativeContext::three_gauge())
}

/// `⟨2F − α(B), C⟩ + ⟨B, Ω₂⟩ − d⟨A, C⟩`.
pub fn cs5_components(alg: &HigherAlgebra, c: &ThreeConnection) -> Result<OrdinaryForm> {
    let cs = curvature3(alg, c)?;
    let left = cs.f.scale(&Q::from_int(2)).sub(&alg.apply_alpha(&c.b)?)?;
    alg.pair_forms(&left, &c.c, PairingKind::Gl)?
        .add(&alg.pair_forms(&c.b, &cs.omega2, PairingKind::HAnti)?)?
        .sub(&alg.pair_forms(&c.a, &c.c, PairingKind::Gl)?.ext_d())
}

/// `P₆ = 2⟨Ω₁, Ω₃⟩ + ⟨Ω₂, Ω₂⟩`.
pub fn chern6(alg: &HigherAlgebra, cs: &CurvatureSet) -> Result<OrdinaryForm> {
    let omega3 = cs.omega3.as_ref().ok_or_else(|| Error::MissingData("Ω₃".into()))?;
    alg.pair_forms(&cs.omega1, omega3, PairingKind::Gl)?
        .scale(&Q::from_int(2))
        .add(&alg.pair_forms(&cs.omega2, &cs.omega2, PairingKind::HAnti)?)
}

/// `⟨⟨ℱ̄, ℱ̄⟩⟩` at `(k¹, k²) = (0, −1)`.
pub fn chern6_generalized(alg: &HigherAlgebra, cs: &CurvatureSet) -> Result<OrdinaryForm> {
    let f = reduced_curvature3(cs)?;
    gpairing(alg, &DerivativeContext::three_gauge(), &f, &f)
}

/// Field content an action is evaluated on.
#[derive(Clone, Debug)]
pub enum Fields {
    /// An ordinary connection for a Lie algebra.
    One(AlgebraValuedForm),
    Two(TwoConnection),
    Three(ThreeConnection),
}

impl Fields {
    pub fn connection_a(&self) -> &AlgebraValuedForm {
        match self {
            Fields::One(a) => a,
            Fields::Two(c) => &c.a,
            Fields::Three(c) => &c.a,
        }
    }

    pub fn dim(&self) -> usize {
        self.connection_a().dim()
    }

    fn two(&self, kind: &str) -> Result<&TwoConnection> {
        match self {
            Fields::Two(c) => Ok(c),
            _ => Err(Error::Invalid(format!("{kind} needs a 2-connection"))),
        }
    }

    fn three(&self, kind: &str) -> Result<&ThreeConnection> {
        match self {
            Fields::Three(c) => Ok(c),
            _ => Err(Error::Invalid(format!("{kind} needs a 3-connection"))),
        }
    }
}

/// An action functional over the unit cube of the chart.
pub trait ActionKind: Send + Sync {
    fn name(&self) -> &'static str;
    fn evaluate(&self, alg: &HigherAlgebra, fields: &Fields) -> Result<Q>;
}

fn require_dim(kind: &str, fields: &Fields, dim: usize) -> Result<()> {
    if fields.dim() != dim {
        return Err(Error::Invalid(format!("{kind} is defined on a {dim}-dimensional chart, found {}", fields.dim())));
    }
    Ok(())
}

/// `∫⟨2F − α(B), B⟩`, evaluated as `∫(CS₄ + d⟨A, B⟩)`.
pub struct TwoChernSimons;

impl ActionKind for TwoChernSimons {
    fn name(&self) -> &'static str {
        "2cs"
    }

    fn evaluate(&self, alg: &HigherAlgebra, fields: &Fields) -> Result<Q> {
        let c = fields.two("2cs")?;
        require_dim("2cs", fields, 4)?;
        let exact = alg.pair_forms(&c.a, &c.b, PairingKind::Gh)?.ext_d();
        cs4(alg, c)?.add(&exact)?.integrate_cube()
    }
}

/// `∫⟨2F − α(B), C⟩ + ⟨B, Ω₂⟩`, evaluated as `∫(CS₅ + d⟨A, C⟩)`.
pub struct ThreeChernSimons;

impl ActionKind for ThreeChernSimons {
    fn name(&self) -> &'static str {
        "3cs"
    }

    fn evaluate(&self, alg: &HigherAlgebra, fields: &Fields) -> Result<Q> {
        let c = fields.three("3cs")?;
        require_dim("3cs", fields, 5)?;
        let exact = alg.pair_forms(&c.a, &c.c, PairingKind::Gl)?.ext_d();
        cs5(alg, c)?.add(&exact)?.integrate_cube()
    }
}

/// `∫⟨F, *F⟩`.
pub struct YangMills;

impl ActionKind for YangMills {
    fn name(&self) -> &'static str {
        "ym"
    }

    fn evaluate(&self, alg: &HigherAlgebra, fields: &Fields) -> Result<Q> {
        let f = field_strength(fields.connection_a())?;
        alg.inner(&f, &f)
    }
}

/// `((ℱ, ℱ))` at `k = −1`.
pub struct TwoYangMills;

impl ActionKind for TwoYangMills {
    fn name(&self) -> &'static str {
        "2ym"
    }

    fn evaluate(&self, alg: &HigherAlgebra, fields: &Fields) -> Result<Q> {
        let c = fields.two("2ym")?;
        let f = generalized_curvature(alg, &c.as_generalized()?, &DerivativeContext::two_gauge())?;
        ginner(Some(alg), &f, &f)
    }
}

/// `((ℱ̃, ℱ̃))`.
pub struct ThreeYangMills;

impl ActionKind for ThreeYangMills {
    fn name(&self) -> &'static str {
        "3ym"
    }

    fn evaluate(&self, alg: &HigherAlgebra, fields: &Fields) -> Result<Q> {
        let c = fields.three("3ym")?;
        let f = halved_curvature3(&curvature3(alg, c)?)?;
        ginner(Some(alg), &f, &f)
    }
}

pub fn action_kinds() -> Vec<Box<dyn ActionKind>> {
    vec![
        Box::new(TwoChernSimons),
        Box::new(ThreeChernSimons),
        Box::new(YangMills),
        Box::new(TwoYangMills),
        Box::new(ThreeYangMills),
    ]
}

pub fn action_kind(name: &str) -> Result<Box<dyn ActionKind>> {
    action_kinds()
        .into_iter()
        .find(|k| k.name() == name)
        .ok_or_else(|| Error::Invalid(format!("unknown action kind {name:?}")))
}

/// `∫⟨2F, B⟩`.
pub fn bf_value(alg: &HigherAlgebra, c: &TwoConnection) -> Result<Q> {
    let f = field_strength(&c.a)?;
    alg.pair_forms(&f, &c.b, PairingKind::Gh)?
        .scale(&Q::from_int(2))
        .integrate_cube()
}

/// `∫⟨Ω₁, *Ω₁⟩ + ∫⟨Ω₂, *Ω₂⟩`.
pub fn slotwise_two_ym(alg: &HigherAlgebra, cs: &CurvatureSet) -> Result<Q> {
    Ok(alg.inner(&cs.omega1, &cs.omega1)? + alg.inner(&cs.omega2, &cs.omega2)?)
}
