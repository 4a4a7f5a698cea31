//! Connections, fake curvatures, Bianchi identities, gauge transformations,
//! Chern–Simons/Chern forms and actions.

use hgauge::algebra::{AlgebraValuedForm, HigherAlgebra, PairingKind};
use hgauge::exterior::OrdinaryForm;
use hgauge::gauge::*;
use hgauge::genform::{gbracket, gderiv, DerivativeContext, GeneralizedForm};
use hgauge::group::{GroupElement, GroupModel, PolyMatrix};
use hgauge::models;
use hgauge::poly::Polynomial;
use hgauge::random::{Bounds, Sampler};
use hgauge::Q;
use proptest::prelude::*;

const TWO_LEVEL: &[&str] = &["abelian-1", "adjoint-gl2", "adjoint-heis", "skeletal-heis", "skeletal-sl2"];
const WITH_GH: &[&str] = &["abelian-1", "adjoint-gl2", "skeletal-heis", "skeletal-sl2"];
const THREE_LEVEL: &[&str] = &["abelianh-sl2", "abelianh-n2", "trivial-chain", "beta-chain", "identity-chain-heis"];
const WITH_GL: &[&str] = &["abelianh-sl2", "abelianh-n2", "trivial-chain"];
const SIMPLIFIED_GROUPS: &[&str] = &["abelianh-sl2", "abelianh-n2", "trivial-chain", "beta-chain"];

fn model(name: &str) -> HigherAlgebra {
    models::builtin(name).unwrap()
}

fn sampler(seed: u64, dim: usize) -> Sampler {
    Sampler::new(seed, Bounds::new(dim, 2, 2))
}

fn pick<'a>(names: &[&'a str], seed: u64) -> &'a str {
    names[(seed % names.len() as u64) as usize]
}

fn x(n: usize, i: usize) -> Polynomial {
    Polynomial::var(n, i - 1)
}

fn basis(alg: &std::sync::Arc<hgauge::algebra::LieAlgebra>, a: usize, form: OrdinaryForm) -> AlgebraValuedForm {
    AlgebraValuedForm::basis_multiple(alg.clone(), a, form)
}

fn int(n: i64) -> Q {
    Q::from_int(n)
}

#[test]
fn zero_connection_has_zero_curvature() {
    let alg = model("adjoint-gl2");
    let c = TwoConnection::zero(&alg, 3).unwrap();
    let cs = curvature2(&alg, &c).unwrap();
    assert!(cs.omega1.is_zero() && cs.omega2.is_zero() && cs.f.is_zero());
    assert!(c.as_generalized().unwrap().is_zero());
    let alg3 = model("beta-chain");
    let c3 = ThreeConnection::zero(&alg3, 4).unwrap();
    let cs3 = curvature3(&alg3, &c3).unwrap();
    assert!(cs3.omega1.is_zero() && cs3.omega2.is_zero() && cs3.omega3.unwrap().is_zero());
    assert!(c3.as_generalized().unwrap().is_zero());
}

#[test]
fn connection_degrees_are_checked() {
    let alg = model("adjoint-gl2");
    let a = AlgebraValuedForm::zero(alg.g.clone(), 3, 2);
    let b = AlgebraValuedForm::zero(alg.h().unwrap().clone(), 3, 2);
    assert!(TwoConnection::new(&alg, a, b.clone()).is_err());
    let a = AlgebraValuedForm::zero(alg.g.clone(), 3, 1);
    assert!(TwoConnection::new(&alg, b, a).is_err());
}

#[test]
fn abelian_curvature_is_da() {
    let alg = model("abelian-1");
    let mut s = sampler(11, 3);
    let mut c = TwoConnection::random(&alg, &mut s).unwrap();
    // α = id here, so remove it by taking B = 0.
    c.b = AlgebraValuedForm::zero(alg.h().unwrap().clone(), 3, 2);
    let cs = curvature2(&alg, &c).unwrap();
    assert_eq!(cs.omega1, c.a.ext_d());
}

#[test]
fn single_direction_connection_in_adjoint_model() {
    // A = x² dx¹ ⊗ X₁ has [A, A] = 0, so Ω₁ = dA = −dx¹∧dx².
    let alg = model("adjoint-gl2");
    let a = basis(&alg.g, 0, OrdinaryForm::monomial(x(2, 2), &[1]).unwrap());
    let c = TwoConnection::new(&alg, a, AlgebraValuedForm::zero(alg.h().unwrap().clone(), 2, 2)).unwrap();
    let cs = curvature2(&alg, &c).unwrap();
    assert_eq!(cs.omega1, basis(&alg.g, 0, OrdinaryForm::dx(2, &[1, 2]).scale(&int(-1))));
}

#[test]
fn peiffer_term_of_three_curvature() {
    // beta-chain: {e2, e2} = z2. B = (dx¹dx² + dx³dx⁴) ⊗ e2 gives
    // {B, B} = 2 dx¹dx²dx³dx⁴ ⊗ z2.
    let alg = model("beta-chain");
    let h = alg.h().unwrap().clone();
    let l = alg.l().unwrap().clone();
    let b = basis(&h, 1, OrdinaryForm::dx(4, &[1, 2]).add(&OrdinaryForm::dx(4, &[3, 4])).unwrap());
    let c = ThreeConnection::new(
        &alg,
        AlgebraValuedForm::zero(alg.g.clone(), 4, 1),
        b,
        AlgebraValuedForm::zero(l.clone(), 4, 3),
    )
    .unwrap();
    let cs = curvature3(&alg, &c).unwrap();
    assert_eq!(cs.omega3.unwrap(), basis(&l, 1, OrdinaryForm::dx(4, &[1, 2, 3, 4]).scale(&int(2))));
}

#[test]
fn three_curvature_without_b() {
    let alg = model("beta-chain");
    let mut s = sampler(12, 4);
    let mut c = ThreeConnection::random(&alg, &mut s).unwrap();
    c.b = AlgebraValuedForm::zero(alg.h().unwrap().clone(), 4, 2);
    let cs = curvature3(&alg, &c).unwrap();
    assert_eq!(cs.omega2, alg.apply_beta(&c.c).unwrap().neg());
    assert_eq!(cs.omega3.unwrap(), c.c.ext_d().add(&alg.act(&c.a, &c.c).unwrap()).unwrap());
}

#[test]
fn identity_gauge_transformation() {
    let alg = model("adjoint-gl2");
    let group = GroupModel::new(alg.clone()).unwrap();
    let mut s = sampler(13, 3);
    let c = TwoConnection::random(&alg, &mut s).unwrap();
    let e = group.identity(1, 3).unwrap();
    assert_eq!(gauge_transform2(&group, &c, &e, &DerivativeContext::two_gauge()).unwrap(), c);

    let alg3 = model("abelianh-sl2");
    let group3 = GroupModel::new(alg3.clone()).unwrap();
    let c3 = ThreeConnection::random(&alg3, &mut s).unwrap();
    let e3 = group3.identity(2, 3).unwrap();
    let (t, xi2) = gauge_transform3(&group3, &c3, &e3).unwrap();
    assert_eq!(t, c3);
    assert_eq!(xi2, c3.b);
}

#[test]
fn ordinary_gauge_transformation_when_shift_vanishes() {
    let alg = model("adjoint-gl2");
    let group = GroupModel::new(alg.clone()).unwrap();
    let mut s = sampler(14, 3);
    let c = TwoConnection::random(&alg, &mut s).unwrap();
    let g = group.random_function(&mut s).unwrap();
    let ginv = g.inverse_unipotent().unwrap();
    let e = GroupElement::new(g.clone(), vec![AlgebraValuedForm::zero(alg.h().unwrap().clone(), 3, 1)], None).unwrap();
    let t = gauge_transform2(&group, &c, &e, &DerivativeContext::two_gauge()).unwrap();
    let right = group.maurer_cartan(&g, false).unwrap();
    assert_eq!(t.a, group.act(&ginv, &c.a.add(&right).unwrap()).unwrap());
    assert_eq!(t.b, group.act(&ginv, &c.b).unwrap());
}

#[test]
fn beta_shift_of_three_gauge_transformation() {
    // A = 0, B = 0, g = 1: B′ = dφ + φφ + β(ψ).
    let alg = model("beta-chain");
    let group = GroupModel::new(alg.clone()).unwrap();
    let mut s = sampler(15, 4);
    let h = alg.h().unwrap().clone();
    let mut c = ThreeConnection::random(&alg, &mut s).unwrap();
    c.a = AlgebraValuedForm::zero(alg.g.clone(), 4, 1);
    c.b = AlgebraValuedForm::zero(h.clone(), 4, 2);
    let phi = s.algebra_form(&h, 1);
    let psi = s.algebra_form(alg.l().unwrap(), 2);
    let e = GroupElement::new(
        PolyMatrix::identity(group.size(), 4),
        vec![phi.clone(), AlgebraValuedForm::zero(h, 4, 1)],
        Some(psi.clone()),
    )
    .unwrap();
    let (t, _) = gauge_transform3(&group, &c, &e).unwrap();
    let expected = phi
        .ext_d()
        .add(&alg.half_square_h(&phi).unwrap())
        .unwrap()
        .add(&alg.apply_beta(&psi).unwrap())
        .unwrap();
    assert_eq!(t.b, expected);
}

#[test]
fn three_gauge_needs_simplified_element() {
    let alg = model("abelianh-sl2");
    let group = GroupModel::new(alg.clone()).unwrap();
    let mut s = sampler(16, 3);
    let c = ThreeConnection::random(&alg, &mut s).unwrap();
    let e = group.random_element(&mut s, 2, false).unwrap();
    if !e.is_simplified() {
        assert!(gauge_transform3(&group, &c, &e).is_err());
        assert!(gauge_transform3_components(&group, &c, &e).is_err());
    }
}

#[test]
fn cs4_without_a() {
    let alg = model("adjoint-gl2");
    let mut s = sampler(17, 4);
    let mut c = TwoConnection::random(&alg, &mut s).unwrap();
    c.a = AlgebraValuedForm::zero(alg.g.clone(), 4, 1);
    let expected = alg.pair_forms(&alg.apply_alpha(&c.b).unwrap(), &c.b, PairingKind::Gh).unwrap().neg();
    assert_eq!(cs4(&alg, &c).unwrap(), expected);
}

#[test]
fn cs4_on_skeletal_model_is_bf_form() {
    let alg = model("skeletal-sl2");
    let mut s = sampler(18, 4);
    let c = TwoConnection::random(&alg, &mut s).unwrap();
    let f = field_strength(&c.a).unwrap();
    let expected = alg
        .pair_forms(&f.scale(&int(2)), &c.b, PairingKind::Gh)
        .unwrap()
        .sub(&alg.pair_forms(&c.a, &c.b, PairingKind::Gh).unwrap().ext_d())
        .unwrap();
    assert_eq!(cs4(&alg, &c).unwrap(), expected);
}

#[test]
fn cs5_without_a_alpha_beta() {
    // α = β = 0 on the abelian-𝔥 chains; with A = 0, CS₅ = ⟨B, dB⟩.
    let alg = model("abelianh-sl2");
    let mut s = sampler(19, 5);
    let mut c = ThreeConnection::random(&alg, &mut s).unwrap();
    c.a = AlgebraValuedForm::zero(alg.g.clone(), 5, 1);
    let expected = alg.pair_forms(&c.b, &c.b.ext_d(), PairingKind::HAnti).unwrap();
    assert_eq!(cs5_components(&alg, &c).unwrap(), expected);
    assert_eq!(cs5(&alg, &c).unwrap(), expected);
}

#[test]
fn zero_fields_give_zero_chern_simons_and_actions() {
    let alg = model("adjoint-gl2");
    let c = TwoConnection::zero(&alg, 4).unwrap();
    assert!(cs4(&alg, &c).unwrap().is_zero());
    assert!(chern5(&alg, &curvature2(&alg, &c).unwrap()).unwrap().is_zero());
    let alg3 = model("abelianh-sl2");
    let c3 = ThreeConnection::zero(&alg3, 5).unwrap();
    assert!(cs5(&alg3, &c3).unwrap().is_zero());
    assert!(chern6(&alg3, &curvature3(&alg3, &c3).unwrap()).unwrap().is_zero());
    for kind in action_kinds() {
        let fields = match kind.name() {
            "3cs" | "3ym" => Fields::Three(c3.clone()),
            _ => Fields::Two(c.clone()),
        };
        let a = if matches!(fields, Fields::Three(_)) { &alg3 } else { &alg };
        assert_eq!(kind.evaluate(a, &fields).unwrap(), Q::zero(), "{}", kind.name());
    }
}

#[test]
fn abelian_yang_mills_on_the_square() {
    // A = x² dx¹ ⊗ X₁: F = −dx¹∧dx², ⟨F, *F⟩ = 1 on [0,1]².
    let alg = model("abelian-1");
    let a = basis(&alg.g, 0, OrdinaryForm::monomial(x(2, 2), &[1]).unwrap());
    let c = TwoConnection::new(&alg, a, AlgebraValuedForm::zero(alg.h().unwrap().clone(), 2, 2)).unwrap();
    assert_eq!(action_kind("ym").unwrap().evaluate(&alg, &Fields::Two(c)).unwrap(), Q::one());
}

#[test]
fn action_kinds_are_registered_by_name() {
    let names: Vec<_> = action_kinds().iter().map(|k| k.name()).collect();
    assert_eq!(names, ["2cs", "3cs", "ym", "2ym", "3ym"]);
    assert!(action_kind("4cs").is_err());
}

#[test]
fn chern_simons_actions_check_dimension() {
    let alg = model("skeletal-sl2");
    let c = TwoConnection::zero(&alg, 3).unwrap();
    assert!(action_kind("2cs").unwrap().evaluate(&alg, &Fields::Two(c.clone())).is_err());
    assert!(action_kind("3ym").unwrap().evaluate(&alg, &Fields::Two(c)).is_err());
}

#[test]
fn three_ym_weights() {
    // ((ℱ̃, ℱ̃)) = ∫⟨Ω₁,*Ω₁⟩ + ½∫⟨Ω₂,*Ω₂⟩ + ∫⟨Ω₃,*Ω₃⟩ by the slotwise inner
    // product; the unit-weight expansion differs by ½∫⟨Ω₂,*Ω₂⟩.
    let alg = model("abelianh-sl2");
    let mut s = sampler(20, 3);
    let c = ThreeConnection::random(&alg, &mut s).unwrap();
    let cs = curvature3(&alg, &c).unwrap();
    let o3 = cs.omega3.as_ref().unwrap();
    let (i1, i2, i3) = (
        alg.inner(&cs.omega1, &cs.omega1).unwrap(),
        alg.inner(&cs.omega2, &cs.omega2).unwrap(),
        alg.inner(o3, o3).unwrap(),
    );
    let value = action_kind("3ym").unwrap().evaluate(&alg, &Fields::Three(c)).unwrap();
    assert_eq!(value, &(&i1 + &(&i2 * &Q::half())) + &i3);
    assert!(i2 > Q::zero());
    assert_ne!(value, &(&i1 + &i2) + &i3);
}

fn three_context() -> DerivativeContext {
    DerivativeContext::three_gauge()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn two_curvature_matches_generalized(seed in any::<u64>()) {
        let alg = model(pick(TWO_LEVEL, seed));
        let mut s = sampler(seed, 4);
        let c = TwoConnection::random(&alg, &mut s).unwrap();
        let cs = curvature2(&alg, &c).unwrap();
        prop_assert_eq!(cs.omega1.clone(), cs.f.sub(&alg.apply_alpha(&c.b).unwrap()).unwrap());
        let f = generalized_curvature(&alg, &c.as_generalized().unwrap(), &DerivativeContext::two_gauge()).unwrap();
        prop_assert_eq!(f, curvature2_form(&cs).unwrap());
        for r in bianchi2(&alg, &c).unwrap() {
            prop_assert!(r.is_zero());
        }
    }

    #[test]
    fn three_curvature_matches_generalized(seed in any::<u64>()) {
        let alg = model(pick(THREE_LEVEL, seed));
        let mut s = sampler(seed, 4);
        let c = ThreeConnection::random(&alg, &mut s).unwrap();
        let cs = curvature3(&alg, &c).unwrap();
        let f = generalized_curvature(&alg, &c.as_generalized().unwrap(), &three_context()).unwrap();
        prop_assert_eq!(&f, &curvature3_form(&alg, &c, &cs).unwrap());
        let reduced = reduced_curvature3(&cs).unwrap();
        prop_assert_eq!(f.slot(2).sub(reduced.slot(2)).unwrap(), alg.apply_beta(&c.c).unwrap());
        for r in bianchi3(&alg, &c).unwrap() {
            prop_assert!(r.is_zero());
        }
    }

    #[test]
    fn generalized_bianchi_for_any_constants(seed in any::<u64>(), k1 in -2i64..=2, k2 in -2i64..=2) {
        let mut s = sampler(seed, 4);
        let alg = model(pick(TWO_LEVEL, seed));
        let a = TwoConnection::random(&alg, &mut s).unwrap().as_generalized().unwrap();
        prop_assert!(generalized_bianchi(&alg, &a, &DerivativeContext::type1(int(k1))).unwrap().is_zero());
        let alg3 = model(pick(THREE_LEVEL, seed));
        let a3 = ThreeConnection::random(&alg3, &mut s).unwrap().as_generalized().unwrap();
        prop_assert!(generalized_bianchi(&alg3, &a3, &DerivativeContext::type2(int(k1), int(k2))).unwrap().is_zero());
    }

    #[test]
    fn two_gauge_transformation_paths_agree(seed in any::<u64>(), k in -2i64..=2) {
        let alg = model(pick(TWO_LEVEL, seed));
        let group = GroupModel::new(alg.clone()).unwrap();
        let mut s = sampler(seed, 3);
        let c = TwoConnection::random(&alg, &mut s).unwrap();
        let e = group.random_element(&mut s, 1, false).unwrap();
        let ctx = DerivativeContext::type1(int(k));
        let t = gauge_transform2(&group, &c, &e, &ctx).unwrap();
        prop_assert_eq!(&t, &gauge_transform2_components(&group, &c, &e, &ctx.k).unwrap());
        prop_assert_eq!(
            gauge_transform2_by_ad(&group, &c, &group.inverse(&e).unwrap(), &ctx.k).unwrap(),
            t.clone()
        );
        // ℱ′ = 𝐀𝐝_{𝒢⁻¹}ℱ for every k.
        let f = generalized_curvature(&alg, &c.as_generalized().unwrap(), &ctx).unwrap();
        let f_t = generalized_curvature(&alg, &t.as_generalized().unwrap(), &ctx).unwrap();
        prop_assert_eq!(f_t, group.adjoint(&group.inverse(&e).unwrap(), &f).unwrap());
    }

    #[test]
    fn fake_curvatures_transform_covariantly(seed in any::<u64>()) {
        let alg = model(pick(TWO_LEVEL, seed));
        let group = GroupModel::new(alg.clone()).unwrap();
        let mut s = sampler(seed, 3);
        let c = TwoConnection::random(&alg, &mut s).unwrap();
        let e = group.random_element(&mut s, 1, false).unwrap();
        let t = gauge_transform2(&group, &c, &e, &DerivativeContext::two_gauge()).unwrap();
        let after = curvature2(&alg, &t).unwrap();
        let (o1, o2) = transformed_curvature2(&group, &curvature2(&alg, &c).unwrap(), &e).unwrap();
        prop_assert_eq!(after.omega1, o1);
        prop_assert_eq!(after.omega2, o2);
    }

    #[test]
    fn three_gauge_transformation_matches_display(seed in any::<u64>()) {
        let alg = model(pick(SIMPLIFIED_GROUPS, seed));
        let group = GroupModel::new(alg.clone()).unwrap();
        let mut s = sampler(seed, 3);
        let c = ThreeConnection::random(&alg, &mut s).unwrap();
        let e = group.random_element(&mut s, 2, true).unwrap();
        let (t, xi2) = gauge_transform3(&group, &c, &e).unwrap();
        prop_assert_eq!(&t, &gauge_transform3_components(&group, &c, &e).unwrap());
        let ginv = e.g.inverse_unipotent().unwrap();
        let beta_psi = alg.apply_beta(e.psi.as_ref().unwrap()).unwrap();
        prop_assert_eq!(xi2, group.act(&ginv, &c.b.sub(&beta_psi).unwrap()).unwrap());
    }

    #[test]
    fn cs4_paths_agree_and_chern_weil_holds(seed in any::<u64>()) {
        let alg = model(pick(WITH_GH, seed));
        let mut s = sampler(seed, 5);
        let c = TwoConnection::random(&alg, &mut s).unwrap();
        let cs = cs4(&alg, &c).unwrap();
        prop_assert_eq!(&cs, &cs4_components(&alg, &c).unwrap());
        let p5 = chern5(&alg, &curvature2(&alg, &c).unwrap()).unwrap();
        prop_assert_eq!(&p5, &chern5_generalized(&alg, &c).unwrap());
        prop_assert_eq!(cs.ext_d(), p5);
    }

    #[test]
    fn chern5_is_gauge_invariant(seed in any::<u64>()) {
        let alg = model(pick(WITH_GH, seed));
        let group = GroupModel::new(alg.clone()).unwrap();
        let mut s = sampler(seed, 5);
        let c = TwoConnection::random(&alg, &mut s).unwrap();
        let e = group.random_element(&mut s, 1, false).unwrap();
        let t = gauge_transform2(&group, &c, &e, &DerivativeContext::two_gauge()).unwrap();
        prop_assert_eq!(
            chern5(&alg, &curvature2(&alg, &t).unwrap()).unwrap(),
            chern5(&alg, &curvature2(&alg, &c).unwrap()).unwrap()
        );
        let v = cs4_gauge_variation(&group, &c, &e).unwrap();
        prop_assert!(v.closedness_residual().is_zero());
    }

    #[test]
    fn cs5_paths_agree_and_chern_weil_holds(seed in any::<u64>()) {
        let alg = model(pick(WITH_GL, seed));
        let mut s = sampler(seed, 6);
        let c = ThreeConnection::random(&alg, &mut s).unwrap();
        let cs = cs5(&alg, &c).unwrap();
        prop_assert_eq!(&cs, &cs5_components(&alg, &c).unwrap());
        let curv = curvature3(&alg, &c).unwrap();
        let p6 = chern6(&alg, &curv).unwrap();
        prop_assert_eq!(&p6, &chern6_generalized(&alg, &curv).unwrap());
        prop_assert_eq!(cs.ext_d(), p6);
    }

    #[test]
    fn two_ym_is_slotwise_and_nonnegative(seed in any::<u64>()) {
        let alg = model(pick(TWO_LEVEL, seed));
        let mut s = sampler(seed, 3);
        let c = TwoConnection::random(&alg, &mut s).unwrap();
        let fields = Fields::Two(c.clone());
        let v = action_kind("2ym").unwrap().evaluate(&alg, &fields).unwrap();
        prop_assert_eq!(&v, &slotwise_two_ym(&alg, &curvature2(&alg, &c).unwrap()).unwrap());
        prop_assert!(v >= Q::zero());
        prop_assert!(action_kind("ym").unwrap().evaluate(&alg, &fields).unwrap() >= Q::zero());
    }

    #[test]
    fn skeletal_two_chern_simons_is_bf(seed in any::<u64>()) {
        let alg = model(pick(&["skeletal-heis", "skeletal-sl2"], seed));
        let mut s = sampler(seed, 4);
        let c = TwoConnection::random(&alg, &mut s).unwrap();
        let v = action_kind("2cs").unwrap().evaluate(&alg, &Fields::Two(c.clone())).unwrap();
        prop_assert_eq!(v, bf_value(&alg, &c).unwrap());
    }
}

#[test]
fn generalized_bracket_and_derivative_are_exported() {
    // The generalized curvature is assembled from d̲ and the bracket alone.
    let alg = model("adjoint-heis");
    let mut s = sampler(21, 3);
    let a = TwoConnection::random(&alg, &mut s).unwrap().as_generalized().unwrap();
    let ctx = DerivativeContext::two_gauge();
    let f: GeneralizedForm = gderiv(&a, &ctx, Some(&alg))
        .unwrap()
        .add(&gbracket(&alg, &a, &a).unwrap().scale(&Q::half()))
        .unwrap();
    assert_eq!(generalized_curvature(&alg, &a, &ctx).unwrap(), f);
}

#[test]
fn h_form_argument_order_matters_for_chern_weil() {
    // With the 𝔥-form taking the ξ¹-slot first, the h-term of CS₅ becomes
    // ⟨X₁, B⟩ = −⟨B, X₁⟩ and d(CS₅) no longer equals P₆.
    let ctx = three_context();
    let mut broken = 0;
    for seed in 0..40 {
        let alg = model(pick(WITH_GL, seed));
        let mut s = sampler(seed, 6);
        let c = ThreeConnection::random(&alg, &mut s).unwrap();
        let a = c.as_generalized().unwrap();
        let x1 = gderiv(&a, &ctx, Some(&alg))
            .unwrap()
            .add(&gbracket(&alg, &a, &a).unwrap().scale(&Q::new(1, 3)))
            .unwrap()
            .slot(1)
            .clone();
        let ours = alg.pair_forms(&c.b, &x1, PairingKind::HAnti).unwrap();
        let swapped = alg.pair_forms(&x1, &c.b, PairingKind::HAnti).unwrap();
        assert_eq!(swapped, ours.neg());
        let cs = cs5(&alg, &c).unwrap();
        let other = cs.sub(&ours).unwrap().add(&swapped).unwrap();
        let p6 = chern6(&alg, &curvature3(&alg, &c).unwrap()).unwrap();
        assert_eq!(cs.ext_d(), p6);
        if other.ext_d() != p6 {
            broken += 1;
        }
    }
    assert!(broken > 0);
}
