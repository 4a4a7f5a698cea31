//! Generalized forms against an independent Grassmann-algebra expansion.

use hgauge::algebra::AlgebraValuedForm;
use hgauge::exterior::OrdinaryForm;
use hgauge::genform::{gderiv, gwedge, DerivativeContext, GeneralizedForm, Profile};
use hgauge::models;
use hgauge::poly::Polynomial;
use hgauge::random::{Bounds, Sampler};
use hgauge::Q;
use proptest::prelude::*;

mod common;
use common::{ordinary, slot_words, xi, Grassmann};

fn expand(w: &GeneralizedForm) -> Grassmann {
    let n = w.dim();
    let mut r = Grassmann::zero(n);
    for (s, word) in w.slots().iter().zip(slot_words(w.n_type())) {
        r = r.add(&ordinary(n, s.as_real().unwrap(), &word));
    }
    r
}

fn sampler(seed: u64, dim: usize) -> Sampler {
    Sampler::new(seed, Bounds::new(dim, 2, 2))
}

fn real(s: &mut Sampler, n_type: u8, degree: i32) -> GeneralizedForm {
    s.generalized(None, Profile::Real, n_type, degree).unwrap()
}

fn ks(ctx: &DerivativeContext) -> Vec<Q> {
    match ctx.n_type {
        1 => vec![ctx.k.clone()],
        _ => vec![ctx.k1.clone(), ctx.k2.clone()],
    }
}

fn poly(n: usize, terms: &[(&[u32], i64)]) -> Polynomial {
    Polynomial::from_terms(
        n,
        terms
            .iter()
            .map(|(e, c)| (hgauge::poly::Monomial::from_exps(e).unwrap(), Q::from_int(*c))),
    )
}

fn form(f: Polynomial, idx: &[usize]) -> AlgebraValuedForm {
    AlgebraValuedForm::real(OrdinaryForm::monomial(f, idx).unwrap())
}

#[test]
fn wedge_example_with_three_forms() {
    let n = 3;
    let one = Polynomial::one(n);
    let w1 = GeneralizedForm::lie2(form(poly(n, &[(&[1, 0, 0], 1)]), &[1]), form(one.clone(), &[1, 2])).unwrap();
    let w2 = GeneralizedForm::lie2(form(poly(n, &[(&[0, 1, 0], 1)]), &[2]), form(one, &[2, 3])).unwrap();
    let got = gwedge(&w1, &w2).unwrap();
    let expected = GeneralizedForm::lie2(
        form(poly(n, &[(&[1, 1, 0], 1)]), &[1, 2]),
        form(poly(n, &[(&[1, 0, 0], 1)]), &[1, 2, 3]),
    )
    .unwrap();
    assert_eq!(got, expected);
    assert_eq!(expand(&got), expand(&w1).mul(&expand(&w2)));
}

#[test]
fn derivative_example_type_one() {
    let n = 2;
    let w = GeneralizedForm::lie2(
        form(poly(n, &[(&[1, 0], 1)]), &[]),
        form(poly(n, &[(&[0, 1], 1)]), &[1]),
    )
    .unwrap();
    let got = gderiv(&w, &DerivativeContext::two_gauge(), None).unwrap();
    // dx¹ + x² dx¹ + (dx² ∧ dx¹) ξ
    let u = form(poly(n, &[(&[0, 0], 1), (&[0, 1], 1)]), &[1]);
    let v = form(poly(n, &[(&[0, 0], -1)]), &[1, 2]);
    assert_eq!(got, GeneralizedForm::lie2(u, v).unwrap());
}

#[test]
fn wedge_with_unit_is_identity() {
    let mut s = sampler(7, 3);
    for n_type in 0..=2u8 {
        let w = real(&mut s, n_type, 1);
        let mut unit = GeneralizedForm::zero(None, Profile::Real, n_type, 3, 0).unwrap().into_slots();
        unit[0] = AlgebraValuedForm::real(OrdinaryForm::function(Polynomial::one(3)));
        let unit = GeneralizedForm::from_slots(unit).unwrap();
        assert_eq!(gwedge(&w, &unit).unwrap(), w);
        assert_eq!(gwedge(&unit, &w).unwrap(), w);
    }
}

#[test]
fn split_keeps_the_last_xi_outside() {
    let n = 3;
    let mut s = sampler(11, n);
    for n_type in 1..=2u8 {
        for p in -(n_type as i32)..=2 {
            let w = real(&mut s, n_type, p);
            let (w0, w1) = w.split().unwrap();
            assert_eq!((w0.degree(), w1.degree()), (p, p + 1));
            let tail = expand(&w1).mul(&xi(n, n_type as usize));
            assert_eq!(expand(&w0).add(&tail), expand(&w));
            assert_eq!(GeneralizedForm::join(&w0, &w1).unwrap(), w);
        }
    }
}

#[test]
fn three_gauge_derivative_of_connection_shape() {
    let alg = models::builtin("abelianh-sl2").unwrap();
    let mut s = sampler(3, 4);
    let a = s.algebra_form(&alg.g, 1);
    let b = s.algebra_form(alg.h().unwrap(), 2);
    let c = s.algebra_form(alg.l().unwrap(), 3);
    let w = GeneralizedForm::lie3(a.clone(), b.clone(), b.clone(), c.clone()).unwrap();
    let got = gderiv(&w, &DerivativeContext::three_gauge(), Some(&alg)).unwrap();
    let expected = GeneralizedForm::lie3(
        a.ext_d().sub(&alg.apply_alpha(&b).unwrap()).unwrap(),
        b.ext_d().sub(&alg.apply_beta(&c).unwrap()).unwrap(),
        b.ext_d(),
        c.ext_d(),
    )
    .unwrap();
    assert_eq!(got, expected);
}

fn arb_context(n_type: u8) -> impl Strategy<Value = DerivativeContext> {
    let q = (-4i64..=4, 1i64..=3).prop_map(|(a, b)| Q::new(a, b));
    (q.clone(), q).prop_map(move |(a, b)| match n_type {
        1 => DerivativeContext::type1(a),
        _ => DerivativeContext::type2(a, b),
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn wedge_matches_grassmann_expansion(seed in any::<u64>(), n_type in 0u8..=2, p in -2i32..=2, q in -2i32..=2) {
        prop_assume!(p >= -(n_type as i32) && q >= -(n_type as i32));
        let mut s = sampler(seed, 3);
        let (a, b) = (real(&mut s, n_type, p), real(&mut s, n_type, q));
        let ab = gwedge(&a, &b).unwrap();
        prop_assert_eq!(expand(&ab), expand(&a).mul(&expand(&b)));
        let ba = gwedge(&b, &a).unwrap();
        prop_assert_eq!(ab, ba.scale(&Q::sign((p * q) as i64)));
    }

    #[test]
    fn derivative_matches_grassmann_expansion(seed in any::<u64>(), n_type in 1u8..=2, p in -2i32..=3, ctx in (1u8..=2).prop_flat_map(arb_context)) {
        prop_assume!(p >= -(n_type as i32) && ctx.n_type == n_type);
        let mut s = sampler(seed, 3);
        let w = real(&mut s, n_type, p);
        let dw = gderiv(&w, &ctx, None).unwrap();
        prop_assert_eq!(expand(&dw), expand(&w).d(&ks(&ctx)));
        prop_assert!(gderiv(&dw, &ctx, None).unwrap().is_zero());
    }

    #[test]
    fn wedge_is_associative(seed in any::<u64>(), n_type in 0u8..=2) {
        let mut s = sampler(seed, 4);
        let (a, b, c) = (real(&mut s, n_type, 0), real(&mut s, n_type, 1), real(&mut s, n_type, 1));
        let left = gwedge(&gwedge(&a, &b).unwrap(), &c).unwrap();
        let right = gwedge(&a, &gwedge(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }
}
