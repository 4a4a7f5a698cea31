//! Builtin algebra models, selectable by name, and a set of deliberately
//! corrupted variants used to exercise the validators.

use std::sync::Arc;

use crate::algebra::{HigherAlgebra, LieAlgebra, PairingData};
use crate::error::{Error, Result};
use crate::linalg::{Bilinear, Matrix};
use crate::rational::Q;

fn unit(n: usize, i: usize, j: usize) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    m.set(i, j, Q::one());
    m
}

fn diag(entries: &[i64]) -> Matrix {
    let n = entries.len();
    Matrix::from_fn(n, n, |i, j| if i == j { Q::from_int(entries[i]) } else { Q::zero() })
}

/// The symplectic form `[[0,1],[-1,0]]` on ℝ².
fn omega2() -> Matrix {
    Matrix::from_ints(&[&[0, 1], &[-1, 0]])
}

/// Line spanned by `E12` in 2×2 matrices.
pub fn line() -> LieAlgebra {
    LieAlgebra::from_matrices("u1", &["X"], vec![unit(2, 0, 1)]).expect("closed span")
}

pub fn sl2() -> LieAlgebra {
    LieAlgebra::from_matrices(
        "sl2",
        &["H", "E", "F"],
        vec![diag(&[1, -1]), unit(2, 0, 1), unit(2, 1, 0)],
    )
    .expect("closed span")
}

pub fn gl2() -> LieAlgebra {
    LieAlgebra::from_matrices(
        "gl2",
        &["E11", "E12", "E21", "E22"],
        vec![unit(2, 0, 0), unit(2, 0, 1), unit(2, 1, 0), unit(2, 1, 1)],
    )
    .expect("closed span")
}

/// Strictly upper triangular 3×3 matrices.
pub fn heisenberg() -> LieAlgebra {
    LieAlgebra::from_matrices(
        "heis",
        &["P", "Q", "Z"],
        vec![unit(3, 0, 1), unit(3, 1, 2), unit(3, 0, 2)],
    )
    .expect("closed span")
}

fn relabel(g: &LieAlgebra, suffix: &str) -> LieAlgebra {
    LieAlgebra::new(
        format!("{}.{suffix}", g.name()),
        g.labels().iter().map(|l| format!("{l}.{suffix}")).collect(),
        g.structure().clone(),
    )
    .expect("same shape")
}

/// `X_a ▷ f^b = −Σ_c f^b([X_a, X_c]) f^c` on the dual basis.
pub fn coadjoint_tensor(g: &LieAlgebra) -> Bilinear {
    let m = g.dim();
    let f = g.structure();
    Bilinear::from_fn(m, m, m, |a, b, c| -f.get(a, c, b).clone())
}

fn dual(g: &LieAlgebra, name: String) -> LieAlgebra {
    let m = g.dim();
    LieAlgebra::new(
        name,
        g.labels().iter().map(|l| format!("{l}*")).collect(),
        Bilinear::zero(m, m, m),
    )
    .expect("same shape")
}

fn identity_syms(g: usize, h: Option<usize>, l: Option<usize>) -> PairingData {
    PairingData {
        sym_g: Some(Matrix::identity(g)),
        sym_h: h.map(Matrix::identity),
        sym_l: l.map(Matrix::identity),
        ..Default::default()
    }
}

/// `h = g`, `α = id`, `▷ = ad`.
pub fn adjoint_crossed(name: &str, g: LieAlgebra, gh: Option<Matrix>) -> HigherAlgebra {
    let m = g.dim();
    let h = relabel(&g, "h");
    let act = g.structure().clone();
    let mut p = identity_syms(m, Some(m), None);
    p.gh = gh;
    HigherAlgebra::crossed(name, g, h, Matrix::identity(m), act)
        .expect("consistent shapes")
        .with_pairings(p)
}

/// `α = 0`, abelian `h = g*` with the coadjoint action and the canonical
/// pairing.
pub fn skeletal_coadjoint(name: &str, g: LieAlgebra) -> HigherAlgebra {
    let m = g.dim();
    let h = dual(&g, format!("{}*", g.name()));
    let act = coadjoint_tensor(&g);
    let mut p = identity_syms(m, Some(m), None);
    p.gh = Some(Matrix::identity(m));
    HigherAlgebra::crossed(name, g, h, Matrix::zeros(m, m), act)
        .expect("consistent shapes")
        .with_pairings(p)
}

/// Abelian `h = ℝ^r` carrying the matrix representation `rep` of `g` and the
/// antisymmetric form `omega`; `l = g*` coadjoint, `β = 0`, `α = 0`, and
/// `{Y₁,Y₂}` fixed by `⟨X,{Y₁,Y₂}⟩ = ½ ω(Y₂, X▷Y₁)` with the canonical
/// pairing of `g` and `g*`.
pub fn abelian_h_chain(name: &str, g: LieAlgebra, rep: &[Matrix], omega: Matrix) -> Result<HigherAlgebra> {
    let m = g.dim();
    if rep.len() != m {
        return Err(Error::Invalid(format!("{name}: one representation matrix per basis element")));
    }
    let r = omega.rows();
    let labels: Vec<String> = (1..=r).map(|i| format!("e{i}")).collect();
    let h = LieAlgebra::new(format!("{name}.h"), labels, Bilinear::zero(r, r, r))?;
    let l = dual(&g, format!("{name}.l"));
    let act_h = Bilinear::from_action_matrices(rep)?;
    let act_l = coadjoint_tensor(&g);
    let half = Q::half();
    let peiffer = Bilinear::from_fn(r, r, m, |i, j, a| {
        // ½ ω(e_j, X_a e_i)
        let v: Q = (0..r).map(|k| omega.get(j, k) * rep[a].get(k, i)).sum();
        &half * &v
    });
    let mut p = identity_syms(m, Some(r), Some(m));
    p.gl = Some(Matrix::identity(m));
    p.h_anti = Some(omega);
    Ok(HigherAlgebra::two_crossed(
        name,
        g,
        h,
        l,
        Matrix::zeros(m, r),
        Matrix::zeros(r, m),
        act_h,
        act_l,
        peiffer,
    )?
    .with_pairings(p)
    .with_flags(true, true))
}

/// `l = h = g` with `β = id`, `α = 0`, `▷ = ad` and `{Y₁,Y₂} = [Y₁,Y₂]`.
pub fn identity_chain(name: &str, g: LieAlgebra) -> HigherAlgebra {
    let m = g.dim();
    let h = relabel(&g, "h");
    let l = relabel(&g, "l");
    let f = g.structure().clone();
    HigherAlgebra::two_crossed(
        name,
        g,
        h,
        l,
        Matrix::zeros(m, m),
        Matrix::identity(m),
        f.clone(),
        f.clone(),
        f,
    )
    .expect("consistent shapes")
    .with_pairings(identity_syms(m, Some(m), Some(m)))
}

/// `g = ⟨X⟩`, `h = ⟨e1,e2⟩`, `l = ⟨z1,z2⟩` with `β(z1) = e1`,
/// `X▷e2 = e1`, `X▷z1 = z2`, `{e2,e2} = z2`.
pub fn beta_chain() -> HigherAlgebra {
    let g = line();
    let h = LieAlgebra::abelian("beta-chain.h", &["e1", "e2"]);
    let l = LieAlgebra::abelian("beta-chain.l", &["z1", "z2"]);
    let mut beta = Matrix::zeros(2, 2);
    beta.set(0, 0, Q::one());
    let act_h = Bilinear::from_entries(1, 2, 2, [(0, 1, 0, Q::one())]);
    let act_l = Bilinear::from_entries(1, 2, 2, [(0, 0, 1, Q::one())]);
    let peiffer = Bilinear::from_entries(2, 2, 2, [(1, 1, 1, Q::one())]);
    HigherAlgebra::two_crossed("beta-chain", g, h, l, Matrix::zeros(1, 2), beta, act_h, act_l, peiffer)
        .expect("consistent shapes")
        .with_pairings(identity_syms(1, Some(2), Some(2)))
        .with_flags(true, true)
}

fn trace_form(g: &LieAlgebra) -> Matrix {
    let basis = g.realization().expect("matrix algebra");
    let n = basis.len();
    Matrix::from_fn(n, n, |a, b| {
        let p = basis[a].mul(&basis[b]).expect("square");
        (0..p.rows()).map(|i| p.get(i, i).clone()).sum()
    })
}

type Builder = fn() -> HigherAlgebra;

const BUILTINS: &[(&str, Builder)] = &[
    ("abelian-1", || {
        let g = line();
        let h = LieAlgebra::abelian("u1.h", &["Y"]);
        let mut p = identity_syms(1, Some(1), None);
        p.gh = Some(Matrix::identity(1));
        HigherAlgebra::crossed("abelian-1", g, h, Matrix::identity(1), Bilinear::zero(1, 1, 1))
            .expect("consistent shapes")
            .with_pairings(p)
    }),
    ("adjoint-gl2", || {
        let g = gl2();
        let tr = trace_form(&g);
        adjoint_crossed("adjoint-gl2", g, Some(tr))
    }),
    ("adjoint-heis", || adjoint_crossed("adjoint-heis", heisenberg(), None)),
    ("skeletal-heis", || skeletal_coadjoint("skeletal-heis", heisenberg())),
    ("skeletal-sl2", || skeletal_coadjoint("skeletal-sl2", sl2())),
    ("abelianh-sl2", || {
        let g = sl2();
        let rep = g.realization().expect("matrix algebra").to_vec();
        abelian_h_chain("abelianh-sl2", g, &rep, omega2()).expect("consistent shapes")
    }),
    ("abelianh-n2", || {
        abelian_h_chain("abelianh-n2", line(), &[unit(2, 0, 1)], omega2()).expect("consistent shapes")
    }),
    ("trivial-chain", || {
        abelian_h_chain("trivial-chain", line(), &[Matrix::zeros(2, 2)], omega2()).expect("consistent shapes")
    }),
    ("beta-chain", beta_chain),
    ("identity-chain-heis", || identity_chain("identity-chain-heis", heisenberg())),
];

pub fn builtin_names() -> Vec<&'static str> {
    BUILTINS.iter().map(|(n, _)| *n).collect()
}

pub fn builtin(name: &str) -> Result<HigherAlgebra> {
    BUILTINS
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, b)| b())
        .ok_or_else(|| Error::Invalid(format!("unknown model {name:?}")))
}

/// A model that must fail validation, with the check expected to flag it.
pub struct Corrupted {
    pub model: HigherAlgebra,
    pub expected: &'static str,
}

fn sl2_unrealized() -> LieAlgebra {
    let g = sl2();
    LieAlgebra::new("sl2", g.labels().to_vec(), g.structure().clone()).expect("same shape")
}

pub fn corrupted_models() -> Vec<Corrupted> {
    let mut out = Vec::new();
    let mut push = |model: HigherAlgebra, expected: &'static str| out.push(Corrupted { model, expected });

    let g = sl2_unrealized();
    let f = g.structure().with_entry(1, 2, 0, Q::from_int(-1));
    push(HigherAlgebra::lie("corrupt-antisymmetry", g.with_structure(f)), "g:antisymmetry");

    let f = g
        .structure()
        .with_entry(0, 1, 1, Q::from_int(3))
        .with_entry(1, 0, 1, Q::from_int(-3));
    push(HigherAlgebra::lie("corrupt-jacobi", g.with_structure(f)), "g:jacobi");

    let mut d = builtin("adjoint-gl2").expect("builtin");
    d.name = "corrupt-zero-action".into();
    d.act_h = Some(Bilinear::zero(4, 4, 4));
    push(d, "peiffer");

    let mut d = builtin("adjoint-heis").expect("builtin");
    d.name = "corrupt-alpha".into();
    d.alpha = Some(Matrix::identity(3).scale(&Q::from_int(2)));
    push(d, "alpha-homomorphism");

    // only the central element acts: [P,Q] = Z but P, Q act trivially
    let mut d = builtin("skeletal-heis").expect("builtin");
    d.name = "corrupt-representation".into();
    d.act_h = Some(Bilinear::from_entries(3, 3, 3, [(2, 0, 0, Q::one())]));
    push(d, "action-representation");

    let mut d = beta_chain();
    d.name = "corrupt-complex".into();
    let mut alpha = Matrix::zeros(1, 2);
    alpha.set(0, 0, Q::one());
    d.alpha = Some(alpha);
    push(d, "axiom-1-complex");

    let mut d = beta_chain();
    d.name = "corrupt-axiom-6".into();
    d.peiffer = Some(Bilinear::from_entries(
        2,
        2,
        2,
        [(1, 1, 1, Q::one()), (1, 0, 1, Q::one())],
    ));
    push(d, "axiom-6");

    let mut d = beta_chain();
    d.name = "corrupt-peiffer-equivariance".into();
    d.peiffer = Some(Bilinear::from_entries(2, 2, 2, [(1, 1, 0, Q::one())]));
    push(d, "peiffer-equivariance");

    let mut d = builtin("abelianh-sl2").expect("builtin");
    d.name = "corrupt-xyy".into();
    d.peiffer = d.peiffer.map(|t| Bilinear::from_fn(2, 2, 3, |i, j, a| t.get(i, j, a) * &Q::from_int(2)));
    push(d, "XYY");

    let mut d = builtin("abelianh-sl2").expect("builtin");
    d.name = "corrupt-gl-rank".into();
    d.pairings.gl = Some(diag(&[1, 1, 0]));
    push(d, "gl-nondegenerate");

    let mut d = builtin("trivial-chain").expect("builtin");
    d.name = "corrupt-unbalanced".into();
    let l = LieAlgebra::abelian("trivial-chain.l2", &["z1", "z2"]);
    d.l = Some(Arc::new(l));
    d.beta = Some(Matrix::zeros(2, 2));
    d.act_l = Some(Bilinear::zero(1, 2, 2));
    d.peiffer = Some(Bilinear::zero(2, 2, 2));
    d.pairings.gl = Some(Matrix::from_ints(&[&[1, 0]]));
    d.pairings.sym_l = Some(Matrix::identity(2));
    push(d, "balanced");

    let mut d = builtin("adjoint-gl2").expect("builtin");
    d.name = "corrupt-invariance".into();
    d.pairings.gh = Some(Matrix::identity(4));
    push(d, "XXY");

    out
}
