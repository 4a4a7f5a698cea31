//! Generalized forms of type N = 0, 1, 2.
//!
//! A type-N form of degree `p` is stored as its coefficient tuple in the
//! ξ-augmented basis, coefficients written to the left of the ξ's:
//! `U` (N=0), `U + Vξ` (N=1), `U + Vξ¹ + V′ξ² + Wξ¹ξ²` (N=2).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraValuedForm, HigherAlgebra, PairingKind};
use crate::error::{Error, Result};
use crate::exterior::OrdinaryForm;
use crate::rational::Q;

/// Constants `k = dξ` (N=1) or `k¹ = dξ¹`, `k² = dξ²` (N=2).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivativeContext {
    pub n_type: u8,
    #[serde(default)]
    pub k: Q,
    #[serde(default)]
    pub k1: Q,
    #[serde(default)]
    pub k2: Q,
}

impl DerivativeContext {
    pub fn ordinary() -> Self {
        DerivativeContext {
            n_type: 0,
            k: Q::zero(),
            k1: Q::zero(),
            k2: Q::zero(),
        }
    }

    pub fn type1(k: Q) -> Self {
        DerivativeContext {
            n_type: 1,
            k,
            ..Self::ordinary()
        }
    }

    pub fn type2(k1: Q, k2: Q) -> Self {
        DerivativeContext {
            n_type: 2,
            k1,
            k2,
            ..Self::ordinary()
        }
    }

    /// `k = −1`, the choice under which the generalized curvature of a
    /// 2-connection splits into fake curvatures.
    pub fn two_gauge() -> Self {
        Self::type1(Q::from_int(-1))
    }

    /// `(k¹, k²) = (0, −1)`.
    pub fn three_gauge() -> Self {
        Self::type2(Q::zero(), Q::from_int(-1))
    }
}

/// What the slots of a generalized form take values in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Profile {
    Real,
    /// Every slot in one algebra.
    Single,
    /// `U` in 𝔤, `V` in 𝔥.
    Lie2,
    /// `U` in 𝔤, `V, V′` in 𝔥, `W` in 𝔩.
    Lie3,
}

/// Degree offset of each slot relative to the form degree.
pub fn slot_offsets(n_type: u8) -> &'static [i32] {
    match n_type {
        0 => &[0],
        1 => &[0, 1],
        _ => &[0, 1, 1, 2],
    }
}

fn slot_count(n_type: u8) -> usize {
    slot_offsets(n_type).len()
}

/// `(−1)^e`.
pub fn sign(e: i32) -> Q {
    Q::sign(e as i64)
}

/// Operations a slot value must support for the ξ-calculus to be written
/// once for algebra-valued and matrix-valued coefficients.
pub trait Slot: Clone {
    fn degree(&self) -> i32;
    fn plus(&self, other: &Self) -> Result<Self>;
    fn times(&self, c: &Q) -> Self;
    fn d(&self) -> Self;
}

impl Slot for AlgebraValuedForm {
    fn degree(&self) -> i32 {
        AlgebraValuedForm::degree(self)
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

/// `Σ cᵢ tᵢ` for a nonempty list.
pub fn combine<T: Slot>(terms: &[(Q, &T)]) -> Result<T> {
    let (c0, t0) = terms.first().ok_or_else(|| Error::Invalid("empty combination".into()))?;
    let mut acc = t0.times(c0);
    for (c, t) in &terms[1..] {
        acc = acc.plus(&t.times(c))?;
    }
    Ok(acc)
}

/// The exterior product on coefficient tuples, given the product of two slot
/// values; `q` is the degree of the right factor.
pub fn wedge_slots<T: Slot>(q: i32, a: &[T], b: &[T], mul: impl Fn(&T, &T) -> Result<T>) -> Result<Vec<T>> {
    if a.len() != b.len() {
        return Err(Error::TypeMismatch(a.len() as u8, b.len() as u8));
    }
    let s = sign(q);
    let one = Q::one();
    Ok(match a.len() {
        1 => vec![mul(&a[0], &b[0])?],
        2 => vec![
            mul(&a[0], &b[0])?,
            combine(&[(one.clone(), &mul(&a[0], &b[1])?), (s, &mul(&a[1], &b[0])?)])?,
        ],
        4 => vec![
            mul(&a[0], &b[0])?,
            combine(&[(one.clone(), &mul(&a[0], &b[1])?), (s.clone(), &mul(&a[1], &b[0])?)])?,
            combine(&[(one.clone(), &mul(&a[0], &b[2])?), (s.clone(), &mul(&a[2], &b[0])?)])?,
            combine(&[
                (one.clone(), &mul(&a[0], &b[3])?),
                (-s.clone(), &mul(&a[1], &b[2])?),
                (s, &mul(&a[2], &b[1])?),
                (one, &mul(&a[3], &b[0])?),
            ])?,
        ],
        n => return Err(Error::Invalid(format!("{n} slots"))),
    })
}

/// The type-N exterior derivative with constant `dξ`, where `down1` maps the
/// ξ-slots into the base slot (α, or the identity for scalar forms) and
/// `down2` maps the ξ¹ξ²-slot into the ξ-slots (β, or the identity).
pub fn deriv_slots<T: Slot>(
    p: i32,
    s: &[T],
    ctx: &DerivativeContext,
    down1: impl Fn(&T) -> Result<T>,
    down2: impl Fn(&T) -> Result<T>,
) -> Result<Vec<T>> {
    let odd = sign(p + 1);
    let one = Q::one();
    Ok(match s.len() {
        1 => vec![s[0].d()],
        2 => {
            let dv = s[1].d();
            let u = combine(&[(one, &s[0].d()), (&odd * &ctx.k, &down1(&s[1])?)])?;
            vec![u, dv]
        }
        4 => {
            let lowered = combine(&[(ctx.k1.clone(), &s[1]), (ctx.k2.clone(), &s[2])])?;
            let u = combine(&[(one.clone(), &s[0].d()), (odd.clone(), &down1(&lowered)?)])?;
            let bw = down2(&s[3])?;
            let v = combine(&[(one.clone(), &s[1].d()), (&odd * &ctx.k2, &bw)])?;
            let v2 = combine(&[(one, &s[2].d()), (-(&odd * &ctx.k1), &bw)])?;
            vec![u, v, v2, s[3].d()]
        }
        n => return Err(Error::Invalid(format!("{n} slots"))),
    })
}

/// A generalized form whose slots are algebra-valued (or real) forms.
#[derive(Clone, PartialEq, Eq)]
pub struct GeneralizedForm {
    n_type: u8,
    degree: i32,
    profile: Profile,
    slots: Vec<AlgebraValuedForm>,
}

fn infer_profile(n_type: u8, slots: &[AlgebraValuedForm]) -> Result<Profile> {
    if slots.iter().all(AlgebraValuedForm::is_real) {
        return Ok(Profile::Real);
    }
    let first = slots[0].algebra();
    if slots.iter().all(|s| crate::algebra::same_algebra(s.algebra(), first)) {
        return Ok(Profile::Single);
    }
    match n_type {
        1 => Ok(Profile::Lie2),
        2 if crate::algebra::same_algebra(slots[1].algebra(), slots[2].algebra()) => Ok(Profile::Lie3),
        _ => Err(Error::ProfileMismatch("slot algebras fit no profile".into())),
    }
}

impl GeneralizedForm {
    /// Builds a type-N form of degree `degree` from its 1, 2 or 4 slots.
    pub fn new(n_type: u8, degree: i32, slots: Vec<AlgebraValuedForm>) -> Result<Self> {
        if n_type > 2 {
            return Err(Error::Invalid(format!("type N = {n_type} is not supported")));
        }
        if slots.len() != slot_count(n_type) {
            return Err(Error::Invalid(format!(
                "type {n_type} needs {} slots, got {}",
                slot_count(n_type),
                slots.len()
            )));
        }
        let dim = slots[0].dim();
        for (s, off) in slots.iter().zip(slot_offsets(n_type)) {
            if s.dim() != dim {
                return Err(Error::DimensionMismatch(dim, s.dim()));
            }
            if s.degree() != degree + off {
                return Err(Error::DegreeMismatch(degree + off, s.degree()));
            }
        }
        let profile = infer_profile(n_type, &slots)?;
        Ok(GeneralizedForm {
            n_type,
            degree,
            profile,
            slots,
        })
    }

    /// The degree is read off the first slot.
    pub fn from_slots(slots: Vec<AlgebraValuedForm>) -> Result<Self> {
        let n_type = match slots.len() {
            1 => 0,
            2 => 1,
            4 => 2,
            n => return Err(Error::Invalid(format!("{n} slots"))),
        };
        let degree = slots[0].degree();
        GeneralizedForm::new(n_type, degree, slots)
    }

    pub fn real(slots: Vec<OrdinaryForm>) -> Result<Self> {
        Self::from_slots(slots.into_iter().map(AlgebraValuedForm::real).collect())
    }

    /// `U + Vξ`.
    pub fn lie2(u: AlgebraValuedForm, v: AlgebraValuedForm) -> Result<Self> {
        Self::from_slots(vec![u, v])
    }

    /// `U + Vξ¹ + V′ξ² + Wξ¹ξ²`.
    pub fn lie3(
        u: AlgebraValuedForm,
        v: AlgebraValuedForm,
        v2: AlgebraValuedForm,
        w: AlgebraValuedForm,
    ) -> Result<Self> {
        Self::from_slots(vec![u, v, v2, w])
    }

    /// The zero form of the given type and degree with the slot algebras of
    /// `alg` for the requested profile.
    pub fn zero(alg: Option<&HigherAlgebra>, profile: Profile, n_type: u8, dim: usize, degree: i32) -> Result<Self> {
        use crate::algebra::LieAlgebra;
        let algs = match (profile, alg) {
            (Profile::Real, _) => vec![LieAlgebra::scalar(); slot_count(n_type)],
            (Profile::Single, Some(a)) => vec![a.g.clone(); slot_count(n_type)],
            (Profile::Lie2, Some(a)) if n_type == 1 => vec![a.g.clone(), a.h()?.clone()],
            (Profile::Lie3, Some(a)) if n_type == 2 => {
                vec![a.g.clone(), a.h()?.clone(), a.h()?.clone(), a.l()?.clone()]
            }
            _ => return Err(Error::ProfileMismatch(format!("{profile:?} for type {n_type}"))),
        };
        let slots = algs
            .into_iter()
            .zip(slot_offsets(n_type))
            .map(|(g, off)| AlgebraValuedForm::zero(g, dim, degree + off))
            .collect();
        GeneralizedForm::new(n_type, degree, slots)
    }

    /// A zero form with the same slot algebras at another degree.
    pub fn zero_like(&self, degree: i32) -> Self {
        let slots = self
            .slots
            .iter()
            .zip(slot_offsets(self.n_type))
            .map(|(s, off)| AlgebraValuedForm::zero(s.algebra().clone(), s.dim(), degree + off))
            .collect();
        GeneralizedForm {
            n_type: self.n_type,
            degree,
            profile: self.profile,
            slots,
        }
    }

    pub fn n_type(&self) -> u8 {
        self.n_type
    }

    pub fn degree(&self) -> i32 {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.slots[0].dim()
    }

    pub fn profile(&self) -> Profile {
        self.profile
    }

    pub fn slots(&self) -> &[AlgebraValuedForm] {
        &self.slots
    }

    pub fn slot(&self, i: usize) -> &AlgebraValuedForm {
        &self.slots[i]
    }

    pub fn into_slots(self) -> Vec<AlgebraValuedForm> {
        self.slots
    }

    pub fn is_zero(&self) -> bool {
        self.slots.iter().all(AlgebraValuedForm::is_zero)
    }

    pub fn term_count(&self) -> usize {
        self.slots.iter().map(AlgebraValuedForm::term_count).sum()
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.n_type != other.n_type {
            return Err(Error::TypeMismatch(self.n_type, other.n_type));
        }
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch(self.dim(), other.dim()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        let slots = self
            .slots
            .iter()
            .zip(&other.slots)
            .map(|(a, b)| a.add(b))
            .collect::<Result<Vec<_>>>()?;
        GeneralizedForm::new(self.n_type, self.degree, slots)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Q) -> Self {
        let mut r = self.clone();
        for s in &mut r.slots {
            *s = s.scale(c);
        }
        r
    }

    pub fn neg(&self) -> Self {
        self.scale(&Q::from_int(-1))
    }

    /// Applies `f` to every slot, keeping the type and degree.
    pub fn map_slots(&self, f: impl Fn(usize, &AlgebraValuedForm) -> Result<AlgebraValuedForm>) -> Result<Self> {
        let slots = self
            .slots
            .iter()
            .enumerate()
            .map(|(i, s)| f(i, s))
            .collect::<Result<Vec<_>>>()?;
        GeneralizedForm::new(self.n_type, self.degree, slots)
    }

    /// `w = w₀ + w₁ ξᴺ` with `w₀, w₁` of type N−1.
    pub fn split(&self) -> Result<(GeneralizedForm, GeneralizedForm)> {
        let s = &self.slots;
        match self.n_type {
            0 => Err(Error::Invalid("a type-0 form cannot be split".into())),
            1 => Ok((
                GeneralizedForm::new(0, self.degree, vec![s[0].clone()])?,
                GeneralizedForm::new(0, self.degree + 1, vec![s[1].clone()])?,
            )),
            _ => Ok((
                GeneralizedForm::new(1, self.degree, vec![s[0].clone(), s[1].clone()])?,
                GeneralizedForm::new(1, self.degree + 1, vec![s[2].clone(), s[3].clone()])?,
            )),
        }
    }

    /// Inverse of [`split`](Self::split).
    pub fn join(w0: &GeneralizedForm, w1: &GeneralizedForm) -> Result<GeneralizedForm> {
        w0.check_same_shape(w1)?;
        if w1.degree != w0.degree + 1 {
            return Err(Error::DegreeMismatch(w0.degree + 1, w1.degree));
        }
        let slots = w0.slots.iter().chain(&w1.slots).cloned().collect();
        GeneralizedForm::new(w0.n_type + 1, w0.degree, slots)
    }

    /// The first nonzero slot and term, for reports.
    pub fn leading_term(&self) -> Option<String> {
        const NAMES: [&str; 4] = ["1", "xi1", "xi2", "xi1xi2"];
        self.slots.iter().enumerate().find_map(|(i, s)| {
            let name = if self.n_type == 1 && i == 1 { "xi" } else { NAMES[i] };
            s.leading_term().map(|t| format!("[{name}] {t}"))
        })
    }
}

impl fmt::Debug for GeneralizedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "N={} p={} {:?}", self.n_type, self.degree, self.slots)
    }
}

/// Product of slot values where at least one side is real.
fn scalar_extended_wedge(a: &AlgebraValuedForm, b: &AlgebraValuedForm) -> Result<AlgebraValuedForm> {
    if a.is_real() {
        b.wedge_real_left(a.as_real()?)
    } else if b.is_real() {
        a.wedge_real_right(b.as_real()?)
    } else {
        Err(Error::ProfileMismatch("wedge of two algebra-valued slots".into()))
    }
}

/// `w₁ ⊼ w₂` for real-valued forms, or a real form with a single-algebra
/// form.
pub fn gwedge(w1: &GeneralizedForm, w2: &GeneralizedForm) -> Result<GeneralizedForm> {
    w1.check_same_shape(w2)?;
    let ok = |p: Profile| matches!(p, Profile::Real | Profile::Single);
    if !ok(w1.profile) || !ok(w2.profile) {
        return Err(Error::ProfileMismatch("wedge needs real or single-algebra forms".into()));
    }
    let slots = wedge_slots(w2.degree, &w1.slots, &w2.slots, scalar_extended_wedge)?;
    GeneralizedForm::new(w1.n_type, w1.degree + w2.degree, slots)
}

/// The type-N exterior derivative `d̲`. Real and single-algebra forms need
/// no algebra data; higher-algebra forms route the lowered slots through α
/// and β.
pub fn gderiv(w: &GeneralizedForm, ctx: &DerivativeContext, alg: Option<&HigherAlgebra>) -> Result<GeneralizedForm> {
    if ctx.n_type != w.n_type {
        return Err(Error::TypeMismatch(ctx.n_type, w.n_type));
    }
    let slots = match w.profile {
        Profile::Real | Profile::Single => {
            deriv_slots(w.degree, &w.slots, ctx, |v| Ok(v.clone()), |v| Ok(v.clone()))?
        }
        Profile::Lie2 | Profile::Lie3 => {
            let alg = alg.ok_or_else(|| Error::MissingData("higher algebra for d̲".into()))?;
            check_profile(alg, w)?;
            deriv_slots(w.degree, &w.slots, ctx, |v| alg.apply_alpha(v), |v| alg.apply_beta(v))?
        }
    };
    GeneralizedForm::new(w.n_type, w.degree + 1, slots)
}

/// Checks the slot algebras against 𝔤, 𝔥, 𝔩 of `alg`.
pub fn check_profile(alg: &HigherAlgebra, w: &GeneralizedForm) -> Result<()> {
    let s = &w.slots;
    match w.n_type {
        0 => s[0].expect_algebra(&alg.g),
        1 => {
            s[0].expect_algebra(&alg.g)?;
            s[1].expect_algebra(alg.h()?)
        }
        _ => {
            s[0].expect_algebra(&alg.g)?;
            s[1].expect_algebra(alg.h()?)?;
            s[2].expect_algebra(alg.h()?)?;
            s[3].expect_algebra(alg.l()?)
        }
    }
}

/// The graded bracket of higher-algebra-valued forms.
pub fn gbracket(alg: &HigherAlgebra, w1: &GeneralizedForm, w2: &GeneralizedForm) -> Result<GeneralizedForm> {
    w1.check_same_shape(w2)?;
    check_profile(alg, w1)?;
    check_profile(alg, w2)?;
    let (p, q) = (w1.degree, w2.degree);
    let (a, b) = (&w1.slots, &w2.slots);
    let one = Q::one();
    let s_pq = sign(p * q);
    let u = crate::algebra::bracket(&a[0], &b[0])?;
    // U₁▷X₂ − (−1)^{pq} U₂▷X₁
    let cross = |i: usize| -> Result<AlgebraValuedForm> {
        combine(&[(one.clone(), &alg.act(&a[0], &b[i])?), (-s_pq.clone(), &alg.act(&b[0], &a[i])?)])
    };
    let slots = match w1.n_type {
        0 => vec![u],
        1 => vec![u, cross(1)?],
        _ => {
            let w = combine(&[
                (one.clone(), &cross(3)?),
                (sign(q + 1), &alg.peiffer(&a[1], &b[2])?),
                (-sign(p * q + p + 1), &alg.peiffer(&b[1], &a[2])?),
            ])?;
            vec![u, cross(1)?, cross(2)?, w]
        }
    };
    GeneralizedForm::new(w1.n_type, p + q, slots)
}

/// The graded symmetric pairing, collapsed to its single ordinary-form
/// component of degree `p + q + N`. For N = 2 the constants come from `ctx`.
pub fn gpairing(
    alg: &HigherAlgebra,
    ctx: &DerivativeContext,
    w1: &GeneralizedForm,
    w2: &GeneralizedForm,
) -> Result<OrdinaryForm> {
    w1.check_same_shape(w2)?;
    check_profile(alg, w1)?;
    check_profile(alg, w2)?;
    let (a, b) = (&w1.slots, &w2.slots);
    let s_pq = sign(w1.degree * w2.degree);
    let pair = |x: &AlgebraValuedForm, y: &AlgebraValuedForm, k: PairingKind| alg.pair_forms(x, y, k);
    match w1.n_type {
        1 => {
            let mut r = pair(&a[0], &b[1], PairingKind::Gh)?;
            r.add_scaled(&pair(&b[0], &a[1], PairingKind::Gh)?, &s_pq)?;
            Ok(r)
        }
        2 => {
            if ctx.n_type != 2 {
                return Err(Error::TypeMismatch(ctx.n_type, 2));
            }
            let mut r = pair(&a[0], &b[3], PairingKind::Gl)?;
            r.add_scaled(&pair(&b[0], &a[3], PairingKind::Gl)?, &s_pq)?;
            // ⟨V₂′, V₁⟩ and ⟨V₁′, V₂⟩: ξ²-slot first in the 𝔥-form.
            r.add_scaled(&pair(&b[2], &a[1], PairingKind::HAnti)?, &-ctx.k1.clone())?;
            r.add_scaled(&pair(&a[2], &b[1], PairingKind::HAnti)?, &-(&s_pq * &ctx.k2))?;
            Ok(r)
        }
        n => Err(Error::TypeMismatch(n, 1)),
    }
}

/// `((w₁, w₂))`, the sum of slotwise `∫⟨·, *·⟩` with the symmetric forms of
/// the slot algebras (plain wedge for real slots).
pub fn ginner(alg: Option<&HigherAlgebra>, w1: &GeneralizedForm, w2: &GeneralizedForm) -> Result<Q> {
    w1.check_same_shape(w2)?;
    if w1.degree != w2.degree {
        return Err(Error::DegreeMismatch(w1.degree, w2.degree));
    }
    let mut total = Q::zero();
    for (a, b) in w1.slots.iter().zip(&w2.slots) {
        total += &slot_inner(alg, a, b)?;
    }
    Ok(total)
}

/// `∫⟨a, *b⟩` for one slot.
pub fn slot_inner(alg: Option<&HigherAlgebra>, a: &AlgebraValuedForm, b: &AlgebraValuedForm) -> Result<Q> {
    if a.is_real() && b.is_real() {
        return crate::exterior::inner(a.as_real()?, b.as_real()?);
    }
    alg.ok_or_else(|| Error::MissingData("symmetric forms for the inner product".into()))?
        .inner(a, b)
}
