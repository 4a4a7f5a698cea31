//! Named identity checks, registered as trait objects. Each check samples
//! its own inputs from the environment seed, so results do not depend on
//! which other checks run.

use serde::{Deserialize, Serialize};

use crate::algebra::{bracket, AlgebraValuedForm, HigherAlgebra, PairingKind};
use crate::error::{Error, Result};
use crate::exterior::OrdinaryForm;
use crate::gauge::{
    action_kinds, bianchi2, bianchi3, chern5, chern5_generalized, chern6, chern6_generalized, cs4, cs4_components,
    cs4_gauge_variation, cs5, cs5_components, curvature2, curvature2_form, curvature3, curvature3_form, field_strength,
    gauge_transform2, gauge_transform2_by_ad, gauge_transform2_components, gauge_transform3,
    gauge_transform3_components, generalized_bianchi, generalized_curvature, transformed_curvature2, Fields,
    ThreeConnection, TwoConnection,
};
use crate::genform::{gbracket, gpairing, DerivativeContext, GeneralizedForm, Profile};
use crate::group::{GroupElement, GroupModel};
use crate::random::{Bounds, Sampler};
use crate::rational::Q;
use crate::validate::{validate_all, ValidationReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Severity {
    MustPass,
    Reported,
    Informational,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    Reported,
    Skipped,
}

/// How often a residual was nonzero over the sampled instances, with the
/// leading term of the first nonzero one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Residual {
    pub label: String,
    pub instances: usize,
    pub nonzero: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub leading: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedValue {
    pub label: String,
    pub value: Q,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub name: String,
    pub severity: Severity,
    pub status: Status,
    #[serde(default)]
    pub residuals: Vec<Residual>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub values: Vec<NamedValue>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckOutcome {
    fn skipped(name: &str, severity: Severity, note: String) -> Self {
        CheckOutcome {
            name: name.to_string(),
            severity,
            status: Status::Skipped,
            residuals: Vec::new(),
            values: Vec::new(),
            note: Some(note),
        }
    }

    pub fn all_zero(&self) -> bool {
        self.residuals.iter().all(|r| r.nonzero == 0)
    }
}

/// Anything that can be reported as a residual.
pub trait ResidualValue {
    fn is_zero_residual(&self) -> bool;
    fn leading(&self) -> Option<String>;
}

impl ResidualValue for AlgebraValuedForm {
    fn is_zero_residual(&self) -> bool {
        self.is_zero()
    }
    fn leading(&self) -> Option<String> {
        self.leading_term()
    }
}

impl ResidualValue for GeneralizedForm {
    fn is_zero_residual(&self) -> bool {
        self.is_zero()
    }
    fn leading(&self) -> Option<String> {
        self.leading_term()
    }
}

impl ResidualValue for OrdinaryForm {
    fn is_zero_residual(&self) -> bool {
        self.is_zero()
    }
    fn leading(&self) -> Option<String> {
        self.leading_term().map(|(idx, m, q)| format!("{q} x^{:?} dx{idx:?}", m.exps(self.dim())))
    }
}

impl ResidualValue for Q {
    fn is_zero_residual(&self) -> bool {
        self.is_zero()
    }
    fn leading(&self) -> Option<String> {
        Some(self.to_string())
    }
}

/// Collects residuals and values in first-seen order.
#[derive(Default)]
pub struct Tally {
    residuals: Vec<Residual>,
    values: Vec<NamedValue>,
    notes: Vec<String>,
}

impl Tally {
    pub fn record(&mut self, label: &str, r: &impl ResidualValue) {
        self.flag(label, r.is_zero_residual(), || r.leading());
    }

    /// Records `lhs − rhs`.
    pub fn record_diff<T: ResidualValue + PartialEq>(&mut self, label: &str, lhs: &T, rhs: &T, diff: impl FnOnce() -> Result<T>) -> Result<()> {
        if lhs == rhs {
            self.flag(label, true, || None);
        } else {
            let d = diff()?;
            self.flag(label, false, || d.leading());
        }
        Ok(())
    }

    pub fn flag(&mut self, label: &str, zero: bool, leading: impl FnOnce() -> Option<String>) {
        let idx = match self.residuals.iter().position(|r| r.label == label) {
            Some(i) => i,
            None => {
                self.residuals.push(Residual {
                    label: label.to_string(),
                    instances: 0,
                    nonzero: 0,
                    leading: None,
                });
                self.residuals.len() - 1
            }
        };
        let r = &mut self.residuals[idx];
        r.instances += 1;
        if !zero {
            r.nonzero += 1;
            if r.leading.is_none() {
                r.leading = leading().or_else(|| Some("nonzero".into()));
            }
        }
    }

    pub fn value(&mut self, label: &str, value: Q) {
        self.values.push(NamedValue {
            label: label.to_string(),
            value,
        });
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }
}

/// One sampled input: fields matching the algebra's level and, when the
/// model has a group, an element of the matching type (simplified for
/// type 2).
#[derive(Clone, Debug)]
pub struct Instance {
    pub fields: Fields,
    pub element: Option<GroupElement>,
}

/// Everything a check may look at.
pub struct CheckEnv {
    pub alg: HigherAlgebra,
    pub group: Option<GroupModel>,
    pub ctx: DerivativeContext,
    pub bounds: Bounds,
    pub seed: u64,
    pub samples: usize,
    /// Fixed fields replace random sampling when given.
    pub fields: Option<Fields>,
    pub element: Option<GroupElement>,
    pub validation: ValidationReport,
}

/// The context the component formulas are derived under for this level.
pub fn default_context(level: u8) -> DerivativeContext {
    match level {
        1 => DerivativeContext::ordinary(),
        2 => DerivativeContext::two_gauge(),
        _ => DerivativeContext::three_gauge(),
    }
}

fn fnv1a(s: &str) -> u64 {
    s.bytes()
        .fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

impl CheckEnv {
    /// Builds the environment; the group is present when every algebra
    /// carries a matrix realization.
    pub fn new(alg: HigherAlgebra, ctx: DerivativeContext, bounds: Bounds, seed: u64, samples: usize) -> Self {
        let validation = validate_all(&alg);
        let group = if validation.is_valid() {
            GroupModel::new(alg.clone()).ok()
        } else {
            None
        };
        CheckEnv {
            alg,
            group,
            ctx,
            bounds,
            seed,
            samples,
            fields: None,
            element: None,
            validation,
        }
    }

    pub fn level(&self) -> u8 {
        self.alg.level()
    }

    pub fn dim(&self) -> usize {
        self.bounds.dim
    }

    pub fn is_default_context(&self) -> bool {
        self.ctx == default_context(self.level())
    }

    /// A sampler private to `salt`.
    pub fn sampler(&self, salt: &str) -> Sampler {
        Sampler::new(self.seed ^ fnv1a(salt), self.bounds.clone())
    }

    pub fn group(&self) -> Result<&GroupModel> {
        self.group
            .as_ref()
            .ok_or_else(|| Error::MissingData(format!("{} has no matrix realization", self.alg.name)))
    }

    fn random_fields(&self, s: &mut Sampler) -> Result<Fields> {
        Ok(match self.level() {
            1 => Fields::One(s.algebra_form(&self.alg.g, 1)),
            2 => Fields::Two(TwoConnection::random(&self.alg, s)?),
            _ => Fields::Three(ThreeConnection::random(&self.alg, s)?),
        })
    }

    fn random_element(&self, s: &mut Sampler) -> Result<Option<GroupElement>> {
        match (&self.group, self.level()) {
            (Some(g), 2) => Ok(Some(g.random_element(s, 1, false)?)),
            (Some(g), 3) => Ok(Some(g.random_element(s, 2, true)?)),
            _ => Ok(None),
        }
    }

    /// The inputs for the check named `salt`.
    pub fn instances(&self, salt: &str) -> Result<Vec<Instance>> {
        let mut s = self.sampler(salt);
        if let Some(f) = &self.fields {
            let element = match &self.element {
                Some(e) => Some(e.clone()),
                None => self.random_element(&mut s)?,
            };
            return Ok(vec![Instance {
                fields: f.clone(),
                element,
            }]);
        }
        (0..self.samples)
            .map(|_| {
                let fields = self.random_fields(&mut s)?;
                let element = match &self.element {
                    Some(e) => Some(e.clone()),
                    None => self.random_element(&mut s)?,
                };
                Ok(Instance { fields, element })
            })
            .collect()
    }
}

pub trait Check: Send + Sync {
    fn name(&self) -> &'static str;
    fn description(&self) -> &'static str;
    fn severity(&self, _env: &CheckEnv) -> Severity {
        Severity::MustPass
    }
    /// `Err(reason)` when the check does not apply to this environment.
    fn applies(&self, _env: &CheckEnv) -> std::result::Result<(), String> {
        Ok(())
    }
    fn run(&self, env: &CheckEnv, t: &mut Tally) -> Result<()>;
}

fn need_level(env: &CheckEnv, levels: &[u8]) -> std::result::Result<(), String> {
    if levels.contains(&env.level()) {
        Ok(())
    } else {
        Err(format!("not defined for a level-{} algebra", env.level()))
    }
}

fn need_group(env: &CheckEnv) -> std::result::Result<(), String> {
    match env.group {
        Some(_) => Ok(()),
        None => Err(format!("{} has no matrix realization", env.alg.name)),
    }
}

fn need_pairings(env: &CheckEnv, kinds: &[PairingKind]) -> std::result::Result<(), String> {
    match kinds.iter().find(|k| env.alg.pairings.get(**k).is_none()) {
        Some(k) => Err(format!("{} has no {k:?} pairing", env.alg.name)),
        None => Ok(()),
    }
}

fn two(f: &Fields) -> Result<&TwoConnection> {
    match f {
        Fields::Two(c) => Ok(c),
        _ => Err(Error::Invalid("expected a 2-connection".into())),
    }
}

fn three(f: &Fields) -> Result<&ThreeConnection> {
    match f {
        Fields::Three(c) => Ok(c),
        _ => Err(Error::Invalid("expected a 3-connection".into())),
    }
}

fn element(i: &Instance) -> Result<&GroupElement> {
    i.element
        .as_ref()
        .ok_or_else(|| Error::MissingData("group element".into()))
}

pub struct ValidateAlgebra;

impl Check for ValidateAlgebra {
    fn name(&self) -> &'static str {
        "validate_algebra"
    }
    fn description(&self) -> &'static str {
        "Lie, crossed-module, 2-crossed-module and pairing axioms on basis tuples"
    }
    fn run(&self, env: &CheckEnv, t: &mut Tally) -> Result<()> {
        let r = &env.validation;
        for c in &r.checked {
            let v = r.violations.iter().find(|v| &v.check == c);
            t.flag(c, v.is_none(), || v.map(|v| format!("witness {:?} ({} tuples)", v.witness, v.count)));
        }
        for v in r.violations.iter().filter(|v| !r.checked.contains(&v.check)) {
            t.flag(&v.check, false, || Some(format!("witness {:?} ({} tuples)", v.witness, v.count)));
        }
        Ok(())
    }
}

pub struct ValidateGroup;

impl Check for ValidateGroup {
    fn name(&self) -> &'static str {
        "validate_group"
    }
    fn description(&self) -> &'static str {
        "group-level identities on random unipotent group functions"
    }
    fn applies(&self, env: &CheckEnv) -> std::result::Result<(), String> {
        need_group(env)
    }
    fn run(&self, env: &CheckEnv, t: &mut Tally) -> Result<()> {
        let group = env.group()?;
        let mut s = env.sampler(self.name());
        let samples = (0..env.samples.max(2))
            .map(|_| group.random_function(&mut s))
            .collect::<Result<Vec<_>>>()?;
        let r = group.validate_identities(&samples)?;
        for c in &r.checked {
            let v = r.violations.iter().find(|v| &v.check == c);
            t.flag(c, v.is_none(), || v.map(|v| format!("sample {:?} ({} failures)", v.witness, v.count)));
        }
        Ok(())
    }
}

pub struct Bianchi;

impl Check for Bianchi {
    fn name(&self) -> &'static str {
        "bianchi"
    }
    fn description(&self) -> &'static str {
        "component and generalized Bianchi identities"
    }
    fn run(&self, env: &CheckEnv, t: &mut Tally) -> Result<()> {
        let alg = &env.alg;
        for inst in env.instances(self.name())? {
            match &inst.fields {
                Fields::One(a) => {
                    let f = field_strength(a)?;
                    t.record("dF+[A,F]", &f.ext_d().add(&bracket(a, &f)?)?);
                }
                Fields::Two(c) => {
                    let r = bianchi2(alg, c)?;
                    t.record("omega1", &r[0]);
                    t.record("omega2", &r[1]);
                    t.record("generalized", &generalized_bianchi(alg, &c.as_generalized()?, &env.ctx)?);
                }
                Fields::Three(c) => {
                    let r = bianchi3(alg, c)?;
                    t.record("omega1", &r[0]);
                    t.record("omega2", &r[1]);
                    t.record("omega3", &r[2]);
                    t.record("generalized", &generalized_bianchi(alg, &c.as_generalized()?, &env.ctx)?);
                }
            }
        }
        Ok(())
    }
}

pub struct CurvatureSlots;

impl Check for CurvatureSlots {
    fn name(&self) -> &'static str {
        "curvature_slots"
    }
    fn description(&self) -> &'static str {
        "generalized curvature agrees slotwise with the component curvatures"
    }
    fn severity(&self, env: &CheckEnv) -> Severity {
        if env.is_default_context() {
            Severity::MustPass
        } else {
            Severity::Reported
        }
    }
    fn applies(&self, env: &CheckEnv) -> std::result::Result<(), String> {
        need_level(env, &[2, 3])
    }
    fn run(&self, env: &CheckEnv, t: &mut Tally) -> Result<()> {
        let alg = &env.alg;
        if !env.is_default_context() {
            t.note("component formulas are derived for the default constants only");
        }
        for inst in env.instances(self.name())? {
            let (w, expected) = match &inst.fields {
                Fields::Two(c) => (c.as_generalized()?, curvature2_form(&curvature2(alg, c)?)?),
                Fields::Three(c) => (c.as_generalized()?, curvature3_form(alg, c, &curvature3(alg, c)?)?),
                Fields::One(_) => continue,
            };
            let got = generalized_curvature(alg, &w, &env.ctx)?;
            t.record_diff("slots", &got, &expected, || got.sub(&expected))?;
        }
        Ok(())
    }
}

/// Flatness of the Maurer–Cartan form, for one type or by level.
pub struct MaurerCartan {
    name: &'static str,
    level: Option<u8>,
}

impl Check for MaurerCartan {
    fn name(&self) -> &'static str {
        self.name
    }
    fn description(&self) -> &'static str {
        "Maurer–Cartan form is flat: d̲ℓ + ½[ℓ, ℓ] = 0"
    }
    fn severity(&self, env: &CheckEnv) -> Severity {
        if env.level() == 3 && !(env.ctx.k1 == env.ctx.k2 && env.alg.abelian_h) {
            Severity::Reported
        } else {
            Severity::MustPass
        }
    }
    fn applies(&self, env: &CheckEnv) -> std::result::Result<(), String> {
        match self.level {
            Some(l) => need_level(env, &[l])?,
            None => need_level(env, &[2, 3])?,
        }
        need_group(env)
    }
    fn run(&self, env: &CheckEnv, t: &mut Tally) -> Result<()> {
        let group = env.group()?;
        if env.level() == 3 && env.ctx.k1 != env.ctx.k2 {
            t.note("flatness is a theorem for k1 = k2");
        } else if env.level() == 3 && !env.alg.abelian_h {
            t.note("flatness is a theorem over abelian h");
        }
        for inst in env.instances(self.name())? {
            t.record("mc", &group.mc_residual(element(&inst)?, &env.ctx)?);
        }
        Ok(())
    }
}

/// `𝐀𝐝_𝒢` commutes with the bracket and preserves the pairing.
pub struct Adjoint;

impl Check for Adjoint {
    fn name(&self) -> &'static str {
        "adjoint"
    }
    fn description(&self) -> &'static str {
        "Ad preserves generalized brackets and the generalized pairing"
    }
    fn applies(&self, env: &CheckEnv) -> std::result::Result<(), String> {
        need_level(env, &[2])?;
        need_group(env)
    }
    fn run(&self, env: &CheckEnv, t: &mut Tally) -> Result<()> {
        let group = env.group()?;
        let alg = &env.alg;
        let ctx = if env.ctx.n_type == 1 { env.ctx.clone() } else { default_context(2) };
        let mut s = env.sampler(self.name());
        let has_gh = alg.pairings.gh.is_some();
        for inst in env.instances(self.name())? {
            let e = element(&inst)?;
            let w1 = s.generalized(Some(alg), Profile::Lie2, 1, 1)?;
            let w2 = s.generalized(Some(alg), Profile::Lie2, 1, 0)?;
            let ad = |w: &GeneralizedForm| group.adjoint(e, w);
            let lhs = ad(&gbracket(alg, &w1, &w2)?)?;
            let rhs = gbracket(alg, &ad(&w1)?, &ad(&w2)?)?;
            t.record_diff("bracket", &lhs, &rhs, || lhs.sub(&rhs))?;
            if has_gh {
                let before = gpairing(alg, &ctx, &w1, &w2)?;
                let after = gpairing(alg, &ctx, &ad(&w1)?, &ad(&w2)?)?;
                t.record_diff("pairing", &after, &before, || after.sub(&before))?;
            }
        }
        Ok(())
    }
}

pub struct GaugeCovariance;

impl Check for GaugeCovariance {
    fn name(&self) -> &'static str {
        "gauge_covariance"
    }
    fn description(&self) -> &'static str {
        "gauge transformation paths agree and the curvature transforms by Ad"
    }
    fn applies(&self, env: &CheckEnv) -> std::result::Result<(), String> {
        need_level(env, &[2, 3])?;
        need_group(env)
    }
    fn run(&self, env: &CheckEnv, t: &mut Tally) -> Result<()> {
        let group = env.group()?;
        let alg = &env.alg;
        for inst in env.instances(self.name())? {
            let e = element(&inst)?;
            match &inst.fields {
                Fields::Two(c) => {
                    let ctx = if env.ctx.n_type == 1 { env.ctx.clone() } else { default_context(2) };
                    let tr = gauge_transform2(group, c, e, &ctx)?;
                    let by_components = gauge_transform2_components(group, c, e, &ctx.k)?;
                    let by_ad = gauge_transform2_by_ad(group, c, &group.inverse(e)?, &ctx.k)?;
                    t.flag("transform-components", tr == by_components, || Some("paths differ".into()));
                    t.flag("transform-ad-form", tr == by_ad, || Some("paths differ".into()));
                    let f = generalized_curvature(alg, &c.as_generalized()?, &ctx)?;
                    let f_t = generalized_curvature(alg, &tr.as_generalized()?, &ctx)?;
                    let expected = group.adjoint(&group.inverse(e)?, &f)?;
                    t.record_diff("curvature-adjoint", &f_t, &expected, || f_t.sub(&expected))?;
                    let fixed = gauge_transform2(group, c, e, &default_context(2))?;
                    let after = curvature2(alg, &fixed)?;
                    let (o1, o2) = transformed_curvature2(group, &curvature2(alg, c)?, e)?;
                    t.record_diff("omega1-display", &after.omega1, &o1, || after.omega1.sub(&o1))?;
                    t.record_diff("omega2-display", &after.omega2, &o2, || after.omega2.sub(&o2))?;
                }
                Fields::Three(c) => {
                    let (tr, _) = gauge_transform3(group, c, e)?;
                    let display = gauge_transform3_components(group, c, e)?;
                    t.record_diff("A-display", &tr.a, &display.a, || tr.a.sub(&display.a))?;
                    t.record_diff("B-display", &tr.b, &display.b, || tr.b.sub(&display.b))?;
                    t.record_diff("C-display", &tr.c, &display.c, || tr.c.sub(&display.c))?;
                }
                Fields::One(_) => {}
            }
        }
        Ok(())
    }
}

pub struct ChernWeil2;

impl Check for ChernWeil2 {
    fn name(&self) -> &'static str {
        "chern_weil_2"
    }
    fn description(&self) -> &'static str {
        "d(CS4) = P5, two-path CS4 and P5, gauge invariance of P5"
    }
    fn applies(&self, env: &CheckEnv) -> std::result::Result<(), String> {
        need_level(env, &[2])?;
        need_pairings(env, &[PairingKind::Gh])
    }
    fn run(&self, env: &CheckEnv, t: &mut Tally) -> Result<()> {
        let alg = &env.alg;
        for inst in env.instances(self.name())? {
            let c = two(&inst.fields)?;
            let cs = cs4(alg, c)?;
            let by_components = cs4_components(alg, c)?;
            t.record_diff("cs4-two-path", &cs, &by_components, || cs.sub(&by_components))?;
            let p5 = chern5(alg, &curvature2(alg, c)?)?;
            let p5_gen = chern5_generalized(alg, c)?;
            t.record_diff("p5-two-path", &p5, &p5_gen, || p5.sub(&p5_gen))?;
            let dcs = cs.ext_d();
            t.record_diff("dcs4-p5", &dcs, &p5, || dcs.sub(&p5))?;
            if let (Some(group), Some(e)) = (&env.group, &inst.element) {
                let tr = gauge_transform2(group, c, e, &default_context(2))?;
                let after = chern5(alg, &curvature2(alg, &tr)?)?;
                t.record_diff("p5-gauge-invariant", &after, &p5, || after.sub(&p5))?;
            }
        }
        Ok(())
    }
}

pub struct ChernWeil3;

impl Check for ChernWeil3 {
    fn name(&self) -> &'static str {
        "chern_weil_3"
    }
    fn description(&self) -> &'static str {
        "d(CS5) = P6, two-path CS5 and P6"
    }
    fn applies(&self, env: &CheckEnv) -> std::result::Result<(), String> {
        need_level(env, &[3])?;
        need_pairings(env, &[PairingKind::Gl, PairingKind::HAnti])
    }
    fn run(&self, env: &CheckEnv, t: &mut Tally) -> Result<()> {
        let alg = &env.alg;
        for inst in env.instances(self.name())? {
            let c = three(&inst.fields)?;
            let cs = cs5(alg, c)?;
            let by_components = cs5_components(alg, c)?;
            t.record_diff("cs5-two-path", &cs, &by_components, || cs.sub(&by_components))?;
            let curv = curvature3(alg, c)?;
            let p6 = chern6(alg, &curv)?;
            let p6_gen = chern6_generalized(alg, &curv)?;
            t.record_diff("p6-two-path", &p6, &p6_gen, || p6.sub(&p6_gen))?;
            let dcs = cs.ext_d();
            t.record_diff("dcs5-p6", &dcs, &p6, || dcs.sub(&p6))?;
        }
        Ok(())
    }
}

/// `CS₄(A′, B′) − CS₄(A, B)` is closed.
pub struct Cs4GaugeClosed;

impl Check for Cs4GaugeClosed {
    fn name(&self) -> &'static str {
        "cs4_gauge_closed"
    }
    fn description(&self) -> &'static str {
        "the gauge variation of CS4 is closed"
    }
    fn applies(&self, env: &CheckEnv) -> std::result::Result<(), String> {
        need_level(env, &[2])?;
        need_pairings(env, &[PairingKind::Gh])?;
        need_group(env)
    }
    fn run(&self, env: &CheckEnv, t: &mut Tally) -> Result<()> {
        let group = env.group()?;
        for inst in env.instances(self.name())? {
            let v = cs4_gauge_variation(group, two(&inst.fields)?, element(&inst)?)?;
            t.record("d(variation)", &v.closedness_residual());
        }
        Ok(())
    }
}

/// The variation against the boundary term built from `F(φ) = dφ + ½[φ,φ]`.
pub struct Cs4Boundary;

impl Check for Cs4Boundary {
    fn name(&self) -> &'static str {
        "cs4_boundary"
    }
    fn description(&self) -> &'static str {
        "gauge variation of CS4 against the exact boundary term"
    }
    fn severity(&self, _env: &CheckEnv) -> Severity {
        Severity::Reported
    }
    fn applies(&self, env: &CheckEnv) -> std::result::Result<(), String> {
        Cs4GaugeClosed.applies(env)
    }
    fn run(&self, env: &CheckEnv, t: &mut Tally) -> Result<()> {
        let group = env.group()?;
        for inst in env.instances(self.name())? {
            let v = cs4_gauge_variation(group, two(&inst.fields)?, element(&inst)?)?;
            t.record("variation+d(boundary)", &v.boundary_residual()?);
        }
        Ok(())
    }
}

/// Action values on the first instance.
pub struct Actions;

impl Check for Actions {
    fn name(&self) -> &'static str {
        "actions"
    }
    fn description(&self) -> &'static str {
        "values of every action functional defined for the fields"
    }
    fn severity(&self, _env: &CheckEnv) -> Severity {
        Severity::Informational
    }
    fn run(&self, env: &CheckEnv, t: &mut Tally) -> Result<()> {
        let inst = env.instances(self.name())?;
        let Some(first) = inst.first() else {
            return Ok(());
        };
        for kind in action_kinds() {
            match kind.evaluate(&env.alg, &first.fields) {
                Ok(v) => t.value(kind.name(), v),
                Err(e) => t.note(format!("{}: {e}", kind.name())),
            }
        }
        Ok(())
    }
}

/// Every check, in report order.
pub fn registry() -> Vec<Box<dyn Check>> {
    vec![
        Box::new(ValidateAlgebra),
        Box::new(ValidateGroup),
        Box::new(Bianchi),
        Box::new(CurvatureSlots),
        Box::new(MaurerCartan { name: "mc", level: None }),
        Box::new(MaurerCartan { name: "mc2", level: Some(2) }),
        Box::new(MaurerCartan { name: "mc3", level: Some(3) }),
        Box::new(Adjoint),
        Box::new(GaugeCovariance),
        Box::new(ChernWeil2),
        Box::new(ChernWeil3),
        Box::new(Cs4GaugeClosed),
        Box::new(Cs4Boundary),
        Box::new(Actions),
    ]
}

pub fn check_names() -> Vec<&'static str> {
    registry().iter().map(|c| c.name()).collect()
}

pub fn find_check(name: &str) -> Result<Box<dyn Check>> {
    registry()
        .into_iter()
        .find(|c| c.name() == name)
        .ok_or_else(|| Error::Invalid(format!("unknown check {name:?}")))
}

/// Runs one check. Errors inside a check become a failed outcome.
pub fn run_check(check: &dyn Check, env: &CheckEnv) -> CheckOutcome {
    let severity = check.severity(env);
    if check.name() != "validate_algebra" && !env.validation.is_valid() {
        return CheckOutcome::skipped(check.name(), severity, "algebra failed validation".into());
    }
    if let Err(reason) = check.applies(env) {
        return CheckOutcome::skipped(check.name(), severity, reason);
    }
    let mut t = Tally::default();
    let result = check.run(env, &mut t);
    let mut notes = t.notes;
    let status = match &result {
        Err(e) => {
            notes.push(format!("error: {e}"));
            Status::Fail
        }
        Ok(()) => match severity {
            Severity::MustPass if t.residuals.iter().all(|r| r.nonzero == 0) => Status::Pass,
            Severity::MustPass => Status::Fail,
            _ => Status::Reported,
        },
    };
    CheckOutcome {
        name: check.name().to_string(),
        severity,
        status,
        residuals: t.residuals,
        values: t.values,
        note: if notes.is_empty() { None } else { Some(notes.join("; ")) },
    }
}

/// Runs the named checks in the given order. `validate_algebra` always runs
/// first, so a broken algebra is reported even when not requested.
pub fn run_checks(env: &CheckEnv, names: &[String]) -> Result<Vec<CheckOutcome>> {
    let checks = names
        .iter()
        .map(|n| find_check(n))
        .collect::<Result<Vec<_>>>()?;
    let mut out = Vec::with_capacity(checks.len() + 1);
    if !names.iter().any(|n| n == "validate_algebra") {
        out.push(run_check(&ValidateAlgebra, env));
    }
    for c in &checks {
        out.push(run_check(c.as_ref(), env));
    }
    Ok(out)
}
