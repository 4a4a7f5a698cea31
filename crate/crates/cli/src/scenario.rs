//! Scenario files: which algebra, which chart, which fields and which checks.

use std::path::Path;

use hgauge::algebra::HigherAlgebra;
use hgauge::checks::{check_names, default_context, CheckEnv};
use hgauge::genform::DerivativeContext;
use hgauge::models;
use hgauge::random::Bounds;
use hgauge::wire::{WireAlgebra, WireConnection, WireGroupElement};
use hgauge::Q;
use serde::{Deserialize, Serialize};

/// Largest chart dimension the polynomial engine supports.
const MAX_DIM: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Chart {
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ContextSpec {
    pub n_type: u8,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<Q>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k1: Option<Q>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k2: Option<Q>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AlgebraSection {
    Builtin(String),
    Lie(WireAlgebra),
    Crossed(WireAlgebra),
    TwoCrossed(WireAlgebra),
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldsSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub connection: Option<WireConnection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub element: Option<WireGroupElement>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RngSpec {
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "default_max_degree")]
    pub max_poly_degree: u32,
    #[serde(default = "default_max_terms")]
    pub max_terms: usize,
}

fn default_max_degree() -> u32 {
    2
}

fn default_max_terms() -> usize {
    2
}

fn default_samples() -> usize {
    3
}

impl Default for RngSpec {
    fn default() -> Self {
        RngSpec {
            seed: 0,
            max_poly_degree: default_max_degree(),
            max_terms: default_max_terms(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    #[serde(default)]
    pub name: String,
    pub chart: Chart,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub context: Option<ContextSpec>,
    pub algebra: AlgebraSection,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fields: Option<FieldsSpec>,
    #[serde(default)]
    pub checks: Vec<String>,
    #[serde(default)]
    pub rng: RngSpec,
    /// Random instances per check when no fields are given.
    #[serde(default = "default_samples")]
    pub samples: usize,
}

/// Command-line values that take precedence over the file.
#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub seed: Option<u64>,
    pub max_degree: Option<u32>,
    pub dim: Option<usize>,
    pub k: Option<Q>,
    pub k1: Option<Q>,
    pub k2: Option<Q>,
}

/// A scenario that passed every schema check, ready to run.
pub struct Resolved {
    pub scenario: Scenario,
    pub env: CheckEnv,
}

pub fn parse_scenario(text: &str) -> Result<Scenario, Vec<String>> {
    serde_json::from_str(text).map_err(|e| vec![format!("parse error: {e}")])
}

pub fn load_scenario(path: &Path) -> Result<Scenario, Vec<String>> {
    let text = std::fs::read_to_string(path).map_err(|e| vec![format!("{}: {e}", path.display())])?;
    parse_scenario(&text)
}

fn build_algebra(section: &AlgebraSection) -> Result<HigherAlgebra, String> {
    let (wire, level) = match section {
        AlgebraSection::Builtin(name) => return models::builtin(name).map_err(|e| e.to_string()),
        AlgebraSection::Lie(w) => (w, 1),
        AlgebraSection::Crossed(w) => (w, 2),
        AlgebraSection::TwoCrossed(w) => (w, 3),
    };
    if wire.level() != level {
        return Err(format!(
            "algebra {:?} has the shape of a level-{} algebra but is declared as level {level}",
            wire.name,
            wire.level()
        ));
    }
    wire.to_algebra().map_err(|e| format!("algebra {:?}: {e}", wire.name))
}

fn build_context(spec: Option<&ContextSpec>, level: u8, o: &Overrides) -> Result<DerivativeContext, String> {
    let expected = level.saturating_sub(1);
    let n_type = spec.map_or(expected, |c| c.n_type);
    if n_type != expected {
        return Err(format!("context n_type {n_type} does not match a level-{level} algebra (expected {expected})"));
    }
    let pick = |flag: &Option<Q>, file: Option<&Option<Q>>| flag.clone().or_else(|| file.cloned().flatten());
    let k = pick(&o.k, spec.map(|c| &c.k));
    let k1 = pick(&o.k1, spec.map(|c| &c.k1));
    let k2 = pick(&o.k2, spec.map(|c| &c.k2));
    let mut ctx = default_context(level);
    match n_type {
        0 if k.is_some() || k1.is_some() || k2.is_some() => {
            Err("a Lie algebra takes no derivative constants".to_string())
        }
        1 if k1.is_some() || k2.is_some() => Err("type-1 context takes k, not k1/k2".to_string()),
        2 if k.is_some() => Err("type-2 context takes k1/k2, not k".to_string()),
        _ => {
            if let Some(k) = k {
                ctx.k = k;
            }
            if let Some(k1) = k1 {
                ctx.k1 = k1;
            }
            if let Some(k2) = k2 {
                ctx.k2 = k2;
            }
            Ok(ctx)
        }
    }
}

impl Scenario {
    pub fn apply(&mut self, o: &Overrides) {
        if let Some(seed) = o.seed {
            self.rng.seed = seed;
        }
        if let Some(d) = o.max_degree {
            self.rng.max_poly_degree = d;
        }
        if let Some(dim) = o.dim {
            self.chart.dim = dim;
        }
    }

    /// Validates every reference and degree, collecting all errors found.
    pub fn resolve(mut self, o: &Overrides) -> Result<Resolved, Vec<String>> {
        self.apply(o);
        let mut errors = Vec::new();
        let dim = self.chart.dim;
        if dim == 0 || dim > MAX_DIM {
            errors.push(format!("chart dim {dim} must be between 1 and {MAX_DIM}"));
        }
        let known = check_names();
        for c in &self.checks {
            if !known.contains(&c.as_str()) {
                errors.push(format!("unknown check {c:?} (known: {})", known.join(", ")));
            }
        }
        let alg = match build_algebra(&self.algebra) {
            Ok(a) => Some(a),
            Err(e) => {
                errors.push(e);
                None
            }
        };
        let Some(alg) = alg else {
            return Err(errors);
        };
        let ctx = build_context(self.context.as_ref(), alg.level(), o).unwrap_or_else(|e| {
            errors.push(e);
            default_context(alg.level())
        });
        if !errors.is_empty() {
            return Err(errors);
        }
        let bounds = Bounds::new(dim, self.rng.max_poly_degree, self.rng.max_terms);
        let mut env = CheckEnv::new(alg, ctx, bounds, self.rng.seed, self.samples);
        if let Some(f) = &self.fields {
            if let Some(c) = &f.connection {
                match c.to_fields(&env.alg, dim) {
                    Ok(x) => env.fields = Some(x),
                    Err(e) => errors.push(format!("connection: {e}")),
                }
            }
            if let Some(e) = &f.element {
                match e.to_element(&env.alg, dim) {
                    Ok(x) if env.alg.level() == x.n_type() + 1 => env.element = Some(x),
                    Ok(x) => errors.push(format!(
                        "element: type {} does not match a level-{} algebra",
                        x.n_type(),
                        env.alg.level()
                    )),
                    Err(err) => errors.push(format!("element: {err}")),
                }
            }
        }
        if errors.is_empty() {
            Ok(Resolved { scenario: self, env })
        } else {
            Err(errors)
        }
    }
}
