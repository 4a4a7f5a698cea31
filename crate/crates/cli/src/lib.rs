//! Scenario-driven front end: load a scenario, run named checks and
//! functionals, emit a deterministic report.

pub mod report;
pub mod scenario;

use hgauge::algebra::AlgebraValuedForm;
use hgauge::checks::{check_names, run_checks, CheckEnv, Instance, Residual, ResidualValue};
use hgauge::gauge::{
    action_kind, bf_value, curvature2, curvature3, field_strength, gauge_transform2, gauge_transform3,
    slotwise_two_ym, Fields,
};
use hgauge::wire::WireAlgebraForm;

pub use report::{ActionResult, Format, NamedForm, Report, Summary};
pub use scenario::{load_scenario, parse_scenario, Overrides, Resolved, Scenario};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Check,
    Curvature,
    Gauge,
    Action(String),
    Validate,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Check => "check",
            Command::Curvature => "curvature",
            Command::Gauge => "gauge",
            Command::Action(_) => "action",
            Command::Validate => "validate",
        }
    }

    fn checks(&self, scenario: &Scenario) -> Vec<String> {
        let own = |names: &[&str]| names.iter().map(|s| s.to_string()).collect();
        match self {
            Command::Check if scenario.checks.is_empty() => own(&check_names()),
            Command::Check => scenario.checks.clone(),
            Command::Curvature => own(&["bianchi", "curvature_slots"]),
            Command::Gauge => own(&["gauge_covariance"]),
            Command::Action(_) => Vec::new(),
            Command::Validate => own(&["validate_algebra", "validate_group"]),
        }
    }
}

fn named(name: &str, x: &AlgebraValuedForm) -> NamedForm {
    NamedForm {
        name: name.to_string(),
        form: WireAlgebraForm::from_form(x),
    }
}

fn first_instance(env: &CheckEnv, salt: &str) -> Result<Instance, String> {
    let mut env_one = env.instances(salt).map_err(|e| e.to_string())?;
    if env_one.is_empty() {
        return Err("scenario has no fields and samples = 0".into());
    }
    Ok(env_one.swap_remove(0))
}

fn curvature_forms(env: &CheckEnv) -> Result<Vec<NamedForm>, String> {
    let inst = first_instance(env, "curvature")?;
    let alg = &env.alg;
    let err = |e: hgauge::Error| e.to_string();
    Ok(match &inst.fields {
        Fields::One(a) => vec![named("A", a), named("F", &field_strength(a).map_err(err)?)],
        Fields::Two(c) => {
            let cs = curvature2(alg, c).map_err(err)?;
            vec![
                named("A", &c.a),
                named("B", &c.b),
                named("omega1", &cs.omega1),
                named("omega2", &cs.omega2),
            ]
        }
        Fields::Three(c) => {
            let cs = curvature3(alg, c).map_err(err)?;
            let mut v = vec![
                named("A", &c.a),
                named("B", &c.b),
                named("C", &c.c),
                named("omega1", &cs.omega1),
                named("omega2", &cs.omega2),
            ];
            if let Some(o3) = &cs.omega3 {
                v.push(named("omega3", o3));
            }
            v
        }
    })
}

fn gauge_forms(env: &CheckEnv) -> Result<Vec<NamedForm>, String> {
    let group = env.group().map_err(|e| e.to_string())?;
    let inst = first_instance(env, "gauge")?;
    let e = inst.element.as_ref().ok_or("no group element")?;
    let err = |e: hgauge::Error| e.to_string();
    Ok(match &inst.fields {
        Fields::Two(c) => {
            let ctx = if env.ctx.n_type == 1 { env.ctx.clone() } else { hgauge::checks::default_context(2) };
            let t = gauge_transform2(group, c, e, &ctx).map_err(err)?;
            vec![named("A'", &t.a), named("B'", &t.b)]
        }
        Fields::Three(c) => {
            let (t, xi2) = gauge_transform3(group, c, e).map_err(err)?;
            vec![named("A'", &t.a), named("B'", &t.b), named("C'", &t.c), named("xi2-slot", &xi2)]
        }
        Fields::One(_) => return Err("gauge transformations need a 2- or 3-connection".into()),
    })
}

fn residual(label: &str, r: &impl ResidualValue) -> Residual {
    let zero = r.is_zero_residual();
    Residual {
        label: label.to_string(),
        instances: 1,
        nonzero: usize::from(!zero),
        leading: if zero { None } else { r.leading() },
    }
}

fn action_result(env: &CheckEnv, kind: &str) -> Result<ActionResult, String> {
    let err = |e: hgauge::Error| e.to_string();
    let action = action_kind(kind).map_err(err)?;
    let inst = first_instance(env, "action")?;
    let alg = &env.alg;
    let value = action.evaluate(alg, &inst.fields).map_err(err)?;
    let mut residuals = Vec::new();
    if let Fields::Two(c) = &inst.fields {
        let alpha_zero = alg.alpha.as_ref().is_some_and(|a| a.is_zero());
        if kind == "2cs" && alpha_zero {
            residuals.push(residual("bf", &(&value - &bf_value(alg, c).map_err(err)?)));
        }
        if kind == "2ym" {
            let slotwise = slotwise_two_ym(alg, &curvature2(alg, c).map_err(err)?).map_err(err)?;
            residuals.push(residual("slotwise", &(&value - &slotwise)));
        }
    }
    Ok(ActionResult {
        kind: kind.to_string(),
        value,
        residuals,
    })
}

/// Runs a command on a resolved scenario. `Err` means the scenario cannot
/// support the command.
pub fn execute(command: &Command, resolved: &Resolved) -> Result<Report, String> {
    let env = &resolved.env;
    let s = &resolved.scenario;
    let checks = run_checks(env, &command.checks(s)).map_err(|e| e.to_string())?;
    let mut report = Report {
        command: command.name().to_string(),
        scenario: s.name.clone(),
        model: env.alg.name.clone(),
        dim: env.dim(),
        context: (env.level() > 1).then(|| env.ctx.clone()),
        seed: s.rng.seed,
        checks,
        ..Default::default()
    };
    if env.validation.is_valid() {
        match command {
            Command::Curvature => report.forms = curvature_forms(env)?,
            Command::Gauge => report.forms = gauge_forms(env)?,
            Command::Action(kind) => report.actions.push(action_result(env, kind)?),
            Command::Check | Command::Validate => {}
        }
    }
    report.tally();
    Ok(report)
}
