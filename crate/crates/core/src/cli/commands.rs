use crate::asymptotics;
use crate::continuum::spectral_density;
use crate::processes::{self, adiabat_trajectory, Evaluator};
use crate::spectrum::{enumerate_levels, Geometry};
use crate::thermo::{Method, ThermoReport, ThermoState};
use crate::Error;

use super::output::{Cell, Table};
use super::{CliError, Command, Context, MethodArg, MethodChoice};

fn usage(e: Error) -> CliError {
    CliError::Usage(e.to_string())
}

fn runtime(e: Error) -> CliError {
    CliError::Runtime(e.to_string())
}

fn positive(name: &'static str, x: f64) -> Result<f64, CliError> {
    if x > 0.0 && x.is_finite() {
        Ok(x)
    } else {
        Err(CliError::Usage(format!("--{name} must be positive, got {x}")))
    }
}

fn evaluator(method: Method, ctx: &Context) -> Evaluator {
    match method {
        Method::Quadrature => Evaluator::Quadrature(ctx.quadrature),
        other => Evaluator::for_method(other),
    }
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Exact => Method::ExactSum,
            MethodArg::Quadrature => Method::Quadrature,
            MethodArg::Asymptotic => Method::Asymptotic,
        }
    }
}

pub(super) fn dispatch(command: &Command, ctx: &Context) -> Result<Table, CliError> {
    match command {
        Command::Spectrum { radius, cutoff } => spectrum(*radius, *cutoff),
        Command::Thermo { radius, temp, method } => thermo(*radius, *temp, *method, ctx),
        Command::Planck { rt, x_max, points } => planck(*rt, *x_max, *points),
        Command::Adiabat {
            entropy,
            from_state,
            r_min,
            r_max,
            steps,
            method,
        } => adiabat(*entropy, from_state.as_deref(), *r_min, *r_max, *steps, (*method).into(), ctx),
        Command::Compare { radius, temps } => compare(*radius, temps, ctx),
        Command::Eos { rt, radius, method } => eos(rt, *radius, (*method).into(), ctx),
    }
}

fn spectrum(radius: f64, cutoff: f64) -> Result<Table, CliError> {
    let geom = Geometry::new(radius).map_err(usage)?;
    let levels = enumerate_levels(&geom, cutoff).map_err(usage)?;
    let mut table = Table::new("spectrum", vec!["n", "j", "energy", "degeneracy"]);
    for level in levels {
        table.push(vec![level.n.into(), level.j.into(), level.energy.into(), level.degeneracy.into()]);
    }
    Ok(table)
}

const REPORT_COLUMNS: [&str; 13] = [
    "method", "R", "T", "RT", "N", "U", "F", "Omega", "P", "S", "energy_density", "V", "quality",
];

fn report_row(r: &ThermoReport) -> Vec<Cell> {
    let quality = match r.quality {
        crate::thermo::Quality::Reliable => "reliable",
        crate::thermo::Quality::OutsideAsymptoticDomain => "outside-asymptotic-domain",
    };
    vec![
        r.method.as_str().into(),
        r.radius.into(),
        r.temperature.into(),
        r.rt().into(),
        r.photon_number.into(),
        r.energy.into(),
        r.free_energy.into(),
        r.grand_potential.into(),
        r.pressure.into(),
        r.entropy.into(),
        r.energy_density.into(),
        r.volume.into(),
        quality.into(),
    ]
}

fn abs_dev(a: Option<f64>, b: Option<f64>) -> Option<f64> {
    crate::thermo::relative_deviation(a, b).map(f64::abs)
}

fn deviation_row(a: &ThermoReport, b: &ThermoReport) -> Vec<Cell> {
    let label = format!("deviation:{}/{}", a.method, b.method);
    let dev = |x: fn(&ThermoReport) -> Option<f64>| Cell::from(abs_dev(x(a), x(b)));
    vec![
        Cell::Text(label),
        a.radius.into(),
        a.temperature.into(),
        a.rt().into(),
        dev(|r| r.photon_number),
        dev(|r| Some(r.energy)),
        dev(|r| Some(r.free_energy)),
        dev(|r| Some(r.grand_potential)),
        dev(|r| Some(r.pressure)),
        dev(|r| Some(r.entropy)),
        dev(|r| Some(r.energy_density)),
        Cell::Missing,
        Cell::Missing,
    ]
}

fn evaluate(method: Method, state: &ThermoState, ctx: &Context) -> Result<ThermoReport, CliError> {
    evaluator(method, ctx)
        .report(state)
        .map_err(|e| CliError::Runtime(format!("{method} evaluation failed: {e}")))
}

fn thermo(radius: f64, temp: f64, method: MethodChoice, ctx: &Context) -> Result<Table, CliError> {
    let state = ThermoState::from_radius_temperature(radius, temp).map_err(usage)?;
    let methods: Vec<Method> = match method {
        MethodChoice::Exact => vec![Method::ExactSum],
        MethodChoice::Quadrature => vec![Method::Quadrature],
        MethodChoice::Asymptotic => vec![Method::Asymptotic],
        MethodChoice::All => Method::ALL.to_vec(),
    };
    let reports = methods
        .iter()
        .map(|m| evaluate(*m, &state, ctx))
        .collect::<Result<Vec<_>, _>>()?;

    let mut table = Table::new("thermo", REPORT_COLUMNS.to_vec());
    for r in &reports {
        table.push(report_row(r));
    }
    if let [exact, quad, asym] = reports.as_slice() {
        table.push(deviation_row(exact, quad));
        table.push(deviation_row(asym, quad));
        table.push(deviation_row(asym, exact));
    }
    Ok(table)
}

fn planck(rt: f64, x_max: f64, points: usize) -> Result<Table, CliError> {
    positive("rt", rt)?;
    positive("x-max", x_max)?;
    if points < 2 {
        return Err(CliError::Usage(format!("--points must be at least 2, got {points}")));
    }
    let a = 1.0 / rt;
    let mut table = Table::new("planck", vec!["x", "u_modified", "u_freespace"]);
    for i in 1..=points {
        let x = x_max * i as f64 / points as f64;
        table.push(vec![x.into(), spectral_density(x, a).into(), spectral_density(x, 0.0).into()]);
    }
    Ok(table)
}

fn adiabat(
    entropy: Option<f64>,
    from_state: Option<&[f64]>,
    r_min: f64,
    r_max: f64,
    steps: usize,
    method: Method,
    ctx: &Context,
) -> Result<Table, CliError> {
    let eval = evaluator(method, ctx);
    let s0 = match (entropy, from_state) {
        (Some(s), _) => positive("entropy", s)?,
        (None, Some([r, t])) => {
            let state = ThermoState::from_radius_temperature(*r, *t).map_err(usage)?;
            eval.entropy(&state).map_err(runtime)?
        }
        (None, Some(other)) => {
            return Err(CliError::Usage(format!("--from-state needs R,T; got {} values", other.len())))
        }
        (None, None) => return Err(CliError::Usage("need --entropy or --from-state".into())),
    };
    if !(r_min > 0.0 && r_min < r_max && r_max.is_finite()) {
        return Err(CliError::Usage(format!("need 0 < r-min < r-max, got [{r_min}, {r_max}]")));
    }
    if steps < 2 {
        return Err(CliError::Usage(format!("--steps must be at least 2, got {steps}")));
    }
    let points = adiabat_trajectory(s0, r_min, r_max, steps, &eval).map_err(runtime)?;

    let mut table = Table::new("adiabat", vec!["R", "T", "RT", "N", "U", "F", "P", "S"]);
    for p in &points {
        let r = &p.report;
        table.push(vec![
            p.radius.into(),
            p.temperature.into(),
            p.rt.into(),
            r.photon_number.into(),
            r.energy.into(),
            r.free_energy.into(),
            r.pressure.into(),
            r.entropy.into(),
        ]);
    }
    Ok(table)
}

fn positive_list(name: &'static str, values: &[f64]) -> Result<(), CliError> {
    if values.is_empty() {
        return Err(CliError::Usage(format!("--{name} needs at least one value")));
    }
    values.iter().try_for_each(|v| positive(name, *v).map(|_| ()))
}

fn compare(radius: f64, temps: &[f64], ctx: &Context) -> Result<Table, CliError> {
    let geom = Geometry::new(radius).map_err(usage)?;
    positive_list("temps", temps)?;
    let mut table = Table::new(
        "compare",
        vec![
            "T", "RT",
            "N_exact", "N_quadrature",
            "U_exact", "U_quadrature", "U_asymptotic",
            "S_exact", "S_quadrature", "S_asymptotic",
            "P_exact", "P_quadrature", "P_asymptotic",
            "dev_N_exact", "dev_U_exact", "dev_S_exact", "dev_P_exact",
            "dev_U_asymptotic", "dev_S_asymptotic", "dev_P_asymptotic",
        ],
    );
    for &t in temps {
        let state = ThermoState::new(geom, t).map_err(usage)?;
        let exact = evaluate(Method::ExactSum, &state, ctx)?;
        let quad = evaluate(Method::Quadrature, &state, ctx)?;
        let asym = evaluate(Method::Asymptotic, &state, ctx)?;
        let dev = |a: &ThermoReport, x: fn(&ThermoReport) -> Option<f64>| Cell::from(abs_dev(x(a), x(&quad)));
        let n = |r: &ThermoReport| r.photon_number;
        let u = |r: &ThermoReport| Some(r.energy);
        let s = |r: &ThermoReport| Some(r.entropy);
        let p = |r: &ThermoReport| Some(r.pressure);
        table.push(vec![
            t.into(),
            state.rt().into(),
            exact.photon_number.into(),
            quad.photon_number.into(),
            exact.energy.into(),
            quad.energy.into(),
            asym.energy.into(),
            exact.entropy.into(),
            quad.entropy.into(),
            asym.entropy.into(),
            exact.pressure.into(),
            quad.pressure.into(),
            asym.pressure.into(),
            dev(&exact, n),
            dev(&exact, u),
            dev(&exact, s),
            dev(&exact, p),
            dev(&asym, u),
            dev(&asym, s),
            dev(&asym, p),
        ]);
    }
    Ok(table)
}

fn eos(rts: &[f64], radius: f64, method: Method, ctx: &Context) -> Result<Table, CliError> {
    let geom = Geometry::new(radius).map_err(usage)?;
    positive_list("rt", rts)?;
    let eval = evaluator(method, ctx);
    let mut table = Table::new(
        "eos",
        vec!["RT", "R", "T", "energy_density", "P", "eos_density", "residual", "relative_residual"],
    );
    for &rt in rts {
        let state = ThermoState::new(geom, rt / radius).map_err(usage)?;
        let report = eval.report(&state).map_err(runtime)?;
        let predicted = asymptotics::eos_density_from_pressure(report.pressure, &geom).map_err(runtime)?;
        let residual = processes::eos_residual(&state, &eval).map_err(runtime)?;
        table.push(vec![
            rt.into(),
            radius.into(),
            state.temperature().into(),
            report.energy_density.into(),
            report.pressure.into(),
            predicted.into(),
            residual.into(),
            (residual.abs() / report.energy_density).into(),
        ]);
    }
    Ok(table)
}
