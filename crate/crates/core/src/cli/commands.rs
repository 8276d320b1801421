//! One function per subcommand, each producing a report or a table.

use num::ToPrimitive;
use serde_json::{json, Map, Value};

use crate::classical::{
    correlation_point, marginal_expectation, sample_urn, singlet_sz_profile, singlet_threshold, specker_check,
    BallType, UrnDistribution,
};
use crate::error::{Error, Result};
use crate::polytope::{
    affine_dimension, dd_hull, enumerate_vertices, membership, rational_to_f64, Facet, HRepresentation, Rational,
    Scenario,
};
use crate::quantum::{
    deviation_extrema, fragment_correlation, fragment_monte_carlo, singlet_correlation, Direction, PureState,
};
use crate::rng::SplitMix64;
use crate::spectral::{
    optimize_angles, quantum_bound, sz_spectrum, tsirelson_eigenstates, BoundReport, SearchMode, TSIRELSON_BOUND,
};

use super::args::{load_scenario, parse_angle, parse_angles, parse_rational, parse_rationals, parse_reals};
use super::report::{format_float, Report, Table};
use super::{
    ChshArgs, DeviationArgs, FacetArgs, FacetsArgs, OptimizeArgs, QboundArgs, SpeckerArgs, SweepArgs, UrnArgs,
};

/// Planar CHSH angles for W, X, Y, Z at which the singlet reaches `−2√2`.
pub const CANONICAL_CHSH_ANGLES: &str = "0,pi/2,pi/4,7pi/4";

pub enum Output {
    Json(Report),
    Csv(Table),
}

fn rational_json(q: &Rational) -> Value {
    if q.is_integer() {
        if let Some(n) = q.to_integer().to_i64() {
            return Value::from(n);
        }
    }
    Value::String(q.to_string())
}

fn scenario_json(s: &Scenario) -> Value {
    serde_json::to_value(s).expect("scenario serializes")
}

fn names(s: &Scenario) -> Vec<String> {
    (0..s.dimension()).map(|k| s.monomial_name(k)).collect()
}

fn facet_json(f: &Facet, names: &[String]) -> Value {
    json!({
        "offset": rational_json(f.offset()),
        "normal": f.normal().iter().map(rational_json).collect::<Vec<_>>(),
        "inequality": f.describe(names),
    })
}

fn state_json(s: &PureState) -> Value {
    Value::Array(s.amplitudes().iter().map(|z| json!([z.re, z.im])).collect())
}

fn directions_json(dirs: &[Direction]) -> Value {
    Value::Array(dirs.iter().map(|d| json!({"theta": d.theta(), "phi": d.phi()})).collect())
}

fn hull(scenario: &Scenario) -> Result<HRepresentation> {
    dd_hull(&enumerate_vertices(scenario)?)
}

fn select_facet(args: &FacetArgs, scenario: &Scenario) -> Result<Facet> {
    match &args.normal {
        Some(normal) => {
            let normal = parse_rationals(normal)?;
            let offset = parse_rational(args.offset.as_deref().unwrap_or("0"))?;
            if normal.len() != scenario.dimension() {
                return Err(Error::DimensionMismatch {
                    expected: scenario.dimension(),
                    found: normal.len(),
                });
            }
            Ok(Facet::new(offset, normal))
        }
        None => {
            let h = hull(scenario)?;
            h.facets().get(args.facet).cloned().ok_or_else(|| {
                Error::Domain(format!("facet index {} out of range; the polytope has {}", args.facet, h.len()))
            })
        }
    }
}

fn planar(angles: &[f64]) -> Vec<Direction> {
    angles.iter().map(|&t| Direction::planar(t)).collect()
}

fn bound_json(r: &BoundReport) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("lambda_min".into(), r.lambda_min.into());
    m.insert("lambda_max".into(), r.lambda_max.into());
    m.insert("classical_min".into(), rational_json(&r.classical_min));
    m.insert("classical_max".into(), rational_json(&r.classical_max));
    m.insert("violation".into(), r.violation.into());
    m.insert("singlet_value".into(), r.singlet_value.into());
    m.insert("coincident_directions".into(), r.coincident_directions.into());
    m.insert("spectrum".into(), json!(r.spectrum));
    m.insert("state_min".into(), state_json(&r.state_min));
    m.insert("state_max".into(), state_json(&r.state_max));
    m
}

pub fn facets(args: &FacetsArgs) -> Result<Output> {
    let scenario = load_scenario(&args.scenario)?;
    let v = enumerate_vertices(&scenario)?;
    let h = dd_hull(&v)?;
    let names = names(&scenario);
    if args.output.csv {
        let mut header = vec!["index".to_string(), "offset".to_string()];
        header.extend(names.iter().cloned());
        let rows = h
            .facets()
            .iter()
            .enumerate()
            .map(|(k, f)| {
                let mut row = vec![k.to_string(), f.offset().to_string()];
                row.extend(f.normal().iter().map(|a| a.to_string()));
                row
            })
            .collect();
        return Ok(Output::Csv(Table { header, rows }));
    }
    let facets: Vec<Value> = h
        .facets()
        .iter()
        .enumerate()
        .map(|(k, f)| {
            let mut v = facet_json(f, &names);
            v["index"] = k.into();
            v
        })
        .collect();
    let vertices: Vec<Value> = v
        .vertices()
        .iter()
        .map(|row| Value::Array(row.iter().map(rational_json).collect()))
        .collect();
    Ok(Output::Json(Report::new(
        "facets",
        json!({ "scenario": scenario_json(&scenario) }),
        json!({
            "vertex_count": v.len(),
            "vertices": vertices,
            "affine_dimension": affine_dimension(&v),
            "facet_count": h.len(),
            "facets": facets,
        }),
    )))
}

pub fn qbound(args: &QboundArgs) -> Result<Output> {
    let scenario = load_scenario(&args.scenario)?;
    let facet = select_facet(&args.facet, &scenario)?;
    let angles = parse_angles(&args.angles)?;
    let report = quantum_bound(&facet, &planar(&angles), &scenario)?;
    let mut results = bound_json(&report);
    results.insert("facet".into(), facet_json(&facet.canonical(), &names(&scenario)));
    Ok(Output::Json(Report::new(
        "qbound",
        json!({ "scenario": scenario_json(&scenario), "angles": angles }),
        Value::Object(results),
    )))
}

pub fn optimize(args: &OptimizeArgs) -> Result<Output> {
    let scenario = load_scenario(&args.scenario)?;
    let facet = select_facet(&args.facet, &scenario)?;
    let mode: SearchMode = args.mode.parse()?;
    let initial = args.angles.as_deref().map(parse_angles).transpose()?;
    let initial_dirs = initial.as_deref().map(planar);
    let opt = optimize_angles(&facet, &scenario, initial_dirs.as_deref(), mode)?;
    let mut results = bound_json(&opt.report);
    results.insert("facet".into(), facet_json(&facet.canonical(), &names(&scenario)));
    results.insert("directions".into(), directions_json(&opt.directions));
    results.insert("grid_steps".into(), opt.grid_steps.into());
    results.insert("grid_points".into(), opt.grid_points.into());
    results.insert("iterations".into(), opt.iterations.into());
    results.insert("final_step".into(), opt.final_step.into());
    Ok(Output::Json(Report::new(
        "optimize",
        json!({ "scenario": scenario_json(&scenario), "mode": mode.as_str(), "initial_angles": initial }),
        Value::Object(results),
    )))
}

pub const SWEEP_COLUMNS: [&str; 12] = [
    "theta",
    "mu1_closed",
    "mu1_computed",
    "mu2_closed",
    "mu2_computed",
    "singlet_sum",
    "classical_bound",
    "mu1_error",
    "mu2_error",
    "x1_agreement",
    "x2_agreement",
    "degenerate",
];

/// `steps` equidistant angles from `start` to `stop` inclusive.
pub fn theta_grid(start: f64, stop: f64, steps: usize) -> Vec<f64> {
    (0..steps)
        .map(|k| {
            if k + 1 == steps {
                stop
            } else {
                start + (stop - start) * k as f64 / (steps - 1) as f64
            }
        })
        .collect()
}

pub fn sweep(args: &SweepArgs) -> Result<Output> {
    let start = parse_angle(&args.start)?;
    let stop = parse_angle(&args.stop)?;
    if args.steps < 2 {
        return Err(Error::Domain("a sweep needs at least 2 steps".into()));
    }
    let grid = theta_grid(start, stop, args.steps);
    let mut rows = Vec::with_capacity(grid.len());
    for &theta in &grid {
        let sp = sz_spectrum(theta)?;
        rows.push(vec![
            Value::from(theta),
            sp.mu1_closed.into(),
            sp.mu1_computed.into(),
            sp.mu2_closed.into(),
            sp.mu2_computed.into(),
            crate::spectral::sz::singlet_sum(theta).into(),
            Value::from(-1),
            sp.mu1_error().into(),
            sp.mu2_error().into(),
            sp.x1_agreement.into(),
            sp.x2_agreement.into(),
            sp.degenerate.into(),
        ]);
    }
    if args.output.json {
        let objects: Vec<Value> = rows
            .into_iter()
            .map(|row| Value::Object(SWEEP_COLUMNS.iter().map(|c| c.to_string()).zip(row).collect()))
            .collect();
        return Ok(Output::Json(Report::new(
            "sweep",
            json!({ "start": start, "stop": stop, "steps": args.steps }),
            json!({ "rows": objects }),
        )));
    }
    let cell = |v: Value| match v {
        Value::Number(n) if n.is_f64() => format_float(n.as_f64().expect("f64")),
        other => other.to_string(),
    };
    Ok(Output::Csv(Table {
        header: SWEEP_COLUMNS.iter().map(|c| c.to_string()).collect(),
        rows: rows.into_iter().map(|r| r.into_iter().map(cell).collect()).collect(),
    }))
}

pub fn deviation(args: &DeviationArgs) -> Result<(Output, Option<u64>)> {
    let ex = deviation_extrema();
    let mut results = json!({
        "theta_low": ex.theta_low,
        "theta_high": ex.theta_high,
        "max_abs_deviation": ex.max_abs_deviation,
        "deviation_low": ex.deviation_low,
        "deviation_high": ex.deviation_high,
        "scan_max_abs": ex.scan_max_abs,
        "scan_argmax": ex.scan_argmax,
    });
    let mut seed = None;
    if let Some(samples) = args.samples {
        let s = args.seed.unwrap_or(0);
        seed = Some(s);
        let mut rng = SplitMix64::new(s);
        let mut points = Vec::new();
        for theta in [ex.theta_low, ex.theta_high] {
            let estimate = fragment_monte_carlo(theta, samples, &mut rng)?;
            points.push(json!({
                "theta": theta,
                "estimate": estimate,
                "exact": fragment_correlation(theta)?,
                "quantum": singlet_correlation(Direction::planar(theta), Direction::planar(0.0)),
            }));
        }
        results["monte_carlo"] = json!({
            "samples": samples,
            "tolerance": 5.0 / (samples as f64).sqrt(),
            "points": points,
        });
    }
    Ok((
        Output::Json(Report::new("deviation", json!({ "samples": args.samples }), results)),
        seed,
    ))
}

fn load_urn(source: &str) -> Result<UrnDistribution> {
    let ball = |s: &str| s.parse::<BallType>();
    match source {
        "uniform" => UrnDistribution::uniform(3),
        "all-plus" => UrnDistribution::deterministic(ball("+++")?),
        "split" => UrnDistribution::new(
            3,
            [
                (ball("++-")?, Rational::new(1.into(), 2.into())),
                (ball("--+")?, Rational::new(1.into(), 2.into())),
            ],
        ),
        path => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::InvalidUrn(format!("cannot read `{path}`: {e}")))?;
            UrnDistribution::from_json(&text)
        }
    }
}

pub fn urn(args: &UrnArgs) -> Result<(Output, Option<u64>)> {
    let urn = load_urn(&args.urn)?;
    let scenario = load_scenario(&args.scenario)?;
    let exact = correlation_point(&urn, &scenario)?;
    let h = hull(&scenario)?;
    let m = membership(&h, &exact)?;
    let marginals = (0..urn.observables())
        .map(|i| marginal_expectation(&urn, i).map(|q| rational_to_f64(&q)))
        .collect::<Result<Vec<_>>>()?;
    let mut results = json!({
        "weights": urn.to_json()["weights"].clone(),
        "correlation_point": exact.iter().map(rational_to_f64).collect::<Vec<_>>(),
        "correlation_point_exact": exact.iter().map(|q| q.to_string()).collect::<Vec<_>>(),
        "marginals": marginals,
        "membership": {
            "region": m.region.as_str(),
            "margins": m.margins.iter().map(rational_json).collect::<Vec<_>>(),
        },
    });
    let mut seed = None;
    if let Some(samples) = args.samples {
        let s = args.seed.unwrap_or(0);
        seed = Some(s);
        let sample = sample_urn(&urn, samples, s)?;
        let empirical = sample.correlation_point(&scenario)?;
        let max_err = empirical
            .iter()
            .zip(&exact)
            .map(|(e, q)| (e - rational_to_f64(q)).abs())
            .fold(0.0, f64::max);
        let counts: Map<String, Value> = sample
            .counts
            .iter()
            .map(|(b, c)| (b.to_string(), Value::from(*c)))
            .collect();
        results["sampling"] = json!({
            "draws": samples,
            "counts": counts,
            "empirical": empirical,
            "max_abs_error": max_err,
            "tolerance": 5.0 / (samples as f64).sqrt(),
        });
    }
    Ok((
        Output::Json(Report::new(
            "urn",
            json!({ "urn": args.urn, "scenario": scenario_json(&scenario), "samples": args.samples }),
            results,
        )),
        seed,
    ))
}

pub fn specker(args: &SpeckerArgs) -> Result<Output> {
    let scenario = load_scenario(&args.scenario)?;
    let h = hull(&scenario)?;
    let mut results = Map::new();
    let point = match &args.theta {
        Some(t) => {
            let profile = singlet_sz_profile(parse_angle(t)?)?;
            results.insert(
                "profile".into(),
                json!({
                    "theta": profile.theta,
                    "correlations": profile.correlations,
                    "sz_sum": profile.sz_sum,
                    "classical_violated": profile.classical_violated,
                    "threshold": singlet_threshold(),
                }),
            );
            profile.correlations.to_vec()
        }
        None => parse_reals(&args.point)?,
    };
    let report = specker_check(&point, &h)?;
    let worst = &h.facets()[report.worst_facet];
    results.insert("point".into(), json!(point));
    results.insert("margins".into(), json!(report.margins));
    results.insert("region".into(), report.region.as_str().into());
    results.insert("violated".into(), report.violated().into());
    results.insert("worst_facet".into(), report.worst_facet.into());
    results.insert("worst_margin".into(), report.worst_margin.into());
    results.insert("worst_inequality".into(), facet_json(worst, &names(&scenario)));
    Ok(Output::Json(Report::new(
        "specker",
        json!({ "scenario": scenario_json(&scenario), "point": args.point, "theta": args.theta }),
        Value::Object(results),
    )))
}

pub fn chsh(args: &ChshArgs) -> Result<Output> {
    let scenario = Scenario::chsh();
    let facet = crate::spectral::chsh_facet();
    let angles = parse_angles(&args.angles)?;
    let report = quantum_bound(&facet, &planar(&angles), &scenario)?;
    let mut results = bound_json(&report);
    results.insert("facet".into(), facet_json(&facet, &names(&scenario)));
    results.insert("tsirelson_bound".into(), TSIRELSON_BOUND.into());
    let convention = match tsirelson_eigenstates() {
        Ok(t) => json!({
            "found": true,
            "angles": t.angles,
            "lambda_min": t.lambda_min,
            "lambda_max": t.lambda_max,
            "expectation_min": t.expectation_min,
            "expectation_max": t.expectation_max,
            "residual_min": t.residual_min,
            "residual_max": t.residual_max,
            "state_min": state_json(&t.state_min),
            "state_max": state_json(&t.state_max),
        }),
        Err(Error::ConventionNotFound(best)) => json!({ "found": false, "best_residual": best }),
        Err(e) => return Err(e),
    };
    results.insert("convention".into(), convention);
    if args.optimize {
        let opt = optimize_angles(&facet, &scenario, None, SearchMode::Planar)?;
        results.insert(
            "optimized".into(),
            json!({
                "directions": directions_json(&opt.directions),
                "lambda_min": opt.report.lambda_min,
                "lambda_max": opt.report.lambda_max,
                "violation": opt.report.violation,
            }),
        );
    }
    Ok(Output::Json(Report::new(
        "chsh",
        json!({ "angles": angles, "optimize": args.optimize }),
        Value::Object(results),
    )))
}
