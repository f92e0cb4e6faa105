use rayon::prelude::*;
use steadycoh::generator::{build_generator, build_generator_allowing_uncoupled};
use steadycoh::observables::report;
use steadycoh::{solver, BathSetup, Error, SteadyReport, SystemParams};

use crate::config::SweepSpec;
use crate::CliError;

/// One evaluated grid point.
#[derive(Debug, Clone, PartialEq)]
pub struct Row {
    pub axis1: Option<f64>,
    pub axis2: Option<f64>,
    pub outcome: Result<SteadyReport, String>,
}

/// Solve the steady state at fixed `(T_a, T_b, Δ)`.
pub fn evaluate(spec: &SweepSpec, ta: f64, tb: f64, delta: f64) -> Result<SteadyReport, Error> {
    let params = SystemParams::from_mean_and_detuning(spec.omega, delta, spec.xi)?;
    let baths = BathSetup::new(ta, tb, spec.gamma, spec.channels)?;
    let g = if spec.allow_uncoupled {
        build_generator_allowing_uncoupled(&params, &baths, spec.approximation)?
    } else {
        build_generator(&params, &baths, spec.approximation)?
    };
    let rho = solver::solve(&g, spec.degenerate)?;
    Ok(report(&rho, &g))
}

fn evaluate_row(spec: &SweepSpec, axis1: Option<f64>, axis2: Option<f64>) -> Row {
    let (ta, tb, delta) = spec.resolve(axis1, axis2);
    Row { axis1, axis2, outcome: evaluate(spec, ta, tb, delta).map_err(|e| e.to_string()) }
}

/// A single steady state; the spec must not have axes.
pub fn run_point(spec: &SweepSpec) -> Result<Row, CliError> {
    if spec.axis1.is_some() {
        return Err(CliError::Config("`point` takes no axes; use `sweep`".into()));
    }
    Ok(evaluate_row(spec, None, None))
}

/// Every grid point in row-major order (axis2 fastest).
pub fn grid(spec: &SweepSpec) -> Vec<(Option<f64>, Option<f64>)> {
    match (&spec.axis1, &spec.axis2) {
        (Some(a), Some(b)) => a.values().flat_map(|x| b.values().map(move |y| (Some(x), Some(y)))).collect(),
        (Some(a), None) => a.values().map(|x| (Some(x), None)).collect(),
        _ => Vec::new(),
    }
}

/// Evaluate the grid, in parallel when `threads` allows, keeping row order.
pub fn run_sweep(spec: &SweepSpec, threads: Option<usize>) -> Result<Vec<Row>, CliError> {
    if spec.axis1.is_none() {
        return Err(CliError::Config("`sweep` needs at least axis1".into()));
    }
    let points = grid(spec);
    let work = || points.par_iter().map(|&(a, b)| evaluate_row(spec, a, b)).collect::<Vec<_>>();
    match threads {
        Some(0) => Err(CliError::Config("--threads must be >= 1".into())),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| CliError::Config(format!("cannot start {n} worker threads: {e}")))?;
            Ok(pool.install(work))
        }
        None => Ok(work()),
    }
}

/// Number of rows whose solve failed.
pub fn failures(rows: &[Row]) -> usize {
    rows.iter().filter(|r| r.outcome.is_err()).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::RawConfig;

    fn spec(extra: &str) -> SweepSpec {
        let text = format!("case = \"A\"\nomega = 30.0\nxi = 2.0\n{extra}");
        SweepSpec::try_from(RawConfig::from_toml(&text).unwrap()).unwrap()
    }

    #[test]
    fn grid_order_has_axis2_fastest() {
        let s = spec("axis1 = \"Delta:-1:1:2\"\naxis2 = \"Ta:1:3:3\"\ndelta_t = 5.0\n");
        let g = grid(&s);
        assert_eq!(g.len(), 6);
        assert_eq!(g[0], (Some(-1.0), Some(1.0)));
        assert_eq!(g[1], (Some(-1.0), Some(2.0)));
        assert_eq!(g[3], (Some(1.0), Some(1.0)));
    }

    #[test]
    fn point_rejects_axes_and_sweep_requires_them() {
        let s = spec("axis1 = \"Ta:1:3:3\"\ndelta_t = 5.0\n");
        assert!(run_point(&s).is_err());
        let s = spec("ta = 10.0\ndelta_t = 5.0\n");
        assert!(run_sweep(&s, None).is_err());
        assert!(run_point(&s).unwrap().outcome.is_ok());
    }
}
