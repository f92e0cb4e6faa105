use std::io::Write;

use crate::config::Output;
use crate::sweep::Row;
use crate::CliError;

pub const HEADER: [&str; 13] = [
    "axis1",
    "axis2",
    "rho11",
    "rho22",
    "rho33",
    "rho44",
    "rho32_re",
    "rho32_im",
    "coherence_abs",
    "flux12",
    "residual",
    "min_eig",
    "error",
];

/// Twelve significant digits in scientific notation; independent of locale.
pub fn format_float(x: f64) -> String {
    format!("{x:.11e}")
}

fn field(x: Option<f64>) -> String {
    x.map(format_float).unwrap_or_default()
}

/// The 13 CSV fields of a row; columns not in `outputs` are left empty.
pub fn record(row: &Row, outputs: &[Output]) -> [String; 13] {
    let mut rec: [String; 13] = Default::default();
    rec[0] = field(row.axis1);
    rec[1] = field(row.axis2);
    match &row.outcome {
        Ok(r) => {
            let want = |o: Output| outputs.contains(&o);
            if want(Output::Populations) {
                for k in 0..4 {
                    rec[2 + k] = format_float(r.populations[k]);
                }
            }
            if want(Output::Rho32Re) {
                rec[6] = format_float(r.rho32.re);
            }
            if want(Output::Rho32Im) {
                rec[7] = format_float(r.rho32.im);
            }
            if want(Output::CoherenceAbs) {
                rec[8] = format_float(r.coherence_abs);
            }
            if want(Output::Flux) {
                rec[9] = format_float(r.flux_12);
            }
            rec[10] = format_float(r.residual);
            rec[11] = format_float(r.positivity_min_eig);
        }
        Err(msg) => rec[12] = msg.clone(),
    }
    rec
}

pub fn write_csv<W: Write>(out: W, rows: &[Row], outputs: &[Output]) -> Result<(), CliError> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
    w.write_record(HEADER)?;
    for row in rows {
        w.write_record(record(row, outputs))?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;
    use steadycoh::SteadyReport;

    fn report() -> SteadyReport {
        SteadyReport {
            populations: [0.1, 0.2, 0.3, 0.4],
            rho32: Complex64::new(0.05, -0.025),
            coherence_abs: 0.055_901_699_437_494_74,
            flux_12: 0.2,
            positivity_min_eig: 0.01,
            residual: 1e-17,
        }
    }

    #[test]
    fn floats_have_twelve_significant_digits() {
        assert_eq!(format_float(0.110_236_097_065_955_44), "1.10236097066e-1");
        assert_eq!(format_float(-0.0), "-0.00000000000e0");
        assert_eq!(format_float(100.0), "1.00000000000e2");
    }

    #[test]
    fn csv_layout() {
        let rows = vec![
            Row { axis1: Some(1.0), axis2: None, outcome: Ok(report()) },
            Row { axis1: Some(2.0), axis2: None, outcome: Err("solver failed, badly".into()) },
        ];
        let mut buf = Vec::new();
        write_csv(&mut buf, &rows, &[Output::CoherenceAbs]).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], HEADER.join(","));
        assert_eq!(lines[1], "1.00000000000e0,,,,,,,,5.59016994375e-2,,1.00000000000e-17,1.00000000000e-2,");
        assert_eq!(lines[2], "2.00000000000e0,,,,,,,,,,,,\"solver failed, badly\"");
    }
}
