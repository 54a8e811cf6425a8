use chronobound::bound::{self, OptimalClock};
use chronobound::verify::{verify_optima, VerificationReport};
use chronobound::{Constants, Dimension, Quantity};
use serde_json::{json, Value};

use crate::args::{Cli, Command, Format, Units};
use crate::record::{self, sci, OutputRecord, Row};

/// Exit status for a scientific verification failure.
pub const EXIT_VERIFY_FAILED: u8 = 1;
/// Exit status for bad arguments or unreadable inputs.
pub const EXIT_USAGE: u8 = 2;

/// Text for stdout plus the process exit status.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub stdout: String,
    pub status: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { stdout, status: 0 }
    }
}

/// A usage error, reported as a single line on stderr with exit status 2.
#[derive(Debug, Clone, PartialEq)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<chronobound::Error> for UsageError {
    fn from(e: chronobound::Error) -> Self {
        Self(e.to_string())
    }
}

type Result<T> = std::result::Result<T, UsageError>;

struct Context {
    constants: Constants,
    units: Units,
    format: Format,
}

impl Context {
    fn input(&self, name: &str, value: f64, dim: Dimension) -> Result<Quantity> {
        if !(value.is_finite() && value > 0.0) {
            return Err(UsageError(format!(
                "--{name} must be a positive number, got {value}"
            )));
        }
        Ok(match self.units {
            Units::Si => self.constants.to_planck(value, dim)?,
            Units::Planck => Quantity::new(value, dim)?,
        })
    }

    fn output(&self, q: &Quantity) -> f64 {
        match self.units {
            Units::Si => self.constants.to_si(q),
            Units::Planck => q.magnitude(),
        }
    }

    fn meta(&self) -> Value {
        json!({
            "units": self.units.label(),
            "constants": serde_json::to_value(self.constants).expect("constants serialize"),
        })
    }

    fn clock_record(&self, t_input: f64) -> Result<OutputRecord> {
        let t = self.input("t", t_input, Dimension::TIME)?;
        let c: OptimalClock = bound::saturating_clock(&t)?;
        Ok(OutputRecord {
            t_seconds: t_input,
            dt_seconds: self.output(&c.dt_min),
            dt_over_t: c.fractional_dt.magnitude(),
            dt_c_seconds: self.output(&c.dt_c_opt),
            r_meters: self.output(&c.r),
            r_s_meters: self.output(&c.r_s),
            energy_joules: self.output(&c.energy),
            delta_e_joules: self.output(&c.delta_e),
            fractional_de: c.fractional_de.magnitude(),
        })
    }

    fn single(&self, command: &str, row: Row) -> String {
        match self.format {
            Format::Table => row.table(),
            Format::Csv => record::csv(&[row]),
            Format::Json => json_doc(json!({
                "command": command,
                "meta": self.meta(),
                "record": row.json(),
            })),
        }
    }
}

fn json_doc(v: Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("json renders");
    s.push('\n');
    s
}

/// Log-spaced points from `lo` to `hi`, both included exactly.
pub fn log_grid(lo: f64, hi: f64, points: usize) -> Vec<f64> {
    let (a, b) = (lo.log10(), hi.log10());
    let last = points - 1;
    (0..points)
        .map(|i| match i {
            0 => lo,
            i if i == last => hi,
            i => 10f64.powf(a + (b - a) * i as f64 / last as f64),
        })
        .collect()
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let constants = match &cli.constants {
        Some(path) => Constants::from_path(path)?,
        None => Constants::codata2018(),
    };
    let ctx = Context {
        constants,
        units: cli.units,
        format: cli.format,
    };

    match cli.command {
        Command::Bound { t } => {
            let rec = ctx.clock_record(t)?;
            Ok(Outcome::ok(ctx.single("bound", rec.bound_row())))
        }
        Command::Clock { t } => {
            let rec = ctx.clock_record(t)?;
            Ok(Outcome::ok(ctx.single("clock", rec.row())))
        }
        Command::Sweep {
            t_min,
            t_max,
            points,
        } => sweep(&ctx, t_min, t_max, points),
        Command::Compare { t, mass } => compare(&ctx, t, mass),
        Command::Verify { rel_tol } => verify(&ctx, rel_tol),
    }
}

fn sweep(ctx: &Context, t_min: f64, t_max: f64, points: usize) -> Result<Outcome> {
    if !(t_min.is_finite() && t_max.is_finite() && t_min > 0.0 && t_min < t_max) {
        return Err(UsageError(format!(
            "sweep needs 0 < --t-min < --t-max, got [{t_min}, {t_max}]"
        )));
    }
    if points < 2 {
        return Err(UsageError(format!(
            "--points must be at least 2, got {points}"
        )));
    }
    let rows = log_grid(t_min, t_max, points)
        .into_iter()
        .map(|t| ctx.clock_record(t).map(|r| r.row()))
        .collect::<Result<Vec<_>>>()?;
    let stdout = match ctx.format {
        Format::Table => record::table(&rows),
        Format::Csv => record::csv(&rows),
        Format::Json => json_doc(json!({
            "command": "sweep",
            "meta": ctx.meta(),
            "rows": rows.iter().map(Row::json).collect::<Vec<_>>(),
        })),
    };
    Ok(Outcome::ok(stdout))
}

fn compare(ctx: &Context, t_input: f64, mass_input: f64) -> Result<Outcome> {
    let t = ctx.input("t", t_input, Dimension::TIME)?;
    let mass = ctx.input("mass", mass_input, Dimension::MASS)?;
    let refs = bound::reference_bounds(&t, &mass)?;
    let row = Row(vec![
        ("t_seconds", t_input),
        ("mass_kg", mass_input),
        ("salecker_wigner", ctx.output(&refs.salecker_wigner)),
        ("ng_lloyd", ctx.output(&refs.ng_lloyd)),
        ("this_paper", ctx.output(&refs.dilation_bound)),
    ]);
    let stdout = match ctx.format {
        Format::Json => json_doc(json!({
            "command": "compare",
            "meta": {
                "units": ctx.units.label(),
                "constants": serde_json::to_value(ctx.constants).expect("constants serialize"),
                "ng_lloyd": "scaling reference, constant conventional",
            },
            "record": row.json(),
        })),
        Format::Table => row.table() + "# ng_lloyd: scaling reference, constant conventional\n",
        Format::Csv => record::csv(&[row]),
    };
    Ok(Outcome::ok(stdout))
}

fn verify(ctx: &Context, rel_tol: f64) -> Result<Outcome> {
    let report = verify_optima(rel_tol, &ctx.constants)?;
    let status = if report.passed() {
        0
    } else {
        EXIT_VERIFY_FAILED
    };
    let stdout = match ctx.format {
        Format::Table => verify_table(&report),
        Format::Csv => {
            let mut s = String::from("check,oracle,closed_form,rel_error,evaluations,passed\n");
            for c in &report.checks {
                s.push_str(&format!(
                    "{},{},{},{},{},{}\n",
                    c.name,
                    sci(c.oracle),
                    sci(c.closed_form),
                    sci(c.rel_error),
                    c.evaluations,
                    c.passed
                ));
            }
            s
        }
        Format::Json => json_doc(json!({
            "command": "verify",
            "meta": ctx.meta(),
            "rel_tol": report.rel_tol,
            "passed": report.passed(),
            "checks": report.checks,
        })),
    };
    Ok(Outcome { stdout, status })
}

fn verify_table(report: &VerificationReport) -> String {
    let width = report
        .checks
        .iter()
        .map(|c| c.name.len())
        .max()
        .unwrap_or(0);
    let mut s = String::new();
    for c in &report.checks {
        s.push_str(&format!(
            "{}  {:<width$}  oracle={}  closed={}  rel_err={}  evals={}\n",
            if c.passed { "PASS" } else { "FAIL" },
            c.name,
            sci(c.oracle),
            sci(c.closed_form),
            sci(c.rel_error),
            c.evaluations,
        ));
    }
    let passed = report.checks.iter().filter(|c| c.passed).count();
    s.push_str(&format!(
        "{passed}/{} checks passed at rel_tol {}\n",
        report.checks.len(),
        sci(report.rel_tol)
    ));
    s
}
