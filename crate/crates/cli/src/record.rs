//! Output records and their text encodings.
//!
//! Every number is printed in scientific notation with 12 significant
//! digits, independent of locale. CSV and JSON carry the same rounded values
//! as the table.

use serde_json::{Map, Number, Value};

/// 12 significant digits, scientific notation.
pub fn sci(x: f64) -> String {
    format!("{x:.11e}")
}

/// `x` rounded to the printed precision.
pub fn rounded(x: f64) -> f64 {
    sci(x).parse().expect("formatted float parses")
}

fn json_number(x: f64) -> Value {
    Number::from_f64(rounded(x)).map_or(Value::Null, Value::Number)
}

/// An ordered list of named numeric fields.
#[derive(Debug, Clone, PartialEq)]
pub struct Row(pub Vec<(&'static str, f64)>);

impl Row {
    pub fn get(&self, name: &str) -> Option<f64> {
        self.0.iter().find(|(n, _)| *n == name).map(|(_, v)| *v)
    }

    pub fn header(&self) -> String {
        self.0.iter().map(|(n, _)| *n).collect::<Vec<_>>().join(",")
    }

    pub fn csv(&self) -> String {
        self.0
            .iter()
            .map(|(_, v)| sci(*v))
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn json(&self) -> Value {
        Value::Object(
            self.0
                .iter()
                .map(|(n, v)| (n.to_string(), json_number(*v)))
                .collect::<Map<_, _>>(),
        )
    }

    /// Aligned `name value` lines.
    pub fn table(&self) -> String {
        let width = self.0.iter().map(|(n, _)| n.len()).max().unwrap_or(0);
        self.0
            .iter()
            .map(|(n, v)| format!("{n:<width$}  {}\n", sci(*v)))
            .collect()
    }
}

/// Render rows as CSV with a header line.
pub fn csv(rows: &[Row]) -> String {
    let mut out = String::new();
    if let Some(first) = rows.first() {
        out.push_str(&first.header());
        out.push('\n');
    }
    for r in rows {
        out.push_str(&r.csv());
        out.push('\n');
    }
    out
}

/// Render rows as a whitespace-aligned table with a header line.
pub fn table(rows: &[Row]) -> String {
    let Some(first) = rows.first() else {
        return String::new();
    };
    let widths: Vec<usize> = first.0.iter().map(|(n, _)| n.len().max(17)).collect();
    let mut out = String::new();
    let line = |cells: Vec<String>| {
        cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect::<Vec<_>>()
            .join("  ")
            + "\n"
    };
    out.push_str(&line(first.0.iter().map(|(n, _)| n.to_string()).collect()));
    for r in rows {
        out.push_str(&line(r.0.iter().map(|(_, v)| sci(*v)).collect()));
    }
    out
}

/// Parse CSV produced by [`csv`] back into (header, values) pairs.
pub fn parse_csv(text: &str) -> Result<Vec<Vec<(String, f64)>>, String> {
    let mut lines = text.lines();
    let header: Vec<&str> = lines.next().ok_or("empty CSV")?.split(',').collect();
    lines
        .map(|line| {
            let cells: Vec<&str> = line.split(',').collect();
            if cells.len() != header.len() {
                return Err(format!(
                    "row has {} cells, header has {}",
                    cells.len(),
                    header.len()
                ));
            }
            header
                .iter()
                .zip(cells)
                .map(|(h, c)| {
                    c.parse::<f64>()
                        .map(|v| (h.to_string(), v))
                        .map_err(|e| format!("{h}: {e}"))
                })
                .collect()
        })
        .collect()
}

/// One line of `sweep` or `clock` output. Field names are fixed; values are
/// SI (seconds, metres, joules) or Planck units depending on `--units`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OutputRecord {
    pub t_seconds: f64,
    pub dt_seconds: f64,
    pub dt_over_t: f64,
    pub dt_c_seconds: f64,
    pub r_meters: f64,
    pub r_s_meters: f64,
    pub energy_joules: f64,
    pub delta_e_joules: f64,
    pub fractional_de: f64,
}

impl OutputRecord {
    pub const FIELDS: [&'static str; 9] = [
        "t_seconds",
        "dt_seconds",
        "dt_over_t",
        "dt_c_seconds",
        "r_meters",
        "r_s_meters",
        "energy_joules",
        "delta_e_joules",
        "fractional_de",
    ];

    pub fn values(&self) -> [f64; 9] {
        [
            self.t_seconds,
            self.dt_seconds,
            self.dt_over_t,
            self.dt_c_seconds,
            self.r_meters,
            self.r_s_meters,
            self.energy_joules,
            self.delta_e_joules,
            self.fractional_de,
        ]
    }

    pub fn from_values(v: [f64; 9]) -> Self {
        Self {
            t_seconds: v[0],
            dt_seconds: v[1],
            dt_over_t: v[2],
            dt_c_seconds: v[3],
            r_meters: v[4],
            r_s_meters: v[5],
            energy_joules: v[6],
            delta_e_joules: v[7],
            fractional_de: v[8],
        }
    }

    /// Rebuild from a parsed row; `None` if any field is missing.
    pub fn from_named(fields: &[(String, f64)]) -> Option<Self> {
        let mut v = [0.0; 9];
        for (slot, name) in v.iter_mut().zip(Self::FIELDS) {
            *slot = fields.iter().find(|(n, _)| n == name)?.1;
        }
        Some(Self::from_values(v))
    }

    pub fn row(&self) -> Row {
        Row(Self::FIELDS.into_iter().zip(self.values()).collect())
    }

    /// The `bound` subset: t, Δt, Δt/t, Δt_c.
    pub fn bound_row(&self) -> Row {
        Row(Self::FIELDS[..4]
            .iter()
            .copied()
            .zip(self.values())
            .collect())
    }
}
