//! Row rendering shared by the CSV and JSON writers.

use std::io::Write;

use anyhow::Result;
use graph_energy::{BoundReport, SweepRow};
use serde_json::{Map, Number, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(u64),
    Float(f64),
    Bool(bool),
    Text(String),
    Empty,
}

impl From<Option<f64>> for Cell {
    fn from(v: Option<f64>) -> Self {
        v.map_or(Cell::Empty, Cell::Float)
    }
}

/// `printf("%.12g")` without going through libc, so output never depends
/// on the locale.
pub fn format_g12(x: f64) -> String {
    const DIGITS: i32 = 12;
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf" } else { "-inf" }.into();
    }
    if x == 0.0 {
        return if x.is_sign_negative() { "-0" } else { "0" }.into();
    }
    // exponent after rounding to DIGITS significant digits
    let sci = format!("{:.*e}", (DIGITS - 1) as usize, x);
    let (mantissa, exp) = sci.split_once('e').unwrap();
    let exp: i32 = exp.parse().unwrap();
    if (-4..DIGITS).contains(&exp) {
        let decimals = (DIGITS - 1 - exp) as usize;
        trim_zeros(format!("{:.*}", decimals, x))
    } else {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{sign}{:02}", trim_zeros(mantissa.to_owned()), exp.abs())
    }
}

fn trim_zeros(s: String) -> String {
    if !s.contains('.') {
        return s;
    }
    s.trim_end_matches('0').trim_end_matches('.').to_owned()
}

impl Cell {
    fn to_csv(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Float(v) => format_g12(*v),
            Cell::Bool(v) => v.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Empty => String::new(),
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Cell::Int(v) => Value::from(*v),
            Cell::Float(v) => Number::from_f64(*v).map_or(Value::Null, Value::Number),
            Cell::Bool(v) => Value::Bool(*v),
            Cell::Text(s) => Value::String(s.clone()),
            Cell::Empty => Value::Null,
        }
    }
}

pub const ANALYZE_COLUMNS: [&str; 18] = [
    "n",
    "m",
    "max_degree",
    "zagreb",
    "quadrilaterals",
    "m2",
    "m4",
    "a",
    "b",
    "c",
    "r_star",
    "clamped",
    "energy",
    "theorem1_bound",
    "van_dam_bound",
    "tightness",
    "classification",
    "connected",
];

pub const LP_COLUMNS: [&str; 2] = ["lp_upper", "lp_lower"];

pub const SWEEP_COLUMNS: [&str; 8] = [
    "graph",
    "degree",
    "lp_upper",
    "lp_lower",
    "certified",
    "theorem1_bound",
    "energy",
    "connected",
];

pub fn analyze_row(r: &BoundReport, with_lp: bool) -> Vec<Cell> {
    let s = &r.summary;
    let mut row = vec![
        Cell::Int(s.n as u64),
        Cell::Int(s.m),
        Cell::Int(s.delta_max as u64),
        Cell::Int(s.zagreb),
        Cell::Int(s.quad_count),
        Cell::Int(s.m2),
        Cell::Int(s.m4),
        r.triple.map(|t| t.a).into(),
        r.triple.map(|t| t.b).into(),
        r.triple.map(|t| t.c).into(),
        r.optimal_r.into(),
        Cell::Bool(r.r_clamped),
        Cell::Float(r.energy),
        Cell::Float(r.theorem1_bound),
        r.van_dam_bound.into(),
        Cell::Float(r.tightness),
        Cell::Text(r.classification.tag.to_string()),
        Cell::Bool(r.connected),
    ];
    if with_lp {
        row.push(r.lp_upper.into());
        row.push(r.lp_lower.into());
    }
    row
}

pub fn sweep_row(
    index: usize,
    row: &SweepRow,
    bound: f64,
    energy: f64,
    connected: bool,
) -> Vec<Cell> {
    vec![
        Cell::Int(index as u64),
        Cell::Int(row.degree as u64),
        Cell::Float(row.upper),
        Cell::Float(row.lower),
        Cell::Bool(row.certified),
        Cell::Float(bound),
        Cell::Float(energy),
        Cell::Bool(connected),
    ]
}

/// Streams rows as CSV or as one JSON array of flat objects.
pub struct TableWriter<W: Write> {
    format: Format,
    columns: Vec<&'static str>,
    csv: Option<csv::Writer<W>>,
    json: Option<W>,
    rows: usize,
}

impl<W: Write> TableWriter<W> {
    pub fn new(out: W, format: Format, columns: Vec<&'static str>) -> Result<Self> {
        let mut w = TableWriter {
            format,
            columns,
            csv: None,
            json: None,
            rows: 0,
        };
        match format {
            Format::Csv => {
                let mut csv = csv::Writer::from_writer(out);
                csv.write_record(&w.columns)?;
                w.csv = Some(csv);
            }
            Format::Json => {
                let mut out = out;
                out.write_all(b"[")?;
                w.json = Some(out);
            }
        }
        Ok(w)
    }

    pub fn write(&mut self, cells: &[Cell]) -> Result<()> {
        debug_assert_eq!(cells.len(), self.columns.len());
        match self.format {
            Format::Csv => {
                let csv = self.csv.as_mut().unwrap();
                csv.write_record(cells.iter().map(Cell::to_csv))?;
            }
            Format::Json => {
                let out = self.json.as_mut().unwrap();
                let object: Map<String, Value> = self
                    .columns
                    .iter()
                    .zip(cells)
                    .map(|(k, v)| (k.to_string(), v.to_json()))
                    .collect();
                out.write_all(if self.rows == 0 { b"\n" } else { b",\n" })?;
                serde_json::to_writer(&mut *out, &Value::Object(object))?;
            }
        }
        self.rows += 1;
        Ok(())
    }

    pub fn finish(self) -> Result<()> {
        if let Some(mut csv) = self.csv {
            csv.flush()?;
        }
        if let Some(mut out) = self.json {
            out.write_all(if self.rows == 0 { b"]\n" } else { b"\n]\n" })?;
            out.flush()?;
        }
        Ok(())
    }
}
