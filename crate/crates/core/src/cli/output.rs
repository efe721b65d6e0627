//! Tabular output rendered as CSV or JSON with fixed numeric formatting.

use serde_json::{Map, Number, Value};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// Format and precision shared by every command.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OutputSpec {
    pub format: Format,
    precision: usize,
}

pub const MIN_PRECISION: usize = 6;
pub const MAX_PRECISION: usize = 17;
pub const DEFAULT_PRECISION: usize = 12;

impl OutputSpec {
    pub fn new(format: Format, precision: usize) -> Result<Self> {
        if !(MIN_PRECISION..=MAX_PRECISION).contains(&precision) {
            return Err(Error::invalid(
                "precision",
                format!("must lie in [{MIN_PRECISION}, {MAX_PRECISION}], got {precision}"),
            ));
        }
        Ok(Self { format, precision })
    }

    pub fn precision(&self) -> usize {
        self.precision
    }
}

impl Default for OutputSpec {
    fn default() -> Self {
        Self {
            format: Format::Csv,
            precision: DEFAULT_PRECISION,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(u64),
    Num(f64),
    Text(String),
    Missing,
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Num(x)
    }
}

impl From<Option<f64>> for Cell {
    fn from(x: Option<f64>) -> Self {
        x.map_or(Cell::Missing, Cell::Num)
    }
}

impl From<u64> for Cell {
    fn from(x: u64) -> Self {
        Cell::Int(x)
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_owned())
    }
}

/// Scientific notation with `precision` significant digits, trailing mantissa zeros dropped.
pub fn format_number(x: f64, precision: usize) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    let s = format!("{:.*e}", precision - 1, x);
    let (mantissa, exponent) = s.split_once('e').expect("exponent form");
    let mantissa = if mantissa.contains('.') {
        mantissa.trim_end_matches('0').trim_end_matches('.')
    } else {
        mantissa
    };
    format!("{mantissa}e{exponent}")
}

/// A named table: one header, ordered rows.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub command: &'static str,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(command: &'static str, columns: Vec<&'static str>) -> Self {
        Self {
            command,
            columns,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len(), "row width");
        self.rows.push(row);
    }

    pub fn render(&self, spec: &OutputSpec) -> Result<String> {
        match spec.format {
            Format::Csv => self.to_csv(spec.precision),
            Format::Json => Ok(self.to_json(spec.precision)),
        }
    }

    fn to_csv(&self, precision: usize) -> Result<String> {
        let mut writer = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(Vec::new());
        let io = |e: csv::Error| Error::invalid("output", e.to_string());
        writer.write_record(&self.columns).map_err(io)?;
        for row in &self.rows {
            writer
                .write_record(row.iter().map(|cell| match cell {
                    Cell::Int(i) => i.to_string(),
                    Cell::Num(x) => format_number(*x, precision),
                    Cell::Text(s) => s.clone(),
                    Cell::Missing => String::new(),
                }))
                .map_err(io)?;
        }
        let bytes = writer.into_inner().map_err(|e| Error::invalid("output", e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }

    fn to_json(&self, precision: usize) -> String {
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let object: Map<String, Value> = self
                    .columns
                    .iter()
                    .zip(row)
                    .map(|(name, cell)| ((*name).to_owned(), json_cell(cell, precision)))
                    .collect();
                Value::Object(object)
            })
            .collect();
        let mut doc = Map::new();
        doc.insert("command".into(), Value::String(self.command.into()));
        doc.insert(
            "columns".into(),
            Value::Array(self.columns.iter().map(|c| Value::String((*c).into())).collect()),
        );
        doc.insert("rows".into(), Value::Array(rows));
        let mut out = serde_json::to_string_pretty(&Value::Object(doc)).expect("json serialization");
        out.push('\n');
        out
    }
}

fn json_cell(cell: &Cell, precision: usize) -> Value {
    match cell {
        Cell::Int(i) => Value::Number((*i).into()),
        Cell::Num(x) => format_number(*x, precision)
            .parse::<f64>()
            .ok()
            .and_then(Number::from_f64)
            .map_or(Value::Null, Value::Number),
        Cell::Text(s) => Value::String(s.clone()),
        Cell::Missing => Value::Null,
    }
}
