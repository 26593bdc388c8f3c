use serde_json::{Map, Number, Value};

use super::CliError;

/// A table cell: integers print as-is, reals with 12 significant digits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Cell {
    Int(i64),
    Real(f64),
}

/// Scientific notation with 12 significant digits; `-0` prints as `0`.
pub fn format_real(x: f64) -> String {
    format!("{:.11e}", x + 0.0)
}

impl Cell {
    fn text(&self) -> String {
        match *self {
            Cell::Int(i) => i.to_string(),
            Cell::Real(x) => format_real(x),
        }
    }

    fn json(&self) -> Result<Value, CliError> {
        match *self {
            Cell::Int(i) => Ok(Value::from(i)),
            Cell::Real(x) => {
                // round through the printed form so CSV and JSON agree
                let rounded: f64 = format_real(x).parse().expect("formatted float parses");
                Number::from_f64(rounded)
                    .map(Value::Number)
                    .ok_or_else(|| CliError::Output(format!("{x} is not representable in JSON")))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: Vec<&'static str>) -> Self {
        Table { columns, rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> Result<String, CliError> {
        let mut writer = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| CliError::Output(e.to_string());
        writer.write_record(&self.columns).map_err(io)?;
        for row in &self.rows {
            writer.write_record(row.iter().map(Cell::text)).map_err(io)?;
        }
        let bytes = writer.into_inner().map_err(|e| CliError::Output(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| CliError::Output(e.to_string()))
    }

    pub fn to_json(&self) -> Result<String, CliError> {
        let mut array = Vec::with_capacity(self.rows.len());
        for row in &self.rows {
            let mut object = Map::new();
            for (name, cell) in self.columns.iter().zip(row) {
                object.insert(name.to_string(), cell.json()?);
            }
            array.push(Value::Object(object));
        }
        let mut text = serde_json::to_string_pretty(&Value::Array(array))
            .map_err(|e| CliError::Output(e.to_string()))?;
        text.push('\n');
        Ok(text)
    }
}
