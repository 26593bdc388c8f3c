use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use super::{CliError, OutputFormat};

const MAX_SWEEP_POINTS: usize = 1_000_000;

/// Parameter values for one subcommand, merged from flags and config file.
#[derive(Debug, Clone)]
pub struct Params {
    command: &'static str,
    values: BTreeMap<String, String>,
    allowed: Vec<&'static str>,
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn read_config(path: &Path) -> Result<Vec<(String, String)>, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read config {}: {e}", path.display())))?;
    let mut entries = Vec::new();
    for (number, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| {
            usage(format!("config line {}: expected `key = value`", number + 1))
        })?;
        let key = key.trim().trim_start_matches("--").replace('_', "-");
        entries.push((key, value.trim().to_string()));
    }
    Ok(entries)
}

/// Parses `x` or an inclusive sweep `a:step:b` into its points.
pub fn parse_sweep(text: &str) -> Result<Vec<f64>, String> {
    let parts: Vec<&str> = text.split(':').collect();
    let number = |s: &str| -> Result<f64, String> {
        let v: f64 = s.trim().parse().map_err(|_| format!("'{s}' is not a number"))?;
        if v.is_finite() {
            Ok(v)
        } else {
            Err(format!("'{s}' is not finite"))
        }
    };
    match parts.as_slice() {
        [single] => Ok(vec![number(single)?]),
        [a, step, b] => {
            let (a, step, b) = (number(a)?, number(step)?, number(b)?);
            if step == 0.0 || (b - a) * step < 0.0 {
                return Err(format!("sweep {text}: step must move from {a} toward {b}"));
            }
            let span = (b - a) / step;
            if span + 1.0 > MAX_SWEEP_POINTS as f64 {
                return Err(format!("sweep {text} has more than {MAX_SWEEP_POINTS} points"));
            }
            // tolerate rounding in (b - a)/step so the end point is kept
            let count = (span + 1e-9).floor() as usize + 1;
            Ok((0..count).map(|i| a + i as f64 * step).collect())
        }
        _ => Err(format!("'{text}' is neither a number nor a sweep a:step:b")),
    }
}

impl Params {
    pub(super) fn assemble(
        command: &'static str,
        flags: Vec<(&'static str, Option<String>)>,
        config: Option<&Path>,
    ) -> Result<Self, CliError> {
        let allowed: Vec<&'static str> = flags.iter().map(|(k, _)| *k).collect();
        let mut values = BTreeMap::new();
        if let Some(path) = config {
            for (key, value) in read_config(path)? {
                let known = allowed.contains(&key.as_str()) || key == "format" || key == "out";
                if !known {
                    return Err(usage(format!("config key '{key}' is not used by {command}")));
                }
                values.insert(key, value);
            }
        }
        for (key, value) in flags {
            if let Some(v) = value {
                values.insert(key.to_string(), v);
            }
        }
        Ok(Params { command, values, allowed })
    }

    /// Builds parameters directly from `key -> value` pairs.
    pub fn from_pairs(command: &'static str, pairs: &[(&'static str, &str)]) -> Self {
        Params {
            command,
            values: pairs.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect(),
            allowed: pairs.iter().map(|(k, _)| *k).collect(),
        }
    }

    pub fn has(&self, key: &str) -> bool {
        self.values.contains_key(key)
    }

    fn text(&self, key: &str) -> Result<&str, CliError> {
        debug_assert!(self.allowed.contains(&key) || !self.has(key));
        self.values
            .get(key)
            .map(String::as_str)
            .ok_or_else(|| usage(format!("{} requires --{key}", self.command)))
    }

    pub fn real(&self, key: &str) -> Result<f64, CliError> {
        let points = self.sweep(key)?;
        match points.as_slice() {
            [v] => Ok(*v),
            _ => Err(usage(format!("--{key} takes a single value, not a sweep"))),
        }
    }

    pub fn real_or(&self, key: &str, default: f64) -> Result<f64, CliError> {
        if self.has(key) {
            self.real(key)
        } else {
            Ok(default)
        }
    }

    pub fn sweep(&self, key: &str) -> Result<Vec<f64>, CliError> {
        parse_sweep(self.text(key)?).map_err(|e| usage(format!("--{key}: {e}")))
    }

    pub fn integer(&self, key: &str) -> Result<u32, CliError> {
        let text = self.text(key)?;
        text.trim()
            .parse()
            .map_err(|_| usage(format!("--{key}: '{text}' is not a nonnegative integer")))
    }

    pub fn integer_or(&self, key: &str, default: u32) -> Result<u32, CliError> {
        if self.has(key) {
            self.integer(key)
        } else {
            Ok(default)
        }
    }

    pub fn word_or<'a>(&'a self, key: &str, default: &'a str) -> &'a str {
        self.values.get(key).map(String::as_str).unwrap_or(default)
    }

    pub(super) fn output_format(&self) -> Result<OutputFormat, CliError> {
        match self.values.get("format").map(|s| s.to_ascii_lowercase()) {
            None => Ok(OutputFormat::Csv),
            Some(f) if f == "csv" => Ok(OutputFormat::Csv),
            Some(f) if f == "json" => Ok(OutputFormat::Json),
            Some(f) => Err(usage(format!("unknown format '{f}' (csv or json)"))),
        }
    }

    pub(super) fn output_path(&self) -> Option<PathBuf> {
        self.values.get("out").map(PathBuf::from)
    }
}
