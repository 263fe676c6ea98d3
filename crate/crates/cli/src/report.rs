//! Run reports and number formatting.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Serialize)]
pub struct Versions {
    pub cli: &'static str,
    pub library: &'static str,
}

/// The machine-readable record of one invocation.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: String,
    /// Arguments as given; α values keep their original spelling.
    pub inputs: Value,
    pub results: Value,
    /// Tolerances under which the results were computed and asserted.
    pub tolerances: Value,
    pub passed: bool,
    pub counterexample: Option<String>,
    pub seed: Option<u64>,
    pub versions: Versions,
    pub wall_time_s: f64,
}

impl RunReport {
    pub fn new(command: &str, inputs: Value) -> Self {
        RunReport {
            command: command.to_owned(),
            inputs,
            results: Value::Null,
            tolerances: Value::Object(Default::default()),
            passed: true,
            counterexample: None,
            seed: None,
            versions: Versions { cli: env!("CARGO_PKG_VERSION"), library: tricyclic_alpha::VERSION },
            wall_time_s: 0.0,
        }
    }
}

/// `x` with 17 significant digits, positional unless the exponent is extreme.
pub fn sig17(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{x:.16e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    let negative = mantissa.starts_with('-');
    let digits: String = mantissa.chars().filter(char::is_ascii_digit).collect();
    if !(-5..17).contains(&exp) {
        return sci;
    }
    let mut out = String::new();
    if negative {
        out.push('-');
    }
    if exp >= 0 {
        let split = exp as usize + 1;
        out.push_str(&digits[..split]);
        out.push('.');
        out.push_str(if split < digits.len() { &digits[split..] } else { "0" });
    } else {
        out.push_str("0.");
        out.push_str(&"0".repeat((-exp - 1) as usize));
        out.push_str(&digits);
    }
    out
}

/// Aligned `key  value` lines for human output.
#[derive(Default)]
pub struct Text(String);

impl Text {
    pub fn row(&mut self, key: &str, value: impl std::fmt::Display) -> &mut Self {
        let _ = writeln!(self.0, "{key:<24}{value}");
        self
    }

    pub fn num(&mut self, key: &str, value: f64) -> &mut Self {
        self.row(key, sig17(value))
    }

    pub fn raw(&mut self, line: &str) -> &mut Self {
        self.0.push_str(line);
        if !line.ends_with('\n') {
            self.0.push('\n');
        }
        self
    }

    pub fn finish(self) -> String {
        self.0
    }
}
