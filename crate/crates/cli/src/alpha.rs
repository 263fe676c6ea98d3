//! α values given as decimal strings, kept verbatim for echoing.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

/// An α parsed from text. `text` is what the user typed; `value` is the
/// nearest double.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Alpha {
    pub text: String,
    #[serde(skip)]
    pub value: f64,
}

impl FromStr for Alpha {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let text = s.trim();
        let value: f64 = text.parse().map_err(|_| format!("alpha {text:?} is not a decimal number"))?;
        if !(0.0..1.0).contains(&value) {
            return Err(format!("alpha = {text} is outside [0, 1)"));
        }
        Ok(Alpha { text: text.to_owned(), value })
    }
}

impl fmt::Display for Alpha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

/// A decimal as `digits / 10^scale`.
fn parse_fixed(s: &str) -> Result<(i64, u32), String> {
    let s = s.trim();
    let (int, frac) = s.split_once('.').unwrap_or((s, ""));
    let digits = format!("{int}{frac}");
    let value = digits.parse::<i64>().map_err(|_| format!("{s:?} is not a plain decimal"))?;
    Ok((value, frac.len() as u32))
}

fn render_fixed(value: i64, scale: u32) -> String {
    if scale == 0 {
        return value.to_string();
    }
    let p = 10i64.pow(scale);
    let frac = format!("{:0width$}", value.rem_euclid(p), width = scale as usize);
    let frac = frac.trim_end_matches('0');
    let frac = if frac.is_empty() { "0" } else { frac };
    format!("{}.{frac}", value.div_euclid(p))
}

/// Expands `start:stop:step` into its points, computed in exact decimal
/// arithmetic so that `0.5:0.95:0.05` ends at exactly `0.95`.
pub fn parse_grid(spec: &str) -> Result<Vec<Alpha>, String> {
    let parts: Vec<&str> = spec.split(':').collect();
    let [start, stop, step] = parts[..] else {
        return Err(format!("alpha grid {spec:?} must look like start:stop:step"));
    };
    let fixed = [parse_fixed(start)?, parse_fixed(stop)?, parse_fixed(step)?];
    let scale = fixed.iter().map(|&(_, s)| s).max().unwrap_or(0);
    let [start, stop, step] = fixed.map(|(v, s)| v * 10i64.pow(scale - s));
    if step <= 0 {
        return Err("alpha grid step must be positive".into());
    }
    if stop < start {
        return Err("alpha grid stop is below its start".into());
    }
    let count = (stop - start) / step + 1;
    if count > 10_000 {
        return Err("alpha grid has more than 10000 points".into());
    }
    (0..count).map(|i| render_fixed(start + i * step, scale).parse()).collect()
}
