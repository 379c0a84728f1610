//! JSON / text reports. Floats are written with 17 significant digits so a
//! report round-trips every `f64` exactly.

use std::fmt::Write as _;

use schwarzian_lab::certify::Check;
use schwarzian_lab::{Complex64, NormReport};
use serde::{Serialize, Serializer};
use serde_json::value::RawValue;

/// `f64` serialized as a 17-significant-digit JSON number (`null` if not finite).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct F17(pub f64);

impl F17 {
    pub fn text(self) -> String {
        if self.0.is_finite() {
            format!("{:.16e}", self.0)
        } else {
            "null".to_string()
        }
    }
}

impl Serialize for F17 {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let raw = RawValue::from_string(self.text()).map_err(serde::ser::Error::custom)?;
        raw.serialize(s)
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum Field {
    Num(F17),
    Complex([F17; 2]),
    Int(u64),
    Bool(bool),
    Text(String),
}

impl From<f64> for Field {
    fn from(v: f64) -> Self {
        Field::Num(F17(v))
    }
}

impl From<Complex64> for Field {
    fn from(v: Complex64) -> Self {
        Field::Complex([F17(v.re), F17(v.im)])
    }
}

impl From<usize> for Field {
    fn from(v: usize) -> Self {
        Field::Int(v as u64)
    }
}

impl From<bool> for Field {
    fn from(v: bool) -> Self {
        Field::Bool(v)
    }
}

impl From<String> for Field {
    fn from(v: String) -> Self {
        Field::Text(v)
    }
}

impl Field {
    fn text(&self) -> String {
        match self {
            Field::Num(x) => x.text(),
            Field::Complex([re, im]) => complex_text(Complex64::new(re.0, im.0)),
            Field::Int(n) => n.to_string(),
            Field::Bool(b) => b.to_string(),
            Field::Text(s) => s.clone(),
        }
    }
}

pub fn complex_text(z: Complex64) -> String {
    let sign = if z.im.is_sign_negative() { '-' } else { '+' };
    format!("{}{sign}{}i", F17(z.re).text(), F17(z.im.abs()).text())
}

#[derive(Debug, Clone, Serialize)]
pub struct Peak {
    pub r: F17,
    pub theta: F17,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckOut {
    pub name: String,
    pub passed: bool,
    pub worst_slack: Option<F17>,
    pub tolerance: F17,
    pub detail: String,
}

impl From<&Check> for CheckOut {
    fn from(c: &Check) -> Self {
        Self {
            name: c.name.to_string(),
            passed: c.passed,
            worst_slack: c.worst_slack.map(F17),
            tolerance: F17(c.tolerance),
            detail: c.detail.clone(),
        }
    }
}

struct Values<'a>(&'a [(&'static str, Field)]);

impl Serialize for Values<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_map(self.0.iter().map(|(k, v)| (*k, v)))
    }
}

/// Common report layout; command-specific values go in `values`.
#[derive(Debug, Clone)]
pub struct Report {
    pub command: &'static str,
    pub function: Option<String>,
    pub class: Option<String>,
    pub norm_estimate: Option<F17>,
    pub theoretical_bound: Option<F17>,
    pub slack: Option<F17>,
    pub peak: Option<Peak>,
    pub extrapolated: Option<bool>,
    pub checks: Vec<CheckOut>,
    pub seed: u64,
    pub values: Vec<(&'static str, Field)>,
}

impl Report {
    pub fn new(command: &'static str, seed: u64) -> Self {
        Self {
            command,
            function: None,
            class: None,
            norm_estimate: None,
            theoretical_bound: None,
            slack: None,
            peak: None,
            extrapolated: None,
            checks: Vec::new(),
            seed,
            values: Vec::new(),
        }
    }

    pub fn value(&mut self, key: &'static str, v: impl Into<Field>) -> &mut Self {
        self.values.push((key, v.into()));
        self
    }

    pub fn norm(&mut self, rep: &NormReport) -> &mut Self {
        self.norm_estimate = Some(F17(rep.estimate));
        self.theoretical_bound = rep.theoretical_bound.map(F17);
        self.slack = rep.slack.map(F17);
        self.peak = Some(Peak {
            r: F17(rep.peak_r),
            theta: F17(rep.peak_theta),
        });
        self.extrapolated = Some(rep.extrapolated);
        self
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Out<'a> {
            command: &'a str,
            function: &'a Option<String>,
            class: &'a Option<String>,
            norm_estimate: &'a Option<F17>,
            theoretical_bound: &'a Option<F17>,
            slack: &'a Option<F17>,
            peak: &'a Option<Peak>,
            extrapolated: &'a Option<bool>,
            checks: &'a [CheckOut],
            seed: u64,
            passed: bool,
            values: Values<'a>,
        }
        let out = Out {
            command: self.command,
            function: &self.function,
            class: &self.class,
            norm_estimate: &self.norm_estimate,
            theoretical_bound: &self.theoretical_bound,
            slack: &self.slack,
            peak: &self.peak,
            extrapolated: &self.extrapolated,
            checks: &self.checks,
            seed: self.seed,
            passed: self.passed(),
            values: Values(&self.values),
        };
        let mut s = serde_json::to_string_pretty(&out).expect("serializable");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let opt = |v: &Option<F17>| v.map_or("n/a".to_string(), F17::text);
        if let Some(f) = &self.function {
            let _ = writeln!(s, "function: {f}");
        }
        if let Some(c) = &self.class {
            let _ = writeln!(s, "class: {c}");
        }
        for (k, v) in &self.values {
            let _ = writeln!(s, "{k}: {}", v.text());
        }
        if self.norm_estimate.is_some() {
            let _ = writeln!(s, "norm_estimate: {}", opt(&self.norm_estimate));
            let _ = writeln!(s, "theoretical_bound: {}", opt(&self.theoretical_bound));
            let _ = writeln!(s, "slack: {}", opt(&self.slack));
            if let Some(p) = &self.peak {
                let _ = writeln!(s, "peak: r = {}, theta = {}", p.r.text(), p.theta.text());
            }
            let _ = writeln!(s, "extrapolated: {}", self.extrapolated.unwrap_or(false));
        }
        for c in &self.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            let _ = writeln!(
                s,
                "[{tag}] {} worst_slack={} tol={} {}",
                c.name,
                opt(&c.worst_slack),
                c.tolerance.text(),
                c.detail
            );
        }
        let _ = writeln!(s, "seed: {}", self.seed);
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floats_keep_seventeen_digits() {
        let x = 0.1f64 + 0.2;
        let t = F17(x).text();
        assert_eq!(t.parse::<f64>().unwrap(), x);
        assert_eq!(
            serde_json::to_string(&F17(6.0)).unwrap(),
            "6.0000000000000000e0"
        );
        assert_eq!(serde_json::to_string(&F17(f64::NAN)).unwrap(), "null");
    }

    #[test]
    fn json_round_trips() {
        let mut r = Report::new("schwarzian", 3);
        r.value("z", Complex64::new(0.25, -0.5))
            .value("modulus", 1.5);
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["seed"], 3);
        assert_eq!(v["values"]["z"][1].as_f64().unwrap(), -0.5);
        assert!(v["checks"].as_array().unwrap().is_empty());
        assert!(v["norm_estimate"].is_null());
    }
}
