use serde_json::{json, Value};

pub enum Failure {
    /// Bad flags or out-of-range parameters; exit code 2.
    Input(String),
}

impl From<uvaldim::Error> for Failure {
    fn from(e: uvaldim::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

pub struct Report {
    pub text: String,
    pub json: Value,
    /// A cross-check disagreed; exit code 1.
    pub mismatch: bool,
}

impl Report {
    pub fn new(text: impl Into<String>, json: Value) -> Self {
        Report {
            text: text.into(),
            json,
            mismatch: false,
        }
    }

    pub fn flag(mut self, mismatch: bool) -> Self {
        self.mismatch |= mismatch;
        self
    }

    pub fn emit(&self, as_json: bool) {
        if as_json {
            // Value maps are BTreeMaps, so keys come out sorted.
            println!(
                "{}",
                serde_json::to_string_pretty(&self.json).expect("JSON values serialize")
            );
        } else {
            println!("{}", self.text.trim_end());
        }
        if self.mismatch {
            eprintln!("error: cross-check mismatch");
        }
    }
}

/// Rounds to 12 significant digits so printed values are stable.
pub fn round12(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return if x == 0.0 { 0.0 } else { x };
    }
    format!("{x:.11e}").parse().expect("formatted float parses")
}

pub fn num(x: f64) -> Value {
    json!(round12(x))
}

pub fn nums<'a>(xs: impl IntoIterator<Item = &'a f64>) -> Value {
    Value::Array(xs.into_iter().map(|&x| num(x)).collect())
}

pub fn fmt_num(x: f64) -> String {
    round12(x).to_string()
}
