//! Output envelope and value tagging.
//!
//! Exact numbers are `{"exact": "<decimal>"}` for integers and
//! `{"exact": {"num": "<decimal>", "den": "<decimal>"}}` for rationals.
//! Approximate numbers are `{"approx": "<decimal>", "digits": d}`.

use lukasiewicz::Real;
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

/// Number format requested on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Precision {
    /// Hardware doubles, rendered with 17 significant digits.
    F64,
    /// Multiprecision with this many significant decimal digits.
    Digits(usize),
}

pub const F64_DIGITS: usize = 17;

impl Precision {
    pub fn digits(self) -> usize {
        match self {
            Precision::F64 => F64_DIGITS,
            Precision::Digits(d) => d,
        }
    }

    pub fn describe(self) -> Value {
        match self {
            Precision::F64 => json!({ "backend": "f64", "digits": F64_DIGITS }),
            Precision::Digits(d) => json!({
                "backend": "bigfloat",
                "digits": d,
                "bits": lukasiewicz::Bits::for_digits(d).0,
            }),
        }
    }
}

pub fn exact_uint(v: &BigUint) -> Value {
    json!({ "exact": v.to_string() })
}

pub fn exact_int(v: &BigInt) -> Value {
    json!({ "exact": v.to_string() })
}

pub fn exact_small(v: i64) -> Value {
    json!({ "exact": v.to_string() })
}

pub fn exact_ratio(q: &BigRational) -> Value {
    json!({ "exact": { "num": q.numer().to_string(), "den": q.denom().to_string() } })
}

pub fn approx<R: Real>(x: &R, digits: usize) -> Value {
    json!({ "approx": x.to_decimal(digits), "digits": digits })
}

pub fn approx_f64(x: f64) -> Value {
    approx(&x, F64_DIGITS)
}

/// `a/b`, or `a` when the denominator is one.
pub fn ratio_text(q: &BigRational) -> String {
    if q.denom() == &BigInt::from(1) {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Envelope {
    pub tool: String,
    pub version: String,
    pub steps: String,
    pub command: Vec<String>,
    pub precision: Value,
    pub payload: Value,
}

impl Envelope {
    pub fn render(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("serializable");
        text.push('\n');
        text
    }
}

/// A command result in both output formats.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub payload: Value,
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Report {
    pub fn new(payload: Value, header: Vec<&'static str>) -> Self {
        Report {
            payload,
            header,
            rows: Vec::new(),
        }
    }

    pub fn row(mut self, cells: Vec<String>) -> Self {
        self.rows.push(cells);
        self
    }

    pub fn csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.header).expect("in-memory write");
        for row in &self.rows {
            w.write_record(row).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
    }
}
