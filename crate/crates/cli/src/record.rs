//! The record every command produces. Text output is rendered from the
//! record alone, so a parsed JSON record re-renders to the same text.

use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use qmextremal::{QSeries, Rational};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Record {
    pub object: String,
    pub params: Map<String, Value>,
    pub coeffs: Vec<String>,
    pub verdicts: Vec<Value>,
}

impl Record {
    pub fn new(object: &str) -> Self {
        Record {
            object: object.to_string(),
            params: Map::new(),
            coeffs: Vec::new(),
            verdicts: Vec::new(),
        }
    }

    pub fn param(mut self, key: &str, v: impl Into<Value>) -> Self {
        self.params.insert(key.to_string(), v.into());
        self
    }

    pub fn with_coeffs(mut self, c: Vec<String>) -> Self {
        self.coeffs = c;
        self
    }

    fn p_str(&self, key: &str) -> String {
        match self.params.get(key) {
            Some(Value::String(s)) => s.clone(),
            Some(v) => v.to_string(),
            None => String::new(),
        }
    }

    fn p_u64(&self, key: &str) -> u64 {
        self.params.get(key).and_then(Value::as_u64).unwrap_or(0)
    }

    /// Overall verdict of checking commands.
    pub fn passed(&self) -> bool {
        self.params.get("pass").and_then(Value::as_bool).unwrap_or(true)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("records serialize")
    }

    pub fn render_text(&self) -> String {
        match self.object.as_str() {
            "series" => self.render_series(),
            "scan" => self.render_scan(),
            "proof" => self.render_proof(),
            "atkin" => format!(
                "A = {}; B = {}; N = {}\n",
                self.p_str("A"),
                self.p_str("B"),
                self.p_str("N")
            ),
            "moments" => format!("{}\n", self.coeffs.join(" ")),
            "table" => self.render_table(),
            "multiplier" => self.render_multiplier(),
            "basis" => self.render_basis(),
            other => format!("unknown record {other}\n"),
        }
    }

    fn render_series(&self) -> String {
        let start = self.p_u64("start") as usize;
        let mut v: Vec<Rational> = vec![Rational::from_integer(0.into()); start];
        for c in &self.coeffs {
            v.push(parse_rational(c));
        }
        let s = QSeries::from_rationals(v);
        format!("{}\n", s.render_terms(&self.p_str("var"), None))
    }

    fn render_scan(&self) -> String {
        let mut out = format!(
            "depth {}, evidence {}\n",
            self.p_str("depth"),
            self.p_str("evidence")
        );
        let mut integral = Vec::new();
        for v in &self.verdicts {
            let w = v["w"].as_i64().unwrap_or(0);
            let status = v["verdict"].as_str().unwrap_or("");
            let line = match status {
                "integral" => {
                    integral.push(w.to_string());
                    "integral".to_string()
                }
                "non-integral" => {
                    let primes: Vec<String> = v["primes"]
                        .as_array()
                        .map(|a| a.iter().map(|p| p.to_string()).collect())
                        .unwrap_or_default();
                    format!(
                        "non-integral at q^{}, denominator primes {}",
                        v["first_index"],
                        primes.join(" ")
                    )
                }
                "undetermined" => format!("undetermined ({})", v["reason"].as_str().unwrap_or("")),
                _ => status.to_string(),
            };
            out.push_str(&format!("w={w:<4} {line}\n"));
        }
        out.push_str(&format!("integral weights: {{{}}}\n", integral.join(", ")));
        out
    }

    fn render_proof(&self) -> String {
        let mut out = format!(
            "weight {}  (m, a) = ({}, {})\n",
            self.p_str("w"),
            self.p_str("m"),
            self.p_str("a")
        );
        if self.params.get("e4_multiple").and_then(Value::as_bool) == Some(true) {
            out.push_str(&format!("G_{} = E4 * G_{}\n", self.p_str("w"), self.p_str("base_weight")));
        }
        for k in ["A", "B", "N", "C"] {
            out.push_str(&format!("{k} = {}\n", self.p_str(k)));
        }
        let mut bad = Vec::new();
        for v in &self.verdicts {
            let ok = v["ok"].as_bool().unwrap_or(false);
            let modulus = v["modulus"].as_str().unwrap_or("");
            if !ok {
                bad.push(modulus.to_string());
            }
            out.push_str(&format!(
                "  {:<8} {:<10} deg {:<4} series {:<4} {}\n",
                modulus,
                v["source"].as_str().unwrap_or(""),
                v["degree"].to_string(),
                v["series_terms"].to_string(),
                if ok { "ok" } else { "FAIL" }
            ));
        }
        let n = self.verdicts.len();
        if bad.is_empty() {
            out.push_str(&format!("PASS ({n} moduli)\n"));
        } else {
            out.push_str(&format!("FAIL at {} ({n} moduli)\n", bad.join(", ")));
        }
        out
    }

    fn render_table(&self) -> String {
        let mut out = String::new();
        for v in &self.verdicts {
            let cs: Vec<String> = v["coeffs"]
                .as_array()
                .map(|a| a.iter().map(|c| c.as_str().unwrap_or("").to_string()).collect())
                .unwrap_or_default();
            out.push_str(&format!("{:<24} {}\n", v["row"].as_str().unwrap_or(""), cs.join(" ")));
        }
        out
    }

    fn render_multiplier(&self) -> String {
        let mut out = format!("modulus {}  source {}\n", self.p_str("modulus"), self.p_str("source"));
        for k in ["U", "V", "D"] {
            out.push_str(&format!("{k}: {}\n", self.p_str(k)));
        }
        for v in &self.verdicts {
            out.push_str(&format!(
                "{} ({} terms): {}\n",
                v["check"].as_str().unwrap_or(""),
                v["terms"],
                if v["ok"].as_bool() == Some(true) { "ok" } else { "FAIL" }
            ));
        }
        out
    }

    fn render_basis(&self) -> String {
        let labels = |k: &str| -> Vec<String> {
            self.params
                .get(k)
                .and_then(Value::as_array)
                .map(|a| a.iter().map(|s| s.as_str().unwrap_or("").to_string()).collect())
                .unwrap_or_default()
        };
        let mut out = format!("basis of QM_{}^(1): {}\n", self.p_str("k"), labels("basis").join(", "));
        for (row, label) in self.verdicts.iter().zip(labels("standard")) {
            let cs: Vec<String> = row
                .as_array()
                .map(|a| a.iter().map(|c| c.as_str().unwrap_or("").to_string()).collect())
                .unwrap_or_default();
            out.push_str(&format!("{label} = ({})\n", cs.join(", ")));
        }
        out
    }
}

pub fn parse_rational(s: &str) -> Rational {
    match s.split_once('/') {
        Some((n, d)) => Rational::new(n.parse().expect("numerator"), d.parse().expect("denominator")),
        None => Rational::from_integer(s.parse().expect("integer")),
    }
}

pub fn strings<T: ToString>(xs: impl IntoIterator<Item = T>) -> Vec<String> {
    xs.into_iter().map(|x| x.to_string()).collect()
}

pub fn str_values<T: ToString>(xs: impl IntoIterator<Item = T>) -> Value {
    json!(strings(xs))
}
