mod record;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qmextremal::atkin::{atkin_data, atkin_moments, Family};
use qmextremal::congruence::{
    check_tabulated, multiplier_for, tabulated_multiplier, verify_infinite_product,
    verify_main_theorem_case, verify_multiplier,
};
use qmextremal::extremal::{
    depth1_basis, depth1_tower, extremal_depth1_recursive, extremal_generic, integrality_scan,
    ScanVerdict,
};
use qmextremal::hypergeom::{f1, p_series, q_series, u_series, v_series};
use qmextremal::numeric::{render_factorization, PrimePowerModulus};
use qmextremal::qform::{delta, dim_qm, e2, eisenstein, j_inverse};
use qmextremal::{QSeries, Rational};

use record::{str_values, strings, Record};

/// Extremal quasimodular forms: expansions, integrality scans and
/// congruence proofs.
#[derive(Parser)]
#[command(name = "qmx", version)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print the leading terms of a series: `G w r`, `E2`, `E<k>`, `Delta`,
    /// `jinv`, `U`, `V`, `F1`, `P n`, `Q n`.
    Expand {
        #[arg(required = true, num_args = 1..)]
        spec: Vec<String>,
        #[arg(long, default_value_t = 30, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
    },
    /// Check integrality of the first n coefficients for weights up to wmax.
    Scan {
        #[arg(long)]
        wmax: i64,
        #[arg(long, default_value_t = 1)]
        depth: u32,
        #[arg(long, default_value_t = 60, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
    },
    /// Run the prime-power congruence check for G_w^(1).
    Prove { w: i64 },
    /// Atkin-like polynomials A_{m,a}, B_{m,a} and N_{m,a}.
    Atkin { m: u32, a: u32 },
    /// The moments (j^m, 1).
    Moments {
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
    },
    /// Coefficient tables: A (extremal forms), B (hypergeometric factors).
    Table { which: String },
    /// Check the multiplier for U and V modulo p^s.
    Congruence {
        p: u64,
        s: u32,
        #[arg(long, default_value_t = 200, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
    },
    /// The depth-1 basis of weight k and the change-of-basis matrix.
    Basis { k: i64 },
}

enum Failure {
    Usage(String),
    Compute(String),
}

type Outcome = Result<Record, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn compute(e: qmextremal::Error) -> Failure {
    Failure::Compute(e.to_string())
}

/// Weights whose extremal forms have integral coefficients.
const TABLE_A_WEIGHTS: [i64; 22] = [
    2, 6, 8, 10, 12, 14, 16, 18, 20, 22, 24, 28, 30, 32, 34, 38, 54, 58, 68, 80, 114, 118,
];

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Expand { spec, n } => cmd_expand(&spec, n as usize),
        Command::Scan { wmax, depth, n } => cmd_scan(wmax, depth, n as usize),
        Command::Prove { w } => cmd_prove(w),
        Command::Atkin { m, a } => cmd_atkin(m, a),
        Command::Moments { n } => Ok(Record::new("moments")
            .param("n", n)
            .with_coeffs(strings(atkin_moments(n as usize)))),
        Command::Table { which } => cmd_table(&which),
        Command::Congruence { p, s, n } => cmd_congruence(p, s, n as usize),
        Command::Basis { k } => cmd_basis(k),
    };
    let record = match result {
        Ok(r) => r,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            return ExitCode::from(2);
        }
        Err(Failure::Compute(m)) => {
            eprintln!("error: {m}");
            return ExitCode::from(1);
        }
    };
    let text = match cli.format {
        Format::Text => record.render_text(),
        Format::Json => record.to_json() + "\n",
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    if record.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn parse_num<T: std::str::FromStr>(s: Option<&String>, what: &str) -> Result<T, Failure> {
    s.and_then(|x| x.parse().ok())
        .ok_or_else(|| usage(format!("expected {what}")))
}

fn cmd_expand(spec: &[String], n: usize) -> Outcome {
    let head = spec[0].as_str();
    let arity = |k: usize| {
        if spec.len() == k {
            Ok(())
        } else {
            Err(usage(format!("`{head}` takes {} argument(s)", k - 1)))
        }
    };
    // (series, variable, index of the first printed coefficient)
    let (series, var, start): (QSeries, &str, usize) = match head {
        "G" => {
            arity(3)?;
            let w: i64 = parse_num(spec.get(1), "a weight")?;
            let r: u32 = parse_num(spec.get(2), "a depth")?;
            if w < 0 || w % 2 != 0 || r == 0 {
                return Err(usage("G needs an even weight and depth >= 1"));
            }
            if r == 1 && w == 4 {
                return Err(usage("there is no extremal form of weight 4 and depth 1"));
            }
            let m = dim_qm(w, r);
            if m == 0 {
                return Err(usage(format!("QM_{w}^({r}) is zero")));
            }
            let len = m - 1 + n;
            let rec = if r == 1 {
                extremal_depth1_recursive(w, len)
            } else {
                extremal_generic(w, r, len)
            }
            .map_err(compute)?;
            (rec.q_expansion.series, "q", m - 1)
        }
        "E2" => {
            arity(1)?;
            (e2(n).series, "q", 0)
        }
        "Delta" => {
            arity(1)?;
            (delta(n + 1).series, "q", 1)
        }
        "jinv" => {
            arity(1)?;
            (j_inverse(n + 1), "q", 1)
        }
        "U" => (arity(1).map(|_| u_series(n))?, "t", 0),
        "V" => (arity(1).map(|_| v_series(n))?, "t", 0),
        "F1" => (arity(1).map(|_| f1(n))?, "t", 0),
        "P" | "Q" => {
            arity(2)?;
            let k: u32 = parse_num(spec.get(1), "an index")?;
            let s = if head == "P" { p_series(k, n) } else { q_series(k, n) };
            (s, "t", 0)
        }
        e if e.starts_with('E') => {
            arity(1)?;
            let k: u32 = e[1..].parse().map_err(|_| usage(format!("unknown series `{e}`")))?;
            (eisenstein(k, n).map_err(|err| usage(err.to_string()))?.series, "q", 0)
        }
        other => return Err(usage(format!("unknown series `{other}`"))),
    };
    let coeffs = series.coeffs()[start..(start + n).min(series.trunc())]
        .iter()
        .map(Rational::to_string)
        .collect();
    Ok(Record::new("series")
        .param("spec", spec.join(" "))
        .param("var", var)
        .param("start", start)
        .param("n", n)
        .with_coeffs(coeffs))
}

fn cmd_scan(wmax: i64, depth: u32, n: usize) -> Outcome {
    if wmax % 2 != 0 || wmax < 2 {
        return Err(usage("--wmax must be even and at least 2"));
    }
    if depth == 0 {
        return Err(usage("--depth must be at least 1"));
    }
    let report = integrality_scan(wmax, depth, n);
    let verdicts = report
        .rows
        .iter()
        .map(|row| match &row.verdict {
            ScanVerdict::Integral => json!({"w": row.w, "verdict": "integral"}),
            ScanVerdict::Skipped => json!({"w": row.w, "verdict": "skipped"}),
            ScanVerdict::NonIntegral { first_index, primes } => json!({
                "w": row.w, "verdict": "non-integral", "first_index": first_index, "primes": primes
            }),
            ScanVerdict::Undetermined(why) => json!({"w": row.w, "verdict": "undetermined", "reason": why}),
        })
        .collect();
    let mut rec = Record::new("scan")
        .param("wmax", wmax)
        .param("depth", depth)
        .param("n", n)
        .param("evidence", report.evidence())
        .param("integral", json!(report.integral_weights()));
    rec.verdicts = verdicts;
    Ok(rec)
}

fn cmd_prove(w: i64) -> Outcome {
    let report = verify_main_theorem_case(w).map_err(|e| match e {
        qmextremal::Error::OddWeight(_) | qmextremal::Error::WeightFour | qmextremal::Error::BadIndex(_) => {
            usage(e.to_string())
        }
        other => compute(other),
    })?;
    let d = &report.data;
    let mut rec = Record::new("proof")
        .param("w", w)
        .param("m", report.family.m)
        .param("a", report.family.a)
        .param("e4_multiple", report.e4_multiple)
        .param("base_weight", report.family.weight())
        .param("A", d.a_poly.render("X"))
        .param("B", d.b_poly.render("X"))
        .param("N", render_factorization(&d.n_factorization()))
        .param("C", d.clearing.to_string())
        .param("pass", report.passed());
    rec.verdicts = report
        .checks
        .iter()
        .map(|c| {
            json!({
                "modulus": c.modulus.to_string(),
                "source": c.source.name(),
                "degree": c.degree,
                "series_terms": c.series_terms,
                "first_nonzero": c.first_nonzero,
                "ok": c.passed(),
            })
        })
        .collect();
    Ok(rec)
}

fn cmd_atkin(m: u32, a: u32) -> Outcome {
    let family = Family::new(m, a).map_err(|e| usage(e.to_string()))?;
    let d = atkin_data(family).map_err(compute)?;
    Ok(Record::new("atkin")
        .param("m", m)
        .param("a", a)
        .param("A", d.a_poly.render("X"))
        .param("B", d.b_poly.render("X"))
        .param("N", render_factorization(&d.n_factorization()))
        .param("C", d.clearing.to_string()))
}

fn cmd_table(which: &str) -> Outcome {
    let mut rec = Record::new("table").param("table", which);
    match which {
        "A" => {
            let tower = depth1_tower(118, 118 / 6 + 6);
            for w in TABLE_A_WEIGHTS {
                let g = &tower[(w / 2) as usize];
                let v = (w / 6) as usize;
                let cs = str_values(g.coeffs()[v + 1..v + 6].iter());
                rec.verdicts.push(json!({"row": format!("w={w}"), "coeffs": cs}));
            }
        }
        "B" => {
            let n = 5;
            let inv_root = QSeries::ints(&[1, -1728], n).pow_rational(&Rational::new((-1).into(), 2.into()));
            let inv_root = inv_root.map_err(compute)?;
            let scaled = |s: QSeries| &s * &inv_root;
            let rows: Vec<(String, QSeries)> = vec![
                ("P0".into(), p_series(0, n)),
                ("P2".into(), p_series(2, n)),
                ("P4".into(), p_series(4, n)),
                ("(1-1728t)^(-1/2) P1".into(), scaled(p_series(1, n))),
                ("(1-1728t)^(-1/2) P3".into(), scaled(p_series(3, n))),
                ("(1-1728t)^(-1/2) P5".into(), scaled(p_series(5, n))),
                ("(1-1728t)^(-1/2) P9".into(), scaled(p_series(9, n))),
                ("(1-1728t)^(-1/2) P19".into(), scaled(p_series(19, n))),
                ("(1-1728t)^(-1/2) Q0".into(), scaled(q_series(0, n))),
                ("(1-1728t)^(-1/2) Q2".into(), scaled(q_series(2, n))),
                ("(1-1728t)^(-1/2) Q6".into(), scaled(q_series(6, n))),
                ("Q1".into(), q_series(1, n)),
                ("Q3".into(), q_series(3, n)),
                ("Q5".into(), q_series(5, n)),
                ("Q11".into(), q_series(11, n)),
                ("Q13".into(), q_series(13, n)),
            ];
            for (name, s) in rows {
                rec.verdicts.push(json!({"row": name, "coeffs": str_values(s.coeffs().iter())}));
            }
        }
        other => return Err(usage(format!("unknown table `{other}` (expected A or B)"))),
    }
    Ok(rec)
}

fn cmd_congruence(p: u64, s: u32, n: usize) -> Outcome {
    let modulus = PrimePowerModulus::new(p, s).map_err(|e| usage(e.to_string()))?;
    let d = multiplier_for(modulus).map_err(compute)?;
    let mut verdicts: Vec<Value> = Vec::new();
    let mut pass = true;
    let mut push = |check: &str, terms: usize, ok: bool| {
        pass &= ok;
        verdicts.push(json!({"check": check, "terms": terms, "ok": ok}));
    };
    push("multiplier", n, verify_multiplier(&d, n).is_ok());
    push("product", n.min(100), verify_infinite_product(&d, n.min(100)).is_ok());
    if tabulated_multiplier(modulus).is_some() {
        push("derived", 48, check_tabulated(modulus, 48).is_ok());
    }
    let mut rec = Record::new("multiplier")
        .param("modulus", modulus.to_string())
        .param("source", d.source.name())
        .param("U", d.u_num.render("t"))
        .param("V", d.v_num.render("t"))
        .param("D", d.den.render("t"))
        .param("pass", pass);
    rec.verdicts = verdicts;
    Ok(rec)
}

fn cmd_basis(k: i64) -> Outcome {
    if k < 2 || k % 2 != 0 {
        return Err(usage("k must be even and at least 2"));
    }
    let b = depth1_basis(k).map_err(compute)?;
    let labels: Vec<String> = b.elements.iter().map(|e| e.label()).collect();
    let mut rec = Record::new("basis")
        .param("k", k)
        .param("basis", json!(labels))
        .param("standard", json!(b.standard_labels));
    rec.verdicts = b.matrix.iter().map(|row| str_values(row.iter())).collect();
    Ok(rec)
}
