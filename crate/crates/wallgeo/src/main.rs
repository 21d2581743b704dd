//! wallgeo: realizability of Wall n-spaces and the dimension-24 Witten
//! genus pipeline, exposed as a batch CLI with JSON output.
//!
//! Exit codes: 0 success, 2 validation failure (bad input or invalid
//! n-space), 1 internal assertion failure. Errors go to stderr as JSON.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use wallgeo::error::Error;
use wallgeo::genus::{
    counterexample24, genus_evaluate, l_series, multiplicative_sequence, witten_genus, PontryaginNumbers,
};
use wallgeo::genus::ahat_series;
use wallgeo::geography::{realizable, stein_fillable, CokerJClass, Verdict};
use wallgeo::modforms::{in_tmf_image, parse_form};
use wallgeo::nspace::{extract_invariants, parse_nspace_json, validate_nspace, NSpaceInvariants};
use wallgeo::wall::{bp_order, s_of_q, wall_constants, BpOrder, KervaireStatus};

#[derive(Parser)]
#[command(name = "wallgeo", version, about = "Geography of highly connected manifolds, exactly")]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Output::Json)]
    output: Output,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Json,
    Tsv,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum KervaireArg {
    Exists,
    Not,
    Unknown,
}

impl From<KervaireArg> for KervaireStatus {
    fn from(k: KervaireArg) -> Self {
        match k {
            KervaireArg::Exists => KervaireStatus::Exists,
            KervaireArg::Not => KervaireStatus::NotExists,
            KervaireArg::Unknown => KervaireStatus::Unknown,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesArg {
    Ahat,
    L,
    Witten,
}

#[derive(Subcommand)]
enum Cmd {
    /// Wall constants, s(Q) and bP orders for a given n
    Constants {
        #[arg(long)]
        n: u32,
    },
    /// Realizability verdict from explicit invariants
    Geography {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        sig: Option<String>,
        #[arg(long)]
        chi2: Option<String>,
        #[arg(long)]
        phi: Option<u8>,
        #[arg(long = "phi-chi")]
        phi_chi: Option<u8>,
        #[arg(long, value_enum, default_value_t = KervaireArg::Unknown)]
        kervaire: KervaireArg,
    },
    /// Validate a JSON n-space file, extract invariants, decide realizability
    Nspace {
        #[arg(long)]
        file: String,
        #[arg(long, value_enum, default_value_t = KervaireArg::Unknown)]
        kervaire: KervaireArg,
    },
    /// Evaluate a genus against a Pontryagin-numbers file
    Genus {
        #[arg(long, value_enum)]
        series: SeriesArg,
        #[arg(long)]
        dim: u32,
        #[arg(long)]
        pontryagin: String,
    },
    /// The full dimension-24 Witten-genus counterexample report
    Counterexample24 {
        #[arg(long = "N")]
        n_multiplier: String,
    },
    /// tmf-image membership of a modular form expression
    TmfImage {
        #[arg(long)]
        weight: u32,
        #[arg(long)]
        form: String,
    },
    /// Table of realizability moduli over a range of n
    Scan {
        #[arg(long = "n-from")]
        n_from: u32,
        #[arg(long = "n-to")]
        n_to: u32,
    },
    /// Stein fillability of a boundary sphere class
    Stein {
        #[arg(long)]
        q: u32,
        /// coker(J) class: zero, eta3kappabar, or etaeta4
        #[arg(long, default_value = "zero")]
        class: String,
    },
}

fn q_trunc() -> usize {
    std::env::var("WALLGEO_QTRUNC")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(16)
}

fn s(v: impl ToString) -> Value {
    Value::String(v.to_string())
}

fn parse_bigint(text: &str, what: &str) -> Result<BigInt, Error> {
    text.trim()
        .parse::<BigInt>()
        .map_err(|e| Error::invalid(format!("bad {what} {text:?}: {e}")))
}

fn verdict_str(v: &Verdict) -> &'static str {
    match v {
        Verdict::Realizable => "Realizable",
        Verdict::NotRealizable => "NotRealizable",
        Verdict::ConditionalOnKervaire => "ConditionalOnKervaire",
    }
}

fn run(cli: &Cli) -> Result<Value, Error> {
    match &cli.cmd {
        Cmd::Constants { n } => cmd_constants(*n),
        Cmd::Geography { n, sig, chi2, phi, phi_chi, kervaire } => {
            let mut inv = NSpaceInvariants::empty(*n);
            if let Some(v) = sig {
                inv.sig = Some(parse_bigint(v, "--sig")?);
            }
            if let Some(v) = chi2 {
                let c = parse_bigint(v, "--chi2")?;
                if *n % 8 == 2 {
                    let m4: BigInt = num_integer::Integer::mod_floor(&c, &BigInt::from(4));
                    inv.chi_sq_mod4 = Some(m4.try_into().map(|x: u32| x as u8).unwrap_or(0));
                } else {
                    inv.chi_sq = Some(c);
                }
            }
            inv.phi = *phi;
            inv.phi_chi = *phi_chi;
            let r = realizable(*n, &inv, (*kervaire).into())?;
            Ok(json!({
                "schema": 1,
                "n": n,
                "verdict": verdict_str(&r.verdict),
                "rule": r.rule,
                "condition": r.condition,
                "modulus": r.modulus.map(|m| s(m)).unwrap_or(Value::Null),
            }))
        }
        Cmd::Nspace { file, kervaire } => {
            let text = std::fs::read_to_string(file)
                .map_err(|e| Error::invalid(format!("cannot read {file}: {e}")))?;
            let (n, form, bundle) = parse_nspace_json(&text)?;
            let violations = validate_nspace(n, &form, &bundle);
            if !violations.is_empty() {
                let list: Vec<Value> = violations
                    .iter()
                    .map(|v| json!({"check": v.check, "detail": v.detail}))
                    .collect();
                return Ok(json!({"schema": 1, "n": n, "valid": false, "violations": list}));
            }
            let inv = extract_invariants(n, &form, &bundle)?;
            let r = realizable(n, &inv, (*kervaire).into())?;
            Ok(json!({
                "schema": 1,
                "n": n,
                "valid": true,
                "violations": [],
                "invariants": invariants_json(&inv),
                "verdict": verdict_str(&r.verdict),
                "rule": r.rule,
                "condition": r.condition,
                "modulus": r.modulus.map(|m| s(m)).unwrap_or(Value::Null),
            }))
        }
        Cmd::Genus { series, dim, pontryagin } => {
            let text = std::fs::read_to_string(pontryagin)
                .map_err(|e| Error::invalid(format!("cannot read {pontryagin}: {e}")))?;
            let nums = parse_pontryagin_json(&text, *dim)?;
            let n = *dim / 4;
            match series {
                SeriesArg::Ahat | SeriesArg::L => {
                    let q = match series {
                        SeriesArg::Ahat => ahat_series(n),
                        _ => l_series(n),
                    };
                    let k = multiplicative_sequence(&q, n)?;
                    let v = genus_evaluate(&k.component(n), &nums)?;
                    Ok(json!({"schema": 1, "dim": dim, "value": s(v)}))
                }
                SeriesArg::Witten => {
                    let w = witten_genus(*dim, &nums, q_trunc())?;
                    let coeffs: Vec<Value> = w.coeffs().iter().map(|c| s(c)).collect();
                    Ok(json!({
                        "schema": 1,
                        "dim": dim,
                        "weight": w.weight,
                        "truncation": w.truncation(),
                        "coefficients": coeffs,
                    }))
                }
            }
        }
        Cmd::Counterexample24 { n_multiplier } => {
            let big_n = parse_bigint(n_multiplier, "--N")?;
            let r = counterexample24(&big_n)?;
            Ok(json!({
                "schema": 1,
                "N": s(&r.n_multiplier),
                "p3_sq": s(&r.p3_sq),
                "p6": s(&r.p6),
                "combination": s(&r.combination),
                "combination_factorization": factorization_json(&r.combination_factorization),
                "divisor": s(&r.divisor),
                "divisor_factorization": factorization_json(&r.divisor_factorization),
                "divisible": r.divisible,
                "conclusion": if r.divisible {
                    "the Witten genus obstruction is satisfied"
                } else {
                    "not divisible: no string manifold realizes these numbers; N must be even"
                },
            }))
        }
        Cmd::TmfImage { weight, form } => {
            let f = parse_form(form, *weight)?;
            let (member, witness) = in_tmf_image(&f);
            let w: Vec<Value> = witness
                .iter()
                .map(|t| {
                    json!({
                        "monomial": format!("E4^{}*E6^{}*D^{}", t.monomial.0, t.monomial.1, t.monomial.2),
                        "coefficient": s(&t.coefficient),
                        "required_divisor": s(&t.required_divisor),
                    })
                })
                .collect();
            Ok(json!({"schema": 1, "weight": weight, "in_image": member, "failing_monomials": w}))
        }
        Cmd::Scan { n_from, n_to } => cmd_scan(*n_from, *n_to),
        Cmd::Stein { q, class } => {
            let c = match class.as_str() {
                "zero" => CokerJClass::Zero,
                "eta3kappabar" => CokerJClass::EtaCubedKappaBar,
                "etaeta4" => CokerJClass::EtaEta4,
                other => return Err(Error::invalid(format!("unknown coker(J) class {other:?}"))),
            };
            Ok(json!({"schema": 1, "q": q, "stein_fillable": stein_fillable(*q, c)}))
        }
    }
}

fn cmd_constants(n: u32) -> Result<Value, Error> {
    let c = wall_constants(n, None)?;
    let mut out = Map::new();
    out.insert("schema".into(), json!(1));
    out.insert("n".into(), json!(n));
    out.insert("j".into(), s(&c.j));
    out.insert("k".into(), s(&c.k));
    out.insert("a".into(), s(&c.a));
    out.insert("sigma".into(), s(&c.sigma));
    out.insert("c".into(), s(&c.c));
    out.insert("d".into(), s(&c.d));
    if n >= 3 && n % 2 == 0 {
        let half = wall_constants(n / 2, None)?;
        out.insert("s_of_q".into(), s(s_of_q(n, &half, &c)?));
    }
    for (key, dim) in [("bp_order_2n", 2 * n), ("bp_order_4n", 4 * n)] {
        if dim >= 6 {
            let v = match bp_order(dim, KervaireStatus::Unknown)? {
                BpOrder::Known(v) => s(v),
                BpOrder::Conditional { if_kervaire_exists, if_not } => json!({
                    "if_kervaire_exists": s(if_kervaire_exists),
                    "if_not": s(if_not),
                }),
            };
            out.insert(key.into(), v);
        }
    }
    Ok(Value::Object(out))
}

fn cmd_scan(n_from: u32, n_to: u32) -> Result<Value, Error> {
    if n_from < 3 || n_to < n_from {
        return Err(Error::invalid("scan needs 3 <= n-from <= n-to"));
    }
    let mut rows = Vec::new();
    for n in n_from..=n_to {
        let mut row = Map::new();
        row.insert("n".into(), json!(n));
        let case = match (n % 2, n) {
            (_, 3 | 7 | 15 | 31) => "always realizable",
            (_, 63) => "conditional on Kervaire",
            (1, 9) => "Phi = 0 and phi(chi) = 0",
            (1, _) => "Phi = 0",
            (0, 4 | 8) => "sig - chi^2 = 0 mod sigma",
            (0, 12) => "sig + 4 s(Q) chi^2 = 0 mod sigma and chi^2 = 0 mod 4",
            (0, _) if n % 4 == 0 => "sig + 4 s(Q) chi^2 = 0 mod sigma",
            _ => "sig = 0 mod sigma",
        };
        row.insert("case".into(), json!(case));
        if n % 2 == 0 {
            row.insert("sigma".into(), s(&wall_constants(n / 2, None)?.sigma));
            if n % 4 == 0 && n >= 12 {
                let quarter = wall_constants(n / 4, None)?;
                let half = wall_constants(n / 2, None)?;
                row.insert("s_of_q".into(), s(s_of_q(n / 2, &quarter, &half)?));
            }
        }
        match bp_order(2 * n, KervaireStatus::Unknown)? {
            BpOrder::Known(v) => {
                row.insert("bp_order".into(), s(v));
            }
            BpOrder::Conditional { .. } => {
                row.insert("bp_order".into(), json!("1 or 2"));
            }
        }
        rows.push(Value::Object(row));
    }
    Ok(json!({"schema": 1, "rows": rows}))
}

fn invariants_json(inv: &NSpaceInvariants) -> Value {
    let mut m = Map::new();
    if let Some(v) = &inv.sig {
        m.insert("sig".into(), s(v));
    }
    if let Some(v) = &inv.chi_sq {
        m.insert("chi_sq".into(), s(v));
    }
    if let Some(v) = inv.chi_sq_mod4 {
        m.insert("chi_sq_mod4".into(), json!(v));
    }
    if let Some(v) = inv.phi {
        m.insert("phi".into(), json!(v));
    }
    if let Some(v) = inv.phi_chi {
        m.insert("phi_chi".into(), json!(v));
    }
    Value::Object(m)
}

fn factorization_json(f: &[(BigInt, u32)]) -> Value {
    Value::Array(
        f.iter()
            .map(|(p, e)| json!({"prime": s(p), "exponent": e}))
            .collect(),
    )
}

fn parse_pontryagin_json(text: &str, dim: u32) -> Result<PontryaginNumbers, Error> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::invalid(format!("bad JSON: {e}")))?;
    let obj = v.as_object().ok_or_else(|| Error::invalid("top level must be an object"))?;
    if let Some(d) = obj.get("dim").and_then(|x| x.as_u64()) {
        if d as u32 != dim {
            return Err(Error::invalid(format!("file is for dim {d}, requested {dim}")));
        }
    }
    if dim % 4 != 0 || dim == 0 {
        return Err(Error::invalid("dim must be a positive multiple of 4"));
    }
    let numbers = obj
        .get("numbers")
        .and_then(|x| x.as_object())
        .ok_or_else(|| Error::invalid("missing object field \"numbers\""))?;
    let mut nums = PontryaginNumbers::new(dim);
    for (key, val) in numbers {
        let partition: Result<Vec<u32>, _> = key
            .split(',')
            .map(|p| p.trim().parse::<u32>())
            .collect();
        let partition = partition.map_err(|e| Error::invalid(format!("bad partition key {key:?}: {e}")))?;
        if 4 * partition.iter().sum::<u32>() != dim {
            return Err(Error::invalid(format!(
                "partition {key:?} does not have weight dim/4 = {}",
                dim / 4
            )));
        }
        let value = match val {
            Value::Number(n) => n
                .as_i64()
                .map(BigInt::from)
                .ok_or_else(|| Error::invalid(format!("non-integer value for {key:?}")))?,
            Value::String(t) => parse_bigint(t, "Pontryagin number")?,
            other => return Err(Error::invalid(format!("bad value for {key:?}: {other}"))),
        };
        nums.set(partition, value);
    }
    Ok(nums)
}

/// TSV rendering: scan emits one row per line, everything else key\tvalue.
fn to_tsv(v: &Value) -> String {
    if let Some(rows) = v.get("rows").and_then(|r| r.as_array()) {
        let mut cols: Vec<String> = Vec::new();
        for row in rows {
            if let Some(m) = row.as_object() {
                for k in m.keys() {
                    if !cols.contains(k) {
                        cols.push(k.clone());
                    }
                }
            }
        }
        cols.sort();
        let mut out = cols.join("\t");
        out.push('\n');
        for row in rows {
            let m = row.as_object().unwrap();
            let line: Vec<String> = cols
                .iter()
                .map(|c| m.get(c).map(scalar_str).unwrap_or_default())
                .collect();
            out.push_str(&line.join("\t"));
            out.push('\n');
        }
        out
    } else if let Some(m) = v.as_object() {
        let mut out = String::new();
        for (k, val) in m {
            out.push_str(&format!("{k}\t{}\n", scalar_str(val)));
        }
        out
    } else {
        format!("{}\n", scalar_str(v))
    }
}

fn scalar_str(v: &Value) -> String {
    match v {
        Value::String(t) => t.clone(),
        other => other.to_string(),
    }
}

fn to_text(v: &Value) -> String {
    if let Some(m) = v.as_object() {
        let mut out = String::new();
        for (k, val) in m {
            if k == "schema" {
                continue;
            }
            match val {
                Value::Array(_) | Value::Object(_) => {
                    out.push_str(&format!("{k}: {}\n", serde_json::to_string(val).unwrap()));
                }
                other => out.push_str(&format!("{k}: {}\n", scalar_str(other))),
            }
        }
        out
    } else {
        format!("{}\n", scalar_str(v))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(v) => {
            match cli.output {
                Output::Json => println!("{}", serde_json::to_string_pretty(&v).unwrap()),
                Output::Tsv => print!("{}", to_tsv(&v)),
                Output::Text => print!("{}", to_text(&v)),
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            let (code, kind) = match &e {
                Error::Internal(_) => (1u8, "internal"),
                _ => (2u8, "validation"),
            };
            eprintln!(
                "{}",
                serde_json::to_string(&json!({"error": e.to_string(), "kind": kind})).unwrap()
            );
            ExitCode::from(code)
        }
    }
}
