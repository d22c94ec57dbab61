//! JSON and CSV rendering. Every collection is emitted in a fixed order so
//! identical invocations give identical bytes.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde_json::{json, Map, Value};

use gtbasis_core::gl::admissible_mus;
use gtbasis_core::patterns::{
    enumerate_patterns_b, GlHighestWeight, GtPatternA, PatternB, SoHighestWeight,
};
use gtbasis_core::verify::{self, VerificationReport};
use gtbasis_core::{Error, HalfInt, Operator, Rational};

use crate::{Format, Rep, Weight};

pub fn to_json(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

fn strings<T: ToString>(xs: &[T]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

pub fn algebra(type_a: bool, rank: usize) -> Value {
    json!({ "type": if type_a { "A" } else { "B" }, "rank": rank })
}

pub fn highest_weight(w: &Weight) -> Value {
    match w {
        Weight::A(hw) => json!(strings(hw.entries())),
        Weight::B(hw) => json!(strings(hw.entries())),
    }
}

pub fn pattern_a(p: &GtPatternA) -> Value {
    json!({ "rows": p.rows().iter().map(|r| strings(r)).collect::<Vec<_>>() })
}

pub fn pattern_b(p: &PatternB) -> Value {
    json!({
        "sigma": p.sigmas(),
        "rows": p.rows().iter().map(|r| strings(r)).collect::<Vec<_>>(),
        "primed_rows": p.primed_rows().iter().map(|r| strings(r)).collect::<Vec<_>>(),
    })
}

/// Rows separated by `|`, entries by spaces.
fn rows_field<T: ToString>(rows: &[Vec<T>]) -> String {
    rows.iter()
        .map(|r| strings(r).join(" "))
        .collect::<Vec<_>>()
        .join("|")
}

pub fn patterns_csv(w: &Weight) -> String {
    let mut s = String::new();
    match w {
        Weight::A(hw) => {
            s.push_str("index,rows\n");
            for (i, p) in gtbasis_core::patterns::enumerate_patterns_a(hw)
                .iter()
                .enumerate()
            {
                let _ = writeln!(s, "{i},{}", rows_field(p.rows()));
            }
        }
        Weight::B(hw) => {
            s.push_str("index,sigma,rows,primed_rows\n");
            for (i, p) in enumerate_patterns_b(hw).iter().enumerate() {
                let sigma = strings(p.sigmas()).join(" ");
                let _ = writeln!(
                    s,
                    "{i},{sigma},{},{}",
                    rows_field(p.rows()),
                    rows_field(p.primed_rows())
                );
            }
        }
    }
    s
}

pub fn operator(m: &Operator) -> Value {
    let entries: Vec<Value> = m
        .entries()
        .into_iter()
        .map(|(r, c, v)| json!([r, c, v.to_string()]))
        .collect();
    json!({ "dim": m.dim(), "entries": entries })
}

fn generator_name(rep: &Rep, (i, j): (i32, i32)) -> String {
    match rep {
        Rep::A(_) => format!("E({i},{j})"),
        Rep::B(_) => format!("F({i},{j})"),
    }
}

fn gens(rep: &Rep) -> &BTreeMap<(i32, i32), Operator> {
    match rep {
        Rep::A(r) => r.gens(),
        Rep::B(r) => r.gens(),
    }
}

pub fn representation(rep: &Rep, trace: bool) -> Value {
    let (alg, hw, basis): (Value, Value, Vec<Value>) = match rep {
        Rep::A(r) => (
            algebra(true, r.rank()),
            json!(strings(r.highest_weight().entries())),
            r.basis().iter().map(pattern_a).collect(),
        ),
        Rep::B(r) => (
            algebra(false, r.rank()),
            json!(strings(r.highest_weight().entries())),
            r.basis().iter().map(pattern_b).collect(),
        ),
    };
    let mut ops = Map::new();
    for (&key, m) in gens(rep) {
        ops.insert(generator_name(rep, key), operator(m));
    }
    let mut out = Map::new();
    out.insert("algebra".into(), alg);
    out.insert("highest_weight".into(), hw);
    out.insert("dimension".into(), json!(basis.len()));
    out.insert("basis".into(), Value::Array(basis));
    out.insert("operators".into(), Value::Object(ops));
    if trace {
        let entries: Vec<Value> = match rep {
            Rep::A(_) => Vec::new(),
            Rep::B(r) => r
                .deform_trace()
                .iter()
                .map(|t| {
                    json!({
                        "generator": generator_name(rep, t.generator),
                        "row": t.row,
                        "col": t.col,
                        "profile": t.profile,
                        "function": t.function.to_string(),
                        "value": t.function.limit_at(&Rational::from_integer(0.into()))
                            .map(|v| v.to_string())
                            .unwrap_or_default(),
                    })
                })
                .collect(),
        };
        out.insert("deform_trace".into(), Value::Array(entries));
    }
    Value::Object(out)
}

pub fn operators_csv(rep: &Rep) -> String {
    let mut s = String::from("generator,row,col,value\n");
    for (&key, m) in gens(rep) {
        let name = generator_name(rep, key);
        for (r, c, v) in m.entries() {
            let _ = writeln!(s, "\"{name}\",{r},{c},{v}");
        }
    }
    s
}

pub fn report(r: &VerificationReport) -> Value {
    let checks: Vec<Value> = r
        .checks
        .iter()
        .map(|c| {
            let witness = if c.witness.is_empty() {
                Value::Null
            } else {
                json!(c.witness)
            };
            json!({ "name": c.name, "pass": c.pass, "witness": witness })
        })
        .collect();
    json!({ "checks": checks, "summary": r.summary() })
}

fn csv_quote(s: &str) -> String {
    format!("\"{}\"", s.replace('"', "\"\""))
}

pub fn report_csv(r: &VerificationReport) -> String {
    let mut s = String::from("name,pass,witness\n");
    for c in &r.checks {
        let _ = writeln!(s, "{},{},{}", c.name, c.pass, csv_quote(&c.witness));
    }
    s
}

fn tuple<T: ToString>(xs: &[T]) -> String {
    format!("({})", strings(xs).join(","))
}

/// `gl(n−1)` highest weights between consecutive entries of `hw`; each
/// occurs once.
pub fn betweenness(hw: &GlHighestWeight, format: Option<Format>) -> String {
    let mut mus = admissible_mus(hw);
    mus.sort();
    match format {
        Some(Format::Json) => to_json(&json!({
            "highest_weight": strings(hw.entries()),
            "betweenness": mus.iter().map(|m| strings(m)).collect::<Vec<_>>(),
        })),
        Some(Format::Csv) => {
            let mut s = String::from("mu,multiplicity\n");
            for m in &mus {
                let _ = writeln!(s, "{},1", strings(m).join(" "));
            }
            s
        }
        None => mus.iter().map(|m| format!("mu={}\n", tuple(m))).collect(),
    }
}

/// `c(μ)` for every `μ` with `c(μ) > 0`, largest `μ` first, and the
/// dimension identity. For rank one the subalgebra is trivial, so the
/// weight multiplicities are listed as well.
pub fn branching(hw: &SoHighestWeight, format: Option<Format>) -> Result<String, Error> {
    let mut table = verify::branching_table(hw);
    table.sort_by(|a, b| b.0.cmp(&a.0));
    let mut rows: Vec<(Vec<HalfInt>, u64, u64)> = Vec::new();
    for (mu, c) in table {
        let d = verify::weyl_dim_b(&mu)?;
        rows.push((mu, c, d));
    }
    let dim = verify::weyl_dim_b(hw.entries())?;
    let total: u64 = rows.iter().map(|(_, c, d)| c * d).sum();
    let lhs = rows
        .iter()
        .map(|(_, c, d)| format!("{c}*{d}"))
        .collect::<Vec<_>>()
        .join("+");
    let identity = format!("{lhs}={dim}");
    let ok = total == dim;
    let weights: Vec<(Rational, u64)> = if hw.rank() == 1 {
        let mut h: BTreeMap<Rational, u64> = BTreeMap::new();
        for p in enumerate_patterns_b(hw) {
            *h.entry(p.weight()[0].clone()).or_insert(0) += 1;
        }
        h.into_iter().rev().collect()
    } else {
        Vec::new()
    };
    Ok(match format {
        Some(Format::Json) => {
            let mut out = Map::new();
            out.insert("highest_weight".into(), json!(strings(hw.entries())));
            out.insert(
                "branching".into(),
                json!(rows
                    .iter()
                    .map(
                        |(mu, c, d)| json!({ "mu": strings(mu), "multiplicity": c, "dimension": d })
                    )
                    .collect::<Vec<_>>()),
            );
            if hw.rank() == 1 {
                out.insert(
                    "weights".into(),
                    json!(weights
                        .iter()
                        .map(|(w, m)| json!({ "weight": [w.to_string()], "multiplicity": m }))
                        .collect::<Vec<_>>()),
                );
            }
            out.insert("identity".into(), json!(identity));
            out.insert("ok".into(), json!(ok));
            to_json(&Value::Object(out))
        }
        Some(Format::Csv) => {
            let mut s = String::from("mu,multiplicity,dimension\n");
            for (mu, c, d) in &rows {
                let _ = writeln!(s, "{},{c},{d}", strings(mu).join(" "));
            }
            s
        }
        None => {
            let mut s = String::new();
            for (mu, c, _) in &rows {
                let _ = writeln!(s, "mu={}: {c}", tuple(mu));
            }
            for (w, m) in &weights {
                let _ = writeln!(s, "weight=({w}): {m}");
            }
            let _ = writeln!(s, "{identity} {}", if ok { "ok" } else { "FAIL" });
            s
        }
    })
}
