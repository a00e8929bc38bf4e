//! Plain, JSON and LaTeX renderings of kernel results.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use boolschur::chern::RootMultiset;
use boolschur::combinat::Partition;
use boolschur::polyring::MultiPoly;
use boolschur::schurbasis::{GradedSchurSeries, SchurVector};
use boolschur::symexpand::{DoubleSchurExpansion, SchurExpansion};

#[derive(Copy, Clone, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Latex,
}

/// One result in all three renderings.
pub struct Output {
    pub plain: String,
    pub json: Value,
    pub latex: String,
}

impl Output {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Plain => self.plain.clone(),
            Format::Json => serde_json::to_string(&self.json).expect("JSON values always serialize"),
            Format::Latex => self.latex.clone(),
        }
    }
}

fn latex_partition(lambda: &Partition) -> String {
    let sep = if lambda.parts().iter().any(|&p| p > 9) { "," } else { "" };
    let parts: Vec<String> = lambda.parts().iter().map(usize::to_string).collect();
    parts.join(sep)
}

/// Joins `(coefficient, basis element)` pairs into a signed sum; an empty
/// basis string stands for the unit.
fn latex_sum<'a>(terms: impl Iterator<Item = (&'a BigInt, String)>) -> String {
    let mut out = String::new();
    for (c, basis) in terms {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        let body = match (basis.is_empty(), mag.is_one()) {
            (true, _) => mag.to_string(),
            (false, true) => basis,
            (false, false) => format!("{mag}{basis}"),
        };
        match (out.is_empty(), c.is_negative()) {
            (true, false) => out.push_str(&body),
            (true, true) => out.push_str(&format!("-{body}")),
            (false, false) => out.push_str(&format!(" + {body}")),
            (false, true) => out.push_str(&format!(" - {body}")),
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

fn schur_symbol(lambda: &Partition, arg: &str) -> String {
    if lambda.is_empty() {
        String::new()
    } else {
        format!("s_{{{}}}{arg}", latex_partition(lambda))
    }
}

fn latex_schur(terms: &BTreeMap<Partition, BigInt>) -> String {
    latex_sum(terms.iter().map(|(l, c)| (c, schur_symbol(l, ""))))
}

pub fn schur_vector(v: &SchurVector) -> Output {
    Output {
        plain: v.to_string(),
        json: v.to_json(),
        latex: latex_schur(v.terms()),
    }
}

pub fn schur_expansion(e: &SchurExpansion) -> Output {
    let v = SchurVector::from(e.clone());
    Output {
        plain: format!("{v}"),
        json: e.to_json(),
        latex: latex_schur(&e.terms),
    }
}

pub fn double_expansion(e: &DoubleSchurExpansion) -> Output {
    let plain_symbol = |p: &Partition, arg: &str| if p.is_empty() { String::new() } else { format!("s{p}({arg})") };
    let plain: Vec<String> = e
        .terms
        .iter()
        .map(|((l, m), c)| {
            let mut factors: Vec<String> = [plain_symbol(l, "X"), plain_symbol(m, "Y")]
                .into_iter()
                .filter(|f| !f.is_empty())
                .collect();
            if factors.is_empty() || !c.is_one() {
                factors.insert(0, c.to_string());
            }
            factors.join("*")
        })
        .collect();
    let plain = if plain.is_empty() { "0".to_string() } else { plain.join(" + ") };
    let latex = latex_sum(
        e.terms
            .iter()
            .map(|((l, m), c)| (c, format!("{}{}", schur_symbol(l, "(X)"), schur_symbol(m, "(Y)")))),
    );
    Output { plain, json: e.to_json(), latex }
}

fn grade_prefix(q: u32, t: u32) -> String {
    let power = |v: &str, e: u32| match e {
        0 => String::new(),
        1 => v.to_string(),
        _ => format!("{v}^{{{e}}}"),
    };
    format!("{}{}", power("q", q), power("t", t))
}

pub fn graded(g: &GradedSchurSeries) -> Output {
    let mut grades: Vec<(u32, u32)> = g.terms().keys().map(|k| (k.0, k.1)).collect();
    grades.dedup();
    let pieces: Vec<String> = grades
        .iter()
        .map(|&(q, t)| {
            let inner = latex_schur(g.component(q, t).terms());
            let prefix = grade_prefix(q, t);
            if prefix.is_empty() {
                inner
            } else {
                format!("{prefix}\\left({inner}\\right)")
            }
        })
        .collect();
    Output {
        plain: g.to_string(),
        json: g.to_json(),
        latex: if pieces.is_empty() { "0".into() } else { pieces.join(" + ") },
    }
}

pub fn polynomial(f: &MultiPoly) -> Output {
    let alph = f.alphabets();
    let mut json_alph = json!({ "x": alph.x });
    if let Some(m) = alph.y {
        json_alph["y"] = json!(m);
    }
    let latex = latex_sum(f.terms().iter().rev().map(|(m, c)| {
        let mut s = String::new();
        if m.q > 0 {
            s.push_str(&grade_prefix(m.q, 0));
        }
        for (i, &e) in m.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let (v, idx) = if i < alph.x { ("x", i + 1) } else { ("y", i - alph.x + 1) };
            s.push_str(&format!("{v}_{{{idx}}}"));
            if e > 1 {
                s.push_str(&format!("^{{{e}}}"));
            }
        }
        (c, s)
    }));
    Output {
        plain: f.to_string(),
        json: json!({ "alphabets": json_alph, "terms": f.to_json_terms() }),
        latex,
    }
}

pub fn roots(r: &RootMultiset) -> Output {
    let names: Vec<String> = r.sorted().iter().map(|f| f.to_poly(r.alph).to_string()).collect();
    let latex: Vec<String> = r
        .sorted()
        .iter()
        .map(|f| polynomial(&f.to_poly(r.alph)).latex)
        .collect();
    Output {
        plain: names.join(", "),
        json: json!({ "rank": r.len(), "roots": names }),
        latex: format!("\\{{{}\\}}", latex.join(", ")),
    }
}

/// A line of text that renders the same way except in JSON.
pub fn message(text: String, json: Value) -> Output {
    Output {
        plain: text.clone(),
        latex: text,
        json,
    }
}
