//! Line-based instance format.
//!
//! ```text
//! # optional comments
//! p cvd <n> <m>
//! v <id> <weight>
//! e <u> <v>
//! ```
//!
//! Vertex ids run from 1 to n. Weights are nonnegative and may be written as
//! integers, decimals (`2.75`) or fractions (`11/4`).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::path::Path;

use cvd_core::{Graph, Rational, VertexId, WeightedGraph};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error("missing header line `p cvd <n> <m>`")]
    MissingHeader,
    #[error("vertex {0} has no weight")]
    MissingWeight(u32),
    #[error("header declares {declared} edges but {found} were given")]
    EdgeCount { declared: usize, found: usize },
    #[error("vertex ids must be 1..n to serialize, found {0}")]
    NonContiguousIds(VertexId),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn at(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Line { line, message: message.into() }
}

/// Parses a nonnegative weight written as an integer, decimal or `p/q`.
pub fn parse_weight(s: &str) -> Result<Rational, String> {
    let value = if let Some((num, den)) = s.split_once('/') {
        let num: BigInt = num.parse().map_err(|_| format!("bad numerator in `{s}`"))?;
        let den: BigInt = den.parse().map_err(|_| format!("bad denominator in `{s}`"))?;
        if den.is_zero() {
            return Err(format!("zero denominator in `{s}`"));
        }
        Rational::new(num, den)
    } else if let Some((whole, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(format!("bad decimal `{s}`"));
        }
        let digits: BigInt = format!("{whole}{frac}").parse().map_err(|_| format!("bad decimal `{s}`"))?;
        Rational::new(digits, BigInt::from(10u32).pow(frac.len() as u32))
    } else {
        Rational::from_integer(s.parse::<BigInt>().map_err(|_| format!("bad weight `{s}`"))?)
    };
    if value.is_negative() {
        return Err(format!("negative weight `{s}`"));
    }
    Ok(value)
}

/// Writes a rational as an integer when whole, otherwise as `p/q`.
pub fn format_weight(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn number<T: std::str::FromStr>(line: usize, tok: Option<&str>, what: &str) -> Result<T, FormatError> {
    let tok = tok.ok_or_else(|| at(line, format!("missing {what}")))?;
    tok.parse().map_err(|_| at(line, format!("bad {what} `{tok}`")))
}

pub fn parse_instance(text: &str) -> Result<WeightedGraph, FormatError> {
    let mut header: Option<(u32, usize)> = None;
    let mut costs: BTreeMap<VertexId, Rational> = BTreeMap::new();
    let mut edges: BTreeSet<(VertexId, VertexId)> = BTreeSet::new();

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut toks = content.split_whitespace();
        let tag = toks.next().unwrap_or("");
        if tag != "p" && header.is_none() {
            return Err(at(line, "record before header"));
        }
        let vertex = |tok: Option<&str>, n: u32| -> Result<VertexId, FormatError> {
            let id: u32 = number(line, tok, "vertex id")?;
            if id == 0 || id > n {
                return Err(at(line, format!("vertex {id} outside 1..{n}")));
            }
            Ok(VertexId(id))
        };
        match tag {
            "p" => {
                if header.is_some() {
                    return Err(at(line, "second header"));
                }
                if toks.next() != Some("cvd") {
                    return Err(at(line, "expected `p cvd <n> <m>`"));
                }
                let n = number(line, toks.next(), "vertex count")?;
                let m = number(line, toks.next(), "edge count")?;
                header = Some((n, m));
            }
            "v" => {
                let n = header.map(|h| h.0).unwrap_or(0);
                let v = vertex(toks.next(), n)?;
                let w = toks.next().ok_or_else(|| at(line, "missing weight"))?;
                let w = parse_weight(w).map_err(|m| at(line, m))?;
                if costs.insert(v, w).is_some() {
                    return Err(at(line, format!("duplicate weight for vertex {v}")));
                }
            }
            "e" => {
                let n = header.map(|h| h.0).unwrap_or(0);
                let u = vertex(toks.next(), n)?;
                let v = vertex(toks.next(), n)?;
                if u == v {
                    return Err(at(line, format!("self-loop at vertex {u}")));
                }
                if !edges.insert((u.min(v), u.max(v))) {
                    return Err(at(line, format!("duplicate edge {u} {v}")));
                }
            }
            other => return Err(at(line, format!("unknown record `{other}`"))),
        }
        if toks.next().is_some() {
            return Err(at(line, "trailing tokens"));
        }
    }

    let (n, m) = header.ok_or(FormatError::MissingHeader)?;
    if let Some(id) = (1..=n).find(|&id| !costs.contains_key(&VertexId(id))) {
        return Err(FormatError::MissingWeight(id));
    }
    if edges.len() != m {
        return Err(FormatError::EdgeCount { declared: m, found: edges.len() });
    }
    let graph = Graph::from_edges((1..=n).map(VertexId), edges).expect("edges validated while parsing");
    Ok(WeightedGraph::new(graph, costs).expect("weights validated while parsing"))
}

pub fn read_instance(path: &Path) -> Result<WeightedGraph, FormatError> {
    parse_instance(&std::fs::read_to_string(path)?)
}

/// Serializes an instance whose vertex ids are exactly 1..n.
pub fn serialize_instance(wg: &WeightedGraph) -> Result<String, FormatError> {
    let g = wg.graph();
    if let Some(v) = g.vertices().zip(1..).find(|&(v, k)| v.0 != k).map(|(v, _)| v) {
        return Err(FormatError::NonContiguousIds(v));
    }
    let mut out = format!("p cvd {} {}\n", g.vertex_count(), g.edge_count());
    for v in g.vertices() {
        writeln!(out, "v {} {}", v, format_weight(wg.cost(v))).unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "e {u} {v}").unwrap();
    }
    Ok(out)
}

pub fn write_instance(path: &Path, wg: &WeightedGraph) -> Result<(), FormatError> {
    std::fs::write(path, serialize_instance(wg)?)?;
    Ok(())
}
