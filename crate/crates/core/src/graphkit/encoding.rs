//! Text formats: rowing encodings, graph JSON and DOT.

use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::graph::{EdgeSign, Graph};
use super::rowing::{build_rowing, builtin, caterpillar, RowingString, BUILTIN_NAMES};
use crate::error::{Error, Result};

/// `BASE:SYMBOLS` for rowing graphs, `CAT:l1,l2,...` for caterpillars.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Encoding {
    Rowing { base: String, string: RowingString },
    Caterpillar(Vec<u32>),
}

impl Encoding {
    pub fn rowing(base: &str, string: RowingString) -> Encoding {
        Encoding::Rowing {
            base: base.to_string(),
            string,
        }
    }

    pub fn build(&self) -> Result<Graph> {
        match self {
            Encoding::Rowing { base, string } => build_rowing(&builtin(base)?, string),
            Encoding::Caterpillar(legs) => Ok(caterpillar(legs)),
        }
    }
}

impl fmt::Display for Encoding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Encoding::Rowing { base, string } => write!(f, "{base}:{string}"),
            Encoding::Caterpillar(legs) => {
                let parts: Vec<String> = legs.iter().map(u32::to_string).collect();
                write!(f, "CAT:{}", parts.join(","))
            }
        }
    }
}

impl FromStr for Encoding {
    type Err = Error;

    fn from_str(s: &str) -> Result<Encoding> {
        let (base, rest) = s
            .trim()
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("encoding {s:?} lacks a ':'")))?;
        if base == "CAT" {
            let rest = rest.trim().trim_end_matches(',');
            if rest.is_empty() {
                return Ok(Encoding::Caterpillar(Vec::new()));
            }
            let legs = rest
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad leg count {t:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            return Ok(Encoding::Caterpillar(legs));
        }
        if !BUILTIN_NAMES.contains(&base) {
            return Err(Error::UnknownBase(base.to_string()));
        }
        Ok(Encoding::rowing(base, rest.parse()?))
    }
}

#[derive(Serialize, Deserialize)]
struct GraphRecord {
    n: usize,
    edges: Vec<(usize, usize, i64)>,
    root: Option<usize>,
}

/// `{"n": .., "edges": [[u, v, sign], ..], "root": int|null}`.
pub fn to_json(g: &Graph) -> serde_json::Value {
    let rec = GraphRecord {
        n: g.n(),
        edges: g
            .edges()
            .map(|(u, v, s)| (u, v, s.as_i8() as i64))
            .collect(),
        root: g.root(),
    };
    serde_json::to_value(rec).expect("plain record serializes")
}

pub fn from_json(text: &str) -> Result<Graph> {
    let rec: GraphRecord =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("graph JSON: {e}")))?;
    let mut g = Graph::new(rec.n);
    for (u, v, s) in rec.edges {
        g.add_edge(u, v, EdgeSign::from_i64(s)?)?;
    }
    g.set_root(rec.root)?;
    Ok(g)
}

/// DOT source; negative edges are dashed and the root is double-circled.
pub fn to_dot(g: &Graph, colors: Option<&[u32]>) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.n() {
        let mut attrs = Vec::new();
        if g.root() == Some(v) {
            attrs.push("shape=doublecircle".to_string());
        }
        if let Some(c) = colors.and_then(|c| c.get(v)) {
            attrs.push(format!("label=\"{v}:{c}\""));
        }
        if attrs.is_empty() {
            let _ = writeln!(out, "  {v};");
        } else {
            let _ = writeln!(out, "  {v} [{}];", attrs.join(", "));
        }
    }
    for (u, v, s) in g.edges() {
        match s {
            EdgeSign::Positive => {
                let _ = writeln!(out, "  {u} -- {v};");
            }
            EdgeSign::Negative => {
                let _ = writeln!(out, "  {u} -- {v} [style=dashed];");
            }
        }
    }
    out.push_str("}\n");
    out
}
