use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactnum::{fmt_rational, parse_rational, Rational};
use crate::graphkit::{to_dot, Coloring, EdgeSign, Encoding, Graph};
use crate::spectral::{adjacency, EigBound};

/// A graph whose smallest eigenvalue is certified to lie in
/// `(-lambda - epsilon, -lambda)`, with a proper coloring attached.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness {
    pub encoding: Encoding,
    pub graph: Graph,
    pub coloring: Coloring,
    pub eig: EigBound,
    pub lambda: Rational,
    pub epsilon: Rational,
}

impl Witness {
    /// Colors the witness must use: 3 for rowing graphs, 2 for caterpillars.
    pub fn palette(&self) -> u32 {
        palette(&self.encoding)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("witness serializes")
    }

    pub fn to_dot(&self) -> String {
        to_dot(&self.graph, Some(&self.coloring.colors))
    }
}

pub(crate) fn palette(e: &Encoding) -> u32 {
    match e {
        Encoding::Rowing { .. } => 3,
        Encoding::Caterpillar(_) => 2,
    }
}

#[derive(Serialize, Deserialize)]
struct TargetRecord {
    lambda: String,
    epsilon: String,
}

#[derive(Serialize, Deserialize)]
struct WitnessRecord {
    encoding: String,
    coloring: Vec<u32>,
    eig: EigBound,
    target: TargetRecord,
}

impl Serialize for Witness {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        WitnessRecord {
            encoding: self.encoding.to_string(),
            coloring: self.coloring.colors.clone(),
            eig: self.eig.clone(),
            target: TargetRecord {
                lambda: fmt_rational(&self.lambda),
                epsilon: fmt_rational(&self.epsilon),
            },
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Witness {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Witness, D::Error> {
        use serde::de::Error as _;
        let rec = WitnessRecord::deserialize(d)?;
        let encoding: Encoding = rec.encoding.parse().map_err(D::Error::custom)?;
        let graph = encoding.build().map_err(D::Error::custom)?;
        Ok(Witness {
            encoding,
            graph,
            coloring: Coloring {
                colors: rec.coloring,
            },
            eig: rec.eig,
            lambda: parse_rational(&rec.target.lambda).map_err(D::Error::custom)?,
            epsilon: parse_rational(&rec.target.epsilon).map_err(D::Error::custom)?,
        })
    }
}

pub fn witness_from_json(text: &str) -> Result<Witness> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

/// Re-checks a witness from scratch: rebuilds the graph from its encoding,
/// walks every edge against the coloring, and re-runs the inertia counts at
/// both ends of the bracket.
pub fn verify_witness(w: &Witness) -> bool {
    let Ok(g) = w.encoding.build() else {
        return false;
    };
    if g != w.graph {
        return false;
    }
    let p = palette(&w.encoding);
    let colors = &w.coloring.colors;
    if colors.len() != g.n() || colors.iter().any(|&c| c >= p) {
        return false;
    }
    for (u, v, s) in g.edges() {
        let same = colors[u] == colors[v];
        let ok = match s {
            EdgeSign::Positive => !same,
            EdgeSign::Negative => same,
        };
        if !ok {
            return false;
        }
    }
    let EigBound { lo, hi } = &w.eig;
    let lower = -w.lambda.clone() - &w.epsilon;
    let upper = -w.lambda.clone();
    if lo > hi || lo <= &lower || hi >= &upper {
        return false;
    }
    let a = adjacency(&g);
    if a.shifted(lo).inertia().neg != 0 {
        return false;
    }
    if lo == hi {
        a.shifted(lo).inertia().zero > 0
    } else {
        a.shifted(hi).inertia().neg > 0
    }
}
