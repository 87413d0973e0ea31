//! JSON (`{"n": 3, "edges": [[0,1]]}`) and compact text (`3:0-1,1-2`) forms.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;

    fn try_from(j: GraphJson) -> Result<Graph> {
        let edges: Vec<_> = j.edges.iter().map(|e| (e[0], e[1])).collect();
        Graph::from_edges(j.n, &edges)
    }
}

impl From<Graph> for GraphJson {
    fn from(g: Graph) -> GraphJson {
        GraphJson {
            n: g.order(),
            edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.order())?;
        for (i, (u, v)) in self.edges().into_iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{u}-{v}")?;
        }
        Ok(())
    }
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Graph> {
        let s = s.trim();
        let bad = |what: &str| Error::Parse(format!("graph `{s}`: {what}"));
        let (n, rest) = s.split_once(':').ok_or_else(|| bad("expected `n:u-v,...`"))?;
        let n: usize = n.trim().parse().map_err(|_| bad("bad vertex count"))?;
        let mut edges = Vec::new();
        for pair in rest.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (u, v) = pair.split_once('-').ok_or_else(|| bad("edge must be `u-v`"))?;
            let u = u.trim().parse().map_err(|_| bad("bad endpoint"))?;
            let v = v.trim().parse().map_err(|_| bad("bad endpoint"))?;
            edges.push((u, v));
        }
        Graph::from_edges(n, &edges)
    }
}

/// Accepts a JSON object, the compact text form, or a preset name.
pub fn parse_graph_any(s: &str) -> Result<Graph> {
    let t = s.trim();
    if t.starts_with('{') {
        serde_json::from_str(t).map_err(|e| Error::Parse(e.to_string()))
    } else if t.contains(':') {
        t.parse()
    } else {
        super::presets::by_name(t)
    }
}
