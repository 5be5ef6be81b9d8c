//! File formats.
//!
//! * complex: `{"vertices": ["a", ...], "facets": [["a", "b"], ...]}`
//! * pair: `{"K": <complex>, "L": {"facets": [...]}}`; `L` shares `K`'s
//!   vertex list, which it may repeat under `"vertices"`.
//! * family: `{"M": <complex>, "pairs": [<pair>, ...]}`, or
//!   `{"M": <complex>, "pair": <pair>}` when every index carries the same pair.
//!   `pairs[i]` belongs to the `i`-th vertex of `M`.
//! * graph: `{"vertices": [...], "edges": [["a", "b"], ...]}`
//! * shelling certificate: the facets in order, each a list of labels.

use serde::{Deserialize, Serialize};

use crate::complex::{ComplexPair, SimplicialComplex};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::polyjoin::PairFamily;
use crate::shelling::ShellingCertificate;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub vertices: Vec<String>,
    pub facets: Vec<Vec<String>>,
}

impl ComplexJson {
    pub fn build(&self) -> Result<SimplicialComplex> {
        SimplicialComplex::from_facets(self.vertices.iter().cloned(), self.facets.iter())
    }
}

impl From<&SimplicialComplex> for ComplexJson {
    fn from(k: &SimplicialComplex) -> Self {
        Self {
            vertices: k.vertices().labels().to_vec(),
            facets: k.facets().iter().map(|f| k.render(f)).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubcomplexJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<String>>,
    pub facets: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairJson {
    #[serde(rename = "K")]
    pub k: ComplexJson,
    #[serde(rename = "L")]
    pub l: SubcomplexJson,
}

impl PairJson {
    pub fn build(&self) -> Result<ComplexPair> {
        if self.l.vertices.as_ref().is_some_and(|v| *v != self.k.vertices) {
            return Err(Error::VertexTableMismatch);
        }
        ComplexPair::from_labels(self.k.build()?, self.l.facets.iter())
    }
}

impl From<&ComplexPair> for PairJson {
    fn from(p: &ComplexPair) -> Self {
        let l = p.l();
        Self {
            k: p.k().into(),
            l: SubcomplexJson {
                vertices: None,
                facets: l.facets().iter().map(|f| l.render(f)).collect(),
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyJson {
    #[serde(rename = "M")]
    pub m: ComplexJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pairs: Option<Vec<PairJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pair: Option<PairJson>,
}

impl FamilyJson {
    pub fn build(&self) -> Result<PairFamily> {
        let m = self.m.build()?;
        match (&self.pairs, &self.pair) {
            (Some(pairs), None) => {
                PairFamily::new(m, pairs.iter().map(PairJson::build).collect::<Result<_>>()?)
            }
            (None, Some(pair)) => Ok(PairFamily::uniform(m, pair.build()?)),
            _ => Err(Error::Invalid("a family needs exactly one of \"pairs\" and \"pair\"".into())),
        }
    }
}

impl From<&PairFamily> for FamilyJson {
    fn from(f: &PairFamily) -> Self {
        match f.uniform_pair() {
            Some(p) => Self { m: f.m().into(), pairs: None, pair: Some(p.into()) },
            None => Self {
                m: f.m().into(),
                pairs: Some(f.pairs().map(PairJson::from).collect()),
                pair: None,
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: Vec<String>,
    pub edges: Vec<[String; 2]>,
}

impl GraphJson {
    pub fn build(&self) -> Result<Graph> {
        Graph::new(self.vertices.iter().cloned(), self.edges.iter().map(|[a, b]| (a, b)))
    }
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        let v = g.vertices();
        Self {
            vertices: v.labels().to_vec(),
            edges: g
                .edges()
                .into_iter()
                .map(|(a, b)| [v.label(a).to_owned(), v.label(b).to_owned()])
                .collect(),
        }
    }
}

pub fn certificate_json(k: &SimplicialComplex, cert: &ShellingCertificate) -> Vec<Vec<String>> {
    cert.labelled(k)
}

pub fn parse_complex(s: &str) -> Result<SimplicialComplex> {
    serde_json::from_str::<ComplexJson>(s)?.build()
}

pub fn parse_pair(s: &str) -> Result<ComplexPair> {
    serde_json::from_str::<PairJson>(s)?.build()
}

pub fn parse_family(s: &str) -> Result<PairFamily> {
    serde_json::from_str::<FamilyJson>(s)?.build()
}

pub fn parse_graph(s: &str) -> Result<Graph> {
    serde_json::from_str::<GraphJson>(s)?.build()
}
