//! Finite simple graphs, independence complexes and the generalized
//! lexicographic product `G[H; U]`.

use std::fmt;

use serde::Serialize;

use crate::complex::{SimplicialComplex, VertexTable};
use crate::error::{Error, Result};
use crate::shelling::ShellingSearch;
use crate::simplex::Simplex;

/// Default cap on the number of maximal independent sets enumerated.
pub const DEFAULT_MIS_BUDGET: usize = 100_000;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    vertices: VertexTable,
    adj: Vec<Simplex>,
}

impl Graph {
    /// Duplicate edges are merged; loops are rejected.
    pub fn new<L, S, E, A, B>(labels: L, edges: E) -> Result<Self>
    where
        L: IntoIterator<Item = S>,
        S: Into<String>,
        E: IntoIterator<Item = (A, B)>,
        A: AsRef<str>,
        B: AsRef<str>,
    {
        let vertices = VertexTable::new(labels)?;
        let edges = edges
            .into_iter()
            .map(|(a, b)| Ok((vertices.index(a.as_ref())?, vertices.index(b.as_ref())?)))
            .collect::<Result<Vec<_>>>()?;
        Self::from_edges(vertices, edges)
    }

    pub fn from_edges<E>(vertices: VertexTable, edges: E) -> Result<Self>
    where
        E: IntoIterator<Item = (usize, usize)>,
    {
        let n = vertices.len();
        let mut adj = vec![Simplex::empty(); n];
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::UnknownLabel(format!("#{}", a.max(b))));
            }
            if a == b {
                return Err(Error::Loop(vertices.label(a).to_owned()));
            }
            adj[a].insert(b);
            adj[b].insert(a);
        }
        Ok(Self { vertices, adj })
    }

    pub fn edgeless<L: IntoIterator<Item = S>, S: Into<String>>(labels: L) -> Result<Self> {
        Self::from_edges(VertexTable::new(labels)?, [])
    }

    pub fn complete<L: IntoIterator<Item = S>, S: Into<String>>(labels: L) -> Result<Self> {
        let vertices = VertexTable::new(labels)?;
        let n = vertices.len();
        Self::from_edges(vertices, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))))
    }

    pub fn cycle<L: IntoIterator<Item = S>, S: Into<String>>(labels: L) -> Result<Self> {
        let vertices = VertexTable::new(labels)?;
        let n = vertices.len();
        if n < 3 {
            return Err(Error::Invalid("a cycle needs at least 3 vertices".into()));
        }
        Self::from_edges(vertices, (0..n).map(|a| (a, (a + 1) % n)))
    }

    pub fn path<L: IntoIterator<Item = S>, S: Into<String>>(labels: L) -> Result<Self> {
        let vertices = VertexTable::new(labels)?;
        let n = vertices.len();
        Self::from_edges(vertices, (1..n).map(|a| (a - 1, a)))
    }

    pub fn vertices(&self) -> &VertexTable {
        &self.vertices
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn neighbors(&self, v: usize) -> &Simplex {
        &self.adj[v]
    }

    pub fn is_adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a].contains(b)
    }

    /// Edges `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.num_vertices())
            .flat_map(|a| self.adj[a].iter().filter(move |&b| b > a).map(move |b| (a, b)))
            .collect()
    }

    pub fn num_edges(&self) -> usize {
        self.adj.iter().map(Simplex::len).sum::<usize>() / 2
    }

    pub fn is_independent(&self, s: &Simplex) -> bool {
        s.iter().all(|v| self.adj[v].is_disjoint(s))
    }

    /// `H \ U`: drop the vertices in `removed` and their edges.
    pub fn without(&self, removed: &Simplex) -> Graph {
        let keep: Vec<usize> = (0..self.num_vertices()).filter(|v| !removed.contains(*v)).collect();
        let mut remap = vec![usize::MAX; self.num_vertices()];
        for (new, &old) in keep.iter().enumerate() {
            remap[old] = new;
        }
        let vertices =
            VertexTable::new(keep.iter().map(|&v| self.vertices.label(v).to_owned())).unwrap();
        let edges = self
            .edges()
            .into_iter()
            .filter(|(a, b)| !removed.contains(*a) && !removed.contains(*b))
            .map(|(a, b)| (remap[a], remap[b]));
        Graph::from_edges(vertices, edges).unwrap()
    }

    /// Maximal independent sets, by Bron–Kerbosch with pivoting on the
    /// complement graph. Fails once more than `budget` sets are found.
    pub fn maximal_independent_sets(&self, budget: usize) -> Result<Vec<Simplex>> {
        let n = self.num_vertices();
        let all = Simplex::full(n);
        let non_adj: Vec<Simplex> = (0..n)
            .map(|v| {
                let mut s = all.difference(&self.adj[v]);
                s.remove(v);
                s
            })
            .collect();
        let mut out = Vec::new();
        let mut r = Simplex::empty();
        self.bron_kerbosch(&non_adj, &mut r, all, Simplex::empty(), &mut out, budget)?;
        out.sort();
        Ok(out)
    }

    fn bron_kerbosch(
        &self,
        non_adj: &[Simplex],
        r: &mut Simplex,
        mut p: Simplex,
        mut x: Simplex,
        out: &mut Vec<Simplex>,
        budget: usize,
    ) -> Result<()> {
        if p.is_empty() && x.is_empty() {
            if out.len() == budget {
                return Err(Error::budget("maximal independent set count", budget));
            }
            out.push(r.clone());
            return Ok(());
        }
        let pivot = p
            .union(&x)
            .iter()
            .max_by_key(|&u| non_adj[u].intersection(&p).len())
            .expect("p ∪ x is non-empty");
        let branch: Vec<usize> = p.difference(&non_adj[pivot]).iter().collect();
        for v in branch {
            r.insert(v);
            self.bron_kerbosch(
                non_adj,
                r,
                p.intersection(&non_adj[v]),
                x.intersection(&non_adj[v]),
                out,
                budget,
            )?;
            r.remove(v);
            p.remove(v);
            x.insert(v);
        }
        Ok(())
    }

    pub fn independence_complex(&self) -> Result<SimplicialComplex> {
        self.independence_complex_within(DEFAULT_MIS_BUDGET)
    }

    /// `I(G)`, whose facets are the maximal independent sets.
    pub fn independence_complex_within(&self, budget: usize) -> Result<SimplicialComplex> {
        let sets = self.maximal_independent_sets(budget)?;
        Ok(SimplicialComplex::from_parts_unchecked(self.vertices.clone(), sets))
    }

    /// Every maximal independent set has the same size.
    pub fn is_well_covered(&self) -> Result<bool> {
        Ok(self.independence_complex()?.is_pure())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges()
            .into_iter()
            .map(|(a, b)| format!("{}{}", self.vertices.label(a), self.vertices.label(b)))
            .collect();
        write!(f, "Graph({:?}; {})", self.vertices, edges.join(" "))
    }
}

/// `G[H; U]` on `V(G) × V(H)`: `(u1,v1) ~ (u2,v2)` iff `u1 = u2` and
/// `v1v2 ∈ E(H)`, or `u1u2 ∈ E(G)` and `v1, v2 ∈ U`. Vertex `(u, v)` has
/// index `u·|V(H)| + v` and label `"(u,v)"`.
pub fn general_lex_product(g: &Graph, h: &Graph, u: &Simplex) -> Result<Graph> {
    if u.span() > h.num_vertices() {
        return Err(Error::UnknownLabel(format!("#{}", u.span() - 1)));
    }
    let nh = h.num_vertices();
    let labels = (0..g.num_vertices()).flat_map(|a| {
        (0..nh).map(move |b| format!("({},{})", g.vertices.label(a), h.vertices.label(b)))
    });
    let vertices = VertexTable::new(labels.collect::<Vec<_>>())?;
    let mut edges = Vec::new();
    for a in 0..g.num_vertices() {
        for (x, y) in h.edges() {
            edges.push((a * nh + x, a * nh + y));
        }
    }
    for (a, b) in g.edges() {
        for x in u.iter() {
            for y in u.iter() {
                edges.push((a * nh + x, b * nh + y));
            }
        }
    }
    Graph::from_edges(vertices, edges)
}

/// [`general_lex_product`] with `U` given by labels.
pub fn general_lex_product_by_labels<I, S>(g: &Graph, h: &Graph, u: I) -> Result<Graph>
where
    I: IntoIterator<Item = S>,
    S: AsRef<str>,
{
    general_lex_product(g, h, &h.vertices.simplex(u)?)
}

/// Per-clause verdicts of the condition characterizing when `G[H; {v0}]`
/// is well-covered and shellable for every `G`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub well_covered: bool,
    pub shellable: bool,
    pub deletion_shellable: bool,
    /// Every maximal independent set of `H \ v0` contains a neighbour of `v0`.
    pub neighbor_in_every_maximal_set: bool,
    pub holds: bool,
}

pub fn main_theorem_condition(h: &Graph, v0: &str) -> Result<ConditionReport> {
    let v0 = h.vertices.index(v0)?;
    let ih = h.independence_complex()?;
    let mut removed = Simplex::empty();
    removed.insert(v0);
    let deleted = h.without(&removed);
    let ihd = deleted.independence_complex()?;
    let well_covered = ih.is_pure();
    let shellable = ShellingSearch::new(&ih).run()?.is_shellable();
    let deletion_shellable = ShellingSearch::new(&ihd).run()?.is_shellable();
    let nbrs: Simplex = h
        .neighbors(v0)
        .iter()
        .map(|v| deleted.vertices.index(h.vertices.label(v)).expect("neighbor survives deletion"))
        .collect();
    let neighbor_in_every_maximal_set = ihd.facets().iter().all(|tau| !tau.is_disjoint(&nbrs));
    Ok(ConditionReport {
        well_covered,
        shellable,
        deletion_shellable,
        neighbor_in_every_maximal_set,
        holds: well_covered && shellable && deletion_shellable && neighbor_in_every_maximal_set,
    })
}
