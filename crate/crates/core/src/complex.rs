//! Finite abstract simplicial complexes, stored by their facets.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::simplex::Simplex;

/// Default cap on the number of simplices materialized by
/// [`SimplicialComplex::simplices`].
pub const DEFAULT_SIMPLEX_BUDGET: usize = 1 << 20;

/// Labels of the vertices of a complex, indexed densely from 0.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexTable(Arc<[String]>);

impl VertexTable {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut seen = HashSet::with_capacity(labels.len());
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(Self(labels.into()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn label(&self, v: usize) -> &str {
        &self.0[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.0
    }

    pub fn position(&self, label: &str) -> Option<usize> {
        self.0.iter().position(|l| l == label)
    }

    pub fn index(&self, label: &str) -> Result<usize> {
        self.position(label).ok_or_else(|| Error::UnknownLabel(label.to_owned()))
    }

    /// Resolve a set of labels to a simplex.
    pub fn simplex<I, S>(&self, labels: I) -> Result<Simplex>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        labels.into_iter().map(|l| self.index(l.as_ref())).collect()
    }

    pub fn render(&self, s: &Simplex) -> Vec<String> {
        s.iter().map(|v| self.0[v].clone()).collect()
    }
}

impl fmt::Debug for VertexTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

/// Keep the inclusion-maximal members of `sets`, deduplicated and in
/// canonical order.
pub fn maximal_sets(mut sets: Vec<Simplex>) -> Vec<Simplex> {
    sets.sort();
    sets.dedup();
    // Canonical order puts larger sets first, so a set can only be
    // absorbed by something already kept.
    let mut kept: Vec<Simplex> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| s.is_subset(k)) {
            kept.push(s);
        }
    }
    kept
}

/// A simplicial complex given by its facets over a vertex table.
///
/// Facets are irredundant, non-empty as a list (the complex `{∅}` has the
/// single facet `∅`), and kept in canonical order. Standalone complexes are
/// vertex-saturated; subcomplexes built with [`SimplicialComplex::subcomplex`]
/// share their parent's table and may leave vertices unused.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    vertices: VertexTable,
    facets: Vec<Simplex>,
}

impl SimplicialComplex {
    /// `⟨F_1, …, F_t⟩` on the given labels. Non-maximal and duplicate
    /// generators are dropped.
    pub fn from_facets<L, S, G, T, U>(labels: L, generators: G) -> Result<Self>
    where
        L: IntoIterator<Item = S>,
        S: Into<String>,
        G: IntoIterator<Item = T>,
        T: IntoIterator<Item = U>,
        U: AsRef<str>,
    {
        let vertices = VertexTable::new(labels)?;
        let generators = generators
            .into_iter()
            .map(|g| vertices.simplex(g))
            .collect::<Result<Vec<_>>>()?;
        Self::from_simplices(vertices, generators)
    }

    /// Like [`from_facets`](Self::from_facets) with already-resolved simplices.
    pub fn from_simplices(vertices: VertexTable, generators: Vec<Simplex>) -> Result<Self> {
        let k = Self::unsaturated(vertices, generators)?;
        let used = k.used_vertices();
        if let Some(v) = (0..k.vertices.len()).find(|&v| !used.contains(v)) {
            return Err(Error::UnusedVertex(k.vertices.label(v).to_owned()));
        }
        Ok(k)
    }

    fn unsaturated(vertices: VertexTable, generators: Vec<Simplex>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::Invalid("the void complex (no facets) is not representable".into()));
        }
        if let Some(g) = generators.iter().find(|g| g.span() > vertices.len()) {
            return Err(Error::Invalid(format!("simplex {g:?} is outside the vertex table")));
        }
        Ok(Self { vertices, facets: maximal_sets(generators) })
    }

    /// Build from simplices already known to be valid over `vertices`.
    pub(crate) fn from_parts_unchecked(vertices: VertexTable, generators: Vec<Simplex>) -> Self {
        debug_assert!(!generators.is_empty());
        Self { vertices, facets: maximal_sets(generators) }
    }

    /// The complex `{∅}` with no vertices.
    pub fn empty_simplex_complex() -> Self {
        Self { vertices: VertexTable::new(Vec::<String>::new()).unwrap(), facets: vec![Simplex::empty()] }
    }

    /// The full simplex on `labels`.
    pub fn simplex_on<L, S>(labels: L) -> Result<Self>
    where
        L: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let vertices = VertexTable::new(labels)?;
        let all = Simplex::full(vertices.len());
        Ok(Self { vertices, facets: vec![all] })
    }

    /// A subcomplex on the same vertex table. Vertex saturation is not
    /// required; every generator must be a simplex of `self`.
    pub fn subcomplex(&self, generators: Vec<Simplex>) -> Result<Self> {
        let l = Self::unsaturated(self.vertices.clone(), generators)?;
        if let Some(f) = l.facets.iter().find(|f| !self.contains(f)) {
            return Err(Error::NotASubcomplex(format!("{:?}", self.vertices.render(f))));
        }
        Ok(l)
    }

    /// Subcomplex generated by labelled sets.
    pub fn subcomplex_from_labels<G, T, U>(&self, generators: G) -> Result<Self>
    where
        G: IntoIterator<Item = T>,
        T: IntoIterator<Item = U>,
        U: AsRef<str>,
    {
        let gens = generators
            .into_iter()
            .map(|g| self.vertices.simplex(g))
            .collect::<Result<Vec<_>>>()?;
        self.subcomplex(gens)
    }

    pub fn vertices(&self) -> &VertexTable {
        &self.vertices
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn facets(&self) -> &[Simplex] {
        &self.facets
    }

    pub fn num_facets(&self) -> usize {
        self.facets.len()
    }

    pub fn facet_index(&self, s: &Simplex) -> Option<usize> {
        self.facets.binary_search(s).ok()
    }

    pub fn is_facet(&self, s: &Simplex) -> bool {
        self.facet_index(s).is_some()
    }

    /// Vertices occurring in some facet.
    pub fn used_vertices(&self) -> Simplex {
        self.facets.iter().fold(Simplex::empty(), |acc, f| acc.union(f))
    }

    /// `s ∈ K`.
    pub fn contains(&self, s: &Simplex) -> bool {
        self.facets.iter().any(|f| s.is_subset(f))
    }

    pub fn contains_labels<I, S>(&self, labels: I) -> Result<bool>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        Ok(self.contains(&self.vertices.simplex(labels)?))
    }

    /// `max |F| - 1`; the complex `{∅}` has dimension -1.
    pub fn dim(&self) -> isize {
        self.facets.iter().map(Simplex::len).max().unwrap_or(0) as isize - 1
    }

    pub fn is_pure(&self) -> bool {
        let n = self.facets[0].len();
        self.facets.iter().all(|f| f.len() == n)
    }

    /// A single facet.
    pub fn is_simplex(&self) -> bool {
        self.facets.len() == 1
    }

    /// The deletion `dl_K(v)`: simplices avoiding `v`. The result drops `v`
    /// and any vertex left unused from its table.
    pub fn deletion(&self, v: usize) -> Result<Self> {
        if v >= self.vertices.len() {
            return Err(Error::UnknownLabel(format!("#{v}")));
        }
        let gens: Vec<Simplex> = self
            .facets
            .iter()
            .map(|f| {
                let mut g = f.clone();
                g.remove(v);
                g
            })
            .collect();
        Ok(Self::from_parts_unchecked(self.vertices.clone(), gens).compacted())
    }

    pub fn deletion_by_label(&self, label: &str) -> Result<Self> {
        self.deletion(self.vertices.index(label)?)
    }

    /// `dl_K(v)` as a subcomplex of `K` on the same vertex table.
    pub fn deletion_subcomplex(&self, v: usize) -> Result<Self> {
        if v >= self.vertices.len() {
            return Err(Error::UnknownLabel(format!("#{v}")));
        }
        let gens = self
            .facets
            .iter()
            .map(|f| {
                let mut g = f.clone();
                g.remove(v);
                g
            })
            .collect();
        Ok(Self::from_parts_unchecked(self.vertices.clone(), gens))
    }

    /// Drop unused vertices from the table, renumbering the rest in order.
    pub fn compacted(&self) -> Self {
        let used = self.used_vertices();
        if used.len() == self.vertices.len() {
            return self.clone();
        }
        let keep: Vec<usize> = used.iter().collect();
        let mut remap = vec![usize::MAX; self.vertices.len()];
        for (new, &old) in keep.iter().enumerate() {
            remap[old] = new;
        }
        let vertices = VertexTable(keep.iter().map(|&v| self.vertices.label(v).to_owned()).collect());
        let facets = self.facets.iter().map(|f| f.iter().map(|v| remap[v]).collect()).collect();
        Self::from_parts_unchecked(vertices, facets)
    }

    /// The join `K_1 * ⋯ * K_m`. Vertex `v` of factor `i` is labelled
    /// `"i:v"` (0-based factor index).
    pub fn join(factors: &[&SimplicialComplex]) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::Invalid("join of an empty list".into()));
        }
        let labels = factors
            .iter()
            .enumerate()
            .flat_map(|(i, k)| k.vertices.labels().iter().map(move |l| format!("{i}:{l}")));
        let vertices = VertexTable::new(labels)?;
        let mut facets = vec![Simplex::empty()];
        let mut offset = 0;
        for k in factors {
            facets = facets
                .iter()
                .flat_map(|acc| k.facets.iter().map(move |f| acc.union(&f.shifted(offset))))
                .collect();
            offset += k.num_vertices();
        }
        // Unions of facets of disjoint factors are already irredundant.
        Ok(Self::from_parts_unchecked(vertices, facets))
    }

    /// Every simplex, in canonical order, as long as there are at most
    /// `budget` of them.
    pub fn enumerate_simplices(&self, budget: usize) -> Result<Vec<Simplex>> {
        let mut all: HashSet<Simplex> = HashSet::new();
        for f in &self.facets {
            if f.len() >= 63 || (1usize << f.len()) > budget {
                return Err(Error::budget("simplex count", budget));
            }
            for s in f.subsets() {
                all.insert(s);
                if all.len() > budget {
                    return Err(Error::budget("simplex count", budget));
                }
            }
        }
        let mut v: Vec<Simplex> = all.into_iter().collect();
        v.sort();
        Ok(v)
    }

    pub fn simplices(&self) -> Result<Vec<Simplex>> {
        self.enumerate_simplices(DEFAULT_SIMPLEX_BUDGET)
    }

    pub fn render(&self, s: &Simplex) -> Vec<String> {
        self.vertices.render(s)
    }

    /// Facets as label sets; convenient for comparisons across tables.
    pub fn facet_label_sets(&self) -> BTreeSet<BTreeSet<String>> {
        self.facets.iter().map(|f| self.render(f).into_iter().collect()).collect()
    }

    /// Rename every vertex. Fails if two vertices receive the same label.
    pub fn relabeled(&self, f: impl Fn(&str) -> String) -> Result<Self> {
        let vertices = VertexTable::new(self.vertices.labels().iter().map(|l| f(l)))?;
        Ok(Self::from_parts_unchecked(vertices, self.facets.clone()))
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("⟨")?;
        for (i, facet) in self.facets.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{{{}}}", self.render(facet).join(","))?;
        }
        f.write_str("⟩")
    }
}

/// A pair `(K, L)` with `L` a subcomplex of `K` on `K`'s vertex table.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ComplexPair {
    k: SimplicialComplex,
    l: SimplicialComplex,
}

/// The three-way split of `facet(K) ∪ facet(L)` for a pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetPartition {
    /// `facet(K) \ facet(L)`
    pub only_k: Vec<Simplex>,
    /// `facet(L) \ facet(K)`
    pub only_l: Vec<Simplex>,
    /// `facet(K) ∩ facet(L)`
    pub both: Vec<Simplex>,
}

impl ComplexPair {
    pub fn new(k: SimplicialComplex, l: SimplicialComplex) -> Result<Self> {
        if k.vertices != l.vertices {
            return Err(Error::VertexTableMismatch);
        }
        if let Some(f) = l.facets.iter().find(|f| !k.contains(f)) {
            return Err(Error::NotASubcomplex(format!("{:?}", k.render(f))));
        }
        Ok(Self { k, l })
    }

    /// `L` given as generators over `K`'s labels.
    pub fn from_labels<G, T, U>(k: SimplicialComplex, l_generators: G) -> Result<Self>
    where
        G: IntoIterator<Item = T>,
        T: IntoIterator<Item = U>,
        U: AsRef<str>,
    {
        let l = k.subcomplex_from_labels(l_generators)?;
        Ok(Self { k, l })
    }

    /// `(K, dl_K(v))`.
    pub fn deletion_pair(k: SimplicialComplex, v: usize) -> Result<Self> {
        let l = k.deletion_subcomplex(v)?;
        Ok(Self { k, l })
    }

    pub fn k(&self) -> &SimplicialComplex {
        &self.k
    }

    pub fn l(&self) -> &SimplicialComplex {
        &self.l
    }

    /// `L = K` as complexes.
    pub fn is_trivial(&self) -> bool {
        self.k.facets == self.l.facets
    }

    /// `facet(L) ⊆ facet(K)`.
    pub fn l_facets_are_k_facets(&self) -> bool {
        self.l.facets.iter().all(|f| self.k.is_facet(f))
    }

    pub fn partition(&self) -> FacetPartition {
        let mut only_k = Vec::new();
        let mut both = Vec::new();
        for f in &self.k.facets {
            if self.l.is_facet(f) {
                both.push(f.clone());
            } else {
                only_k.push(f.clone());
            }
        }
        let only_l: Vec<Simplex> =
            self.l.facets.iter().filter(|f| !self.k.is_facet(f)).cloned().collect();
        // facet(K) \ facet(L) = {σ ∈ facet(K) : σ ∉ L}, and every τ in
        // facet(L) \ facet(K) sits strictly inside one of those.
        assert!(only_k.iter().all(|s| !self.l.contains(s)));
        assert!(both.iter().all(|s| self.l.contains(s)));
        assert!(only_l.iter().all(|t| only_k.iter().any(|s| t.is_strict_subset(s))));
        FacetPartition { only_k, only_l, both }
    }
}
