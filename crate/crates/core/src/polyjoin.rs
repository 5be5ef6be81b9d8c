//! Polyhedral joins `Z*_M(K, L)`.
//!
//! For a complex `M` on `[m]` and pairs `(K_i, L_i)`, `Z*_M` is the union
//! over `S ∈ M` of the joins `X_1 * ⋯ * X_m` with `X_i = K_i` for `i ∈ S`
//! and `X_i = L_i` otherwise. A set `φ` over `⊔ V(K_i)` lies in `Z*_M`
//! iff every component `φ_i` lies in `K_i` and the support
//! `{i : φ_i ∉ L_i}` lies in `M`.

use std::sync::Arc;

use crate::complex::{ComplexPair, SimplicialComplex, VertexTable, DEFAULT_SIMPLEX_BUDGET};
use crate::error::{Error, Result};
use crate::simplex::Simplex;

/// Cap on the number of facets produced by [`PairFamily::facets`].
pub const DEFAULT_FACET_BUDGET: usize = 1 << 20;
/// Cap on `∏ |K_i|` for [`PairFamily::facets_bruteforce`].
pub const DEFAULT_BRUTEFORCE_BUDGET: usize = 1 << 22;

/// A complex `M` on `[m]` together with one pair per vertex of `M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairFamily {
    m: SimplicialComplex,
    pairs: Vec<Arc<ComplexPair>>,
    offsets: Vec<usize>,
}

/// One simplex of `K_i` per index: the components `φ_i` of a set `φ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProductSimplex {
    pub components: Vec<Simplex>,
}

impl ProductSimplex {
    pub fn new(components: Vec<Simplex>) -> Self {
        Self { components }
    }

    pub fn empty(arity: usize) -> Self {
        Self { components: vec![Simplex::empty(); arity] }
    }

    pub fn len(&self) -> usize {
        self.components.iter().map(Simplex::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.components.iter().all(Simplex::is_empty)
    }
}

impl PairFamily {
    pub fn new(m: SimplicialComplex, pairs: Vec<ComplexPair>) -> Result<Self> {
        Self::from_shared(m, pairs.into_iter().map(Arc::new).collect())
    }

    /// The constant family `(K, L)` at every vertex of `M`.
    pub fn uniform(m: SimplicialComplex, pair: ComplexPair) -> Self {
        let shared = Arc::new(pair);
        let pairs = vec![shared; m.num_vertices()];
        Self::from_shared(m, pairs).expect("arity matches by construction")
    }

    fn from_shared(m: SimplicialComplex, pairs: Vec<Arc<ComplexPair>>) -> Result<Self> {
        if pairs.len() != m.num_vertices() {
            return Err(Error::FamilyArity { pairs: pairs.len(), vertices: m.num_vertices() });
        }
        let offsets = pairs
            .iter()
            .scan(0, |acc, p| {
                let here = *acc;
                *acc += p.k().num_vertices();
                Some(here)
            })
            .collect();
        Ok(Self { m, pairs, offsets })
    }

    pub fn m(&self) -> &SimplicialComplex {
        &self.m
    }

    pub fn arity(&self) -> usize {
        self.pairs.len()
    }

    pub fn pair(&self, i: usize) -> &ComplexPair {
        &self.pairs[i]
    }

    pub fn pairs(&self) -> impl Iterator<Item = &ComplexPair> {
        self.pairs.iter().map(|p| &**p)
    }

    /// The common pair if the family is constant.
    pub fn uniform_pair(&self) -> Option<&ComplexPair> {
        let first = self.pairs.first()?;
        self.pairs.iter().all(|p| Arc::ptr_eq(p, first) || **p == **first).then_some(&**first)
    }

    /// `⊔ V(K_i)`, with vertex `v` of `K_i` labelled `"i:v"` where `i`
    /// is `M`'s label for the index.
    pub fn vertex_table(&self) -> Result<VertexTable> {
        let labels = self.pairs.iter().enumerate().flat_map(|(i, p)| {
            let tag = self.m.vertices().label(i);
            p.k().vertices().labels().iter().map(move |v| format!("{tag}:{v}"))
        });
        VertexTable::new(labels)
    }

    pub fn flatten(&self, p: &ProductSimplex) -> Simplex {
        p.components
            .iter()
            .zip(&self.offsets)
            .fold(Simplex::empty(), |acc, (c, &off)| acc.union(&c.shifted(off)))
    }

    /// Split a set over the tagged vertex table into its components.
    pub fn split(&self, flat: &Simplex) -> ProductSimplex {
        let mut components = vec![Simplex::empty(); self.arity()];
        for v in flat.iter() {
            let i = self.offsets.partition_point(|&o| o <= v) - 1;
            components[i].insert(v - self.offsets[i]);
        }
        ProductSimplex { components }
    }

    /// `φ̄ = {i : φ_i ∉ L_i}`, over `V(M)`.
    pub fn support(&self, p: &ProductSimplex) -> Simplex {
        p.components
            .iter()
            .zip(&self.pairs)
            .enumerate()
            .filter(|(_, (c, pair))| !pair.l().contains(c))
            .map(|(i, _)| i)
            .collect()
    }

    /// `φ ∈ Z*_M`: every `φ_i ∈ K_i` and `φ̄ ∈ M`.
    pub fn is_member(&self, p: &ProductSimplex) -> bool {
        p.components.len() == self.arity()
            && p.components.iter().zip(&self.pairs).all(|(c, pair)| pair.k().contains(c))
            && self.m.contains(&self.support(p))
    }

    /// Facets of `Z*_M` from the facet description, with default budgets.
    pub fn facets(&self) -> Result<SimplicialComplex> {
        self.facets_within(DEFAULT_FACET_BUDGET)
    }

    /// Facets of `Z*_M`. For each simplex `S` of `M` (not only facets: a
    /// facet may have empty support), component `i ∈ S` ranges over
    /// `facet(K_i) \ facet(L_i)` and component `i ∉ S` over those
    /// `τ ∈ facet(L_i)` with `τ ∈ facet(K_i)` or `S ∪ {i} ∉ M`.
    pub fn facets_within(&self, budget: usize) -> Result<SimplicialComplex> {
        let vertices = self.vertex_table()?;
        let parts: Vec<_> = self.pairs.iter().map(|p| p.partition()).collect();
        // facet(L_i) with membership in facet(K_i) precomputed
        let l_facets: Vec<Vec<(Simplex, bool)>> = self
            .pairs
            .iter()
            .map(|p| p.l().facets().iter().map(|t| (t.clone(), p.k().is_facet(t))).collect())
            .collect();
        let mut out: Vec<Simplex> = Vec::new();
        for s in self.m.enumerate_simplices(DEFAULT_SIMPLEX_BUDGET)? {
            let mut choices: Vec<Vec<Simplex>> = Vec::with_capacity(self.arity());
            for i in 0..self.arity() {
                let options: Vec<Simplex> = if s.contains(i) {
                    // facet(K) \ facet(L) = facet(K) \ L: a facet of K lying
                    // in L is maximal there too.
                    parts[i].only_k.clone()
                } else {
                    let mut grown = s.clone();
                    grown.insert(i);
                    let extendable = self.m.contains(&grown);
                    l_facets[i]
                        .iter()
                        .filter(|(_, in_k)| *in_k || !extendable)
                        .map(|(t, _)| t.clone())
                        .collect()
                };
                if options.is_empty() {
                    break;
                }
                choices.push(options);
            }
            if choices.len() < self.arity() {
                continue;
            }
            let count = choices.iter().try_fold(1usize, |acc, c| acc.checked_mul(c.len()));
            match count {
                Some(n) if n + out.len() <= budget => {}
                _ => return Err(Error::budget("polyhedral join facet count", budget)),
            }
            let mut partial = vec![Simplex::empty()];
            for (i, opts) in choices.iter().enumerate() {
                let off = self.offsets[i];
                partial = partial
                    .iter()
                    .flat_map(|acc| opts.iter().map(move |o| acc.union(&o.shifted(off))))
                    .collect();
            }
            out.extend(partial);
        }
        let produced = out.len();
        let z = SimplicialComplex::from_parts_unchecked(vertices, out);
        if z.num_facets() != produced {
            return Err(Error::Defect(format!(
                "facet description produced {produced} sets but only {} are maximal",
                z.num_facets()
            )));
        }
        Ok(z)
    }

    /// Facets of `Z*_M` by testing every tuple of component simplices for
    /// membership and keeping the maximal ones.
    pub fn facets_bruteforce(&self) -> Result<SimplicialComplex> {
        self.facets_bruteforce_within(DEFAULT_BRUTEFORCE_BUDGET)
    }

    pub fn facets_bruteforce_within(&self, budget: usize) -> Result<SimplicialComplex> {
        let vertices = self.vertex_table()?;
        let per_component = self
            .pairs
            .iter()
            .map(|p| p.k().enumerate_simplices(budget))
            .collect::<Result<Vec<_>>>()
            .map_err(|_| Error::budget("brute-force tuple count", budget))?;
        let total = per_component.iter().try_fold(1usize, |acc, c| acc.checked_mul(c.len()));
        if total.is_none_or(|n| n > budget) {
            return Err(Error::budget("brute-force tuple count", budget));
        }
        let mut members = Vec::new();
        let mut idx = vec![0usize; self.arity()];
        'outer: loop {
            let p = ProductSimplex::new(
                idx.iter().zip(&per_component).map(|(&j, c)| c[j].clone()).collect(),
            );
            if self.is_member(&p) {
                members.push(self.flatten(&p));
            }
            for (pos, len) in per_component.iter().map(Vec::len).enumerate() {
                idx[pos] += 1;
                if idx[pos] < len {
                    continue 'outer;
                }
                idx[pos] = 0;
            }
            break;
        }
        Ok(SimplicialComplex::from_parts_unchecked(vertices, members))
    }
}

/// Pureness of `Z*_M(K, L)` predicted from `K`, `L` and `M` alone: it is
/// pure iff `K` is pure with `facet(L) ⊆ facet(K)`, or `K`, `L`, `M` are
/// all pure. Requires `M ≠ {∅}`, `M` not a simplex, and `K ≠ L`.
pub fn is_pure_criterion(m: &SimplicialComplex, pair: &ComplexPair) -> Result<bool> {
    if m.facets() == [Simplex::empty()] {
        return Err(Error::HypothesisViolated("M must not be {∅}"));
    }
    if m.is_simplex() {
        return Err(Error::HypothesisViolated("M must not be a simplex"));
    }
    if pair.is_trivial() {
        return Err(Error::HypothesisViolated("L must be a proper subcomplex of K"));
    }
    let (k, l) = (pair.k(), pair.l());
    Ok((k.is_pure() && pair.l_facets_are_k_facets()) || (k.is_pure() && l.is_pure() && m.is_pure()))
}
