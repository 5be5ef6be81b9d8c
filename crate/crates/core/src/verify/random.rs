//! Seeded instance generators.
//!
//! The stream is SplitMix64. Trial `t` of a campaign with seed `s` uses
//! the generator seeded with `s + t·0x9E3779B97F4A7C15` (wrapping), so
//! each trial is reproducible on its own. `below(n)` maps a draw `x` to
//! `⌊x·n / 2^64⌋`.

use rand_core::{Rng as _, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::complex::{ComplexPair, SimplicialComplex, VertexTable};
use crate::error::Result;
use crate::graph::Graph;
use crate::simplex::Simplex;

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;

pub struct Rng(SplitMix64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Self(SplitMix64::seed_from_u64(seed))
    }

    pub fn for_trial(seed: u64, trial: u64) -> Self {
        Self::new(seed.wrapping_add(trial.wrapping_mul(GOLDEN)))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform in `0..n`. `n` must be positive.
    pub fn below(&mut self, n: usize) -> usize {
        assert!(n > 0);
        ((self.next_u64() as u128 * n as u128) >> 64) as usize
    }

    /// Uniform in `lo..=hi`.
    pub fn between(&mut self, lo: usize, hi: usize) -> usize {
        lo + self.below(hi - lo + 1)
    }

    /// True with probability `num / den`.
    pub fn chance(&mut self, num: usize, den: usize) -> bool {
        self.below(den) < num
    }

    /// Each of `0..n` independently with probability 1/2.
    pub fn subset(&mut self, n: usize) -> Simplex {
        (0..n).filter(|_| self.chance(1, 2)).collect()
    }

    pub fn nonempty_subset(&mut self, n: usize) -> Simplex {
        let s = self.subset(n);
        if s.is_empty() {
            Simplex::from_indices([self.below(n)])
        } else {
            s
        }
    }

    /// A random subset of `s`, each member kept with probability 1/2.
    pub fn subset_of(&mut self, s: &Simplex) -> Simplex {
        s.iter().filter(|_| self.chance(1, 2)).collect()
    }

    pub fn pick<'a, T>(&mut self, xs: &'a [T]) -> &'a T {
        &xs[self.below(xs.len())]
    }
}

pub fn letters(n: usize) -> Vec<String> {
    (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
}

pub fn numbered(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

/// The complex generated by `sets`, on the labels that occur in them.
pub fn complex_on_used(labels: &[String], sets: Vec<Simplex>) -> Result<SimplicialComplex> {
    let used = sets.iter().fold(Simplex::empty(), |a, s| a.union(s));
    let keep: Vec<usize> = used.iter().collect();
    let table = VertexTable::new(keep.iter().map(|&v| labels[v].clone()))?;
    let remap = |s: &Simplex| -> Simplex { s.iter().map(|v| keep.binary_search(&v).unwrap()).collect() };
    let sets = if sets.is_empty() { vec![Simplex::empty()] } else { sets.iter().map(remap).collect() };
    SimplicialComplex::from_simplices(table, sets)
}

/// Between 1 and `max_facets` random non-empty generators over `n`
/// letters; unused letters are dropped.
pub fn complex(rng: &mut Rng, n: usize, max_facets: usize) -> Result<SimplicialComplex> {
    let count = rng.between(1, max_facets);
    let sets = (0..count).map(|_| rng.nonempty_subset(n)).collect();
    complex_on_used(&letters(n), sets)
}

/// A complex on all of `1..=m`: random generators plus a singleton for
/// every vertex they miss.
pub fn index_complex(rng: &mut Rng, m: usize, max_facets: usize) -> Result<SimplicialComplex> {
    let count = rng.between(1, max_facets);
    let mut sets: Vec<Simplex> = (0..count).map(|_| rng.nonempty_subset(m)).collect();
    let used = sets.iter().fold(Simplex::empty(), |a, s| a.union(s));
    sets.extend((0..m).filter(|v| !used.contains(*v)).map(|v| Simplex::from_indices([v])));
    SimplicialComplex::from_simplices(VertexTable::new(numbered(m))?, sets)
}

/// `L` from `K` by keeping, dropping or shrinking each facet. Never void:
/// an empty choice gives `{∅}`.
pub fn subcomplex(rng: &mut Rng, k: &SimplicialComplex) -> Result<ComplexPair> {
    let mut gens = Vec::new();
    for f in k.facets() {
        match rng.below(3) {
            0 => gens.push(f.clone()),
            1 => {}
            _ => gens.push(proper_face(rng, f)),
        }
    }
    if gens.is_empty() {
        gens.push(Simplex::empty());
    }
    ComplexPair::new(k.clone(), k.subcomplex(gens)?)
}

/// `L` generated by a non-empty random subset of `K`'s facets.
pub fn facet_subcomplex(rng: &mut Rng, k: &SimplicialComplex, proper: bool) -> Result<ComplexPair> {
    let t = k.num_facets();
    let mut keep = rng.subset(t);
    if keep.is_empty() {
        keep.insert(rng.below(t));
    }
    if proper && keep.len() == t && t > 1 {
        keep.remove(rng.below(t));
    }
    let gens = keep.iter().map(|i| k.facets()[i].clone()).collect();
    ComplexPair::new(k.clone(), k.subcomplex(gens)?)
}

/// A random strict subset of `f` (possibly empty).
pub fn proper_face(rng: &mut Rng, f: &Simplex) -> Simplex {
    let mut s = rng.subset_of(f);
    if s == *f {
        let members: Vec<usize> = f.iter().collect();
        s.remove(*rng.pick(&members));
    }
    s
}

/// Erdős–Rényi graph on `n` letters with edge probability `num/den`.
pub fn graph(rng: &mut Rng, n: usize, num: usize, den: usize) -> Result<Graph> {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.chance(num, den) {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edges(VertexTable::new(letters(n))?, edges)
}
