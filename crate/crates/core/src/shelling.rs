//! Shelling orders: verification and exhaustive search.
//!
//! An order `F_1, …, F_t` of the facets of `K` is a shelling iff for all
//! `i < k` there are `j < k` and `x ∈ F_k \ F_i` with
//! `F_j ∩ F_k = F_k \ {x}`. Equivalently, with
//! `R_k = {x ∈ F_k : F_k \ F_j = {x} for some j < k}`, every earlier
//! `F_i` must miss some vertex of `R_k`.
//!
//! Whether a facet can be appended to a prefix depends only on the *set*
//! of facets already placed, so [`ShellingSearch`] memoizes failed prefix
//! sets and explores at most `2^t` states. `{∅}` and every other
//! single-facet complex are shellable (the condition is vacuous).

use std::collections::HashSet;


use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::simplex::Simplex;

pub const DEFAULT_MAX_FACETS: usize = 20;
pub const DEFAULT_MAX_STATES: u64 = 1 << 22;

/// Sets of facet indices. Same bit-set machinery as vertex sets.
type FacetSet = Simplex;

/// A facet order, as indices into the complex's canonical facet list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ShellingCertificate {
    pub order: Vec<usize>,
}

impl ShellingCertificate {
    pub fn facets<'a>(&self, k: &'a SimplicialComplex) -> Vec<&'a Simplex> {
        self.order.iter().map(|&i| &k.facets()[i]).collect()
    }

    /// Facets as label lists, in shelling order.
    pub fn labelled(&self, k: &SimplicialComplex) -> Vec<Vec<String>> {
        self.facets(k).into_iter().map(|f| k.render(f)).collect()
    }
}

/// Restrictions on the facet order looked for by [`ShellingSearch`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub enum OrderConstraint {
    #[default]
    None,
    /// The designated facets occupy a prefix, in any internal order.
    FirstBlock(Vec<usize>),
    /// The designated facet comes first.
    FixedMinimum(usize),
    /// `|F_i| >= |F_j|` whenever `i < j`.
    SizeNonincreasing,
}

impl OrderConstraint {
    /// `FirstBlock` from facet simplices of `k`.
    pub fn first_block(k: &SimplicialComplex, block: &[Simplex]) -> Result<Self> {
        let idx = block
            .iter()
            .map(|s| k.facet_index(s).ok_or_else(|| not_a_facet(k, s)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::FirstBlock(idx))
    }

    pub fn fixed_minimum(k: &SimplicialComplex, facet: &Simplex) -> Result<Self> {
        Ok(Self::FixedMinimum(k.facet_index(facet).ok_or_else(|| not_a_facet(k, facet))?))
    }

    fn validate(&self, t: usize) -> Result<()> {
        let bad = match self {
            Self::FirstBlock(b) => b.iter().any(|&i| i >= t),
            Self::FixedMinimum(i) => *i >= t,
            _ => false,
        };
        if bad {
            return Err(Error::Invalid(format!("constraint {self:?} names a facet out of range")));
        }
        Ok(())
    }

    pub fn is_satisfied_by(&self, k: &SimplicialComplex, order: &[usize]) -> bool {
        match self {
            Self::None => true,
            Self::FixedMinimum(f) => order.first() == Some(f),
            Self::FirstBlock(block) => {
                let block: HashSet<usize> = block.iter().copied().collect();
                order.iter().take(block.len()).all(|i| block.contains(i))
            }
            Self::SizeNonincreasing => order
                .windows(2)
                .all(|w| k.facets()[w[0]].len() >= k.facets()[w[1]].len()),
        }
    }
}

fn not_a_facet(k: &SimplicialComplex, s: &Simplex) -> Error {
    Error::Invalid(format!("{:?} is not a facet", k.render(s)))
}

fn check_permutation(t: usize, order: &[usize]) -> Result<()> {
    let mut seen = vec![false; t];
    if order.len() != t {
        return Err(Error::NotAPermutation { facets: t });
    }
    for &i in order {
        if i >= t || std::mem::replace(&mut seen[i], true) {
            return Err(Error::NotAPermutation { facets: t });
        }
    }
    Ok(())
}

/// Check a facet order against the pairwise shelling condition.
pub fn verify_shelling(k: &SimplicialComplex, order: &[usize]) -> Result<bool> {
    check_permutation(k.num_facets(), order)?;
    let facets: Vec<&Simplex> = order.iter().map(|&i| &k.facets()[i]).collect();
    for (pos, fk) in facets.iter().enumerate().skip(1) {
        let mut restriction = Simplex::empty();
        for fj in &facets[..pos] {
            let missing = fk.difference(fj);
            if missing.len() == 1 {
                restriction = restriction.union(&missing);
            }
        }
        if facets[..pos].iter().any(|fi| fk.difference(fi).is_disjoint(&restriction)) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Shellable(ShellingCertificate),
    /// The search space was exhausted; `explored` counts expanded states.
    NotShellable { explored: u64 },
}

impl SearchOutcome {
    pub fn is_shellable(&self) -> bool {
        matches!(self, Self::Shellable(_))
    }

    pub fn certificate(&self) -> Option<&ShellingCertificate> {
        match self {
            Self::Shellable(c) => Some(c),
            Self::NotShellable { .. } => None,
        }
    }
}

/// Depth-first search for a shelling, trying candidates in canonical facet
/// order. The first certificate in that order is returned, so results are
/// reproducible.
#[derive(Clone, Debug)]
pub struct ShellingSearch<'a> {
    complex: &'a SimplicialComplex,
    constraint: OrderConstraint,
    max_facets: usize,
    max_states: u64,
    memoize: bool,
    prune: bool,
}

impl<'a> ShellingSearch<'a> {
    pub fn new(complex: &'a SimplicialComplex) -> Self {
        Self {
            complex,
            constraint: OrderConstraint::None,
            max_facets: DEFAULT_MAX_FACETS,
            max_states: DEFAULT_MAX_STATES,
            memoize: true,
            prune: true,
        }
    }

    pub fn constraint(mut self, c: OrderConstraint) -> Self {
        self.constraint = c;
        self
    }

    pub fn max_facets(mut self, n: usize) -> Self {
        self.max_facets = n;
        self
    }

    pub fn max_states(mut self, n: u64) -> Self {
        self.max_states = n;
        self
    }

    /// Remember failed prefix sets (on by default).
    pub fn memoize(mut self, on: bool) -> Self {
        self.memoize = on;
        self
    }

    /// Prune with the connectivity test and forced facet precedences
    /// (on by default).
    pub fn prune(mut self, on: bool) -> Self {
        self.prune = on;
        self
    }

    pub fn run(&self) -> Result<SearchOutcome> {
        let k = self.complex;
        let t = k.num_facets();
        if t > self.max_facets {
            return Err(Error::budget("facet count", self.max_facets));
        }
        self.constraint.validate(t)?;
        let mut state = SearchState::new(k, &self.constraint, self.max_states, self.memoize)?;
        if self.prune && (!large_facets_connected(k) || !state.derive_precedences()) {
            return Ok(SearchOutcome::NotShellable { explored: 0 });
        }
        let mut order = Vec::with_capacity(t);
        let mut placed = FacetSet::empty();
        if !state.dfs(&mut placed, &mut order)? {
            return Ok(SearchOutcome::NotShellable { explored: state.explored });
        }
        let cert = ShellingCertificate { order };
        if !verify_shelling(k, &cert.order)? || !self.constraint.is_satisfied_by(k, &cert.order) {
            return Err(Error::Defect(format!("search produced an invalid order {:?}", cert.order)));
        }
        Ok(SearchOutcome::Shellable(cert))
    }
}

/// Necessary for shellability: the facets with at least two vertices are
/// connected through shared vertices. In a shelling each such facet after
/// the first meets an earlier facet in a ridge, and that earlier facet
/// cannot be a single vertex because a point facet lies in no other facet.
fn large_facets_connected(k: &SimplicialComplex) -> bool {
    let large: Vec<&Simplex> = k.facets().iter().filter(|f| f.len() >= 2).collect();
    let Some(first) = large.first() else {
        return true;
    };
    let mut reached = vec![false; large.len()];
    reached[0] = true;
    let mut covered = (*first).clone();
    loop {
        let mut grew = false;
        for (i, f) in large.iter().enumerate() {
            if !reached[i] && !f.is_disjoint(&covered) {
                reached[i] = true;
                covered = covered.union(f);
                grew = true;
            }
        }
        if !grew {
            return reached.iter().all(|&r| r);
        }
    }
}

struct SearchState<'c> {
    t: usize,
    /// `diff[k * t + i]`: vertices of `F_k` missing from `F_i`, as a mask
    /// over the positions of `F_k`'s sorted vertex list.
    diff: Vec<u128>,
    sizes: Vec<usize>,
    /// Facets that must already be placed before each facet is eligible.
    pred: Vec<FacetSet>,
    constraint: &'c OrderConstraint,
    block: FacetSet,
    memo: Option<HashSet<FacetSet>>,
    /// Placed sets every valid order passes through: all of the set
    /// precedes everything outside it.
    checkpoints: HashSet<FacetSet>,
    /// A checkpoint failed, so nothing can succeed.
    dead: bool,
    explored: u64,
    max_states: u64,
}

#[inline]
fn ridge_bit(mask: u128) -> u128 {
    if mask.is_power_of_two() {
        mask
    } else {
        0
    }
}

impl<'c> SearchState<'c> {
    fn new(
        k: &SimplicialComplex,
        constraint: &'c OrderConstraint,
        max_states: u64,
        memoize: bool,
    ) -> Result<Self> {
        let facets = k.facets();
        let t = facets.len();
        if facets.iter().any(|f| f.len() > 128) {
            return Err(Error::budget("facet size for shelling search", 128));
        }
        let positions: Vec<Vec<usize>> = facets.iter().map(|f| f.iter().collect()).collect();
        let mut diff = vec![0u128; t * t];
        for (kk, pos) in positions.iter().enumerate() {
            for (i, fi) in facets.iter().enumerate() {
                diff[kk * t + i] = pos
                    .iter()
                    .enumerate()
                    .filter(|(_, &v)| !fi.contains(v))
                    .fold(0u128, |m, (p, _)| m | 1 << p);
            }
        }
        let block = match constraint {
            OrderConstraint::FirstBlock(b) => b.iter().copied().collect(),
            _ => FacetSet::empty(),
        };
        Ok(Self {
            t,
            diff,
            sizes: facets.iter().map(Simplex::len).collect(),
            pred: vec![FacetSet::empty(); t],
            constraint,
            block,
            memo: memoize.then(HashSet::new),
            checkpoints: HashSet::new(),
            dead: false,
            explored: 0,
            max_states,
        })
    }

    /// Compute forced precedences to a fixpoint. `k` must precede `i` when
    /// no ridge of `F_k` that could still be present when `F_k` is placed
    /// covers `F_k ∩ F_i`. Constraint orderings seed the relation. Returns
    /// false when the relation has a cycle, i.e. no valid order exists.
    fn derive_precedences(&mut self) -> bool {
        let t = self.t;
        let mut after: Vec<FacetSet> = vec![FacetSet::empty(); t];
        match self.constraint {
            OrderConstraint::None => {}
            OrderConstraint::FixedMinimum(f) => {
                after[*f] = (0..t).filter(|&i| i != *f).collect();
            }
            OrderConstraint::FirstBlock(_) => {
                let rest: FacetSet = (0..t).filter(|i| !self.block.contains(*i)).collect();
                for b in self.block.iter() {
                    after[b] = rest.clone();
                }
            }
            OrderConstraint::SizeNonincreasing => {
                for (kk, a) in after.iter_mut().enumerate() {
                    *a = (0..t).filter(|&i| self.sizes[i] < self.sizes[kk]).collect();
                }
            }
        }
        loop {
            let mut changed = false;
            #[allow(clippy::needless_range_loop)]
            for kk in 0..t {
                let row = &self.diff[kk * t..(kk + 1) * t];
                let potential = (0..t)
                    .filter(|&j| j != kk && !after[kk].contains(j))
                    .fold(0u128, |m, j| m | ridge_bit(row[j]));
                for i in 0..t {
                    if i != kk && row[i] & potential == 0 && !after[kk].contains(i) {
                        after[kk].insert(i);
                        changed = true;
                    }
                }
            }
            // transitive closure
            for kk in 0..t {
                let mut reach = after[kk].clone();
                loop {
                    let next = reach.iter().fold(reach.clone(), |acc, j| acc.union(&after[j]));
                    if next == reach {
                        break;
                    }
                    reach = next;
                }
                if reach != after[kk] {
                    after[kk] = reach;
                    changed = true;
                }
                if after[kk].contains(kk) {
                    return false;
                }
            }
            if !changed {
                break;
            }
        }
        for (kk, a) in after.iter().enumerate() {
            for i in a.iter() {
                self.pred[i].insert(kk);
            }
        }
        for p in &self.pred {
            if !p.is_empty() && (0..t).all(|j| p.contains(j) || p.is_subset(&self.pred[j])) {
                self.checkpoints.insert(p.clone());
            }
        }
        true
    }

    fn appendable(&self, kk: usize, order: &[usize]) -> bool {
        let row = &self.diff[kk * self.t..(kk + 1) * self.t];
        let restriction = order.iter().fold(0u128, |m, &j| m | ridge_bit(row[j]));
        order.iter().all(|&i| row[i] & restriction != 0)
    }

    fn allowed(&self, kk: usize, placed: &FacetSet, depth: usize) -> bool {
        match self.constraint {
            OrderConstraint::None => true,
            OrderConstraint::FixedMinimum(f) => (depth == 0) == (kk == *f),
            OrderConstraint::FirstBlock(_) => {
                let block_done = self.block.is_subset(placed);
                block_done || self.block.contains(kk)
            }
            OrderConstraint::SizeNonincreasing => {
                let largest_left =
                    (0..self.t).filter(|i| !placed.contains(*i)).map(|i| self.sizes[i]).max();
                Some(self.sizes[kk]) == largest_left
            }
        }
    }

    fn dfs(&mut self, placed: &mut FacetSet, order: &mut Vec<usize>) -> Result<bool> {
        if order.len() == self.t {
            return Ok(true);
        }
        if self.dead {
            return Ok(false);
        }
        if self.memo.as_ref().is_some_and(|m| m.contains(placed)) {
            return Ok(false);
        }
        self.explored += 1;
        if self.explored > self.max_states {
            return Err(Error::budget("shelling search states", self.max_states));
        }
        for kk in 0..self.t {
            if placed.contains(kk)
                || !self.pred[kk].is_subset(placed)
                || !self.allowed(kk, placed, order.len())
                || !self.appendable(kk, order)
            {
                continue;
            }
            placed.insert(kk);
            order.push(kk);
            if self.dfs(placed, order)? {
                return Ok(true);
            }
            order.pop();
            placed.remove(kk);
            if self.dead {
                return Ok(false);
            }
        }
        if self.checkpoints.contains(placed) {
            self.dead = true;
        }
        if let Some(m) = self.memo.as_mut() {
            m.insert(placed.clone());
        }
        Ok(false)
    }
}

/// Search with the default budgets.
pub fn find_shelling(k: &SimplicialComplex, constraint: OrderConstraint) -> Result<SearchOutcome> {
    ShellingSearch::new(k).constraint(constraint).run()
}

pub fn is_shellable(k: &SimplicialComplex) -> Result<bool> {
    Ok(find_shelling(k, OrderConstraint::None)?.is_shellable())
}

/// Whether a shelling with non-increasing facet sizes exists. Every
/// shellable complex has one, so this is cross-checked against the
/// unconstrained search and a disagreement is reported as a defect.
pub fn exists_size_ordered_shelling(k: &SimplicialComplex) -> Result<bool> {
    let sized = find_shelling(k, OrderConstraint::SizeNonincreasing)?.is_shellable();
    let any = is_shellable(k)?;
    if sized != any {
        return Err(Error::Defect(format!(
            "size-ordered search ({sized}) disagrees with unconstrained search ({any}) on {k:?}"
        )));
    }
    Ok(sized)
}
