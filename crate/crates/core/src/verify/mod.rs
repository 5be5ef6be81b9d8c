//! Executable statements.
//!
//! Each [`Theorem`] is an implication "hypothesis ⇒ conclusion" over a
//! JSON instance. [`check_theorem`] evaluates both sides with the
//! polyjoin, shelling and graph modules; a check fails only when the
//! hypothesis holds and the conclusion does not.
//!
//! | id | alias | instance | hypothesis ⇒ conclusion |
//! |---|---|---|---|
//! | `lemma-2.2` | `size-ordered-shelling` | `{"K"}` | `K` shellable ⇒ some shelling has non-increasing facet sizes |
//! | `lemma-2.3` | `join-shellability` | `{"factors": [..]}` | join shellable ⇔ every factor shellable |
//! | `thm-3.4` | `pureness-criterion` | constant family | `M ≠ {∅}`, `M` not a simplex, `K ≠ L` ⇒ `Z*` pure ⇔ criterion |
//! | `thm-4.1` | `first-block-sufficient` | constant family | `facet(L) ⊆ facet(K)` and a shelling of `K` lists `facet(L)` first ⇒ `Z*` shellable |
//! | `claim-4.2` | `two-edge-obstruction` | constant family | `M ≅ ⟨{1,2},{3,4}⟩` and `facet(L) ⊄ facet(K)` ⇒ `Z*` not shellable |
//! | `thm-4.3` | `alpha-sufficient` | family | `M` shellable and every `K_i` has a facet `α_i` heading a shelling with `facet(L_i) ⊆ ∂α_i` ⇒ `Z*` shellable |
//! | `thm-4.6` | `factors-necessary` | constant family | `M` not a simplex, `K ≠ L`, `facet(L) ⊆ facet(K)`, `Z*` shellable ⇒ `K`, `L` shellable |
//! | `thm-4.9` | `ridge-pair-necessary` | constant family | `M` not a simplex, `K ≠ L`, `Z*` shellable ⇒ some `σ ∈ facet(K)\facet(L)`, `τ ∈ facet(L)` with `|σ∩τ| = max|ρ| − 1` |
//! | `cor-4.10` | `dimension-gap` | constant family | `M` not a simplex, `dim K − dim L ≥ 2` ⇒ `Z*` not shellable |
//! | `thm-4.11` | `deletion-equivalence` | `{"M","K","v0"}` | `M` not a simplex, `facet(dl_K v0) ⊆ facet(K)` ⇒ `Z*_M(K, dl_K v0)` shellable ⇔ `K`, `dl_K v0` shellable |
//! | `prop-5.2` | `product-independence` | `{"G","H","U"}` | always ⇒ `I(G[H;U]) = Z*_{I(G)}(I(H), I(H∖U))` |
//! | `thm-1.2` | `lex-product-condition` | `{"G","H","v0"}` | condition on `(H, v0)` ⇒ `G[H;{v0}]` well-covered and shellable |
//!
//! The ids are the stable interface names; the aliases are accepted too.

pub mod campaign;
mod fixtures;
pub mod random;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::complex::{ComplexPair, SimplicialComplex};
use crate::error::{Error, Result};
use crate::graph::{general_lex_product, main_theorem_condition, Graph};
use crate::json::{ComplexJson, FamilyJson, GraphJson};
use crate::polyjoin::{is_pure_criterion, PairFamily};
use crate::shelling::{OrderConstraint, ShellingSearch};
use crate::simplex::Simplex;

pub use campaign::{random_campaign, CampaignSummary, Caps};
pub use fixtures::{replay_fixture, Assertion, Fixture, FixtureReport};

/// Facet cap for shelling searches run by the checks. Products of graphs
/// reach a few hundred facets.
pub const CHECK_MAX_FACETS: usize = 1024;
pub const CHECK_MAX_STATES: u64 = 1 << 22;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Theorem {
    SizeOrderedShelling,
    JoinShellability,
    PurenessCriterion,
    FirstBlockSufficient,
    TwoEdgeObstruction,
    AlphaSufficient,
    FactorsNecessary,
    RidgePairNecessary,
    DimensionGap,
    DeletionEquivalence,
    ProductIndependence,
    LexProductCondition,
}

impl Theorem {
    pub const ALL: [Theorem; 12] = [
        Theorem::SizeOrderedShelling,
        Theorem::JoinShellability,
        Theorem::PurenessCriterion,
        Theorem::FirstBlockSufficient,
        Theorem::TwoEdgeObstruction,
        Theorem::AlphaSufficient,
        Theorem::FactorsNecessary,
        Theorem::RidgePairNecessary,
        Theorem::DimensionGap,
        Theorem::DeletionEquivalence,
        Theorem::ProductIndependence,
        Theorem::LexProductCondition,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Theorem::SizeOrderedShelling => "lemma-2.2",
            Theorem::JoinShellability => "lemma-2.3",
            Theorem::PurenessCriterion => "thm-3.4",
            Theorem::FirstBlockSufficient => "thm-4.1",
            Theorem::TwoEdgeObstruction => "claim-4.2",
            Theorem::AlphaSufficient => "thm-4.3",
            Theorem::FactorsNecessary => "thm-4.6",
            Theorem::RidgePairNecessary => "thm-4.9",
            Theorem::DimensionGap => "cor-4.10",
            Theorem::DeletionEquivalence => "thm-4.11",
            Theorem::ProductIndependence => "prop-5.2",
            Theorem::LexProductCondition => "thm-1.2",
        }
    }

    pub fn alias(self) -> &'static str {
        match self {
            Theorem::SizeOrderedShelling => "size-ordered-shelling",
            Theorem::JoinShellability => "join-shellability",
            Theorem::PurenessCriterion => "pureness-criterion",
            Theorem::FirstBlockSufficient => "first-block-sufficient",
            Theorem::TwoEdgeObstruction => "two-edge-obstruction",
            Theorem::AlphaSufficient => "alpha-sufficient",
            Theorem::FactorsNecessary => "factors-necessary",
            Theorem::RidgePairNecessary => "ridge-pair-necessary",
            Theorem::DimensionGap => "dimension-gap",
            Theorem::DeletionEquivalence => "deletion-equivalence",
            Theorem::ProductIndependence => "product-independence",
            Theorem::LexProductCondition => "lex-product-condition",
        }
    }

    pub fn parse(name: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|t| t.id() == name || t.alias() == name)
            .ok_or_else(|| Error::UnknownTheorem(name.to_owned()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Clause {
    pub name: &'static str,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TheoremCheck {
    pub theorem: &'static str,
    pub hypothesis: bool,
    /// `None` when the hypothesis fails and the conclusion could not be
    /// evaluated within budget.
    pub conclusion: Option<bool>,
    pub clauses: Vec<Clause>,
    pub instance: Value,
}

impl TheoremCheck {
    pub fn passes(&self) -> bool {
        !self.hypothesis || self.conclusion == Some(true)
    }

    pub fn is_vacuous(&self) -> bool {
        !self.hypothesis
    }
}

pub fn check_theorem(name: &str, instance: &Value) -> Result<TheoremCheck> {
    check(Theorem::parse(name)?, instance)
}

pub fn check(theorem: Theorem, instance: &Value) -> Result<TheoremCheck> {
    let mut c = Checker { clauses: Vec::new() };
    let (hypothesis, conclusion) = c.run(theorem, instance)?;
    Ok(TheoremCheck {
        theorem: theorem.id(),
        hypothesis,
        conclusion,
        clauses: c.clauses,
        instance: instance.clone(),
    })
}

fn field<T: for<'de> Deserialize<'de>>(instance: &Value, key: &str) -> Result<T> {
    let v = instance
        .get(key)
        .ok_or_else(|| Error::Invalid(format!("instance is missing \"{key}\"")))?;
    Ok(T::deserialize(v)?)
}

fn family(instance: &Value) -> Result<PairFamily> {
    FamilyJson::deserialize(instance)?.build()
}

fn constant_pair(f: &PairFamily) -> Result<&ComplexPair> {
    f.uniform_pair()
        .ok_or_else(|| Error::Invalid("this statement needs the same pair at every index".into()))
}

/// Shellability with the check budgets. Only size-non-increasing orders
/// are searched: a shellable complex always has such a shelling, and the
/// size layers keep exhaustive refutations small. The `lemma-2.2` check
/// compares this route against [`shellable_any_order`].
pub fn shellable(k: &SimplicialComplex) -> Result<bool> {
    shellable_with(k, OrderConstraint::SizeNonincreasing)
}

/// Shellability by the unconstrained search.
pub fn shellable_any_order(k: &SimplicialComplex) -> Result<bool> {
    shellable_with(k, OrderConstraint::None)
}

fn shellable_with(k: &SimplicialComplex, c: OrderConstraint) -> Result<bool> {
    Ok(ShellingSearch::new(k)
        .constraint(c)
        .max_facets(CHECK_MAX_FACETS)
        .max_states(CHECK_MAX_STATES)
        .run()?
        .is_shellable())
}

fn is_void_simplex(m: &SimplicialComplex) -> bool {
    m.facets() == [Simplex::empty()]
}

/// `M ≅ ⟨{1,2},{3,4}⟩`: four vertices, two disjoint edges.
fn is_two_disjoint_edges(m: &SimplicialComplex) -> bool {
    let f = m.facets();
    m.num_vertices() == 4 && f.len() == 2 && f.iter().all(|s| s.len() == 2) && f[0].is_disjoint(&f[1])
}

/// Some `σ ∈ facet(K)\facet(L)`, `τ ∈ facet(L)` with
/// `|σ ∩ τ| = max_{ρ ∈ facet(K)\facet(L)} |ρ| − 1`.
pub fn has_ridge_pair(pair: &ComplexPair) -> bool {
    let part = pair.partition();
    let Some(top) = part.only_k.iter().map(Simplex::len).max() else {
        return false;
    };
    part.only_k.iter().any(|s| {
        pair.l().facets().iter().any(|t| s.intersection(t).len() + 1 == top)
    })
}

/// Facets `α` of `K` with `facet(L) ⊆ {α \ {x} : x ∈ α}` that head some
/// shelling of `K`.
fn alpha_candidates(pair: &ComplexPair) -> Result<Vec<Simplex>> {
    let mut out = Vec::new();
    for (i, alpha) in pair.k().facets().iter().enumerate() {
        let boundary = pair
            .l()
            .facets()
            .iter()
            .all(|t| t.is_subset(alpha) && t.len() + 1 == alpha.len());
        if boundary && shellable_with(pair.k(), OrderConstraint::FixedMinimum(i))? {
            out.push(alpha.clone());
        }
    }
    Ok(out)
}

struct Checker {
    clauses: Vec<Clause>,
}

impl Checker {
    fn note(&mut self, name: &'static str, holds: bool) -> bool {
        self.clauses.push(Clause { name, holds });
        holds
    }

    /// Evaluate the conclusion, tolerating a budget overrun when the
    /// hypothesis already failed.
    fn conclude(hypothesis: bool, f: impl FnOnce() -> Result<bool>) -> Result<(bool, Option<bool>)> {
        match f() {
            Ok(b) => Ok((hypothesis, Some(b))),
            Err(e) if e.is_budget() && !hypothesis => Ok((false, None)),
            Err(e) => Err(e),
        }
    }

    fn run(&mut self, theorem: Theorem, inst: &Value) -> Result<(bool, Option<bool>)> {
        use Theorem::*;
        match theorem {
            SizeOrderedShelling => {
                let k = field::<ComplexJson>(inst, "K")?.build()?;
                let h = self.note("K shellable (any order)", shellable_any_order(&k)?);
                Self::conclude(h, || {
                    Ok(self.note("size-ordered shelling", shellable_with(&k, OrderConstraint::SizeNonincreasing)?))
                })
            }
            JoinShellability => {
                let factors = field::<Vec<ComplexJson>>(inst, "factors")?
                    .iter()
                    .map(ComplexJson::build)
                    .collect::<Result<Vec<_>>>()?;
                if factors.is_empty() {
                    return Err(Error::Invalid("a join needs at least one factor".into()));
                }
                let mut all = true;
                for k in &factors {
                    all &= shellable(k)?;
                }
                self.note("every factor shellable", all);
                let refs: Vec<&SimplicialComplex> = factors.iter().collect();
                let join = SimplicialComplex::join(&refs)?;
                let j = self.note("join shellable", shellable(&join)?);
                Ok((true, Some(j == all)))
            }
            PurenessCriterion => {
                let f = family(inst)?;
                let pair = constant_pair(&f)?;
                let h = self.note("M ≠ {∅}", !is_void_simplex(f.m()))
                    & self.note("M not a simplex", !f.m().is_simplex())
                    & self.note("K ≠ L", !pair.is_trivial());
                if !h {
                    // the criterion is undefined outside its hypotheses
                    return Ok((false, None));
                }
                let pure = self.note("Z* pure", f.facets()?.is_pure());
                Ok((true, Some(self.note("criterion", is_pure_criterion(f.m(), pair)?) == pure)))
            }
            FirstBlockSufficient => {
                let f = family(inst)?;
                let pair = constant_pair(&f)?;
                let contained = self.note("facet(L) ⊆ facet(K)", pair.l_facets_are_k_facets());
                let k_sh = self.note("K shellable", shellable(pair.k())?);
                let block = contained
                    && k_sh
                    && shellable_with(
                        pair.k(),
                        OrderConstraint::first_block(pair.k(), pair.l().facets())?,
                    )?;
                let h = self.note("a shelling of K lists facet(L) first", block);
                Self::conclude(h, || Ok(self.note("Z* shellable", shellable(&f.facets()?)?)))
            }
            TwoEdgeObstruction => {
                let f = family(inst)?;
                let pair = constant_pair(&f)?;
                let h = self.note("M ≅ ⟨{1,2},{3,4}⟩", is_two_disjoint_edges(f.m()))
                    & self.note("facet(L) ⊄ facet(K)", !pair.l_facets_are_k_facets());
                Self::conclude(h, || Ok(!self.note("Z* shellable", shellable(&f.facets()?)?)))
            }
            AlphaSufficient => {
                let f = family(inst)?;
                let mut h = self.note("M shellable", shellable(f.m())?);
                let mut every = true;
                for p in f.pairs() {
                    if !every {
                        break;
                    }
                    every = !alpha_candidates(p)?.is_empty();
                }
                h &= self.note("every K_i has an admissible α_i", every);
                Self::conclude(h, || Ok(self.note("Z* shellable", shellable(&f.facets()?)?)))
            }
            FactorsNecessary => {
                let f = family(inst)?;
                let pair = constant_pair(&f)?;
                let mut h = self.note("M not a simplex", !f.m().is_simplex())
                    & self.note("K ≠ L", !pair.is_trivial())
                    & self.note("facet(L) ⊆ facet(K)", pair.l_facets_are_k_facets());
                if h {
                    h = self.note("Z* shellable", shellable(&f.facets()?)?);
                }
                Self::conclude(h, || {
                    let k = self.note("K shellable", shellable(pair.k())?);
                    let l = self.note("L shellable", shellable(pair.l())?);
                    Ok(k && l)
                })
            }
            RidgePairNecessary => {
                let f = family(inst)?;
                let pair = constant_pair(&f)?;
                let mut h = self.note("M not a simplex", !f.m().is_simplex())
                    & self.note("K ≠ L", !pair.is_trivial());
                if h {
                    h = self.note("Z* shellable", shellable(&f.facets()?)?);
                }
                Self::conclude(h, || Ok(self.note("ridge pair exists", has_ridge_pair(pair))))
            }
            DimensionGap => {
                let f = family(inst)?;
                let pair = constant_pair(&f)?;
                let h = self.note("M not a simplex", !f.m().is_simplex())
                    & self.note("dim K − dim L ≥ 2", pair.k().dim() - pair.l().dim() >= 2);
                Self::conclude(h, || Ok(!self.note("Z* shellable", shellable(&f.facets()?)?)))
            }
            DeletionEquivalence => {
                let m = field::<ComplexJson>(inst, "M")?.build()?;
                let k = field::<ComplexJson>(inst, "K")?.build()?;
                let v0 = k.vertices().index(&field::<String>(inst, "v0")?)?;
                let pair = ComplexPair::deletion_pair(k, v0)?;
                let h = self.note("M not a simplex", !m.is_simplex())
                    & self.note("facet(dl v0) ⊆ facet(K)", pair.l_facets_are_k_facets());
                let f = PairFamily::uniform(m, pair);
                Self::conclude(h, || {
                    let pair = f.uniform_pair().expect("constant family");
                    let z = self.note("Z* shellable", shellable(&f.facets()?)?);
                    let k = self.note("K shellable", shellable(pair.k())?);
                    let l = self.note("dl v0 shellable", shellable(pair.l())?);
                    Ok(z == (k && l))
                })
            }
            ProductIndependence => {
                let g = field::<GraphJson>(inst, "G")?.build()?;
                let h = field::<GraphJson>(inst, "H")?.build()?;
                let u = h.vertices().simplex(field::<Vec<String>>(inst, "U")?)?;
                let direct = general_lex_product(&g, &h, &u)?.independence_complex()?;
                let family = product_family(&g, &h, &u)?;
                let z = family.facets()?;
                // both vertex sets are V(G) × V(H) in u-major order
                let same = direct.facets() == z.facets();
                Ok((true, Some(self.note("I(G[H;U]) = Z*", same))))
            }
            LexProductCondition => {
                let g = field::<GraphJson>(inst, "G")?.build()?;
                let h = field::<GraphJson>(inst, "H")?.build()?;
                let v0 = field::<String>(inst, "v0")?;
                let report = main_theorem_condition(&h, &v0)?;
                self.note("H well-covered", report.well_covered);
                self.note("I(H) shellable", report.shellable);
                self.note("I(H∖v0) shellable", report.deletion_shellable);
                self.note("neighbour of v0 in every τ", report.neighbor_in_every_maximal_set);
                let hyp = report.holds;
                Self::conclude(hyp, || {
                    let u = Simplex::from_indices([h.vertices().index(&v0)?]);
                    let i = general_lex_product(&g, &h, &u)?.independence_complex()?;
                    let wc = self.note("G[H;{v0}] well-covered", i.is_pure());
                    let sh = self.note("I(G[H;{v0}]) shellable", shellable(&i)?);
                    Ok(wc && sh)
                })
            }
        }
    }
}

/// `Z*_{I(G)}(I(H), I(H∖U))`, with `I(H∖U)` placed on `H`'s vertex table.
pub fn product_family(g: &Graph, h: &Graph, u: &Simplex) -> Result<PairFamily> {
    let ih = h.independence_complex()?;
    let reduced = h.without(u).independence_complex()?;
    let l = reduced.facets().iter().map(|f| reduced.render(f));
    let pair = ComplexPair::from_labels(ih, l)?;
    Ok(PairFamily::uniform(g.independence_complex()?, pair))
}
