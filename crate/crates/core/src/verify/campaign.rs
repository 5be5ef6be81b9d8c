//! Seeded random campaigns over [`Theorem`]s.

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use super::random::{self, letters, Rng};
use super::{check, Theorem};
use crate::complex::{ComplexPair, SimplicialComplex};
use crate::error::{Error, Result};
use crate::json::{ComplexJson, FamilyJson, GraphJson};
use crate::polyjoin::PairFamily;
use crate::simplex::Simplex;

/// Resampling attempts per trial before giving up on the caps.
const MAX_ATTEMPTS: usize = 200;

/// Size caps for generated instances.
///
/// For complexes: `vertices` letters and up to `facets` generators per
/// complex, `m` indices for `M` (or factors for joins), and at most
/// `zstar_facets` facets in the resulting `Z*` or join. For graphs: `G`
/// has up to `m` vertices and `H` up to `vertices`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Caps {
    pub m: usize,
    pub vertices: usize,
    pub facets: usize,
    pub zstar_facets: usize,
}

impl Caps {
    pub fn for_theorem(t: Theorem) -> Self {
        use Theorem::*;
        match t {
            SizeOrderedShelling => Caps { m: 1, vertices: 6, facets: 5, zstar_facets: 0 },
            JoinShellability => Caps { m: 3, vertices: 4, facets: 4, zstar_facets: 64 },
            ProductIndependence | LexProductCondition => {
                Caps { m: 4, vertices: 5, facets: 0, zstar_facets: 0 }
            }
            TwoEdgeObstruction => Caps { m: 4, vertices: 4, facets: 3, zstar_facets: 64 },
            _ => Caps { m: 4, vertices: 4, facets: 3, zstar_facets: 48 },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CampaignSummary {
    pub theorem: &'static str,
    pub trials: u64,
    pub seed: u64,
    pub caps: Caps,
    pub vacuous: u64,
    pub non_vacuous: u64,
    pub passed: u64,
    pub failed: u64,
    /// Trials whose conclusion could not be decided within budget.
    pub budget_exceeded: u64,
    pub first_failure: Option<Value>,
}

enum Outcome {
    Vacuous,
    Passed,
    Failed(Value),
    Budget,
}

/// Run `trials` seeded trials. Trials run in parallel; results are
/// aggregated in trial order so the summary depends only on the inputs.
pub fn random_campaign(name: &str, trials: u64, seed: u64, caps: Option<Caps>) -> Result<CampaignSummary> {
    let theorem = Theorem::parse(name)?;
    let caps = caps.unwrap_or_else(|| Caps::for_theorem(theorem));
    let outcomes: Vec<Result<Outcome>> = (0..trials)
        .into_par_iter()
        .map(|t| trial(theorem, t, seed, caps))
        .collect();
    let mut s = CampaignSummary {
        theorem: theorem.id(),
        trials,
        seed,
        caps,
        vacuous: 0,
        non_vacuous: 0,
        passed: 0,
        failed: 0,
        budget_exceeded: 0,
        first_failure: None,
    };
    for o in outcomes {
        match o? {
            Outcome::Vacuous => s.vacuous += 1,
            Outcome::Passed => {
                s.non_vacuous += 1;
                s.passed += 1;
            }
            Outcome::Failed(w) => {
                s.non_vacuous += 1;
                s.failed += 1;
                s.first_failure.get_or_insert(w);
            }
            Outcome::Budget => s.budget_exceeded += 1,
        }
    }
    Ok(s)
}

fn trial(theorem: Theorem, t: u64, seed: u64, caps: Caps) -> Result<Outcome> {
    let mut rng = Rng::for_trial(seed, t);
    let instance = instance(theorem, &mut rng, caps)?;
    match check(theorem, &instance) {
        Ok(c) if c.is_vacuous() => Ok(Outcome::Vacuous),
        Ok(c) if c.passes() => Ok(Outcome::Passed),
        Ok(c) => Ok(Outcome::Failed(json!({ "trial": t, "check": c }))),
        Err(e) if e.is_budget() => Ok(Outcome::Budget),
        Err(e) => Err(e),
    }
}

/// Draw instances until one fits the caps.
pub fn instance(theorem: Theorem, rng: &mut Rng, caps: Caps) -> Result<Value> {
    for _ in 0..MAX_ATTEMPTS {
        if let Some(v) = attempt(theorem, rng, caps)? {
            return Ok(v);
        }
    }
    Err(Error::budget("instance resampling attempts", MAX_ATTEMPTS))
}

fn cx(k: &SimplicialComplex) -> Value {
    serde_json::to_value(ComplexJson::from(k)).expect("complex serializes")
}

/// The family as JSON, or `None` if `Z*` exceeds the cap.
fn family_within(f: PairFamily, caps: Caps) -> Result<Option<Value>> {
    match f.facets_within(caps.zstar_facets) {
        Ok(_) => Ok(Some(serde_json::to_value(FamilyJson::from(&f))?)),
        Err(e) if e.is_budget() => Ok(None),
        Err(e) => Err(e),
    }
}

fn attempt(theorem: Theorem, rng: &mut Rng, caps: Caps) -> Result<Option<Value>> {
    use Theorem::*;
    let n = caps.vertices;
    Ok(match theorem {
        SizeOrderedShelling => Some(json!({ "K": cx(&random::complex(rng, n, caps.facets)?) })),
        JoinShellability => {
            let count = rng.between(2, caps.m.max(2));
            let factors = (0..count)
                .map(|_| random::complex(rng, n, caps.facets))
                .collect::<Result<Vec<_>>>()?;
            let size: usize = factors.iter().map(SimplicialComplex::num_facets).product();
            (size <= caps.zstar_facets)
                .then(|| json!({ "factors": factors.iter().map(cx).collect::<Vec<_>>() }))
        }
        PurenessCriterion => {
            let m = random_m(rng, 2, caps.m)?;
            let k = random::complex(rng, n, caps.facets)?;
            let pair = random::subcomplex(rng, &k)?;
            family_within(PairFamily::uniform(m, pair), caps)?
        }
        FirstBlockSufficient => {
            let m = random_m(rng, 1, caps.m)?;
            let k = random::complex(rng, n, caps.facets)?;
            let pair = random::facet_subcomplex(rng, &k, false)?;
            family_within(PairFamily::uniform(m, pair), caps)?
        }
        TwoEdgeObstruction => {
            let m = SimplicialComplex::from_facets(
                random::numbered(4),
                [vec!["1", "2"], vec!["3", "4"]],
            )?;
            let k = random::complex(rng, n, caps.facets)?;
            let pair = shrunk_facet_pair(rng, &k)?;
            family_within(PairFamily::uniform(m, pair), caps)?
        }
        AlphaSufficient => {
            let m = random_m(rng, 1, caps.m.min(3))?;
            let pairs = (0..m.num_vertices())
                .map(|_| {
                    if rng.chance(1, 4) {
                        let k = random::complex(rng, n, caps.facets)?;
                        random::subcomplex(rng, &k)
                    } else {
                        alpha_pair(rng, n, caps.facets)
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            family_within(PairFamily::new(m, pairs)?, caps)?
        }
        FactorsNecessary => {
            let m = random_m(rng, 2, caps.m)?;
            let k = random::complex(rng, n, caps.facets)?;
            let pair = random::facet_subcomplex(rng, &k, true)?;
            family_within(PairFamily::uniform(m, pair), caps)?
        }
        RidgePairNecessary => {
            let m = random_m(rng, 2, caps.m)?;
            let k = random::complex(rng, n, caps.facets)?;
            let pair = if rng.chance(1, 2) {
                random::subcomplex(rng, &k)?
            } else {
                random::facet_subcomplex(rng, &k, true)?
            };
            family_within(PairFamily::uniform(m, pair), caps)?
        }
        DimensionGap => {
            let m = random_m(rng, 2, caps.m)?;
            let k = random::complex(rng, n, caps.facets)?;
            let pair = low_dimensional_pair(rng, &k)?;
            family_within(PairFamily::uniform(m, pair), caps)?
        }
        DeletionEquivalence => {
            let m = random_m(rng, 2, caps.m)?;
            let (k, v0) = if rng.chance(3, 4) {
                cone_extension(rng, n, caps.facets)?
            } else {
                let k = random::complex(rng, n, caps.facets)?;
                let v0 = rng.below(k.num_vertices());
                (k, v0)
            };
            let label = k.vertices().label(v0).to_owned();
            let pair = ComplexPair::deletion_pair(k.clone(), v0)?;
            family_within(PairFamily::uniform(m.clone(), pair), caps)?
                .map(|_| json!({ "M": cx(&m), "K": cx(&k), "v0": label }))
        }
        ProductIndependence => {
            let g = {
                let size = rng_between(rng, 1, caps.m);
                random::graph(rng, size, 1, 2)?
            };
            let h = {
                let size = rng_between(rng, 1, caps.vertices);
                random::graph(rng, size, 1, 2)?
            };
            let u: Vec<String> =
                rng.subset(h.num_vertices()).iter().map(|v| h.vertices().label(v).to_owned()).collect();
            Some(json!({ "G": GraphJson::from(&g), "H": GraphJson::from(&h), "U": u }))
        }
        LexProductCondition => {
            let g = {
                let size = rng_between(rng, 1, caps.m);
                random::graph(rng, size, 1, 2)?
            };
            let nh = rng_between(rng, 2, caps.vertices);
            // dense graphs satisfy the condition far more often
            let h = if rng.chance(1, 2) {
                random::graph(rng, nh, 3, 4)?
            } else {
                random::graph(rng, nh, 1, 2)?
            };
            let v0 = h.vertices().label(rng.below(nh)).to_owned();
            Some(json!({ "G": GraphJson::from(&g), "H": GraphJson::from(&h), "v0": v0 }))
        }
    })
}

fn rng_between(rng: &mut Rng, lo: usize, hi: usize) -> usize {
    rng.between(lo, hi.max(lo))
}

/// `M` on between `lo` and `hi` indices, with up to 3 generators.
fn random_m(rng: &mut Rng, lo: usize, hi: usize) -> Result<SimplicialComplex> {
    let m = rng_between(rng, lo, hi);
    random::index_complex(rng, m, 3)
}

/// `L` keeps some facets of `K` and replaces one facet by a proper face,
/// so that usually `facet(L) ⊄ facet(K)`.
fn shrunk_facet_pair(rng: &mut Rng, k: &SimplicialComplex) -> Result<ComplexPair> {
    let t = k.num_facets();
    let shrink = rng.below(t);
    let mut gens: Vec<Simplex> = (0..t)
        .filter(|&i| i != shrink && rng.chance(1, 2))
        .map(|i| k.facets()[i].clone())
        .collect();
    gens.push(random::proper_face(rng, &k.facets()[shrink]));
    ComplexPair::new(k.clone(), k.subcomplex(gens)?)
}

/// `K` contains a facet `α`; `L` is generated by some codimension-one
/// faces of `α`.
fn alpha_pair(rng: &mut Rng, n: usize, max_facets: usize) -> Result<ComplexPair> {
    let alpha = rng.nonempty_subset(n);
    let mut gens = vec![alpha.clone()];
    for _ in 0..rng.below(max_facets) {
        gens.push(rng.nonempty_subset(n));
    }
    let k = random::complex_on_used(&letters(n), gens)?;
    let labels = letters(n);
    let a = k.vertices().simplex(alpha.iter().map(|v| &labels[v]))?;
    let members: Vec<usize> = a.iter().collect();
    let mut faces: Vec<Simplex> = members
        .iter()
        .filter(|_| rng.chance(1, 2))
        .map(|&x| {
            let mut f = a.clone();
            f.remove(x);
            f
        })
        .collect();
    if faces.is_empty() {
        let mut f = a.clone();
        f.remove(*rng.pick(&members));
        faces.push(f);
    }
    ComplexPair::new(k.clone(), k.subcomplex(faces)?)
}

/// `L` generated by faces of `K` of size at most `max |facet| − 2`.
fn low_dimensional_pair(rng: &mut Rng, k: &SimplicialComplex) -> Result<ComplexPair> {
    let top = k.facets()[0].len();
    let cap = top.saturating_sub(2);
    let mut gens = Vec::new();
    for f in k.facets() {
        if rng.chance(1, 2) {
            gens.push(rng.subset_of(f).iter().take(cap).collect::<Simplex>());
        }
    }
    if gens.is_empty() {
        gens.push(Simplex::empty());
    }
    ComplexPair::new(k.clone(), k.subcomplex(gens)?)
}

/// `K` = facets avoiding `v0` plus cones `T ∪ {v0}` over proper faces
/// `T` of them, so the facets of `dl_K(v0)` stay facets of `K`.
fn cone_extension(rng: &mut Rng, n: usize, max_facets: usize) -> Result<(SimplicialComplex, usize)> {
    let v0 = n - 1;
    let base: Vec<Simplex> = (0..rng.between(1, max_facets))
        .map(|_| rng.nonempty_subset(n - 1))
        .collect();
    let mut gens = base.clone();
    for _ in 0..rng.between(1, 2) {
        let over = rng.pick(&base).clone();
        let mut t = random::proper_face(rng, &over);
        t.insert(v0);
        gens.push(t);
    }
    let k = random::complex_on_used(&letters(n), gens)?;
    let v = k.vertices().index(&letters(n)[v0])?;
    Ok((k, v))
}
