//! Worked instances with their printed facet lists and verdicts.

use std::collections::BTreeSet;

use serde::Serialize;
use serde_json::Value;

use super::{check, has_ridge_pair, is_two_disjoint_edges, product_family, shellable, Theorem};
use crate::complex::{ComplexPair, SimplicialComplex};
use crate::error::{Error, Result};
use crate::graph::{general_lex_product, main_theorem_condition, Graph};
use crate::json::FamilyJson;
use crate::polyjoin::PairFamily;
use crate::shelling::{verify_shelling, SearchOutcome, ShellingSearch};
use crate::simplex::Simplex;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Fixture {
    /// Two-point `M`, `K_i` a path, `L_i` its endpoints: shellable with no
    /// admissible `α_i`.
    AlphaNotNecessary,
    /// Shellable `Z*` over a non-shellable `K_1`.
    FactorNotShellable,
    /// Shellable `Z*` although `facet(L_i) ⊄ facet(K_i)`.
    LFacetsNotInK,
    /// Shellable `Z*` where only one ridge pair exists.
    RidgePairExample,
    /// `K`, `L` shellable with `facet(L) ⊆ facet(K)` and a ridge pair,
    /// yet `Z*` is not shellable.
    RidgePairNotSufficient,
    /// The ridge-pair example's `(K, L)` over two disjoint edges.
    TwoEdgeDemo,
    /// `H = C5`, `v0 = a`, and complete graphs.
    C5Condition,
    /// `I(C4)` is two disjoint edges, which forces the neighbour clause.
    C4Witness,
}

impl Fixture {
    pub const ALL: [Fixture; 8] = [
        Fixture::AlphaNotNecessary,
        Fixture::FactorNotShellable,
        Fixture::LFacetsNotInK,
        Fixture::RidgePairExample,
        Fixture::RidgePairNotSufficient,
        Fixture::TwoEdgeDemo,
        Fixture::C5Condition,
        Fixture::C4Witness,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Fixture::AlphaNotNecessary => "remark-4.2",
            Fixture::FactorNotShellable => "remark-4.7",
            Fixture::LFacetsNotInK => "remark-4.8",
            Fixture::RidgePairExample => "example-4.10",
            Fixture::RidgePairNotSufficient => "remark-4.9",
            Fixture::TwoEdgeDemo => "claim-4.2-demo",
            Fixture::C5Condition => "example-5.4",
            Fixture::C4Witness => "c4-proof-instance",
        }
    }

    pub fn alias(self) -> &'static str {
        match self {
            Fixture::AlphaNotNecessary => "alpha-not-necessary",
            Fixture::FactorNotShellable => "factor-not-shellable",
            Fixture::LFacetsNotInK => "l-facets-not-in-k",
            Fixture::RidgePairExample => "ridge-pair-example",
            Fixture::RidgePairNotSufficient => "ridge-pair-not-sufficient",
            Fixture::TwoEdgeDemo => "two-edge-demo",
            Fixture::C5Condition => "c5-condition",
            Fixture::C4Witness => "c4-witness",
        }
    }

    pub fn parse(name: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|f| f.id() == name || f.alias() == name)
            .ok_or_else(|| Error::UnknownFixture(name.to_owned()))
    }

    /// The family this fixture is about, if it is one.
    pub fn family(self) -> Option<PairFamily> {
        match self {
            Fixture::AlphaNotNecessary => {
                Some(PairFamily::uniform(two_points(), pair(&["a", "b", "c"], &["ab", "bc"], &["a", "c"])))
            }
            Fixture::FactorNotShellable => Some(
                PairFamily::new(
                    two_points(),
                    vec![
                        pair(&["a", "b", "c", "d"], &["ab", "cd"], &["b", "cd"]),
                        pair(&["e", "f"], &["ef"], &["f"]),
                    ],
                )
                .expect("two pairs over two points"),
            ),
            Fixture::LFacetsNotInK => {
                Some(PairFamily::uniform(two_points(), pair(&["a", "b"], &["ab"], &["b"])))
            }
            Fixture::RidgePairExample => Some(PairFamily::uniform(two_points(), interval_pair())),
            Fixture::RidgePairNotSufficient => Some(PairFamily::uniform(
                two_points(),
                pair(&["a", "b", "c", "d"], &["abc", "acd", "bd"], &["abc", "bd"]),
            )),
            Fixture::TwoEdgeDemo => Some(PairFamily::uniform(two_edges(), interval_pair())),
            Fixture::C5Condition | Fixture::C4Witness => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Assertion {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<Value>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FixtureReport {
    pub fixture: &'static str,
    pub passed: bool,
    pub assertions: Vec<Assertion>,
}

impl FixtureReport {
    pub fn failures(&self) -> impl Iterator<Item = &Assertion> {
        self.assertions.iter().filter(|a| !a.passed)
    }
}

struct Report {
    assertions: Vec<Assertion>,
}

impl Report {
    fn assert(&mut self, name: impl Into<String>, passed: bool) {
        self.assertions.push(Assertion { name: name.into(), passed, detail: None });
    }

    fn assert_with(&mut self, name: impl Into<String>, passed: bool, detail: Value) {
        self.assertions.push(Assertion { name: name.into(), passed, detail: Some(detail) });
    }

    /// Facet list equality after renaming `"i:x"` to `"x_i"`.
    fn facets_as_printed(&mut self, z: &SimplicialComplex, printed: &[&str]) -> Result<()> {
        self.facets_relabeled(z, printed, |i, x| format!("{x}_{i}"))
    }

    fn facets_relabeled(
        &mut self,
        z: &SimplicialComplex,
        printed: &[&str],
        rename: impl Fn(&str, &str) -> String,
    ) -> Result<()> {
        let got = z
            .relabeled(|l| match l.split_once(':') {
                Some((i, x)) => rename(i, x),
                None => l.to_owned(),
            })?
            .facet_label_sets();
        let want = label_sets(printed);
        let detail = serde_json::json!({ "got": got, "want": want });
        self.assert_with(format!("facet list ({} facets)", printed.len()), got == want, detail);
        Ok(())
    }

    fn certificate(&mut self, name: &str, z: &SimplicialComplex) -> Result<()> {
        let outcome = ShellingSearch::new(z).max_facets(super::CHECK_MAX_FACETS).run()?;
        match outcome.certificate() {
            Some(cert) => {
                let ok = verify_shelling(z, &cert.order)?;
                self.assert_with(format!("{name} shellable (certificate verified)"), ok, cert.labelled(z).into_iter().collect());
            }
            None => self.assert(format!("{name} shellable"), false),
        }
        Ok(())
    }

    fn exhausted(&mut self, name: &str, z: &SimplicialComplex) -> Result<()> {
        let outcome = ShellingSearch::new(z).max_facets(super::CHECK_MAX_FACETS).run()?;
        let explored = match outcome {
            SearchOutcome::NotShellable { explored } => Some(explored),
            SearchOutcome::Shellable(_) => None,
        };
        self.assert_with(
            format!("{name} not shellable (search exhausted)"),
            explored.is_some(),
            serde_json::json!({ "explored": explored }),
        );
        Ok(())
    }

    fn oracle(&mut self, f: &PairFamily, z: &SimplicialComplex) -> Result<()> {
        self.assert("facets agree with brute force", *z == f.facets_bruteforce()?);
        Ok(())
    }

    fn theorem(&mut self, t: Theorem, f: &PairFamily, expect_hypothesis: bool) -> Result<()> {
        let c = check(t, &serde_json::to_value(FamilyJson::from(f))?)?;
        self.assert_with(
            format!("{} check passes with hypothesis {}", t.id(), expect_hypothesis),
            c.passes() && c.hypothesis == expect_hypothesis,
            serde_json::json!({ "hypothesis": c.hypothesis, "conclusion": c.conclusion }),
        );
        Ok(())
    }
}

fn label_sets(printed: &[&str]) -> BTreeSet<BTreeSet<String>> {
    printed.iter().map(|f| f.split_whitespace().map(str::to_owned).collect()).collect()
}

/// Facets given as strings of one-letter labels, `"ab"` for `{a, b}`.
fn complex(labels: &[&str], facets: &[&str]) -> SimplicialComplex {
    SimplicialComplex::from_facets(
        labels.iter().copied(),
        facets.iter().map(|f| f.chars().map(String::from).collect::<Vec<_>>()),
    )
    .expect("fixture complex")
}

fn pair(labels: &[&str], k: &[&str], l: &[&str]) -> ComplexPair {
    let k = complex(labels, k);
    ComplexPair::from_labels(k, l.iter().map(|f| f.chars().map(String::from).collect::<Vec<_>>()))
        .expect("fixture pair")
}

fn two_points() -> SimplicialComplex {
    complex(&["1", "2"], &["1", "2"])
}

fn two_edges() -> SimplicialComplex {
    complex(&["1", "2", "3", "4"], &["12", "34"])
}

/// `K = ⟨ab, bc, d⟩`, `L = ⟨c, d⟩`.
fn interval_pair() -> ComplexPair {
    pair(&["a", "b", "c", "d"], &["ab", "bc", "d"], &["c", "d"])
}

fn simplex(k: &SimplicialComplex, labels: &str) -> Result<Simplex> {
    k.vertices().simplex(labels.split_whitespace())
}

pub fn replay_fixture(name: &str) -> Result<FixtureReport> {
    let fixture = Fixture::parse(name)?;
    let mut r = Report { assertions: Vec::new() };
    replay(fixture, &mut r)?;
    Ok(FixtureReport {
        fixture: fixture.id(),
        passed: r.assertions.iter().all(|a| a.passed),
        assertions: r.assertions,
    })
}

fn replay(fixture: Fixture, r: &mut Report) -> Result<()> {
    let family = fixture.family();
    let z = family.as_ref().map(PairFamily::facets).transpose()?;
    match (fixture, family, z) {
        (Fixture::AlphaNotNecessary, Some(f), Some(z)) => {
            r.facets_as_printed(
                &z,
                &[
                    "a_1 b_1 a_2", "a_1 b_1 c_2", "b_1 c_1 a_2", "b_1 c_1 c_2",
                    "a_1 a_2 b_2", "a_1 b_2 c_2", "c_1 a_2 b_2", "c_1 b_2 c_2",
                ],
            )?;
            r.oracle(&f, &z)?;
            r.certificate("Z*", &z)?;
            let p = f.pair(0);
            let alpha = p.k().facets().iter().any(|a| p.l().facets().iter().all(|t| t.is_subset(a)));
            r.assert("no facet of K contains both {a} and {c}", !alpha);
            r.theorem(Theorem::AlphaSufficient, &f, false)?;
        }
        (Fixture::FactorNotShellable, Some(f), Some(z)) => {
            // the printed list names vertices without their index
            r.facets_relabeled(&z, &["c d e f", "b e f", "a b f"], |_, x| x.to_owned())?;
            r.oracle(&f, &z)?;
            r.certificate("Z*", &z)?;
            r.assert("K_1 not shellable", !shellable(f.pair(0).k())?);
        }
        (Fixture::LFacetsNotInK, Some(f), Some(z)) => {
            r.facets_as_printed(&z, &["a_1 b_1 b_2", "b_1 a_2 b_2"])?;
            r.oracle(&f, &z)?;
            r.certificate("Z*", &z)?;
            let p = f.pair(0);
            let b = simplex(p.k(), "b")?;
            r.assert("{b} ∈ facet(L) \\ facet(K)", p.l().is_facet(&b) && !p.k().is_facet(&b));
        }
        (Fixture::RidgePairExample, Some(f), Some(z)) => {
            r.facets_as_printed(
                &z,
                &[
                    "a_1 b_1 c_2", "b_1 c_1 c_2", "b_1 c_1 d_2", "a_1 b_1 d_2", "c_1 b_2 c_2",
                    "d_1 b_2 c_2", "d_1 a_2 b_2", "c_1 a_2 b_2", "d_1 d_2",
                ],
            )?;
            r.oracle(&f, &z)?;
            r.certificate("Z*", &z)?;
            let p = f.pair(0);
            let k = p.k();
            let ab = simplex(k, "a b")?;
            let d = simplex(k, "d")?;
            let bc = simplex(k, "b c")?;
            let c = simplex(k, "c")?;
            let part = p.partition();
            r.assert(
                "no τ ∈ facet(L) meets {a,b} in one vertex",
                p.l().facets().iter().all(|t| ab.intersection(t).len() != 1),
            );
            r.assert(
                "no σ ∈ facet(K) \\ facet(L) meets {d} in one vertex",
                part.only_k.iter().all(|s| s.intersection(&d).len() != 1),
            );
            r.assert("({b,c}, {c}) is a ridge pair", bc.intersection(&c).len() == 1 && p.l().is_facet(&c));
            r.assert("a ridge pair exists", has_ridge_pair(p));
            let zd = z.vertices().simplex(["1:d", "2:d"])?;
            r.assert("{d_1, d_2} is a facet with empty support", {
                let split = f.split(&zd);
                z.is_facet(&zd) && f.support(&split).is_empty()
            });
            r.theorem(Theorem::RidgePairNecessary, &f, true)?;
        }
        (Fixture::RidgePairNotSufficient, Some(f), Some(z)) => {
            r.facets_as_printed(
                &z,
                &[
                    "a_1 b_1 c_1 a_2 b_2 c_2", "a_1 c_1 d_1 a_2 b_2 c_2", "a_1 b_1 c_1 a_2 c_2 d_2",
                    "a_1 b_1 c_1 b_2 d_2", "a_1 c_1 d_1 b_2 d_2", "b_1 d_1 a_2 b_2 c_2",
                    "b_1 d_1 a_2 c_2 d_2", "b_1 d_1 b_2 d_2",
                ],
            )?;
            r.oracle(&f, &z)?;
            r.exhausted("Z*", &z)?;
            let p = f.pair(0);
            r.assert("K shellable", shellable(p.k())?);
            r.assert("L shellable", shellable(p.l())?);
            r.assert("facet(L) ⊆ facet(K)", p.l_facets_are_k_facets());
            let acd = simplex(p.k(), "a c d")?;
            let abc = simplex(p.k(), "a b c")?;
            r.assert(
                "({a,c,d}, {a,b,c}) is a ridge pair",
                acd.intersection(&abc).len() == 2 && p.partition().only_k.contains(&acd),
            );
            // placing φ before ψ leaves ψ without a ridge into earlier facets
            let phi = z.facet_index(&z.vertices().simplex(["1:a", "1:c", "1:d", "2:b", "2:d"])?).unwrap();
            let psi = z.facet_index(&z.vertices().simplex(["1:b", "1:d", "2:a", "2:c", "2:d"])?).unwrap();
            let mut both_fail = true;
            for (first, second) in [(phi, psi), (psi, phi)] {
                let mut order = vec![first, second];
                order.extend((0..z.num_facets()).filter(|&i| i != first && i != second));
                both_fail &= !verify_shelling(&z, &order)?;
            }
            r.assert("orders starting with the two five-vertex facets are rejected", both_fail);
            r.theorem(Theorem::FactorsNecessary, &f, false)?;
            r.theorem(Theorem::RidgePairNecessary, &f, false)?;
        }
        (Fixture::TwoEdgeDemo, Some(f), Some(z)) => {
            let p = f.pair(0);
            let only_l = p.partition().only_l;
            r.assert("facet(L) \\ facet(K) = {{c}}", only_l == vec![simplex(p.k(), "c")?]);
            r.oracle(&f, &z)?;
            r.assert_with("facet count", true, z.num_facets().into());
            r.exhausted("Z*", &z)?;
            r.theorem(Theorem::TwoEdgeObstruction, &f, true)?;
        }
        (Fixture::C5Condition, None, None) => {
            let c5 = Graph::cycle(["a", "b", "c", "d", "e"])?;
            let i = c5.independence_complex()?;
            r.facets_relabeled(&i, &["a c", "b d", "c e", "d a", "e b"], |_, x| x.to_owned())?;
            r.assert("I(C5) pure", i.is_pure());
            r.certificate("I(C5)", &i)?;
            let a = Simplex::from_indices([c5.vertices().index("a")?]);
            let del = c5.without(&a).independence_complex()?;
            r.facets_relabeled(&del, &["b d", "e b", "c e"], |_, x| x.to_owned())?;
            r.assert(
                "I(C5∖a) equals the deletion of a from I(C5)",
                del.facet_label_sets() == i.deletion_by_label("a")?.facet_label_sets(),
            );
            r.certificate("I(C5∖a)", &del)?;
            let be = del.vertices().simplex(["b", "e"])?;
            r.assert("every facet of I(C5∖a) contains b or e", del.facets().iter().all(|f| !f.is_disjoint(&be)));
            let rep = main_theorem_condition(&c5, "a")?;
            r.assert_with("condition holds for (C5, a)", rep.holds, serde_json::to_value(&rep)?);
            for k in 2..=5 {
                let h = Graph::complete((0..k).map(|i| format!("v{i}")))?;
                r.assert(format!("condition holds for (K{k}, v0)"), main_theorem_condition(&h, "v0")?.holds);
            }
        }
        (Fixture::C4Witness, None, None) => {
            let c4 = Graph::cycle(["1", "2", "3", "4"])?;
            let i = c4.independence_complex()?;
            r.facets_relabeled(&i, &["1 3", "2 4"], |_, x| x.to_owned())?;
            r.assert("I(C4) is two disjoint edges", is_two_disjoint_edges(&i));
            // H = two isolated vertices fails only the neighbour clause
            let h = Graph::edgeless(["v0", "w"])?;
            let rep = main_theorem_condition(&h, "v0")?;
            r.assert_with(
                "(two isolated vertices, v0) fails only the neighbour clause",
                rep.well_covered && rep.shellable && rep.deletion_shellable && !rep.neighbor_in_every_maximal_set,
                serde_json::to_value(&rep)?,
            );
            let u = Simplex::from_indices([0]);
            let f = product_family(&c4, &h, &u)?;
            let direct = general_lex_product(&c4, &h, &u)?.independence_complex()?;
            let z = f.facets()?;
            r.assert("I(C4[H;{v0}]) equals Z*", direct.facets() == z.facets());
            r.exhausted("I(C4[H;{v0}])", &direct)?;
            r.theorem(Theorem::TwoEdgeObstruction, &f, true)?;
        }
        _ => unreachable!("fixture family mismatch"),
    }
    Ok(())
}
