//! The worked input/output examples of the public operations.

use std::collections::BTreeSet;

use serde_json::json;

use shellable::graph::{general_lex_product_by_labels, main_theorem_condition, Graph};
use shellable::json::FamilyJson;
use shellable::polyjoin::{is_pure_criterion, PairFamily, ProductSimplex};
use shellable::shelling::{exists_size_ordered_shelling, is_shellable, verify_shelling, SearchOutcome, ShellingSearch};
use shellable::verify::{check_theorem, random_campaign, replay_fixture, Caps, Fixture};
use shellable::{ComplexPair, Error, SimplicialComplex};

fn cx(labels: &[&str], gens: &[&[&str]]) -> SimplicialComplex {
    SimplicialComplex::from_facets(labels.iter().copied(), gens.iter().map(|g| g.iter().copied())).unwrap()
}

fn sets(gens: &[&[&str]]) -> BTreeSet<BTreeSet<String>> {
    gens.iter().map(|g| g.iter().map(|s| s.to_string()).collect()).collect()
}

fn c5() -> Graph {
    Graph::cycle(["a", "b", "c", "d", "e"]).unwrap()
}

fn zstar(f: Fixture) -> SimplicialComplex {
    f.family().unwrap().facets().unwrap()
}

fn two_points() -> SimplicialComplex {
    cx(&["1", "2"], &[&["1"], &["2"]])
}

#[test]
fn construction() {
    let k = cx(&["a", "b", "c"], &[&["a", "b"], &["b", "c"], &["b"]]);
    assert_eq!(k.facet_label_sets(), sets(&[&["a", "b"], &["b", "c"]]));
    let ic = cx(
        &["a", "b", "c", "d", "e"],
        &[&["a", "c"], &["b", "d"], &["c", "e"], &["d", "a"], &["e", "b"]],
    );
    assert_eq!((ic.num_facets(), ic.dim()), (5, 1));
    let none: [&[&str]; 1] = [&[]];
    assert!(matches!(
        SimplicialComplex::from_facets(["a"], none.iter().map(|g| g.iter().copied())),
        Err(Error::UnusedVertex(_))
    ));
}

#[test]
fn membership() {
    let k = cx(&["a", "b", "c"], &[&["a", "b"], &["b", "c"]]);
    assert!(!k.contains_labels(["a", "c"]).unwrap());
    assert!(k.contains_labels(Vec::<&str>::new()).unwrap());
    let ic = c5().independence_complex().unwrap();
    assert!(ic.contains_labels(["a", "c"]).unwrap());
}

#[test]
fn deletion() {
    let k = cx(&["a", "b", "c"], &[&["a", "b"], &["b", "c"]]);
    assert_eq!(k.deletion_by_label("a").unwrap().facet_label_sets(), sets(&[&["b", "c"]]));
    let ic = c5().independence_complex().unwrap();
    assert_eq!(
        ic.deletion_by_label("a").unwrap().facet_label_sets(),
        sets(&[&["b", "d"], &["e", "b"], &["c", "e"]])
    );
    let k = cx(&["a", "b", "c", "d"], &[&["a", "b", "c"], &["a", "c", "d"], &["b", "d"]]);
    assert_eq!(k.deletion_by_label("d").unwrap().facet_label_sets(), sets(&[&["a", "b", "c"]]));
}

#[test]
fn joins() {
    let j = SimplicialComplex::join(&[&cx(&["a"], &[&["a"]]), &cx(&["b"], &[&["b"]])]).unwrap();
    assert_eq!(j.facet_label_sets(), sets(&[&["0:a", "1:b"]]));
    let k = cx(&["a", "b", "c"], &[&["a", "b"], &["b", "c"]]);
    let j = SimplicialComplex::join(&[&k, &cx(&["x", "y"], &[&["x"], &["y"]])]).unwrap();
    assert_eq!(j.num_facets(), 4);
    assert!(j.facets().iter().all(|f| f.len() == 3));
    let e = SimplicialComplex::empty_simplex_complex();
    let j = SimplicialComplex::join(&[&k, &e]).unwrap();
    assert_eq!(j.facet_label_sets(), k.relabeled(|l| format!("0:{l}")).unwrap().facet_label_sets());
}

#[test]
fn facet_partitions() {
    let k = cx(&["a", "b", "c", "d"], &[&["a", "b"], &["b", "c"], &["d"]]);
    let p = ComplexPair::from_labels(k.clone(), [vec!["c"], vec!["d"]]).unwrap();
    let part = p.partition();
    let render = |v: &[shellable::Simplex]| -> BTreeSet<BTreeSet<String>> {
        v.iter().map(|s| k.render(s).into_iter().collect()).collect()
    };
    assert_eq!(render(&part.only_k), sets(&[&["a", "b"], &["b", "c"]]));
    assert_eq!(render(&part.only_l), sets(&[&["c"]]));
    assert_eq!(render(&part.both), sets(&[&["d"]]));

    let same = ComplexPair::new(k.clone(), k.clone()).unwrap().partition();
    assert!(same.only_k.is_empty() && same.only_l.is_empty() && same.both.len() == 3);

    let k = cx(&["a", "b", "c", "d"], &[&["a", "b", "c"], &["a", "c", "d"], &["b", "d"]]);
    let p = ComplexPair::from_labels(k.clone(), [vec!["a", "b", "c"], vec!["b", "d"]]).unwrap();
    let part = p.partition();
    assert_eq!(render_with(&k, &part.only_k), sets(&[&["a", "c", "d"]]));
    assert!(part.only_l.is_empty());
    assert_eq!(part.both.len(), 2);
}

fn render_with(k: &SimplicialComplex, v: &[shellable::Simplex]) -> BTreeSet<BTreeSet<String>> {
    v.iter().map(|s| k.render(s).into_iter().collect()).collect()
}

#[test]
fn simplex_enumeration_and_pureness() {
    assert_eq!(cx(&["a", "b"], &[&["a", "b"]]).simplices().unwrap().len(), 4);
    let ic = c5().independence_complex().unwrap();
    assert_eq!(ic.simplices().unwrap().len(), 11);
    assert!(ic.is_pure() && ic.dim() == 1);
    // 8 faces of abc, plus d, ad, cd, acd, bd
    let k = cx(&["a", "b", "c", "d"], &[&["a", "b", "c"], &["a", "c", "d"], &["b", "d"]]);
    assert_eq!(k.simplices().unwrap().len(), 13);
    assert!(!cx(&["a", "b", "c", "d", "e"], &[&["a", "b"], &["c", "d"], &["e"]]).is_pure());
    let e = SimplicialComplex::empty_simplex_complex();
    assert!(e.is_pure() && e.dim() == -1);
}

#[test]
fn shelling_verification() {
    let ic = c5().independence_complex().unwrap();
    let idx = |f: &[&str]| ic.facet_index(&ic.vertices().simplex(f.iter().copied()).unwrap()).unwrap();
    let order: Vec<usize> =
        [["a", "c"], ["c", "e"], ["e", "b"], ["b", "d"], ["d", "a"]].iter().map(|f| idx(f)).collect();
    assert!(verify_shelling(&ic, &order).unwrap());

    // every order putting {a1,c1,d1,b2,d2} before {b1,d1,a2,c2,d2} fails
    let z = zstar(Fixture::RidgePairNotSufficient);
    let zi = |f: &[&str]| z.facet_index(&z.vertices().simplex(f.iter().copied()).unwrap()).unwrap();
    let x = zi(&["1:a", "1:c", "1:d", "2:b", "2:d"]);
    let y = zi(&["1:b", "1:d", "2:a", "2:c", "2:d"]);
    let mut checked = 0;
    for_each_permutation(z.num_facets(), &mut |order| {
        let px = order.iter().position(|&i| i == x).unwrap();
        let py = order.iter().position(|&i| i == y).unwrap();
        if px < py {
            assert!(!verify_shelling(&z, order).unwrap());
            checked += 1;
        }
    });
    assert_eq!(checked, 40320 / 2);

    assert!(verify_shelling(&cx(&["a", "b", "c"], &[&["a", "b", "c"]]), &[0]).unwrap());
}

fn for_each_permutation(n: usize, f: &mut dyn FnMut(&[usize])) {
    fn go(v: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
        if k == v.len() {
            return f(v);
        }
        for i in k..v.len() {
            v.swap(k, i);
            go(v, k + 1, f);
            v.swap(k, i);
        }
    }
    go(&mut (0..n).collect(), 0, f);
}

#[test]
fn shelling_search() {
    let ic = c5().independence_complex().unwrap();
    assert!(ShellingSearch::new(&ic).run().unwrap().is_shellable());
    let z = zstar(Fixture::RidgePairNotSufficient);
    assert!(matches!(ShellingSearch::new(&z).run().unwrap(), SearchOutcome::NotShellable { .. }));
    let z = zstar(Fixture::RidgePairExample);
    let out = ShellingSearch::new(&z).run().unwrap();
    assert!(verify_shelling(&z, &out.certificate().unwrap().order).unwrap());

    assert!(!is_shellable(&cx(&["a", "b", "c", "d"], &[&["a", "b"], &["c", "d"]])).unwrap());
    assert!(is_shellable(&cx(&["a", "b", "c"], &[&["a", "b", "c"]])).unwrap());
    let z = zstar(Fixture::FactorNotShellable);
    assert_eq!(
        z.facet_label_sets(),
        sets(&[&["1:c", "1:d", "2:e", "2:f"], &["1:b", "2:e", "2:f"], &["1:a", "1:b", "2:f"]])
    );
    assert!(is_shellable(&z).unwrap());

    assert!(exists_size_ordered_shelling(&zstar(Fixture::RidgePairExample)).unwrap());
    assert!(!exists_size_ordered_shelling(&zstar(Fixture::RidgePairNotSufficient)).unwrap());
    assert_eq!(exists_size_ordered_shelling(&ic).unwrap(), is_shellable(&ic).unwrap());
}

#[test]
fn supports_and_membership() {
    let k = cx(&["a", "b", "c", "d"], &[&["a", "b", "c"], &["a", "c", "d"], &["b", "d"]]);
    let pair = ComplexPair::from_labels(k.clone(), [vec!["a", "b", "c"], vec!["b", "d"]]).unwrap();
    let f = PairFamily::uniform(two_points(), pair);
    let s = |l: &[&str]| k.vertices().simplex(l.iter().copied()).unwrap();
    let in_l = ProductSimplex::new(vec![s(&["a", "b"]), s(&["d"])]);
    assert!(f.support(&in_l).is_empty());
    assert!(f.is_member(&ProductSimplex::empty(2)));
    let both = ProductSimplex::new(vec![s(&["a", "c", "d"]), s(&["a", "c", "d"])]);
    assert!(!f.is_member(&both));
    let phi = ProductSimplex::new(vec![s(&["a", "c", "d"]), s(&["b", "d"])]);
    assert_eq!(f.support(&phi).iter().collect::<Vec<_>>(), vec![0]);
    assert!(f.is_member(&phi));
}

#[test]
fn polyjoin_facets() {
    assert_eq!(zstar(Fixture::FactorNotShellable).num_facets(), 3);
    assert_eq!(zstar(Fixture::AlphaNotNecessary).num_facets(), 8);
    let z = zstar(Fixture::RidgePairExample);
    assert_eq!(z.num_facets(), 9);
    assert!(z.contains_labels(["1:d", "2:d"]).unwrap() && z.is_facet(&z.vertices().simplex(["1:d", "2:d"]).unwrap()));

    let point = cx(&["1"], &[&["1"]]);
    let k = cx(&["a", "b", "c"], &[&["a", "b"], &["b", "c"]]);
    let pair = ComplexPair::from_labels(k.clone(), [vec!["b"]]).unwrap();
    let z = PairFamily::uniform(point, pair).facets_bruteforce().unwrap();
    assert_eq!(z.facet_label_sets(), k.relabeled(|l| format!("1:{l}")).unwrap().facet_label_sets());
}

#[test]
fn pureness_criterion() {
    let path = cx(&["a", "b", "c"], &[&["a", "b"], &["b", "c"]]);
    let p = ComplexPair::from_labels(path, [vec!["a"], vec!["c"]]).unwrap();
    assert!(is_pure_criterion(&two_points(), &p).unwrap());
    let k = cx(&["a", "b", "c", "d"], &[&["a", "b"], &["b", "c"], &["d"]]);
    let p = ComplexPair::from_labels(k, [vec!["c"], vec!["d"]]).unwrap();
    assert!(!is_pure_criterion(&two_points(), &p).unwrap());
    let simplex = cx(&["1", "2"], &[&["1", "2"]]);
    assert!(matches!(is_pure_criterion(&simplex, &p), Err(Error::HypothesisViolated(_))));
}

#[test]
fn graphs() {
    let ic = c5().independence_complex().unwrap();
    assert_eq!(ic.facet_label_sets(), sets(&[&["a", "c"], &["b", "d"], &["c", "e"], &["d", "a"], &["e", "b"]]));
    let c4 = Graph::cycle(["1", "2", "3", "4"]).unwrap().independence_complex().unwrap();
    assert_eq!(c4.facet_label_sets(), sets(&[&["1", "3"], &["2", "4"]]));
    let e = Graph::edgeless(["a", "b", "c", "d"]).unwrap().independence_complex().unwrap();
    assert_eq!((e.num_facets(), e.facets()[0].len()), (1, 4));

    let g = Graph::path(["x", "y"]).unwrap();
    let h = Graph::path(["a", "b"]).unwrap();
    let full = general_lex_product_by_labels(&g, &h, ["a", "b"]).unwrap();
    // G[H]: all four cross pairs plus the two copies' edges
    assert_eq!(full.num_edges(), 6);
    let apart = general_lex_product_by_labels(&Graph::edgeless(["x", "y", "z"]).unwrap(), &c5(), ["a"]).unwrap();
    assert_eq!((apart.num_vertices(), apart.num_edges()), (15, 15));

    assert!(c5().is_well_covered().unwrap());
    assert!(!Graph::path(["a", "b", "c"]).unwrap().is_well_covered().unwrap());
    assert!(Graph::complete(["a", "b", "c", "d"]).unwrap().is_well_covered().unwrap());

    for k in 2..=5 {
        let kk = Graph::complete(shellable::verify::random::letters(k)).unwrap();
        assert!(main_theorem_condition(&kk, "b").unwrap().holds);
    }
    assert!(main_theorem_condition(&c5(), "a").unwrap().holds);
    let two = Graph::edgeless(["v", "w"]).unwrap();
    let r = main_theorem_condition(&two, "v").unwrap();
    assert!(!r.holds && !r.neighbor_in_every_maximal_set);
}

fn instance(f: &PairFamily) -> serde_json::Value {
    serde_json::to_value(FamilyJson::from(f)).unwrap()
}

#[test]
fn statement_checks() {
    let pair = Fixture::RidgePairExample.family().unwrap().uniform_pair().unwrap().clone();
    let two_edges = cx(&["1", "2", "3", "4"], &[&["1", "2"], &["3", "4"]]);
    let c = check_theorem("claim-4.2", &instance(&PairFamily::uniform(two_edges, pair))).unwrap();
    assert!(c.hypothesis && c.conclusion == Some(true) && c.passes());

    let c = check_theorem("thm-4.9", &instance(&Fixture::RidgePairNotSufficient.family().unwrap())).unwrap();
    assert!(!c.hypothesis && c.passes());

    let inst = json!({
        "M": {"vertices": ["1", "2"], "facets": [["1"], ["2"]]},
        "pair": {"K": {"vertices": ["a", "b"], "facets": [["a", "b"]]}, "L": {"facets": [[]]}}
    });
    let c = check_theorem("cor-4.10", &inst).unwrap();
    assert!(c.hypothesis && c.conclusion == Some(true));
    assert!(matches!(check_theorem("thm-9.9", &inst), Err(Error::UnknownTheorem(_))));
}

#[test]
fn fixture_replays() {
    let r = replay_fixture("example-4.10").unwrap();
    assert!(r.passed && r.assertions.iter().any(|a| a.name.contains("9 facets")));
    let r = replay_fixture("remark-4.9").unwrap();
    assert!(r.passed && r.assertions.iter().any(|a| a.name.contains("8 facets")));
    let z = zstar(Fixture::LFacetsNotInK);
    assert_eq!(z.facet_label_sets(), sets(&[&["1:a", "1:b", "2:b"], &["1:b", "2:a", "2:b"]]));
    assert!(is_shellable(&z).unwrap());
    assert!(replay_fixture("remark-4.8").unwrap().passed);
    assert!(matches!(replay_fixture("remark-0.0"), Err(Error::UnknownFixture(_))));
}

#[test]
fn campaigns() {
    let caps = Caps { facets: 4, ..Caps::for_theorem(shellable::verify::Theorem::JoinShellability) };
    let s = random_campaign("lemma-2.3", 500, 42, Some(caps)).unwrap();
    assert_eq!((s.trials, s.failed), (500, 0));
    let caps = Caps { m: 4, ..Caps::for_theorem(shellable::verify::Theorem::PurenessCriterion) };
    let s = random_campaign("thm-3.4", 500, 7, Some(caps)).unwrap();
    assert_eq!(s.failed, 0);
    let s = random_campaign("prop-5.2", 300, 1, None).unwrap();
    assert_eq!((s.failed, s.non_vacuous), (0, 300));
}
