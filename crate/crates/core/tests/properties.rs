use std::collections::BTreeSet;

use proptest::prelude::*;

use shellable::graph::Graph;
use shellable::polyjoin::PairFamily;
use shellable::shelling::{exists_size_ordered_shelling, is_shellable, verify_shelling, ShellingSearch};
use shellable::simplex::Simplex;
use shellable::verify::{self, random, Theorem};
use shellable::{ComplexPair, SimplicialComplex};

fn mask_simplex(n: usize, mask: u32) -> Simplex {
    (0..n).filter(|i| mask >> i & 1 == 1).collect()
}

/// Complexes on up to `n` letters from up to `gens` non-empty generators.
fn complex_strategy(n: usize, gens: usize) -> impl Strategy<Value = SimplicialComplex> {
    (1..=n).prop_flat_map(move |n| {
        prop::collection::vec(1u32..(1 << n), 1..=gens).prop_map(move |masks| {
            let sets = masks.into_iter().map(|m| mask_simplex(n, m)).collect();
            random::complex_on_used(&random::letters(n), sets).unwrap()
        })
    })
}

/// `K` together with a subcomplex chosen by a seed.
fn pair_strategy(n: usize, gens: usize) -> impl Strategy<Value = ComplexPair> {
    (complex_strategy(n, gens), any::<u64>())
        .prop_map(|(k, seed)| random::subcomplex(&mut random::Rng::new(seed), &k).unwrap())
}

fn labels(k: &SimplicialComplex) -> BTreeSet<BTreeSet<String>> {
    k.facet_label_sets()
}

/// Shellability straight from the definition: try every order, and accept
/// one where each `⟨F_1..F_{k-1}⟩ ∩ ⟨F_k⟩` is pure of dimension
/// `dim F_k − 1`, i.e. its maximal faces `F_i ∩ F_k` all have size
/// `|F_k| − 1`.
fn shellable_by_definition(k: &SimplicialComplex) -> bool {
    fn order_ok(fs: &[Simplex]) -> bool {
        (1..fs.len()).all(|j| {
            let meets: Vec<Simplex> = fs[..j].iter().map(|f| f.intersection(&fs[j])).collect();
            let maximal = meets.iter().filter(|a| !meets.iter().any(|b| a.is_strict_subset(b)));
            maximal.into_iter().all(|a| a.len() + 1 == fs[j].len())
        })
    }
    fn permute(pool: &mut Vec<Simplex>, placed: &mut Vec<Simplex>) -> bool {
        if pool.is_empty() {
            return order_ok(placed);
        }
        for i in 0..pool.len() {
            let f = pool.remove(i);
            placed.push(f);
            let ok = order_ok(placed) && permute(pool, placed);
            let f = placed.pop().unwrap();
            pool.insert(i, f);
            if ok {
                return true;
            }
        }
        false
    }
    permute(&mut k.facets().to_vec(), &mut Vec::new())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 256, ..ProptestConfig::default() })]

    #[test]
    fn facets_are_irredundant_and_canonical(k in complex_strategy(6, 7)) {
        let f = k.facets();
        for (i, a) in f.iter().enumerate() {
            for (j, b) in f.iter().enumerate() {
                prop_assert!(i == j || !a.is_subset(b));
            }
        }
        for w in f.windows(2) {
            prop_assert!(w[0].len() > w[1].len() || (w[0].len() == w[1].len() && w[0] < w[1]));
        }
        prop_assert!(k.used_vertices().len() == k.num_vertices());
    }

    #[test]
    fn subcomplexes_and_deletions_stay_irredundant(p in pair_strategy(5, 5), v in 0usize..5) {
        for c in [p.l().clone(), p.k().deletion_subcomplex(v % p.k().num_vertices()).unwrap()] {
            let f = c.facets();
            prop_assert!(f.iter().all(|a| f.iter().filter(|b| a.is_subset(b)).count() == 1));
        }
    }

    #[test]
    fn deletions_commute(k in complex_strategy(5, 5), u in 0usize..5, v in 0usize..5) {
        let n = k.num_vertices();
        let (u, v) = (k.vertices().label(u % n).to_owned(), k.vertices().label(v % n).to_owned());
        prop_assume!(u != v);
        let uv = k.deletion_by_label(&u).unwrap();
        let vu = k.deletion_by_label(&v).unwrap();
        // both survive the first deletion only if they are not isolated
        prop_assume!(uv.vertices().position(&v).is_some() && vu.vertices().position(&u).is_some());
        let a = uv.deletion_by_label(&v).unwrap();
        let b = vu.deletion_by_label(&u).unwrap();
        prop_assert_eq!(labels(&a), labels(&b));
    }

    #[test]
    fn join_is_associative_with_multiplicative_facet_count(
        a in complex_strategy(3, 3), b in complex_strategy(3, 3), c in complex_strategy(3, 3),
    ) {
        let flat = SimplicialComplex::join(&[&a, &b, &c]).unwrap();
        let left = SimplicialComplex::join(&[&SimplicialComplex::join(&[&a, &b]).unwrap(), &c]).unwrap();
        let right = SimplicialComplex::join(&[&a, &SimplicialComplex::join(&[&b, &c]).unwrap()]).unwrap();
        let left = left.relabeled(|l| match l.strip_prefix("0:") {
            Some(rest) => rest.to_owned(),
            None => format!("2:{}", &l[2..]),
        }).unwrap();
        let right = right.relabeled(|l| match l.strip_prefix("1:") {
            Some(rest) => format!("{}:{}", rest[..1].parse::<u8>().unwrap() + 1, &rest[2..]),
            None => l.to_owned(),
        }).unwrap();
        prop_assert_eq!(labels(&left), labels(&flat));
        prop_assert_eq!(labels(&right), labels(&flat));
        prop_assert_eq!(flat.num_facets(), a.num_facets() * b.num_facets() * c.num_facets());
    }

    #[test]
    fn facet_partition_invariants(p in pair_strategy(5, 5)) {
        let part = p.partition();
        let kf: BTreeSet<Simplex> = p.k().facets().iter().cloned().collect();
        let lf: BTreeSet<Simplex> = p.l().facets().iter().cloned().collect();
        let ok: BTreeSet<Simplex> = part.only_k.iter().cloned().collect();
        let ol: BTreeSet<Simplex> = part.only_l.iter().cloned().collect();
        let both: BTreeSet<Simplex> = part.both.iter().cloned().collect();
        prop_assert!(ok.is_disjoint(&both) && ol.is_disjoint(&both) && ok.is_disjoint(&ol));
        prop_assert_eq!(&ok | &both, kf.clone());
        prop_assert_eq!(&ol | &both, lf.clone());
        prop_assert_eq!(&(&ok | &ol) | &both, &kf | &lf);
        prop_assert!(part.only_l.iter().all(|t| part.only_k.iter().any(|s| t.is_strict_subset(s))));
        // a facet of K that lies in L is a facet of L
        prop_assert!(part.only_k.iter().all(|s| !p.l().contains(s)));
    }

    #[test]
    fn contains_agrees_with_enumeration(k in complex_strategy(5, 5)) {
        let all: BTreeSet<Simplex> = k.simplices().unwrap().into_iter().collect();
        let n = k.num_vertices();
        for mask in 0u32..1 << n {
            let s = mask_simplex(n, mask);
            prop_assert_eq!(k.contains(&s), all.contains(&s));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, ..ProptestConfig::default() })]

    #[test]
    fn search_switches_do_not_change_verdicts(k in complex_strategy(5, 8)) {
        prop_assume!(k.num_facets() <= 8);
        let base = ShellingSearch::new(&k).run().unwrap();
        for (memo, prune) in [(false, true), (true, false), (false, false)] {
            let other = ShellingSearch::new(&k).memoize(memo).prune(prune).run().unwrap();
            prop_assert_eq!(base.is_shellable(), other.is_shellable());
        }
        if let Some(cert) = base.certificate() {
            prop_assert!(verify_shelling(&k, &cert.order).unwrap());
            // deterministic certificate
            let again = ShellingSearch::new(&k).run().unwrap();
            prop_assert_eq!(Some(cert), again.certificate());
        }
    }

    #[test]
    fn search_matches_the_definition(k in complex_strategy(5, 6)) {
        prop_assume!(k.num_facets() <= 6);
        prop_assert_eq!(is_shellable(&k).unwrap(), shellable_by_definition(&k));
    }

    #[test]
    fn verifier_matches_the_definition(k in complex_strategy(5, 6), seed in any::<u64>()) {
        let mut rng = random::Rng::new(seed);
        let mut order: Vec<usize> = (0..k.num_facets()).collect();
        for i in (1..order.len()).rev() {
            order.swap(i, rng.below(i + 1));
        }
        let fs: Vec<Simplex> = order.iter().map(|&i| k.facets()[i].clone()).collect();
        let by_def = (1..fs.len()).all(|j| {
            let meets: Vec<Simplex> = fs[..j].iter().map(|f| f.intersection(&fs[j])).collect();
            meets.iter()
                .filter(|a| !meets.iter().any(|b| a.is_strict_subset(b)))
                .all(|a| a.len() + 1 == fs[j].len())
        });
        prop_assert_eq!(verify_shelling(&k, &order).unwrap(), by_def);
    }

    #[test]
    fn size_ordered_shellings_suffice(k in complex_strategy(5, 7)) {
        prop_assert_eq!(is_shellable(&k).unwrap(), exists_size_ordered_shelling(&k).unwrap());
    }

    #[test]
    fn join_shellable_iff_factors_are(a in complex_strategy(4, 4), b in complex_strategy(4, 4)) {
        let j = SimplicialComplex::join(&[&a, &b]).unwrap();
        prop_assume!(j.num_facets() <= 16);
        prop_assert_eq!(
            is_shellable(&j).unwrap(),
            is_shellable(&a).unwrap() && is_shellable(&b).unwrap()
        );
    }
}

fn family_strategy() -> impl Strategy<Value = PairFamily> {
    any::<u64>().prop_map(|seed| {
        let mut rng = random::Rng::new(seed);
        let m = rng.between(1, 3);
        let mc = random::index_complex(&mut rng, m, 3).unwrap();
        let pairs = (0..m)
            .map(|_| {
                let n = rng.between(1, 4);
                let k = random::complex(&mut rng, n, 3).unwrap();
                random::subcomplex(&mut rng, &k).unwrap()
            })
            .collect();
        PairFamily::new(mc, pairs).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 256, ..ProptestConfig::default() })]

    #[test]
    fn polyjoin_matches_brute_force(f in family_strategy()) {
        prop_assert_eq!(f.facets().unwrap(), f.facets_bruteforce().unwrap());
    }

    #[test]
    fn membership_matches_facet_containment(f in family_strategy(), masks in prop::collection::vec(any::<u32>(), 8)) {
        let z = f.facets().unwrap();
        let table = f.vertex_table().unwrap();
        for face in z.facets() {
            prop_assert!(f.is_member(&f.split(face)));
        }
        let n = table.len();
        for mask in masks {
            let flat = mask_simplex(n, mask & ((1u64 << n) - 1) as u32);
            let inside = z.facets().iter().any(|g| flat.is_subset(g));
            prop_assert_eq!(f.is_member(&f.split(&flat)), inside);
        }
    }

    #[test]
    fn polyjoin_of_k_with_itself_is_the_join(k in complex_strategy(4, 3), m in 1usize..=3, seed in any::<u64>()) {
        let mc = random::index_complex(&mut random::Rng::new(seed), m, 3).unwrap();
        let pair = ComplexPair::new(k.clone(), k.clone()).unwrap();
        let z = PairFamily::uniform(mc, pair).facets().unwrap();
        let copies = vec![&k; m];
        let j = SimplicialComplex::join(&copies).unwrap().relabeled(|l| {
            let (i, v) = l.split_once(':').unwrap();
            format!("{}:{v}", i.parse::<usize>().unwrap() + 1)
        }).unwrap();
        prop_assert_eq!(labels(&z), labels(&j));
    }

    #[test]
    fn facet_sizes_follow_the_support(p in pair_strategy(4, 3), seed in any::<u64>()) {
        prop_assume!(p.k().is_pure() && p.l().is_pure());
        let mut rng = random::Rng::new(seed);
        let m = rng.between(1, 3);
        let mc = random::index_complex(&mut rng, m, 3).unwrap();
        let (a, b) = (p.k().facets()[0].len(), p.l().facets()[0].len());
        let f = PairFamily::uniform(mc, p);
        for face in f.facets().unwrap().facets() {
            let s = f.support(&f.split(face)).len();
            prop_assert_eq!(face.len(), s * a + (m - s) * b);
        }
    }
}

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, any::<u64>()).prop_map(|(n, seed)| random::graph(&mut random::Rng::new(seed), n, 1, 2).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 128, ..ProptestConfig::default() })]

    #[test]
    fn removing_vertices_deletes_them_from_the_independence_complex(h in graph_strategy(6), mask in any::<u32>()) {
        let n = h.num_vertices();
        let u = mask_simplex(n, mask);
        let graph_side = h.without(&u).independence_complex().unwrap();
        let mut complex_side = h.independence_complex().unwrap();
        for v in u.iter() {
            let label = h.vertices().label(v);
            if complex_side.vertices().position(label).is_some() {
                complex_side = complex_side.deletion_by_label(label).unwrap();
            }
        }
        prop_assert_eq!(labels(&graph_side), labels(&complex_side));
    }

    #[test]
    fn product_independence_complex_is_a_polyjoin(
        g in graph_strategy(4), h in graph_strategy(5), mask in any::<u32>(),
    ) {
        let u = mask_simplex(h.num_vertices(), mask);
        let inst = serde_json::json!({
            "G": shellable::json::GraphJson::from(&g),
            "H": shellable::json::GraphJson::from(&h),
            "U": h.vertices().render(&u),
        });
        let c = verify::check(Theorem::ProductIndependence, &inst).unwrap();
        prop_assert!(c.hypothesis && c.passes());
    }

    #[test]
    fn well_covered_iff_independence_complex_is_pure(h in graph_strategy(7)) {
        let sizes: BTreeSet<usize> = h.maximal_independent_sets(1 << 12).unwrap().iter().map(Simplex::len).collect();
        prop_assert_eq!(h.is_well_covered().unwrap(), sizes.len() == 1);
    }
}
