//! Polyhedral joins: facets, the brute-force cross-check and pureness.

use shellable::polyjoin::{is_pure_criterion, PairFamily};
use shellable::shelling::is_shellable;
use shellable::{ComplexPair, SimplicialComplex};

fn main() -> shellable::Result<()> {
    let m = SimplicialComplex::from_facets(["1", "2", "3"], [vec!["1", "2"], vec!["3"]])?;
    let k = SimplicialComplex::from_facets(["a", "b", "c"], [["a", "b"], ["b", "c"]])?;
    let pair = ComplexPair::from_labels(k, [vec!["b"]])?;
    let fam = PairFamily::uniform(m.clone(), pair.clone());

    let z = fam.facets()?;
    assert_eq!(z, fam.facets_bruteforce()?);
    println!("Z* has {} facets on {} vertices", z.num_facets(), z.num_vertices());
    for f in z.facets() {
        println!("  {:?}", z.render(f));
    }
    println!("pure: {} (criterion says {})", z.is_pure(), is_pure_criterion(&m, &pair)?);
    println!("shellable: {}", is_shellable(&z)?);
    Ok(())
}
