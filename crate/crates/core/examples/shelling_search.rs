//! Certificates and refutations from the exhaustive shelling search.

use shellable::shelling::{verify_shelling, OrderConstraint, ShellingSearch};
use shellable::SimplicialComplex;

fn report(name: &str, k: &SimplicialComplex, c: OrderConstraint) -> shellable::Result<()> {
    let out = ShellingSearch::new(k).constraint(c).run()?;
    match out.certificate() {
        Some(cert) => {
            assert!(verify_shelling(k, &cert.order)?);
            println!("{name}: shellable, order {:?}", cert.labelled(k));
        }
        None => println!("{name}: not shellable ({out:?})"),
    }
    Ok(())
}

fn main() -> shellable::Result<()> {
    let disk = SimplicialComplex::from_facets(
        ["a", "b", "c", "d", "e"],
        [["a", "b", "c"], ["a", "c", "d"], ["a", "d", "e"]],
    )?;
    report("fan of triangles", &disk, OrderConstraint::None)?;
    let last = disk.vertices().simplex(["a", "c", "d"])?;
    report("fan, middle triangle first", &disk, OrderConstraint::fixed_minimum(&disk, &last)?)?;

    let bowtie = SimplicialComplex::from_facets(["a", "b", "c", "d", "e"], [["a", "b", "c"], ["c", "d", "e"]])?;
    report("bowtie", &bowtie, OrderConstraint::None)?;

    let mixed = SimplicialComplex::from_facets(
        ["a", "b", "c", "d"],
        [vec!["a", "b", "c"], vec!["c", "d"]],
    )?;
    report("triangle with a whisker", &mixed, OrderConstraint::SizeNonincreasing)?;
    Ok(())
}
