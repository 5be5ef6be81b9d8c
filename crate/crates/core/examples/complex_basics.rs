//! Facets, faces, joins and deletions of small complexes.

use shellable::{ComplexPair, SimplicialComplex};

fn main() -> shellable::Result<()> {
    // redundant generators are dropped
    let k = SimplicialComplex::from_facets(
        ["a", "b", "c", "d"],
        [vec!["a", "b", "c"], vec!["a", "c", "d"], vec!["b", "d"], vec!["a", "b"]],
    )?;
    println!("K = {:?}", k.facets().iter().map(|f| k.render(f)).collect::<Vec<_>>());
    println!("dim {}, pure {}, {} simplices", k.dim(), k.is_pure(), k.simplices()?.len());
    println!("contains {{a,d}}: {}", k.contains_labels(["a", "d"])?);

    let dl = k.deletion_by_label("a")?;
    println!("dl_K(a) = {:?}", dl.facets().iter().map(|f| dl.render(f)).collect::<Vec<_>>());

    let edge = SimplicialComplex::simplex_on(["x", "y"])?;
    let j = SimplicialComplex::join(&[&k, &edge])?;
    println!("K * xy has {} facets of sizes {:?}", j.num_facets(), j.facets().iter().map(|f| f.len()).collect::<Vec<_>>());

    let pair = ComplexPair::from_labels(k.clone(), [vec!["a", "b", "c"], vec!["d"]])?;
    let part = pair.partition();
    println!(
        "facet(K)\\facet(L): {}, facet(L)\\facet(K): {}, shared: {}",
        part.only_k.len(),
        part.only_l.len(),
        part.both.len()
    );
    Ok(())
}
