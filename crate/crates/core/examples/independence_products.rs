//! Independence complexes, G[H;U] and the condition on (H, v0).

use shellable::graph::{general_lex_product_by_labels, main_theorem_condition, Graph};
use shellable::shelling::{is_shellable, ShellingSearch};

fn main() -> shellable::Result<()> {
    let c5 = Graph::cycle(["a", "b", "c", "d", "e"])?;
    let ic = c5.independence_complex()?;
    println!("I(C5): {} facets, well-covered {}, shellable {}", ic.num_facets(), c5.is_well_covered()?, is_shellable(&ic)?);

    let r = main_theorem_condition(&c5, "a")?;
    println!("condition on (C5, a): {r:?}");

    let g = Graph::path(["x", "y", "z"])?;
    let p = general_lex_product_by_labels(&g, &c5, ["a"])?;
    let ip = p.independence_complex()?;
    println!(
        "P3[C5;{{a}}]: {} vertices, {} edges, I has {} facets, well-covered {}, shellable {}",
        p.num_vertices(),
        p.num_edges(),
        ip.num_facets(),
        ip.is_pure(),
        // the default cap is 20 facets
        ShellingSearch::new(&ip).max_facets(1024).run()?.is_shellable()
    );
    Ok(())
}
