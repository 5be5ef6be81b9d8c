//! Seeded random campaigns over every statement, plus one explicit check.

use serde_json::json;
use shellable::verify::{check_theorem, random_campaign, Theorem};

fn main() -> shellable::Result<()> {
    let inst = json!({
        "M": {"vertices": ["1", "2"], "facets": [["1"], ["2"]]},
        "pair": {
            "K": {"vertices": ["a", "b"], "facets": [["a", "b"]]},
            "L": {"facets": [[]]}
        }
    });
    let c = check_theorem("dimension-gap", &inst)?;
    println!("{}: hypothesis {}, conclusion {:?}, pass {}", c.theorem, c.hypothesis, c.conclusion, c.passes());

    for t in Theorem::ALL {
        let s = random_campaign(t.id(), 300, 1, None)?;
        println!(
            "{:<10} {:<24} non-vacuous {:>3}  vacuous {:>3}  failed {}",
            s.theorem,
            t.alias(),
            s.non_vacuous,
            s.vacuous,
            s.failed
        );
    }
    Ok(())
}
