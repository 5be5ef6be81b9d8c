//! Replay every printed example and list its assertions.

use shellable::verify::{replay_fixture, Fixture};

fn main() -> shellable::Result<()> {
    for f in Fixture::ALL {
        let r = replay_fixture(f.id())?;
        println!("{} ({}): {}", f.id(), f.alias(), if r.passed { "pass" } else { "FAIL" });
        for a in &r.assertions {
            println!("  [{}] {}", if a.passed { "ok" } else { "!!" }, a.name);
        }
    }
    Ok(())
}
