//! Runs registered equations over their default domains and prints the
//! counters, one line per equation.
//!
//! Usage: `cargo run --release --example search_survey [--all] [ID ...]`
//! where `--all` prints every solution instead of the first six.

use std::time::Instant;

use df_core::arithfun::TableFn;
use df_core::search::{lookup, registry, run_default, TableSet};

fn main() -> df_core::Result<()> {
    let mut ids: Vec<String> = std::env::args().skip(1).collect();
    let all = ids.iter().any(|a| a == "--all");
    ids.retain(|a| a != "--all");
    let started = Instant::now();
    let tables = TableSet::generate(&TableFn::ALL, 1_000_000)?;
    eprintln!("tables built in {:.1?}", started.elapsed());
    let eqs = if ids.is_empty() {
        registry().to_vec()
    } else {
        ids.iter().map(|id| lookup(id)).collect::<df_core::Result<_>>()?
    };
    for eq in eqs {
        let r = run_default(&eq, &tables)?;
        let head: Vec<String> = r.solutions.iter().take(if all { usize::MAX } else { 6 }).map(|s| format!("{s:?}")).collect();
        println!(
            "{:>7} count={:<7} analyzed={:<10} possible={:<12} {:>8.2?}  {}",
            r.id,
            r.count(),
            r.analyzed,
            r.possible,
            r.elapsed,
            head.join(" ")
        );
    }
    Ok(())
}
