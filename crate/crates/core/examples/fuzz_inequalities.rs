//! Random bodies against every inequality.
//!
//! ```text
//! cargo run --release --example fuzz_inequalities -- 50
//! ```

use grunbaum::verify::{self, FuzzConfig};

fn main() -> grunbaum::Result<()> {
    let per_dim = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(25);
    let config = FuzzConfig {
        profiles_per_dim: per_dim,
        polytopes_per_dim: per_dim,
        ..FuzzConfig::default()
    };
    let report = verify::fuzz_suite(&config)?;
    println!("{:<24} {:<12} {:>7} {:>7} {:>12}", "quantity", "backend", "total", "passed", "worst margin");
    for s in &report.summaries {
        println!(
            "{:<24} {:<12} {:>7} {:>7} {:>12.3e}",
            format!("{:?}", s.quantity),
            format!("{:?}", s.backend),
            s.total,
            s.passed,
            s.worst_margin
        );
    }
    for f in report.failures() {
        println!("FAILED {:?} on {} (seed {:?})", f.quantity, f.context.body, f.context.seed);
    }
    Ok(())
}
