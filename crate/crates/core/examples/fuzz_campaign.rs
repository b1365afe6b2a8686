//! Drive the verification suite over seeded random pairs and report the
//! worst slack margin seen in each check family.
//!
//! A margin is rhs - lhs of a check; the campaign aggregate keeps the worst
//! (smallest) margin per family, so a passing campaign shows how much room
//! every inequality had. Identical arguments always reproduce identical
//! results.
//!
//! Run: cargo run --example fuzz_campaign

use divbound::verify::{campaign, FuzzConfig};

fn main() {
    let config = FuzzConfig {
        trials: 2_000,
        dim_lo: 2,
        dim_hi: 30,
        seed: 42,
        floor: 1e-6,
    };
    let checks = campaign(&config).unwrap();

    let failures = checks.iter().filter(|c| !c.pass).count();
    println!(
        "{} trials, dims {}..={}, seed {}: {} families, {} failing",
        config.trials,
        config.dim_lo,
        config.dim_hi,
        config.seed,
        checks.len(),
        failures
    );
    println!();

    let mut sorted = checks.clone();
    sorted.sort_by(|a, b| a.lhs.total_cmp(&b.lhs).reverse());
    println!("ten narrowest worst-case margins:");
    for check in sorted.iter().take(10) {
        println!("  {:<36} margin {:.3e}", check.name, -check.lhs);
    }
    println!();
    println!("ten widest worst-case margins:");
    for check in sorted.iter().rev().take(10) {
        println!("  {:<36} margin {:.3e}", check.name, -check.lhs);
    }
}
