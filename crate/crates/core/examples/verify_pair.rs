//! Run the complete verification suite on one pair and summarize it.
//!
//! The suite covers the identity family, the bound chains for all eleven
//! generators, the ten sandwich relations, the classical chains, and the
//! ratio certificates.
//!
//! Run: cargo run --example verify_pair

use divbound::simplex::{Distribution, DistributionPair};
use divbound::verify::pair_suite;

fn main() {
    let p = Distribution::validate(&[0.5, 0.5], false).unwrap();
    let q = Distribution::validate(&[0.25, 0.75], false).unwrap();
    let u = Distribution::uniform(2).unwrap();
    let pair = DistributionPair::new(p, q).unwrap();

    let checks = pair_suite(&pair, Some(&u));
    let failed: Vec<_> = checks.iter().filter(|c| !c.pass).collect();

    // Group counts by family prefix.
    let mut families: Vec<(&str, usize)> = Vec::new();
    for check in &checks {
        let family = check.name.split('.').next().unwrap_or("other");
        match families.iter_mut().find(|(f, _)| *f == family) {
            Some((_, count)) => *count += 1,
            None => families.push((family, 1)),
        }
    }

    println!("pair: P = (1/2, 1/2), Q = (1/4, 3/4)");
    println!("{} checks in {} families:", checks.len(), families.len());
    for (family, count) in families {
        println!("  {family:<10} {count:>3} checks");
    }
    println!();
    if failed.is_empty() {
        println!("all checks pass");
        // The tightest margins are the interesting ones.
        let mut by_margin: Vec<_> = checks.iter().filter(|c| c.rhs != c.lhs).collect();
        by_margin.sort_by(|a, b| a.excess().total_cmp(&b.excess()).reverse());
        println!();
        println!("five tightest margins (rhs - lhs):");
        for check in by_margin.iter().take(5) {
            println!("  {:<34} {:.3e}", check.name, -check.excess());
        }
    } else {
        println!("{} FAILED checks:", failed.len());
        for check in failed {
            println!("  {}: lhs = {}, rhs = {}", check.name, check.lhs, check.rhs);
        }
    }
}
