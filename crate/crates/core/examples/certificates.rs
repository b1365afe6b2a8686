//! Ratio certificates: statistics built from two divergences that are
//! guaranteed to land inside the likelihood-ratio interval [r, R].
//!
//! Each certificate inverts one sandwich relation, so it localizes the
//! ratio range of a pair without ever looking at the ratios themselves.
//!
//! Run: cargo run --example certificates

use divbound::relations::certificates;
use divbound::simplex::sample_pair;

fn main() {
    println!(
        "{:>6} {:>9} {:>9}   {:>8} {:>8} {:>8} {:>8} {:>8} {:>8}",
        "seed", "r", "R", "zeta1", "zeta3", "xi1", "xi2", "xi3", "xi4"
    );
    for seed in 0..10u64 {
        let pair = sample_pair(seed, 5, 1e-4).unwrap();
        let cert = certificates(&pair).unwrap();
        print!(
            "{:>6} {:>9.5} {:>9.5}  ",
            seed,
            pair.ratio_min(),
            pair.ratio_max()
        );
        for (_, value) in cert.entries() {
            assert!(value >= pair.ratio_min() - 1e-9 && value <= pair.ratio_max() + 1e-9);
            print!(" {value:>8.5}");
        }
        println!();
    }
    println!();
    println!("every certificate column sits inside its row's [r, R].");
}
