//! Deterministic sampling on the simplex: seeds, floors, and the resulting
//! likelihood-ratio extremes.
//!
//! Samples are flat-Dirichlet (normalized unit exponentials), clamped below
//! by a floor and renormalized. The floor keeps ratios away from 0 and
//! infinity, which is what keeps the A and B bounds finite.
//!
//! Run: cargo run --example sample_pairs

use divbound::simplex::sample_pair;

fn main() {
    println!("same seed, same pair:");
    let a = sample_pair(7, 4, 1e-6).unwrap();
    let b = sample_pair(7, 4, 1e-6).unwrap();
    println!("  p (seed 7) = {:?}", a.p().probs());
    println!("  p (again)  = {:?}", b.p().probs());
    assert_eq!(a, b);

    println!();
    println!("ratio extremes widen with dimension and tighten with the floor:");
    println!("  {:>4} {:>10} {:>14} {:>14}", "n", "floor", "r", "R");
    for n in [2usize, 8, 32] {
        for floor in [1e-2, 1e-4, 1e-6] {
            if floor >= 1.0 / n as f64 {
                continue;
            }
            let pair = sample_pair(99, n, floor).unwrap();
            println!(
                "  {:>4} {:>10.0e} {:>14.6e} {:>14.6e}",
                n,
                floor,
                pair.ratio_min(),
                pair.ratio_max()
            );
        }
    }

    println!();
    println!("sums stay exactly normalized after the clamp:");
    let pair = sample_pair(123, 50, 1e-3).unwrap();
    let sum: f64 = pair.p().probs().iter().sum();
    println!(
        "  n = 50, floor 1e-3: |sum - 1| = {:.2e}",
        (sum - 1.0).abs()
    );
    let smallest = pair
        .p()
        .probs()
        .iter()
        .cloned()
        .fold(f64::INFINITY, f64::min);
    println!("  smallest entry {smallest:.6e} (never below floor/(1 + n*floor))");
}
