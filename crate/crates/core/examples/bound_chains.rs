//! The value/E/A/B bound chain for every generator-bearing measure.
//!
//! E comes from first-derivative sums, A from the interval endpoints, and B
//! from a chord interpolation of the generator; they satisfy
//! value <= E <= A and value <= B <= A.
//!
//! Run: cargo run --example bound_chains

use divbound::catalog::{generator, MeasureId};
use divbound::fdiv::dragomir_bounds;
use divbound::simplex::sample_pair;

fn main() {
    let pair = sample_pair(2024, 6, 1e-6).unwrap();
    println!(
        "sampled pair: n = {}, r = {:.6}, R = {:.6}",
        pair.len(),
        pair.ratio_min(),
        pair.ratio_max()
    );
    println!();
    println!(
        "{:<12} {:>12} {:>12} {:>12} {:>12}  chain",
        "generator", "value", "E", "B", "A"
    );
    println!("{}", "-".repeat(72));
    for m in MeasureId::ALL.iter().filter(|m| m.has_generator()) {
        let gen = generator(*m).unwrap();
        let bounds = dragomir_bounds(&gen, &pair);
        let b = bounds.b.expect("pair is non-degenerate");
        println!(
            "{:<12} {:>12.8} {:>12.8} {:>12.8} {:>12.8}  {}",
            m.name(),
            bounds.value,
            bounds.e,
            b,
            bounds.a,
            if bounds.chain_holds() {
                "ok"
            } else {
                "VIOLATED"
            }
        );
    }
    println!();
    println!("Every row satisfies value <= E <= A and value <= B <= A.");
}
