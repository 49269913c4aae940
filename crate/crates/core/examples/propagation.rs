//! Sweep characters and check propagation of the characteristic varieties.

use arrcoh::charvar::check_propagation;
use arrcoh::corpus::{deconed_braid, generic3};
use arrcoh::salvetti::SweepMode;

fn main() {
    let exhaustive = check_propagation(&generic3(), 5, SweepMode::Exhaustive).unwrap();
    println!("generic3 mod 5: {} characters, passed {}", exhaustive.evaluated, exhaustive.passed());
    for (betti, count) in &exhaustive.betti_histogram {
        println!("  betti {betti}: {count}");
    }
    let sampled = check_propagation(&deconed_braid(), 11, SweepMode::Sampled { samples: 500, seed: 7 }).unwrap();
    println!("deconed braid mod 11: {} sampled, {} violations", sampled.evaluated, sampled.violations.len());
    println!("{}", serde_json::to_string_pretty(&sampled.betti_histogram).unwrap());
}
