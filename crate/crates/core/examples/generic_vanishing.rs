//! Nonresonant characters have cohomology only in the top degree.

use arrcoh::charvar::{check_generic_vanishing, resonance_locus_summary};
use arrcoh::corpus::near_pencil4;
use arrcoh::salvetti::SweepMode;
use arrcoh::wonderful::BuildingFlavor;

fn main() {
    let a = near_pencil4();
    for flavor in [BuildingFlavor::Minimal, BuildingFlavor::Maximal] {
        let r = check_generic_vanishing(&a, 7, SweepMode::Exhaustive, flavor).unwrap();
        println!("{flavor:?}: {} nonresonant of {}, top betti {}, exceptions {}", r.nonresonant_count, r.evaluated, r.expected_top, r.violations.len());
    }
    for cell in resonance_locus_summary(&a, 7, SweepMode::Exhaustive, BuildingFlavor::Minimal).unwrap() {
        println!("resonant along {:?}: {} characters", cell.resonant, cell.count);
    }
}
