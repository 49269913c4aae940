//! Strata, Euler characteristics and duality of orbit configuration spaces.

use arrcoh::orbitconfig::{classify_duality, count_strata, enumerate_strata, euler_orbit_config, signed_euler_consistency, OrbitConfigSpec};

fn main() {
    let spec = OrbitConfigSpec::new(1, 2, 2, 2).unwrap();
    let strata = enumerate_strata(&spec).unwrap();
    println!("{} strata (counted {})", strata.len(), count_strata(&spec).unwrap());
    for s in &strata {
        println!("  {}", serde_json::to_string(s).unwrap());
    }
    for (g, k, n, m) in [(0, 3, 2, 1), (1, 0, 3, 2), (2, 0, 3, 1), (0, 0, 4, 1)] {
        let spec = OrbitConfigSpec::new(g, k, n, m).unwrap();
        let c = classify_duality(&spec);
        let s = signed_euler_consistency(&spec);
        println!(
            "g={g} k={k} n={n} m={m}: euler {}, duality {:?}, abelian {:?}, dim {:?}, consistent {}",
            euler_orbit_config(&spec),
            c.is_duality,
            c.is_abelian_duality,
            c.dimension,
            s.consistent
        );
    }
}
