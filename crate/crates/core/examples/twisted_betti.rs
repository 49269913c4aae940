//! Salvetti complex and Betti numbers with rank one local systems over GF(p).

use arrcoh::corpus::concurrent3;
use arrcoh::salvetti::{build_cw_model, enumerate_faces, twisted_betti, Character};

fn main() {
    let a = concurrent3();
    let model = build_cw_model(&enumerate_faces(&a).unwrap());
    println!("cells per dimension {:?}, euler {}", model.cell_counts(), model.euler_characteristic());
    println!("untwisted {:?}", model.untwisted_betti());
    let p = 7;
    // 2 has order 3 mod 7, so the product around the triple point is 1
    for values in [vec![1, 1, 1], vec![2, 4, 1], vec![2, 2, 2], vec![3, 1, 1]] {
        let rho = Character::new(p, values.clone()).unwrap();
        println!("rho {values:?}: betti {:?}", twisted_betti(&model, &rho).unwrap());
    }
}
