//! Layers of a toric arrangement, its Poincaré polynomial and a restriction.

use arrcoh::toric::{layer_poset, parse_toric, restrict_to_layer, toric_duality_check, toric_poincare};

const TWO_POINTS: &str = "\
torus 2
1 1 0
1 -1 0
";

fn main() {
    let t = parse_toric(TWO_POINTS).unwrap();
    let lp = layer_poset(&t);
    for (id, layer) in lp.layers().iter().enumerate() {
        println!("layer {id}: hypersurfaces {:?}, dim {}, mu {}", layer.indices(), layer.dim(), lp.mobius(id));
    }
    println!("poincare {}", toric_poincare(&lp));
    let d = toric_duality_check(&t);
    println!("dimension {}, euler {}, constraints pass {}", d.dim, d.euler, d.passes());
    let circle = lp.layers().iter().position(|l| l.dim() == 1).unwrap();
    let r = restrict_to_layer(&t, &lp, circle).unwrap();
    println!("restriction to layer {circle}: {} hypersurfaces, poincare {}", r.arrangement.len(), toric_poincare(&layer_poset(&r.arrangement)));
}
