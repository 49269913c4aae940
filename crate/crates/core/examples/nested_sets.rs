//! Building sets and nested set complexes for both flavors.

use arrcoh::arrangement::build_flat_poset;
use arrcoh::corpus::braid_essential3;
use arrcoh::wonderful::{all_gamma_classes, building_set, nested_set_complex, BuildingFlavor};

fn main() {
    let a = braid_essential3();
    let p = build_flat_poset(&a);
    for flavor in [BuildingFlavor::Minimal, BuildingFlavor::Maximal] {
        let g = building_set(&a, &p, flavor);
        let cx = nested_set_complex(&g);
        println!("{flavor:?}: {} members, f-vector {:?}, {} facets", g.members().len(), cx.f_vector(), cx.facets().len());
    }
    let g = building_set(&a, &p, BuildingFlavor::Minimal);
    for gamma in all_gamma_classes(&g) {
        println!("gamma {gamma:?}");
    }
}
