//! Intersection poset, Möbius function and Poincaré polynomial of a line
//! arrangement read from the text format.

use arrcoh::arrangement::{build_flat_poset, corank, euler_characteristic, parse_arrangement, whitney_poincare};

const NEAR_PENCIL: &str = "\
# three lines through the origin and one more
dim 2
1 0 0
0 1 0
1 -1 0
1 1 1
";

fn main() {
    let a = parse_arrangement(NEAR_PENCIL).unwrap();
    let p = build_flat_poset(&a);
    for x in p.ids() {
        println!("flat {x}: hyperplanes {:?}, rank {}, mu {}", p.flat(x).indices(), p.rank(x), p.mobius(x));
    }
    println!("rank counts {:?}, corank {}", p.rank_counts(), corank(&a));
    println!("poincare {}", whitney_poincare(&p));
    println!("euler characteristic {}", euler_characteristic(&p));
}
