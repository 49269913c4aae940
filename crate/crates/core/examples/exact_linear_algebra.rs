//! Ranks, Smith and Hermite normal forms over the integers.

use arrcoh::exactlin::{hermite_normal_form, prime_field_rank, smith_normal_form, IntegerMatrix, PrimeFieldMatrix, RationalMatrix};

fn main() {
    let rows: &[&[i64]] = &[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]];
    let m = IntegerMatrix::from_i64_rows(3, rows);
    println!("rank over Q: {}", RationalMatrix::from_i64_rows(3, rows).rank());
    for p in [3, 5, 7] {
        println!("rank mod {p}: {}", prime_field_rank(&PrimeFieldMatrix::from_i64_rows(p, 3, rows).unwrap()));
    }
    let snf = smith_normal_form(&m);
    let d: Vec<String> = snf.diagonal.iter().map(|x| x.to_string()).collect();
    println!("invariant factors: {}", d.join(" "));
    assert_eq!(snf.left.mul(&m).mul(&snf.right).row(0)[0], snf.diagonal[0]);
    let h = hermite_normal_form(&m);
    println!("hermite form:");
    for i in 0..h.rows() {
        let r: Vec<String> = h.row(i).iter().map(|x| x.to_string()).collect();
        println!("  {}", r.join(" "));
    }
}
