//! Q((Q^r)) seen as a series field over Q((H_j)): outer exponents are the
//! first j coordinates, inner series (in `u`) carry the rest.

use std::cmp::Ordering;

use hahnfield::cli::parse_expr;
use hahnfield::hahnseries::{flatten, nested_cmp, regroup, s_cmp};
use hahnfield::ConvexLevel;

fn main() {
    let a = parse_expr("t^(1,0) + 2*t^(1,5) + t^(2,-1)", 2).unwrap();
    let n = regroup(&a, ConvexLevel(1)).unwrap();
    println!("{a}  ->  {n}");
    assert_eq!(flatten(&n), a);

    let b = parse_expr("t^(1,-1) + t^(1,0)", 2).unwrap();
    println!("{b}  ->  {}", regroup(&b, ConvexLevel(1)).unwrap());

    // the nested order agrees with the flat one
    let x = parse_expr("t^(0,1,5) + t^(1,0,0)", 3).unwrap();
    let y = parse_expr("t^(0,1,5) - t^(0,2,0)", 3).unwrap();
    for j in 1..3 {
        let (nx, ny) = (regroup(&x, ConvexLevel(j)).unwrap(), regroup(&y, ConvexLevel(j)).unwrap());
        let nested: Ordering = nested_cmp(&nx, &ny).unwrap();
        println!("level {j}: {nx} vs {ny}: {nested:?}");
        assert_eq!(nested, s_cmp(&x, &y).unwrap());
    }
}
