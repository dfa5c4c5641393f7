//! Exact and truncated arithmetic in Q((Q^r)).

use std::cmp::Ordering;

use hahnfield::cli::parse_expr;
use hahnfield::hahnseries::{residue, s_cmp, s_div, s_invert, s_val};
use hahnfield::{Cutoff, GroupElement, Series};

fn main() {
    let a = parse_expr("t^-1 + 1", 1).unwrap();
    let b = parse_expr("-t^-1 + t", 1).unwrap();
    println!("({a}) + ({b}) = {}", &a + &b);
    println!("(1 + t)(1 - t) = {}", &parse_expr("1 + t", 1).unwrap() * &parse_expr("1 - t", 1).unwrap());

    // cutoffs propagate by the big-O rules
    let rough = parse_expr("t^-1 + O(t)", 1).unwrap();
    println!("({rough}) * t^2 = {}", &rough * &parse_expr("t^2", 1).unwrap());
    println!("1 + O(t^2) + t^3 = {}", parse_expr("1 + O(t^2) + t^3", 1).unwrap());

    let three = Cutoff::Finite(GroupElement::from_ints(&[3]));
    let one_plus_t = parse_expr("1 + t", 1).unwrap();
    println!("1/(1 + t) = {}", s_invert(&one_plus_t, &three).unwrap());
    println!("t^2/(1 + t) = {}", s_div(&parse_expr("t^2", 1).unwrap(), &one_plus_t, &three).unwrap());

    // valuation, residue and the field order
    let c = parse_expr("3*t^-2 + 5 + t", 1).unwrap();
    println!("w({c}) = {}", s_val(&c).unwrap());
    println!("residue of 5 + t = {}", residue(&parse_expr("5 + t", 1).unwrap()).unwrap());
    let order = s_cmp(&parse_expr("t^-1", 1).unwrap(), &parse_expr("1000", 1).unwrap()).unwrap();
    assert_eq!(order, Ordering::Greater);
    println!("t^-1 > 1000: an infinite element");

    // rank 2: t^(0,1) is infinitesimal relative to every t^(1,q)
    let d = parse_expr("t^(1,-5) + 2*t^(0,1)", 2).unwrap();
    println!("rank 2: w({d}) = {}", s_val(&d).unwrap());
    let unit = Series::one(2);
    println!(
        "rank 2: 1/({}) = {}",
        &unit + &d,
        s_invert(&(&unit + &d), &Cutoff::Finite(GroupElement::from_ints(&[0, 3]))).unwrap()
    );
}
