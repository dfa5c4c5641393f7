//! The additive split into purely infinite and bounded parts, the
//! multiplicative split `c·t^g·(1 + ε)`, and `-w(a) = w(1/a)`.

use hahnfield::cli::parse_expr;
use hahnfield::hahnseries::{decompose_additive, decompose_multiplicative, minus_w, s_invert, s_val};
use hahnfield::{Cutoff, GroupElement};

fn main() {
    let a = parse_expr("t^-2 + 5 + t", 1).unwrap();
    let d = decompose_additive(&a);
    println!("{a} = [{}] + [{}]", d.infinite_part, d.bounded_part);

    // (0,-1) is negative, so t^(0,-1) is purely infinite as well
    let b = parse_expr("t^(-1,3) + t^(0,-1)", 2).unwrap();
    let d = decompose_additive(&b);
    println!("{b} = [{}] + [{}]", d.infinite_part, d.bounded_part);

    let c = parse_expr("3*t^-2 + 3*t^-1", 1).unwrap();
    let m = decompose_multiplicative(&c).unwrap();
    println!("{c} = {} * t^{} * (1 + {})", m.lead, m.value, m.one_unit_tail);
    assert_eq!(m.reconstruct(), c);

    let e = parse_expr("4*t^3", 1).unwrap();
    let inv = s_invert(&e, &Cutoff::Finite(GroupElement::from_ints(&[0]))).unwrap();
    println!("-w({e}) = {}, w(1/{e}) = {}", minus_w(&e).unwrap(), s_val(&inv).unwrap());
}
