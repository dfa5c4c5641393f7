//! The exponent group Q^r: lexicographic order, archimedean classes and
//! convex subgroups.

use hahnfield::ordgroup::{group_cmp, nat_val, quotient_by_convex, rho_embed, rho_unembed};
use hahnfield::{rat, ConvexLevel, GroupElement};

fn main() {
    let a = GroupElement::from_ints(&[1, 2]);
    let b = GroupElement::from_ints(&[0, -2]);
    println!("{a} + {b} = {}", &a + &b);

    // the first coordinate dominates, however large the second one is
    let small = GroupElement::from_ints(&[0, 100]);
    let big = GroupElement::from_ints(&[1, 0]);
    println!("{small} vs {big}: {:?}", group_cmp(&small, &big).unwrap());

    for g in [GroupElement::from_ints(&[0, 3]), GroupElement::from_ints(&[5, -7]), GroupElement::zero(2)] {
        println!("class of {g}: {}", nat_val(&g));
    }

    // G / H_1 keeps the first coordinate
    let g = GroupElement::from_ints(&[1, 2, 3]);
    println!("{g} mod H_1 = {}", quotient_by_convex(&g, ConvexLevel(1)));

    // the Hahn-product coordinates and back
    let h = GroupElement::new(vec![rat(1, 2), rat(-1, 1)]);
    let parts = rho_embed(&h);
    for (class, q) in &parts {
        println!("  {class}: {q}");
    }
    assert_eq!(rho_unembed(2, &parts).unwrap(), h);
}
