//! The logarithm `log(c·t^g·(1+ε)) = h(-g) + ln c + log(1+ε)` and its
//! partial inverse.

use hahnfield::cli::parse_expr;
use hahnfield::explog::{full_exp, full_exp_parts, full_log, left_log_h, CrossSection, LogMode};
use hahnfield::{rat, Cutoff, GroupElement};

fn main() {
    let cs = CrossSection::standard(1);
    let three = Cutoff::Finite(GroupElement::from_ints(&[3]));

    let a = parse_expr("2*t^-3*(1 + t)", 1).unwrap();
    let log = full_log(&cs, &a, &three, LogMode::Symbolic).unwrap();
    println!("log({a}) = {log}");
    // exp multiplies the small part by t^-3, so recovering `a` below t^3
    // needs the small part below t^6
    let six = Cutoff::Finite(GroupElement::from_ints(&[6]));
    let fine = full_log(&cs, &a, &six, LogMode::Symbolic).unwrap();
    println!("exp(log({a})) = {}", full_exp_parts(&cs, &fine, &three).unwrap());

    println!("exp(t^-1) = {}", full_exp(&cs, &parse_expr("t^-1", 1).unwrap(), &three).unwrap());
    println!("exp(2t^-1 + t) = {}", full_exp(&cs, &parse_expr("2*t^-1 + t", 1).unwrap(), &three).unwrap());

    // log(ab) = log a + log b
    let b = parse_expr("t^2 + t^3", 1).unwrap();
    let sum = full_log(&cs, &a, &three, LogMode::Symbolic)
        .unwrap()
        .combine(&full_log(&cs, &b, &three, LogMode::Symbolic).unwrap())
        .unwrap();
    let product = full_log(&cs, &(&a * &b), &three, LogMode::Symbolic).unwrap();
    println!("log(ab) = {product}\nlog a + log b = {sum}");

    // a non-standard cross-section on Q^2: σ(1) = (-2, 1), σ(2) = (0, -1/2)
    let cs2 = CrossSection::new(
        vec![GroupElement::new(vec![rat(-2, 1), rat(1, 1)]), GroupElement::new(vec![rat(0, 1), rat(-1, 2)])],
        vec![rat(1, 1), rat(3, 1)],
    )
    .unwrap();
    let g = GroupElement::new(vec![rat(1, 1), rat(-1, 3)]);
    println!("h{g} = {}", left_log_h(&cs2, &g).unwrap());
}
