//! Certified logarithms of rational constants.

use hahnfield::explog::{base_log, ln_enclosure, LogMode};
use hahnfield::rat;

fn main() {
    for c in [rat(2, 1), rat(3, 1), rat(10, 1), rat(1, 2)] {
        let symbolic = base_log(&c, LogMode::Symbolic).unwrap();
        let dyadic = base_log(&c, LogMode::Dyadic(20)).unwrap();
        println!("ln {c}: {symbolic} = {dyadic}");
    }

    let (lo, hi) = ln_enclosure(&rat(2, 1), 64).unwrap();
    println!("ln 2 in [{lo}, {hi}]");

    // symbolic values add and compare exactly
    let l2 = base_log(&rat(2, 1), LogMode::Symbolic).unwrap();
    let l3 = base_log(&rat(3, 1), LogMode::Symbolic).unwrap();
    println!("{l2} + {l3} = {}", l2.add(&l3).unwrap());
    println!("{l2} vs {l3}: {:?}", l2.cmp_value(&l3).unwrap());
}
