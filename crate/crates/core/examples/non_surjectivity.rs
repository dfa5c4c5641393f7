//! The logarithm misses most purely infinite series: the infinite part of
//! every logarithm lies in h(G), and membership is decidable.

use hahnfield::cli::parse_expr;
use hahnfield::explog::{full_exp, in_left_log_image, witness_not_in_image, CrossSection};
use hahnfield::{Cutoff, Error};

fn main() {
    for rank in 1..=3 {
        let cs = CrossSection::standard(rank);
        let w = witness_not_in_image(&cs);
        let in_image = in_left_log_image(&cs, &w).unwrap();
        let exp = full_exp(&cs, &w, &Cutoff::Infinity);
        println!("rank {rank}: witness {w}, in image: {in_image}, exp: {exp:?}");
        assert_eq!(exp, Err(Error::NotInLogDomain));
    }

    let cs = CrossSection::standard(1);
    for text in ["5*t^-1 + 3 + t", "t^-2", "t^-1 + t^-1/2", "0"] {
        let s = parse_expr(text, 1).unwrap();
        println!("{text}: {}", in_left_log_image(&cs, &s).unwrap());
    }
}
