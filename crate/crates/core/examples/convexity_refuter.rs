//! No order embedding of a cofinal subset of N into Z^N has convex image:
//! the refuter finds the gap for the built-in oracles and for a custom one.

use hahnfield::lexprod::{builtin_oracle, oplus, refute_convexity_traced, FnOracle, IndexSet, SupportMap, Witness};

fn show(name: &str, witness: &Witness, queries: usize) {
    match witness {
        Witness::NotConvex { lower, middle, upper, .. } => {
            println!("{name}: {lower} < {middle} < {upper}, middle not in the image (query {queries})")
        }
        Witness::ChainExhausted { chain, steps } => {
            println!("{name}: the oracle accepted all {steps} queries; chain of {} images", chain.len())
        }
    }
}

fn main() {
    let d = SupportMap::from_pairs([(0, 1), (2, -1)]);
    println!("{d} (+) {{2}} = {}", oplus(&d, &IndexSet::from([2])));

    for name in ["shifted-singleton", "moving-support", "stutter", "liar"] {
        let mut oracle = builtin_oracle(name, None).unwrap();
        let (witness, trace) = refute_convexity_traced(oracle.as_mut(), 5).unwrap();
        assert!(witness.verify(oracle.as_mut()));
        show(name, &witness, trace.len());
    }

    // n -> {0: n+1, 1: n}
    let mut custom = FnOracle {
        forward: |n| SupportMap::from_pairs([(0, n as i64 + 1), (1, n as i64)]),
        inverse: |m: &SupportMap| {
            let n = m.get(0) - 1;
            let expected = SupportMap::from_pairs([(0, n + 1), (1, n)]);
            (n >= 0 && *m == expected).then_some(n as u64)
        },
        domain: |after: Option<u64>| Some(after.map_or(0, |n| n + 1)),
    };
    let (witness, trace) = refute_convexity_traced(&mut custom, 5).unwrap();
    show("custom", &witness, trace.len());
}
