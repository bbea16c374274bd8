//! Fundamental invariant characters: the weight-graded dimensions of the
//! positive-loop invariants of a fundamental local Weyl module over
//! `R_{k,l}`.
//!
//! For a node inside `I_0` the character is the single term `e(omega_i)`;
//! outside `I_0` (types B and D) it is the binomial tower
//! `sum_j binom(j+k-1, j) e(omega_{i-2j})`.
//!
//! ```bash
//! cargo run -p weylhom --example fundamental_characters
//! ```

use std::sync::Arc;

use weylhom::roots::{Family, RootSystem};
use weylhom::{fundamental_invariant_character, remark_red_check};

fn main() {
    let b3 = Arc::new(RootSystem::new(Family::B, 3).unwrap());
    println!("B3: I_0 = {:?}", b3.i0());
    for node in 1..=3 {
        for k in 0..=2 {
            let c = fundamental_invariant_character(&b3, node, k).unwrap();
            println!("  node {node}, k = {k}:  {c}");
        }
    }

    println!();
    let d6 = Arc::new(RootSystem::new(Family::D, 6).unwrap());
    println!("D6: I_0 = {:?}", d6.i0());
    for node in [2, 4, 6] {
        let c = fundamental_invariant_character(&d6, node, 1).unwrap();
        println!("  node {node}, k = 1:  {c}");
    }

    // The counterexample region: for rank >= 6 the node-4 character contains
    // e(omega_2), so Hom(W(omega_2), W(omega_4)) is nonzero.
    println!();
    for (family, label) in [(Family::B, "B6"), (Family::D, "D6")] {
        let rs = Arc::new(RootSystem::new(family, 6).unwrap());
        println!(
            "{label}: node-4 tower meets omega_2 at k=1: {}",
            remark_red_check(&rs, 1).unwrap()
        );
        println!(
            "{label}: ... and misses it at k=0 (convention-dependent): {}",
            remark_red_check(&rs, 0).unwrap()
        );
    }
}
