//! Hom-rank tables between global Weyl modules.
//!
//! The dimension of the space of maps from the global Weyl module of highest
//! weight `lambda` into a tensor product of fundamental global Weyl modules
//! prescribed by the tuple `s` (as a free module over the highest-weight
//! algebra) is the coefficient `c_s(lambda)` in a product of fundamental
//! invariant characters. This example prints a few tables over `R_{k,l}`.
//!
//! ```bash
//! cargo run -p weylhom --example homrank_tables
//! ```

use std::sync::Arc;

use weylhom::roots::{Family, RootSystem};
use weylhom::{hom_rank, Weight};

fn print_table(rs: &Arc<RootSystem>, s: &[i64], k: u64) {
    let table = hom_rank(rs, s, k).unwrap();
    println!(
        "{}{}  s = {s:?}  k = {k}   (I_0 = {:?})",
        rs.family(),
        rs.rank(),
        rs.i0()
    );
    for (lambda, c) in table.entries() {
        println!("    c_s({lambda}) = {c}");
    }
    println!();
}

fn main() {
    // Types A and C collapse: the only map target is lambda = sum s_i w_i.
    let a2 = Arc::new(RootSystem::new(Family::A, 2).unwrap());
    print_table(&a2, &[1, 1], 1);
    let c3 = Arc::new(RootSystem::new(Family::C, 3).unwrap());
    print_table(&c3, &[2, 0, 1], 2);

    // Type B: nodes outside I_0 = {1, n} contribute binomial towers.
    let b3 = Arc::new(RootSystem::new(Family::B, 3).unwrap());
    print_table(&b3, &[0, 1, 0], 1);
    print_table(&b3, &[0, 2, 0], 1);

    // Bigger coefficient ring k = 2 thickens the lower weights.
    print_table(&b3, &[0, 2, 0], 2);

    // The nonvanishing surprise: in D_6 the omega_4 module receives maps
    // from the omega_2 module.
    let d6 = Arc::new(RootSystem::new(Family::D, 6).unwrap());
    let s = [0, 0, 0, 1, 0, 0];
    let table = hom_rank(&d6, &s, 1).unwrap();
    let omega2 = Weight::new(vec![0, 1, 0, 0, 0, 0]);
    println!(
        "D6, s = indicator of node 4: c_s(omega_2) = {} (nonzero!)",
        table.coeff(&omega2)
    );
}
