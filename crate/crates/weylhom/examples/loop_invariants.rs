//! The finite-dimensional oracle: loop-invariant weight spaces of tensor
//! products of evaluation modules, compared against the character-level
//! Hom-rank predictions.
//!
//! ```bash
//! cargo run -p weylhom --example loop_invariants
//! ```

use std::collections::BTreeSet;

use weylhom::hom_rank;
use weylhom::reps::parse_configuration;
use weylhom::Weight;

fn survey(config: &str, k: usize, l: usize) {
    let cfg = parse_configuration(config, k, l).unwrap();
    let s = cfg.s_vector().unwrap();
    let table = hom_rank(cfg.root_system(), &s, k as u64).unwrap();
    println!(
        "{config}   (dim {} tensor, distinct points: {})",
        cfg.total_dim(),
        cfg.distinct_points()
    );
    let dominant: BTreeSet<Weight> = (0..cfg.total_dim())
        .map(|b| cfg.weight_of_basis(b))
        .filter(Weight::is_dominant)
        .collect();
    for mu in dominant {
        let inv = cfg.loop_invariants(&mu).unwrap();
        let predicted = table.coeff(&mu);
        let marker = if inv.dim() as u64 == predicted {
            "ok"
        } else {
            "DIVERGES"
        };
        println!(
            "    mu = {mu:<8} invariants = {}  predicted = {predicted}  {marker}",
            inv.dim()
        );
    }
    println!();
}

fn main() {
    // Distinct points: the oracle agrees with the character prediction.
    survey("A:1; 1@0, 1@1", 0, 1);
    survey("A:2; 1@0, 2@1", 0, 1);
    survey("A:3; 2@0, 1@1", 0, 1);
    survey("A:1; 1@1, 1@1/2, 1@-2", 1, 0);

    // Same point: the weight-0 singlet of V(1) (x) V(1) becomes
    // loop-invariant, so the prediction fails by design — this is why the
    // tensor factorization needs pairwise distinct points.
    survey("A:1; 1@0, 1@0", 0, 1);

    // The full factorization report bundles these checks with a cyclic
    // irreducibility witness.
    let cfg = parse_configuration("A:2; 1@0, 2@1", 0, 1).unwrap();
    let report = cfg.verify_tensor_factorization().unwrap();
    println!(
        "factorization report for {}: passed = {}, cyclic span {}/{}",
        report.config,
        report.passed(),
        report.cyclic_span_dim,
        report.total_dim
    );
}
