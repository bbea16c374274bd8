//! The binomial matrix `C(N, K) = (binom(K+N-s, r))_{0 <= s,r <= N}` has
//! determinant `(-1)^{N(N+1)/2}`, independent of `K`; this invertibility is
//! what lets u-degree bands detect loop invariants exactly.
//!
//! ```bash
//! cargo run -p weylhom --example determinant_identity
//! ```

use weylhom::binom_matrix_det;
use weylhom::polyring::{binom_matrix, binom_matrix_det_predicted};

fn main() {
    println!("C(2, 3):");
    for row in binom_matrix(2, 3) {
        println!("  {row:?}");
    }
    println!();

    println!("{:>3} {:>3}  {:>6} {:>9}", "N", "K", "det", "predicted");
    for n in 0..=8 {
        for k in [0, 3, 8] {
            let det = binom_matrix_det(n, k);
            let predicted = binom_matrix_det_predicted(n);
            assert_eq!(det, predicted);
            println!("{n:>3} {k:>3}  {det:>6} {predicted:>9}");
        }
    }
    println!("\nall 27 sampled determinants match the closed form");
}
