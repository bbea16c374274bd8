//! Invariant stabilization: over the Laurent ring, killing high t-degrees is
//! as strong as killing everything; over the polynomial ring, a u-degree
//! band `[K, K+N]` detects the invariants exactly.
//!
//! ```bash
//! cargo run -p weylhom --example stabilization
//! ```

use weylhom::bimodule::{stabilization_check, TruncatedBimodule, Window};
use weylhom::reps::parse_configuration;

fn main() {
    // Laurent side: e (x) t^d for |d| >= K pins the same space for every K.
    let pair = parse_configuration("A:1; 1@1, 1@3", 1, 0).unwrap();
    println!("V(1)_1 (x) V(1)_3 over R_{{1,0}}:");
    for k in 0..=4 {
        println!(
            "  tail |d| >= {k} cuts the full invariant space: {}",
            stabilization_check(&pair, k).unwrap()
        );
    }

    // Polynomial side: the annihilator exponent N of the base module sets
    // the band width.
    println!();
    for (config, threshold, window) in [
        ("A:1; 1@0", 1u64, Window::new(4, 0)),
        ("A:1; 1@0, 1@0", 2u64, Window::new(6, 0)),
    ] {
        let cfg = parse_configuration(config, 0, 1).unwrap();
        let n = cfg.annihilator_exponent().unwrap();
        let tb = TruncatedBimodule::new(cfg, window).unwrap();
        println!(
            "{config}: annihilator exponent N = {n}, band [{threshold}, {}] detects invariants: {}",
            threshold + n as u64,
            tb.u_degree_invariant_criterion(threshold).unwrap()
        );
    }

    // Too small a window reports inconclusive instead of guessing.
    let cfg = parse_configuration("A:1; 1@0", 0, 1).unwrap();
    let cramped = TruncatedBimodule::new(cfg, Window::new(1, 0)).unwrap();
    println!(
        "\ncramped window: {:?}",
        cramped.u_degree_invariant_criterion(1).err().map(|e| e.to_string())
    );
}
