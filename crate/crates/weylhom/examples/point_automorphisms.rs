//! Moving evaluation points with ring automorphisms: `t_s -> c_s t_s`,
//! `u_r -> u_r + b_r`. The automorphism attached to a target point satisfies
//! `phi(f)(base) = f(target)`, so every maximal ideal is a twist of the
//! standing base ideal `(t_1 - 1, ..., t_k - 1, u_1, ..., u_l)` — and
//! invariant dimensions never notice the move.
//!
//! ```bash
//! cargo run -p weylhom --example point_automorphisms
//! ```

use weylhom::numeric::{frac, rat};
use weylhom::polyring::Point;
use weylhom::reps::{build_sl2_module, EvaluationModule, TensorConfiguration};
use weylhom::{RingElement, ShiftAutomorphism, Weight};

fn main() {
    // The automorphism for the target point t = 2 scales t; its inverse
    // carries the base ideal onto the ideal of the target.
    let target = Point::new(vec![rat(2)], vec![]).unwrap();
    let phi = ShiftAutomorphism::to_point(&target);
    let t = RingElement::t_var(1, 0, 1);
    let f = t.sub(&RingElement::constant(1, 0, rat(2))).unwrap();
    println!("phi(t1 - 2) = {}", phi.apply(&f));
    println!(
        "  vanishes at the base point: {}",
        phi.apply(&f).eval(&Point::base(1, 0)).unwrap() == rat(0)
    );
    let g = t.sub(&RingElement::one(1, 0)).unwrap();
    println!("phi^-1(t1 - 1) = {}", phi.inverse().apply(&g));

    // phi(f)(p) = f(phi(p)) for the induced point map.
    let h = RingElement::parse(1, 0, "3 * t1^2 - t1^-1").unwrap();
    let p = Point::new(vec![frac(5, 3)], vec![]).unwrap();
    let lhs = phi.apply(&h).eval(&p).unwrap();
    let rhs = h.eval(&phi.point_image(&p).unwrap()).unwrap();
    println!("pullback identity on a sample element: {}", lhs == rhs);

    // Invariant dimensions are blind to a simultaneous move of all points.
    let v1 = build_sl2_module(1);
    let mk = |a: i64, b: i64| {
        TensorConfiguration::new(vec![
            EvaluationModule::new(v1.clone(), Point::new(vec![], vec![rat(a)]).unwrap()),
            EvaluationModule::new(v1.clone(), Point::new(vec![], vec![rat(b)]).unwrap()),
        ])
        .unwrap()
    };
    let here = mk(0, 1);
    let there = mk(7, 8); // all u-coordinates translated by 7
    for mu in [Weight::new(vec![2]), Weight::new(vec![0])] {
        println!(
            "mu = {mu}: dim at (0,1) = {}, dim at (7,8) = {}",
            here.loop_invariants(&mu).unwrap().dim(),
            there.loop_invariants(&mu).unwrap().dim()
        );
    }
}
