//! The highest-weight algebra as symmetric tensors: for
//! `lambda = sum r_i omega_i` the algebra acting on the highest-weight space
//! is the block-symmetric invariant ring `(A^{(x) r})^{S_{r_1} x ... x S_{r_n}}`,
//! generated by the elements `sym^i(a)` that spread `a` over block `i`.
//!
//! ```bash
//! cargo run -p weylhom --example symmetrizers
//! ```

use weylhom::{RingElement, SymmetrizerContext};

fn main() {
    // lambda = 2 omega_1 over the Laurent ring in one variable.
    let ctx = SymmetrizerContext::new(1, 0, vec![2]);
    let t = RingElement::t_var(1, 0, 1);
    let s = ctx.sym_element(1, &t).unwrap();
    println!("sym^1(t1) for blocks (2):      {s}");
    println!("  block-invariant: {}", ctx.is_block_invariant(&s));

    // Products of generators stay inside the invariant ring.
    let square = s.mul(&s);
    println!("sym^1(t1)^2:                   {square}");
    println!("  block-invariant: {}", ctx.is_block_invariant(&square));

    // Two singleton blocks place elements in independent slots.
    let ctx2 = SymmetrizerContext::new(0, 1, vec![1, 1]);
    let u = RingElement::u_var(0, 1, 1);
    println!(
        "blocks (1,1): sym^1(u1) = {}   sym^2(u1) = {}",
        ctx2.sym_element(1, &u).unwrap(),
        ctx2.sym_element(2, &u).unwrap()
    );

    // A single slot embeds the ring identically: the omega_i case.
    let ctx1 = SymmetrizerContext::new(1, 1, vec![1]);
    let a = RingElement::parse(1, 1, "2 * t1^-1*u1 - 1/3").unwrap();
    let embedded = ctx1.sym_element(1, &a).unwrap();
    println!("single slot embeds {a} as {embedded}");

    // A lopsided tensor is not invariant.
    let ctx = SymmetrizerContext::new(1, 0, vec![2]);
    let mut lopsided = weylhom::polyring::TensorPower::zero(1, 0, 2);
    lopsided.add_term(
        vec![
            weylhom::Monomial::t_gen(1, 0, 1),
            weylhom::Monomial::unit(1, 0),
        ],
        &weylhom::numeric::rat(1),
    );
    println!(
        "t1 (x) 1 is block-invariant: {}",
        ctx.is_block_invariant(&lopsided)
    );
}
