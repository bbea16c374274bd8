//! The bialgebra structure of `R_{k,l}`: Laurent generators are group-like,
//! polynomial generators are primitive, and every monomial expands with
//! tightly bookkept u-degrees on the cross terms.
//!
//! ```bash
//! cargo run -p weylhom --example comultiplication
//! ```

use weylhom::polyring::{
    check_degree_bookkeeping, coassociativity_holds, counit_law_holds, Monomial,
};
use weylhom::{comultiply, RingElement};

fn main() {
    for text in ["t1^-1", "u1", "u1^2", "t1*u1", "t1^2*u1*u2"] {
        let element = RingElement::parse(2, 2, text).unwrap();
        let (mono, _) = element.terms().next().unwrap();
        println!("h({text}) = {}", comultiply(mono));
    }

    println!();
    let m = Monomial::new(vec![3, -1], vec![2, 1]);
    println!("m = {m}:");
    println!("  coassociative:        {}", coassociativity_holds(&m));
    println!("  counit law:           {}", counit_law_holds(&m));
    println!(
        "  degree bookkeeping:   {}",
        check_degree_bookkeeping(&m).unwrap()
    );

    // The unit factor of a monomial is group-like, so the expansion always
    // contains the principal term m (x) m_t.
    let d = comultiply(&m);
    let principal = d.coeff(&m, &m.t_part());
    println!("  principal coefficient of m (x) m_t: {principal}");
}
