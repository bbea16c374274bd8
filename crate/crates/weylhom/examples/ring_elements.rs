//! The mixed Laurent/polynomial ring `R_{k,l}` and its text format: exact
//! rational coefficients, negative exponents on t-variables only, and a
//! printer that round-trips through the parser bit-exactly.
//!
//! ```bash
//! cargo run -p weylhom --example ring_elements
//! ```

use weylhom::numeric::{frac, rat};
use weylhom::polyring::Point;
use weylhom::RingElement;

fn main() {
    let x = RingElement::parse(2, 1, "3/2 * t1^2*t2^-1*u1 - 4 + u1^3").unwrap();
    println!("parsed:   {x}");
    let reparsed = RingElement::parse(2, 1, &x.to_string()).unwrap();
    println!("round-trips bit-exactly: {}", reparsed == x);

    let y = RingElement::parse(2, 1, "t2 - u1").unwrap();
    println!("product:  {}", x.mul(&y).unwrap());

    // Exact evaluation at a rational point (t-coordinates must be nonzero).
    let p = Point::new(vec![rat(2), frac(1, 3)], vec![rat(-1)]).unwrap();
    println!(
        "value of {x} at {p}: {}",
        weylhom::numeric::format_rat(&x.eval(&p).unwrap())
    );

    // The grammar refuses negative exponents on polynomial variables.
    match RingElement::parse(2, 1, "u1^-1") {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!(),
    }
}
