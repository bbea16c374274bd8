//! Exact scalar arithmetic. Everything in this crate is computed over the
//! rationals (or integers); no floating point anywhere.

use num::bigint::Sign;
use num::{BigInt, BigRational, One, Zero};

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn int(n: i64) -> Int {
    Int::from(n)
}

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(int(n))
}

/// Exact fraction `n/d`. Panics if `d == 0`.
pub fn frac(n: i64, d: i64) -> Rat {
    Rat::new(int(n), int(d))
}

pub fn is_one(r: &Rat) -> bool {
    r.is_one()
}

/// Binomial coefficient with the combinatorial convention
/// `binom(n, 0) = 1` and `binom(n, r) = 0` for `r > n`.
pub fn binomial(n: u64, r: u64) -> Int {
    if r > n {
        return Int::zero();
    }
    num::integer::binomial(int(n as i64), int(r as i64))
}

/// Number of multisets of size `j` drawn from `k` symbols: `binom(j+k-1, j)`
/// for `k >= 1`, degenerating to `[j == 0]` at `k = 0` (so `binom(-1, 0) = 1`
/// and `binom(j-1, j) = 0` for `j >= 1`).
pub fn multichoose(k: u64, j: u64) -> Int {
    if k == 0 {
        if j == 0 {
            Int::one()
        } else {
            Int::zero()
        }
    } else {
        binomial(j + k - 1, j)
    }
}

/// Parses an exact rational written as `a` or `a/b` with optional sign.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    match s.split_once('/') {
        Some((n, d)) => {
            let n: Int = n.trim().parse().ok()?;
            let d: Int = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rat::new(n, d))
            }
        }
        None => {
            let n: Int = s.parse().ok()?;
            Some(Rat::from_integer(n))
        }
    }
}

/// Formats a rational as `a` or `a/b`, matching what [`parse_rat`] accepts.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Exact integer power of a rational; negative exponents require a nonzero base.
pub fn rat_pow(base: &Rat, exp: i64) -> Rat {
    if exp == 0 {
        return Rat::one();
    }
    let positive = base.pow(i32::try_from(exp.unsigned_abs()).expect("exponent fits in i32"));
    if exp > 0 {
        positive
    } else {
        assert!(!positive.is_zero(), "negative power of zero");
        positive.recip()
    }
}

pub fn int_sign(n: &Int) -> i8 {
    match n.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multichoose_degenerates_at_k_zero() {
        assert_eq!(multichoose(0, 0), int(1));
        assert_eq!(multichoose(0, 1), int(0));
        assert_eq!(multichoose(0, 5), int(0));
        assert_eq!(multichoose(1, 4), int(1));
        assert_eq!(multichoose(2, 3), int(4));
    }

    #[test]
    fn rational_round_trip() {
        for s in ["3", "-7", "1/2", "-22/7", "0"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(format_rat(&r), s);
        }
        assert!(parse_rat("1/0").is_none());
        assert!(parse_rat("").is_none());
    }

    #[test]
    fn powers() {
        assert_eq!(rat_pow(&frac(2, 3), -2), frac(9, 4));
        assert_eq!(rat_pow(&rat(5), 0), rat(1));
    }
}
