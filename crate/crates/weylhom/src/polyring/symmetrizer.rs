//! Tensor powers `A^{(x) r_lambda}` and the symmetrizer elements that
//! generate the block-invariant subalgebra: for `lambda = sum r_i omega_i`
//! the group `S_{r_1} x ... x S_{r_n}` permutes slots within consecutive
//! blocks of sizes `r_1, ..., r_n`, and
//!
//! `sym^i(a) = 1^{(x)(r_1+...+r_{i-1})} (x) (sum_k 1^{(x)k} (x) a (x) 1^{(x)(r_i-k-1)}) (x) ...`
//!
//! places `a` once in each slot of block `i`.

use std::collections::BTreeMap;
use std::fmt;

use num::{One, Zero};

use crate::numeric::{format_rat, Rat};

use super::{Monomial, RingElement, RingError};

/// Finitely supported element of `A^{(x) arity}`, keyed by slot tuples of
/// monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorPower {
    k: usize,
    l: usize,
    arity: usize,
    terms: BTreeMap<Vec<Monomial>, Rat>,
}

impl TensorPower {
    pub fn zero(k: usize, l: usize, arity: usize) -> Self {
        TensorPower {
            k,
            l,
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(k: usize, l: usize, arity: usize) -> Self {
        let mut out = Self::zero(k, l, arity);
        out.terms
            .insert(vec![Monomial::unit(k, l); arity], Rat::one());
        out
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn add_term(&mut self, slots: Vec<Monomial>, c: &Rat) {
        assert_eq!(slots.len(), self.arity);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(slots) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Monomial>, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &TensorPower) -> TensorPower {
        debug_assert_eq!((self.k, self.l, self.arity), (other.k, other.l, other.arity));
        let mut out = self.clone();
        for (slots, c) in &other.terms {
            out.add_term(slots.clone(), c);
        }
        out
    }

    /// Slotwise product.
    pub fn mul(&self, other: &TensorPower) -> TensorPower {
        debug_assert_eq!((self.k, self.l, self.arity), (other.k, other.l, other.arity));
        let mut out = TensorPower::zero(self.k, self.l, self.arity);
        for (s1, c1) in &self.terms {
            for (s2, c2) in &other.terms {
                let slots: Vec<Monomial> =
                    s1.iter().zip(s2).map(|(a, b)| a.mul(b)).collect();
                out.add_term(slots, &(c1 * c2));
            }
        }
        out
    }

    /// The element with the two given slots transposed.
    pub fn swap_slots(&self, a: usize, b: usize) -> TensorPower {
        let mut out = TensorPower::zero(self.k, self.l, self.arity);
        for (slots, c) in &self.terms {
            let mut swapped = slots.clone();
            swapped.swap(a, b);
            out.add_term(swapped, c);
        }
        out
    }
}

impl fmt::Display for TensorPower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(slots, c)| {
                let body = slots
                    .iter()
                    .map(|m| m.to_string())
                    .collect::<Vec<_>>()
                    .join(" (x) ");
                if c.is_one() {
                    body
                } else {
                    format!("{} * {body}", format_rat(c))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Block data for `lambda = sum r_i omega_i`: contiguous blocks of sizes
/// `r_1, ..., r_n` partition the `r_lambda` tensor slots, in order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetrizerContext {
    k: usize,
    l: usize,
    block_sizes: Vec<usize>,
}

impl SymmetrizerContext {
    pub fn new(k: usize, l: usize, block_sizes: Vec<usize>) -> Self {
        SymmetrizerContext { k, l, block_sizes }
    }

    pub fn block_sizes(&self) -> &[usize] {
        &self.block_sizes
    }

    /// `r_lambda`, the total number of slots.
    pub fn total_slots(&self) -> usize {
        self.block_sizes.iter().sum()
    }

    fn block_start(&self, block: usize) -> usize {
        self.block_sizes[..block - 1].iter().sum()
    }

    /// `sym^i(a)`: the sum over the slots of block `i` of `a` placed in that
    /// slot and units elsewhere. Blocks are 1-based; the block must be
    /// nonempty.
    pub fn sym_element(&self, block: usize, a: &RingElement) -> Result<TensorPower, RingError> {
        if block == 0 || block > self.block_sizes.len() {
            return Err(RingError::BlockOutOfRange {
                block,
                blocks: self.block_sizes.len(),
            });
        }
        if self.block_sizes[block - 1] == 0 {
            return Err(RingError::EmptyBlock { block });
        }
        if (a.k(), a.l()) != (self.k, self.l) {
            return Err(RingError::AmbientMismatch {
                k1: self.k,
                l1: self.l,
                k2: a.k(),
                l2: a.l(),
            });
        }
        let arity = self.total_slots();
        let start = self.block_start(block);
        let mut out = TensorPower::zero(self.k, self.l, arity);
        for slot in start..start + self.block_sizes[block - 1] {
            for (m, c) in a.terms() {
                let mut slots = vec![Monomial::unit(self.k, self.l); arity];
                slots[slot] = m.clone();
                out.add_term(slots, c);
            }
        }
        Ok(out)
    }

    /// True iff the element is fixed by every adjacent transposition within
    /// each block; those transpositions generate the block group.
    pub fn is_block_invariant(&self, x: &TensorPower) -> bool {
        debug_assert_eq!(x.arity(), self.total_slots());
        let mut offset = 0;
        for &size in &self.block_sizes {
            for s in offset..offset + size.saturating_sub(1) {
                if x.swap_slots(s, s + 1) != *x {
                    return false;
                }
            }
            offset += size;
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat;

    #[test]
    fn sym_with_one_block_of_two() {
        // lambda = 2 omega_1, a = t: t (x) 1 + 1 (x) t.
        let ctx = SymmetrizerContext::new(1, 0, vec![2]);
        let t = RingElement::t_var(1, 0, 1);
        let s = ctx.sym_element(1, &t).unwrap();
        assert_eq!(s.num_terms(), 2);
        assert_eq!(format!("{s}"), "t1 (x) 1 + 1 (x) t1");
        assert!(ctx.is_block_invariant(&s));
    }

    #[test]
    fn single_slot_is_identity_embedding() {
        let ctx = SymmetrizerContext::new(1, 1, vec![1]);
        let a = RingElement::parse(1, 1, "2 * t1*u1 - 1/3").unwrap();
        let s = ctx.sym_element(1, &a).unwrap();
        let recovered = {
            let mut out = RingElement::zero(1, 1);
            for (slots, c) in s.terms() {
                out.add_term(slots[0].clone(), c);
            }
            out
        };
        assert_eq!(recovered, a);
    }

    #[test]
    fn two_singleton_blocks() {
        // lambda = omega_1 + omega_2, a = u: slot placement by block.
        let ctx = SymmetrizerContext::new(0, 1, vec![1, 1]);
        let u = RingElement::u_var(0, 1, 1);
        let s1 = ctx.sym_element(1, &u).unwrap();
        assert_eq!(format!("{s1}"), "u1 (x) 1");
        let s2 = ctx.sym_element(2, &u).unwrap();
        assert_eq!(format!("{s2}"), "1 (x) u1");
    }

    #[test]
    fn invariance_checks() {
        let ctx = SymmetrizerContext::new(1, 0, vec![2]);
        let mut lopsided = TensorPower::zero(1, 0, 2);
        lopsided.add_term(
            vec![Monomial::t_gen(1, 0, 1), Monomial::unit(1, 0)],
            &rat(1),
        );
        assert!(!ctx.is_block_invariant(&lopsided));
        assert!(ctx.is_block_invariant(&TensorPower::one(1, 0, 2)));
    }

    #[test]
    fn products_of_sym_elements_stay_invariant() {
        let ctx = SymmetrizerContext::new(1, 1, vec![2, 1]);
        let a = RingElement::parse(1, 1, "t1 + u1").unwrap();
        let b = RingElement::parse(1, 1, "u1^2 - 3 * t1^-1").unwrap();
        let s1 = ctx.sym_element(1, &a).unwrap();
        let s2 = ctx.sym_element(2, &b).unwrap();
        assert!(ctx.is_block_invariant(&s1));
        assert!(ctx.is_block_invariant(&s2));
        assert!(ctx.is_block_invariant(&s1.mul(&s2)));
        assert!(ctx.is_block_invariant(&s1.mul(&s1)));
    }

    #[test]
    fn empty_block_is_an_error() {
        let ctx = SymmetrizerContext::new(1, 0, vec![1, 0]);
        let t = RingElement::t_var(1, 0, 1);
        assert_eq!(
            ctx.sym_element(2, &t),
            Err(RingError::EmptyBlock { block: 2 })
        );
        assert_eq!(
            ctx.sym_element(3, &t),
            Err(RingError::BlockOutOfRange { block: 3, blocks: 2 })
        );
    }
}
