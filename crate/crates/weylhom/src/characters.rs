//! The group ring `Z[P]` of formal characters, restricted to the dominant
//! cone produced by the Hom-rank combinatorics: fundamental invariant
//! characters and the coefficient tables `c_s(lambda)`.
//!
//! A [`Character`] is a finitely supported sum of basis elements `e(mu)` with
//! nonnegative integer coefficients; multiplication is the group-ring
//! convolution `e(mu) e(nu) = e(mu + nu)`. Full Weyl-group-symmetric
//! characters of simple modules are deliberately not modeled.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde_json::json;
use thiserror::Error;

use crate::numeric::multichoose;
use crate::roots::{Family, RootSystem, RootSystemError, Weight};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CharacterError {
    #[error("operands live over different root systems")]
    MixedRootSystems,
    #[error(transparent)]
    RootSystem(#[from] RootSystemError),
    #[error("s must be nonnegative")]
    NegativeEntry,
    #[error("s has {got} entries, expected {expected}")]
    SupportLength { got: usize, expected: usize },
    #[error("coefficient exceeds u64 range")]
    Overflow,
    #[error("remark hypotheses require family B or D with rank >= 6, got {family}{rank}")]
    RemarkHypothesis { family: Family, rank: usize },
}

/// Sparse formal character with nonnegative integer coefficients. Terms are
/// kept in lexicographic weight order, which fixes printing and
/// serialization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    rs: Arc<RootSystem>,
    terms: BTreeMap<Weight, u64>,
}

impl Character {
    pub fn zero(rs: &Arc<RootSystem>) -> Self {
        Character {
            rs: Arc::clone(rs),
            terms: BTreeMap::new(),
        }
    }

    /// The multiplicative identity `e(0)`.
    pub fn one(rs: &Arc<RootSystem>) -> Self {
        Self::basis(rs, rs.zero_weight()).expect("zero weight is always valid")
    }

    /// A single basis element `e(mu)`.
    pub fn basis(rs: &Arc<RootSystem>, mu: Weight) -> Result<Self, CharacterError> {
        rs.check_weight(&mu)?;
        let mut terms = BTreeMap::new();
        terms.insert(mu, 1);
        Ok(Character {
            rs: Arc::clone(rs),
            terms,
        })
    }

    pub fn from_terms(
        rs: &Arc<RootSystem>,
        entries: impl IntoIterator<Item = (Weight, u64)>,
    ) -> Result<Self, CharacterError> {
        let mut out = Self::zero(rs);
        for (w, c) in entries {
            rs.check_weight(&w)?;
            if c != 0 {
                let slot = out.terms.entry(w).or_insert(0);
                *slot = slot.checked_add(c).ok_or(CharacterError::Overflow)?;
            }
        }
        Ok(out)
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn coeff(&self, mu: &Weight) -> u64 {
        self.terms.get(mu).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, u64)> {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Sum of all coefficients; convolution preserves products of masses.
    pub fn mass(&self) -> u64 {
        self.terms.values().sum()
    }

    fn same_system(&self, other: &Character) -> Result<(), CharacterError> {
        if self.rs == other.rs {
            Ok(())
        } else {
            Err(CharacterError::MixedRootSystems)
        }
    }

    /// Pointwise sum.
    pub fn add(&self, other: &Character) -> Result<Character, CharacterError> {
        self.same_system(other)?;
        let mut out = self.clone();
        for (w, &c) in &other.terms {
            let slot = out.terms.entry(w.clone()).or_insert(0);
            *slot = slot.checked_add(c).ok_or(CharacterError::Overflow)?;
        }
        Ok(out)
    }

    /// Convolution product in `Z[P]`: `e(mu) e(nu) = e(mu + nu)`.
    pub fn mul(&self, other: &Character) -> Result<Character, CharacterError> {
        self.same_system(other)?;
        let mut terms: BTreeMap<Weight, u64> = BTreeMap::new();
        for (w1, &c1) in &self.terms {
            for (w2, &c2) in &other.terms {
                let w = w1.add(w2);
                let c = c1.checked_mul(c2).ok_or(CharacterError::Overflow)?;
                let slot = terms.entry(w).or_insert(0);
                *slot = slot.checked_add(c).ok_or(CharacterError::Overflow)?;
            }
        }
        Ok(Character {
            rs: Arc::clone(&self.rs),
            terms,
        })
    }

    pub fn pow(&self, exp: u64) -> Result<Character, CharacterError> {
        let mut out = Character::one(&self.rs);
        for _ in 0..exp {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// Canonical JSON: an array of `{"weight": [...], "coeff": n}` objects
    /// sorted lexicographically by weight.
    pub fn to_json(&self) -> serde_json::Value {
        json!(self
            .terms
            .iter()
            .map(|(w, c)| json!({"weight": w.coords(), "coeff": c}))
            .collect::<Vec<_>>())
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| {
                if *c == 1 {
                    format!("e({w})")
                } else {
                    format!("{c}*e({w})")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// The character of the `n^+ tensor A`-invariants of a fundamental local
/// Weyl module over `R_{k,l}`: `e(omega_i)` when `i` lies in `I_0`, and
/// otherwise (families B and D) the binomial sum
/// `sum_j multichoose(k, j) e(omega_{i-2j})` with `omega_0 = 0`.
///
/// At `k = 0` the convention `multichoose(0, j) = [j == 0]` degenerates the
/// second case to `e(omega_i)`.
pub fn fundamental_invariant_character(
    rs: &Arc<RootSystem>,
    node: usize,
    k: u64,
) -> Result<Character, CharacterError> {
    let omega_i = rs.fundamental_weight(node)?;
    if node == 0 {
        return Err(CharacterError::RootSystem(RootSystemError::NodeOutOfRange {
            node,
            rank: rs.rank(),
        }));
    }
    if rs.i0().contains(&node) {
        return Character::basis(rs, omega_i);
    }
    let mut entries = Vec::new();
    let mut j = 0u64;
    loop {
        let target = node as i64 - 2 * j as i64;
        if target < 0 {
            break;
        }
        let coeff = multichoose(k, j);
        if let Ok(c) = u64::try_from(&coeff) {
            if c > 0 {
                entries.push((rs.fundamental_weight(target as usize)?, c));
            }
        } else {
            return Err(CharacterError::Overflow);
        }
        j += 1;
    }
    Character::from_terms(rs, entries)
}

/// Hom-rank table: the coefficients `c_s(lambda)` of the product of
/// fundamental invariant characters prescribed by `s` over `R_{k,l}`.
/// Every key is dominant and carries a nonzero coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomRankTable {
    rs: Arc<RootSystem>,
    s: Vec<u64>,
    k: u64,
    character: Character,
}

impl HomRankTable {
    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn s(&self) -> &[u64] {
        &self.s
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    /// `c_s(lambda)`.
    pub fn coeff(&self, lambda: &Weight) -> u64 {
        self.character.coeff(lambda)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Weight, u64)> {
        self.character.terms()
    }

    pub fn len(&self) -> usize {
        self.character.num_terms()
    }

    pub fn is_empty(&self) -> bool {
        self.character.num_terms() == 0
    }

    pub fn character(&self) -> &Character {
        &self.character
    }

    /// The weight `sum_i s_i omega_i` targeted by the configuration.
    pub fn top_weight(&self) -> Weight {
        Weight::new(self.s.iter().map(|&x| x as i64).collect())
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "family": self.rs.family().to_string(),
            "rank": self.rs.rank(),
            "s": self.s,
            "k": self.k,
            "entries": self.character.to_json(),
        })
    }
}

/// Computes the Hom-rank table for the tuple `s` over `R_{k,l}` by expanding
/// `prod_i F_i^{s_i}` where `F_i` is the fundamental invariant character.
pub fn hom_rank(rs: &Arc<RootSystem>, s: &[i64], k: u64) -> Result<HomRankTable, CharacterError> {
    if s.len() != rs.rank() {
        return Err(CharacterError::SupportLength {
            got: s.len(),
            expected: rs.rank(),
        });
    }
    if s.iter().any(|&x| x < 0) {
        return Err(CharacterError::NegativeEntry);
    }
    let mut product = Character::one(rs);
    for (idx, &si) in s.iter().enumerate() {
        if si == 0 {
            continue;
        }
        let factor = fundamental_invariant_character(rs, idx + 1, k)?;
        product = product.mul(&factor.pow(si as u64)?)?;
    }
    debug_assert!(product.terms().all(|(w, _)| w.is_dominant()));
    Ok(HomRankTable {
        rs: Arc::clone(rs),
        s: s.iter().map(|&x| x as u64).collect(),
        k,
        character: product,
    })
}

/// The nonvanishing counterexample of the remark on types B/D: for rank at
/// least 6 and `s` the indicator of node 4, the table acquires a nonzero
/// entry at `omega_2`, so the Hom space from the `omega_2` module is nonzero.
pub fn remark_red_check(rs: &Arc<RootSystem>, k: u64) -> Result<bool, CharacterError> {
    if !matches!(rs.family(), Family::B | Family::D) || rs.rank() < 6 {
        return Err(CharacterError::RemarkHypothesis {
            family: rs.family(),
            rank: rs.rank(),
        });
    }
    let mut s = vec![0i64; rs.rank()];
    s[3] = 1;
    let table = hom_rank(rs, &s, k)?;
    let omega_2 = rs.fundamental_weight(2)?;
    Ok(table.coeff(&omega_2) > 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::Family;
    use proptest::prelude::*;

    fn arc(family: Family, rank: usize) -> Arc<RootSystem> {
        Arc::new(RootSystem::new(family, rank).unwrap())
    }

    fn e(rs: &Arc<RootSystem>, coords: Vec<i64>) -> Character {
        Character::basis(rs, Weight::new(coords)).unwrap()
    }

    /// Naive convolution over raw coordinate vectors, independent of
    /// `Character::mul`.
    fn convolve_naive(
        a: &[(Vec<i64>, u64)],
        b: &[(Vec<i64>, u64)],
    ) -> BTreeMap<Vec<i64>, u64> {
        let mut out = BTreeMap::new();
        for (w1, c1) in a {
            for (w2, c2) in b {
                let w: Vec<i64> = w1.iter().zip(w2).map(|(x, y)| x + y).collect();
                *out.entry(w).or_insert(0) += c1 * c2;
            }
        }
        out
    }

    fn as_raw(c: &Character) -> Vec<(Vec<i64>, u64)> {
        c.terms().map(|(w, c)| (w.coords().to_vec(), c)).collect()
    }

    #[test]
    fn addition_examples() {
        let a2 = arc(Family::A, 2);
        let x = e(&a2, vec![1, 0]);
        let two_x = x.add(&x).unwrap();
        assert_eq!(two_x.coeff(&Weight::new(vec![1, 0])), 2);

        let zero = Character::zero(&a2);
        assert_eq!(x.add(&zero).unwrap(), x);

        let b3 = arc(Family::B, 3);
        let y = e(&b3, vec![0, 1, 0]).add(&e(&b3, vec![0, 0, 0])).unwrap();
        let z = y.add(&e(&b3, vec![0, 0, 0])).unwrap();
        assert_eq!(z.coeff(&Weight::new(vec![0, 1, 0])), 1);
        assert_eq!(z.coeff(&Weight::new(vec![0, 0, 0])), 2);
    }

    #[test]
    fn multiplication_examples() {
        let a2 = arc(Family::A, 2);
        let prod = e(&a2, vec![1, 0]).mul(&e(&a2, vec![0, 1])).unwrap();
        assert_eq!(as_raw(&prod), vec![(vec![1, 1], 1)]);

        // (e(omega_2) + e(0))^2 in B_3, frozen from the naive convolution.
        let b3 = arc(Family::B, 3);
        let f = e(&b3, vec![0, 1, 0]).add(&e(&b3, vec![0, 0, 0])).unwrap();
        let sq = f.mul(&f).unwrap();
        let expected = convolve_naive(&as_raw(&f), &as_raw(&f));
        assert_eq!(
            sq.terms()
                .map(|(w, c)| (w.coords().to_vec(), c))
                .collect::<BTreeMap<_, _>>(),
            expected
        );
        assert_eq!(sq.coeff(&Weight::new(vec![0, 2, 0])), 1);
        assert_eq!(sq.coeff(&Weight::new(vec![0, 1, 0])), 2);
        assert_eq!(sq.coeff(&Weight::new(vec![0, 0, 0])), 1);

        let one = Character::one(&b3);
        assert_eq!(f.mul(&one).unwrap(), f);
    }

    #[test]
    fn mixed_root_systems_are_rejected() {
        let a2 = arc(Family::A, 2);
        let b2 = arc(Family::B, 2);
        let x = e(&a2, vec![1, 0]);
        let y = e(&b2, vec![1, 0]);
        assert_eq!(x.add(&y), Err(CharacterError::MixedRootSystems));
        assert_eq!(x.mul(&y), Err(CharacterError::MixedRootSystems));
    }

    #[test]
    fn fundamental_invariant_characters() {
        let b3 = arc(Family::B, 3);
        let c = fundamental_invariant_character(&b3, 2, 1).unwrap();
        assert_eq!(as_raw(&c), vec![(vec![0, 0, 0], 1), (vec![0, 1, 0], 1)]);

        let c2 = fundamental_invariant_character(&b3, 2, 2).unwrap();
        assert_eq!(as_raw(&c2), vec![(vec![0, 0, 0], 2), (vec![0, 1, 0], 1)]);

        for rank in 1..=5 {
            let a = arc(Family::A, rank);
            for node in 1..=rank {
                for k in 0..=3 {
                    let c = fundamental_invariant_character(&a, node, k).unwrap();
                    let mut coords = vec![0; rank];
                    coords[node - 1] = 1;
                    assert_eq!(as_raw(&c), vec![(coords, 1)]);
                }
            }
        }

        let d6 = arc(Family::D, 6);
        let c = fundamental_invariant_character(&d6, 4, 1).unwrap();
        assert_eq!(
            as_raw(&c),
            vec![
                (vec![0, 0, 0, 0, 0, 0], 1),
                (vec![0, 0, 0, 1, 0, 0], 1),
                (vec![0, 1, 0, 0, 0, 0], 1),
            ]
        );

        // k = 0 degenerates every factor to a single term.
        let c0 = fundamental_invariant_character(&d6, 4, 0).unwrap();
        assert_eq!(as_raw(&c0), vec![(vec![0, 0, 0, 1, 0, 0], 1)]);
    }

    #[test]
    fn hom_rank_examples() {
        let a2 = arc(Family::A, 2);
        let t = hom_rank(&a2, &[1, 1], 1).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t.coeff(&Weight::new(vec![1, 1])), 1);

        let b3 = arc(Family::B, 3);
        let t = hom_rank(&b3, &[0, 1, 0], 1).unwrap();
        assert_eq!(t.coeff(&Weight::new(vec![0, 1, 0])), 1);
        assert_eq!(t.coeff(&Weight::new(vec![0, 0, 0])), 1);
        assert_eq!(t.len(), 2);

        let t = hom_rank(&b3, &[0, 2, 0], 1).unwrap();
        assert_eq!(t.coeff(&Weight::new(vec![0, 2, 0])), 1);
        assert_eq!(t.coeff(&Weight::new(vec![0, 1, 0])), 2);
        assert_eq!(t.coeff(&Weight::new(vec![0, 0, 0])), 1);
        assert_eq!(t.len(), 3);

        assert_eq!(hom_rank(&b3, &[0, -1, 0], 1), Err(CharacterError::NegativeEntry));
        assert!(matches!(
            hom_rank(&b3, &[1, 1], 1),
            Err(CharacterError::SupportLength { .. })
        ));
    }

    #[test]
    fn remark_red() {
        let d6 = arc(Family::D, 6);
        assert!(remark_red_check(&d6, 1).unwrap());
        let b6 = arc(Family::B, 6);
        assert!(remark_red_check(&b6, 1).unwrap());
        // k = 0 kills the omega_2 term (convention-dependent edge case).
        assert!(!remark_red_check(&d6, 0).unwrap());
        let b3 = arc(Family::B, 3);
        assert!(remark_red_check(&b3, 1).is_err());
    }

    #[test]
    fn i0_supported_tables_collapse() {
        let b4 = arc(Family::B, 4);
        // I_0 = {1, 4} for B_4.
        let t = hom_rank(&b4, &[2, 0, 0, 1], 1).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t.coeff(&Weight::new(vec![2, 0, 0, 1])), 1);
    }

    #[test]
    fn mass_is_multiplicative() {
        let b3 = arc(Family::B, 3);
        for k in 0..=2 {
            for s in [[1, 1, 0], [0, 2, 1], [2, 1, 1]] {
                let t = hom_rank(&b3, &s, k).unwrap();
                let expected: u64 = (0..3)
                    .map(|i| {
                        fundamental_invariant_character(&b3, i + 1, k)
                            .unwrap()
                            .mass()
                            .pow(s[i] as u32)
                    })
                    .product();
                assert_eq!(t.character().mass(), expected);
            }
        }
    }

    proptest! {
        #[test]
        fn ring_laws_on_random_characters(
            terms_a in proptest::collection::vec((0i64..3, 0i64..3, 0i64..3, 1u64..4), 0..4),
            terms_b in proptest::collection::vec((0i64..3, 0i64..3, 0i64..3, 1u64..4), 0..4),
            terms_c in proptest::collection::vec((0i64..3, 0i64..3, 0i64..3, 1u64..4), 0..4),
        ) {
            let b3 = arc(Family::B, 3);
            let build = |ts: &[(i64, i64, i64, u64)]| {
                Character::from_terms(
                    &b3,
                    ts.iter().map(|&(x, y, z, c)| (Weight::new(vec![x, y, z]), c)),
                )
                .unwrap()
            };
            let a = build(&terms_a);
            let b = build(&terms_b);
            let c = build(&terms_c);
            prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
            prop_assert_eq!(
                a.mul(&b).unwrap().mul(&c).unwrap(),
                a.mul(&b.mul(&c).unwrap()).unwrap()
            );
            let one = Character::one(&b3);
            prop_assert_eq!(a.mul(&one).unwrap(), a.clone());
            prop_assert_eq!(
                a.mul(&b.add(&c).unwrap()).unwrap(),
                a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
            );
        }

        #[test]
        fn type_a_and_c_always_collapse(
            s in proptest::collection::vec(0i64..3, 3),
            k in 0u64..3,
        ) {
            for family in [Family::A, Family::C] {
                let rs = arc(family, 3);
                let t = hom_rank(&rs, &s, k).unwrap();
                prop_assert_eq!(t.len(), 1);
                let top = Weight::new(s.clone());
                prop_assert_eq!(t.coeff(&top), 1);
            }
        }
    }
}
