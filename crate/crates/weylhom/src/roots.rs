//! Classical root systems of types A, B, C, D: Cartan data, positive roots,
//! the highest root, the normalized bilinear form, the dominance order and
//! the node subset `I_0`.
//!
//! Node numbering follows Bourbaki throughout (this matters for `I_0`):
//! types A, B, C are the path `1 - 2 - ... - n`, with the short simple root
//! at node `n` for B and the long one at node `n` for C; type D forks at
//! node `n-2` into the tips `n-1` and `n`.
//!
//! Roots are stored in simple-root integer coordinates rather than Euclidean
//! embeddings, so all arithmetic stays exact; the bilinear form is realized
//! through the symmetrized Cartan matrix, rescaled so that the highest root
//! satisfies `(theta, theta) = 2`.

use std::collections::BTreeSet;
use std::fmt;

use num::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::numeric::{frac, rat, Rat};

/// Default cap on the rank; positive-root enumeration stays trivially fast
/// below it. Override with [`RootSystem::with_max_rank`].
pub const DEFAULT_MAX_RANK: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
}

impl Family {
    pub fn min_rank(self) -> usize {
        match self {
            Family::A => 1,
            Family::B | Family::C => 2,
            Family::D => 3,
        }
    }

    pub fn parse(s: &str) -> Option<Family> {
        match s.trim() {
            "A" | "a" => Some(Family::A),
            "B" | "b" => Some(Family::B),
            "C" | "c" => Some(Family::C),
            "D" | "d" => Some(Family::D),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::A => write!(f, "A"),
            Family::B => write!(f, "B"),
            Family::C => write!(f, "C"),
            Family::D => write!(f, "D"),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RootSystemError {
    #[error("rank {rank} is illegal for family {family} (minimum {min})")]
    IllegalRank {
        family: Family,
        rank: usize,
        min: usize,
    },
    #[error("rank {rank} exceeds the configured cap {max}")]
    RankCapExceeded { rank: usize, max: usize },
    #[error("weight has {got} coordinates, expected {expected}")]
    WeightLength { got: usize, expected: usize },
    #[error("node {node} is out of range 1..={rank}")]
    NodeOutOfRange { node: usize, rank: usize },
    #[error("weight is not in the nonnegative root lattice")]
    NotInPositiveRootLattice,
}

/// Integral weight in fundamental-weight coordinates `(c_1, ..., c_n)`,
/// meaning `sum c_i omega_i`. Ordering is lexicographic on the coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Weight {
    coords: Vec<i64>,
}

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight { coords }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    /// Value of the weight on the coroot `h_i` (node 1-based); this is just
    /// the i-th fundamental coordinate.
    pub fn eval_coroot(&self, node: usize) -> i64 {
        self.coords[node - 1]
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Root-system data, immutable after construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    family: Family,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    symmetrizers: Vec<Rat>,
    positive_roots: Vec<Vec<i64>>,
    theta: Vec<i64>,
    inv_cartan: Vec<Vec<Rat>>,
}

impl RootSystem {
    pub fn new(family: Family, rank: usize) -> Result<Self, RootSystemError> {
        Self::with_max_rank(family, rank, DEFAULT_MAX_RANK)
    }

    pub fn with_max_rank(
        family: Family,
        rank: usize,
        max_rank: usize,
    ) -> Result<Self, RootSystemError> {
        let min = family.min_rank();
        if rank < min {
            return Err(RootSystemError::IllegalRank { family, rank, min });
        }
        if rank > max_rank {
            return Err(RootSystemError::RankCapExceeded {
                rank,
                max: max_rank,
            });
        }
        let cartan = cartan_matrix(family, rank);
        let symmetrizers = symmetrizers(family, rank);
        for i in 0..rank {
            for j in 0..rank {
                debug_assert_eq!(
                    &symmetrizers[i] * rat(cartan[i][j]),
                    &symmetrizers[j] * rat(cartan[j][i]),
                    "symmetrized Cartan matrix must be symmetric"
                );
            }
        }
        let positive_roots = enumerate_positive_roots(&cartan);
        let theta = highest_root(&positive_roots);
        let inv_cartan = invert_cartan(&cartan);
        let rs = RootSystem {
            family,
            rank,
            cartan,
            symmetrizers,
            positive_roots,
            theta,
            inv_cartan,
        };
        debug_assert_eq!(
            rs.root_pairing(&rs.theta, &rs.theta),
            rat(2),
            "normalization must give (theta, theta) = 2"
        );
        Ok(rs)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Cartan matrix entry `alpha_j(h_i)` for 1-based nodes.
    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        self.cartan[i - 1][j - 1]
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    /// The highest root in simple-root coordinates.
    pub fn theta(&self) -> &[i64] {
        &self.theta
    }

    pub fn theta_weight(&self) -> Weight {
        self.root_to_weight(&self.theta)
    }

    /// Converts simple-root coordinates to fundamental-weight coordinates.
    pub fn root_to_weight(&self, root: &[i64]) -> Weight {
        let coords = (0..self.rank)
            .map(|i| (0..self.rank).map(|j| self.cartan[i][j] * root[j]).sum())
            .collect();
        Weight::new(coords)
    }

    pub fn zero_weight(&self) -> Weight {
        Weight::new(vec![0; self.rank])
    }

    /// `omega_node` for a 1-based node; node 0 is allowed and yields the zero
    /// weight (the standing convention `omega_0 = 0`).
    pub fn fundamental_weight(&self, node: usize) -> Result<Weight, RootSystemError> {
        if node > self.rank {
            return Err(RootSystemError::NodeOutOfRange {
                node,
                rank: self.rank,
            });
        }
        let mut coords = vec![0; self.rank];
        if node > 0 {
            coords[node - 1] = 1;
        }
        Ok(Weight::new(coords))
    }

    pub fn check_weight(&self, w: &Weight) -> Result<(), RootSystemError> {
        if w.rank() != self.rank {
            return Err(RootSystemError::WeightLength {
                got: w.rank(),
                expected: self.rank,
            });
        }
        Ok(())
    }

    /// Simple root `alpha_node` expressed in fundamental-weight coordinates
    /// (the node-th column of the Cartan matrix).
    pub fn simple_root_weight(&self, node: usize) -> Result<Weight, RootSystemError> {
        if node == 0 || node > self.rank {
            return Err(RootSystemError::NodeOutOfRange {
                node,
                rank: self.rank,
            });
        }
        let coords = (0..self.rank).map(|i| self.cartan[i][node - 1]).collect();
        Ok(Weight::new(coords))
    }

    /// Exact root-lattice coordinates of a weight: the solution `m` of
    /// `cartan * m = coords`.
    pub fn weight_to_root_coords(&self, w: &Weight) -> Result<Vec<Rat>, RootSystemError> {
        self.check_weight(w)?;
        Ok((0..self.rank)
            .map(|j| {
                (0..self.rank)
                    .map(|i| &self.inv_cartan[j][i] * rat(w.coords[i]))
                    .fold(Rat::zero(), |acc, x| acc + x)
            })
            .collect())
    }

    /// If the weight lies in `Q^+`, returns its nonnegative-integer root
    /// coordinates.
    pub fn positive_root_coords(&self, w: &Weight) -> Result<Vec<u64>, RootSystemError> {
        let coords = self.weight_to_root_coords(w)?;
        let mut out = Vec::with_capacity(coords.len());
        for c in coords {
            if !c.is_integer() || c < Rat::zero() {
                return Err(RootSystemError::NotInPositiveRootLattice);
            }
            out.push(u64::try_from(c.to_integer()).unwrap());
        }
        Ok(out)
    }

    /// `Ht`: the sum of the simple-root coordinates of an element of `Q^+`.
    pub fn height(&self, w: &Weight) -> Result<u64, RootSystemError> {
        Ok(self.positive_root_coords(w)?.iter().sum())
    }

    /// `mu <= lambda` in the dominance order: `lambda - mu` lies in `Q^+`.
    pub fn dominance_leq(&self, mu: &Weight, lambda: &Weight) -> Result<bool, RootSystemError> {
        self.check_weight(mu)?;
        self.check_weight(lambda)?;
        Ok(self.positive_root_coords(&lambda.sub(mu)).is_ok())
    }

    /// Bilinear form on root-lattice coordinates, normalized so that
    /// `(theta, theta) = 2`.
    pub fn root_pairing(&self, a: &[i64], b: &[i64]) -> Rat {
        let mut acc = Rat::zero();
        for i in 0..self.rank {
            for j in 0..self.rank {
                acc += &self.symmetrizers[i] * rat(self.cartan[i][j]) * rat(a[i]) * rat(b[j]);
            }
        }
        acc
    }

    /// Squared length `(alpha_i, alpha_i) = 2 d_i` of a simple root.
    pub fn simple_root_norm(&self, node: usize) -> Rat {
        rat(2) * &self.symmetrizers[node - 1]
    }

    /// The set `I_0`: nodes whose simple root occurs in the highest root with
    /// coefficient `2 / (alpha_i, alpha_i)`. Equals all of `I` for types A
    /// and C.
    pub fn i0(&self) -> BTreeSet<usize> {
        (1..=self.rank)
            .filter(|&i| {
                let required = rat(2) / self.simple_root_norm(i);
                rat(self.theta[i - 1]) == required
            })
            .collect()
    }
}

fn cartan_matrix(family: Family, rank: usize) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0i64; rank]; rank];
    for i in 0..rank {
        m[i][i] = 2;
    }
    let chain = |m: &mut Vec<Vec<i64>>, upto: usize| {
        for i in 0..upto {
            m[i][i + 1] = -1;
            m[i + 1][i] = -1;
        }
    };
    match family {
        Family::A => chain(&mut m, rank - 1),
        Family::B => {
            // alpha_rank short: its row carries the -2.
            chain(&mut m, rank - 1);
            m[rank - 1][rank - 2] = -2;
        }
        Family::C => {
            // alpha_rank long: the -2 sits in the neighbor's row.
            chain(&mut m, rank - 1);
            m[rank - 2][rank - 1] = -2;
        }
        Family::D => {
            chain(&mut m, rank - 2);
            m[rank - 3][rank - 1] = -1;
            m[rank - 1][rank - 3] = -1;
            m[rank - 2][rank - 1] = 0;
            m[rank - 1][rank - 2] = 0;
        }
    }
    m
}

fn symmetrizers(family: Family, rank: usize) -> Vec<Rat> {
    match family {
        Family::A | Family::D => vec![Rat::one(); rank],
        Family::B => {
            let mut d = vec![Rat::one(); rank];
            d[rank - 1] = frac(1, 2);
            d
        }
        Family::C => {
            let mut d = vec![frac(1, 2); rank];
            d[rank - 1] = Rat::one();
            d
        }
    }
}

/// Closure algorithm: grow the positive roots height by height, extending
/// each root along the alpha_i-string determined by the Cartan matrix.
fn enumerate_positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let rank = cartan.len();
    let mut known: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut layer: Vec<Vec<i64>> = Vec::new();
    for i in 0..rank {
        let mut alpha = vec![0i64; rank];
        alpha[i] = 1;
        known.insert(alpha.clone());
        layer.push(alpha);
    }
    let mut all: Vec<Vec<i64>> = layer.clone();
    while !layer.is_empty() {
        let mut next: Vec<Vec<i64>> = Vec::new();
        for beta in &layer {
            for i in 0..rank {
                let is_simple_i = beta
                    .iter()
                    .enumerate()
                    .all(|(j, &c)| if j == i { c == 1 } else { c == 0 });
                if is_simple_i {
                    // 2*alpha_i is never a root.
                    continue;
                }
                // p = how far the string extends downward from beta.
                let mut p = 0i64;
                loop {
                    let mut lower = beta.clone();
                    lower[i] -= p + 1;
                    if lower[i] < 0 || !known.contains(&lower) {
                        break;
                    }
                    p += 1;
                }
                let pairing: i64 = (0..rank).map(|j| cartan[i][j] * beta[j]).sum();
                let q = p - pairing;
                if q > 0 {
                    let mut upper = beta.clone();
                    upper[i] += 1;
                    if known.insert(upper.clone()) {
                        next.push(upper.clone());
                        all.push(upper);
                    }
                }
            }
        }
        layer = next;
    }
    all.sort();
    all
}

/// The unique componentwise-maximal positive root.
fn highest_root(positive_roots: &[Vec<i64>]) -> Vec<i64> {
    let theta: Vec<Vec<i64>> = positive_roots
        .iter()
        .filter(|beta| {
            positive_roots
                .iter()
                .all(|other| other.iter().zip(beta.iter()).all(|(o, b)| o <= b))
        })
        .cloned()
        .collect();
    assert_eq!(theta.len(), 1, "highest root must be unique");
    theta.into_iter().next().unwrap()
}

fn invert_cartan(cartan: &[Vec<i64>]) -> Vec<Vec<Rat>> {
    let n = cartan.len();
    let mut aug: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            let mut row: Vec<Rat> = cartan[i].iter().map(|&x| rat(x)).collect();
            row.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
            row
        })
        .collect();
    let pivots = crate::linalg::rref(&mut aug);
    assert_eq!(pivots.len(), n, "Cartan matrix must be invertible");
    aug.iter().map(|row| row[n..].to_vec()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(family: Family, rank: usize) -> RootSystem {
        RootSystem::new(family, rank).unwrap()
    }

    #[test]
    fn sl2_has_one_positive_root() {
        let a1 = rs(Family::A, 1);
        assert_eq!(a1.positive_roots().len(), 1);
        assert_eq!(a1.theta(), &[1]);
        assert_eq!(a1.theta_weight(), Weight::new(vec![2]));
    }

    #[test]
    fn a2_textbook_roots() {
        let a2 = rs(Family::A, 2);
        assert_eq!(a2.positive_roots().len(), 3);
        assert_eq!(a2.theta(), &[1, 1]);
    }

    #[test]
    fn b3_closure() {
        // Cross-check against |Phi^+| = n^2 for B_n.
        let b3 = rs(Family::B, 3);
        assert_eq!(b3.positive_roots().len(), 9);
        assert_eq!(b3.theta(), &[1, 2, 2]);
    }

    #[test]
    fn positive_root_counts_match_closed_forms() {
        for n in 1..=8 {
            assert_eq!(rs(Family::A, n).positive_roots().len(), n * (n + 1) / 2);
        }
        for n in 2..=8 {
            assert_eq!(rs(Family::B, n).positive_roots().len(), n * n);
            assert_eq!(rs(Family::C, n).positive_roots().len(), n * n);
        }
        for n in 3..=8 {
            assert_eq!(rs(Family::D, n).positive_roots().len(), n * (n - 1));
        }
    }

    #[test]
    fn theta_is_brute_force_maximum() {
        for (family, lo) in [(Family::A, 1), (Family::B, 2), (Family::C, 2), (Family::D, 3)] {
            for n in lo..=8 {
                let r = rs(family, n);
                let maxima: Vec<&Vec<i64>> = r
                    .positive_roots()
                    .iter()
                    .filter(|beta| {
                        r.positive_roots()
                            .iter()
                            .all(|o| o.iter().zip(beta.iter()).all(|(a, b)| a <= b))
                    })
                    .collect();
                assert_eq!(maxima.len(), 1, "{family}{n}");
                assert_eq!(maxima[0], r.theta(), "{family}{n}");
            }
        }
    }

    #[test]
    fn theta_norm_is_two() {
        for (family, lo) in [(Family::A, 1), (Family::B, 2), (Family::C, 2), (Family::D, 3)] {
            for n in lo..=8 {
                let r = rs(family, n);
                assert_eq!(r.root_pairing(r.theta(), r.theta()), rat(2), "{family}{n}");
            }
        }
    }

    #[test]
    fn i0_examples() {
        for n in 1..=8 {
            let all: BTreeSet<usize> = (1..=n).collect();
            assert_eq!(rs(Family::A, n).i0(), all);
        }
        for n in 2..=8 {
            let all: BTreeSet<usize> = (1..=n).collect();
            assert_eq!(rs(Family::C, n).i0(), all);
        }
        assert_eq!(rs(Family::B, 3).i0(), BTreeSet::from([1, 3]));
        assert_eq!(rs(Family::D, 6).i0(), BTreeSet::from([1, 5, 6]));
    }

    #[test]
    fn i0_simply_laced_is_theta_coefficient_one() {
        for (family, lo) in [(Family::A, 1), (Family::D, 3)] {
            for n in lo..=8 {
                let r = rs(family, n);
                let expected: BTreeSet<usize> = (1..=n).filter(|&i| r.theta()[i - 1] == 1).collect();
                assert_eq!(r.i0(), expected, "{family}{n}");
            }
        }
    }

    #[test]
    fn heights() {
        let a2 = rs(Family::A, 2);
        assert_eq!(a2.height(&a2.theta_weight()).unwrap(), 2);
        assert_eq!(a2.height(&a2.simple_root_weight(1).unwrap()).unwrap(), 1);
        let b3 = rs(Family::B, 3);
        assert_eq!(b3.height(&b3.theta_weight()).unwrap(), 5);
        // omega_1 in A_2 is not in Q^+.
        assert!(a2.height(&a2.fundamental_weight(1).unwrap()).is_err());
    }

    #[test]
    fn dominance_examples() {
        let a2 = rs(Family::A, 2);
        let zero = a2.zero_weight();
        let theta = a2.theta_weight();
        assert!(a2.dominance_leq(&zero, &theta).unwrap());
        let w1 = a2.fundamental_weight(1).unwrap();
        let w2 = a2.fundamental_weight(2).unwrap();
        assert!(!a2.dominance_leq(&w1, &w2).unwrap());
        assert!(!a2.dominance_leq(&w2, &w1).unwrap());
        assert!(a2.dominance_leq(&w1, &w1).unwrap());
    }

    #[test]
    fn dominance_is_partial_order_on_sample() {
        let b3 = rs(Family::B, 3);
        let mut sample = Vec::new();
        for a in -2..=2i64 {
            for b in -1..=1i64 {
                for c in -1..=1i64 {
                    sample.push(Weight::new(vec![a, b, c]));
                }
            }
        }
        for x in &sample {
            assert!(b3.dominance_leq(x, x).unwrap());
        }
        for x in &sample {
            for y in &sample {
                if b3.dominance_leq(x, y).unwrap() && b3.dominance_leq(y, x).unwrap() {
                    assert_eq!(x, y);
                }
                for z in &sample {
                    if b3.dominance_leq(x, y).unwrap() && b3.dominance_leq(y, z).unwrap() {
                        assert!(b3.dominance_leq(x, z).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn illegal_ranks_are_rejected() {
        assert!(RootSystem::new(Family::B, 1).is_err());
        assert!(RootSystem::new(Family::D, 2).is_err());
        assert!(RootSystem::new(Family::A, 9).is_err());
        assert!(RootSystem::with_max_rank(Family::A, 9, 10).is_ok());
    }
}
