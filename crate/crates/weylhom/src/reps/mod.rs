//! Exact finite-dimensional module engine: Chevalley-generator matrices with
//! constructor-verified bracket relations, weight decompositions, evaluation
//! modules at rational points and their tensor products. This is the
//! independent oracle validating the character-level Hom-rank predictions.

mod invariants;

pub use invariants::{FactorizationReport, InvariantSpace, WeightCheck};

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use num::{One, Zero};
use thiserror::Error;

use crate::linalg::SparseMat;
use crate::numeric::{rat, Rat};
use crate::polyring::{Point, RingError};
use crate::roots::{Family, RootSystem, RootSystemError, Weight};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RepError {
    #[error(transparent)]
    RootSystem(#[from] RootSystemError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("modules live over different root systems")]
    MixedRootSystems,
    #[error("generator relations violated: {0}")]
    RelationsViolated(String),
    #[error("configuration has no factors")]
    EmptyConfiguration,
    #[error("factors carry points of different rings")]
    MixedAmbient,
    #[error("points generate {0} distinct maximal ideals, not a power of one: {1}")]
    MixedPoints(usize, String),
    #[error("explicit fundamental modules are only built for family A (families B, C, D are covered at character level)")]
    UnsupportedFamily { family: Family },
    #[error("exterior power index {i} is out of range 1..={max}")]
    ExteriorIndex { i: usize, max: usize },
    #[error("config parse error in `{production}`: {message}")]
    ConfigParse {
        production: &'static str,
        message: String,
    },
}

/// Finite-dimensional weight module given by exact matrices for the Chevalley
/// generators. The defining bracket identities
/// `[h_i, e_j] = a_ij e_j`, `[h_i, f_j] = -a_ij f_j`, `[e_i, f_j] = d_ij h_i`
/// are checked at construction, and each `h_i` must be diagonal with integer
/// entries matching the recorded basis weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GModule {
    rs: Arc<RootSystem>,
    dim: usize,
    e_mats: Vec<SparseMat>,
    f_mats: Vec<SparseMat>,
    h_mats: Vec<SparseMat>,
    weights: Vec<Weight>,
}

impl GModule {
    pub fn new(
        rs: Arc<RootSystem>,
        e_mats: Vec<SparseMat>,
        f_mats: Vec<SparseMat>,
        h_mats: Vec<SparseMat>,
        weights: Vec<Weight>,
    ) -> Result<Self, RepError> {
        let dim = weights.len();
        let rank = rs.rank();
        if e_mats.len() != rank || f_mats.len() != rank || h_mats.len() != rank {
            return Err(RepError::RelationsViolated(
                "one generator matrix per node is required".into(),
            ));
        }
        for m in e_mats.iter().chain(&f_mats).chain(&h_mats) {
            if m.nrows() != dim || m.ncols() != dim {
                return Err(RepError::RelationsViolated(
                    "generator matrices must be square of the module dimension".into(),
                ));
            }
        }
        let module = GModule {
            rs,
            dim,
            e_mats,
            f_mats,
            h_mats,
            weights,
        };
        module.verify_relations()?;
        Ok(module)
    }

    fn verify_relations(&self) -> Result<(), RepError> {
        let rank = self.rs.rank();
        for i in 1..=rank {
            let h = &self.h_mats[i - 1];
            // h_i diagonal with integer entries matching the basis weights.
            for (r, c, v) in h.iter() {
                if r != c {
                    return Err(RepError::RelationsViolated(format!(
                        "h_{i} is not diagonal at ({r}, {c})"
                    )));
                }
                if v != &rat(self.weights[r].eval_coroot(i)) {
                    return Err(RepError::RelationsViolated(format!(
                        "h_{i} eigenvalue at basis vector {r} disagrees with its weight"
                    )));
                }
            }
            for (b, w) in self.weights.iter().enumerate() {
                if h.get(b, b) != rat(w.eval_coroot(i)) {
                    return Err(RepError::RelationsViolated(format!(
                        "h_{i} misses the weight of basis vector {b}"
                    )));
                }
            }
        }
        for i in 1..=rank {
            for j in 1..=rank {
                let a_ij = rat(self.rs.cartan(i, j));
                let he = self.h_mats[i - 1].commutator(&self.e_mats[j - 1]);
                if he != self.e_mats[j - 1].scale(&a_ij) {
                    return Err(RepError::RelationsViolated(format!(
                        "[h_{i}, e_{j}] != a_{i}{j} e_{j}"
                    )));
                }
                let hf = self.h_mats[i - 1].commutator(&self.f_mats[j - 1]);
                if hf != self.f_mats[j - 1].scale(&-a_ij) {
                    return Err(RepError::RelationsViolated(format!(
                        "[h_{i}, f_{j}] != -a_{i}{j} f_{j}"
                    )));
                }
                let ef = self.e_mats[i - 1].commutator(&self.f_mats[j - 1]);
                let expected = if i == j {
                    self.h_mats[i - 1].clone()
                } else {
                    SparseMat::zero(self.dim, self.dim)
                };
                if ef != expected {
                    return Err(RepError::RelationsViolated(format!(
                        "[e_{i}, f_{j}] != delta h_{i}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn e(&self, node: usize) -> &SparseMat {
        &self.e_mats[node - 1]
    }

    pub fn f(&self, node: usize) -> &SparseMat {
        &self.f_mats[node - 1]
    }

    pub fn h(&self, node: usize) -> &SparseMat {
        &self.h_mats[node - 1]
    }

    pub fn weight_of_basis(&self, index: usize) -> &Weight {
        &self.weights[index]
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    /// Multiplicity of a weight.
    pub fn weight_multiplicity(&self, mu: &Weight) -> usize {
        self.weights.iter().filter(|w| *w == mu).count()
    }

    /// Basis indices annihilated by every raising generator.
    pub fn highest_weight_indices(&self) -> Vec<usize> {
        (0..self.dim)
            .filter(|&b| {
                let unit = unit_vector(self.dim, b);
                self.e_mats
                    .iter()
                    .all(|e| e.apply(&unit).iter().all(|x| x.is_zero()))
            })
            .collect()
    }

    /// Kronecker tensor product; generator relations are re-verified and
    /// basis weights add. Basis index `(a, b)` maps to `a * other.dim + b`.
    pub fn tensor(&self, other: &GModule) -> Result<GModule, RepError> {
        if self.rs != other.rs {
            return Err(RepError::MixedRootSystems);
        }
        let rank = self.rs.rank();
        let id_a = SparseMat::identity(self.dim);
        let id_b = SparseMat::identity(other.dim);
        let combine = |a: &SparseMat, b: &SparseMat| a.kron(&id_b).add(&id_a.kron(b));
        let e_mats: Vec<SparseMat> = (0..rank)
            .map(|i| combine(&self.e_mats[i], &other.e_mats[i]))
            .collect();
        let f_mats: Vec<SparseMat> = (0..rank)
            .map(|i| combine(&self.f_mats[i], &other.f_mats[i]))
            .collect();
        let h_mats: Vec<SparseMat> = (0..rank)
            .map(|i| combine(&self.h_mats[i], &other.h_mats[i]))
            .collect();
        let mut weights = Vec::with_capacity(self.dim * other.dim);
        for wa in &self.weights {
            for wb in &other.weights {
                weights.push(wa.add(wb));
            }
        }
        GModule::new(Arc::clone(&self.rs), e_mats, f_mats, h_mats, weights)
    }

    /// The set of distinct weights of the module.
    pub fn weight_support(&self) -> BTreeSet<Weight> {
        self.weights.iter().cloned().collect()
    }
}

pub(crate) fn unit_vector(dim: usize, index: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); dim];
    v[index] = Rat::one();
    v
}

/// The trivial one-dimensional module.
pub fn trivial_module(rs: &Arc<RootSystem>) -> GModule {
    let rank = rs.rank();
    GModule::new(
        Arc::clone(rs),
        vec![SparseMat::zero(1, 1); rank],
        vec![SparseMat::zero(1, 1); rank],
        vec![SparseMat::zero(1, 1); rank],
        vec![rs.zero_weight()],
    )
    .expect("trivial module satisfies the relations")
}

/// The (m+1)-dimensional irreducible sl_2-module with
/// `h v_j = (m - 2j) v_j`, `f v_j = (j+1) v_{j+1}`, `e v_j = (m-j+1) v_{j-1}`.
pub fn build_sl2_module(m: u64) -> GModule {
    let rs = Arc::new(RootSystem::new(Family::A, 1).expect("A_1 is legal"));
    let dim = (m + 1) as usize;
    let mut e = SparseMat::zero(dim, dim);
    let mut f = SparseMat::zero(dim, dim);
    let mut h = SparseMat::zero(dim, dim);
    let mut weights = Vec::with_capacity(dim);
    for j in 0..dim {
        let eig = m as i64 - 2 * j as i64;
        h.set(j, j, rat(eig));
        weights.push(Weight::new(vec![eig]));
        if j + 1 < dim {
            f.set(j + 1, j, rat(j as i64 + 1));
            e.set(j, j + 1, rat(m as i64 - j as i64));
        }
    }
    GModule::new(rs, vec![e], vec![f], vec![h], weights)
        .expect("sl2 module satisfies the relations")
}

/// The i-th exterior power of the natural n-dimensional module of sl_n,
/// realizing `V(omega_i)` for type `A_{n-1}`: dimension `binom(n, i)`,
/// highest weight `omega_i`.
pub fn build_sln_exterior(n: usize, i: usize) -> Result<GModule, RepError> {
    if i == 0 || i >= n {
        return Err(RepError::ExteriorIndex { i, max: n - 1 });
    }
    let rs = Arc::new(RootSystem::new(Family::A, n - 1)?);
    // Wedge basis: sorted i-subsets of {1, ..., n} in lexicographic order.
    let mut subsets: Vec<Vec<usize>> = Vec::new();
    let mut current: Vec<usize> = (1..=i).collect();
    loop {
        subsets.push(current.clone());
        // Next i-subset in lex order.
        let mut pos = i;
        while pos > 0 && current[pos - 1] == n - (i - pos) {
            pos -= 1;
        }
        if pos == 0 {
            break;
        }
        current[pos - 1] += 1;
        for q in pos..i {
            current[q] = current[q - 1] + 1;
        }
    }
    let index_of = |s: &Vec<usize>| subsets.binary_search(s).expect("subset basis is sorted");
    let dim = subsets.len();
    let rank = n - 1;
    let mut e_mats = vec![SparseMat::zero(dim, dim); rank];
    let mut f_mats = vec![SparseMat::zero(dim, dim); rank];
    let mut h_mats = vec![SparseMat::zero(dim, dim); rank];
    let mut weights = Vec::with_capacity(dim);
    for (b, s) in subsets.iter().enumerate() {
        let contains = |x: usize| s.binary_search(&x).is_ok();
        let coords: Vec<i64> = (1..=rank)
            .map(|j| contains(j) as i64 - contains(j + 1) as i64)
            .collect();
        weights.push(Weight::new(coords.clone()));
        for j in 1..=rank {
            h_mats[j - 1].set(b, b, rat(coords[j - 1]));
            // e_j replaces j+1 by j; the entries are adjacent, so the wedge
            // stays sorted and no sign appears.
            if contains(j + 1) && !contains(j) {
                let mut target = s.clone();
                let pos = target.binary_search(&(j + 1)).unwrap();
                target[pos] = j;
                e_mats[j - 1].set(index_of(&target), b, Rat::one());
            }
            // f_j replaces j by j+1.
            if contains(j) && !contains(j + 1) {
                let mut target = s.clone();
                let pos = target.binary_search(&j).unwrap();
                target[pos] = j + 1;
                f_mats[j - 1].set(index_of(&target), b, Rat::one());
            }
        }
    }
    GModule::new(rs, e_mats, f_mats, h_mats, weights)
}

/// The fundamental module `V(omega_node)` used as an evaluation factor.
/// Only family A has an explicit model here.
pub fn fundamental_module(rs: &Arc<RootSystem>, node: usize) -> Result<GModule, RepError> {
    if node == 0 || node > rs.rank() {
        return Err(RepError::RootSystem(RootSystemError::NodeOutOfRange {
            node,
            rank: rs.rank(),
        }));
    }
    match rs.family() {
        Family::A => build_sln_exterior(rs.rank() + 1, node),
        family => Err(RepError::UnsupportedFamily { family }),
    }
}

/// A finite-dimensional module made into a `g (x) R_{k,l}`-module by letting
/// `x (x) a` act as `a(point) x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvaluationModule {
    module: GModule,
    point: Point,
}

impl EvaluationModule {
    pub fn new(module: GModule, point: Point) -> Self {
        EvaluationModule { module, point }
    }

    pub fn module(&self) -> &GModule {
        &self.module
    }

    pub fn point(&self) -> &Point {
        &self.point
    }
}

/// An ordered tensor product of evaluation modules over a common ring
/// `R_{k,l}`.
#[derive(Clone, Debug)]
pub struct TensorConfiguration {
    rs: Arc<RootSystem>,
    k: usize,
    l: usize,
    factors: Vec<EvaluationModule>,
}

impl TensorConfiguration {
    pub fn new(factors: Vec<EvaluationModule>) -> Result<Self, RepError> {
        let Some(first) = factors.first() else {
            return Err(RepError::EmptyConfiguration);
        };
        let rs = Arc::clone(first.module().root_system());
        let (k, l) = (first.point().k(), first.point().l());
        for f in &factors {
            if f.module().root_system() != &rs {
                return Err(RepError::MixedRootSystems);
            }
            if (f.point().k(), f.point().l()) != (k, l) {
                return Err(RepError::MixedAmbient);
            }
        }
        Ok(TensorConfiguration { rs, k, l, factors })
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    /// Ambient ring parameters `(k, l)`.
    pub fn ambient(&self) -> (usize, usize) {
        (self.k, self.l)
    }

    pub fn factors(&self) -> &[EvaluationModule] {
        &self.factors
    }

    pub fn num_factors(&self) -> usize {
        self.factors.len()
    }

    pub fn points(&self) -> Vec<&Point> {
        self.factors.iter().map(|f| f.point()).collect()
    }

    /// The `D_lambda` condition: all evaluation points pairwise distinct.
    pub fn distinct_points(&self) -> bool {
        let points = self.points();
        points
            .iter()
            .enumerate()
            .all(|(i, p)| points[i + 1..].iter().all(|q| q != p))
    }

    pub fn total_dim(&self) -> usize {
        self.factors.iter().map(|f| f.module().dim()).product()
    }

    /// Weight of a tensor basis vector (mixed-radix index, first factor most
    /// significant, matching the Kronecker convention).
    pub fn weight_of_basis(&self, index: usize) -> Weight {
        let mut idx = index;
        let mut w = self.rs.zero_weight();
        for f in self.factors.iter().rev() {
            let d = f.module().dim();
            w = w.add(f.module().weight_of_basis(idx % d));
            idx /= d;
        }
        w
    }

    /// The full tensor product as a plain g-module (relations re-verified).
    pub fn tensor_module(&self) -> Result<GModule, RepError> {
        let mut acc = self.factors[0].module().clone();
        for f in &self.factors[1..] {
            acc = acc.tensor(f.module())?;
        }
        Ok(acc)
    }

    /// `mat` acting in the given factor slot, extended by the identity
    /// elsewhere.
    pub fn slot_operator(&self, slot: usize, mat: &SparseMat) -> SparseMat {
        let mut acc = SparseMat::identity(1);
        for (j, f) in self.factors.iter().enumerate() {
            let next = if j == slot {
                mat.clone()
            } else {
                SparseMat::identity(f.module().dim())
            };
            acc = acc.kron(&next);
        }
        acc
    }

    /// The index of the tensor of highest-weight vectors, when every factor
    /// has a unique raising-annihilated basis vector.
    pub fn top_vector_index(&self) -> Result<usize, RepError> {
        let mut index = 0;
        for f in &self.factors {
            let hw = f.module().highest_weight_indices();
            if hw.len() != 1 {
                return Err(RepError::RelationsViolated(
                    "factor has no unique highest-weight vector".into(),
                ));
            }
            index = index * f.module().dim() + hw[0];
        }
        Ok(index)
    }

    /// The configuration's node multiset as an `s`-vector.
    pub fn s_vector(&self) -> Result<Vec<i64>, RepError> {
        let mut s = vec![0i64; self.rs.rank()];
        for f in &self.factors {
            let hw = f.module().highest_weight_indices();
            if hw.len() != 1 {
                return Err(RepError::RelationsViolated(
                    "factor has no unique highest-weight vector".into(),
                ));
            }
            let top = f.module().weight_of_basis(hw[0]).clone();
            let coords = top.coords();
            let node = coords.iter().position(|&c| c == 1);
            match node {
                Some(n)
                    if coords.iter().enumerate().all(|(j, &c)| {
                        if j == n {
                            c == 1
                        } else {
                            c == 0
                        }
                    }) =>
                {
                    s[n] += 1;
                }
                _ => {
                    return Err(RepError::RelationsViolated(
                        "factor is not a fundamental module".into(),
                    ));
                }
            }
        }
        Ok(s)
    }
}

impl fmt::Display for TensorConfiguration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}; ", self.rs.family(), self.rs.rank())?;
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|fac| {
                let hw = fac.module().highest_weight_indices();
                let node = hw
                    .first()
                    .map(|&b| {
                        fac.module()
                            .weight_of_basis(b)
                            .coords()
                            .iter()
                            .position(|&c| c == 1)
                            .map(|p| p + 1)
                            .unwrap_or(0)
                    })
                    .unwrap_or(0);
                format!("{}@{}", node, fac.point())
            })
            .collect();
        write!(f, "{}", parts.join(", "))
    }
}

/// Parses the configuration grammar
///
/// ```text
/// config := family ':' rank ';' factor (',' factor)*
/// factor := node '@' point
/// point  := rational | '[' rational (' ' rational)* ']'
/// ```
///
/// against the ambient ring `R_{k,l}`; a bare rational is accepted when
/// `k + l == 1`. Points fill the t-coordinates first.
pub fn parse_configuration(
    input: &str,
    k: usize,
    l: usize,
) -> Result<TensorConfiguration, RepError> {
    let parse_err = |production: &'static str, message: String| RepError::ConfigParse {
        production,
        message,
    };
    let (head, tail) = input
        .split_once(';')
        .ok_or_else(|| parse_err("config", "expected `family:rank; factors`".into()))?;
    let (family_str, rank_str) = head
        .split_once(':')
        .ok_or_else(|| parse_err("config", "expected `family:rank`".into()))?;
    let family = Family::parse(family_str)
        .ok_or_else(|| parse_err("family", format!("unknown family `{}`", family_str.trim())))?;
    let rank: usize = rank_str
        .trim()
        .parse()
        .map_err(|_| parse_err("rank", format!("invalid rank `{}`", rank_str.trim())))?;
    let max_rank = crate::cli::max_rank_from_env();
    let rs = Arc::new(RootSystem::with_max_rank(family, rank, max_rank)?);
    let mut factors = Vec::new();
    for part in tail.split(',') {
        let part = part.trim();
        if part.is_empty() {
            return Err(parse_err("factor", "empty factor".into()));
        }
        let (node_str, point_str) = part
            .split_once('@')
            .ok_or_else(|| parse_err("factor", format!("expected `node@point` in `{part}`")))?;
        let node: usize = node_str
            .trim()
            .parse()
            .map_err(|_| parse_err("node", format!("invalid node `{}`", node_str.trim())))?;
        let coords = parse_point(point_str.trim(), k, l)?;
        let module = fundamental_module(&rs, node)?;
        factors.push(EvaluationModule::new(module, coords));
    }
    TensorConfiguration::new(factors)
}

fn parse_point(s: &str, k: usize, l: usize) -> Result<Point, RepError> {
    let parse_err = |production: &'static str, message: String| RepError::ConfigParse {
        production,
        message,
    };
    let coords: Vec<Rat> = if let Some(inner) = s.strip_prefix('[') {
        let inner = inner
            .strip_suffix(']')
            .ok_or_else(|| parse_err("point", "missing `]`".into()))?;
        inner
            .split_whitespace()
            .map(|c| {
                crate::numeric::parse_rat(c)
                    .ok_or_else(|| parse_err("point", format!("invalid rational `{c}`")))
            })
            .collect::<Result<_, _>>()?
    } else {
        vec![crate::numeric::parse_rat(s)
            .ok_or_else(|| parse_err("point", format!("invalid rational `{s}`")))?]
    };
    if coords.len() != k + l {
        return Err(parse_err(
            "point",
            format!("point has {} coordinates, ambient R_{{{k},{l}}} needs {}", coords.len(), k + l),
        ));
    }
    let (t, u) = coords.split_at(k);
    Ok(Point::new(t.to_vec(), u.to_vec())?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::frac;

    #[test]
    fn sl2_modules() {
        let v0 = build_sl2_module(0);
        assert_eq!(v0.dim(), 1);
        assert!(v0.e(1).is_zero() && v0.f(1).is_zero() && v0.h(1).is_zero());

        let v1 = build_sl2_module(1);
        assert_eq!(v1.dim(), 2);
        assert_eq!(v1.weights()[0], Weight::new(vec![1]));

        // m=2: weights (2, 0, -2) and e f v_0 = 2 v_0.
        let v2 = build_sl2_module(2);
        let weights: Vec<i64> = v2.weights().iter().map(|w| w.coords()[0]).collect();
        assert_eq!(weights, vec![2, 0, -2]);
        let ef = v2.e(1).mul(v2.f(1));
        assert_eq!(ef.get(0, 0), rat(2));
    }

    #[test]
    fn exterior_powers() {
        let natural = build_sln_exterior(2, 1).unwrap();
        assert_eq!(natural.dim(), 2);
        // Matches the m=1 sl_2 module on the nose.
        let v1 = build_sl2_module(1);
        assert_eq!(natural.e(1), v1.e(1));
        assert_eq!(natural.f(1), v1.f(1));

        let w2 = build_sln_exterior(3, 2).unwrap();
        assert_eq!(w2.dim(), 3);
        assert_eq!(w2.highest_weight_indices(), vec![0]);
        assert_eq!(w2.weight_of_basis(0), &Weight::new(vec![0, 1]));

        assert_eq!(build_sln_exterior(4, 2).unwrap().dim(), 6);
        assert!(build_sln_exterior(3, 3).is_err());
    }

    #[test]
    fn tensor_products() {
        let v1 = build_sl2_module(1);
        let t = v1.tensor(&v1).unwrap();
        assert_eq!(t.dim(), 4);
        let mut weights: Vec<i64> = t.weights().iter().map(|w| w.coords()[0]).collect();
        weights.sort_unstable();
        assert_eq!(weights, vec![-2, 0, 0, 2]);

        let rs = v1.root_system().clone();
        let trivial = trivial_module(&rs);
        let tt = v1.tensor(&trivial).unwrap();
        assert_eq!(tt.e(1), v1.e(1));
        assert_eq!(tt.f(1), v1.f(1));

        let a2_1 = build_sln_exterior(3, 1).unwrap();
        let a2_2 = build_sln_exterior(3, 2).unwrap();
        assert_eq!(a2_1.tensor(&a2_2).unwrap().dim(), 9);
    }

    #[test]
    fn tensor_weight_multiplicities_convolve() {
        let a = build_sln_exterior(3, 1).unwrap();
        let b = build_sln_exterior(3, 2).unwrap();
        let t = a.tensor(&b).unwrap();
        for mu in t.weight_support() {
            let direct = t.weight_multiplicity(&mu);
            let convolved: usize = a
                .weights()
                .iter()
                .map(|wa| b.weight_multiplicity(&mu.sub(wa)))
                .sum();
            assert_eq!(direct, convolved);
        }
    }

    #[test]
    fn mixed_root_systems_rejected() {
        let v1 = build_sl2_module(1);
        let a2 = build_sln_exterior(3, 1).unwrap();
        assert_eq!(v1.tensor(&a2), Err(RepError::MixedRootSystems));
    }

    #[test]
    fn bad_relations_rejected() {
        let v1 = build_sl2_module(1);
        // Sabotage e: swap in a matrix that breaks [e, f] = h.
        let bad = GModule::new(
            v1.root_system().clone(),
            vec![SparseMat::zero(2, 2)],
            vec![v1.f(1).clone()],
            vec![v1.h(1).clone()],
            v1.weights().to_vec(),
        );
        assert!(matches!(bad, Err(RepError::RelationsViolated(_))));
    }

    #[test]
    fn configuration_basics() {
        let v1 = build_sl2_module(1);
        let p0 = Point::new(vec![], vec![rat(0)]).unwrap();
        let p1 = Point::new(vec![], vec![rat(1)]).unwrap();
        let cfg = TensorConfiguration::new(vec![
            EvaluationModule::new(v1.clone(), p0.clone()),
            EvaluationModule::new(v1.clone(), p1),
        ])
        .unwrap();
        assert!(cfg.distinct_points());
        assert_eq!(cfg.total_dim(), 4);
        assert_eq!(cfg.s_vector().unwrap(), vec![2]);
        assert_eq!(cfg.top_vector_index().unwrap(), 0);

        let same = TensorConfiguration::new(vec![
            EvaluationModule::new(v1.clone(), p0.clone()),
            EvaluationModule::new(v1, p0),
        ])
        .unwrap();
        assert!(!same.distinct_points());
    }

    #[test]
    fn config_parsing() {
        let cfg = parse_configuration("A:2; 1@0, 2@1", 0, 1).unwrap();
        assert_eq!(cfg.root_system().rank(), 2);
        assert_eq!(cfg.num_factors(), 2);
        assert_eq!(cfg.ambient(), (0, 1));
        assert_eq!(cfg.factors()[0].module().dim(), 3);

        let laurent = parse_configuration("A:1; 1@2, 1@1/2", 1, 0).unwrap();
        assert_eq!(laurent.points()[1].t_coords()[0], frac(1, 2));

        // Zero t-coordinate is rejected for the Laurent ring.
        assert!(parse_configuration("A:1; 1@0", 1, 0).is_err());
        assert!(parse_configuration("E:6; 1@0", 0, 1).is_err());
        assert!(parse_configuration("A:2; 1@[1 0]", 1, 1).is_ok());
        assert!(parse_configuration("A:2; 1@[1]", 1, 1).is_err());
        assert!(parse_configuration("B:3; 2@0", 0, 1).is_err());
    }
}
