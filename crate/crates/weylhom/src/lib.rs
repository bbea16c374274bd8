//! Exact-arithmetic computations around Hom spaces between global Weyl
//! modules for generalized loop algebras `g (x) R_{k,l}`.
//!
//! The crate has three layers that check each other:
//!
//! - **Character combinatorics** ([`roots`], [`characters`]): classical root
//!   systems, the node set `I_0`, fundamental invariant characters and the
//!   Hom-rank coefficient tables `c_s(lambda)`.
//! - **Ring and bialgebra machinery** ([`polyring`]): the mixed
//!   Laurent/polynomial ring `R_{k,l}` with its comultiplication, monomial
//!   degree bookkeeping, symmetrizer elements and the binomial matrix
//!   determinant identity.
//! - **An independent module engine** ([`reps`], [`bimodule`]): exact
//!   Chevalley-generator matrices, evaluation modules at rational points,
//!   loop-invariant weight spaces, and the window-truncated bimodule
//!   `(V (x) A)_h` that rebuilds fundamental global Weyl modules from local
//!   ones.
//!
//! The [`suite`] module bundles the cross-validation battery; the `weylhom`
//! binary exposes every computation as a subcommand. Start with the
//! `examples/` directory for runnable tours of each capability.

pub mod bimodule;
pub mod characters;
pub mod cli;
pub mod linalg;
pub mod numeric;
pub mod polyring;
pub mod reps;
pub mod roots;
pub mod suite;

pub use characters::{fundamental_invariant_character, hom_rank, remark_red_check, Character, HomRankTable};
pub use numeric::{Int, Rat};
pub use polyring::{binom_matrix_det, comultiply, Monomial, Point, RingElement, ShiftAutomorphism, SymmetrizerContext, TensorElement};
pub use reps::{EvaluationModule, GModule, TensorConfiguration};
pub use roots::{Family, RootSystem, Weight};
