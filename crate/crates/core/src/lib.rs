//! Exact combinatorics of the four infinite-rank classical root systems.
//!
//! The crate implements, over the infinite alphabets of types A, B, C and D:
//!
//! * Kashiwara operators on words and rank stabilization ([`crystal`]),
//! * Kashiwara-Nakashima tableaux, columns and the crystal membership
//!   oracles ([`tableau`]),
//! * the four plactic monoids as length-preserving rewriting systems
//!   ([`plactic`]),
//! * infinite-rank Robinson-Schensted correspondences on biwords and the
//!   commuting pair of crystal structures they carry ([`mod@rs`]),
//! * tensor decompositions, Littlewood-Richardson coefficients and Schur
//!   polynomials ([`schur`]),
//! * the quotient monomial algebra behind the Cauchy identities ([`cauchy`]),
//! * straightening of q-wedge monomials onto the column basis with exact
//!   Laurent-polynomial coefficients ([`qwedge`]).
//!
//! Everything is exact and deterministic; all enumerative routines take
//! explicit budgets and fail loudly rather than truncate silently.
//!
//! ```
//! use plactica::{LieType, Word, component_shape, Partition};
//!
//! let w = Word::parse("1 -1 1 -1", LieType::C).unwrap();
//! assert_eq!(component_shape(&w).unwrap(), Partition::from_slice(&[2, 2]));
//! ```

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
pub struct ReadmeDoctests;

/// The narrative guide. Each chapter is included verbatim from `book/src`,
/// so every code block in the rendered book also compiles and runs as a
/// doc-test of this crate; the two cannot drift apart.
pub mod guide {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub mod introduction {}
    #[doc = include_str!("../../../book/src/alphabets-and-words.md")]
    pub mod alphabets_and_words {}
    #[doc = include_str!("../../../book/src/crystal-operators.md")]
    pub mod crystal_operators {}
    #[doc = include_str!("../../../book/src/tableaux.md")]
    pub mod tableaux {}
    #[doc = include_str!("../../../book/src/plactic-monoids.md")]
    pub mod plactic_monoids {}
    #[doc = include_str!("../../../book/src/robinson-schensted.md")]
    pub mod robinson_schensted {}
    #[doc = include_str!("../../../book/src/schur-and-littlewood-richardson.md")]
    pub mod schur_and_littlewood_richardson {}
    #[doc = include_str!("../../../book/src/cauchy-kernels.md")]
    pub mod cauchy_kernels {}
    #[doc = include_str!("../../../book/src/q-wedges.md")]
    pub mod q_wedges {}
    #[doc = include_str!("../../../book/src/cli.md")]
    pub mod cli {}
}

pub mod cauchy;
pub mod crystal;
pub mod error;
pub mod json;
pub mod letters;
pub mod partition;
pub mod plactic;
pub mod poly;
pub mod qwedge;
pub mod rs;
pub mod schur;
pub mod tableau;
pub mod verify;

pub use crate::cauchy::{algebra_equal, x_of_word, ClosureCaps, XMonomial, YMonomial};
pub use crate::crystal::{
    component_shape, enumerate_component, local_string, stabilize, stabilize_at_rank, Stabilized,
};
pub use crate::error::{Error, Result};
pub use crate::letters::{compare_letters, Color, Letter, LieType, Weight, Word};
pub use crate::partition::{count_syt, strips, Partition, StripKind};
pub use crate::plactic::{congruent, plactic_class, rewrites, RewriteStep};
pub use crate::poly::MultiPoly;
pub use crate::qwedge::{straighten, wedge_equal, LaurentPoly, WedgeExpr};
pub use crate::rs::{
    bicrystal_e_y, bicrystal_f_y, hw_for_recording, p_symbol, q_symbol, rs, rs_hat, rs_hat_inverse,
    rs_inverse, y_e_op, y_f_op, Biword, ColumnSeq, RecordingTableau,
};
pub use crate::schur::{lr_oracle, plactic_product_multiplicity, schur_poly, tensor_decompose};
pub use crate::tableau::{highest_tableau, is_row, Column, Tableau};
