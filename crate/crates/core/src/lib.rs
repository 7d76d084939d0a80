//! Young tableaux and the plactic monoid through the lens of
//! braidings: insertion algorithms, normal forms for tuples under
//! row/column braidings, reflection operators, and braided cohomology
//! with exact coefficients.
//!
//! # Layout
//!
//! - [`word`]: letters, words, rows, columns, and the stacking orders
//!   between them.
//! - [`tableau`]: Young tableaux (shortest row on top), Schensted
//!   insertion, the tableau product, and row/column readings.
//! - [`plactic`]: Knuth moves, plactic equivalence, centrality, and
//!   the longest non-decreasing subword.
//! - [`braiding`]: the row and column braidings, decorated tableaux,
//!   braid words, half-twist normal forms, and property suites that
//!   verify the braiding axioms on small domains.
//! - [`crystal`]: reflection operators on words, tableaux, and
//!   decorated tuples, with their compatibility suites.
//! - [`perm`]: permutations, reduced words, and shuffles.
//! - [`field`], [`matrix`]: exact linear algebra over `Q` and prime
//!   fields.
//! - [`cohomology`]: the critical complex of the column braiding,
//!   twisted differentials, Betti numbers, cup products, the quantum
//!   symmetrizer, and nonvanishing certificates.
//! - [`report`]: accumulation and serialization of check suites.
//!
//! # Example
//!
//! ```
//! use plactic::{tableau_of_word, Word};
//!
//! let word: Word = "4321312".parse().unwrap();
//! let t = tableau_of_word(&word);
//! assert_eq!(t.to_string(), "4/3/23/112");
//! assert_eq!(t.shape().0, vec![1, 1, 2, 3]);
//! ```

pub mod braiding;
pub mod cohomology;
pub mod crystal;
pub mod error;
pub mod field;
pub mod matrix;
pub mod perm;
pub mod plactic;
pub mod report;
pub mod tableau;
pub mod word;

pub use braiding::{
    apply_braid_word, delta_normalize, sigma_col, sigma_row, BraidKind, BraidWord,
    DecoratedTableau,
};
pub use cohomology::{
    betti_numbers, certify_witness, cup_cochain, cup_eval, BettiReport, Character, Cochain,
    CriticalComplex,
};
pub use crystal::{s_tableau, s_tuple, s_word};
pub use error::{Error, Result};
pub use field::{Field, PrimeField, Rationals};
pub use matrix::ExactMatrix;
pub use plactic::plactic_equal;
pub use report::{CheckResult, VerifyReport};
pub use tableau::{tableau_of_word, ReadingMode, Shape, Tableau};
pub use word::{Column, Letter, Row, Word};
