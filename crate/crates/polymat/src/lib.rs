//! Exact invariants of monomial ideals generated in one degree.
//!
//! The toolkit computes, over the polynomial ring `k[x1..xn]` and entirely in
//! integer arithmetic:
//!
//! - minimal vertex covers of the generator supports, the cover number
//!   `h(I)`, unmixedness, and `dim S/I = n - h(I)` ([`covers`]);
//! - linear quotients in the descending reverse-lexicographic order, the
//!   quotient number `q(I)`, and `depth S/I = n - q(I) - 1` ([`quotients`]);
//! - the polymatroidal exchange property with explicit witnesses,
//!   its dual form with constructive exchange paths, and products of ideals
//!   ([`exchange`]);
//! - radicals, recognition of the principal / Veronese / squarefree Veronese
//!   families, and the classification of Cohen–Macaulay polymatroidal ideals,
//!   cross-checked on every call against the `h(I) == q(I) + 1` criterion
//!   ([`classify`]);
//! - exhaustive enumeration of small search spaces with an end-to-end
//!   verifier and a census of unmixed non-Cohen–Macaulay polymatroidal
//!   ideals ([`enumerate`]);
//! - a plain-text and a JSON interchange format ([`format`]).
//!
//! # Example
//!
//! ```
//! use polymat::{classify, Monomial, MonomialIdeal, Verdict};
//!
//! // The ideal of the triangle graph: (x1*x2, x1*x3, x2*x3).
//! let triangle = MonomialIdeal::new(
//!     3,
//!     vec![
//!         Monomial::new(vec![1, 1, 0]),
//!         Monomial::new(vec![1, 0, 1]),
//!         Monomial::new(vec![0, 1, 1]),
//!     ],
//! )?;
//! let c = classify(&triangle)?;
//! assert_eq!(c.verdict, Verdict::SquarefreeVeronese);
//! assert_eq!((c.h, c.q), (2, Some(1)));
//! assert_eq!(c.cohen_macaulay, Some(true));
//! # Ok::<(), polymat::Error>(())
//! ```

pub mod classify;
pub mod covers;
pub mod enumerate;
pub mod error;
pub mod exchange;
pub mod format;
pub mod ideal;
pub mod monomial;
pub mod quotients;

pub use classify::{
    check_radical_lemma, classify, is_principal, radical, squarefree_veronese_shape,
    veronese_shape, Classification, FamilyShape, Verdict,
};
pub use covers::{dim_quotient, is_vertex_cover, minimal_vertex_covers, CoverReport};
pub use enumerate::{
    census_unmixed, enumerate_ideals, monomial_pool, verify_classification, CensusRow,
    CensusSummary, EnumSpec, VerdictCounts, VerificationReport, CENSUS_TSV_HEADER, SUBSET_BUDGET,
};
pub use error::{Degeneracy, Error};
pub use exchange::{
    distance, dual_exchange_check, exchange_path, is_matroidal, is_polymatroidal,
    polymatroidal_check, product, ExchangeCheck, ExchangePath, ExchangeWitness,
};
pub use format::{
    parse_ideal, parse_ideal_json, parse_ideal_text, parse_monomial, render_ideal_json,
    render_ideal_text,
};
pub use ideal::{minimal_generators, MonomialIdeal};
pub use monomial::{revlex_cmp, revlex_less, Monomial, EXP_CAP};
pub use quotients::{
    colon_by_monomial, depth_quotient, is_cohen_macaulay, linear_quotients_revlex,
    q_values_all_linear_orderings, ColonStep, QuotientReport,
};
