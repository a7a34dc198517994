//! Exact Schubert calculus on Grassmannians `G(k,n)`.
//!
//! The crate computes Littlewood-Richardson products in the Chow ring,
//! searches the Schubert basis for zero divisors, determines the effective
//! good divisibility and the maximal disjoint pairs of `G(k,n)`, and uses the
//! pair types to classify morphisms `G(l,n) -> G(k,n)`.
//!
//! ```
//! use schubert::{Class, GrassmannContext};
//!
//! let ctx = GrassmannContext::new(1, 3)?;
//! let line = Class::schubert(ctx, &ctx.partition(&[1])?)?;
//! assert_eq!(line.multiply(&line)?.to_string(), "σ(2) + σ(1,1)");
//! # Ok::<(), schubert::Error>(())
//! ```

pub mod chow;
mod coeff;
mod error;
pub mod grassmann;
pub mod mdpair;
pub mod morphism;

use num_bigint::BigInt;

pub use chow::{
    basis_product, classes_vanish_fast, lr_coefficient, lr_oracle, lr_tableaux, multiply,
    poincare_pair, product_vanishes_fast, schubert_class, CycleClass, LrTableau, SchurOracle,
};
pub use coeff::Coefficient;
pub use error::{Error, Result};
pub use grassmann::{render_diagram, GrassmannContext, Partition, SchubertSymbol};
pub use mdpair::{
    compute_egd, enumerate_zero_pairs, has_mdpair_of_type, md_pairs, search, verify_egd_sweep,
    verify_prop_comp, verify_thm_md, MdPair, PairType, ScanMode, SearchReport, VerificationReport,
    ZeroPair,
};
pub use morphism::{classify, classify_table, ClassificationOutcome, MorphismQuery, Verdict};

/// Classes with checked 64-bit coefficients.
pub type Class = CycleClass<i64>;
/// Classes with 128-bit coefficients.
pub type WideClass = CycleClass<i128>;
/// Classes with arbitrary-precision coefficients.
pub type BigClass = CycleClass<BigInt>;
