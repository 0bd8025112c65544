//! Enumeration and analysis of saturated strongly stable monomial ideals.
//!
//! The three enumerations produce every saturated strongly stable ideal of
//! `K[x_0, ..., x_n]` with a given Hilbert polynomial, every almost
//! lexsegment ideal with a given Hilbert polynomial, and every saturated
//! strongly stable ideal with a given Hilbert series. Each ideal can be
//! analysed through closed formulas (Hilbert polynomial and series, Betti
//! numbers, regularity), and the [`oracle`] module re-derives those by brute
//! force.

pub mod enumerate;
pub mod error;
pub mod hilbert;
pub mod ideal;
pub mod monomial;
pub mod oracle;
pub mod poly;

pub use enumerate::{
    canonical_expansions, enumerate_almost_lex, enumerate_by_hp, enumerate_by_hp_with,
    enumerate_by_series, is_almost_lex, max_betti_filter, EnumerateOptions, EnumerationNode,
    HpEnumeration,
};
pub use error::{Error, Result};
pub use hilbert::{
    betti_numbers, count_upper_bound, hilbert_polynomial_of, lex_ideal, numerator_to_polynomial,
    regularity, series_numerator_of, stability_threshold, HilbertPolynomial, SeriesNumerator,
};
pub use ideal::StronglyStableIdeal;
pub use monomial::{AmbientRing, Monomial};
pub use poly::RationalPoly;
