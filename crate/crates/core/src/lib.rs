//! k-bonacci words over the infinite alphabet of nonnegative integers.
//!
//! * [`construct`]: k-bonacci numbers and the words `W_n^(k)`.
//! * [`ops`]: shifts, conjugates, fractional powers, factor search, index.
//! * [`squares`]: closed-form square factors, indices, critical exponent.
//! * [`oracle`]: naive ground truth and verification reports.
//! * [`tables`]: regenerated tables in several output formats.

pub mod config;
pub mod construct;
pub mod error;
pub mod ops;
pub mod oracle;
pub mod rational;
pub mod report;
pub mod squares;
pub mod tables;
pub mod word;

pub use construct::{
    apply_morphism, finite_alphabet_prefix, finite_word, finite_word_capped, infinite_prefix,
    infinite_prefix_capped, kbonacci_number, word_length, KBonacciWords, Strategy,
};
pub use error::{Error, Result};
pub use ops::{
    conjugate, find_occurrences, fractional_power, index_of, is_factor, project_mod, shift,
};
pub use rational::Rational;
pub use report::{Verdict, VerificationReport};
pub use squares::{
    classify_occurrence, critical_exponent, critical_factor, enumerate_squares, expand_descriptor,
    p_word, straddling_index, straddling_square_roots, u_word, v_word, Occurrence, OccurrenceClass,
    SquareDescriptor,
};
pub use word::{Digit, Word};
