//! Linear-programming decoding of low-density parity-check codes.
//!
//! The crate is organised around the *relaxed codeword polytope* of a binary
//! linear code: the intersection of the local codeword polytopes of all
//! parity checks, described by one inequality per odd-weight ("forbidden")
//! local pattern plus the unit-box constraints.  Integral points of this
//! polytope are exactly the codewords; its fractional vertices are the
//! pseudocodewords responsible for LP decoding failures.
//!
//! What lives where:
//!
//! * [`codes`] — sparse parity-check codes, alist I/O, random regular and
//!   quasi-cyclic constructions, GF(2) linear algebra, expansion certificates.
//! * [`polytope`] — the relaxed polytope: inequality generation, active sets,
//!   fractional profiles, equality restrictions (facets and pinned bits),
//!   and exact vertex enumeration for small codes.
//! * [`lp`] — a two-phase revised simplex over either `f64` or exact
//!   rational arithmetic, with deterministic tie-breaking and a basis
//!   certificate for the returned vertex.
//! * [`decode`] — decoders: plain LP decoding, exhaustive / randomized
//!   facet guessing, randomized bit guessing, brute-force ML, and a
//!   sum-product baseline, plus the structural quantities that bound the
//!   guessing decoders' success probability.
//! * [`channel`] — BSC and BPSK-AWGN channels producing per-bit
//!   log-likelihood-ratio objectives under the all-zeros transmission.
//! * [`harness`] — deterministic Monte Carlo experiments (paired trials,
//!   Wilson confidence intervals, CSV/JSON artifacts) and a structural
//!   analysis report for a single code.

pub mod channel;
pub mod codes;
pub mod decode;
pub mod harness;
mod llr;
pub mod lp;
pub mod polytope;

pub use llr::LlrVector;
