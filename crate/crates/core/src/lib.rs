//! Exact computer algebra for cyclic division algebras of odd prime degree
//! over ℚ, together with a certified verifier for the maximality of the
//! left ideal ⟨f, y−j⟩ in `D[x,y]` and the non-maximality of its contraction
//! ⟨f⟩ in `D[x]`.
//!
//! The crate is layered bottom-up:
//!
//! * [`arith`] — rationals, dense polynomials over ℚ and over prime fields,
//!   resultants, Hensel lifting and Zassenhaus factorization.
//! * [`numfield`] — number fields K = ℚ\[t\]/(m) with an explicit Galois
//!   generator σ.
//! * [`factor`] — factorization over number fields by Trager's norm method.
//! * [`cycalg`] — the cyclic algebra D = (K/ℚ, σ, β): element arithmetic,
//!   reduced norm and trace, inverses, conjugacy, zero-divisor witnesses and
//!   division certificates.
//! * [`skewpoly`] — D\[x\] and D\[x,y\] with central variables: Euclidean
//!   division, left-ideal gcds with Bézout certificates, commutators,
//!   Wedderburn splitting and reduction modulo y−j.
//! * [`amitsur`] — the verification engine: witness ideal, contraction and
//!   maximality certificates, saturation and randomized probes.
//! * [`pipeline`] — instance configs, machine-readable reports and the
//!   end-to-end run shared by the CLI and the browser demo.
//! * [`textparse`] — the small polynomial expression syntax used by the CLI.

pub mod amitsur;
pub mod arith;
mod clock;
pub mod cycalg;
pub mod error;
pub mod factor;
pub mod numfield;
pub mod pipeline;
pub mod rng;
pub mod skewpoly;
pub mod textparse;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
