//! Desk-scale simulation library for quantum state tomography of
//! two-dimensional tensor-network states.
//!
//! The crate builds PEPS/PEPO states on a `q × p` lattice ([`tn`]), measures
//! them with informationally complete or projective ensembles ([`povm`]),
//! simulates finite-shot statistics ([`sampling`]), recovers states with a
//! factorized constrained least-squares solver ([`recovery`]), and certifies
//! the exactly checkable identities behind all of it ([`verify`]).
//!
//! Everything is deterministic given a root seed; parallel code derives one
//! RNG stream per work item (see [`rng`]).

pub mod povm;
pub mod recovery;
pub mod rng;
pub mod sampling;
pub mod tn;
pub mod verify;

pub use num_complex::Complex64;
