//! Three-dimensional Bloch-body models of the qutrit state space.
//!
//! A qutrit density matrix lives in an 8-dimensional Bloch space. This crate
//! implements two 3D models of that space and the machinery around them:
//!
//! * [`bloch`] — the Gell-Mann basis (normalized to the dimension, `Tr(h_i h_j) = 3δ_ij`),
//!   Bloch-vector encoding/decoding, and Hilbert-Schmidt geometry.
//! * [`model`] — the first model `Q1` (coordinates `(z1, z2, w)` with `w ≥ 0`),
//!   its self-dual extension `Q2` (signed `w`), boundary surfaces, membership,
//!   the peel + sign rule, and state-inversion duality.
//! * [`orbits`] — unitary-orbit spheres over projected Birkhoff polygons and
//!   majorization checks.
//! * [`channels`] — Kraus channels (depolarizing, phase damping, amplitude
//!   damping) with closed-form coordinate maps and trajectories.
//! * [`sampling`] — deterministic Haar/Hilbert-Schmidt/rank-2 state and Haar
//!   unitary generation.
//! * [`meshgen`] — tessellation of every model surface and OBJ/PLY/CSV export.
//! * [`herm3`] — fixed-shape 3×3 complex Hermitian arithmetic and an analytic
//!   eigensolver with a Jacobi fallback.
//! * [`checks`] — the runtime invariant suites backing the `check` command.
//!
//! All coordinates are dimensionless. The base simplex of diagonal states is
//! the equilateral triangle with vertices `(±√(3/2), 1/√2)` and `(0, −√2)`;
//! pure states sit on the outer sphere of radius `√2`, and the insphere has
//! radius `1/√2`.

pub mod bloch;
pub mod channels;
pub mod checks;
pub mod herm3;
pub mod meshgen;
pub mod model;
pub mod orbits;
pub mod sampling;

pub use herm3::{eigh3, rank_of, ComplexMatrix3, Herm3Error, Spectrum};
