//! Exact-arithmetic combinatorics of Catalan-style triangular arrays.
//!
//! The crate builds, with arbitrary-precision integers only:
//!
//! - the Catalan triangle, Catalan trapezoids, the alternating Jacobsthal
//!   triangle and its k-analogues ([`triangles`]);
//! - the polynomial families read off those arrays: Catalan triangle
//!   polynomials, q-deformed Fibonacci/Jacobsthal polynomials and their
//!   k-analogues ([`polyfam`]);
//! - the rational generating functions of all of the above, expandable as
//!   exact power series ([`genfun`]);
//! - a registry of machine-checkable identities with an exhaustive sweep
//!   engine ([`identities`]);
//! - a brute-force lattice-path oracle independent of the algebra
//!   ([`pathoracle`]);
//! - bundled OEIS b-file snapshots with cross-checking ([`oeisdata`]).
//!
//! All values are exact; no floating point is used anywhere.

pub mod exactmath;
pub mod genfun;
pub mod identities;
pub mod oeisdata;
pub mod pathoracle;
pub mod polyfam;
pub mod triangles;

pub use exactmath::{binomial, BiPoly, ExactInt, Poly, RationalGF};
