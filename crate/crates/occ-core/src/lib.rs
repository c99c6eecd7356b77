//! Exact computational kernel for a family of determinantal
//! orbit-closure singularities.
//!
//! The crate provides, with no floating point anywhere:
//!
//! - exact multivariate polynomial arithmetic over Q and GF(p)
//!   ([`poly`], [`polymat`]);
//! - reduced Groebner bases and ideal predicates: equality, membership,
//!   Krull dimension, elimination, saturation, ring maps ([`groebner`]);
//! - clans parametrizing GL(p) x GL(q) orbits on the flag variety of
//!   GL(p+q), their representatives, dimensions, and padding ([`clan`]);
//! - normal-slice charts through an orbit, the rank equations cutting
//!   out orbit closures inside them, and the named varieties they
//!   define ([`slice`]);
//! - the microlocal codimension-one test at the origin of the slice
//!   variety, driven by an explicit group action ([`braden`]);
//! - moment-map images of conormal bundles as signed Young tableaux
//!   ([`nilorbit`]).
//!
//! The companion `occ` binary wires these into batch verification
//! commands with machine-readable reports.
#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod braden;
pub mod clan;
pub mod groebner;
pub mod monomial;
pub mod nilorbit;
pub mod poly;
pub mod polymat;
pub mod qmat;
pub mod scalar;
pub mod slice;

pub use groebner::{Ideal, KrullDim, RingMap};
pub use monomial::{Monomial, MonomialOrder};
pub use poly::{parse_polynomial, Polynomial, Ring, RingRef, VariableSet};
pub use polymat::PolyMatrix;
pub use qmat::QMat;
pub use scalar::{FieldSpec, Scalar};
