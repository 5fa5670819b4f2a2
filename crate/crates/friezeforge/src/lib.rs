//! Friezes and generalized friezes on cluster categories of Dynkin type `A_n`,
//! computed exactly through the polygon model.
//!
//! The `(n+3)`-gon encodes the category: diagonals are indecomposable
//! objects, crossings are one-dimensional extension spaces, and rotating a
//! diagonal one vertex clockwise is the suspension. On top of that model this
//! crate builds
//!
//! - minimal approximations by a triangulation and the index in the split
//!   Grothendieck group ([`category`], [`ktheory`]),
//! - the subgroup `N` spanned by exchange-triangle differences, canonical
//!   coset representatives modulo `N`, and exponential maps into a Laurent
//!   polynomial ring ([`ktheory`], [`laurent`]),
//! - finite-length modules over a rigid subcategory, their submodule
//!   lattices and point counts ([`gmodules`]),
//! - the maps `α`, `β` and the modified Caldero-Chapoton map `ρ`, evaluated
//!   both from the definition and through the multiplication formula
//!   `ρ(r)ρ(m) = ρ(a) + ρ(b)` ([`engine`]),
//! - Conway-Coxeter frieze checking and generalized-frieze reports
//!   ([`frieze`], [`engine`]),
//! - an exhaustive small-instance verification harness ([`harness`]) and a
//!   command-line front end ([`cli`]).
//!
//! Each runnable example under `examples/` demonstrates one capability; the
//! octagon configuration used throughout the docs lives in
//! `fixtures/octagon.json`.

pub mod category;
pub mod cli;
pub mod config;
pub mod engine;
mod error;
pub mod frieze;
pub mod gmodules;
pub mod harness;
pub mod ktheory;
pub mod laurent;
pub mod polygon;

pub use error::{Error, Result};
