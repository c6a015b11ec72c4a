//! Conditional oriented matroids (COMs) as sign systems.
//!
//! A sign system is a ground set `E` with a set 𝓛 of sign vectors in
//! `{-1, 0, +1}^E`. This crate provides:
//!
//! * sign-vector algebra: composition, separation, the face order ([`sign`]);
//! * axiom checks for COMs and oriented matroids ([`axioms`]);
//! * recovery of 𝓛 from its topes ([`reconstruction`]);
//! * deletion and contraction ([`minors`]);
//! * the covector poset, ranks and f-polynomial ([`poset`]);
//! * hyperplane arrangements and apartments ([`arrangement`]);
//! * text and JSON file formats ([`format`]).
//!
//! ```
//! use coms_core::{arrangement, format, poset};
//!
//! let input = format::parse_arrangement(r#"{
//!     "dimension": 1,
//!     "hyperplanes": [{"label": "h", "coeffs": [1], "offset": 0}],
//!     "points": [[-1], [1]]
//! }"#).unwrap();
//! let com = arrangement::apartment_to_com(&input.arrangement, &input.points, Default::default()).unwrap();
//! assert_eq!(format::write_covectors(&com), "elements: h\n-\n0\n+\n");
//! assert_eq!(poset::f_polynomial(&com).unwrap().to_string(), "x + 2");
//! ```

pub mod arrangement;
pub mod axioms;
pub mod error;
pub mod format;
pub mod minors;
pub mod poset;
pub mod reconstruction;
pub mod sign;
pub mod system;

pub use arrangement::{apartment_to_com, ApartmentOptions, Arrangement, Hyperplane, Number, Point};
pub use axioms::{check_all, is_com, is_om, Axiom, AxiomCheck, AxiomReport, Witness};
pub use error::{ComError, Result, TopeError};
pub use poset::{build_poset, f_polynomial, CovectorPoset, FPolynomial};
pub use reconstruction::{
    reconstruct_com, reconstruct_om, topes_of, ReconstructOptions, TopeSet, SUPPORT_LIMIT,
};
pub use sign::{Sign, SignVector};
pub use system::{validate_topes, GroundSet, SignSystem};
