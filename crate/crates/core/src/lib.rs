//! Permutation statistics derived from the Fisher-Yates shuffle, the
//! classical Mahonian statistics they are compared against, and exhaustive
//! distribution machinery to audit them.
//!
//! ```
//! use permstat::{fisher_yates, Permutation};
//!
//! let p: Permutation = "25413".parse().unwrap();
//! assert_eq!(fisher_yates::stat(&p), 8);
//! assert_eq!(fisher_yates::stati(&p), 6);
//! assert_eq!(fisher_yates::ska(&p), 3);
//! ```

pub mod bench;
pub mod classical;
pub mod distributions;
pub mod enumerate;
pub mod error;
pub mod fisher_yates;
pub mod group;
pub mod pattern;
pub mod permutation;
pub mod registry;
pub mod verify;

pub use distributions::{qfactorial, DistPolynomial, Engine, JointDist};
pub use enumerate::Enumerator;
pub use error::{Error, Result};
pub use fisher_yates::{DistanceSeq, SubexcedantSeq};
pub use group::GroupElement;
pub use pattern::VincularPattern;
pub use permutation::{Permutation, Special};
pub use registry::{registry, Kind, StatisticDescriptor, Variant};
