//! Exact-arithmetic combinatorics of simple root systems, aimed at splitting
//! types of homogeneous bundles on rational curves.
//!
//! Everything is computed over the integers and rationals; there is no
//! floating point anywhere in the crate. The main pipeline is:
//!
//! * [`lie`] — simple Lie types and their Cartan matrices in the
//!   Onishchik–Vinberg labeling, with a bridge to Bourbaki numbering;
//! * [`roots`] — root-system generation from the Cartan matrix, the highest
//!   root and its coroot pairings;
//! * [`parabolic`] — parabolic markings, the induced grading of the root
//!   system, splitting types of `T(G/P)` on the curves `C_alpha`, and
//!   unbendability certificates;
//! * [`weights`] — weight-lattice arithmetic: fundamental weights, Weyl
//!   orbits, Freudenthal multiplicities and the Weyl dimension formula;
//! * [`horospherical`] — the five families of smooth horospherical varieties
//!   of Picard number one and the degree bookkeeping for their bundles on
//!   the highest-root curve;
//! * [`report`] — machine-readable (JSON) and human-readable (Markdown)
//!   verification reports.

pub mod error;
pub mod horospherical;
pub mod lie;
pub mod parabolic;
pub mod rat;
pub mod report;
pub mod roots;
pub mod weights;

pub use error::Error;
pub use lie::{Family, LieType};
pub use rat::Rat;
pub use roots::{Root, RootSystem};

/// Convenient alias used throughout: this crate's `Result`.
pub type Result<T> = std::result::Result<T, Error>;
