//! Spectral radius of `A_alpha(G) = alpha D(G) + (1 - alpha) A(G)` over
//! tricyclic graphs with a prescribed number of pendant vertices.
//!
//! - [`graph`]: labeled simple graphs, path analysis, cycle classes,
//!   isomorphism and the edge surgeries.
//! - [`spectra`]: matrix construction, the dominant eigenpair and a dense
//!   eigenvalue oracle.
//! - [`bounds`]: closed-form lower and upper bounds on the radius and the
//!   arithmetic chain that compares the extremal families.
//! - [`families`]: the four extremal families `T3`, `T4`, `T6`, `T7`.
//! - [`extremal`]: exhaustive enumeration and the verification harnesses.
//!
//! ```
//! use tricyclic_alpha::families::{construct_family, FamilyId, FamilySpec};
//! use tricyclic_alpha::spectra::alpha_spectral_radius;
//!
//! let t3 = construct_family(&FamilySpec::new(FamilyId::T3, 8, 1)?);
//! let rho = alpha_spectral_radius(&t3, 0.5)?.radius;
//! assert!(rho > 4.0);
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod bounds;
pub mod extremal;
pub mod families;
pub mod graph;
pub mod spectra;

pub use graph::{Graph, GraphError};

/// Version of this library, echoed in machine-readable reports.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
pub use spectra::{alpha_spectral_radius, SpectralError, SpectralResult};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/matrix.md")]
    mod matrix {}
    #[doc = include_str!("../../../book/src/perron.md")]
    mod perron {}
    #[doc = include_str!("../../../book/src/bounds.md")]
    mod bounds {}
    #[doc = include_str!("../../../book/src/families.md")]
    mod families {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
