//! Mixed Eulerian numbers of matroids.
//!
//! For a loopless matroid `M` on `{0, ..., n}` of rank `r + 1`, the degree
//! `A_c(M) = deg(γ_1^{c_1} ⋯ γ_n^{c_n})` is computed exactly in the Chow
//! ring by several independent algorithms:
//!
//! * [`DegreeCache`] expands products over flags of flats;
//! * [`recursion`] holds the Eulerian, deletion-contraction and two-block
//!   recursions;
//! * [`localization`] counts permutations by growth positions and descents;
//! * [`pmd`] has closed forms for perfect matroid designs and remixed
//!   Eulerian numbers.
//!
//! ```
//! use mixed_eulerian::{Composition, DegreeCache, Matroid, WeightConvention};
//!
//! let b = Matroid::boolean(4)?;
//! let c = Composition::new(vec![1, 1, 1]);
//! assert_eq!(DegreeCache::new(&b, WeightConvention::Oi).degree(&c)?, 6.into());
//! # Ok::<(), mixed_eulerian::Error>(())
//! ```

pub mod chow;
pub mod classical;
pub mod composition;
pub mod error;
pub mod linalg;
pub mod localization;
pub mod matroid;
pub mod pmd;
pub mod poly;
pub mod recursion;
pub mod set;
pub mod tutte;

pub use chow::{mixed_eulerian_degree, DegreeCache, WeightConvention};
pub use composition::Composition;
pub use error::{Error, Result};
pub use localization::gamma_degree_via_localization;
pub use matroid::{projective_geometry, Matroid, MinorMap};
pub use set::ElementSet;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/matroids.md")]
    mod matroids {}
    #[doc = include_str!("../../../book/src/degrees.md")]
    mod degrees {}
    #[doc = include_str!("../../../book/src/relations.md")]
    mod relations {}
    #[doc = include_str!("../../../book/src/trees.md")]
    mod trees {}
    #[doc = include_str!("../../../book/src/localization.md")]
    mod localization {}
    #[doc = include_str!("../../../book/src/designs.md")]
    mod designs {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
