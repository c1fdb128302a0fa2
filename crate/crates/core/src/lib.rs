//! Circumscribed circles in integer lattice geometry.
//!
//! An integer circle with center `O` and radius `r` is the set of lattice
//! points `P` whose integer distance `gcd(|P - O|)` equals `r`. This crate
//! decides which finite sets lie on such circles, describes the full integer
//! and rational spectra of radii, and produces checkable certificates and
//! explicit centers. Arithmetic is exact throughout, on unbounded integers.
//!
//! ```
//! use intcircle::{spectra, PointSet};
//!
//! let square = PointSet::from_coords(&[(0, 0), (2, 0), (0, 2), (2, 2)]);
//! let spectrum = spectra::rational_spectrum(&square).unwrap();
//! assert_eq!(spectrum.to_string(), "{ 2/(c*2) : c >= 1 }");
//! assert_eq!(spectra::integer_spectrum(&square).unwrap(), vec![1.into()]);
//! ```

pub mod arith;
pub mod construct;
pub mod error;
pub mod lattice;
pub mod line;
pub mod point_set;
pub mod polygons;
pub mod spectra;
pub mod tori;
pub mod trig;

pub use error::{ConstructError, GeometryError, PolygonError, SpectrumError, TorusError};
pub use lattice::{circle_contains, int_area, int_distance, int_length, IntegerCircle, LatticePoint, LatticeVector};
pub use line::{is_tangent, line_circle_classify, Classification, LatticeLine};
pub use point_set::PointSet;
pub use spectra::{Certificate, RationalSpectrum, ReducedFraction};
pub use tori::{PrimitiveDecomposition, TorusResidue};
pub use trig::{canonical_angle, isin, CanonicalAngle, RationalAngle};
