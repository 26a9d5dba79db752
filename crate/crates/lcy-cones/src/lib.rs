//! Exact-arithmetic engine for the lattice theory of log Calabi-Yau surface
//! pairs `(Y, D)`: Picard-lattice intersection forms, iterated blowup
//! bookkeeping, rational polyhedral cones (cone of curves, nef cone and its
//! distinguished faces), Weyl chamber reduction, and consolidated
//! verification suites that certify each family's cone structure.
//!
//! Everything is computed over arbitrary-precision integers and rationals;
//! there is no floating point anywhere in this crate. All public types are
//! immutable values and all operations are pure functions, so they are safe
//! to share across threads.

pub mod arith;
pub mod cones;
pub mod coxeter;
pub mod lattice;
pub mod surface;
pub mod verify;

pub use arith::{Int, Rat};
pub use cones::{ConeMembershipCertificate, RationalCone};
pub use lattice::{ClassVector, IntersectionForm, RationalClassVector};
pub use surface::{CurveKind, CurveRecord, SurfaceModel};

