//! Exact enumeration, generating functions and asymptotics of `r`-ascents in
//! Łukasiewicz excursions, dispersed excursions and meanders.

pub mod asymptotics;
pub mod bijection;
pub mod error;
pub mod exact;
pub mod path;
pub mod real;
pub mod sampler;
pub mod series;
pub mod stepset;

pub use bijection::PlaneTree;
pub use error::{Error, Result};
pub use exact::{AscentDistribution, ExactOptions, Moments};
pub use path::{LatticePath, PathKind, Step};
pub use real::{BigFloat, Bits, Real};
pub use stepset::StepSet;
