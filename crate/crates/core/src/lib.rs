//! Pattern-avoiding permutations, weighted lattice paths and their generating
//! functions.

pub mod asymptotics;
pub mod bijection;
pub mod combinat;
pub mod error;
pub mod path;
pub mod perm;
pub mod oracle;
pub mod orthopoly;
pub mod poly;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use path::{HeightWeights, LatticePath, PathKind, Step, WeightSpec};
pub use perm::{Pattern, Permutation};
pub use orthopoly::PolySystem;
pub use poly::Poly;
pub use series::{BivariateSeries, HalfPowerSeries, Series, TruncatedSeries, YPoly};
