pub mod algebra;
pub mod axioms;
pub mod check;
pub mod dsl;
pub mod duality;
pub mod error;
pub mod function;
pub mod laws;
pub mod pool;
pub mod proximity;
pub mod report;
pub mod sigma;
pub mod stone;
pub mod sequence;
pub mod symset;
pub mod universe;

pub use algebra::{AlgebraKind, SetAlgebra};
pub use check::CheckOptions;
pub use error::{Error, Result};
pub use function::{FunctionKind, FunctionSpec};
pub use laws::{check_law, Subject};
pub use pool::Strategy;
pub use proximity::{NearClass, NearTable, Proximity, ProximityKind};
pub use report::{LawReport, Status, Witness};
pub use sequence::{FunctionSequence, FunctionSequenceKind, SequenceKind, SetSequence};
pub use symset::{Cardinality, Interval, IntervalSet, SymSet};
pub use universe::{Point, Universe};
