pub mod construct;
pub mod error;
pub mod exactnum;
pub mod graphs;
pub mod oracle;
pub mod represent;
pub mod scalar;
pub mod theta;

pub use error::{Error, Result};
pub use exactnum::ExactReal;
pub use graphs::{FamilySpec, Graph};
pub use represent::{verify, Representation, VerifyReport};

/// Exact rationals used for witnesses, gaps and linear systems.
pub type Rational = num_rational::BigRational;
