//! Exact threshold numbers of small graphs by exhaustive search.

mod search;
mod simplex;
mod system;

pub use search::{
    distinct_sums_representation, exists_representation, theta_search, Budget, Decision, KStep, SearchOptions,
    SearchOutcome, ThetaSearch, Verdict,
};
pub use system::{
    enumerate_assignments, feasible_linear_system, region_system, Constraint, Feasibility, LinearSystem,
    RegionAssignment, Relation,
};
