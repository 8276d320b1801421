//! Classical hidden-variable models: urns of painted balls, their pairwise
//! expectations and sampling, and polytope membership of correlation tuples.

mod specker;
mod urn;

pub use specker::{singlet_sz_profile, singlet_threshold, specker_check, SingletProfile, SpeckerReport};
pub use urn::{
    correlation_point, exact_pairwise_expectation, marginal_expectation, sample_urn, BallType, Sign,
    UrnDistribution, UrnSample, FLOAT_SUM_TOLERANCE, MAX_URN_OBSERVABLES,
};
