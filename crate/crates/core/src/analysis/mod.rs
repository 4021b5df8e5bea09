//! Closed forms and identities over the transformed sequences: Binet sums,
//! prefix sums, generating functions, the product/difference identities,
//! and the plastic-constant limit.

pub mod binet;
pub mod gf;
pub mod hifloat;
pub mod identities;
pub mod plastic;
pub mod report;
pub mod roots;
pub mod sums;

pub use binet::{binet_coefficients, binet_eval, binet_reports, BinetCoefficients};
pub use gf::{gf_reports, gf_series};
pub use hifloat::{HiComplex, HiFloat};
pub use identities::identity_suite;
pub use plastic::{plastic_radical_check, plastic_ratio, plastic_ratio_check};
pub use report::{sort_reports, ReportParams, ReportValue, VerificationReport};
pub use roots::{char_roots, CubicRoots, PlasticConstant};
pub use sums::{paper_sum_check, sum_prefix, telescoped_sum, telescoped_sum_check, SumDiscrepancy};
