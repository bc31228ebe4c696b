//! Rearrangements and truncated asymptotic expansions of `2F2` and `pFq`
//! for large parameters.

pub mod expansions;
pub mod fields;

pub use expansions::{
    asym_f22_a_down, asym_f22_both_down, asym_f22_large_lambda, asym_f22_large_lambda_with, asym_f22_large_z,
    asym_f22_minus_n, asym_pfp_one_down, asym_pfq_all_down, ExpansionRequest, ExpansionResult, ExpansionVariant,
    DEFAULT_SECTOR_DELTA, NEAR_INTEGER,
};
pub use fields::{f22_fields_series, pfp_luke_series};
