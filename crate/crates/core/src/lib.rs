//! Sumset and difference-set arithmetic on finite integer sets, and three
//! constructions of infinite nested chains `A_1 ⊂ A_2 ⊂ ...` that alternate
//! between sum-dominated (MSTD) and difference-dominated (MDTS) sets without
//! ever filling in a gap.
//!
//! ```
//! use altchain_core::{classify, parse_set_literal, SetClass};
//!
//! let conway = parse_set_literal("0,2,3,4,7,11,12,14").unwrap();
//! assert_eq!(conway.sumset().len(), 26);
//! assert_eq!(conway.diffset().len(), 25);
//! assert_eq!(classify(&conway), SetClass::Mstd);
//! ```

pub mod chain;
pub mod chainfile;
pub mod error;
pub mod intset;
pub mod literal;
pub mod method1;
pub mod method2;
pub mod method3;
pub mod nathanson;
pub mod profile;
pub mod report;

pub use chain::{
    growth_rates, growth_table, limiting_density, validate_chain, Chain, Failure, GrowthRates,
    GrowthRow, LimitingDensity, MethodTag, ValidationReport, Witness,
};
pub use error::{Error, Result};
pub use intset::{IntSet, SAFE_BOUND};
pub use literal::parse_set_literal;
pub use method1::{analyze_modulus, generate_chain_m1, search_moduli, Method1Params};
pub use method2::{build_a1_m2, generate_chain_m2, verify_star_identities, Method2State};
pub use method3::{delta_counts, generate_chain_m3, set_m3, Method3Index};
pub use nathanson::{build_base, check_interval_lemma, NathansonParams, Quarter};
pub use profile::{classify, profile, Density, SetClass, SumDiffProfile};
pub use report::{render_table, TableFormat};
