use thiserror::Error;

use crate::intset::SAFE_BOUND;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("value {0} lies outside the safe bound +/-{SAFE_BOUND}")]
    OverflowRisk(i128),
    #[error("dilation factor must be nonzero")]
    ZeroDilation,
    #[error("cannot profile the empty set")]
    EmptyProfile,
    #[error("modulus must be at least 1, got {0}")]
    BadModulus(i64),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("base set is not MSTD (|A+A| = {sums}, |A-A| = {diffs})")]
    NotMstd { sums: usize, diffs: usize },
    #[error("base set does not contain 0")]
    MissingZero,
    #[error("base set has negative elements (min = {0}); translate it so that min = 0")]
    NegativeBase(i64),
    #[error("modulus {n} must exceed max(A) = {max}")]
    ModulusTooSmall { n: i64, max: i64 },
    #[error("modulus {n} fails {}", failed_conditions(*.cond1, *.cond2))]
    ConditionsFail { n: i64, cond1: bool, cond2: bool },
    #[error("method 2 constraint violated: {0}")]
    ConstraintViolation(String),
    #[error("delta counting is only defined for phases 2 and 4, got phase {0}")]
    PhaseUnsupported(u8),
    #[error("chain index must be at least 1")]
    ZeroIndex,
    #[error("a chain needs at least one set")]
    EmptyChain,
    #[error("chain set {0} is empty")]
    EmptyChainMember(usize),
    #[error("need at least 3 MSTD sets to measure growth, found {0}")]
    TooFewMstdSets(usize),
    #[error("probe index {index} is invalid for a chain of length {len}: {reason}")]
    BadProbe {
        index: usize,
        len: usize,
        reason: &'static str,
    },
    #[error("no rows to render")]
    EmptyRows,
    #[error("parse error: {0}")]
    Parse(String),
}

fn failed_conditions(cond1: bool, cond2: bool) -> &'static str {
    match (cond1, cond2) {
        (false, false) => "conditions 1 and 2",
        (false, true) => "condition 1 (residue counts differ)",
        (true, false) => "condition 2 (2y - x - 1 too small)",
        (true, true) => "no condition",
    }
}
