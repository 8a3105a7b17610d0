use thiserror::Error;

#[derive(Debug, Error)]
pub enum TwistError {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("cocycle validity violated at block {block}: {rule}")]
    InvalidCocycle { block: String, rule: String },

    #[error("homomorphism is not well-defined: {0}")]
    InvalidHomomorphism(String),

    #[error("element does not belong to group {0}")]
    GroupMismatch(String),

    #[error("subgroup is not contained in the ambient group: {0}")]
    NotSubgroup(String),

    #[error("homomorphism is not surjective: {0}")]
    NotSurjective(String),

    #[error("cocycle is not totally skew: {0}")]
    NotTotallySkew(String),

    #[error("torus rank exceeds free rank: {0}")]
    TorusRankExceedsFreeRank(String),

    #[error("finite size bound exceeded: |G| = {size} > {bound}")]
    SizeBound { size: u64, bound: u64 },

    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, TwistError>;
