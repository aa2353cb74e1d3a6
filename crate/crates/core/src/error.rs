use thiserror::Error;

/// Errors produced by the group engine.
#[derive(Debug, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("invalid permutation images: {0}")]
    BadImages(String),

    #[error("cycle notation error at '{token}': {reason}")]
    CycleParse { token: String, reason: String },

    #[error("group closure exceeded the element budget of {budget}")]
    ClosureBudget { budget: usize },

    #[error("group is not soluble")]
    NotSoluble,

    #[error("subgroup is not normal in its parent group")]
    NotNormal,

    #[error("invalid level k = {k} for the {family} family")]
    InvalidLevel { family: &'static str, k: usize },

    #[error("word value enumeration needs {needed} pairs, budget is {budget}")]
    WordBudget { needed: usize, budget: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid word spec '{0}'")]
    BadWordSpec(String),

    #[error("invalid statement '{0}'")]
    BadStatement(String),

    #[error("group file error: {0}")]
    GroupFile(String),

    #[error("unknown builtin group '{0}'")]
    UnknownGroup(String),

    #[error("expected order {expected}, closure produced {actual}")]
    OrderMismatch { expected: usize, actual: usize },

    #[error("group '{name}' does not match its '{tag}' tag")]
    TagMismatch { name: String, tag: String },
}
