use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("resource cap exceeded: more than {cap} {what}")]
    GroupTooLarge { cap: usize, what: &'static str },

    #[error("the given set is not a subgroup of the parent group")]
    NotASubgroup,

    #[error("subgroups belong to different parent groups")]
    ParentMismatch,

    #[error("invalid root pair: {0}")]
    InvalidRootPair(String),

    #[error("invalid extension pair: {0}")]
    InvalidExtensionPair(String),

    #[error("not an extension: the upper subgroup is not contained in the lower one")]
    NotAnExtension,

    #[error("bad tower ordering: {0}")]
    BadOrdering(String),

    #[error("degree {0} is too small for cluster magnification (need > 2)")]
    DegreeTooSmall(usize),

    #[error("bad parameter: {0}")]
    BadParameter(String),

    /// Two independent computations of the same invariant disagreed.
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

impl Error {
    pub fn is_resource_cap(&self) -> bool {
        matches!(self, Error::GroupTooLarge { .. })
    }
}
