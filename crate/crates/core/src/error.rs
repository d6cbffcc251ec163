use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown Coxeter type `{0}`")]
    UnknownType(String),

    #[error("type {family} does not support rank {rank}: {reason}")]
    UnsupportedRank {
        family: &'static str,
        rank: u32,
        reason: String,
    },

    #[error("bracket family needs at least two words, got {0}")]
    InvalidFamily(usize),

    #[error("bracket family contains an empty word")]
    EmptyFamilyWord,

    #[error("relation sides must differ and have equal length: {0}")]
    InvalidRelation(String),

    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("index error at byte {position}: {message}")]
    Index { position: usize, message: String },

    #[error("unknown atom `{atom}` at byte {position}")]
    UnknownAtom { atom: String, position: usize },

    #[error("atom `{atom}` does not belong to type {ty}")]
    AtomTypeMismatch { atom: String, ty: String },

    #[error("congruence class exceeded the cap of {0} words")]
    ClassCap(usize),

    #[error("resource guard: {what} exceeds {limit}")]
    ResourceGuard { what: String, limit: usize },

    #[error("`{0}` is not a simple element")]
    NotSimple(String),

    #[error("structural failure: {0}")]
    Structure(String),

    #[error("unsupported: {0}")]
    Unsupported(String),
}
