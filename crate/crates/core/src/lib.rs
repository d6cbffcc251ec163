pub mod congruence;
pub mod coxeter;
pub mod embedding;
pub mod error;
pub mod garside;
pub mod interval;
pub mod presentation;
pub mod table;
pub mod types;

pub use error::{Error, Result};
pub use types::CoxeterType;
