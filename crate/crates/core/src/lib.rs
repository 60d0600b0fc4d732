pub mod circle;
pub mod cli;
pub mod error;
pub mod glue;
pub mod kpair;
pub mod opnum;
pub mod symalg;

pub use error::{Error, Result};
