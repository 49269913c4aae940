pub mod arrangement;
pub mod charvar;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod exactlin;
pub mod orbitconfig;
pub mod report;
pub mod salvetti;
pub mod toric;
pub mod wonderful;

pub use error::{Error, Result};
