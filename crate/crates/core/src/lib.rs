pub mod approximant;
pub mod domain;
pub mod error;
pub mod harness;
pub mod interpolants;
pub mod linalg;
pub mod metrics;
pub mod nodes;
