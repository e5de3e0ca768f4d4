pub mod error;
pub mod rational;
mod combi;
pub mod linalg;
pub mod lp;
pub mod config;
pub mod parity;
pub mod radon;
pub mod transversal;
pub mod cyclic;
pub mod randgen;
pub mod verify;

pub use config::PointConfig;
pub use error::{Error, Result};
pub use rational::Rational;
