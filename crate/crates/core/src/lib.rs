//! Moment neural networks over leaky integrate-and-fire statistics:
//! forward propagation of (mean, covariance) activity, gradient-based
//! training, reconstruction of the equivalent spiking network, trial-based
//! simulation, and statistics validation.

pub mod analysis;
pub mod config;
pub mod data;
pub mod error;
pub mod learning;
pub mod lif;
pub mod linalg;
pub mod math;
pub mod network;
pub mod rng;
pub mod sim;
pub mod snn;

pub use error::{Error, Result};
pub use lif::LifConstants;
