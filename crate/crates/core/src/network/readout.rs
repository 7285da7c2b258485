use ndarray::{Array1, Array2};

use crate::error::{Error, Result};
use crate::linalg::symmetrize;

use super::params::ReadoutParams;
use super::state::MomentState;

/// Readout moments in rate units: E[y] = W mu + b and the covariance rate
/// W C W^T (divide by the readout window to get Cov[y]).
pub fn readout_moments(
    readout: &ReadoutParams,
    state: &MomentState,
) -> Result<(Array1<f64>, Array2<f64>)> {
    if readout.weights.ncols() != state.dim() {
        return Err(Error::shape(format!(
            "readout expects {} units, state has {}",
            readout.weights.ncols(),
            state.dim()
        )));
    }
    let mean = readout.weights.dot(&state.mean) + &readout.bias;
    let mut cov = match &state.cov {
        super::state::Covariance::Diagonal(d) => {
            let mut scaled = readout.weights.clone();
            for (mut col, &v) in scaled.columns_mut().into_iter().zip(d.iter()) {
                col *= v;
            }
            scaled.dot(&readout.weights.t())
        }
        super::state::Covariance::Dense(c) => readout.weights.dot(c).dot(&readout.weights.t()),
    };
    symmetrize(&mut cov);
    Ok((mean, cov))
}

/// Readout over a finite window: E[y] unchanged, Cov[y] = (W C W^T) / dt.
pub fn linear_readout(
    readout: &ReadoutParams,
    state: &MomentState,
    dt: f64,
) -> Result<(Array1<f64>, Array2<f64>)> {
    if !(dt > 0.0) {
        return Err(Error::domain(format!("readout window must be positive, got {dt}")));
    }
    let (mean, cov_rate) = readout_moments(readout, state)?;
    Ok((mean, cov_rate / dt))
}
