use ndarray::{Array1, Array2};

use crate::error::{Error, Result};
use crate::linalg;

/// Covariance payload of a [`MomentState`]. Network inputs with independent
/// units (Poisson encoding) stay diagonal; anything downstream of a
/// synaptic summation is dense.
#[derive(Debug, Clone)]
pub enum Covariance {
    Diagonal(Array1<f64>),
    Dense(Array2<f64>),
}

/// Mean firing-rate vector (spikes/ms) plus spike-count covariance rate
/// (per ms) of one neural population -- the unit of data flowing through
/// the network.
#[derive(Debug, Clone)]
pub struct MomentState {
    pub mean: Array1<f64>,
    pub cov: Covariance,
}

impl MomentState {
    pub fn zeros(n: usize) -> Self {
        MomentState {
            mean: Array1::zeros(n),
            cov: Covariance::Diagonal(Array1::zeros(n)),
        }
    }

    pub fn from_dense(mean: Array1<f64>, cov: Array2<f64>) -> Self {
        MomentState { mean, cov: Covariance::Dense(cov) }
    }

    pub fn dim(&self) -> usize {
        self.mean.len()
    }

    /// Per-unit count variance (the covariance diagonal).
    pub fn variances(&self) -> Array1<f64> {
        match &self.cov {
            Covariance::Diagonal(d) => d.clone(),
            Covariance::Dense(c) => c.diag().to_owned(),
        }
    }

    /// Materialize the covariance as a dense matrix.
    pub fn cov_dense(&self) -> Array2<f64> {
        match &self.cov {
            Covariance::Diagonal(d) => Array2::from_diag(d),
            Covariance::Dense(c) => c.clone(),
        }
    }

    /// Check the structural invariants: symmetry within 1e-9, non-negative
    /// diagonal, correlations in [-1, 1], eigenvalues >= -1e-7.
    pub fn validate(&self) -> Result<()> {
        if !self.mean.iter().all(|v| v.is_finite()) {
            return Err(Error::numerical("non-finite mean entries".into()));
        }
        match &self.cov {
            Covariance::Diagonal(d) => {
                if d.len() != self.mean.len() {
                    return Err(Error::shape("cov diagonal length != mean length".into()));
                }
                if let Some(v) = d.iter().find(|v| !v.is_finite() || **v < 0.0) {
                    return Err(Error::numerical(format!("bad variance entry {v}")));
                }
            }
            Covariance::Dense(c) => {
                let n = self.mean.len();
                if c.nrows() != n || c.ncols() != n {
                    return Err(Error::shape(format!(
                        "cov shape {}x{} does not match mean length {}",
                        c.nrows(),
                        c.ncols(),
                        n
                    )));
                }
                let scale = c.diag().iter().fold(1.0_f64, |a, v| a.max(v.abs()));
                for i in 0..n {
                    if c[[i, i]] < 0.0 || !c[[i, i]].is_finite() {
                        return Err(Error::numerical(format!(
                            "negative or non-finite variance at {i}: {}",
                            c[[i, i]]
                        )));
                    }
                    for j in (i + 1)..n {
                        if (c[[i, j]] - c[[j, i]]).abs() > 1e-9 * scale.max(1.0) {
                            return Err(Error::numerical(format!(
                                "asymmetry at ({i},{j}): {} vs {}",
                                c[[i, j]],
                                c[[j, i]]
                            )));
                        }
                        let denom = (c[[i, i]] * c[[j, j]]).sqrt();
                        if denom > 0.0 {
                            let rho = c[[i, j]] / denom;
                            if rho.abs() > 1.0 + 1e-9 {
                                return Err(Error::numerical(format!(
                                    "correlation out of range at ({i},{j}): {rho}"
                                )));
                            }
                        }
                    }
                }
                let min_ev = linalg::symmetric_eigenvalues(c)
                    .first()
                    .copied()
                    .unwrap_or(0.0);
                if min_ev < -1e-7 * scale.max(1.0) {
                    return Err(Error::numerical(format!(
                        "covariance not positive semi-definite: min eigenvalue {min_ev}"
                    )));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::array;

    #[test]
    fn validate_accepts_psd_and_rejects_junk() {
        let ok = MomentState::from_dense(array![0.1, 0.2], array![[1.0, 0.5], [0.5, 1.0]]);
        ok.validate().unwrap();

        let asym = MomentState::from_dense(array![0.1, 0.2], array![[1.0, 0.5], [0.2, 1.0]]);
        assert!(asym.validate().is_err());

        let indef = MomentState::from_dense(array![0.1, 0.2], array![[1.0, 2.0], [2.0, 1.0]]);
        assert!(indef.validate().is_err());

        let negvar = MomentState {
            mean: array![0.0],
            cov: Covariance::Diagonal(array![-1.0]),
        };
        assert!(negvar.validate().is_err());
    }
}
