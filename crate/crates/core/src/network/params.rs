use ndarray::{Array1, Array2};
use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::lif::LifConstants;
use crate::rng::derive_rng;

/// Parameterization of the external-input covariance added by the
/// normalization stage. `None` is the simplified variant (normalize
/// variances, pass correlations through); `Diagonal` trains independent
/// per-unit noise std; `Factor` trains a full matrix A with C_ext = A^T A.
#[derive(Debug, Clone)]
pub enum ExtCov {
    None,
    Diagonal { sigma: Array1<f64> },
    Factor { a: Array2<f64> },
}

impl ExtCov {
    pub fn kind_name(&self) -> &'static str {
        match self {
            ExtCov::None => "none",
            ExtCov::Diagonal { .. } => "diagonal",
            ExtCov::Factor { .. } => "factor",
        }
    }

    /// Materialized external covariance, if any.
    pub fn cov(&self) -> Option<Array2<f64>> {
        match self {
            ExtCov::None => None,
            ExtCov::Diagonal { sigma } => {
                Some(Array2::from_diag(&sigma.mapv(|s| s * s)))
            }
            ExtCov::Factor { a } => Some(a.t().dot(a)),
        }
    }

    /// Add C_ext into an existing matrix.
    pub fn add_to(&self, c: &mut Array2<f64>) {
        match self {
            ExtCov::None => {}
            ExtCov::Diagonal { sigma } => {
                for (i, s) in sigma.iter().enumerate() {
                    c[[i, i]] += s * s;
                }
            }
            ExtCov::Factor { a } => {
                let m = a.t().dot(a);
                *c += &m;
            }
        }
    }
}

/// Trainable state of one hidden layer: synaptic weights plus the
/// normalization scale/bias and its running statistics.
#[derive(Debug, Clone)]
pub struct MomentLayerParams {
    /// Synaptic weights, N_out x N_in.
    pub weights: Array2<f64>,
    pub gamma: Array1<f64>,
    pub beta: Array1<f64>,
    pub running_mean: Array1<f64>,
    pub running_nu: Array1<f64>,
    pub ext_cov: ExtCov,
    pub epsilon: f64,
    /// Number of batches folded into the running statistics; zero means
    /// eval mode and absorption are not yet available.
    pub stats_count: u64,
}

impl MomentLayerParams {
    pub fn n_out(&self) -> usize {
        self.weights.nrows()
    }

    pub fn n_in(&self) -> usize {
        self.weights.ncols()
    }

    pub fn stats_ready(&self) -> Result<()> {
        if self.stats_count == 0 {
            return Err(Error::state(
                "running statistics not populated; run at least one training batch".into(),
            ));
        }
        Ok(())
    }
}

/// Linear readout weights and bias.
#[derive(Debug, Clone)]
pub struct ReadoutParams {
    /// K x N.
    pub weights: Array2<f64>,
    pub bias: Array1<f64>,
}

/// Choice of external-covariance parameterization for new layers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtCovKind {
    None,
    Diagonal,
    Factor,
}

/// Initialization settings for [`MnnModel::new`].
#[derive(Debug, Clone)]
pub struct InitConfig {
    pub beta: f64,
    pub gamma: f64,
    /// Initial per-unit external noise std (used by Diagonal and,
    /// scaled down by the layer width, Factor).
    pub sigma_ext: f64,
    pub ext_cov: ExtCovKind,
    pub epsilon: f64,
    pub seed: u64,
}

impl Default for InitConfig {
    fn default() -> Self {
        InitConfig {
            beta: 1.0,
            gamma: 1.0,
            sigma_ext: 0.5,
            ext_cov: ExtCovKind::None,
            epsilon: 1e-5,
            seed: 1,
        }
    }
}

/// A full feedforward moment network.
#[derive(Debug, Clone)]
pub struct MnnModel {
    pub layers: Vec<MomentLayerParams>,
    pub readout: ReadoutParams,
    pub constants: LifConstants,
}

impl MnnModel {
    /// Build a model for the layer widths `dims` = [input, hidden..., classes].
    /// Weights are Gaussian with std 1/sqrt(fan_in).
    pub fn new(dims: &[usize], init: &InitConfig, constants: LifConstants) -> Result<Self> {
        if dims.len() < 3 {
            return Err(Error::config(
                "need at least [input, hidden, classes] layer widths".into(),
            ));
        }
        constants.validate()?;
        let mut layers = Vec::new();
        for li in 0..dims.len() - 2 {
            let (n_in, n_out) = (dims[li], dims[li + 1]);
            let mut rng = derive_rng(init.seed, &[0x11, li as u64]);
            let scale = 1.0 / (n_in as f64).sqrt();
            let weights = Array2::from_shape_fn((n_out, n_in), |_| {
                let z: f64 = rng.sample(StandardNormal);
                z * scale
            });
            let ext_cov = match init.ext_cov {
                ExtCovKind::None => ExtCov::None,
                ExtCovKind::Diagonal => ExtCov::Diagonal {
                    sigma: Array1::from_elem(n_out, init.sigma_ext),
                },
                ExtCovKind::Factor => {
                    let s = init.sigma_ext / (n_out as f64).sqrt();
                    ExtCov::Factor {
                        a: Array2::from_shape_fn((n_out, n_out), |_| {
                            let z: f64 = rng.sample(StandardNormal);
                            z * s
                        }),
                    }
                }
            };
            layers.push(MomentLayerParams {
                weights,
                gamma: Array1::from_elem(n_out, init.gamma),
                beta: Array1::from_elem(n_out, init.beta),
                running_mean: Array1::zeros(n_out),
                running_nu: Array1::from_elem(n_out, 1.0),
                ext_cov,
                epsilon: init.epsilon,
                stats_count: 0,
            });
        }
        let (n_in, k) = (dims[dims.len() - 2], dims[dims.len() - 1]);
        let mut rng = derive_rng(init.seed, &[0x22]);
        let scale = 1.0 / (n_in as f64).sqrt();
        let readout = ReadoutParams {
            weights: Array2::from_shape_fn((k, n_in), |_| {
                let z: f64 = rng.sample(StandardNormal);
                z * scale
            }),
            bias: Array1::zeros(k),
        };
        let model = MnnModel { layers, readout, constants };
        model.validate_dims()?;
        Ok(model)
    }

    pub fn validate_dims(&self) -> Result<()> {
        if self.layers.is_empty() {
            return Err(Error::config("model has no hidden layers".into()));
        }
        for (i, pair) in self.layers.windows(2).enumerate() {
            if pair[1].n_in() != pair[0].n_out() {
                return Err(Error::shape(format!(
                    "layer {} output width {} != layer {} input width {}",
                    i,
                    pair[0].n_out(),
                    i + 1,
                    pair[1].n_in()
                )));
            }
        }
        let last = self.layers.last().unwrap();
        if self.readout.weights.ncols() != last.n_out() {
            return Err(Error::shape(format!(
                "readout input width {} != last hidden width {}",
                self.readout.weights.ncols(),
                last.n_out()
            )));
        }
        if self.readout.bias.len() != self.readout.weights.nrows() {
            return Err(Error::shape("readout bias length != class count".into()));
        }
        Ok(())
    }

    pub fn input_dim(&self) -> usize {
        self.layers[0].n_in()
    }

    pub fn n_classes(&self) -> usize {
        self.readout.weights.nrows()
    }
}
