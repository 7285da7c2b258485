use ndarray::{Array1, Array2};

use crate::error::{Error, Result};
use crate::lif::LifConstants;
use crate::linalg::symmetrize;
use crate::math::{moment_activation_grad, ActivationJacobian, ActivationOutput, CurrentMoments};

use super::batchnorm::batchnorm_eval;
use super::params::MomentLayerParams;
use super::state::{Covariance, MomentState};

/// Correlations are clamped to this magnitude after the transfer rule; the
/// linear-response derivation assumes weak correlations.
pub const RHO_CLAMP: f64 = 0.99;

/// Synaptic-current moments of one sample after summation (always dense:
/// shared presynaptic partners correlate the currents).
#[derive(Debug, Clone)]
pub struct SummedMoments {
    /// Current means, mV/ms.
    pub mean: Array1<f64>,
    /// Current covariance.
    pub cov: Array2<f64>,
}

/// mu_hat = W mu + mu_ext, c_hat = W C W^T + C_ext, symmetrized.
pub fn synaptic_summation(
    weights: &Array2<f64>,
    input: &MomentState,
    mu_ext: Option<&Array1<f64>>,
    c_ext: Option<&Array2<f64>>,
) -> Result<SummedMoments> {
    let (n_out, n_in) = (weights.nrows(), weights.ncols());
    if input.dim() != n_in {
        return Err(Error::shape(format!(
            "weights expect {} inputs, state has {}",
            n_in,
            input.dim()
        )));
    }
    let mut mean = weights.dot(&input.mean);
    if let Some(ext) = mu_ext {
        if ext.len() != n_out {
            return Err(Error::shape("external mean length mismatch".into()));
        }
        mean += ext;
    }
    let mut cov = match &input.cov {
        Covariance::Diagonal(d) => {
            // W diag(d) W^T = (W * d) W^T, scaling columns
            let mut scaled = weights.clone();
            for (mut col, &v) in scaled.columns_mut().into_iter().zip(d.iter()) {
                col *= v;
            }
            scaled.dot(&weights.t())
        }
        Covariance::Dense(c) => weights.dot(c).dot(&weights.t()),
    };
    if let Some(ext) = c_ext {
        if ext.nrows() != n_out || ext.ncols() != n_out {
            return Err(Error::shape("external covariance shape mismatch".into()));
        }
        cov += ext;
    }
    symmetrize(&mut cov);
    Ok(SummedMoments { mean, cov })
}

/// Everything the activation stage computes for one sample; kept around as
/// the backprop cache.
#[derive(Debug, Clone)]
pub struct ActivationStage {
    pub out: MomentState,
    pub per_unit: Vec<(ActivationOutput, ActivationJacobian)>,
    /// Input current std per unit, sqrt of the normalized covariance diagonal.
    pub sigma_bar: Array1<f64>,
    /// Correlation transfer factor per unit: chi * std_out / std_in
    /// (zero for silent or deterministic units).
    pub transfer: Array1<f64>,
    /// Number of off-diagonal pairs hit by the correlation clamp.
    pub clamped_pairs: usize,
}

/// Apply the per-unit moment activation and the pairwise correlation rule
/// rho_ij = chi_i chi_j rho_bar_ij to normalized current moments.
pub fn apply_activation(
    normalized: &SummedMoments,
    constants: &LifConstants,
) -> Result<ActivationStage> {
    let n = normalized.mean.len();
    let mut sigma_bar = Array1::<f64>::zeros(n);
    let mut per_unit = Vec::with_capacity(n);
    let mut transfer = Array1::<f64>::zeros(n);
    let mut mean = Array1::<f64>::zeros(n);
    for i in 0..n {
        let var = normalized.cov[[i, i]].max(0.0);
        let sb = var.sqrt();
        sigma_bar[i] = sb;
        let (out, jac) = moment_activation_grad(
            CurrentMoments { mean: normalized.mean[i], std: sb },
            constants,
        )?;
        mean[i] = out.rate;
        transfer[i] = if out.std > 0.0 && sb > 0.0 {
            out.chi * out.std / sb
        } else {
            0.0
        };
        per_unit.push((out, jac));
    }
    let mut cov = Array2::<f64>::zeros((n, n));
    let mut clamped_pairs = 0usize;
    for i in 0..n {
        cov[[i, i]] = per_unit[i].0.std * per_unit[i].0.std;
    }
    for i in 0..n {
        for j in (i + 1)..n {
            let raw = transfer[i] * transfer[j] * normalized.cov[[i, j]];
            let limit = RHO_CLAMP * per_unit[i].0.std * per_unit[j].0.std;
            let c = raw.clamp(-limit, limit);
            if c != raw {
                clamped_pairs += 1;
            }
            cov[[i, j]] = c;
            cov[[j, i]] = c;
        }
    }
    Ok(ActivationStage {
        out: MomentState { mean, cov: Covariance::Dense(cov) },
        per_unit,
        sigma_bar,
        transfer,
        clamped_pairs,
    })
}

/// Evaluation-mode forward pass through one hidden layer: summation,
/// normalization with running statistics, moment activation.
pub fn layer_forward(
    input: &MomentState,
    params: &MomentLayerParams,
    constants: &LifConstants,
) -> Result<MomentState> {
    let summed = synaptic_summation(&params.weights, input, None, None)?;
    let normalized = batchnorm_eval(&summed, params)?;
    Ok(apply_activation(&normalized, constants)?.out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::array;

    #[test]
    fn identity_summation_passes_state_through() {
        let w = Array2::eye(2);
        let st = MomentState::from_dense(array![1.0, 2.0], array![[0.5, 0.1], [0.1, 0.8]]);
        let s = synaptic_summation(&w, &st, None, None).unwrap();
        assert_eq!(s.mean, array![1.0, 2.0]);
        assert_eq!(s.cov, array![[0.5, 0.1], [0.1, 0.8]]);
    }

    #[test]
    fn anticorrelated_weights_worked_by_hand() {
        // W = [[1,0],[-1,0]], mu=[1,1], C=I: mu_hat=[1,-1], C_hat=[[1,-1],[-1,1]]
        let w = array![[1.0, 0.0], [-1.0, 0.0]];
        let st = MomentState {
            mean: array![1.0, 1.0],
            cov: Covariance::Diagonal(array![1.0, 1.0]),
        };
        let s = synaptic_summation(&w, &st, None, None).unwrap();
        assert_eq!(s.mean, array![1.0, -1.0]);
        assert_eq!(s.cov, array![[1.0, -1.0], [-1.0, 1.0]]);
    }

    #[test]
    fn shape_mismatch_is_an_error() {
        let w = array![[1.0, 0.0, 2.0]];
        let st = MomentState::zeros(2);
        assert!(synaptic_summation(&w, &st, None, None).is_err());
    }

    #[test]
    fn correlation_transfer_rule_is_exact() {
        // two units with hand-set rho_bar: output rho = chi_i chi_j rho_bar
        let k = LifConstants::default();
        let rho_bar = 0.4;
        let (s1, s2) = (1.0, 1.3);
        let normalized = SummedMoments {
            mean: array![1.2, 1.5],
            cov: array![
                [s1 * s1, rho_bar * s1 * s2],
                [rho_bar * s1 * s2, s2 * s2]
            ],
        };
        let stage = apply_activation(&normalized, &k).unwrap();
        let (o1, _) = stage.per_unit[0];
        let (o2, _) = stage.per_unit[1];
        let rho_out = stage.out.cov_dense()[[0, 1]] / (o1.std * o2.std);
        let want = o1.chi * o2.chi * rho_bar;
        assert!(
            (rho_out - want).abs() <= 1e-12,
            "rho_out {rho_out} vs chi_i chi_j rho_bar {want}"
        );
        assert_eq!(stage.clamped_pairs, 0);
    }

    #[test]
    fn silent_input_stays_silent() {
        // sub-threshold mean current, zero variance
        let k = LifConstants::default();
        let normalized = SummedMoments {
            mean: array![0.5, 0.2],
            cov: Array2::zeros((2, 2)),
        };
        let stage = apply_activation(&normalized, &k).unwrap();
        assert_eq!(stage.out.mean, array![0.0, 0.0]);
        assert_eq!(stage.out.cov_dense(), Array2::zeros((2, 2)));
    }
}
