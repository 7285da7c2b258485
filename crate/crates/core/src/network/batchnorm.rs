//! Moment batch normalization. One normalization factor nu per unit is
//! shared between the mean and the covariance path:
//!
//! ```text
//! nu_i   = Var_batch[mu_hat_i] + E_batch[c_hat_ii]
//! mean:  mu_bar_i = gamma_i (mu_hat_i - E_batch[mu_hat_i]) / sqrt(nu_i + eps) + beta_i
//! cov:   c_bar_ij = gamma_i gamma_j c_hat_ij / sqrt((nu_i+eps)(nu_j+eps)) + c_ext_ij
//! ```
//!
//! Sharing nu is what lets the whole stage be absorbed into the synaptic
//! weights after training. By the law of total variance, nu equals the
//! across-batch-and-time variance of the underlying synaptic current.

use ndarray::{Array1, Array2};

use crate::error::{Error, Result};

use super::layer::SummedMoments;
use super::params::MomentLayerParams;

/// Batch statistics produced by a training-mode pass, used both for the
/// running-stat update and for backprop.
#[derive(Debug, Clone)]
pub struct BatchStats {
    pub mean: Array1<f64>,
    pub nu: Array1<f64>,
}

/// Training-mode normalization over a batch. Returns per-sample normalized
/// moments plus the batch statistics.
pub fn batchnorm_train(
    batch: &[SummedMoments],
    params: &MomentLayerParams,
) -> Result<(Vec<SummedMoments>, BatchStats)> {
    let b = batch.len();
    if b < 2 {
        return Err(Error::config(format!(
            "training-mode batch normalization needs batch size >= 2, got {b}"
        )));
    }
    let n = params.n_out();
    let inv_b = 1.0 / b as f64;

    let mut mean = Array1::<f64>::zeros(n);
    for s in batch {
        mean += &s.mean;
    }
    mean *= inv_b;

    let mut var = Array1::<f64>::zeros(n);
    let mut mean_var = Array1::<f64>::zeros(n);
    for s in batch {
        for i in 0..n {
            let d = s.mean[i] - mean[i];
            var[i] += d * d;
            mean_var[i] += s.cov[[i, i]];
        }
    }
    var *= inv_b;
    mean_var *= inv_b;
    let nu = &var + &mean_var;

    let stats = BatchStats { mean, nu };
    let out = batch
        .iter()
        .map(|s| normalize_one(s, params, &stats.mean, &stats.nu))
        .collect();
    Ok((out, stats))
}

/// Evaluation-mode normalization of a single sample with running statistics.
pub fn batchnorm_eval(
    sample: &SummedMoments,
    params: &MomentLayerParams,
) -> Result<SummedMoments> {
    params.stats_ready()?;
    Ok(normalize_one(sample, params, &params.running_mean, &params.running_nu))
}

fn normalize_one(
    s: &SummedMoments,
    params: &MomentLayerParams,
    center: &Array1<f64>,
    nu: &Array1<f64>,
) -> SummedMoments {
    let n = params.n_out();
    let scale: Array1<f64> = (0..n)
        .map(|i| params.gamma[i] / (nu[i] + params.epsilon).sqrt())
        .collect();
    let mean: Array1<f64> = (0..n)
        .map(|i| scale[i] * (s.mean[i] - center[i]) + params.beta[i])
        .collect();
    let mut cov = Array2::<f64>::zeros((n, n));
    for i in 0..n {
        for j in 0..n {
            cov[[i, j]] = scale[i] * scale[j] * s.cov[[i, j]];
        }
    }
    params.ext_cov.add_to(&mut cov);
    SummedMoments { mean, cov }
}

/// Fold one batch's statistics into the running estimates with the given
/// momentum (new = (1-m) old + m batch).
pub fn update_running_stats(params: &mut MomentLayerParams, stats: &BatchStats, momentum: f64) {
    if params.stats_count == 0 {
        params.running_mean.assign(&stats.mean);
        params.running_nu.assign(&stats.nu);
    } else {
        params.running_mean = &params.running_mean * (1.0 - momentum) + &(&stats.mean * momentum);
        params.running_nu = &params.running_nu * (1.0 - momentum) + &(&stats.nu * momentum);
    }
    params.stats_count += 1;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::network::params::ExtCov;
    use ndarray::array;

    fn params_1d(gamma: f64, beta: f64, eps: f64) -> MomentLayerParams {
        MomentLayerParams {
            weights: Array2::eye(1),
            gamma: array![gamma],
            beta: array![beta],
            running_mean: array![0.0],
            running_nu: array![1.0],
            ext_cov: ExtCov::None,
            epsilon: eps,
            stats_count: 0,
        }
    }

    fn s1(mean: f64, var: f64) -> SummedMoments {
        SummedMoments { mean: array![mean], cov: array![[var]] }
    }

    #[test]
    fn two_point_batch_worked_by_hand() {
        // batch {mu=0, var=1} and {mu=2, var=1}: nu = Var[mu] + E[var] = 1 + 1 = 2
        let p = params_1d(1.0, 0.0, 0.0);
        let (out, stats) = batchnorm_train(&[s1(0.0, 1.0), s1(2.0, 1.0)], &p).unwrap();
        assert!((stats.nu[0] - 2.0).abs() < 1e-14);
        let inv = 1.0 / 2.0_f64.sqrt();
        assert!((out[0].mean[0] + inv).abs() < 1e-14);
        assert!((out[1].mean[0] - inv).abs() < 1e-14);
        // variances scaled by 1/nu = 1/2
        assert!((out[0].cov[[0, 0]] - 0.5).abs() < 1e-14);
    }

    #[test]
    fn identical_samples_give_nu_equals_mean_variance_and_beta_output() {
        let p = params_1d(1.3, 0.7, 0.0);
        let (out, stats) = batchnorm_train(&[s1(3.0, 2.5), s1(3.0, 2.5), s1(3.0, 2.5)], &p).unwrap();
        assert!((stats.nu[0] - 2.5).abs() < 1e-14);
        for o in &out {
            assert!((o.mean[0] - 0.7).abs() < 1e-14);
        }
    }

    #[test]
    fn batch_of_one_is_rejected() {
        let p = params_1d(1.0, 0.0, 1e-5);
        assert!(batchnorm_train(&[s1(0.0, 1.0)], &p).is_err());
    }

    #[test]
    fn eval_needs_stats_and_matches_train_at_momentum_one() {
        let mut p = params_1d(1.0, 0.0, 1e-5);
        assert!(batchnorm_eval(&s1(1.0, 1.0), &p).is_err());
        let batch = [s1(0.0, 1.0), s1(2.0, 1.0)];
        let (out, stats) = batchnorm_train(&batch, &p).unwrap();
        update_running_stats(&mut p, &stats, 1.0);
        for (s, o) in batch.iter().zip(out.iter()) {
            let e = batchnorm_eval(s, &p).unwrap();
            assert!((e.mean[0] - o.mean[0]).abs() < 1e-14);
            assert!((e.cov[[0, 0]] - o.cov[[0, 0]]).abs() < 1e-14);
        }
    }

    #[test]
    fn absorption_precondition_identity() {
        // gamma = sqrt(nu+eps), beta = running mean: output mean equals input mean
        let mut p = params_1d(1.0, 0.0, 1e-5);
        let batch = [s1(0.5, 0.3), s1(1.5, 0.7)];
        let (_, stats) = batchnorm_train(&batch, &p).unwrap();
        update_running_stats(&mut p, &stats, 1.0);
        p.gamma = array![(stats.nu[0] + p.epsilon).sqrt()];
        p.beta = p.running_mean.clone();
        for s in &batch {
            let e = batchnorm_eval(s, &p).unwrap();
            assert!((e.mean[0] - s.mean[0]).abs() < 1e-12);
        }
    }
}
