//! Per-neuron moment activation: maps the mean and std of a neuron's input
//! current to the mean rate, spike-count variability, and linear correlation
//! transfer coefficient of its output spikes, with analytic first
//! derivatives (and the second derivatives of the rate needed for the
//! derivatives of chi).

use serde::{Deserialize, Serialize};

use super::dawson::{dawson_g, dawson_g_int, dawson_g_prime, dawson_h, dawson_h_int};
use crate::error::{Error, Result};
use crate::lif::LifConstants;

/// Mean (mV/ms) and standard deviation (mV/sqrt(ms)) of an input current.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CurrentMoments {
    pub mean: f64,
    pub std: f64,
}

/// Output spike statistics of one neuron.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ActivationOutput {
    /// Mean firing rate (spikes/ms), bounded by 1/T_ref.
    pub rate: f64,
    /// Spike-count variability (sqrt of the count variance rate).
    pub std: f64,
    /// Linear correlation transfer coefficient chi = (std_in/std_out) d rate/d mean.
    pub chi: f64,
}

/// First derivatives of (rate, std, chi) with respect to (mean, std) of the
/// input current.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct ActivationJacobian {
    pub d_rate_d_mean: f64,
    pub d_rate_d_std: f64,
    pub d_std_d_mean: f64,
    pub d_std_d_std: f64,
    pub d_chi_d_mean: f64,
    pub d_chi_d_std: f64,
}

/// Below this input std the integrands degenerate and evaluation switches to
/// the closed-form deterministic branch (zero rate below rheobase, the
/// noiseless interspike interval above it).
pub const SIGMA_CUTOFF: f64 = 1e-4;

/// If the lower integration bound exceeds this, the rate underflows anything
/// observable and the neuron is treated as silent.
const SILENT_BOUND: f64 = 8.0;

/// Rates below one spike per 10^18 ms are flushed to zero.
const MIN_RATE: f64 = 1e-18;

const ZERO_OUT: (ActivationOutput, ActivationJacobian) = (
    ActivationOutput { rate: 0.0, std: 0.0, chi: 0.0 },
    ActivationJacobian {
        d_rate_d_mean: 0.0,
        d_rate_d_std: 0.0,
        d_std_d_mean: 0.0,
        d_std_d_std: 0.0,
        d_chi_d_mean: 0.0,
        d_chi_d_std: 0.0,
    },
);

fn check_input(input: CurrentMoments) -> Result<()> {
    if !input.mean.is_finite() || !input.std.is_finite() {
        return Err(Error::domain(format!(
            "non-finite current moments ({}, {})",
            input.mean, input.std
        )));
    }
    if input.std < 0.0 {
        return Err(Error::domain(format!("negative current std {}", input.std)));
    }
    Ok(())
}

/// Deterministic branch: zero noise. Silent below rheobase, the closed-form
/// interspike interval above it. chi is defined as 0 here (the output has no
/// variability to correlate).
fn deterministic(mu: f64, k: &LifConstants) -> (ActivationOutput, ActivationJacobian) {
    let theta_t = k.leak * k.v_threshold;
    let theta_r = k.leak * k.v_reset;
    if mu <= theta_t {
        return ZERO_OUT;
    }
    let isi = k.t_refractory + (1.0 / k.leak) * ((mu - theta_r) / (mu - theta_t)).ln();
    let rate = 1.0 / isi;
    let d_rate_d_mean = rate * rate / k.leak * (1.0 / (mu - theta_t) - 1.0 / (mu - theta_r));
    (
        ActivationOutput { rate, std: 0.0, chi: 0.0 },
        ActivationJacobian { d_rate_d_mean, ..Default::default() },
    )
}

fn diffusion(mu: f64, sigma: f64, k: &LifConstants) -> (ActivationOutput, ActivationJacobian) {
    let sqrt_leak = k.leak.sqrt();
    let denom = sqrt_leak * sigma;
    let ub = (k.leak * k.v_threshold - mu) / denom;
    let lb = (k.leak * k.v_reset - mu) / denom;
    if ub >= SILENT_BOUND {
        return ZERO_OUT;
    }

    let two_over_leak = 2.0 / k.leak;
    let dig = (dawson_g_int(ub) - dawson_g_int(lb)).max(0.0);
    let total = k.t_refractory + two_over_leak * dig;
    let rate = 1.0 / total;
    if !(rate > MIN_RATE) {
        return ZERO_OUT;
    }

    let dih = (dawson_h_int(ub) - dawson_h_int(lb)).max(0.0);
    let var_coef = 8.0 / (k.leak * k.leak);
    let var = var_coef * rate.powi(3) * dih;
    let std = var.sqrt();
    if !(std > 0.0) {
        // count variance underflowed; physically silent output noise
        let (out, mut jac) = (
            ActivationOutput { rate, std: 0.0, chi: 0.0 },
            ActivationJacobian::default(),
        );
        let g_ub = dawson_g(ub);
        let g_lb = dawson_g(lb);
        jac.d_rate_d_mean = rate * rate * two_over_leak * (g_ub - g_lb) / denom;
        return (out, jac);
    }

    // bound derivatives: b_m = d ub/d mu = d lb/d mu, u_s = d ub/d sigma
    let b_m = -1.0 / denom;
    let u_s = -ub / sigma;
    let l_s = -lb / sigma;

    let g_ub = dawson_g(ub);
    let g_lb = dawson_g(lb);
    let h_ub = dawson_h(ub);
    let h_lb = dawson_h(lb);

    // first derivatives of the g-integral and rate
    let dig_m = b_m * (g_ub - g_lb);
    let dig_s = g_ub * u_s - g_lb * l_s;
    let d_rate = |dig_a: f64| -rate * rate * two_over_leak * dig_a;
    let d_rate_d_mean = d_rate(dig_m);
    let d_rate_d_std = d_rate(dig_s);

    // first derivatives of the h-integral and std
    let dih_m = b_m * (h_ub - h_lb);
    let dih_s = h_ub * u_s - h_lb * l_s;
    let d_var = |d_rate_a: f64, dih_a: f64| {
        var_coef * (3.0 * rate * rate * d_rate_a * dih + rate.powi(3) * dih_a)
    };
    let d_std_d_mean = d_var(d_rate_d_mean, dih_m) / (2.0 * std);
    let d_std_d_std = d_var(d_rate_d_std, dih_s) / (2.0 * std);

    let chi = sigma / std * d_rate_d_mean;

    // second derivatives of the rate, for the chi derivatives
    let gp_ub = dawson_g_prime(ub);
    let gp_lb = dawson_g_prime(lb);
    // bound second derivatives: u_mm = 0, u_ms = -b_m/sigma
    let u_ms = -b_m / sigma;
    let dig_mm = gp_ub * b_m * b_m - gp_lb * b_m * b_m;
    let dig_ms = gp_ub * b_m * u_s - gp_lb * b_m * l_s + (g_ub - g_lb) * u_ms;
    let d2_rate = |dig_a: f64, dig_b: f64, dig_ab: f64| {
        2.0 * rate.powi(3) * (two_over_leak * two_over_leak) * dig_a * dig_b
            - rate * rate * two_over_leak * dig_ab
    };
    let d2_rate_mm = d2_rate(dig_m, dig_m, dig_mm);
    let d2_rate_ms = d2_rate(dig_m, dig_s, dig_ms);

    let d_chi_d_mean = sigma / std * d2_rate_mm - sigma / (std * std) * d_std_d_mean * d_rate_d_mean;
    let d_chi_d_std = d_rate_d_mean / std + sigma / std * d2_rate_ms
        - sigma / (std * std) * d_std_d_std * d_rate_d_mean;

    (
        ActivationOutput { rate, std, chi },
        ActivationJacobian {
            d_rate_d_mean,
            d_rate_d_std,
            d_std_d_mean,
            d_std_d_std,
            d_chi_d_mean,
            d_chi_d_std,
        },
    )
}

fn eval(input: CurrentMoments, k: &LifConstants) -> Result<(ActivationOutput, ActivationJacobian)> {
    check_input(input)?;
    if input.std < SIGMA_CUTOFF {
        Ok(deterministic(input.mean, k))
    } else {
        Ok(diffusion(input.mean, input.std, k))
    }
}

/// The moment activation (mu_bar, sigma_bar) -> (rate, std, chi).
pub fn moment_activation(input: CurrentMoments, k: &LifConstants) -> Result<ActivationOutput> {
    eval(input, k).map(|(out, _)| out)
}

/// Moment activation together with its Jacobian.
pub fn moment_activation_grad(
    input: CurrentMoments,
    k: &LifConstants,
) -> Result<(ActivationOutput, ActivationJacobian)> {
    eval(input, k)
}
