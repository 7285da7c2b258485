//! Dawson-like integrals for the LIF first-passage moments:
//!
//! ```text
//! g(x)  = e^{x^2} Int_{-inf}^{x} e^{-u^2} du        (closed form via erfcx)
//! ig(x) = Int_{0}^{x} g(u) du
//! h(x)  = e^{x^2} Int_{-inf}^{x} e^{-u^2} g(u)^2 du
//! ih(x) = Int_{-inf}^{x} h(u) du
//! ```
//!
//! ig, h, ih dispatch over three regions: an asymptotic series in 1/x^2 on
//! each tail and per-panel Chebyshev interpolants in the middle (fitted to
//! ln f where f is positive). Tables come from tools/gen_tables.py. g and h
//! grow like e^{x^2} and e^{2x^2}; past the f64 range they return infinity,
//! which the moment activation treats as a silent neuron.

use super::erf::{cheb_eval, erf, erfcx};
use super::tables::*;

pub const SQRT_PI: f64 = 1.772_453_850_905_516;

fn panel_eval(x_min: f64, x_max: f64, n_panels: usize, n_coef: usize, coef: &[f64], x: f64) -> f64 {
    let w = (x_max - x_min) / n_panels as f64;
    let mut idx = ((x - x_min) / w) as usize;
    if idx >= n_panels {
        idx = n_panels - 1;
    }
    let a = x_min + idx as f64 * w;
    let t = 2.0 * (x - a) / w - 1.0;
    cheb_eval(&coef[idx * n_coef..(idx + 1) * n_coef], t)
}

/// g(x) = (sqrt(pi)/2) e^{x^2} erfc(-x).
pub fn dawson_g(x: f64) -> f64 {
    if x <= 0.0 {
        0.5 * SQRT_PI * erfcx(-x)
    } else {
        0.5 * SQRT_PI * (x * x).exp() * (1.0 + erf(x))
    }
}

/// g'(x) = 2 x g(x) + 1, with a tail series where the closed form cancels.
pub fn dawson_g_prime(x: f64) -> f64 {
    if x < -10.0 {
        // g'(-t) = (1/(2t^2)) sum (-1)^k (2k+1) DFH[k] t^{-2k}
        let it2 = 1.0 / (x * x);
        let mut s = 0.0;
        let mut p = 1.0;
        let mut sign = 1.0;
        for (k, &c) in DFH_COEF.iter().take(12).enumerate() {
            s += sign * (2 * k + 1) as f64 * c * p;
            sign = -sign;
            p *= it2;
        }
        0.5 * it2 * s
    } else {
        2.0 * x * dawson_g(x) + 1.0
    }
}

/// ig(x) = Int_0^x g.
pub fn dawson_g_int(x: f64) -> f64 {
    if x < -6.0 {
        let it2 = 1.0 / (x * x);
        let mut s = 0.0;
        let mut p = it2;
        for &c in IG_NEG_COEF.iter() {
            s += c * p;
            p *= it2;
        }
        C_IG - 0.5 * (-x).ln() + s
    } else if x <= 1.0 {
        panel_eval(IG_MID_XMIN, IG_MID_XMAX, IG_MID_PANELS, IG_MID_NCOEF, &IG_MID_COEF, x)
    } else if x <= 8.0 {
        panel_eval(IG_LOG_XMIN, IG_LOG_XMAX, IG_LOG_PANELS, IG_LOG_NCOEF, &IG_LOG_COEF, x).exp()
    } else {
        // sqrt(pi) D(x) - (sqrt(pi)/2) E(x) with
        // D(x) = e^{x^2}/(2x) sum DFH[k] x^{-2k},
        // E(x) = K_E + (ln x + sum IG_EUL[k] x^{-2k}) / sqrt(pi)
        let ix2 = 1.0 / (x * x);
        let mut d = 0.0;
        let mut p = 1.0;
        for &c in DFH_COEF.iter().take(15) {
            d += c * p;
            p *= ix2;
        }
        d *= (x * x).exp() / (2.0 * x);
        let mut e = 0.0;
        let mut p = ix2;
        for &c in IG_EUL_COEF.iter() {
            e += c * p;
            p *= ix2;
        }
        e = K_E + (x.ln() + e) / SQRT_PI;
        SQRT_PI * d - 0.5 * SQRT_PI * e
    }
}

/// h(x), the second-moment kernel.
pub fn dawson_h(x: f64) -> f64 {
    if x < -6.0 {
        let t = -x;
        let it2 = 1.0 / (t * t);
        let mut s = 0.0;
        let mut p = 1.0;
        for &c in H_NEG_COEF.iter() {
            s += c * p;
            p *= it2;
        }
        s / (t * t * t)
    } else if x <= 6.0 {
        panel_eval(H_LOG_XMIN, H_LOG_XMAX, H_LOG_PANELS, H_LOG_NCOEF, &H_LOG_COEF, x).exp()
    } else {
        let ix2 = 1.0 / (x * x);
        let mut s = 0.0;
        let mut p = 1.0;
        for &c in DFH_COEF.iter() {
            s += c * p;
            p *= ix2;
        }
        std::f64::consts::PI / (2.0 * x) * (2.0 * x * x).exp() * s
    }
}

/// ih(x) = Int_{-inf}^x h.
pub fn dawson_h_int(x: f64) -> f64 {
    if x < -6.0 {
        let it2 = 1.0 / (x * x);
        let mut s = 0.0;
        let mut p = 1.0;
        for &c in IH_NEG_COEF.iter() {
            s += c * p;
            p *= it2;
        }
        s * it2
    } else if x <= 6.0 {
        panel_eval(IH_LOG_XMIN, IH_LOG_XMAX, IH_LOG_PANELS, IH_LOG_NCOEF, &IH_LOG_COEF, x).exp()
    } else {
        let ix2 = 1.0 / (x * x);
        let mut s = 0.0;
        let mut p = 1.0;
        for &c in IH_POS_COEF.iter() {
            s += c * p;
            p *= ix2;
        }
        std::f64::consts::PI / 8.0 * (2.0 * x * x).exp() * ix2 * s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g_at_zero_is_half_gaussian_integral() {
        assert!((dawson_g(0.0) - 0.5 * SQRT_PI).abs() <= 1e-15);
    }

    #[test]
    fn g_prime_matches_finite_differences() {
        for &x in &[-20.0_f64, -9.0, -3.0, -0.5, 0.0, 1.5, 4.0] {
            let d = 1e-6 * (1.0 + x.abs());
            let fd = (dawson_g(x + d) - dawson_g(x - d)) / (2.0 * d);
            let an = dawson_g_prime(x);
            assert!(
                (fd - an).abs() <= 1e-6 * (1.0 + an.abs()),
                "x={x}: fd={fd} analytic={an}"
            );
        }
    }

    #[test]
    fn ig_and_ih_are_antiderivatives() {
        for &x in &[-12.0_f64, -6.5, -4.0, -1.0, 0.5, 2.0, 5.5, 7.0, 10.0] {
            let d = 1e-5;
            let fd_g = (dawson_g_int(x + d) - dawson_g_int(x - d)) / (2.0 * d);
            let g = dawson_g(x);
            assert!(
                ((fd_g - g) / g).abs() <= 1e-7,
                "d(ig)/dx at {x}: fd={fd_g} g={g}"
            );
            let fd_h = (dawson_h_int(x + d) - dawson_h_int(x - d)) / (2.0 * d);
            let h = dawson_h(x);
            assert!(
                ((fd_h - h) / h).abs() <= 1e-6,
                "d(ih)/dx at {x}: fd={fd_h} h={h}"
            );
        }
    }

    #[test]
    fn h_is_positive_and_locally_monotone() {
        assert!(dawson_h(-20.0) > 0.0);
        assert!(dawson_h(-20.0) < 1e-2);
        assert!(dawson_h(-1.0) < dawson_h(0.0));
        assert!(dawson_h(0.0) < dawson_h(1.0));
        for i in 0..400 {
            let x = -30.0 + 0.1 * i as f64;
            assert!(dawson_h(x) > 0.0, "h({x}) not positive");
        }
    }

    #[test]
    fn overflow_is_graceful() {
        assert!(dawson_g(27.0).is_infinite());
        assert!(dawson_h(19.5).is_infinite());
        assert!(dawson_g(-30.0).is_finite());
        assert!(dawson_h(-30.0).is_finite());
        // far sub-threshold bound: ig still finite on the negative side
        assert!(dawson_g_int(-1e6).is_finite());
    }
}
