//! Error-function family. Everything reduces to one Chebyshev fit of the
//! scaled complementary error function on a rational map of [0, inf), plus
//! the Maclaurin series of erf on [-1, 1].

use super::tables;

/// Clenshaw evaluation of a Chebyshev series with the c0-halved convention.
pub(crate) fn cheb_eval(coef: &[f64], t: f64) -> f64 {
    let mut b0 = 0.0_f64;
    let mut b1 = 0.0_f64;
    for &c in coef[1..].iter().rev() {
        let next = 2.0 * t * b0 - b1 + c;
        b1 = b0;
        b0 = next;
    }
    t * b0 - b1 + 0.5 * coef[0]
}

/// Scaled complementary error function `exp(x^2) erfc(x)`.
///
/// Finite and well-conditioned for all x >= 0; for negative x it grows like
/// `2 exp(x^2)` and overflows to infinity below x ~ -26.6.
pub fn erfcx(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if x >= 0.0 {
        let s = (x - tables::ERFCX_K) / (x + tables::ERFCX_K);
        cheb_eval(&tables::ERFCX_COEF, s) / (1.0 + 2.0 * x)
    } else {
        2.0 * (x * x).exp() - erfcx(-x)
    }
}

/// Maclaurin series of erf, used on |x| <= 1.
fn erf_series(x: f64) -> f64 {
    const TWO_OVER_SQRT_PI: f64 = 1.128_379_167_095_512_6;
    let x2 = x * x;
    let mut term = x;
    let mut sum = x;
    let mut n = 0u32;
    loop {
        n += 1;
        term *= -x2 / n as f64;
        let add = term / (2 * n + 1) as f64;
        sum += add;
        if add.abs() <= 1e-18 * sum.abs() || n > 40 {
            break;
        }
    }
    TWO_OVER_SQRT_PI * sum
}

pub fn erf(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    let ax = x.abs();
    let v = if ax <= 1.0 {
        erf_series(ax)
    } else {
        1.0 - (-ax * ax).exp() * erfcx(ax)
    };
    if x < 0.0 {
        -v
    } else {
        v
    }
}

pub fn erfc(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if x > 0.5 {
        (-x * x).exp() * erfcx(x)
    } else {
        1.0 - erf(x)
    }
}

/// Standard normal CDF.
pub fn normal_cdf(z: f64) -> f64 {
    0.5 * erfc(-z * std::f64::consts::FRAC_1_SQRT_2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn erf_reference_values() {
        // classical table values
        let cases = [
            (0.0, 0.0),
            (0.5, 0.5204998778130465),
            (1.0, 0.8427007929497149),
            (2.0, 0.9953222650189527),
            (3.0, 0.9999779095030014),
            (-1.5, -0.9661051464753107),
        ];
        for (x, want) in cases {
            assert!((erf(x) - want).abs() <= 1e-14, "erf({x}) = {}", erf(x));
        }
        assert_eq!(erf(30.0), 1.0);
        assert_eq!(erf(-30.0), -1.0);
    }

    #[test]
    fn erfc_reference_values() {
        let cases = [
            (0.0, 1.0),
            (1.0, 0.15729920705028513),
            (3.0, 2.209049699858544e-5),
            (5.0, 1.5374597944280351e-12),
            (-1.0, 1.8427007929497148),
            (10.0, 2.088487583762545e-45),
        ];
        for (x, want) in cases {
            let got = erfc(x);
            assert!(
                (got - want).abs() <= 1e-14 * want.abs().max(1e-30) + 1e-300,
                "erfc({x}) = {got:e}, want {want:e}"
            );
        }
    }

    #[test]
    fn erfcx_reference_values() {
        assert!((erfcx(0.0) - 1.0).abs() < 1e-15);
        // erfcx(1) = e * erfc(1)
        let want = std::f64::consts::E * 0.15729920705028513;
        assert!((erfcx(1.0) - want).abs() <= 1e-14);
        // large-argument asymptote 1/(x sqrt(pi))
        let x = 5e4;
        let asym = 1.0 / (x * std::f64::consts::PI.sqrt());
        assert!((erfcx(x) - asym).abs() / asym <= 1e-8);
    }

    #[test]
    fn identities_hold_on_a_grid() {
        for i in 0..200 {
            let x = -4.0 + 0.04 * i as f64;
            let e = erf(x) + erfc(x);
            assert!((e - 1.0).abs() <= 2e-15, "erf+erfc at {x}: {e}");
            let sym = erf(x) + erf(-x);
            assert!(sym.abs() <= 2e-16, "odd symmetry at {x}");
        }
    }

    #[test]
    fn normal_cdf_basics() {
        assert!((normal_cdf(0.0) - 0.5).abs() < 1e-15);
        assert!((normal_cdf(1.959963984540054) - 0.975).abs() < 1e-12);
        assert!(normal_cdf(-8.0) < 1e-14);
    }
}
