//! Special functions used by the exponent catalog and the oracles: complex
//! log-gamma (Lanczos), the complex Beta function, the modified Bessel
//! function K_lambda on | arg z | < pi/2, and erfc / the normal cdf.
//!
//! log-gamma is needed for complex arguments (Beta model) and for Gamma of
//! negative non-integer reals (tempered-stable coefficients), so it is
//! implemented here rather than pulled from a real-argument library.

use num_complex::Complex64;

const LN_2PI_HALF: f64 = 0.918_938_533_204_672_74; // ln(2*pi)/2
const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// log Gamma(z), Lanczos approximation with reflection for Re z < 0.5.
///
/// The value is correct modulo 2*pi*i (sufficient for Beta-function ratios,
/// which are single-valued), conjugate-symmetric, and accurate to ~1e-13
/// relative for moderate |z|.
pub fn lgamma_complex(z: Complex64) -> Complex64 {
    if z.im < 0.0 {
        return lgamma_complex(z.conj()).conj();
    }
    if z.re < 0.5 {
        // Gamma(z) Gamma(1-z) = pi / sin(pi z)
        return Complex64::new(std::f64::consts::PI.ln(), 0.0)
            - log_sin_pi(z)
            - lgamma_complex(Complex64::new(1.0, 0.0) - z);
    }
    let zm = z - 1.0;
    let mut acc = Complex64::new(LANCZOS[0], 0.0);
    for (k, &c) in LANCZOS.iter().enumerate().skip(1) {
        acc += c / (zm + k as f64);
    }
    let t = zm + LANCZOS_G + 0.5;
    LN_2PI_HALF + (zm + 0.5) * t.ln() - t + acc.ln()
}

/// log sin(pi z), computed without overflow for large |Im z|; Im z >= 0.
fn log_sin_pi(z: Complex64) -> Complex64 {
    let ipiz = Complex64::new(0.0, std::f64::consts::PI) * z;
    // sin(pi z) = -exp(-i pi z) (1 - exp(2 i pi z)) / (2 i)
    let one_m = (Complex64::new(1.0, 0.0) - (2.0 * ipiz).exp()).ln();
    -ipiz + one_m - Complex64::new(std::f64::consts::LN_2, std::f64::consts::FRAC_PI_2)
        + Complex64::new(0.0, std::f64::consts::PI)
}

/// Gamma(x) for real x, any non-pole argument (negative non-integers included).
pub fn gamma_real(x: f64) -> f64 {
    if x > 0.5 {
        lgamma_complex(Complex64::new(x, 0.0)).re.exp()
    } else {
        // reflection keeps the sign information that lgamma drops
        let s = (std::f64::consts::PI * x).sin();
        std::f64::consts::PI / (s * gamma_real(1.0 - x))
    }
}

/// Beta function B(a, b) for complex arguments (single-valued).
pub fn beta_complex(a: Complex64, b: Complex64) -> Complex64 {
    (lgamma_complex(a) + lgamma_complex(b) - lgamma_complex(a + b)).exp()
}

/// erfc(x) for real x: Maclaurin series for |x| <= 2, Lentz continued
/// fraction beyond. Absolute accuracy ~2e-15.
pub fn erfc(x: f64) -> f64 {
    if x < 0.0 {
        return 2.0 - erfc(-x);
    }
    if x <= 2.0 {
        // erf(x) = 2/sqrt(pi) * sum (-1)^n x^(2n+1) / (n! (2n+1))
        let mut term = x;
        let mut sum = x;
        let x2 = x * x;
        for n in 1..80 {
            term *= -x2 / n as f64;
            let add = term / (2 * n + 1) as f64;
            sum += add;
            if add.abs() < 1e-18 * sum.abs().max(1e-300) {
                break;
            }
        }
        1.0 - sum * 2.0 / std::f64::consts::PI.sqrt()
    } else {
        // erfc(x) = exp(-x^2)/sqrt(pi) / (x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
        let tiny = 1e-300;
        let mut f = x;
        let mut c = x;
        let mut d = 0.0f64;
        for n in 1..200 {
            let a = n as f64 / 2.0;
            d = x + a * d;
            if d.abs() < tiny {
                d = tiny;
            }
            c = x + a / c;
            if c.abs() < tiny {
                c = tiny;
            }
            d = 1.0 / d;
            let delta = c * d;
            f *= delta;
            if (delta - 1.0).abs() < 1e-17 {
                break;
            }
        }
        (-x * x).exp() / std::f64::consts::PI.sqrt() / f
    }
}

/// Standard normal cumulative distribution function.
pub fn normal_cdf(x: f64) -> f64 {
    0.5 * erfc(-x / std::f64::consts::SQRT_2)
}

/// K_lambda(z) on |arg z| < pi/2 by the infinite trapezoid rule applied to
/// the even integrand exp(-z cosh t) cosh(lambda t).
///
/// The step is set from the strip of analyticity in t (shrinks as arg z
/// approaches +-pi/2) and the truncation from the double-exponential decay.
pub fn bessel_k(lambda: f64, z: Complex64, tol: f64) -> crate::error::Result<Complex64> {
    let arg = z.im.atan2(z.re).abs();
    if arg >= std::f64::consts::FRAC_PI_2 {
        return Err(crate::error::LevyError::Domain(format!(
            "bessel_k requires |arg z| < pi/2, got {arg}"
        )));
    }
    let d = 0.9 * (std::f64::consts::FRAC_PI_2 - arg).min(1.1);
    let digits = (1.0 / tol).ln() + 4.0;
    let h = 2.0 * std::f64::consts::PI * d / digits;
    // truncate where Re z * cosh(T) - |lambda| T > digits + ln scale
    let re_scale = z.norm() * (arg + d).cos().max(1e-12);
    let mut t_max: f64 = 1.0;
    while re_scale * t_max.cosh() - lambda.abs() * t_max < digits + 5.0 {
        t_max += 0.5;
        if t_max > 60.0 {
            break;
        }
    }
    let n = (t_max / h).ceil() as i64;
    let mut sum = 0.5 * (-z).exp(); // t = 0 term, cosh(0) = 1
    for k in 1..=n {
        let t = k as f64 * h;
        sum += (-z * t.cosh()).exp() * (lambda * t).cosh();
    }
    let val = sum * h;
    if !val.re.is_finite() || !val.im.is_finite() {
        return Err(crate::error::LevyError::Numerical {
            node: n,
            message: "bessel_k overflow".into(),
        });
    }
    Ok(val)
}

/// Asymptotic expansion of K_lambda(z) for large |z|:
/// sqrt(pi/(2z)) e^{-z} sum_s A_s(lambda) z^{-s}, truncated at the smallest
/// term. Used as an independent cross-check of `bessel_k`.
pub fn bessel_k_asymptotic(lambda: f64, z: Complex64, terms: usize) -> Complex64 {
    let mut sum = Complex64::new(1.0, 0.0);
    let mut a = 1.0f64;
    let mut zp = Complex64::new(1.0, 0.0);
    let l2 = 4.0 * lambda * lambda;
    let mut last = f64::INFINITY;
    for s in 1..=terms {
        let odd = (2 * s - 1) as f64;
        a *= (l2 - odd * odd) / (s as f64 * 8.0);
        zp /= z;
        let term = a * zp;
        if term.norm() > last {
            break; // divergent tail of the asymptotic series
        }
        last = term.norm();
        sum += term;
    }
    (std::f64::consts::PI / (2.0 * z)).sqrt() * (-z).exp() * sum
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol * (1.0 + b.abs()), "{a} vs {b}");
    }

    #[test]
    fn gamma_known_values() {
        assert_close(gamma_real(0.5), std::f64::consts::PI.sqrt(), 1e-13);
        assert_close(gamma_real(5.0), 24.0, 1e-13);
        // Gamma(-0.5) = -2 sqrt(pi)
        assert_close(gamma_real(-0.5), -2.0 * std::f64::consts::PI.sqrt(), 1e-13);
        // Gamma(-1.5) = 4/3 sqrt(pi)
        assert_close(gamma_real(-1.5), 4.0 / 3.0 * std::f64::consts::PI.sqrt(), 1e-13);
    }

    #[test]
    fn lgamma_complex_agrees_with_reflection_and_recurrence() {
        let z = Complex64::new(2.3, 1.7);
        // Gamma(z+1) = z Gamma(z)
        let lhs = lgamma_complex(z + 1.0);
        let rhs = lgamma_complex(z) + z.ln();
        let diff = (lhs - rhs).exp();
        assert!((diff - 1.0).norm() < 1e-12);
        // conjugate symmetry
        let a = lgamma_complex(z.conj());
        let b = lgamma_complex(z).conj();
        assert!(((a - b).exp() - 1.0).norm() < 1e-12);
        // reflection region: B(x,y) with negative real part, single-valued check
        let x = Complex64::new(-1.3, 2.0);
        let y = Complex64::new(0.7, 0.0);
        let b1 = beta_complex(x, y);
        // B(x,y) = B(x+1,y) * (x+y)/x
        let b2 = beta_complex(x + 1.0, y) * (x + y) / x;
        assert!((b1 - b2).norm() < 1e-12 * b1.norm());
    }

    #[test]
    fn erfc_known_values() {
        assert_close(erfc(1.0), 0.157_299_207_050_285_13, 1e-14);
        assert_close(erfc(2.0), 0.004_677_734_981_047_266, 1e-13);
        assert_close(erfc(3.0), 2.209_049_699_858_544e-5, 1e-12);
        assert_close(normal_cdf(1.0), 0.841_344_746_068_542_9, 1e-14);
        assert_close(normal_cdf(-1.0), 0.158_655_253_931_457_05, 1e-13);
    }

    #[test]
    fn bessel_k_half_is_elementary() {
        // K_{1/2}(z) = sqrt(pi/(2z)) e^{-z}
        for &(re, im) in &[(1.0, 0.0), (2.0, 1.5), (0.7, -0.6), (10.0, 3.0)] {
            let z = Complex64::new(re, im);
            let exact = (std::f64::consts::PI / (2.0 * z)).sqrt() * (-z).exp();
            let got = bessel_k(0.5, z, 1e-13).unwrap();
            assert!((got - exact).norm() < 1e-12 * exact.norm(), "z={z}");
        }
    }

    #[test]
    fn bessel_k_matches_asymptotic_series_large_z() {
        for &lam in &[0.0, 1.0, -0.5, 2.0] {
            let z = Complex64::new(25.0, 16.0); // |z| ~ 30
            let quad = bessel_k(lam, z, 1e-14).unwrap();
            let asym = bessel_k_asymptotic(lam, z, 20);
            assert!(
                (quad - asym).norm() < 1e-9 * quad.norm(),
                "lambda={lam}: {quad} vs {asym}"
            );
        }
    }

    #[test]
    fn bessel_k_one_known_value() {
        // K_1(2) = 0.13986588181652242 (standard tables)
        let got = bessel_k(1.0, Complex64::new(2.0, 0.0), 1e-14).unwrap();
        assert_close(got.re, 0.139_865_881_816_522_42, 1e-12);
        assert!(got.im.abs() < 1e-15);
    }
}
