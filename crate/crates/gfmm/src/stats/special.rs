//! Special functions backing the rank tests: log-gamma, the regularized
//! incomplete beta function, F-distribution quantiles and the studentized
//! range distribution. Everything is computed in-repo so critical values
//! do not depend on an external statistics library.

use std::f64::consts::PI;

/// Natural log of the gamma function (Lanczos approximation, g = 7).
pub fn ln_gamma(x: f64) -> f64 {
    const COEF: [f64; 9] = [
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
    if x < 0.5 {
        PI.ln() - (PI * x).sin().ln() - ln_gamma(1.0 - x)
    } else {
        let x = x - 1.0;
        let mut a = COEF[0];
        let t = x + 7.5;
        for (i, &c) in COEF.iter().enumerate().skip(1) {
            a += c / (x + i as f64);
        }
        0.5 * (2.0 * PI).ln() + (x + 0.5) * t.ln() - t + a.ln()
    }
}

/// Continued fraction for the incomplete beta function, evaluated with the
/// modified Lentz method.
fn betacf(a: f64, b: f64, x: f64) -> f64 {
    const EPS: f64 = 1e-15;
    const TINY: f64 = 1e-300;
    let qab = a + b;
    let qap = a + 1.0;
    let qam = a - 1.0;
    let mut c = 1.0;
    let mut d = 1.0 - qab * x / qap;
    if d.abs() < TINY {
        d = TINY;
    }
    d = 1.0 / d;
    let mut h = d;
    for m in 1..=500 {
        let m = m as f64;
        let m2 = 2.0 * m;
        let aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if d.abs() < TINY {
            d = TINY;
        }
        c = 1.0 + aa / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        h *= d * c;
        let aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if d.abs() < TINY {
            d = TINY;
        }
        c = 1.0 + aa / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        let del = d * c;
        h *= del;
        if (del - 1.0).abs() < EPS {
            break;
        }
    }
    h
}

/// Regularized incomplete beta function I_x(a, b).
pub fn reg_inc_beta(a: f64, b: f64, x: f64) -> f64 {
    assert!(a > 0.0 && b > 0.0);
    if x <= 0.0 {
        return 0.0;
    }
    if x >= 1.0 {
        return 1.0;
    }
    let ln_front =
        ln_gamma(a + b) - ln_gamma(a) - ln_gamma(b) + a * x.ln() + b * (1.0 - x).ln();
    let front = ln_front.exp();
    // the continued fraction converges fast on this side of the mean
    if x < (a + 1.0) / (a + b + 2.0) {
        front * betacf(a, b, x) / a
    } else {
        1.0 - front * betacf(b, a, 1.0 - x) / b
    }
}

/// P(F <= x) for an F distribution with d1 and d2 degrees of freedom.
pub fn f_cdf(d1: f64, d2: f64, x: f64) -> f64 {
    if x <= 0.0 {
        return 0.0;
    }
    reg_inc_beta(d1 / 2.0, d2 / 2.0, d1 * x / (d1 * x + d2))
}

/// Quantile of the F distribution by bisection on the cdf.
pub fn f_quantile(d1: f64, d2: f64, p: f64) -> f64 {
    assert!((0.0..1.0).contains(&p), "p must lie in [0, 1)");
    if p == 0.0 {
        return 0.0;
    }
    let mut hi = 1.0;
    while f_cdf(d1, d2, hi) < p {
        hi *= 2.0;
        assert!(hi.is_finite());
    }
    let mut lo = 0.0;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if f_cdf(d1, d2, mid) < p {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

pub fn normal_pdf(z: f64) -> f64 {
    (-0.5 * z * z).exp() / (2.0 * PI).sqrt()
}

/// Standard normal cdf via the series
/// Phi(z) = 1/2 + phi(z) * sum z^(2n+1) / (1*3*...*(2n+1)).
/// All terms share the sign of z, so there is no cancellation.
pub fn normal_cdf(z: f64) -> f64 {
    if z < -8.0 {
        return 0.0;
    }
    if z > 8.0 {
        return 1.0;
    }
    let mut term = z;
    let mut sum = z;
    let mut n = 0u32;
    while term.abs() > 1e-17 * sum.abs().max(1e-300) && n < 500 {
        n += 1;
        term *= z * z / (2.0 * n as f64 + 1.0);
        sum += term;
    }
    0.5 + sum * normal_pdf(z)
}

fn simpson(f: impl Fn(f64) -> f64, a: f64, b: f64, n: usize) -> f64 {
    assert!(n % 2 == 0);
    let h = (b - a) / n as f64;
    let mut s = f(a) + f(b);
    for i in 1..n {
        let x = a + i as f64 * h;
        s += f(x) * if i % 2 == 1 { 4.0 } else { 2.0 };
    }
    s * h / 3.0
}

/// P(Q <= q) for the range of k independent standard normals (the
/// studentized range with infinite error degrees of freedom).
pub fn studentized_range_cdf(q: f64, k: usize) -> f64 {
    assert!(k >= 2);
    if q <= 0.0 {
        return 0.0;
    }
    let f = |z: f64| {
        normal_pdf(z) * (normal_cdf(z) - normal_cdf(z - q)).powi(k as i32 - 1)
    };
    (k as f64 * simpson(f, -12.0, 12.0, 4800)).min(1.0)
}

/// Upper-alpha quantile of the studentized range, by bisection.
pub fn studentized_range_quantile(alpha: f64, k: usize) -> f64 {
    assert!((0.0..1.0).contains(&alpha) && alpha > 0.0);
    let target = 1.0 - alpha;
    let mut lo = 0.0;
    let mut hi = 60.0;
    for _ in 0..100 {
        let mid = 0.5 * (lo + hi);
        if studentized_range_cdf(mid, k) < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ln_gamma_known_values() {
        assert!((ln_gamma(0.5) - PI.sqrt().ln()).abs() < 1e-12);
        assert!((ln_gamma(1.0)).abs() < 1e-12);
        assert!((ln_gamma(5.0) - 24.0f64.ln()).abs() < 1e-12);
        // recurrence gamma(x+1) = x gamma(x)
        for x in [0.3, 1.7, 4.2, 11.5] {
            assert!((ln_gamma(x + 1.0) - ln_gamma(x) - x.ln()).abs() < 1e-12);
        }
    }

    #[test]
    fn incomplete_beta_identities() {
        for (a, b, x) in [(2.0, 3.0, 0.4), (0.5, 0.5, 0.7), (8.0, 2.5, 0.1)] {
            let lhs = reg_inc_beta(a, b, x);
            let rhs = 1.0 - reg_inc_beta(b, a, 1.0 - x);
            assert!((lhs - rhs).abs() < 1e-12);
        }
        assert!((reg_inc_beta(3.0, 3.0, 0.5) - 0.5).abs() < 1e-12);
        // I_x(1, 1) is the identity
        assert!((reg_inc_beta(1.0, 1.0, 0.3) - 0.3).abs() < 1e-12);
    }

    #[test]
    fn f_quantiles_match_reference_critical_values() {
        // reference results quoted at four decimal places
        assert!((f_quantile(23.0, 299.0, 0.95) - 1.5655).abs() < 1e-3);
        assert!((f_quantile(5.0, 50.0, 0.95) - 2.4004).abs() < 1e-3);
        assert!((f_quantile(7.0, 70.0, 0.95) - 2.1435).abs() < 1e-3);
        assert!((f_quantile(5.0, 65.0, 0.95) - 2.35603).abs() < 1e-3);
    }

    #[test]
    fn f_quantile_inverts_the_cdf() {
        for (d1, d2, p) in [(3.0, 12.0, 0.9), (1.0, 1.0, 0.5), (10.0, 2.0, 0.99)] {
            let q = f_quantile(d1, d2, p);
            assert!((f_cdf(d1, d2, q) - p).abs() < 1e-9);
        }
    }

    #[test]
    fn normal_cdf_reference_points() {
        assert_eq!(normal_cdf(0.0), 0.5);
        assert!((normal_cdf(1.959_963_985) - 0.975).abs() < 1e-9);
        assert!((normal_cdf(-1.0) + normal_cdf(1.0) - 1.0).abs() < 1e-12);
        assert!(normal_cdf(9.0) == 1.0 && normal_cdf(-9.0) == 0.0);
    }

    #[test]
    fn studentized_range_k2_reduces_to_a_folded_normal_difference() {
        // for k = 2, P(Q <= q) = 2 Phi(q / sqrt(2)) - 1
        for q in [0.5, 1.0, 2.0, 3.5] {
            let direct = 2.0 * normal_cdf(q / 2.0f64.sqrt()) - 1.0;
            assert!((studentized_range_cdf(q, 2) - direct).abs() < 1e-7);
        }
    }

    #[test]
    fn studentized_range_quantile_inverts_the_cdf() {
        for k in [2, 5, 10, 24] {
            let q = studentized_range_quantile(0.05, k);
            assert!((studentized_range_cdf(q, k) - 0.95).abs() < 1e-7);
        }
    }
}
