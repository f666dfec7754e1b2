//! Phase bookkeeping for powers of unit complex numbers.
//!
//! Powers z^k with z = e^{i theta} are never formed by repeated
//! multiplication; the angle k*theta is reduced mod 2 pi in double-double
//! arithmetic so that no phase drift accumulates even for k ~ 10^6.

use num_complex::Complex64;

pub const TWO_PI: f64 = 2.0 * std::f64::consts::PI;
// 2*pi = TWO_PI_HI + TWO_PI_LO to ~107 bits.
const TWO_PI_HI: f64 = 6.283185307179586;
const TWO_PI_LO: f64 = 2.4492935982947064e-16;

/// Exact product a*b = p + e with p = fl(a*b).
#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let e = f64::mul_add(a, b, -p);
    (p, e)
}

/// k * theta reduced into [0, 2*pi), accurate to a few ulps of 2*pi
/// independently of k (for k up to ~2^40).
pub fn angle_mod_2pi(theta: f64, k: u64) -> f64 {
    let kf = k as f64;
    let (p, p_err) = two_prod(kf, theta);
    let q = (p / TWO_PI).round();
    let (m, m_err) = two_prod(q, TWO_PI_HI);
    // p and m agree to within ~pi, so the leading subtraction is exact.
    let mut r = (p - m) + (p_err - m_err - q * TWO_PI_LO);
    if r < 0.0 {
        r += TWO_PI;
    }
    if r >= TWO_PI {
        r -= TWO_PI;
    }
    r
}

/// e^{i angle}
#[inline]
pub fn unit(angle: f64) -> Complex64 {
    Complex64::new(angle.cos(), angle.sin())
}

/// z^k for z = e^{i theta}, via angle reduction.
#[inline]
pub fn unit_pow(theta: f64, k: u64) -> Complex64 {
    unit(angle_mod_2pi(theta, k))
}

/// Circle distance of a real number to 0 mod 2*pi (arc-length metric).
pub fn circle_distance(x: f64) -> f64 {
    let r = x.rem_euclid(TWO_PI);
    r.min(TWO_PI - r)
}

/// Reduce an angle into [0, 2*pi).
pub fn reduce_angle(x: f64) -> f64 {
    let r = x.rem_euclid(TWO_PI);
    // rem_euclid can return exactly 2*pi after rounding for tiny negative x
    if r >= TWO_PI {
        0.0
    } else {
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_k_matches_direct_product() {
        let theta = 0.7234561;
        let mut z = Complex64::new(1.0, 0.0);
        let w = unit(theta);
        for k in 1..=1000u64 {
            z *= w;
            let via_angle = unit_pow(theta, k);
            assert!((z - via_angle).norm() < 1e-12, "k={k}");
        }
    }

    #[test]
    fn million_step_drift_below_1e9() {
        // Invariant: angle-based powers agree with repeated multiplication
        // within 1e-9 up to k = 10^6.
        for &theta in &[0.123456789, 1.0471975511965976, 2.9, 0.001] {
            let w = unit(theta);
            let mut z = Complex64::new(1.0, 0.0);
            for k in 1..=1_000_000u64 {
                z *= w;
                if k % 250_000 == 0 {
                    let via_angle = unit_pow(theta, k);
                    assert!(
                        (z - via_angle).norm() < 1e-9,
                        "theta={theta} k={k} err={}",
                        (z - via_angle).norm()
                    );
                }
            }
        }
    }

    #[test]
    fn rational_angle_closes_exactly() {
        // 10 * (3*pi/5) = 6*pi = 0 mod 2*pi
        let theta = 3.0 * std::f64::consts::PI / 5.0;
        let a = angle_mod_2pi(theta, 10);
        assert!(circle_distance(a) < 1e-13, "residual {a}");
    }

    #[test]
    fn circle_distance_basics() {
        assert_eq!(circle_distance(0.0), 0.0);
        assert!((circle_distance(2.0) - 2.0).abs() < 1e-15);
        assert!((circle_distance(4.0) - (TWO_PI - 4.0)).abs() < 1e-15);
        assert!((circle_distance(-1.0) - 1.0).abs() < 1e-15);
        assert!(circle_distance(TWO_PI) < 1e-15);
    }

    #[test]
    fn reduce_angle_range() {
        for &x in &[-10.0, -0.1, 0.0, 0.1, 6.28, 100.0, -1e-18] {
            let r = reduce_angle(x);
            assert!((0.0..TWO_PI).contains(&r), "x={x} r={r}");
        }
    }
}
