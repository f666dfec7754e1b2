//! Dense symmetric eigensolver: cyclic Jacobi rotations.
//!
//! Deterministic and dependency-free; adequate for dimensions up to a few
//! thousand. The sweep terminates when the off-diagonal Frobenius norm falls
//! below 1e-14 relative to the input scale (an absolute 1e-14 is below the
//! rounding floor once `norm * eps * n` exceeds it).

use crate::error::{Error, Result};
use nalgebra::DMatrix;

const MAX_SWEEPS: usize = 100;
const OFF_TOLERANCE: f64 = 1e-14;

/// Eigenvalues (ascending) and, optionally, the matching orthonormal
/// eigenvectors as columns of an n x n matrix.
pub fn symmetric_eigen(
    mat: &DMatrix<f64>,
    want_vectors: bool,
) -> Result<(Vec<f64>, Option<DMatrix<f64>>)> {
    let n = mat.nrows();
    assert_eq!(n, mat.ncols(), "square matrix required");
    if n == 0 {
        return Ok((Vec::new(), want_vectors.then(|| DMatrix::zeros(0, 0))));
    }

    // Row-major copy of the upper triangle (full matrix storage).
    let mut a: Vec<f64> = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            a.push(mat[(i, j)]);
        }
    }
    let mut v: Vec<f64> = if want_vectors {
        let mut id = vec![0.0; n * n];
        for i in 0..n {
            id[i * n + i] = 1.0;
        }
        id
    } else {
        Vec::new()
    };

    let mut d: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    let mut b = d.clone();
    let mut z = vec![0.0; n];

    let scale = frobenius(&a, n).max(1.0);
    let tol = OFF_TOLERANCE * scale;

    let mut converged = false;
    for sweep in 0..MAX_SWEEPS {
        let off = off_frobenius(&a, n);
        if off <= tol {
            converged = true;
            break;
        }
        // Small threshold on the first sweeps avoids rotations that only
        // shuffle rounding noise around.
        let thresh = if sweep < 3 {
            0.2 * off * off / ((n * n) as f64)
        } else {
            0.0
        };

        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = a[p * n + q];
                let g = 100.0 * apq.abs();
                if sweep > 4 && d[p].abs() + g == d[p].abs() && d[q].abs() + g == d[q].abs() {
                    a[p * n + q] = 0.0;
                    continue;
                }
                if apq.abs() <= thresh {
                    continue;
                }
                let h = d[q] - d[p];
                let t = if h.abs() + g == h.abs() {
                    apq / h
                } else {
                    let theta = 0.5 * h / apq;
                    let mut t = 1.0 / (theta.abs() + (1.0 + theta * theta).sqrt());
                    if theta < 0.0 {
                        t = -t;
                    }
                    t
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);
                let h = t * apq;
                z[p] -= h;
                z[q] += h;
                d[p] -= h;
                d[q] += h;
                a[p * n + q] = 0.0;

                // Rotate the three segments of rows/columns p and q stored
                // in the upper triangle.
                for j in 0..p {
                    rotate(&mut a, j * n + p, j * n + q, s, tau);
                }
                for j in p + 1..q {
                    rotate(&mut a, p * n + j, j * n + q, s, tau);
                }
                for j in q + 1..n {
                    rotate(&mut a, p * n + j, q * n + j, s, tau);
                }
                if want_vectors {
                    for j in 0..n {
                        rotate(&mut v, j * n + p, j * n + q, s, tau);
                    }
                }
            }
        }

        for i in 0..n {
            b[i] += z[i];
            d[i] = b[i];
            z[i] = 0.0;
        }
    }

    if !converged && off_frobenius(&a, n) > tol {
        return Err(Error::EigenConvergence {
            dim: n,
            sweeps: MAX_SWEEPS,
        });
    }

    // Sort ascending, permuting eigenvectors along.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| d[i].partial_cmp(&d[j]).unwrap());
    let values: Vec<f64> = order.iter().map(|&i| d[i]).collect();
    let vectors = want_vectors.then(|| {
        DMatrix::from_fn(n, n, |i, col| v[i * n + order[col]])
    });
    Ok((values, vectors))
}

#[inline(always)]
fn rotate(a: &mut [f64], i: usize, j: usize, s: f64, tau: f64) {
    let g = a[i];
    let h = a[j];
    a[i] = g - s * (h + g * tau);
    a[j] = h + s * (g - h * tau);
}

fn frobenius(a: &[f64], n: usize) -> f64 {
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            let x = a[i * n + j];
            sum += x * x;
        }
    }
    sum.sqrt()
}

/// Frobenius norm of the strict upper triangle, doubled for symmetry.
fn off_frobenius(a: &[f64], n: usize) -> f64 {
    let mut sum = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            let x = a[i * n + j];
            sum += 2.0 * x * x;
        }
    }
    sum.sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::seeded_rng;
    use rand::Rng;

    fn random_symmetric(n: usize, seed: u64) -> DMatrix<f64> {
        let mut rng = seeded_rng(seed);
        let mut m = DMatrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let x: f64 = rng.gen_range(-1.0..1.0);
                m[(i, j)] = x;
                m[(j, i)] = x;
            }
        }
        m
    }

    #[test]
    fn reconstructs_random_matrices() {
        for (k, &n) in [2usize, 5, 17, 50].iter().enumerate() {
            let m = random_symmetric(n, 100 + k as u64);
            let (vals, vecs) = symmetric_eigen(&m, true).unwrap();
            let v = vecs.unwrap();
            let d = DMatrix::from_diagonal(&nalgebra::DVector::from_vec(vals.clone()));
            let rec = &v * d * v.transpose();
            assert!((&rec - &m).norm() < 1e-10, "n={n}");
            let orth = &v * v.transpose() - DMatrix::identity(n, n);
            assert!(orth.norm() < 1e-10, "n={n}");
            for w in vals.windows(2) {
                assert!(w[0] <= w[1]);
            }
        }
    }

    #[test]
    fn two_by_two_exact() {
        let m = DMatrix::from_row_slice(2, 2, &[0.0, 1.0, 1.0, 0.0]);
        let (vals, _) = symmetric_eigen(&m, false).unwrap();
        assert!((vals[0] + 1.0).abs() < 1e-14);
        assert!((vals[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn zero_and_diagonal_matrices() {
        let z = DMatrix::zeros(3, 3);
        let (vals, _) = symmetric_eigen(&z, false).unwrap();
        assert_eq!(vals, vec![0.0; 3]);

        let d = DMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![3.0, -1.0, 2.0]));
        let (vals, vecs) = symmetric_eigen(&d, true).unwrap();
        assert_eq!(vals, vec![-1.0, 2.0, 3.0]);
        let v = vecs.unwrap();
        assert!((v.column(0)[1].abs() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn large_scale_matrix_converges() {
        // entries of magnitude ~1e6: the relative threshold must still allow
        // convergence.
        let m = random_symmetric(20, 7) * 1.0e6;
        let (vals, vecs) = symmetric_eigen(&m, true).unwrap();
        let v = vecs.unwrap();
        let d = DMatrix::from_diagonal(&nalgebra::DVector::from_vec(vals));
        let rec = &v * d * v.transpose();
        assert!((&rec - &m).norm() / m.norm() < 1e-12);
    }
}
