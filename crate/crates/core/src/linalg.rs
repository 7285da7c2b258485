//! Small dense linear-algebra helpers for symmetric matrices: Cholesky with
//! a reverse-mode rule, triangular solves, and a Jacobi eigensolver used by
//! validity checks. Matrices here are modest (readout- and layer-sized), so
//! simple O(n^3) routines are fine.

use ndarray::{Array1, Array2};

use crate::error::{Error, Result};

/// In-place symmetrization `A <- (A + A^T)/2`, suppressing round-off drift
/// after bilinear forms.
pub fn symmetrize(a: &mut Array2<f64>) {
    let n = a.nrows();
    debug_assert_eq!(n, a.ncols());
    for i in 0..n {
        for j in (i + 1)..n {
            let m = 0.5 * (a[[i, j]] + a[[j, i]]);
            a[[i, j]] = m;
            a[[j, i]] = m;
        }
    }
}

/// Lower-triangular Cholesky factor of `c + jitter*I`.
///
/// Fails with a numerical error if a pivot is not positive, which means the
/// matrix is indefinite beyond what the jitter can absorb.
pub fn cholesky_lower(c: &Array2<f64>, jitter: f64) -> Result<Array2<f64>> {
    let n = c.nrows();
    if c.ncols() != n {
        return Err(Error::shape(format!("cholesky needs a square matrix, got {}x{}", n, c.ncols())));
    }
    let mut l = Array2::<f64>::zeros((n, n));
    for i in 0..n {
        for j in 0..=i {
            let mut s = c[[i, j]];
            if i == j {
                s += jitter;
            }
            for k in 0..j {
                s -= l[[i, k]] * l[[j, k]];
            }
            if i == j {
                if s <= 0.0 || !s.is_finite() {
                    return Err(Error::numerical(format!(
                        "cholesky pivot {} is {:.3e} after jitter {:.1e}; matrix indefinite",
                        i, s, jitter
                    )));
                }
                l[[i, j]] = s.sqrt();
            } else {
                l[[i, j]] = s / l[[j, j]];
            }
        }
    }
    Ok(l)
}

/// Reverse-mode rule for the Cholesky factorization `C = L L^T`.
///
/// Given the gradient `grad_l` with respect to the lower factor, returns the
/// symmetric gradient with respect to `C`:
/// `dC = Phi(L^T dL)` conjugated back by `L^{-T} . L^{-1}` and symmetrized,
/// where `Phi` takes the lower triangle with the diagonal halved.
pub fn cholesky_backward(l: &Array2<f64>, grad_l: &Array2<f64>) -> Array2<f64> {
    let n = l.nrows();
    // P = Phi(L^T G)
    let mut p = l.t().dot(grad_l);
    for i in 0..n {
        p[[i, i]] *= 0.5;
        for j in (i + 1)..n {
            p[[i, j]] = 0.0;
        }
    }
    // S = L^{-T} P L^{-1}: solve L^T X = P, then (L^T S^T = X^T) per column.
    let x = solve_lower_transpose_mat(l, &p);
    let mut s = solve_lower_transpose_mat(l, &x.t().to_owned());
    s = s.t().to_owned();
    let mut grad_c = 0.5 * (&s + &s.t());
    symmetrize(&mut grad_c);
    grad_c
}

/// Solve `L y = b` for lower-triangular `L`.
pub fn solve_lower(l: &Array2<f64>, b: &Array1<f64>) -> Array1<f64> {
    let n = l.nrows();
    let mut y = b.clone();
    for i in 0..n {
        for k in 0..i {
            let t = y[k];
            y[i] -= l[[i, k]] * t;
        }
        y[i] /= l[[i, i]];
    }
    y
}

/// Solve `L^T y = b` for lower-triangular `L`.
pub fn solve_lower_transpose(l: &Array2<f64>, b: &Array1<f64>) -> Array1<f64> {
    let n = l.nrows();
    let mut y = b.clone();
    for i in (0..n).rev() {
        for k in (i + 1)..n {
            let t = y[k];
            y[i] -= l[[k, i]] * t;
        }
        y[i] /= l[[i, i]];
    }
    y
}

fn solve_lower_transpose_mat(l: &Array2<f64>, b: &Array2<f64>) -> Array2<f64> {
    let n = l.nrows();
    let m = b.ncols();
    let mut y = b.clone();
    for col in 0..m {
        for i in (0..n).rev() {
            let mut s = y[[i, col]];
            for k in (i + 1)..n {
                s -= l[[k, i]] * y[[k, col]];
            }
            y[[i, col]] = s / l[[i, i]];
        }
    }
    y
}

/// Symmetric inverse via the Cholesky factor: `(L L^T)^{-1}`.
pub fn spd_inverse_from_cholesky(l: &Array2<f64>) -> Array2<f64> {
    let n = l.nrows();
    let mut inv = Array2::<f64>::zeros((n, n));
    for j in 0..n {
        let mut e = Array1::<f64>::zeros(n);
        e[j] = 1.0;
        let y = solve_lower(l, &e);
        let x = solve_lower_transpose(l, &y);
        inv.column_mut(j).assign(&x);
    }
    symmetrize(&mut inv);
    inv
}

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.
/// Used for positive-semidefiniteness checks in tests and validation.
pub fn symmetric_eigenvalues(a: &Array2<f64>) -> Vec<f64> {
    let n = a.nrows();
    let mut m = a.clone();
    symmetrize(&mut m);
    for _sweep in 0..64 {
        let mut off = 0.0;
        for i in 0..n {
            for j in (i + 1)..n {
                off += m[[i, j]] * m[[i, j]];
            }
        }
        let scale: f64 = (0..n).map(|i| m[[i, i]].abs()).fold(1e-300, f64::max);
        if off.sqrt() <= 1e-14 * scale * n as f64 {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = m[[p, q]];
                if apq.abs() <= 1e-300 {
                    continue;
                }
                let theta = (m[[q, q]] - m[[p, p]]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let mkp = m[[k, p]];
                    let mkq = m[[k, q]];
                    m[[k, p]] = c * mkp - s * mkq;
                    m[[k, q]] = s * mkp + c * mkq;
                }
                for k in 0..n {
                    let mpk = m[[p, k]];
                    let mqk = m[[q, k]];
                    m[[p, k]] = c * mpk - s * mqk;
                    m[[q, k]] = s * mpk + c * mqk;
                }
            }
        }
    }
    let mut ev: Vec<f64> = (0..n).map(|i| m[[i, i]]).collect();
    ev.sort_by(|a, b| a.partial_cmp(b).unwrap());
    ev
}
