//! Eigenvalues of symmetric matrices via cyclic Jacobi rotations.

use thiserror::Error;

use crate::matrix::SymmetricMatrix;
use crate::Tolerances;

/// Eigenvalues of one symmetric matrix, sorted nonincreasing, together with
/// a grouping of near-equal values into `(value, multiplicity)` clusters.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
    grouped: Vec<(f64, usize)>,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SolveError {
    #[error("cannot solve an empty matrix")]
    EmptyMatrix,
    #[error(
        "Jacobi iteration did not converge after {sweeps} sweeps \
         (off-diagonal norm {off:.3e}, target {target:.3e})"
    )]
    NoConvergence { sweeps: usize, off: f64, target: f64 },
}

impl Spectrum {
    fn from_sorted(values: Vec<f64>, group_tol: f64) -> Self {
        let grouped = group_values(&values, group_tol);
        Self { values, grouped }
    }

    /// All eigenvalues, nonincreasing.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// `(value, multiplicity)` clusters; the value is the cluster mean.
    pub fn grouped(&self) -> &[(f64, usize)] {
        &self.grouped
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }

    pub fn min(&self) -> f64 {
        *self.values.last().unwrap_or(&0.0)
    }

    pub fn max(&self) -> f64 {
        *self.values.first().unwrap_or(&0.0)
    }
}

/// Computes all eigenvalues of `m` by row-cyclic Jacobi sweeps, iterating
/// until the off-diagonal Frobenius norm drops below
/// `tau_solve * ||m||_F`. Grouping uses `tau_group * max(1, ||m||_F)`.
pub fn eigenvalues(m: &SymmetricMatrix, tol: &Tolerances) -> Result<Spectrum, SolveError> {
    let (values, fro) = jacobi(m, tol)?;
    Ok(Spectrum::from_sorted(values, tol.tau_group * fro.max(1.0)))
}

/// Like [`eigenvalues`], for matrices known to be positive semidefinite:
/// values within the grouping tolerance of zero are clipped to exactly
/// zero before grouping.
pub fn eigenvalues_psd(m: &SymmetricMatrix, tol: &Tolerances) -> Result<Spectrum, SolveError> {
    let (mut values, fro) = jacobi(m, tol)?;
    let clip = tol.tau_group * fro.max(1.0);
    for v in &mut values {
        if v.abs() <= clip {
            *v = 0.0;
        }
    }
    Ok(Spectrum::from_sorted(values, clip))
}

/// Returns the sorted eigenvalues plus the Frobenius norm of the input.
fn jacobi(m: &SymmetricMatrix, tol: &Tolerances) -> Result<(Vec<f64>, f64), SolveError> {
    let n = m.dim();
    if n == 0 {
        return Err(SolveError::EmptyMatrix);
    }
    let fro = m.frobenius_norm();
    let target = tol.tau_solve * fro;
    let mut a: Vec<f64> = m.entries().to_vec();
    let at = |a: &[f64], i: usize, j: usize| a[i * n + j];

    let off_norm = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in (i + 1)..n {
                s += 2.0 * at(a, i, j) * at(a, i, j);
            }
        }
        s.sqrt()
    };

    let mut sweeps = 0;
    while off_norm(&a) > target {
        if sweeps == tol.max_sweeps {
            return Err(SolveError::NoConvergence {
                sweeps,
                off: off_norm(&a),
                target,
            });
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                // smaller-angle root of t^2 + 2 t theta - 1 = 0
                let t = if theta.abs() > 1e12 {
                    0.5 / theta
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;

                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    let new_kp = c * akp - s * akq;
                    let new_kq = s * akp + c * akq;
                    a[k * n + p] = new_kp;
                    a[p * n + k] = new_kp;
                    a[k * n + q] = new_kq;
                    a[q * n + k] = new_kq;
                }
                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
            }
        }
        sweeps += 1;
    }

    let mut values: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    values.sort_by(|x, y| y.total_cmp(x));
    Ok((values, fro))
}

/// Consecutive-linkage clustering of a nonincreasing value list.
fn group_values(sorted: &[f64], tol: f64) -> Vec<(f64, usize)> {
    let mut grouped: Vec<(f64, usize)> = Vec::new();
    let mut start = 0;
    for i in 0..sorted.len() {
        let next_breaks = i + 1 == sorted.len() || sorted[i] - sorted[i + 1] > tol;
        if next_breaks {
            let count = i + 1 - start;
            let mean = sorted[start..=i].iter().sum::<f64>() / count as f64;
            grouped.push((mean, count));
            start = i + 1;
        }
    }
    grouped
}
