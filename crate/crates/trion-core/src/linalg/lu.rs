//! LU factorization with partial pivoting for complex systems.

use alloc::{vec, vec::Vec};


use crate::error::{Error, Result};
use crate::linalg::matrix::{ComplexMatrix, C64};

/// Packed LU factors of a square matrix, with the pivot permutation.
#[derive(Debug)]
pub struct LuFactors {
    lu: ComplexMatrix,
    pivots: Vec<usize>,
    swaps: usize,
}

/// Factor `a = P L U` with partial pivoting.
///
/// Fails with [`Error::SingularSystem`] when a pivot falls below
/// `n * eps * max|a|`; the error carries the ratio of the largest to the
/// smallest pivot seen as a cheap conditioning estimate.
pub fn lu_factor(a: &ComplexMatrix) -> Result<LuFactors> {
    let n = a.require_square()?;
    let mut lu = a.clone();
    let mut pivots = vec![0usize; n];
    let mut swaps = 0usize;

    let scale = lu.max_abs();
    let tiny = f64::EPSILON * scale * n as f64;
    let mut max_pivot: f64 = 0.0;
    let mut min_pivot = f64::INFINITY;

    for k in 0..n {
        let mut p = k;
        let mut best = lu[(k, k)].norm();
        for i in (k + 1)..n {
            let v = lu[(i, k)].norm();
            if v > best {
                best = v;
                p = i;
            }
        }
        pivots[k] = p;
        if p != k {
            for j in 0..n {
                let tmp = lu[(k, j)];
                lu[(k, j)] = lu[(p, j)];
                lu[(p, j)] = tmp;
            }
            swaps += 1;
        }
        let pivot = lu[(k, k)];
        let mag = pivot.norm();
        if mag <= tiny {
            let condition = if min_pivot.is_finite() && min_pivot > 0.0 {
                max_pivot / min_pivot.min(mag.max(f64::MIN_POSITIVE))
            } else {
                f64::INFINITY
            };
            return Err(Error::SingularSystem { condition });
        }
        max_pivot = max_pivot.max(mag);
        min_pivot = min_pivot.min(mag);

        for i in (k + 1)..n {
            let factor = lu[(i, k)] / pivot;
            lu[(i, k)] = factor;
            if factor != C64::new(0.0, 0.0) {
                for j in (k + 1)..n {
                    let v = lu[(k, j)];
                    lu[(i, j)] -= factor * v;
                }
            }
        }
    }

    Ok(LuFactors { lu, pivots, swaps })
}

impl LuFactors {
    pub fn dim(&self) -> usize {
        self.lu.rows()
    }

    /// Ratio of largest to smallest pivot magnitude; a cheap conditioning proxy.
    pub fn pivot_ratio(&self) -> f64 {
        let n = self.dim();
        let mut max_p: f64 = 0.0;
        let mut min_p = f64::INFINITY;
        for k in 0..n {
            let m = self.lu[(k, k)].norm();
            max_p = max_p.max(m);
            min_p = min_p.min(m);
        }
        max_p / min_p
    }

    /// Solve `a x = b` for one right-hand side.
    pub fn solve(&self, b: &[C64]) -> Result<Vec<C64>> {
        let n = self.dim();
        if b.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: b.len(),
            });
        }
        let mut x = b.to_vec();
        for k in 0..n {
            x.swap(k, self.pivots[k]);
        }
        // forward: L y = P b (unit lower triangle)
        for i in 1..n {
            let mut acc = x[i];
            for j in 0..i {
                acc -= self.lu[(i, j)] * x[j];
            }
            x[i] = acc;
        }
        // backward: U x = y
        for i in (0..n).rev() {
            let mut acc = x[i];
            for j in (i + 1)..n {
                acc -= self.lu[(i, j)] * x[j];
            }
            x[i] = acc / self.lu[(i, i)];
        }
        Ok(x)
    }

    /// Determinant from the factorization.
    pub fn det(&self) -> C64 {
        let n = self.dim();
        let mut d = C64::new(if self.swaps % 2 == 0 { 1.0 } else { -1.0 }, 0.0);
        for k in 0..n {
            d *= self.lu[(k, k)];
        }
        d
    }
}

/// One-shot solve of `a x = b`.
pub fn solve(a: &ComplexMatrix, b: &[C64]) -> Result<Vec<C64>> {
    lu_factor(a)?.solve(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn random_matrix(rng: &mut StdRng, n: usize) -> ComplexMatrix {
        ComplexMatrix::from_fn(n, n, |_, _| {
            C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
        })
    }

    #[test]
    fn solve_recovers_known_solution() {
        let mut rng = StdRng::seed_from_u64(7);
        for n in [2usize, 5, 17] {
            let a = random_matrix(&mut rng, n);
            let x0: alloc::vec::Vec<C64> = (0..n)
                .map(|_| C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
                .collect();
            let b = a.matvec(&x0).unwrap();
            let x = solve(&a, &b).unwrap();
            // residual check oracle
            let r = a.matvec(&x).unwrap();
            let bnorm = b.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            let res = r
                .iter()
                .zip(&b)
                .map(|(u, v)| (u - v).norm_sqr())
                .sum::<f64>()
                .sqrt();
            assert!(res <= 1e-10 * bnorm, "residual {res:.3e} for n={n}");
        }
    }

    #[test]
    fn singular_matrix_is_reported() {
        let mut a = ComplexMatrix::zeros(3, 3);
        a[(0, 0)] = C64::new(1.0, 0.0);
        a[(0, 1)] = C64::new(2.0, 0.0);
        a[(1, 0)] = C64::new(0.5, 0.0);
        a[(1, 1)] = C64::new(1.0, 0.0); // row 1 = row 0 / 2
        a[(2, 2)] = C64::new(1.0, 0.0);
        match lu_factor(&a) {
            Err(Error::SingularSystem { condition }) => assert!(condition > 0.0),
            other => panic!("expected singular system, got {other:?}"),
        }
    }

    #[test]
    fn det_matches_diagonal_product_for_triangular() {
        let mut a = ComplexMatrix::zeros(3, 3);
        a[(0, 0)] = C64::new(2.0, 0.0);
        a[(1, 1)] = C64::new(0.0, 3.0);
        a[(2, 2)] = C64::new(-1.0, 0.0);
        a[(0, 2)] = C64::new(5.0, 1.0);
        let f = lu_factor(&a).unwrap();
        let d = f.det();
        assert!((d - C64::new(0.0, -6.0)).norm() < 1e-12);
    }
}
