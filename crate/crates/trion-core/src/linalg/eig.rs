//! Eigenvalue solvers.
//!
//! General complex spectra come from a Householder reduction to upper
//! Hessenberg form followed by an explicitly shifted QR iteration with
//! Givens rotations (Wilkinson shifts, exceptional shifts on stagnation).
//! Hermitian eigensystems use a cyclic complex Jacobi iteration, which also
//! returns an orthonormal eigenvector basis.

use alloc::{vec, vec::Vec};

use num_traits::Float;

use crate::error::{Error, Result};
use crate::linalg::matrix::{ComplexMatrix, C64};

const ZERO: C64 = C64::new(0.0, 0.0);

/// Eigenvalues of a general square complex matrix, in no particular order.
pub fn eigenvalues(m: &ComplexMatrix) -> Result<Vec<C64>> {
    let n = m.require_square()?;
    match n {
        0 => return Ok(Vec::new()),
        1 => return Ok(vec![m[(0, 0)]]),
        _ => {}
    }
    let mut h = m.clone();
    hessenberg_in_place(&mut h);
    hessenberg_qr_eigenvalues(&mut h)
}

fn hessenberg_in_place(h: &mut ComplexMatrix) {
    let n = h.rows();
    for k in 0..n.saturating_sub(2) {
        let mut norm_sq = 0.0;
        for i in (k + 1)..n {
            norm_sq += h[(i, k)].norm_sqr();
        }
        let norm = norm_sq.sqrt();
        if norm <= f64::EPSILON * h.max_abs() {
            continue;
        }
        let x0 = h[(k + 1, k)];
        let phase = if x0.norm() > 0.0 {
            x0 / x0.norm()
        } else {
            C64::new(1.0, 0.0)
        };
        let alpha = -phase * norm;

        // Householder vector v = x - alpha e1, normalized.
        let mut v = vec![ZERO; n - k - 1];
        for i in 0..v.len() {
            v[i] = h[(k + 1 + i, k)];
        }
        v[0] -= alpha;
        let vnorm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if vnorm == 0.0 {
            continue;
        }
        for z in v.iter_mut() {
            *z /= vnorm;
        }

        // Left: rows k+1..n of columns k..n.
        for j in k..n {
            let w: C64 = v
                .iter()
                .enumerate()
                .map(|(i, vi)| vi.conj() * h[(k + 1 + i, j)])
                .sum();
            let w2 = w * 2.0;
            for (i, vi) in v.iter().enumerate() {
                let delta = vi * w2;
                h[(k + 1 + i, j)] -= delta;
            }
        }
        // Right: columns k+1..n of all rows.
        for i in 0..n {
            let w: C64 = v
                .iter()
                .enumerate()
                .map(|(j, vj)| h[(i, k + 1 + j)] * vj)
                .sum();
            let w2 = w * 2.0;
            for (j, vj) in v.iter().enumerate() {
                let delta = w2 * vj.conj();
                h[(i, k + 1 + j)] -= delta;
            }
        }
        // Entries below the subdiagonal are now zero by construction.
        h[(k + 1, k)] = alpha;
        for i in (k + 2)..n {
            h[(i, k)] = ZERO;
        }
    }
}

/// Eigenvalues of the 2x2 block [[a, b], [c, d]].
fn eig2(a: C64, b: C64, c: C64, d: C64) -> (C64, C64) {
    let mean = (a + d) * 0.5;
    let det = a * d - b * c;
    let disc = (mean * mean - det).sqrt();
    let l1 = if (mean + disc).norm() >= (mean - disc).norm() {
        mean + disc
    } else {
        mean - disc
    };
    if l1.norm() > 0.0 {
        (l1, det / l1)
    } else {
        (l1, mean - disc)
    }
}

/// Givens rotation G = [[c, s], [-conj(s), c]] (c real) with G(a, b) = (r, 0).
fn givens(a: C64, b: C64) -> (f64, C64) {
    let bn = b.norm();
    if bn == 0.0 {
        return (1.0, ZERO);
    }
    let an = a.norm();
    if an == 0.0 {
        return (0.0, b.conj() / bn);
    }
    let m = (an * an + bn * bn).sqrt();
    ((an / m), (a / an) * b.conj() / m)
}

fn hessenberg_qr_eigenvalues(h: &mut ComplexMatrix) -> Result<Vec<C64>> {
    let n = h.rows();
    let scale = h.max_abs().max(f64::MIN_POSITIVE);
    let mut eigs: Vec<C64> = Vec::with_capacity(n);
    let mut hi = n - 1;
    let mut iters = 0usize;

    loop {
        // Deflate: find the start of the trailing irreducible block.
        let mut lo = hi;
        while lo > 0 {
            let s = h[(lo - 1, lo - 1)].norm() + h[(lo, lo)].norm();
            let s = if s == 0.0 { scale } else { s };
            if h[(lo, lo - 1)].norm() <= f64::EPSILON * s {
                h[(lo, lo - 1)] = ZERO;
                break;
            }
            lo -= 1;
        }

        if lo == hi {
            eigs.push(h[(hi, hi)]);
            if hi == 0 {
                break;
            }
            hi -= 1;
            iters = 0;
            continue;
        }
        if lo + 1 == hi {
            let (l1, l2) = eig2(h[(lo, lo)], h[(lo, hi)], h[(hi, lo)], h[(hi, hi)]);
            eigs.push(l1);
            eigs.push(l2);
            if lo == 0 {
                break;
            }
            hi = lo - 1;
            iters = 0;
            continue;
        }

        iters += 1;
        if iters > 60 {
            return Err(Error::EigenNoConvergence);
        }

        // Wilkinson shift: trailing 2x2 eigenvalue closest to the corner.
        let (l1, l2) = eig2(
            h[(hi - 1, hi - 1)],
            h[(hi - 1, hi)],
            h[(hi, hi - 1)],
            h[(hi, hi)],
        );
        let corner = h[(hi, hi)];
        let mut shift = if (l1 - corner).norm() <= (l2 - corner).norm() {
            l1
        } else {
            l2
        };
        if iters % 12 == 0 {
            // Exceptional shift to break symmetric stagnation.
            shift = corner + C64::new(h[(hi, hi - 1)].norm() + h[(hi - 1, hi - 2)].norm(), 0.0);
        }

        for i in lo..=hi {
            h[(i, i)] -= shift;
        }
        // QR by Givens on the window, eigenvalue-only: the deflated block
        // outside [lo, hi] cannot influence the remaining spectrum.
        let mut rots: Vec<(f64, C64)> = Vec::with_capacity(hi - lo);
        for i in lo..hi {
            let (c, s) = givens(h[(i, i)], h[(i + 1, i)]);
            for j in i..=hi {
                let t1 = h[(i, j)];
                let t2 = h[(i + 1, j)];
                h[(i, j)] = t1 * c + s * t2;
                h[(i + 1, j)] = -s.conj() * t1 + t2 * c;
            }
            rots.push((c, s));
        }
        // RQ: apply G_i^dagger from the right on column pairs.
        for (idx, (c, s)) in rots.iter().enumerate() {
            let i = lo + idx;
            for r in lo..=hi {
                let t1 = h[(r, i)];
                let t2 = h[(r, i + 1)];
                h[(r, i)] = t1 * *c + s.conj() * t2;
                h[(r, i + 1)] = -*s * t1 + t2 * *c;
            }
        }
        for i in lo..=hi {
            h[(i, i)] += shift;
        }
    }
    Ok(eigs)
}

/// Eigenvalues (ascending) and orthonormal eigenvector columns of a
/// Hermitian matrix, by cyclic complex Jacobi rotations.
pub fn hermitian_eigensystem(m: &ComplexMatrix) -> Result<(Vec<f64>, ComplexMatrix)> {
    let n = m.require_square()?;
    let dev = m.hermitian_deviation();
    if dev > 1e-8 * m.frobenius_norm().max(1.0) {
        return Err(Error::NotHermitian { deviation: dev });
    }
    if n == 0 {
        return Ok((Vec::new(), ComplexMatrix::zeros(0, 0)));
    }

    let mut a = m.hermitian_part();
    let mut u = ComplexMatrix::identity(n);
    let scale = a.frobenius_norm().max(f64::MIN_POSITIVE);

    for _sweep in 0..60 {
        let mut off = 0.0;
        for p in 0..n {
            for q in (p + 1)..n {
                off += a[(p, q)].norm_sqr();
            }
        }
        if off.sqrt() <= 1e-14 * scale {
            break;
        }
        for p in 0..(n - 1) {
            for q in (p + 1)..n {
                let apq = a[(p, q)];
                let beta = apq.norm();
                if beta == 0.0 {
                    continue;
                }
                let phase = apq / beta;
                let alpha = a[(p, p)].re;
                let delta = a[(q, q)].re;
                let tau = (delta - alpha) / (2.0 * beta);
                let t = if tau == 0.0 {
                    1.0
                } else {
                    tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;

                // Unitary in the (p, q) plane: [[c, s], [-s*conj(u), c*conj(u)]]
                // with u the phase of a_pq; reduces to a real Jacobi rotation.
                let su = C64::new(s, 0.0) * phase.conj();
                let cu = C64::new(c, 0.0) * phase.conj();

                // A <- V^dagger A V, column part first.
                for k in 0..n {
                    let akp = a[(k, p)];
                    let akq = a[(k, q)];
                    a[(k, p)] = akp * c - su * akq;
                    a[(k, q)] = C64::new(s, 0.0) * akp + cu * akq;
                }
                for k in 0..n {
                    let apk = a[(p, k)];
                    let aqk = a[(q, k)];
                    a[(p, k)] = apk * c - su.conj() * aqk;
                    a[(q, k)] = C64::new(s, 0.0) * apk + cu.conj() * aqk;
                }
                a[(p, q)] = ZERO;
                a[(q, p)] = ZERO;
                a[(p, p)] = C64::new(a[(p, p)].re, 0.0);
                a[(q, q)] = C64::new(a[(q, q)].re, 0.0);

                for k in 0..n {
                    let ukp = u[(k, p)];
                    let ukq = u[(k, q)];
                    u[(k, p)] = ukp * c - su * ukq;
                    u[(k, q)] = C64::new(s, 0.0) * ukp + cu * ukq;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.partial_cmp(&a[(j, j)].re).unwrap());
    let values: Vec<f64> = order.iter().map(|&i| a[(i, i)].re).collect();
    let vectors = ComplexMatrix::from_fn(n, n, |i, j| u[(i, order[j])]);
    Ok((values, vectors))
}
