//! Subsystem layout and operator construction on the joint Hilbert space.
//!
//! The subsystem ordering is fixed once for the whole crate:
//! index 0 = resonator 1, index 1 = resonator 2, index 2 = atom, so a basis
//! ket reads |n1 n2 a> with resonator 1 most significant in the Kronecker
//! ordering. Every embedding and partial trace uses this single convention.

use alloc::{vec, vec::Vec};

use num_traits::Float;

use crate::error::{Error, Result};
use crate::linalg::matrix::{ComplexMatrix, C64};

/// Subsystem slot of the first (driven, atom-coupled) resonator.
pub const RESONATOR_1: usize = 0;
/// Subsystem slot of the second resonator.
pub const RESONATOR_2: usize = 1;
/// Subsystem slot of the two-level atom.
pub const ATOM: usize = 2;

/// Ordered subsystem dimensions of a joint Hilbert space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertLayout {
    dims: Vec<usize>,
}

impl HilbertLayout {
    /// Layout from explicit subsystem dimensions (each at least 2).
    pub fn new(dims: &[usize]) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::InvalidArgument {
                detail: "layout needs at least one subsystem",
            });
        }
        for &d in dims {
            if d < 2 {
                return Err(Error::InvalidDimension { dim: d });
            }
        }
        Ok(Self {
            dims: dims.to_vec(),
        })
    }

    /// The standard layout [n_max+1, n_max+1, 2]: two resonators truncated
    /// at `n_max` photons each, plus the atom.
    pub fn resonators_atom(n_max: usize) -> Result<Self> {
        if n_max < 1 {
            return Err(Error::InvalidArgument {
                detail: "n_max must be at least 1",
            });
        }
        Self::new(&[n_max + 1, n_max + 1, 2])
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn subsystem_count(&self) -> usize {
        self.dims.len()
    }

    /// Product of all subsystem dimensions.
    pub fn total(&self) -> usize {
        self.dims.iter().product()
    }

    /// Flat index of the basis ket with the given per-subsystem occupation.
    pub fn basis_index(&self, occ: &[usize]) -> Result<usize> {
        if occ.len() != self.dims.len() {
            return Err(Error::DimensionMismatch {
                expected: self.dims.len(),
                found: occ.len(),
            });
        }
        let mut idx = 0;
        for (o, d) in occ.iter().zip(&self.dims) {
            if o >= d {
                return Err(Error::InvalidArgument {
                    detail: "occupation exceeds subsystem dimension",
                });
            }
            idx = idx * d + o;
        }
        Ok(idx)
    }

    /// Stride of subsystem `k` in the flat index.
    fn stride(&self, k: usize) -> usize {
        self.dims[k + 1..].iter().product()
    }
}

/// Bosonic annihilation operator on `d` levels: <n-1|a|n> = sqrt(n).
pub fn annihilation(d: usize) -> Result<ComplexMatrix> {
    if d < 2 {
        return Err(Error::InvalidDimension { dim: d });
    }
    let mut a = ComplexMatrix::zeros(d, d);
    for n in 1..d {
        a[(n - 1, n)] = C64::new((n as f64).sqrt(), 0.0);
    }
    Ok(a)
}

/// Photon number operator a^dagger a on `d` levels.
pub fn number_operator(d: usize) -> Result<ComplexMatrix> {
    if d < 2 {
        return Err(Error::InvalidDimension { dim: d });
    }
    Ok(ComplexMatrix::from_fn(d, d, |i, j| {
        if i == j {
            C64::new(i as f64, 0.0)
        } else {
            C64::new(0.0, 0.0)
        }
    }))
}

/// Atomic lowering operator |g><e| in the ordered basis (|0>=ground, |1>=excited).
pub fn sigma_minus() -> ComplexMatrix {
    let mut s = ComplexMatrix::zeros(2, 2);
    s[(0, 1)] = C64::new(1.0, 0.0);
    s
}

/// Atomic raising operator, the adjoint of [`sigma_minus`].
pub fn sigma_plus() -> ComplexMatrix {
    sigma_minus().adjoint()
}

/// Pauli z with ground-state eigenvalue -1.
pub fn sigma_z() -> ComplexMatrix {
    ComplexMatrix::diag_real(&[-1.0, 1.0])
}

/// Embed a single-subsystem operator into the joint space:
/// identity (x) ... (x) op (x) ... (x) identity per the layout ordering.
pub fn embed(op: &ComplexMatrix, slot: usize, layout: &HilbertLayout) -> Result<ComplexMatrix> {
    if slot >= layout.subsystem_count() {
        return Err(Error::InvalidSubsystem {
            index: slot,
            count: layout.subsystem_count(),
        });
    }
    let d = layout.dims()[slot];
    if op.rows() != d || op.cols() != d {
        return Err(Error::InvalidEmbedding {
            slot,
            op_dim: op.rows(),
            slot_dim: d,
        });
    }
    let mut out = ComplexMatrix::identity(1);
    for (k, &dk) in layout.dims().iter().enumerate() {
        if k == slot {
            out = out.kron(op);
        } else {
            out = out.kron(&ComplexMatrix::identity(dk));
        }
    }
    Ok(out)
}

/// Partial trace keeping the listed subsystems (ascending layout order).
///
/// The result acts on the kept subsystems only; its trace equals the trace
/// of the input.
pub fn partial_trace(
    rho: &ComplexMatrix,
    layout: &HilbertLayout,
    keep: &[usize],
) -> Result<ComplexMatrix> {
    let n = rho.require_square()?;
    if n != layout.total() {
        return Err(Error::DimensionMismatch {
            expected: layout.total(),
            found: n,
        });
    }
    if keep.is_empty() {
        return Err(Error::InvalidArgument {
            detail: "partial trace needs a non-empty keep set",
        });
    }
    let mut kept: Vec<usize> = keep.to_vec();
    kept.sort_unstable();
    kept.dedup();
    for &k in &kept {
        if k >= layout.subsystem_count() {
            return Err(Error::InvalidSubsystem {
                index: k,
                count: layout.subsystem_count(),
            });
        }
    }
    let traced: Vec<usize> = (0..layout.subsystem_count())
        .filter(|k| !kept.contains(k))
        .collect();

    let offsets = |subsys: &[usize]| -> Vec<usize> {
        // all flat offsets reachable by the listed subsystems (mixed radix)
        let mut out = vec![0usize];
        for &k in subsys {
            let stride = layout.stride(k);
            let d = layout.dims()[k];
            let mut next = Vec::with_capacity(out.len() * d);
            for &base in &out {
                for v in 0..d {
                    next.push(base + v * stride);
                }
            }
            out = next;
        }
        out
    };
    let kept_offsets = offsets(&kept);
    let traced_offsets = offsets(&traced);

    let m = kept_offsets.len();
    let mut out = ComplexMatrix::zeros(m, m);
    for (i, &oi) in kept_offsets.iter().enumerate() {
        for (j, &oj) in kept_offsets.iter().enumerate() {
            let mut acc = C64::new(0.0, 0.0);
            for &ot in &traced_offsets {
                acc += rho[(oi + ot, oj + ot)];
            }
            out[(i, j)] = acc;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn annihilation_two_levels() {
        let a = annihilation(2).unwrap();
        assert_eq!(a[(0, 1)], c(1.0, 0.0));
        assert_eq!(a[(0, 0)], c(0.0, 0.0));
        assert_eq!(a[(1, 0)], c(0.0, 0.0));
        assert_eq!(a[(1, 1)], c(0.0, 0.0));
    }

    #[test]
    fn annihilation_sqrt_ladder() {
        let a = annihilation(3).unwrap();
        assert_eq!(a[(0, 1)], c(1.0, 0.0));
        assert!((a[(1, 2)] - c(2.0f64.sqrt(), 0.0)).norm() < 1e-15);
        assert_eq!(a[(2, 1)], c(0.0, 0.0));
    }

    #[test]
    fn annihilation_rejects_single_level() {
        assert!(matches!(
            annihilation(1),
            Err(Error::InvalidDimension { dim: 1 })
        ));
    }

    #[test]
    fn commutator_is_identity_on_lower_levels() {
        // [a, a^dagger] = 1 away from the truncation edge
        for d in [2usize, 3, 5] {
            let a = annihilation(d).unwrap();
            let ad = a.adjoint();
            let comm = &a.matmul(&ad).unwrap() - &ad.matmul(&a).unwrap();
            for i in 0..d - 1 {
                assert!((comm[(i, i)] - c(1.0, 0.0)).norm() < 1e-14);
            }
            // truncation artifact confined to the top level
            assert!((comm[(d - 1, d - 1)] - c(-((d - 1) as f64), 0.0)).norm() < 1e-14);
        }
    }

    #[test]
    fn sigma_operator_actions() {
        let sm = sigma_minus();
        let excited = [c(0.0, 0.0), c(1.0, 0.0)];
        let lowered = sm.matvec(&excited).unwrap();
        assert_eq!(lowered, alloc::vec![c(1.0, 0.0), c(0.0, 0.0)]);

        let sz = sigma_z();
        let ground = [c(1.0, 0.0), c(0.0, 0.0)];
        let gz = sz.matvec(&ground).unwrap();
        assert_eq!(gz, alloc::vec![c(-1.0, 0.0), c(0.0, 0.0)]);

        let proj = sigma_plus().matmul(&sigma_minus()).unwrap();
        assert_eq!(proj, ComplexMatrix::diag_real(&[0.0, 1.0]));
    }

    #[test]
    fn layout_validation_and_indexing() {
        assert!(HilbertLayout::new(&[2, 1, 2]).is_err());
        assert!(HilbertLayout::new(&[]).is_err());
        let l = HilbertLayout::resonators_atom(1).unwrap();
        assert_eq!(l.dims(), &[2, 2, 2]);
        assert_eq!(l.total(), 8);
        // |n1 n2 a>: resonator 1 most significant
        assert_eq!(l.basis_index(&[1, 0, 0]).unwrap(), 4);
        assert_eq!(l.basis_index(&[0, 1, 0]).unwrap(), 2);
        assert_eq!(l.basis_index(&[0, 0, 1]).unwrap(), 1);
    }

    #[test]
    fn embed_atom_operator_is_i4_kron_op() {
        let layout = HilbertLayout::new(&[2, 2, 2]).unwrap();
        let e = embed(&sigma_minus(), ATOM, &layout).unwrap();
        let want = ComplexMatrix::identity(4).kron(&sigma_minus());
        assert_eq!(e, want);
    }

    #[test]
    fn embed_identity_is_identity() {
        let layout = HilbertLayout::new(&[3, 2, 2]).unwrap();
        for slot in 0..3 {
            let d = layout.dims()[slot];
            let e = embed(&ComplexMatrix::identity(d), slot, &layout).unwrap();
            assert_eq!(e, ComplexMatrix::identity(layout.total()));
        }
    }

    #[test]
    fn embedded_operators_on_distinct_slots_commute() {
        let layout = HilbertLayout::new(&[3, 3, 2]).unwrap();
        let a = embed(&annihilation(3).unwrap(), RESONATOR_1, &layout).unwrap();
        let s = embed(&sigma_minus(), ATOM, &layout).unwrap();
        let comm = &a.matmul(&s).unwrap() - &s.matmul(&a).unwrap();
        assert!(comm.max_abs() < 1e-12);
    }

    #[test]
    fn embed_dimension_mismatch_rejected() {
        let layout = HilbertLayout::new(&[2, 2, 2]).unwrap();
        let a3 = annihilation(3).unwrap();
        assert!(matches!(
            embed(&a3, RESONATOR_1, &layout),
            Err(Error::InvalidEmbedding { .. })
        ));
    }

    #[test]
    fn partial_trace_of_product_state() {
        let layout = HilbertLayout::new(&[2, 3]).unwrap();
        let rho_a = ComplexMatrix::from_row_major(
            2,
            2,
            &[c(0.7, 0.0), c(0.1, 0.2), c(0.1, -0.2), c(0.3, 0.0)],
        )
        .unwrap();
        let mut rho_b = ComplexMatrix::zeros(3, 3);
        rho_b[(0, 0)] = c(0.5, 0.0);
        rho_b[(1, 1)] = c(0.25, 0.0);
        rho_b[(2, 2)] = c(0.25, 0.0);
        rho_b[(0, 2)] = c(0.1, 0.05);
        rho_b[(2, 0)] = c(0.1, -0.05);
        let joint = rho_a.kron(&rho_b);
        let back = partial_trace(&joint, &layout, &[0]).unwrap();
        assert!((&back - &rho_a).max_abs() < 1e-14);
        let back_b = partial_trace(&joint, &layout, &[1]).unwrap();
        assert!((&back_b - &rho_b).max_abs() < 1e-14);
    }

    #[test]
    fn partial_trace_reproduces_single_excitation_reduction() {
        // pure state c0|000> + c1|100> + c2|010> + c3|001>, reduce onto resonator 1
        let layout = HilbertLayout::resonators_atom(1).unwrap();
        let amps = [c(0.6, 0.1), c(0.4, -0.2), c(0.3, 0.3), c(0.2, 0.0)];
        let norm: f64 = amps.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        let amps: alloc::vec::Vec<C64> = amps.iter().map(|z| z / norm).collect();
        let (c0, c1, c2, c3) = (amps[0], amps[1], amps[2], amps[3]);

        let mut psi = alloc::vec![c(0.0, 0.0); 8];
        psi[layout.basis_index(&[0, 0, 0]).unwrap()] = c0;
        psi[layout.basis_index(&[1, 0, 0]).unwrap()] = c1;
        psi[layout.basis_index(&[0, 1, 0]).unwrap()] = c2;
        psi[layout.basis_index(&[0, 0, 1]).unwrap()] = c3;
        let rho = ComplexMatrix::from_fn(8, 8, |i, j| psi[i] * psi[j].conj());

        let r1 = partial_trace(&rho, &layout, &[RESONATOR_1]).unwrap();
        let pop0 = c0.norm_sqr() + c2.norm_sqr() + c3.norm_sqr();
        assert!((r1[(0, 0)] - c(pop0, 0.0)).norm() < 1e-14);
        assert!((r1[(0, 1)] - c0 * c1.conj()).norm() < 1e-14);
        assert!((r1[(1, 0)] - c1 * c0.conj()).norm() < 1e-14);
        assert!((r1[(1, 1)] - c(c1.norm_sqr(), 0.0)).norm() < 1e-14);
    }

    #[test]
    fn partial_trace_preserves_trace() {
        let layout = HilbertLayout::new(&[2, 2, 2]).unwrap();
        let g = ComplexMatrix::from_fn(8, 8, |i, j| c(0.1 * (i as f64 - j as f64), 0.05 * (i + j) as f64));
        let h = &g + &g.adjoint();
        for keep in [&[0usize][..], &[1], &[2], &[0, 2], &[0, 1, 2]] {
            let r = partial_trace(&h, &layout, keep).unwrap();
            assert!((r.trace() - h.trace()).norm() < 1e-12);
        }
    }

    #[test]
    fn partial_trace_rejects_empty_keep() {
        let layout = HilbertLayout::new(&[2, 2]).unwrap();
        let rho = ComplexMatrix::identity(4);
        assert!(matches!(
            partial_trace(&rho, &layout, &[]),
            Err(Error::InvalidArgument { .. })
        ));
    }
}
