//! Physical parameters and Hamiltonian builders.
//!
//! All builders produce operators on the joint space of
//! (resonator 1, resonator 2, atom) in the fixed crate ordering. Rates and
//! detunings are in units of the resonator decay rate kappa.


use crate::error::{Error, Result};
use crate::hilbert::{
    annihilation, embed, sigma_minus, sigma_z, HilbertLayout, ATOM, RESONATOR_1, RESONATOR_2,
};
use crate::linalg::matrix::{ComplexMatrix, C64};

const I: C64 = C64::new(0.0, 1.0);

/// All physical rates and detunings of the coupled-resonator/atom system.
///
/// `delta1`, `delta2` are resonator-drive detunings, `delta_a` the atomic
/// detuning, `j` the photon hopping rate, `g` the atom-resonator coupling,
/// `omega1`, `omega2` the drive amplitudes, `kappa1`, `kappa2` the resonator
/// decay rates, and `gamma` the atomic decay rate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SystemParams {
    pub delta1: f64,
    pub delta2: f64,
    pub delta_a: f64,
    pub j: f64,
    pub g: f64,
    pub omega1: f64,
    pub omega2: f64,
    pub kappa1: f64,
    pub kappa2: f64,
    pub gamma: f64,
}

impl Default for SystemParams {
    /// Undriven, uncoupled system with unit resonator decay.
    fn default() -> Self {
        Self {
            delta1: 0.0,
            delta2: 0.0,
            delta_a: 0.0,
            j: 0.0,
            g: 0.0,
            omega1: 0.0,
            omega2: 0.0,
            kappa1: 1.0,
            kappa2: 1.0,
            gamma: 0.0,
        }
    }
}

impl SystemParams {
    /// Check the basic sign and finiteness constraints.
    pub fn validate(&self) -> Result<()> {
        let fields = [
            self.delta1,
            self.delta2,
            self.delta_a,
            self.j,
            self.g,
            self.omega1,
            self.omega2,
            self.kappa1,
            self.kappa2,
            self.gamma,
        ];
        if fields.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidArgument {
                detail: "system parameters must be finite",
            });
        }
        if self.kappa1 < 0.0 || self.kappa2 < 0.0 || self.gamma < 0.0 {
            return Err(Error::InvalidArgument {
                detail: "decay rates must be nonnegative",
            });
        }
        Ok(())
    }

    /// True in the symmetric-cavity regime of the closed-form model:
    /// delta1 == delta2 and kappa1 == kappa2 (exact comparison, intended).
    pub fn symmetric_cavities(&self) -> bool {
        self.delta1 == self.delta2 && self.kappa1 == self.kappa2
    }

    /// Joint detuning of both resonators, defined in the symmetric regime.
    pub fn delta(&self) -> f64 {
        self.delta1
    }
}

/// Which Hamiltonian the builder assembles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HamiltonianKind {
    /// Hermitian rotating-frame Hamiltonian.
    RotatingFrame,
    /// Rotating-frame Hamiltonian plus the non-Hermitian decay terms
    /// -i(kappa_i/2) n_i - i(gamma/2) sigma+ sigma-.
    EffectiveNonHermitian,
    /// Single resonator + atom reduction; requires j = 0 and omega2 = 0.
    JaynesCummings,
}

/// Assemble the requested Hamiltonian on the given layout.
///
/// Term structure: Delta1 n1 + Delta2 n2 + (Delta_a/2) sigma_z
/// + J (a1^dag a2 + a2^dag a1) + g (a1^dag sigma- + a1 sigma+)
/// + Omega1 (a1^dag + a1) + Omega2 (a2^dag + a2),
/// with the atomic term carrying the constant -Delta_a/2 shift of the
/// global ground state (only energy differences are observable).
pub fn build_hamiltonian(
    p: &SystemParams,
    layout: &HilbertLayout,
    kind: HamiltonianKind,
) -> Result<ComplexMatrix> {
    p.validate()?;
    if layout.subsystem_count() != 3 || layout.dims()[ATOM] != 2 {
        return Err(Error::InvalidArgument {
            detail: "hamiltonian builder needs the (resonator, resonator, atom) layout",
        });
    }
    if kind == HamiltonianKind::JaynesCummings && (p.j != 0.0 || p.omega2 != 0.0) {
        return Err(Error::InconsistentParameters {
            detail: "Jaynes-Cummings reduction requires j = 0 and omega2 = 0",
        });
    }

    let d1 = layout.dims()[RESONATOR_1];
    let d2 = layout.dims()[RESONATOR_2];
    let a1 = embed(&annihilation(d1)?, RESONATOR_1, layout)?;
    let a2 = embed(&annihilation(d2)?, RESONATOR_2, layout)?;
    let sm = embed(&sigma_minus(), ATOM, layout)?;
    let sz = embed(&sigma_z(), ATOM, layout)?;

    let a1d = a1.adjoint();
    let a2d = a2.adjoint();
    let sp = sm.adjoint();

    let n1 = a1d.matmul(&a1)?;
    let n2 = a2d.matmul(&a2)?;

    let re = |x: f64| C64::new(x, 0.0);
    let mut h = n1.scale(re(p.delta1));
    h = &h + &n2.scale(re(p.delta2));
    h = &h + &sz.scale(re(p.delta_a / 2.0));
    if p.j != 0.0 {
        let hop = &a1d.matmul(&a2)? + &a2d.matmul(&a1)?;
        h = &h + &hop.scale(re(p.j));
    }
    if p.g != 0.0 {
        let jc = &a1d.matmul(&sm)? + &a1.matmul(&sp)?;
        h = &h + &jc.scale(re(p.g));
    }
    if p.omega1 != 0.0 {
        h = &h + &(&a1d + &a1).scale(re(p.omega1));
    }
    if p.omega2 != 0.0 {
        h = &h + &(&a2d + &a2).scale(re(p.omega2));
    }

    if kind == HamiltonianKind::EffectiveNonHermitian {
        // Decay per Eq.-4 form: number operators and the excited-state
        // projector sigma+ sigma-, not the sigma_z coefficient variant.
        h = &h - &n1.scale(I * (p.kappa1 / 2.0));
        h = &h - &n2.scale(I * (p.kappa2 / 2.0));
        let proj = sp.matmul(&sm)?;
        h = &h - &proj.scale(I * (p.gamma / 2.0));
    }

    Ok(h)
}

/// Anti-Hermitian part (H - H^dagger)/2.
pub fn anti_hermitian_part(h: &ComplexMatrix) -> Result<ComplexMatrix> {
    h.require_square()?;
    Ok(ComplexMatrix::from_fn(h.rows(), h.cols(), |i, j| {
        (h[(i, j)] - h[(j, i)].conj()) * 0.5
    }))
}
