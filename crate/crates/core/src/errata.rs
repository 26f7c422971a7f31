//! Known misprints in the published formulas, kept evaluable so that each one
//! can be shown to disagree with the reference computations while the
//! corrected form agrees.

use crate::channel::{bell_xmatrix, ChannelParams};
use crate::coherent::{chi_density, ortho_coeffs, phi_plus, RealAmplitude, TwoModeCatState};
use crate::concurrence::{concurrence, initial_concurrence};
use crate::error::Result;
use crate::linalg::{re, Complex4x4, C64};
use crate::oracle::fock::coherent_fock;
use crate::oracle::gram::{gram_channel_density, CoherentSpanState};

/// Initial concurrence with the misprinted radicand `w(w-1)`, evaluated with
/// the principal complex square root.
pub fn printed_initial_concurrence(s: &TwoModeCatState) -> C64 {
    let alpha2 = s.alpha1.squared();
    let root = re(s.w * (s.w - 1.0)).sqrt();
    let e4 = (-4.0 * alpha2).exp();
    root * (2.0 * (1.0 - e4)) / (re(1.0) + root * (2.0 * e4 * s.theta.cos()))
}

/// Bell-channel X entries as printed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrintedBellEntries {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    pub f: f64,
    pub z: f64,
}

impl PrintedBellEntries {
    pub fn new(alpha: RealAmplitude, ch: ChannelParams) -> Self {
        let o = ortho_coeffs(alpha);
        let od = ortho_coeffs(alpha.damped(ch.eta()));
        let dm1 = (-2.0 * alpha.squared() * (1.0 - ch.eta())).exp_m1();
        let dp1 = 2.0 + dm1;
        let mm = 4.0 * o.mu * o.mu;
        let mn = 4.0 * o.mu * o.nu;
        Self {
            a: dp1 * od.mu * od.mu / mm,
            b: -dm1 * od.nu * od.nu / mm,
            c: -dm1 * od.mu * od.mu / mm,
            d: dm1 * od.mu * od.nu / mn,
            f: -dp1 * od.mu * od.nu / mn,
            z: dm1 * od.mu * od.nu / mn,
        }
    }

    pub fn trace(&self) -> f64 {
        self.a + self.b + self.c + self.d
    }

    pub fn to_dense(&self) -> Complex4x4 {
        let mut m = Complex4x4::diag([self.a, self.b, self.c, self.d]);
        m[(0, 3)] = re(self.f);
        m[(3, 0)] = re(self.f);
        m[(1, 2)] = re(self.z);
        m[(2, 1)] = re(self.z);
        m
    }
}

/// `Σ|⟨n|α⟩|²` with the misprinted prefactor `e^{-α²}`, i.e. `e^{-α²}`.
pub fn printed_fock_norm_sqr(alpha: RealAmplitude, cutoff: usize) -> f64 {
    let scale = (-0.5 * alpha.squared()).exp();
    coherent_fock(alpha.get(), cutoff)
        .iter()
        .map(|x| (x * scale).powi(2))
        .sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErratumStatus {
    /// Printed form is off, corrected form matches the reference.
    ExpectedDiscrepancy,
    /// Printed form agrees with the reference; the erratum does not show here.
    PrintedAgrees,
    /// Corrected form disagrees with the reference.
    CorrectedFails,
}

impl std::fmt::Display for ErratumStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Self::ExpectedDiscrepancy => "expected-discrepancy",
            Self::PrintedAgrees => "printed-agrees",
            Self::CorrectedFails => "corrected-fails",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Erratum {
    pub name: &'static str,
    pub printed_error: f64,
    pub corrected_error: f64,
    pub tolerance: f64,
}

impl Erratum {
    pub fn status(&self) -> ErratumStatus {
        if !(self.corrected_error <= self.tolerance) {
            ErratumStatus::CorrectedFails
        } else if self.printed_error > self.tolerance {
            ErratumStatus::ExpectedDiscrepancy
        } else {
            ErratumStatus::PrintedAgrees
        }
    }
}

/// Radicand misprint, checked against the general concurrence of `|χ⟩`.
pub fn radicand_erratum(s: &TwoModeCatState) -> Result<Erratum> {
    let reference = concurrence(&chi_density(s)?)?;
    Ok(Erratum {
        name: "initial concurrence radicand w(w-1)",
        printed_error: (printed_initial_concurrence(s) - re(reference)).norm(),
        corrected_error: (initial_concurrence(s)? - reference).abs(),
        tolerance: 1e-10,
    })
}

/// Bell X-matrix misprints, checked against the overlap-based channel.
pub fn bell_entries_erratum(alpha: RealAmplitude, ch: ChannelParams) -> Result<Erratum> {
    let input = CoherentSpanState::from_uv(&phi_plus(), alpha, alpha)?;
    let reference = gram_channel_density(&input, ch)?;
    let printed = PrintedBellEntries::new(alpha, ch).to_dense();
    let corrected = bell_xmatrix(alpha, ch)?.to_dense();
    Ok(Erratum {
        name: "bell X-matrix entries",
        printed_error: printed.max_abs_diff(reference.matrix()),
        corrected_error: corrected.max_abs_diff(reference.matrix()),
        tolerance: 1e-10,
    })
}

/// Fock prefactor misprint, checked against `⟨α|α⟩ = 1`.
pub fn fock_prefactor_erratum(alpha: RealAmplitude, cutoff: usize) -> Erratum {
    let corrected: f64 = coherent_fock(alpha.get(), cutoff).iter().map(|x| x * x).sum();
    Erratum {
        name: "coherent state Fock prefactor",
        printed_error: (printed_fock_norm_sqr(alpha, cutoff) - 1.0).abs(),
        corrected_error: (corrected - 1.0).abs(),
        tolerance: 1e-12,
    }
}

/// All errata at one parameter point.
pub fn check_errata(s: &TwoModeCatState, ch: ChannelParams) -> Result<Vec<Erratum>> {
    Ok(vec![
        radicand_erratum(s)?,
        bell_entries_erratum(s.alpha1, ch)?,
        fock_prefactor_erratum(s.alpha1, 80),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn amp(a: f64) -> RealAmplitude {
        RealAmplitude::new(a).unwrap()
    }

    #[test]
    fn printed_radicand_is_imaginary() {
        let s = TwoModeCatState::symmetric(1.0, 0.5, std::f64::consts::PI).unwrap();
        let c = printed_initial_concurrence(&s);
        assert!(c.im.abs() > 0.1);
    }

    #[test]
    fn printed_bell_entries_are_not_a_density() {
        let p = PrintedBellEntries::new(amp(1.0), ChannelParams::new(0.9).unwrap());
        assert!(p.d < 0.0 || (p.trace() - 1.0).abs() > 1e-3);
    }

    #[test]
    fn printed_fock_norm_is_exp_minus_alpha_squared() {
        let n = printed_fock_norm_sqr(amp(1.2), 80);
        assert!((n - (-1.44f64).exp()).abs() < 1e-14);
    }
}
