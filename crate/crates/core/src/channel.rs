//! Photon loss modelled as a beam splitter of transmissivity `η`, traced down
//! to the coherent qubit picture: the amplitude shrinks to `α√η` and a logical
//! phase flip appears with a state-dependent probability.

use crate::coherent::{
    cat_norm, cat_norm_flipped, chi_density, chi_flipped_density, ortho_coeffs, CatQubit,
    RealAmplitude, TwoModeCatState, TwoQubitDensity,
};
use crate::concurrence::XMatrix;
use crate::error::{Error, Result};
use crate::linalg::{re, C64};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelParams {
    eta: f64,
}

impl ChannelParams {
    pub fn new(eta: f64) -> Result<Self> {
        if (0.0..=1.0).contains(&eta) {
            Ok(Self { eta })
        } else {
            Err(Error::OutOfRange {
                name: "eta",
                range: "[0, 1]",
                value: eta,
            })
        }
    }

    pub fn lossless() -> Self {
        Self { eta: 1.0 }
    }

    pub fn eta(self) -> f64 {
        self.eta
    }

    /// `D = e^{-2(1-η)α²}`, overlap of the two loss-mode branches.
    pub fn branch_overlap(self, alpha: RealAmplitude) -> f64 {
        (-2.0 * (1.0 - self.eta) * alpha.squared()).exp()
    }
}

/// `p_e = ½(1 - e^{-2(1-η)α²})`.
pub fn flip_prob_single(alpha: RealAmplitude, ch: ChannelParams) -> f64 {
    -0.5 * (-2.0 * (1.0 - ch.eta) * alpha.squared()).exp_m1()
}

/// Flip weight of a Bell pair sent through one lossy arm,
///
/// `[1 - e^{4α²} - e^{2α²(1-η)} + e^{2α²(1+η)}] / [2(1 - e^{4α²})]`,
///
/// evaluated after scaling by `e^{-4α²}` as
/// `p_e (1 + e^{-2(1+η)α²}) / (1 - e^{-4α²})`. At `α = 0` the continuous
/// limit `(1-η)/2` is returned.
pub fn flip_prob_pair(alpha: RealAmplitude, ch: ChannelParams) -> f64 {
    let a2 = alpha.squared();
    if a2 == 0.0 {
        return 0.5 * (1.0 - ch.eta);
    }
    let den = -(-4.0 * a2).exp_m1();
    let p = flip_prob_single(alpha, ch) * (1.0 + (-2.0 * (1.0 + ch.eta) * a2).exp()) / den;
    p.clamp(0.0, 0.5)
}

/// Flip weight of `|χ⟩` with mode 2 damped:
/// `p_e Ñ' / ((1-p_e) Ñ + p_e Ñ')`, both norms taken at `(α₁, α₂√η)`.
pub fn flip_prob_state(s: &TwoModeCatState, ch: ChannelParams) -> Result<f64> {
    let pe = flip_prob_single(s.alpha2, ch);
    if pe == 0.0 {
        return Ok(0.0);
    }
    let out = s.with_mode2(s.alpha2.damped(ch.eta));
    let n0 = cat_norm(&out).unwrap_or(0.0);
    let n1 = cat_norm_flipped(&out).unwrap_or(0.0);
    let den = (1.0 - pe) * n0 + pe * n1;
    if den <= 0.0 {
        return Err(Error::DegenerateNormalisation {
            what: "damped cat state",
            value: den,
        });
    }
    Ok(pe * n1 / den)
}

/// Output of a damped single-mode qubit: `(1 - p_flip) |Q'⟩⟨Q'| + p_flip Z|Q'⟩⟨Q'|Z`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SingleQubitMixture {
    /// Normalised weight of the flipped branch.
    pub p_flip: f64,
    /// Channel-level flip probability `p_e` before renormalisation.
    pub p_e: f64,
    pub unflipped: CatQubit,
    pub flipped: CatQubit,
}

impl SingleQubitMixture {
    /// 2×2 density in `{u_{α√η}, v_{α√η}}`.
    pub fn density(&self) -> Result<[[C64; 2]; 2]> {
        let mut rho = [[re(0.0); 2]; 2];
        for (w, q) in [(1.0 - self.p_flip, &self.unflipped), (self.p_flip, &self.flipped)] {
            if w == 0.0 {
                continue;
            }
            let d = q.density()?;
            for i in 0..2 {
                for j in 0..2 {
                    rho[i][j] += d[i][j] * w;
                }
            }
        }
        Ok(rho)
    }
}

fn raw_qubit_norm(q: &CatQubit) -> f64 {
    1.0 + 2.0 * (-2.0 * q.alpha.squared()).exp() * (q.a * q.b.conj()).re
}

pub fn damp_single_qubit(q: &CatQubit, ch: ChannelParams) -> Result<SingleQubitMixture> {
    crate::coherent::qubit_norm(q)?;
    let pe = flip_prob_single(q.alpha, ch);
    let unflipped = q.with_amplitude(q.alpha.damped(ch.eta));
    let flipped = unflipped.flipped();
    let n0 = raw_qubit_norm(&unflipped);
    let n1 = raw_qubit_norm(&flipped);
    let p_flip = if pe == 0.0 {
        0.0
    } else {
        (pe * n1 / ((1.0 - pe) * n0 + pe * n1)).clamp(0.0, 1.0)
    };
    Ok(SingleQubitMixture {
        p_flip,
        p_e: pe,
        unflipped,
        flipped,
    })
}

/// `(1-P) |χ'⟩⟨χ'| + P Z|χ'⟩⟨χ'|Z` with `χ'` the state at `(α₁, α₂√η)` and
/// `P` from [`flip_prob_state`].
pub fn transmit_direct(s: &TwoModeCatState, ch: ChannelParams) -> Result<TwoQubitDensity> {
    let p = flip_prob_state(s, ch)?;
    mixed_output(s, ch, p)
}

/// Mixture of the damped state and its mode-2 flip with a given flip weight.
pub(crate) fn mixed_output(s: &TwoModeCatState, ch: ChannelParams, p: f64) -> Result<TwoQubitDensity> {
    let out = s.with_mode2(s.alpha2.damped(ch.eta));
    if p <= 0.0 {
        return chi_density(&out);
    }
    if p >= 1.0 {
        return chi_flipped_density(&out);
    }
    Ok(TwoQubitDensity::mix(p, &chi_density(&out)?, &chi_flipped_density(&out)?))
}

/// `(1-P_e) |φ⁺'⟩⟨φ⁺'| + P_e Z|φ⁺'⟩⟨φ⁺'|Z` for `|φ⁺⟩ = (|uu⟩+|vv⟩)/√2` at
/// amplitude `α`, written in `{u_α, v_α} ⊗ {u_{α√η}, v_{α√η}}`.
pub fn bell_xmatrix(alpha: RealAmplitude, ch: ChannelParams) -> Result<XMatrix> {
    bell_xmatrix_weighted(alpha, ch, 1.0 - flip_prob_pair(alpha, ch))
}

/// Same X matrix with weight `keep` on the unflipped branch.
pub fn bell_xmatrix_weighted(alpha: RealAmplitude, ch: ChannelParams, keep: f64) -> Result<XMatrix> {
    if alpha.get() <= 0.0 {
        return Err(Error::DegenerateBasis(alpha.get()));
    }
    if !(0.0..=1.0).contains(&keep) {
        return Err(Error::OutOfRange {
            name: "unflipped weight",
            range: "[0, 1]",
            value: keep,
        });
    }
    let o = ortho_coeffs(alpha);
    let od = ortho_coeffs(alpha.damped(ch.eta));
    // |φ⁺'⟩ ∝ μ'ν|uu'⟩ + ν'μ|vv'⟩ and Z|φ⁺'⟩ ∝ νν'|uv'⟩ + μμ'|vu'⟩.
    let (ua, ub) = (od.mu * o.nu, od.nu * o.mu);
    let (fa, fb) = (o.nu * od.nu, o.mu * od.mu);
    let n0 = ua * ua + ub * ub;
    let n1 = fa * fa + fb * fb;
    let flip = 1.0 - keep;
    if n1 == 0.0 && flip > 0.0 {
        return Err(Error::DegenerateBasis(alpha.damped(ch.eta).get()));
    }
    let q0 = keep / n0;
    let q1 = if flip > 0.0 { flip / n1 } else { 0.0 };
    XMatrix::new(
        q0 * ua * ua,
        q1 * fa * fa,
        q1 * fb * fb,
        q0 * ub * ub,
        re(q0 * ua * ub),
        re(q1 * fa * fb),
    )
}
