//! Reference channel built only from coherent-state overlaps.
//!
//! States are kept as coefficients over `|s₁α₁, s₂α₂⟩`. Loss on mode 2 maps
//! `|c⟩⟨c'|` to the same coherent pair at `α₂√η` times the overlap of the
//! environment branches, which is `1` for equal signs and `e^{-2(1-η)α₂²}`
//! otherwise. The result is read out in the symmetric (Löwdin) orthonormal
//! basis, recombined into even/odd vectors by a fixed Hadamard.

use std::f64::consts::FRAC_1_SQRT_2;

use crate::channel::ChannelParams;
use crate::code::CodeSpec;
use crate::coherent::{overlap, RealAmplitude, TwoModeCatState, TwoQubitDensity};
use crate::error::{Error, Result};
use crate::linalg::{eig_hermitian_dyn, re, CMatrix, Complex4x4, Ket4, C64};
use crate::oracle::enumerate::majority_vote_success;

/// Amplitudes below this make the two coherent states numerically identical.
pub const MIN_AMPLITUDE: f64 = 1e-6;

const SIGNS: [(f64, f64); 4] = [(1.0, 1.0), (1.0, -1.0), (-1.0, 1.0), (-1.0, -1.0)];

/// `Σ c_k |s₁α₁, s₂α₂⟩`, `k` ordered `(++, +-, -+, --)`, not necessarily normalised.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoherentSpanState {
    pub coeffs: [C64; 4],
    pub alpha1: RealAmplitude,
    pub alpha2: RealAmplitude,
}

impl CoherentSpanState {
    pub fn new(coeffs: [C64; 4], alpha1: RealAmplitude, alpha2: RealAmplitude) -> Result<Self> {
        if coeffs.iter().all(|z| z.norm() == 0.0) {
            return Err(Error::ZeroState);
        }
        Ok(Self { coeffs, alpha1, alpha2 })
    }

    pub fn from_cat(s: &TwoModeCatState) -> Self {
        Self {
            coeffs: s.coherent_coeffs(false),
            alpha1: s.alpha1,
            alpha2: s.alpha2,
        }
    }

    /// Expands a ket given in the `{u, v}` product basis over coherent states.
    pub fn from_uv(ket: &Ket4, alpha1: RealAmplitude, alpha2: RealAmplitude) -> Result<Self> {
        let basis = GramBasis::new(alpha1, alpha2)?;
        Self::new(basis.uv_to_coeffs(ket), alpha1, alpha2)
    }

    /// Logical `Z` on mode 2: the `|+α₂⟩` branches change sign.
    pub fn flip_mode2(&self) -> Self {
        let mut coeffs = self.coeffs;
        for (c, &(_, s2)) in coeffs.iter_mut().zip(&SIGNS) {
            if s2 > 0.0 {
                *c = -*c;
            }
        }
        Self { coeffs, ..*self }
    }

    /// `⟨ψ|ψ⟩ = c† G c`.
    pub fn norm_sqr(&self) -> f64 {
        let g = GramMatrix::new(self.alpha1, self.alpha2);
        let mut n = re(0.0);
        for k in 0..4 {
            for l in 0..4 {
                n += self.coeffs[k].conj() * g.0[(k, l)] * self.coeffs[l];
            }
        }
        n.re
    }
}

/// Overlap matrix `⟨s₁α₁, s₂α₂ | t₁α₁, t₂α₂⟩`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GramMatrix(pub Complex4x4);

impl GramMatrix {
    pub fn new(alpha1: RealAmplitude, alpha2: RealAmplitude) -> Self {
        let (a1, a2) = (alpha1.get(), alpha2.get());
        Self(Complex4x4::from_fn(|k, l| {
            let (s1, s2) = SIGNS[k];
            let (t1, t2) = SIGNS[l];
            re(overlap(s1 * a1, t1 * a1) * overlap(s2 * a2, t2 * a2))
        }))
    }
}

/// `G^{1/2}` and `G^{-1/2}` for one mode, from the 2×2 Gram matrix.
fn mode_roots(alpha: RealAmplitude) -> Result<([[f64; 2]; 2], [[f64; 2]; 2])> {
    if alpha.get() < MIN_AMPLITUDE {
        return Err(Error::DegenerateBasis(alpha.get()));
    }
    let s = overlap(alpha.get(), -alpha.get());
    let g = CMatrix::from_fn(2, |i, j| re(if i == j { 1.0 } else { s }));
    let eig = eig_hermitian_dyn(&g)?;
    let mut root = [[0.0; 2]; 2];
    let mut inv = [[0.0; 2]; 2];
    for k in 0..2 {
        let lam = eig.values[k];
        if lam <= 0.0 {
            return Err(Error::DegenerateBasis(alpha.get()));
        }
        for i in 0..2 {
            for j in 0..2 {
                let p = (eig.vectors[(i, k)] * eig.vectors[(j, k)].conj()).re;
                root[i][j] += lam.sqrt() * p;
                inv[i][j] += p / lam.sqrt();
            }
        }
    }
    Ok((root, inv))
}

fn kron_real(a: &[[f64; 2]; 2], b: &[[f64; 2]; 2]) -> Complex4x4 {
    Complex4x4::from_fn(|i, j| re(a[i / 2][j / 2] * b[i % 2][j % 2]))
}

/// Löwdin-orthonormalised coherent basis followed by the even/odd Hadamard.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GramBasis {
    pub gram: GramMatrix,
    /// `G^{1/2}`.
    pub sqrt: Complex4x4,
    /// `G^{-1/2}`; its columns are the Löwdin vectors in coherent coefficients.
    pub inv_sqrt: Complex4x4,
}

impl GramBasis {
    pub fn new(alpha1: RealAmplitude, alpha2: RealAmplitude) -> Result<Self> {
        let (r1, i1) = mode_roots(alpha1)?;
        let (r2, i2) = mode_roots(alpha2)?;
        Ok(Self {
            gram: GramMatrix::new(alpha1, alpha2),
            sqrt: kron_real(&r1, &r2),
            inv_sqrt: kron_real(&i1, &i2),
        })
    }

    /// `H⊗H` taking `(ℓ₊, ℓ₋)` to `u = (ℓ₊+ℓ₋)/√2`, `v = (ℓ₊-ℓ₋)/√2`.
    pub fn hadamard() -> Complex4x4 {
        let h = [[FRAC_1_SQRT_2, FRAC_1_SQRT_2], [FRAC_1_SQRT_2, -FRAC_1_SQRT_2]];
        kron_real(&h, &h)
    }

    /// Coefficients over coherent states of a `{u,v}` ket: `G^{-1/2} W ψ`.
    pub fn uv_to_coeffs(&self, ket: &Ket4) -> [C64; 4] {
        apply(&(self.inv_sqrt * Self::hadamard()), ket)
    }

    /// `{u,v}` components of `Σ c_k |k⟩`: `W G^{1/2} c` (unnormalised).
    pub fn coeffs_to_uv(&self, coeffs: &[C64; 4]) -> Ket4 {
        apply(&(Self::hadamard() * self.sqrt), coeffs)
    }

    /// Inner products `⟨k|ψ⟩` of a `{u,v}` ket with the coherent products.
    pub fn coherent_projections(&self, ket: &Ket4) -> [C64; 4] {
        apply(&(self.sqrt * Self::hadamard()), ket)
    }

    /// Density `Σ R_kl |k⟩⟨l|` in the `{u,v}` basis, normalised to unit trace.
    pub fn to_uv_density(&self, r: &Complex4x4) -> Result<TwoQubitDensity> {
        let w = Self::hadamard();
        let m = w * self.sqrt * *r * self.sqrt * w;
        let tr = m.trace().re;
        if !(tr > 0.0) {
            return Err(Error::BadTrace(tr));
        }
        let m = (m + m.adjoint()).scale(0.5 / tr);
        TwoQubitDensity::new(m)
    }
}

fn apply(m: &Complex4x4, x: &[C64; 4]) -> [C64; 4] {
    let mut y = [re(0.0); 4];
    for (i, yi) in y.iter_mut().enumerate() {
        for (j, xj) in x.iter().enumerate() {
            *yi += m[(i, j)] * xj;
        }
    }
    y
}

/// Loss on mode 2 applied to a coherent representation `Σ R_kl |k⟩⟨l|`.
fn damp_representation(r: &Complex4x4, alpha2: RealAmplitude, ch: ChannelParams) -> Complex4x4 {
    let env = alpha2.get() * (1.0 - ch.eta()).sqrt();
    Complex4x4::from_fn(|k, l| r[(k, l)] * overlap(SIGNS[k].1 * env, SIGNS[l].1 * env))
}

/// Channel applied to a mixed input `Σ R_kl |s₁α₁,s₂α₂⟩⟨t₁α₁,t₂α₂|`; the
/// output is normalised and read out at `(α₁, α₂√η)`.
pub fn gram_channel_mixed(
    r: &Complex4x4,
    alpha1: RealAmplitude,
    alpha2: RealAmplitude,
    ch: ChannelParams,
) -> Result<TwoQubitDensity> {
    let basis = GramBasis::new(alpha1, alpha2.damped(ch.eta()))?;
    basis.to_uv_density(&damp_representation(r, alpha2, ch))
}

/// Channel output in `{u_{α₁}, v_{α₁}} ⊗ {u_{α₂√η}, v_{α₂√η}}`.
pub fn gram_channel_density(state: &CoherentSpanState, ch: ChannelParams) -> Result<TwoQubitDensity> {
    let c = &state.coeffs;
    let r = Complex4x4::from_fn(|k, l| c[k] * c[l].conj());
    gram_channel_mixed(&r, state.alpha1, state.alpha2, ch)
}

/// Least-squares split of the channel output into the damped state and its
/// mode-2 flip.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FlipDecomposition {
    pub p_flip: f64,
    /// Frobenius norm of what the two projectors fail to explain.
    pub residual: f64,
    pub unflipped: TwoQubitDensity,
    pub flipped: TwoQubitDensity,
}

pub fn gram_flip_decomposition(state: &CoherentSpanState, ch: ChannelParams) -> Result<FlipDecomposition> {
    let rho = gram_channel_density(state, ch)?;
    let alpha2 = state.alpha2.damped(ch.eta());
    let basis = GramBasis::new(state.alpha1, alpha2)?;
    let out = CoherentSpanState { alpha2, ..*state };
    let k0 = basis.coeffs_to_uv(&out.coeffs);
    let k1 = basis.coeffs_to_uv(&out.flip_mode2().coeffs);
    let nonzero = |k: &Ket4| k.iter().map(|z| z.norm_sqr()).sum::<f64>() > 1e-28;
    let p0 = nonzero(&k0).then(|| TwoQubitDensity::from_ket(&k0));
    let p1 = nonzero(&k1).then(|| TwoQubitDensity::from_ket(&k1));

    let inner = |a: &Complex4x4, b: &Complex4x4| (a.adjoint() * *b).trace().re;
    let r = *rho.matrix();
    let (x, y) = match (&p0, &p1) {
        (Some(a), Some(b)) => {
            let (a, b) = (a.matrix(), b.matrix());
            let (aa, ab, bb) = (inner(a, a), inner(a, b), inner(b, b));
            let (ra, rb) = (inner(&r, a), inner(&r, b));
            let det = aa * bb - ab * ab;
            if det.abs() < 1e-14 {
                // Both branches describe the same state.
                (1.0, 0.0)
            } else {
                ((ra * bb - rb * ab) / det, (rb * aa - ra * ab) / det)
            }
        }
        (Some(_), None) => (1.0, 0.0),
        (None, Some(_)) => (0.0, 1.0),
        (None, None) => return Err(Error::ZeroState),
    };
    let unflipped = p0.unwrap_or_else(|| p1.unwrap());
    let flipped = p1.unwrap_or(unflipped);
    let fit = unflipped.matrix().scale(x) + flipped.matrix().scale(y);
    Ok(FlipDecomposition {
        p_flip: (y / (x + y)).clamp(0.0, 1.0),
        residual: (r - fit).frobenius_norm(),
        unflipped,
        flipped,
    })
}

/// Encoded transmission: the flip weight of the direct channel is fed through
/// a brute-force majority vote over `n` independent rails.
pub fn gram_encoded_density(
    state: &CoherentSpanState,
    ch: ChannelParams,
    code: CodeSpec,
) -> Result<TwoQubitDensity> {
    let d = gram_flip_decomposition(state, ch)?;
    let keep = majority_vote_success(code, d.p_flip)?;
    Ok(TwoQubitDensity::mix(1.0 - keep, &d.unflipped, &d.flipped))
}
