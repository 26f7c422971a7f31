//! Wootters concurrence by three routes: the general spin-flip spectrum, the
//! X-state closed form, and the one-sided channel factorisation.

use crate::channel::{bell_xmatrix_weighted, flip_prob_pair, ChannelParams};
use crate::code::{success_prob, CodeSpec};
use crate::coherent::{TwoModeCatState, TwoQubitDensity};
use crate::error::{Error, Result};
use crate::linalg::{eig_hermitian, re, singular_values, sqrt_psd, Complex4x4, C64};

const X_SPARSITY_TOL: f64 = 1e-12;
const X_TRACE_TOL: f64 = 1e-10;
const X_POSITIVITY_SLACK: f64 = 1e-12;

/// Two-qubit density with support only on the diagonal and anti-diagonal:
///
/// ```text
/// | a 0 0 f |
/// | 0 b z 0 |
/// | 0 z* c 0 |
/// | f* 0 0 d |
/// ```
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct XMatrix {
    pub diag_a: f64,
    pub diag_b: f64,
    pub diag_c: f64,
    pub diag_d: f64,
    pub corner_f: C64,
    pub inner_z: C64,
}

impl XMatrix {
    pub fn new(a: f64, b: f64, c: f64, d: f64, f: C64, z: C64) -> Result<Self> {
        let x = Self {
            diag_a: a,
            diag_b: b,
            diag_c: c,
            diag_d: d,
            corner_f: f,
            inner_z: z,
        };
        x.validate()?;
        Ok(x)
    }

    pub fn validate(&self) -> Result<()> {
        let diag = [self.diag_a, self.diag_b, self.diag_c, self.diag_d];
        if let Some(&neg) = diag.iter().find(|&&v| !(v >= 0.0)) {
            return Err(Error::NotPositive(neg));
        }
        let tr: f64 = diag.iter().sum();
        if (tr - 1.0).abs() > X_TRACE_TOL {
            return Err(Error::BadTrace(tr));
        }
        let corner = self.diag_a * self.diag_d - self.corner_f.norm_sqr();
        let inner = self.diag_b * self.diag_c - self.inner_z.norm_sqr();
        if corner < -X_POSITIVITY_SLACK {
            return Err(Error::NotPositive(corner));
        }
        if inner < -X_POSITIVITY_SLACK {
            return Err(Error::NotPositive(inner));
        }
        Ok(())
    }

    pub fn to_dense(&self) -> Complex4x4 {
        let mut m = Complex4x4::zeros();
        m[(0, 0)] = re(self.diag_a);
        m[(1, 1)] = re(self.diag_b);
        m[(2, 2)] = re(self.diag_c);
        m[(3, 3)] = re(self.diag_d);
        m[(0, 3)] = self.corner_f;
        m[(3, 0)] = self.corner_f.conj();
        m[(1, 2)] = self.inner_z;
        m[(2, 1)] = self.inner_z.conj();
        m
    }

    pub fn to_density(&self) -> TwoQubitDensity {
        TwoQubitDensity::from_matrix_unchecked(self.to_dense())
    }

    /// Reads the X entries of a dense density, refusing anything with weight
    /// off the X pattern.
    pub fn from_density(rho: &TwoQubitDensity) -> Result<Self> {
        let off = rho.off_x_magnitude();
        if off > X_SPARSITY_TOL {
            return Err(Error::NotXShaped(off));
        }
        let m = rho.matrix();
        Self::new(m[(0, 0)].re, m[(1, 1)].re, m[(2, 2)].re, m[(3, 3)].re, m[(0, 3)], m[(1, 2)])
    }
}

/// `ρ̃ = (σ_y⊗σ_y) ρ* (σ_y⊗σ_y)`.
pub fn spin_flip(rho: &Complex4x4) -> Complex4x4 {
    let yy = Complex4x4::sigma_yy();
    yy * rho.conjugate() * yy
}

/// `√λ_i` of `ρρ̃`, descending, obtained as singular values of `√ρ·√ρ̃`.
pub fn wootters_roots(rho: &TwoQubitDensity) -> Result<[f64; 4]> {
    let root = sqrt_psd(rho.matrix())?;
    singular_values(&(root * spin_flip(&root)))
}

/// Raw eigenvalues of the Hermitian `√ρ ρ̃ √ρ` (same spectrum as `ρρ̃`),
/// descending and unclamped.
pub fn wootters_eigenvalues(rho: &TwoQubitDensity) -> Result<[f64; 4]> {
    let root = sqrt_psd(rho.matrix())?;
    let h = root * spin_flip(rho.matrix()) * root;
    // Products of Hermitian factors pick up ~ε anti-Hermitian noise.
    let h = (h + h.adjoint()).scale(0.5);
    Ok(eig_hermitian(&h)?.values)
}

/// `C = max(0, √λ₁ - √λ₂ - √λ₃ - √λ₄)`.
pub fn concurrence(rho: &TwoQubitDensity) -> Result<f64> {
    let s = wootters_roots(rho)?;
    Ok((s[0] - s[1] - s[2] - s[3]).clamp(0.0, 1.0))
}

/// `C = 2 max(0, |z| - √(ad), |f| - √(bc))`.
pub fn concurrence_x(x: &XMatrix) -> f64 {
    let inner = x.inner_z.norm() - (x.diag_a * x.diag_d).sqrt();
    let corner = x.corner_f.norm() - (x.diag_b * x.diag_c).sqrt();
    (2.0 * inner.max(corner).max(0.0)).min(1.0)
}

/// Concurrence of `|χ_{α,α}⟩` in closed form,
/// `2(1 - e^{-4α²})√(w(1-w)) / (1 + 2√(w(1-w)) e^{-4α²} cos θ)`.
pub fn initial_concurrence(s: &TwoModeCatState) -> Result<f64> {
    let alpha = equal_amplitude(s)?;
    let root = (s.w * (1.0 - s.w)).sqrt();
    let e4 = (-4.0 * alpha * alpha).exp();
    let num = -2.0 * (-4.0 * alpha * alpha).exp_m1() * root;
    let den = 1.0 + 2.0 * root * e4 * s.theta.cos();
    if den <= 1e-14 {
        return Err(Error::DegenerateNormalisation {
            what: "initial concurrence denominator",
            value: den,
        });
    }
    Ok((num / den).clamp(0.0, 1.0))
}

/// Concurrence after the (encoded) channel from the factorisation
/// `C[(1⊗$)|χ⟩⟨χ|] = C[(1⊗$)|φ⁺⟩⟨φ⁺|] · C[|χ⟩]`, with the Bell factor
/// evaluated on the X matrix carrying weight `P_success,n(P_e)`.
pub fn evolved_concurrence(s: &TwoModeCatState, ch: ChannelParams, code: CodeSpec) -> Result<f64> {
    let alpha = equal_amplitude(s)?;
    let pe = flip_prob_pair(s.alpha1, ch);
    debug_assert_eq!(alpha, s.alpha1.get());
    evolved_concurrence_with_flip(s, ch, code, pe)
}

/// [`evolved_concurrence`] with the pair flip probability supplied by the caller.
pub fn evolved_concurrence_with_flip(
    s: &TwoModeCatState,
    ch: ChannelParams,
    code: CodeSpec,
    pair_flip: f64,
) -> Result<f64> {
    let initial = initial_concurrence(s)?;
    if initial == 0.0 {
        return Ok(0.0);
    }
    let keep = success_prob(code, pair_flip)?;
    let bell = bell_xmatrix_weighted(s.alpha1, ch, keep)?;
    Ok(concurrence_x(&bell) * initial)
}

fn equal_amplitude(s: &TwoModeCatState) -> Result<f64> {
    if s.alpha1 != s.alpha2 {
        return Err(Error::OutOfRange {
            name: "alpha2",
            range: "equal to alpha1",
            value: s.alpha2.get(),
        });
    }
    Ok(s.alpha1.get())
}
