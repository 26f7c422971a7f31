//! Reference channel in a truncated Fock space with the amplitude-damping
//! Kraus operators `A_l |n⟩ = √C(n,l) (1-η)^{l/2} η^{(n-l)/2} |n-l⟩`.

use crate::channel::ChannelParams;
use crate::coherent::{CatQubit, RealAmplitude, TwoQubitDensity};
use crate::error::{Error, Result};
use crate::linalg::{re, Complex4x4, C64};
use crate::oracle::gram::CoherentSpanState;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FockOptions {
    /// Highest photon number kept.
    pub cutoff: usize,
    /// Largest tolerated norm lost to truncation, per coherent state.
    pub max_deficit: f64,
}

impl Default for FockOptions {
    fn default() -> Self {
        Self {
            cutoff: 40,
            max_deficit: 1e-12,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FockOutput<T> {
    pub density: T,
    /// Largest norm deficit seen (truncated coherent states and projected trace).
    pub truncation_error: f64,
}

/// Fock amplitudes of `|β⟩`, `e^{-β²/2} βⁿ/√n!`, for `n = 0..=cutoff`.
pub fn coherent_fock(beta: f64, cutoff: usize) -> Vec<f64> {
    let mut f = Vec::with_capacity(cutoff + 1);
    f.push((-0.5 * beta * beta).exp());
    for n in 1..=cutoff {
        let prev = f[n - 1];
        f.push(prev * beta / (n as f64).sqrt());
    }
    f
}

fn checked_fock(alpha: RealAmplitude, opts: FockOptions, worst: &mut f64) -> Result<Vec<f64>> {
    let f = coherent_fock(alpha.get(), opts.cutoff);
    let deficit = (1.0 - f.iter().map(|x| x * x).sum::<f64>()).max(0.0);
    if deficit > opts.max_deficit {
        return Err(Error::TruncationExceeded {
            cutoff: opts.cutoff,
            deficit,
            limit: opts.max_deficit,
        });
    }
    *worst = worst.max(deficit);
    Ok(f)
}

fn signed(f: &[f64], sign: f64) -> Vec<f64> {
    f.iter()
        .enumerate()
        .map(|(n, x)| if sign < 0.0 && n % 2 == 1 { -x } else { *x })
        .collect()
}

/// `u`, `v` as normalised even and odd parts of `|β⟩`; `v = |1⟩` at `β = 0`.
fn even_odd_basis(f: &[f64]) -> [Vec<f64>; 2] {
    let part = |parity: usize| -> Vec<f64> {
        f.iter()
            .enumerate()
            .map(|(n, x)| if n % 2 == parity { *x } else { 0.0 })
            .collect()
    };
    let normalise = |mut v: Vec<f64>, fallback: usize| {
        let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if n == 0.0 {
            v[fallback] = 1.0;
        } else {
            v.iter_mut().for_each(|x| *x /= n);
        }
        v
    };
    [normalise(part(0), 0), normalise(part(1), 1)]
}

/// `K[n][l] = √(C(n,l) (1-η)^l η^{n-l})`.
fn kraus_table(cutoff: usize, eta: f64) -> Vec<Vec<f64>> {
    (0..=cutoff)
        .map(|n| {
            let mut binom = 1.0;
            (0..=n)
                .map(|l| {
                    if l > 0 {
                        binom = binom * (n - l + 1) as f64 / l as f64;
                    }
                    (binom * (1.0 - eta).powi(l as i32) * eta.powi((n - l) as i32)).sqrt()
                })
                .collect()
        })
        .collect()
}

/// Channel on one mode followed by projection on `{u, v}` of the damped
/// amplitude: returns `Σ_l y_l y_l†` with `y_l[i][j] = ⟨b_j|A_l|x_i⟩`, where
/// `x_i` are the mode-2 vectors left after contracting mode 1.
fn damp_and_project(x: &[Vec<C64>], basis: &[Vec<f64>; 2], kraus: &[Vec<f64>]) -> Vec<Vec<C64>> {
    let dim = x.len() * 2;
    let mut rho = vec![vec![re(0.0); dim]; dim];
    let top = kraus.len();
    for l in 0..top {
        let mut y = vec![re(0.0); dim];
        for (i, xi) in x.iter().enumerate() {
            for j in 0..2 {
                let mut acc = re(0.0);
                for n in l..top {
                    acc += xi[n] * (basis[j][n - l] * kraus[n][l]);
                }
                y[2 * i + j] = acc;
            }
        }
        for a in 0..dim {
            for b in 0..dim {
                rho[a][b] += y[a] * y[b].conj();
            }
        }
    }
    rho
}

/// Two-mode state damped on mode 2, read out in
/// `{u_{α₁}, v_{α₁}} ⊗ {u_{α₂√η}, v_{α₂√η}}`.
pub fn fock_channel_density(
    state: &CoherentSpanState,
    ch: ChannelParams,
    opts: FockOptions,
) -> Result<FockOutput<TwoQubitDensity>> {
    const SIGNS: [(f64, f64); 4] = [(1.0, 1.0), (1.0, -1.0), (-1.0, 1.0), (-1.0, -1.0)];
    let mut worst = 0.0;
    let f1 = checked_fock(state.alpha1, opts, &mut worst)?;
    let f2 = checked_fock(state.alpha2, opts, &mut worst)?;
    let f_out = checked_fock(state.alpha2.damped(ch.eta()), opts, &mut worst)?;
    let dim = opts.cutoff + 1;

    let mut psi = vec![vec![re(0.0); dim]; dim];
    for (c, &(s1, s2)) in state.coeffs.iter().zip(&SIGNS) {
        let (g1, g2) = (signed(&f1, s1), signed(&f2, s2));
        for n1 in 0..dim {
            for n2 in 0..dim {
                psi[n1][n2] += c * (g1[n1] * g2[n2]);
            }
        }
    }
    let norm: f64 = psi.iter().flatten().map(|z| z.norm_sqr()).sum();
    if norm == 0.0 {
        return Err(Error::ZeroState);
    }

    let b1 = even_odd_basis(&f1);
    let x: Vec<Vec<C64>> = b1
        .iter()
        .map(|b| (0..dim).map(|n2| (0..dim).map(|n1| psi[n1][n2] * b[n1]).sum()).collect())
        .collect();
    let rho = damp_and_project(&x, &even_odd_basis(&f_out), &kraus_table(opts.cutoff, ch.eta()));

    let m = Complex4x4::from_fn(|i, j| rho[i][j] / norm);
    let tr = m.trace().re;
    worst = f64::max(worst, (1.0 - tr).abs());
    let m = (m + m.adjoint()).scale(0.5 / tr);
    Ok(FockOutput {
        density: TwoQubitDensity::new(m)?,
        truncation_error: worst,
    })
}

/// Single-mode qubit through the channel, as a 2×2 density in
/// `{u_{α√η}, v_{α√η}}`.
pub fn fock_single_qubit_density(
    q: &CatQubit,
    ch: ChannelParams,
    opts: FockOptions,
) -> Result<FockOutput<[[C64; 2]; 2]>> {
    let mut worst = 0.0;
    let f = checked_fock(q.alpha, opts, &mut worst)?;
    let f_out = checked_fock(q.alpha.damped(ch.eta()), opts, &mut worst)?;
    let (minus, plus) = (signed(&f, -1.0), signed(&f, 1.0));
    let psi: Vec<C64> = minus.iter().zip(&plus).map(|(m, p)| q.a * *m + q.b * *p).collect();
    let norm: f64 = psi.iter().map(|z| z.norm_sqr()).sum();
    if norm == 0.0 {
        return Err(Error::ZeroState);
    }
    let rho = damp_and_project(&[psi], &even_odd_basis(&f_out), &kraus_table(opts.cutoff, ch.eta()));
    let tr = (rho[0][0] + rho[1][1]).re;
    worst = f64::max(worst, (1.0 - tr / norm).abs());
    let mut out = [[re(0.0); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = (rho[i][j] + rho[j][i].conj()) * (0.5 / tr);
        }
    }
    Ok(FockOutput {
        density: out,
        truncation_error: worst,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coherent::{chi_density, TwoModeCatState};

    fn amp(a: f64) -> RealAmplitude {
        RealAmplitude::new(a).unwrap()
    }

    #[test]
    fn coherent_vector_is_normalised() {
        let f = coherent_fock(2.0, 60);
        assert!((f.iter().map(|x| x * x).sum::<f64>() - 1.0).abs() < 1e-14);
        assert_eq!(coherent_fock(0.0, 5), vec![1.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn kraus_operators_are_complete() {
        let k = kraus_table(30, 0.37);
        for row in &k {
            let s: f64 = row.iter().map(|x| x * x).sum();
            assert!((s - 1.0).abs() < 1e-13);
        }
    }

    #[test]
    fn vacuum_in_vacuum_out() {
        let st = CoherentSpanState::new([re(1.0), re(0.0), re(0.0), re(0.0)], amp(0.0), amp(0.0)).unwrap();
        let out = fock_channel_density(&st, ChannelParams::new(0.4).unwrap(), FockOptions::default()).unwrap();
        let mut expect = Complex4x4::zeros();
        expect[(0, 0)] = re(1.0);
        assert_eq!(out.density.into_matrix(), expect);
        assert_eq!(out.truncation_error, 0.0);
    }

    #[test]
    fn lossless_reproduces_input() {
        let s = TwoModeCatState::symmetric(1.5, 0.4, 1.0).unwrap();
        let st = CoherentSpanState::from_cat(&s);
        let out = fock_channel_density(&st, ChannelParams::lossless(), FockOptions::default()).unwrap();
        assert!(out.density.matrix().max_abs_diff(chi_density(&s).unwrap().matrix()) < 1e-12);
    }

    #[test]
    fn truncation_is_reported() {
        let s = TwoModeCatState::symmetric(5.0, 0.5, 0.0).unwrap();
        let st = CoherentSpanState::from_cat(&s);
        let opts = FockOptions {
            cutoff: 20,
            ..FockOptions::default()
        };
        let r = fock_channel_density(&st, ChannelParams::new(0.5).unwrap(), opts);
        assert!(matches!(r, Err(Error::TruncationExceeded { cutoff: 20, .. })));
    }
}
