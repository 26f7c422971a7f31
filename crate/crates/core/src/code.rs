//! n-fold repetition code against phase flips, at the level of its logical
//! channel: a majority vote over `n` independently flipped rails.

use crate::channel::{flip_prob_state, mixed_output, ChannelParams};
use crate::coherent::{TwoModeCatState, TwoQubitDensity};
use crate::error::{Error, Result};

pub const MAX_REPETITIONS: u32 = 101;

/// Odd repetition count in `1..=101`; `n = 1` is plain transmission.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CodeSpec(u32);

impl CodeSpec {
    pub fn new(n: i64) -> Result<Self> {
        if n >= 1 && n <= i64::from(MAX_REPETITIONS) && n % 2 == 1 {
            Ok(Self(n as u32))
        } else {
            Err(Error::InvalidCode(n))
        }
    }

    pub const fn direct() -> Self {
        Self(1)
    }

    pub fn n(self) -> u32 {
        self.0
    }

    /// Largest number of flips the vote still corrects.
    pub fn correctable(self) -> u32 {
        (self.0 - 1) / 2
    }
}

impl std::fmt::Display for CodeSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// `Σ_{k=0}^{(n-1)/2} C(n,k) (1-p)^{n-k} p^k`.
pub fn success_prob(code: CodeSpec, p: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::OutOfRange {
            name: "flip probability",
            range: "[0, 1]",
            value: p,
        });
    }
    let n = code.n();
    let q = 1.0 - p;
    let mut binom = 1.0;
    let mut total = 0.0;
    for k in 0..=code.correctable() {
        if k > 0 {
            binom = binom * f64::from(n - k + 1) / f64::from(k);
        }
        total += binom * q.powi((n - k) as i32) * p.powi(k as i32);
    }
    Ok(total.clamp(0.0, 1.0))
}

/// `P_s |χ'⟩⟨χ'| + (1-P_s) Z|χ'⟩⟨χ'|Z` with `P_s = success_prob(code, P)`
/// and `P` the direct-transmission flip weight of `s`.
pub fn transmit_encoded(s: &TwoModeCatState, ch: ChannelParams, code: CodeSpec) -> Result<TwoQubitDensity> {
    let p = flip_prob_state(s, ch)?;
    if code == CodeSpec::direct() {
        // Avoids the 1 - (1 - p) round trip.
        return mixed_output(s, ch, p);
    }
    let keep = success_prob(code, p)?;
    mixed_output(s, ch, 1.0 - keep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channel::transmit_direct;
    use crate::coherent::chi_density;

    fn grid() -> impl Iterator<Item = f64> {
        (0..=100).map(|i| f64::from(i) / 100.0)
    }

    #[test]
    fn rejects_bad_codes() {
        for n in [0, -1, 2, 4, 103, 1001] {
            assert_eq!(CodeSpec::new(n), Err(Error::InvalidCode(n)));
        }
        assert_eq!(CodeSpec::new(101).unwrap().n(), 101);
    }

    #[test]
    fn closed_forms_for_three_and_five() {
        let three = CodeSpec::new(3).unwrap();
        let five = CodeSpec::new(5).unwrap();
        for p in grid() {
            let s3 = 1.0 - 3.0 * p * p + 2.0 * p.powi(3);
            let s5 = 1.0 - 10.0 * p.powi(3) + 15.0 * p.powi(4) - 6.0 * p.powi(5);
            assert!((success_prob(three, p).unwrap() - s3).abs() < 1e-12);
            assert!((success_prob(five, p).unwrap() - s5).abs() < 1e-12);
        }
    }

    #[test]
    fn fixed_points() {
        for n in (1..=101).step_by(2) {
            let code = CodeSpec::new(n).unwrap();
            assert!((success_prob(code, 0.5).unwrap() - 0.5).abs() < 1e-12);
            assert_eq!(success_prob(code, 0.0).unwrap(), 1.0);
        }
        assert_eq!(success_prob(CodeSpec::direct(), 0.3).unwrap(), 0.7);
        assert!(success_prob(CodeSpec::direct(), 1.2).is_err());
    }

    #[test]
    fn encoded_direct_equals_transmit_direct() {
        let s = TwoModeCatState::symmetric(1.0, 0.3, 0.6).unwrap();
        let ch = ChannelParams::new(2.0 / 3.0).unwrap();
        let a = transmit_encoded(&s, ch, CodeSpec::direct()).unwrap();
        assert_eq!(a, transmit_direct(&s, ch).unwrap());
    }

    #[test]
    fn encoded_lossless_is_pure() {
        let s = TwoModeCatState::symmetric(1.4, 0.5, 0.0).unwrap();
        let out = transmit_encoded(&s, ChannelParams::lossless(), CodeSpec::new(11).unwrap()).unwrap();
        assert_eq!(out, chi_density(&s).unwrap());
    }
}
