use crate::code::CodeSpec;
use crate::error::{Error, Result};

pub const MAX_ENUMERATED: u32 = 15;

/// Probability that a majority vote over `n` rails, each flipped
/// independently with probability `p`, is correct. Sums all `2ⁿ` patterns.
pub fn majority_vote_success(code: CodeSpec, p: f64) -> Result<f64> {
    let n = code.n();
    if n > MAX_ENUMERATED {
        return Err(Error::EnumerationRefused(n));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::OutOfRange {
            name: "flip probability",
            range: "[0, 1]",
            value: p,
        });
    }
    let mut total = 0.0;
    for pattern in 0u32..(1 << n) {
        let flips = pattern.count_ones();
        if 2 * flips < n {
            total += p.powi(flips as i32) * (1.0 - p).powi((n - flips) as i32);
        }
    }
    Ok(total)
}
