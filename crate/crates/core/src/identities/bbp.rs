//! Hex digits of π by the Bailey–Borwein–Plouffe digit-extraction split.

use rayon::prelude::*;

use crate::exactnum::mod_pow;
use crate::{Error, Result};

/// Largest admissible `start + count − 1`.
pub const BBP_LIMIT: u64 = 1_000_000;

/// Fixed-point fractional bits: 28 hex digits, 16 emitted per block and 12
/// kept as guard digits.
const FRAC_BITS: u32 = 112;
const MASK: u128 = (1u128 << FRAC_BITS) - 1;
const BLOCK: u64 = 16;

/// `⌊r·2¹¹²/m⌋` for `r < m < 2²⁴`, in two 56-bit long-division steps.
fn scaled_ratio(r: u64, m: u64) -> u128 {
    let (r, m) = (r as u128, m as u128);
    let q1 = (r << 56) / m;
    let r1 = (r << 56) % m;
    (q1 << 56) + (r1 << 56) / m
}

/// `frac(16ᵈ · Σₙ 1/(16ⁿ(8n+k)))` as a 112-bit fixed-point value.
///
/// Each of the `d + 1` head terms and ≤ 28 tail terms is floored once, so
/// the result is low by fewer than `d + 30` units in the last place.
fn frac_series(d: u64, k: u64) -> u128 {
    let mut acc: u128 = 0;
    for n in 0..=d {
        let m = 8 * n + k;
        acc = (acc + scaled_ratio(mod_pow(16, d - n, m), m)) & MASK;
    }
    for shift in 1..=(FRAC_BITS / 4) as u64 {
        let m = 8 * (d + shift) + k;
        acc = (acc + ((1u128 << (FRAC_BITS - 4 * shift as u32)) / m as u128)) & MASK;
    }
    acc
}

/// `frac(16ᵈ π)` in fixed point, from `π = Σ (4/(8n+1) − 2/(8n+4) − 1/(8n+5) − 1/(8n+6)) / 16ⁿ`.
fn pi_frac(d: u64) -> u128 {
    let s1 = frac_series(d, 1);
    let s4 = frac_series(d, 4);
    let s5 = frac_series(d, 5);
    let s6 = frac_series(d, 6);
    (4 * s1)
        .wrapping_sub(2 * s4)
        .wrapping_sub(s5)
        .wrapping_sub(s6)
        & MASK
}

/// Hex digits of π after the point at positions `start .. start + count`,
/// 1-based, uppercase.
///
/// Accumulated truncation error stays below `8·(start + 30)` units of
/// `2⁻¹¹²`, far inside the 12 guard digits for `start ≤` [`BBP_LIMIT`].
pub fn bbp_pi_hex(start: u64, count: u64) -> Result<String> {
    if start == 0 || count == 0 {
        return Err(Error::OutOfRange(
            "start and count must be at least 1".into(),
        ));
    }
    match start.checked_add(count - 1) {
        Some(last) if last <= BBP_LIMIT => {}
        _ => {
            return Err(Error::OutOfRange(format!(
                "digit positions beyond {BBP_LIMIT}"
            )))
        }
    }
    let blocks: Vec<u64> = (0..count.div_ceil(BLOCK)).collect();
    let parts: Vec<String> = blocks
        .par_iter()
        .map(|&b| {
            let first = start + b * BLOCK;
            let take = BLOCK.min(start + count - first) as usize;
            let digits = pi_frac(first - 1) >> (FRAC_BITS - 4 * BLOCK as u32);
            format!("{digits:016X}")[..take].to_string()
        })
        .collect();
    Ok(parts.concat())
}
