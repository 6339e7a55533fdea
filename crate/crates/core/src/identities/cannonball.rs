//! Square pyramidal numbers that are perfect squares.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_integer::Roots;

/// `1² + 2² + … + n² = n(n+1)(2n+1)/6`.
pub fn square_pyramid(n: u64) -> BigUint {
    let n = BigUint::from(n);
    &n * (&n + 1u32) * (&n * 2u32 + 1u32) / 6u32
}

fn is_square(x: &BigUint) -> bool {
    let r = x.sqrt();
    &r * &r == *x
}

/// Every `1 ≤ n ≤ limit` with `square_pyramid(n)` a perfect square.
pub fn cannonball_search(limit: u64) -> BTreeSet<u64> {
    let mut out = BTreeSet::new();
    // running sum in u128 while it fits, exact integer square root throughout
    let mut sum: u128 = 0;
    for n in 1..=limit {
        let sq = (n as u128) * (n as u128);
        match sum.checked_add(sq) {
            Some(s) => {
                sum = s;
                let r = s.sqrt();
                if r * r == s {
                    out.insert(n);
                }
            }
            None => {
                out.extend((n..=limit).filter(|&m| is_square(&square_pyramid(m))));
                break;
            }
        }
    }
    out
}
