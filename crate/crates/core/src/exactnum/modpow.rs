/// `base^exp mod modulus` by binary exponentiation, O(log exp) products.
///
/// Intermediate products are taken in `u128`, so any `u64` modulus is safe.
/// `modulus == 0` is rejected with a panic; `modulus == 1` yields 0.
pub fn mod_pow(base: u64, mut exp: u64, modulus: u64) -> u64 {
    assert!(modulus >= 1, "modulus must be positive");
    let m = modulus as u128;
    let mut result: u128 = 1 % m;
    let mut b = base as u128 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    result as u64
}

/// Repeated multiplication; linear in `exp`. Reference for [`mod_pow`].
pub fn mod_pow_naive(base: u64, exp: u64, modulus: u64) -> u64 {
    assert!(modulus >= 1, "modulus must be positive");
    let m = modulus as u128;
    let b = base as u128 % m;
    let mut acc = 1 % m;
    for _ in 0..exp {
        acc = acc * b % m;
    }
    acc as u64
}
