use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;

use super::cayley_dickson::HyperNumber;
use crate::exactnum::rat;

/// Hurwitz integral quaternions: all four coordinates integers, or all four
/// halves of odd integers.
pub fn hurwitz_contains(q: &HyperNumber<BigRational>) -> bool {
    if q.level() != 2 {
        return false;
    }
    let c = q.coords();
    let all_int = c.iter().all(|x| x.is_integer());
    let all_half = c
        .iter()
        .all(|x| x.denom() == &2.into() && x.numer().is_odd());
    all_int || all_half
}

/// The 24 units `±1, ±i, ±j, ±k, (±1 ± i ± j ± k)/2`.
pub fn hurwitz_units() -> Vec<HyperNumber<BigRational>> {
    let mut out = Vec::with_capacity(24);
    for axis in 0..4 {
        for s in [1, -1] {
            let mut c = vec![rat(0, 1); 4];
            c[axis] = rat(s, 1);
            out.push(HyperNumber::new(2, c).expect("level 2"));
        }
    }
    for mask in 0..16u32 {
        let c = (0..4)
            .map(|b| {
                if mask >> b & 1 == 1 {
                    rat(-1, 2)
                } else {
                    rat(1, 2)
                }
            })
            .collect();
        out.push(HyperNumber::new(2, c).expect("level 2"));
    }
    debug_assert!(out.iter().all(|u| u.sum_of_squares().is_one()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypercomplex::{cd_mul, ijk_permute, PermutationIJK};

    fn q(c: [(i64, i64); 4]) -> HyperNumber<BigRational> {
        HyperNumber::new(2, c.iter().map(|&(n, d)| rat(n, d)).collect()).unwrap()
    }

    #[test]
    fn membership_examples() {
        assert!(hurwitz_contains(&q([(1, 1), (0, 1), (0, 1), (0, 1)])));
        assert!(hurwitz_contains(&q([(1, 2), (1, 2), (1, 2), (1, 2)])));
        assert!(hurwitz_contains(&q([(-3, 2), (1, 2), (5, 2), (1, 2)])));
        assert!(!hurwitz_contains(&q([(1, 2), (0, 1), (0, 1), (0, 1)])));
        assert!(!hurwitz_contains(&q([(1, 4), (1, 4), (1, 4), (1, 4)])));
    }

    #[test]
    fn units_form_a_group() {
        let units = hurwitz_units();
        assert_eq!(units.len(), 24);
        for a in &units {
            for b in &units {
                let p = cd_mul(a, b).unwrap();
                assert!(units.contains(&p));
            }
        }
    }

    #[test]
    fn permutations_preserve_the_ring() {
        // units generate the ring additively
        for p in PermutationIJK::all() {
            for u in hurwitz_units() {
                assert!(hurwitz_contains(&ijk_permute(&p, &u).unwrap()));
            }
        }
    }
}
