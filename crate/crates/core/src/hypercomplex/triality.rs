use std::fmt;

use super::cayley_dickson::HyperNumber;
use crate::exactnum::Scalar;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

/// A permutation of the imaginary quaternion units `{i, j, k}`.
///
/// `images[0]` is the image of `i` (1 = i, 2 = j, 3 = k), and so on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PermutationIJK {
    images: [u8; 3],
    parity: Parity,
}

impl PermutationIJK {
    pub fn new(images: [u8; 3]) -> Result<Self> {
        let mut seen = [false; 3];
        for &m in &images {
            if !(1..=3).contains(&m) || seen[(m - 1) as usize] {
                return Err(Error::Precondition(format!(
                    "{images:?} is not a permutation of 1..3"
                )));
            }
            seen[(m - 1) as usize] = true;
        }
        let inversions = (0..3)
            .flat_map(|a| (a + 1..3).map(move |b| (a, b)))
            .filter(|&(a, b)| images[a] > images[b])
            .count();
        let parity = if inversions % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        };
        Ok(Self { images, parity })
    }

    pub fn identity() -> Self {
        Self {
            images: [1, 2, 3],
            parity: Parity::Even,
        }
    }

    /// All six permutations, even ones first.
    pub fn all() -> Vec<Self> {
        let mut v: Vec<Self> = [
            [1, 2, 3],
            [2, 3, 1],
            [3, 1, 2],
            [2, 1, 3],
            [1, 3, 2],
            [3, 2, 1],
        ]
        .into_iter()
        .map(|p| Self::new(p).expect("valid permutation"))
        .collect();
        v.sort_by_key(|p| p.parity == Parity::Odd);
        v
    }

    /// Parse a string of images such as `"jki"` (i ↦ j, j ↦ k, k ↦ i).
    pub fn parse(s: &str) -> Result<Self> {
        let images: Vec<u8> = s
            .trim()
            .chars()
            .map(|c| match c {
                'i' => Ok(1),
                'j' => Ok(2),
                'k' => Ok(3),
                _ => Err(Error::Parse(format!("bad permutation {s:?}"))),
            })
            .collect::<Result<_>>()?;
        let images: [u8; 3] = images
            .try_into()
            .map_err(|_| Error::Parse(format!("bad permutation {s:?}")))?;
        Self::new(images)
    }

    pub fn images(&self) -> [u8; 3] {
        self.images
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }
}

impl fmt::Display for PermutationIJK {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for m in self.images {
            f.write_str(["i", "j", "k"][(m - 1) as usize])?;
        }
        Ok(())
    }
}

/// `p(a + bi + cj + dk) = a + b·p(i) + c·p(j) + d·p(k)`.
pub fn ijk_permute<S: Scalar>(p: &PermutationIJK, q: &HyperNumber<S>) -> Result<HyperNumber<S>> {
    if q.level() != 2 {
        return Err(Error::LevelMismatch(q.level(), 2));
    }
    let c = q.coords();
    let mut out = vec![c[0].clone(), S::zero(), S::zero(), S::zero()];
    for (src, &dst) in p.images.iter().enumerate() {
        out[dst as usize] = c[src + 1].clone();
    }
    HyperNumber::new(2, out)
}
