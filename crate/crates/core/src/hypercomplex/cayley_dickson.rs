use std::fmt;

use num_traits::Zero;

use crate::exactnum::Scalar;
use crate::{Error, Result};

/// A level-`k` Cayley–Dickson number: `2^k` exact coordinates.
///
/// Coordinate `i` multiplies the basis unit `e_i`, `e_0 = 1`. The pair
/// `(a, b)` of level-`k−1` numbers is stored as `a`'s coordinates followed
/// by `b`'s, so at level 3 the units `e_1..e_7` are the octonion units in the
/// usual doubling labels (`e_4 = (0, 1)`, `e_5 = (0, i)`, …).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HyperNumber<S> {
    level: u32,
    coords: Vec<S>,
}

impl<S: Scalar> HyperNumber<S> {
    pub fn new(level: u32, coords: Vec<S>) -> Result<Self> {
        if coords.len() != 1usize << level {
            return Err(Error::DimensionMismatch(coords.len(), 1 << level));
        }
        Ok(Self { level, coords })
    }

    pub fn zero(level: u32) -> Self {
        Self {
            level,
            coords: vec![S::zero(); 1 << level],
        }
    }

    pub fn one(level: u32) -> Self {
        Self::scalar(level, S::one())
    }

    pub fn scalar(level: u32, s: S) -> Self {
        let mut x = Self::zero(level);
        x.coords[0] = s;
        x
    }

    /// The basis unit `e_i`.
    pub fn basis(level: u32, i: usize) -> Result<Self> {
        if i >= 1 << level {
            return Err(Error::IndexOutOfRange(i as i64));
        }
        let mut x = Self::zero(level);
        x.coords[i] = S::one();
        Ok(x)
    }

    /// Build `(a, b)` one level up.
    pub fn pair(a: &Self, b: &Self) -> Result<Self> {
        check_level(a, b)?;
        let mut coords = a.coords.clone();
        coords.extend(b.coords.iter().cloned());
        Ok(Self {
            level: a.level + 1,
            coords,
        })
    }

    /// Split into the halves `(a, b)`. Level 0 has no halves.
    pub fn halves(&self) -> Option<(Self, Self)> {
        if self.level == 0 {
            return None;
        }
        let h = self.coords.len() / 2;
        Some((
            Self {
                level: self.level - 1,
                coords: self.coords[..h].to_vec(),
            },
            Self {
                level: self.level - 1,
                coords: self.coords[h..].to_vec(),
            },
        ))
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn coords(&self) -> &[S] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<S> {
        self.coords
    }

    pub fn real(&self) -> &S {
        &self.coords[0]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        check_level(self, o)?;
        Ok(self.zip(o, |a, b| a.clone() + b))
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        check_level(self, o)?;
        Ok(self.zip(o, |a, b| a.clone() - b))
    }

    pub fn neg(&self) -> Self {
        self.map(|a| -a.clone())
    }

    pub fn scale(&self, k: &S) -> Self {
        self.map(|a| a.clone() * k)
    }

    /// Sum of squared coordinates. Equals [`cd_norm`] by construction.
    pub fn sum_of_squares(&self) -> S {
        self.coords
            .iter()
            .fold(S::zero(), |acc, c| acc + &(c.clone() * c))
    }

    fn map(&self, f: impl Fn(&S) -> S) -> Self {
        Self {
            level: self.level,
            coords: self.coords.iter().map(f).collect(),
        }
    }

    fn zip(&self, o: &Self, f: impl Fn(&S, &S) -> S) -> Self {
        Self {
            level: self.level,
            coords: self
                .coords
                .iter()
                .zip(&o.coords)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }
}

fn check_level<S>(x: &HyperNumber<S>, y: &HyperNumber<S>) -> Result<()> {
    if x.level != y.level {
        return Err(Error::LevelMismatch(x.level, y.level));
    }
    Ok(())
}

fn add_into<S: Scalar>(a: &mut [S], b: &[S]) {
    for (x, y) in a.iter_mut().zip(b) {
        *x = std::mem::replace(x, S::zero()) + y;
    }
}

fn sub_into<S: Scalar>(a: &mut [S], b: &[S]) {
    for (x, y) in a.iter_mut().zip(b) {
        *x = std::mem::replace(x, S::zero()) - y;
    }
}

fn conj_slice<S: Scalar>(x: &[S]) -> Vec<S> {
    let mut out = x.to_vec();
    for c in out.iter_mut().skip(1) {
        *c = -std::mem::replace(c, S::zero());
    }
    out
}

/// `(a,b)(c,d) = (ac − d*b, da + bc*)`.
fn mul_slices<S: Scalar>(x: &[S], y: &[S]) -> Vec<S> {
    if x.len() == 1 {
        return vec![x[0].clone() * &y[0]];
    }
    let h = x.len() / 2;
    let (a, b) = x.split_at(h);
    let (c, d) = y.split_at(h);
    let mut left = mul_slices(a, c);
    sub_into(&mut left, &mul_slices(&conj_slice(d), b));
    let mut right = mul_slices(d, a);
    add_into(&mut right, &mul_slices(b, &conj_slice(c)));
    left.extend(right);
    left
}

/// Cayley–Dickson product.
pub fn cd_mul<S: Scalar>(x: &HyperNumber<S>, y: &HyperNumber<S>) -> Result<HyperNumber<S>> {
    check_level(x, y)?;
    Ok(HyperNumber {
        level: x.level,
        coords: mul_slices(&x.coords, &y.coords),
    })
}

/// `(a,b)* = (a*, −b)`; at every level this negates all non-real coordinates.
pub fn cd_conj<S: Scalar>(x: &HyperNumber<S>) -> HyperNumber<S> {
    HyperNumber {
        level: x.level,
        coords: conj_slice(&x.coords),
    }
}

/// The real part of `x·x*`.
pub fn cd_norm<S: Scalar>(x: &HyperNumber<S>) -> S {
    mul_slices(&x.coords, &conj_slice(&x.coords)).swap_remove(0)
}

/// `x* / (x x*)`. A two-sided inverse up to the octonions; above that it
/// still inverts `x` against its own conjugate direction.
pub fn cd_inv<S: Scalar>(x: &HyperNumber<S>) -> Result<HyperNumber<S>> {
    if x.is_zero() {
        return Err(Error::ZeroInverse);
    }
    let n = cd_norm(x).recip().ok_or(Error::ZeroInverse)?;
    Ok(cd_conj(x).scale(&n))
}

impl<S: Scalar + fmt::Display> fmt::Display for HyperNumber<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let text = c.to_string();
            let (neg, mag) = match text.strip_prefix('-') {
                Some(m) => (true, m.to_string()),
                None => (false, text),
            };
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            if i == 0 {
                f.write_str(&mag)?;
            } else if c.is_one() || (-c.clone()).is_one() {
                write!(f, "e{i}")?;
            } else {
                write!(f, "{mag}e{i}")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl<S: fmt::Debug> fmt::Debug for HyperNumber<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L{}{:?}", self.level, self.coords)
    }
}
