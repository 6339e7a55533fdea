use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Generators `e_1..e_p` square to −1, `e_{p+1}..e_{p+q}` to +1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CliffordSignature {
    p: usize,
    q: usize,
}

impl CliffordSignature {
    /// Bound for signatures that carry elements.
    pub const MAX_GENERATORS: usize = 24;
    pub const MAX_CLASSIFIED: usize = 60;

    pub fn new(p: usize, q: usize) -> Result<Self> {
        if p + q > Self::MAX_GENERATORS {
            return Err(Error::OutOfRange(format!(
                "C_{{{p},{q}}} has more than {} generators",
                Self::MAX_GENERATORS
            )));
        }
        Ok(Self { p, q })
    }

    /// Signatures used only for classification may exceed the element
    /// bound.
    pub fn for_classification(p: usize, q: usize) -> Result<Self> {
        if p + q > Self::MAX_CLASSIFIED {
            return Err(Error::OutOfRange(format!(
                "C_{{{p},{q}}} has more than {} generators",
                Self::MAX_CLASSIFIED
            )));
        }
        Ok(Self { p, q })
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn n(&self) -> usize {
        self.p + self.q
    }

    /// `e_i² = ±1` for the 1-based generator `i`.
    pub fn square(&self, i: usize) -> i8 {
        if i <= self.p {
            -1
        } else {
            1
        }
    }
}

impl fmt::Display for CliffordSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C_{{{},{}}}", self.p, self.q)
    }
}

/// A multivector: rational coefficients on blades, a blade being the
/// ascending product of the generators in its bitmask (bit `i−1` for `e_i`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CliffordElement {
    sig: CliffordSignature,
    terms: BTreeMap<u32, BigRational>,
}

impl CliffordElement {
    pub fn zero(sig: CliffordSignature) -> Self {
        Self {
            sig,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(sig: CliffordSignature, c: BigRational) -> Self {
        Self::from_terms(sig, [(0, c)]).expect("scalar blade")
    }

    pub fn one(sig: CliffordSignature) -> Self {
        Self::scalar(sig, BigRational::one())
    }

    /// `c · e_{i₁} e_{i₂} ⋯` for 1-based indices in any order (reordered
    /// with the relations, repeated generators contracted).
    pub fn blade(sig: CliffordSignature, indices: &[usize], c: BigRational) -> Result<Self> {
        let mut x = Self::scalar(sig, c);
        for &i in indices {
            if i == 0 || i > sig.n() {
                return Err(Error::IndexOutOfRange(i as i64));
            }
            let e = Self::from_terms(sig, [(1u32 << (i - 1), BigRational::one())])?;
            x = clif_mul(&x, &e)?;
        }
        Ok(x)
    }

    pub fn generator(sig: CliffordSignature, i: usize) -> Result<Self> {
        Self::blade(sig, &[i], BigRational::one())
    }

    pub fn from_terms(
        sig: CliffordSignature,
        terms: impl IntoIterator<Item = (u32, BigRational)>,
    ) -> Result<Self> {
        let limit = 1u64 << sig.n();
        let mut x = Self::zero(sig);
        for (mask, c) in terms {
            if u64::from(mask) >= limit {
                return Err(Error::IndexOutOfRange(i64::from(mask)));
            }
            x.add_term(mask, c);
        }
        Ok(x)
    }

    fn add_term(&mut self, mask: u32, c: BigRational) {
        let slot = self.terms.entry(mask).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&mask);
        }
    }

    pub fn signature(&self) -> CliffordSignature {
        self.sig
    }

    pub fn terms(&self) -> &BTreeMap<u32, BigRational> {
        &self.terms
    }

    pub fn coefficient(&self, mask: u32) -> BigRational {
        self.terms
            .get(&mask)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        check(self, o)?;
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(*m, c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        Self {
            sig: self.sig,
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        let mut out = Self::zero(self.sig);
        for (m, c) in &self.terms {
            out.add_term(*m, c * k);
        }
        out
    }
}

fn check(x: &CliffordElement, y: &CliffordElement) -> Result<()> {
    if x.sig != y.sig {
        return Err(Error::SignatureMismatch(x.sig.p, x.sig.q, y.sig.p, y.sig.q));
    }
    Ok(())
}

/// Sign of `blade(a) · blade(b)` relative to `blade(a xor b)`.
fn blade_sign(sig: CliffordSignature, a: u32, b: u32) -> i8 {
    // transpositions: pairs (i in a, j in b) with i > j
    let mut swaps = 0u32;
    let mut rest = b;
    while rest != 0 {
        let j = rest.trailing_zeros();
        swaps += (a >> (j + 1)).count_ones();
        rest &= rest - 1;
    }
    let negative_squares = (a & b & ((1u64 << sig.p) - 1) as u32).count_ones();
    if (swaps + negative_squares) % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn clif_mul(x: &CliffordElement, y: &CliffordElement) -> Result<CliffordElement> {
    check(x, y)?;
    let mut out = CliffordElement::zero(x.sig);
    for (&a, ca) in &x.terms {
        for (&b, cb) in &y.terms {
            let c = ca * cb;
            let c = if blade_sign(x.sig, a, b) < 0 { -c } else { c };
            out.add_term(a ^ b, c);
        }
    }
    Ok(out)
}

/// Reverses every blade: grade `g` picks up `(−1)^{g(g−1)/2}`.
pub fn clif_reverse(x: &CliffordElement) -> CliffordElement {
    CliffordElement {
        sig: x.sig,
        terms: x
            .terms
            .iter()
            .map(|(&m, c)| {
                let g = m.count_ones();
                (
                    m,
                    if (g * g.saturating_sub(1) / 2) % 2 == 1 {
                        -c
                    } else {
                        c.clone()
                    },
                )
            })
            .collect(),
    }
}

/// `Γ²` for `Γ = e_1 ⋯ e_n`: `n(n−1)/2` transpositions and `p` negative
/// squares.
pub fn gamma_squared(sig: CliffordSignature) -> i8 {
    let n = sig.n();
    if (n * n.saturating_sub(1) / 2 + sig.p) % 2 == 0 {
        1
    } else {
        -1
    }
}

impl fmt::Display for CliffordElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (&m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            let blade: String = (0..32)
                .filter(|b| m >> b & 1 == 1)
                .map(|b| format!("e{}", b + 1))
                .collect();
            if m == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&blade)?;
            } else {
                write!(f, "{mag}{blade}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn sig(p: usize, q: usize) -> CliffordSignature {
        CliffordSignature::new(p, q).unwrap()
    }

    fn random(s: CliffordSignature, rng: &mut ChaCha8Rng) -> CliffordElement {
        let terms: Vec<(u32, BigRational)> = (0..1u32 << s.n())
            .filter_map(|m| {
                rng.gen_bool(0.6)
                    .then(|| (m, rat(rng.gen_range(-5..=5), rng.gen_range(1..=3))))
            })
            .collect();
        CliffordElement::from_terms(s, terms).unwrap()
    }

    #[test]
    fn bivector_squares() {
        let s = sig(2, 0);
        let b = CliffordElement::blade(s, &[1, 2], rat(1, 1)).unwrap();
        assert_eq!(
            clif_mul(&b, &b).unwrap(),
            CliffordElement::scalar(s, rat(-1, 1))
        );
        let s = sig(1, 1);
        let b = CliffordElement::blade(s, &[1, 2], rat(1, 1)).unwrap();
        assert_eq!(clif_mul(&b, &b).unwrap(), CliffordElement::one(s));
    }

    #[test]
    fn relations() {
        let s = sig(2, 2);
        for i in 1..=4 {
            let ei = CliffordElement::generator(s, i).unwrap();
            let sq = clif_mul(&ei, &ei).unwrap();
            assert_eq!(
                sq,
                CliffordElement::scalar(s, rat(i64::from(s.square(i)), 1))
            );
            for j in 1..=4 {
                if i == j {
                    continue;
                }
                let ej = CliffordElement::generator(s, j).unwrap();
                let ij = clif_mul(&ei, &ej).unwrap();
                assert_eq!(ij, clif_mul(&ej, &ei).unwrap().neg());
            }
        }
        let ba = CliffordElement::blade(s, &[3, 1], rat(1, 1)).unwrap();
        assert_eq!(ba, CliffordElement::blade(s, &[1, 3], rat(-1, 1)).unwrap());
    }

    #[test]
    fn unit_law_and_mismatch() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let s = sig(3, 1);
        for _ in 0..50 {
            let x = random(s, &mut rng);
            assert_eq!(clif_mul(&x, &CliffordElement::one(s)).unwrap(), x);
        }
        let a = CliffordElement::one(sig(1, 0));
        let b = CliffordElement::one(sig(0, 1));
        assert_eq!(clif_mul(&a, &b), Err(Error::SignatureMismatch(1, 0, 0, 1)));
    }

    #[test]
    fn associativity() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for s in [sig(3, 0), sig(1, 3), sig(4, 1)] {
            for _ in 0..300 {
                let (x, y, z) = (
                    random(s, &mut rng),
                    random(s, &mut rng),
                    random(s, &mut rng),
                );
                let l = clif_mul(&clif_mul(&x, &y).unwrap(), &z).unwrap();
                let r = clif_mul(&x, &clif_mul(&y, &z).unwrap()).unwrap();
                assert_eq!(l, r);
            }
        }
    }

    #[test]
    fn reversion() {
        let s = sig(2, 1);
        let c = CliffordElement::scalar(s, rat(3, 2));
        assert_eq!(clif_reverse(&c), c);
        let e = CliffordElement::generator(s, 2).unwrap();
        assert_eq!(clif_reverse(&e), e);
        let b = CliffordElement::blade(s, &[1, 2], rat(1, 1)).unwrap();
        assert_eq!(
            clif_reverse(&b),
            CliffordElement::blade(s, &[2, 1], rat(1, 1)).unwrap()
        );
        assert_eq!(clif_reverse(&b), b.neg());
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for s in [sig(2, 1), sig(1, 3), sig(0, 4)] {
            for _ in 0..100 {
                let (x, y) = (random(s, &mut rng), random(s, &mut rng));
                let lhs = clif_reverse(&clif_mul(&x, &y).unwrap());
                let rhs = clif_mul(&clif_reverse(&y), &clif_reverse(&x)).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn gamma_square_matches_product() {
        for n in 1..=10 {
            let s = sig(n - 1, 1);
            let idx: Vec<usize> = (1..=n).collect();
            let g = CliffordElement::blade(s, &idx, rat(1, 1)).unwrap();
            let g2 = clif_mul(&g, &g).unwrap();
            assert_eq!(
                g2,
                CliffordElement::scalar(s, rat(i64::from(gamma_squared(s)), 1))
            );
        }
    }

    #[test]
    fn display_and_bounds() {
        let s = sig(3, 0);
        let x = CliffordElement::from_terms(s, [(0, rat(1, 1)), (3, rat(2, 1)), (4, rat(-1, 2))])
            .unwrap();
        assert_eq!(x.to_string(), "1 + 2e1e2 - 1/2e3");
        assert_eq!(CliffordElement::zero(s).to_string(), "0");
        assert!(CliffordElement::from_terms(s, [(8, rat(1, 1))]).is_err());
        assert!(CliffordElement::generator(s, 4).is_err());
        assert!(CliffordSignature::new(20, 5).is_err());
        let z = CliffordElement::from_terms(s, [(1, rat(1, 1)), (1, rat(-1, 1))]).unwrap();
        assert!(z.is_zero() && z.terms().is_empty());
    }
}
