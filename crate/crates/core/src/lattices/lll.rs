//! Integral LLL on a Gram matrix. All Gram–Schmidt data is kept as the
//! integers `d_k` and `λ_{k,j} = d_{j+1} μ_{k,j}`, so no rounding occurs.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::lattice::Lattice;
use super::linalg::{common_denominator, identity_z, scale_to_integer, ZMat};
use crate::{Error, Result};

/// Output of a reduction: `gram' = T · gram · Tᵀ` with `T` unimodular.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LllOutput {
    pub gram: ZMat,
    pub transform: ZMat,
}

pub fn default_delta() -> BigRational {
    BigRational::new(99.into(), 100.into())
}

/// Reduce a positive definite integer Gram matrix at parameter `delta`.
pub fn lll_gram(gram: &ZMat, delta: &BigRational) -> Result<LllOutput> {
    let quarter = BigRational::new(1.into(), 4.into());
    if *delta <= quarter || *delta >= BigRational::one() {
        return Err(Error::OutOfRange(format!("delta {delta} not in (1/4, 1)")));
    }
    let n = gram.len();
    let mut st = State {
        g: gram.clone(),
        h: identity_z(n),
        d: vec![BigInt::zero(); n + 1],
        lam: vec![vec![BigInt::zero(); n]; n],
        a: delta.numer().clone(),
        b: delta.denom().clone(),
    };
    if n == 0 {
        return Ok(LllOutput {
            gram: st.g,
            transform: st.h,
        });
    }
    // 1-based: d[0] = 1, d[i] = det of the leading i×i block.
    st.d[0] = BigInt::one();
    st.d[1] = st.g[0][0].clone();
    if !st.d[1].is_positive() {
        return Err(Error::NotDefinite);
    }
    let mut k = 2;
    let mut kmax = 1;
    while k <= n {
        if k > kmax {
            kmax = k;
            st.gram_schmidt_row(k)?;
        }
        loop {
            st.redi(k, k - 1);
            if st.lovasz_fails(k) {
                st.swapi(k, kmax);
                k = (k - 1).max(2);
            } else {
                for l in (1..k - 1).rev() {
                    st.redi(k, l);
                }
                k += 1;
                break;
            }
        }
    }
    Ok(LllOutput {
        gram: st.g,
        transform: st.h,
    })
}

struct State {
    g: ZMat,
    h: ZMat,
    d: Vec<BigInt>,
    lam: Vec<Vec<BigInt>>,
    a: BigInt,
    b: BigInt,
}

impl State {
    // Indices below are 1-based; vectors are stored 0-based.
    fn lambda(&self, k: usize, j: usize) -> &BigInt {
        &self.lam[k - 1][j - 1]
    }

    fn set_lambda(&mut self, k: usize, j: usize, v: BigInt) {
        self.lam[k - 1][j - 1] = v;
    }

    fn gram_schmidt_row(&mut self, k: usize) -> Result<()> {
        for j in 1..=k {
            let mut u = self.g[k - 1][j - 1].clone();
            for i in 1..j {
                u = (&self.d[i] * &u - self.lambda(k, i) * self.lambda(j, i)) / &self.d[i - 1];
            }
            if j < k {
                self.set_lambda(k, j, u);
            } else {
                if !u.is_positive() {
                    return Err(Error::NotDefinite);
                }
                self.d[k] = u;
            }
        }
        Ok(())
    }

    fn lovasz_fails(&self, k: usize) -> bool {
        let l = self.lambda(k, k - 1);
        let lhs = &self.b * (&self.d[k] * &self.d[k - 2] + l * l);
        let rhs = &self.a * &self.d[k - 1] * &self.d[k - 1];
        lhs < rhs
    }

    fn redi(&mut self, k: usize, l: usize) {
        let lam = self.lambda(k, l).clone();
        let dl = self.d[l].clone();
        if (&lam * 2u32).abs() <= dl {
            return;
        }
        // nearest integer to lam / dl
        let q = (&lam * 2u32 + &dl).div_floor(&(&dl * 2u32));
        let (kk, ll) = (k - 1, l - 1);
        let n = self.g.len();
        for j in 0..n {
            let t = &q * &self.h[ll][j];
            self.h[kk][j] -= t;
        }
        for j in 0..n {
            let t = &q * &self.g[ll][j];
            self.g[kk][j] -= t;
        }
        for j in 0..n {
            let t = &q * &self.g[j][ll];
            self.g[j][kk] -= t;
        }
        for j in 0..n {
            if j != kk {
                self.g[kk][j] = self.g[j][kk].clone();
            }
        }
        self.set_lambda(k, l, lam - &q * &dl);
        for i in 1..l {
            let v = self.lambda(k, i) - &q * self.lambda(l, i);
            self.set_lambda(k, i, v);
        }
    }

    fn swapi(&mut self, k: usize, kmax: usize) {
        let (kk, km) = (k - 1, k - 2);
        self.h.swap(kk, km);
        self.g.swap(kk, km);
        for row in &mut self.g {
            row.swap(kk, km);
        }
        for j in 1..k - 1 {
            let a = self.lambda(k, j).clone();
            let b = self.lambda(k - 1, j).clone();
            self.set_lambda(k, j, b);
            self.set_lambda(k - 1, j, a);
        }
        let lam = self.lambda(k, k - 1).clone();
        let bb = (&self.d[k - 2] * &self.d[k] + &lam * &lam) / &self.d[k - 1];
        for i in k + 1..=kmax {
            let t = self.lambda(i, k).clone();
            let nk = (&self.d[k] * self.lambda(i, k - 1) - &lam * &t) / &self.d[k - 1];
            self.set_lambda(i, k, nk);
            let nk1 = (&bb * &t + &lam * self.lambda(i, k)) / &self.d[k];
            self.set_lambda(i, k - 1, nk1);
        }
        self.d[k - 1] = bb;
    }
}

/// LLL-reduce a positive definite lattice; the result spans the same points.
pub fn lll_reduce(l: &Lattice, delta: &BigRational) -> Result<Lattice> {
    if !l.is_definite() {
        return Err(Error::NotDefinite);
    }
    let den = common_denominator(l.gram());
    let g = scale_to_integer(l.gram(), &den);
    let out = lll_gram(&g, delta)?;
    l.with_basis_transform(&out.transform)
}
