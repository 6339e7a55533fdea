//! JSON shapes emitted by `--json`. Values that can outgrow 64 bits
//! (big integers, rationals) travel as decimal strings.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

/// An exact rational: a JSON number when it is a 64-bit integer, otherwise a
/// decimal string such as `"2/3"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Exact {
    Int(i64),
    Text(String),
}

impl From<&BigRational> for Exact {
    fn from(q: &BigRational) -> Self {
        match q
            .is_integer()
            .then(|| i64::try_from(q.to_integer()).ok())
            .flatten()
        {
            Some(n) => Exact::Int(n),
            None => Exact::Text(q.to_string()),
        }
    }
}

pub fn strings<T: ToString>(xs: &[T]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

pub fn big_strings(xs: &[BigInt]) -> Vec<String> {
    strings(xs)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Hyper {
    pub level: u32,
    pub coords: Vec<String>,
    pub text: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Scalar {
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FanoProduct {
    pub i: usize,
    pub j: usize,
    /// 0 when `i = j`, meaning the real unit.
    pub index: usize,
    pub sign: i8,
    pub text: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Clifford {
    pub p: usize,
    pub q: usize,
    /// Blade (`1`, `e1e3`, …) to coefficient.
    pub terms: BTreeMap<String, String>,
    pub text: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Classification {
    pub p: usize,
    pub q: usize,
    pub ring: String,
    pub size: u64,
    pub summands: u8,
    pub text: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Spinors {
    pub n: usize,
    pub dirac_complex_dim: u64,
    pub majorana: bool,
    pub weyl: bool,
    pub majorana_weyl: bool,
    pub minimal_real_components: u64,
    pub dirac_space: String,
    pub majorana_space: Option<String>,
    pub weyl_space: Option<String>,
    pub majorana_weyl_space: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuperYm {
    pub lo: usize,
    pub hi: usize,
    pub dims: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LatticeData {
    pub rank: usize,
    pub ambient: usize,
    pub metric: String,
    pub scale: String,
    pub basis: Vec<Vec<String>>,
    pub gram: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LatticeInfo {
    pub rank: usize,
    pub det: Exact,
    pub integral: bool,
    pub even: bool,
    pub unimodular: bool,
    /// Absent for indefinite lattices.
    pub min_norm: Option<Exact>,
    pub kissing: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Theta {
    pub order: usize,
    /// `counts[m]` vectors of norm `2m`.
    pub counts: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ShortVector {
    pub norm: u64,
    pub coeffs: Vec<i64>,
    pub coords: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ShortVectors {
    pub max_norm: u64,
    /// Norm to number of vectors, both signs counted.
    pub counts: BTreeMap<u64, u64>,
    /// Up to `limit` vectors, one per ± pair.
    pub vectors: Vec<ShortVector>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Leech {
    pub construction: String,
    pub rank: usize,
    pub det: Exact,
    pub even: bool,
    pub unimodular: bool,
    pub counts: BTreeMap<u64, u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Weyl {
    pub dim: usize,
    pub vector: Vec<String>,
    pub norm: Exact,
    pub member: bool,
    pub lightlike: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Root {
    pub dim: usize,
    pub vector: Vec<String>,
    pub norm: Exact,
    pub weyl_pairing: Exact,
    pub fundamental: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Series {
    pub low: i64,
    pub order: i64,
    pub coeffs: Vec<String>,
    pub text: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PiHex {
    pub start: u64,
    pub count: u64,
    pub digits: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Cannonball {
    pub limit: u64,
    pub solutions: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Area {
    /// Spin `j` to multiplicity; spin 0 omitted.
    pub spins: BTreeMap<String, u64>,
    pub exact: String,
    pub approx: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Link {
    pub linking_number: i64,
}
