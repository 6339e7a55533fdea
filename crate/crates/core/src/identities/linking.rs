//! Gauss linking number of two closed integer polygons, by signed crossings
//! in a generic projection.

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::{Error, Result};

pub type Point = [i64; 3];

/// Closed polygon; the last vertex joins the first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyLoop {
    vertices: Vec<Point>,
}

impl PolyLoop {
    /// At least three vertices, cyclically consecutive ones distinct.
    pub fn new(vertices: Vec<Point>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::InvalidLoop(format!(
                "{} vertices, need at least 3",
                vertices.len()
            )));
        }
        let n = vertices.len();
        if let Some(i) = (0..n).find(|&i| vertices[i] == vertices[(i + 1) % n]) {
            return Err(Error::InvalidLoop(format!(
                "vertex {i} repeats its successor"
            )));
        }
        Ok(Self { vertices })
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn reversed(&self) -> Self {
        Self {
            vertices: self.vertices.iter().rev().copied().collect(),
        }
    }

    pub fn translated(&self, by: Point) -> Self {
        Self {
            vertices: self
                .vertices
                .iter()
                .map(|p| [p[0] + by[0], p[1] + by[1], p[2] + by[2]])
                .collect(),
        }
    }

    fn segments(&self) -> impl Iterator<Item = (V, V)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (lift(self.vertices[i]), lift(self.vertices[(i + 1) % n])))
    }
}

type V = [BigInt; 3];

fn lift(p: Point) -> V {
    p.map(BigInt::from)
}

fn sub(a: &V, b: &V) -> V {
    [&a[0] - &b[0], &a[1] - &b[1], &a[2] - &b[2]]
}

fn dot(a: &V, b: &V) -> BigInt {
    &a[0] * &b[0] + &a[1] * &b[1] + &a[2] * &b[2]
}

fn cross(a: &V, b: &V) -> V {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

fn is_zero(a: &V) -> bool {
    a.iter().all(Zero::is_zero)
}

/// Whether closed segments `[p, p+r]` and `[q, q+w]` share a point.
fn segments_meet(p: &V, p2: &V, q: &V, q2: &V) -> bool {
    let (r, w, qp) = (sub(p2, p), sub(q2, q), sub(q, p));
    let n = cross(&r, &w);
    if is_zero(&n) {
        if !is_zero(&cross(&qp, &r)) {
            return false;
        }
        // collinear: compare intervals along r
        let rr = dot(&r, &r);
        let a = dot(&qp, &r);
        let b = dot(&sub(q2, p), &r);
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        return hi >= BigInt::zero() && lo <= rr;
    }
    if !dot(&qp, &n).is_zero() {
        return false;
    }
    // p + s r = q + t w with s = (qp × w)·n / |n|², t = (qp × r)·n / |n|²
    let nn = dot(&n, &n);
    let s = dot(&cross(&qp, &w), &n);
    let t = dot(&cross(&qp, &r), &n);
    let inside = |x: &BigInt| !x.is_negative() && *x <= nn;
    inside(&s) && inside(&t)
}

/// Two integer vectors spanning the plane orthogonal to `d`.
fn screen_basis(d: &V) -> (V, V) {
    let k = (0..3).min_by_key(|&i| d[i].abs()).unwrap();
    let mut e: V = [BigInt::zero(), BigInt::zero(), BigInt::zero()];
    e[k] = BigInt::from(1);
    let u = cross(d, &e);
    let v = cross(d, &u);
    (u, v)
}

type P2 = [BigInt; 2];

fn orient(a: &P2, b: &P2, c: &P2) -> BigInt {
    (&b[0] - &a[0]) * (&c[1] - &a[1]) - (&b[1] - &a[1]) * (&c[0] - &a[0])
}

/// `c` on segment `ab`, given `orient(a, b, c) = 0`.
fn within(a: &P2, b: &P2, c: &P2) -> bool {
    (0..2).all(|i| a[i].clone().min(b[i].clone()) <= c[i] && c[i] <= a[i].clone().max(b[i].clone()))
}

enum Crossing {
    None,
    Proper { s: BigRational, t: BigRational },
    Degenerate,
}

fn crossing(a: &P2, b: &P2, c: &P2, d: &P2) -> Crossing {
    let (o1, o2, o3, o4) = (
        orient(a, b, c),
        orient(a, b, d),
        orient(c, d, a),
        orient(c, d, b),
    );
    let touch = (o1.is_zero() && within(a, b, c))
        || (o2.is_zero() && within(a, b, d))
        || (o3.is_zero() && within(c, d, a))
        || (o4.is_zero() && within(c, d, b));
    if touch {
        return Crossing::Degenerate;
    }
    if o1.signum() != o2.signum() && o3.signum() != o4.signum() && !o1.is_zero() && !o3.is_zero() {
        let s = BigRational::new(o3.clone(), &o3 - &o4);
        let t = BigRational::new(o1.clone(), &o1 - &o2);
        return Crossing::Proper { s, t };
    }
    Crossing::None
}

/// Candidate view directions; the first few are already generic for most
/// axis-aligned inputs.
fn direction(k: i64) -> V {
    [
        BigInt::from(3 + k),
        BigInt::from(5 + 2 * k + k * k),
        BigInt::from(7 + 3 * k * k * k),
    ]
}

pub const MAX_PROJECTIONS: usize = 64;

/// Sum of crossing signs where `g` passes over `h`, viewed from `+d`.
fn crossings_over(g: &PolyLoop, h: &PolyLoop, d: &V) -> Option<i64> {
    let (u, v) = screen_basis(d);
    let proj = |p: &V| -> P2 { [dot(p, &u), dot(p, &v)] };
    let mut total = 0i64;
    for (p, p2) in g.segments() {
        let (a, b) = (proj(&p), proj(&p2));
        let r = sub(&p2, &p);
        for (q, q2) in h.segments() {
            let (c, e) = (proj(&q), proj(&q2));
            match crossing(&a, &b, &c, &e) {
                Crossing::None => {}
                Crossing::Degenerate => return None,
                Crossing::Proper { s, t } => {
                    let w = sub(&q2, &q);
                    let height = |base: &V, dir: &V, x: &BigRational| {
                        BigRational::from_integer(dot(base, d))
                            + x * BigRational::from_integer(dot(dir, d))
                    };
                    let (hg, hh) = (height(&p, &r, &s), height(&q, &w, &t));
                    // disjointness is checked beforehand, so heights differ
                    if hg > hh {
                        total += match dot(&cross(&r, &w), d).sign() {
                            Sign::Plus => 1,
                            Sign::Minus => -1,
                            Sign::NoSign => 0,
                        };
                    }
                }
            }
        }
    }
    Some(total)
}

/// Gauss linking number `L(g, h)`.
pub fn linking_number(g: &PolyLoop, h: &PolyLoop) -> Result<i64> {
    for (p, p2) in g.segments() {
        for (q, q2) in h.segments() {
            if segments_meet(&p, &p2, &q, &q2) {
                return Err(Error::LoopsIntersect);
            }
        }
    }
    (0..MAX_PROJECTIONS as i64)
        .find_map(|k| crossings_over(g, h, &direction(k)))
        .ok_or(Error::NoGenericProjection(MAX_PROJECTIONS))
}
