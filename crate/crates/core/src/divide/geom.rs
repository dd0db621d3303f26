//! Exact planar predicates over integers and quadratic surds.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

pub(crate) type Vec2 = (BigInt, BigInt);

pub(crate) fn sub(a: &Vec2, b: &Vec2) -> Vec2 {
    (&a.0 - &b.0, &a.1 - &b.1)
}

pub(crate) fn cross(a: &Vec2, b: &Vec2) -> BigInt {
    &a.0 * &b.1 - &a.1 * &b.0
}

pub(crate) fn dot(a: &Vec2, b: &Vec2) -> BigInt {
    &a.0 * &b.0 + &a.1 * &b.1
}

fn sgn(x: &BigInt) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// Sign of `a + b * sqrt(d)`, `d >= 0`.
pub(crate) fn sign_surd(a: &BigInt, b: &BigInt, d: &BigInt) -> i32 {
    let sa = sgn(a);
    let sb = if d.is_zero() { 0 } else { sgn(b) };
    if sb == 0 {
        return sa;
    }
    if sa == 0 || sa == sb {
        return sb;
    }
    // opposite signs: compare a^2 with b^2 d
    match (a * a).cmp(&(b * b * d)) {
        Ordering::Greater => sa,
        Ordering::Less => sb,
        Ordering::Equal => 0,
    }
}

/// Sign of `a + b sqrt(d1) + c sqrt(d2) + e sqrt(d1 d2)`.
pub(crate) fn sign_surd4(a: &BigInt, b: &BigInt, c: &BigInt, e: &BigInt, d1: &BigInt, d2: &BigInt) -> i32 {
    // X + Y sqrt(d2) with X = a + b sqrt(d1), Y = c + e sqrt(d1)
    let sx = sign_surd(a, b, d1);
    let sy = if d2.is_zero() { 0 } else { sign_surd(c, e, d1) };
    if sy == 0 {
        return sx;
    }
    if sx == 0 || sx == sy {
        return sy;
    }
    let rat = a * a + b * b * d1 - d2 * (c * c + e * e * d1);
    let irr = BigInt::from(2) * (a * b - d2 * c * e);
    match sign_surd(&rat, &irr, d1) {
        1 => sx,
        -1 => sy,
        _ => 0,
    }
}

/// A point `((px + qx sqrt d) / den, (py + qy sqrt d) / den)` with `den > 0`.
#[derive(Clone, Debug)]
pub(crate) struct SurdPoint {
    pub px: BigInt,
    pub qx: BigInt,
    pub py: BigInt,
    pub qy: BigInt,
    pub d: BigInt,
}

impl SurdPoint {
    fn upper(&self) -> bool {
        let sy = sign_surd(&self.py, &self.qy, &self.d);
        sy > 0 || (sy == 0 && sign_surd(&self.px, &self.qx, &self.d) > 0)
    }

    /// Counterclockwise angle order starting at the positive x axis.
    pub fn angle_cmp(&self, other: &SurdPoint) -> Ordering {
        match (self.upper(), other.upper()) {
            (true, false) => return Ordering::Less,
            (false, true) => return Ordering::Greater,
            _ => {}
        }
        // cross(self, other) > 0 means other is further counterclockwise
        let a = &self.px * &other.py - &self.py * &other.px;
        let b = &self.qx * &other.py - &self.qy * &other.px;
        let c = &self.px * &other.qy - &self.py * &other.qx;
        let e = &self.qx * &other.qy - &self.qy * &other.qx;
        match sign_surd4(&a, &b, &c, &e, &self.d, &other.d) {
            1 => Ordering::Less,
            -1 => Ordering::Greater,
            _ => Ordering::Equal,
        }
    }
}

/// Point where the line `a + t (b - a)` meets the circle `|p| = r`,
/// taking the smaller root if `first` and the larger otherwise.
/// Returns `None` when the line misses or touches the circle.
pub(crate) fn circle_hit(a: &Vec2, b: &Vec2, radius: &BigInt, first: bool) -> Option<(SurdPoint, BigInt, BigInt, BigInt)> {
    let dir = sub(b, a);
    let aa = dot(&dir, &dir);
    let bb = dot(a, &dir);
    let cc = dot(a, a) - radius * radius;
    let disc = &bb * &bb - &aa * &cc;
    if !disc.is_positive() {
        return None;
    }
    let s: BigInt = if first { BigInt::from(-1) } else { BigInt::from(1) };
    // t = (-bb + s sqrt(disc)) / aa
    let p = SurdPoint {
        px: &a.0 * &aa - &bb * &dir.0,
        qx: &s * &dir.0,
        py: &a.1 * &aa - &bb * &dir.1,
        qy: &s * &dir.1,
        d: disc.clone(),
    };
    Some((p, -bb, s, aa))
}

fn half(v: &Vec2) -> u8 {
    if v.1.is_positive() || (v.1.is_zero() && v.0.is_positive()) {
        0
    } else {
        1
    }
}

/// Counterclockwise angle order of nonzero integer vectors from the positive x axis.
pub(crate) fn direction_cmp(u: &Vec2, v: &Vec2) -> Ordering {
    half(u).cmp(&half(v)).then_with(|| sgn(&cross(v, u)).cmp(&0))
}
