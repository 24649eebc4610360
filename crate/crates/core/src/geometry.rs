//! Geometric predicates and constructions on `f64` points.
//!
//! The orientation and in-circle tests evaluate their determinants in plain
//! double precision first. A result whose magnitude is within a relative
//! [`DEGENERACY_EPSILON`] of the magnitudes of the products that formed it is
//! re-evaluated in double-double arithmetic, and only classified as
//! degenerate (`Collinear` / `OnCircle`) if it is still under that threshold.

use std::cmp::Ordering;

use crate::error::{Error, Result};

/// Relative threshold under which a determinant is treated as zero. It is
/// measured against the sum of absolute values of the determinant's terms.
pub const DEGENERACY_EPSILON: f64 = 1e-12;

/// A point in the plane.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    /// Lexicographic order on `(x, y)`; total for finite points.
    pub fn lex_cmp(&self, other: &Point) -> Ordering {
        self.x
            .total_cmp(&other.x)
            .then_with(|| self.y.total_cmp(&other.y))
    }
}

impl From<(f64, f64)> for Point {
    fn from((x, y): (f64, f64)) -> Self {
        Point { x, y }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    CounterClockwise,
    Clockwise,
    Collinear,
}

impl Orientation {
    pub fn reversed(self) -> Self {
        match self {
            Orientation::CounterClockwise => Orientation::Clockwise,
            Orientation::Clockwise => Orientation::CounterClockwise,
            Orientation::Collinear => Orientation::Collinear,
        }
    }

    pub fn is_ccw(self) -> bool {
        self == Orientation::CounterClockwise
    }

    pub fn is_cw(self) -> bool {
        self == Orientation::Clockwise
    }
}

/// Position of a point relative to a circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CirclePosition {
    Inside,
    Outside,
    OnCircle,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Circumcircle {
    pub center: Point,
    pub radius_sq: f64,
}

impl Circumcircle {
    pub fn radius(&self) -> f64 {
        self.radius_sq.sqrt()
    }
}

#[inline]
pub fn dist_sq(a: Point, b: Point) -> f64 {
    let dx = a.x - b.x;
    let dy = a.y - b.y;
    dx * dx + dy * dy
}

/// Orientation of the triangle `(a, b, c)`, i.e. the sign of `(b - a) x (c - a)`.
pub fn orientation(a: Point, b: Point, c: Point) -> Orientation {
    let abx = b.x - a.x;
    let aby = b.y - a.y;
    let acx = c.x - a.x;
    let acy = c.y - a.y;
    let left = abx * acy;
    let right = aby * acx;
    let det = left - right;
    let bound = DEGENERACY_EPSILON * (left.abs() + right.abs());
    if det > bound {
        return Orientation::CounterClockwise;
    }
    if det < -bound {
        return Orientation::Clockwise;
    }

    let abx = DoubleDouble::diff(b.x, a.x);
    let aby = DoubleDouble::diff(b.y, a.y);
    let acx = DoubleDouble::diff(c.x, a.x);
    let acy = DoubleDouble::diff(c.y, a.y);
    let det = abx.mul(acy).sub(aby.mul(acx)).value();
    classify_sign(det, bound, Orientation::CounterClockwise, Orientation::Clockwise)
        .unwrap_or(Orientation::Collinear)
}

/// Circle through `a`, `b` and `c`.
///
/// The inputs are put in lexicographic order before evaluation, so every
/// permutation of the same three points produces bit-identical output.
pub fn circumcircle(a: Point, b: Point, c: Point) -> Result<Circumcircle> {
    if orientation(a, b, c) == Orientation::Collinear {
        return Err(Error::CollinearInput);
    }
    Ok(circumcircle_unchecked(a, b, c))
}

/// [`circumcircle`] without the collinearity check. The caller guarantees
/// that the three points are not collinear.
pub(crate) fn circumcircle_unchecked(a: Point, b: Point, c: Point) -> Circumcircle {
    let mut pts = [a, b, c];
    pts.sort_unstable_by(Point::lex_cmp);
    let [a, b, c] = pts;

    let bx = b.x - a.x;
    let by = b.y - a.y;
    let cx = c.x - a.x;
    let cy = c.y - a.y;
    let bl = bx * bx + by * by;
    let cl = cx * cx + cy * cy;
    let d = 0.5 / (bx * cy - by * cx);
    let ux = (cy * bl - by * cl) * d;
    let uy = (bx * cl - cx * bl) * d;
    Circumcircle {
        center: Point::new(a.x + ux, a.y + uy),
        radius_sq: ux * ux + uy * uy,
    }
}

/// Classifies `p` against the circumcircle of `(a, b, c)`.
///
/// `(a, b, c)` is expected in counter-clockwise order; a clockwise triple is
/// reordered before evaluation.
pub fn in_circumcircle(a: Point, b: Point, c: Point, p: Point) -> Result<CirclePosition> {
    match orientation(a, b, c) {
        Orientation::CounterClockwise => Ok(in_circumcircle_ccw(a, b, c, p)),
        Orientation::Clockwise => Ok(in_circumcircle_ccw(a, c, b, p)),
        Orientation::Collinear => Err(Error::CollinearInput),
    }
}

/// [`in_circumcircle`] for a triple the caller already knows to be
/// counter-clockwise.
pub(crate) fn in_circumcircle_ccw(a: Point, b: Point, c: Point, p: Point) -> CirclePosition {
    let adx = a.x - p.x;
    let ady = a.y - p.y;
    let bdx = b.x - p.x;
    let bdy = b.y - p.y;
    let cdx = c.x - p.x;
    let cdy = c.y - p.y;

    let alift = adx * adx + ady * ady;
    let blift = bdx * bdx + bdy * bdy;
    let clift = cdx * cdx + cdy * cdy;

    let bc_l = bdx * cdy;
    let bc_r = bdy * cdx;
    let ca_l = cdx * ady;
    let ca_r = cdy * adx;
    let ab_l = adx * bdy;
    let ab_r = ady * bdx;

    let det = alift * (bc_l - bc_r) + blift * (ca_l - ca_r) + clift * (ab_l - ab_r);
    let permanent = alift * (bc_l.abs() + bc_r.abs())
        + blift * (ca_l.abs() + ca_r.abs())
        + clift * (ab_l.abs() + ab_r.abs());
    let bound = DEGENERACY_EPSILON * permanent;
    if det > bound {
        return CirclePosition::Inside;
    }
    if det < -bound {
        return CirclePosition::Outside;
    }

    let adx = DoubleDouble::diff(a.x, p.x);
    let ady = DoubleDouble::diff(a.y, p.y);
    let bdx = DoubleDouble::diff(b.x, p.x);
    let bdy = DoubleDouble::diff(b.y, p.y);
    let cdx = DoubleDouble::diff(c.x, p.x);
    let cdy = DoubleDouble::diff(c.y, p.y);
    let alift = adx.mul(adx).add(ady.mul(ady));
    let blift = bdx.mul(bdx).add(bdy.mul(bdy));
    let clift = cdx.mul(cdx).add(cdy.mul(cdy));
    let det = alift
        .mul(bdx.mul(cdy).sub(bdy.mul(cdx)))
        .add(blift.mul(cdx.mul(ady).sub(cdy.mul(adx))))
        .add(clift.mul(adx.mul(bdy).sub(ady.mul(bdx))))
        .value();
    classify_sign(det, bound, CirclePosition::Inside, CirclePosition::Outside)
        .unwrap_or(CirclePosition::OnCircle)
}

fn classify_sign<T>(det: f64, bound: f64, positive: T, negative: T) -> Option<T> {
    if det > bound {
        Some(positive)
    } else if det < -bound {
        Some(negative)
    } else {
        None
    }
}

/// Unevaluated sum `hi + lo` carrying roughly 106 bits of mantissa.
#[derive(Debug, Clone, Copy)]
struct DoubleDouble {
    hi: f64,
    lo: f64,
}

impl DoubleDouble {
    fn two_sum(a: f64, b: f64) -> Self {
        let s = a + b;
        let bb = s - a;
        let err = (a - (s - bb)) + (b - bb);
        DoubleDouble { hi: s, lo: err }
    }

    fn quick_two_sum(a: f64, b: f64) -> Self {
        let s = a + b;
        DoubleDouble { hi: s, lo: b - (s - a) }
    }

    /// Exact `a - b`.
    fn diff(a: f64, b: f64) -> Self {
        Self::two_sum(a, -b)
    }

    fn add(self, other: Self) -> Self {
        let s = Self::two_sum(self.hi, other.hi);
        Self::quick_two_sum(s.hi, s.lo + self.lo + other.lo)
    }

    fn sub(self, other: Self) -> Self {
        self.add(DoubleDouble {
            hi: -other.hi,
            lo: -other.lo,
        })
    }

    fn mul(self, other: Self) -> Self {
        let p = self.hi * other.hi;
        let err = self.hi.mul_add(other.hi, -p);
        Self::quick_two_sum(p, err + self.hi * other.lo + self.lo * other.hi)
    }

    fn value(self) -> f64 {
        self.hi + self.lo
    }
}
