//! Points, the six 60° sextants around a point, projection lengths and
//! fixed-orientation equilateral triangles.
//!
//! Sextant `A_k` around an apex is the open cone between the rays at
//! `(k-1)·60°` and `k·60°`. The odd sextants are the positive cones
//! (`C_1 = A_1`, `C_2 = A_3`, `C_3 = A_5`); each negative cone is the
//! sextant opposite its positive partner (`C̄_1 = A_4`, `C̄_2 = A_6`,
//! `C̄_3 = A_2`).

use std::fmt;

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::scalar::ExactScalar;

/// A point with exact coordinates and its index inside a [`PointSet`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Point {
    pub x: ExactScalar,
    pub y: ExactScalar,
    pub id: usize,
}

impl Point {
    pub fn new(x: ExactScalar, y: ExactScalar, id: usize) -> Self {
        Self { x, y, id }
    }

    pub fn from_ratios(x: (i64, i64), y: (i64, i64), id: usize) -> Self {
        Self::new(ExactScalar::from_ratio(x.0, x.1), ExactScalar::from_ratio(y.0, y.1), id)
    }

    pub fn same_location(&self, other: &Point) -> bool {
        self.x == other.x && self.y == other.y
    }
}

/// An ordered set of distinct points with ids `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSet {
    points: Vec<Point>,
    certified: bool,
}

/// `(numerator, denominator)`.
pub type Ratio = (i64, i64);

impl PointSet {
    /// Builds a point set from coordinates, assigning ids in order.
    /// Duplicate locations are rejected; general position is not required.
    pub fn new(coords: Vec<(ExactScalar, ExactScalar)>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::EmptyPointSet);
        }
        let points: Vec<Point> = coords
            .into_iter()
            .enumerate()
            .map(|(id, (x, y))| Point::new(x, y, id))
            .collect();
        let mut order: Vec<usize> = (0..points.len()).collect();
        order.sort_by(|&a, &b| (&points[a].x, &points[a].y).cmp(&(&points[b].x, &points[b].y)));
        for w in order.windows(2) {
            if points[w[0]].same_location(&points[w[1]]) {
                let (a, b) = (w[0].min(w[1]), w[0].max(w[1]));
                return Err(Error::DuplicatePoint(a, b));
            }
        }
        let mut ps = Self {
            points,
            certified: false,
        };
        ps.certified = ps.general_position().is_ok();
        Ok(ps)
    }

    /// Like [`PointSet::new`] but also requires general position.
    pub fn certified(coords: Vec<(ExactScalar, ExactScalar)>) -> Result<Self> {
        let ps = Self::new(coords)?;
        ps.general_position()?;
        Ok(ps)
    }

    /// Convenience constructor from integer-ratio pairs `((xn, xd), (yn, yd))`.
    pub fn from_ratios(coords: &[(Ratio, Ratio)]) -> Result<Self> {
        Self::new(
            coords
                .iter()
                .map(|&(x, y)| (ExactScalar::from_ratio(x.0, x.1), ExactScalar::from_ratio(y.0, y.1)))
                .collect(),
        )
    }

    pub fn from_integers(coords: &[(i64, i64)]) -> Result<Self> {
        Self::new(
            coords
                .iter()
                .map(|&(x, y)| (ExactScalar::from_int(x), ExactScalar::from_int(y)))
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn point(&self, id: usize) -> &Point {
        &self.points[id]
    }

    pub fn is_certified(&self) -> bool {
        self.certified
    }

    /// Checks every pair; returns the first violating pair (lexicographic).
    pub fn general_position(&self) -> Result<()> {
        for (i, p) in self.points.iter().enumerate() {
            for q in &self.points[i + 1..] {
                if !pair_in_general_position(p, q) {
                    return Err(Error::NotGeneralPosition(p.id, q.id));
                }
            }
        }
        Ok(())
    }

    pub fn require_general_position(&self) -> Result<()> {
        if self.certified {
            Ok(())
        } else {
            self.general_position()
        }
    }

    /// Coordinates in id order.
    pub fn coords(&self) -> Vec<(ExactScalar, ExactScalar)> {
        self.points.iter().map(|p| (p.x.clone(), p.y.clone())).collect()
    }

    /// A new set without the listed ids; remaining points are renumbered in order.
    pub fn without(&self, drop: &[usize]) -> Result<Self> {
        Self::new(
            self.points
                .iter()
                .filter(|p| !drop.contains(&p.id))
                .map(|p| (p.x.clone(), p.y.clone()))
                .collect(),
        )
    }
}

/// True iff the segment `pq` is not at 0°, 60° or 120° (and `p ≠ q`).
pub fn pair_in_general_position(p: &Point, q: &Point) -> bool {
    let forms = DirectionForms::new(&(&q.x - &p.x), &(&q.y - &p.y));
    forms.horizontal != 0 && forms.sixty != 0 && forms.one_twenty != 0
}

/// Signs of the three linear forms whose zero sets are the sextant boundary lines.
#[derive(Clone, Copy, Debug)]
struct DirectionForms {
    /// sign of dy (zero on the 0°/180° line)
    horizontal: i8,
    /// sign of dy − √3·dx (zero on the 60°/240° line)
    sixty: i8,
    /// sign of dy + √3·dx (zero on the 120°/300° line)
    one_twenty: i8,
}

impl DirectionForms {
    fn new(dx: &ExactScalar, dy: &ExactScalar) -> Self {
        let r3dx = dx.times_sqrt3();
        Self {
            horizontal: dy.signum(),
            sixty: (dy - &r3dx).signum(),
            one_twenty: (dy + &r3dx).signum(),
        }
    }

    fn sextant(self) -> Option<Sextant> {
        use Sextant::*;
        match (self.horizontal, self.sixty, self.one_twenty) {
            (1, -1, _) => Some(A1),
            (_, 1, 1) => Some(A2),
            (1, _, -1) => Some(A3),
            (-1, 1, _) => Some(A4),
            (_, -1, -1) => Some(A5),
            (-1, _, 1) => Some(A6),
            _ => None,
        }
    }
}

/// One of the six open 60° sectors around an apex, counterclockwise from the +x axis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sextant {
    A1,
    A2,
    A3,
    A4,
    A5,
    A6,
}

impl Sextant {
    pub const ALL: [Sextant; 6] = [
        Sextant::A1,
        Sextant::A2,
        Sextant::A3,
        Sextant::A4,
        Sextant::A5,
        Sextant::A6,
    ];

    /// 1-based index `k` of `A_k`.
    pub fn index(self) -> u8 {
        self as u8 + 1
    }

    pub fn opposite(self) -> Sextant {
        Sextant::ALL[(self as usize + 3) % 6]
    }

    /// Unit bisector direction with components in Q[√3].
    pub fn bisector(self) -> (ExactScalar, ExactScalar) {
        let half = || ExactScalar::from_ratio(1, 2);
        let half_r3 = || ExactScalar::sqrt3().half();
        match self {
            Sextant::A1 => (half_r3(), half()),
            Sextant::A2 => (ExactScalar::zero(), ExactScalar::from_int(1)),
            Sextant::A3 => (-half_r3(), half()),
            Sextant::A4 => (-half_r3(), -half()),
            Sextant::A5 => (ExactScalar::zero(), ExactScalar::from_int(-1)),
            Sextant::A6 => (half_r3(), -half()),
        }
    }

    pub fn cone(self) -> ConeIndex {
        match self {
            Sextant::A1 => ConeIndex::positive(1),
            Sextant::A3 => ConeIndex::positive(2),
            Sextant::A5 => ConeIndex::positive(3),
            Sextant::A4 => ConeIndex::negative(1),
            Sextant::A6 => ConeIndex::negative(2),
            Sextant::A2 => ConeIndex::negative(3),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConeKind {
    Positive,
    Negative,
}

/// `C_i` (positive) or `C̄_i` (negative) for `i ∈ {1, 2, 3}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConeIndex {
    pub kind: ConeKind,
    pub i: u8,
}

impl ConeIndex {
    pub fn positive(i: u8) -> Self {
        assert!((1..=3).contains(&i), "cone index must be 1..=3");
        Self {
            kind: ConeKind::Positive,
            i,
        }
    }

    pub fn negative(i: u8) -> Self {
        assert!((1..=3).contains(&i), "cone index must be 1..=3");
        Self {
            kind: ConeKind::Negative,
            i,
        }
    }

    pub fn sextant(self) -> Sextant {
        let positive = Sextant::ALL[2 * (self.i as usize - 1)];
        match self.kind {
            ConeKind::Positive => positive,
            ConeKind::Negative => positive.opposite(),
        }
    }

    pub fn opposite(self) -> Self {
        Self {
            kind: match self.kind {
                ConeKind::Positive => ConeKind::Negative,
                ConeKind::Negative => ConeKind::Positive,
            },
            i: self.i,
        }
    }

    pub fn is_positive(self) -> bool {
        self.kind == ConeKind::Positive
    }
}

impl fmt::Display for ConeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            ConeKind::Positive => write!(f, "C{}", self.i),
            ConeKind::Negative => write!(f, "C̄{}", self.i),
        }
    }
}

/// Sextant of `other` around `apex`, or `None` if `other` lies on a
/// boundary ray (or coincides with `apex`).
pub fn sextant_of(apex: &Point, other: &Point) -> Option<Sextant> {
    DirectionForms::new(&(&other.x - &apex.x), &(&other.y - &apex.y)).sextant()
}

/// The cone of `apex` that contains `other`.
pub fn classify_cone(apex: &Point, other: &Point) -> Result<ConeIndex> {
    sextant_of(apex, other)
        .map(Sextant::cone)
        .ok_or(Error::NotGeneralPosition(apex.id.min(other.id), apex.id.max(other.id)))
}

/// Length of the orthogonal projection of `other − apex` onto the bisector
/// of `cone`. Errors unless `other` lies in that cone.
pub fn projection_length(apex: &Point, other: &Point, cone: ConeIndex) -> Result<ExactScalar> {
    if classify_cone(apex, other)? != cone {
        return Err(Error::ConeMismatch {
            apex: apex.id,
            other: other.id,
        });
    }
    Ok(project_onto(apex, other, cone.sextant()))
}

/// `⟨other − apex, bisector(s)⟩` without checking membership.
pub(crate) fn project_onto(apex: &Point, other: &Point, s: Sextant) -> ExactScalar {
    let (bx, by) = s.bisector();
    let dx = &other.x - &apex.x;
    let dy = &other.y - &apex.y;
    &(&dx * &bx) + &(&dy * &by)
}

/// Sign of the cross product `(b − a) × (c − a)`.
pub fn orient(a: &Point, b: &Point, c: &Point) -> i8 {
    let abx = &b.x - &a.x;
    let aby = &b.y - &a.y;
    let acx = &c.x - &a.x;
    let acy = &c.y - &a.y;
    (&(&abx * &acy) - &(&aby * &acx)).signum()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    /// Horizontal side on top, opposite corner below.
    Down,
    /// Horizontal side at the bottom, opposite corner above.
    Up,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Containment {
    Closed,
    Interior,
}

/// Support values `⟨p, u_k⟩` for the three outward normals of a triangle
/// with the given orientation.
///
/// Down normals: `u_0 = (0, 1)`, `u_1 = (−√3/2, −1/2)`, `u_2 = (√3/2, −1/2)`;
/// up normals are their negations.
pub fn support_values(p: &Point, orientation: Orientation) -> [ExactScalar; 3] {
    let r3x = p.x.times_sqrt3();
    let down = [p.y.clone(), (-(&r3x + &p.y)).half(), (&r3x - &p.y).half()];
    match orientation {
        Orientation::Down => down,
        Orientation::Up => down.map(|v| -v),
    }
}

/// Equilateral triangle with a horizontal side, given as
/// `{v : ⟨v, u_k⟩ ≤ t_k, k = 0, 1, 2}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FixedTriangle {
    pub orientation: Orientation,
    pub support: [ExactScalar; 3],
}

impl FixedTriangle {
    /// Smallest triangle of this orientation containing `p` and `q`.
    pub fn smallest(p: &Point, q: &Point, orientation: Orientation) -> Self {
        let sp = support_values(p, orientation);
        let sq = support_values(q, orientation);
        Self::from_supports(&sp, &sq, orientation)
    }

    pub(crate) fn from_supports(sp: &[ExactScalar; 3], sq: &[ExactScalar; 3], orientation: Orientation) -> Self {
        Self {
            orientation,
            support: [
                sp[0].max_ref(&sq[0]).clone(),
                sp[1].max_ref(&sq[1]).clone(),
                sp[2].max_ref(&sq[2]).clone(),
            ],
        }
    }

    /// `t_0 + t_1 + t_2`; the normals sum to zero so this is the
    /// translation-invariant size (height of the triangle). Zero means a single point.
    pub fn size(&self) -> ExactScalar {
        &(&self.support[0] + &self.support[1]) + &self.support[2]
    }

    pub fn is_degenerate(&self) -> bool {
        self.size().is_zero()
    }

    pub fn contains(&self, v: &Point, mode: Containment) -> bool {
        self.contains_supports(&support_values(v, self.orientation), mode)
    }

    pub(crate) fn contains_supports(&self, sv: &[ExactScalar; 3], mode: Containment) -> bool {
        self.support.iter().zip(sv).all(|(t, s)| match mode {
            Containment::Closed => s <= t,
            Containment::Interior => s < t,
        })
    }

    /// True iff `v` lies on the boundary.
    pub fn on_boundary(&self, v: &Point) -> bool {
        self.contains(v, Containment::Closed) && !self.contains(v, Containment::Interior)
    }

    /// Exact corners: for `Down` the order is top-left, top-right, bottom;
    /// for `Up` it is bottom-left, bottom-right, top.
    pub fn corners(&self) -> [(ExactScalar, ExactScalar); 3] {
        // Work in down-normal coordinates: an up triangle is
        // {⟨v, u_k⟩ ≥ −t_k}, so its corners solve the same equations with −t.
        let s: [ExactScalar; 3] = match self.orientation {
            Orientation::Down => self.support.clone(),
            Orientation::Up => self.support.clone().map(|v| -v),
        };
        let third = Rational::Small(1, 3);
        // x = w / √3 = w·√3 / 3
        let over_r3 = |w: ExactScalar| w.times_sqrt3().scale_by(&third);
        let two = ExactScalar::from_int(2);
        let left = (over_r3(-(&(&two * &s[1]) + &s[0])), s[0].clone());
        let right = (over_r3(&(&two * &s[2]) + &s[0]), s[0].clone());
        let apex = (over_r3(&s[2] - &s[1]), -(&s[1] + &s[2]));
        [left, right, apex]
    }

    pub fn centroid(&self) -> (ExactScalar, ExactScalar) {
        let c = self.corners();
        let third = Rational::Small(1, 3);
        let x = &(&c[0].0 + &c[1].0) + &c[2].0;
        let y = &(&c[0].1 + &c[1].1) + &c[2].1;
        (x.scale_by(&third), y.scale_by(&third))
    }
}

pub fn smallest_triangle(p: &Point, q: &Point, orientation: Orientation) -> FixedTriangle {
    FixedTriangle::smallest(p, q, orientation)
}

pub fn triangle_contains(t: &FixedTriangle, v: &Point, mode: Containment) -> bool {
    t.contains(v, mode)
}
