//! Points and half-open rectangles in the unit square, in exact rationals.

use serde::{Deserialize, Serialize};

use crate::rational::Rat;

/// A point of the unit square.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Point {
    pub x: Rat,
    pub y: Rat,
}

impl Point {
    pub fn new(x: Rat, y: Rat) -> Self {
        Point { x, y }
    }
}

/// An axis-aligned rectangle `[x_lo, x_hi) x [y_lo, y_hi)` inside `[0,1]²`.
///
/// Half-open on each axis so that a family of such rectangles can tile the
/// square as a true partition.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Rect {
    pub x_lo: Rat,
    pub x_hi: Rat,
    pub y_lo: Rat,
    pub y_hi: Rat,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("degenerate or out-of-square rectangle [{x_lo}, {x_hi}) x [{y_lo}, {y_hi})")]
pub struct RectError {
    pub x_lo: Rat,
    pub x_hi: Rat,
    pub y_lo: Rat,
    pub y_hi: Rat,
}

impl Rect {
    pub fn new(x_lo: Rat, x_hi: Rat, y_lo: Rat, y_hi: Rat) -> Result<Self, RectError> {
        let zero = Rat::zero();
        let one = Rat::one();
        let ok = |lo: &Rat, hi: &Rat| *lo >= zero && lo < hi && *hi <= one;
        if ok(&x_lo, &x_hi) && ok(&y_lo, &y_hi) {
            Ok(Rect {
                x_lo,
                x_hi,
                y_lo,
                y_hi,
            })
        } else {
            Err(RectError {
                x_lo,
                x_hi,
                y_lo,
                y_hi,
            })
        }
    }

    /// `[0,1) x [0,1)`, the image of the empty cylinder.
    pub fn unit_square() -> Self {
        Rect {
            x_lo: Rat::zero(),
            x_hi: Rat::one(),
            y_lo: Rat::zero(),
            y_hi: Rat::one(),
        }
    }

    /// Convenience constructor from `i64` ratios; panics on invalid bounds.
    pub fn from_ratios(x: (i64, i64, i64, i64), y: (i64, i64, i64, i64)) -> Self {
        Rect::new(
            Rat::ratio(x.0, x.1),
            Rat::ratio(x.2, x.3),
            Rat::ratio(y.0, y.1),
            Rat::ratio(y.2, y.3),
        )
        .expect("valid rectangle bounds")
    }

    pub fn area(&self) -> Rat {
        (&self.x_hi - &self.x_lo) * (&self.y_hi - &self.y_lo)
    }

    pub fn contains_point(&self, p: &Point) -> bool {
        p.x >= self.x_lo && p.x < self.x_hi && p.y >= self.y_lo && p.y < self.y_hi
    }

    /// Half-open subset test.
    pub fn contains_rect(&self, other: &Rect) -> bool {
        other.x_lo >= self.x_lo
            && other.x_hi <= self.x_hi
            && other.y_lo >= self.y_lo
            && other.y_hi <= self.y_hi
    }

    /// Whether the half-open interiors intersect.
    pub fn intersects(&self, other: &Rect) -> bool {
        self.x_lo < other.x_hi
            && other.x_lo < self.x_hi
            && self.y_lo < other.y_hi
            && other.y_lo < self.y_hi
    }

    /// Intersection rectangle, if nonempty.
    pub fn intersection(&self, other: &Rect) -> Option<Rect> {
        if !self.intersects(other) {
            return None;
        }
        Some(Rect {
            x_lo: self.x_lo.clone().max(other.x_lo.clone()),
            x_hi: self.x_hi.clone().min(other.x_hi.clone()),
            y_lo: self.y_lo.clone().max(other.y_lo.clone()),
            y_hi: self.y_hi.clone().min(other.y_hi.clone()),
        })
    }

    pub fn corners(&self) -> [Point; 4] {
        [
            Point::new(self.x_lo.clone(), self.y_lo.clone()),
            Point::new(self.x_lo.clone(), self.y_hi.clone()),
            Point::new(self.x_hi.clone(), self.y_lo.clone()),
            Point::new(self.x_hi.clone(), self.y_hi.clone()),
        ]
    }

    pub fn center(&self) -> Point {
        let two = Rat::from_int(2);
        Point::new(
            (&self.x_lo + &self.x_hi) / &two,
            (&self.y_lo + &self.y_hi) / &two,
        )
    }
}

impl std::fmt::Display for Rect {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "[{}, {}) x [{}, {})",
            self.x_lo, self.x_hi, self.y_lo, self.y_hi
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_degenerate_and_out_of_square() {
        assert!(Rect::new(Rat::zero(), Rat::zero(), Rat::zero(), Rat::one()).is_err());
        assert!(Rect::new(Rat::zero(), Rat::from_int(2), Rat::zero(), Rat::one()).is_err());
        assert!(Rect::new(Rat::from_int(-1), Rat::one(), Rat::zero(), Rat::one()).is_err());
    }

    #[test]
    fn half_open_containment() {
        let r = Rect::from_ratios((0, 1, 1, 4), (0, 1, 1, 2));
        assert!(r.contains_point(&Point::new(Rat::zero(), Rat::zero())));
        assert!(!r.contains_point(&Point::new(Rat::ratio(1, 4), Rat::zero())));
        assert!(r.contains_rect(&r));
    }

    #[test]
    fn intersection_areas() {
        let a = Rect::from_ratios((0, 1, 1, 2), (0, 1, 1, 2));
        let b = Rect::from_ratios((1, 4, 3, 4), (1, 4, 3, 4));
        let i = a.intersection(&b).unwrap();
        assert_eq!(i.area(), Rat::ratio(1, 16));
        let far = Rect::from_ratios((1, 2, 1, 1), (1, 2, 1, 1));
        assert!(a.intersection(&far).is_none());
    }
}
