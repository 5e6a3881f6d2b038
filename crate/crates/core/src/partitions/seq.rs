//! Eventually-linear sequences of half-integers.
//!
//! A sequence is a finite head followed by an affine tail `c + slope * i` with
//! slope in `{-1, 0, +1}`. The dual-pair sequences attached to highest weights are
//! the strictly monotone ones; constant tails appear for quasi-finite weights.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::half::Half;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Decreasing,
    Constant,
    Increasing,
}

impl Direction {
    pub const fn slope(self) -> i64 {
        match self {
            Direction::Decreasing => -1,
            Direction::Constant => 0,
            Direction::Increasing => 1,
        }
    }

    pub fn from_slope(slope: i64) -> Option<Self> {
        match slope {
            -1 => Some(Direction::Decreasing),
            0 => Some(Direction::Constant),
            1 => Some(Direction::Increasing),
            _ => None,
        }
    }

    pub const fn reversed(self) -> Self {
        match self {
            Direction::Decreasing => Direction::Increasing,
            Direction::Constant => Direction::Constant,
            Direction::Increasing => Direction::Decreasing,
        }
    }
}

/// `value(i) = head[i - origin]` inside the head, `tail_intercept + slope * i` after it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EventuallyLinearSeq {
    head: Vec<Half>,
    tail_intercept: Half,
    index_origin: i64,
    direction: Direction,
}

impl EventuallyLinearSeq {
    /// Builds the sequence and strips head entries that already agree with the tail.
    pub fn new(
        head: Vec<Half>,
        tail_intercept: Half,
        index_origin: i64,
        direction: Direction,
    ) -> Self {
        let mut seq = EventuallyLinearSeq {
            head,
            tail_intercept,
            index_origin,
            direction,
        };
        seq.canonicalize();
        seq
    }

    pub fn pure_tail(tail_intercept: Half, index_origin: i64, direction: Direction) -> Self {
        Self::new(Vec::new(), tail_intercept, index_origin, direction)
    }

    /// Sequence whose first `samples.len()` values are `samples`, continuing with the tail.
    pub fn from_samples(
        samples: &[Half],
        tail_intercept: Half,
        index_origin: i64,
        direction: Direction,
    ) -> Self {
        Self::new(samples.to_vec(), tail_intercept, index_origin, direction)
    }

    pub fn head(&self) -> &[Half] {
        &self.head
    }

    pub fn tail_intercept(&self) -> Half {
        self.tail_intercept
    }

    pub fn index_origin(&self) -> i64 {
        self.index_origin
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    /// First index governed by the tail formula.
    pub fn tail_start(&self) -> i64 {
        self.index_origin + self.head.len() as i64
    }

    pub fn tail_value(&self, i: i64) -> Half {
        self.tail_intercept + self.direction.slope() * i
    }

    pub fn value(&self, i: i64) -> Half {
        assert!(
            i >= self.index_origin,
            "index {i} below origin {}",
            self.index_origin
        );
        let offset = (i - self.index_origin) as usize;
        match self.head.get(offset) {
            Some(v) => *v,
            None => self.tail_value(i),
        }
    }

    /// Values at `origin..=last`.
    pub fn window(&self, last: i64) -> Vec<Half> {
        (self.index_origin..=last).map(|i| self.value(i)).collect()
    }

    fn canonicalize(&mut self) {
        while let Some(&last) = self.head.last() {
            let i = self.index_origin + self.head.len() as i64 - 1;
            if last == self.tail_value(i) {
                self.head.pop();
            } else {
                break;
            }
        }
    }

    /// Strict monotonicity in the declared direction, checked on the head and the first tail value.
    pub fn is_strictly_monotone(&self) -> bool {
        let slope = self.direction.slope();
        if slope == 0 {
            return false;
        }
        let vals = self.window(self.tail_start());
        vals.windows(2).all(|w| (w[1] - w[0]).signum() == slope)
    }

    pub fn require_strictly_decreasing(&self) -> Result<()> {
        if self.direction == Direction::Decreasing && self.is_strictly_monotone() {
            Ok(())
        } else {
            Err(Error::NotMonotone(format!(
                "{self:?} is not strictly decreasing"
            )))
        }
    }

    /// `Some(false)` for values in `ℤ`, `Some(true)` for `½+ℤ`, `None` when mixed.
    pub fn lattice_parity(&self) -> Option<bool> {
        let p = self.tail_intercept.is_half_odd();
        self.head.iter().all(|v| v.is_half_odd() == p).then_some(p)
    }

    /// Index holding `v`, for strictly monotone sequences.
    pub fn index_of(&self, v: Half) -> Option<i64> {
        if let Some(pos) = self.head.iter().position(|&h| h == v) {
            return Some(self.index_origin + pos as i64);
        }
        let slope = self.direction.slope();
        if slope == 0 {
            return None;
        }
        let diff = v - self.tail_intercept;
        let i = diff.to_int()? * slope;
        (i >= self.tail_start()).then_some(i)
    }

    /// Largest value; only meaningful for decreasing sequences (attained at the origin).
    pub fn first(&self) -> Half {
        self.value(self.index_origin)
    }

    pub fn shifted(&self, by: Half) -> Self {
        Self::new(
            self.head.iter().map(|&v| v + by).collect(),
            self.tail_intercept + by,
            self.index_origin,
            self.direction,
        )
    }

    pub fn negated(&self) -> Self {
        Self::new(
            self.head.iter().map(|&v| -v).collect(),
            -self.tail_intercept,
            self.index_origin,
            self.direction.reversed(),
        )
    }

    /// Pointwise sum. Slopes add and must stay in `{-1, 0, 1}`.
    pub fn pointwise_add(&self, other: &Self) -> Result<Self> {
        if self.index_origin != other.index_origin {
            return Err(Error::Precondition(format!(
                "origins differ: {} vs {}",
                self.index_origin, other.index_origin
            )));
        }
        let direction = Direction::from_slope(self.direction.slope() + other.direction.slope())
            .ok_or_else(|| Error::Precondition("sum of tails is not of slope -1, 0 or 1".into()))?;
        let last = self.tail_start().max(other.tail_start()) - 1;
        let head = (self.index_origin..=last)
            .map(|i| self.value(i) + other.value(i))
            .collect();
        Ok(Self::new(
            head,
            self.tail_intercept + other.tail_intercept,
            self.index_origin,
            direction,
        ))
    }

    /// New sequence `v, s_origin, s_origin+1, …` (everything moves one index up).
    pub fn prepend(&self, v: Half) -> Self {
        let mut head = vec![v];
        head.extend(self.window(self.tail_start() - 1));
        Self::new(
            head,
            self.tail_intercept - self.direction.slope(),
            self.index_origin,
            self.direction,
        )
    }

    /// Replaces the values at `origin..origin+values.len()` and keeps the tail.
    pub fn with_prefix(&self, values: &[Half]) -> Self {
        let mut head = values.to_vec();
        let from = self.index_origin + head.len() as i64;
        head.extend((from..self.tail_start()).map(|i| self.value(i)));
        Self::new(head, self.tail_intercept, self.index_origin, self.direction)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(v: &[i64]) -> Vec<Half> {
        v.iter().map(|&x| Half::from_int(x)).collect()
    }

    #[test]
    fn canonical_form_drops_redundant_head() {
        let s = EventuallyLinearSeq::new(
            h(&[4, 2, 0, -1]),
            Half::from_int(3),
            1,
            Direction::Decreasing,
        );
        assert_eq!(s.head(), &h(&[4, 2])[..]);
        assert_eq!(s.value(4), Half::from_int(-1));
        assert_eq!(s.value(5), Half::from_int(-2));
    }

    #[test]
    fn monotonicity() {
        let s = EventuallyLinearSeq::new(h(&[1, -1]), Half::ZERO, 1, Direction::Decreasing);
        assert!(s.is_strictly_monotone());
        let bad = EventuallyLinearSeq::new(h(&[1, 1]), Half::ZERO, 1, Direction::Decreasing);
        assert!(!bad.is_strictly_monotone());
        let bad_join = EventuallyLinearSeq::new(h(&[-5]), Half::ZERO, 1, Direction::Decreasing);
        assert!(!bad_join.is_strictly_monotone());
    }

    #[test]
    fn index_lookup() {
        let s = EventuallyLinearSeq::new(h(&[4, 2]), Half::from_int(3), 1, Direction::Decreasing);
        assert_eq!(s.index_of(Half::from_int(2)), Some(2));
        assert_eq!(s.index_of(Half::from_int(0)), Some(3));
        assert_eq!(s.index_of(Half::from_int(-7)), Some(10));
        assert_eq!(s.index_of(Half::from_int(3)), None);
        assert_eq!(s.index_of(Half::from_int(1)), None);
    }

    #[test]
    fn pointwise_sum_of_tails() {
        let a = EventuallyLinearSeq::new(h(&[2, 1]), Half::ZERO, 1, Direction::Constant);
        let rho = EventuallyLinearSeq::pure_tail(Half::ZERO, 1, Direction::Decreasing);
        let s = a.pointwise_add(&rho).unwrap();
        assert_eq!(s.window(4), h(&[1, -1, -3, -4]));
        assert_eq!(s.direction(), Direction::Decreasing);
        assert!(a.pointwise_add(&rho.negated().negated().negated()).is_ok());
    }
}
