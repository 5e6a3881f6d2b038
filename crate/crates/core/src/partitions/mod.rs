//! Partitions, transposes and dual pairs of eventually-linear sequences.

mod seq;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::half::Half;

pub use seq::{Direction, EventuallyLinearSeq};

/// Weakly decreasing positive parts; trailing zeros are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} has an interior zero"
            )));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// `i`-th part, 1-based; zero beyond the stored length.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn transpose(&self) -> Partition {
        let first = self.part(1);
        Partition(
            (1..=first)
                .map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32)
                .collect(),
        )
    }

    /// Subtracts `c` from every one of the first `rows` parts (all of which must be ≥ c).
    pub fn strip_columns(&self, rows: usize, c: u32) -> Result<Partition> {
        let parts = (1..=rows.max(self.len()))
            .map(|i| {
                let p = self.part(i);
                if i <= rows {
                    p.checked_sub(c).ok_or_else(|| {
                        Error::InvalidPartition(format!("part {i} of {self} is below {c}"))
                    })
                } else {
                    Ok(p)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(s);
        if s.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim().parse::<u32>().map_err(|_| Error::Parse {
                    field: "partition".into(),
                    message: format!("{t:?} is not a nonnegative integer"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// Label `(λ⁻, λ⁺)` for the type-a family.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PartitionPair {
    pub minus: Partition,
    pub plus: Partition,
}

impl PartitionPair {
    pub fn new(minus: Partition, plus: Partition) -> Self {
        PartitionPair { minus, plus }
    }

    pub fn size(&self) -> u32 {
        self.minus.size() + self.plus.size()
    }
}

impl fmt::Display for PartitionPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.minus, self.plus)
    }
}

impl FromStr for PartitionPair {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (minus, plus) = s.split_once('|').ok_or_else(|| Error::Parse {
            field: "partition pair".into(),
            message: format!("expected \"minus|plus\", got {s:?}"),
        })?;
        Ok(PartitionPair::new(minus.parse()?, plus.parse()?))
    }
}

/// `{p_i − i + shift}` (or with `p′`) over `i ∈ ℕ`.
pub fn rho_shifted_seq(p: &Partition, shift: Half, use_transpose: bool) -> EventuallyLinearSeq {
    let q = if use_transpose {
        p.transpose()
    } else {
        p.clone()
    };
    let head = (1..=q.len())
        .map(|i| Half::from_int(q.part(i) as i64 - i as i64) + shift)
        .collect();
    EventuallyLinearSeq::new(head, shift, 1, Direction::Decreasing)
}

fn require_dual_input(s: &EventuallyLinearSeq) -> Result<bool> {
    if s.index_origin() != 1 {
        return Err(Error::Precondition(format!(
            "dual pairs are indexed from 1, got origin {}",
            s.index_origin()
        )));
    }
    s.require_strictly_decreasing()?;
    s.lattice_parity().ok_or(Error::MixedParity)
}

/// First value governed by the tail, i.e. the largest `T` with every lattice value `≤ T` in the image.
fn tail_top(s: &EventuallyLinearSeq) -> Half {
    s.value(s.tail_start())
}

/// The decreasing enumeration of `{x : −x ∉ image(s)}` in the lattice of `s`.
pub fn dual_partner(s: &EventuallyLinearSeq) -> Result<EventuallyLinearSeq> {
    require_dual_input(s)?;
    let top = tail_top(s);
    let max = s.first();
    // Below −max − 1 every lattice point qualifies, so one step past it fixes the tail.
    let (hi, lo) = (-top - 1, -max - 1);
    let mut values = Vec::new();
    let mut x = hi;
    while x >= lo {
        if s.index_of(-x).is_none() {
            values.push(x);
        }
        x = x - 1;
    }
    let last = *values
        .last()
        .ok_or_else(|| Error::Internal("empty dual enumeration".into()))?;
    let intercept = last + values.len() as i64;
    let partner = EventuallyLinearSeq::new(values, intercept, 1, Direction::Decreasing);
    if s.tail_intercept() + partner.tail_intercept() != Half::ONE {
        return Err(Error::Internal(format!(
            "dual intercepts {} and {} do not sum to 1",
            s.tail_intercept(),
            partner.tail_intercept()
        )));
    }
    Ok(partner)
}

/// Smallest window `W` such that outside `[−W, W]` the tails alone decide the dual-pair pattern.
pub fn certification_window(s1: &EventuallyLinearSeq, s2: &EventuallyLinearSeq) -> i64 {
    let bound = [s1.first(), s2.first(), -tail_top(s1), -tail_top(s2)]
        .into_iter()
        .max()
        .unwrap_or(Half::ZERO);
    // ceil(bound) + 1
    (bound.doubled() + 1).div_euclid(2) + 1
}

/// Whether `image(s1) ⊔ −image(s2)` is exactly the lattice, certified on `[−window, window]`.
pub fn is_dual_pair(
    s1: &EventuallyLinearSeq,
    s2: &EventuallyLinearSeq,
    window: i64,
) -> Result<bool> {
    let p1 = require_dual_input(s1)?;
    let p2 = require_dual_input(s2)?;
    let needed = certification_window(s1, s2);
    if window < needed {
        return Err(Error::WindowTooSmall { window, needed });
    }
    if p1 != p2 {
        return Ok(false);
    }
    if s1.tail_intercept() + s2.tail_intercept() != Half::ONE {
        return Ok(false);
    }
    let offset = i64::from(p1);
    let covered_once = (-2 * window..=2 * window)
        .filter(|t| (t - offset).rem_euclid(2) == 0)
        .map(Half::from_doubled)
        .all(|x| {
            usize::from(s1.index_of(x).is_some()) + usize::from(s2.index_of(-x).is_some()) == 1
        });
    Ok(covered_once)
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn go(rest: u32, max: u32, acc: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(acc.clone()));
            return;
        }
        for p in (1..=max.min(rest)).rev() {
            acc.push(p);
            go(rest - p, p, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Partitions of `n` into distinct parts.
pub fn strict_partitions_of(n: u32) -> Vec<Partition> {
    partitions_of(n)
        .into_iter()
        .filter(|p| p.0.windows(2).all(|w| w[0] > w[1]))
        .collect()
}

pub fn partitions_up_to(n: u32) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

/// Pairs with `|λ⁻| + |λ⁺| ≤ n`.
pub fn pairs_up_to(n: u32) -> Vec<PartitionPair> {
    let mut out = Vec::new();
    for total in 0..=n {
        for a in 0..=total {
            for minus in partitions_of(a) {
                for plus in partitions_of(total - a) {
                    out.push(PartitionPair::new(minus.clone(), plus));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn h(v: &[i64]) -> Vec<Half> {
        v.iter().map(|&x| Half::from_int(x)).collect()
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(p("3,1").transpose(), p("2,1,1"));
        assert_eq!(p("").transpose(), p(""));
        assert_eq!(p("2,1").transpose(), p("2,1"));
    }

    #[test]
    fn parse_and_validate() {
        assert_eq!(p("(3,1)"), p("3,1"));
        assert_eq!(p("2,0"), p("2"));
        assert!("1,2".parse::<Partition>().is_err());
        assert!("1,x".parse::<Partition>().is_err());
        let pair: PartitionPair = "2,1|3".parse().unwrap();
        assert_eq!(pair.minus, p("2,1"));
        assert_eq!(pair.plus, p("3"));
        assert_eq!(
            "|".parse::<PartitionPair>().unwrap(),
            PartitionPair::default()
        );
    }

    #[test]
    fn rho_shifted_examples() {
        let s = rho_shifted_seq(&p("2,1"), Half::ZERO, false);
        assert_eq!(s.head(), &h(&[1, -1])[..]);
        assert_eq!(s.value(3), Half::from_int(-3));
        let t = rho_shifted_seq(&p("2,1"), Half::ONE, true);
        assert_eq!(t.head(), &h(&[2, 0])[..]);
        assert_eq!(t.value(3), Half::from_int(-2));
        let e = rho_shifted_seq(&p(""), Half::ZERO, false);
        assert!(e.head().is_empty());
        assert_eq!(e.tail_intercept(), Half::ZERO);
    }

    #[test]
    fn dual_partner_examples() {
        let s = rho_shifted_seq(&p("2,1"), Half::ZERO, false);
        assert_eq!(
            dual_partner(&s).unwrap(),
            rho_shifted_seq(&p("2,1"), Half::ONE, true)
        );

        let tail = EventuallyLinearSeq::pure_tail(Half::ZERO, 1, Direction::Decreasing);
        assert_eq!(
            dual_partner(&tail).unwrap(),
            EventuallyLinearSeq::pure_tail(Half::ONE, 1, Direction::Decreasing)
        );

        let s =
            EventuallyLinearSeq::new(h(&[-1, -3]), Half::from_int(-2), 1, Direction::Decreasing);
        let expected = EventuallyLinearSeq::new(
            h(&[4, 2, 0, -1]),
            Half::from_int(3),
            1,
            Direction::Decreasing,
        );
        assert_eq!(dual_partner(&s).unwrap(), expected);
    }

    #[test]
    fn dual_partner_rejects_bad_input() {
        let flat = EventuallyLinearSeq::new(h(&[1, 1]), Half::ZERO, 1, Direction::Decreasing);
        assert!(matches!(dual_partner(&flat), Err(Error::NotMonotone(_))));
        let mixed = EventuallyLinearSeq::new(
            vec![Half::from_doubled(3)],
            Half::ZERO,
            1,
            Direction::Decreasing,
        );
        assert_eq!(dual_partner(&mixed), Err(Error::MixedParity));
    }

    #[test]
    fn dual_pair_checks() {
        let minus_i = EventuallyLinearSeq::pure_tail(Half::ZERO, 1, Direction::Decreasing);
        assert!(!is_dual_pair(&minus_i, &minus_i, 30).unwrap());
        let s = rho_shifted_seq(&p("4,2"), Half::ZERO, false);
        let b = rho_shifted_seq(&p("4,2"), Half::ONE, true);
        assert!(is_dual_pair(&s, &b, 30).unwrap());
        assert!(matches!(
            is_dual_pair(&s, &b, 1),
            Err(Error::WindowTooSmall { .. })
        ));
    }

    #[test]
    fn half_lattice_duals() {
        let s = rho_shifted_seq(&p("3,1"), Half::HALF, false);
        let b = dual_partner(&s).unwrap();
        assert_eq!(b.lattice_parity(), Some(true));
        assert!(is_dual_pair(&s, &b, 40).unwrap());
        assert_eq!(dual_partner(&b).unwrap(), s);
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..8).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15]);
        let strict: Vec<usize> = (0..8).map(|n| strict_partitions_of(n).len()).collect();
        assert_eq!(strict, vec![1, 1, 1, 2, 2, 3, 4, 5]);
    }
}
