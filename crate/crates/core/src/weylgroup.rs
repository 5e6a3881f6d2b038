//! Finite-support permutation models of the Weyl groups of types a, c and d.
//!
//! Type a acts on `ℤ`. Types c and d act on `ℤ* = ℤ ∖ {0}` by signed permutations
//! (`σ(−i) = −σ(i)`); only the images of positive indices are stored.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{
    partitions_of, strict_partitions_of, Direction, EventuallyLinearSeq, Partition,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    A,
    C,
    D,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::A, Family::C, Family::D];

    /// The partner family on the other side of super duality: `ā = a, c̄ = d, d̄ = c`.
    pub const fn bar(self) -> Family {
        match self {
            Family::A => Family::A,
            Family::C => Family::D,
            Family::D => Family::C,
        }
    }

    pub const fn is_signed(self) -> bool {
        !matches!(self, Family::A)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::A => "a",
            Family::C => "c",
            Family::D => "d",
        })
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "a" | "A" => Ok(Family::A),
            "c" | "C" => Ok(Family::C),
            "d" | "D" => Ok(Family::D),
            other => Err(Error::Parse {
                field: "family".into(),
                message: format!("expected a, c or d, got {other:?}"),
            }),
        }
    }
}

/// A finitely supported (signed) permutation.
///
/// `moved` lists exactly the non-fixed indices; for signed families only positive indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    family: Family,
    moved: BTreeMap<i64, i64>,
}

impl WeylElement {
    pub fn identity(family: Family) -> Self {
        WeylElement {
            family,
            moved: BTreeMap::new(),
        }
    }

    /// Builds an element from explicit images, validating bijectivity, signed symmetry and
    /// (type d) evenness. Fixed points may be listed.
    pub fn from_map(family: Family, pairs: impl IntoIterator<Item = (i64, i64)>) -> Result<Self> {
        let mut moved = BTreeMap::new();
        for (i, v) in pairs {
            if family.is_signed() && (i <= 0 || v == 0) {
                return Err(Error::SignedSymmetry(format!(
                    "entries must be listed for positive indices with nonzero images, got {i}->{v}"
                )));
            }
            if moved.insert(i, v).is_some() {
                return Err(Error::NotBijection(format!("index {i} listed twice")));
            }
        }
        moved.retain(|i, v| i != v);
        let domain: BTreeSet<i64> = moved.keys().copied().collect();
        let image: BTreeSet<i64> = moved
            .values()
            .map(|&v| if family.is_signed() { v.abs() } else { v })
            .collect();
        if image.len() != moved.len() || domain != image {
            return Err(Error::NotBijection(format!(
                "{moved:?} does not permute its support"
            )));
        }
        let elem = WeylElement { family, moved };
        if family == Family::D && elem.negative_count() % 2 == 1 {
            return Err(Error::OddSignChanges);
        }
        Ok(elem)
    }

    /// Signed element that is increasing on `ℕ` with `{i : σ(i) < 0}` sent onto `−negatives`.
    pub fn from_negative_set(family: Family, negatives: &BTreeSet<i64>) -> Result<Self> {
        if !family.is_signed() {
            return Err(Error::FamilyMismatch {
                expected: Family::C,
                found: family,
            });
        }
        let top = negatives.iter().next_back().copied().unwrap_or(0);
        let mut images: Vec<i64> = negatives.iter().rev().map(|&b| -b).collect();
        images.extend((1..=top).filter(|v| !negatives.contains(v)));
        Self::from_map(family, images.into_iter().zip(1..).map(|(v, i)| (i, v)))
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn is_identity(&self) -> bool {
        self.moved.is_empty()
    }

    /// Stored (non-fixed) entries: positive indices for signed families.
    pub fn moved(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.moved.iter().map(|(&i, &v)| (i, v))
    }

    /// Largest index in absolute value that is moved (0 for the identity).
    pub fn support_bound(&self) -> i64 {
        self.moved.keys().map(|i| i.abs()).max().unwrap_or(0)
    }

    pub fn support_range(&self) -> Option<(i64, i64)> {
        Some((*self.moved.keys().next()?, *self.moved.keys().next_back()?))
    }

    pub fn apply(&self, i: i64) -> i64 {
        if self.family.is_signed() {
            assert!(i != 0, "index 0 is not in ℤ*");
            if i < 0 {
                return -self.apply(-i);
            }
        }
        self.moved.get(&i).copied().unwrap_or(i)
    }

    fn negative_count(&self) -> usize {
        self.moved.values().filter(|&&v| v < 0).count()
    }

    fn check_family(&self, other: &Self) -> Result<()> {
        if self.family == other.family {
            Ok(())
        } else {
            Err(Error::FamilyMismatch {
                expected: self.family,
                found: other.family,
            })
        }
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check_family(other)?;
        let support: BTreeSet<i64> = self
            .moved
            .keys()
            .chain(other.moved.keys())
            .copied()
            .collect();
        Self::from_map(
            self.family,
            support.into_iter().map(|i| (i, self.apply(other.apply(i)))),
        )
    }

    pub fn inverse(&self) -> Self {
        let pairs: Vec<(i64, i64)> = self
            .moved
            .iter()
            .map(|(&i, &v)| {
                if v < 0 && self.family.is_signed() {
                    (-v, -i)
                } else {
                    (v, i)
                }
            })
            .collect();
        Self::from_map(self.family, pairs).expect("inverse of a valid element is valid")
    }

    /// Monotonicity characterization of minimal left coset representatives.
    pub fn is_min_coset_rep(&self) -> bool {
        match self.family {
            Family::A => {
                let Some((lo, hi)) = self.support_range() else {
                    return true;
                };
                let increasing =
                    |from: i64, to: i64| (from..to).all(|i| self.apply(i) < self.apply(i + 1));
                increasing(lo.min(0) - 1, 0) && increasing(1, hi.max(1) + 1)
            }
            Family::C | Family::D => {
                (1..=self.support_bound()).all(|i| self.apply(i) < self.apply(i + 1))
            }
        }
    }

    /// Inversion-count length of a minimal coset representative.
    pub fn length(&self) -> Result<usize> {
        if !self.is_min_coset_rep() {
            return Err(Error::NotMinimalCosetRep(self.to_string()));
        }
        Ok(self.inversion_count())
    }

    /// The family's inversion count without the coset precondition.
    pub fn inversion_count(&self) -> usize {
        match self.family {
            Family::A => {
                let Some((lo, hi)) = self.support_range() else {
                    return 0;
                };
                let vals: Vec<i64> = (lo..=hi).map(|i| self.apply(i)).collect();
                let mut count = 0;
                for (a, &x) in vals.iter().enumerate() {
                    count += vals[a + 1..].iter().filter(|&&y| x > y).count();
                }
                count
            }
            Family::C | Family::D => {
                let r = self.support_bound();
                let strict = self.family == Family::D;
                let mut count = 0;
                for i in 1..=r {
                    let from = if strict { i + 1 } else { i };
                    count += (from..=r)
                        .filter(|&j| self.apply(-i) > self.apply(j))
                        .count();
                    count += (i + 1..=r)
                        .filter(|&j| self.apply(i) > self.apply(j))
                        .count();
                }
                count
            }
        }
    }

    /// `{b : σ(i) = −b for some i ∈ ℕ}` for signed families.
    pub fn negative_set(&self) -> BTreeSet<i64> {
        self.moved
            .values()
            .filter(|&&v| v < 0)
            .map(|v| -v)
            .collect()
    }

    /// Transports an element through an injective, order-preserving index map.
    ///
    /// For signed families `embed` is applied to positive indices and extended oddly.
    pub fn relabeled(&self, ambient: Family, embed: impl Fn(i64) -> i64) -> Result<Self> {
        if self.family.is_signed() != ambient.is_signed() {
            return Err(Error::FamilyMismatch {
                expected: self.family,
                found: ambient,
            });
        }
        let signed_embed = |v: i64| {
            if v < 0 && ambient.is_signed() {
                -embed(-v)
            } else {
                embed(v)
            }
        };
        Self::from_map(
            ambient,
            self.moved
                .iter()
                .map(|(&i, &v)| (embed(i), signed_embed(v))),
        )
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.family)?;
        let body: Vec<String> = self
            .moved
            .iter()
            .map(|(i, v)| format!("{i}->{v}"))
            .collect();
        f.write_str(&body.join(","))
    }
}

impl FromStr for WeylElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (fam, body) = s.split_once(':').ok_or_else(|| Error::Parse {
            field: "weyl element".into(),
            message: format!("expected \"family:i->j,...\", got {s:?}"),
        })?;
        let family: Family = fam.parse()?;
        let pairs = body
            .split(',')
            .filter(|t| !t.trim().is_empty())
            .map(|t| {
                let bad = || Error::Parse {
                    field: "weyl element".into(),
                    message: format!("bad entry {t:?}"),
                };
                let (i, v) = t.split_once("->").ok_or_else(bad)?;
                Ok((
                    i.trim().parse().map_err(|_| bad())?,
                    v.trim().parse().map_err(|_| bad())?,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_map(family, pairs)
    }
}

impl Serialize for WeylElement {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for WeylElement {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        String::deserialize(deserializer)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// Grassmannian permutation of `ℤ` attached to `β`: `σ(j) = j − β_j` on `ℕ`,
/// the complement placed increasingly on `ℤ≤0`.
pub fn grassmannian_from_partition(beta: &Partition) -> WeylElement {
    let len = beta.len() as i64;
    let first = beta.part(1) as i64;
    let positive: BTreeSet<i64> = (1..=len)
        .map(|j| j - beta.part(j as usize) as i64)
        .collect();
    let complement: Vec<i64> = (1 - first..=len)
        .filter(|v| !positive.contains(v))
        .collect();
    let mut pairs: Vec<(i64, i64)> = (1..=len)
        .map(|j| (j, j - beta.part(j as usize) as i64))
        .collect();
    pairs.extend(
        complement
            .iter()
            .rev()
            .zip((0..).map(|t: i64| -t))
            .map(|(&v, i)| (i, v)),
    );
    WeylElement::from_map(Family::A, pairs).expect("grassmannian encoding is a bijection")
}

/// Negative set encoding a type-d coset representative from a strict partition.
fn d_negative_set(beta: &Partition) -> BTreeSet<i64> {
    let mut set: BTreeSet<i64> = beta.parts().iter().map(|&b| b as i64 + 1).collect();
    if beta.len() % 2 == 1 {
        set.insert(1);
    }
    set
}

/// The coset representative of `family` encoded by a (strict, for c/d) partition of `k`.
pub fn encode_w0(family: Family, beta: &Partition) -> WeylElement {
    match family {
        Family::A => grassmannian_from_partition(beta),
        Family::C => {
            let set = beta.parts().iter().map(|&b| b as i64).collect();
            WeylElement::from_negative_set(Family::C, &set)
                .expect("strict parts give a valid element")
        }
        Family::D => WeylElement::from_negative_set(Family::D, &d_negative_set(beta))
            .expect("even negative set gives a valid element"),
    }
}

/// `W⁰_{g,k}`: minimal coset representatives of length `k`.
pub fn enumerate_w0(family: Family, k: u32) -> Vec<WeylElement> {
    let labels = match family {
        Family::A => partitions_of(k),
        Family::C | Family::D => strict_partitions_of(k),
    };
    let mut out: Vec<WeylElement> = labels.iter().map(|b| encode_w0(family, b)).collect();
    out.sort();
    out
}

fn require_w0(s: &WeylElement, family: Family) -> Result<()> {
    if s.family != family {
        return Err(Error::FamilyMismatch {
            expected: family,
            found: s.family,
        });
    }
    if !s.is_min_coset_rep() {
        return Err(Error::NotMinimalCosetRep(s.to_string()));
    }
    Ok(())
}

/// The length-preserving bijection `W⁰_c → W⁰_d`, `σ ↦ σ̄`.
pub fn bar_map(s: &WeylElement) -> Result<WeylElement> {
    require_w0(s, Family::C)?;
    let negatives = s.negative_set();
    let mut shifted: BTreeSet<i64> = negatives.iter().map(|b| b + 1).collect();
    if negatives.len() % 2 == 1 {
        shifted.insert(1);
    }
    WeylElement::from_negative_set(Family::D, &shifted)
}

pub fn bar_map_inverse(s: &WeylElement) -> Result<WeylElement> {
    require_w0(s, Family::D)?;
    let negatives: BTreeSet<i64> = s
        .negative_set()
        .iter()
        .filter(|&&b| b >= 2)
        .map(|b| b - 1)
        .collect();
    WeylElement::from_negative_set(Family::C, &negatives)
}

/// `{ξ_{σ(i)}}_{i∈ℕ}` with `ξ_{−i} := −ξ_i`.
pub fn relabel_seq(s: &WeylElement, xs: &EventuallyLinearSeq) -> Result<EventuallyLinearSeq> {
    if !s.family().is_signed() {
        return Err(Error::FamilyMismatch {
            expected: Family::C,
            found: s.family(),
        });
    }
    if xs.index_origin() != 1
        || !xs.is_strictly_monotone()
        || xs.direction() != Direction::Decreasing
    {
        return Err(Error::Precondition(
            "relabel_seq needs a strictly decreasing sequence on ℕ".into(),
        ));
    }
    if xs.first().signum() >= 0 {
        return Err(Error::Precondition(
            "relabel_seq needs negative values".into(),
        ));
    }
    Ok(signed_compose(xs, s))
}

/// `i ↦ ξ_{σ(i)}` over `ℕ` with odd extension; no monotonicity requirement.
pub(crate) fn signed_compose(xs: &EventuallyLinearSeq, s: &WeylElement) -> EventuallyLinearSeq {
    let value = |j: i64| if j < 0 { -xs.value(-j) } else { xs.value(j) };
    let last = s.support_bound().max(xs.tail_start() - 1);
    let head = (1..=last).map(|i| value(s.apply(i))).collect();
    EventuallyLinearSeq::new(head, xs.tail_intercept(), 1, xs.direction())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(s: &str) -> WeylElement {
        s.parse().unwrap()
    }

    #[test]
    fn text_round_trip() {
        let s = el("c:1->-2,2->-1");
        assert_eq!(s.to_string(), "c:1->-2,2->-1");
        assert_eq!(el("c:"), WeylElement::identity(Family::C));
        assert!("c:1->2".parse::<WeylElement>().is_err());
        assert_eq!("d:1->-1".parse::<WeylElement>(), Err(Error::OddSignChanges));
        assert!("a:0->1,1->2,2->0".parse::<WeylElement>().is_ok());
    }

    #[test]
    fn compose_and_inverse() {
        let s0 = el("c:1->-1");
        let s1 = el("c:1->2,2->1");
        let id = WeylElement::identity(Family::C);
        assert_eq!(s0.compose(&s0).unwrap(), id);
        assert_eq!(id.compose(&s1).unwrap(), s1);
        let a = s0.compose(&s1).unwrap();
        let b = s1.compose(&s0).unwrap();
        assert_ne!(a, b);
        assert_eq!(a.apply(1), 2);
        assert_eq!(b.apply(1), -2);
        assert_eq!(s0.inverse(), s0);
        let cycle = el("a:0->1,1->2,2->0");
        assert_eq!(cycle.inverse(), el("a:1->0,2->1,0->2"));
        assert!(s0.compose(&cycle).is_err());
    }

    #[test]
    fn lengths() {
        assert_eq!(el("c:1->-1").length().unwrap(), 1);
        assert_eq!(el("c:1->-2,2->-1").length().unwrap(), 3);
        assert_eq!(el("d:1->-2,2->-1").length().unwrap(), 1);
        assert!(el("c:1->2,2->1").length().is_err());
    }

    #[test]
    fn coset_reps() {
        assert!(WeylElement::identity(Family::A).is_min_coset_rep());
        assert!(!el("c:1->2,2->1").is_min_coset_rep());
        assert!(el("c:1->-2,2->-1").is_min_coset_rep());
        assert!(el("a:0->1,1->0").is_min_coset_rep());
        assert!(!el("a:1->2,2->1").is_min_coset_rep());
        assert!(!el("a:-1->0,0->-1").is_min_coset_rep());
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(
            enumerate_w0(Family::C, 0),
            vec![WeylElement::identity(Family::C)]
        );
        assert_eq!(enumerate_w0(Family::C, 1), vec![el("c:1->-1")]);
        assert_eq!(enumerate_w0(Family::D, 1), vec![el("d:1->-2,2->-1")]);
        assert_eq!(enumerate_w0(Family::A, 2).len(), 2);
        assert_eq!(enumerate_w0(Family::A, 1), vec![el("a:0->1,1->0")]);
        for fam in Family::ALL {
            for k in 0..7 {
                for s in enumerate_w0(fam, k) {
                    assert_eq!(s.length().unwrap(), k as usize, "{s}");
                }
            }
        }
    }

    #[test]
    fn bar_map_examples() {
        assert_eq!(bar_map(&el("c:1->-1")).unwrap(), el("d:1->-2,2->-1"));
        assert_eq!(
            bar_map(&WeylElement::identity(Family::C)).unwrap(),
            WeylElement::identity(Family::D)
        );
        let bar = bar_map(&el("c:1->-2,2->-1")).unwrap();
        assert_eq!(bar, el("d:1->-3,2->-2,3->1"));
        assert_eq!(bar.length().unwrap(), 3);
        assert_eq!(
            bar_map_inverse(&el("d:1->-2,2->-1")).unwrap(),
            el("c:1->-1")
        );
        assert!(bar_map(&el("c:1->2,2->1")).is_err());
        assert!(bar_map(&el("d:1->-2,2->-1")).is_err());
    }

    #[test]
    fn relabel_examples() {
        let xs = EventuallyLinearSeq::pure_tail(crate::half::Half::ZERO, 1, Direction::Decreasing);
        let id = WeylElement::identity(Family::C);
        assert_eq!(relabel_seq(&id, &xs).unwrap(), xs);
        let out = relabel_seq(&el("c:1->-1"), &xs).unwrap();
        assert_eq!(out.head(), &[crate::half::Half::ONE][..]);
        assert_eq!(out.value(2), crate::half::Half::from_int(-2));
    }
}
