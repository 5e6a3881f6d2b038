//! Highest weights, their ρ-shifted normal forms and the ζ/ζ̄ data.
//!
//! Every Weyl action goes through the *normalized* coefficient sequence, obtained by
//! removing the level contribution `q⟨ϑ,K⟩φ`. On normalized sequences group elements act
//! as literal (signed) permutations.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::half::{rational_str, Half};
use crate::partitions::{
    rho_shifted_seq, Direction, EventuallyLinearSeq, Partition, PartitionPair,
};
use crate::weylgroup::{signed_compose, Family, WeylElement};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    G,
    Bar,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Rank {
    Infinite,
    Finite { m: u32, n: u32 },
}

/// Which algebra a weight lives on: `family` is the label family `g`; on the bar side the
/// algebra itself is of type `ḡ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AlgebraTag {
    pub family: Family,
    pub side: Side,
    pub rank: Rank,
}

impl AlgebraTag {
    pub fn new(family: Family, side: Side, rank: Rank) -> Result<Self> {
        if let Rank::Finite { m, n } = rank {
            if n == 0 || (family == Family::A && m == 0) {
                return Err(Error::Precondition(format!(
                    "finite rank needs n ≥ 1 (and m ≥ 1 for a), got m={m}, n={n}"
                )));
            }
        }
        Ok(AlgebraTag { family, side, rank })
    }

    pub fn infinite(family: Family, side: Side) -> Self {
        AlgebraTag {
            family,
            side,
            rank: Rank::Infinite,
        }
    }

    /// Type of the algebra itself.
    pub fn algebra(&self) -> Family {
        match self.side {
            Side::G => self.family,
            Side::Bar => self.family.bar(),
        }
    }

    /// Index range `[first, last]` at finite rank.
    pub fn finite_range(&self) -> Option<(i64, i64)> {
        match self.rank {
            Rank::Infinite => None,
            Rank::Finite { m, n } => Some(match self.algebra() {
                Family::A => (1 - m as i64, n as i64),
                Family::C | Family::D => (1, n as i64),
            }),
        }
    }
}

/// `⟨ϑ, K⟩` for the algebra of the given type.
pub fn level_pairing(algebra: Family) -> Half {
    match algebra {
        Family::A | Family::C => Half::ONE,
        Family::D => Half::HALF,
    }
}

fn half_times(q: Half, r: Half) -> Result<Half> {
    Half::from_rational(q.to_rational() * r.to_rational())
        .ok_or_else(|| Error::Internal(format!("level term {q}·{r} leaves ½ℤ")))
}

/// `Λ` labels: one partition for c/d, a pair for a.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Lam {
    Single(Partition),
    Pair(PartitionPair),
}

impl Lam {
    pub fn parse(family: Family, s: &str) -> Result<Self> {
        match family {
            Family::A => {
                if s.trim().is_empty() {
                    Ok(Lam::Pair(PartitionPair::default()))
                } else {
                    Ok(Lam::Pair(s.parse()?))
                }
            }
            Family::C | Family::D => Ok(Lam::Single(s.parse()?)),
        }
    }

    pub fn size(&self) -> u32 {
        match self {
            Lam::Single(p) => p.size(),
            Lam::Pair(p) => p.size(),
        }
    }
}

impl fmt::Display for Lam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Lam::Single(p) => p.fmt(f),
            Lam::Pair(p) => p.fmt(f),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeightLabel {
    pub family: Family,
    pub lam: Lam,
    pub d: Half,
}

impl WeightLabel {
    pub fn new(family: Family, lam: Lam, d: Half) -> Result<Self> {
        match (&lam, family) {
            (Lam::Pair(_), Family::A) | (Lam::Single(_), Family::C | Family::D) => {
                Ok(WeightLabel { family, lam, d })
            }
            _ => Err(Error::Precondition(format!(
                "label {lam} does not fit family {family}"
            ))),
        }
    }

    pub fn single(family: Family, lam: Partition, d: i64) -> Result<Self> {
        Self::new(family, Lam::Single(lam), Half::from_int(d))
    }

    pub fn pair(minus: Partition, plus: Partition, d: i64) -> Self {
        WeightLabel {
            family: Family::A,
            lam: Lam::Pair(PartitionPair::new(minus, plus)),
            d: Half::from_int(d),
        }
    }

    pub fn partition(&self) -> Option<&Partition> {
        match &self.lam {
            Lam::Single(p) => Some(p),
            Lam::Pair(_) => None,
        }
    }

    pub fn partition_pair(&self) -> Option<&PartitionPair> {
        match &self.lam {
            Lam::Pair(p) => Some(p),
            Lam::Single(_) => None,
        }
    }

    /// Membership in `D(g)`.
    pub fn in_d(&self) -> bool {
        let Some(d) = self.d.to_int() else {
            return false;
        };
        if d < 0 {
            return false;
        }
        let bound = match &self.lam {
            Lam::Single(p) => {
                let t = p.transpose();
                match self.family {
                    Family::C => t.part(1),
                    _ => t.part(1) + t.part(2),
                }
            }
            Lam::Pair(p) => p.minus.transpose().part(1) + p.plus.transpose().part(1),
        };
        i64::from(bound) <= d
    }

    pub fn require_in_d(&self) -> Result<()> {
        if self.in_d() {
            Ok(())
        } else {
            Err(Error::NotInD(self.to_string()))
        }
    }

    fn d_int(&self) -> Result<i64> {
        self.d
            .to_int()
            .ok_or_else(|| Error::NotInD(self.to_string()))
    }
}

impl fmt::Display for WeightLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.family, self.lam, self.d)
    }
}

/// ε-coefficients of a weight.
///
/// * `Natural`: indices `1, 2, …` (types c, d).
/// * `Integer`: type a; `nonpos` is reindexed by `t = 1 − i`, so `nonpos.value(t)` is the
///   coefficient of `ε_{1−t}`.
/// * `Finite`: coefficients of `ε_first, ε_{first+1}, …`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum EpsCoeffs {
    Natural(EventuallyLinearSeq),
    Integer {
        nonpos: EventuallyLinearSeq,
        pos: EventuallyLinearSeq,
    },
    Finite {
        first: i64,
        #[serde(with = "rational_str")]
        coeffs: Vec<Rational64>,
    },
}

impl EpsCoeffs {
    fn shape_mismatch(&self, other: &Self) -> Error {
        Error::Internal(format!("coefficient shapes differ: {self:?} vs {other:?}"))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        match (self, other) {
            (EpsCoeffs::Natural(a), EpsCoeffs::Natural(b)) => {
                Ok(EpsCoeffs::Natural(a.pointwise_add(b)?))
            }
            (
                EpsCoeffs::Integer {
                    nonpos: a0,
                    pos: a1,
                },
                EpsCoeffs::Integer {
                    nonpos: b0,
                    pos: b1,
                },
            ) => Ok(EpsCoeffs::Integer {
                nonpos: a0.pointwise_add(b0)?,
                pos: a1.pointwise_add(b1)?,
            }),
            (
                EpsCoeffs::Finite {
                    first: f,
                    coeffs: a,
                },
                EpsCoeffs::Finite {
                    first: g,
                    coeffs: b,
                },
            ) if f == g && a.len() == b.len() => Ok(EpsCoeffs::Finite {
                first: *f,
                coeffs: a.iter().zip(b).map(|(x, y)| x + y).collect(),
            }),
            _ => Err(self.shape_mismatch(other)),
        }
    }

    pub fn negated(&self) -> Self {
        match self {
            EpsCoeffs::Natural(a) => EpsCoeffs::Natural(a.negated()),
            EpsCoeffs::Integer { nonpos, pos } => EpsCoeffs::Integer {
                nonpos: nonpos.negated(),
                pos: pos.negated(),
            },
            EpsCoeffs::Finite { first, coeffs } => EpsCoeffs::Finite {
                first: *first,
                coeffs: coeffs.iter().map(|x| -x).collect(),
            },
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.negated())
    }

    /// Adds `by_nonpos` to coefficients at `i ≤ 0` and `by_pos` at `i ≥ 1`.
    fn shift_blocks(&self, by_nonpos: Half, by_pos: Half) -> Self {
        match self {
            EpsCoeffs::Natural(a) => EpsCoeffs::Natural(a.shifted(by_pos)),
            EpsCoeffs::Integer { nonpos, pos } => EpsCoeffs::Integer {
                nonpos: nonpos.shifted(by_nonpos),
                pos: pos.shifted(by_pos),
            },
            EpsCoeffs::Finite { first, coeffs } => EpsCoeffs::Finite {
                first: *first,
                coeffs: coeffs
                    .iter()
                    .enumerate()
                    .map(|(k, x)| {
                        let by = if *first + k as i64 <= 0 {
                            by_nonpos
                        } else {
                            by_pos
                        };
                        x + by.to_rational()
                    })
                    .collect(),
            },
        }
    }

    /// Coefficient of `ε_i` (for `Natural`, negative indices use `ε_{−i} = −ε_i`).
    pub fn at(&self, i: i64) -> Rational64 {
        match self {
            EpsCoeffs::Natural(a) => {
                if i < 0 {
                    -a.value(-i).to_rational()
                } else {
                    a.value(i).to_rational()
                }
            }
            EpsCoeffs::Integer { nonpos, pos } => {
                if i <= 0 {
                    nonpos.value(1 - i).to_rational()
                } else {
                    pos.value(i).to_rational()
                }
            }
            EpsCoeffs::Finite { first, coeffs } => {
                let sign = if i < 0 && *first >= 1 { -1 } else { 1 };
                let j = if sign < 0 { -i } else { i };
                coeffs[(j - first) as usize] * Rational64::from_integer(sign)
            }
        }
    }

    pub fn at_half(&self, i: i64) -> Half {
        Half::from_rational(self.at(i)).expect("infinite-rank coefficients lie in ½ℤ")
    }

    /// `j ↦ coefficient at w(j)` (signed for c/d), i.e. the coefficients of `w⁻¹·ξ`.
    fn pulled_back(&self, w: &WeylElement) -> Result<Self> {
        match self {
            EpsCoeffs::Natural(a) => Ok(EpsCoeffs::Natural(signed_compose(a, w))),
            EpsCoeffs::Integer { nonpos, pos } => {
                let (lo, hi) = w.support_range().unwrap_or((1, 0));
                let pos_last = hi.max(pos.tail_start() - 1);
                let nonpos_last = (1 - lo).max(nonpos.tail_start() - 1);
                let pos_head = (1..=pos_last).map(|i| self.at_half(w.apply(i))).collect();
                let nonpos_head = (1..=nonpos_last)
                    .map(|t| self.at_half(w.apply(1 - t)))
                    .collect();
                Ok(EpsCoeffs::Integer {
                    nonpos: EventuallyLinearSeq::new(
                        nonpos_head,
                        nonpos.tail_intercept(),
                        1,
                        nonpos.direction(),
                    ),
                    pos: EventuallyLinearSeq::new(
                        pos_head,
                        pos.tail_intercept(),
                        1,
                        pos.direction(),
                    ),
                })
            }
            EpsCoeffs::Finite { first, coeffs } => {
                let last = first + coeffs.len() as i64 - 1;
                let coeffs = (*first..=last)
                    .map(|j| {
                        let target = w.apply(j);
                        let inside = if *first >= 1 {
                            target.abs() <= last
                        } else {
                            (*first..=last).contains(&target)
                        };
                        if !inside {
                            return Err(Error::Precondition(format!(
                                "{w} moves index {j} outside [{first}, {last}]"
                            )));
                        }
                        Ok(self.at(target))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(EpsCoeffs::Finite {
                    first: *first,
                    coeffs,
                })
            }
        }
    }

    /// Replaces finitely many coefficients of an infinite-rank sequence.
    pub fn with_values(&self, values: &BTreeMap<i64, Half>) -> Result<Self> {
        let patch = |s: &EventuallyLinearSeq, at: &dyn Fn(i64) -> Option<Half>, last: i64| {
            let last = last.max(s.tail_start() - 1);
            let head = (1..=last)
                .map(|i| at(i).unwrap_or_else(|| s.value(i)))
                .collect();
            EventuallyLinearSeq::new(head, s.tail_intercept(), 1, s.direction())
        };
        match self {
            EpsCoeffs::Natural(s) => {
                if values.keys().any(|&i| i < 1) {
                    return Err(Error::Precondition("indices must be positive".into()));
                }
                let last = values.keys().next_back().copied().unwrap_or(0);
                Ok(EpsCoeffs::Natural(patch(
                    s,
                    &|i| values.get(&i).copied(),
                    last,
                )))
            }
            EpsCoeffs::Integer { nonpos, pos } => {
                let pos_last = values.range(1..).next_back().map_or(0, |(&i, _)| i);
                let nonpos_last = values.range(..=0).next().map_or(0, |(&i, _)| 1 - i);
                Ok(EpsCoeffs::Integer {
                    nonpos: patch(nonpos, &|t| values.get(&(1 - t)).copied(), nonpos_last),
                    pos: patch(pos, &|i| values.get(&i).copied(), pos_last),
                })
            }
            EpsCoeffs::Finite { .. } => Err(Error::Precondition(
                "finite coefficients are edited directly".into(),
            )),
        }
    }

    /// Sorts each Levi block non-increasingly in the index.
    pub fn sorted_blocks(&self) -> Result<Self> {
        match self {
            EpsCoeffs::Natural(a) => Ok(EpsCoeffs::Natural(sort_desc(a)?)),
            EpsCoeffs::Integer { nonpos, pos } => Ok(EpsCoeffs::Integer {
                nonpos: sort_desc(&nonpos.negated())?.negated(),
                pos: sort_desc(pos)?,
            }),
            EpsCoeffs::Finite { first, coeffs } => {
                let mut nonpos: Vec<Rational64> = Vec::new();
                let mut pos: Vec<Rational64> = Vec::new();
                for (k, &x) in coeffs.iter().enumerate() {
                    if first + k as i64 <= 0 {
                        nonpos.push(x);
                    } else {
                        pos.push(x);
                    }
                }
                nonpos.sort_by(|a, b| b.cmp(a));
                pos.sort_by(|a, b| b.cmp(a));
                nonpos.extend(pos);
                Ok(EpsCoeffs::Finite {
                    first: *first,
                    coeffs: nonpos,
                })
            }
        }
    }
}

/// Sorts an ℕ-indexed sequence non-increasingly; the tail is preserved.
fn sort_desc(s: &EventuallyLinearSeq) -> Result<EventuallyLinearSeq> {
    let head = s.head();
    match s.direction() {
        Direction::Decreasing => {
            let Some(&min_head) = head.iter().min() else {
                return Ok(s.clone());
            };
            let gap = s.tail_intercept() - min_head;
            let ceil = (gap.doubled() + 1).div_euclid(2);
            let last = (s.tail_start() - 1).max(ceil) + 1;
            let mut values = s.window(last);
            values.sort_by(|a, b| b.cmp(a));
            Ok(EventuallyLinearSeq::new(
                values,
                s.tail_intercept(),
                s.index_origin(),
                Direction::Decreasing,
            ))
        }
        Direction::Constant => {
            if head.iter().any(|&v| v < s.tail_intercept()) {
                return Err(Error::NotDominant(format!(
                    "{s:?} cannot be sorted non-increasingly"
                )));
            }
            let mut values = head.to_vec();
            values.sort_by(|a, b| b.cmp(a));
            Ok(EventuallyLinearSeq::new(
                values,
                s.tail_intercept(),
                s.index_origin(),
                Direction::Constant,
            ))
        }
        Direction::Increasing => Err(Error::NotDominant(format!("{s:?} grows without bound"))),
    }
}

/// A weight: ε-coefficients plus the ϑ-coefficient (zero at finite rank).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeightVector {
    #[serde(flatten)]
    pub tag: AlgebraTag,
    pub eps: EpsCoeffs,
    pub theta: Half,
}

impl WeightVector {
    /// Coefficients of a finite-rank weight, in index order.
    pub fn finite_coeffs(&self) -> Option<&[Rational64]> {
        match &self.eps {
            EpsCoeffs::Finite { coeffs, .. } => Some(coeffs),
            _ => None,
        }
    }

    pub fn plus(&self, eps: &EpsCoeffs) -> Result<Self> {
        Ok(WeightVector {
            tag: self.tag,
            eps: self.eps.add(eps)?,
            theta: self.theta,
        })
    }

    pub fn minus(&self, eps: &EpsCoeffs) -> Result<Self> {
        self.plus(&eps.negated())
    }

    pub fn plus_rho(&self) -> Result<Self> {
        self.plus(&rho(&self.tag))
    }

    pub fn minus_rho(&self) -> Result<Self> {
        self.minus(&rho(&self.tag))
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn seq(f: &mut fmt::Formatter<'_>, s: &EventuallyLinearSeq, sign: &str) -> fmt::Result {
            let head: Vec<String> = s.head().iter().map(Half::to_string).collect();
            let slope = match s.direction() {
                Direction::Decreasing => format!("{} − {sign}", s.tail_intercept()),
                Direction::Constant => format!("{}", s.tail_intercept()),
                Direction::Increasing => format!("{} + {sign}", s.tail_intercept()),
            };
            write!(f, "[{}; then {slope}]", head.join(", "))
        }
        match &self.eps {
            EpsCoeffs::Natural(s) => seq(f, s, "i")?,
            EpsCoeffs::Integer { nonpos, pos } => {
                f.write_str("i≤0 (t=1−i): ")?;
                seq(f, nonpos, "t")?;
                f.write_str(" | i≥1: ")?;
                seq(f, pos, "i")?;
            }
            EpsCoeffs::Finite { first, coeffs } => {
                let body: Vec<String> = coeffs.iter().map(rational_str::render).collect();
                write!(f, "ε{first}..: ({})", body.join(", "))?;
            }
        }
        if self.tag.rank == Rank::Infinite {
            write!(f, " + {}ϑ", self.theta)?;
        }
        Ok(())
    }
}

fn natural_from(p: &Partition) -> EventuallyLinearSeq {
    EventuallyLinearSeq::new(
        p.parts()
            .iter()
            .map(|&x| Half::from_int(x as i64))
            .collect(),
        Half::ZERO,
        1,
        Direction::Constant,
    )
}

/// `ρ` for the tagged algebra: `−i` (a, c) or `−i + 1` (d).
pub fn rho(tag: &AlgebraTag) -> EpsCoeffs {
    let alg = tag.algebra();
    let offset = if alg == Family::D { 1 } else { 0 };
    match tag.finite_range() {
        None => match alg {
            Family::A => EpsCoeffs::Integer {
                nonpos: EventuallyLinearSeq::pure_tail(
                    Half::from_int(-1),
                    1,
                    Direction::Increasing,
                ),
                pos: EventuallyLinearSeq::pure_tail(Half::ZERO, 1, Direction::Decreasing),
            },
            _ => EpsCoeffs::Natural(EventuallyLinearSeq::pure_tail(
                Half::from_int(offset),
                1,
                Direction::Decreasing,
            )),
        },
        Some((first, last)) => EpsCoeffs::Finite {
            first,
            coeffs: (first..=last)
                .map(|i| Rational64::from_integer(offset - i))
                .collect(),
        },
    }
}

/// `Λᵍ(λ, d)`.
pub fn lambda_weight(label: &WeightLabel) -> Result<WeightVector> {
    label.require_in_d()?;
    let eps = match &label.lam {
        Lam::Single(p) => EpsCoeffs::Natural(natural_from(&p.transpose())),
        Lam::Pair(p) => EpsCoeffs::Integer {
            nonpos: natural_from(&p.minus.transpose()).negated(),
            pos: natural_from(&p.plus.transpose()),
        },
    };
    Ok(WeightVector {
        tag: AlgebraTag::infinite(label.family, Side::G),
        eps,
        theta: label.d,
    })
}

/// `Λ̄ᵍ(λ, d)`, a weight for `ḡ`.
pub fn bar_lambda_weight(label: &WeightLabel) -> Result<WeightVector> {
    label.require_in_d()?;
    bar_lambda_weight_any(label)
}

/// `Λ̄ᵍ(μ, d)` without the `D(g)` check; homology summands need not lie in `D(g)`.
pub fn bar_lambda_weight_any(label: &WeightLabel) -> Result<WeightVector> {
    let ratio =
        level_pairing(label.family).to_rational() / level_pairing(label.family.bar()).to_rational();
    let theta = Half::from_rational(-label.d.to_rational() * ratio)
        .ok_or_else(|| Error::Precondition(format!("level of {label} leaves ½ℤ")))?;
    let eps = match &label.lam {
        Lam::Single(p) => EpsCoeffs::Natural(natural_from(p)),
        Lam::Pair(p) => EpsCoeffs::Integer {
            nonpos: natural_from(&p.minus).negated(),
            pos: natural_from(&p.plus),
        },
    };
    Ok(WeightVector {
        tag: AlgebraTag::infinite(label.family, Side::Bar),
        eps,
        theta,
    })
}

/// Checks `(λ, d)` has the support required by truncation to rank `(m, n)`.
pub fn check_truncation_support(label: &WeightLabel, m: u32, n: u32) -> Result<()> {
    let ok = match &label.lam {
        Lam::Single(p) => p.len() <= n as usize,
        Lam::Pair(p) => p.plus.len() <= n as usize && p.minus.len() <= m as usize,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::TruncationSupport(format!(
            "{} does not fit rank m={m}, n={n}",
            label.lam
        )))
    }
}

/// `Γ(λ, d)` at finite rank: `λ_i + d` (ḡ = d), `λ_i + d/2` (ḡ = c), and for type a
/// `−d − λ⁻_i` at `ε_{1−i}`, `λ⁺_i` at `ε_i`.
pub fn gamma_weight(label: &WeightLabel, m: u32, n: u32) -> Result<WeightVector> {
    check_truncation_support(label, m, n)?;
    let m = if label.family == Family::A { m } else { 0 };
    let tag = AlgebraTag::new(label.family, Side::Bar, Rank::Finite { m, n })?;
    let d = label.d.to_rational();
    let int = |x: u32| Rational64::from_integer(x as i64);
    let (first, coeffs) = match &label.lam {
        Lam::Single(p) => {
            let shift = if label.family == Family::C { d } else { d / 2 };
            (
                1,
                (1..=n as usize).map(|i| int(p.part(i)) + shift).collect(),
            )
        }
        Lam::Pair(p) => {
            let mut coeffs: Vec<Rational64> = (1..=m as usize)
                .rev()
                .map(|i| -d - int(p.minus.part(i)))
                .collect();
            coeffs.extend((1..=n as usize).map(|i| int(p.plus.part(i))));
            (1 - m as i64, coeffs)
        }
    };
    Ok(WeightVector {
        tag,
        eps: EpsCoeffs::Finite { first, coeffs },
        theta: Half::ZERO,
    })
}

/// Removes the level term: `ν = ξ − q⟨ϑ,K⟩φ`. The identity at finite rank.
pub fn normalize(v: &WeightVector) -> Result<EpsCoeffs> {
    if v.tag.rank != Rank::Infinite {
        return Ok(v.eps.clone());
    }
    let shift = half_times(v.theta, level_pairing(v.tag.algebra()))?;
    Ok(match v.tag.algebra() {
        Family::A => v.eps.shift_blocks(shift, Half::ZERO),
        Family::C | Family::D => v.eps.shift_blocks(-shift, -shift),
    })
}

/// Inverse of [`normalize`] for a fixed level.
pub fn denormalize(tag: AlgebraTag, nu: &EpsCoeffs, theta: Half) -> Result<WeightVector> {
    let eps = if tag.rank != Rank::Infinite {
        nu.clone()
    } else {
        let shift = half_times(theta, level_pairing(tag.algebra()))?;
        match tag.algebra() {
            Family::A => nu.shift_blocks(-shift, Half::ZERO),
            Family::C | Family::D => nu.shift_blocks(shift, shift),
        }
    };
    Ok(WeightVector { tag, eps, theta })
}

fn weyl_family_fits(w: &WeylElement, tag: &AlgebraTag) -> Result<()> {
    let alg = tag.algebra();
    let ok = match w.family() {
        Family::A => alg == Family::A,
        Family::C => alg == Family::C,
        // type-d elements are even signed permutations and also act on type c
        Family::D => alg != Family::A,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::FamilyMismatch {
            expected: alg,
            found: w.family(),
        })
    }
}

/// `w(ξ)` for the linear Weyl action (level-shifting through `φ`).
pub fn act_on_weight(w: &WeylElement, v: &WeightVector) -> Result<WeightVector> {
    weyl_family_fits(w, &v.tag)?;
    let nu = normalize(v)?;
    let moved = nu.pulled_back(&w.inverse())?;
    denormalize(v.tag, &moved, v.theta)
}

/// The Levi-dominant element in the `W₀`-orbit: blocks sorted non-increasingly.
pub fn dominant_rep(v: &WeightVector) -> Result<WeightVector> {
    // Normalization shifts whole blocks by constants, so sorting commutes with it.
    Ok(WeightVector {
        tag: v.tag,
        eps: v.eps.sorted_blocks()?,
        theta: v.theta,
    })
}

/// Subset of `ℕ` or of `ℤ≤0` given by finitely many excluded indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CofiniteSet {
    pub domain: IndexDomain,
    pub excluded: BTreeSet<i64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum IndexDomain {
    /// `ℕ = {1, 2, …}`, enumerated increasingly.
    Positive,
    /// `ℤ≤0 = {0, −1, …}`, enumerated decreasingly.
    NonPositive,
}

impl CofiniteSet {
    pub fn new(domain: IndexDomain, excluded: BTreeSet<i64>) -> Self {
        CofiniteSet { domain, excluded }
    }

    pub fn contains(&self, i: i64) -> bool {
        let in_domain = match self.domain {
            IndexDomain::Positive => i >= 1,
            IndexDomain::NonPositive => i <= 0,
        };
        in_domain && !self.excluded.contains(&i)
    }

    /// `k`-th element (1-based) in the domain's natural order.
    pub fn nth(&self, k: i64) -> i64 {
        assert!(k >= 1);
        let step = match self.domain {
            IndexDomain::Positive => 1,
            IndexDomain::NonPositive => -1,
        };
        let mut i = if step > 0 { 1 } else { 0 };
        let mut seen = 0;
        loop {
            if !self.excluded.contains(&i) {
                seen += 1;
                if seen == k {
                    return i;
                }
            }
            i += step;
        }
    }

    /// Position (1-based) of `i` in the natural order.
    pub fn position(&self, i: i64) -> Option<i64> {
        if !self.contains(i) {
            return None;
        }
        let before = self
            .excluded
            .iter()
            .filter(|&&e| match self.domain {
                IndexDomain::Positive => e < i,
                IndexDomain::NonPositive => e > i,
            })
            .count() as i64;
        Some(match self.domain {
            IndexDomain::Positive => i - before,
            IndexDomain::NonPositive => 1 - i - before,
        })
    }

    pub fn with_added(&self, extra: impl IntoIterator<Item = i64>) -> Self {
        let mut excluded = self.excluded.clone();
        for i in extra {
            excluded.remove(&i);
        }
        CofiniteSet::new(self.domain, excluded)
    }
}

impl fmt::Display for CofiniteSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dom = match self.domain {
            IndexDomain::Positive => "ℕ",
            IndexDomain::NonPositive => "ℤ≤0",
        };
        let ex: Vec<String> = self.excluded.iter().map(i64::to_string).collect();
        if ex.is_empty() {
            f.write_str(dom)
        } else {
            write!(f, "{dom} ∖ {{{}}}", ex.join(","))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IndexSets {
    /// Types c, d: `J` and `J⁰ = J ⊔ {j : ζ̄_j = 0}`.
    Signed {
        j_set: CofiniteSet,
        j0_set: CofiniteSet,
    },
    /// Type a: `J₋ ⊂ ℤ≤0`, `J₊ ⊂ ℕ`.
    Split {
        j_minus: CofiniteSet,
        j_plus: CofiniteSet,
    },
}

/// The ζ, ζ̄ sequences of a label with the index data `N`, `J`.
///
/// For type a both are stored as [`EpsCoeffs::Integer`]; `ζ` is then decreasing over `ℤ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZetaData {
    pub label: WeightLabel,
    pub zeta: EpsCoeffs,
    pub zbar: EpsCoeffs,
    pub n_pairs: BTreeSet<(i64, i64)>,
    pub index_sets: IndexSets,
}

impl ZetaData {
    pub fn zeta_at(&self, i: i64) -> Half {
        self.zeta.at_half(i)
    }

    pub fn zbar_at(&self, i: i64) -> Half {
        self.zbar.at_half(i)
    }

    fn natural(e: &EpsCoeffs) -> &EventuallyLinearSeq {
        match e {
            EpsCoeffs::Natural(s) => s,
            _ => panic!("expected an ℕ-indexed sequence"),
        }
    }

    /// `ζ` as an ℕ-indexed sequence (types c, d).
    pub fn zeta_seq(&self) -> &EventuallyLinearSeq {
        Self::natural(&self.zeta)
    }

    pub fn zbar_seq(&self) -> &EventuallyLinearSeq {
        Self::natural(&self.zbar)
    }

    pub fn j_sets(&self) -> (&CofiniteSet, &CofiniteSet) {
        match &self.index_sets {
            IndexSets::Signed { j_set, j0_set } => (j_set, j0_set),
            IndexSets::Split { j_minus, j_plus } => (j_minus, j_plus),
        }
    }
}

fn half_d(d: i64) -> Half {
    Half::from_doubled(d)
}

/// Closed forms for ζ, ζ̄ and the zero-sum / collision index data.
pub fn zeta_data(label: &WeightLabel) -> Result<ZetaData> {
    label.require_in_d()?;
    let d = label.d_int()?;
    match &label.lam {
        Lam::Single(p) => {
            let (zeta, zbar) = match label.family {
                Family::C => (
                    rho_shifted_seq(p, Half::from_int(-d), true),
                    rho_shifted_seq(p, Half::from_int(1 + d), false),
                ),
                _ => (
                    rho_shifted_seq(p, Half::ONE - half_d(d), true),
                    rho_shifted_seq(p, half_d(d), false),
                ),
            };
            let mut n_pairs = BTreeSet::new();
            let bound = -zbar.first();
            let mut i = 1;
            while zbar.value(i) >= bound {
                if let Some(j) = zbar.index_of(-zbar.value(i)) {
                    n_pairs.insert((i, j));
                }
                i += 1;
            }
            let paired: BTreeSet<i64> = n_pairs.iter().map(|&(i, _)| i).collect();
            let zeros: Vec<i64> = paired
                .iter()
                .copied()
                .filter(|&i| zbar.value(i) == Half::ZERO)
                .collect();
            let j_set = CofiniteSet::new(IndexDomain::Positive, paired);
            let j0_set = j_set.with_added(zeros);
            Ok(ZetaData {
                label: label.clone(),
                zeta: EpsCoeffs::Natural(zeta),
                zbar: EpsCoeffs::Natural(zbar),
                n_pairs,
                index_sets: IndexSets::Signed { j_set, j0_set },
            })
        }
        Lam::Pair(p) => {
            let zeta_pos = rho_shifted_seq(&p.plus, Half::ONE, true);
            let zeta_nonpos = rho_shifted_seq(&p.minus, Half::ZERO, true)
                .negated()
                .shifted(Half::from_int(d));
            let zbar_pos = rho_shifted_seq(&p.plus, Half::ZERO, false);
            let zbar_nonpos = rho_shifted_seq(&p.minus, Half::ZERO, false)
                .negated()
                .shifted(Half::from_int(-1 - d));
            let floor = zbar_nonpos.first();
            let mut n_pairs = BTreeSet::new();
            let mut j = 1;
            while zbar_pos.value(j) >= floor {
                if let Some(t) = zbar_nonpos.index_of(zbar_pos.value(j)) {
                    n_pairs.insert((1 - t, j));
                }
                j += 1;
            }
            let j_minus = CofiniteSet::new(
                IndexDomain::NonPositive,
                n_pairs.iter().map(|&(i, _)| i).collect(),
            );
            let j_plus = CofiniteSet::new(
                IndexDomain::Positive,
                n_pairs.iter().map(|&(_, j)| j).collect(),
            );
            Ok(ZetaData {
                label: label.clone(),
                zeta: EpsCoeffs::Integer {
                    nonpos: zeta_nonpos,
                    pos: zeta_pos,
                },
                zbar: EpsCoeffs::Integer {
                    nonpos: zbar_nonpos,
                    pos: zbar_pos,
                },
                n_pairs,
                index_sets: IndexSets::Split { j_minus, j_plus },
            })
        }
    }
}

/// `ζ` (or `ζ̄`) of the empty label at the same level: the offset separating the
/// sequences from the (transposed) partition parts.
fn empty_offsets(family: Family, d: Half) -> Result<ZetaData> {
    let lam = match family {
        Family::A => Lam::Pair(PartitionPair::default()),
        _ => Lam::Single(Partition::empty()),
    };
    zeta_data(&WeightLabel::new(family, lam, d)?)
}

fn partition_from_constant(s: &EventuallyLinearSeq, what: &str) -> Result<Partition> {
    if s.direction() != Direction::Constant || s.tail_intercept() != Half::ZERO {
        return Err(Error::Internal(format!(
            "{what}: {s:?} does not end in zeros"
        )));
    }
    let parts = s
        .head()
        .iter()
        .map(|v| {
            v.to_int()
                .and_then(|x| u32::try_from(x).ok())
                .ok_or_else(|| {
                    Error::Internal(format!("{what}: entry {v} is not a nonnegative integer"))
                })
        })
        .collect::<Result<Vec<_>>>()?;
    Partition::new(parts).map_err(|e| Error::Internal(format!("{what}: {e}")))
}

fn lam_from_offsets(family: Family, diff: &EpsCoeffs, what: &str) -> Result<Lam> {
    match diff {
        EpsCoeffs::Natural(s) if family != Family::A => {
            Ok(Lam::Single(partition_from_constant(s, what)?))
        }
        EpsCoeffs::Integer { nonpos, pos } if family == Family::A => {
            Ok(Lam::Pair(PartitionPair::new(
                partition_from_constant(&nonpos.negated(), what)?,
                partition_from_constant(pos, what)?,
            )))
        }
        _ => Err(Error::Internal(format!("{what}: unexpected shape"))),
    }
}

/// Reads `μ` off a sorted sequence that must equal `ζ̄(μ, d)`.
pub fn lam_from_zbar(family: Family, d: Half, nu: &EpsCoeffs) -> Result<Lam> {
    let base = empty_offsets(family, d)?;
    lam_from_offsets(family, &nu.sub(&base.zbar)?, "bar label")
}

/// Reads `μ` off a sequence that must equal `ζ(μ, d)`.
pub fn lam_from_zeta(family: Family, d: Half, z: &EpsCoeffs) -> Result<Lam> {
    let base = empty_offsets(family, d)?;
    let transposed = lam_from_offsets(family, &z.sub(&base.zeta)?, "label")?;
    Ok(match transposed {
        Lam::Single(p) => Lam::Single(p.transpose()),
        Lam::Pair(p) => Lam::Pair(PartitionPair::new(p.minus.transpose(), p.plus.transpose())),
    })
}

/// The `μ` with `Λᵍ(μ, d) = w⁻¹ ∘ Λᵍ(λ, d)`, read off the permuted ζ-sequence `ζ ∘ w`.
pub fn dot_action_mu(w: &WeylElement, label: &WeightLabel) -> Result<Lam> {
    if w.family() != label.family {
        return Err(Error::FamilyMismatch {
            expected: label.family,
            found: w.family(),
        });
    }
    if !w.is_min_coset_rep() {
        return Err(Error::NotMinimalCosetRep(w.to_string()));
    }
    let z = zeta_data(label)?;
    let permuted = z.zeta.pulled_back(w)?;
    lam_from_zeta(label.family, label.d, &permuted)
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

    fn label(f: Family, lam: &str, d: i64) -> WeightLabel {
        WeightLabel::new(f, Lam::parse(f, lam).unwrap(), Half::from_int(d)).unwrap()
    }

    #[test]
    fn membership_in_d() {
        assert!(label(Family::C, "2,1", 2).in_d());
        assert!(!label(Family::C, "2,1", 1).in_d());
        assert!(label(Family::D, "1,1", 2).in_d());
        assert!(!label(Family::D, "1,1", 1).in_d());
        assert!(label(Family::A, "1|1", 2).in_d());
        assert!(!label(Family::A, "1|1", 1).in_d());
        let half = WeightLabel::new(Family::C, Lam::Single(p("")), Half::HALF).unwrap();
        assert!(!half.in_d());
        assert!(WeightLabel::new(Family::A, Lam::Single(p("1")), Half::ONE).is_err());
    }

    #[test]
    fn lambda_weights() {
        let w = lambda_weight(&label(Family::C, "2,1", 2)).unwrap();
        assert_eq!(w.eps, EpsCoeffs::Natural(natural_from(&p("2,1"))));
        assert_eq!(w.theta, Half::from_int(2));
        let zero = lambda_weight(&label(Family::C, "", 0)).unwrap();
        assert_eq!(zero.eps.at(1), Rational64::from_integer(0));
        let a = lambda_weight(&label(Family::A, "1|1", 2)).unwrap();
        assert_eq!(a.eps.at(0), Rational64::from_integer(-1));
        assert_eq!(a.eps.at(1), Rational64::from_integer(1));
        assert_eq!(a.eps.at(-1), Rational64::from_integer(0));
        assert_eq!(a.theta, Half::from_int(2));
    }

    #[test]
    fn bar_lambda_weights() {
        let c = bar_lambda_weight(&label(Family::C, "1", 1)).unwrap();
        assert_eq!(c.theta, Half::from_int(-2));
        assert_eq!(c.tag.algebra(), Family::D);
        let d = bar_lambda_weight(&label(Family::D, "1", 2)).unwrap();
        assert_eq!(d.theta, Half::from_int(-1));
        let a = bar_lambda_weight(&label(Family::A, "|", 3)).unwrap();
        assert_eq!(a.theta, Half::from_int(-3));
        assert_eq!(a.eps.at(0), Rational64::from_integer(0));
    }

    #[test]
    fn gamma_weights() {
        let r = |v: &[i64]| {
            v.iter()
                .map(|&x| Rational64::from_integer(x))
                .collect::<Vec<_>>()
        };
        let g = gamma_weight(&label(Family::C, "1", 1), 0, 4).unwrap();
        assert_eq!(g.finite_coeffs().unwrap(), &r(&[2, 1, 1, 1])[..]);
        let g = gamma_weight(&label(Family::D, "", 2), 0, 2).unwrap();
        assert_eq!(g.finite_coeffs().unwrap(), &r(&[1, 1])[..]);
        let g = gamma_weight(&label(Family::A, "1|2", 2), 2, 2).unwrap();
        assert_eq!(g.finite_coeffs().unwrap(), &r(&[-2, -3, 2, 0])[..]);
        assert!(gamma_weight(&label(Family::C, "1,1,1", 3), 0, 2).is_err());
    }

    #[test]
    fn zeta_examples() {
        let z = zeta_data(&label(Family::C, "2,1", 2)).unwrap();
        assert_eq!(z.zeta_seq().head(), &h(&[-1, -3])[..]);
        assert_eq!(z.zeta_seq().tail_intercept(), Half::from_int(-2));
        assert_eq!(z.zbar_seq().window(4), h(&[4, 2, 0, -1]));
        assert_eq!(z.zbar_at(3), Half::ZERO);

        let z = zeta_data(&label(Family::C, "1", 1)).unwrap();
        let expected: BTreeSet<(i64, i64)> = [(1, 4), (4, 1), (2, 2)].into_iter().collect();
        assert_eq!(z.n_pairs, expected);
        let (j, j0) = z.j_sets();
        assert_eq!(j.excluded, [1, 2, 4].into_iter().collect());
        assert_eq!(j0.excluded, [1, 4].into_iter().collect());
        assert_eq!(j.nth(1), 3);
        assert_eq!(j.nth(2), 5);
        assert_eq!(j.position(5), Some(2));

        let z = zeta_data(&label(Family::D, "1,1", 4)).unwrap();
        assert_eq!(z.zeta_at(1), Half::ZERO);
    }

    #[test]
    fn zeta_for_type_a() {
        let z = zeta_data(&label(Family::A, "|", 1)).unwrap();
        // ζ_i = −i + 1 (i ≥ 1), −i + 2 (i ≤ 0): strictly decreasing over ℤ
        let vals: Vec<Half> = (-3..=3).map(|i| z.zeta_at(i)).collect();
        assert!(vals.windows(2).all(|w| w[0] > w[1]));
        // ζ̄_i = −i (i ≥ 1), −i − 1 (i ≤ 0)
        assert_eq!(z.zbar_at(1), Half::from_int(-1));
        assert_eq!(z.zbar_at(0), Half::from_int(-1));
        assert!(z.n_pairs.contains(&(0, 1)));
    }

    #[test]
    fn normalization_round_trip_and_rho_shift() {
        let l = label(Family::C, "2,1", 2);
        let v = lambda_weight(&l).unwrap().plus_rho().unwrap();
        let z = zeta_data(&l).unwrap();
        assert_eq!(normalize(&v).unwrap(), z.zeta);
        let back = denormalize(v.tag, &normalize(&v).unwrap(), v.theta).unwrap();
        assert_eq!(back, v);
        let bar = bar_lambda_weight(&l).unwrap().plus_rho().unwrap();
        assert_eq!(normalize(&bar).unwrap(), z.zbar);
    }

    #[test]
    fn action_examples() {
        let l = label(Family::C, "1", 1);
        let v = bar_lambda_weight(&l).unwrap().plus_rho().unwrap();
        assert_eq!(
            act_on_weight(&WeylElement::identity(Family::D), &v).unwrap(),
            v
        );
        // s_{−ε₂−ε₃} swaps and negates positions 2, 3 of ζ̄ = (2, 0, −1, −2, …)
        let w: WeylElement = "d:2->-3,3->-2".parse().unwrap();
        let moved = act_on_weight(&w, &v).unwrap();
        let nu = normalize(&moved).unwrap();
        let expected: Vec<Rational64> = [2, 1, 0, -2, -3]
            .iter()
            .map(|&x| Rational64::from_integer(x))
            .collect();
        assert_eq!((1..=5).map(|i| nu.at(i)).collect::<Vec<_>>(), expected);
        let sorted = dominant_rep(&moved).unwrap();
        assert_eq!(sorted, moved);
        assert_eq!(
            act_on_weight(&"a:0->1,1->0".parse().unwrap(), &v),
            Err(Error::FamilyMismatch {
                expected: Family::D,
                found: Family::A,
            })
        );
    }

    #[test]
    fn dominant_rep_examples() {
        let tag = AlgebraTag::infinite(Family::C, Side::Bar);
        let v = WeightVector {
            tag,
            eps: EpsCoeffs::Natural(EventuallyLinearSeq::new(
                h(&[2, 0, 1]),
                Half::ONE,
                1,
                Direction::Decreasing,
            )),
            theta: Half::ZERO,
        };
        let sorted = dominant_rep(&v).unwrap();
        assert_eq!(
            (1..=5).map(|i| sorted.eps.at(i)).collect::<Vec<_>>(),
            [2, 1, 0, -3, -4].map(Rational64::from_integer)
        );
        assert_eq!(dominant_rep(&sorted).unwrap(), sorted);
        let a = WeightVector {
            tag: AlgebraTag::infinite(Family::A, Side::Bar),
            eps: EpsCoeffs::Integer {
                nonpos: EventuallyLinearSeq::new(h(&[3, -1]), Half::ZERO, 1, Direction::Increasing),
                pos: EventuallyLinearSeq::new(h(&[2, -5]), Half::ZERO, 1, Direction::Decreasing),
            },
            theta: Half::ZERO,
        };
        let sorted = dominant_rep(&a).unwrap();
        assert_eq!(sorted.eps.at(0), Rational64::from_integer(-1));
        assert_eq!(sorted.eps.at(-1), Rational64::from_integer(3));
        assert_eq!(sorted.eps.at(1), Rational64::from_integer(2));
        assert_eq!(sorted.eps.at(2), Rational64::from_integer(-3));
    }

    #[test]
    fn dot_action_examples() {
        let l = label(Family::C, "1", 1);
        assert_eq!(
            dot_action_mu(&WeylElement::identity(Family::C), &l).unwrap(),
            l.lam
        );
        let mu = dot_action_mu(&"c:1->-1".parse().unwrap(), &l).unwrap();
        assert_eq!(mu, Lam::Single(p("1,1,1")));
        let a = label(Family::A, "|", 1);
        let mu = dot_action_mu(&"a:0->1,1->0".parse().unwrap(), &a).unwrap();
        assert_eq!(mu, Lam::Pair(PartitionPair::new(p("1,1"), p("1,1"))));
        let a0 = label(Family::A, "|", 0);
        let mu = dot_action_mu(&"a:0->1,1->0".parse().unwrap(), &a0).unwrap();
        assert_eq!(mu, Lam::Pair(PartitionPair::new(p("1"), p("1"))));
    }
}
