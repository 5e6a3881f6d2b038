//! Roots, the Ψ/Φ sets of a highest weight, the subsystem `Δ(λ, d)` and its coset
//! representatives, plus the finite-rank reflection-subgroup machinery.
//!
//! A root is positive iff its coefficient at the largest index it touches is negative;
//! this one rule covers `εᵢ − εⱼ (i < j)`, `−εᵢ − εⱼ` and `−2εᵢ` in all three families.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::weights::{
    normalize, zeta_data, AlgebraTag, CofiniteSet, IndexSets, Rank, WeightLabel, WeightVector,
};
use crate::weylgroup::{enumerate_w0, Family, WeylElement};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Root {
    /// `εᵢ − εⱼ`
    Diff(i64, i64),
    /// `−εᵢ − εⱼ`, `i < j`
    NegSum(i64, i64),
    /// `εᵢ + εⱼ`, `i < j`
    PosSum(i64, i64),
    /// `−2εᵢ`
    NegDouble(i64),
    /// `2εᵢ`
    PosDouble(i64),
}

impl Root {
    /// Builds a root from `(index, coefficient)` terms, folding negative indices through
    /// `ε₋ᵢ = −εᵢ` when `signed`.
    fn from_terms(terms: &[(i64, i64)], signed: bool) -> Result<Self> {
        let mut acc: BTreeMap<i64, i64> = BTreeMap::new();
        for &(i, c) in terms {
            let (i, c) = if signed && i < 0 { (-i, -c) } else { (i, c) };
            *acc.entry(i).or_default() += c;
        }
        acc.retain(|_, c| *c != 0);
        let t: Vec<(i64, i64)> = acc.into_iter().collect();
        match t[..] {
            [(i, 2)] => Ok(Root::PosDouble(i)),
            [(i, -2)] => Ok(Root::NegDouble(i)),
            [(i, 1), (j, -1)] => Ok(Root::Diff(i, j)),
            [(i, -1), (j, 1)] => Ok(Root::Diff(j, i)),
            [(i, -1), (j, -1)] => Ok(Root::NegSum(i, j)),
            [(i, 1), (j, 1)] => Ok(Root::PosSum(i, j)),
            _ => Err(Error::Internal(format!("{terms:?} is not a root"))),
        }
    }

    pub fn terms(&self) -> Vec<(i64, i64)> {
        match *self {
            Root::Diff(i, j) => vec![(i, 1), (j, -1)],
            Root::NegSum(i, j) => vec![(i, -1), (j, -1)],
            Root::PosSum(i, j) => vec![(i, 1), (j, 1)],
            Root::NegDouble(i) => vec![(i, -2)],
            Root::PosDouble(i) => vec![(i, 2)],
        }
    }

    pub fn indices(&self) -> Vec<i64> {
        self.terms().into_iter().map(|(i, _)| i).collect()
    }

    pub fn negated(&self) -> Self {
        match *self {
            Root::Diff(i, j) => Root::Diff(j, i),
            Root::NegSum(i, j) => Root::PosSum(i, j),
            Root::PosSum(i, j) => Root::NegSum(i, j),
            Root::NegDouble(i) => Root::PosDouble(i),
            Root::PosDouble(i) => Root::NegDouble(i),
        }
    }

    pub fn is_positive(&self) -> bool {
        let terms = self.terms();
        let (_, c) = terms
            .iter()
            .max_by_key(|(i, _)| *i)
            .expect("roots have support");
        *c < 0
    }

    pub fn positive_form(&self) -> Self {
        if self.is_positive() {
            *self
        } else {
            self.negated()
        }
    }

    pub fn is_long(&self) -> bool {
        matches!(self, Root::NegDouble(_) | Root::PosDouble(_))
    }

    /// `(self | other)` for the standard form `(εᵢ | εⱼ) = δᵢⱼ`.
    pub fn inner(&self, other: &Root) -> i64 {
        let theirs = other.terms();
        self.terms()
            .iter()
            .map(|&(i, c)| {
                theirs
                    .iter()
                    .filter(|(j, _)| *j == i)
                    .map(|(_, d)| c * d)
                    .sum::<i64>()
            })
            .sum()
    }

    /// `⟨x, β∨⟩` for coefficients `x`.
    pub fn pairing(&self, x: impl Fn(i64) -> Rational64) -> Rational64 {
        let raw: Rational64 = self.terms().iter().map(|&(i, c)| x(i) * c).sum();
        if self.is_long() {
            raw / 2
        } else {
            raw
        }
    }

    /// `w(β)`.
    pub fn apply(&self, w: &WeylElement) -> Result<Self> {
        let terms: Vec<(i64, i64)> = self.terms().iter().map(|&(i, c)| (w.apply(i), c)).collect();
        Root::from_terms(&terms, w.family().is_signed())
    }

    /// The reflection `s_β` as an element of `family`.
    pub fn reflection(&self, family: Family) -> Result<WeylElement> {
        let pairs = match *self {
            Root::Diff(i, j) => vec![(i, j), (j, i)],
            Root::NegSum(i, j) | Root::PosSum(i, j) => vec![(i, -j), (j, -i)],
            Root::NegDouble(i) | Root::PosDouble(i) => vec![(i, -i)],
        };
        WeylElement::from_map(family, pairs)
    }

    /// Whether the root belongs to the family's root system.
    pub fn fits(&self, family: Family) -> bool {
        match family {
            Family::A => matches!(self, Root::Diff(..)),
            Family::C => self.indices().iter().all(|&i| i >= 1),
            Family::D => !self.is_long() && self.indices().iter().all(|&i| i >= 1),
        }
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Root::Diff(i, j) => write!(f, "e({i})-e({j})"),
            Root::NegSum(i, j) => write!(f, "-e({i})-e({j})"),
            Root::PosSum(i, j) => write!(f, "e({i})+e({j})"),
            Root::NegDouble(i) => write!(f, "-2e({i})"),
            Root::PosDouble(i) => write!(f, "2e({i})"),
        }
    }
}

impl FromStr for Root {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            field: "root".into(),
            message: format!("cannot parse {s:?}"),
        };
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut terms = Vec::new();
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let (sign, tail) = match rest.as_bytes()[0] {
                b'-' => (-1, &rest[1..]),
                b'+' => (1, &rest[1..]),
                _ => (1, rest),
            };
            let (mult, tail) = match tail.strip_prefix('2') {
                Some(t) => (2, t),
                None => (1, tail),
            };
            let tail = tail.strip_prefix("e(").ok_or_else(bad)?;
            let close = tail.find(')').ok_or_else(bad)?;
            let idx: i64 = tail[..close].parse().map_err(|_| bad())?;
            terms.push((idx, sign * mult));
            rest = &tail[close + 1..];
        }
        let root = Root::from_terms(&terms, false).map_err(|_| bad())?;
        if root.terms().len() != terms.len() {
            return Err(bad());
        }
        Ok(root)
    }
}

impl Serialize for Root {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Root {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// Index range a root enumeration runs over: the finite range, or `[1−bound, bound]`
/// (a) / `[1, bound]` (c, d) at infinite rank.
fn index_range(tag: &AlgebraTag, bound: Option<i64>) -> Result<(i64, i64)> {
    match (tag.finite_range(), bound) {
        (Some(r), _) => Ok(r),
        (None, Some(b)) => Ok(match tag.algebra() {
            Family::A => (1 - b, b),
            _ => (1, b),
        }),
        (None, None) => Err(Error::Precondition(
            "infinite rank needs an explicit index bound".into(),
        )),
    }
}

/// All positive roots of the algebra on `[lo, hi]`.
fn positive_roots_on(family: Family, lo: i64, hi: i64) -> Vec<Root> {
    let mut out = Vec::new();
    for j in lo..=hi {
        for i in lo..j {
            out.push(Root::Diff(i, j));
            if family != Family::A {
                out.push(Root::NegSum(i, j));
            }
        }
        if family == Family::C {
            out.push(Root::NegDouble(j));
        }
    }
    out
}

pub fn positive_roots(tag: &AlgebraTag, bound: Option<i64>) -> Result<Vec<Root>> {
    let (lo, hi) = index_range(tag, bound)?;
    Ok(positive_roots_on(tag.algebra(), lo, hi))
}

/// Whether a root lies in the Levi factor: inside one block for a, `εᵢ − εⱼ` for c/d.
pub fn is_compact(family: Family, root: &Root) -> bool {
    match (family, root) {
        (Family::A, Root::Diff(i, j)) => (*i <= 0) == (*j <= 0),
        (_, Root::Diff(..)) => true,
        _ => false,
    }
}

/// `Δ⁺_n`: positive roots outside the Levi factor.
pub fn noncompact_positive_roots(tag: &AlgebraTag, bound: Option<i64>) -> Result<Vec<Root>> {
    let family = tag.algebra();
    Ok(positive_roots(tag, bound)?
        .into_iter()
        .filter(|r| !is_compact(family, r))
        .collect())
}

/// `(Ψ(ξ), Φ(ξ))`. Pairings are taken against the normalized `ξ + ρ`, which absorbs the
/// central term; at infinite rank both sets are cut off at `bound`.
pub fn psi_phi(xi: &WeightVector, bound: Option<i64>) -> Result<(Vec<Root>, Vec<Root>)> {
    let x = normalize(&xi.plus_rho()?)?;
    let candidates = noncompact_positive_roots(&xi.tag, bound)?;
    let pair = |r: &Root| r.pairing(|i| x.at(i));
    let psi: Vec<Root> = candidates
        .iter()
        .copied()
        .filter(|r| pair(r) == Rational64::from_integer(0))
        .collect();
    let has_long = psi.iter().any(Root::is_long);
    let phi = candidates
        .iter()
        .copied()
        .filter(|r| {
            let p = pair(r);
            p.is_integer()
                && p > Rational64::from_integer(0)
                && psi.iter().all(|a| r.inner(a) == 0)
                && !(has_long && r.is_long())
        })
        .collect();
    Ok((psi, phi))
}

/// Index set carrying a subsystem.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IndexSupport {
    Signed(CofiniteSet),
    Split {
        j_minus: CofiniteSet,
        j_plus: CofiniteSet,
    },
}

impl IndexSupport {
    /// Ambient index of abstract index `t` (increasing enumeration; for the split case
    /// `t ≤ 0` runs down `J₋` from its maximum and `t ≥ 1` up `J₊`).
    pub fn embed(&self, t: i64) -> i64 {
        match self {
            IndexSupport::Signed(s) => s.nth(t),
            IndexSupport::Split { j_minus, j_plus } => {
                if t <= 0 {
                    j_minus.nth(1 - t)
                } else {
                    j_plus.nth(t)
                }
            }
        }
    }

    pub fn contains(&self, i: i64) -> bool {
        match self {
            IndexSupport::Signed(s) => s.contains(i),
            IndexSupport::Split { j_minus, j_plus } => j_minus.contains(i) || j_plus.contains(i),
        }
    }
}

/// A subsystem of the bar-side root system of abstract type `a`, `c` or `d`, carried by
/// `index_support`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootSubsystem {
    pub ambient: AlgebraTag,
    pub abstract_type: Family,
    pub index_support: IndexSupport,
}

impl RootSubsystem {
    /// Positive roots of the subsystem among ambient indices in `[lo, hi]`.
    pub fn positive_roots_within(&self, lo: i64, hi: i64) -> Vec<Root> {
        let support: Vec<i64> = (lo..=hi)
            .filter(|&i| self.index_support.contains(i))
            .collect();
        let mut out = Vec::new();
        for (b, &j) in support.iter().enumerate() {
            for &i in &support[..b] {
                if self.abstract_type == Family::A {
                    out.push(Root::Diff(i, j));
                } else {
                    out.push(Root::Diff(i, j));
                    out.push(Root::NegSum(i, j));
                }
            }
            if self.abstract_type == Family::C {
                out.push(Root::NegDouble(j));
            }
        }
        out
    }
}

/// `Δ(λ, d)` in closed form: type d on `J⁰` (g = c); type d on `J` when `J⁰ ≠ J` or `d`
/// is odd, else type c on `J` (g = d); type a on `J₋ ⊔ J₊` (g = a).
pub fn delta_subsystem(label: &WeightLabel) -> Result<RootSubsystem> {
    let z = zeta_data(label)?;
    let ambient = AlgebraTag::infinite(label.family, crate::weights::Side::Bar);
    let (abstract_type, index_support) = match (&z.index_sets, label.family) {
        (IndexSets::Split { j_minus, j_plus }, _) => (
            Family::A,
            IndexSupport::Split {
                j_minus: j_minus.clone(),
                j_plus: j_plus.clone(),
            },
        ),
        (IndexSets::Signed { j0_set, .. }, Family::C) => {
            (Family::D, IndexSupport::Signed(j0_set.clone()))
        }
        (IndexSets::Signed { j_set, j0_set }, _) => {
            let d_even = label.d.to_int().is_some_and(|d| d % 2 == 0);
            let ty = if j0_set != j_set || !d_even {
                Family::D
            } else {
                Family::C
            };
            (ty, IndexSupport::Signed(j_set.clone()))
        }
    };
    Ok(RootSubsystem {
        ambient,
        abstract_type,
        index_support,
    })
}

/// `W⁰_k` of the subsystem, realized in the ambient group through the index embedding.
pub fn subsystem_w0(sub: &RootSubsystem, k: u32) -> Result<Vec<WeylElement>> {
    let ambient = sub.ambient.algebra();
    let mut out = enumerate_w0(sub.abstract_type, k)
        .iter()
        .map(|w| w.relabeled(ambient, |t| sub.index_support.embed(t)))
        .collect::<Result<Vec<_>>>()?;
    out.sort();
    Ok(out)
}

/// Roots of the reflection subgroup generated by `generators`: the closure of `±generators`
/// under the reflections they generate.
pub fn reflection_closure(generators: &[Root], family: Family) -> Result<BTreeSet<Root>> {
    let mut roots: BTreeSet<Root> = generators.iter().flat_map(|r| [*r, r.negated()]).collect();
    let mut frontier: Vec<Root> = roots.iter().copied().collect();
    let reflections = generators
        .iter()
        .map(|r| r.reflection(family))
        .collect::<Result<Vec<_>>>()?;
    while let Some(r) = frontier.pop() {
        for s in &reflections {
            let image = r.apply(s)?;
            if roots.insert(image) {
                frontier.push(image);
            }
        }
    }
    Ok(roots)
}

/// A finite reflection subgroup `W(Σ)` given by its positive roots `Σ⁺ ⊂ Δ⁺`, with the
/// parabolic piece `Σ⁺ ∩ Δ_c`.
#[derive(Clone, Debug)]
pub struct FiniteSubsystem {
    pub tag: AlgebraTag,
    pub positive: Vec<Root>,
    compact: Vec<Root>,
    simple: Vec<(Root, WeylElement)>,
}

impl FiniteSubsystem {
    pub fn new(tag: AlgebraTag, positive: Vec<Root>) -> Result<Self> {
        if !matches!(tag.rank, Rank::Finite { .. }) {
            return Err(Error::Precondition(
                "finite subsystems need finite rank".into(),
            ));
        }
        let family = tag.algebra();
        let compact = positive
            .iter()
            .copied()
            .filter(|r| is_compact(family, r))
            .collect();
        let mut sub = FiniteSubsystem {
            tag,
            positive,
            compact,
            simple: Vec::new(),
        };
        let mut simple = Vec::new();
        for r in &sub.positive {
            let s = r.reflection(family)?;
            if sub.length(&s)? == 1 {
                simple.push((*r, s));
            }
        }
        sub.simple = simple;
        Ok(sub)
    }

    /// The whole root system of the algebra.
    pub fn full(tag: AlgebraTag) -> Result<Self> {
        let roots = positive_roots(&tag, None)?;
        Self::new(tag, roots)
    }

    /// Enright's subsystem for `ξ`: generated by reflections in `Φ(ξ)`.
    pub fn from_phi(xi: &WeightVector) -> Result<Self> {
        let (_, phi) = psi_phi(xi, None)?;
        let closure = reflection_closure(&phi, xi.tag.algebra())?;
        Self::new(
            xi.tag,
            closure.into_iter().filter(Root::is_positive).collect(),
        )
    }

    pub fn simple_roots(&self) -> Vec<Root> {
        self.simple.iter().map(|(r, _)| *r).collect()
    }

    /// `ℓ(w) = #{α ∈ Σ⁺ : w(α) < 0}`.
    pub fn length(&self, w: &WeylElement) -> Result<usize> {
        let mut n = 0;
        for r in &self.positive {
            if !r.apply(w)?.is_positive() {
                n += 1;
            }
        }
        Ok(n)
    }

    fn is_min_rep(&self, w: &WeylElement) -> Result<bool> {
        for r in &self.compact {
            if !r.apply(w)?.is_positive() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Minimal representatives of `W(Σ)/W₀(Σ)` grouped by length `0..=max_len`.
    pub fn w0_by_length(&self, max_len: usize) -> Result<Vec<Vec<WeylElement>>> {
        let mut levels = vec![vec![WeylElement::identity(self.tag.algebra())]];
        let mut seen: HashSet<WeylElement> = levels[0].iter().cloned().collect();
        for len in 0..max_len {
            let mut next = Vec::new();
            for w in &levels[len] {
                for (_, s) in &self.simple {
                    let cand = s.compose(w)?;
                    if seen.contains(&cand) {
                        continue;
                    }
                    if self.length(&cand)? == len + 1 && self.is_min_rep(&cand)? {
                        seen.insert(cand.clone());
                        next.push(cand);
                    }
                }
            }
            next.sort();
            let done = next.is_empty();
            levels.push(next);
            if done {
                break;
            }
        }
        while levels.len() <= max_len {
            levels.push(Vec::new());
        }
        Ok(levels)
    }

    pub fn w0(&self, k: usize) -> Result<Vec<WeylElement>> {
        Ok(self.w0_by_length(k)?.swap_remove(k))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::half::Half;
    use crate::weights::{bar_lambda_weight, gamma_weight, Lam, Side};

    fn fin(f: Family, side: Side, m: u32, n: u32) -> AlgebraTag {
        AlgebraTag::new(f, side, Rank::Finite { m, n }).unwrap()
    }

    fn label(f: Family, lam: &str, d: i64) -> WeightLabel {
        WeightLabel::new(f, Lam::parse(f, lam).unwrap(), Half::from_int(d)).unwrap()
    }

    #[test]
    fn root_text_round_trip() {
        for r in [
            Root::Diff(0, 1),
            Root::NegSum(1, 4),
            Root::NegDouble(2),
            Root::PosSum(2, 3),
            Root::PosDouble(5),
        ] {
            assert_eq!(r.to_string().parse::<Root>().unwrap(), r);
        }
        assert_eq!("-e(1)-e(4)".parse::<Root>().unwrap(), Root::NegSum(1, 4));
        assert!("e(1)-e(1)".parse::<Root>().is_err());
        assert!("e(1)+e(2)+e(3)".parse::<Root>().is_err());
    }

    #[test]
    fn noncompact_examples() {
        let d2 = noncompact_positive_roots(&fin(Family::D, Side::G, 0, 2), None).unwrap();
        assert_eq!(d2, vec![Root::NegSum(1, 2)]);
        let c2: BTreeSet<Root> = noncompact_positive_roots(&fin(Family::C, Side::G, 0, 2), None)
            .unwrap()
            .into_iter()
            .collect();
        assert_eq!(
            c2,
            [Root::NegSum(1, 2), Root::NegDouble(1), Root::NegDouble(2)]
                .into_iter()
                .collect()
        );
        let a11 = noncompact_positive_roots(&fin(Family::A, Side::G, 1, 1), None).unwrap();
        assert_eq!(a11, vec![Root::Diff(0, 1)]);
    }

    #[test]
    fn positivity_and_reflections() {
        assert!(Root::Diff(1, 2).is_positive());
        assert!(!Root::Diff(2, 1).is_positive());
        assert!(Root::NegSum(1, 2).is_positive());
        assert!(Root::NegDouble(3).is_positive());
        let s = Root::NegSum(2, 3).reflection(Family::D).unwrap();
        assert_eq!(s.to_string(), "d:2->-3,3->-2");
        assert_eq!(Root::NegSum(2, 3).apply(&s).unwrap(), Root::PosSum(2, 3));
        assert_eq!(Root::Diff(1, 2).apply(&s).unwrap(), Root::PosSum(1, 3));
    }

    #[test]
    fn running_example_psi_phi() {
        let xi = bar_lambda_weight(&label(Family::C, "1", 1)).unwrap();
        let (psi, phi) = psi_phi(&xi, Some(8)).unwrap();
        assert_eq!(psi, vec![Root::NegSum(1, 4)]);
        assert!(phi.contains(&Root::NegSum(2, 3)));
        assert!(phi
            .iter()
            .all(|r| !r.indices().contains(&1) && !r.indices().contains(&4)));
    }

    #[test]
    fn delta_subsystem_examples() {
        let sub = delta_subsystem(&label(Family::C, "1", 1)).unwrap();
        assert_eq!(sub.abstract_type, Family::D);
        assert_eq!(
            (1..=4)
                .map(|t| sub.index_support.embed(t))
                .collect::<Vec<_>>(),
            vec![2, 3, 5, 6]
        );
        let w = subsystem_w0(&sub, 1).unwrap();
        assert_eq!(w.len(), 1);
        assert_eq!(w[0].to_string(), "d:2->-3,3->-2");
        assert_eq!(
            subsystem_w0(&sub, 0).unwrap(),
            vec![WeylElement::identity(Family::D)]
        );

        let sub = delta_subsystem(&label(Family::D, "", 1)).unwrap();
        assert_eq!(sub.abstract_type, Family::D);
        assert_eq!(
            delta_subsystem(&label(Family::D, "", 2))
                .unwrap()
                .abstract_type,
            Family::D
        );
        let sub = delta_subsystem(&label(Family::D, "1,1", 4)).unwrap();
        assert_eq!(sub.abstract_type, Family::C);
        let sub = delta_subsystem(&label(Family::A, "|", 0)).unwrap();
        assert_eq!(sub.abstract_type, Family::A);
        for k in 0..=4 {
            assert_eq!(
                subsystem_w0(&sub, k).unwrap().len(),
                enumerate_w0(Family::A, k).len()
            );
        }
    }

    #[test]
    fn full_system_coset_counts() {
        // gl(4) with Levi gl(2)²: Grassmannian permutations, 1,1,2,1,1 by length
        let gl4 = FiniteSubsystem::full(fin(Family::A, Side::G, 2, 2)).unwrap();
        let counts: Vec<usize> = gl4.w0_by_length(5).unwrap().iter().map(Vec::len).collect();
        assert_eq!(counts, vec![1, 1, 2, 1, 1, 0]);
        let sp4 = FiniteSubsystem::full(fin(Family::C, Side::G, 0, 2)).unwrap();
        let total: usize = sp4.w0_by_length(4).unwrap().iter().map(Vec::len).sum();
        assert_eq!(total, 4);
        let so8 = FiniteSubsystem::full(fin(Family::D, Side::G, 0, 4)).unwrap();
        let total: usize = so8.w0_by_length(12).unwrap().iter().map(Vec::len).sum();
        assert_eq!(total, 8);
        assert_eq!(so8.simple_roots().len(), 4);
    }

    #[test]
    fn finite_phi_for_truncated_running_example() {
        let xi = gamma_weight(&label(Family::C, "1", 1), 0, 4).unwrap();
        let sub = FiniteSubsystem::from_phi(&xi).unwrap();
        let w1 = sub.w0(1).unwrap();
        assert_eq!(w1.len(), 1);
        assert_eq!(w1[0].to_string(), "d:2->-3,3->-2");
    }
}
