//! Exact formal characters at finite rank, used as an independent check of Kostant's
//! formula through the Euler–Poincaré identity.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use itertools::Itertools;
use num_rational::Rational64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::homology::{is_dominant, kostant_finite, HomologyDecomposition};
use crate::rootsystem::{is_compact, positive_roots, Root};
use crate::weights::AlgebraTag;
use crate::weylgroup::Family;

/// Largest Weyl group the character routines will enumerate.
pub const WEYL_ORDER_LIMIT: u64 = 20_000;

/// An integer Laurent polynomial in `x_first, …, x_last`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FormalCharacter {
    terms: BTreeMap<Vec<i32>, i64>,
}

#[derive(Serialize, Deserialize)]
struct Term {
    exp: Vec<i32>,
    coef: i64,
}

impl FormalCharacter {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(exp: Vec<i32>, coef: i64) -> Self {
        let mut out = Self::zero();
        out.add_term(exp, coef);
        out
    }

    pub fn one(vars: usize) -> Self {
        Self::monomial(vec![0; vars], 1)
    }

    fn add_term(&mut self, exp: Vec<i32>, coef: i64) {
        if coef == 0 {
            return;
        }
        let entry = self.terms.entry(exp);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coef);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coef;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, i64)> {
        self.terms.iter().map(|(e, &c)| (e, c))
    }

    pub fn coefficient(&self, exp: &[i32]) -> i64 {
        self.terms.get(exp).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// Value at `x = (1, …, 1)`; the dimension for a genuine character.
    pub fn coefficient_sum(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn scaled(&self, by: i64) -> Self {
        let mut out = Self::zero();
        for (e, c) in self.terms() {
            out.add_term(e.clone(), c * by);
        }
        out
    }

    /// Multiplies by `1 − x^{−α}`.
    fn times_one_minus(&self, alpha: &[i32]) -> Self {
        let mut out = self.clone();
        for (e, c) in self.terms() {
            out.add_term(shifted(e, alpha, -1), -c);
        }
        out
    }

    /// Exact quotient by `1 − x^{−α}`, where `f(α) > 0` for the grading `f`.
    fn divide_one_minus(&self, alpha: &[i32], grading: &[i64]) -> Result<Self> {
        let f = |e: &[i32]| -> i64 { e.iter().zip(grading).map(|(&x, &g)| x as i64 * g).sum() };
        let step = f(alpha);
        debug_assert!(step > 0);
        let Some(floor) = self.terms.keys().map(|e| f(e)).min() else {
            return Ok(Self::zero());
        };
        // Buckets keyed by grading; the quotient is peeled off from the top.
        let mut buckets: BTreeMap<i64, BTreeMap<Vec<i32>, i64>> = BTreeMap::new();
        for (e, c) in self.terms() {
            buckets.entry(f(e)).or_default().insert(e.clone(), c);
        }
        let mut quotient = Self::zero();
        while let Some((top, layer)) = buckets.pop_last() {
            if top < floor + step {
                return Err(Error::Internal(
                    "character division left a remainder".into(),
                ));
            }
            let lower = buckets.entry(top - step).or_default();
            for (e, c) in layer {
                if c == 0 {
                    continue;
                }
                let down = shifted(&e, alpha, -1);
                *lower.entry(down).or_insert(0) += c;
                quotient.add_term(e, c);
            }
            lower.retain(|_, v| *v != 0);
            if lower.is_empty() {
                buckets.remove(&(top - step));
            }
        }
        Ok(quotient)
    }
}

fn shifted(e: &[i32], alpha: &[i32], sign: i32) -> Vec<i32> {
    e.iter().zip(alpha).map(|(x, a)| x + sign * a).collect()
}

impl Add for &FormalCharacter {
    type Output = FormalCharacter;
    fn add(self, rhs: &FormalCharacter) -> FormalCharacter {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e.clone(), c);
        }
        out
    }
}

impl Sub for &FormalCharacter {
    type Output = FormalCharacter;
    fn sub(self, rhs: &FormalCharacter) -> FormalCharacter {
        self + &-rhs
    }
}

impl Neg for &FormalCharacter {
    type Output = FormalCharacter;
    fn neg(self) -> FormalCharacter {
        self.scaled(-1)
    }
}

impl Mul for &FormalCharacter {
    type Output = FormalCharacter;
    fn mul(self, rhs: &FormalCharacter) -> FormalCharacter {
        let mut out = FormalCharacter::zero();
        for (a, x) in self.terms() {
            for (b, y) in rhs.terms() {
                out.add_term(shifted(a, b, 1), x * y);
            }
        }
        out
    }
}

impl Serialize for FormalCharacter {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.terms().map(|(e, c)| Term {
            exp: e.clone(),
            coef: c,
        }))
    }
}

impl<'de> Deserialize<'de> for FormalCharacter {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let mut out = FormalCharacter::zero();
        for t in Vec::<Term>::deserialize(d)? {
            out.add_term(t.exp, t.coef);
        }
        Ok(out)
    }
}

/// Shape of a finite root system: variables `x_first..=x_last`, the positive roots, and
/// the group (signed permutations, `images[p] = ±(1 + q)` for position `p ↦ q`).
struct System {
    first: i64,
    vars: usize,
    positive: Vec<Root>,
    group: Vec<(Vec<i64>, i64)>,
}

fn root_vector(r: &Root, first: i64, vars: usize) -> Vec<i32> {
    let mut v = vec![0; vars];
    for (i, c) in r.terms() {
        v[(i - first) as usize] += c as i32;
    }
    v
}

fn permutation_sign(p: &[usize]) -> i64 {
    let mut sign = 1;
    for (a, b) in (0..p.len()).tuple_combinations() {
        if p[a] > p[b] {
            sign = -sign;
        }
    }
    sign
}

/// All permutations of each block, combined; with signs when `signs` is set.
fn signed_group(
    blocks: &[(usize, usize)],
    vars: usize,
    signs: Option<bool>,
) -> Vec<(Vec<i64>, i64)> {
    let mut perms: Vec<(Vec<usize>, i64)> = vec![((0..vars).collect(), 1)];
    for &(start, len) in blocks {
        let mut next = Vec::new();
        for (base, sign) in &perms {
            for p in (0..len).permutations(len) {
                let mut full = base.clone();
                for (a, &b) in p.iter().enumerate() {
                    full[start + a] = base[start + b];
                }
                next.push((full, sign * permutation_sign(&p)));
            }
        }
        perms = next;
    }
    let mut out = Vec::new();
    for (p, sign) in perms {
        let images: Vec<i64> = p.iter().map(|&q| q as i64 + 1).collect();
        match signs {
            None => out.push((images, sign)),
            Some(even_only) => {
                for mask in 0u32..(1 << vars) {
                    if even_only && mask.count_ones() % 2 == 1 {
                        continue;
                    }
                    let signed: Vec<i64> = images
                        .iter()
                        .enumerate()
                        .map(|(k, &v)| if mask >> k & 1 == 1 { -v } else { v })
                        .collect();
                    let det = if mask.count_ones() % 2 == 1 {
                        -sign
                    } else {
                        sign
                    };
                    out.push((signed, det));
                }
            }
        }
    }
    out
}

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

/// `|W|` of the algebra.
pub fn weyl_group_order(tag: &AlgebraTag) -> Result<u64> {
    let (first, last) = tag
        .finite_range()
        .ok_or_else(|| Error::Precondition("finite rank required".into()))?;
    let r = (last - first + 1) as u64;
    Ok(match tag.algebra() {
        Family::A => factorial(r),
        Family::C => (1u64 << r) * factorial(r),
        Family::D => (1u64 << (r - 1)) * factorial(r),
    })
}

fn full_system(tag: &AlgebraTag) -> Result<System> {
    let order = weyl_group_order(tag)?;
    if order > WEYL_ORDER_LIMIT {
        return Err(Error::RankGuard {
            order,
            limit: WEYL_ORDER_LIMIT,
        });
    }
    let (first, last) = tag.finite_range().expect("checked above");
    let vars = (last - first + 1) as usize;
    let group = match tag.algebra() {
        Family::A => signed_group(&[(0, vars)], vars, None),
        Family::C => signed_group(&[(0, vars)], vars, Some(false)),
        Family::D => signed_group(&[(0, vars)], vars, Some(true)),
    };
    Ok(System {
        first,
        vars,
        positive: positive_roots(tag, None)?,
        group,
    })
}

/// Levi blocks as `(start position, length)`.
fn levi_blocks(tag: &AlgebraTag) -> Result<Vec<(usize, usize)>> {
    let (first, last) = tag
        .finite_range()
        .ok_or_else(|| Error::Precondition("finite rank required".into()))?;
    let vars = (last - first + 1) as usize;
    Ok(match tag.algebra() {
        Family::A => {
            let m = (1 - first) as usize;
            [(0, m), (m, vars - m)]
                .into_iter()
                .filter(|b| b.1 > 0)
                .collect()
        }
        _ => vec![(0, vars)],
    })
}

fn levi_system(tag: &AlgebraTag) -> Result<System> {
    let (first, last) = tag
        .finite_range()
        .ok_or_else(|| Error::Precondition("finite rank required".into()))?;
    let vars = (last - first + 1) as usize;
    let family = tag.algebra();
    Ok(System {
        first,
        vars,
        positive: positive_roots(tag, None)?
            .into_iter()
            .filter(|r| is_compact(family, r))
            .collect(),
        group: signed_group(&levi_blocks(tag)?, vars, None),
    })
}

/// `ρ` coefficients (`−i`, or `−i + 1` for type d) as exponents.
fn rho_vector(tag: &AlgebraTag, first: i64, vars: usize) -> Vec<i32> {
    let offset = if tag.algebra() == Family::D { 1 } else { 0 };
    (0..vars)
        .map(|p| (offset - (first + p as i64)) as i32)
        .collect()
}

fn grading(first: i64, vars: usize) -> Vec<i64> {
    (0..vars).map(|p| -(first + p as i64)).collect()
}

/// `Σ_w det(w) x^{w⁻¹(λ+ρ) − ρ} / Π_{α>0} (1 − x^{−α})`.
fn character_in(system: &System, rho: &[i32], weight: &[i64]) -> Result<FormalCharacter> {
    let shifted_weight: Vec<i64> = weight
        .iter()
        .zip(rho)
        .map(|(&w, &r)| w + r as i64)
        .collect();
    let mut numerator = FormalCharacter::zero();
    for (images, det) in &system.group {
        let exp: Vec<i32> = images
            .iter()
            .zip(rho)
            .map(|(&img, &r)| {
                let v = shifted_weight[(img.abs() - 1) as usize] * img.signum();
                (v - r as i64) as i32
            })
            .collect();
        numerator.add_term(exp, *det);
    }
    let grade = grading(system.first, system.vars);
    let mut out = numerator;
    for r in &system.positive {
        out = out.divide_one_minus(&root_vector(r, system.first, system.vars), &grade)?;
    }
    Ok(out)
}

/// `ch L(λ)` by the Weyl character formula, divided out exactly.
pub fn weyl_character(tag: &AlgebraTag, weight: &[i64]) -> Result<FormalCharacter> {
    if !is_dominant(tag, weight) {
        return Err(Error::NotDominant(format!(
            "{weight:?} for {}",
            tag.algebra()
        )));
    }
    let system = full_system(tag)?;
    check_len(weight, system.vars)?;
    character_in(&system, &rho_vector(tag, system.first, system.vars), weight)
}

/// Character of the Levi factor (a product of `gl` blocks) with highest weight `weight`.
pub fn levi_character(tag: &AlgebraTag, weight: &[i64]) -> Result<FormalCharacter> {
    let system = levi_system(tag)?;
    check_len(weight, system.vars)?;
    for &(start, len) in &levi_blocks(tag)? {
        if weight[start..start + len].windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDominant(format!(
                "{weight:?} for the Levi factor"
            )));
        }
    }
    let rho: Vec<i32> = (0..system.vars).map(|p| -(p as i32)).collect();
    character_in(&system, &rho, weight)
}

fn check_len(weight: &[i64], vars: usize) -> Result<()> {
    if weight.len() == vars {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "expected {vars} coefficients, got {}",
            weight.len()
        )))
    }
}

/// `Π_{α ∈ Δ⁺_n} (1 − x^{−α})`.
pub fn noncompact_denominator(tag: &AlgebraTag) -> Result<FormalCharacter> {
    let (first, last) = tag
        .finite_range()
        .ok_or_else(|| Error::Precondition("finite rank required".into()))?;
    let vars = (last - first + 1) as usize;
    let family = tag.algebra();
    let mut out = FormalCharacter::one(vars);
    for r in positive_roots(tag, None)?
        .iter()
        .filter(|r| !is_compact(family, r))
    {
        out = out.times_one_minus(&root_vector(r, first, vars));
    }
    Ok(out)
}

fn integer_coeffs(h: &HomologyDecomposition) -> Result<Vec<Vec<i64>>> {
    h.summands
        .iter()
        .map(|s| {
            let coeffs = s
                .weight
                .finite_coeffs()
                .ok_or_else(|| Error::Precondition("finite-rank summands expected".into()))?;
            coeffs
                .iter()
                .map(|c| {
                    if c.is_integer() {
                        Ok(c.to_integer())
                    } else {
                        Err(Error::Precondition(format!("non-integral coefficient {c}")))
                    }
                })
                .collect()
        })
        .collect()
}

/// `Σ_k (−1)^k Σ ch L(l, summand)` for the given homology degrees.
pub fn euler_characteristic(
    tag: &AlgebraTag,
    degrees: &[HomologyDecomposition],
) -> Result<FormalCharacter> {
    let mut total = FormalCharacter::zero();
    for h in degrees {
        let sign = if h.degree % 2 == 0 { 1 } else { -1 };
        for w in integer_coeffs(h)? {
            total = &total + &levi_character(tag, &w)?.scaled(sign);
        }
    }
    Ok(total)
}

/// Checks `Σ_k (−1)^k ch H_k = ch L(λ) · Π_{Δ⁺_n}(1 − x^{−α})` for the supplied homology.
pub fn euler_check(
    tag: &AlgebraTag,
    weight: &[i64],
    degrees: &[HomologyDecomposition],
) -> Result<bool> {
    Ok(euler_characteristic(tag, degrees)? == euler_target(tag, weight)?)
}

/// `ch L(λ) · Π_{Δ⁺_n}(1 − x^{−α})`, the right-hand side of the Euler identity.
pub fn euler_target(tag: &AlgebraTag, weight: &[i64]) -> Result<FormalCharacter> {
    Ok(&weyl_character(tag, weight)? * &noncompact_denominator(tag)?)
}

/// All degrees of Kostant's homology for `λ`.
pub fn kostant_all_degrees(tag: &AlgebraTag, weight: &[i64]) -> Result<Vec<HomologyDecomposition>> {
    let max = noncompact_positive_count(tag)?;
    (0..=max).map(|k| kostant_finite(tag, weight, k)).collect()
}

fn noncompact_positive_count(tag: &AlgebraTag) -> Result<u32> {
    let family = tag.algebra();
    Ok(positive_roots(tag, None)?
        .iter()
        .filter(|r| !is_compact(family, r))
        .count() as u32)
}

/// The Euler–Poincaré identity for Kostant's formula.
pub fn euler_check_kostant(tag: &AlgebraTag, weight: &[i64]) -> Result<bool> {
    euler_check(tag, weight, &kostant_all_degrees(tag, weight)?)
}

/// `Π_{α>0} ⟨λ+ρ, α∨⟩ / ⟨ρ, α∨⟩`, evaluated independently of any character.
pub fn weyl_dimension(tag: &AlgebraTag, weight: &[i64]) -> Result<Rational64> {
    let (first, last) = tag
        .finite_range()
        .ok_or_else(|| Error::Precondition("finite rank required".into()))?;
    let vars = (last - first + 1) as usize;
    check_len(weight, vars)?;
    let rho = rho_vector(tag, first, vars);
    let mut out = Rational64::from_integer(1);
    for r in positive_roots(tag, None)? {
        let top = r.pairing(|i| {
            Rational64::from_integer(
                weight[(i - first) as usize] + rho[(i - first) as usize] as i64,
            )
        });
        let bottom = r.pairing(|i| Rational64::from_integer(rho[(i - first) as usize] as i64));
        out *= top / bottom;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::{Rank, Side};

    fn tag(f: Family, m: u32, n: u32) -> AlgebraTag {
        AlgebraTag::new(f, Side::G, Rank::Finite { m, n }).unwrap()
    }

    fn poly(terms: &[(&[i32], i64)]) -> FormalCharacter {
        let mut out = FormalCharacter::zero();
        for (e, c) in terms {
            out.add_term(e.to_vec(), *c);
        }
        out
    }

    #[test]
    fn small_weyl_characters() {
        let gl2 = tag(Family::A, 1, 1);
        assert_eq!(
            weyl_character(&gl2, &[1, 0]).unwrap(),
            poly(&[(&[1, 0], 1), (&[0, 1], 1)])
        );
        assert_eq!(
            weyl_character(&gl2, &[2, 0]).unwrap(),
            poly(&[(&[2, 0], 1), (&[1, 1], 1), (&[0, 2], 1)])
        );
        assert_eq!(
            weyl_character(&tag(Family::C, 0, 2), &[0, 0]).unwrap(),
            FormalCharacter::one(2)
        );
        // sp(4) with these positive roots: (0, −1) is the vector representation
        let vec4 = weyl_character(&tag(Family::C, 0, 2), &[0, -1]).unwrap();
        assert_eq!(vec4.coefficient_sum(), 4);
    }

    #[test]
    fn levi_characters() {
        let gl1 = tag(Family::A, 1, 1);
        assert_eq!(
            levi_character(&gl1, &[-3, 2]).unwrap(),
            poly(&[(&[-3, 2], 1)])
        );
        let gl2 = tag(Family::C, 0, 2);
        assert_eq!(
            levi_character(&gl2, &[1, 1]).unwrap(),
            poly(&[(&[1, 1], 1)])
        );
        assert_eq!(
            levi_character(&gl2, &[2, 1]).unwrap(),
            poly(&[(&[2, 1], 1), (&[1, 2], 1)])
        );
        assert!(levi_character(&gl2, &[0, 1]).is_err());
    }

    #[test]
    fn division_detects_remainders() {
        let p = poly(&[(&[1, 0], 1)]);
        assert!(p.divide_one_minus(&[1, -1], &[-1, -2]).is_err());
        let q = poly(&[(&[1, 0], 1), (&[0, 1], -1)]);
        assert_eq!(
            q.divide_one_minus(&[1, -1], &[-1, -2]).unwrap(),
            poly(&[(&[1, 0], 1)])
        );
    }

    #[test]
    fn euler_identity_small_cases() {
        assert!(euler_check_kostant(&tag(Family::A, 2, 2), &[1, 0, 0, 0]).unwrap());
        assert!(euler_check_kostant(&tag(Family::C, 0, 2), &[0, 0]).unwrap());
        assert!(euler_check_kostant(&tag(Family::D, 0, 3), &[0, -1, -1]).unwrap());
    }

    #[test]
    fn dimensions_match() {
        for (t, w) in [
            (tag(Family::A, 1, 2), vec![2, 1, 0]),
            (tag(Family::C, 0, 2), vec![0, -1]),
            (tag(Family::D, 0, 3), vec![1, -1, -2]),
        ] {
            let ch = weyl_character(&t, &w).unwrap();
            assert_eq!(
                Rational64::from_integer(ch.coefficient_sum()),
                weyl_dimension(&t, &w).unwrap()
            );
        }
    }

    #[test]
    fn serialization_round_trip() {
        let p = poly(&[(&[1, 0], 2), (&[0, -1], -1)]);
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"[{"exp":[0,-1],"coef":-1},{"exp":[1,0],"coef":2}]"#);
        assert_eq!(serde_json::from_str::<FormalCharacter>(&json).unwrap(), p);
    }
}
