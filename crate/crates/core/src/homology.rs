//! `u⁻`-homology of unitarizable highest-weight modules.
//!
//! Three infinite-rank routes (dot action on `ζ`, relabeling through `J`, and the
//! subsystem `Δ(λ, d)`) must agree; at finite rank the truncation of the first route is
//! compared with a direct computation in the reflection subgroup generated by `Φ(ξ)`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::half::Half;
use crate::partitions::Partition;
use crate::partitions::PartitionPair;
use crate::rootsystem::{delta_subsystem, subsystem_w0, FiniteSubsystem};
use crate::weights::{
    act_on_weight, bar_lambda_weight, bar_lambda_weight_any, check_truncation_support,
    dominant_rep, dot_action_mu, gamma_weight, lam_from_zbar, normalize, zeta_data, AlgebraTag,
    EpsCoeffs, IndexSets, Lam, Rank, WeightLabel, WeightVector,
};
use crate::weylgroup::{bar_map_inverse, enumerate_w0, Family};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HomologySummand {
    pub weight: WeightVector,
    /// `μ` when the weight is `Λ̄ᵍ(μ, d)` (or `Γ(μ, d)` at finite rank).
    pub mu: Option<Lam>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyDecomposition {
    pub degree: u32,
    pub summands: Vec<HomologySummand>,
}

impl HomologyDecomposition {
    /// Sorts the summands into canonical order.
    pub fn new(degree: u32, mut summands: Vec<HomologySummand>) -> Self {
        summands.sort();
        HomologyDecomposition { degree, summands }
    }

    fn new_distinct(degree: u32, summands: Vec<HomologySummand>) -> Result<Self> {
        let out = Self::new(degree, summands);
        if out.summands.windows(2).any(|w| w[0].weight == w[1].weight) {
            return Err(Error::Internal(format!(
                "repeated summand in degree {degree}"
            )));
        }
        Ok(out)
    }

    pub fn weights(&self) -> Vec<&WeightVector> {
        self.summands.iter().map(|s| &s.weight).collect()
    }

    /// Equality of the summand weights as multisets.
    pub fn same_weights(&self, other: &Self) -> bool {
        self.degree == other.degree && self.weights() == other.weights()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }
}

impl fmt::Display for HomologyDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H_{}:", self.degree)?;
        if self.summands.is_empty() {
            return f.write_str(" 0");
        }
        for s in &self.summands {
            match &s.mu {
                Some(mu) => write!(f, "\n  L(l, μ = {mu}): {}", s.weight)?,
                None => write!(f, "\n  L(l, {})", s.weight)?,
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Route {
    G,
    Relabel,
    Bar,
}

impl Route {
    pub const ALL: [Route; 3] = [Route::G, Route::Relabel, Route::Bar];
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::G => "g",
            Route::Relabel => "relabel",
            Route::Bar => "bar",
        })
    }
}

pub fn h_route(route: Route, label: &WeightLabel, k: u32) -> Result<HomologyDecomposition> {
    match route {
        Route::G => h_route_g(label, k),
        Route::Relabel => h_route_relabel(label, k),
        Route::Bar => h_route_bar(label, k),
    }
}

fn summand_for(label: &WeightLabel, mu: Lam) -> Result<HomologySummand> {
    let weight = bar_lambda_weight_any(&WeightLabel::new(label.family, mu.clone(), label.d)?)?;
    Ok(HomologySummand {
        weight,
        mu: Some(mu),
    })
}

/// Summands `Λ̄ᵍ(μ, d)` with `Λᵍ(μ, d) = w⁻¹ ∘ Λᵍ(λ, d)`, `w ∈ W⁰_{g,k}`.
pub fn h_route_g(label: &WeightLabel, k: u32) -> Result<HomologyDecomposition> {
    label.require_in_d()?;
    let summands = enumerate_w0(label.family, k)
        .iter()
        .map(|w| summand_for(label, dot_action_mu(w, label)?))
        .collect::<Result<Vec<_>>>()?;
    HomologyDecomposition::new_distinct(k, summands)
}

/// Places `ζ̄_{j_{σ(i)}}` at `jᵢ`, keeps `ζ̄` off `J`, sorts and reads off `μ`.
pub fn h_route_relabel(label: &WeightLabel, k: u32) -> Result<HomologyDecomposition> {
    label.require_in_d()?;
    let z = zeta_data(label)?;
    let summands = enumerate_w0(label.family, k)
        .iter()
        .map(|sigma| {
            let placed = match &z.index_sets {
                IndexSets::Signed { j_set, .. } => {
                    let s = if label.family == Family::D && z.zeta_at(1) == Half::ZERO {
                        bar_map_inverse(sigma)?
                    } else {
                        sigma.clone()
                    };
                    let zbar = z.zbar_seq();
                    let mut values = BTreeMap::new();
                    for i in 1..=s.support_bound() {
                        let t = s.apply(i);
                        let v = zbar.value(j_set.nth(t.abs()));
                        values.insert(j_set.nth(i), if t < 0 { -v } else { v });
                    }
                    z.zbar.with_values(&values)?
                }
                IndexSets::Split { j_minus, j_plus } => {
                    // j is strictly decreasing on ℤ with j(ℤ≤0) = J₊ and j(ℕ) = J₋
                    let j = |x: i64| {
                        if x <= 0 {
                            j_plus.nth(1 - x)
                        } else {
                            j_minus.nth(x)
                        }
                    };
                    let mut values = BTreeMap::new();
                    if let Some((lo, hi)) = sigma.support_range() {
                        for x in lo..=hi {
                            values.insert(j(x), z.zbar_at(j(sigma.apply(x))));
                        }
                    }
                    z.zbar.with_values(&values)?
                }
            };
            let sorted = placed.sorted_blocks()?;
            summand_for(label, lam_from_zbar(label.family, label.d, &sorted)?)
        })
        .collect::<Result<Vec<_>>>()?;
    HomologyDecomposition::new_distinct(k, summands)
}

/// `[w⁻¹(Λ̄ + ρ)]⁺ − ρ` over `w ∈ W⁰_k(λ, d)`.
pub fn h_route_bar(label: &WeightLabel, k: u32) -> Result<HomologyDecomposition> {
    let top = bar_lambda_weight(label)?.plus_rho()?;
    let sub = delta_subsystem(label)?;
    let summands = subsystem_w0(&sub, k)?
        .iter()
        .map(|w| {
            let sorted = dominant_rep(&act_on_weight(&w.inverse(), &top)?)?;
            let mu = lam_from_zbar(label.family, label.d, &normalize(&sorted)?).ok();
            Ok(HomologySummand {
                weight: sorted.minus_rho()?,
                mu,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    HomologyDecomposition::new_distinct(k, summands)
}

/// How a finite-rank input is handled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Regime {
    /// `(λ, d) ∈ D_𝔱(g)`: truncation of the infinite-rank answer.
    Integral,
    /// Non-integral `d` strictly inside the continuous range: the parabolic Verma module is
    /// irreducible and higher homology vanishes.
    Generic,
}

/// A finite-rank input after normalization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnrightInput {
    pub label: WeightLabel,
    pub m: u32,
    pub n: u32,
    pub det_twist: i64,
    pub regime: Regime,
}

impl EnrightInput {
    /// `ξ = Γ(λ, d) + twist·Σεᵢ`.
    pub fn xi(&self) -> Result<WeightVector> {
        let g = gamma_weight(&self.label, self.m, self.n)?;
        twisted(g, self.det_twist)
    }
}

fn twisted(mut v: WeightVector, twist: i64) -> Result<WeightVector> {
    if twist != 0 {
        let EpsCoeffs::Finite { coeffs, .. } = &mut v.eps else {
            return Err(Error::Internal("twist applies to finite weights".into()));
        };
        for c in coeffs.iter_mut() {
            *c += twist;
        }
    }
    Ok(v)
}

fn minus_const(p: &Partition, rows: usize, c: u32) -> Result<Partition> {
    Partition::new((1..=rows).map(|i| p.part(i) - c).collect())
}

/// Rewrites `Γ(λ, d)` (+ twist) so that the last admissible rows of `λ` vanish, which is
/// the form the unitarizability criteria are stated in.
fn normalize_rows(label: &WeightLabel, m: u32, n: u32, twist: i64) -> Result<(WeightLabel, i64)> {
    let n_us = n as usize;
    match &label.lam {
        Lam::Single(p) => {
            let c = p.part(n_us);
            if label.family == Family::C && n >= 2 && p.part(n_us - 1) != c {
                return Err(Error::OutsideScope(format!(
                    "{label} at n={n}: the last two coefficients of Γ differ"
                )));
            }
            let shift = if label.family == Family::C {
                c as i64
            } else {
                2 * c as i64
            };
            let lam = Lam::Single(minus_const(p, n_us, c)?);
            Ok((WeightLabel::new(label.family, lam, label.d + shift)?, twist))
        }
        Lam::Pair(pp) => {
            let c = pp.plus.part(n_us);
            let e = pp.minus.part(m as usize);
            let lam = Lam::Pair(PartitionPair::new(
                minus_const(&pp.minus, m as usize, e)?,
                minus_const(&pp.plus, n_us, c)?,
            ));
            Ok((
                WeightLabel::new(Family::A, lam, label.d + (c as i64 + e as i64))?,
                twist + c as i64,
            ))
        }
    }
}

/// Lower end of the continuous unitarizable range for a normalized label.
fn continuous_bound(label: &WeightLabel, m: u32, n: u32) -> Half {
    let n = n as i64;
    match &label.lam {
        Lam::Single(p) => {
            let t = p.transpose();
            if label.family == Family::D {
                Half::from_int(n - 1 + t.part(2) as i64)
            } else {
                let l1 = t.part(1) as i64;
                let top = if (n - l1) % 2 == 0 {
                    l1 + n
                } else {
                    l1 + n - 1
                };
                Half::from_doubled(top) - 1
            }
        }
        Lam::Pair(pp) => {
            let minus = pp.minus.transpose().part(1) as i64 + n - 1;
            let plus = pp.plus.transpose().part(1) as i64 + m as i64 - 1;
            Half::from_int(minus.min(plus))
        }
    }
}

/// Classifies a finite-rank input: integral labels in `D_𝔱(g)` (possibly after
/// normalizing rows), non-integral labels in the continuous range, or an error.
pub fn enright_input(label: &WeightLabel, m: u32, n: u32, det_twist: i64) -> Result<EnrightInput> {
    if det_twist != 0 && label.family != Family::A {
        return Err(Error::Precondition(format!(
            "det twist {det_twist} applies only to family a"
        )));
    }
    let m = if label.family == Family::A { m } else { 0 };
    AlgebraTag::new(
        label.family,
        crate::weights::Side::Bar,
        Rank::Finite { m, n },
    )?;
    check_truncation_support(label, m, n)?;
    let accept = |label: WeightLabel, det_twist, regime| EnrightInput {
        label,
        m,
        n,
        det_twist,
        regime,
    };
    if label.in_d() {
        return Ok(accept(label.clone(), det_twist, Regime::Integral));
    }
    let (norm, twist) = normalize_rows(label, m, n, det_twist)?;
    if norm.in_d() {
        return Ok(accept(norm, twist, Regime::Integral));
    }
    if norm.d.is_integer() {
        return Err(Error::NotUnitarizable(format!("{label} at m={m}, n={n}")));
    }
    let bound = continuous_bound(&norm, m, n);
    if norm.d > bound {
        Ok(accept(norm, twist, Regime::Generic))
    } else {
        Err(Error::NotUnitarizable(format!(
            "{label} at m={m}, n={n}: d must exceed {bound}"
        )))
    }
}

/// Keeps `μ` supported on the window and converts `Λ̄(μ, d)` to `Γ(μ, d)`.
pub fn enright_truncation(input: &EnrightInput, k: u32) -> Result<HomologyDecomposition> {
    let xi = input.xi()?;
    if input.regime == Regime::Generic {
        let summands = if k == 0 {
            vec![HomologySummand {
                weight: xi,
                mu: Some(input.label.lam.clone()),
            }]
        } else {
            vec![]
        };
        return Ok(HomologyDecomposition::new(k, summands));
    }
    let mut summands = Vec::new();
    for s in h_route_g(&input.label, k)?.summands {
        let mu = s.mu.expect("route g records μ");
        let mu_label = WeightLabel::new(input.label.family, mu.clone(), input.label.d)?;
        if check_truncation_support(&mu_label, input.m, input.n).is_err() {
            continue;
        }
        let weight = twisted(gamma_weight(&mu_label, input.m, input.n)?, input.det_twist)?;
        summands.push(HomologySummand {
            weight,
            mu: Some(mu),
        });
    }
    Ok(HomologyDecomposition::new(k, summands))
}

/// `[w⁻¹(ξ + ρ)]⁺ − ρ` over `W⁰_k(ξ)` of the reflection subgroup generated by `Φ(ξ)`.
pub fn enright_direct(input: &EnrightInput, k: u32) -> Result<HomologyDecomposition> {
    let xi = input.xi()?;
    let sub = FiniteSubsystem::from_phi(&xi)?;
    levi_summands(&sub, &xi, k)
}

fn levi_summands(
    sub: &FiniteSubsystem,
    xi: &WeightVector,
    k: u32,
) -> Result<HomologyDecomposition> {
    let top = xi.plus_rho()?;
    let summands = sub
        .w0(k as usize)?
        .iter()
        .map(|w| {
            let moved = act_on_weight(&w.inverse(), &top)?;
            Ok(HomologySummand {
                weight: dominant_rep(&moved)?.minus_rho()?,
                mu: None,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(HomologyDecomposition::new(k, summands))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EnrightPath {
    Truncation,
    Direct,
    /// Both, failing on disagreement.
    Checked,
}

/// Finite-rank homology of `L(Γ(λ, d) + twist·Σε)`.
pub fn h_enright_finite(
    label: &WeightLabel,
    m: u32,
    n: u32,
    k: u32,
    det_twist: i64,
    path: EnrightPath,
) -> Result<HomologyDecomposition> {
    let input = enright_input(label, m, n, det_twist)?;
    match path {
        EnrightPath::Truncation => enright_truncation(&input, k),
        EnrightPath::Direct => enright_direct(&input, k),
        EnrightPath::Checked => {
            let t = enright_truncation(&input, k)?;
            let d = enright_direct(&input, k)?;
            if t.same_weights(&d) {
                Ok(t)
            } else {
                Err(Error::Internal(format!(
                    "truncation and direct paths disagree for {label} at m={m}, n={n}, k={k}"
                )))
            }
        }
    }
}

/// Whether integer coefficients form a dominant integral weight of the algebra.
pub fn is_dominant(tag: &AlgebraTag, weight: &[i64]) -> bool {
    let non_increasing = weight.windows(2).all(|w| w[0] >= w[1]);
    match tag.algebra() {
        Family::A => non_increasing,
        Family::C => non_increasing && weight.first().is_none_or(|&x| x <= 0),
        Family::D => non_increasing && (weight.len() < 2 || weight[0] + weight[1] <= 0),
    }
}

/// Finite weight with the given integer coefficients.
pub fn finite_weight(tag: &AlgebraTag, weight: &[i64]) -> Result<WeightVector> {
    let (first, last) = tag
        .finite_range()
        .ok_or_else(|| Error::Precondition("finite rank required".into()))?;
    if weight.len() as i64 != last - first + 1 {
        return Err(Error::Precondition(format!(
            "expected {} coefficients",
            last - first + 1
        )));
    }
    Ok(WeightVector {
        tag: *tag,
        eps: EpsCoeffs::Finite {
            first,
            coeffs: weight.iter().map(|&x| x.into()).collect(),
        },
        theta: Half::ZERO,
    })
}

/// Kostant: `⊕_{w ∈ W⁰, ℓ(w) = k} L(l, w⁻¹(λ + ρ) − ρ)` for dominant integral `λ`.
pub fn kostant_finite(tag: &AlgebraTag, weight: &[i64], k: u32) -> Result<HomologyDecomposition> {
    if !is_dominant(tag, weight) {
        return Err(Error::NotDominant(format!(
            "{weight:?} for {}",
            tag.algebra()
        )));
    }
    let xi = finite_weight(tag, weight)?;
    let sub = FiniteSubsystem::full(*tag)?;
    let top = xi.plus_rho()?;
    let summands = sub
        .w0(k as usize)?
        .iter()
        .map(|w| {
            let moved = act_on_weight(&w.inverse(), &top)?;
            if dominant_rep(&moved)? != moved {
                return Err(Error::Internal(format!(
                    "{w} does not land in the Levi chamber"
                )));
            }
            Ok(HomologySummand {
                weight: moved.minus_rho()?,
                mu: None,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    HomologyDecomposition::new_distinct(k, summands)
}
