//! Acceptance sweeps.
//!
//! Each criterion returns a [`CriterionReport`] with the number of individual checks and
//! the first few failures. Sweeps are deterministic; parallel execution only changes speed.

use std::collections::BTreeSet;
use std::fmt;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::characters::{
    euler_characteristic, euler_check, euler_target, kostant_all_degrees, weyl_group_order,
};
use crate::half::Half;
use crate::homology::{
    enright_direct, enright_input, enright_truncation, h_enright_finite, h_route, EnrightPath,
    Regime, Route,
};
use crate::homology::{is_dominant, HomologyDecomposition};
use crate::parallel::{map, Execution};
use crate::partitions::{
    certification_window, is_dual_pair, pairs_up_to, partitions_up_to, rho_shifted_seq, Partition,
    PartitionPair,
};
use crate::weights::{
    bar_lambda_weight_any, check_truncation_support, zeta_data, AlgebraTag, EpsCoeffs, Lam, Rank,
    Side, WeightLabel, ZetaData,
};
use crate::weylgroup::{bar_map, bar_map_inverse, enumerate_w0, Family, WeylElement};
use crate::{Error, Result};

/// Environment variable overriding the label-size bound of the sweeps.
pub const SWEEP_BOUND_VAR: &str = "KE_SWEEP_BOUND";

const MAX_FAILURES_KEPT: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepConfig {
    /// `|λ|` (or `|λ⁻| + |λ⁺|`).
    pub max_size: u32,
    pub max_d: i64,
    pub max_k: u32,
    /// Bound for the plain dual-pair check.
    pub dual_size: u32,
    /// Bound for the enumeration counts.
    pub count_k: u32,
    /// Largest `|entry|` of the Kostant weights.
    pub kostant_entry: i64,
}

impl SweepConfig {
    pub const FULL: SweepConfig = SweepConfig {
        max_size: 6,
        max_d: 8,
        max_k: 4,
        dual_size: 10,
        count_k: 10,
        kostant_entry: 3,
    };

    pub const QUICK: SweepConfig = SweepConfig {
        max_size: 4,
        max_d: 5,
        max_k: 3,
        dual_size: 10,
        count_k: 10,
        kostant_entry: 3,
    };

    /// Applies `KE_SWEEP_BOUND` (a label-size bound) if set.
    pub fn with_env_override(self) -> Result<Self> {
        match std::env::var(SWEEP_BOUND_VAR) {
            Ok(v) => {
                let bound = v.trim().parse::<u32>().map_err(|e| Error::Parse {
                    field: SWEEP_BOUND_VAR.into(),
                    message: format!("{v:?}: {e}"),
                })?;
                Ok(SweepConfig {
                    max_size: bound,
                    ..self
                })
            }
            Err(_) => Ok(self),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionReport {
    pub id: u32,
    pub name: String,
    pub passed: bool,
    /// Number of individual checks performed.
    pub checked: u64,
    pub detail: String,
    pub failures: Vec<String>,
}

impl fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] criterion {}: {} — {} checks, {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.checked,
            self.detail
        )?;
        for fail in &self.failures {
            write!(f, "\n    {fail}")?;
        }
        Ok(())
    }
}

/// Accumulates check outcomes.
#[derive(Default)]
struct Tally {
    checked: u64,
    failed: u64,
    failures: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.fail(what());
        }
    }

    fn fail(&mut self, msg: String) {
        self.failed += 1;
        if self.failures.len() < MAX_FAILURES_KEPT {
            self.failures.push(msg);
        }
    }

    fn outcome<T>(&mut self, r: Result<T>, ctx: impl FnOnce() -> String) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.checked += 1;
                self.fail(format!("{}: {e}", ctx()));
                None
            }
        }
    }

    fn merge(&mut self, other: Tally) {
        self.checked += other.checked;
        self.failed += other.failed;
        for f in other.failures {
            if self.failures.len() < MAX_FAILURES_KEPT {
                self.failures.push(f);
            }
        }
    }

    fn report(self, id: u32, name: &str, detail: String) -> CriterionReport {
        CriterionReport {
            id,
            name: name.into(),
            passed: self.failed == 0 && self.checked > 0,
            checked: self.checked,
            detail: if self.failed == 0 {
                detail
            } else {
                format!("{} failed; {detail}", self.failed)
            },
            failures: self.failures,
        }
    }
}

fn merge_all(parts: Vec<Tally>) -> Tally {
    let mut t = Tally::default();
    for p in parts {
        t.merge(p);
    }
    t
}

/// Labels `(λ, d) ∈ D(g)` with `|λ| ≤ max_size` and `1 ≤ d ≤ max_d`, in canonical order.
pub fn sweep_labels(family: Family, max_size: u32, max_d: i64) -> Vec<WeightLabel> {
    let lams: Vec<Lam> = match family {
        Family::A => pairs_up_to(max_size).into_iter().map(Lam::Pair).collect(),
        _ => partitions_up_to(max_size)
            .into_iter()
            .map(Lam::Single)
            .collect(),
    };
    let mut out = Vec::new();
    for d in 1..=max_d {
        for lam in &lams {
            if let Ok(l) = WeightLabel::new(family, lam.clone(), Half::from_int(d)) {
                if l.in_d() {
                    out.push(l);
                }
            }
        }
    }
    out
}

fn all_sweep_labels(max_size: u32, max_d: i64) -> Vec<WeightLabel> {
    Family::ALL
        .iter()
        .flat_map(|&f| sweep_labels(f, max_size, max_d))
        .collect()
}

/// Criterion 1: the three infinite-rank routes agree.
pub fn route_agreement(cfg: &SweepConfig, exec: Execution) -> CriterionReport {
    let labels = all_sweep_labels(cfg.max_size, cfg.max_d);
    let counts: Vec<Vec<usize>> = Family::ALL
        .iter()
        .map(|&f| (0..=cfg.max_k).map(|k| enumerate_w0(f, k).len()).collect())
        .collect();
    let family_index = |f: Family| {
        Family::ALL
            .iter()
            .position(|&x| x == f)
            .expect("known family")
    };
    let parts = map(exec, &labels, |label| {
        let mut t = Tally::default();
        for k in 0..=cfg.max_k {
            let ctx = || format!("{label} k={k}");
            let Some(g) = t.outcome(h_route(Route::G, label, k), ctx) else {
                continue;
            };
            let Some(r) = t.outcome(h_route(Route::Relabel, label, k), ctx) else {
                continue;
            };
            let Some(b) = t.outcome(h_route(Route::Bar, label, k), ctx) else {
                continue;
            };
            t.check(g == r, || format!("{}: route g {g} ≠ relabel {r}", ctx()));
            t.check(g.same_weights(&b), || {
                format!("{}: route g {g} ≠ bar {b}", ctx())
            });
            let expected = counts[family_index(label.family)][k as usize];
            t.check(g.summands.len() == expected, || {
                format!(
                    "{}: {} summands, |W⁰_k| = {expected}",
                    ctx(),
                    g.summands.len()
                )
            });
        }
        t
    });
    merge_all(parts).report(
        1,
        "route agreement",
        format!(
            "{} labels, |λ| ≤ {}, 1 ≤ d ≤ {}, k ≤ {}",
            labels.len(),
            cfg.max_size,
            cfg.max_d,
            cfg.max_k
        ),
    )
}

/// Criterion 2: `(c, (1), 1)` in degree 1 gives exactly `ε₁+ε₂+ε₃ − 2ϑ` on every route.
pub fn worked_example() -> CriterionReport {
    let mut t = Tally::default();
    let one = |s: &str| s.parse::<Partition>().expect("literal partition");
    let label = WeightLabel::single(Family::C, one("1"), 1).expect("valid label");
    let target_label = WeightLabel::single(Family::C, one("1,1,1"), 1).expect("valid label");
    let target = bar_lambda_weight_any(&target_label);
    for route in Route::ALL {
        let Some(h) = t.outcome(h_route(route, &label, 1), || format!("route {route}")) else {
            continue;
        };
        t.check(h.summands.len() == 1, || {
            format!("route {route}: {} summands", h.summands.len())
        });
        let Some(s) = h.summands.first() else {
            continue;
        };
        let w = &s.weight;
        let literal = (1..=3).all(|i| w.eps.at(i) == 1.into())
            && (4..=12).all(|i| w.eps.at(i) == 0.into())
            && w.theta == Half::from_int(-2)
            && w.tag.algebra() == Family::D;
        t.check(literal, || format!("route {route}: weight {w}"));
        if let Ok(target) = &target {
            t.check(w == target, || {
                format!("route {route}: {w} ≠ Λ̄((1,1,1), 1) = {target}")
            });
        }
        if let Some(mu) = &s.mu {
            t.check(mu == &target_label.lam, || {
                format!("route {route}: μ = {mu}")
            });
        }
    }
    t.report(
        2,
        "worked example (c, (1), 1, k=1)",
        "one summand ε₁+ε₂+ε₃−2ϑ on all routes".into(),
    )
}

/// `p(k)` for `k ≤ n` from the pentagonal-number recurrence.
pub fn partition_numbers(n: usize) -> Vec<u64> {
    let mut p = vec![0i64; n + 1];
    p[0] = 1;
    for m in 1..=n {
        let mut acc = 0i64;
        for j in 1.. {
            let g1 = j * (3 * j - 1) / 2;
            if g1 > m {
                break;
            }
            let sign = if j % 2 == 1 { 1 } else { -1 };
            acc += sign * p[m - g1];
            let g2 = j * (3 * j + 1) / 2;
            if g2 <= m {
                acc += sign * p[m - g2];
            }
        }
        p[m] = acc;
    }
    p.into_iter().map(|x| x as u64).collect()
}

/// Coefficients of `Π_{i ≥ 1} (1 + xⁱ)` up to `xⁿ`.
pub fn distinct_partition_numbers(n: usize) -> Vec<u64> {
    let mut q = vec![0u64; n + 1];
    q[0] = 1;
    for part in 1..=n {
        for m in (part..=n).rev() {
            q[m] += q[m - part];
        }
    }
    q
}

/// Whether the signed root `Σ c·ε_i` (folded by `ε₋ᵢ = −εᵢ`) is positive: its coefficient
/// at the largest index is negative.
fn signed_root_positive(terms: &[(i64, i64)]) -> bool {
    let mut folded: Vec<(i64, i64)> = Vec::new();
    for &(i, c) in terms {
        let (i, c) = if i < 0 { (-i, -c) } else { (i, c) };
        match folded.iter_mut().find(|(j, _)| *j == i) {
            Some((_, acc)) => *acc += c,
            None => folded.push((i, c)),
        }
    }
    folded.retain(|&(_, c)| c != 0);
    folded
        .iter()
        .max_by_key(|&&(i, _)| i)
        .is_some_and(|&(_, c)| c < 0)
}

/// Length of a signed permutation of `{±1, …, ±B}` (given by `images[i−1] = σ(i)`)
/// as the number of positive roots of type c or d it makes negative.
fn signed_length(images: &[i64], with_long: bool) -> usize {
    let s = |i: usize| images[i - 1];
    let b = images.len();
    let mut count = 0;
    for i in 1..=b {
        if with_long && !signed_root_positive(&[(s(i), -2)]) {
            count += 1;
        }
        for j in i + 1..=b {
            for sign in [1, -1] {
                // sign·εᵢ − εⱼ is positive for i < j
                if !signed_root_positive(&[(s(i), sign), (s(j), -1)]) {
                    count += 1;
                }
            }
        }
    }
    count
}

/// Backtracking over the window `[lo, B]`: from the top value down, each value is assigned
/// to the image of `ℕ` or of `ℤ≤0`, both filled increasingly; inversions are pairs
/// (image of `ℤ≤0`, image of `ℕ`) in the wrong order.
struct GrassmannSearch {
    lo: i64,
    b: usize,
    k: u32,
    pos: Vec<i64>,
    nonpos: Vec<i64>,
    out: Vec<Vec<i64>>,
}

impl GrassmannSearch {
    fn go(&mut self, v: i64, inv: u32) {
        if v < self.lo {
            if inv == self.k && self.pos.len() == self.b {
                let mut images: Vec<i64> = self.nonpos.iter().rev().copied().collect();
                images.extend(self.pos.iter().rev());
                self.out.push(images);
            }
            return;
        }
        let extra = self.nonpos.len() as u32;
        if self.pos.len() < self.b && inv + extra <= self.k {
            self.pos.push(v);
            self.go(v - 1, inv + extra);
            self.pos.pop();
        }
        if self.nonpos.len() < self.b {
            self.nonpos.push(v);
            self.go(v - 1, inv);
            self.nonpos.pop();
        }
    }
}

/// Brute-force `W⁰_{g,k}` as image vectors: type a on `[1−B, B]` (listed from `1−B`),
/// types c/d on `1..=B`. `even_d = false` drops the evenness constraint of type d.
pub fn brute_force_w0(family: Family, k: u32, even_d: bool) -> Vec<Vec<i64>> {
    let b = i64::from(k.max(1)) + 1;
    match family {
        Family::A => {
            let mut search = GrassmannSearch {
                lo: 1 - b,
                b: b as usize,
                k,
                pos: Vec::new(),
                nonpos: Vec::new(),
                out: Vec::new(),
            };
            search.go(b, 0);
            search.out
        }
        Family::C | Family::D => {
            let with_long = family == Family::C;
            let mut out = Vec::new();
            for mask in 0u32..(1 << b) {
                if family == Family::D && even_d && mask.count_ones() % 2 == 1 {
                    continue;
                }
                let mut images: Vec<i64> = (1..=b)
                    .map(|x| if mask & (1 << (x - 1)) != 0 { -x } else { x })
                    .collect();
                images.sort_unstable();
                if signed_length(&images, with_long) == k as usize {
                    out.push(images);
                }
            }
            out
        }
    }
}

fn element_from_images(family: Family, k: u32, images: &[i64]) -> Result<WeylElement> {
    let b = i64::from(k.max(1)) + 1;
    let first = if family == Family::A { 1 - b } else { 1 };
    WeylElement::from_map(
        family,
        images
            .iter()
            .enumerate()
            .map(|(i, &v)| (first + i as i64, v)),
    )
}

/// Criterion 3: coset-representative counts against generating-function recurrences,
/// a brute-force enumeration, and the bar bijection.
pub fn enumeration_counts(cfg: &SweepConfig) -> CriterionReport {
    let mut t = Tally::default();
    let n = cfg.count_k as usize;
    let p = partition_numbers(n);
    let q = distinct_partition_numbers(n);
    for k in 0..=cfg.count_k {
        let ku = k as usize;
        let mut sets = Vec::new();
        for family in Family::ALL {
            let listed = enumerate_w0(family, k);
            let expected = if family == Family::A { p[ku] } else { q[ku] };
            t.check(listed.len() as u64 == expected, || {
                format!(
                    "|W⁰_{{{family},{k}}}| = {}, recurrence gives {expected}",
                    listed.len()
                )
            });
            let brute: Option<BTreeSet<WeylElement>> = t.outcome(
                brute_force_w0(family, k, true)
                    .iter()
                    .map(|im| element_from_images(family, k, im))
                    .collect(),
                || format!("brute force {family} k={k}"),
            );
            if let Some(brute) = brute {
                let listed_set: BTreeSet<WeylElement> = listed.iter().cloned().collect();
                t.check(brute == listed_set, || {
                    format!("brute-force W⁰_{{{family},{k}}} differs from the listing")
                });
            }
            sets.push(listed);
        }
        let (c_set, d_set) = (&sets[1], &sets[2]);
        let d_lookup: BTreeSet<&WeylElement> = d_set.iter().collect();
        let mut images = BTreeSet::new();
        for s in c_set {
            let Some(img) = t.outcome(bar_map(s), || format!("bar_map({s})")) else {
                continue;
            };
            let len_ok = img.length().ok() == Some(k as usize);
            let back_ok = bar_map_inverse(&img).ok().as_ref() == Some(s);
            t.check(d_lookup.contains(&img) && len_ok && back_ok, || {
                format!("bar_map({s}) = {img}")
            });
            images.insert(img);
        }
        t.check(images.len() == d_set.len(), || {
            format!("bar_map is not onto W⁰_{{d,{k}}}")
        });
    }
    t.report(
        3,
        "enumeration counts",
        format!("k ≤ {}, p(k) and q(k) by recurrence", cfg.count_k),
    )
}

/// Compares `ζ̄ ∘ enum(J)` with an expected enumeration over `1..=window`.
fn enumerations_match(window: i64, lhs: impl Fn(i64) -> Half, rhs: impl Fn(i64) -> Half) -> bool {
    (1..=window).all(|r| lhs(r) == rhs(r))
}

fn zeta_identities(z: &ZetaData, t: &mut Tally) {
    let label = &z.label;
    let d = label.d.to_int().expect("sweep labels are integral");
    match (&z.zeta, &z.zbar) {
        (EpsCoeffs::Natural(zeta), EpsCoeffs::Natural(zbar)) => {
            let window = certification_window(zeta, zbar) + 2;
            let excl = z.j_sets().0.excluded.len() as i64;
            let span = window + excl + 2;
            t.check(is_dual_pair(zeta, zbar, window).unwrap_or(false), || {
                format!("{label}: ζ, ζ̄ are not a dual pair")
            });
            let lam1 = label
                .partition()
                .map_or(0, |p| p.transpose().part(1) as i64);
            let signs_ok = match label.family {
                Family::C => (1..=span).all(|i| zeta.value(i) < Half::ZERO),
                _ => {
                    (2..=span).all(|i| zeta.value(i) < Half::ZERO)
                        && zeta.value(1).doubled().signum() == (2 * lam1 - d).signum()
                }
            };
            t.check(signs_ok, || format!("{label}: sign pattern of ζ"));
            let j = z.j_sets().0;
            let sbar = |r: i64| zbar.value(j.nth(r));
            let same = |shift: i64| enumerations_match(span, sbar, |r| zeta.value(r + shift));
            let zero_in = |s: &crate::partitions::EventuallyLinearSeq| {
                (1..=span).any(|i| s.value(i) == Half::ZERO)
            };
            let ok = match label.family {
                Family::C => same(0) && zbar.value(d + 1) == Half::ZERO,
                _ if d % 2 == 1 => same(0) && !zero_in(zeta) && !zero_in(zbar),
                _ if 2 * lam1 == d => same(1) && zeta.value(1) == Half::ZERO,
                _ => same(0) && zero_in(zbar),
            };
            t.check(ok, || format!("{label}: S̄ versus S"));
        }
        (
            EpsCoeffs::Integer {
                nonpos: zn,
                pos: zp,
            },
            EpsCoeffs::Integer {
                nonpos: bn,
                pos: bp,
            },
        ) => {
            let window = certification_window(bp, zp)
                .max(certification_window(&bn.negated(), &zn.negated()))
                + 2;
            t.check(is_dual_pair(bp, zp, window).unwrap_or(false), || {
                format!("{label}: (ζ̄₊, ζ₊) not dual")
            });
            t.check(
                is_dual_pair(&bn.negated(), &zn.negated(), window).unwrap_or(false),
                || format!("{label}: (−ζ̄₋, −ζ₋) not dual"),
            );
            let (j_minus, j_plus) = z.j_sets();
            let span = window + j_minus.excluded.len() as i64 + j_plus.excluded.len() as i64 + 2;
            // S̄₊ = −S₋ and S̄₋ = −S₊, as ordered enumerations.
            let plus =
                enumerations_match(span, |r| z.zbar_at(j_plus.nth(r)), |r| -z.zeta_at(1 - r));
            let minus = enumerations_match(span, |r| z.zbar_at(j_minus.nth(r)), |r| -z.zeta_at(r));
            t.check(plus && minus, || format!("{label}: S̄± ≠ −S∓"));
        }
        _ => t.fail(format!("{label}: unexpected ζ shape")),
    }
}

/// Criterion 4: dual pairs, plain and for the ζ/ζ̄ sequences of sweep labels.
pub fn dual_pair_suite(cfg: &SweepConfig, exec: Execution) -> CriterionReport {
    let lams = partitions_up_to(cfg.dual_size);
    let plain = map(exec, &lams, |lam| {
        let mut t = Tally::default();
        let s1 = rho_shifted_seq(lam, Half::ZERO, false);
        let s2 = rho_shifted_seq(lam, Half::ONE, true);
        let w = certification_window(&s1, &s2);
        t.check(is_dual_pair(&s1, &s2, w).unwrap_or(false), || {
            format!("{lam}: (λᵢ−i), (λ′ᵢ−i+1) not dual")
        });
        // A shifted partner must fail.
        let off = rho_shifted_seq(lam, Half::from_int(2), true);
        let w_off = certification_window(&s1, &off);
        t.check(!is_dual_pair(&s1, &off, w_off).unwrap_or(true), || {
            format!("{lam}: shifted partner accepted")
        });
        t
    });
    let labels = all_sweep_labels(cfg.max_size, cfg.max_d);
    let zeta = map(exec, &labels, |label| {
        let mut t = Tally::default();
        if let Some(z) = t.outcome(zeta_data(label), || format!("{label}")) {
            zeta_identities(&z, &mut t);
        }
        t
    });
    let mut t = merge_all(plain);
    t.merge(merge_all(zeta));
    t.report(
        4,
        "dual-pair suite",
        format!(
            "{} plain partitions (|λ| ≤ {}), {} ζ labels",
            lams.len(),
            cfg.dual_size,
            labels.len()
        ),
    )
}

/// Truncation windows `(m, n)` swept for a family.
fn truncation_windows(family: Family) -> Vec<(u32, u32)> {
    match family {
        Family::A => (1..=4).flat_map(|m| (1..=4).map(move |n| (m, n))).collect(),
        _ => (1..=6).map(|n| (0, n)).collect(),
    }
}

/// Criterion 5: the truncation path equals the direct finite-subsystem path.
pub fn truncation_commutation(cfg: &SweepConfig, exec: Execution) -> CriterionReport {
    let max_size = cfg.max_size.min(4);
    let max_d = cfg.max_d.min(6);
    let max_k = cfg.max_k.min(3);
    let mut cases = Vec::new();
    for label in all_sweep_labels(max_size, max_d) {
        for (m, n) in truncation_windows(label.family) {
            if check_truncation_support(&label, m, n).is_ok() {
                cases.push((label.clone(), m, n));
            }
        }
    }
    let parts = map(exec, &cases, |(label, m, n)| {
        let mut t = Tally::default();
        let ctx = || format!("{label} at m={m}, n={n}");
        let Some(input) = t.outcome(enright_input(label, *m, *n, 0), ctx) else {
            return t;
        };
        t.check(input.regime == Regime::Integral, || {
            format!("{}: not integral", ctx())
        });
        for k in 0..=max_k {
            let Some(tr) = t.outcome(enright_truncation(&input, k), || format!("{} k={k}", ctx()))
            else {
                continue;
            };
            let Some(di) = t.outcome(enright_direct(&input, k), || format!("{} k={k}", ctx()))
            else {
                continue;
            };
            t.check(tr.same_weights(&di), || {
                format!("{} k={k}: truncation {tr} ≠ direct {di}", ctx())
            });
        }
        t
    });
    merge_all(parts).report(
        5,
        "truncation commutation",
        format!(
            "{} (label, m, n) cases, |λ| ≤ {max_size}, d ≤ {max_d}, k ≤ {max_k}",
            cases.len()
        ),
    )
}

/// Twenty labels with half-odd `d` just inside the continuous unitarizable ranges.
pub fn generic_labels() -> Vec<(WeightLabel, u32, u32)> {
    let part = |s: &str| s.parse::<Partition>().expect("literal partition");
    let single = |f: Family, lam: &str, doubled: i64| {
        WeightLabel::new(f, Lam::Single(part(lam)), Half::from_doubled(doubled))
            .expect("valid label")
    };
    let pair = |minus: &str, plus: &str, doubled: i64| {
        WeightLabel::new(
            Family::A,
            Lam::Pair(PartitionPair::new(part(minus), part(plus))),
            Half::from_doubled(doubled),
        )
        .expect("valid label")
    };
    // d = (bound) + 1/2 or + 3/2, bounds: d: n−1+λ′₂; c: see the gate; a: min(λ⁻′₁+n−1, λ⁺′₁+m−1).
    vec![
        (single(Family::D, "", 3), 0, 2),
        (single(Family::D, "1", 3), 0, 2),
        (single(Family::D, "2", 5), 0, 2),
        (single(Family::D, "", 5), 0, 3),
        (single(Family::D, "1,1", 7), 0, 3),
        (single(Family::D, "2,1", 7), 0, 3),
        (single(Family::D, "3", 9), 0, 3),
        (single(Family::C, "", 3), 0, 2),
        (single(Family::C, "", 7), 0, 2),
        (single(Family::C, "", 5), 0, 3),
        (single(Family::C, "1", 7), 0, 3),
        (single(Family::C, "2", 7), 0, 3),
        (single(Family::C, "3", 9), 0, 3),
        (single(Family::C, "1,1", 9), 0, 4),
        (single(Family::C, "2,1", 9), 0, 4),
        (pair("", "", 1), 1, 1),
        (pair("", "1", 3), 2, 2),
        (pair("1", "1", 5), 2, 2),
        (pair("1", "2", 5), 2, 3),
        (pair("1,1", "", 7), 3, 3),
    ]
}

/// Criterion 6: outside the integral set, higher homology vanishes and `H₀ = {L(Γ)}`.
pub fn generic_vanishing(cfg: &SweepConfig) -> CriterionReport {
    let mut t = Tally::default();
    let labels = generic_labels();
    for (label, m, n) in &labels {
        let ctx = || format!("{label} at m={m}, n={n}");
        let Some(input) = t.outcome(enright_input(label, *m, *n, 0), ctx) else {
            continue;
        };
        t.check(input.regime == Regime::Generic, || {
            format!("{}: not in the generic regime", ctx())
        });
        let Some(xi) = t.outcome(input.xi(), ctx) else {
            continue;
        };
        for k in 0..=cfg.max_k.max(4) {
            let Some(h) = t.outcome(
                h_enright_finite(label, *m, *n, k, 0, EnrightPath::Checked),
                || format!("{} k={k}", ctx()),
            ) else {
                continue;
            };
            let ok = if k == 0 {
                h.weights() == vec![&xi]
            } else {
                h.is_empty()
            };
            t.check(ok, || format!("{} k={k}: {h}", ctx()));
        }
    }
    t.report(
        6,
        "generic-regime vanishing",
        format!(
            "{} labels with half-odd d, both finite-rank paths",
            labels.len()
        ),
    )
}

/// The finite algebras of the Kostant baseline with `|W₀|`.
pub fn kostant_algebras() -> Vec<(&'static str, AlgebraTag, u64)> {
    let tag = |f, m, n| AlgebraTag::new(f, Side::G, Rank::Finite { m, n }).expect("valid tag");
    vec![
        ("gl(3)", tag(Family::A, 1, 2), 2),
        ("gl(4)", tag(Family::A, 2, 2), 4),
        ("sp(4)", tag(Family::C, 0, 2), 2),
        ("sp(6)", tag(Family::C, 0, 3), 6),
        ("so(6)", tag(Family::D, 0, 3), 6),
        ("so(8)", tag(Family::D, 0, 4), 24),
    ]
}

/// Dominant integral weights with entries in `[−bound, bound]`.
pub fn dominant_weights(tag: &AlgebraTag, bound: i64) -> Vec<Vec<i64>> {
    let (first, last) = tag.finite_range().expect("finite tag");
    let vars = (last - first + 1) as usize;
    let mut out = vec![Vec::new()];
    for _ in 0..vars {
        out = out
            .into_iter()
            .flat_map(|w: Vec<i64>| {
                (-bound..=bound).map(move |x| {
                    let mut w = w.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out.retain(|w| is_dominant(tag, w));
    out
}

fn kostant_cases(cfg: &SweepConfig) -> Vec<(&'static str, AlgebraTag, u64, Vec<i64>)> {
    kostant_algebras()
        .into_iter()
        .flat_map(|(name, tag, levi)| {
            dominant_weights(&tag, cfg.kostant_entry)
                .into_iter()
                .map(move |w| (name, tag, levi, w))
        })
        .collect()
}

/// Criterion 7: the Euler–Poincaré identity for Kostant's homology.
pub fn kostant_baseline(cfg: &SweepConfig, exec: Execution) -> CriterionReport {
    let cases = kostant_cases(cfg);
    let parts = map(exec, &cases, |(name, tag, levi, w)| {
        let mut t = Tally::default();
        let ctx = || format!("{name} λ={w:?}");
        let Some(degrees) = t.outcome(kostant_all_degrees(tag, w), ctx) else {
            return t;
        };
        let total: usize = degrees.iter().map(|h| h.summands.len()).sum();
        let order = weyl_group_order(tag).unwrap_or(0);
        t.check(total as u64 * levi == order, || {
            format!("{}: {total} summands, |W| = {order}", ctx())
        });
        let ok = euler_check(tag, w, &degrees);
        t.check(matches!(ok, Ok(true)), || {
            format!("{}: Euler identity {ok:?}", ctx())
        });
        t
    });
    merge_all(parts).report(
        7,
        "Kostant baseline",
        format!(
            "{} dominant weights with |entries| ≤ {}",
            cases.len(),
            cfg.kostant_entry
        ),
    )
}

/// Adds one to the first coordinate of the summand's weight.
fn corrupted(
    degrees: &[HomologyDecomposition],
    degree: usize,
    index: usize,
) -> Result<Vec<HomologyDecomposition>> {
    let mut out = degrees.to_vec();
    let eps = &mut out[degree].summands[index].weight.eps;
    let EpsCoeffs::Finite { coeffs, .. } = eps else {
        return Err(Error::Internal("finite summand expected".into()));
    };
    coeffs[0] += 1;
    Ok(out)
}

/// Criterion 8: corrupted summand lists fail the Euler check, and type d without the
/// evenness constraint has different coset counts.
pub fn negative_controls(cfg: &SweepConfig, exec: Execution) -> CriterionReport {
    let cases = kostant_cases(cfg);
    let parts = map(exec, &cases, |(name, tag, _, w)| {
        let mut t = Tally::default();
        let Some(degrees) = t.outcome(kostant_all_degrees(tag, w), || format!("{name} λ={w:?}"))
        else {
            return t;
        };
        let Some(target) = t.outcome(euler_target(tag, w), || format!("{name} λ={w:?}")) else {
            return t;
        };
        for (deg, h) in degrees.iter().enumerate() {
            for idx in 0..h.summands.len() {
                let ctx = || format!("{name} λ={w:?}, degree {deg} summand {idx}");
                let Some(bad) = t.outcome(corrupted(&degrees, deg, idx), ctx) else {
                    continue;
                };
                let lhs = euler_characteristic(tag, &bad);
                t.check(matches!(&lhs, Ok(l) if *l != target), || {
                    format!("{}: corrupted list still balances", ctx())
                });
            }
        }
        t
    });
    let mut t = merge_all(parts);
    let mut differs = Vec::new();
    for k in 0..=cfg.max_k.min(4) {
        let even = brute_force_w0(Family::D, k, true).len();
        let any = brute_force_w0(Family::D, k, false).len();
        if even != any {
            differs.push(format!("k={k}: {even} vs {any}"));
        }
    }
    t.check(!differs.is_empty(), || {
        "dropping evenness leaves every |W⁰_{d,k}| unchanged".into()
    });
    t.report(
        8,
        "negative controls",
        format!(
            "every Kostant summand corrupted once; without evenness {}",
            differs.join(", ")
        ),
    )
}

/// All criteria, in order.
pub fn run_all(cfg: &SweepConfig, exec: Execution) -> Vec<CriterionReport> {
    run_all_timed(cfg, exec)
        .into_iter()
        .map(|(r, _)| r)
        .collect()
}

/// All criteria with their wall-clock times.
pub fn run_all_timed(cfg: &SweepConfig, exec: Execution) -> Vec<(CriterionReport, Duration)> {
    let criteria: [&dyn Fn() -> CriterionReport; 8] = [
        &|| route_agreement(cfg, exec),
        &worked_example,
        &|| enumeration_counts(cfg),
        &|| dual_pair_suite(cfg, exec),
        &|| truncation_commutation(cfg, exec),
        &|| generic_vanishing(cfg),
        &|| kostant_baseline(cfg, exec),
        &|| negative_controls(cfg, exec),
    ];
    criteria
        .iter()
        .map(|run| {
            let start = Instant::now();
            let report = run();
            (report, start.elapsed())
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recurrences() {
        assert_eq!(
            partition_numbers(10),
            vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
        );
        assert_eq!(
            distinct_partition_numbers(10),
            vec![1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10]
        );
    }

    #[test]
    fn brute_force_small_counts() {
        assert_eq!(brute_force_w0(Family::A, 3, true).len(), 3);
        assert_eq!(brute_force_w0(Family::C, 3, true).len(), 2);
        assert_eq!(brute_force_w0(Family::D, 3, true).len(), 2);
        assert_eq!(brute_force_w0(Family::D, 0, false).len(), 2);
    }

    #[test]
    fn positivity_rule() {
        assert!(signed_root_positive(&[(1, 1), (2, -1)]));
        assert!(!signed_root_positive(&[(2, 1), (1, -1)]));
        assert!(signed_root_positive(&[(1, -2)]));
        assert!(signed_root_positive(&[(-1, 1), (2, -1)]));
        assert!(!signed_root_positive(&[(3, 1), (2, -1)]));
    }

    #[test]
    fn dominant_weight_lists() {
        let sp4 = AlgebraTag::new(Family::C, Side::G, Rank::Finite { m: 0, n: 2 }).unwrap();
        let ws = dominant_weights(&sp4, 1);
        assert_eq!(ws, vec![vec![-1, -1], vec![0, -1], vec![0, 0]]);
    }
}
