//! Independent oracles: reflection-word dot action, brute-force coset enumeration,
//! and the Weyl dimension formula.

use ke_core::characters::{weyl_character, weyl_dimension};
use ke_core::partitions::Partition;
use ke_core::verify::{
    brute_force_w0, distinct_partition_numbers, partition_numbers, sweep_labels,
};
use ke_core::weights::dot_action_mu;
use ke_core::weights::{lambda_weight, rho, AlgebraTag, Lam, Rank, Side, WeightLabel};
use ke_core::weylgroup::{enumerate_w0, Family, WeylElement};
use ke_core::Half;
use num_rational::Rational64;

/// Simple-reflection word `s_{a₁} … s_{a_r}` with `w = s_{a_r} ∘ … ∘ s_{a₁}`.
///
/// Generators: `Swap(i)` exchanges positions `i, i+1`; `Flip` is the extra generator of
/// type c (`ε₁ ↦ −ε₁`) or d (`(ε₁, ε₂) ↦ (−ε₂, −ε₁)`).
#[derive(Clone, Copy, Debug)]
enum Gen {
    Swap(i64),
    Flip,
}

/// Sorts the images of `w` on `[first, last]` back to the identity with right
/// multiplications by generators, recording them.
fn reduced_word(w: &WeylElement, first: i64, last: i64) -> Vec<Gen> {
    let family = w.family();
    let mut images: Vec<i64> = (first..=last).map(|i| w.apply(i)).collect();
    let mut word = Vec::new();
    loop {
        if let Some(p) = (0..images.len() - 1).find(|&p| images[p] > images[p + 1]) {
            images.swap(p, p + 1);
            word.push(Gen::Swap(first + p as i64));
            continue;
        }
        if family.is_signed() && images[0] < 0 {
            if family == Family::C {
                images[0] = -images[0];
            } else {
                let (a, b) = (images[0], images[1]);
                images[0] = -b;
                images[1] = -a;
            }
            word.push(Gen::Flip);
            continue;
        }
        break;
    }
    word
}

/// `y − ⟨y + θϑ, α∨⟩ α` for the generator's simple root. The simple coroots crossing the
/// origin carry a central term: `E₀₀ − E₁₁ + K` (a), `−E₁ + K` (c), `−E₁ − E₂ + 2K` (d),
/// with `⟨ϑ, K⟩ = 1, 1, ½`.
fn reflect(family: Family, g: Gen, y: &mut [Rational64], first: i64, theta: Rational64) {
    let at = |i: i64| (i - first) as usize;
    let terms: Vec<(i64, i64)> = match (g, family) {
        (Gen::Swap(i), _) => vec![(i, 1), (i + 1, -1)],
        (Gen::Flip, Family::C) => vec![(1, -2)],
        (Gen::Flip, _) => vec![(1, -1), (2, -1)],
    };
    let norm: i64 = terms.iter().map(|(_, c)| c * c).sum();
    let inner: Rational64 = terms.iter().map(|&(i, c)| y[at(i)] * c).sum();
    let central = match (g, family) {
        (Gen::Swap(0), Family::A) | (Gen::Flip, Family::C) => theta,
        (Gen::Flip, Family::D) => theta * Rational64::new(1, 2) * 2,
        _ => Rational64::from_integer(0),
    };
    let coroot = inner * 2 / norm + central;
    for &(i, c) in &terms {
        y[at(i)] -= coroot * c;
    }
}

fn window(label: &WeightLabel, w: &WeylElement) -> (i64, i64) {
    let b = w.support_bound() + label.lam.size() as i64 + 3;
    if label.family == Family::A {
        (1 - b, b)
    } else {
        (1, b)
    }
}

/// `w⁻¹(Λ + ρ) − ρ` on the window, computed through the reflection word.
fn dot_by_reflections(label: &WeightLabel, w: &WeylElement) -> Vec<Rational64> {
    let (first, last) = window(label, w);
    let lam = lambda_weight(label).unwrap();
    let r = rho(&lam.tag);
    let mut y: Vec<Rational64> = (first..=last).map(|i| lam.eps.at(i) + r.at(i)).collect();
    // w = s_r ∘ … ∘ s_1, so w⁻¹ = s_1 ∘ … ∘ s_r: apply s_r first.
    for &g in reduced_word(w, first, last).iter().rev() {
        reflect(label.family, g, &mut y, first, lam.theta.to_rational());
    }
    (first..=last).zip(y).map(|(i, v)| v - r.at(i)).collect()
}

/// Coefficient of `εᵢ` in `Λ(μ, d)`: `μ′ᵢ` on `ℕ`, and `−(μ⁻)′_{1−i}` on `ℤ≤0` for type a.
fn lambda_coefficient(mu: &Lam, i: i64) -> Rational64 {
    let part =
        |p: &Partition, j: i64| Rational64::from_integer(p.transpose().part(j as usize) as i64);
    match mu {
        Lam::Single(p) => part(p, i),
        Lam::Pair(pp) if i <= 0 => -part(&pp.minus, 1 - i),
        Lam::Pair(pp) => part(&pp.plus, i),
    }
}

#[test]
fn dot_action_matches_reflection_words() {
    let mut checked = 0;
    for family in Family::ALL {
        for label in sweep_labels(family, 4, 5) {
            for k in 0..=4 {
                for w in enumerate_w0(family, k) {
                    let mu = dot_action_mu(&w, &label).unwrap();
                    let (first, _) = window(&label, &w);
                    let got = dot_by_reflections(&label, &w);
                    for (offset, v) in got.iter().enumerate() {
                        let i = first + offset as i64;
                        assert_eq!(*v, lambda_coefficient(&mu, i), "{label}, w={w}, index {i}");
                    }
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 1000);
}

#[test]
fn reflection_word_lengths_match() {
    for family in Family::ALL {
        for k in 0..=6 {
            for w in enumerate_w0(family, k) {
                let b = w.support_bound() + 1;
                let first = if family == Family::A { -b } else { 1 };
                // Bubble sorting with flips is reduced for these representatives.
                assert_eq!(reduced_word(&w, first, b).len(), k as usize, "{w}");
            }
        }
    }
}

#[test]
fn brute_force_counts_match_recurrences() {
    let p = partition_numbers(8);
    let q = distinct_partition_numbers(8);
    for k in 0..=8u32 {
        assert_eq!(
            brute_force_w0(Family::A, k, true).len() as u64,
            p[k as usize]
        );
        assert_eq!(
            brute_force_w0(Family::C, k, true).len() as u64,
            q[k as usize]
        );
        assert_eq!(
            brute_force_w0(Family::D, k, true).len() as u64,
            q[k as usize]
        );
    }
}

#[test]
fn brute_force_without_evenness_doubles_d() {
    let q = distinct_partition_numbers(6);
    for k in 0..=6u32 {
        assert_eq!(
            brute_force_w0(Family::D, k, false).len() as u64,
            2 * q[k as usize]
        );
    }
}

fn tag(f: Family, m: u32, n: u32) -> AlgebraTag {
    AlgebraTag::new(f, Side::G, Rank::Finite { m, n }).unwrap()
}

#[test]
fn character_degrees_match_dimension_formula() {
    let cases: [(Family, u32, u32, &[i64]); 10] = [
        (Family::A, 1, 1, &[1, 0]),
        (Family::A, 1, 1, &[2, 0]),
        (Family::A, 1, 2, &[2, 1, 0]),
        (Family::A, 2, 2, &[1, 0, 0, 0]),
        (Family::A, 2, 2, &[2, 1, 1, 0]),
        (Family::C, 0, 2, &[0, -1]),
        (Family::C, 0, 2, &[-1, -1]),
        (Family::C, 0, 3, &[0, 0, -1]),
        (Family::D, 0, 3, &[0, 0, -1]),
        (Family::D, 0, 4, &[0, 0, -1, -1]),
    ];
    let known = [2, 3, 8, 4, 15, 4, 5, 6, 6, 28];
    for ((f, m, n, w), dim) in cases.into_iter().zip(known) {
        let t = tag(f, m, n);
        let ch = weyl_character(&t, w).unwrap();
        assert_eq!(ch.coefficient_sum(), dim, "{f} {w:?}");
        assert_eq!(
            weyl_dimension(&t, w).unwrap(),
            Rational64::from_integer(dim),
            "{f} {w:?}"
        );
    }
}

#[test]
fn symmetric_square_of_gl2() {
    let ch = weyl_character(&tag(Family::A, 1, 1), &[2, 0]).unwrap();
    assert_eq!(ch.len(), 3);
    for exp in [[2, 0], [1, 1], [0, 2]] {
        assert_eq!(ch.coefficient(&exp), 1);
    }
}

#[test]
fn labels_outside_d_are_rejected_by_the_dot_action() {
    let label = WeightLabel::new(
        Family::C,
        Lam::parse(Family::C, "1,1").unwrap(),
        Half::from_int(1),
    )
    .unwrap();
    assert!(!label.in_d());
    assert!(dot_action_mu(&WeylElement::identity(Family::C), &label).is_err());
}
