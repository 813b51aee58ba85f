//! Named configurations of lines, one for each classifier case.

use super::LineConfig;
use crate::algebra::{Field, PrimeField};
use crate::projlin::PluckerLine;

pub fn line(k: &PrimeField, p: &[i64], q: &[i64]) -> PluckerLine<PrimeField> {
    let conv = |v: &[i64]| v.iter().map(|&c| k.from_i64(c)).collect::<Vec<_>>();
    PluckerLine::from_points(k.clone(), &conv(p), &conv(q)).expect("distinct points")
}

fn config(lines: Vec<PluckerLine<PrimeField>>) -> LineConfig {
    LineConfig::new(lines).expect("valid fixture")
}

fn e(i: usize) -> [i64; 5] {
    let mut v = [0; 5];
    v[i] = 1;
    v
}

/// ⟨e₀,e₁⟩, ⟨e₀,e₂⟩, ⟨e₀,e₁+e₂⟩.
pub fn three_concurrent_coplanar(k: &PrimeField) -> LineConfig {
    config(vec![line(k, &e(0), &e(1)), line(k, &e(0), &e(2)), line(k, &e(0), &[0, 1, 1, 0, 0])])
}

/// Four lines of the pencil through e₀ in ⟨e₀,e₁,e₂⟩.
pub fn four_concurrent_coplanar(k: &PrimeField) -> LineConfig {
    config(vec![
        line(k, &e(0), &e(1)),
        line(k, &e(0), &e(2)),
        line(k, &e(0), &[0, 1, 1, 0, 0]),
        line(k, &e(0), &[0, 1, 2, 0, 0]),
    ])
}

/// x₀ = 0, x₁ = 0, x₂ = 0 and x₀+x₁+x₂ = 0 in the plane x₃ = x₄ = 0.
pub fn four_coplanar_no_triple_point(k: &PrimeField) -> LineConfig {
    config(vec![
        line(k, &e(1), &e(2)),
        line(k, &e(0), &e(2)),
        line(k, &e(0), &e(1)),
        line(k, &[1, -1, 0, 0, 0], &[0, 1, -1, 0, 0]),
    ])
}

/// The line {(a·u, b·u, a·v, b·v, 0)} of the quadric x₀x₃ − x₁x₂ in x₄ = 0.
pub fn ruling_line(k: &PrimeField, a: i64, b: i64) -> PluckerLine<PrimeField> {
    line(k, &[a, b, 0, 0, 0], &[0, 0, a, b, 0])
}

/// Ruling lines at [1:0], [0:1], [1:1], [1:2].
pub fn four_ruling(k: &PrimeField) -> LineConfig {
    config(vec![ruling_line(k, 1, 0), ruling_line(k, 0, 1), ruling_line(k, 1, 1), ruling_line(k, 1, 2)])
}

/// ⟨e₀,e₂⟩, ⟨e₀,e₁+e₂⟩ through P = e₀ and ⟨e₁,e₃⟩, ⟨e₁,e₀+e₃⟩ through
/// P′ = e₁; the two planes meet along ⟨e₀,e₁⟩.
pub fn two_plane_pencil(k: &PrimeField) -> LineConfig {
    config(vec![
        line(k, &e(0), &e(2)),
        line(k, &e(0), &[0, 1, 1, 0, 0]),
        line(k, &e(1), &e(3)),
        line(k, &e(1), &[1, 0, 0, 1, 0]),
    ])
}

/// Lines through e₀ in the directions e₁, e₂, e₃, e₁+e₂+e₃.
pub fn four_concurrent_general(k: &PrimeField) -> LineConfig {
    config(vec![
        line(k, &e(0), &e(1)),
        line(k, &e(0), &e(2)),
        line(k, &e(0), &e(3)),
        line(k, &e(0), &[0, 1, 1, 1, 0]),
    ])
}

/// Lines through e₀ in the directions e₁, e₂, e₃, e₄, e₁+e₂+e₃+e₄.
pub fn five_concurrent(k: &PrimeField) -> LineConfig {
    config(vec![
        line(k, &e(0), &e(1)),
        line(k, &e(0), &e(2)),
        line(k, &e(0), &e(3)),
        line(k, &e(0), &e(4)),
        line(k, &e(0), &[0, 1, 1, 1, 1]),
    ])
}

/// Five lines of the pencil through e₀ in ⟨e₀,e₁,e₂⟩.
pub fn five_concurrent_coplanar(k: &PrimeField) -> LineConfig {
    config(vec![
        line(k, &e(0), &e(1)),
        line(k, &e(0), &e(2)),
        line(k, &e(0), &[0, 1, 1, 0, 0]),
        line(k, &e(0), &[0, 1, 2, 0, 0]),
        line(k, &e(0), &[0, 1, 3, 0, 0]),
    ])
}

/// Five lines in x₃ = x₄ = 0, no three through a point.
pub fn five_coplanar(k: &PrimeField) -> LineConfig {
    config(vec![
        line(k, &e(1), &e(2)),
        line(k, &e(0), &e(2)),
        line(k, &e(0), &e(1)),
        line(k, &[1, -1, 0, 0, 0], &[0, 1, -1, 0, 0]),
        line(k, &[2, -1, 0, 0, 0], &[0, 3, -2, 0, 0]),
    ])
}

/// Ruling lines at [1:0], [0:1], [1:1], [1:2], [1:3].
pub fn five_ruling(k: &PrimeField) -> LineConfig {
    config(vec![
        ruling_line(k, 1, 0),
        ruling_line(k, 0, 1),
        ruling_line(k, 1, 1),
        ruling_line(k, 1, 2),
        ruling_line(k, 1, 3),
    ])
}

/// Three ruling lines and two lines off the quadric, all meeting
/// ⟨e₀,e₁⟩ and ⟨e₂,e₃⟩.
pub fn five_with_two_secants(k: &PrimeField) -> LineConfig {
    config(vec![
        ruling_line(k, 1, 0),
        ruling_line(k, 0, 1),
        ruling_line(k, 1, 1),
        line(k, &[1, 2, 0, 0, 0], &[0, 0, 1, 5, 0]),
        line(k, &[1, 3, 0, 0, 0], &[0, 0, 1, 7, 0]),
    ])
}

/// The line ⟨s·e₀ + t·e₁, s²·e₂ + st·e₃ + t²·e₄⟩ of the cubic scroll with
/// directrix ⟨e₀,e₁⟩.
pub fn scroll_line(k: &PrimeField, s: i64, t: i64) -> PluckerLine<PrimeField> {
    line(k, &[s, t, 0, 0, 0], &[0, 0, s * s, s * t, t * t])
}

/// Scroll lines at [1:0], [0:1], [1:1], [1:2], [1:3].
pub fn five_scroll(k: &PrimeField) -> LineConfig {
    config(vec![
        scroll_line(k, 1, 0),
        scroll_line(k, 0, 1),
        scroll_line(k, 1, 1),
        scroll_line(k, 1, 2),
        scroll_line(k, 1, 3),
    ])
}

/// ⟨eᵢ, eᵢ₊₁⟩ for i mod 5: each line meets exactly its two neighbours.
pub fn pentagon(k: &PrimeField) -> LineConfig {
    config((0..5).map(|i| line(k, &e(i), &e((i + 1) % 5))).collect())
}

/// ⟨e₀,e₁⟩, ⟨e₂,e₃⟩, ⟨e₄, e₀+e₂⟩.
pub fn three_skew(k: &PrimeField) -> LineConfig {
    config(vec![line(k, &e(0), &e(1)), line(k, &e(2), &e(3)), line(k, &e(4), &[1, 0, 1, 0, 0])])
}

/// Every named fixture with the verdict name the classifier should give.
pub fn all(k: &PrimeField) -> Vec<(&'static str, LineConfig, &'static str)> {
    vec![
        ("three-concurrent-coplanar", three_concurrent_coplanar(k), "ConcurrentCoplanar"),
        ("three-skew", three_skew(k), "NotSpecial"),
        ("four-concurrent-coplanar", four_concurrent_coplanar(k), "ConcurrentCoplanar"),
        ("four-coplanar", four_coplanar_no_triple_point(k), "CoplanarNoTriplePoint"),
        ("four-ruling", four_ruling(k), "QuadricRuling"),
        ("two-plane-pencil", two_plane_pencil(k), "TwoPlanePencil"),
        ("four-concurrent-general", four_concurrent_general(k), "ConcurrentGeneralPosition"),
        ("five-concurrent", five_concurrent(k), "FiveConcurrent"),
        ("five-concurrent-coplanar", five_concurrent_coplanar(k), "FiveConcurrent"),
        ("five-coplanar", five_coplanar(k), "FiveCoplanar"),
        ("five-ruling", five_ruling(k), "FiveRuling"),
        ("five-two-secants", five_with_two_secants(k), "FiveWithSecants"),
        ("five-scroll", five_scroll(k), "FiveGenericUniqueSecant"),
        ("pentagon", pentagon(k), "NotSpecial"),
    ]
}
