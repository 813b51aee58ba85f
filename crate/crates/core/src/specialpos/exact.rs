use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::LineConfig;
use crate::algebra::linalg;
use crate::algebra::{Field, PrimeField};
use crate::cubic::random::random_invertible;
use crate::error::Result;
use crate::projlin::PluckerLine;
use crate::scheme::{Mono, MonoOrder, Poly, PolyIdeal, Ring};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactVerdict {
    pub special: bool,
    /// The first line some 2-plane misses while meeting all the others.
    pub held_out: Option<usize>,
}

const CHART_SEED: u64 = 0x5eed;

/// In the chart of 2-planes spanned by the rows of [I₃ | A]·G for a random
/// invertible G, the condition "meets ℓ" is det(Q − P·A) = 0 where the rows
/// of [P | Q] span ℓ·G⁻¹. Variables: a₀₀, a₀₁, …, a₂₁, then t.
fn incidence(ring: &Ring, k: &PrimeField, l: &PluckerLine<PrimeField>, ginv: &[Vec<u64>]) -> Poly {
    let rows: Vec<Vec<u64>> = l.points().iter().map(|p| linalg::mat_vec(k, &linalg::transpose::<PrimeField>(ginv), p)).collect();
    // m[r][c] = Q[r][c] − Σₖ P[r][k]·a[k][c]
    let entry = |r: usize, c: usize| {
        let mut terms = vec![(Mono::ONE, rows[r][3 + c])];
        for kk in 0..3 {
            terms.push((Mono::var(2 * kk + c), k.neg(&rows[r][kk])));
        }
        Poly::from_terms(ring, terms)
    };
    entry(0, 0).mul(ring, &entry(1, 1)).sub(ring, &entry(0, 1).mul(ring, &entry(1, 0)))
}

/// Exact test of special position: ℓᵢ fails iff 1 − t·Dᵢ together with the
/// incidence equations Dⱼ (j ≠ i) generates a proper ideal, i.e. some 2-plane
/// of the chart meets every ℓⱼ but misses ℓᵢ. The chart is random, so a
/// component of planes lying entirely outside it is missed with probability
/// O(1/p).
pub fn is_special_position_exact(cfg: &LineConfig) -> Result<ExactVerdict> {
    let k = cfg.field().clone();
    let mut rng = ChaCha8Rng::seed_from_u64(CHART_SEED);
    let g = random_invertible(&k, 5, &mut rng);
    let ginv = linalg::inverse(&k, &g).expect("invertible");
    let ring = Ring::new(7, k.p(), MonoOrder::Grevlex)?;
    let dets: Vec<Poly> = cfg.lines().iter().map(|l| incidence(&ring, &k, l, &ginv)).collect();
    for i in 0..dets.len() {
        let mut gens: Vec<Poly> = (0..dets.len()).filter(|&j| j != i).map(|j| dets[j].clone()).collect();
        let t_di = dets[i].mul(&ring, &Poly::var(6));
        gens.push(Poly::constant(1).sub(&ring, &t_di));
        if !PolyIdeal::from_polys(ring, gens).contains_one()? {
            return Ok(ExactVerdict { special: false, held_out: Some(i) });
        }
    }
    Ok(ExactVerdict { special: true, held_out: None })
}

#[cfg(test)]
mod tests {
    use super::super::fixtures;
    use super::*;
    use crate::projlin::{line_meets_plane, ProjSubspace};

    #[test]
    fn incidence_matches_the_determinant() {
        let k = PrimeField::new(101).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let g = random_invertible(&k, 5, &mut rng);
        let ginv = linalg::inverse(&k, &g).unwrap();
        let ring = Ring::new(7, 101, MonoOrder::Grevlex).unwrap();
        let l = fixtures::line(&k, &[1, 2, 3, 4, 5], &[0, 1, 0, 7, 1]);
        let d = incidence(&ring, &k, &l, &ginv);
        for _ in 0..20 {
            let a: Vec<u64> = (0..6).map(|_| k.random_elem(&mut rng)).collect();
            let rows: Vec<Vec<u64>> = (0..3)
                .map(|r| {
                    let mut v = vec![0; 5];
                    v[r] = 1;
                    v[3] = a[2 * r];
                    v[4] = a[2 * r + 1];
                    linalg::mat_vec(&k, &linalg::transpose::<PrimeField>(&g), &v)
                })
                .collect();
            let plane = ProjSubspace::new(k.clone(), 4, &rows).unwrap();
            let mut x = a.clone();
            x.push(0);
            assert_eq!(d.eval(&ring, &x) == 0, line_meets_plane(&l, &plane).unwrap());
        }
    }

    #[test]
    fn fixtures_agree_with_their_labels() {
        let k = PrimeField::new(32003).unwrap();
        for (name, cfg, verdict) in fixtures::all(&k) {
            let v = is_special_position_exact(&cfg).unwrap();
            assert_eq!(v.special, verdict != "NotSpecial", "{name}");
        }
    }
}
