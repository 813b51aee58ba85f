use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::CubicThreefold;
use crate::algebra::{Field, PrimeReduction};
use crate::error::Result;
use crate::scheme::solve::rational_points;
use crate::scheme::{ideal_dimension, Mono, Poly, PolyIdeal};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict")]
pub enum SmoothnessVerdict {
    SmoothOverFp { p: u64 },
    /// The singular locus is nonempty; `witness` is an 𝔽ₚ-point of it when
    /// one was found on a random linear section.
    SingularWithWitness { p: u64, dimension: i64, witness: Option<Vec<u64>> },
    Unknown { reason: String },
}

impl SmoothnessVerdict {
    pub fn is_smooth(&self) -> bool {
        matches!(self, SmoothnessVerdict::SmoothOverFp { .. })
    }
}

const WITNESS_ATTEMPTS: u64 = 4;

/// Smoothness of the reduction mod p, decided by the dimension of the
/// ideal of partial derivatives.
pub fn is_smooth<K: PrimeReduction>(x: &CubicThreefold<K>, p: u64) -> Result<SmoothnessVerdict> {
    let xp = x.reduce_mod(p)?;
    let ideal = PolyIdeal::new(5, p, xp.gradient())?;
    let dimension = ideal_dimension(&ideal)?;
    if dimension < 0 {
        return Ok(SmoothnessVerdict::SmoothOverFp { p });
    }
    let ring = *ideal.ring();
    let k = xp.field().clone();
    let mut witness = None;
    for attempt in 0..WITNESS_ATTEMPTS {
        let mut rng = ChaCha8Rng::seed_from_u64(attempt);
        let mut random_form = |constant: u64| {
            let mut terms: Vec<(Mono, u64)> = (0..5).map(|i| (Mono::var(i), k.random_elem(&mut rng))).collect();
            terms.push((Mono::ONE, constant));
            Poly::from_terms(&ring, terms)
        };
        // cut down to finitely many points, then take the affine chart ℓ = 1
        let mut extra: Vec<Poly> = (0..dimension).map(|_| random_form(0)).collect();
        extra.push(random_form(p - 1));
        let section = ideal.sum(&extra);
        let pts = rational_points(&section, 1, &mut rng)?;
        if let Some(pt) = pts.into_iter().next() {
            witness = Some(pt);
            break;
        }
    }
    Ok(SmoothnessVerdict::SingularWithWitness { p, dimension, witness })
}

/// Smoothness checked modulo two primes; disagreement is reported as
/// Unknown.
pub fn is_smooth_two_primes<K: PrimeReduction>(x: &CubicThreefold<K>, p1: u64, p2: u64) -> Result<SmoothnessVerdict> {
    let a = is_smooth(x, p1)?;
    let b = is_smooth(x, p2)?;
    Ok(match (a.is_smooth(), b.is_smooth()) {
        (true, true) => a,
        (false, false) => a,
        _ => SmoothnessVerdict::Unknown { reason: format!("smoothness differs modulo {p1} and {p2}") },
    })
}
