use rand::seq::SliceRandom;
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{subspace_json, LineConfig};
use crate::algebra::linalg;
use crate::algebra::{Field, PrimeField};
use crate::error::{Error, Result};
use crate::projlin::{line_meets_plane, PluckerLine, ProjSubspace, SubspaceJson};

pub const DEFAULT_TRIALS: usize = 64;

/// Resampling allowance per trial for degenerate point triples.
const DEGENERACY_BUDGET: usize = 64;

#[derive(Debug, Clone, PartialEq)]
pub enum SamplerVerdict {
    /// A 2-plane meeting every line except `held_out`.
    NotSpecial { held_out: usize, witness: ProjSubspace<PrimeField> },
    /// Every sampled plane met the held-out line; `trials` per line.
    ProbablySpecial { trials: usize },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SamplerJson {
    pub trials: usize,
    pub held_out: Option<usize>,
    pub witness: Option<SubspaceJson>,
}

impl SamplerVerdict {
    pub fn is_special(&self) -> bool {
        matches!(self, SamplerVerdict::ProbablySpecial { .. })
    }

    pub fn to_json(&self, trials: usize) -> SamplerJson {
        match self {
            SamplerVerdict::NotSpecial { held_out, witness } => {
                SamplerJson { trials, held_out: Some(*held_out), witness: Some(subspace_json(witness)) }
            }
            SamplerVerdict::ProbablySpecial { trials } => SamplerJson { trials: *trials, held_out: None, witness: None },
        }
    }
}

fn random_point_on(k: &PrimeField, l: &PluckerLine<PrimeField>, rng: &mut dyn RngCore) -> Vec<u64> {
    let [p, q] = l.points();
    linalg::combine(k, &[k.random_elem(rng), k.random_elem(rng)], &[p.clone(), q.clone()])
}

/// The linear form c ↦ det(a, b, c, u, v): it vanishes iff ⟨a, b, c⟩ meets
/// the line ⟨u, v⟩.
fn incidence_form(k: &PrimeField, a: &[u64], b: &[u64], target: &PluckerLine<PrimeField>) -> Result<Vec<u64>> {
    let [u, v] = target.points();
    (0..5)
        .map(|i| {
            let mut e = vec![0; 5];
            e[i] = 1;
            linalg::det(k, &[a.to_vec(), b.to_vec(), e, u.clone(), v.clone()])
        })
        .collect()
}

/// A random 2-plane meeting every line of `lines` (two to four of them):
/// a and b on the first two lines, c random subject to the linear
/// incidence conditions of the rest.
fn sample_plane(k: &PrimeField, lines: &[&PluckerLine<PrimeField>], rng: &mut dyn RngCore) -> Result<Option<ProjSubspace<PrimeField>>> {
    if !(2..=4).contains(&lines.len()) {
        return Err(Error::Config(format!("cannot sample planes through {} lines", lines.len())));
    }
    let a = random_point_on(k, lines[0], rng);
    let b = random_point_on(k, lines[1], rng);
    let conditions = lines[2..].iter().map(|l| incidence_form(k, &a, &b, l)).collect::<Result<Vec<_>>>()?;
    let space = if conditions.is_empty() { linalg::identity(k, 5) } else { linalg::nullspace(k, &conditions, 5) };
    let coeffs: Vec<u64> = space.iter().map(|_| k.random_elem(rng)).collect();
    let c = linalg::combine(k, &coeffs, &space);
    let plane = ProjSubspace::new(k.clone(), 4, &[a, b, c])?;
    Ok((plane.dim() == 2).then_some(plane))
}

/// Randomized test of special position: for each held-out line, random
/// 2-planes meeting the other lines are checked against it. A plane that
/// misses it is a definitive witness; otherwise the configuration is
/// probably special.
pub fn is_special_position_sampler(cfg: &LineConfig, trials: usize, seed: u64) -> Result<SamplerVerdict> {
    if trials == 0 {
        return Err(Error::Config("at least one trial is needed".into()));
    }
    let k = cfg.field();
    if k.p() < 101 {
        return Err(Error::InvalidField(format!("the sampler needs p >= 101, got {}", k.p())));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let d = cfg.len();
    for j in 0..d {
        let mut others: Vec<&PluckerLine<PrimeField>> = (0..d).filter(|&i| i != j).map(|i| &cfg.lines()[i]).collect();
        for _ in 0..trials {
            let mut plane = None;
            for _ in 0..DEGENERACY_BUDGET {
                others.shuffle(&mut rng);
                if let Some(p) = sample_plane(k, &others, &mut rng)? {
                    plane = Some(p);
                    break;
                }
            }
            let plane = plane.ok_or_else(|| Error::SamplingExhausted("every sampled point triple was collinear".into()))?;
            debug_assert!(others.iter().all(|l| line_meets_plane(l, &plane).unwrap_or(false)));
            if !line_meets_plane(&cfg.lines()[j], &plane)? {
                return Ok(SamplerVerdict::NotSpecial { held_out: j, witness: plane });
            }
        }
    }
    Ok(SamplerVerdict::ProbablySpecial { trials })
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;

    fn k() -> PrimeField {
        PrimeField::new(32003).unwrap()
    }

    #[test]
    fn coplanar_pencil_is_probably_special() {
        let v = is_special_position_sampler(&three_concurrent_coplanar(&k()), 64, 0).unwrap();
        assert_eq!(v, SamplerVerdict::ProbablySpecial { trials: 64 });
    }

    #[test]
    fn skew_lines_have_a_witness() {
        let cfg = three_skew(&k());
        match is_special_position_sampler(&cfg, 64, 0).unwrap() {
            SamplerVerdict::NotSpecial { held_out, witness } => {
                for (i, l) in cfg.lines().iter().enumerate() {
                    assert_eq!(line_meets_plane(l, &witness).unwrap(), i != held_out);
                }
            }
            v => panic!("unexpected {v:?}"),
        }
    }

    #[test]
    fn ruling_lines_are_probably_special() {
        assert!(is_special_position_sampler(&four_ruling(&k()), 64, 1).unwrap().is_special());
    }

    #[test]
    fn small_fields_are_rejected() {
        let cfg = three_skew(&PrimeField::new(31).unwrap());
        assert!(is_special_position_sampler(&cfg, 8, 0).is_err());
        assert!(is_special_position_sampler(&three_skew(&k()), 0, 0).is_err());
    }
}
