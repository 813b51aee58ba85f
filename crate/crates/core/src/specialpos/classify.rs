use serde::Serialize;
use serde_json::{json, Value};

use super::{is_special_position_exact, is_special_position_sampler, r_stats, subspace_json, LineConfig, SamplerVerdict, DEFAULT_TRIALS};
use crate::algebra::PrimeField;
use crate::error::{Error, Result};
use crate::projlin::{common_transversals, quadric_through_skew_lines, LineOrbit, PluckerLine, ProjSubspace, QuadricThroughLines, TransversalResult};

type Space = ProjSubspace<PrimeField>;

/// Verdict of the configuration classifier with its construction data.
#[derive(Debug, Clone, PartialEq)]
pub enum ConfigClass {
    NotSpecial { held_out: Option<usize>, witness: Option<Space> },
    ConcurrentCoplanar { point: Space, plane: Space },
    CoplanarNoTriplePoint { plane: Space },
    QuadricRuling { quadric: QuadricThroughLines<PrimeField> },
    /// Lines `pairs[0]` meet at `p`, lines `pairs[1]` at `p_prime`, and the
    /// two planes they span meet along the line through p and p′.
    TwoPlanePencil { pairs: [[usize; 2]; 2], p: Space, p_prime: Space, planes: [Space; 2] },
    ConcurrentGeneralPosition { point: Space, hyperplane: Space },
    FiveConcurrent { point: Space },
    FiveCoplanar { plane: Space },
    FiveRuling { quadric: QuadricThroughLines<PrimeField> },
    FiveWithSecants { secants: Vec<LineOrbit<PrimeField>> },
    FiveGenericUniqueSecant { secant: PluckerLine<PrimeField> },
    UnclassifiedDegenerate { reason: String },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConfigClassJson {
    pub verdict: String,
    pub evidence: Value,
}

impl ConfigClass {
    pub fn name(&self) -> &'static str {
        match self {
            ConfigClass::NotSpecial { .. } => "NotSpecial",
            ConfigClass::ConcurrentCoplanar { .. } => "ConcurrentCoplanar",
            ConfigClass::CoplanarNoTriplePoint { .. } => "CoplanarNoTriplePoint",
            ConfigClass::QuadricRuling { .. } => "QuadricRuling",
            ConfigClass::TwoPlanePencil { .. } => "TwoPlanePencil",
            ConfigClass::ConcurrentGeneralPosition { .. } => "ConcurrentGeneralPosition",
            ConfigClass::FiveConcurrent { .. } => "FiveConcurrent",
            ConfigClass::FiveCoplanar { .. } => "FiveCoplanar",
            ConfigClass::FiveRuling { .. } => "FiveRuling",
            ConfigClass::FiveWithSecants { .. } => "FiveWithSecants",
            ConfigClass::FiveGenericUniqueSecant { .. } => "FiveGenericUniqueSecant",
            ConfigClass::UnclassifiedDegenerate { .. } => "UnclassifiedDegenerate",
        }
    }

    /// True for every recognized special configuration.
    pub fn is_special(&self) -> bool {
        !matches!(self, ConfigClass::NotSpecial { .. } | ConfigClass::UnclassifiedDegenerate { .. })
    }

    pub fn to_json(&self) -> ConfigClassJson {
        let sj = |s: &Space| serde_json::to_value(subspace_json(s)).expect("serializable");
        let quadric = |q: &QuadricThroughLines<PrimeField>| json!({"hyperplane": sj(&q.hyperplane), "quadric": q.quadric.to_string()});
        let evidence = match self {
            ConfigClass::NotSpecial { held_out, witness } => json!({"held_out": held_out, "witness": witness.as_ref().map(sj)}),
            ConfigClass::ConcurrentCoplanar { point, plane } => json!({"point": sj(point), "plane": sj(plane)}),
            ConfigClass::CoplanarNoTriplePoint { plane } | ConfigClass::FiveCoplanar { plane } => json!({"plane": sj(plane)}),
            ConfigClass::QuadricRuling { quadric: q } | ConfigClass::FiveRuling { quadric: q } => quadric(q),
            ConfigClass::TwoPlanePencil { pairs, p, p_prime, planes } => json!({
                "pairs": pairs,
                "p": sj(p),
                "p_prime": sj(p_prime),
                "planes": [sj(&planes[0]), sj(&planes[1])],
            }),
            ConfigClass::ConcurrentGeneralPosition { point, hyperplane } => json!({"point": sj(point), "hyperplane": sj(hyperplane)}),
            ConfigClass::FiveConcurrent { point } => json!({"point": sj(point)}),
            ConfigClass::FiveWithSecants { secants } => json!({
                "count": secants.iter().map(LineOrbit::ext_degree).sum::<usize>(),
                "secants": secants.iter().map(LineOrbit::to_json).collect::<Vec<_>>(),
            }),
            ConfigClass::FiveGenericUniqueSecant { secant } => json!({"secant": secant.to_json()}),
            ConfigClass::UnclassifiedDegenerate { reason } => json!({"reason": reason}),
        };
        ConfigClassJson { verdict: self.name().into(), evidence }
    }
}

fn not_special() -> ConfigClass {
    ConfigClass::NotSpecial { held_out: None, witness: None }
}

/// Classifies the configuration by its incidence data. A matched case is
/// confirmed by the exact Gröbner test; a case that the test refutes turns
/// into NotSpecial, and a special configuration matching no case is
/// reported as UnclassifiedDegenerate. NotSpecial verdicts carry a witness
/// plane from the sampler when one is found.
pub fn classify(cfg: &LineConfig) -> Result<ConfigClass> {
    let candidate = match cfg.len() {
        3 => three(cfg)?,
        4 => four(cfg)?,
        5 => five(cfg)?,
        d => return Err(Error::Config(format!("expected 3 to 5 lines, got {d}"))),
    };
    let exact = is_special_position_exact(cfg)?;
    if exact.special {
        return Ok(match candidate {
            ConfigClass::NotSpecial { .. } => ConfigClass::UnclassifiedDegenerate {
                reason: "special position holds but no known configuration matches".into(),
            },
            c => c,
        });
    }
    let witness = match is_special_position_sampler(cfg, DEFAULT_TRIALS, 0)? {
        SamplerVerdict::NotSpecial { held_out, witness } if Some(held_out) == exact.held_out => Some(witness),
        _ => None,
    };
    Ok(ConfigClass::NotSpecial { held_out: exact.held_out, witness })
}

fn three(cfg: &LineConfig) -> Result<ConfigClass> {
    if cfg.plucker_rank() == 2 {
        return Ok(ConfigClass::ConcurrentCoplanar { point: cfg.common_meet(&[0, 1, 2])?, plane: cfg.span(&[0, 1, 2])? });
    }
    Ok(not_special())
}

fn triples(d: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for a in 0..d {
        for b in a + 1..d {
            for c in b + 1..d {
                out.push([a, b, c]);
            }
        }
    }
    out
}

fn all_skew(cfg: &LineConfig) -> bool {
    (0..cfg.len()).all(|i| (i + 1..cfg.len()).all(|j| !cfg.meets(i, j)))
}

fn four(cfg: &LineConfig) -> Result<ConfigClass> {
    let all = [0, 1, 2, 3];
    match cfg.span_dim() {
        2 => {
            let point = cfg.common_meet(&all)?;
            if !point.is_empty() {
                return Ok(ConfigClass::ConcurrentCoplanar { point, plane: cfg.span(&all)? });
            }
            for t in triples(4) {
                if !cfg.common_meet(&t)?.is_empty() {
                    return Ok(not_special());
                }
            }
            Ok(ConfigClass::CoplanarNoTriplePoint { plane: cfg.span(&all)? })
        }
        3 if all_skew(cfg) => {
            let l = cfg.lines();
            let q = match quadric_through_skew_lines(&l[0], &l[1], &l[2]) {
                Ok(q) => q,
                Err(Error::DegeneratePencil(_)) | Err(Error::NotInCommonP3) => return Ok(not_special()),
                Err(e) => return Err(e),
            };
            if q.smooth && q.same_ruling(&l[3])? {
                return Ok(ConfigClass::QuadricRuling { quadric: q });
            }
            Ok(not_special())
        }
        3 => {
            let point = cfg.common_meet(&all)?;
            if !point.is_empty() {
                for t in triples(4) {
                    if cfg.span(&t)?.dim() == 2 {
                        return Ok(not_special());
                    }
                }
                return Ok(ConfigClass::ConcurrentGeneralPosition { point, hyperplane: cfg.span(&all)? });
            }
            for pairs in [[[0, 1], [2, 3]], [[0, 2], [1, 3]], [[0, 3], [1, 2]]] {
                if let Some(c) = two_plane_pencil(cfg, pairs)? {
                    return Ok(c);
                }
            }
            Ok(not_special())
        }
        _ => Ok(not_special()),
    }
}

fn two_plane_pencil(cfg: &LineConfig, pairs: [[usize; 2]; 2]) -> Result<Option<ConfigClass>> {
    let [[a, b], [c, d]] = pairs;
    if !cfg.meets(a, b) || !cfg.meets(c, d) {
        return Ok(None);
    }
    let p = cfg.common_meet(&[a, b])?;
    let p_prime = cfg.common_meet(&[c, d])?;
    if p == p_prime {
        return Ok(None);
    }
    let planes = [cfg.span(&[a, b])?, cfg.span(&[c, d])?];
    let axis = p.span(&p_prime)?;
    if planes[0].meet(&planes[1])? != axis {
        return Ok(None);
    }
    Ok(Some(ConfigClass::TwoPlanePencil { pairs, p, p_prime, planes }))
}

fn five(cfg: &LineConfig) -> Result<ConfigClass> {
    let all = [0, 1, 2, 3, 4];
    if !all_skew(cfg) {
        if !r_stats(cfg)?.r_holds {
            return Ok(ConfigClass::UnclassifiedDegenerate { reason: "property (R) fails".into() });
        }
        let point = cfg.common_meet(&all)?;
        if !point.is_empty() {
            return Ok(ConfigClass::FiveConcurrent { point });
        }
        if cfg.span_dim() == 2 {
            return Ok(ConfigClass::FiveCoplanar { plane: cfg.span(&all)? });
        }
        return Ok(not_special());
    }
    let lines = cfg.lines();
    if let Some(t) = triples(5).into_iter().find(|t| cfg.span(t).map(|s| s.dim() == 3).unwrap_or(false)) {
        if cfg.span_dim() != 3 {
            return Ok(not_special());
        }
        let q = quadric_through_skew_lines(&lines[t[0]], &lines[t[1]], &lines[t[2]])?;
        let rest: Vec<usize> = all.iter().copied().filter(|i| !t.contains(i)).collect();
        let on_q = rest.iter().map(|&i| q.contains_line(&lines[i])).collect::<Result<Vec<_>>>()?;
        if rest.iter().all(|&i| q.same_ruling(&lines[i]).unwrap_or(false)) {
            return Ok(ConfigClass::FiveRuling { quadric: q });
        }
        if on_q.iter().any(|&b| b) {
            return Ok(not_special());
        }
        if let TransversalResult::Finite { transversals, .. } = common_transversals(lines, 0)? {
            let distinct: usize = transversals.iter().map(LineOrbit::ext_degree).sum();
            if distinct == 1 || distinct == 2 {
                return Ok(ConfigClass::FiveWithSecants { secants: transversals });
            }
        }
        return Ok(not_special());
    }
    // all triples span P⁴
    if let TransversalResult::Finite { transversals, .. } = common_transversals(lines, 0)? {
        if let [t] = transversals.as_slice() {
            if let Some(l) = t.as_rational() {
                return Ok(ConfigClass::FiveGenericUniqueSecant { secant: l.clone() });
            }
        }
    }
    Ok(not_special())
}
