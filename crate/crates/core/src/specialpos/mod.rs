//! Special position of three to five lines in P⁴ with respect to 2-planes:
//! a classifier for the known configurations, a randomized plane sampler,
//! an exact Gröbner test, property (R) statistics and the Cayley–Bacharach
//! rank test on Plücker points.

mod classify;
mod exact;
pub mod fixtures;
mod sampler;

use serde::Serialize;

use crate::algebra::linalg;
use crate::algebra::{Field, PrimeField};
use crate::error::{Error, Result};
use crate::projlin::{lines_meet, PluckerLine, ProjSubspace, SubspaceJson};

pub use classify::{classify, ConfigClass, ConfigClassJson};
pub use exact::{is_special_position_exact, ExactVerdict};
pub use sampler::{is_special_position_sampler, SamplerJson, SamplerVerdict, DEFAULT_TRIALS};

/// Three to five distinct lines in P⁴ with their incidence data.
#[derive(Debug, Clone, PartialEq)]
pub struct LineConfig {
    field: PrimeField,
    lines: Vec<PluckerLine<PrimeField>>,
    meets: Vec<Vec<bool>>,
    pair_span: Vec<Vec<isize>>,
    span_dim: isize,
    plucker_rank: usize,
}

impl LineConfig {
    pub fn new(lines: Vec<PluckerLine<PrimeField>>) -> Result<LineConfig> {
        let d = lines.len();
        if !(3..=5).contains(&d) {
            return Err(Error::Config(format!("expected 3 to 5 lines, got {d}")));
        }
        if let Some(l) = lines.iter().find(|l| l.ambient() != 4) {
            return Err(Error::Dimension(format!("line in P{}, expected P4", l.ambient())));
        }
        let field = lines[0].field().clone();
        if lines.iter().any(|l| l.field() != &field) {
            return Err(Error::BackendMismatch(field.descriptor().to_string(), "another prime field".into()));
        }
        let mut meets = vec![vec![true; d]; d];
        let mut pair_span = vec![vec![1; d]; d];
        for i in 0..d {
            for j in i + 1..d {
                if lines[i] == lines[j] {
                    return Err(Error::Config(format!("lines {i} and {j} coincide")));
                }
                let m = lines_meet(&lines[i], &lines[j])?;
                meets[i][j] = m;
                meets[j][i] = m;
                let s = span_of(&lines[i..=i].iter().chain(&lines[j..=j]).cloned().collect::<Vec<_>>())?.dim();
                pair_span[i][j] = s;
                pair_span[j][i] = s;
            }
        }
        let span_dim = span_of(&lines)?.dim();
        let plucker: Vec<Vec<u64>> = lines.iter().map(|l| l.plucker().to_vec()).collect();
        let plucker_rank = linalg::rank(&field, &plucker);
        Ok(LineConfig { field, lines, meets, pair_span, span_dim, plucker_rank })
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn lines(&self) -> &[PluckerLine<PrimeField>] {
        &self.lines
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    pub fn meets(&self, i: usize, j: usize) -> bool {
        self.meets[i][j]
    }

    pub fn pair_span_dim(&self, i: usize, j: usize) -> isize {
        self.pair_span[i][j]
    }

    pub fn span_dim(&self) -> isize {
        self.span_dim
    }

    /// Rank of the Plücker vectors in the 10-dimensional Plücker space.
    pub fn plucker_rank(&self) -> usize {
        self.plucker_rank
    }

    /// Span of the lines with the given indices.
    pub fn span(&self, idx: &[usize]) -> Result<ProjSubspace<PrimeField>> {
        span_of(&idx.iter().map(|&i| self.lines[i].clone()).collect::<Vec<_>>())
    }

    /// Common point of the lines with the given indices (possibly empty).
    pub fn common_meet(&self, idx: &[usize]) -> Result<ProjSubspace<PrimeField>> {
        let mut m = self.lines[idx[0]].subspace();
        for &i in &idx[1..] {
            m = m.meet(&self.lines[i].subspace())?;
        }
        Ok(m)
    }

    /// The same configuration with the lines reordered.
    pub fn permuted(&self, perm: &[usize]) -> Result<LineConfig> {
        LineConfig::new(perm.iter().map(|&i| self.lines[i].clone()).collect())
    }
}

fn span_of(lines: &[PluckerLine<PrimeField>]) -> Result<ProjSubspace<PrimeField>> {
    let mut s = lines[0].subspace();
    for l in &lines[1..] {
        s = s.span(&l.subspace())?;
    }
    Ok(s)
}

pub fn subspace_json<K: Field>(s: &ProjSubspace<K>) -> SubspaceJson {
    let k = s.field();
    SubspaceJson { basis: s.basis().iter().map(|r| r.iter().map(|c| k.format_elem(c)).collect()).collect() }
}

/// n(ℓᵢ): how many other lines meet ℓᵢ; m(ℓᵢ): the largest k such that ℓᵢ
/// and k other lines lie in one 2-plane.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RStats {
    pub n: Vec<usize>,
    pub m: Vec<usize>,
    pub r_holds: bool,
}

pub fn r_stats(cfg: &LineConfig) -> Result<RStats> {
    let d = cfg.len();
    if d != 5 {
        return Err(Error::Config(format!("property (R) is defined for 5 lines, got {d}")));
    }
    let mut n = Vec::with_capacity(d);
    let mut m = Vec::with_capacity(d);
    for i in 0..d {
        let others: Vec<usize> = (0..d).filter(|&j| j != i && cfg.meets(i, j)).collect();
        n.push(others.len());
        let mut best = 0;
        for &j in &others {
            let plane = cfg.span(&[i, j])?;
            let count = (0..d).filter(|&t| t != i && plane.contains(&cfg.lines[t].subspace())).count();
            best = best.max(count);
        }
        m.push(best);
    }
    let r_holds = n.iter().all(|&x| x == n[0]) && m.iter().all(|&x| x == m[0]);
    Ok(RStats { n, m, r_holds })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CayleyBacharach {
    /// Rank of the Plücker vectors.
    pub rank: usize,
    /// Projective dimension of their span, rank − 1.
    pub span_dim: isize,
    /// Every point lies in the span of the others.
    pub holds: bool,
}

/// Span dimension of the Plücker points of the lines and whether each of
/// them lies in the span of the others.
pub fn cayley_bacharach_rank<K: Field>(lines: &[PluckerLine<K>]) -> Result<CayleyBacharach> {
    let d = lines.len();
    if !(3..=6).contains(&d) {
        return Err(Error::Config(format!("expected 3 to 6 points, got {d}")));
    }
    for i in 0..d {
        for j in i + 1..d {
            if lines[i] == lines[j] {
                return Err(Error::Config(format!("points {i} and {j} coincide")));
            }
        }
    }
    let k = lines[0].field();
    let vecs: Vec<Vec<K::Elem>> = lines.iter().map(|l| l.plucker().to_vec()).collect();
    let r = linalg::rank(k, &vecs);
    let holds = (0..d).all(|j| {
        let others: Vec<Vec<K::Elem>> = (0..d).filter(|&i| i != j).map(|i| vecs[i].clone()).collect();
        linalg::rank(k, &others) == r
    });
    Ok(CayleyBacharach { rank: r, span_dim: r as isize - 1, holds })
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    fn k() -> PrimeField {
        PrimeField::new(32003).unwrap()
    }

    #[test]
    fn config_caches() {
        let cfg = three_concurrent_coplanar(&k());
        assert_eq!(cfg.span_dim(), 2);
        assert_eq!(cfg.plucker_rank(), 2);
        assert!(cfg.meets(0, 2));
        assert_eq!(cfg.pair_span_dim(0, 1), 2);
    }

    #[test]
    fn rejects_repeated_lines_and_bad_sizes() {
        let l = line(&k(), &[1, 0, 0, 0, 0], &[0, 1, 0, 0, 0]);
        assert!(LineConfig::new(vec![l.clone(), l.clone(), line(&k(), &[0, 0, 1, 0, 0], &[0, 0, 0, 1, 0])]).is_err());
        assert!(LineConfig::new(vec![l]).is_err());
    }

    #[test]
    fn r_stats_examples() {
        let five = five_concurrent_coplanar(&k());
        assert_eq!(r_stats(&five).unwrap(), RStats { n: vec![4; 5], m: vec![4; 5], r_holds: true });
        let pent = pentagon(&k());
        assert_eq!(r_stats(&pent).unwrap(), RStats { n: vec![2; 5], m: vec![1; 5], r_holds: true });
        let skew = five_ruling(&k());
        assert_eq!(r_stats(&skew).unwrap(), RStats { n: vec![0; 5], m: vec![0; 5], r_holds: true });
        assert!(r_stats(&three_concurrent_coplanar(&k())).is_err());
    }

    #[test]
    fn cayley_bacharach_examples() {
        let k = k();
        let cop = three_concurrent_coplanar(&k);
        let cb = cayley_bacharach_rank(cop.lines()).unwrap();
        assert_eq!(cb, CayleyBacharach { rank: 2, span_dim: 1, holds: true });

        let conc = five_concurrent(&k);
        let cb = cayley_bacharach_rank(conc.lines()).unwrap();
        assert!(cb.rank <= 4);
        assert!(cb.holds);

        // three lines of a pencil plus a skew line
        let mut lines = cop.lines().to_vec();
        lines.push(line(&k, &[0, 0, 0, 1, 0], &[0, 0, 0, 0, 1]));
        let cb = cayley_bacharach_rank(&lines).unwrap();
        assert_eq!(cb, CayleyBacharach { rank: 3, span_dim: 2, holds: false });
    }
}
