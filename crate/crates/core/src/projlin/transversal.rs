use super::plucker::{lines_meet, PluckerLine};
use super::subspace::ProjSubspace;
use crate::algebra::linalg;
use super::orbit::{lift_line, LineOrbit};
use crate::algebra::{BinaryForm, ExtField, Field, FiniteField};
use crate::error::{Error, Result};

/// Why a set of lines has infinitely many common transversals.
#[derive(Debug, Clone, PartialEq)]
pub enum InfiniteFamily<K: Field> {
    /// All lines pass through this point.
    Concurrent(ProjSubspace<K>),
    /// All lines lie in this plane.
    Coplanar(ProjSubspace<K>),
    /// Every point of the first line lies on a transversal (e.g. a ruling).
    OneParameter,
    /// Some point of the first line is joined by a whole pencil of
    /// transversals.
    Pencil,
}

#[derive(Debug, Clone, PartialEq)]
pub enum TransversalResult<K: FiniteField> {
    Finite {
        /// Number of transversals over the algebraic closure, counted with
        /// multiplicity.
        count: usize,
        transversals: Vec<LineOrbit<K>>,
    },
    Infinite(InfiniteFamily<K>),
}

impl<K: FiniteField> TransversalResult<K> {
    pub fn count(&self) -> Option<usize> {
        match self {
            TransversalResult::Finite { count, .. } => Some(*count),
            TransversalResult::Infinite(_) => None,
        }
    }
}

/// Data shared by the exact count and the explicit construction: the skew
/// pair (ℓa, ℓb), the linear-in-s matrix N(s) whose kernel gives the point
/// on ℓb, and G(s), the gcd of the 2×2 minors of N(s).
struct Setup<K: Field> {
    a: usize,
    b: usize,
    rows: Vec<[BinaryForm<K>; 2]>,
    g: BinaryForm<K>,
}

enum Prepared<K: Field> {
    Done(InfiniteFamily<K>),
    Setup(Setup<K>),
}

fn validate<K: Field>(lines: &[PluckerLine<K>]) -> Result<()> {
    if lines.len() < 3 {
        return Err(Error::Config(format!("need at least 3 lines, got {}", lines.len())));
    }
    if lines.len() > 5 {
        return Err(Error::Config(format!("at most 5 lines supported, got {}", lines.len())));
    }
    let n = lines[0].ambient();
    if lines.iter().any(|l| l.ambient() != n) {
        return Err(Error::Dimension("lines in different ambient spaces".into()));
    }
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            if lines[i] == lines[j] {
                return Err(Error::Config(format!("lines {i} and {j} coincide")));
            }
        }
    }
    Ok(())
}

/// Common point or common plane of pairwise meeting lines.
fn pairwise_meeting_family<K: Field>(lines: &[PluckerLine<K>]) -> Result<InfiniteFamily<K>> {
    let mut common = lines[0].subspace();
    for l in &lines[1..] {
        common = common.meet(&l.subspace())?;
    }
    if !common.is_empty() {
        return Ok(InfiniteFamily::Concurrent(common));
    }
    let mut span = lines[0].subspace();
    for l in &lines[1..] {
        span = span.span(&l.subspace())?;
    }
    debug_assert_eq!(span.dim(), 2);
    Ok(InfiniteFamily::Coplanar(span))
}

fn prepare<K: Field>(lines: &[PluckerLine<K>]) -> Result<Prepared<K>> {
    validate(lines)?;
    let k = lines[0].field().clone();
    let n = lines[0].ambient();
    let mut skew = None;
    'search: for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            if !lines_meet(&lines[i], &lines[j])? {
                skew = Some((i, j));
                break 'search;
            }
        }
    }
    let Some((a, b)) = skew else {
        return Ok(Prepared::Done(pairwise_meeting_family(lines)?));
    };
    let la = lines[a].points();
    let lb = lines[b].points();
    let mut rows: Vec<[BinaryForm<K>; 2]> = Vec::new();
    for (idx, l) in lines.iter().enumerate() {
        if idx == a || idx == b {
            continue;
        }
        let [pc, qc] = l.points();
        // 4×4 minors of [s·la + ..., t·lb + ..., pc, qc] over column subsets
        for skip in 0..=n {
            let cols: Vec<usize> = (0..=n).filter(|&c| n == 3 || c != skip).collect();
            let minor = |u: &[K::Elem], w: &[K::Elem]| -> Result<K::Elem> {
                let m: Vec<Vec<K::Elem>> = [u, w, pc.as_slice(), qc.as_slice()]
                    .iter()
                    .map(|r| cols.iter().map(|&c| r[c].clone()).collect())
                    .collect();
                linalg::det(&k, &m)
            };
            let mut entries = Vec::with_capacity(2);
            for w in lb.iter() {
                let c0 = minor(&la[0], w)?;
                let c1 = minor(&la[1], w)?;
                entries.push(BinaryForm::linear(k.clone(), c0, c1));
            }
            let row = [entries[0].clone(), entries[1].clone()];
            if !(row[0].is_zero() && row[1].is_zero()) {
                rows.push(row);
            }
            if n == 3 {
                break;
            }
        }
    }
    let mut g = BinaryForm::zero(k.clone(), 2);
    for i in 0..rows.len() {
        for j in i + 1..rows.len() {
            let m = rows[i][0].mul(&rows[j][1]).add(&rows[j][0].mul(&rows[i][1]).scale(&k.neg(&k.one())))?;
            g = g.gcd(&m);
        }
    }
    if g.is_zero() {
        return Ok(Prepared::Done(InfiniteFamily::OneParameter));
    }
    // a root s₀ where N(s₀) vanishes entirely yields a pencil
    let mut e = g.clone();
    for r in &rows {
        e = e.gcd(&r[0]).gcd(&r[1]);
    }
    if e.degree() > 0 {
        return Ok(Prepared::Done(InfiniteFamily::Pencil));
    }
    Ok(Prepared::Setup(Setup { a, b, rows, g }))
}

/// Number of common transversals over the algebraic closure, counted with
/// multiplicity, or the reason there are infinitely many. Works over any
/// exact field.
pub fn transversal_count<K: Field>(lines: &[PluckerLine<K>]) -> Result<std::result::Result<usize, InfiniteFamily<K>>> {
    if !lines.first().is_some_and(|l| l.field().is_exact()) && !lines.is_empty() {
        return Err(Error::InexactBackend);
    }
    Ok(match prepare(lines)? {
        Prepared::Done(fam) => Err(fam),
        Prepared::Setup(s) => Ok(s.g.degree()),
    })
}

/// All lines meeting every input line. Transversals over proper
/// extensions are returned as one representative per Galois orbit.
pub fn common_transversals<K: FiniteField>(lines: &[PluckerLine<K>], seed: u64) -> Result<TransversalResult<K>> {
    let s = match prepare(lines)? {
        Prepared::Done(fam) => return Ok(TransversalResult::Infinite(fam)),
        Prepared::Setup(s) => s,
    };
    let k = lines[0].field().clone();
    let mut out = Vec::new();
    for (h, mult) in s.g.factor(seed)? {
        let deg = h.degree();
        if deg == 1 {
            // h = c0·s + c1·t vanishes at [s:t] = [−c1 : c0]
            let s0 = k.neg(&h.coeffs()[1]);
            let s1 = h.coeffs()[0].clone();
            let line = solve_transversal(&k, lines, &s, &s0, &s1)?;
            out.push(LineOrbit::rational(mult, line));
        } else {
            let ext = ExtField::new(k.clone(), h.dehomogenize())?;
            let lifted = lines.iter().map(|l| lift_line(&ext, l)).collect::<Result<Vec<_>>>()?;
            let lift_form = |f: &BinaryForm<K>| {
                BinaryForm::new(ext.clone(), f.coeffs().iter().map(|c| ext.embed(c)).collect())
            };
            let setup = Setup {
                a: s.a,
                b: s.b,
                rows: s.rows.iter().map(|[x, y]| [lift_form(x), lift_form(y)]).collect(),
                g: lift_form(&s.g),
            };
            let line = solve_transversal(&ext, &lifted, &setup, &ext.generator(), &ext.one())?;
            out.push(LineOrbit::from_extension(mult, line)?);
        }
    }
    Ok(TransversalResult::Finite { count: s.g.degree(), transversals: out })
}

fn solve_transversal<K: Field>(
    k: &K,
    lines: &[PluckerLine<K>],
    s: &Setup<K>,
    s0: &K::Elem,
    s1: &K::Elem,
) -> Result<PluckerLine<K>> {
    let p = lines[s.a].point_at(s0, s1);
    let row = s
        .rows
        .iter()
        .map(|[x, y]| (x.eval(s0, s1), y.eval(s0, s1)))
        .find(|(x, y)| !(k.is_zero(x) && k.is_zero(y)))
        .expect("N(s0) is nonzero at roots of G");
    let q = lines[s.b].point_at(&k.neg(&row.1), &row.0);
    PluckerLine::from_points(k.clone(), &p, &q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::PrimeField;

    fn k() -> PrimeField {
        PrimeField::new(32003).unwrap()
    }

    fn line(p: &[u64], q: &[u64]) -> PluckerLine<PrimeField> {
        PluckerLine::from_points(k(), p, q).unwrap()
    }

    #[test]
    fn three_skew_lines_in_p3_have_a_ruling() {
        let ls = vec![line(&[1, 0, 0, 0], &[0, 0, 1, 0]), line(&[0, 1, 0, 0], &[0, 0, 0, 1]), line(&[1, 1, 0, 0], &[0, 0, 1, 1])];
        assert_eq!(common_transversals(&ls, 0).unwrap(), TransversalResult::Infinite(InfiniteFamily::OneParameter));
    }

    #[test]
    fn same_ruling_is_infinite() {
        let r = |a: u64, b: u64| line(&[a, b, 0, 0], &[0, 0, a, b]);
        let ls = vec![r(1, 0), r(0, 1), r(1, 1), r(1, 2)];
        assert!(matches!(common_transversals(&ls, 0).unwrap(), TransversalResult::Infinite(_)));
    }

    #[test]
    fn four_lines_have_two_transversals() {
        let r = |a: u64, b: u64| line(&[a, b, 0, 0], &[0, 0, a, b]);
        let ls = vec![r(1, 0), r(0, 1), r(1, 1), line(&[1, 0, 0, 5], &[0, 1, 7, 0])];
        let res = common_transversals(&ls, 1).unwrap();
        assert_eq!(res.count(), Some(2));
        if let TransversalResult::Finite { transversals, .. } = &res {
            for t in transversals {
                for l in &ls {
                    assert!(t.meets(l).unwrap());
                }
            }
        }
    }

    #[test]
    fn concurrent_lines() {
        let ls = vec![
            line(&[1, 0, 0, 0, 0], &[0, 1, 0, 0, 0]),
            line(&[1, 0, 0, 0, 0], &[0, 0, 1, 0, 0]),
            line(&[1, 0, 0, 0, 0], &[0, 0, 0, 1, 0]),
        ];
        assert!(matches!(
            common_transversals(&ls, 0).unwrap(),
            TransversalResult::Infinite(InfiniteFamily::Concurrent(_))
        ));
        assert!(common_transversals(&ls[..2], 0).is_err());
    }
}
