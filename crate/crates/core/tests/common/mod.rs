//! Property checks shared by the proptest suites and the acceptance run.
//! Each check builds its random instance from a seed.

#![allow(dead_code)]

use cubica::algebra::{Field, MultiPoly, PrimeField, RationalField};
use cubica::cubic::random::{random_form, random_invertible};
use cubica::cubic::CubicThreefold;
use cubica::projlin::{plucker_relations, PluckerLine};
use cubica::scheme::{groebner, ideal_degree, ideal_dimension, PolyIdeal};
use cubica::specialpos::{fixtures, r_stats, LineConfig};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Check = Result<(), String>;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Debug>(e: E) -> String {
    format!("{e:?}")
}

/// A sparse random polynomial with a few terms of degree at most `d`.
fn sparse_poly(k: &PrimeField, n: usize, d: u32, terms: usize, rng: &mut ChaCha8Rng) -> MultiPoly<PrimeField> {
    let mut f = MultiPoly::zero(k.clone(), n);
    for _ in 0..terms {
        let mut e = vec![0u32; n];
        for _ in 0..rng.gen_range(0..=d) {
            e[rng.gen_range(0..n)] += 1;
        }
        let m = MultiPoly::from_terms(k.clone(), n, [(e, k.random_nonzero(rng))]).expect("valid term");
        f = f.checked_add(&m).expect("same ring");
    }
    f
}

/// The reduced basis of an ideal is its own reduced basis, and adding it to
/// the generators does not change it.
pub fn gb_idempotent(seed: u64) -> Check {
    let mut r = rng(seed);
    let k = PrimeField::new(101).unwrap();
    let n = r.gen_range(2..=4);
    let gens: Vec<_> = (0..r.gen_range(2..=4)).map(|_| sparse_poly(&k, n, 3, 4, &mut r)).collect();
    let gb = groebner(&PolyIdeal::new(n, 101, &gens).map_err(err)?).map_err(err)?;
    let again = groebner(&PolyIdeal::new(n, 101, &gb).map_err(err)?).map_err(err)?;
    ensure(gb == again, || format!("GB of GB differs for {gens:?}"))?;
    let mut both = gens.clone();
    both.extend(gb.iter().cloned());
    let joint = groebner(&PolyIdeal::new(n, 101, &both).map_err(err)?).map_err(err)?;
    ensure(gb == joint, || format!("generators not in their own GB for {gens:?}"))
}

/// A homogeneous ideal in five variables that is not a complete
/// intersection: (q·l₁, q·l₂, c) plus a monomial.
fn mixed_ideal(k: &PrimeField, r: &mut ChaCha8Rng) -> Vec<MultiPoly<PrimeField>> {
    let q = random_form(k, 5, 2, r);
    let l1 = random_form(k, 5, 1, r);
    let l2 = random_form(k, 5, 1, r);
    let c = random_form(k, 5, 3, r);
    let mut gens = vec![q.checked_mul(&l1).unwrap(), q.checked_mul(&l2).unwrap(), c];
    if r.gen_bool(0.5) {
        let i = r.gen_range(0..5);
        let j = r.gen_range(0..5);
        let mono = MultiPoly::var(k.clone(), 5, i).checked_mul(&MultiPoly::var(k.clone(), 5, j)).unwrap();
        gens.push(mono.checked_mul(&MultiPoly::var(k.clone(), 5, j)).unwrap().checked_mul(&MultiPoly::var(k.clone(), 5, i)).unwrap());
    }
    gens
}

fn dim_deg(ideal: &PolyIdeal) -> Result<(i64, Option<u64>), String> {
    let dim = ideal_dimension(ideal).map_err(err)?;
    let deg = if dim >= 0 { Some(ideal_degree(ideal).map_err(err)?) } else { None };
    Ok((dim, deg))
}

/// Projective dimension and degree do not change under three random
/// invertible linear changes of coordinates.
pub fn hilbert_invariant(seed: u64) -> Check {
    let mut r = rng(seed);
    let k = PrimeField::new(32003).unwrap();
    let gens = mixed_ideal(&k, &mut r);
    let ideal = PolyIdeal::new(5, 32003, &gens).map_err(err)?;
    let base = dim_deg(&ideal)?;
    for _ in 0..3 {
        let a = random_invertible(&k, 5, &mut r);
        let moved = dim_deg(&ideal.linear_change(&a))?;
        ensure(moved == base, || format!("{base:?} became {moved:?}"))?;
    }
    Ok(())
}

/// Random forms of degrees d₁..d_c cut a scheme of codimension c and
/// degree ∏dᵢ.
pub fn complete_intersection(seed: u64) -> Check {
    let mut r = rng(seed);
    let k = PrimeField::new(32003).unwrap();
    let c = r.gen_range(1..=3);
    let degs: Vec<u32> = (0..c).map(|_| r.gen_range(1..=3)).collect();
    let gens: Vec<_> = degs.iter().map(|&d| random_form(&k, 5, d, &mut r)).collect();
    let ideal = PolyIdeal::new(5, 32003, &gens).map_err(err)?;
    let got = dim_deg(&ideal)?;
    let want = (4 - c as i64, Some(degs.iter().map(|&d| d as u64).product()));
    ensure(got == want, || format!("degrees {degs:?}: expected {want:?}, got {got:?}"))
}

fn euler_for<K: Field>(x: &CubicThreefold<K>) -> Check {
    let k = x.field();
    let var = |i| MultiPoly::var(k.clone(), 5, i);
    let mut lhs = MultiPoly::zero(k.clone(), 5);
    for (i, g) in x.gradient().iter().enumerate() {
        lhs = lhs.checked_add(&var(i).checked_mul(g).map_err(err)?).map_err(err)?;
    }
    ensure(lhs == x.f().scale(&k.from_i64(3)), || "Σ xᵢ∂ᵢF ≠ 3F".into())?;
    for (i, row) in x.hessian_matrix().iter().enumerate() {
        let mut s = MultiPoly::zero(k.clone(), 5);
        for (j, h) in row.iter().enumerate() {
            s = s.checked_add(&var(j).checked_mul(h).map_err(err)?).map_err(err)?;
        }
        ensure(s == x.gradient()[i].scale(&k.from_i64(2)), || format!("Σ xⱼ∂ᵢ∂ⱼF ≠ 2∂ᵢF for i = {i}"))?;
    }
    Ok(())
}

/// Euler's relation for a random cubic over 𝔽ₚ and over ℚ, and for the rows
/// of its Hessian matrix.
pub fn euler_relation(seed: u64) -> Check {
    let mut r = rng(seed);
    let k = PrimeField::new(32003).unwrap();
    euler_for(&CubicThreefold::new(random_form(&k, 5, 3, &mut r)).map_err(err)?)?;
    let small = random_form(&k, 5, 3, &mut r).map_field(RationalField, |c| RationalField.from_i64(*c as i64 % 7 - 3));
    if !small.is_zero() {
        euler_for(&CubicThreefold::new(small).map_err(err)?)?;
    }
    Ok(())
}

/// Plücker coordinates of a random line satisfy the relations and
/// determine the line; a random vector is a line iff the relations hold.
pub fn plucker_conformance(seed: u64) -> Check {
    let mut r = rng(seed);
    let k = PrimeField::new(101).unwrap();
    for n in [3usize, 4] {
        let p: Vec<u64> = (0..=n).map(|_| k.random_elem(&mut r)).collect();
        let q: Vec<u64> = (0..=n).map(|_| k.random_elem(&mut r)).collect();
        let Ok(l) = PluckerLine::from_points(k.clone(), &p, &q) else { continue };
        ensure(l.relations_hold(), || "relations fail on a line".into())?;
        ensure(plucker_relations(&k, l.plucker(), n).iter().all(|c| *c == 0), || "nonzero relation".into())?;
        let back = PluckerLine::from_plucker(k.clone(), l.plucker()).map_err(err)?;
        ensure(back == l, || "round trip changed the line".into())?;
        ensure(l.contains_point(&p) && l.contains_point(&q), || "line lost a point".into())?;
        let v: Vec<u64> = (0..l.plucker().len()).map(|_| k.random_elem(&mut r)).collect();
        let holds = plucker_relations(&k, &v, n).iter().all(|c| *c == 0) && v.iter().any(|c| *c != 0);
        ensure(PluckerLine::from_plucker(k.clone(), &v).is_ok() == holds, || format!("{v:?} misjudged"))?;
    }
    Ok(())
}

/// Relabelling five lines permutes their (R) statistics.
pub fn r_stats_permutation(seed: u64) -> Check {
    let mut r = rng(seed);
    let k = PrimeField::new(32003).unwrap();
    let five: Vec<LineConfig> = fixtures::all(&k).into_iter().map(|(_, c, _)| c).filter(|c| c.len() == 5).collect();
    let cfg = five.choose(&mut r).expect("five-line fixtures");
    let mut perm: Vec<usize> = (0..5).collect();
    perm.shuffle(&mut r);
    let a = r_stats(cfg).map_err(err)?;
    let b = r_stats(&cfg.permuted(&perm).map_err(err)?).map_err(err)?;
    let n: Vec<usize> = perm.iter().map(|&i| a.n[i]).collect();
    let m: Vec<usize> = perm.iter().map(|&i| a.m[i]).collect();
    ensure(b.n == n && b.m == m && b.r_holds == a.r_holds, || format!("{perm:?}: {a:?} vs {b:?}"))
}

/// A special fixture with one line swung about a random point of itself is not special,
/// and the sampler's witness plane meets exactly the other lines.
pub fn perturbation_is_not_special(seed: u64) -> Check {
    use cubica::projlin::line_meets_plane;
    use cubica::specialpos::{classify, is_special_position_exact, is_special_position_sampler, ConfigClass, SamplerVerdict};

    let mut r = rng(seed);
    let k = PrimeField::new(32003).unwrap();
    let special: Vec<LineConfig> =
        fixtures::all(&k).into_iter().filter(|(_, _, v)| *v != "NotSpecial").map(|(_, c, _)| c).collect();
    let base = special.choose(&mut r).expect("special fixtures");
    let cfg = loop {
        let i = r.gen_range(0..base.len());
        let mut lines = base.lines().to_vec();
        let [p, q] = lines[i].points().clone();
        let (s, t) = (k.random_elem(&mut r), k.random_elem(&mut r));
        let on: Vec<u64> = p.iter().zip(&q).map(|(a, b)| k.add(&k.mul(&s, a), &k.mul(&t, b))).collect();
        let off: Vec<u64> = (0..5).map(|_| k.random_elem(&mut r)).collect();
        let Ok(moved) = PluckerLine::from_points(k.clone(), &on, &off) else { continue };
        lines[i] = moved;
        if let Ok(c) = LineConfig::new(lines) {
            break c;
        }
    };
    let validate = |held_out: usize, w: &cubica::projlin::ProjSubspace<PrimeField>| -> Check {
        for (j, l) in cfg.lines().iter().enumerate() {
            ensure(line_meets_plane(l, w).map_err(err)? == (j != held_out), || format!("witness misjudges line {j}"))?;
        }
        Ok(())
    };
    match classify(&cfg).map_err(err)? {
        ConfigClass::NotSpecial { held_out, witness } => {
            if let (Some(j), Some(w)) = (held_out, &witness) {
                validate(j, w)?;
            }
        }
        c => return Err(format!("perturbed configuration classified as {}", c.name())),
    }
    ensure(!is_special_position_exact(&cfg).map_err(err)?.special, || "exact test says special".into())?;
    match is_special_position_sampler(&cfg, 64, seed).map_err(err)? {
        SamplerVerdict::NotSpecial { held_out, witness } => validate(held_out, &witness),
        SamplerVerdict::ProbablySpecial { .. } => Err("the sampler found no witness".into()),
    }
}
