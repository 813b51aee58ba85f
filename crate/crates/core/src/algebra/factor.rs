//! Univariate factorization over finite fields of odd characteristic:
//! square-free decomposition, distinct-degree factorization and
//! Cantor–Zassenhaus equal-degree splitting.

use num_bigint::BigUint;
use rand::RngCore;

use super::field::FiniteField;
use super::univariate::{self as up, UPoly};

/// Square-free decomposition of a monic polynomial: pairs `(g, m)` with
/// `f = ∏ g^m` and every `g` square-free, monic and nonconstant.
pub fn squarefree<K: FiniteField>(k: &K, f: &[K::Elem]) -> Vec<(UPoly<K>, usize)> {
    let f = up::monic(k, f);
    let mut out = Vec::new();
    if up::degree::<K>(&f).unwrap_or(0) == 0 {
        return out;
    }
    let p = k.prime() as usize;
    let mut c = up::gcd(k, &f, &up::derivative(k, &f));
    let mut w = up::divrem(k, &f, &c).0;
    let mut i = 1;
    while !up::is_one(k, &w) {
        let y = up::gcd(k, &w, &c);
        let fac = up::divrem(k, &w, &y).0;
        if !up::is_one(k, &fac) {
            out.push((fac, i));
        }
        w = y;
        c = up::divrem(k, &c, &w).0;
        i += 1;
    }
    if !up::is_one(k, &c) {
        // c is a p-th power
        let root: UPoly<K> = c
            .iter()
            .step_by(p)
            .map(|a| k.pth_root(a))
            .collect();
        for (g, m) in squarefree(k, &root) {
            match out.iter_mut().find(|(h, _)| *h == g) {
                Some(entry) => entry.1 += m * p,
                None => out.push((g, m * p)),
            }
        }
    }
    out
}

/// Distinct-degree factorization of a square-free monic polynomial:
/// pairs `(g, d)` where `g` is the product of all irreducible factors of
/// degree `d`.
pub fn distinct_degree<K: FiniteField>(k: &K, f: &[K::Elem]) -> Vec<(UPoly<K>, usize)> {
    let q = k.order();
    let x: UPoly<K> = vec![k.zero(), k.one()];
    let mut rest = up::monic(k, f);
    let mut h = x.clone();
    let mut out = Vec::new();
    let mut d = 1;
    while up::degree::<K>(&rest).unwrap_or(0) >= 2 * d {
        h = up::powmod(k, &h, &q, &rest);
        let g = up::gcd(k, &rest, &up::sub(k, &h, &x));
        if !up::is_one(k, &g) {
            rest = up::divrem(k, &rest, &g).0;
            h = up::rem(k, &h, &rest);
            out.push((g, d));
        }
        d += 1;
    }
    if let Some(dr) = up::degree::<K>(&rest) {
        if dr > 0 {
            out.push((rest, dr));
        }
    }
    out
}

/// Split a product of distinct irreducible monic factors of degree `d`.
pub fn equal_degree<K: FiniteField>(
    k: &K,
    g: &[K::Elem],
    d: usize,
    rng: &mut dyn RngCore,
) -> Vec<UPoly<K>> {
    let n = up::degree::<K>(g).expect("nonzero input");
    let target = n / d;
    let mut factors: Vec<UPoly<K>> = vec![up::monic(k, g)];
    if target <= 1 {
        return factors;
    }
    let exp = (k.order().pow(d as u32) - BigUint::from(1u32)) / BigUint::from(2u32);
    while factors.len() < target {
        let a: UPoly<K> = up::trim(k, (0..n).map(|_| k.random_elem(rng)).collect());
        if up::degree::<K>(&a).unwrap_or(0) == 0 {
            continue;
        }
        let b = up::sub(k, &up::powmod(k, &a, &exp, g), &[k.one()]);
        let mut next = Vec::with_capacity(factors.len() + 1);
        for u in factors.drain(..) {
            if up::degree::<K>(&u) == Some(d) {
                next.push(u);
                continue;
            }
            let s = up::gcd(k, &u, &up::rem(k, &b, &u));
            let ds = up::degree::<K>(&s).unwrap_or(0);
            if ds > 0 && ds < up::degree::<K>(&u).unwrap() {
                let t = up::divrem(k, &u, &s).0;
                next.push(s);
                next.push(up::monic(k, &t));
            } else {
                next.push(u);
            }
        }
        factors = next;
    }
    factors
}

/// Full factorization of a nonzero polynomial into monic irreducibles with
/// multiplicities, sorted by (degree, coefficients) for determinism.
pub fn factor<K: FiniteField>(k: &K, f: &[K::Elem], rng: &mut dyn RngCore) -> Vec<(UPoly<K>, usize)> {
    let mut out = Vec::new();
    for (g, m) in squarefree(k, f) {
        for (h, d) in distinct_degree(k, &g) {
            for irr in equal_degree(k, &h, d, rng) {
                out.push((irr, m));
            }
        }
    }
    out.sort_by_cached_key(|(g, m)| {
        let key: Vec<Vec<u64>> = g.iter().rev().map(|c| k.coords(c)).collect();
        (g.len(), key, *m)
    });
    out
}

/// Rabin-style irreducibility test via distinct-degree factorization.
pub fn is_irreducible<K: FiniteField>(k: &K, f: &[K::Elem]) -> bool {
    let f = up::trim(k, f.to_vec());
    let Some(n) = up::degree::<K>(&f) else {
        return false;
    };
    if n == 0 {
        return false;
    }
    let sf = squarefree(k, &f);
    if sf.len() != 1 || sf[0].1 != 1 {
        return false;
    }
    let ddf = distinct_degree(k, &f);
    ddf.len() == 1 && ddf[0].1 == n
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::PrimeField;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn expand(k: &PrimeField, fs: &[(Vec<u64>, usize)]) -> Vec<u64> {
        let mut acc = vec![1u64];
        for (g, m) in fs {
            for _ in 0..*m {
                acc = up::mul(k, &acc, g);
            }
        }
        acc
    }

    #[test]
    fn squarefree_handles_pth_powers() {
        let k = PrimeField::new(5).unwrap();
        // (x+1)^5 (x+2)^2 x
        let mut f = vec![1u64];
        for _ in 0..5 {
            f = up::mul(&k, &f, &[1, 1]);
        }
        for _ in 0..2 {
            f = up::mul(&k, &f, &[2, 1]);
        }
        f = up::mul(&k, &f, &[0, 1]);
        let sf = squarefree(&k, &f);
        assert_eq!(expand(&k, &sf), f);
        assert!(sf.contains(&(vec![1, 1], 5)));
    }

    #[test]
    fn factor_reassembles() {
        let k = PrimeField::new(101).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let f: Vec<u64> = vec![7, 0, 3, 9, 1, 0, 55, 1];
        let fs = factor(&k, &f, &mut rng);
        assert_eq!(expand(&k, &fs), f);
        for (g, _) in &fs {
            assert!(is_irreducible(&k, g));
        }
    }

    #[test]
    fn irreducible_quadratic_mod_5() {
        let k = PrimeField::new(5).unwrap();
        assert!(is_irreducible(&k, &[1, 1, 1]));
        assert!(!is_irreducible(&k, &[1, 0, 1]));
    }
}
