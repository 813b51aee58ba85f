//! Dense univariate polynomials over a field, coefficients lowest degree first.
//!
//! These are internal helpers for extension-field arithmetic, factorization
//! and gcds; the public surface works with [`BinaryForm`](super::BinaryForm).

use num_bigint::BigUint;

use super::field::Field;

pub type UPoly<K> = Vec<<K as Field>::Elem>;

pub fn trim<K: Field>(k: &K, mut a: UPoly<K>) -> UPoly<K> {
    while a.last().is_some_and(|c| k.is_zero(c)) {
        a.pop();
    }
    a
}

/// Degree, or `None` for the zero polynomial. Assumes `a` is trimmed.
pub fn degree<K: Field>(a: &[K::Elem]) -> Option<usize> {
    a.len().checked_sub(1)
}

pub fn add<K: Field>(k: &K, a: &[K::Elem], b: &[K::Elem]) -> UPoly<K> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => k.add(x, y),
            (Some(x), None) => x.clone(),
            (None, Some(y)) => y.clone(),
            (None, None) => unreachable!(),
        })
        .collect();
    trim(k, out)
}

pub fn sub<K: Field>(k: &K, a: &[K::Elem], b: &[K::Elem]) -> UPoly<K> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => k.sub(x, y),
            (Some(x), None) => x.clone(),
            (None, Some(y)) => k.neg(y),
            (None, None) => unreachable!(),
        })
        .collect();
    trim(k, out)
}

pub fn scale<K: Field>(k: &K, a: &[K::Elem], c: &K::Elem) -> UPoly<K> {
    trim(k, a.iter().map(|x| k.mul(x, c)).collect())
}

pub fn mul<K: Field>(k: &K, a: &[K::Elem], b: &[K::Elem]) -> UPoly<K> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![k.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if k.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = k.add(&out[i + j], &k.mul(x, y));
        }
    }
    trim(k, out)
}

/// Quotient and remainder; `b` must be nonzero and trimmed.
pub fn divrem<K: Field>(k: &K, a: &[K::Elem], b: &[K::Elem]) -> (UPoly<K>, UPoly<K>) {
    let db = degree::<K>(b).expect("division by the zero polynomial");
    let lc_inv = k.inv(&b[db]).expect("leading coefficient must be invertible");
    let mut r: UPoly<K> = trim(k, a.to_vec());
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![k.zero(); r.len() - db];
    while let Some(dr) = degree::<K>(&r) {
        if dr < db {
            break;
        }
        let c = k.mul(&r[dr], &lc_inv);
        let shift = dr - db;
        for (i, y) in b.iter().enumerate() {
            r[shift + i] = k.sub(&r[shift + i], &k.mul(&c, y));
        }
        q[shift] = c;
        // The leading term cancels exactly for exact fields; force it for
        // approximate ones.
        r[dr] = k.zero();
        r = trim(k, r);
    }
    (trim(k, q), r)
}

pub fn rem<K: Field>(k: &K, a: &[K::Elem], b: &[K::Elem]) -> UPoly<K> {
    divrem(k, a, b).1
}

pub fn monic<K: Field>(k: &K, a: &[K::Elem]) -> UPoly<K> {
    match a.last() {
        None => Vec::new(),
        Some(lc) => {
            let inv = k.inv(lc).expect("nonzero leading coefficient");
            scale(k, a, &inv)
        }
    }
}

/// Monic greatest common divisor (zero iff both inputs are zero).
pub fn gcd<K: Field>(k: &K, a: &[K::Elem], b: &[K::Elem]) -> UPoly<K> {
    let mut x = trim(k, a.to_vec());
    let mut y = trim(k, b.to_vec());
    while !y.is_empty() {
        let r = rem(k, &x, &y);
        x = y;
        y = r;
    }
    monic(k, &x)
}

/// Extended gcd: returns (g, s) with s·a ≡ g (mod b), g monic.
pub fn gcd_ext<K: Field>(k: &K, a: &[K::Elem], b: &[K::Elem]) -> (UPoly<K>, UPoly<K>) {
    let mut r0 = trim(k, a.to_vec());
    let mut r1 = trim(k, b.to_vec());
    let mut s0: UPoly<K> = vec![k.one()];
    let mut s1: UPoly<K> = Vec::new();
    while !r1.is_empty() {
        let (q, r) = divrem(k, &r0, &r1);
        let s2 = sub(k, &s0, &mul(k, &q, &s1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
    }
    match r0.last() {
        None => (Vec::new(), Vec::new()),
        Some(lc) => {
            let inv = k.inv(lc).unwrap();
            (scale(k, &r0, &inv), scale(k, &s0, &inv))
        }
    }
}

pub fn derivative<K: Field>(k: &K, a: &[K::Elem]) -> UPoly<K> {
    trim(
        k,
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| k.mul(&k.from_i64(i as i64), c))
            .collect(),
    )
}

pub fn eval<K: Field>(k: &K, a: &[K::Elem], x: &K::Elem) -> K::Elem {
    a.iter()
        .rev()
        .fold(k.zero(), |acc, c| k.add(&k.mul(&acc, x), c))
}

pub fn mulmod<K: Field>(k: &K, a: &[K::Elem], b: &[K::Elem], m: &[K::Elem]) -> UPoly<K> {
    rem(k, &mul(k, a, b), m)
}

/// `base^e mod m`.
pub fn powmod<K: Field>(k: &K, base: &[K::Elem], e: &BigUint, m: &[K::Elem]) -> UPoly<K> {
    let mut acc: UPoly<K> = rem(k, &[k.one()], m);
    let b = rem(k, base, m);
    for i in (0..e.bits()).rev() {
        acc = mulmod(k, &acc, &acc, m);
        if e.bit(i) {
            acc = mulmod(k, &acc, &b, m);
        }
    }
    acc
}

pub fn is_one<K: Field>(k: &K, a: &[K::Elem]) -> bool {
    a.len() == 1 && k.is_one(&a[0])
}
