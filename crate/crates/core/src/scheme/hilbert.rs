//! Hilbert series of monomial ideals.

use super::mono::Mono;

/// Integer polynomial in t, coefficient i of tⁱ.
pub type TPoly = Vec<i128>;

fn trim(mut p: TPoly) -> TPoly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn add_shifted(acc: &mut TPoly, p: &TPoly, shift: usize) {
    if acc.len() < p.len() + shift {
        acc.resize(p.len() + shift, 0);
    }
    for (i, c) in p.iter().enumerate() {
        acc[i + shift] += c;
    }
}

/// Drops generators divisible by another generator.
pub fn minimalize(gens: &[Mono]) -> Vec<Mono> {
    let mut g: Vec<Mono> = gens.to_vec();
    g.sort_by_key(|m| m.deg());
    g.dedup();
    let mut out: Vec<Mono> = Vec::with_capacity(g.len());
    for m in g {
        if !out.iter().any(|o| o.divides(&m)) {
            out.push(m);
        }
    }
    out
}

/// Numerator N(t) with HS(S/I) = N(t) / (1 − t)ⁿ.
pub fn hilbert_numerator(gens: &[Mono]) -> TPoly {
    trim(numerator_rec(minimalize(gens)))
}

fn numerator_rec(gens: Vec<Mono>) -> TPoly {
    if gens.iter().any(|m| m.deg() == 0) {
        return Vec::new();
    }
    let mixed: Vec<&Mono> = gens.iter().filter(|m| m.support_len() > 1).collect();
    if mixed.is_empty() {
        let mut acc: TPoly = vec![1];
        for m in &gens {
            let d = m.deg() as usize;
            let mut next = acc.clone();
            next.resize(acc.len() + d, 0);
            for (i, c) in acc.iter().enumerate() {
                next[i + d] -= c;
            }
            acc = next;
        }
        return acc;
    }
    let mut counts = [0usize; super::mono::MAX_VARS];
    for m in &mixed {
        for (i, c) in counts.iter_mut().enumerate() {
            if m.exp(i) > 0 {
                *c += 1;
            }
        }
    }
    let var = (0..counts.len()).max_by_key(|&i| (counts[i], std::cmp::Reverse(i))).unwrap();
    let e = mixed.iter().filter(|m| m.exp(var) > 0).map(|m| m.exp(var)).min().unwrap();
    let pivot = Mono::pow_var(var, e);

    let mut with_pivot = gens.clone();
    with_pivot.push(pivot);
    let quotient: Vec<Mono> = gens.iter().map(|m| m.gcd(&pivot).div_into(m)).collect();

    let mut n = numerator_rec(minimalize(&with_pivot));
    let q = numerator_rec(minimalize(&quotient));
    add_shifted(&mut n, &q, e as usize);
    n
}

/// Krull dimension of S/I and the multiplicity, read off from the numerator.
/// Returns None for the unit ideal.
pub fn dimension_and_degree(nvars: usize, gens: &[Mono]) -> Option<(usize, u64)> {
    let mut n = hilbert_numerator(gens);
    if n.is_empty() {
        return None;
    }
    let mut k = 0;
    while n.iter().sum::<i128>() == 0 {
        // divide by (1 − t): cumulative sums
        let mut q = Vec::with_capacity(n.len() - 1);
        let mut s = 0;
        for c in &n[..n.len() - 1] {
            s += c;
            q.push(s);
        }
        n = trim(q);
        k += 1;
    }
    let deg = n.iter().sum::<i128>();
    Some((nvars - k, u64::try_from(deg).expect("positive multiplicity")))
}

/// Largest set of variables containing the support of no generator.
pub fn max_independent_set(nvars: usize, gens: &[Mono]) -> Option<usize> {
    let masks: Vec<u32> = minimalize(gens).iter().map(|m| m.mask()).collect();
    if masks.contains(&0) {
        return None;
    }
    let mut best = 0;
    for s in 0u32..(1u32 << nvars) {
        let size = s.count_ones() as usize;
        if size > best && masks.iter().all(|&g| g & !s != 0) {
            best = size;
        }
    }
    Some(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Mono {
        Mono::from_exps(e).unwrap()
    }

    #[test]
    fn coordinate_subspace() {
        let g = [m(&[1, 0, 0, 0, 0]), m(&[0, 1, 0, 0, 0])];
        assert_eq!(dimension_and_degree(5, &g), Some((3, 1)));
        assert_eq!(max_independent_set(5, &g), Some(3));
    }

    #[test]
    fn hypersurface_degree() {
        let g = [m(&[0, 0, 4, 0])];
        assert_eq!(dimension_and_degree(4, &g), Some((3, 4)));
    }

    #[test]
    fn mixed_generators() {
        // (xy, xz, yz): three coordinate axes in A³, degree 3
        let g = [m(&[1, 1, 0]), m(&[1, 0, 1]), m(&[0, 1, 1])];
        assert_eq!(hilbert_numerator(&g), vec![1, 0, -3, 2]);
        assert_eq!(dimension_and_degree(3, &g), Some((1, 3)));
        assert_eq!(max_independent_set(3, &g), Some(1));
    }

    #[test]
    fn unit_ideal() {
        assert_eq!(dimension_and_degree(3, &[Mono::ONE]), None);
        assert_eq!(max_independent_set(3, &[Mono::ONE]), None);
    }

    #[test]
    fn artinian_length() {
        // (x², xy, y³) in k[x,y]: monomials 1, x, y, y² → length 4
        let g = [m(&[2, 0]), m(&[1, 1]), m(&[0, 3])];
        assert_eq!(dimension_and_degree(2, &g), Some((0, 4)));
    }
}
