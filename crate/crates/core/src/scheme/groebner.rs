//! Buchberger's algorithm over 𝔽ₚ with the sugar selection strategy and the
//! Gebauer–Möller pair criteria.

use std::cmp::Ordering;
use std::collections::hash_map::Entry;
use std::collections::{BinaryHeap, HashMap};

use super::mono::{Mono, MonoOrder};
use super::poly::{Poly, Ring};
use crate::error::{Error, Result};

pub const DEFAULT_PAIR_CAP: u64 = 1_000_000;

/// Pair-reduction cap: `CUBICA_PAIR_CAP` if set and valid, else the default.
pub fn pair_cap() -> u64 {
    std::env::var("CUBICA_PAIR_CAP")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_PAIR_CAP)
}

#[derive(Debug, Clone, Copy)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Mono,
    sugar: u32,
}

struct HeapMono {
    m: Mono,
    order: MonoOrder,
}

impl PartialEq for HeapMono {
    fn eq(&self, o: &Self) -> bool {
        self.m == o.m
    }
}
impl Eq for HeapMono {}
impl PartialOrd for HeapMono {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}
impl Ord for HeapMono {
    fn cmp(&self, o: &Self) -> Ordering {
        self.order.cmp(&self.m, &o.m)
    }
}

/// Incremental Gröbner basis computation.
pub struct Groebner {
    ring: Ring,
    polys: Vec<Poly>,
    sugar: Vec<u32>,
    masks: Vec<u32>,
    /// Indices of the current (not necessarily reduced) basis.
    basis: Vec<usize>,
    pairs: Vec<Pair>,
    reductions: u64,
    cap: u64,
}

impl Groebner {
    pub fn new(ring: Ring) -> Self {
        Groebner {
            ring,
            polys: Vec::new(),
            sugar: Vec::new(),
            masks: Vec::new(),
            basis: Vec::new(),
            pairs: Vec::new(),
            reductions: 0,
            cap: pair_cap(),
        }
    }

    pub fn with_cap(mut self, cap: u64) -> Self {
        self.cap = cap;
        self
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn reductions(&self) -> u64 {
        self.reductions
    }

    /// Adds a generator (reduced against the current basis first).
    pub fn add(&mut self, f: &Poly) {
        let sugar = f.degree();
        let r = self.reduce(f, true);
        if !r.is_zero() {
            self.insert(r.monic(&self.ring), sugar.max(r.degree()));
        }
    }

    pub fn add_all(&mut self, fs: &[Poly]) {
        let mut sorted: Vec<&Poly> = fs.iter().filter(|f| !f.is_zero()).collect();
        sorted.sort_by(|a, b| self.ring.cmp(a.lm(), b.lm()));
        for f in sorted {
            self.add(f);
        }
    }

    pub fn contains_one(&self) -> bool {
        self.basis.iter().any(|&i| self.polys[i].is_constant())
    }

    /// Processes pairs until the basis is a Gröbner basis.
    pub fn run(&mut self) -> Result<()> {
        while let Some(pair) = self.pairs.pop() {
            if self.contains_one() {
                self.pairs.clear();
                break;
            }
            self.reductions += 1;
            if self.reductions > self.cap {
                return Err(Error::ResourceCap(format!(
                    "more than {} pair reductions",
                    self.cap
                )));
            }
            let s = self.spoly(&pair);
            let h = self.reduce(&s, true);
            if !h.is_zero() {
                let sugar = pair.sugar.max(h.degree());
                self.insert(h.monic(&self.ring), sugar);
            }
        }
        Ok(())
    }

    fn spoly(&self, p: &Pair) -> Poly {
        let (f, g) = (&self.polys[p.i], &self.polys[p.j]);
        let mf = f.lm().div_into(&p.lcm);
        let mg = g.lm().div_into(&p.lcm);
        let a = Poly { terms: f.terms[1..].to_vec() }.mul_term(&self.ring, &mf, 1);
        let b = Poly { terms: g.terms[1..].to_vec() }.mul_term(&self.ring, &mg, 1);
        a.sub(&self.ring, &b)
    }

    fn find_reducer(&self, m: &Mono) -> Option<usize> {
        let mask = m.mask();
        self.basis.iter().copied().find(|&i| {
            self.masks[i] & !mask == 0 && self.polys[i].lm().divides(m)
        })
    }

    /// Normal form with respect to the current basis; with `full` false
    /// only the leading term is reduced.
    pub fn reduce(&self, f: &Poly, full: bool) -> Poly {
        if f.is_zero() || self.basis.is_empty() {
            return f.clone();
        }
        let ring = &self.ring;
        let mut coeffs: HashMap<Mono, u64> = HashMap::with_capacity(f.len() * 4);
        let mut heap: BinaryHeap<HeapMono> = BinaryHeap::with_capacity(f.len() * 4);
        for &(m, c) in &f.terms {
            coeffs.insert(m, c);
            heap.push(HeapMono { m, order: ring.order });
        }
        let mut out: Vec<(Mono, u64)> = Vec::new();
        while let Some(HeapMono { m, .. }) = heap.pop() {
            let Some(c) = coeffs.remove(&m) else { continue };
            if c == 0 {
                continue;
            }
            match self.find_reducer(&m) {
                Some(i) => {
                    let g = &self.polys[i];
                    let q = g.lm().div_into(&m);
                    let factor = ring.neg(c);
                    for &(t, a) in &g.terms[1..] {
                        let mt = t.mul(&q);
                        let add = ring.mul(a, factor);
                        match coeffs.entry(mt) {
                            Entry::Occupied(mut e) => {
                                let v = ring.add(*e.get(), add);
                                *e.get_mut() = v;
                            }
                            Entry::Vacant(e) => {
                                e.insert(add);
                                heap.push(HeapMono { m: mt, order: ring.order });
                            }
                        }
                    }
                }
                None => {
                    out.push((m, c));
                    if !full {
                        let mut rest: Vec<(Mono, u64)> = coeffs.into_iter().filter(|t| t.1 != 0).collect();
                        rest.sort_by(|a, b| ring.cmp(&b.0, &a.0));
                        out.extend(rest);
                        return Poly { terms: out };
                    }
                }
            }
        }
        Poly { terms: out }
    }

    fn insert(&mut self, h: Poly, sugar: u32) {
        let ring = self.ring;
        let hi = self.polys.len();
        let hlm = *h.lm();
        self.masks.push(hlm.mask());
        self.polys.push(h);
        self.sugar.push(sugar);

        let sugar_of = |s: &Self, i: usize, l: &Mono| -> u32 {
            let lm = s.polys[i].lm();
            s.sugar[i] + (l.deg() - lm.deg())
        };

        // new pairs (h, g)
        let mut cands: Vec<(Pair, bool)> = self
            .basis
            .iter()
            .map(|&g| {
                let glm = self.polys[g].lm();
                let lcm = hlm.lcm(glm);
                let s = sugar_of(self, g, &lcm).max(sugar_of(self, hi, &lcm));
                (Pair { i: g, j: hi, lcm, sugar: s }, hlm.coprime(glm))
            })
            .collect();

        // chain criterion among the new pairs
        let mut keep = vec![true; cands.len()];
        for a in 0..cands.len() {
            if cands[a].1 {
                continue;
            }
            for b in 0..cands.len() {
                if a == b || !keep[b] {
                    continue;
                }
                let (la, lb) = (cands[a].0.lcm, cands[b].0.lcm);
                if lb.divides(&la) && (lb != la || b < a) {
                    keep[a] = false;
                    break;
                }
            }
        }
        // product criterion
        let new_pairs: Vec<Pair> = cands
            .drain(..)
            .zip(keep)
            .filter(|((_, coprime), k)| *k && !*coprime)
            .map(|((p, _), _)| p)
            .collect();

        // Gebauer–Möller criterion B on the old pairs
        self.pairs.retain(|p| {
            if !hlm.divides(&p.lcm) {
                return true;
            }
            let li = self.polys[p.i].lm().lcm(&hlm);
            let lj = self.polys[p.j].lm().lcm(&hlm);
            li == p.lcm || lj == p.lcm
        });
        self.pairs.extend(new_pairs);
        // pop() takes from the back: sort descending by (sugar, lcm)
        self.pairs.sort_by(|a, b| {
            b.sugar
                .cmp(&a.sugar)
                .then_with(|| ring.cmp(&b.lcm, &a.lcm))
                .then_with(|| b.j.cmp(&a.j))
                .then_with(|| b.i.cmp(&a.i))
        });

        let polys = &self.polys;
        self.basis.retain(|&g| !hlm.divides(polys[g].lm()));
        self.basis.push(hi);
    }

    /// The reduced Gröbner basis, sorted by increasing leading monomial.
    pub fn reduced_basis(&self) -> Vec<Poly> {
        let ring = &self.ring;
        if self.contains_one() {
            return vec![Poly::constant(1)];
        }
        let mut idx: Vec<usize> = self.basis.clone();
        idx.sort_by(|&a, &b| ring.cmp(self.polys[a].lm(), self.polys[b].lm()));
        let mut minimal: Vec<usize> = Vec::new();
        for &i in &idx {
            let lm = self.polys[i].lm();
            if !minimal.iter().any(|&j| self.polys[j].lm().divides(lm)) {
                minimal.push(i);
            }
        }
        let mut out = Vec::with_capacity(minimal.len());
        for (pos, &i) in minimal.iter().enumerate() {
            let others: Vec<usize> = minimal.iter().enumerate().filter(|(q, _)| *q != pos).map(|(_, &j)| j).collect();
            let tmp = Groebner {
                ring: self.ring,
                polys: self.polys.clone(),
                sugar: self.sugar.clone(),
                masks: self.masks.clone(),
                basis: others,
                pairs: Vec::new(),
                reductions: 0,
                cap: self.cap,
            };
            let f = &self.polys[i];
            let lead = Poly { terms: vec![f.terms[0]] };
            let tail = tmp.reduce(&Poly { terms: f.terms[1..].to_vec() }, true);
            out.push(lead.add(ring, &tail).monic(ring));
        }
        out
    }

    /// Leading monomials of the current basis.
    pub fn leading_monomials(&self) -> Vec<Mono> {
        self.basis.iter().map(|&i| *self.polys[i].lm()).collect()
    }
}

/// Reduced Gröbner basis of the generators.
pub fn groebner_basis(ring: &Ring, gens: &[Poly]) -> Result<Vec<Poly>> {
    let mut g = Groebner::new(*ring);
    g.add_all(gens);
    g.run()?;
    Ok(g.reduced_basis())
}

/// Normal form of f modulo a Gröbner basis.
pub fn normal_form(ring: &Ring, gb: &[Poly], f: &Poly) -> Poly {
    let mut g = Groebner::new(*ring);
    for p in gb {
        if !p.is_zero() {
            let hi = g.polys.len();
            g.masks.push(p.lm().mask());
            g.polys.push(p.monic(ring));
            g.sugar.push(p.degree());
            g.basis.push(hi);
        }
    }
    g.reduce(f, true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(n: usize) -> Ring {
        Ring::new(n, 32003, MonoOrder::Grevlex).unwrap()
    }

    fn mono(e: &[u32]) -> Mono {
        Mono::from_exps(e).unwrap()
    }

    #[test]
    fn coordinate_ideal() {
        let r = ring(5);
        let gb = groebner_basis(&r, &[Poly::var(0), Poly::var(1)]).unwrap();
        assert_eq!(gb.len(), 2);
    }

    #[test]
    fn already_a_basis() {
        let r = ring(2);
        let f = Poly { terms: vec![(mono(&[1, 1]), 1)] };
        let g = Poly { terms: vec![(mono(&[2, 0]), 1)] };
        let gb = groebner_basis(&r, &[f.clone(), g.clone()]).unwrap();
        assert_eq!(gb.len(), 2);
        assert!(gb.contains(&f) && gb.contains(&g));
    }

    #[test]
    fn cyclic3_has_known_leading_terms() {
        let r = ring(3);
        let v = |i| Poly::var(i);
        let f1 = v(0).add(&r, &v(1)).add(&r, &v(2));
        let f2 = v(0).mul(&r, &v(1)).add(&r, &v(1).mul(&r, &v(2))).add(&r, &v(2).mul(&r, &v(0)));
        let f3 = v(0).mul(&r, &v(1)).mul(&r, &v(2)).sub(&r, &Poly::constant(1));
        let gb = groebner_basis(&r, &[f1, f2, f3]).unwrap();
        // every S-polynomial reduces to zero
        for a in 0..gb.len() {
            for b in a + 1..gb.len() {
                let l = gb[a].lm().lcm(gb[b].lm());
                let s = gb[a]
                    .mul_term(&r, &gb[a].lm().div_into(&l), 1)
                    .sub(&r, &gb[b].mul_term(&r, &gb[b].lm().div_into(&l), 1));
                assert!(normal_form(&r, &gb, &s).is_zero());
            }
        }
        let lms: Vec<Vec<u32>> = gb.iter().map(|g| g.lm().exps(3)).collect();
        assert!(lms.contains(&vec![1, 0, 0]));
        assert!(lms.contains(&vec![0, 2, 0]));
        assert!(lms.contains(&vec![0, 0, 3]));
    }

    #[test]
    fn unit_ideal() {
        let r = ring(2);
        let x = Poly::var(0);
        let g = x.sub(&r, &Poly::constant(1));
        let gb = groebner_basis(&r, &[x, g]).unwrap();
        assert_eq!(gb, vec![Poly::constant(1)]);
    }

    #[test]
    fn pair_cap_is_enforced() {
        let r = ring(3);
        let v = |i| Poly::var(i);
        let f1 = v(0).mul(&r, &v(0)).add(&r, &v(1).mul(&r, &v(2)));
        let f2 = v(1).mul(&r, &v(1)).add(&r, &v(0).mul(&r, &v(2)));
        let f3 = v(2).mul(&r, &v(2)).add(&r, &v(0).mul(&r, &v(1)));
        let mut g = Groebner::new(r).with_cap(1);
        g.add_all(&[f1, f2, f3]);
        assert!(matches!(g.run(), Err(Error::ResourceCap(_))));
    }
}
