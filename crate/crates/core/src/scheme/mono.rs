use std::cmp::Ordering;

use crate::error::{Error, Result};

/// Largest number of variables the Gröbner engine supports.
pub const MAX_VARS: usize = 16;

/// Packed exponent vector with cached total degree.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mono {
    e: [u16; MAX_VARS],
    deg: u32,
}

impl std::fmt::Debug for Mono {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}", &self.e[..])
    }
}

impl Mono {
    pub const ONE: Mono = Mono { e: [0; MAX_VARS], deg: 0 };

    pub fn from_exps(exps: &[u32]) -> Result<Mono> {
        if exps.len() > MAX_VARS {
            return Err(Error::Dimension(format!("at most {MAX_VARS} variables supported")));
        }
        let mut e = [0u16; MAX_VARS];
        let mut deg = 0;
        for (slot, &x) in e.iter_mut().zip(exps) {
            *slot = u16::try_from(x).map_err(|_| Error::ResourceCap("exponent overflow".into()))?;
            deg += x;
        }
        Ok(Mono { e, deg })
    }

    pub fn var(i: usize) -> Mono {
        let mut m = Mono::ONE;
        m.e[i] = 1;
        m.deg = 1;
        m
    }

    pub fn pow_var(i: usize, k: u16) -> Mono {
        let mut m = Mono::ONE;
        m.e[i] = k;
        m.deg = k as u32;
        m
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u16 {
        self.e[i]
    }

    #[inline]
    pub fn deg(&self) -> u32 {
        self.deg
    }

    pub fn exps(&self, nvars: usize) -> Vec<u32> {
        self.e[..nvars].iter().map(|&x| x as u32).collect()
    }

    #[inline]
    pub fn mul(&self, o: &Mono) -> Mono {
        let mut e = [0u16; MAX_VARS];
        for i in 0..MAX_VARS {
            e[i] = self.e[i].checked_add(o.e[i]).expect("exponent overflow");
        }
        Mono { e, deg: self.deg + o.deg }
    }

    #[inline]
    pub fn divides(&self, o: &Mono) -> bool {
        self.deg <= o.deg && self.e.iter().zip(&o.e).all(|(a, b)| a <= b)
    }

    /// `o / self`, assuming divisibility.
    #[inline]
    pub fn div_into(&self, o: &Mono) -> Mono {
        let mut e = [0u16; MAX_VARS];
        for i in 0..MAX_VARS {
            e[i] = o.e[i] - self.e[i];
        }
        Mono { e, deg: o.deg - self.deg }
    }

    pub fn lcm(&self, o: &Mono) -> Mono {
        let mut e = [0u16; MAX_VARS];
        let mut deg = 0;
        for i in 0..MAX_VARS {
            e[i] = self.e[i].max(o.e[i]);
            deg += e[i] as u32;
        }
        Mono { e, deg }
    }

    pub fn gcd(&self, o: &Mono) -> Mono {
        let mut e = [0u16; MAX_VARS];
        let mut deg = 0;
        for i in 0..MAX_VARS {
            e[i] = self.e[i].min(o.e[i]);
            deg += e[i] as u32;
        }
        Mono { e, deg }
    }

    pub fn coprime(&self, o: &Mono) -> bool {
        self.e.iter().zip(&o.e).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Bit i is set iff variable i occurs.
    #[inline]
    pub fn mask(&self) -> u32 {
        let mut m = 0u32;
        for i in 0..MAX_VARS {
            if self.e[i] > 0 {
                m |= 1 << i;
            }
        }
        m
    }

    /// Sets the exponent of variable i.
    pub fn with_exp(&self, i: usize, k: u16) -> Mono {
        let mut m = *self;
        m.deg = m.deg - m.e[i] as u32 + k as u32;
        m.e[i] = k;
        m
    }

    /// Number of variables occurring.
    pub fn support_len(&self) -> usize {
        self.e.iter().filter(|&&x| x > 0).count()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MonoOrder {
    Grevlex,
    Lex,
}

impl MonoOrder {
    #[inline]
    pub fn cmp(&self, a: &Mono, b: &Mono) -> Ordering {
        match self {
            MonoOrder::Grevlex => a.deg.cmp(&b.deg).then_with(|| {
                for i in (0..MAX_VARS).rev() {
                    if a.e[i] != b.e[i] {
                        return b.e[i].cmp(&a.e[i]);
                    }
                }
                Ordering::Equal
            }),
            MonoOrder::Lex => a.e.cmp(&b.e),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_agree_with_definitions() {
        let a = Mono::from_exps(&[1, 0, 1]).unwrap();
        let b = Mono::from_exps(&[0, 2, 0]).unwrap();
        assert_eq!(MonoOrder::Grevlex.cmp(&b, &a), Ordering::Greater);
        assert_eq!(MonoOrder::Lex.cmp(&a, &b), Ordering::Greater);
        let c = Mono::from_exps(&[0, 0, 5]).unwrap();
        assert_eq!(MonoOrder::Lex.cmp(&a, &c), Ordering::Greater);
        assert_eq!(MonoOrder::Grevlex.cmp(&a, &c), Ordering::Less);
    }

    #[test]
    fn lcm_gcd_divides() {
        let a = Mono::from_exps(&[2, 1, 0]).unwrap();
        let b = Mono::from_exps(&[1, 3, 1]).unwrap();
        let l = a.lcm(&b);
        assert_eq!(l.exps(3), vec![2, 3, 1]);
        assert!(a.divides(&l) && b.divides(&l));
        assert_eq!(a.div_into(&l).exps(3), vec![0, 2, 1]);
        assert_eq!(a.gcd(&b).exps(3), vec![1, 1, 0]);
        assert!(!a.coprime(&b));
    }
}
