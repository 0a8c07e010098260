//! Table-driven arithmetic in `F_q` for prime powers `q <= 16`.
//!
//! Elements are integers `0..q`; for `q = p^e` the base-`p` digits of an element are the
//! coefficients of a polynomial reduced modulo a fixed monic irreducible of degree `e`.

use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

/// Largest supported field order.
pub const MAX_FIELD_ORDER: u32 = 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaloisField {
    order: u32,
    characteristic: u32,
    degree: u32,
    add: Vec<u8>,
    mul: Vec<u8>,
}

/// `(p, e)` with `q = p^e`, or `None` if `q` is not a prime power.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut rest = q;
    let mut e = 0;
    while rest % p == 0 {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

/// Prime powers in `2..=limit`.
pub fn prime_powers_up_to(limit: u32) -> impl Iterator<Item = u32> {
    (2..=limit).filter(|&q| prime_power(q).is_some())
}

fn digits(x: u32, p: u32, e: u32) -> Vec<u32> {
    let mut out = vec![0; e as usize];
    let mut x = x;
    for d in out.iter_mut() {
        *d = x % p;
        x /= p;
    }
    out
}

fn undigits(ds: &[u32], p: u32) -> u32 {
    ds.iter().rev().fold(0, |acc, &d| acc * p + d)
}

/// Remainder of `a` modulo the monic `m` over `F_p` (coefficients low-to-high).
fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap() % p;
        let shift = r.len() - 1 - dm;
        if lead != 0 {
            for (i, &mc) in m.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p * p - lead * mc % p) % p;
            }
        }
        r.pop();
    }
    r
}

fn poly_mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    out
}

/// The monic irreducible of degree `e` over `F_p` with the smallest coefficient encoding.
fn irreducible(p: u32, e: u32) -> Vec<u32> {
    for tail in 0..p.pow(e) {
        let mut m = digits(tail, p, e);
        m.push(1);
        let reducible = (1..=e / 2).any(|deg| {
            (0..p.pow(deg)).any(|t| {
                let mut f = digits(t, p, deg);
                f.push(1);
                poly_rem(&m, &f, p).iter().all(|&c| c == 0)
            })
        });
        if !reducible {
            return m;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

impl GaloisField {
    pub fn new(q: u32) -> Result<Self> {
        let (p, e) = prime_power(q)
            .filter(|_| q <= MAX_FIELD_ORDER)
            .ok_or(Error::UnsupportedField(q))?;
        let modulus = irreducible(p, e);
        let n = q as usize;
        let mut add = vec![0u8; n * n];
        let mut mul = vec![0u8; n * n];
        for a in 0..q {
            let da = digits(a, p, e);
            for b in 0..q {
                let db = digits(b, p, e);
                let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[(a * q + b) as usize] = undigits(&sum, p) as u8;
                let mut prod = poly_rem(&poly_mul(&da, &db, p), &modulus, p);
                prod.resize(e as usize, 0);
                mul[(a * q + b) as usize] = undigits(&prod, p) as u8;
            }
        }
        Ok(GaloisField {
            order: q,
            characteristic: p,
            degree: e,
            add,
            mul,
        })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn characteristic(&self) -> u32 {
        self.characteristic
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.add[(a * self.order + b) as usize] as u32
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[(a * self.order + b) as usize] as u32
    }

    pub fn neg(&self, a: u32) -> u32 {
        (0..self.order).find(|&b| self.add(a, b) == 0).unwrap()
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn inv(&self, a: u32) -> Option<u32> {
        (1..self.order).find(|&b| self.mul(a, b) == 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_power_detection() {
        assert_eq!(prime_power(16), Some((2, 4)));
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(13), Some((13, 1)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
        assert_eq!(
            prime_powers_up_to(16).collect::<Vec<_>>(),
            vec![2, 3, 4, 5, 7, 8, 9, 11, 13, 16]
        );
    }

    #[test]
    fn field_axioms_hold() {
        for q in prime_powers_up_to(MAX_FIELD_ORDER) {
            let f = GaloisField::new(q).unwrap();
            for a in 0..q {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    let inv = f.inv(a).expect("nonzero elements are invertible");
                    assert_eq!(f.mul(a, inv), 1);
                }
                for b in 0..q {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in 0..q {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn unsupported_orders() {
        assert_eq!(GaloisField::new(6), Err(Error::UnsupportedField(6)));
        assert_eq!(GaloisField::new(17), Err(Error::UnsupportedField(17)));
    }
}
