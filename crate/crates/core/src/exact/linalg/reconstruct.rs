//! Chinese remaindering and rational reconstruction.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exact::rational::Rational;

/// Residue modulo a product of distinct primes.
#[derive(Clone, Debug)]
pub struct Residue {
    pub value: BigInt,
    pub modulus: BigInt,
}

impl Residue {
    pub fn new(value: u64, p: u64) -> Self {
        Self { value: BigInt::from(value), modulus: BigInt::from(p) }
    }

    /// Combines with a residue modulo a prime coprime to the current modulus.
    pub fn crt(&self, value: u64, p: u64) -> Residue {
        let pb = BigInt::from(p);
        let m_mod_p = (&self.modulus % &pb).to_u64_digits().1.first().copied().unwrap_or(0);
        let cur = (&self.value % &pb).to_u64_digits().1.first().copied().unwrap_or(0);
        let diff = (value + p - cur) % p;
        let inv = super::modular::inv_mod(m_mod_p, p);
        let k = (diff as u128 * inv as u128 % p as u128) as u64;
        Residue {
            value: &self.value + &self.modulus * k,
            modulus: &self.modulus * p,
        }
    }
}

/// The unique fraction `n/d` with `|n|, d ≤ √(m/2)` congruent to `a` modulo `m`, if any.
pub fn rational_reconstruct(a: &BigInt, m: &BigInt) -> Option<Rational> {
    let bound = (m / 2u32).sqrt();
    let (mut r0, mut r1) = (m.clone(), a.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let (q, r) = r0.div_rem(&r1);
        r0 = std::mem::replace(&mut r1, r);
        let t = &t0 - &q * &t1;
        t0 = std::mem::replace(&mut t1, t);
    }
    if t1.is_zero() || t1.abs() > bound || !r1.gcd(&t1).is_one() {
        return None;
    }
    Some(Rational::new(r1, t1))
}

/// Word-size version for moduli below 2^62.
pub fn rational_reconstruct_small(a: u64, m: u64) -> Option<(i64, i64)> {
    let bound = ((m / 2) as f64).sqrt() as i128;
    let bound = (bound - 2..=bound + 2)
        .rev()
        .find(|b| b * b <= (m / 2) as i128)
        .unwrap_or(0);
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 > bound {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if t1 == 0 || t1.abs() > bound || r1.gcd(&t1) != 1 {
        return None;
    }
    let (n, d) = if t1 < 0 { (-r1, -t1) } else { (r1, t1) };
    Some((n as i64, d as i64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::linalg::modular::inv_mod;

    const P: u64 = 2_147_483_647;

    fn encode(n: i64, d: i64, p: u64) -> u64 {
        let n = n.rem_euclid(p as i64) as u64;
        (n as u128 * inv_mod(d as u64 % p, p) as u128 % p as u128) as u64
    }

    #[test]
    fn recovers_small_fractions() {
        for (n, d) in [(0, 1), (3, 7), (-5, 12), (1000, 999), (-1, 1)] {
            let a = encode(n, d, P);
            assert_eq!(rational_reconstruct_small(a, P), Some((n, d)));
            let big = rational_reconstruct(&BigInt::from(a), &BigInt::from(P)).unwrap();
            assert_eq!(big, Rational::new(n.into(), d.into()));
        }
    }

    #[test]
    fn crt_extends_the_range() {
        let q = 2_147_483_629u64;
        let (n, d) = (123_456_789_i64, 987_654_321_i64);
        let r = Residue::new(encode(n, d, P), P).crt(encode(n, d, q), q);
        assert_eq!(
            rational_reconstruct(&r.value, &r.modulus),
            Some(Rational::new(n.into(), d.into()))
        );
        assert_eq!(rational_reconstruct_small(encode(n, d, P), P), None);
    }
}
