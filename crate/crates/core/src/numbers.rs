//! Small integer helpers: trial-division primality, factoring, primitive
//! roots. All desk scale; nothing here is asymptotically clever.

use crate::error::{Error, Result};

/// Trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Distinct prime factors of n, ascending. Empty for n <= 1.
pub fn factor_distinct_primes(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Decomposes q = p^k with p prime, k >= 1. Errors for 0, 1 and numbers
/// with two distinct prime factors.
pub fn prime_power_decomposition(q: u64) -> Result<(u64, u32)> {
    if q < 2 {
        return Err(Error::NotPrimePower(q));
    }
    let factors = factor_distinct_primes(q);
    if factors.len() != 1 {
        return Err(Error::NotPrimePower(q));
    }
    let p = factors[0];
    let mut k = 0u32;
    let mut v = q;
    while v > 1 {
        v /= p;
        k += 1;
    }
    Ok((p, k))
}

/// a^e mod m (m > 0).
pub fn pow_mod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, m);
        }
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    acc
}

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// Inverse of a modulo prime p, via Fermat.
pub fn inv_mod_prime(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0, "zero has no inverse");
    pow_mod(a, p - 2, p)
}

/// Whether theta generates the multiplicative group mod prime p.
pub fn is_primitive_root(theta: u64, p: u64) -> bool {
    let theta = theta % p;
    if theta == 0 {
        return false;
    }
    let order = p - 1;
    factor_distinct_primes(order)
        .iter()
        .all(|&f| pow_mod(theta, order / f, p) != 1)
}

/// Smallest primitive root modulo prime p.
pub fn smallest_primitive_root(p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p == 2 {
        return Ok(1);
    }
    (2..p)
        .find(|&g| is_primitive_root(g, p))
        .ok_or_else(|| unreachable!("the group mod a prime is cyclic"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        let primes = [2u64, 3, 5, 7, 11, 13, 101, 139, 10303];
        for p in primes {
            assert!(is_prime(p), "{p}");
        }
        for n in [0u64, 1, 4, 6, 9, 21, 91, 1024] {
            assert!(!is_prime(n), "{n}");
        }
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power_decomposition(8).unwrap(), (2, 3));
        assert_eq!(prime_power_decomposition(9).unwrap(), (3, 2));
        assert_eq!(prime_power_decomposition(13).unwrap(), (13, 1));
        assert!(prime_power_decomposition(6).is_err());
        assert!(prime_power_decomposition(1).is_err());
    }

    #[test]
    fn primitive_roots() {
        assert_eq!(smallest_primitive_root(3).unwrap(), 2);
        assert_eq!(smallest_primitive_root(7).unwrap(), 3);
        assert_eq!(smallest_primitive_root(11).unwrap(), 2);
        assert!(is_primitive_root(3, 7));
        assert!(!is_primitive_root(2, 7)); // 2^3 = 1 mod 7
    }

    #[test]
    fn modular_inverse() {
        for p in [3u64, 5, 7, 13, 139] {
            for a in 1..p {
                assert_eq!(mul_mod(a, inv_mod_prime(a, p), p), 1);
            }
        }
    }
}
