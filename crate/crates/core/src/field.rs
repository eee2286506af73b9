//! Exact arithmetic in GF(p^k) with a fixed primitive element and a full
//! discrete-log table.
//!
//! Elements are represented in the polynomial basis over GF(p) and addressed
//! by their canonical index: the base-p value of the coefficient vector, read
//! low degree first. The reducing polynomial is the lexicographically
//! smallest monic irreducible of degree k (ordering monic polynomials by the
//! base-p value of their non-leading coefficients), and the primitive element
//! is the one with the smallest canonical index. Both choices are arbitrary
//! but deterministic, so every derived construction is reproducible.

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::numbers::{factor_distinct_primes, is_prime};

/// A field element, identified by its canonical index in `[0, q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement(pub u64);

impl FieldElement {
    #[inline(always)]
    pub fn index(self) -> u64 {
        self.0
    }
}

/// GF(p^k) with precomputed exp/log tables base the canonical primitive
/// element. Immutable after construction; all operations are pure reads.
#[derive(Debug, Clone)]
pub struct FiniteField {
    p: u64,
    k: u32,
    order: u64,
    /// Monic reducing polynomial, coefficients low degree first, length k+1.
    modulus: Vec<u64>,
    primitive: FieldElement,
    /// `log_table[idx]` = m with theta^m = element idx; entry 0 is unused.
    log_table: Vec<u64>,
    /// `exp_table[m]` = canonical index of theta^m, length q-1.
    exp_table: Vec<u64>,
}

const LOG_UNSET: u64 = u64::MAX;

impl FiniteField {
    /// Builds GF(p^k). Fails with `NotPrime` for composite p and
    /// `SizeExceeded` when p^k overflows the budget.
    pub fn new(p: u64, k: u32, budget: Budget) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        assert!(k >= 1, "extension degree must be at least 1");
        let order = checked_pow(p, k, budget.field_elements)?;

        let modulus = smallest_irreducible(p, k);
        let mut field = FiniteField {
            p,
            k,
            order,
            modulus,
            primitive: FieldElement(0),
            log_table: Vec::new(),
            exp_table: Vec::new(),
        };
        field.primitive = field.find_primitive();
        field.build_tables();
        Ok(field)
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn modulus_coeffs(&self) -> &[u64] {
        &self.modulus
    }

    pub fn primitive_element(&self) -> FieldElement {
        self.primitive
    }

    #[inline(always)]
    pub fn zero(&self) -> FieldElement {
        FieldElement(0)
    }

    #[inline(always)]
    pub fn one(&self) -> FieldElement {
        FieldElement(1)
    }

    /// Element with the given canonical index.
    pub fn element(&self, index: u64) -> Result<FieldElement> {
        if index < self.order {
            Ok(FieldElement(index))
        } else {
            Err(Error::ElementOutOfRange {
                index,
                order: self.order,
            })
        }
    }

    /// All elements in canonical index order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.order).map(FieldElement)
    }

    /// Coefficient vector (length k, low degree first) of an element.
    pub fn coeffs(&self, a: FieldElement) -> Vec<u64> {
        debug_assert!(a.0 < self.order);
        let mut v = a.0;
        let mut out = Vec::with_capacity(self.k as usize);
        for _ in 0..self.k {
            out.push(v % self.p);
            v /= self.p;
        }
        out
    }

    /// Element with the given coefficients (low degree first, at most k of
    /// them, each below p).
    pub fn element_from_coeffs(&self, coeffs: &[u64]) -> Result<FieldElement> {
        if coeffs.len() > self.k as usize {
            return Err(Error::Parse(format!(
                "{} coefficients for degree-{} field",
                coeffs.len(),
                self.k
            )));
        }
        let mut idx = 0u64;
        for &c in coeffs.iter().rev() {
            if c >= self.p {
                return Err(Error::ElementOutOfRange {
                    index: c,
                    order: self.p,
                });
            }
            idx = idx * self.p + c;
        }
        Ok(FieldElement(idx))
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        debug_assert!(a.0 < self.order && b.0 < self.order);
        // Digit-wise addition base p.
        let (mut x, mut y) = (a.0, b.0);
        let mut out = 0u64;
        let mut place = 1u64;
        for _ in 0..self.k {
            let s = (x % self.p + y % self.p) % self.p;
            out += s * place;
            place *= self.p;
            x /= self.p;
            y /= self.p;
        }
        FieldElement(out)
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        let mut x = a.0;
        let mut out = 0u64;
        let mut place = 1u64;
        for _ in 0..self.k {
            let d = x % self.p;
            let n = if d == 0 { 0 } else { self.p - d };
            out += n * place;
            place *= self.p;
            x /= self.p;
        }
        FieldElement(out)
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        debug_assert!(a.0 < self.order && b.0 < self.order);
        let ca = self.coeffs(a);
        let cb = self.coeffs(b);
        let k = self.k as usize;
        // Schoolbook product then reduction by the monic modulus.
        let mut prod = vec![0u64; 2 * k - 1];
        for (i, &x) in ca.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in cb.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        for d in (k..prod.len()).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            prod[d] = 0;
            // x^d = x^(d-k) * (x^k mod modulus) = -x^(d-k) * lower part
            for (j, &m) in self.modulus.iter().take(k).enumerate() {
                if m == 0 {
                    continue;
                }
                let sub = (c * m) % self.p;
                let cell = &mut prod[d - k + j];
                *cell = (*cell + self.p - sub) % self.p;
            }
        }
        self.element_from_coeffs(&prod[..k]).expect("reduced product in range")
    }

    /// Square-and-multiply; independent of the log tables so it can run
    /// before they exist.
    pub fn pow(&self, a: FieldElement, mut e: u64) -> FieldElement {
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse. Errors on zero.
    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        let m = self.discrete_log(a)?;
        let e = (self.order - 1 - m) % (self.order - 1);
        Ok(FieldElement(self.exp_table[e as usize]))
    }

    /// m with theta^m = a, in `[0, q-1)`. Errors on zero.
    pub fn discrete_log(&self, a: FieldElement) -> Result<u64> {
        if a.0 == 0 {
            return Err(Error::LogOfZero);
        }
        debug_assert!(a.0 < self.order);
        Ok(self.log_table[a.0 as usize])
    }

    /// theta^m via the exp table (m reduced mod q-1).
    pub fn power_of_primitive(&self, m: u64) -> FieldElement {
        FieldElement(self.exp_table[(m % (self.order - 1)) as usize])
    }

    /// The subfield of the given order, realized as the fixed points of the
    /// matching power of Frobenius: every x with x^sub_order = x, found by
    /// exhaustive scan. `sub_order` must be p^d with d dividing k.
    pub fn subfield(&self, sub_order: u64) -> Result<Vec<FieldElement>> {
        let mut d = 0u32;
        let mut v = 1u64;
        while v < sub_order {
            v = v.saturating_mul(self.p);
            d += 1;
        }
        if v != sub_order || d == 0 || self.k % d != 0 {
            return Err(Error::ConstructionFailure(format!(
                "{} is not the order of a subfield of GF({}^{})",
                sub_order, self.p, self.k
            )));
        }
        let fixed: Vec<FieldElement> = self
            .elements()
            .filter(|&x| self.pow(x, sub_order) == x)
            .collect();
        assert_eq!(
            fixed.len() as u64,
            sub_order,
            "Frobenius fixed-point count must equal the subfield order"
        );
        Ok(fixed)
    }

    fn find_primitive(&self) -> FieldElement {
        let group_order = self.order - 1;
        let prime_factors = factor_distinct_primes(group_order);
        'candidates: for idx in 1..self.order {
            let cand = FieldElement(idx);
            for &f in &prime_factors {
                if self.pow(cand, group_order / f) == self.one() {
                    continue 'candidates;
                }
            }
            debug_assert_eq!(self.pow(cand, group_order), self.one());
            return cand;
        }
        unreachable!("the multiplicative group of a finite field is cyclic");
    }

    fn build_tables(&mut self) {
        let group_order = (self.order - 1) as usize;
        let mut log_table = vec![LOG_UNSET; self.order as usize];
        let mut exp_table = vec![0u64; group_order];
        let mut cur = self.one();
        for (m, slot) in exp_table.iter_mut().enumerate() {
            assert_eq!(
                log_table[cur.0 as usize], LOG_UNSET,
                "powers of the primitive element repeated early"
            );
            log_table[cur.0 as usize] = m as u64;
            *slot = cur.0;
            cur = self.mul(cur, self.primitive);
        }
        assert_eq!(cur, self.one(), "theta^(q-1) must be 1");
        self.log_table = log_table;
        self.exp_table = exp_table;
    }
}

fn checked_pow(p: u64, k: u32, budget: u64) -> Result<u64> {
    let mut acc: u64 = 1;
    for _ in 0..k {
        acc = acc
            .checked_mul(p)
            .filter(|&v| v <= budget)
            .ok_or(Error::SizeExceeded {
                requested: p.saturating_pow(k),
                budget,
            })?;
    }
    Ok(acc)
}

/// Lexicographically smallest monic irreducible of degree k over GF(p),
/// enumerating the non-leading coefficients as base-p digits.
fn smallest_irreducible(p: u64, k: u32) -> Vec<u64> {
    let k = k as usize;
    let mut count = 1u64;
    for _ in 0..k {
        count = count.saturating_mul(p);
    }
    for val in 0..count {
        let mut poly = Vec::with_capacity(k + 1);
        let mut v = val;
        for _ in 0..k {
            poly.push(v % p);
            v /= p;
        }
        poly.push(1);
        if is_irreducible(p, &poly) {
            return poly;
        }
    }
    unreachable!("irreducible polynomials of every degree exist over GF(p)");
}

/// Irreducibility by exhaustive factor search: no roots in GF(p), and no
/// monic divisor of degree 2..=k/2.
fn is_irreducible(p: u64, poly: &[u64]) -> bool {
    let k = poly.len() - 1;
    if k == 1 {
        return true;
    }
    for c in 0..p {
        if eval_poly(p, poly, c) == 0 {
            return false;
        }
    }
    for d in 2..=(k / 2) {
        let mut count = 1u64;
        for _ in 0..d {
            count = count.saturating_mul(p);
        }
        for val in 0..count {
            let mut div = Vec::with_capacity(d + 1);
            let mut v = val;
            for _ in 0..d {
                div.push(v % p);
                v /= p;
            }
            div.push(1);
            if poly_rem_is_zero(p, poly, &div) {
                return false;
            }
        }
    }
    true
}

fn eval_poly(p: u64, poly: &[u64], x: u64) -> u64 {
    let mut acc = 0u64;
    for &c in poly.iter().rev() {
        acc = (acc * x + c) % p;
    }
    acc
}

/// Whether the monic `divisor` divides `poly` over GF(p).
fn poly_rem_is_zero(p: u64, poly: &[u64], divisor: &[u64]) -> bool {
    let mut rem: Vec<u64> = poly.to_vec();
    let d = divisor.len() - 1;
    while rem.len() > d {
        let lead = *rem.last().unwrap();
        if lead != 0 {
            let offset = rem.len() - 1 - d;
            for (j, &m) in divisor.iter().enumerate() {
                let sub = (lead * m) % p;
                rem[offset + j] = (rem[offset + j] + p - sub) % p;
            }
        }
        debug_assert_eq!(*rem.last().unwrap(), 0);
        rem.pop();
    }
    rem.iter().all(|&c| c == 0)
}
