//! The four ambient abelian groups: Z_n, (F_p,+)x(F_p,+), (F_p,+)x(F_p*,.)
//! and (F_p*,.)x(F_p*,.), with a canonical dense indexing of elements.
//!
//! Product groups are indexed row-major over (first, second), with
//! multiplicative components shifted so their range starts at 0. Written
//! additively throughout: `op` is the group operation, `diff(a, b)` is
//! a ⊕ b⁻¹ whatever the component operations are.

use std::fmt;

use crate::error::{Error, Result};
use crate::numbers::{inv_mod_prime, is_prime};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Group {
    /// Integers mod n under addition.
    Cyclic { n: u64 },
    /// (F_p, +) x (F_p, +); order p^2.
    AddAdd { p: u64 },
    /// (F_p, +) x (F_p*, .); order p(p-1).
    AddMul { p: u64 },
    /// (F_p*, .) x (F_p*, .); order (p-1)^2.
    MulMul { p: u64 },
}

impl Group {
    pub fn cyclic(n: u64) -> Result<Group> {
        if n == 0 {
            return Err(Error::Parse("cyclic group order must be positive".into()));
        }
        Ok(Group::Cyclic { n })
    }

    pub fn add_add(p: u64) -> Result<Group> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Group::AddAdd { p })
    }

    pub fn add_mul(p: u64) -> Result<Group> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Group::AddMul { p })
    }

    pub fn mul_mul(p: u64) -> Result<Group> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Group::MulMul { p })
    }

    pub fn order(&self) -> u64 {
        match *self {
            Group::Cyclic { n } => n,
            Group::AddAdd { p } => p * p,
            Group::AddMul { p } => p * (p - 1),
            Group::MulMul { p } => (p - 1) * (p - 1),
        }
    }

    pub fn identity(&self) -> u64 {
        match *self {
            Group::Cyclic { .. } => 0,
            Group::AddAdd { .. } => 0,                      // (0, 0)
            Group::AddMul { .. } => 0,                      // (0, 1)
            Group::MulMul { .. } => 0,                      // (1, 1)
        }
    }

    /// Decodes a canonical index into its component pair. For `Cyclic` the
    /// second component is 0.
    #[inline]
    pub fn pair(&self, idx: u64) -> (u64, u64) {
        debug_assert!(idx < self.order());
        match *self {
            Group::Cyclic { .. } => (idx, 0),
            Group::AddAdd { p } => (idx / p, idx % p),
            Group::AddMul { p } => (idx / (p - 1), idx % (p - 1) + 1),
            Group::MulMul { p } => (idx / (p - 1) + 1, idx % (p - 1) + 1),
        }
    }

    /// Inverse of `pair`.
    #[inline]
    pub fn index_of_pair(&self, x: u64, y: u64) -> u64 {
        match *self {
            Group::Cyclic { n } => {
                debug_assert!(x < n && y == 0);
                x
            }
            Group::AddAdd { p } => {
                debug_assert!(x < p && y < p);
                x * p + y
            }
            Group::AddMul { p } => {
                debug_assert!(x < p && y >= 1 && y < p);
                x * (p - 1) + (y - 1)
            }
            Group::MulMul { p } => {
                debug_assert!(x >= 1 && x < p && y >= 1 && y < p);
                (x - 1) * (p - 1) + (y - 1)
            }
        }
    }

    #[inline]
    pub fn op(&self, a: u64, b: u64) -> u64 {
        match *self {
            Group::Cyclic { n } => {
                let s = a + b;
                if s >= n {
                    s - n
                } else {
                    s
                }
            }
            Group::AddAdd { p } => {
                let (a1, a2) = self.pair(a);
                let (b1, b2) = self.pair(b);
                self.index_of_pair((a1 + b1) % p, (a2 + b2) % p)
            }
            Group::AddMul { p } => {
                let (a1, a2) = self.pair(a);
                let (b1, b2) = self.pair(b);
                self.index_of_pair((a1 + b1) % p, a2 * b2 % p)
            }
            Group::MulMul { p } => {
                let (a1, a2) = self.pair(a);
                let (b1, b2) = self.pair(b);
                self.index_of_pair(a1 * b1 % p, a2 * b2 % p)
            }
        }
    }

    #[inline]
    pub fn inv(&self, a: u64) -> u64 {
        match *self {
            Group::Cyclic { n } => {
                if a == 0 {
                    0
                } else {
                    n - a
                }
            }
            Group::AddAdd { p } => {
                let (a1, a2) = self.pair(a);
                self.index_of_pair((p - a1) % p, (p - a2) % p)
            }
            Group::AddMul { p } => {
                let (a1, a2) = self.pair(a);
                self.index_of_pair((p - a1) % p, inv_mod_prime(a2, p))
            }
            Group::MulMul { p } => {
                let (a1, a2) = self.pair(a);
                self.index_of_pair(inv_mod_prime(a1, p), inv_mod_prime(a2, p))
            }
        }
    }

    /// a ⊕ b⁻¹: the group written additively, whatever the components are.
    #[inline]
    pub fn diff(&self, a: u64, b: u64) -> u64 {
        match *self {
            // Direct form avoids the decode/encode for the hot cyclic case.
            Group::Cyclic { n } => {
                if a >= b {
                    a - b
                } else {
                    n - b + a
                }
            }
            _ => self.op(a, self.inv(b)),
        }
    }

    /// a ⊕ a.
    #[inline]
    pub fn double(&self, a: u64) -> u64 {
        self.op(a, a)
    }

    pub fn contains(&self, idx: u64) -> bool {
        idx < self.order()
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Group::Cyclic { n } => write!(f, "cyclic {n}"),
            Group::AddAdd { p } => write!(f, "addadd {p}"),
            Group::AddMul { p } => write!(f, "addmul {p}"),
            Group::MulMul { p } => write!(f, "mulmul {p}"),
        }
    }
}

/// Parses the `group <variant> <param>` header used by set files.
pub fn parse_group(s: &str) -> Result<Group> {
    let tokens: Vec<&str> = s.split_whitespace().collect();
    let bad = || Error::Parse(format!("malformed group spec: {s:?}"));
    if tokens.len() != 2 {
        return Err(bad());
    }
    let param: u64 = tokens[1].parse().map_err(|_| bad())?;
    match tokens[0] {
        "cyclic" => Group::cyclic(param),
        "addadd" => Group::add_add(param),
        "addmul" => Group::add_mul(param),
        "mulmul" => Group::mul_mul(param),
        _ => Err(bad()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_groups_small() -> Vec<Group> {
        vec![
            Group::cyclic(1).unwrap(),
            Group::cyclic(7).unwrap(),
            Group::cyclic(8).unwrap(),
            Group::add_add(5).unwrap(),
            Group::add_mul(5).unwrap(),
            Group::mul_mul(5).unwrap(),
            Group::add_mul(7).unwrap(),
            Group::mul_mul(7).unwrap(),
        ]
    }

    #[test]
    fn orders_match_variant_formulas() {
        assert_eq!(Group::cyclic(7).unwrap().order(), 7);
        assert_eq!(Group::add_add(5).unwrap().order(), 25);
        assert_eq!(Group::add_mul(5).unwrap().order(), 20);
        assert_eq!(Group::mul_mul(5).unwrap().order(), 16);
    }

    #[test]
    fn prime_required_for_product_groups() {
        assert_eq!(Group::add_mul(6).unwrap_err(), Error::NotPrime(6));
        assert_eq!(Group::mul_mul(9).unwrap_err(), Error::NotPrime(9));
        assert_eq!(Group::add_add(4).unwrap_err(), Error::NotPrime(4));
    }

    #[test]
    fn op_examples() {
        let z7 = Group::cyclic(7).unwrap();
        assert_eq!(z7.op(5, 4), 2);

        let am5 = Group::add_mul(5).unwrap();
        let a = am5.index_of_pair(2, 3);
        let b = am5.index_of_pair(4, 2);
        assert_eq!(am5.pair(am5.op(a, b)), (1, 1));

        let mm5 = Group::mul_mul(5).unwrap();
        let a = mm5.index_of_pair(2, 3);
        let b = mm5.index_of_pair(3, 2);
        assert_eq!(mm5.pair(mm5.op(a, b)), (1, 1));
    }

    #[test]
    fn inv_examples() {
        let z7 = Group::cyclic(7).unwrap();
        assert_eq!(z7.inv(3), 4);
        let am5 = Group::add_mul(5).unwrap();
        let a = am5.index_of_pair(2, 3);
        assert_eq!(am5.pair(am5.inv(a)), (3, 2));
        for g in all_groups_small() {
            assert_eq!(g.inv(g.identity()), g.identity());
        }
    }

    #[test]
    fn diff_examples() {
        let z8 = Group::cyclic(8).unwrap();
        assert_eq!(z8.diff(1, 5), 4);
        let mm7 = Group::mul_mul(7).unwrap();
        let a = mm7.index_of_pair(3, 2);
        let b = mm7.index_of_pair(5, 4);
        assert_eq!(mm7.pair(mm7.diff(a, b)), (2, 4));
        for g in all_groups_small() {
            for a in 0..g.order() {
                assert_eq!(g.diff(a, a), g.identity());
            }
        }
    }

    #[test]
    fn group_laws_exhaustive_small() {
        for g in all_groups_small() {
            let n = g.order();
            let e = g.identity();
            for a in 0..n {
                assert_eq!(g.op(a, e), a);
                assert_eq!(g.op(a, g.inv(a)), e);
                for b in 0..n {
                    assert_eq!(g.op(a, b), g.op(b, a));
                    for c in 0..n {
                        assert_eq!(g.op(g.op(a, b), c), g.op(a, g.op(b, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn index_pair_bijection() {
        for g in all_groups_small() {
            for idx in 0..g.order() {
                let (x, y) = g.pair(idx);
                assert_eq!(g.index_of_pair(x, y), idx);
            }
        }
    }

    #[test]
    fn display_and_parse_roundtrip() {
        for g in all_groups_small() {
            let s = g.to_string();
            assert_eq!(parse_group(&s).unwrap(), g);
        }
        assert!(parse_group("cyclic").is_err());
        assert!(parse_group("ring 5").is_err());
        assert!(parse_group("cyclic 0").is_err());
    }
}
