//! The six Sidon set constructions and their ambient groups.
//!
//! Every constructor verifies the Sidon property and the expected
//! cardinality before returning; a violation is a `ConstructionFailure`,
//! never a silently repaired set.

use std::fmt;
use std::io::{BufRead, Write};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::field::FiniteField;
use crate::group::{parse_group, Group};
use crate::numbers::{
    is_prime, is_primitive_root, pow_mod, prime_power_decomposition, smallest_primitive_root,
};

/// Which construction produced a set, with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    BoseChowla { q: u64, h: u32 },
    Singer { q: u64 },
    Ruzsa { p: u64, theta: u64 },
    Cartesian1 { p: u64 },
    Cartesian2 { p: u64 },
    Cartesian3 { p: u64, alpha: u64 },
    Custom,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Provenance::BoseChowla { q, h } => write!(f, "bose-chowla({q},{h})"),
            Provenance::Singer { q } => write!(f, "singer({q})"),
            Provenance::Ruzsa { p, theta } => write!(f, "ruzsa({p},{theta})"),
            Provenance::Cartesian1 { p } => write!(f, "cart1({p})"),
            Provenance::Cartesian2 { p } => write!(f, "cart2({p})"),
            Provenance::Cartesian3 { p, alpha } => write!(f, "cart3({p},{alpha})"),
            Provenance::Custom => write!(f, "custom"),
        }
    }
}

/// A verified Sidon set: sorted canonical element indices in its group.
#[derive(Debug, Clone)]
pub struct SidonSet {
    group: Group,
    elements: Vec<u64>,
    provenance: Provenance,
}

impl SidonSet {
    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, idx: u64) -> bool {
        self.elements.binary_search(&idx).is_ok()
    }

    fn seal(group: Group, mut elements: Vec<u64>, provenance: Provenance) -> Result<SidonSet> {
        elements.sort_unstable();
        if elements.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::ConstructionFailure(format!(
                "{provenance}: duplicate elements"
            )));
        }
        if elements.iter().any(|&e| !group.contains(e)) {
            return Err(Error::ConstructionFailure(format!(
                "{provenance}: element outside the group"
            )));
        }
        if !verify_sidon(&group, &elements) {
            return Err(Error::ConstructionFailure(format!(
                "{provenance}: Sidon property violated"
            )));
        }
        Ok(SidonSet {
            group,
            elements,
            provenance,
        })
    }

    fn expect_card(self, want: u64) -> Result<SidonSet> {
        if self.elements.len() as u64 != want {
            return Err(Error::ConstructionFailure(format!(
                "{}: cardinality {} instead of {want}",
                self.provenance,
                self.elements.len()
            )));
        }
        Ok(self)
    }

    /// log_theta(theta + F_q) inside Z_{q^h - 1}: q elements, one per member
    /// of the subfield F_q of GF(q^h).
    pub fn bose_chowla(q: u64, h: u32, budget: Budget) -> Result<SidonSet> {
        let (p, k) = prime_power_decomposition(q)?;
        assert!(h >= 2, "bose_chowla requires extension degree h >= 2");
        let field = FiniteField::new(p, k * h, budget)?;
        let group = Group::cyclic(field.order() - 1)?;
        let theta = field.primitive_element();
        let elements: Vec<u64> = field
            .subfield(q)?
            .into_iter()
            .map(|a| {
                let shifted = field.add(theta, a);
                field
                    .discrete_log(shifted)
                    .expect("theta + a is nonzero since theta is outside F_q")
            })
            .collect();
        SidonSet::seal(group, elements, Provenance::BoseChowla { q, h })?.expect_card(q)
    }

    /// Bose-Chowla in Z_{q^3 - 1} reduced mod q^2 + q + 1, plus 0; q + 1
    /// elements in Z_{q^2+q+1}.
    pub fn singer(q: u64, budget: Budget) -> Result<SidonSet> {
        let base = SidonSet::bose_chowla(q, 3, budget)?;
        let m = q * q + q + 1;
        let group = Group::cyclic(m)?;
        let mut elements: Vec<u64> = base.elements.iter().map(|&b| b % m).collect();
        elements.push(0);
        SidonSet::seal(group, elements, Provenance::Singer { q })?.expect_card(q + 1)
    }

    /// {ip - theta^i (p-1) mod p^2-p : 1 <= i <= p-1} for a primitive root
    /// theta mod p; p - 1 elements in Z_{p^2-p}.
    pub fn ruzsa(p: u64, theta: Option<u64>) -> Result<SidonSet> {
        check_odd_prime(p)?;
        let theta = match theta {
            Some(t) => {
                if !is_primitive_root(t, p) {
                    return Err(Error::NotPrimitive { theta: t, p });
                }
                t % p
            }
            None => smallest_primitive_root(p)?,
        };
        let m = p * p - p;
        let group = Group::cyclic(m)?;
        let elements: Vec<u64> = (1..p)
            .map(|i| {
                let t = pow_mod(theta, i, p) * (p - 1) % m;
                (i * p % m + m - t) % m
            })
            .collect();
        SidonSet::seal(group, elements, Provenance::Ruzsa { p, theta })?.expect_card(p - 1)
    }

    /// The parabola {(a, a^2) : a in F_p}; p elements in (F_p,+) x (F_p,+).
    pub fn cartesian1(p: u64) -> Result<SidonSet> {
        check_odd_prime(p)?;
        let group = Group::add_add(p)?;
        let elements: Vec<u64> = (0..p)
            .map(|a| group.index_of_pair(a, a * a % p))
            .collect();
        SidonSet::seal(group, elements, Provenance::Cartesian1 { p })?.expect_card(p)
    }

    /// The diagonal {(a, a) : a in F_p*}; p - 1 elements in
    /// (F_p,+) x (F_p*,.).
    pub fn cartesian2(p: u64) -> Result<SidonSet> {
        check_odd_prime(p)?;
        let group = Group::add_mul(p)?;
        let elements: Vec<u64> = (1..p).map(|a| group.index_of_pair(a, a)).collect();
        SidonSet::seal(group, elements, Provenance::Cartesian2 { p })?.expect_card(p - 1)
    }

    /// The shifted diagonal {(a - alpha, a) : a in F_p*, a != alpha}; p - 2
    /// elements in (F_p*,.) x (F_p*,.).
    pub fn cartesian3(p: u64, alpha: u64) -> Result<SidonSet> {
        check_odd_prime(p)?;
        if alpha == 0 || alpha >= p {
            return Err(Error::AlphaOutOfRange { alpha, max: p - 1 });
        }
        let group = Group::mul_mul(p)?;
        let elements: Vec<u64> = (1..p)
            .filter(|&a| a != alpha)
            .map(|a| group.index_of_pair((a + p - alpha) % p, a))
            .collect();
        SidonSet::seal(group, elements, Provenance::Cartesian3 { p, alpha })?.expect_card(p - 2)
    }

    /// A user-supplied set; gated by the Sidon check like every other
    /// constructor.
    pub fn custom(group: Group, elements: Vec<u64>) -> Result<SidonSet> {
        for &e in &elements {
            if !group.contains(e) {
                return Err(Error::ElementOutOfRange {
                    index: e,
                    order: group.order(),
                });
            }
        }
        SidonSet::seal(group, elements, Provenance::Custom)
    }

    /// Reads the text format: a `group <variant> <param>` header line, then
    /// one canonical element index per line. Blank lines and `#` comments
    /// are ignored.
    pub fn from_reader<R: BufRead>(reader: R) -> Result<SidonSet> {
        let mut group: Option<Group> = None;
        let mut elements = Vec::new();
        for line in reader.lines() {
            let line = line.map_err(|e| Error::Parse(e.to_string()))?;
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(rest) = line.strip_prefix("group ") {
                if group.is_some() {
                    return Err(Error::Parse("duplicate group header".into()));
                }
                group = Some(parse_group(rest)?);
            } else {
                let idx: u64 = line
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad element line: {line:?}")))?;
                elements.push(idx);
            }
        }
        let group = group.ok_or_else(|| Error::Parse("missing group header".into()))?;
        SidonSet::custom(group, elements)
    }

    /// Writes the text format read by `from_reader`.
    pub fn to_writer<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        writeln!(w, "group {}", self.group)?;
        for &e in &self.elements {
            writeln!(w, "{e}")?;
        }
        Ok(())
    }
}

fn check_odd_prime(p: u64) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p == 2 {
        return Err(Error::NotOdd(p));
    }
    Ok(())
}

/// All nonzero pairwise differences distinct — the difference-set form of
/// the Sidon condition. O(|A|^2) with a presence table over the group.
pub fn verify_sidon(group: &Group, elements: &[u64]) -> bool {
    let mut seen = vec![false; group.order() as usize];
    for (i, &a) in elements.iter().enumerate() {
        for (j, &b) in elements.iter().enumerate() {
            if i == j {
                continue;
            }
            let d = group.diff(a, b) as usize;
            if seen[d] {
                return false;
            }
            seen[d] = true;
        }
    }
    true
}
