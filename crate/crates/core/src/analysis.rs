//! Difference sets, deficiency, closed-form complement predictions for the
//! six construction families, the T(z) triple sets with degenerate-path
//! classification, and maximality testing.

use crate::bitset::BitVec;
use crate::construct::{Provenance, SidonSet};
use crate::error::{Error, Result};
use crate::group::Group;

/// Exact difference-set data for one Sidon set.
#[derive(Debug, Clone)]
pub struct DifferenceProfile {
    diff_set: BitVec,
    punctured_count: u64,
    deficiency: u64,
    complement: Vec<u64>,
}

impl DifferenceProfile {
    pub fn compute(set: &SidonSet) -> DifferenceProfile {
        let g = set.group();
        let order = g.order() as usize;
        let mut diff_set = BitVec::new(order);
        if !set.is_empty() {
            diff_set.set(g.identity() as usize);
        }
        for &a in set.elements() {
            for &b in set.elements() {
                if a != b {
                    diff_set.set(g.diff(a, b) as usize);
                }
            }
        }
        let total = diff_set.count_ones() as u64;
        let punctured_count = if set.is_empty() { 0 } else { total - 1 };
        let complement: Vec<u64> = diff_set.zeros().map(|i| i as u64).collect();
        let deficiency = g.order() - total;
        debug_assert_eq!(deficiency, complement.len() as u64);
        DifferenceProfile {
            diff_set,
            punctured_count,
            deficiency,
            complement,
        }
    }

    /// Membership in A - A (0 included for nonempty A).
    pub fn contains(&self, idx: u64) -> bool {
        self.diff_set.get(idx as usize)
    }

    /// |A ⊖ A|, zero excluded.
    pub fn punctured_count(&self) -> u64 {
        self.punctured_count
    }

    /// d(A) = |X| - |A - A|.
    pub fn deficiency(&self) -> u64 {
        self.deficiency
    }

    /// Sorted elements of X \ (A - A).
    pub fn complement(&self) -> &[u64] {
        &self.complement
    }

    /// Sorted elements of X \ (A ⊖ A): the complement of the punctured
    /// difference set, which contains the identity whenever A is nonempty.
    /// This is the set the per-family closed forms describe.
    pub fn punctured_complement(&self, group: &Group) -> Vec<u64> {
        let id = group.identity();
        let mut out = self.complement.clone();
        if self.diff_set.get(id as usize) {
            out.push(id);
            out.sort_unstable();
        }
        out
    }
}

/// Closed-form prediction of X \ (A ⊖ A) for the six construction
/// families. The identity always belongs to the prediction (it is never a
/// nonzero difference); compare against
/// `DifferenceProfile::punctured_complement`.
pub fn predicted_complement(set: &SidonSet) -> Result<Vec<u64>> {
    let g = set.group();
    let mut out: Vec<u64> = match set.provenance() {
        // All multiples of q+1 in Z_{q^2-1}.
        Provenance::BoseChowla { q, h: 2 } => {
            (0..).map(|m| m * (q + 1)).take_while(|&x| x < g.order()).collect()
        }
        // The punctured difference set covers everything but zero.
        Provenance::Singer { .. } => vec![0],
        // Multiples of p and of p-1 in Z_{p^2-p}.
        Provenance::Ruzsa { p, .. } => {
            let mut v: Vec<u64> = (0..).map(|m| m * p).take_while(|&x| x < g.order()).collect();
            v.extend(
                (1..)
                    .map(|m| m * (p - 1))
                    .take_while(|&x| x < g.order()),
            );
            v
        }
        // The vertical line {(0, z): z in F_p}.
        Provenance::Cartesian1 { p } => (0..p).map(|z| g.index_of_pair(0, z)).collect(),
        // {(0, z): z in F_p*} plus {(z, 1): z in F_p*}; the two lines are
        // disjoint here since (0, 1) only lies on the first.
        Provenance::Cartesian2 { p } => {
            let mut v: Vec<u64> = (1..p).map(|z| g.index_of_pair(0, z)).collect();
            v.extend((1..p).map(|z| g.index_of_pair(z, 1)));
            v
        }
        // {(1, z)}, {(z, 1)} and the diagonal {(z, z)}, z in F_p*; all
        // three lines share (1, 1), removed by the dedup below.
        Provenance::Cartesian3 { p, .. } => {
            let mut v: Vec<u64> = (1..p).map(|z| g.index_of_pair(1, z)).collect();
            v.extend((1..p).map(|z| g.index_of_pair(z, 1)));
            v.extend((1..p).map(|z| g.index_of_pair(z, z)));
            v
        }
        other => return Err(Error::UnsupportedProvenance(other.to_string())),
    };
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// One solution of z = a1 - a2 + a3 with all entries in the set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Tuple {
    pub a1: u64,
    pub a2: u64,
    pub a3: u64,
}

/// All tuples for one z, sorted by first coordinate (which determines the
/// tuple: two distinct tuples differ in both their first and their third
/// coordinate).
#[derive(Debug, Clone)]
pub struct TupleSet {
    pub z: u64,
    pub tuples: Vec<Tuple>,
}

impl TupleSet {
    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }
}

/// Reusable index turning the cubic T(z) definition into an O(|A|) query:
/// each nonzero difference value maps to its unique ordered pair. The build
/// asserts uniqueness, which is exactly the Sidon property.
pub struct TupleIndex<'a> {
    set: &'a SidonSet,
    /// diff value -> (minuend, subtrahend), u32::MAX when absent.
    pair_of_diff: Vec<(u32, u32)>,
    in_set: BitVec,
}

const NO_PAIR: (u32, u32) = (u32::MAX, u32::MAX);

impl<'a> TupleIndex<'a> {
    pub fn new(set: &'a SidonSet) -> TupleIndex<'a> {
        let g = set.group();
        let order = g.order() as usize;
        assert!(order < u32::MAX as usize, "group too large for the index");
        let mut pair_of_diff = vec![NO_PAIR; order];
        let mut in_set = BitVec::new(order);
        for &a in set.elements() {
            in_set.set(a as usize);
        }
        for &a in set.elements() {
            for &b in set.elements() {
                if a == b {
                    continue;
                }
                let d = g.diff(a, b) as usize;
                assert_eq!(
                    pair_of_diff[d], NO_PAIR,
                    "difference value repeated; the set is not Sidon"
                );
                pair_of_diff[d] = (a as u32, b as u32);
            }
        }
        TupleIndex {
            set,
            pair_of_diff,
            in_set,
        }
    }

    pub fn set(&self) -> &SidonSet {
        self.set
    }

    /// All (a1, a2, a3) with z = a1 - a2 + a3, for z outside the set.
    ///
    /// For each a1 the value z - a1 is nonzero (z is not in A) and, when it
    /// is a difference a3 - a2 at all, that representation is unique; so
    /// each a1 contributes at most one tuple.
    pub fn tuple_set(&self, z: u64) -> Result<TupleSet> {
        let g = self.set.group();
        debug_assert!(g.contains(z));
        if self.in_set.get(z as usize) {
            return Err(Error::ZInSet(z));
        }
        let mut tuples = Vec::new();
        for &a1 in self.set.elements() {
            let w = g.diff(z, a1);
            let (u, v) = self.pair_of_diff[w as usize];
            if (u, v) == NO_PAIR {
                continue;
            }
            let t = Tuple {
                a1,
                a2: v as u64,
                a3: u as u64,
            };
            debug_assert_eq!(g.op(g.diff(t.a1, t.a2), t.a3), z);
            tuples.push(t);
        }
        Ok(TupleSet { z, tuples })
    }
}

/// Convenience one-shot query; sweeps should build a `TupleIndex` once.
pub fn tuple_set(set: &SidonSet, z: u64) -> Result<TupleSet> {
    TupleIndex::new(set).tuple_set(z)
}

/// Degenerate-path flags for one tuple relative to a decomposition
/// z = x + y. A clear triple of flags is a genuine 3-path from x to y.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DegenerateFlags {
    /// a1 - x collides with x, i.e. a1 = x + x.
    pub first_hits_x: bool,
    /// a3 - y collides with y, i.e. a3 = y + y.
    pub third_hits_y: bool,
    /// The two middle vertices coincide: a1 - x = a3 - y.
    pub middle_collapses: bool,
}

impl DegenerateFlags {
    pub fn any(&self) -> bool {
        self.first_hits_x || self.third_hits_y || self.middle_collapses
    }
}

/// Per-tuple classification of T(x+y) against the decomposition {x, y}.
#[derive(Debug, Clone)]
pub struct TupleClassification {
    pub flags: Vec<DegenerateFlags>,
}

impl TupleClassification {
    /// Tuples generating a genuine path of length 3 between x and y, each
    /// of which closes a distinct 4-cycle once the edge xy is added.
    pub fn genuine_count(&self) -> u64 {
        self.flags.iter().filter(|f| !f.any()).count() as u64
    }

    /// Distinct tuples hit by at least one collision case.
    pub fn degenerate_count(&self) -> u64 {
        self.flags.iter().filter(|f| f.any()).count() as u64
    }

    /// Tuples per collision case; each count is at most 1 because each case
    /// is keyed by a coordinate that determines the tuple.
    pub fn per_case_counts(&self) -> (u64, u64, u64) {
        let b = self.flags.iter().filter(|f| f.first_hits_x).count() as u64;
        let c = self.flags.iter().filter(|f| f.third_hits_y).count() as u64;
        let d = self.flags.iter().filter(|f| f.middle_collapses).count() as u64;
        (b, c, d)
    }
}

/// Labels every tuple of `t` against the decomposition x + y = z.
pub fn classify_degenerate(
    t: &TupleSet,
    group: &Group,
    x: u64,
    y: u64,
) -> Result<TupleClassification> {
    if x == y {
        return Err(Error::SameVertex(x));
    }
    let z = group.op(x, y);
    if z != t.z {
        return Err(Error::DecompositionMismatch { got: z, want: t.z });
    }
    let double_x = group.double(x);
    let double_y = group.double(y);
    let xy = group.diff(x, y);
    let flags = t
        .tuples
        .iter()
        .map(|tu| DegenerateFlags {
            first_hits_x: tu.a1 == double_x,
            third_hits_y: tu.a3 == double_y,
            middle_collapses: group.diff(tu.a1, tu.a3) == xy,
        })
        .collect();
    Ok(TupleClassification { flags })
}

/// Whether no single element can be added while keeping the set Sidon.
/// Direct extension test: z survives only if the fresh differences z - a and
/// a - z avoid the existing difference set and each other.
pub fn is_maximal(set: &SidonSet) -> bool {
    let g = set.group();
    let order = g.order() as usize;
    let profile = DifferenceProfile::compute(set);
    let mut in_set = BitVec::new(order);
    for &a in set.elements() {
        in_set.set(a as usize);
    }
    let mut mark = vec![0u32; order];
    let mut epoch = 0u32;
    'candidates: for z in 0..g.order() {
        if in_set.get(z as usize) {
            continue;
        }
        epoch += 1;
        for &a in set.elements() {
            for d in [g.diff(z, a), g.diff(a, z)] {
                let d = d as usize;
                if profile.contains(d as u64) || mark[d] == epoch {
                    continue 'candidates;
                }
                mark[d] = epoch;
            }
        }
        return false; // z extends the set
    }
    true
}
