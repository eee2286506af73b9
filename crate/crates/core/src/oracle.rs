//! Deliberately naive baselines that share no code with the fast paths:
//! quadruple-loop Sidon testing, codegree 4-cycle counting, cubic T(z)
//! enumeration, and branch-and-bound maximum Sidon search on tiny groups.
//! Even the group arithmetic is re-derived here so a bug in the main
//! implementation cannot cancel out in a differential test.

use crate::error::{Error, Result};
use crate::group::Group;

const SIDON_BUDGET: usize = 64;
const C4_VERTEX_BUDGET: u64 = 1 << 12;
const TUPLE_BUDGET: usize = 128;
const MAX_SIDON_CYCLIC_BUDGET: u64 = 60;
const MAX_SIDON_INTERVAL_BUDGET: u64 = 40;

/// Group operation written from scratch: components are decoded with plain
/// div/mod, combined with i128 arithmetic, and multiplicative inverses are
/// found by scanning for the unit product.
fn raw_op(g: &Group, a: u64, b: u64) -> u64 {
    match *g {
        Group::Cyclic { n } => ((a as u128 + b as u128) % n as u128) as u64,
        Group::AddAdd { p } => {
            let (a1, a2) = (a / p, a % p);
            let (b1, b2) = (b / p, b % p);
            ((a1 + b1) % p) * p + (a2 + b2) % p
        }
        Group::AddMul { p } => {
            let w = p - 1;
            let (a1, a2) = (a / w, a % w + 1);
            let (b1, b2) = (b / w, b % w + 1);
            ((a1 + b1) % p) * w + (a2 * b2 % p - 1)
        }
        Group::MulMul { p } => {
            let w = p - 1;
            let (a1, a2) = (a / w + 1, a % w + 1);
            let (b1, b2) = (b / w + 1, b % w + 1);
            (a1 * b1 % p - 1) * w + (a2 * b2 % p - 1)
        }
    }
}

/// Inverse mod p by exhaustive scan.
fn raw_inv_mod(x: u64, p: u64) -> u64 {
    (1..p).find(|&t| x * t % p == 1).expect("unit in F_p*")
}

fn raw_neg(g: &Group, a: u64) -> u64 {
    match *g {
        Group::Cyclic { n } => (n - a) % n,
        Group::AddAdd { p } => {
            let (a1, a2) = (a / p, a % p);
            ((p - a1) % p) * p + (p - a2) % p
        }
        Group::AddMul { p } => {
            let w = p - 1;
            let (a1, a2) = (a / w, a % w + 1);
            ((p - a1) % p) * w + (raw_inv_mod(a2, p) - 1)
        }
        Group::MulMul { p } => {
            let w = p - 1;
            let (a1, a2) = (a / w + 1, a % w + 1);
            (raw_inv_mod(a1, p) - 1) * w + (raw_inv_mod(a2, p) - 1)
        }
    }
}

fn raw_diff(g: &Group, a: u64, b: u64) -> u64 {
    raw_op(g, a, raw_neg(g, b))
}

/// Literal reading of the defining implication: a + b = c + d forces
/// {a, b} = {c, d}, over all quadruples.
pub fn oracle_sidon(group: &Group, elements: &[u64]) -> Result<bool> {
    if elements.len() > SIDON_BUDGET {
        return Err(Error::SizeExceeded {
            requested: elements.len() as u64,
            budget: SIDON_BUDGET as u64,
        });
    }
    for &a in elements {
        for &b in elements {
            for &c in elements {
                for &d in elements {
                    if raw_op(group, a, b) == raw_op(group, c, d) {
                        let same = (a == c && b == d) || (a == d && b == c);
                        if !same {
                            return Ok(false);
                        }
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Total number of 4-cycle subgraphs: half the sum over unordered vertex
/// pairs of C(codegree, 2), each cycle being counted once per diagonal.
pub fn oracle_count_c4(n: u64, edges: &[(u64, u64)]) -> Result<u64> {
    if n > C4_VERTEX_BUDGET {
        return Err(Error::SizeExceeded {
            requested: n,
            budget: C4_VERTEX_BUDGET,
        });
    }
    let n = n as usize;
    let mut adj = vec![false; n * n];
    for &(u, v) in edges {
        assert!(u != v && (u as usize) < n && (v as usize) < n, "bad edge");
        adj[u as usize * n + v as usize] = true;
        adj[v as usize * n + u as usize] = true;
    }
    let mut twice = 0u64;
    for u in 0..n {
        for v in u + 1..n {
            let codeg = (0..n)
                .filter(|&w| adj[u * n + w] && adj[v * n + w])
                .count() as u64;
            twice += codeg * codeg.saturating_sub(1) / 2;
        }
    }
    assert_eq!(twice % 2, 0, "each 4-cycle has exactly two diagonals");
    Ok(twice / 2)
}

/// T(z) by the cubic definition: scan all of A^3 for z = a1 - a2 + a3.
/// Output sorted lexicographically.
pub fn oracle_tuple_set(group: &Group, elements: &[u64], z: u64) -> Result<Vec<(u64, u64, u64)>> {
    if elements.len() > TUPLE_BUDGET {
        return Err(Error::SizeExceeded {
            requested: elements.len() as u64,
            budget: TUPLE_BUDGET as u64,
        });
    }
    if elements.contains(&z) {
        return Err(Error::ZInSet(z));
    }
    let mut out = Vec::new();
    for &a1 in elements {
        for &a2 in elements {
            for &a3 in elements {
                if raw_op(group, raw_diff(group, a1, a2), a3) == z {
                    out.push((a1, a2, a3));
                }
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Exact maximum Sidon set size in Z_n with one witness, by depth-first
/// branch and bound. Any nonempty Sidon set translates to one containing 0,
/// so the search roots there.
pub fn oracle_max_sidon_cyclic(n: u64) -> Result<(usize, Vec<u64>)> {
    if n > MAX_SIDON_CYCLIC_BUDGET {
        return Err(Error::SizeExceeded {
            requested: n,
            budget: MAX_SIDON_CYCLIC_BUDGET,
        });
    }
    assert!(n >= 1);
    let mut best: (usize, Vec<u64>) = (1, vec![0]);
    let mut current = vec![0u64];
    let mut used = vec![false; n as usize];
    search_cyclic(n, &mut current, &mut used, &mut best);
    Ok(best)
}

fn search_cyclic(n: u64, current: &mut Vec<u64>, used: &mut [bool], best: &mut (usize, Vec<u64>)) {
    let last = *current.last().unwrap();
    for cand in last + 1..n {
        // Remaining-room bound: even taking every larger value cannot help.
        if current.len() + (n - cand) as usize <= best.0 {
            break;
        }
        let mut taken: Vec<u64> = Vec::with_capacity(2 * current.len());
        let mut ok = true;
        for &a in current.iter() {
            let d1 = (cand + n - a) % n;
            let d2 = (a + n - cand) % n;
            for d in [d1, d2] {
                if used[d as usize] || taken.contains(&d) {
                    ok = false;
                    break;
                }
                taken.push(d);
            }
            if !ok {
                break;
            }
        }
        if !ok {
            continue;
        }
        for &d in &taken {
            used[d as usize] = true;
        }
        current.push(cand);
        if current.len() > best.0 {
            *best = (current.len(), current.clone());
        }
        search_cyclic(n, current, used, best);
        current.pop();
        for &d in &taken {
            used[d as usize] = false;
        }
    }
}

/// Exact maximum size of a Sidon set inside the integer interval [1, n],
/// with one witness. The maximum is translation invariant, so the search
/// roots at 1.
pub fn oracle_max_sidon_interval(n: u64) -> Result<(usize, Vec<u64>)> {
    if n > MAX_SIDON_INTERVAL_BUDGET {
        return Err(Error::SizeExceeded {
            requested: n,
            budget: MAX_SIDON_INTERVAL_BUDGET,
        });
    }
    assert!(n >= 1);
    let mut best: (usize, Vec<u64>) = (1, vec![1]);
    let mut current = vec![1u64];
    let mut used = vec![false; n as usize];
    search_interval(n, &mut current, &mut used, &mut best);
    Ok(best)
}

fn search_interval(
    n: u64,
    current: &mut Vec<u64>,
    used: &mut [bool],
    best: &mut (usize, Vec<u64>),
) {
    let last = *current.last().unwrap();
    for cand in last + 1..=n {
        if current.len() + (n - cand + 1) as usize <= best.0 {
            break;
        }
        // In the integers the differences cand - a are distinct for distinct
        // a automatically; only collisions with previous differences matter.
        let diffs: Vec<u64> = current.iter().map(|&a| cand - a).collect();
        if diffs.iter().any(|&d| used[d as usize - 1]) {
            continue;
        }
        for &d in &diffs {
            used[d as usize - 1] = true;
        }
        current.push(cand);
        if current.len() > best.0 {
            *best = (current.len(), current.clone());
        }
        search_interval(n, current, used, best);
        current.pop();
        for &d in &diffs {
            used[d as usize - 1] = false;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::Budget;
    use crate::construct::SidonSet;
    use crate::graph::SumGraph;

    #[test]
    fn oracle_sidon_examples() {
        let z7 = Group::cyclic(7).unwrap();
        assert!(oracle_sidon(&z7, &[0, 1, 3]).unwrap());
        let z10 = Group::cyclic(10).unwrap();
        assert!(!oracle_sidon(&z10, &[1, 2, 3]).unwrap()); // 1 + 3 = 2 + 2
        assert!(oracle_sidon(&z10, &[4]).unwrap());
    }

    #[test]
    fn oracle_sidon_budget() {
        let g = Group::cyclic(1000).unwrap();
        let too_many: Vec<u64> = (0..65).collect();
        assert!(matches!(
            oracle_sidon(&g, &too_many),
            Err(Error::SizeExceeded { .. })
        ));
    }

    #[test]
    fn k4_has_three_cycles() {
        let edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        assert_eq!(oracle_count_c4(4, &edges).unwrap(), 3);
    }

    #[test]
    fn constructed_graphs_count_zero() {
        for s in [
            SidonSet::singer(3, Budget::default()).unwrap(),
            SidonSet::ruzsa(5, None).unwrap(),
            SidonSet::cartesian2(5).unwrap(),
        ] {
            let g = SumGraph::build(&s, Budget::default()).unwrap();
            assert_eq!(
                oracle_count_c4(g.vertex_count(), &g.edges()).unwrap(),
                0,
                "{}",
                s.provenance()
            );
        }
    }

    #[test]
    fn oracle_tuples_singer_q2() {
        let s = SidonSet::singer(2, Budget::default()).unwrap();
        let ts = oracle_tuple_set(s.group(), s.elements(), 2).unwrap();
        assert_eq!(ts, vec![(0, 1, 3), (1, 0, 1), (3, 1, 0)]);
        assert_eq!(
            oracle_tuple_set(s.group(), s.elements(), 1).unwrap_err(),
            Error::ZInSet(1)
        );
    }

    #[test]
    fn max_sidon_interval_7() {
        let (size, witness) = oracle_max_sidon_interval(7).unwrap();
        assert_eq!(size, 4);
        assert_eq!(witness, vec![1, 2, 5, 7]);
    }

    #[test]
    fn max_sidon_z7() {
        let (size, witness) = oracle_max_sidon_cyclic(7).unwrap();
        assert_eq!(size, 3);
        assert_eq!(witness, vec![0, 1, 3]);
    }

    #[test]
    fn max_sidon_respects_counting_bound() {
        for n in 1..=30u64 {
            let (size, witness) = oracle_max_sidon_cyclic(n).unwrap();
            let k = size as u64;
            // k(k-1) nonzero differences must fit in n - 1 slots.
            assert!(k * (k - 1) <= n.saturating_sub(1), "n={n}");
            let g = Group::cyclic(n).unwrap();
            assert!(oracle_sidon(&g, &witness).unwrap());
        }
    }

    #[test]
    fn max_sidon_budgets() {
        assert!(matches!(
            oracle_max_sidon_cyclic(61),
            Err(Error::SizeExceeded { .. })
        ));
        assert!(matches!(
            oracle_max_sidon_interval(41),
            Err(Error::SizeExceeded { .. })
        ));
    }

    #[test]
    fn raw_ops_match_group_module() {
        let groups = [
            Group::cyclic(12).unwrap(),
            Group::add_add(5).unwrap(),
            Group::add_mul(7).unwrap(),
            Group::mul_mul(7).unwrap(),
        ];
        for g in groups {
            for a in 0..g.order() {
                for b in 0..g.order() {
                    assert_eq!(raw_op(&g, a, b), g.op(a, b));
                    assert_eq!(raw_diff(&g, a, b), g.diff(a, b));
                }
                assert_eq!(raw_neg(&g, a), g.inv(a));
            }
        }
    }
}
