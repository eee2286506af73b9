//! Randomized invariants over the algebra layers.

use proptest::prelude::*;

use sidon_graphs::oracle::oracle_sidon;
use sidon_graphs::{verify_sidon, Budget, FiniteField, Group, SidonSet};

const PRIMES: &[u64] = &[3, 5, 7, 11, 13, 101, 139];

fn group_for(variant: usize, p: u64, n: u64) -> Group {
    match variant {
        0 => Group::cyclic(n).unwrap(),
        1 => Group::add_add(p).unwrap(),
        2 => Group::add_mul(p).unwrap(),
        _ => Group::mul_mul(p).unwrap(),
    }
}

proptest! {
    // The quadratic-time Sidon test and the literal quadruple-loop oracle
    // agree on arbitrary subsets of arbitrary cyclic groups.
    #[test]
    fn sidon_testers_agree(n in 2u64..=100, raw in prop::collection::vec(0u64..10_000, 0..7)) {
        let g = Group::cyclic(n).unwrap();
        let mut elements: Vec<u64> = raw.into_iter().map(|x| x % n).collect();
        elements.sort_unstable();
        elements.dedup();
        prop_assert_eq!(
            verify_sidon(&g, &elements),
            oracle_sidon(&g, &elements).unwrap()
        );
    }

    // Abelian group laws on random triples across all four variants,
    // including the ~20k-element groups the sweeps use.
    #[test]
    fn group_laws_random_triples(
        variant in 0usize..4,
        prime_idx in 0usize..PRIMES.len(),
        n in 1u64..=20_000,
        seeds in [any::<u64>(); 3],
    ) {
        let p = PRIMES[prime_idx];
        let g = group_for(variant, p, n);
        let order = g.order();
        let (a, b, c) = (seeds[0] % order, seeds[1] % order, seeds[2] % order);
        let e = g.identity();
        prop_assert_eq!(g.op(g.op(a, b), c), g.op(a, g.op(b, c)));
        prop_assert_eq!(g.op(a, b), g.op(b, a));
        prop_assert_eq!(g.op(a, e), a);
        prop_assert_eq!(g.op(a, g.inv(a)), e);
        prop_assert_eq!(g.inv(g.inv(a)), a);
        // diff undoes op.
        prop_assert_eq!(g.diff(g.op(a, b), b), a);
    }

    // Canonical index <-> component pair is a bijection.
    #[test]
    fn index_pair_roundtrip(
        variant in 0usize..4,
        prime_idx in 0usize..PRIMES.len(),
        n in 1u64..=65_536,
        seed in any::<u64>(),
    ) {
        let p = PRIMES[prime_idx];
        let g = group_for(variant, p, n);
        let idx = seed % g.order();
        let (x, y) = g.pair(idx);
        prop_assert_eq!(g.index_of_pair(x, y), idx);
    }

    // Frobenius is additive in every characteristic; spot-checked on
    // random pairs in a mid-sized extension field.
    #[test]
    fn frobenius_additive_random(pk in 0usize..3, seeds in [any::<u64>(); 2]) {
        let (p, k) = [(2u64, 10u32), (3, 6), (13, 3)][pk];
        let f = FiniteField::new(p, k, Budget::default()).unwrap();
        let a = f.element(seeds[0] % f.order()).unwrap();
        let b = f.element(seeds[1] % f.order()).unwrap();
        prop_assert_eq!(f.pow(f.add(a, b), p), f.add(f.pow(a, p), f.pow(b, p)));
    }

    // Discrete logs turn multiplication into addition mod q - 1.
    #[test]
    fn discrete_log_additive_random(pk in 0usize..3, seeds in [any::<u64>(); 2]) {
        let (p, k) = [(2u64, 10u32), (3, 6), (13, 3)][pk];
        let f = FiniteField::new(p, k, Budget::default()).unwrap();
        let a = f.element(1 + seeds[0] % (f.order() - 1)).unwrap();
        let b = f.element(1 + seeds[1] % (f.order() - 1)).unwrap();
        let lhs = f.discrete_log(f.mul(a, b)).unwrap();
        let rhs = (f.discrete_log(a).unwrap() + f.discrete_log(b).unwrap()) % (f.order() - 1);
        prop_assert_eq!(lhs, rhs);
    }
}

// Exhaustive group laws for every ambient group in the table sweeps (the
// product groups stay well under 2^10 elements there).
#[test]
fn group_laws_exhaustive_sweep_groups() {
    let mut groups = vec![];
    for &q in &[2u64, 3, 4, 5, 7, 8, 9, 11, 13] {
        groups.push(Group::cyclic(q * q + q + 1).unwrap());
        groups.push(Group::cyclic(q * q - 1).unwrap());
    }
    for &p in &[3u64, 5, 7, 11, 13] {
        groups.push(Group::cyclic(p * p - p).unwrap());
        groups.push(Group::add_add(p).unwrap());
        groups.push(Group::add_mul(p).unwrap());
        groups.push(Group::mul_mul(p).unwrap());
    }
    groups.sort_by_key(|g| g.order());
    groups.dedup();
    for g in groups {
        let order = g.order();
        let e = g.identity();
        for a in 0..order {
            assert_eq!(g.op(a, e), a);
            assert_eq!(g.op(a, g.inv(a)), e);
            let (x, y) = g.pair(a);
            assert_eq!(g.index_of_pair(x, y), a);
            for b in 0..order {
                assert_eq!(g.op(a, b), g.op(b, a));
                for c in 0..order {
                    assert_eq!(g.op(g.op(a, b), c), g.op(a, g.op(b, c)));
                }
            }
        }
    }
}

// Exhaustive encode/decode bijection for the large ambient groups (up to
// 2^16 elements), including the ~19k-element sweep groups.
#[test]
fn index_pair_bijection_exhaustive_large() {
    let groups = vec![
        Group::cyclic(1 << 16).unwrap(),
        Group::cyclic(19320).unwrap(),
        Group::add_add(139).unwrap(),
        Group::add_mul(139).unwrap(),
        Group::mul_mul(139).unwrap(),
    ];
    for g in groups {
        for idx in 0..g.order() {
            let (x, y) = g.pair(idx);
            assert_eq!(g.index_of_pair(x, y), idx);
        }
    }
}

// The exp map of every sweep field enumerates the full multiplicative
// group without repetition (q up to 2^12 here; the table build re-asserts
// this for every field it ever constructs).
#[test]
fn exp_map_bijective_sweep_fields() {
    for (p, k) in [
        (2u64, 2u32),
        (2, 3),
        (2, 4),
        (2, 6),
        (2, 9),
        (3, 2),
        (3, 4),
        (3, 6),
        (5, 2),
        (7, 2),
        (11, 2),
        (13, 2),
        (13, 3),
    ] {
        let f = FiniteField::new(p, k, Budget::default()).unwrap();
        let mut seen = vec![false; f.order() as usize];
        for m in 0..f.order() - 1 {
            let x = f.power_of_primitive(m);
            assert!(!seen[x.index() as usize], "repeat at exponent {m}");
            seen[x.index() as usize] = true;
        }
        assert!(!seen[0], "zero is not a power of the primitive element");
    }
}

// Every constructed family instance round-trips through the text format.
#[test]
fn text_format_roundtrip_all_families() {
    let sets = vec![
        SidonSet::bose_chowla(9, 2, Budget::default()).unwrap(),
        SidonSet::singer(5, Budget::default()).unwrap(),
        SidonSet::ruzsa(11, None).unwrap(),
        SidonSet::cartesian1(11).unwrap(),
        SidonSet::cartesian2(11).unwrap(),
        SidonSet::cartesian3(11, 3).unwrap(),
    ];
    for s in sets {
        let mut buf = Vec::new();
        s.to_writer(&mut buf).unwrap();
        let back = SidonSet::from_reader(&buf[..]).unwrap();
        assert_eq!(back.group(), s.group());
        assert_eq!(back.elements(), s.elements());
    }
}
