//! Root systems checked against an independent enumeration: in a
//! simply-laced lattice the roots are exactly the vectors of squared
//! length 2, so a box search over coefficient vectors recovers them
//! without using reflections.

use std::collections::{BTreeSet, HashSet};

use lietower_core::{Root, RootSystem, RootSystemType};

fn norm_two_vectors(rs: &RootSystem, bound: i32) -> HashSet<Root> {
    let n = rs.rank();
    let mut out = HashSet::new();
    let mut c = vec![-bound; n];
    loop {
        let r = Root::new(&c);
        if !r.is_zero() && rs.pairing(&r, &r) == 2 {
            out.insert(r);
        }
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            c[i] += 1;
            if c[i] <= bound {
                break;
            }
            c[i] = -bound;
            i += 1;
        }
    }
}

#[test]
fn reflection_closure_matches_lattice_enumeration() {
    for (kind, bound, count) in [(RootSystemType::E6, 3, 72), (RootSystemType::E7, 4, 126)] {
        let rs = RootSystem::new(kind);
        let oracle = norm_two_vectors(&rs, bound);
        assert_eq!(oracle.len(), count);
        let built: HashSet<Root> = rs.roots().iter().copied().collect();
        assert_eq!(built, oracle, "{kind}");
    }
}

#[test]
fn highest_root_is_maximal_height_and_dominant() {
    for (kind, expected) in [
        (RootSystemType::E6, vec![1, 2, 2, 3, 2, 1]),
        (RootSystemType::E7, vec![2, 2, 3, 4, 3, 2, 1]),
    ] {
        let rs = RootSystem::new(kind);
        let tallest = rs.positive_roots().max_by_key(|r| r.height()).unwrap();
        assert_eq!(*tallest, Root::new(&expected));
        assert_eq!(rs.highest_root(), *tallest);
        assert!(rs.positive_roots().all(|a| rs.highest_root().dominates(a)));
    }
}

#[test]
fn closure_and_symmetry_invariants() {
    for kind in RootSystemType::ALL {
        let rs = RootSystem::new(kind);
        let n = rs.rank();
        for r in rs.roots() {
            assert!(rs.contains(&-*r));
            assert!(r.is_positive() || r.is_negative());
            for i in 1..=n {
                let a = rs.simple(i);
                let image = *r - rs.pairing(r, &a) * a;
                assert!(rs.contains(&image));
            }
            assert_eq!(rs.pairing(r, r), 2);
            for s in rs.roots() {
                assert!((-2..=2).contains(&rs.pairing(r, s)));
            }
        }
        assert_eq!(rs.positive_roots().count() * 2, rs.roots().len());
        // Diagram: α2 hangs off α4, the rest is a chain.
        assert_eq!(rs.pairing(&rs.simple(2), &rs.simple(4)), -1);
        for i in 1..n {
            let j = match i {
                1 => 3,
                2 => continue,
                3 => 4,
                k => k + 1,
            };
            if j <= n {
                assert_eq!(rs.pairing(&rs.simple(i), &rs.simple(j)), -1);
            }
        }
    }
}

#[test]
fn component_detection_round_trips() {
    let rs = RootSystem::new(RootSystemType::E7);
    let n = rs.rank();
    // Every connected subset of nodes.
    for mask in 1u32..(1 << n) {
        let keep: BTreeSet<usize> = (1..=n).filter(|i| mask & (1 << (i - 1)) != 0).collect();
        let sub = rs.subsystem(&keep).unwrap();
        for comp in &sub.components {
            assert_eq!(comp.positive.len() * 2, comp.kind.root_count(), "{keep:?}");
            assert_eq!(comp.kind.rank(), comp.simple.len());
        }
    }
}
