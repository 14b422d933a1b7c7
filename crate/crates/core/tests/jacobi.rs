use lietower_core::{ChevalleyAlgebra, RootSystem, RootSystemType};

#[test]
fn jacobi_identity_on_every_basis_triple() {
    for kind in RootSystemType::ALL {
        let alg = ChevalleyAlgebra::new(&RootSystem::new(kind)).unwrap();
        let stats = alg.jacobi_exhaustive();
        let d = alg.dimension();
        assert_eq!(stats.triples, d * (d + 1) * (d + 2) / 6);
        assert_eq!(stats.failures, 0, "{kind}");
    }
}

#[test]
fn string_property_for_simply_laced_constants() {
    for kind in RootSystemType::ALL {
        let rs = RootSystem::new(kind);
        let alg = ChevalleyAlgebra::new(&rs).unwrap();
        for a in rs.roots() {
            for b in rs.roots() {
                let n = alg.structure_constant(a, b);
                if rs.contains(&(*a + *b)) {
                    // p = 0 in a simply-laced system: b - a is never a root
                    // when a + b is one.
                    assert!(!rs.contains(&(*b - *a)));
                    assert_eq!(n.abs(), 1);
                } else {
                    assert_eq!(n, 0);
                }
            }
        }
    }
}
