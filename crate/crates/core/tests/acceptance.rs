//! Acceptance run: one PASS/FAIL line per criterion, exact equality only.
//! Expected numbers are literals or recomputed here from first principles.

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;

use lietower_core::chevalley::AlgElement;
use lietower_core::linalg::{rat, ratio, Rational};
use lietower_core::parabolic::{
    decompose, grading_violations, principal_series_codim, rank3_orbit_dim, ParabolicDecomposition,
};
use lietower_core::structures::basis::derived_levi_basis;
use lietower_core::structures::form::{classify_character, spectrum_identity_holds, spectrum_vector, unit};
use lietower_core::structures::golden::compare_set;
use lietower_core::structures::omega::{block_defects, omega_partition, polarization_defects};
use lietower_core::structures::orbit::{
    component_stabilizers, induced_heisenberg_rank, stabilizer_dim, trivially_acting_components,
};
use lietower_core::structures::CharacterClass;
use lietower_core::{kernel_dim, verify_all, CheckStatus, GoldenTables, Mode, Root, RootSystemType, Structures};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const GOLDEN: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/../../data/golden_tables.txt");

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn(&Ctx) -> Outcome);

struct Ctx {
    e6: Structures,
    e7: Structures,
    golden: GoldenTables,
}

impl Ctx {
    fn both(&self) -> [&Structures; 2] {
        [&self.e6, &self.e7]
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn eq<T: PartialEq + std::fmt::Debug>(what: &str, expected: T, actual: T) -> Outcome {
    ensure(expected == actual, || {
        format!("{what}: expected {expected:?}, got {actual:?}")
    })
}

fn root(c: &[i32]) -> Root {
    Root::new(c)
}

/// Nilpotency class by brute force on root vectors: the length of the lower
/// central series of the span of `roots`.
fn nilpotency_class(st: &Structures, roots: &[Root]) -> usize {
    let all: BTreeSet<Root> = roots.iter().copied().collect();
    let mut current = all.clone();
    let mut class = 0;
    while !current.is_empty() {
        class += 1;
        let mut next = BTreeSet::new();
        for a in &all {
            for b in &current {
                if st.alg.structure_constant(a, b) != 0 {
                    next.insert(*a + *b);
                }
            }
        }
        current = next;
    }
    class
}

/// Roots of the span that bracket to zero with everything.
fn center_roots(st: &Structures, roots: &[Root]) -> Vec<Root> {
    roots
        .iter()
        .filter(|a| roots.iter().all(|b| st.alg.structure_constant(a, b) == 0))
        .copied()
        .collect()
}

/// Heisenberg test on root vectors: class two, center the single line
/// `top`, and every other root pairs with exactly one partner into `top`.
fn is_heisenberg(st: &Structures, roots: &[Root], top: Root) -> bool {
    if center_roots(st, roots) != [top] || nilpotency_class(st, roots) != 2 {
        return false;
    }
    roots.iter().filter(|a| **a != top).all(|a| {
        let partners: Vec<&Root> = roots.iter().filter(|b| st.alg.structure_constant(a, b) != 0).collect();
        partners.len() == 1 && *a + *partners[0] == top
    })
}

fn criterion_1(ctx: &Ctx) -> Outcome {
    // Coxeter numbers 12 and 18: |Φ| = rank · h.
    for (st, coxeter, highest) in [
        (&ctx.e6, 12, root(&[1, 2, 2, 3, 2, 1])),
        (&ctx.e7, 18, root(&[2, 2, 3, 4, 3, 2, 1])),
    ] {
        let rs = st.alg.root_system();
        eq("root count", rs.rank() * coxeter, rs.roots().len())?;
        eq("positive roots", rs.rank() * coxeter / 2, rs.num_positive())?;
        eq("highest root", highest, rs.highest_root())?;
        for i in 1..=rs.rank() {
            ensure(!rs.contains(&(highest + rs.simple(i))), || {
                format!("{highest} + α{i} is a root")
            })?;
        }
    }
    Ok(())
}

fn criterion_2(ctx: &Ctx) -> Outcome {
    for (st, p_dim, q_dim, r_dim, r_center, r_levi) in
        [(&ctx.e6, 16, 21, 24, 8, "D4"), (&ctx.e7, 27, 33, 42, 10, "A1xD5")]
    {
        let (p, q, r) = (&st.p.nilradical_roots, &st.q.nilradical_roots, &st.r.nilradical_roots);
        eq("P nilradical dim", p_dim, p.len())?;
        eq("P nilradical class", 1, nilpotency_class(st, p))?;
        eq("Q nilradical dim", q_dim, q.len())?;
        ensure(is_heisenberg(st, q, st.alg.root_system().highest_root()), || {
            "Q nilradical is not Heisenberg".into()
        })?;
        eq("R nilradical dim", r_dim, r.len())?;
        eq("R nilradical class", 2, nilpotency_class(st, r))?;
        eq("R center dim", r_center, center_roots(st, r).len())?;
        eq("R Levi", r_levi.to_string(), st.r.levi.type_label())?;
    }
    Ok(())
}

fn criterion_3(ctx: &Ctx) -> Outcome {
    for (st, dims, residual) in [
        (&ctx.e6, vec![21, 9, 5], BTreeSet::from([4])),
        (&ctx.e7, vec![33, 17, 9], BTreeSet::from([2, 3, 5, 7])),
    ] {
        eq("layer dims", dims, st.tower.layer_dims())?;
        for (layer, beta) in st.tower.layers.iter().zip(&st.tower.betas) {
            ensure(is_heisenberg(st, layer, *beta), || {
                format!("layer with top {beta} is not Heisenberg")
            })?;
        }
        eq("residual nodes", Some(residual), st.tower.residual_nodes())?;
    }
    Ok(())
}

fn criterion_4(ctx: &Ctx) -> Outcome {
    for (st, orbit, codim) in [(&ctx.e6, 32, 15), (&ctx.e7, 56, 26)] {
        // Each Heisenberg layer of dimension 2d+1 contributes 2d.
        let by_hand: usize = st.tower.layer_dims().iter().map(|d| d - 1).sum();
        eq("orbit dim", orbit, by_hand)?;
        eq("library orbit dim", orbit, rank3_orbit_dim(&st.tower))?;
        let bound = principal_series_codim(st.alg.root_system());
        eq("principal series codim", codim, bound.codim)?;
        ensure(2 * codim < orbit, || format!("2·{codim} ≥ {orbit}"))?;
    }
    Ok(())
}

fn criterion_5(ctx: &Ctx) -> Outcome {
    for st in ctx.both() {
        let alg = &st.alg;
        let b = &st.basis;
        let e1 = b.e(1).element(alg);
        let em1 = b.e(-1).element(alg);
        for &i in &b.f_order() {
            for &j in &b.f_order() {
                let br = alg.bracket(&b.e(i).element(alg), &b.f(j).element(alg));
                let want = if i == j { e1.clone() } else { AlgElement::zero() };
                ensure(br == want, || format!("[e_{i}, f_{j}] ≠ δ·e_1"))?;
            }
            let br = alg.bracket(&em1, &b.f(i).element(alg));
            ensure(br == b.e(-i).element(alg).scale(&rat(-1)), || {
                format!("[e_-1, f_{i}] ≠ -e_-{i}")
            })?;
        }
        // f-roots all sit in W and are β1 minus the paired e-root.
        let w: BTreeSet<Root> = st.n3.w.iter().copied().collect();
        let b1 = alg.root_system().highest_root();
        for &i in &b.f_order() {
            ensure(w.contains(&b.f(i).root), || format!("f_{i} not in W"))?;
            eq("f root", b1 - b.e(i).root, b.f(i).root)?;
        }
        eq("e1 root", b1, b.e(1).root)?;
        eq("Z(u) basis size", st.u.zu.len(), b.e_elements(alg).len())?;
    }
    Ok(())
}

fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    ratio(rng.gen_range(-9..=9), rng.gen_range(1..=7))
}

fn random_tsa(rng: &mut ChaCha8Rng, k: usize, s_zero: bool) -> (Rational, Rational, BTreeMap<i32, Rational>) {
    let nonzero = |rng: &mut ChaCha8Rng| loop {
        let q = small_rational(rng);
        if q != rat(0) {
            return q;
        }
    };
    let t = nonzero(rng);
    let s = if s_zero { rat(0) } else { nonzero(rng) };
    let a = (2..=k as i32)
        .flat_map(|i| [i, -i])
        .map(|i| (i, small_rational(rng)))
        .collect();
    (t, s, a)
}

fn criterion_6(ctx: &Ctx) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for st in ctx.both() {
        ensure(spectrum_identity_holds(&st.basis, &st.form), || {
            "polynomial identity fails".into()
        })?;
        for _ in 0..200 {
            let s_zero = rng.gen_bool(0.5);
            let (t, s, a) = random_tsa(&mut rng, st.basis.k, s_zero);
            let sv = spectrum_vector(&st.basis, &st.form, &t, &s, &a).map_err(|e| e.to_string())?;
            let direct = st.form.gram.bilinear(&sv.v, &sv.v);
            eq("⟨v,v⟩", rat(-2) * &t * &s, direct)?;
            let class = classify_character(&st.form, &sv.v);
            eq(
                "class",
                if s_zero {
                    CharacterClass::Small
                } else {
                    CharacterClass::Big
                },
                class,
            )?;
        }
    }
    Ok(())
}

fn criterion_7(ctx: &Ctx) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for st in ctx.both() {
        let n = st.rank() as u32;
        for (s_zero, want) in [(false, 2usize.pow(n - 2)), (true, 2usize.pow(n - 3))] {
            for _ in 0..100 {
                let (t, s, a) = random_tsa(&mut rng, st.basis.k, s_zero);
                let sv = spectrum_vector(&st.basis, &st.form, &t, &s, &a).map_err(|e| e.to_string())?;
                let rank =
                    induced_heisenberg_rank(&st.alg, &st.u, &st.basis, &st.form, &sv.v).map_err(|e| e.to_string())?;
                eq("induced rank", want, rank)?;
            }
        }
    }
    Ok(())
}

fn big_vector(st: &Structures) -> Vec<Rational> {
    unit(&st.basis, 1)
        .iter()
        .zip(unit(&st.basis, -1))
        .map(|(a, b)| a + b)
        .collect()
}

fn criterion_8(ctx: &Ctx) -> Outcome {
    // dim so(3,4) = 21; dim sl2 + dim so(4,5) = 3 + 36.
    for (st, want, components) in [
        (&ctx.e6, 21, vec![("D4".to_string(), 21)]),
        (&ctx.e7, 3 + 36, vec![("A1".to_string(), 3), ("D5".to_string(), 36)]),
    ] {
        let v = big_vector(st);
        let dims = stabilizer_dim(&st.alg, &st.r, &st.basis, &v).map_err(|e| e.to_string())?;
        eq("stabilizer", want, dims.stabilizer)?;
        eq("acting dim", derived_levi_basis(&st.alg, &st.r).len(), dims.acting)?;
        eq("rank-nullity", dims.acting, dims.stabilizer + dims.orbit)?;
        let per: Vec<(String, usize)> = component_stabilizers(&st.alg, &st.r, &st.basis, &v)
            .map_err(|e| e.to_string())?
            .into_iter()
            .map(|(name, d)| (name, d.stabilizer))
            .collect();
        eq("component stabilizers", components, per)?;
    }
    let trivial: Vec<String> = trivially_acting_components(&ctx.e7.alg, &ctx.e7.r, &ctx.e7.basis)
        .map_err(|e| e.to_string())?
        .into_iter()
        .filter(|(_, t)| *t)
        .map(|(n, _)| n)
        .collect();
    eq("trivial E7 factors", vec!["A1".to_string()], trivial)
}

fn criterion_9(ctx: &Ctx) -> Outcome {
    let st = &ctx.e7;
    let rs = st.alg.root_system();
    let betas = [st.tower.betas[0], st.tower.betas[1]];
    let alpha7 = rs.simple(7);
    let part = omega_partition(&st.alg, &st.u, betas[1]).map_err(|e| e.to_string())?;
    eq("blocks", 8, part.blocks.len())?;
    let mut seen = BTreeSet::new();
    for (block, &j) in part.blocks.iter().zip(&part.j_choice) {
        let defects = block_defects(block, j, betas, alpha7, &st.u);
        ensure(defects.is_empty(), || defects.join("; "))?;
        seen.extend(block.iter().copied());
    }
    eq("Ω cover", st.u.omega().into_iter().collect::<BTreeSet<_>>(), seen)?;
    let x1 = ctx.golden.expand(rs, "X1").ok_or("X1 table missing")?;
    let y1 = ctx.golden.expand(rs, "Y1").ok_or("Y1 table missing")?;
    let defects = polarization_defects(&st.alg, &st.u, &st.basis, &st.form, &big_vector(st), &x1, &y1)
        .map_err(|e| e.to_string())?;
    ensure(defects.is_empty(), || defects.join("; "))
}

fn criterion_10(ctx: &Ctx) -> Outcome {
    let mut bad = Vec::new();
    for st in ctx.both() {
        let rs = st.alg.root_system();
        let mut derived: Vec<(String, Vec<Root>)> = vec![
            ("W".into(), st.n3.w.clone()),
            ("Wstar".into(), st.n3.wstar.clone()),
            ("X".into(), st.u.x.clone()),
            ("Y".into(), st.u.y.clone()),
            ("Zu".into(), st.u.zu.clone()),
        ];
        derived.extend(
            st.basis
                .e_order()
                .into_iter()
                .map(|i| (format!("e{i}"), vec![st.basis.e(i).root])),
        );
        derived.extend(
            st.basis
                .f_order()
                .into_iter()
                .map(|i| (format!("f{i}"), vec![st.basis.f(i).root])),
        );
        for (name, roots) in derived {
            let cmp = compare_set(rs, &ctx.golden, &name, &roots.into_iter().collect());
            bad.extend(cmp.mismatches);
        }
    }
    // X1 and Y1 carry an orientation choice: check they split Ω.
    let rs = ctx.e7.alg.root_system();
    let x1 = ctx.golden.expand(rs, "X1").unwrap_or_default();
    let y1 = ctx.golden.expand(rs, "Y1").unwrap_or_default();
    let omega: BTreeSet<Root> = ctx.e7.u.omega().into_iter().collect();
    if !x1.is_disjoint(&y1) || x1.union(&y1).copied().collect::<BTreeSet<_>>() != omega {
        bad.push("X1, Y1 do not split Ω".into());
    }
    ensure(bad.is_empty(), || bad.join("; "))
}

fn criterion_11(ctx: &Ctx) -> Outcome {
    let st = &ctx.e7;
    let n: BTreeSet<Root> = st.p.nilradical_roots.iter().copied().collect();
    let y: BTreeSet<Root> = st.u.y.iter().copied().collect();
    let zu: BTreeSet<Root> = st.u.zu.iter().copied().collect();
    let a7 = BTreeSet::from([st.alg.root_system().simple(7)]);
    eq("sizes", (16, 10, 1), (y.len(), zu.len(), a7.len()))?;
    ensure(y.is_disjoint(&zu) && y.is_disjoint(&a7) && zu.is_disjoint(&a7), || {
        "parts overlap".into()
    })?;
    let union: BTreeSet<Root> = y.union(&zu).chain(&a7).copied().collect();
    eq("n = Y ⊔ Z(u) ⊔ {α7}", n.len(), 27)?;
    eq("union", n, union)
}

fn all_parabolics(st: &Structures) -> Result<Vec<ParabolicDecomposition>, String> {
    let rank = st.rank();
    (0u32..(1 << rank) - 1)
        .map(|mask| {
            let keep: BTreeSet<usize> = (1..=rank).filter(|i| mask & (1 << (i - 1)) != 0).collect();
            decompose(&st.alg, &keep).map_err(|e| e.to_string())
        })
        .collect()
}

fn criterion_12(ctx: &Ctx) -> Outcome {
    for st in ctx.both() {
        let stats = st.alg.jacobi_exhaustive();
        let d = st.alg.dimension();
        eq("Jacobi triples", d * (d + 1) * (d + 2) / 6, stats.triples)?;
        eq("Jacobi failures", 0, stats.failures)?;
        for dec in all_parabolics(st)? {
            let (_, bad) = grading_violations(&st.alg, &dec);
            eq("grading violations", 0, bad)?;
        }
        let action = st
            .alg
            .action_matrix(&derived_levi_basis(&st.alg, &st.r), &st.basis.e_elements(&st.alg))
            .map_err(|e| e.to_string())?;
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..20 {
            let v: Vec<Rational> = (0..2 * st.basis.k).map(|_| small_rational(&mut rng)).collect();
            let m = action.evaluate_at(&v);
            eq("rank + nullity", m.cols(), m.rank() + kernel_dim(&m))?;
        }
    }
    for kind in RootSystemType::ALL {
        let a = verify_all(kind, Some(&ctx.golden), Mode::FULL);
        let b = verify_all(kind, Some(&ctx.golden), Mode::FULL);
        eq("report bytes", a.to_json(), b.to_json())?;
        let failing: Vec<&str> = a
            .checks
            .iter()
            .filter(|c| c.status != CheckStatus::Pass)
            .map(|c| c.name.as_str())
            .collect();
        ensure(failing.is_empty(), || {
            format!("{kind} report checks not passing: {failing:?}")
        })?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let ctx = Ctx {
        e6: Structures::new(RootSystemType::E6).expect("E6 structures"),
        e7: Structures::new(RootSystemType::E7).expect("E7 structures"),
        golden: GoldenTables::load(GOLDEN.as_ref()).expect("golden tables"),
    };
    let criteria: [Criterion; 12] = [
        ("root counts and highest roots", criterion_1),
        ("named parabolic structure", criterion_2),
        ("Heisenberg tower", criterion_3),
        ("rank-3 orbit dims and principal-series bound", criterion_4),
        ("e/f basis and bracket table", criterion_5),
        ("spectrum identity", criterion_6),
        ("induced Heisenberg ranks", criterion_7),
        ("stabilizers at e1 + e-1", criterion_8),
        ("E7 Ω-partition and X1/Y1 polarization", criterion_9),
        ("reference tables", criterion_10),
        ("E7 n = Y + Z(u) + g_α7", criterion_11),
        ("Jacobi, grading, rank-nullity, determinism", criterion_12),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check(&ctx) {
            Ok(()) => println!("criterion {:>2}: PASS  {name}", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name}: {msg}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
