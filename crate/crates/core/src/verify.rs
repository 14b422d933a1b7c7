//! Runs every check for one root system type and collects a report.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::chevalley::{AlgElement, ChevalleyAlgebra};
use crate::linalg::{rat, ratio, Rational};
use crate::parabolic::{
    central_form, grading_violations, heisenberg_defect, principal_series_codim, rank3_orbit_dim, semidirect_defects,
    ParabolicName,
};
use crate::report::{Check, Value, VerificationReport};
use crate::rootsys::{Root, RootSystem, RootSystemType};
use crate::structures::basis::lemma_defects;
use crate::structures::decomp::{center_dim_linear, polarization_defect, root_complement_count};
use crate::structures::form::{classify_character, spectrum_identity_holds, spectrum_vector, unit, CharacterClass};
use crate::structures::golden::{compare_set, GoldenTables};
use crate::structures::omega::{
    block_defects, derived_polarization, n_decomposition_defects, omega_partition, orient_by, polarization_defects,
};
use crate::structures::orbit::{
    component_stabilizers, induced_heisenberg_rank, orbit_tangent_dim, stabilizer_dim, trivially_acting_components,
};
use crate::structures::Structures;

/// How much work the randomized and exhaustive checks do.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Mode {
    /// Sampled Jacobi instead of the full triple loop, fewer random vectors.
    pub fast: bool,
}

impl Mode {
    pub const FULL: Mode = Mode { fast: false };
    pub const FAST: Mode = Mode { fast: true };

    fn jacobi_samples(self) -> usize {
        100_000
    }

    fn spectrum_samples(self) -> usize {
        500
    }

    fn rank_samples(self) -> usize {
        if self.fast {
            10
        } else {
            100
        }
    }
}

const SEED: u64 = 0x5eed_e6e7;

/// Expected values that follow from the classification of E6 and E7.
struct Expected {
    roots: usize,
    positive: usize,
    dim: usize,
    highest: Root,
    /// (nilradical dim, nilpotency class, center dim) for P, Q, R.
    p: (usize, usize, usize),
    q: (usize, usize, usize),
    r: (usize, usize, usize),
    pg_dim: usize,
    layers: Vec<usize>,
    residual: Vec<usize>,
    orbit: usize,
    codim: usize,
    u_dims: (usize, usize, usize),
    n3_dims: (usize, usize, usize),
    derived_levi: usize,
    stabilizer: usize,
    /// `type:stabilizer/dimension` per Levi component of R at e1 + e-1.
    component_stabilizers: Vec<&'static str>,
}

fn expected(kind: RootSystemType) -> Expected {
    match kind {
        RootSystemType::E6 => Expected {
            roots: 72,
            positive: 36,
            dim: 78,
            highest: Root::new(&[1, 2, 2, 3, 2, 1]),
            p: (16, 1, 16),
            q: (21, 2, 1),
            r: (24, 2, 8),
            pg_dim: 35,
            layers: vec![21, 9, 5],
            residual: vec![4],
            orbit: 32,
            codim: 15,
            u_dims: (8, 8, 8),
            n3_dims: (10, 10, 1),
            derived_levi: 28,
            stabilizer: 21,
            component_stabilizers: vec!["D4:21/28"],
        },
        RootSystemType::E7 => Expected {
            roots: 126,
            positive: 63,
            dim: 133,
            highest: Root::new(&[2, 2, 3, 4, 3, 2, 1]),
            p: (27, 1, 27),
            q: (33, 2, 1),
            r: (42, 2, 10),
            pg_dim: 59,
            layers: vec![33, 17, 9],
            residual: vec![2, 3, 5, 7],
            orbit: 56,
            codim: 26,
            u_dims: (16, 16, 10),
            n3_dims: (16, 16, 1),
            derived_levi: 48,
            stabilizer: 39,
            component_stabilizers: vec!["A1:3/3", "D5:36/45"],
        },
    }
}

fn triple(t: (usize, usize, usize)) -> Value {
    vec![t.0, t.1, t.2].into()
}

/// Every check for `kind`. Table checks run only when `golden` is given.
pub fn verify_all(kind: RootSystemType, golden: Option<&GoldenTables>, mode: Mode) -> VerificationReport {
    let mut report = VerificationReport::new(kind);
    let exp = expected(kind);
    let rs = RootSystem::new(kind);
    root_checks(&mut report, &rs, &exp);

    let st = match Structures::new(kind) {
        Ok(st) => st,
        Err(e) => {
            report.push(Check::error("structures.build", "construction", true, e));
            return report;
        }
    };
    report.push(Check::compare("structures.build", "construction", true, true));
    chevalley_checks(&mut report, &st.alg, &exp, mode);
    parabolic_checks(&mut report, &st, &exp);
    tower_checks(&mut report, &st, &exp);
    decomposition_checks(&mut report, &st, &exp);
    basis_checks(&mut report, &st);
    form_checks(&mut report, &st, mode);
    orbit_checks(&mut report, &st, &exp, mode);
    if kind == RootSystemType::E7 {
        e7_checks(&mut report, &st, golden);
    }
    if let Some(g) = golden {
        table_checks(&mut report, &st, g);
    }
    report
}

fn root_checks(report: &mut VerificationReport, rs: &RootSystem, exp: &Expected) {
    report.push(Check::compare(
        "roots.count",
        "root system",
        exp.roots,
        rs.roots().len(),
    ));
    report.push(Check::compare(
        "roots.positive",
        "root system",
        exp.positive,
        rs.num_positive(),
    ));
    report.push(Check::compare(
        "roots.highest",
        "highest root",
        exp.highest,
        rs.highest_root(),
    ));
    let dominates = rs.positive_roots().all(|r| rs.highest_root().dominates(r));
    report.push(Check::compare(
        "roots.highest_dominates",
        "highest root",
        true,
        dominates,
    ));
}

/// Largest p with β − pα a root.
fn string_down(rs: &RootSystem, a: &Root, b: &Root) -> i32 {
    let mut p = 0;
    while rs.contains(&(*b - (p + 1) * *a)) {
        p += 1;
    }
    p
}

fn chevalley_checks(report: &mut VerificationReport, alg: &ChevalleyAlgebra, exp: &Expected, mode: Mode) {
    report.push(Check::compare(
        "chevalley.dimension",
        "Chevalley basis",
        exp.dim,
        alg.dimension(),
    ));
    let stats = if mode.fast {
        alg.jacobi_sampled(mode.jacobi_samples(), SEED)
    } else {
        let d = alg.dimension();
        let stats = alg.jacobi_exhaustive();
        report.push(Check::compare(
            "chevalley.jacobi_triples",
            "Jacobi identity",
            d * (d + 1) * (d + 2) / 6,
            stats.triples,
        ));
        stats
    };
    report.push(Check::compare(
        "chevalley.jacobi_failures",
        "Jacobi identity",
        0usize,
        stats.failures,
    ));

    let rs = alg.root_system();
    let mut bad = Vec::new();
    for a in rs.roots() {
        for b in rs.roots() {
            if !rs.contains(&(*a + *b)) {
                continue;
            }
            let p = string_down(rs, a, b) + 1;
            let lhs = alg.structure_constant(a, b) * alg.structure_constant(&-*a, &-*b);
            if lhs != -p * p {
                bad.push(format!("N({a},{b})·N(-{a},-{b}) = {lhs}"));
            }
        }
    }
    bad.truncate(5);
    report.push(Check::no_defects("chevalley.sign_convention", "Chevalley basis", bad));

    let mut grading = 0;
    for a in rs.roots() {
        for b in rs.roots() {
            let br = alg.bracket(&alg.root_vector(a), &alg.root_vector(b));
            let s = *a + *b;
            let ok = if s.is_zero() {
                br.terms().all(|(i, _)| alg.basis_root(i).is_none())
            } else if rs.contains(&s) {
                br.terms().all(|(i, _)| alg.basis_root(i) == Some(s))
            } else {
                br.is_zero()
            };
            grading += usize::from(!ok);
        }
    }
    report.push(Check::compare(
        "chevalley.root_grading",
        "root space grading",
        0usize,
        grading,
    ));
}

fn parabolic_checks(report: &mut VerificationReport, st: &Structures, exp: &Expected) {
    let kind = st.kind();
    let named = [
        (ParabolicName::P, &st.p, Some(exp.p)),
        (ParabolicName::Q, &st.q, Some(exp.q)),
        (ParabolicName::R, &st.r, Some(exp.r)),
        (ParabolicName::Pg, &st.pg, None),
    ];
    for (name, dec, dims) in named {
        let pre = format!("parabolic.{}", name.to_string().to_lowercase());
        let anchor = format!("parabolic {name}");
        report.push(Check::compare(
            &format!("{pre}.levi"),
            &anchor,
            name.expected_levi(kind),
            dec.levi.type_label(),
        ));
        let (_, bad) = grading_violations(&st.alg, dec);
        report.push(Check::compare(
            &format!("{pre}.grading"),
            "nilradical grading",
            0usize,
            bad,
        ));
        match dims {
            Some((dim, class, center)) => {
                report.push(Check::compare(
                    &format!("{pre}.nil_dim"),
                    &anchor,
                    dim,
                    dec.dim_nilradical(),
                ));
                report.push(Check::compare(
                    &format!("{pre}.nil_class"),
                    &anchor,
                    class,
                    dec.nilpotency_class,
                ));
                report.push(Check::compare(
                    &format!("{pre}.center_dim"),
                    &anchor,
                    center,
                    dec.center_roots.len(),
                ));
            }
            None => report.push(Check::compare(
                &format!("{pre}.nil_dim"),
                &anchor,
                exp.pg_dim,
                dec.dim_nilradical(),
            )),
        }
    }
    let b1 = st.alg.root_system().highest_root();
    report.push(Check::compare(
        "parabolic.q.center",
        "Heisenberg parabolic",
        Value::roots([&b1]),
        Value::roots(&st.q.center_roots),
    ));
    let defect = heisenberg_defect(&st.alg, &st.q.nilradical_roots, &b1);
    report.push(Check::no_defects(
        "parabolic.q.heisenberg",
        "Heisenberg parabolic",
        defect.into_iter().collect(),
    ));
    let top = st.r.roots_of_depth(st.r.max_depth);
    report.push(Check::compare(
        "parabolic.r.center_is_top_layer",
        "two-step nilradical",
        Value::roots(&top),
        Value::roots(&st.r.center_roots),
    ));
}

fn tower_checks(report: &mut VerificationReport, st: &Structures, exp: &Expected) {
    let t = &st.tower;
    report.push(Check::compare(
        "tower.layer_dims",
        "Heisenberg tower",
        exp.layers.clone(),
        t.layer_dims(),
    ));
    for (k, layer) in t.layers.iter().enumerate() {
        let defect = heisenberg_defect(&st.alg, layer, &t.betas[k]);
        report.push(Check::no_defects(
            &format!("tower.layer{}.heisenberg", k + 1),
            "Heisenberg tower",
            defect.into_iter().collect(),
        ));
    }
    let residual: Option<Vec<usize>> = t.residual_nodes().map(|n| n.into_iter().collect());
    report.push(Check::compare(
        "tower.residual_nodes",
        "Levi of the tower parabolic",
        exp.residual.clone(),
        residual.unwrap_or_default(),
    ));
    let pg_levi: Vec<usize> = st.pg.levi_keep.iter().copied().collect();
    report.push(Check::compare(
        "tower.residual_is_pg_levi",
        "Levi of the tower parabolic",
        exp.residual.clone(),
        pg_levi,
    ));
    report.push(Check::no_defects(
        "tower.semidirect",
        "Heisenberg tower",
        semidirect_defects(&st.alg, t),
    ));
    let union: BTreeSet<Root> = t.layers.iter().flatten().copied().collect();
    let pg: BTreeSet<Root> = st.pg.nilradical_roots.iter().copied().collect();
    report.push(Check::compare(
        "tower.spans_pg_nilradical",
        "Heisenberg tower",
        true,
        union == pg,
    ));
    let orbit = rank3_orbit_dim(t);
    report.push(Check::compare(
        "tower.rank3_orbit_dim",
        "rank-3 coadjoint orbit",
        exp.orbit,
        orbit,
    ));
    let bound = principal_series_codim(st.alg.root_system());
    report.push(Check::compare(
        "tower.principal_series_codim",
        "principal series bound",
        exp.codim,
        bound.codim,
    ));
    report.push(Check::compare(
        "tower.codim_inequality",
        "principal series bound",
        format!("2·{} < {}", exp.codim, exp.orbit),
        format!(
            "2·{} {} {}",
            bound.codim,
            if bound.below(orbit) { "<" } else { ">=" },
            orbit
        ),
    ));
}

fn decomposition_checks(report: &mut VerificationReport, st: &Structures, exp: &Expected) {
    let (u, n3) = (&st.u, &st.n3);
    let ud = u.dims();
    report.push(Check::compare(
        "u.dims",
        "u = X + Y + Z(u)",
        triple(exp.u_dims),
        triple(ud),
    ));
    report.push(Check::compare(
        "u.dim_total",
        "u = X + Y + Z(u)",
        st.r.dim_nilradical(),
        ud.0 + ud.1 + ud.2,
    ));
    let b1 = st.alg.root_system().highest_root();
    let b2 = st.basis.e(-1).root;
    report.push(Check::compare(
        "u.contains_beta1_beta2",
        "Z(u)",
        true,
        u.zu.contains(&b1) && u.zu.contains(&b2),
    ));
    report.push(Check::compare(
        "u.center_linear",
        "Z(u) is the center of u",
        u.zu.len(),
        center_dim_linear(&st.alg, &st.r.nilradical_roots),
    ));
    let fixed: Vec<Root> = u.x.iter().chain(&u.zu).copied().collect();
    let dim_y = st.r.dim_nilradical() - fixed.len();
    report.push(Check::compare(
        "u.y_forced",
        "uniqueness of Y",
        1i64,
        root_complement_count(&st.r.nilradical_roots, &fixed, dim_y) as i64,
    ));
    let fixed: Vec<Root> = n3.w.iter().chain(&n3.center).copied().collect();
    let dim_w = st.q.dim_nilradical() - fixed.len();
    report.push(Check::compare(
        "n3.wstar_forced",
        "uniqueness of W*",
        1i64,
        root_complement_count(&st.q.nilradical_roots, &fixed, dim_w) as i64,
    ));
    report.push(Check::compare(
        "n3.center_linear",
        "Z(n3) is the center of n3",
        1usize,
        center_dim_linear(&st.alg, &st.q.nilradical_roots),
    ));
    report.push(Check::compare(
        "n3.dims",
        "n3 = W + W* + Z(n3)",
        triple(exp.n3_dims),
        triple(n3.dims()),
    ));
    let pol = polarization_defect(&st.alg, &n3.w, &n3.wstar, &b1);
    report.push(Check::no_defects(
        "n3.polarization",
        "W, W* polarize n3",
        pol.into_iter().collect(),
    ));
    let outside: Vec<String> =
        u.zu.iter()
            .filter(|a| **a != b1 && **a != b2 && !n3.wstar.contains(a))
            .map(|a| format!("{a} not in W*"))
            .collect();
    report.push(Check::no_defects("n3.zu_in_wstar", "Z(u) roots lie in W*", outside));
    let form = central_form(&st.alg, &n3.w.iter().chain(&n3.wstar).copied().collect::<Vec<_>>(), &b1);
    report.push(Check::compare(
        "n3.form_rank",
        "W, W* polarize n3",
        n3.w.len() * 2,
        form.rank(),
    ));
}

fn basis_checks(report: &mut VerificationReport, st: &Structures) {
    let (alg, b) = (&st.alg, &st.basis);
    let rs = alg.root_system();
    report.push(Check::compare(
        "basis.e1_root",
        "basis e/f",
        rs.highest_root(),
        b.e(1).root,
    ));
    let beta2 = st.q.levi.tallest_highest_root().expect("Levi of Q is nonempty");
    report.push(Check::compare("basis.e-1_root", "basis e/f", beta2, b.e(-1).root));
    report.push(Check::compare("basis.e_count", "basis e/f", st.u.zu.len(), b.e.len()));
    let levi: BTreeSet<Root> = st.r.levi_roots().iter().copied().collect();
    let w_cap_s: BTreeSet<Root> = st.n3.w.iter().filter(|a| levi.contains(a)).copied().collect();
    report.push(Check::compare("basis.f_count", "basis e/f", w_cap_s.len(), b.f.len()));
    let n3: Vec<Root> = st
        .n3
        .w
        .iter()
        .chain(&st.n3.wstar)
        .chain(&st.n3.center)
        .copied()
        .collect();
    report.push(Check::no_defects(
        "basis.lemma",
        "basis e/f",
        lemma_defects(alg, b, &n3, &w_cap_s),
    ));

    let e = |i: i32| b.e(i).element(alg);
    let f = |i: i32| b.f(i).element(alg);
    report.push(Check::compare(
        "basis.bracket_e2_f2",
        "basis e/f",
        true,
        alg.bracket(&e(2), &f(2)) == e(1),
    ));
    report.push(Check::compare(
        "basis.bracket_e2_f3",
        "basis e/f",
        true,
        alg.bracket(&e(2), &f(3)).is_zero(),
    ));
    let derived = alg.bracket(&e(-1), &f(3)) == e(-3).scale(&rat(-1));
    report.push(Check::compare(
        "basis.bracket_e-1_f3",
        "[e_-1, f_i] = -e_-i",
        true,
        derived,
    ));
    let mut table = 0usize;
    for &i in &b.f_order() {
        for &j in &b.f_order() {
            let want = if i == j { e(1) } else { AlgElement::zero() };
            table += usize::from(alg.bracket(&e(i), &f(j)) == want);
        }
    }
    let n = b.f_order().len();
    report.push(Check::compare("basis.bracket_table", "basis e/f", n * n, table));
}

fn form_checks(report: &mut VerificationReport, st: &Structures, mode: Mode) {
    let (b, form) = (&st.basis, &st.form);
    let k = b.k;
    report.push(Check::compare(
        "form.e1_em1",
        "hyperbolic form",
        &rat(1),
        &form.pair(&unit(b, 1), &unit(b, -1)),
    ));
    report.push(Check::compare(
        "form.e2_e3",
        "hyperbolic form",
        &rat(0),
        &form.pair(&unit(b, 2), &unit(b, 3)),
    ));
    report.push(Check::compare(
        "form.signature",
        "hyperbolic form",
        vec![k, k],
        vec![form.signature().0, form.signature().1],
    ));
    report.push(Check::compare(
        "form.spectrum_identity",
        "<v,v> = -2ts",
        true,
        spectrum_identity_holds(b, form),
    ));

    let zero_a = BTreeMap::new();
    match spectrum_vector(b, form, &rat(1), &rat(3), &zero_a) {
        Ok(sv) => report.push(Check::compare(
            "form.spectrum_t1_s3",
            "<v,v> = -2ts",
            &rat(-6),
            &sv.norm,
        )),
        Err(e) => report.push(Check::error("form.spectrum_t1_s3", "<v,v> = -2ts", &rat(-6), e)),
    }
    let a = BTreeMap::from([(2, rat(1)), (-2, rat(1))]);
    match spectrum_vector(b, form, &rat(2), &rat(0), &a) {
        Ok(sv) => {
            let mut want = vec![Rational::zero(); 2 * k];
            want[b.position(1)] = rat(2);
            want[b.position(2)] = rat(2);
            want[b.position(-2)] = rat(2);
            want[b.position(-1)] = rat(-2);
            report.push(Check::compare(
                "form.spectrum_rank_one",
                "rank-one vectors are isotropic",
                true,
                sv.v == want && sv.norm.is_zero(),
            ));
        }
        Err(e) => report.push(Check::error(
            "form.spectrum_rank_one",
            "rank-one vectors are isotropic",
            true,
            e,
        )),
    }
    report.push(Check::compare(
        "form.spectrum_t0",
        "spectrum vectors need t != 0",
        true,
        spectrum_vector(b, form, &rat(0), &rat(1), &zero_a).is_err(),
    ));

    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut bad = 0usize;
    for _ in 0..mode.spectrum_samples() {
        let (t, s, a) = random_params(&mut rng, k, None);
        let sv = spectrum_vector(b, form, &t, &s, &a).expect("t is nonzero");
        let want = rat(-2) * &t * &s;
        let class = classify_character(form, &sv.v);
        let class_ok = if s.is_zero() {
            class == CharacterClass::Small
        } else {
            class == CharacterClass::Big
        };
        bad += usize::from(sv.norm != want || !class_ok);
    }
    report.push(Check::compare("form.spectrum_random", "<v,v> = -2ts", 0usize, bad));

    let v_big = sum(&unit(b, 1), &unit(b, -1));
    let zero = vec![Rational::zero(); 2 * k];
    report.push(Check::compare(
        "form.class_zero",
        "small and big characters",
        "zero",
        classify_character(form, &zero).to_string(),
    ));
    report.push(Check::compare(
        "form.class_e1",
        "small and big characters",
        "small",
        classify_character(form, &unit(b, 1)).to_string(),
    ));
    report.push(Check::compare(
        "form.class_e1_em1",
        "small and big characters",
        "big",
        classify_character(form, &v_big).to_string(),
    ));
    report.push(Check::compare(
        "form.norm_e1_em1",
        "small and big characters",
        &rat(2),
        &form.norm(&v_big),
    ));
}

fn sum(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    ratio(rng.gen_range(-9..=9), rng.gen_range(1..=5))
}

/// Random (t, s, a) with t ≠ 0. `s_zero` forces s = 0 (true) or s ≠ 0
/// (false); `None` leaves s free.
pub fn random_params(
    rng: &mut ChaCha8Rng,
    k: usize,
    s_zero: Option<bool>,
) -> (Rational, Rational, BTreeMap<i32, Rational>) {
    let mut t = small_rational(rng);
    while t.is_zero() {
        t = small_rational(rng);
    }
    let s = match s_zero {
        Some(true) => Rational::zero(),
        Some(false) => {
            let mut s = small_rational(rng);
            while s.is_zero() {
                s = small_rational(rng);
            }
            s
        }
        None => small_rational(rng),
    };
    let mut a = BTreeMap::new();
    for i in 2..=k as i32 {
        a.insert(i, small_rational(rng));
        a.insert(-i, small_rational(rng));
    }
    (t, s, a)
}

fn orbit_checks(report: &mut VerificationReport, st: &Structures, exp: &Expected, mode: Mode) {
    let (alg, b, form) = (&st.alg, &st.basis, &st.form);
    let n = st.rank() as u32;
    let big_rank = 2usize.pow(n - 2);
    let small_rank = 2usize.pow(n - 3);
    let v_big = sum(&unit(b, 1), &unit(b, -1));
    let e1 = unit(b, 1);
    let rank = |v: &[Rational]| induced_heisenberg_rank(alg, &st.u, b, form, v).map_err(|e| e.to_string());
    report.push(Check::compare(
        "orbit.heisenberg_rank_big",
        "induced Heisenberg group",
        big_rank,
        rank(&v_big).unwrap_or(0),
    ));
    report.push(Check::compare(
        "orbit.heisenberg_rank_small",
        "induced Heisenberg group",
        small_rank,
        rank(&e1).unwrap_or(0),
    ));
    let omega = st.u.omega().len();
    report.push(Check::compare(
        "orbit.abelian_part_small",
        "induced Heisenberg group",
        small_rank,
        omega - rank(&e1).unwrap_or(0),
    ));

    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 1);
    let (mut bad_big, mut bad_small) = (0usize, 0usize);
    for _ in 0..mode.rank_samples() {
        let (t, s, a) = random_params(&mut rng, b.k, Some(false));
        let v = spectrum_vector(b, form, &t, &s, &a).expect("t is nonzero").v;
        bad_big += usize::from(rank(&v) != Ok(big_rank));
        let (t, s, a) = random_params(&mut rng, b.k, Some(true));
        let v = spectrum_vector(b, form, &t, &s, &a).expect("t is nonzero").v;
        bad_small += usize::from(rank(&v) != Ok(small_rank));
    }
    report.push(Check::compare(
        "orbit.heisenberg_rank_random_big",
        "induced Heisenberg group",
        0usize,
        bad_big,
    ));
    report.push(Check::compare(
        "orbit.heisenberg_rank_random_small",
        "induced Heisenberg group",
        0usize,
        bad_small,
    ));

    match stabilizer_dim(alg, &st.r, b, &v_big) {
        Ok(d) => {
            report.push(Check::compare(
                "orbit.stabilizer_big",
                "stabilizer of e1 + e-1",
                exp.stabilizer,
                d.stabilizer,
            ));
            report.push(Check::compare(
                "orbit.rank_nullity_big",
                "rank-nullity",
                d.acting,
                d.stabilizer + d.orbit,
            ));
        }
        Err(e) => report.push(Check::error(
            "orbit.stabilizer_big",
            "stabilizer of e1 + e-1",
            exp.stabilizer,
            e,
        )),
    }
    let zero = vec![Rational::zero(); 2 * b.k];
    match stabilizer_dim(alg, &st.r, b, &zero) {
        Ok(d) => report.push(Check::compare(
            "orbit.stabilizer_zero",
            "stabilizer of 0",
            exp.derived_levi,
            d.stabilizer,
        )),
        Err(e) => report.push(Check::error(
            "orbit.stabilizer_zero",
            "stabilizer of 0",
            exp.derived_levi,
            e,
        )),
    }
    match stabilizer_dim(alg, &st.r, b, &e1) {
        Ok(d) => report.push(Check::compare(
            "orbit.rank_nullity_small",
            "rank-nullity",
            d.acting,
            d.stabilizer + d.orbit,
        )),
        Err(e) => report.push(Check::error(
            "orbit.rank_nullity_small",
            "rank-nullity",
            exp.derived_levi,
            e,
        )),
    }

    match component_stabilizers(alg, &st.r, b, &v_big) {
        Ok(parts) => {
            let labels: Vec<String> = parts
                .iter()
                .map(|(l, d)| format!("{l}:{}/{}", d.stabilizer, d.acting))
                .collect();
            report.push(Check::compare(
                "orbit.stabilizer_by_component",
                "stabilizer of e1 + e-1",
                exp.component_stabilizers.clone(),
                labels,
            ));
        }
        Err(e) => report.push(Check::error(
            "orbit.stabilizer_by_component",
            "stabilizer of e1 + e-1",
            exp.component_stabilizers.clone(),
            e,
        )),
    }

    let z = st.u.zu.len();
    let tangent = |v: &[Rational]| orbit_tangent_dim(alg, &st.r, b, v).unwrap_or(usize::MAX);
    report.push(Check::compare("orbit.tangent_big", "open orbit", z, tangent(&v_big)));
    report.push(Check::compare(
        "orbit.tangent_small",
        "isotropic cone",
        z - 1,
        tangent(&e1),
    ));
    report.push(Check::compare("orbit.tangent_zero", "origin", 0usize, tangent(&zero)));

    if st.kind() == RootSystemType::E7 {
        let comps = trivially_acting_components(alg, &st.r, b).unwrap_or_default();
        let trivial: Vec<String> = comps.iter().filter(|c| c.1).map(|c| c.0.clone()).collect();
        report.push(Check::compare(
            "orbit.trivial_factor",
            "A1 acts trivially on Z(u)",
            vec!["A1"],
            trivial,
        ));
    }
}

fn e7_checks(report: &mut VerificationReport, st: &Structures, golden: Option<&GoldenTables>) {
    let (alg, b, form) = (&st.alg, &st.basis, &st.form);
    let defects = n_decomposition_defects(alg, &st.p.nilradical_roots, &st.u);
    report.push(Check::no_defects("e7.n_decomposition", "n = Y + Z(u) + g_a7", defects));
    report.push(Check::compare(
        "e7.n_decomposition_sizes",
        "n = Y + Z(u) + g_a7",
        vec![16usize, 10, 1],
        vec![
            st.u.y.len(),
            st.u.zu.len(),
            usize::from(st.p.contains_nil(&alg.root_system().simple(7))),
        ],
    ));

    let beta2 = b.e(-1).root;
    let partition = match omega_partition(alg, &st.u, beta2) {
        Ok(p) => p,
        Err(e) => {
            report.push(Check::error("e7.omega.blocks", "partition of Omega", 8usize, e));
            return;
        }
    };
    report.push(Check::compare(
        "e7.omega.blocks",
        "partition of Omega",
        8usize,
        partition.blocks.len(),
    ));
    let covered: BTreeSet<Root> = partition.blocks.iter().flatten().copied().collect();
    report.push(Check::compare(
        "e7.omega.cover",
        "partition of Omega",
        st.u.omega().len(),
        covered.len(),
    ));
    let betas = [alg.root_system().highest_root(), beta2];
    let a7 = alg.root_system().simple(7);
    let mut defects = Vec::new();
    for (blk, &j) in partition.blocks.iter().zip(&partition.j_choice) {
        defects.extend(block_defects(blk, j, betas, a7, &st.u));
    }
    report.push(Check::no_defects("e7.omega.conditions", "partition of Omega", defects));

    let v = sum(&unit(b, 1), &unit(b, -1));
    match derived_polarization(alg, &st.u, b, form, &v, &partition) {
        Ok(p) => report.push(Check::compare(
            "e7.polarization.derived",
            "SL2-stable polarization",
            16usize,
            p.first_halves().len(),
        )),
        Err(e) => report.push(Check::error(
            "e7.polarization.derived",
            "SL2-stable polarization",
            16usize,
            e,
        )),
    }

    let Some(g) = golden else { return };
    let rs = alg.root_system();
    let (Some(x1), Some(y1)) = (g.expand(rs, "X1"), g.expand(rs, "Y1")) else {
        report.push(Check::error(
            "e7.polarization.table",
            "SL2-stable polarization",
            0usize,
            "X1/Y1 missing from tables",
        ));
        return;
    };
    report.push(Check::compare(
        "e7.polarization.table_sizes",
        "SL2-stable polarization",
        vec![16usize, 16],
        vec![x1.len(), y1.len()],
    ));
    match polarization_defects(alg, &st.u, b, form, &v, &x1, &y1) {
        Ok(d) => report.push(Check::no_defects("e7.polarization.table", "SL2-stable polarization", d)),
        Err(e) => report.push(Check::error(
            "e7.polarization.table",
            "SL2-stable polarization",
            0usize,
            e,
        )),
    }
    let oriented = orient_by(&partition, &x1);
    let split: Vec<String> = oriented
        .blocks
        .iter()
        .filter(|blk| !(x1.contains(&blk[0]) && x1.contains(&blk[1]) && y1.contains(&blk[2]) && y1.contains(&blk[3])))
        .map(|blk| format!("block starting at {} is not split as pairs", blk[0]))
        .collect();
    report.push(Check::no_defects(
        "e7.polarization.blocks_split",
        "SL2-stable polarization",
        split,
    ));
}

fn table_checks(report: &mut VerificationReport, st: &Structures, g: &GoldenTables) {
    let rs = st.alg.root_system();
    let b = &st.basis;
    let set = |v: &[Root]| v.iter().copied().collect::<BTreeSet<Root>>();
    let anchor_ok = g
        .expand(rs, "e1")
        .is_some_and(|s| s == BTreeSet::from([rs.highest_root()]));
    report.push(Check::compare("tables.layout_anchor", "table layout", true, anchor_ok));

    let mut sets: Vec<(String, BTreeSet<Root>)> = vec![
        ("W".into(), set(&st.n3.w)),
        ("Wstar".into(), set(&st.n3.wstar)),
        ("X".into(), set(&st.u.x)),
        ("Y".into(), set(&st.u.y)),
        ("Zu".into(), set(&st.u.zu)),
    ];
    for i in b.e_order() {
        sets.push((format!("e{i}"), BTreeSet::from([b.e(i).root])));
    }
    for i in b.f_order() {
        sets.push((format!("f{i}"), BTreeSet::from([b.f(i).root])));
    }
    if st.kind() == RootSystemType::E7 {
        // X1 ∪ Y1 against Ω; the halves themselves are checked above.
        let union: BTreeSet<Root> = g
            .expand(rs, "X1")
            .unwrap_or_default()
            .union(&g.expand(rs, "Y1").unwrap_or_default())
            .copied()
            .collect();
        let omega = set(&st.u.omega());
        let mut details: Vec<String> = union
            .difference(&omega)
            .map(|r| format!("X1/Y1 root {r} not in Omega"))
            .collect();
        details.extend(omega.difference(&union).map(|r| format!("Omega root {r} not in X1/Y1")));
        report.push(Check::no_defects("tables.X1_Y1_cover_omega", "reference tables", details).flag_on_mismatch());
    }
    for (name, derived) in sets {
        let cmp = compare_set(rs, g, &name, &derived);
        report.push(
            Check::compare(&format!("tables.{name}"), "reference tables", true, cmp.matches())
                .with_details(cmp.mismatches)
                .flag_on_mismatch(),
        );
    }
}
