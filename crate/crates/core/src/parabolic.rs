//! Standard parabolic subalgebras, their nilradical gradings, and the
//! Heisenberg tower obtained from the strongly orthogonal highest-root
//! cascade.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use crate::chevalley::ChevalleyAlgebra;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rootsys::{Root, RootSystem, RootSystemType, Subsystem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ParabolicName {
    /// Maximal parabolic of the last node; abelian nilradical.
    P,
    /// Heisenberg parabolic.
    Q,
    /// Parabolic with two-step nilradical and spin-type Levi.
    R,
    /// Parabolic carrying the Heisenberg tower.
    Pg,
}

impl ParabolicName {
    pub const ALL: [ParabolicName; 4] = [ParabolicName::P, ParabolicName::Q, ParabolicName::R, ParabolicName::Pg];

    /// Expected product type of the Levi's derived algebra.
    pub fn expected_levi(self, kind: RootSystemType) -> &'static str {
        use ParabolicName::*;
        use RootSystemType::*;
        match (self, kind) {
            (P, E6) => "D5",
            (P, E7) => "E6",
            (Q, E6) => "A5",
            (Q, E7) => "D6",
            (R, E6) => "D4",
            (R, E7) => "A1xD5",
            (Pg, E6) => "A1",
            (Pg, E7) => "A1xA1xA1xA1",
        }
    }
}

impl fmt::Display for ParabolicName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ParabolicName::P => "P",
            ParabolicName::Q => "Q",
            ParabolicName::R => "R",
            ParabolicName::Pg => "Pg",
        })
    }
}

impl FromStr for ParabolicName {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "P" | "p" => Ok(ParabolicName::P),
            "Q" | "q" => Ok(ParabolicName::Q),
            "R" | "r" => Ok(ParabolicName::R),
            "Pg" | "pg" | "PG" => Ok(ParabolicName::Pg),
            other => Err(format!("unknown parabolic `{other}`")),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ParabolicDecomposition {
    pub levi_keep: BTreeSet<usize>,
    pub levi: Subsystem,
    /// Positive roots with support off `levi_keep`, canonical order.
    pub nilradical_roots: Vec<Root>,
    /// Depth Σ_{i ∉ keep} c_i(α) of each nilradical root.
    pub depth: BTreeMap<Root, u32>,
    /// Roots whose root vectors commute with the whole nilradical.
    pub center_roots: Vec<Root>,
    /// Length of the lower central series, from actual brackets.
    pub nilpotency_class: usize,
    pub max_depth: u32,
}

impl ParabolicDecomposition {
    pub fn levi_roots(&self) -> &[Root] {
        &self.levi.roots
    }

    pub fn dim_nilradical(&self) -> usize {
        self.nilradical_roots.len()
    }

    pub fn is_abelian(&self) -> bool {
        self.nilpotency_class == 1
    }

    pub fn roots_of_depth(&self, d: u32) -> Vec<Root> {
        self.nilradical_roots
            .iter()
            .filter(|r| self.depth[r] == d)
            .copied()
            .collect()
    }

    pub fn contains_nil(&self, r: &Root) -> bool {
        self.depth.contains_key(r)
    }
}

/// Levi subsystem on `keep`, nilradical grading, center and nilpotency
/// class computed from the structure constants of `alg`.
pub fn decompose(alg: &ChevalleyAlgebra, keep: &BTreeSet<usize>) -> Result<ParabolicDecomposition> {
    let rs = alg.root_system();
    let levi = rs.subsystem(keep)?;
    let depth_of = |r: &Root| -> u32 {
        (1..=rs.rank())
            .filter(|i| !keep.contains(i))
            .map(|i| r.coeff(i) as u32)
            .sum()
    };
    let nilradical_roots: Vec<Root> = rs.positive_roots().filter(|r| depth_of(r) > 0).copied().collect();
    let depth: BTreeMap<Root, u32> = nilradical_roots.iter().map(|r| (*r, depth_of(r))).collect();
    let max_depth = depth.values().copied().max().unwrap_or(0);

    let center_roots: Vec<Root> = nilradical_roots
        .iter()
        .filter(|z| nilradical_roots.iter().all(|x| alg.structure_constant(z, x) == 0))
        .copied()
        .collect();

    // Lower central series on root supports: C_{k+1} = [n, C_k].
    let mut layer: HashSet<Root> = nilradical_roots.iter().copied().collect();
    let mut class = 0;
    while !layer.is_empty() {
        class += 1;
        let mut next = HashSet::new();
        for x in &nilradical_roots {
            for y in &layer {
                if alg.structure_constant(x, y) != 0 {
                    next.insert(*x + *y);
                }
            }
        }
        layer = next;
    }

    Ok(ParabolicDecomposition {
        levi_keep: keep.clone(),
        levi,
        nilradical_roots,
        depth,
        center_roots,
        nilpotency_class: class,
        max_depth,
    })
}

/// Levi nodes of the named parabolic.
pub fn named_levi_keep(rs: &RootSystem, name: ParabolicName) -> BTreeSet<usize> {
    let n = rs.rank();
    let all: BTreeSet<usize> = (1..=n).collect();
    let without = |drop: &[usize]| -> BTreeSet<usize> { all.iter().copied().filter(|i| !drop.contains(i)).collect() };
    match (name, rs.kind()) {
        (ParabolicName::P, _) => without(&[n]),
        (ParabolicName::Q, _) => {
            let b1 = rs.highest_root();
            let off: Vec<usize> = (1..=n).filter(|&i| rs.pairing(&rs.simple(i), &b1) != 0).collect();
            assert_eq!(off.len(), 1, "highest root must meet a single node");
            without(&off)
        }
        (ParabolicName::R, RootSystemType::E6) => without(&[1, 6]),
        (ParabolicName::R, RootSystemType::E7) => without(&[6]),
        (ParabolicName::Pg, RootSystemType::E6) => [4].into_iter().collect(),
        (ParabolicName::Pg, RootSystemType::E7) => [2, 3, 5, 7].into_iter().collect(),
    }
}

pub fn named_parabolic(alg: &ChevalleyAlgebra, name: ParabolicName) -> Result<ParabolicDecomposition> {
    let rs = alg.root_system();
    let keep = named_levi_keep(rs, name);
    let dec = decompose(alg, &keep)?;
    let expected = name.expected_levi(rs.kind());
    let found = dec.levi.type_label();
    if found != expected {
        return Err(Error::LeviMismatch {
            name: name.to_string(),
            expected: expected.into(),
            found,
        });
    }
    Ok(dec)
}

/// Depth additivity on every pair of nilradical root vectors with a
/// nonzero bracket. Returns (pairs checked, violations).
pub fn grading_violations(alg: &ChevalleyAlgebra, dec: &ParabolicDecomposition) -> (usize, usize) {
    let (mut checked, mut bad) = (0, 0);
    for x in &dec.nilradical_roots {
        for y in &dec.nilradical_roots {
            checked += 1;
            if alg.structure_constant(x, y) == 0 {
                continue;
            }
            let s = *x + *y;
            match dec.depth.get(&s) {
                Some(&d) if d == dec.depth[x] + dec.depth[y] => {}
                _ => bad += 1,
            }
        }
    }
    (checked, bad)
}

/// Skew matrix of the bracket pairing on `roots` against the line of
/// `center`: entry (i, j) is the coefficient of e_center in [e_i, e_j].
pub fn central_form(alg: &ChevalleyAlgebra, roots: &[Root], center: &Root) -> Matrix {
    let rows: Vec<Vec<i64>> = roots
        .iter()
        .map(|a| {
            roots
                .iter()
                .map(|b| {
                    if *a + *b == *center {
                        alg.structure_constant(a, b) as i64
                    } else {
                        0
                    }
                })
                .collect()
        })
        .collect();
    Matrix::from_i64_rows(&rows)
}

/// Check that `roots` span a Heisenberg algebra with center g_center.
pub fn heisenberg_defect(alg: &ChevalleyAlgebra, roots: &[Root], center: &Root) -> Option<String> {
    if !roots.contains(center) {
        return Some(format!("center {center} missing"));
    }
    for a in roots {
        for b in roots {
            if alg.structure_constant(a, b) != 0 && *a + *b != *center {
                return Some(format!("[{a}, {b}] lands outside the center"));
            }
        }
    }
    let body: Vec<Root> = roots.iter().filter(|r| *r != center).copied().collect();
    let form = central_form(alg, &body, center);
    if form.rank() != body.len() {
        return Some(format!(
            "skew form has rank {} on a {}-dimensional complement",
            form.rank(),
            body.len()
        ));
    }
    None
}

#[derive(Clone, Debug)]
pub struct HeisenbergTower {
    /// Cascade roots; `betas[0]` is the highest root.
    pub betas: Vec<Root>,
    /// Layers in cascade order; `layers[0]` is the nilradical of Q.
    pub layers: Vec<Vec<Root>>,
    /// Roots orthogonal to every cascade root.
    pub residual: Subsystem,
}

impl HeisenbergTower {
    pub fn layer_dims(&self) -> Vec<usize> {
        self.layers.iter().map(Vec::len).collect()
    }

    /// Index of a cascade layer in the N_1 ⋉ N_2 ⋉ N_3 notation, where the
    /// Heisenberg nilradical of Q is N_3.
    pub fn tower_index(&self, cascade: usize) -> usize {
        self.layers.len() - cascade
    }

    pub fn total_dim(&self) -> usize {
        self.layers.iter().map(Vec::len).sum()
    }

    /// Residual nodes when every residual component is a single simple root.
    pub fn residual_nodes(&self) -> Option<BTreeSet<usize>> {
        self.residual
            .components
            .iter()
            .map(|c| c.nodes())
            .try_fold(BTreeSet::new(), |mut acc, n| {
                acc.extend(n?);
                Some(acc)
            })
    }
}

pub const TOWER_DEPTH: usize = 3;

/// Strongly orthogonal cascade β_1, β_2, β_3 and the Heisenberg layers.
pub fn heisenberg_tower(alg: &ChevalleyAlgebra) -> Result<HeisenbergTower> {
    let rs = alg.root_system();
    let mut betas = vec![rs.highest_root()];
    let mut layers = Vec::with_capacity(TOWER_DEPTH);
    loop {
        let k = betas.len() - 1;
        let beta = betas[k];
        let layer: Vec<Root> = rs
            .positive_roots()
            .filter(|a| rs.pairing(a, &beta) > 0 && betas[..k].iter().all(|b| rs.pairing(a, b) == 0))
            .copied()
            .collect();
        if let Some(reason) = heisenberg_defect(alg, &layer, &beta) {
            return Err(Error::NotHeisenberg { layer: k + 1, reason });
        }
        layers.push(layer);
        if layers.len() == TOWER_DEPTH {
            break;
        }
        let rest = rs.orthogonal_subsystem(&betas)?;
        let next = rest
            .tallest_highest_root()
            .ok_or_else(|| Error::Decomposition(format!("cascade stops after {} layers", layers.len())))?;
        betas.push(next);
    }
    let residual = rs.orthogonal_subsystem(&betas)?;
    if residual
        .components
        .iter()
        .any(|c| c.kind != crate::rootsys::DynkinType::A(1))
    {
        return Err(Error::Decomposition(format!(
            "residual of the cascade has type {}",
            residual.type_label()
        )));
    }
    Ok(HeisenbergTower {
        betas,
        layers,
        residual,
    })
}

/// Violations of the semidirect structure: for layers j < k in cascade
/// order, [T_j, T_k] must lie in span T_j.
pub fn semidirect_defects(alg: &ChevalleyAlgebra, tower: &HeisenbergTower) -> Vec<String> {
    let mut out = Vec::new();
    for (j, outer) in tower.layers.iter().enumerate() {
        let span: BTreeSet<Root> = outer.iter().copied().collect();
        for inner in &tower.layers[j + 1..] {
            for a in outer {
                for b in inner {
                    if alg.structure_constant(a, b) != 0 && !span.contains(&(*a + *b)) {
                        out.push(format!("[{a}, {b}] leaves layer {}", j + 1));
                    }
                }
            }
        }
    }
    out
}

/// Generic coadjoint-orbit dimension of a rank-3 rankable representation:
/// each Heisenberg layer of dimension 2d+1 contributes 2d.
pub fn rank3_orbit_dim(tower: &HeisenbergTower) -> usize {
    tower.layers.iter().map(|l| l.len() - 1).sum()
}

/// dim N_B − dim U_2, where U_1 = N_B ∩ P̄ and U_2 adjoins the highest
/// root line to U_1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrincipalSeriesBound {
    pub positive_roots: usize,
    /// Positive roots of the Levi of P, i.e. dim U_1.
    pub levi_positive: usize,
    pub codim: usize,
}

impl PrincipalSeriesBound {
    /// Whether twice the codimension stays below `orbit_dim`.
    pub fn below(&self, orbit_dim: usize) -> bool {
        2 * self.codim < orbit_dim
    }
}

pub fn principal_series_codim(rs: &RootSystem) -> PrincipalSeriesBound {
    let n = rs.rank();
    let positive_roots = rs.num_positive();
    let levi_positive = rs.positive_roots().filter(|r| r.coeff(n) == 0).count();
    PrincipalSeriesBound {
        positive_roots,
        levi_positive,
        codim: positive_roots - (levi_positive + 1),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(kind: RootSystemType) -> ChevalleyAlgebra {
        ChevalleyAlgebra::new(&RootSystem::new(kind)).unwrap()
    }

    #[test]
    fn named_parabolics_e6() {
        let a = alg(RootSystemType::E6);
        let p = named_parabolic(&a, ParabolicName::P).unwrap();
        assert_eq!(p.dim_nilradical(), 16);
        assert!(p.is_abelian());

        let q = named_parabolic(&a, ParabolicName::Q).unwrap();
        assert_eq!(q.levi_keep, [1, 3, 4, 5, 6].into_iter().collect());
        assert_eq!(q.dim_nilradical(), 21);
        assert_eq!(q.nilpotency_class, 2);
        assert_eq!(q.center_roots, vec![a.root_system().highest_root()]);

        let r = named_parabolic(&a, ParabolicName::R).unwrap();
        assert_eq!(r.dim_nilradical(), 24);
        assert_eq!(r.nilpotency_class, 2);
        assert_eq!(r.center_roots.len(), 8);
        assert_eq!(r.center_roots, r.roots_of_depth(2));
    }

    #[test]
    fn named_parabolics_e7() {
        let a = alg(RootSystemType::E7);
        let p = named_parabolic(&a, ParabolicName::P).unwrap();
        assert_eq!(p.dim_nilradical(), 27);
        assert!(p.is_abelian());
        assert_eq!(p.center_roots.len(), 27);

        let q = named_parabolic(&a, ParabolicName::Q).unwrap();
        assert_eq!(q.levi_keep, (2..=7).collect());
        assert_eq!(q.dim_nilradical(), 33);

        let r = named_parabolic(&a, ParabolicName::R).unwrap();
        assert_eq!(r.dim_nilradical(), 42);
        assert_eq!(r.center_roots.len(), 10);
        assert_eq!(r.levi.type_label(), "A1xD5");

        let pg = named_parabolic(&a, ParabolicName::Pg).unwrap();
        assert_eq!(pg.levi_keep, [2, 3, 5, 7].into_iter().collect());
        assert_eq!(pg.dim_nilradical(), 59);
    }

    #[test]
    fn wrong_levi_is_reported() {
        let a = alg(RootSystemType::E6);
        let dec = decompose(&a, &[1, 2, 3].into_iter().collect()).unwrap();
        assert_eq!(dec.levi.type_label(), "A1xA2");
        assert_ne!(
            dec.levi.type_label(),
            ParabolicName::Q.expected_levi(RootSystemType::E6)
        );
    }

    #[test]
    fn towers() {
        let a6 = alg(RootSystemType::E6);
        let t6 = heisenberg_tower(&a6).unwrap();
        assert_eq!(t6.layer_dims(), vec![21, 9, 5]);
        assert_eq!(rank3_orbit_dim(&t6), 32);
        assert_eq!(t6.residual_nodes().unwrap(), [4].into_iter().collect());
        assert_eq!(t6.tower_index(0), 3);

        let a7 = alg(RootSystemType::E7);
        let t7 = heisenberg_tower(&a7).unwrap();
        assert_eq!(t7.layer_dims(), vec![33, 17, 9]);
        assert_eq!(rank3_orbit_dim(&t7), 56);
        assert_eq!(t7.residual_nodes().unwrap(), [2, 3, 5, 7].into_iter().collect());
    }

    #[test]
    fn single_layer_orbit_dimension() {
        let rs = RootSystem::new(RootSystemType::E6);
        let a = rs.simple(1);
        let b = rs.simple(3);
        let tower = HeisenbergTower {
            betas: vec![a + b],
            layers: vec![vec![a, b, a + b]],
            residual: rs.subsystem(&BTreeSet::new()).unwrap(),
        };
        assert_eq!(rank3_orbit_dim(&tower), 2);
    }

    #[test]
    fn codimension_bounds() {
        let e6 = principal_series_codim(&RootSystem::new(RootSystemType::E6));
        assert_eq!((e6.levi_positive, e6.codim), (20, 15));
        assert!(e6.below(32));
        let e7 = principal_series_codim(&RootSystem::new(RootSystemType::E7));
        assert_eq!((e7.levi_positive, e7.codim), (36, 26));
        assert!(e7.below(56));
    }
}
