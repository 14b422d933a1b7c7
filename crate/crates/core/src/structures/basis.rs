//! Search for the bases {e_i} of Z(u) and {f_i} of W ∩ s.
//!
//! Indices run over ±1..±k with k = n − 2 for e, and ±2..±k for f. Every
//! basis vector is a rational multiple of a Chevalley root vector. The
//! search assigns roots slot by slot (e_2..e_k, then e_{-2}..e_{-k}),
//! trying candidates in order of decreasing height with ties broken by
//! increasing coefficient vector, then fixes signs of the e_{-i} so that
//! the hyperbolic form of the basis is Levi-invariant. The first
//! assignment passing every check is returned.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};

use crate::chevalley::{AlgElement, ChevalleyAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{rat, Matrix, Rational};
use crate::parabolic::ParabolicDecomposition;
use crate::rootsys::Root;
use crate::structures::decomp::{N3Decomposition, UDecomposition};

/// `scale · e_root`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScaledRoot {
    pub root: Root,
    pub scale: Rational,
}

impl ScaledRoot {
    pub fn element(&self, alg: &ChevalleyAlgebra) -> AlgElement {
        AlgElement::basis_scaled(alg.root_index(&self.root).expect("root"), self.scale.clone())
    }
}

#[derive(Clone, Debug)]
pub struct BasisEF {
    /// k = n − 2.
    pub k: usize,
    pub e: BTreeMap<i32, ScaledRoot>,
    pub f: BTreeMap<i32, ScaledRoot>,
}

impl BasisEF {
    /// e-indices in Gram order: 1..k, then −1..−k.
    pub fn e_order(&self) -> Vec<i32> {
        let k = self.k as i32;
        (1..=k).chain((1..=k).map(|i| -i)).collect()
    }

    /// f-indices: 2..k, then −2..−k.
    pub fn f_order(&self) -> Vec<i32> {
        let k = self.k as i32;
        (2..=k).chain((2..=k).map(|i| -i)).collect()
    }

    pub fn e(&self, i: i32) -> &ScaledRoot {
        &self.e[&i]
    }

    pub fn f(&self, i: i32) -> &ScaledRoot {
        &self.f[&i]
    }

    /// Position of e_i in Gram order.
    pub fn position(&self, i: i32) -> usize {
        if i > 0 {
            (i - 1) as usize
        } else {
            self.k + (-i - 1) as usize
        }
    }

    /// The e-basis as algebra elements in Gram order.
    pub fn e_elements(&self, alg: &ChevalleyAlgebra) -> Vec<AlgElement> {
        self.e_order().iter().map(|i| self.e(*i).element(alg)).collect()
    }

    /// e-coordinates of an element of Z(u).
    pub fn zu_coordinates(&self, alg: &ChevalleyAlgebra, x: &AlgElement) -> Option<Vec<Rational>> {
        alg.coordinates(&self.e_elements(alg), x)
    }

    /// The element with the given e-coordinates.
    pub fn zu_element(&self, alg: &ChevalleyAlgebra, v: &[Rational]) -> AlgElement {
        self.e_elements(alg)
            .iter()
            .zip(v)
            .fold(AlgElement::zero(), |acc, (e, c)| acc.add(&e.scale(c)))
    }
}

/// Hyperbolic Gram matrix: ⟨e_i, e_{-j}⟩ = δ_ij, all other pairings zero.
pub fn hyperbolic_gram(k: usize) -> Matrix {
    let mut g = Matrix::zeros(2 * k, 2 * k);
    for i in 0..k {
        g[(i, k + i)] = Rational::one();
        g[(k + i, i)] = Rational::one();
    }
    g
}

/// Chevalley basis of [s, s]: root vectors of the Levi roots and the
/// coroots of the Levi nodes.
pub fn derived_levi_basis(alg: &ChevalleyAlgebra, r: &ParabolicDecomposition) -> Vec<AlgElement> {
    r.levi_roots()
        .iter()
        .map(|a| alg.root_vector(a))
        .chain(r.levi_keep.iter().map(|&i| alg.cartan_vector(i)))
        .collect()
}

/// Basis of s: Levi root vectors and the full Cartan subalgebra.
pub fn full_levi_basis(alg: &ChevalleyAlgebra, r: &ParabolicDecomposition) -> Vec<AlgElement> {
    r.levi_roots()
        .iter()
        .map(|a| alg.root_vector(a))
        .chain((1..=alg.rank()).map(|i| alg.cartan_vector(i)))
        .collect()
}

/// Number of (generator, u, w) triples violating
/// ⟨[x,u],w⟩ + ⟨u,[x,w]⟩ = 0 for the hyperbolic form on `basis`.
pub fn invariance_violations(
    alg: &ChevalleyAlgebra,
    basis: &BasisEF,
    gram: &Matrix,
    generators: &[AlgElement],
) -> Result<usize> {
    let module = basis.e_elements(alg);
    let action = alg.action_matrix(generators, &module)?;
    let d = module.len();
    let mut bad = 0;
    for a in &action.blocks {
        for u in 0..d {
            for w in 0..d {
                // ⟨A e_u, e_w⟩ + ⟨e_u, A e_w⟩
                let mut s = Rational::zero();
                for m in 0..d {
                    s += &a[(m, u)] * &gram[(m, w)] + &gram[(u, m)] * &a[(m, w)];
                }
                if !s.is_zero() {
                    bad += 1;
                }
            }
        }
    }
    Ok(bad)
}

struct Search<'a> {
    alg: &'a ChevalleyAlgebra,
    k: usize,
    b1: Root,
    candidates: Vec<Root>,
    w_cap_s: BTreeSet<Root>,
    n3: Vec<Root>,
    generators: Vec<AlgElement>,
    /// e_{±α_i} for the simple roots of the Levi of R.
    simple_generators: Vec<AlgElement>,
}

impl Search<'_> {
    fn slot_order(&self) -> Vec<i32> {
        let k = self.k as i32;
        (2..=k).chain((2..=k).map(|i| -i)).collect()
    }

    fn fits(&self, chosen: &BTreeMap<i32, Root>, slot: i32, root: &Root) -> bool {
        let f = self.b1 - *root;
        if !self.w_cap_s.contains(&f) || chosen.values().any(|r| r == root) {
            return false;
        }
        // [e_a, f_b] = 0 for a ≠ b, in both directions.
        chosen.iter().all(|(&other, r)| {
            let f_other = self.b1 - *r;
            other != slot
                && f_other != f
                && self.alg.structure_constant(root, &f_other) == 0
                && self.alg.structure_constant(r, &f) == 0
        })
    }

    fn run(&self, chosen: &mut BTreeMap<i32, Root>, slots: &[i32]) -> Option<BasisEF> {
        let Some((&slot, rest)) = slots.split_first() else {
            return self.complete(chosen);
        };
        for cand in &self.candidates {
            if self.fits(chosen, slot, cand) {
                chosen.insert(slot, *cand);
                if let Some(b) = self.run(chosen, rest) {
                    return Some(b);
                }
                chosen.remove(&slot);
            }
        }
        None
    }

    /// Fix scales for a full root assignment and run the remaining checks.
    fn complete(&self, chosen: &BTreeMap<i32, Root>) -> Option<BasisEF> {
        let k = self.k as i32;
        let b2 = *self.candidates_beta2();
        let mut roots: BTreeMap<i32, Root> = chosen.clone();
        roots.insert(1, self.b1);
        roots.insert(-1, b2);

        // Part e does not depend on scales; reject early.
        let spanned: BTreeSet<Root> = roots.values().flat_map(|r| [*r, self.b1 - *r]).collect();
        if self
            .n3
            .iter()
            .any(|a| !spanned.contains(a) && self.alg.structure_constant(&b2, a) != 0)
        {
            return None;
        }

        // Unscaled action of the Levi Chevalley generators; a ±1 rescaling
        // D conjugates it to D A D.
        let order: Vec<i32> = (1..=k).chain((1..=k).map(|i| -i)).collect();
        let module: Vec<AlgElement> = order.iter().map(|i| self.alg.root_vector(&roots[i])).collect();
        let action = self.alg.action_matrix(&self.simple_generators, &module).ok()?;
        let d = module.len();
        let partner = |m: usize| (m + self.k) % d;

        let gram = hyperbolic_gram(self.k);
        for signs in 0u32..(1 << (self.k - 1)) {
            let sign = |m: usize| -> i64 {
                let i = order[m];
                if i < -1 && signs & (1 << (-i - 2)) != 0 {
                    -1
                } else {
                    1
                }
            };
            let invariant = action.blocks.iter().all(|a| {
                (0..d).all(|u| {
                    (0..d).all(|w| {
                        let x = &a[(partner(w), u)] * rat(sign(partner(w)) * sign(u))
                            + &a[(partner(u), w)] * rat(sign(partner(u)) * sign(w));
                        x.is_zero()
                    })
                })
            });
            if !invariant {
                continue;
            }
            let e: BTreeMap<i32, ScaledRoot> = order
                .iter()
                .enumerate()
                .map(|(m, &i)| (i, scaled(roots[&i], sign(m))))
                .collect();
            // f_a pairs with e_a onto e_1: N · scale(e_a) · scale(f_a) = 1.
            let mut f = BTreeMap::new();
            for (&i, sr) in e.iter().filter(|(i, _)| i.abs() >= 2) {
                let fr = self.b1 - sr.root;
                let n = self.alg.structure_constant(&sr.root, &fr);
                let scale = (sr.scale.clone() * rat(n as i64)).recip();
                f.insert(i, ScaledRoot { root: fr, scale });
            }
            let basis = BasisEF { k: self.k, e, f };
            if matches!(invariance_violations(self.alg, &basis, &gram, &self.generators), Ok(0))
                && lemma_defects(self.alg, &basis, &self.n3, &self.w_cap_s).is_empty()
            {
                return Some(basis);
            }
        }
        None
    }

    fn candidates_beta2(&self) -> &Root {
        self.candidates.last().expect("β2 stored last")
    }
}

fn scaled(root: Root, s: i64) -> ScaledRoot {
    ScaledRoot { root, scale: rat(s) }
}

/// Every failed lemma condition for `basis`, as readable strings.
pub fn lemma_defects(alg: &ChevalleyAlgebra, basis: &BasisEF, n3: &[Root], w_cap_s: &BTreeSet<Root>) -> Vec<String> {
    let mut out = Vec::new();
    let e1 = basis.e(1).element(alg);
    let em1 = basis.e(-1).element(alg);

    // Part c: [e_a, f_b] = δ_ab e_1.
    for &a in &basis.f_order() {
        for &b in &basis.f_order() {
            let br = alg.bracket(&basis.e(a).element(alg), &basis.f(b).element(alg));
            let expected = if a == b { e1.clone() } else { AlgElement::zero() };
            if br != expected {
                out.push(format!("[e_{a}, f_{b}] is not δ·e_1"));
            }
        }
    }
    // f spans W ∩ s.
    let f_roots: BTreeSet<Root> = basis.f.values().map(|s| s.root).collect();
    if &f_roots != w_cap_s {
        out.push("f-roots differ from W ∩ s".into());
    }
    // Part e: root spaces of n3 outside span{e, f} commute with e_{-1}.
    let spanned: BTreeSet<Root> = basis.e.values().chain(basis.f.values()).map(|s| s.root).collect();
    for a in n3.iter().filter(|a| !spanned.contains(a)) {
        if !alg.bracket(&em1, &alg.root_vector(a)).is_zero() {
            out.push(format!("[e_-1, g_{a}] ≠ 0"));
        }
    }
    // [e_{-1}, f_i] = −e_{−i}.
    for &i in &basis.f_order() {
        let lhs = alg.bracket(&em1, &basis.f(i).element(alg));
        let rhs = basis.e(-i).element(alg).scale(&rat(-1));
        if lhs != rhs {
            out.push(format!("[e_-1, f_{i}] ≠ −e_{}", -i));
        }
    }
    out
}

/// Find the e/f bases for the structures of R, Q and P.
pub fn find_basis_ef(
    alg: &ChevalleyAlgebra,
    r: &ParabolicDecomposition,
    q: &ParabolicDecomposition,
    ud: &UDecomposition,
    n3d: &N3Decomposition,
) -> Result<BasisEF> {
    let rs = alg.root_system();
    let b1 = rs.highest_root();
    let b2 = q
        .levi
        .tallest_highest_root()
        .ok_or_else(|| Error::BasisSearch("Levi of Q is empty".into()))?;
    for b in [b1, b2] {
        if !ud.zu.contains(&b) {
            return Err(Error::BasisSearch(format!("{b} is not a root of Z(u)")));
        }
    }
    let levi_r: BTreeSet<Root> = r.levi_roots().iter().copied().collect();
    let w_cap_s: BTreeSet<Root> = n3d.w.iter().filter(|a| levi_r.contains(a)).copied().collect();

    let mut candidates: Vec<Root> = ud.zu.iter().filter(|a| **a != b1 && **a != b2).copied().collect();
    candidates.sort_by(|a, b| b.height().cmp(&a.height()).then_with(|| a.coeffs().cmp(b.coeffs())));
    let k = rs.rank() - 2;
    if candidates.len() != 2 * (k - 1) {
        return Err(Error::BasisSearch(format!(
            "Z(u) has {} roots besides β1, β2; expected {}",
            candidates.len(),
            2 * (k - 1)
        )));
    }
    // β2 rides along at the end so `complete` can find it; `fits` rejects it
    // because β1 − β2 is never in W ∩ s.
    candidates.push(b2);

    let search = Search {
        alg,
        k,
        b1,
        candidates,
        w_cap_s,
        n3: n3d.w.iter().chain(&n3d.wstar).chain(&n3d.center).copied().collect(),
        generators: derived_levi_basis(alg, r),
        simple_generators: r
            .levi_keep
            .iter()
            .flat_map(|&i| {
                let a = rs.simple(i);
                [alg.root_vector(&a), alg.root_vector(&-a)]
            })
            .collect(),
    };
    let slots = search.slot_order();
    search
        .run(&mut BTreeMap::new(), &slots)
        .ok_or_else(|| Error::BasisSearch("exhausted every root assignment".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::RootSystemType;
    use crate::structures::Structures;

    #[test]
    fn positions_follow_gram_order() {
        let st = Structures::new(RootSystemType::E7).unwrap();
        let b = &st.basis;
        assert_eq!(b.k, 5);
        let pos: Vec<usize> = b.e_order().into_iter().map(|i| b.position(i)).collect();
        let mut sorted = pos.clone();
        sorted.sort();
        assert_eq!(sorted, (0..10).collect::<Vec<_>>());
        assert_eq!(b.position(1), 0);
        assert_eq!(b.position(-1), 5);
        assert_eq!(hyperbolic_gram(2)[(0, 2)], Rational::one());
        assert_eq!(hyperbolic_gram(2)[(0, 1)], Rational::zero());
    }

    #[test]
    fn lemma_holds_and_detects_a_broken_scale() {
        let st = Structures::new(RootSystemType::E6).unwrap();
        let w_cap_s: BTreeSet<Root> = st.basis.f.values().map(|f| f.root).collect();
        assert!(lemma_defects(&st.alg, &st.basis, &st.q.nilradical_roots, &w_cap_s).is_empty());
        let mut broken = st.basis.clone();
        broken.f.get_mut(&2).unwrap().scale *= Rational::from_integer(2.into());
        assert!(!lemma_defects(&st.alg, &broken, &st.q.nilradical_roots, &w_cap_s).is_empty());
    }

    #[test]
    fn zu_coordinates_round_trip() {
        let st = Structures::new(RootSystemType::E6).unwrap();
        let v: Vec<Rational> = (1..=8).map(|i| Rational::from_integer(i.into())).collect();
        let x = st.basis.zu_element(&st.alg, &v);
        assert_eq!(st.basis.zu_coordinates(&st.alg, &x), Some(v));
    }
}
