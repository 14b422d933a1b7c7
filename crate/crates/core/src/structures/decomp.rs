//! The splittings u = X ⊕ Y ⊕ Z(u) of the two-step nilradical of R and
//! n3 = W ⊕ W* ⊕ Z(n3) of the Heisenberg nilradical of Q.

use std::collections::BTreeSet;

use crate::chevalley::ChevalleyAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{rat, Matrix};
use crate::parabolic::{central_form, ParabolicDecomposition};
use crate::rootsys::Root;

#[derive(Clone, Debug)]
pub struct UDecomposition {
    /// u ∩ l: roots of u with vanishing last coefficient.
    pub x: Vec<Root>,
    pub y: Vec<Root>,
    /// Center of u, computed from brackets.
    pub zu: Vec<Root>,
}

impl UDecomposition {
    pub fn dims(&self) -> (usize, usize, usize) {
        (self.x.len(), self.y.len(), self.zu.len())
    }

    /// Ω: roots of X ⊕ Y.
    pub fn omega(&self) -> Vec<Root> {
        let mut out: Vec<Root> = self.x.iter().chain(&self.y).copied().collect();
        out.sort();
        out
    }
}

/// Split the nilradical of R. `r` and `p` are the named parabolics R, P.
pub fn u_decompose(r: &ParabolicDecomposition, p: &ParabolicDecomposition) -> Result<UDecomposition> {
    let n = p
        .nilradical_roots
        .first()
        .map(|a| a.rank())
        .ok_or_else(|| Error::Decomposition("P has an empty nilradical".into()))?;
    let zu = r.center_roots.clone();
    let center: BTreeSet<Root> = zu.iter().copied().collect();

    let x: Vec<Root> = r.nilradical_roots.iter().filter(|a| a.coeff(n) == 0).copied().collect();
    if let Some(a) = x.iter().find(|a| center.contains(a)) {
        return Err(Error::Decomposition(format!(
            "root {a} lies in both u ∩ l and the center of u"
        )));
    }
    let y: Vec<Root> = r
        .nilradical_roots
        .iter()
        .filter(|a| a.coeff(n) != 0 && !center.contains(a))
        .copied()
        .collect();

    // Root spaces are lines, so a root-space complement of X ⊕ Z(u) must use
    // exactly the remaining roots; it is forced once the counts agree.
    let needed = r.dim_nilradical() - x.len() - zu.len();
    if y.len() != needed {
        return Err(Error::Decomposition(format!(
            "{} roots remain for a complement of dimension {needed}",
            y.len()
        )));
    }
    if zu != r.roots_of_depth(r.max_depth) {
        return Err(Error::Decomposition("center of u is not the top graded layer".into()));
    }
    Ok(UDecomposition { x, y, zu })
}

#[derive(Clone, Debug)]
pub struct N3Decomposition {
    /// n3 ∩ l.
    pub w: Vec<Root>,
    pub wstar: Vec<Root>,
    pub center: Vec<Root>,
}

impl N3Decomposition {
    pub fn dims(&self) -> (usize, usize, usize) {
        (self.w.len(), self.wstar.len(), self.center.len())
    }
}

/// Split the nilradical of Q and check that W, W* polarize n3 / Z(n3).
pub fn n3_decompose(alg: &ChevalleyAlgebra, q: &ParabolicDecomposition) -> Result<N3Decomposition> {
    let rs = alg.root_system();
    let n = rs.rank();
    let b1 = rs.highest_root();
    if q.center_roots != [b1] {
        return Err(Error::Decomposition(format!(
            "center of n3 is {:?}, expected the highest root line",
            q.center_roots
        )));
    }
    let w: Vec<Root> = q.nilradical_roots.iter().filter(|a| a.coeff(n) == 0).copied().collect();
    let wstar: Vec<Root> = q
        .nilradical_roots
        .iter()
        .filter(|a| a.coeff(n) != 0 && **a != b1)
        .copied()
        .collect();
    let dec = N3Decomposition {
        w,
        wstar,
        center: vec![b1],
    };
    if let Some(reason) = polarization_defect(alg, &dec.w, &dec.wstar, &b1) {
        return Err(Error::Decomposition(reason));
    }
    Ok(dec)
}

/// `None` when `a` and `b` are complementary Lagrangians for the bracket
/// form with values in the `center` line.
pub fn polarization_defect(alg: &ChevalleyAlgebra, a: &[Root], b: &[Root], center: &Root) -> Option<String> {
    if a.len() != b.len() {
        return Some(format!("halves have sizes {} and {}", a.len(), b.len()));
    }
    if !central_form(alg, a, center).is_zero() {
        return Some("first half is not isotropic".into());
    }
    if !central_form(alg, b, center).is_zero() {
        return Some("second half is not isotropic".into());
    }
    let all: Vec<Root> = a.iter().chain(b).copied().collect();
    let rank = central_form(alg, &all, center).rank();
    if rank != all.len() {
        return Some(format!("form has rank {rank} on {} dimensions", all.len()));
    }
    None
}

/// Dimension of the center of the span of `roots`, by linear algebra on
/// the bracket map x ↦ ([x, e_β])_β rather than root by root.
pub fn center_dim_linear(alg: &ChevalleyAlgebra, roots: &[Root]) -> usize {
    let n = roots.len();
    let index: std::collections::BTreeMap<Root, usize> = roots.iter().enumerate().map(|(i, r)| (*r, i)).collect();
    let mut m = Matrix::zeros(n * n, n);
    for (xi, x) in roots.iter().enumerate() {
        for (yi, y) in roots.iter().enumerate() {
            let c = alg.structure_constant(x, y);
            if c == 0 {
                continue;
            }
            // [e_x, e_y] lies in the span when the subalgebra is closed.
            let target = index.get(&(*x + *y)).copied().unwrap_or(0);
            m[(yi * n + target, xi)] = rat(c as i64);
        }
    }
    m.nullity()
}

/// Number of ways to pick a sum of root spaces complementing the roots in
/// `fixed` inside the span of `all`, given the required dimension.
pub fn root_complement_count(all: &[Root], fixed: &[Root], dim: usize) -> u128 {
    let free = all.iter().filter(|a| !fixed.contains(a)).count();
    if dim > free {
        return 0;
    }
    // binomial(free, dim)
    (0..dim as u128).fold(1u128, |acc, i| acc * (free as u128 - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parabolic::{named_parabolic, ParabolicName};
    use crate::rootsys::{RootSystem, RootSystemType};

    #[test]
    fn complement_count_is_binomial() {
        let all: Vec<Root> = (1..=5).map(|i| Root::simple(5, i)).collect();
        assert_eq!(root_complement_count(&all, &all[..2], 3), 1);
        assert_eq!(root_complement_count(&all, &all[..1], 2), 6);
        assert_eq!(root_complement_count(&all, &all[..4], 2), 0);
    }

    #[test]
    fn e6_dimensions() {
        let alg = ChevalleyAlgebra::new(&RootSystem::new(RootSystemType::E6)).unwrap();
        let p = named_parabolic(&alg, ParabolicName::P).unwrap();
        let q = named_parabolic(&alg, ParabolicName::Q).unwrap();
        let r = named_parabolic(&alg, ParabolicName::R).unwrap();
        assert_eq!(u_decompose(&r, &p).unwrap().dims(), (8, 8, 8));
        assert_eq!(n3_decompose(&alg, &q).unwrap().dims(), (10, 10, 1));
        assert_eq!(center_dim_linear(&alg, &r.nilradical_roots), 8);
        assert_eq!(center_dim_linear(&alg, &q.nilradical_roots), 1);
    }

    #[test]
    fn unbalanced_halves_are_rejected() {
        let alg = ChevalleyAlgebra::new(&RootSystem::new(RootSystemType::E6)).unwrap();
        let q = named_parabolic(&alg, ParabolicName::Q).unwrap();
        let d = n3_decompose(&alg, &q).unwrap();
        let b1 = alg.root_system().highest_root();
        assert!(polarization_defect(&alg, &d.w, &d.wstar, &b1).is_none());
        assert!(polarization_defect(&alg, &d.w[1..], &d.wstar, &b1).is_some());
        assert!(polarization_defect(&alg, &d.w, &d.w, &b1).is_some());
    }
}
