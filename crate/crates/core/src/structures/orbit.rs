//! Induced Heisenberg ranks, stabilizers and orbit tangent spaces of the
//! Levi action on Z(u).

use num_traits::Zero;

use crate::chevalley::{kernel_dim, AlgElement, ChevalleyAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Rational};
use crate::parabolic::ParabolicDecomposition;
use crate::rootsys::Root;
use crate::structures::basis::{derived_levi_basis, full_levi_basis, BasisEF};
use crate::structures::decomp::UDecomposition;
use crate::structures::form::ZuForm;

/// Skew matrix ω_v(x, y) = ⟨v, [x, y]⟩ on the root vectors of `roots`,
/// with brackets read in Z(u) coordinates.
pub fn omega_v_matrix(
    alg: &ChevalleyAlgebra,
    basis: &BasisEF,
    form: &ZuForm,
    roots: &[Root],
    v: &[Rational],
) -> Result<Matrix> {
    let gv = form.gram.mul_vec(v);
    let e = basis.e_elements(alg);
    let n = roots.len();
    let mut m = Matrix::zeros(n, n);
    for i in 0..n {
        for j in i + 1..n {
            let br = alg.bracket(&alg.root_vector(&roots[i]), &alg.root_vector(&roots[j]));
            if br.is_zero() {
                continue;
            }
            let c = alg
                .coordinates(&e, &br)
                .ok_or_else(|| Error::Dimension(format!("[{}, {}] leaves Z(u)", roots[i], roots[j])))?;
            let val = c.iter().zip(&gv).fold(Rational::zero(), |acc, (a, b)| acc + a * b);
            m[(j, i)] = -val.clone();
            m[(i, j)] = val;
        }
    }
    Ok(m)
}

/// Rank of ω_v on X ⊕ Y.
pub fn induced_heisenberg_rank(
    alg: &ChevalleyAlgebra,
    ud: &UDecomposition,
    basis: &BasisEF,
    form: &ZuForm,
    v: &[Rational],
) -> Result<usize> {
    if v.iter().all(Zero::is_zero) {
        return Err(Error::ZeroVector);
    }
    Ok(omega_v_matrix(alg, basis, form, &ud.omega(), v)?.rank())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StabilizerDims {
    /// Dimension of the acting algebra.
    pub acting: usize,
    pub stabilizer: usize,
    /// Rank of x ↦ [x, v]: the orbit tangent dimension.
    pub orbit: usize,
}

fn evaluation_dims(
    alg: &ChevalleyAlgebra,
    basis: &BasisEF,
    acting: &[AlgElement],
    v: &[Rational],
) -> Result<StabilizerDims> {
    let action = alg.action_matrix(acting, &basis.e_elements(alg))?;
    let m = action.evaluate_at(v);
    let stabilizer = kernel_dim(&m);
    Ok(StabilizerDims {
        acting: acting.len(),
        stabilizer,
        orbit: m.rank(),
    })
}

/// Stabilizer of v in [s, s].
pub fn stabilizer_dim(
    alg: &ChevalleyAlgebra,
    r: &ParabolicDecomposition,
    basis: &BasisEF,
    v: &[Rational],
) -> Result<StabilizerDims> {
    evaluation_dims(alg, basis, &derived_levi_basis(alg, r), v)
}

/// Orbit tangent dimension of v under the full Levi s.
pub fn orbit_tangent_dim(
    alg: &ChevalleyAlgebra,
    r: &ParabolicDecomposition,
    basis: &BasisEF,
    v: &[Rational],
) -> Result<usize> {
    Ok(evaluation_dims(alg, basis, &full_levi_basis(alg, r), v)?.orbit)
}

/// For each component of the Levi of R: its type label and whether its
/// root vectors and coroots all act by zero on Z(u).
pub fn trivially_acting_components(
    alg: &ChevalleyAlgebra,
    r: &ParabolicDecomposition,
    basis: &BasisEF,
) -> Result<Vec<(String, bool)>> {
    let module = basis.e_elements(alg);
    let mut out = Vec::new();
    for comp in &r.levi.components {
        let acting: Vec<AlgElement> = comp
            .positive
            .iter()
            .flat_map(|a| [alg.root_vector(a), alg.root_vector(&-*a)])
            .chain(comp.simple.iter().map(|a| alg.coroot(a)))
            .collect();
        let action = alg.action_matrix(&acting, &module)?;
        out.push((comp.kind.to_string(), action.blocks.iter().all(Matrix::is_zero)));
    }
    Ok(out)
}

/// Per Levi component of R: (type label, dimension, stabilizer of v).
pub fn component_stabilizers(
    alg: &ChevalleyAlgebra,
    r: &ParabolicDecomposition,
    basis: &BasisEF,
    v: &[Rational],
) -> Result<Vec<(String, StabilizerDims)>> {
    r.levi
        .components
        .iter()
        .map(|comp| {
            let acting: Vec<AlgElement> = comp
                .positive
                .iter()
                .flat_map(|a| [alg.root_vector(a), alg.root_vector(&-*a)])
                .chain(comp.simple.iter().map(|a| alg.coroot(a)))
                .collect();
            Ok((comp.kind.to_string(), evaluation_dims(alg, basis, &acting, v)?))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;
    use crate::rootsys::RootSystemType;
    use crate::structures::form::unit;
    use crate::structures::Structures;

    #[test]
    fn e6_small_and_big_ranks() {
        let st = Structures::new(RootSystemType::E6).unwrap();
        let e1 = unit(&st.basis, 1);
        let big: Vec<Rational> = e1.iter().zip(unit(&st.basis, -1)).map(|(a, b)| a + b).collect();
        assert_eq!(
            induced_heisenberg_rank(&st.alg, &st.u, &st.basis, &st.form, &e1).unwrap(),
            8
        );
        assert_eq!(
            induced_heisenberg_rank(&st.alg, &st.u, &st.basis, &st.form, &big).unwrap(),
            16
        );
        let zero = vec![rat(0); 8];
        assert!(matches!(
            induced_heisenberg_rank(&st.alg, &st.u, &st.basis, &st.form, &zero),
            Err(Error::ZeroVector)
        ));
        let d = stabilizer_dim(&st.alg, &st.r, &st.basis, &big).unwrap();
        assert_eq!((d.acting, d.stabilizer, d.orbit), (28, 21, 7));
        assert_eq!(orbit_tangent_dim(&st.alg, &st.r, &st.basis, &big).unwrap(), 8);
        assert_eq!(stabilizer_dim(&st.alg, &st.r, &st.basis, &zero).unwrap().stabilizer, 28);
    }
}
