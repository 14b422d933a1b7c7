//! E7 only: the partition of Ω = X ∪ Y into α7-linked quadruples and the
//! SL2-stable polarization X1 ⊕ Y1.

use std::collections::BTreeSet;

use crate::chevalley::{AlgElement, ChevalleyAlgebra};
use crate::error::{Error, Result};
use crate::linalg::Rational;
use crate::rootsys::{Root, RootSystemType};
use crate::structures::basis::BasisEF;
use crate::structures::decomp::UDecomposition;
use crate::structures::form::ZuForm;
use crate::structures::orbit::omega_v_matrix;

/// Blocks (a1, a2, a3, a4) with a2 = a1 + α7, a3 = β_j − a2, a4 = a3 + α7.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaPartition {
    pub blocks: Vec<[Root; 4]>,
    /// j for each block, 1 or 2.
    pub j_choice: Vec<u8>,
}

impl OmegaPartition {
    /// First half of every block: the roots (a1, a2).
    pub fn first_halves(&self) -> BTreeSet<Root> {
        self.blocks.iter().flat_map(|b| [b[0], b[1]]).collect()
    }

    pub fn second_halves(&self) -> BTreeSet<Root> {
        self.blocks.iter().flat_map(|b| [b[2], b[3]]).collect()
    }

    /// The same partition with block `t` read from its other end.
    pub fn flipped(&self, t: usize) -> OmegaPartition {
        let mut out = self.clone();
        let [a1, a2, a3, a4] = out.blocks[t];
        out.blocks[t] = [a3, a4, a1, a2];
        out
    }
}

/// Defects of one block against both conditions, empty when it passes.
pub fn block_defects(block: &[Root; 4], j: u8, betas: [Root; 2], alpha7: Root, ud: &UDecomposition) -> Vec<String> {
    let [a1, a2, a3, a4] = *block;
    let beta = betas[(j - 1) as usize];
    let mut out = Vec::new();
    if a2 != a1 + alpha7 {
        out.push(format!("{a2} ≠ {a1} + α7"));
    }
    if a3 != beta - a2 {
        out.push(format!("{a3} ≠ β{j} − {a2}"));
    }
    if a4 != a3 + alpha7 {
        out.push(format!("{a4} ≠ {a3} + α7"));
    }
    for a in [a1, a3] {
        if !ud.x.contains(&a) {
            out.push(format!("{a} is not in X"));
        }
    }
    for a in [a2, a4] {
        if !ud.y.contains(&a) {
            out.push(format!("{a} is not in Y"));
        }
    }
    out
}

fn search(
    remaining: &BTreeSet<Root>,
    betas: [Root; 2],
    alpha7: Root,
    ud: &UDecomposition,
    acc: &mut OmegaPartition,
) -> bool {
    let Some(&a1) = remaining.iter().find(|a| ud.x.contains(a)) else {
        return remaining.is_empty();
    };
    let a2 = a1 + alpha7;
    for j in [1u8, 2] {
        let a3 = betas[(j - 1) as usize] - a2;
        let a4 = a3 + alpha7;
        let block = [a1, a2, a3, a4];
        let distinct: BTreeSet<Root> = block.iter().copied().collect();
        if distinct.len() != 4
            || !block.iter().all(|a| remaining.contains(a))
            || !block_defects(&block, j, betas, alpha7, ud).is_empty()
        {
            continue;
        }
        let rest: BTreeSet<Root> = remaining.difference(&distinct).copied().collect();
        acc.blocks.push(block);
        acc.j_choice.push(j);
        if search(&rest, betas, alpha7, ud, acc) {
            return true;
        }
        acc.blocks.pop();
        acc.j_choice.pop();
    }
    false
}

/// Partition Ω, taking each block's a1 as the smallest remaining root of X.
pub fn omega_partition(alg: &ChevalleyAlgebra, ud: &UDecomposition, beta2: Root) -> Result<OmegaPartition> {
    let rs = alg.root_system();
    if rs.kind() != RootSystemType::E7 {
        return Err(Error::RequiresE7("omega partition"));
    }
    let betas = [rs.highest_root(), beta2];
    let alpha7 = rs.simple(7);
    let omega: BTreeSet<Root> = ud.omega().into_iter().collect();
    let mut acc = OmegaPartition {
        blocks: Vec::new(),
        j_choice: Vec::new(),
    };
    if !search(&omega, betas, alpha7, ud, &mut acc) {
        return Err(Error::Partition("no partition into linked quadruples".into()));
    }
    Ok(acc)
}

/// Failures of `(x1, y1)` as a polarization of Ω that is Lagrangian for
/// ω_v and stable modulo Z(u) under the α7 triple.
pub fn polarization_defects(
    alg: &ChevalleyAlgebra,
    ud: &UDecomposition,
    basis: &BasisEF,
    form: &ZuForm,
    v: &[Rational],
    x1: &BTreeSet<Root>,
    y1: &BTreeSet<Root>,
) -> Result<Vec<String>> {
    let mut out = Vec::new();
    let omega: BTreeSet<Root> = ud.omega().into_iter().collect();
    if !x1.is_disjoint(y1) {
        out.push("halves overlap".into());
    }
    let union: BTreeSet<Root> = x1.union(y1).copied().collect();
    if union != omega {
        out.push(format!(
            "halves cover {} of {} roots of Ω",
            union.intersection(&omega).count(),
            omega.len()
        ));
    }
    if x1.len() != y1.len() {
        out.push(format!("half sizes {} and {}", x1.len(), y1.len()));
    }
    for (name, half) in [("X1", x1), ("Y1", y1)] {
        let roots: Vec<Root> = half.iter().copied().collect();
        if !omega_v_matrix(alg, basis, form, &roots, v)?.is_zero() {
            out.push(format!("{name} is not isotropic"));
        }
    }
    let all: Vec<Root> = union.iter().copied().collect();
    let full_rank = omega_v_matrix(alg, basis, form, &all, v)?.rank();
    if full_rank != all.len() {
        out.push(format!("ω_v has rank {full_rank} on {} roots", all.len()));
    }
    let a7 = alg.root_system().simple(7);
    let triple = [alg.root_vector(&a7), alg.coroot(&a7), alg.root_vector(&-a7)];
    let zu: BTreeSet<Root> = ud.zu.iter().copied().collect();
    for (name, half) in [("X1", x1), ("Y1", y1)] {
        for a in half {
            for (t, x) in triple.iter().enumerate() {
                if let Some(bad) = leaves(alg, x, a, half, &zu) {
                    out.push(format!("triple element {t} moves {a} to {bad} outside {name} + Z(u)"));
                }
            }
        }
    }
    Ok(out)
}

fn leaves(
    alg: &ChevalleyAlgebra,
    x: &AlgElement,
    a: &Root,
    half: &BTreeSet<Root>,
    zu: &BTreeSet<Root>,
) -> Option<String> {
    let br = alg.bracket(x, &alg.root_vector(a));
    for (i, _) in br.terms() {
        match alg.basis_root(i) {
            Some(r) if half.contains(&r) || zu.contains(&r) => {}
            Some(r) => return Some(r.to_string()),
            None => return Some(format!("h_{}", i - alg.num_roots() + 1)),
        }
    }
    None
}

/// Orient every block so that its first halves form a Lagrangian
/// polarization; blocks are flipped in order, the first success wins.
pub fn derived_polarization(
    alg: &ChevalleyAlgebra,
    ud: &UDecomposition,
    basis: &BasisEF,
    form: &ZuForm,
    v: &[Rational],
    partition: &OmegaPartition,
) -> Result<OmegaPartition> {
    let n = partition.blocks.len();
    for mask in 0u32..(1 << n) {
        let mut p = partition.clone();
        for t in (0..n).filter(|t| mask & (1 << t) != 0) {
            p = p.flipped(t);
        }
        let defects = polarization_defects(alg, ud, basis, form, v, &p.first_halves(), &p.second_halves())?;
        if defects.is_empty() {
            return Ok(p);
        }
    }
    Err(Error::Polarization("no orientation of the blocks is Lagrangian".into()))
}

/// Orient each block so that its (a1, a2) lie in `x1`, as far as possible.
pub fn orient_by(partition: &OmegaPartition, x1: &BTreeSet<Root>) -> OmegaPartition {
    let mut p = partition.clone();
    for t in 0..p.blocks.len() {
        let b = p.blocks[t];
        if !x1.contains(&b[0]) && x1.contains(&b[2]) {
            p = p.flipped(t);
        }
    }
    p
}

/// P's nilradical as Y ⊔ Z(u) ⊔ {α7}; returns the defects.
pub fn n_decomposition_defects(alg: &ChevalleyAlgebra, p_nil: &[Root], ud: &UDecomposition) -> Vec<String> {
    let a7 = alg.root_system().simple(alg.rank());
    let parts: Vec<Root> = ud.y.iter().chain(&ud.zu).copied().chain([a7]).collect();
    let set: BTreeSet<Root> = parts.iter().copied().collect();
    let nil: BTreeSet<Root> = p_nil.iter().copied().collect();
    let mut out = Vec::new();
    if set.len() != parts.len() {
        out.push("Y, Z(u) and α7 overlap".into());
    }
    for r in nil.difference(&set) {
        out.push(format!("{r} in n is missing from the union"));
    }
    for r in set.difference(&nil) {
        out.push(format!("{r} in the union is not in n"));
    }
    out
}
