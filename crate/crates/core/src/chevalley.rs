//! Split simply-laced Lie algebra on a Chevalley basis.
//!
//! Basis vectors are the root vectors e_α, indexed by the position of α in
//! the canonical root order, followed by the coroots h_1..h_n. Signs of the
//! structure constants are fixed by declaring N_{α,β} = +1 on every
//! extraspecial pair (α is the smallest positive root in canonical order
//! such that α + β is the given sum) and propagating through the
//! three-root and four-root relations, in order of increasing height.
//!
//! Conventions: [e_α, e_{-α}] = h_α, N_{-α,-β} = -N_{α,β},
//! [h_i, e_β] = ⟨β, α_i∨⟩ e_β.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::{rat, Matrix, Rational};
use crate::rootsys::{Root, RootSystem};

const NO_SUM: u16 = u16::MAX;

#[derive(Clone, Debug)]
pub struct ChevalleyAlgebra {
    rs: RootSystem,
    nroots: usize,
    /// Index of α+β when it is a root, row-major over root indices.
    sum: Vec<u16>,
    /// N_{α,β}, zero when α+β is not a root.
    consts: Vec<i8>,
    neg: Vec<usize>,
}

/// Element of the algebra as coordinates on the Chevalley basis.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AlgElement {
    terms: BTreeMap<usize, Rational>,
}

impl AlgElement {
    pub fn zero() -> Self {
        AlgElement::default()
    }

    pub fn basis(index: usize) -> Self {
        AlgElement::basis_scaled(index, Rational::one())
    }

    pub fn basis_scaled(index: usize, c: Rational) -> Self {
        let mut e = AlgElement::zero();
        e.add_term(index, c);
        e
    }

    pub fn add_term(&mut self, index: usize, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(index).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&index);
        }
    }

    pub fn coeff(&self, index: usize) -> Rational {
        self.terms.get(&index).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.terms.iter().map(|(&i, c)| (i, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return AlgElement::zero();
        }
        AlgElement {
            terms: self.terms.iter().map(|(&i, x)| (i, x * c)).collect(),
        }
    }

    pub fn add(&self, other: &AlgElement) -> Self {
        let mut out = self.clone();
        for (i, c) in other.terms() {
            out.add_term(i, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &AlgElement) -> Self {
        self.add(&other.scale(&rat(-1)))
    }

    /// Coefficient of e_α.
    pub fn root_coeff(&self, alg: &ChevalleyAlgebra, root: &Root) -> Rational {
        alg.root_index(root).map_or_else(Rational::zero, |i| self.coeff(i))
    }

    /// Coordinates on h_1..h_n.
    pub fn cartan_part(&self, alg: &ChevalleyAlgebra) -> Vec<Rational> {
        (0..alg.rank()).map(|i| self.coeff(alg.cartan_index(i + 1))).collect()
    }

    /// The single basis index carrying this element, if it has one term.
    pub fn single_term(&self) -> Option<(usize, &Rational)> {
        let mut it = self.terms();
        match (it.next(), it.next()) {
            (Some(t), None) => Some(t),
            _ => None,
        }
    }
}

/// Outcome of a Jacobi identity sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct JacobiStats {
    pub triples: usize,
    pub failures: usize,
}

/// The linearized action of a list of generators on an invariant span:
/// `blocks[j]` is the matrix of ad(acting[j]) on the module basis, so its
/// column c holds the module coordinates of [acting[j], module[c]].
#[derive(Clone, Debug)]
pub struct ActionMatrix {
    pub acting: Vec<AlgElement>,
    pub module: Vec<AlgElement>,
    pub blocks: Vec<Matrix>,
}

impl ActionMatrix {
    /// Matrix whose column j is [acting[j], v] in module coordinates, for
    /// `v` given in module coordinates.
    pub fn evaluate_at(&self, v: &[Rational]) -> Matrix {
        let cols: Vec<Vec<Rational>> = self.blocks.iter().map(|b| b.mul_vec(v)).collect();
        Matrix::from_columns(&cols, self.module.len())
    }
}

/// Nullity of an evaluated action matrix: the dimension of the
/// infinitesimal stabilizer inside the acting span.
pub fn kernel_dim(m: &Matrix) -> usize {
    m.nullity()
}

impl ChevalleyAlgebra {
    pub fn new(rs: &RootSystem) -> Result<Self> {
        let roots = rs.roots();
        let nroots = roots.len();
        let mut sum = vec![NO_SUM; nroots * nroots];
        for (i, a) in roots.iter().enumerate() {
            for (j, b) in roots.iter().enumerate() {
                if let Some(k) = rs.index_of(&(*a + *b)) {
                    sum[i * nroots + j] = k as u16;
                }
            }
        }
        let neg = roots
            .iter()
            .map(|r| rs.index_of(&-*r).expect("root system is symmetric"))
            .collect();
        let mut alg = ChevalleyAlgebra {
            rs: rs.clone(),
            nroots,
            sum,
            consts: vec![0; nroots * nroots],
            neg,
        };
        alg.fix_signs()?;
        Ok(alg)
    }

    fn fix_signs(&mut self) -> Result<()> {
        let roots: Vec<Root> = self.rs.roots().to_vec();
        let positive: Vec<Root> = self.rs.positive_roots().copied().collect();

        // Positive pairs, grouped by their sum in order of increasing height.
        for xi in &positive {
            let mut pairs: Vec<(Root, Root)> = positive
                .iter()
                .filter(|a| {
                    let b = *xi - **a;
                    b.is_positive() && self.rs.contains(&b)
                })
                .map(|a| (*a, *xi - *a))
                .collect();
            if pairs.is_empty() {
                continue;
            }
            pairs.sort();
            let (a0, b0) = pairs[0];
            for (a, b) in pairs {
                let n = if (a, b) == (a0, b0) {
                    1
                } else if (a, b) == (b0, a0) {
                    -1
                } else {
                    // Four-root relation for (a, b, -a0, -b0) with
                    // N_{-a0,-b0} = -1.
                    self.mixed(&b, &-a0) * self.mixed(&a, &-b0) + self.mixed(&-a0, &a) * self.mixed(&b, &-b0)
                };
                if n.abs() != 1 {
                    return Err(Error::Construction(format!("N({a},{b}) propagated to {n}")));
                }
                let (ia, ib) = (self.ix(&a), self.ix(&b));
                self.set(ia, ib, n);
            }
        }

        // Negative pairs and mixed pairs.
        for a in &roots {
            for b in &roots {
                let (ia, ib) = (self.ix(a), self.ix(b));
                if self.sum[ia * self.nroots + ib] == NO_SUM {
                    continue;
                }
                if a.is_negative() && b.is_negative() {
                    let n = -self.get(self.ix(&-*a), self.ix(&-*b));
                    self.set(ia, ib, n);
                } else if a.is_positive() != b.is_positive() {
                    let n = self.mixed(a, b);
                    self.set(ia, ib, n);
                }
            }
        }
        Ok(())
    }

    /// N_{x,y} for roots of arbitrary sign, using only positive-pair values
    /// already fixed.
    fn mixed(&self, x: &Root, y: &Root) -> i32 {
        let s = *x + *y;
        if !self.rs.contains(&s) {
            return 0;
        }
        let idx = |r: &Root| self.ix(r);
        match (x.is_positive(), y.is_positive()) {
            (true, true) => self.get(idx(x), idx(y)),
            (false, false) => -self.get(idx(&-*x), idx(&-*y)),
            (false, true) => -self.mixed(y, x),
            (true, false) => {
                let y = -*y;
                if s.is_positive() {
                    // x = y + s; triple (x, -y, -s): N_{x,-y} = N_{-y,-s} = -N_{y,s}
                    -self.get(idx(&y), idx(&s))
                } else {
                    // y = x + d with d = -s; triple (x, -y, d): N_{x,-y} = N_{d,x}
                    let d = -s;
                    self.get(idx(&d), idx(x))
                }
            }
        }
    }

    fn ix(&self, r: &Root) -> usize {
        self.rs.index_of(r).expect("root")
    }

    fn get(&self, i: usize, j: usize) -> i32 {
        self.consts[i * self.nroots + j] as i32
    }

    fn set(&mut self, i: usize, j: usize, n: i32) {
        self.consts[i * self.nroots + j] = n as i8;
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn dimension(&self) -> usize {
        self.nroots + self.rank()
    }

    pub fn num_roots(&self) -> usize {
        self.nroots
    }

    pub fn root_index(&self, r: &Root) -> Option<usize> {
        self.rs.index_of(r)
    }

    /// Basis index of h_i (1-based).
    pub fn cartan_index(&self, i: usize) -> usize {
        assert!((1..=self.rank()).contains(&i));
        self.nroots + i - 1
    }

    pub fn basis_root(&self, index: usize) -> Option<Root> {
        (index < self.nroots).then(|| self.rs.roots()[index])
    }

    /// N_{α,β}; zero when α+β is not a root.
    pub fn structure_constant(&self, a: &Root, b: &Root) -> i32 {
        match (self.root_index(a), self.root_index(b)) {
            (Some(i), Some(j)) => self.get(i, j),
            _ => 0,
        }
    }

    pub fn root_vector(&self, r: &Root) -> AlgElement {
        AlgElement::basis(self.root_index(r).expect("not a root"))
    }

    pub fn cartan_vector(&self, i: usize) -> AlgElement {
        AlgElement::basis(self.cartan_index(i))
    }

    /// h_α = Σ c_i(α) h_i.
    pub fn coroot(&self, r: &Root) -> AlgElement {
        let mut e = AlgElement::zero();
        for (i, &c) in r.coeffs().iter().enumerate() {
            e.add_term(self.nroots + i, rat(c as i64));
        }
        e
    }

    /// Bracket of two basis vectors as integer terms.
    pub fn basis_bracket(&self, a: usize, b: usize) -> Vec<(usize, i64)> {
        let n = self.nroots;
        match (a < n, b < n) {
            (true, true) => {
                if self.neg[a] == b {
                    let r = self.rs.roots()[a];
                    r.coeffs()
                        .iter()
                        .enumerate()
                        .filter(|(_, &c)| c != 0)
                        .map(|(i, &c)| (n + i, c as i64))
                        .collect()
                } else {
                    let s = self.sum[a * n + b];
                    if s == NO_SUM {
                        Vec::new()
                    } else {
                        vec![(s as usize, self.get(a, b) as i64)]
                    }
                }
            }
            (false, true) => {
                let c = self.cartan_weight(a - n, b);
                if c == 0 {
                    Vec::new()
                } else {
                    vec![(b, c)]
                }
            }
            (true, false) => {
                let c = self.cartan_weight(b - n, a);
                if c == 0 {
                    Vec::new()
                } else {
                    vec![(a, -c)]
                }
            }
            (false, false) => Vec::new(),
        }
    }

    /// ⟨β, α_i∨⟩ for the root at `root_index` and 0-based simple index `i`.
    fn cartan_weight(&self, i: usize, root_index: usize) -> i64 {
        let r = self.rs.roots()[root_index];
        let simple = self.rs.simple(i + 1);
        self.rs.pairing(&r, &simple) as i64
    }

    pub fn bracket(&self, x: &AlgElement, y: &AlgElement) -> AlgElement {
        let mut out = AlgElement::zero();
        for (i, a) in x.terms() {
            for (j, b) in y.terms() {
                for (k, c) in self.basis_bracket(i, j) {
                    out.add_term(k, a * b * rat(c));
                }
            }
        }
        out
    }

    fn jacobi_residual_zero(&self, a: usize, b: usize, c: usize, acc: &mut [i64]) -> bool {
        for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
            for (k, s) in self.basis_bracket(y, z) {
                for (m, t) in self.basis_bracket(x, k) {
                    acc[m] += s * t;
                }
            }
        }
        let ok = acc.iter().all(|&v| v == 0);
        acc.iter_mut().for_each(|v| *v = 0);
        ok
    }

    /// Jacobi identity on every unordered basis triple.
    pub fn jacobi_exhaustive(&self) -> JacobiStats {
        let d = self.dimension();
        let mut acc = vec![0i64; d];
        let mut stats = JacobiStats {
            triples: 0,
            failures: 0,
        };
        for a in 0..d {
            for b in a..d {
                for c in b..d {
                    stats.triples += 1;
                    if !self.jacobi_residual_zero(a, b, c, &mut acc) {
                        stats.failures += 1;
                    }
                }
            }
        }
        stats
    }

    /// Jacobi identity on `count` basis triples drawn with a fixed seed.
    pub fn jacobi_sampled(&self, count: usize, seed: u64) -> JacobiStats {
        let d = self.dimension();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut acc = vec![0i64; d];
        let mut failures = 0;
        for _ in 0..count {
            let (a, b, c) = (rng.gen_range(0..d), rng.gen_range(0..d), rng.gen_range(0..d));
            if !self.jacobi_residual_zero(a, b, c, &mut acc) {
                failures += 1;
            }
        }
        JacobiStats {
            triples: count,
            failures,
        }
    }

    /// Coordinates of `x` on the span of `basis`, or `None` if outside it.
    pub fn coordinates(&self, basis: &[AlgElement], x: &AlgElement) -> Option<Vec<Rational>> {
        // Fast path: every basis vector is a multiple of a distinct basis index.
        let singles: Option<Vec<(usize, Rational)>> = basis
            .iter()
            .map(|b| b.single_term().map(|(i, c)| (i, c.clone())))
            .collect();
        if let Some(singles) = singles {
            let mut pos = BTreeMap::new();
            for (k, (i, _)) in singles.iter().enumerate() {
                if pos.insert(*i, k).is_some() {
                    return self.coordinates_dense(basis, x);
                }
            }
            let mut out = vec![Rational::zero(); basis.len()];
            for (i, c) in x.terms() {
                let &k = pos.get(&i)?;
                out[k] = c / &singles[k].1;
            }
            return Some(out);
        }
        self.coordinates_dense(basis, x)
    }

    fn coordinates_dense(&self, basis: &[AlgElement], x: &AlgElement) -> Option<Vec<Rational>> {
        let d = self.dimension();
        let cols: Vec<Vec<Rational>> = basis.iter().map(|b| (0..d).map(|i| b.coeff(i)).collect()).collect();
        let m = Matrix::from_columns(&cols, d);
        let rhs: Vec<Rational> = (0..d).map(|i| x.coeff(i)).collect();
        m.solve(&rhs)
    }

    /// Matrices of ad(acting[j]) on the span of `module`.
    pub fn action_matrix(&self, acting: &[AlgElement], module: &[AlgElement]) -> Result<ActionMatrix> {
        let m = module.len();
        let mut blocks = Vec::with_capacity(acting.len());
        for (j, x) in acting.iter().enumerate() {
            let mut block = Matrix::zeros(m, m);
            for (c, u) in module.iter().enumerate() {
                let image = self.bracket(x, u);
                let coords = self
                    .coordinates(module, &image)
                    .ok_or_else(|| Error::NotInvariant(format!("bracket of generator {j} with module vector {c}")))?;
                for (r, val) in coords.into_iter().enumerate() {
                    block[(r, c)] = val;
                }
            }
            blocks.push(block);
        }
        Ok(ActionMatrix {
            acting: acting.to_vec(),
            module: module.to_vec(),
            blocks,
        })
    }
}
