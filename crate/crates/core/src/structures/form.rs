//! The invariant hyperbolic form on Z(u), spectrum vectors and the
//! zero/small/big classification.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::chevalley::ChevalleyAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{rat, Matrix, Rational};
use crate::parabolic::ParabolicDecomposition;
use crate::structures::basis::{derived_levi_basis, hyperbolic_gram, invariance_violations, BasisEF};

#[derive(Clone, Debug)]
pub struct ZuForm {
    /// Gram matrix on (e_1..e_k, e_{-1}..e_{-k}).
    pub gram: Matrix,
}

impl ZuForm {
    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn pair(&self, u: &[Rational], w: &[Rational]) -> Rational {
        self.gram.bilinear(u, w)
    }

    pub fn norm(&self, v: &[Rational]) -> Rational {
        self.pair(v, v)
    }

    /// (positive, negative) index of inertia.
    pub fn signature(&self) -> (usize, usize) {
        let (p, n, _) = self.gram.inertia();
        (p, n)
    }
}

/// Hyperbolic form on the found basis, validated by [s, s]-invariance.
pub fn zu_form(alg: &ChevalleyAlgebra, basis: &BasisEF, r: &ParabolicDecomposition) -> Result<ZuForm> {
    let gram = hyperbolic_gram(basis.k);
    let bad = invariance_violations(alg, basis, &gram, &derived_levi_basis(alg, r))?;
    if bad != 0 {
        return Err(Error::FormInvariance(format!("{bad} violated entries")));
    }
    Ok(ZuForm { gram })
}

/// Unit coordinate vector for e_i.
pub fn unit(basis: &BasisEF, i: i32) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); 2 * basis.k];
    v[basis.position(i)] = Rational::one();
    v
}

#[derive(Clone, Debug)]
pub struct SpectrumVector {
    pub t: Rational,
    pub s: Rational,
    /// Keys ±2..±k.
    pub a: BTreeMap<i32, Rational>,
    /// Coordinates on the e-basis in Gram order.
    pub v: Vec<Rational>,
    pub norm: Rational,
}

/// v = t e_1 + Σ_i t(a_i e_i + a_{-i} e_{-i}) − (s + t Σ_i a_i a_{-i}) e_{-1}.
/// Missing `a` entries are zero.
pub fn spectrum_vector(
    basis: &BasisEF,
    form: &ZuForm,
    t: &Rational,
    s: &Rational,
    a: &BTreeMap<i32, Rational>,
) -> Result<SpectrumVector> {
    if t.is_zero() {
        return Err(Error::ZeroScale);
    }
    let get = |i: i32| a.get(&i).cloned().unwrap_or_else(Rational::zero);
    let mut v = vec![Rational::zero(); 2 * basis.k];
    v[basis.position(1)] = t.clone();
    let mut cross = Rational::zero();
    for i in 2..=basis.k as i32 {
        v[basis.position(i)] = t * get(i);
        v[basis.position(-i)] = t * get(-i);
        cross += get(i) * get(-i);
    }
    v[basis.position(-1)] = -(s + t * cross);
    let norm = form.norm(&v);
    Ok(SpectrumVector {
        t: t.clone(),
        s: s.clone(),
        a: a.clone(),
        v,
        norm,
    })
}

/// Polynomials over the rationals, keyed by exponent vectors.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
struct Poly(BTreeMap<Vec<u32>, Rational>);

impl Poly {
    fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Poly(BTreeMap::from([(e, Rational::one())]))
    }

    fn add(&self, other: &Poly) -> Poly {
        let mut out = self.0.clone();
        for (e, c) in &other.0 {
            let x = out.remove(e).unwrap_or_else(Rational::zero) + c;
            if !x.is_zero() {
                out.insert(e.clone(), x);
            }
        }
        Poly(out)
    }

    fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::default();
        for (e1, c1) in &self.0 {
            for (e2, c2) in &other.0 {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(x, y)| x + y).collect();
                out = out.add(&Poly(BTreeMap::from([(e, c1 * c2)])));
            }
        }
        out
    }

    fn scale(&self, c: &Rational) -> Poly {
        Poly(
            self.0
                .iter()
                .filter(|_| !c.is_zero())
                .map(|(e, x)| (e.clone(), x * c))
                .collect(),
        )
    }
}

/// ⟨v, v⟩ as a polynomial in (t, s, a_{±i}), compared with −2ts.
/// Variables: 0 = t, 1 = s, then a_2, a_{-2}, a_3, a_{-3}, ...
pub fn spectrum_identity_holds(basis: &BasisEF, form: &ZuForm) -> bool {
    let k = basis.k;
    let nvars = 2 + 2 * (k - 1);
    let t = Poly::var(nvars, 0);
    let s = Poly::var(nvars, 1);
    let a = |i: i32| {
        let slot = 2 + 2 * (i.unsigned_abs() as usize - 2) + usize::from(i < 0);
        Poly::var(nvars, slot)
    };
    let mut v = vec![Poly::default(); 2 * k];
    v[basis.position(1)] = t.clone();
    let mut cross = Poly::default();
    for i in 2..=k as i32 {
        v[basis.position(i)] = t.mul(&a(i));
        v[basis.position(-i)] = t.mul(&a(-i));
        cross = cross.add(&a(i).mul(&a(-i)));
    }
    v[basis.position(-1)] = s.add(&t.mul(&cross)).scale(&rat(-1));

    let mut norm = Poly::default();
    for i in 0..2 * k {
        for j in 0..2 * k {
            let g = &form.gram[(i, j)];
            if !g.is_zero() {
                norm = norm.add(&v[i].mul(&v[j]).scale(g));
            }
        }
    }
    let expected = t.mul(&s).scale(&rat(-2));
    norm == expected
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CharacterClass {
    Zero,
    Small,
    Big,
}

impl fmt::Display for CharacterClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CharacterClass::Zero => "zero",
            CharacterClass::Small => "small",
            CharacterClass::Big => "big",
        })
    }
}

pub fn classify_character(form: &ZuForm, v: &[Rational]) -> CharacterClass {
    if v.iter().all(Zero::is_zero) {
        CharacterClass::Zero
    } else if form.norm(v).is_zero() {
        CharacterClass::Small
    } else {
        CharacterClass::Big
    }
}
