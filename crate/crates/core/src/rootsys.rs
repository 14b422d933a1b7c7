//! Root systems of types E6 and E7 in simple-root coordinates.
//!
//! Simple roots are numbered in Bourbaki order: for E6 the chain is
//! α1–α3–α4–α5–α6 with α2 attached to α4, and E7 extends the chain by α7
//! on α6. Every root is stored as its integer coefficient vector over the
//! simple roots, and every ordered collection of roots uses the canonical
//! order (height, then lexicographic on coefficients).

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

pub const MAX_RANK: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum RootSystemType {
    E6,
    E7,
}

impl RootSystemType {
    pub const ALL: [RootSystemType; 2] = [RootSystemType::E6, RootSystemType::E7];

    pub fn rank(self) -> usize {
        match self {
            RootSystemType::E6 => 6,
            RootSystemType::E7 => 7,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            RootSystemType::E6 => "E6",
            RootSystemType::E7 => "E7",
        }
    }

    /// Edges of the Dynkin diagram, 1-based.
    fn edges(self) -> &'static [(usize, usize)] {
        match self {
            RootSystemType::E6 => &[(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)],
            RootSystemType::E7 => &[(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (2, 4)],
        }
    }
}

impl fmt::Display for RootSystemType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for RootSystemType {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "e6" => Ok(RootSystemType::E6),
            "e7" => Ok(RootSystemType::E7),
            other => Err(format!("unknown root system type `{other}`")),
        }
    }
}

/// Integer coefficient vector over the simple roots.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Root {
    coeffs: [i32; MAX_RANK],
    rank: u8,
}

impl Root {
    pub fn new(coeffs: &[i32]) -> Self {
        assert!(coeffs.len() <= MAX_RANK, "rank exceeds {MAX_RANK}");
        let mut c = [0; MAX_RANK];
        c[..coeffs.len()].copy_from_slice(coeffs);
        Root {
            coeffs: c,
            rank: coeffs.len() as u8,
        }
    }

    pub fn zero(rank: usize) -> Self {
        Root::new(&vec![0; rank])
    }

    /// The simple root α_i (1-based index).
    pub fn simple(rank: usize, i: usize) -> Self {
        assert!((1..=rank).contains(&i), "simple root index {i} out of range");
        let mut r = Root::zero(rank);
        r.coeffs[i - 1] = 1;
        r
    }

    pub fn rank(&self) -> usize {
        self.rank as usize
    }

    pub fn coeffs(&self) -> &[i32] {
        &self.coeffs[..self.rank()]
    }

    /// Coefficient c_i of the simple root α_i (1-based index).
    pub fn coeff(&self, i: usize) -> i32 {
        self.coeffs()[i - 1]
    }

    pub fn height(&self) -> i32 {
        self.coeffs().iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs().iter().all(|&c| c == 0)
    }

    pub fn is_positive(&self) -> bool {
        !self.is_zero() && self.coeffs().iter().all(|&c| c >= 0)
    }

    pub fn is_negative(&self) -> bool {
        !self.is_zero() && self.coeffs().iter().all(|&c| c <= 0)
    }

    /// Simple-root indices with a nonzero coefficient.
    pub fn support(&self) -> BTreeSet<usize> {
        self.coeffs()
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// True when every coefficient of `self - other` is nonnegative.
    pub fn dominates(&self, other: &Root) -> bool {
        self.coeffs().iter().zip(other.coeffs()).all(|(a, b)| a >= b)
    }
}

impl Ord for Root {
    fn cmp(&self, other: &Self) -> Ordering {
        self.height()
            .cmp(&other.height())
            .then_with(|| self.coeffs().cmp(other.coeffs()))
    }
}

impl PartialOrd for Root {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for Root {
    type Output = Root;

    fn add(mut self, rhs: Root) -> Root {
        debug_assert_eq!(self.rank, rhs.rank);
        for i in 0..self.rank() {
            self.coeffs[i] += rhs.coeffs[i];
        }
        self
    }
}

impl Sub for Root {
    type Output = Root;

    fn sub(self, rhs: Root) -> Root {
        self + (-rhs)
    }
}

impl Neg for Root {
    type Output = Root;

    fn neg(mut self) -> Root {
        for c in self.coeffs.iter_mut() {
            *c = -*c;
        }
        self
    }
}

impl Mul<Root> for i32 {
    type Output = Root;

    fn mul(self, mut rhs: Root) -> Root {
        for c in rhs.coeffs.iter_mut() {
            *c *= self;
        }
        rhs
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coeffs().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Root {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs().serialize(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DynkinType {
    A(usize),
    D(usize),
    E(usize),
}

impl DynkinType {
    /// Number of roots (both signs) of an irreducible system of this type.
    pub fn root_count(self) -> usize {
        match self {
            DynkinType::A(k) => k * (k + 1),
            DynkinType::D(k) => 2 * k * (k - 1),
            DynkinType::E(6) => 72,
            DynkinType::E(7) => 126,
            DynkinType::E(8) => 240,
            DynkinType::E(k) => panic!("no root system of type E{k}"),
        }
    }

    pub fn rank(self) -> usize {
        match self {
            DynkinType::A(k) | DynkinType::D(k) | DynkinType::E(k) => k,
        }
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DynkinType::A(k) => write!(f, "A{k}"),
            DynkinType::D(k) => write!(f, "D{k}"),
            DynkinType::E(k) => write!(f, "E{k}"),
        }
    }
}

/// Classify a connected simply-laced diagram from its Cartan matrix.
pub fn detect_type(cartan: &[Vec<i32>]) -> Result<DynkinType> {
    let k = cartan.len();
    if k == 0 {
        return Err(Error::UnsupportedDiagram("empty diagram".into()));
    }
    let adj: Vec<Vec<usize>> = (0..k)
        .map(|i| (0..k).filter(|&j| j != i && cartan[i][j] != 0).collect::<Vec<_>>())
        .collect();
    for (i, row) in cartan.iter().enumerate() {
        if row[i] != 2 || row.iter().enumerate().any(|(j, &v)| j != i && !(v == 0 || v == -1)) {
            return Err(Error::UnsupportedDiagram(format!(
                "not a simply-laced Cartan matrix: {cartan:?}"
            )));
        }
    }
    let edges: usize = adj.iter().map(Vec::len).sum::<usize>() / 2;
    if edges + 1 != k || !connected(&adj) {
        return Err(Error::UnsupportedDiagram(format!("diagram is not a tree: {cartan:?}")));
    }
    let branches: Vec<usize> = (0..k).filter(|&i| adj[i].len() >= 3).collect();
    match branches.as_slice() {
        [] => Ok(DynkinType::A(k)),
        [b] if adj[*b].len() == 3 => {
            let mut legs: Vec<usize> = adj[*b].iter().map(|&n| leg_length(&adj, *b, n)).collect();
            legs.sort_unstable();
            match legs.as_slice() {
                [1, 1, _] => Ok(DynkinType::D(k)),
                [1, 2, 2] | [1, 2, 3] | [1, 2, 4] => Ok(DynkinType::E(k)),
                _ => Err(Error::UnsupportedDiagram(format!("legs {legs:?}"))),
            }
        }
        _ => Err(Error::UnsupportedDiagram(format!(
            "more than one branch node: {cartan:?}"
        ))),
    }
}

fn connected(adj: &[Vec<usize>]) -> bool {
    let mut seen = vec![false; adj.len()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for &j in &adj[i] {
            if !seen[j] {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

fn leg_length(adj: &[Vec<usize>], from: usize, start: usize) -> usize {
    let (mut prev, mut cur, mut len) = (from, start, 1);
    loop {
        let next: Vec<usize> = adj[cur].iter().copied().filter(|&n| n != prev).collect();
        match next.as_slice() {
            [n] => {
                prev = cur;
                cur = *n;
                len += 1;
            }
            _ => return len,
        }
    }
}

/// An irreducible component of a subsystem.
#[derive(Clone, Debug)]
pub struct Component {
    pub kind: DynkinType,
    pub simple: Vec<Root>,
    /// Positive roots of the component, canonical order.
    pub positive: Vec<Root>,
    pub highest: Root,
}

impl Component {
    /// Ambient simple-root indices when every simple root of the component
    /// is itself an ambient simple root.
    pub fn nodes(&self) -> Option<BTreeSet<usize>> {
        self.simple
            .iter()
            .map(|r| {
                let s = r.support();
                (s.len() == 1 && r.height() == 1).then(|| *s.iter().next().unwrap())
            })
            .collect()
    }
}

/// A closed subsystem together with its irreducible components.
#[derive(Clone, Debug)]
pub struct Subsystem {
    /// All roots of the subsystem (both signs), canonical order.
    pub roots: Vec<Root>,
    pub simple: Vec<Root>,
    /// Components sorted by type, then by their first simple root.
    pub components: Vec<Component>,
}

impl Subsystem {
    pub fn positive(&self) -> impl Iterator<Item = &Root> {
        self.roots.iter().filter(|r| r.is_positive())
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// Product label such as `A1xD5`; `0` for the empty subsystem.
    pub fn type_label(&self) -> String {
        if self.components.is_empty() {
            return "0".into();
        }
        self.components
            .iter()
            .map(|c| c.kind.to_string())
            .collect::<Vec<_>>()
            .join("x")
    }

    /// The component highest root of maximal height, ties broken by the
    /// canonical order (the larger root wins).
    pub fn tallest_highest_root(&self) -> Option<Root> {
        self.components.iter().map(|c| c.highest).max()
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    kind: RootSystemType,
    cartan: Vec<Vec<i32>>,
    roots: Vec<Root>,
    index: HashMap<Root, usize>,
    highest: Root,
}

impl RootSystem {
    /// Generate the full root system by closure under simple reflections.
    pub fn new(kind: RootSystemType) -> Self {
        let n = kind.rank();
        let mut cartan = vec![vec![0; n]; n];
        for (i, row) in cartan.iter_mut().enumerate() {
            row[i] = 2;
        }
        for &(a, b) in kind.edges() {
            cartan[a - 1][b - 1] = -1;
            cartan[b - 1][a - 1] = -1;
        }

        let simple: Vec<Root> = (1..=n).map(|i| Root::simple(n, i)).collect();
        let roots = reflection_closure(&simple, &cartan);
        let index = roots.iter().enumerate().map(|(i, r)| (*r, i)).collect();

        let mut rs = RootSystem {
            kind,
            cartan,
            roots,
            index,
            highest: Root::zero(n),
        };
        rs.highest = rs.compute_highest();
        rs
    }

    fn compute_highest(&self) -> Root {
        let n = self.rank();
        let maximal: Vec<Root> = self
            .positive_roots()
            .filter(|r| (1..=n).all(|i| !self.contains(&(**r + Root::simple(n, i)))))
            .copied()
            .collect();
        assert_eq!(maximal.len(), 1, "highest root is not unique: {maximal:?}");
        maximal[0]
    }

    pub fn kind(&self) -> RootSystemType {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.kind.rank()
    }

    pub fn cartan(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    /// All roots in canonical order (negative roots first).
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = &Root> {
        self.roots.iter().filter(|r| r.is_positive())
    }

    pub fn num_positive(&self) -> usize {
        self.roots.len() / 2
    }

    pub fn simple_roots(&self) -> Vec<Root> {
        (1..=self.rank()).map(|i| Root::simple(self.rank(), i)).collect()
    }

    pub fn simple(&self, i: usize) -> Root {
        Root::simple(self.rank(), i)
    }

    pub fn highest_root(&self) -> Root {
        self.highest
    }

    pub fn contains(&self, r: &Root) -> bool {
        self.index.contains_key(r)
    }

    pub fn index_of(&self, r: &Root) -> Option<usize> {
        self.index.get(r).copied()
    }

    /// ⟨a, b∨⟩; equal to the symmetric inner product since all roots have
    /// squared length 2.
    pub fn pairing(&self, a: &Root, b: &Root) -> i32 {
        pairing_with(&self.cartan, a, b)
    }

    /// Roots supported on the simple roots in `keep` (1-based indices).
    pub fn subsystem(&self, keep: &BTreeSet<usize>) -> Result<Subsystem> {
        let roots: Vec<Root> = self
            .roots
            .iter()
            .filter(|r| r.support().is_subset(keep))
            .copied()
            .collect();
        let simple: Vec<Root> = keep.iter().map(|&i| self.simple(i)).collect();
        self.assemble_subsystem(roots, simple)
    }

    /// Roots orthogonal to every root in `betas`.
    pub fn orthogonal_subsystem(&self, betas: &[Root]) -> Result<Subsystem> {
        for (i, a) in betas.iter().enumerate() {
            for b in &betas[i + 1..] {
                if self.pairing(a, b) != 0 {
                    return Err(Error::NotOrthogonal(*a, *b));
                }
            }
        }
        let roots: Vec<Root> = self
            .roots
            .iter()
            .filter(|r| betas.iter().all(|b| self.pairing(r, b) == 0))
            .copied()
            .collect();
        let simple = simple_roots_of(&roots);
        self.assemble_subsystem(roots, simple)
    }

    fn assemble_subsystem(&self, roots: Vec<Root>, simple: Vec<Root>) -> Result<Subsystem> {
        let k = simple.len();
        // Group simple roots into connected pieces of the induced diagram.
        let mut comp_of = vec![usize::MAX; k];
        let mut groups: Vec<Vec<usize>> = Vec::new();
        for start in 0..k {
            if comp_of[start] != usize::MAX {
                continue;
            }
            let id = groups.len();
            let mut members = vec![start];
            comp_of[start] = id;
            let mut stack = vec![start];
            while let Some(i) = stack.pop() {
                for j in 0..k {
                    if comp_of[j] == usize::MAX && self.pairing(&simple[i], &simple[j]) != 0 {
                        comp_of[j] = id;
                        members.push(j);
                        stack.push(j);
                    }
                }
            }
            members.sort_unstable();
            groups.push(members);
        }

        let mut components = Vec::with_capacity(groups.len());
        for members in groups {
            let simple_c: Vec<Root> = members.iter().map(|&i| simple[i]).collect();
            let sub_cartan: Vec<Vec<i32>> = simple_c
                .iter()
                .map(|a| simple_c.iter().map(|b| self.pairing(a, b)).collect())
                .collect();
            let kind = detect_type(&sub_cartan)?;
            let positive: Vec<Root> = reflection_closure_ambient(&simple_c, &self.cartan)
                .into_iter()
                .filter(Root::is_positive)
                .collect();
            let highest = *positive.iter().max().expect("component has roots");
            components.push(Component {
                kind,
                simple: simple_c,
                positive,
                highest,
            });
        }
        components.sort_by(|a, b| a.kind.cmp(&b.kind).then_with(|| a.simple[0].cmp(&b.simple[0])));

        let covered: usize = components.iter().map(|c| 2 * c.positive.len()).sum();
        if covered != roots.len() {
            return Err(Error::Decomposition(format!(
                "components cover {covered} of {} subsystem roots",
                roots.len()
            )));
        }
        Ok(Subsystem {
            roots,
            simple,
            components,
        })
    }
}

pub(crate) fn pairing_with(cartan: &[Vec<i32>], a: &Root, b: &Root) -> i32 {
    let (ca, cb) = (a.coeffs(), b.coeffs());
    let mut acc = 0;
    for (i, &x) in ca.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in cb.iter().enumerate() {
            acc += x * cartan[i][j] * y;
        }
    }
    acc
}

/// Orbit of `seeds` under the reflections in the ambient simple roots.
fn reflection_closure(seeds: &[Root], cartan: &[Vec<i32>]) -> Vec<Root> {
    let n = cartan.len();
    let simple: Vec<Root> = (1..=n).map(|i| Root::simple(n, i)).collect();
    closure_under(seeds, &simple, cartan)
}

/// Orbit of `seeds` under the reflections in `seeds` themselves; the root
/// system generated by a set of simple roots of a subsystem.
fn reflection_closure_ambient(seeds: &[Root], cartan: &[Vec<i32>]) -> Vec<Root> {
    closure_under(seeds, seeds, cartan)
}

fn closure_under(seeds: &[Root], mirrors: &[Root], cartan: &[Vec<i32>]) -> Vec<Root> {
    let mut seen: HashSet<Root> = seeds.iter().copied().collect();
    let mut queue: VecDeque<Root> = seeds.iter().copied().collect();
    while let Some(r) = queue.pop_front() {
        for m in mirrors {
            let c = pairing_with(cartan, &r, m);
            if c == 0 {
                continue;
            }
            let image = r - c * *m;
            if seen.insert(image) {
                queue.push_back(image);
            }
        }
    }
    let mut out: Vec<Root> = seen.into_iter().collect();
    out.sort();
    out
}

/// Positive roots of a closed symmetric set that are not a sum of two
/// positive roots of the set.
fn simple_roots_of(roots: &[Root]) -> Vec<Root> {
    let set: HashSet<Root> = roots.iter().copied().collect();
    let positive: Vec<Root> = roots.iter().filter(|r| r.is_positive()).copied().collect();
    positive
        .iter()
        .filter(|r| {
            !positive
                .iter()
                .any(|a| a < *r && (**r - *a).is_positive() && set.contains(&(**r - *a)))
        })
        .copied()
        .collect()
}
