//! Rank-two structures attached to the parabolics P, Q, R.

pub mod basis;
pub mod decomp;
pub mod form;
pub mod golden;
pub mod omega;
pub mod orbit;

use crate::chevalley::ChevalleyAlgebra;
use crate::error::Result;
use crate::parabolic::{heisenberg_tower, named_parabolic, HeisenbergTower, ParabolicDecomposition, ParabolicName};
use crate::rootsys::{RootSystem, RootSystemType};

pub use basis::{BasisEF, ScaledRoot};
pub use decomp::{N3Decomposition, UDecomposition};
pub use form::{CharacterClass, SpectrumVector, ZuForm};
pub use golden::GoldenTables;
pub use omega::OmegaPartition;

/// Everything built from one root system, computed once.
#[derive(Clone, Debug)]
pub struct Structures {
    pub alg: ChevalleyAlgebra,
    pub p: ParabolicDecomposition,
    pub q: ParabolicDecomposition,
    pub r: ParabolicDecomposition,
    pub pg: ParabolicDecomposition,
    pub tower: HeisenbergTower,
    pub u: UDecomposition,
    pub n3: N3Decomposition,
    pub basis: BasisEF,
    pub form: ZuForm,
}

impl Structures {
    pub fn new(kind: RootSystemType) -> Result<Self> {
        let alg = ChevalleyAlgebra::new(&RootSystem::new(kind))?;
        let p = named_parabolic(&alg, ParabolicName::P)?;
        let q = named_parabolic(&alg, ParabolicName::Q)?;
        let r = named_parabolic(&alg, ParabolicName::R)?;
        let pg = named_parabolic(&alg, ParabolicName::Pg)?;
        let tower = heisenberg_tower(&alg)?;
        let u = decomp::u_decompose(&r, &p)?;
        let n3 = decomp::n3_decompose(&alg, &q)?;
        let basis = basis::find_basis_ef(&alg, &r, &q, &u, &n3)?;
        let form = form::zu_form(&alg, &basis, &r)?;
        Ok(Structures {
            alg,
            p,
            q,
            r,
            pg,
            tower,
            u,
            n3,
            basis,
            form,
        })
    }

    pub fn kind(&self) -> RootSystemType {
        self.alg.root_system().kind()
    }

    pub fn rank(&self) -> usize {
        self.alg.rank()
    }
}
