//! Dimensions of nilpotent orbits of `sp_{2d}` and of isotropic partial flag
//! varieties, Richardson orbits of the components, and the `H_top` report.
//!
//! The top degree on a component is the Borel–Moore degree `2c` with
//! `c = (dim N^d − dim O_A) / 2`, the fiber dimension allowed by
//! semismallness.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::{enumerate_q, type_c_collapse, Bipartition, Partition, SymComposition, TypeCPartition};
use crate::springer_map::orbit_fiber;
use crate::tensor_rep::{levi_dim, TensorSpace};

/// A nilpotent orbit with its complex dimension.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitInfo {
    pub partition: TypeCPartition,
    pub ambient_2d: usize,
    pub dim: usize,
}

impl OrbitInfo {
    pub fn new(partition: TypeCPartition) -> Self {
        let dim = orbit_dim(&partition);
        OrbitInfo { ambient_2d: partition.size(), partition, dim }
    }
}

fn sp_dim(d: usize) -> usize {
    d * (2 * d + 1)
}

/// `dim sp_{2d} − ½Σ ǎ_i² − ½ #{odd parts}`.
pub fn orbit_dim(a: &TypeCPartition) -> usize {
    let d = a.size() / 2;
    let squares: usize = a.dual().parts().iter().map(|x| x * x).sum();
    let odd = a.parts().iter().filter(|&&x| x % 2 == 1).count();
    sp_dim(d) - (squares + odd) / 2
}

/// Dimension of the isotropic flag variety `F_d`: `dim Sp_{2d}` minus the
/// dimension of the parabolic with Levi `Π GL_{d_i} × Sp_{d_{n+1}}`, halved
/// from `dim G − dim L`.
pub fn flag_dim(dcomp: &SymComposition) -> usize {
    let d = dcomp.rank();
    let levi: usize =
        dcomp.isotropic_blocks().iter().map(|x| x * x).sum::<usize>() + sp_dim(dcomp.middle_half());
    (sp_dim(d) - levi) / 2
}

/// The orbit dense in the image of `T*F_d`: the C-collapse of the dual of
/// the sorted entries. Checked against [`flag_dim`].
pub fn richardson(dcomp: &SymComposition) -> Result<TypeCPartition> {
    let sorted = Partition::from_unsorted(dcomp.entries().iter().copied());
    let orbit = type_c_collapse(&sorted.dual())?;
    let image = 2 * flag_dim(dcomp);
    if orbit_dim(&orbit) != image {
        return Err(Error::Consistency(format!(
            "richardson orbit {orbit} of {dcomp} has dimension {}, expected {image}",
            orbit_dim(&orbit)
        )));
    }
    Ok(orbit)
}

/// Data of one component `F_d` of the partial flag variety.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentGeometry {
    pub dcomp: SymComposition,
    pub flag_dim: usize,
    pub image_dim: usize,
    pub richardson: TypeCPartition,
}

impl ComponentGeometry {
    pub fn new(dcomp: &SymComposition) -> Result<Self> {
        let flag_dim = flag_dim(dcomp);
        Ok(ComponentGeometry {
            dcomp: dcomp.clone(),
            flag_dim,
            image_dim: 2 * flag_dim,
            richardson: richardson(dcomp)?,
        })
    }
}

/// Geometry of every component of `Q_{N,2d}`, in enumeration order.
pub fn components(n: usize, d: usize) -> Result<Vec<ComponentGeometry>> {
    enumerate_q(n, 2 * d)?.iter().map(ComponentGeometry::new).collect()
}

fn check_sizes(a: &TypeCPartition, dcomp: &SymComposition) -> Result<()> {
    if a.size() != dcomp.total() {
        return Err(Error::SizeMismatch { expected: dcomp.total(), found: a.size() });
    }
    Ok(())
}

/// Whether `O_a` meets the image of `T*F_d`.
pub fn component_nonempty(a: &TypeCPartition, dcomp: &SymComposition) -> Result<bool> {
    check_sizes(a, dcomp)?;
    let closure = richardson(dcomp)?;
    a.dominance_leq(&closure)
}

/// `2c` with `c = (image_dim − orbit_dim) / 2`.
pub fn top_degree(a: &TypeCPartition, dcomp: &SymComposition) -> Result<usize> {
    if !component_nonempty(a, dcomp)? {
        return Err(Error::InvalidArgument(format!("orbit {a} does not meet the image of component {dcomp}")));
    }
    Ok(2 * flag_dim(dcomp) - orbit_dim(a))
}

/// One `ρ` with `A_ρ = A`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Contribution {
    pub rho: Bipartition,
    pub rho_dual: Bipartition,
    pub dim: u64,
}

/// Predicted top homology of the partial Springer fiber over `O_A`, split
/// by component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HtopReport {
    pub orbit: TypeCPartition,
    pub n: usize,
    pub contributing: Vec<Contribution>,
    pub components: Vec<SymComposition>,
    pub per_component: BTreeMap<SymComposition, u64>,
    pub degrees: BTreeMap<SymComposition, usize>,
    pub total: u64,
}

impl HtopReport {
    pub fn htop(&self, dcomp: &SymComposition) -> u64 {
        self.per_component.get(dcomp).copied().unwrap_or(0)
    }

    /// `H_top` dimensions in enumeration order of the components.
    pub fn dims(&self) -> Vec<u64> {
        self.components.iter().map(|c| self.htop(c)).collect()
    }
}

#[derive(Serialize)]
struct ComponentEntry<'a> {
    d: &'a SymComposition,
    degree: Option<usize>,
    htop: u64,
}

impl Serialize for HtopReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let entries: Vec<ComponentEntry> = self
            .components
            .iter()
            .map(|c| ComponentEntry { d: c, degree: self.degrees.get(c).copied(), htop: self.htop(c) })
            .collect();
        let mut s = serializer.serialize_struct("HtopReport", 4)?;
        s.serialize_field("orbit", &self.orbit)?;
        s.serialize_field("contributing", &self.contributing)?;
        s.serialize_field("components", &entries)?;
        s.serialize_field("total", &self.total)?;
        s.end()
    }
}

/// `H_top` over `O_a` in `(C^{2n+1})^{⊗d}`: the graded multiplicities of
/// `ρ̌` summed over the Springer fiber of `a`, cross-checked against
/// `Σ dim V_ρ̌`.
pub fn htop_report(a: &TypeCPartition, n: usize, d: usize) -> Result<HtopReport> {
    htop_report_in(a, &TensorSpace::new(n, d)?)
}

pub fn htop_report_in(a: &TypeCPartition, space: &TensorSpace) -> Result<HtopReport> {
    let (n, d) = (space.n(), space.d());
    let fiber = orbit_fiber(a, d)?;
    let contributing: Vec<Contribution> = fiber
        .into_iter()
        .map(|rho| {
            let rho_dual = rho.dual();
            Contribution { dim: levi_dim(&rho_dual, n), rho, rho_dual }
        })
        .collect();
    let graded = contributing
        .par_iter()
        .map(|c| space.graded_multiplicity(&c.rho_dual))
        .collect::<Result<Vec<_>>>()?;
    let geometry = components(n, d)?;
    let mut per_component = BTreeMap::new();
    let mut degrees = BTreeMap::new();
    for g in &geometry {
        let htop: u64 = graded.iter().map(|x| x.get(&g.dcomp)).sum();
        if a.dominance_leq(&g.richardson)? {
            degrees.insert(g.dcomp.clone(), g.image_dim - orbit_dim(a));
        } else if htop != 0 {
            return Err(Error::Consistency(format!(
                "orbit {a} misses component {} but H_top there is {htop}",
                g.dcomp
            )));
        }
        per_component.insert(g.dcomp.clone(), htop);
    }
    let total: u64 = per_component.values().sum();
    let expected: u64 = contributing.iter().map(|c| c.dim).sum();
    if total != expected {
        return Err(Error::Consistency(format!(
            "H_top over {a}: graded total {total} differs from sum of Levi dimensions {expected}"
        )));
    }
    Ok(HtopReport {
        orbit: a.clone(),
        n,
        contributing,
        components: geometry.into_iter().map(|g| g.dcomp).collect(),
        per_component,
        degrees,
        total,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(s: &str) -> TypeCPartition {
        s.parse().unwrap()
    }

    fn comp(s: &str) -> SymComposition {
        s.parse().unwrap()
    }

    #[test]
    fn orbit_dims() {
        assert_eq!(orbit_dim(&a("1,1,1,1")), 0);
        assert_eq!(orbit_dim(&a("2,1,1")), 4);
        assert_eq!(orbit_dim(&a("2,2")), 6);
        assert_eq!(orbit_dim(&a("4")), 8);
        assert_eq!(OrbitInfo::new(a("-")).dim, 0);
    }

    #[test]
    fn flag_dims() {
        assert_eq!(flag_dim(&comp("0,0,4,0,0")), 0);
        assert_eq!(flag_dim(&comp("0,1,2,1,0")), 3);
        assert_eq!(flag_dim(&comp("1,1,0,1,1")), 4);
    }

    #[test]
    fn richardson_examples() {
        assert_eq!(richardson(&comp("1,1,0,1,1")).unwrap(), a("4"));
        assert_eq!(richardson(&comp("0,1,2,1,0")).unwrap(), a("2,2"));
        assert_eq!(richardson(&comp("0,0,4,0,0")).unwrap(), a("1,1,1,1"));
    }

    #[test]
    fn emptiness_and_degrees() {
        assert!(!component_nonempty(&a("4"), &comp("0,1,2,1,0")).unwrap());
        assert!(!component_nonempty(&a("2,1,1"), &comp("0,0,4,0,0")).unwrap());
        assert!(component_nonempty(&a("2"), &comp("0,0,4,0,0")).is_err());
        assert_eq!(top_degree(&a("2,1,1"), &comp("0,1,2,1,0")).unwrap(), 2);
        assert_eq!(top_degree(&a("2,1,1"), &comp("1,1,0,1,1")).unwrap(), 4);
        assert_eq!(top_degree(&a("4"), &comp("1,1,0,1,1")).unwrap(), 0);
        assert!(top_degree(&a("4"), &comp("0,0,4,0,0")).is_err());
    }

    #[test]
    fn report_for_minimal_orbit() {
        let r = htop_report(&a("2,1,1"), 2, 2).unwrap();
        assert_eq!(r.total, 3);
        assert_eq!(r.contributing.len(), 1);
        assert_eq!(r.contributing[0].rho_dual.to_string(), "-|2");
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["orbit"], "2,1,1");
        assert_eq!(json["contributing"][0]["rho"], "-|1,1");
        assert_eq!(json["components"].as_array().unwrap().len(), 6);
    }

    #[test]
    fn report_rejects_wrong_size() {
        assert!(htop_report(&a("2"), 2, 2).is_err());
    }
}
