//! Soft topologies built from crisp ones and crisp topologies read off
//! soft ones.

use alloc::collections::BTreeSet;
use alloc::string::ToString;
use alloc::vec::Vec;

use crate::context::Context;
use crate::error::Error;
use crate::set::{PointSet, SoftSet};
use crate::topology::{canonical, describe_violation, generate, CrispTopology, SizeGuard, SoftTopology, Topology};

/// One crisp topology per parameter of the context.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CrispSystem {
    topologies: Vec<CrispTopology>,
    context: Context,
}

impl CrispSystem {
    /// `topologies[j]` is the topology at parameter `j`. Each member's
    /// context must share the universe; it is re-homed onto `context`.
    pub fn new(context: Context, topologies: Vec<CrispTopology>) -> Result<Self, Error> {
        if topologies.len() != context.params() {
            return Err(Error::IncompleteSystem);
        }
        let mut homed = Vec::with_capacity(topologies.len());
        for t in topologies {
            if t.context().universe() != context.universe() {
                return Err(Error::ContextMismatch);
            }
            homed.push(CrispTopology::from_closed_family(
                context.clone(),
                t.opens().iter().copied(),
            ));
        }
        Ok(CrispSystem {
            context,
            topologies: homed,
        })
    }

    /// Validates raw open families, one per parameter.
    pub fn from_families(context: Context, families: Vec<Vec<PointSet>>) -> Result<Self, Error> {
        if families.len() != context.params() {
            return Err(Error::IncompleteSystem);
        }
        let mut topologies = Vec::with_capacity(families.len());
        for (j, family) in families.into_iter().enumerate() {
            let t = CrispTopology::new(context.clone(), family).map_err(|v| {
                Error::NotATopology(alloc::format!(
                    "{}: {}",
                    context.parameters()[j],
                    describe_violation(&v)
                ))
            })?;
            topologies.push(t);
        }
        Ok(CrispSystem { context, topologies })
    }

    /// The same topology at every parameter.
    pub fn constant(context: Context, sigma: &CrispTopology) -> Result<Self, Error> {
        let topologies = (0..context.params()).map(|_| sigma.clone()).collect();
        CrispSystem::new(context, topologies)
    }

    pub fn context(&self) -> &Context {
        &self.context
    }

    pub fn topologies(&self) -> &[CrispTopology] {
        &self.topologies
    }

    pub fn at(&self, j: usize) -> &CrispTopology {
        &self.topologies[j]
    }

    pub fn get(&self, parameter: &str) -> Result<&CrispTopology, Error> {
        Ok(&self.topologies[self.context.parameter_index(parameter)?])
    }

    /// Product of the family sizes, i.e. the size of the Formula 1 topology.
    pub fn product_size(&self) -> usize {
        self.topologies.iter().map(|t| t.len()).product()
    }
}

/// `Σ_e = {F(e) : F ∈ Σ}` for the parameter at index `j`.
pub fn slice_topology(topology: &SoftTopology, j: usize) -> CrispTopology {
    CrispTopology::from_closed_family(topology.context().clone(), topology.opens().iter().map(|s| s.slice(j)))
}

pub fn extract_crisp(topology: &SoftTopology, parameter: &str) -> Result<CrispTopology, Error> {
    let j = topology.context().parameter_index(parameter)?;
    Ok(slice_topology(topology, j))
}

pub fn extract_system(topology: &SoftTopology) -> CrispSystem {
    let ctx = topology.context().clone();
    let topologies = (0..ctx.params()).map(|j| slice_topology(topology, j)).collect();
    CrispSystem {
        context: ctx,
        topologies,
    }
}

/// Formula 1: every soft set whose slice at each `e` is open in `Σ_e`.
pub fn formula1(system: &CrispSystem) -> Result<SoftTopology, Error> {
    formula1_with(system, SizeGuard::default())
}

pub fn formula1_with(system: &CrispSystem, guard: SizeGuard) -> Result<SoftTopology, Error> {
    let ctx = system.context();
    guard.check(ctx.bits())?;
    let mut partial: Vec<Vec<PointSet>> = alloc::vec![Vec::new()];
    for t in system.topologies() {
        partial = partial
            .iter()
            .flat_map(|prefix| {
                t.opens().iter().map(move |&u| {
                    let mut next = prefix.clone();
                    next.push(u);
                    next
                })
            })
            .collect();
    }
    Ok(Topology::from_closed_family(
        ctx.clone(),
        partial.iter().map(|slices| SoftSet::from_slices(slices)),
    ))
}

/// Formula 2: the constant soft sets whose common value is open in `sigma`,
/// over the parameters of `sigma`'s context.
pub fn formula2(sigma: &CrispTopology) -> SoftTopology {
    let ctx = sigma.context();
    Topology::from_closed_family(ctx.clone(), sigma.opens().iter().map(|&u| ctx.constant(u)))
}

/// Formula 1 applied to the slices of `topology`; always contains it.
pub fn associated(topology: &SoftTopology) -> Result<SoftTopology, Error> {
    formula1(&extract_system(topology))
}

/// The topology generated by the union of the single-set topologies of
/// every `Σ_e`.
pub fn union_single_set(system: &CrispSystem) -> Result<SoftTopology, Error> {
    let ctx = system.context();
    let subbasis: BTreeSet<SoftSet> = system
        .topologies()
        .iter()
        .flat_map(|t| formula2(t).opens().to_vec())
        .collect();
    let subbasis: Vec<SoftSet> = subbasis.into_iter().collect();
    generate(ctx, &subbasis, SizeGuard::default())
}

/// `B(β̄)`: soft sets whose slice at each `e` lies in `β_e ∪ {∅}`.
///
/// Each `β_e` must be a base of some topology: its union closure has to be
/// closed under intersection and cover the universe.
pub fn product_base(ctx: &Context, bases: &[Vec<PointSet>]) -> Result<Vec<SoftSet>, Error> {
    if bases.len() != ctx.params() {
        return Err(Error::IncompleteSystem);
    }
    for (j, base) in bases.iter().enumerate() {
        if base.iter().any(|b| b.universe() != ctx.points()) {
            return Err(Error::ContextMismatch);
        }
        if !is_base_of_some_topology(ctx, base) {
            return Err(Error::NotABase(ctx.parameters()[j].to_string()));
        }
    }
    let mut partial: Vec<Vec<PointSet>> = alloc::vec![Vec::new()];
    for base in bases {
        let mut choices = canonical(base.iter().copied());
        if !choices.contains(&ctx.empty_set()) {
            choices.insert(0, ctx.empty_set());
        }
        partial = partial
            .iter()
            .flat_map(|prefix| {
                choices.iter().map(move |&b| {
                    let mut next = prefix.clone();
                    next.push(b);
                    next
                })
            })
            .collect();
    }
    Ok(canonical(partial.iter().map(|s| SoftSet::from_slices(s))))
}

fn is_base_of_some_topology(ctx: &Context, base: &[PointSet]) -> bool {
    let mut unions: BTreeSet<PointSet> = BTreeSet::new();
    unions.insert(ctx.empty_set());
    for &b in base {
        let fresh: Vec<PointSet> = unions.iter().map(|&u| u.union(b)).collect();
        unions.extend(fresh);
    }
    let family: Vec<PointSet> = unions.into_iter().collect();
    crate::topology::is_crisp_topology(ctx, &family).is_ok()
}

/// Minimal open neighbourhood of every point, deduplicated: the smallest
/// base of a finite topology.
pub fn minimal_base(sigma: &CrispTopology) -> Vec<PointSet> {
    let n = sigma.context().points();
    canonical((0..n).map(|x| sigma.neighbourhood(PointSet::singleton(x, n))))
}
