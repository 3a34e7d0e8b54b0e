use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use crate::context::Context;
use crate::error::Error;
use crate::generators::CrispSystem;
use crate::set::{PointSet, SoftSet};
use crate::topology::{generate_crisp, CrispTopology, SoftTopology, Topology};

/// Largest universe the topology enumeration accepts.
pub const MAX_ENUMERATION_POINTS: usize = 4;

/// Every topology on `x1..xn`, each once, in canonical order.
pub fn enumerate_crisp_topologies(points: usize) -> Result<Vec<CrispTopology>, Error> {
    if points == 0 || points > MAX_ENUMERATION_POINTS {
        return Err(Error::BoundExceeded(format!(
            "topology enumeration needs 1 to {MAX_ENUMERATION_POINTS} points, got {points}"
        )));
    }
    enumerate_crisp_topologies_in(&Context::synthetic(points, 1)?)
}

/// Every topology on the universe of `ctx`.
///
/// A finite topology is determined by the minimal open neighbourhood of
/// each point, so it suffices to pick one superset of `{x}` per point,
/// close the choice under unions and intersections, and drop duplicates.
pub fn enumerate_crisp_topologies_in(ctx: &Context) -> Result<Vec<CrispTopology>, Error> {
    let n = ctx.points();
    if n > MAX_ENUMERATION_POINTS {
        return Err(Error::BoundExceeded(format!(
            "topology enumeration needs at most {MAX_ENUMERATION_POINTS} points, got {n}"
        )));
    }
    let candidates: Vec<Vec<PointSet>> = (0..n)
        .map(|x| {
            (0..1u64 << n)
                .filter(|b| b >> x & 1 == 1)
                .map(|b| PointSet::from_bits(b, n))
                .collect()
        })
        .collect();
    let mut seen: BTreeSet<CrispTopology> = BTreeSet::new();
    let mut choice = alloc::vec![0usize; n];
    loop {
        let generators: Vec<PointSet> = (0..n).map(|x| candidates[x][choice[x]]).collect();
        seen.insert(generate_crisp(ctx, &generators)?);
        if !advance(&mut choice, |x| candidates[x].len()) {
            break;
        }
    }
    Ok(seen.into_iter().collect())
}

/// Every soft topology on `n` points and `m` parameters, obtained from the
/// topologies on the `n·m`-point product `X × E`.
pub fn enumerate_soft_topologies(points: usize, params: usize) -> Result<Vec<SoftTopology>, Error> {
    let bits = points * params;
    if bits == 0 || bits > MAX_ENUMERATION_POINTS {
        return Err(Error::BoundExceeded(format!(
            "soft topology enumeration needs 1 to {MAX_ENUMERATION_POINTS} point-parameter pairs, got {bits}"
        )));
    }
    let ctx = Context::synthetic(points, params)?;
    Ok(enumerate_crisp_topologies(bits)?
        .into_iter()
        .map(|t| {
            Topology::from_closed_family(
                ctx.clone(),
                t.opens()
                    .iter()
                    .map(|u| SoftSet::from_bits(u.bits() as u128, points, params)),
            )
        })
        .collect())
}

/// Every crisp system on `ctx`: one enumerated topology per parameter,
/// with the first parameter varying slowest.
pub fn enumerate_systems(ctx: &Context) -> Result<impl Iterator<Item = CrispSystem>, Error> {
    let tops = enumerate_crisp_topologies_in(ctx)?;
    let m = ctx.params();
    let ctx = ctx.clone();
    let mut choice = Some(alloc::vec![0usize; m]);
    Ok(core::iter::from_fn(move || {
        let current = choice.as_mut()?;
        let system = CrispSystem::new(ctx.clone(), current.iter().map(|&k| tops[k].clone()).collect())
            .expect("enumerated topologies share the context universe");
        if !advance(current, |_| tops.len()) {
            choice = None;
        }
        Some(system)
    }))
}

/// Odometer step with the last position varying fastest; false once every
/// combination has been produced.
fn advance(choice: &mut [usize], radix: impl Fn(usize) -> usize) -> bool {
    for pos in (0..choice.len()).rev() {
        choice[pos] += 1;
        if choice[pos] < radix(pos) {
            return true;
        }
        choice[pos] = 0;
    }
    false
}
