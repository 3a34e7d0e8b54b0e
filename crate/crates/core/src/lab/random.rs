use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::context::Context;
use crate::error::Error;
use crate::set::{PointSet, SoftSet};
use crate::topology::{generate, CrispTopology, SizeGuard, SoftTopology};

/// Topology generated by `subbasis_size` seeded random soft sets.
pub fn random_soft_topology(ctx: &Context, seed: u64, subbasis_size: usize) -> Result<SoftTopology, Error> {
    SizeGuard::default().check(ctx.bits())?;
    random_soft_with(&mut ChaCha8Rng::seed_from_u64(seed), ctx, subbasis_size)
}

/// Crisp analogue of [`random_soft_topology`] on the universe of `ctx`.
pub fn random_crisp_topology(ctx: &Context, seed: u64, subbasis_size: usize) -> Result<CrispTopology, Error> {
    SizeGuard::default().check(ctx.points())?;
    random_crisp_with(&mut ChaCha8Rng::seed_from_u64(seed), ctx, subbasis_size)
}

pub(crate) fn random_soft_with<R: Rng>(rng: &mut R, ctx: &Context, size: usize) -> Result<SoftTopology, Error> {
    let subbasis: Vec<SoftSet> = (0..size)
        .map(|_| SoftSet::from_bits(rng.gen::<u128>(), ctx.points(), ctx.params()))
        .collect();
    generate(ctx, &subbasis, SizeGuard::default())
}

pub(crate) fn random_crisp_with<R: Rng>(rng: &mut R, ctx: &Context, size: usize) -> Result<CrispTopology, Error> {
    let subbasis: Vec<PointSet> = (0..size)
        .map(|_| PointSet::from_bits(rng.gen::<u64>(), ctx.points()))
        .collect();
    generate(ctx, &subbasis, SizeGuard::default())
}

pub(crate) fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
