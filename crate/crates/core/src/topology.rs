//! Crisp and soft topologies over a finite context.
//!
//! Both kinds share one implementation through the [`Lattice`] trait: a
//! crisp topology is a family of [`PointSet`]s, a soft topology a family of
//! [`SoftSet`]s. Families are always stored sorted and duplicate-free.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;
use core::fmt::Debug;

use crate::context::Context;
use crate::error::Error;
use crate::set::{PointSet, SoftSet};

/// Set algebra shared by point sets and soft sets.
///
/// Point membership follows the soft-point reading: `x` belongs to a soft
/// set when it belongs to every slice.
pub trait Lattice: Copy + Ord + Debug {
    fn bottom(ctx: &Context) -> Self;
    fn top(ctx: &Context) -> Self;
    /// Smallest set containing the point `x` (`{x}` or the soft point).
    fn point(ctx: &Context, x: usize) -> Self;
    /// Number of bits a set of this kind occupies in `ctx`.
    fn width(ctx: &Context) -> usize;
    fn fits(self, ctx: &Context) -> bool;
    fn meet(self, other: Self) -> Self;
    fn join(self, other: Self) -> Self;
    fn complement(self) -> Self;
    fn le(self, other: Self) -> bool;
    fn is_bottom(self) -> bool;
    fn has_point(self, x: usize) -> bool;
}

impl Lattice for PointSet {
    fn bottom(ctx: &Context) -> Self {
        ctx.empty_set()
    }
    fn top(ctx: &Context) -> Self {
        ctx.whole()
    }
    fn point(ctx: &Context, x: usize) -> Self {
        PointSet::singleton(x, ctx.points())
    }
    fn width(ctx: &Context) -> usize {
        ctx.points()
    }
    fn fits(self, ctx: &Context) -> bool {
        self.universe() == ctx.points()
    }
    fn meet(self, other: Self) -> Self {
        self.intersection(other)
    }
    fn join(self, other: Self) -> Self {
        self.union(other)
    }
    fn complement(self) -> Self {
        PointSet::complement(self)
    }
    fn le(self, other: Self) -> bool {
        self.is_subset(other)
    }
    fn is_bottom(self) -> bool {
        self.is_empty()
    }
    fn has_point(self, x: usize) -> bool {
        self.contains(x)
    }
}

impl Lattice for SoftSet {
    fn bottom(ctx: &Context) -> Self {
        ctx.null()
    }
    fn top(ctx: &Context) -> Self {
        ctx.absolute()
    }
    fn point(ctx: &Context, x: usize) -> Self {
        ctx.soft_point(x)
    }
    fn width(ctx: &Context) -> usize {
        ctx.bits()
    }
    fn fits(self, ctx: &Context) -> bool {
        self.points() == ctx.points() && self.params() == ctx.params()
    }
    fn meet(self, other: Self) -> Self {
        self.intersection(other)
    }
    fn join(self, other: Self) -> Self {
        self.union(other)
    }
    fn complement(self) -> Self {
        SoftSet::complement(self)
    }
    fn le(self, other: Self) -> bool {
        self.is_subset(other)
    }
    fn is_bottom(self) -> bool {
        self.is_null()
    }
    fn has_point(self, x: usize) -> bool {
        self.contains_point(x)
    }
}

/// Refuses closures and enumerations over contexts wider than `max_bits`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SizeGuard {
    pub max_bits: usize,
}

impl SizeGuard {
    pub const DEFAULT_BITS: usize = 20;

    pub fn unbounded() -> Self {
        SizeGuard {
            max_bits: crate::context::MAX_BITS,
        }
    }

    pub fn check(self, bits: usize) -> Result<(), Error> {
        if bits > self.max_bits {
            Err(Error::SizeGuardExceeded {
                bits,
                limit: self.max_bits,
            })
        } else {
            Ok(())
        }
    }
}

impl Default for SizeGuard {
    fn default() -> Self {
        SizeGuard {
            max_bits: Self::DEFAULT_BITS,
        }
    }
}

/// First axiom a candidate family fails, in checking order: shape, bottom,
/// top, pairwise intersections, pairwise unions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Violation<S> {
    ForeignMember(S),
    MissingBottom,
    MissingTop,
    IntersectionMissing(S, S),
    UnionMissing(S, S),
}

fn find_violation<S: Lattice>(ctx: &Context, family: &[S]) -> Option<Violation<S>> {
    if let Some(&s) = family.iter().find(|s| !s.fits(ctx)) {
        return Some(Violation::ForeignMember(s));
    }
    let members: BTreeSet<S> = family.iter().copied().collect();
    if !members.contains(&S::bottom(ctx)) {
        return Some(Violation::MissingBottom);
    }
    if !members.contains(&S::top(ctx)) {
        return Some(Violation::MissingTop);
    }
    let sorted: Vec<S> = members.iter().copied().collect();
    for (k, &a) in sorted.iter().enumerate() {
        for &b in &sorted[k + 1..] {
            if !members.contains(&a.meet(b)) {
                return Some(Violation::IntersectionMissing(a, b));
            }
        }
    }
    for (k, &a) in sorted.iter().enumerate() {
        for &b in &sorted[k + 1..] {
            if !members.contains(&a.join(b)) {
                return Some(Violation::UnionMissing(a, b));
            }
        }
    }
    None
}

/// A finite topology: a sorted, duplicate-free family of open sets.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Topology<S> {
    // field order gives the canonical order of topologies: by opens first
    opens: Vec<S>,
    context: Context,
}

pub type CrispTopology = Topology<PointSet>;
pub type SoftTopology = Topology<SoftSet>;

impl<S: Lattice> Topology<S> {
    /// Validates `family` and stores it in canonical order.
    pub fn new(context: Context, family: impl IntoIterator<Item = S>) -> Result<Self, Violation<S>> {
        let opens = canonical(family);
        match find_violation(&context, &opens) {
            Some(v) => Err(v),
            None => Ok(Topology { context, opens }),
        }
    }

    /// The indiscrete topology `{bottom, top}`.
    pub fn indiscrete(context: Context) -> Self {
        let opens = canonical([S::bottom(&context), S::top(&context)]);
        Topology { context, opens }
    }

    pub(crate) fn from_closed_family(context: Context, family: impl IntoIterator<Item = S>) -> Self {
        let opens = canonical(family);
        debug_assert!(find_violation(&context, &opens).is_none());
        Topology { context, opens }
    }

    pub fn context(&self) -> &Context {
        &self.context
    }

    pub fn opens(&self) -> &[S] {
        &self.opens
    }

    pub fn len(&self) -> usize {
        self.opens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.opens.is_empty()
    }

    pub fn contains(&self, set: &S) -> bool {
        self.opens.binary_search(set).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = &S> {
        self.opens.iter()
    }

    /// Complements of the opens, canonically ordered.
    pub fn closed_sets(&self) -> Vec<S> {
        canonical(self.opens.iter().map(|s| s.complement()))
    }

    /// Intersection of every open containing `set`; open because the family
    /// is finite and closed under intersection.
    pub fn neighbourhood(&self, set: S) -> S {
        self.opens
            .iter()
            .filter(|u| set.le(**u))
            .fold(S::top(&self.context), |acc, &u| acc.meet(u))
    }

    /// `self ⊆ other` as families.
    pub fn is_coarser_or_equal(&self, other: &Self) -> bool {
        self.opens.iter().all(|s| other.contains(s))
    }
}

pub(crate) fn canonical<S: Ord>(family: impl IntoIterator<Item = S>) -> Vec<S> {
    let set: BTreeSet<S> = family.into_iter().collect();
    set.into_iter().collect()
}

pub fn is_crisp_topology(ctx: &Context, family: &[PointSet]) -> Result<(), Violation<PointSet>> {
    find_violation(ctx, family).map_or(Ok(()), Err)
}

pub fn is_soft_topology(ctx: &Context, family: &[SoftSet]) -> Result<(), Violation<SoftSet>> {
    find_violation(ctx, family).map_or(Ok(()), Err)
}

/// Smallest topology containing `subbasis`.
///
/// All finite intersections of subbasis members (the empty intersection is
/// the top) are collected first, then all unions of those (the empty union is
/// the bottom).
pub fn generate<S: Lattice>(ctx: &Context, subbasis: &[S], guard: SizeGuard) -> Result<Topology<S>, Error> {
    guard.check(S::width(ctx))?;
    if subbasis.iter().any(|s| !s.fits(ctx)) {
        return Err(Error::ContextMismatch);
    }
    let mut meets: BTreeSet<S> = BTreeSet::new();
    meets.insert(S::top(ctx));
    for &s in subbasis {
        let fresh: Vec<S> = meets.iter().map(|&m| m.meet(s)).collect();
        meets.extend(fresh);
    }
    let mut opens: BTreeSet<S> = BTreeSet::new();
    opens.insert(S::bottom(ctx));
    for &b in &meets {
        let fresh: Vec<S> = opens.iter().map(|&u| u.join(b)).collect();
        opens.extend(fresh);
    }
    Ok(Topology {
        context: ctx.clone(),
        opens: opens.into_iter().collect(),
    })
}

pub fn generate_soft(ctx: &Context, subbasis: &[SoftSet]) -> Result<SoftTopology, Error> {
    generate(ctx, subbasis, SizeGuard::default())
}

pub fn generate_crisp(ctx: &Context, subbasis: &[PointSet]) -> Result<CrispTopology, Error> {
    generate(ctx, subbasis, SizeGuard::default())
}

/// Whether every open of `topology` is a union of members of `base`.
pub fn is_base<S: Lattice>(base: &[S], topology: &Topology<S>) -> Result<bool, Error> {
    if base.iter().any(|b| !topology.contains(b)) {
        return Err(Error::NotASubfamily);
    }
    let ctx = topology.context();
    Ok(topology.opens().iter().all(|&u| {
        base.iter()
            .filter(|&&b| b.le(u))
            .fold(S::bottom(ctx), |acc, &b| acc.join(b))
            == u
    }))
}

pub fn is_soft_base(base: &[SoftSet], topology: &SoftTopology) -> Result<bool, Error> {
    is_base(base, topology)
}

/// Family-inclusion relation between two topologies on one context.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Comparison {
    Equal,
    /// The first topology strictly contains the second.
    StrictlyFiner,
    /// The first topology is strictly contained in the second.
    StrictlyCoarser,
    Incomparable,
}

impl Comparison {
    pub fn as_str(self) -> &'static str {
        match self {
            Comparison::Equal => "equal",
            Comparison::StrictlyFiner => "strictly-finer",
            Comparison::StrictlyCoarser => "strictly-coarser",
            Comparison::Incomparable => "incomparable",
        }
    }
}

pub fn compare<S: Lattice>(first: &Topology<S>, second: &Topology<S>) -> Result<Comparison, Error> {
    if !first.context().same_as(second.context()) {
        return Err(Error::ContextMismatch);
    }
    Ok(
        match (first.is_coarser_or_equal(second), second.is_coarser_or_equal(first)) {
            (true, true) => Comparison::Equal,
            (true, false) => Comparison::StrictlyCoarser,
            (false, true) => Comparison::StrictlyFiner,
            (false, false) => Comparison::Incomparable,
        },
    )
}

pub fn soft_closed_family(topology: &SoftTopology) -> Vec<SoftSet> {
    topology.closed_sets()
}

/// Closedness of `set` in the soft topology `{F : F(e) ∈ Σ for all e}`:
/// every slice must have its complement open in `sigma`.
pub fn is_soft_closed_in_single_set_topology(set: SoftSet, sigma: &CrispTopology) -> bool {
    set.points() == sigma.context().points() && (0..set.params()).all(|j| sigma.contains(&set.slice(j).complement()))
}

pub(crate) fn describe_violation<S: Debug>(v: &Violation<S>) -> alloc::string::String {
    format!("{v:?}")
}
