//! Point sets and soft sets over a finite context.
//!
//! A [`PointSet`] is a bit vector over the universe (bit `i` is point `i`).
//! A [`SoftSet`] is a bit vector over `X × E` laid out universe-major:
//! the pair `(x_i, e_j)` lives at bit `i·m + j`. Numeric order of that bit
//! vector is the canonical order of soft sets, and the bit vector itself
//! is the product-subset encoding used for enumeration.

use alloc::vec::Vec;

use crate::context::Context;
use crate::error::Error;

/// A subset of the universe.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PointSet {
    bits: u64,
    universe: u8,
}

fn low_mask64(width: usize) -> u64 {
    if width >= 64 {
        u64::MAX
    } else {
        (1u64 << width) - 1
    }
}

fn low_mask128(width: usize) -> u128 {
    if width >= 128 {
        u128::MAX
    } else {
        (1u128 << width) - 1
    }
}

impl PointSet {
    pub fn empty(universe: usize) -> Self {
        PointSet {
            bits: 0,
            universe: universe as u8,
        }
    }

    pub fn full(universe: usize) -> Self {
        PointSet {
            bits: low_mask64(universe),
            universe: universe as u8,
        }
    }

    pub fn singleton(x: usize, universe: usize) -> Self {
        PointSet::empty(universe).with(x)
    }

    /// Bits beyond the universe are dropped.
    pub fn from_bits(bits: u64, universe: usize) -> Self {
        PointSet {
            bits: bits & low_mask64(universe),
            universe: universe as u8,
        }
    }

    pub fn bits(self) -> u64 {
        self.bits
    }

    /// Size of the universe this set lives in.
    pub fn universe(self) -> usize {
        self.universe as usize
    }

    pub fn with(self, x: usize) -> Self {
        debug_assert!(x < self.universe());
        PointSet {
            bits: self.bits | (1 << x),
            ..self
        }
    }

    pub fn contains(self, x: usize) -> bool {
        x < self.universe() && self.bits >> x & 1 == 1
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    pub fn is_full(self) -> bool {
        self.bits == low_mask64(self.universe())
    }

    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn union(self, other: Self) -> Self {
        debug_assert_eq!(self.universe, other.universe);
        PointSet {
            bits: self.bits | other.bits,
            ..self
        }
    }

    pub fn intersection(self, other: Self) -> Self {
        debug_assert_eq!(self.universe, other.universe);
        PointSet {
            bits: self.bits & other.bits,
            ..self
        }
    }

    pub fn complement(self) -> Self {
        PointSet {
            bits: !self.bits & low_mask64(self.universe()),
            ..self
        }
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.bits & other.bits == 0
    }

    /// Member indices in universe order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..self.universe()).filter(move |&x| self.contains(x))
    }
}

/// A soft set `(F, E)`: one [`PointSet`] per parameter.
///
/// Ordering is numeric on the universe-major bit vector, which is the
/// canonical display and enumeration order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SoftSet {
    bits: u128,
    points: u8,
    params: u8,
}

impl SoftSet {
    pub fn null(points: usize, params: usize) -> Self {
        SoftSet {
            bits: 0,
            points: points as u8,
            params: params as u8,
        }
    }

    pub fn absolute(points: usize, params: usize) -> Self {
        SoftSet {
            bits: low_mask128(points * params),
            points: points as u8,
            params: params as u8,
        }
    }

    /// Interprets `bits` as a subset of `X × E` (bit `i·m + j` is `(x_i, e_j)`).
    pub fn from_bits(bits: u128, points: usize, params: usize) -> Self {
        SoftSet {
            bits: bits & low_mask128(points * params),
            points: points as u8,
            params: params as u8,
        }
    }

    pub fn from_slices(slices: &[PointSet]) -> Self {
        let params = slices.len();
        let points = slices.first().map_or(0, |s| s.universe());
        let mut bits = 0u128;
        for (j, slice) in slices.iter().enumerate() {
            debug_assert_eq!(slice.universe(), points);
            for i in slice.iter() {
                bits |= 1 << (i * params + j);
            }
        }
        SoftSet::from_bits(bits, points, params)
    }

    pub fn constant(set: PointSet, params: usize) -> Self {
        let slices: Vec<PointSet> = (0..params).map(|_| set).collect();
        SoftSet::from_slices(&slices)
    }

    pub fn bits(self) -> u128 {
        self.bits
    }

    pub fn points(self) -> usize {
        self.points as usize
    }

    pub fn params(self) -> usize {
        self.params as usize
    }

    pub fn same_shape(self, other: Self) -> bool {
        self.points == other.points && self.params == other.params
    }

    /// `F(e_j)`.
    pub fn slice(self, j: usize) -> PointSet {
        let m = self.params();
        let mut out = 0u64;
        for i in 0..self.points() {
            out |= ((self.bits >> (i * m + j) & 1) as u64) << i;
        }
        PointSet::from_bits(out, self.points())
    }

    pub fn slices(self) -> Vec<PointSet> {
        (0..self.params()).map(|j| self.slice(j)).collect()
    }

    /// Copy of `self` with `F(e_j)` replaced.
    pub fn with_slice(self, j: usize, set: PointSet) -> Self {
        let mut slices = self.slices();
        slices[j] = set;
        SoftSet::from_slices(&slices)
    }

    fn point_mask(self, x: usize) -> u128 {
        let m = self.params();
        low_mask128(m) << (x * m)
    }

    pub fn is_null(self) -> bool {
        self.bits == 0
    }

    pub fn is_absolute(self) -> bool {
        self.bits == low_mask128(self.points() * self.params())
    }

    pub fn union(self, other: Self) -> Self {
        debug_assert!(self.same_shape(other));
        SoftSet {
            bits: self.bits | other.bits,
            ..self
        }
    }

    pub fn intersection(self, other: Self) -> Self {
        debug_assert!(self.same_shape(other));
        SoftSet {
            bits: self.bits & other.bits,
            ..self
        }
    }

    pub fn complement(self) -> Self {
        SoftSet {
            bits: !self.bits & low_mask128(self.points() * self.params()),
            ..self
        }
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.bits & other.bits == 0
    }

    /// `x ∈ (F,E)`: `x ∈ F(e)` for every parameter.
    pub fn contains_point(self, x: usize) -> bool {
        let mask = self.point_mask(x);
        self.bits & mask == mask
    }

    /// `x ∉ (F,E)`: `x ∉ F(e)` for some parameter.
    pub fn excludes_point(self, x: usize) -> bool {
        !self.contains_point(x)
    }

    /// Pairs `(point, parameter)` in the product encoding, canonical order.
    pub fn product_pairs(self) -> Vec<(usize, usize)> {
        let m = self.params();
        (0..self.points() * m)
            .filter(|b| self.bits >> b & 1 == 1)
            .map(|b| (b / m, b % m))
            .collect()
    }
}

/// Builds `(F,E)` from `(parameter, points)` pairs; every parameter must
/// appear exactly once.
pub fn make_soft_set<'a, I, P>(ctx: &Context, pairs: I) -> Result<SoftSet, Error>
where
    I: IntoIterator<Item = (&'a str, P)>,
    P: IntoIterator<Item = &'a str>,
{
    let mut slices: Vec<Option<PointSet>> = alloc::vec![None; ctx.params()];
    for (param, points) in pairs {
        let j = ctx.parameter_index(param)?;
        let set = ctx.point_set(points)?;
        if slices[j].replace(set).is_some() {
            return Err(Error::DuplicateParameter(param.into()));
        }
    }
    let mut out = Vec::with_capacity(ctx.params());
    for (j, slice) in slices.into_iter().enumerate() {
        out.push(slice.ok_or_else(|| Error::MissingParameter(ctx.parameters()[j].clone()))?);
    }
    Ok(SoftSet::from_slices(&out))
}

pub fn soft_union(a: SoftSet, b: SoftSet) -> Result<SoftSet, Error> {
    if !a.same_shape(b) {
        return Err(Error::ContextMismatch);
    }
    Ok(a.union(b))
}

pub fn soft_intersection(a: SoftSet, b: SoftSet) -> Result<SoftSet, Error> {
    if !a.same_shape(b) {
        return Err(Error::ContextMismatch);
    }
    Ok(a.intersection(b))
}

pub fn soft_complement(a: SoftSet) -> SoftSet {
    a.complement()
}

pub fn soft_subset(a: SoftSet, b: SoftSet) -> Result<bool, Error> {
    if !a.same_shape(b) {
        return Err(Error::ContextMismatch);
    }
    Ok(a.is_subset(b))
}

pub fn point_in(ctx: &Context, x: &str, a: SoftSet) -> Result<bool, Error> {
    ctx.check_soft(a)?;
    Ok(a.contains_point(ctx.point_index(x)?))
}

/// `F^G_e`: `G` at `e`, `X` at every other parameter.
pub fn upper_cylinder(ctx: &Context, g: PointSet, e: &str) -> Result<SoftSet, Error> {
    let j = ctx.parameter_index(e)?;
    ctx.check_points(g)?;
    Ok(ctx.absolute().with_slice(j, g))
}

/// `F^e_H`: `H` at `e`, `∅` at every other parameter.
pub fn lower_cylinder(ctx: &Context, h: PointSet, e: &str) -> Result<SoftSet, Error> {
    let j = ctx.parameter_index(e)?;
    ctx.check_points(h)?;
    Ok(ctx.null().with_slice(j, h))
}

/// The soft set as a subset of `X × E`, as `(point, parameter)` index pairs.
pub fn to_product_subset(a: SoftSet) -> Vec<(usize, usize)> {
    a.product_pairs()
}

pub fn from_product_subset(ctx: &Context, pairs: &[(usize, usize)]) -> Result<SoftSet, Error> {
    let m = ctx.params();
    let mut bits = 0u128;
    for &(i, j) in pairs {
        if i >= ctx.points() || j >= m {
            return Err(Error::ContextMismatch);
        }
        bits |= 1 << (i * m + j);
    }
    Ok(SoftSet::from_bits(bits, ctx.points(), m))
}
