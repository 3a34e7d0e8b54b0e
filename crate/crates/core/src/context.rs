use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::set::{PointSet, SoftSet};

/// Largest universe a [`PointSet`] can index.
pub const MAX_POINTS: usize = 64;
/// Largest point-parameter product a [`SoftSet`] can index.
pub const MAX_BITS: usize = 128;

/// A finite universe `X` together with a parameter set `E`.
///
/// Both label lists keep their construction order; that order is the
/// canonical indexing used by every set in this context.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Context {
    universe: Vec<String>,
    parameters: Vec<String>,
}

impl Context {
    pub fn new<U, P>(universe: U, parameters: P) -> Result<Self, Error>
    where
        U: IntoIterator,
        U::Item: Into<String>,
        P: IntoIterator,
        P::Item: Into<String>,
    {
        let universe: Vec<String> = universe.into_iter().map(Into::into).collect();
        let parameters: Vec<String> = parameters.into_iter().map(Into::into).collect();
        if universe.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        if parameters.is_empty() {
            return Err(Error::EmptyParameters);
        }
        if let Some(dup) = first_duplicate(&universe) {
            return Err(Error::DuplicatePoint(dup.to_string()));
        }
        if let Some(dup) = first_duplicate(&parameters) {
            return Err(Error::DuplicateParameter(dup.to_string()));
        }
        if universe.len() > MAX_POINTS || universe.len() * parameters.len() > MAX_BITS {
            return Err(Error::ContextTooLarge {
                points: universe.len(),
                parameters: parameters.len(),
            });
        }
        Ok(Context { universe, parameters })
    }

    /// Context with points `x1..xn` and parameters `e1..em`.
    pub fn synthetic(points: usize, parameters: usize) -> Result<Self, Error> {
        Context::new(
            (1..=points).map(|i| format!("x{i}")),
            (1..=parameters).map(|j| format!("e{j}")),
        )
    }

    pub fn universe(&self) -> &[String] {
        &self.universe
    }

    pub fn parameters(&self) -> &[String] {
        &self.parameters
    }

    pub fn points(&self) -> usize {
        self.universe.len()
    }

    pub fn params(&self) -> usize {
        self.parameters.len()
    }

    /// Number of point-parameter pairs, i.e. the bit width of a soft set.
    pub fn bits(&self) -> usize {
        self.points() * self.params()
    }

    /// Same universe and parameter labels, in the same order.
    pub fn same_as(&self, other: &Context) -> bool {
        self == other
    }

    pub fn point_index(&self, label: &str) -> Result<usize, Error> {
        self.universe
            .iter()
            .position(|p| p == label)
            .ok_or_else(|| Error::UnknownPoint(label.to_string()))
    }

    pub fn parameter_index(&self, label: &str) -> Result<usize, Error> {
        self.parameters
            .iter()
            .position(|p| p == label)
            .ok_or_else(|| Error::UnknownParameter(label.to_string()))
    }

    pub fn empty_set(&self) -> PointSet {
        PointSet::empty(self.points())
    }

    pub fn whole(&self) -> PointSet {
        PointSet::full(self.points())
    }

    /// Builds a point set from labels.
    pub fn point_set<'a, I>(&self, labels: I) -> Result<PointSet, Error>
    where
        I: IntoIterator<Item = &'a str>,
    {
        let mut set = self.empty_set();
        for label in labels {
            set = set.with(self.point_index(label)?);
        }
        Ok(set)
    }

    /// The null soft set `Φ̃`.
    pub fn null(&self) -> SoftSet {
        SoftSet::null(self.points(), self.params())
    }

    /// The absolute soft set `X̃`.
    pub fn absolute(&self) -> SoftSet {
        SoftSet::absolute(self.points(), self.params())
    }

    /// Soft set equal to `set` at every parameter.
    pub fn constant(&self, set: PointSet) -> SoftSet {
        SoftSet::constant(set, self.params())
    }

    /// The soft point `({x}, E)`.
    pub fn soft_point(&self, x: usize) -> SoftSet {
        self.constant(PointSet::singleton(x, self.points()))
    }

    /// Soft set built from one point set per parameter, in parameter order.
    pub fn soft_from_slices(&self, slices: &[PointSet]) -> Result<SoftSet, Error> {
        if slices.len() != self.params() || slices.iter().any(|s| s.universe() != self.points()) {
            return Err(Error::ContextMismatch);
        }
        Ok(SoftSet::from_slices(slices))
    }

    pub fn display_set(&self, set: PointSet) -> DisplaySet<'_> {
        DisplaySet { ctx: self, set }
    }

    pub fn display_soft(&self, set: SoftSet) -> DisplaySoft<'_> {
        DisplaySoft { ctx: self, set }
    }

    pub(crate) fn check_points(&self, set: PointSet) -> Result<(), Error> {
        if set.universe() == self.points() {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub(crate) fn check_soft(&self, set: SoftSet) -> Result<(), Error> {
        if set.points() == self.points() && set.params() == self.params() {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }
}

fn first_duplicate(labels: &[String]) -> Option<&str> {
    labels
        .iter()
        .enumerate()
        .find(|(i, l)| labels[..*i].contains(l))
        .map(|(_, l)| l.as_str())
}

/// `{x1,x3}` style rendering; the empty set prints as `∅`.
pub struct DisplaySet<'a> {
    ctx: &'a Context,
    set: PointSet,
}

impl fmt::Display for DisplaySet<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.set.is_empty() {
            return f.write_str("∅");
        }
        f.write_str("{")?;
        for (k, i) in self.set.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            f.write_str(&self.ctx.universe[i])?;
        }
        f.write_str("}")
    }
}

/// `{(e1,{x1}),(e2,∅)}` style rendering.
pub struct DisplaySoft<'a> {
    ctx: &'a Context,
    set: SoftSet,
}

impl fmt::Display for DisplaySoft<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (j, e) in self.ctx.parameters.iter().enumerate() {
            if j > 0 {
                f.write_str(",")?;
            }
            write!(f, "({e},{})", self.ctx.display_set(self.set.slice(j)))?;
        }
        f.write_str("}")
    }
}
