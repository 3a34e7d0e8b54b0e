//! Separation axioms T0, T1, T2, regular, normal, T3 and T4.
//!
//! One generic checker serves both flavors. For soft topologies a point
//! belongs to a soft set when it belongs to every slice and is outside it
//! when it misses at least one slice.
//!
//! The checker works with minimal neighbourhoods: in a finite topology the
//! intersection of all opens containing a set is itself open, so two sets
//! can be separated by disjoint opens exactly when their minimal
//! neighbourhoods are disjoint. [`AxiomReport::replay`] re-checks witnesses
//! directly against the open family instead.

use alloc::vec::Vec;

use crate::topology::{CrispTopology, Lattice, SoftTopology, Topology};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AxiomKind {
    T0,
    T1,
    T2,
    Regular,
    Normal,
    T3,
    T4,
}

impl AxiomKind {
    pub const ALL: [AxiomKind; 7] = [
        AxiomKind::T0,
        AxiomKind::T1,
        AxiomKind::T2,
        AxiomKind::Regular,
        AxiomKind::Normal,
        AxiomKind::T3,
        AxiomKind::T4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AxiomKind::T0 => "t0",
            AxiomKind::T1 => "t1",
            AxiomKind::T2 => "t2",
            AxiomKind::Regular => "regular",
            AxiomKind::Normal => "normal",
            AxiomKind::T3 => "t3",
            AxiomKind::T4 => "t4",
        }
    }

    pub fn parse(name: &str) -> Option<Self> {
        AxiomKind::ALL.into_iter().find(|k| k.name().eq_ignore_ascii_case(name))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flavor {
    Crisp,
    Soft,
}

/// An axiom together with the kind of space it is stated for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Axiom {
    pub kind: AxiomKind,
    pub flavor: Flavor,
}

impl Axiom {
    /// Accepts `t1`, `soft-t1`, `crisp-normal` and so on; a bare name takes
    /// `default_flavor`.
    pub fn parse(name: &str, default_flavor: Flavor) -> Option<Self> {
        let lower = name.to_ascii_lowercase();
        let (flavor, rest) = if let Some(rest) = lower.strip_prefix("soft-") {
            (Flavor::Soft, rest)
        } else if let Some(rest) = lower.strip_prefix("crisp-") {
            (Flavor::Crisp, rest)
        } else {
            (default_flavor, lower.as_str())
        };
        AxiomKind::parse(rest).map(|kind| Axiom { kind, flavor })
    }
}

/// What a separation is about.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Subject<S> {
    /// Two distinct points. For a T1 failure: every open containing `x`
    /// also contains `y`.
    Points { x: usize, y: usize },
    /// A point outside a closed set.
    PointAndClosed { x: usize, closed: S },
    /// Two disjoint closed sets.
    ClosedPair { first: S, second: S },
}

/// Opens that separate a subject. For T0 at most one side may be missing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Separation<S> {
    pub axiom: AxiomKind,
    pub subject: Subject<S>,
    pub left: Option<S>,
    pub right: Option<S>,
}

/// The base axiom that failed (T1 or regular/normal for T3/T4) and the
/// first subject in canonical order that cannot be separated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Failure<S> {
    pub axiom: AxiomKind,
    pub subject: Subject<S>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport<S> {
    pub axiom: AxiomKind,
    pub holds: bool,
    pub failure: Option<Failure<S>>,
    /// Separating opens for every subject, filled only on request and only
    /// when the axiom holds.
    pub evidence: Vec<Separation<S>>,
}

pub fn check<S: Lattice>(topology: &Topology<S>, axiom: AxiomKind) -> AxiomReport<S> {
    run(topology, axiom, false)
}

pub fn check_with_evidence<S: Lattice>(topology: &Topology<S>, axiom: AxiomKind) -> AxiomReport<S> {
    run(topology, axiom, true)
}

pub fn check_crisp(topology: &CrispTopology, axiom: AxiomKind) -> AxiomReport<crate::PointSet> {
    check(topology, axiom)
}

pub fn check_soft(topology: &SoftTopology, axiom: AxiomKind) -> AxiomReport<crate::SoftSet> {
    check(topology, axiom)
}

pub fn holds<S: Lattice>(topology: &Topology<S>, axiom: AxiomKind) -> bool {
    check(topology, axiom).holds
}

fn run<S: Lattice>(topology: &Topology<S>, axiom: AxiomKind, collect: bool) -> AxiomReport<S> {
    let parts: &[AxiomKind] = match axiom {
        AxiomKind::T3 => &[AxiomKind::T1, AxiomKind::Regular],
        AxiomKind::T4 => &[AxiomKind::T1, AxiomKind::Normal],
        _ => core::slice::from_ref(&axiom),
    };
    let mut evidence = Vec::new();
    for &part in parts {
        let mut sink = if collect { Some(&mut evidence) } else { None };
        if let Err(subject) = scan(topology, part, &mut sink) {
            return AxiomReport {
                axiom,
                holds: false,
                failure: Some(Failure { axiom: part, subject }),
                evidence: Vec::new(),
            };
        }
    }
    AxiomReport {
        axiom,
        holds: true,
        failure: None,
        evidence,
    }
}

fn scan<S: Lattice>(
    topology: &Topology<S>,
    axiom: AxiomKind,
    sink: &mut Option<&mut Vec<Separation<S>>>,
) -> Result<(), Subject<S>> {
    let ctx = topology.context();
    let n = ctx.points();
    let nbhd: Vec<S> = (0..n).map(|x| topology.neighbourhood(S::point(ctx, x))).collect();
    let mut record = |subject, left, right| {
        if let Some(out) = sink.as_mut() {
            out.push(Separation {
                axiom,
                subject,
                left,
                right,
            });
        }
    };
    match axiom {
        AxiomKind::T0 | AxiomKind::T1 | AxiomKind::T2 => {
            for x in 0..n {
                for y in x + 1..n {
                    let (u, v) = (nbhd[x], nbhd[y]);
                    let subject = Subject::Points { x, y };
                    match axiom {
                        AxiomKind::T0 => {
                            let left = (!u.has_point(y)).then_some(u);
                            let right = (!v.has_point(x)).then_some(v);
                            if left.is_none() && right.is_none() {
                                return Err(subject);
                            }
                            record(subject, left, right);
                        }
                        AxiomKind::T1 => {
                            if u.has_point(y) {
                                return Err(subject);
                            }
                            if v.has_point(x) {
                                return Err(Subject::Points { x: y, y: x });
                            }
                            record(subject, Some(u), Some(v));
                        }
                        _ => {
                            if !u.meet(v).is_bottom() {
                                return Err(subject);
                            }
                            record(subject, Some(u), Some(v));
                        }
                    }
                }
            }
        }
        AxiomKind::Regular => {
            let closed = topology.closed_sets();
            for (x, &u) in nbhd.iter().enumerate() {
                for &f in closed.iter().filter(|f| !f.has_point(x)) {
                    let v = topology.neighbourhood(f);
                    let subject = Subject::PointAndClosed { x, closed: f };
                    if !u.meet(v).is_bottom() {
                        return Err(subject);
                    }
                    record(subject, Some(u), Some(v));
                }
            }
        }
        AxiomKind::Normal => {
            let closed = topology.closed_sets();
            let hulls: Vec<S> = closed.iter().map(|&f| topology.neighbourhood(f)).collect();
            for a in 0..closed.len() {
                for b in a + 1..closed.len() {
                    if !closed[a].meet(closed[b]).is_bottom() {
                        continue;
                    }
                    let subject = Subject::ClosedPair {
                        first: closed[a],
                        second: closed[b],
                    };
                    if !hulls[a].meet(hulls[b]).is_bottom() {
                        return Err(subject);
                    }
                    record(subject, Some(hulls[a]), Some(hulls[b]));
                }
            }
        }
        AxiomKind::T3 | AxiomKind::T4 => unreachable!("compound axioms are split by run"),
    }
    Ok(())
}

impl<S: Lattice> AxiomReport<S> {
    /// Re-checks the report against the open family by direct search.
    ///
    /// A failure replays when its subject is well formed and no pair of
    /// opens separates it; a success replays when every recorded separation
    /// uses opens of the topology and actually separates its subject.
    pub fn replay(&self, topology: &Topology<S>) -> bool {
        match &self.failure {
            Some(f) => {
                !self.holds
                    && subject_is_well_formed(topology, f.axiom, &f.subject)
                    && !separable(topology, f.axiom, &f.subject)
            }
            None => {
                self.holds
                    && self.evidence.iter().all(|sep| {
                        [sep.left, sep.right].iter().flatten().all(|s| topology.contains(s)) && separation_is_valid(sep)
                    })
            }
        }
    }
}

/// Whether `subject` is a legitimate instance for the base axiom: distinct
/// points, a point outside a closed set, or two disjoint closed sets.
pub fn subject_is_well_formed<S: Lattice>(topology: &Topology<S>, axiom: AxiomKind, subject: &Subject<S>) -> bool {
    let n = topology.context().points();
    let closed = |s: &S| topology.contains(&s.complement());
    match (axiom, subject) {
        (AxiomKind::T0 | AxiomKind::T1 | AxiomKind::T2, Subject::Points { x, y }) => x != y && *x < n && *y < n,
        (AxiomKind::Regular, Subject::PointAndClosed { x, closed: f }) => *x < n && closed(f) && !f.has_point(*x),
        (AxiomKind::Normal, Subject::ClosedPair { first, second }) => {
            closed(first) && closed(second) && first.meet(*second).is_bottom()
        }
        _ => false,
    }
}

/// Brute-force search over pairs of opens for a separation of `subject`
/// under the base axiom `axiom` (T0, T1, T2, regular or normal).
pub fn separable<S: Lattice>(topology: &Topology<S>, axiom: AxiomKind, subject: &Subject<S>) -> bool {
    let opens = topology.opens();
    let any_open = |pred: &dyn Fn(S) -> bool| opens.iter().any(|&u| pred(u));
    let any_pair = |pred: &dyn Fn(S, S) -> bool| opens.iter().any(|&u| opens.iter().any(|&v| pred(u, v)));
    match (axiom, *subject) {
        (AxiomKind::T0, Subject::Points { x, y }) => {
            any_open(&|u| u.has_point(x) && !u.has_point(y)) || any_open(&|v| v.has_point(y) && !v.has_point(x))
        }
        (AxiomKind::T1, Subject::Points { x, y }) => {
            any_open(&|u| u.has_point(x) && !u.has_point(y)) && any_open(&|v| v.has_point(y) && !v.has_point(x))
        }
        (AxiomKind::T2, Subject::Points { x, y }) => {
            any_pair(&|u, v| u.has_point(x) && v.has_point(y) && u.meet(v).is_bottom())
        }
        (AxiomKind::Regular, Subject::PointAndClosed { x, closed }) => {
            any_pair(&|u, v| u.has_point(x) && closed.le(v) && u.meet(v).is_bottom())
        }
        (AxiomKind::Normal, Subject::ClosedPair { first, second }) => {
            any_pair(&|u, v| first.le(u) && second.le(v) && u.meet(v).is_bottom())
        }
        _ => false,
    }
}

fn separation_is_valid<S: Lattice>(sep: &Separation<S>) -> bool {
    let disjoint = |u: S, v: S| u.meet(v).is_bottom();
    match (sep.axiom, sep.subject, sep.left, sep.right) {
        (AxiomKind::T0, Subject::Points { x, y }, left, right) => {
            let l = left.is_none_or(|u| u.has_point(x) && !u.has_point(y));
            let r = right.is_none_or(|v| v.has_point(y) && !v.has_point(x));
            (left.is_some() || right.is_some()) && l && r
        }
        (AxiomKind::T1, Subject::Points { x, y }, Some(u), Some(v)) => {
            u.has_point(x) && !u.has_point(y) && v.has_point(y) && !v.has_point(x)
        }
        (AxiomKind::T2, Subject::Points { x, y }, Some(u), Some(v)) => {
            u.has_point(x) && v.has_point(y) && disjoint(u, v)
        }
        (AxiomKind::Regular, Subject::PointAndClosed { x, closed }, Some(u), Some(v)) => {
            u.has_point(x) && closed.le(v) && disjoint(u, v)
        }
        (AxiomKind::Normal, Subject::ClosedPair { first, second }, Some(u), Some(v)) => {
            first.le(u) && second.le(v) && disjoint(u, v)
        }
        _ => false,
    }
}
