//! Transfer claims as predicates over enumerable instances.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use rand::Rng;

use crate::context::Context;
use crate::error::Error;
use crate::generators::{
    associated, extract_system, formula1, formula2, minimal_base, product_base, union_single_set, CrispSystem,
};
use crate::lab::enumerate::{enumerate_crisp_topologies_in, enumerate_soft_topologies, enumerate_systems};
use crate::lab::random::{random_crisp_with, random_soft_with, rng};
use crate::separation::{holds, AxiomKind};
use crate::set::PointSet;
use crate::topology::{generate_crisp, generate_soft, is_soft_base, CrispTopology, SoftTopology};

/// Exhaustive system sweeps refuse to run past this many cases.
pub const MAX_SYSTEM_CASES: usize = 10_000_000;

/// A checkable claim. The string codes (`"T5.3"`, `"CONV-T5.2"`, ...) are
/// the identifiers used on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TheoremId {
    /// Every soft topology is contained in its associated topology.
    ContainedInAssociated,
    /// The product of bases generates the Formula 1 topology and is a base of it.
    ProductBase,
    /// Generating from the union of single-set topologies equals the
    /// single-set topology of the crisp topology generated by the union.
    UnionSingleSet,
    /// Some slice T0 implies the Formula 1 topology is soft T0.
    T0Transfer,
    /// Some slice T1 implies the Formula 1 topology is soft T1.
    T1Transfer,
    /// Every slice T2 iff the Formula 1 topology is soft T2.
    T2Equivalence,
    /// Soft regular Formula 1 topology implies every slice regular.
    RegularTransfer,
    /// Every slice normal iff the Formula 1 topology is soft normal.
    NormalEquivalence,
    /// Soft T2 implies every extracted topology is T2.
    T2Extraction,
    /// Soft regular implies every extracted topology is regular.
    RegularExtraction,
    /// Soft regular implies all extracted topologies coincide.
    RegularEqualSlices,
    /// Soft T3 implies every extracted topology is T3.
    T3Extraction,
    /// The single-set topology satisfies exactly the axioms of its crisp topology.
    SingleSetTransfer,
    /// Converse of [`TheoremId::T0Transfer`]; false in general.
    ConverseT0,
    /// Converse of [`TheoremId::T1Transfer`]; false in general.
    ConverseT1,
    /// Converse of [`TheoremId::RegularTransfer`]; false in general.
    ConverseRegular,
}

/// What a claim quantifies over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scope {
    /// Crisp systems on `n` points and `m` parameters.
    System,
    /// Soft topologies on `n` points and `m` parameters.
    Census,
    /// Crisp topologies on up to `n` points, lifted over `m` parameters.
    Crisp,
}

impl TheoremId {
    pub const ALL: [TheoremId; 16] = [
        TheoremId::ContainedInAssociated,
        TheoremId::ProductBase,
        TheoremId::UnionSingleSet,
        TheoremId::T0Transfer,
        TheoremId::T1Transfer,
        TheoremId::T2Equivalence,
        TheoremId::RegularTransfer,
        TheoremId::NormalEquivalence,
        TheoremId::T2Extraction,
        TheoremId::RegularExtraction,
        TheoremId::RegularEqualSlices,
        TheoremId::T3Extraction,
        TheoremId::SingleSetTransfer,
        TheoremId::ConverseT0,
        TheoremId::ConverseT1,
        TheoremId::ConverseRegular,
    ];

    pub fn code(self) -> &'static str {
        match self {
            TheoremId::ContainedInAssociated => "L3.3",
            TheoremId::ProductBase => "L3.4",
            TheoremId::UnionSingleSet => "L3.6",
            TheoremId::T0Transfer => "T5.1",
            TheoremId::T1Transfer => "T5.2",
            TheoremId::T2Equivalence => "T5.3",
            TheoremId::RegularTransfer => "T5.4",
            TheoremId::NormalEquivalence => "T5.5",
            TheoremId::T2Extraction => "C5.1",
            TheoremId::RegularExtraction => "C5.2",
            TheoremId::RegularEqualSlices => "L2.7",
            TheoremId::T3Extraction => "R-T3",
            TheoremId::SingleSetTransfer => "F2-TRANSFER",
            TheoremId::ConverseT0 => "CONV-T5.1",
            TheoremId::ConverseT1 => "CONV-T5.2",
            TheoremId::ConverseRegular => "CONV-T5.4",
        }
    }

    pub fn parse(code: &str) -> Result<Self, Error> {
        TheoremId::ALL
            .into_iter()
            .find(|id| id.code().eq_ignore_ascii_case(code))
            .ok_or_else(|| Error::UnknownTheorem(code.to_string()))
    }

    pub fn statement(self) -> &'static str {
        match self {
            TheoremId::ContainedInAssociated => "every soft topology is contained in its associated soft topology",
            TheoremId::ProductBase => "B(bases) is a base of T(sigma) and generates it, for full and minimal bases",
            TheoremId::UnionSingleSet => {
                "T(union of single-set topologies) = single-set topology of T(union of Sigma_e)"
            }
            TheoremId::T0Transfer => "some Sigma_e T0 => T(sigma) soft T0",
            TheoremId::T1Transfer => "some Sigma_e T1 => T(sigma) soft T1",
            TheoremId::T2Equivalence => "every Sigma_e T2 <=> T(sigma) soft T2",
            TheoremId::RegularTransfer => "T(sigma) soft regular => every Sigma_e regular",
            TheoremId::NormalEquivalence => "every Sigma_e normal <=> T(sigma) soft normal",
            TheoremId::T2Extraction => "soft T2 => every extracted Sigma_e T2",
            TheoremId::RegularExtraction => "soft regular => every extracted Sigma_e regular",
            TheoremId::RegularEqualSlices => "soft regular => all extracted Sigma_e equal",
            TheoremId::T3Extraction => "soft T3 => every extracted Sigma_e T3",
            TheoremId::SingleSetTransfer => "single-set topology of Sigma satisfies exactly the axioms Sigma satisfies",
            TheoremId::ConverseT0 => "T(sigma) soft T0 => some Sigma_e T0",
            TheoremId::ConverseT1 => "T(sigma) soft T1 => some Sigma_e T1",
            TheoremId::ConverseRegular => "every Sigma_e regular => T(sigma) soft regular",
        }
    }

    pub fn scope(self) -> Scope {
        match self {
            TheoremId::ContainedInAssociated
            | TheoremId::T2Extraction
            | TheoremId::RegularExtraction
            | TheoremId::RegularEqualSlices
            | TheoremId::T3Extraction => Scope::Census,
            TheoremId::SingleSetTransfer => Scope::Crisp,
            _ => Scope::System,
        }
    }

    pub fn is_converse(self) -> bool {
        matches!(
            self,
            TheoremId::ConverseT0 | TheoremId::ConverseT1 | TheoremId::ConverseRegular
        )
    }

    /// Default sweep size: `n = 3, m = 2` for systems and crisp lifts,
    /// `n = m = 2` for the soft-topology census.
    pub fn default_bounds(self) -> SweepBounds {
        match self.scope() {
            Scope::Census => SweepBounds::exhaustive(2, 2),
            _ => SweepBounds::exhaustive(3, 2),
        }
    }
}

impl core::fmt::Display for TheoremId {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.code())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SweepMode {
    Exhaustive,
    Random { seed: u64, samples: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepBounds {
    pub max_points: usize,
    pub max_parameters: usize,
    pub mode: SweepMode,
}

impl SweepBounds {
    pub fn exhaustive(max_points: usize, max_parameters: usize) -> Self {
        SweepBounds {
            max_points,
            max_parameters,
            mode: SweepMode::Exhaustive,
        }
    }

    pub fn random(max_points: usize, max_parameters: usize, seed: u64, samples: usize) -> Self {
        SweepBounds {
            max_points,
            max_parameters,
            mode: SweepMode::Random { seed, samples },
        }
    }

    pub fn validate(&self) -> Result<(), Error> {
        if self.max_points == 0 || self.max_parameters == 0 {
            return Err(Error::BoundExceeded("points and parameters must be positive".into()));
        }
        if self.mode == SweepMode::Exhaustive && (self.max_points > 4 || self.max_points * self.max_parameters > 20) {
            return Err(Error::BoundExceeded(format!(
                "exhaustive sweeps need at most 4 points and 20 point-parameter pairs, got {}x{}",
                self.max_points, self.max_parameters
            )));
        }
        Ok(())
    }
}

/// A concrete input to a claim.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance {
    System(CrispSystem),
    Soft(SoftTopology),
    Crisp(CrispTopology),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub instance: Instance,
    pub detail: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    ProvenAtScale,
    Counterexample,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::ProvenAtScale => "proven-at-scale",
            Status::Counterexample => "counterexample",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationOutcome {
    pub id: TheoremId,
    pub status: Status,
    pub cases_checked: usize,
    pub counterexample: Option<Counterexample>,
}

impl VerificationOutcome {
    /// Re-evaluates the claim on the stored counterexample; true when the
    /// violation reproduces. Outcomes without a counterexample replay
    /// trivially.
    pub fn replay(&self) -> Result<bool, Error> {
        match &self.counterexample {
            Some(c) => Ok(evaluate(self.id, &c.instance)?.is_some()),
            None => Ok(self.status == Status::ProvenAtScale),
        }
    }
}

fn any_slice(system: &CrispSystem, axiom: AxiomKind) -> bool {
    system.topologies().iter().any(|t| holds(t, axiom))
}

fn every_slice(system: &CrispSystem, axiom: AxiomKind) -> bool {
    system.topologies().iter().all(|t| holds(t, axiom))
}

fn implication(premise: bool, conclusion: bool, what: &str) -> Option<String> {
    (premise && !conclusion).then(|| what.to_string())
}

fn equivalence(left: bool, right: bool, what: &str) -> Option<String> {
    (left != right).then(|| format!("{what}: crisp side {left}, soft side {right}"))
}

/// Evaluates `id` on one instance: `Ok(Some(reason))` when the claim fails.
pub fn evaluate(id: TheoremId, instance: &Instance) -> Result<Option<String>, Error> {
    match (id.scope(), instance) {
        (Scope::System, Instance::System(sys)) => evaluate_system(id, sys),
        (Scope::Census, Instance::Soft(t)) => evaluate_census(id, t),
        (Scope::Crisp, Instance::Crisp(sigma)) => Ok(evaluate_crisp(sigma)),
        _ => Err(Error::BoundExceeded(format!(
            "{} does not apply to this kind of instance",
            id.code()
        ))),
    }
}

fn evaluate_system(id: TheoremId, sys: &CrispSystem) -> Result<Option<String>, Error> {
    use TheoremId::*;
    let product = formula1(sys)?;
    let soft = |axiom| holds(&product, axiom);
    Ok(match id {
        T0Transfer => implication(
            any_slice(sys, AxiomKind::T0),
            soft(AxiomKind::T0),
            "a slice is T0 but T(sigma) is not soft T0",
        ),
        T1Transfer => implication(
            any_slice(sys, AxiomKind::T1),
            soft(AxiomKind::T1),
            "a slice is T1 but T(sigma) is not soft T1",
        ),
        T2Equivalence => equivalence(every_slice(sys, AxiomKind::T2), soft(AxiomKind::T2), "T2"),
        RegularTransfer => implication(
            soft(AxiomKind::Regular),
            every_slice(sys, AxiomKind::Regular),
            "T(sigma) soft regular but a slice is not regular",
        ),
        NormalEquivalence => equivalence(every_slice(sys, AxiomKind::Normal), soft(AxiomKind::Normal), "normal"),
        ConverseT0 => implication(
            soft(AxiomKind::T0),
            any_slice(sys, AxiomKind::T0),
            "T(sigma) soft T0 but no slice is T0",
        ),
        ConverseT1 => implication(
            soft(AxiomKind::T1),
            any_slice(sys, AxiomKind::T1),
            "T(sigma) soft T1 but no slice is T1",
        ),
        ConverseRegular => implication(
            every_slice(sys, AxiomKind::Regular),
            soft(AxiomKind::Regular),
            "every slice regular but T(sigma) not soft regular",
        ),
        ProductBase => {
            let ctx = sys.context();
            let full: Vec<Vec<PointSet>> = sys.topologies().iter().map(|t| t.opens().to_vec()).collect();
            let minimal: Vec<Vec<PointSet>> = sys.topologies().iter().map(minimal_base).collect();
            let mut failure = None;
            for (label, bases) in [("full bases", full), ("minimal bases", minimal)] {
                let base = product_base(ctx, &bases)?;
                if generate_soft(ctx, &base)? != product {
                    failure = Some(format!("product of {label} does not generate T(sigma)"));
                } else if !is_soft_base(&base, &product)? {
                    failure = Some(format!("product of {label} is not a base of T(sigma)"));
                }
                if failure.is_some() {
                    break;
                }
            }
            failure
        }
        UnionSingleSet => {
            let ctx = sys.context();
            let all: Vec<PointSet> = sys.topologies().iter().flat_map(|t| t.opens().to_vec()).collect();
            let right = formula2(&generate_crisp(ctx, &all)?);
            (union_single_set(sys)? != right).then(|| "generated topologies differ".to_string())
        }
        _ => None,
    })
}

fn evaluate_census(id: TheoremId, t: &SoftTopology) -> Result<Option<String>, Error> {
    use TheoremId::*;
    let slices = extract_system(t);
    let soft = |axiom| holds(t, axiom);
    Ok(match id {
        ContainedInAssociated => {
            (!t.is_coarser_or_equal(&associated(t)?)).then(|| "not contained in its associated topology".to_string())
        }
        T2Extraction => implication(
            soft(AxiomKind::T2),
            every_slice(&slices, AxiomKind::T2),
            "soft T2 but a slice is not T2",
        ),
        RegularExtraction => implication(
            soft(AxiomKind::Regular),
            every_slice(&slices, AxiomKind::Regular),
            "soft regular but a slice is not regular",
        ),
        T3Extraction => implication(
            soft(AxiomKind::T3),
            every_slice(&slices, AxiomKind::T3),
            "soft T3 but a slice is not T3",
        ),
        RegularEqualSlices => {
            let first = slices.at(0);
            implication(
                soft(AxiomKind::Regular),
                slices.topologies().iter().all(|s| s.opens() == first.opens()),
                "soft regular but the slices differ",
            )
        }
        _ => None,
    })
}

fn evaluate_crisp(sigma: &CrispTopology) -> Option<String> {
    let lifted = formula2(sigma);
    AxiomKind::ALL
        .into_iter()
        .find(|&a| holds(sigma, a) != holds(&lifted, a))
        .map(|a| format!("{} differs between the topology and its single-set lift", a.name()))
}

/// Sweeps `id` over every instance within `bounds` (or a seeded sample)
/// and reports the first violation in enumeration order.
///
/// System and census sweeps use exactly `max_points` points; crisp lifts
/// cover every universe size from 1 to `max_points`, counting one case per
/// topology and axiom.
pub fn verify_theorem(id: TheoremId, bounds: SweepBounds) -> Result<VerificationOutcome, Error> {
    bounds.validate()?;
    let (n, m) = (bounds.max_points, bounds.max_parameters);
    let instances: alloc::boxed::Box<dyn Iterator<Item = Result<Instance, Error>>> = match bounds.mode {
        SweepMode::Exhaustive => exhaustive_instances(id.scope(), n, m)?,
        SweepMode::Random { seed, samples } => random_instances(id.scope(), n, m, seed, samples)?,
    };
    let weight = if id.scope() == Scope::Crisp {
        AxiomKind::ALL.len()
    } else {
        1
    };
    let mut cases = 0;
    for instance in instances {
        let instance = instance?;
        cases += weight;
        if let Some(detail) = evaluate(id, &instance)? {
            return Ok(VerificationOutcome {
                id,
                status: Status::Counterexample,
                cases_checked: cases,
                counterexample: Some(Counterexample { instance, detail }),
            });
        }
    }
    Ok(VerificationOutcome {
        id,
        status: Status::ProvenAtScale,
        cases_checked: cases,
        counterexample: None,
    })
}

fn exhaustive_instances(
    scope: Scope,
    n: usize,
    m: usize,
) -> Result<alloc::boxed::Box<dyn Iterator<Item = Result<Instance, Error>>>, Error> {
    Ok(match scope {
        Scope::System => {
            let ctx = Context::synthetic(n, m)?;
            let per_slice = enumerate_crisp_topologies_in(&ctx)?.len();
            let total = (0..m).try_fold(1usize, |acc, _| acc.checked_mul(per_slice));
            if total.is_none_or(|t| t > MAX_SYSTEM_CASES) {
                return Err(Error::BoundExceeded(format!(
                    "{per_slice}^{m} systems exceed the exhaustive limit of {MAX_SYSTEM_CASES}"
                )));
            }
            alloc::boxed::Box::new(enumerate_systems(&ctx)?.map(|s| Ok(Instance::System(s))))
        }
        Scope::Census => alloc::boxed::Box::new(
            enumerate_soft_topologies(n, m)?
                .into_iter()
                .map(|t| Ok(Instance::Soft(t))),
        ),
        Scope::Crisp => {
            let mut all = Vec::new();
            for k in 1..=n {
                let ctx = Context::synthetic(k, m)?;
                all.extend(
                    enumerate_crisp_topologies_in(&ctx)?
                        .into_iter()
                        .map(|t| Ok(Instance::Crisp(t))),
                );
            }
            alloc::boxed::Box::new(all.into_iter())
        }
    })
}

fn random_instances(
    scope: Scope,
    n: usize,
    m: usize,
    seed: u64,
    samples: usize,
) -> Result<alloc::boxed::Box<dyn Iterator<Item = Result<Instance, Error>>>, Error> {
    let ctx = Context::synthetic(n, m)?;
    crate::topology::SizeGuard::default().check(ctx.bits())?;
    let mut rng = rng(seed);
    Ok(alloc::boxed::Box::new((0..samples).map(move |_| {
        Ok(match scope {
            Scope::System => {
                let mut slices = Vec::with_capacity(m);
                for _ in 0..m {
                    let size = rng.gen_range(0..=2 * n);
                    slices.push(random_crisp_with(&mut rng, &ctx, size)?);
                }
                Instance::System(CrispSystem::new(ctx.clone(), slices)?)
            }
            Scope::Census => {
                let size = rng.gen_range(0..=ctx.bits());
                Instance::Soft(random_soft_with(&mut rng, &ctx, size)?)
            }
            Scope::Crisp => {
                let size = rng.gen_range(0..=2 * n);
                Instance::Crisp(random_crisp_with(&mut rng, &ctx, size)?)
            }
        })
    })))
}

/// Looks for a counterexample to a converse claim, trying universes of
/// 1, 2, ... `max_points` points in turn. `cases_checked` accumulates
/// across sizes.
pub fn search_converse_counterexample(id: TheoremId, bounds: SweepBounds) -> Result<VerificationOutcome, Error> {
    if !id.is_converse() {
        return Err(Error::NotAConverse(id.code().to_string()));
    }
    bounds.validate()?;
    if let SweepMode::Random { .. } = bounds.mode {
        let outcome = verify_theorem(id, bounds)?;
        return match outcome.status {
            Status::Counterexample => Ok(outcome),
            Status::ProvenAtScale => Err(Error::NotFound(id.code().to_string())),
        };
    }
    let mut cases = 0;
    for n in 1..=bounds.max_points {
        let mut outcome = verify_theorem(id, SweepBounds::exhaustive(n, bounds.max_parameters))?;
        cases += outcome.cases_checked;
        if outcome.status == Status::Counterexample {
            outcome.cases_checked = cases;
            return Ok(outcome);
        }
    }
    Err(Error::NotFound(id.code().to_string()))
}
