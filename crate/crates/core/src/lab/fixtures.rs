//! Worked examples with their expected properties.
//!
//! Each [`Fixture`] holds named data (soft families, crisp systems) and a
//! list of [`Check`]s phrased over small expressions, so the same corpus
//! drives the library tests, the CLI `fixtures` command and the JSON files
//! shipped under `fixtures/`.

use alloc::boxed::Box;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use crate::context::Context;
use crate::error::Error;
use crate::generators::{
    associated, extract_system, formula1, formula2, slice_topology, union_single_set, CrispSystem,
};
use crate::separation::{check_with_evidence, holds, separable, subject_is_well_formed, AxiomKind, Subject};
use crate::set::{PointSet, SoftSet};
use crate::topology::{canonical, compare, generate_soft, Comparison, CrispTopology, SoftTopology};

/// A value a fixture expression evaluates to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    /// A family of soft sets, canonically ordered; not necessarily a topology.
    Soft(Vec<SoftSet>),
    Crisp(CrispTopology),
    System(CrispSystem),
}

#[derive(Clone, Debug)]
pub enum Expr {
    Item(&'static str),
    Formula1(Box<Expr>),
    Formula2(Box<Expr>),
    UnionSingleSet(Box<Expr>),
    Associated(Box<Expr>),
    ExtractSystem(Box<Expr>),
    /// The crisp topology at a parameter of a system or a soft topology.
    Slice(Box<Expr>, &'static str),
    Generate(Box<Expr>),
    /// Family union of two soft families.
    Union(Box<Expr>, Box<Expr>),
}

impl Expr {
    fn f1(self) -> Expr {
        Expr::Formula1(Box::new(self))
    }
    fn f2(self) -> Expr {
        Expr::Formula2(Box::new(self))
    }
    fn slice(self, e: &'static str) -> Expr {
        Expr::Slice(Box::new(self), e)
    }
    fn extract(self) -> Expr {
        Expr::ExtractSystem(Box::new(self))
    }
    fn associated(self) -> Expr {
        Expr::Associated(Box::new(self))
    }
}

fn item(name: &'static str) -> Expr {
    Expr::Item(name)
}

#[derive(Clone, Debug)]
pub enum Expectation {
    IsTopology(Expr, bool),
    Equal(Expr, Expr),
    Size(Expr, usize),
    Excludes(Expr, SoftSet),
    Compare(Expr, Expr, Comparison),
    Axiom(Expr, AxiomKind, bool),
    /// The evidence for a soft axiom separates some subject with exactly
    /// these two opens (left, right).
    SeparatedBy(Expr, AxiomKind, SoftSet, SoftSet),
    /// The subject is well formed and no pair of soft opens separates it.
    Inseparable(Expr, Subject<SoftSet>),
    InseparableCrisp(Expr, Subject<PointSet>),
}

#[derive(Clone, Debug)]
pub struct Check {
    pub label: &'static str,
    pub expectation: Expectation,
}

#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: &'static str,
    pub context: Context,
    pub items: Vec<(&'static str, Value)>,
    pub checks: Vec<Check>,
    /// Remarks on the data, e.g. deviations from the published listing.
    pub notes: Vec<&'static str>,
}

impl Fixture {
    pub fn item(&self, name: &str) -> Option<&Value> {
        self.items.iter().find(|(n, _)| *n == name).map(|(_, v)| v)
    }

    pub fn soft_item(&self, name: &str) -> Option<&[SoftSet]> {
        match self.item(name)? {
            Value::Soft(family) => Some(family),
            _ => None,
        }
    }

    pub fn system_item(&self, name: &str) -> Option<&CrispSystem> {
        match self.item(name)? {
            Value::System(s) => Some(s),
            _ => None,
        }
    }

    pub fn evaluate(&self, expr: &Expr) -> Result<Value, Error> {
        Ok(match expr {
            Expr::Item(name) => self
                .item(name)
                .cloned()
                .ok_or_else(|| Error::NotFound((*name).to_string()))?,
            Expr::Formula1(inner) => soft_value(&formula1(&self.system(inner)?)?),
            Expr::Formula2(inner) => soft_value(&formula2(&self.crisp(inner)?)),
            Expr::UnionSingleSet(inner) => soft_value(&union_single_set(&self.system(inner)?)?),
            Expr::Associated(inner) => soft_value(&associated(&self.topology(inner)?)?),
            Expr::ExtractSystem(inner) => Value::System(extract_system(&self.topology(inner)?)),
            Expr::Slice(inner, e) => match self.evaluate(inner)? {
                Value::System(s) => Value::Crisp(s.get(e)?.clone()),
                Value::Soft(family) => {
                    let t = as_topology(&self.context, family)?;
                    Value::Crisp(slice_topology(&t, self.context.parameter_index(e)?))
                }
                Value::Crisp(_) => return Err(Error::ContextMismatch),
            },
            Expr::Generate(inner) => soft_value(&generate_soft(&self.context, &self.family(inner)?)?),
            Expr::Union(a, b) => {
                let mut family = self.family(a)?;
                family.extend(self.family(b)?);
                Value::Soft(canonical(family))
            }
        })
    }

    fn family(&self, expr: &Expr) -> Result<Vec<SoftSet>, Error> {
        match self.evaluate(expr)? {
            Value::Soft(f) => Ok(f),
            _ => Err(Error::ContextMismatch),
        }
    }

    fn topology(&self, expr: &Expr) -> Result<SoftTopology, Error> {
        as_topology(&self.context, self.family(expr)?)
    }

    fn system(&self, expr: &Expr) -> Result<CrispSystem, Error> {
        match self.evaluate(expr)? {
            Value::System(s) => Ok(s),
            _ => Err(Error::ContextMismatch),
        }
    }

    fn crisp(&self, expr: &Expr) -> Result<CrispTopology, Error> {
        match self.evaluate(expr)? {
            Value::Crisp(c) => Ok(c),
            _ => Err(Error::ContextMismatch),
        }
    }

    pub fn check(&self, expectation: &Expectation) -> Result<bool, Error> {
        Ok(match expectation {
            Expectation::IsTopology(e, expected) => {
                let family = self.family(e)?;
                crate::topology::is_soft_topology(&self.context, &family).is_ok() == *expected
            }
            Expectation::Equal(a, b) => self.evaluate(a)? == self.evaluate(b)?,
            Expectation::Size(e, n) => match self.evaluate(e)? {
                Value::Soft(f) => f.len() == *n,
                Value::Crisp(c) => c.len() == *n,
                Value::System(s) => s.topologies().len() == *n,
            },
            Expectation::Excludes(e, set) => !self.family(e)?.contains(set),
            Expectation::Compare(a, b, verdict) => compare(&self.topology(a)?, &self.topology(b)?)? == *verdict,
            Expectation::Axiom(e, axiom, expected) => match self.evaluate(e)? {
                Value::Crisp(c) => holds(&c, *axiom) == *expected,
                Value::Soft(f) => holds(&as_topology(&self.context, f)?, *axiom) == *expected,
                Value::System(_) => return Err(Error::ContextMismatch),
            },
            Expectation::SeparatedBy(e, axiom, left, right) => {
                let report = check_with_evidence(&self.topology(e)?, *axiom);
                report.holds
                    && report
                        .evidence
                        .iter()
                        .any(|s| s.left == Some(*left) && s.right == Some(*right))
            }
            Expectation::Inseparable(e, subject) => {
                let t = self.topology(e)?;
                let axiom = base_axiom(subject);
                subject_is_well_formed(&t, axiom, subject) && !separable(&t, axiom, subject)
            }
            Expectation::InseparableCrisp(e, subject) => {
                let t = self.crisp(e)?;
                let axiom = base_axiom(subject);
                subject_is_well_formed(&t, axiom, subject) && !separable(&t, axiom, subject)
            }
        })
    }

    /// Every check with its outcome; errors count as failures.
    pub fn verify(&self) -> Vec<(&'static str, bool)> {
        self.checks
            .iter()
            .map(|c| (c.label, self.check(&c.expectation).unwrap_or(false)))
            .collect()
    }
}

fn base_axiom<S>(subject: &Subject<S>) -> AxiomKind {
    match subject {
        Subject::Points { .. } => AxiomKind::T1,
        Subject::PointAndClosed { .. } => AxiomKind::Regular,
        Subject::ClosedPair { .. } => AxiomKind::Normal,
    }
}

fn soft_value(t: &SoftTopology) -> Value {
    Value::Soft(t.opens().to_vec())
}

fn as_topology(ctx: &Context, family: Vec<SoftSet>) -> Result<SoftTopology, Error> {
    SoftTopology::new(ctx.clone(), family).map_err(|v| Error::NotATopology(crate::topology::describe_violation(&v)))
}

pub const NAMES: [&str; 7] = [
    "example-3.1",
    "example-4.1",
    "example-5.1-corrected",
    "example-5.2",
    "example-5.5",
    "example-5.6",
    "example-5.7",
];

pub fn fixtures() -> Vec<Fixture> {
    vec![
        example_3_1(),
        example_4_1(),
        example_5_1(),
        example_5_2(),
        example_5_5(),
        example_5_6(),
        example_5_7(),
    ]
}

pub fn fixture(name: &str) -> Option<Fixture> {
    fixtures().into_iter().find(|f| f.name == name)
}

/// Builds two-parameter soft sets from label lists; `X` stands for the
/// whole universe.
struct Builder {
    ctx: Context,
}

impl Builder {
    fn new(points: &[&str]) -> Self {
        Builder {
            ctx: Context::new(points.iter().copied(), ["e1", "e2"]).expect("static context"),
        }
    }

    fn points(&self, labels: &[&str]) -> PointSet {
        if labels == ["X"] {
            return self.ctx.whole();
        }
        self.ctx.point_set(labels.iter().copied()).expect("static labels")
    }

    fn soft(&self, e1: &[&str], e2: &[&str]) -> SoftSet {
        SoftSet::from_slices(&[self.points(e1), self.points(e2)])
    }

    /// Family padded with `Φ̃` and `X̃`.
    fn family(&self, members: &[SoftSet]) -> Value {
        let mut all = vec![self.ctx.null(), self.ctx.absolute()];
        all.extend_from_slice(members);
        Value::Soft(canonical(all))
    }

    fn crisp(&self, opens: &[&[&str]]) -> CrispTopology {
        CrispTopology::new(self.ctx.clone(), opens.iter().map(|o| self.points(o))).expect("static crisp topology")
    }

    fn system(&self, e1: &[&[&str]], e2: &[&[&str]]) -> Value {
        Value::System(CrispSystem::new(self.ctx.clone(), vec![self.crisp(e1), self.crisp(e2)]).expect("static system"))
    }
}

fn check(label: &'static str, expectation: Expectation) -> Check {
    Check { label, expectation }
}

const X3: [&str; 3] = ["x1", "x2", "x3"];

fn example_3_1() -> Fixture {
    let b = Builder::new(&X3);
    let f1 = b.soft(&["x1"], &[]);
    let f2 = b.soft(&["x1", "x2"], &["X"]);
    let f3 = b.soft(&[], &["x3"]);
    let f4 = b.soft(&["x1"], &["x3"]);
    let g = |s: &[&str]| b.soft(s, s);
    let h = [
        b.soft(&[], &["X"]),
        b.soft(&[], &["x3"]),
        b.soft(&["X"], &[]),
        b.soft(&["X"], &["x3"]),
        b.soft(&["x1"], &[]),
        b.soft(&["x1"], &["X"]),
        b.soft(&["x1"], &["x3"]),
        b.soft(&["x1", "x2"], &[]),
        b.soft(&["x1", "x2"], &["X"]),
        b.soft(&["x1", "x2"], &["x3"]),
    ];
    Fixture {
        name: "example-3.1",
        items: vec![
            ("sigma", b.family(&[f1, f2, f3, f4])),
            ("subbasis", Value::Soft(canonical([f1, f2, f3]))),
            (
                "system",
                b.system(&[&[], &["x1"], &["x1", "x2"], &["X"]], &[&[], &["x3"], &["X"]]),
            ),
            ("single-e1", b.family(&[g(&["x1"]), g(&["x1", "x2"])])),
            ("single-e2", b.family(&[g(&["x3"])])),
            (
                "union-single-set",
                b.family(&[g(&["x1"]), g(&["x3"]), g(&["x1", "x2"]), g(&["x1", "x3"])]),
            ),
            ("product", b.family(&h)),
        ],
        checks: vec![
            check("sigma is a soft topology", Expectation::IsTopology(item("sigma"), true)),
            check(
                "{F1,F2,F3} generates sigma",
                Expectation::Equal(Expr::Generate(Box::new(item("subbasis"))), item("sigma")),
            ),
            check(
                "crisp topologies of sigma",
                Expectation::Equal(item("sigma").extract(), item("system")),
            ),
            check(
                "single-set topology of Sigma_e1",
                Expectation::Equal(item("system").slice("e1").f2(), item("single-e1")),
            ),
            check(
                "single-set topology of Sigma_e2",
                Expectation::Equal(item("system").slice("e2").f2(), item("single-e2")),
            ),
            check(
                "union of single-set topologies generates {Phi,G1..G4,X}",
                Expectation::Equal(
                    Expr::Generate(Box::new(Expr::Union(
                        Box::new(item("single-e1")),
                        Box::new(item("single-e2")),
                    ))),
                    item("union-single-set"),
                ),
            ),
            check(
                "union_single_set(sigma) = {Phi,G1..G4,X}",
                Expectation::Equal(Expr::UnionSingleSet(Box::new(item("system"))), item("union-single-set")),
            ),
            check(
                "Formula 1 gives {Phi,H1..H10,X}",
                Expectation::Equal(item("system").f1(), item("product")),
            ),
            check("Formula 1 has 12 members", Expectation::Size(item("system").f1(), 12)),
            check(
                "associated topology of sigma is T(sigma)",
                Expectation::Equal(item("sigma").associated(), item("product")),
            ),
            check(
                "sigma strictly coarser than T(sigma)",
                Expectation::Compare(item("sigma"), item("product"), Comparison::StrictlyCoarser),
            ),
            check(
                "sigma incomparable with union-generated",
                Expectation::Compare(item("sigma"), item("union-single-set"), Comparison::Incomparable),
            ),
            check(
                "union-generated incomparable with T(sigma)",
                Expectation::Compare(item("union-single-set"), item("product"), Comparison::Incomparable),
            ),
        ],
        notes: vec![],
        context: b.ctx,
    }
}

fn example_4_1() -> Fixture {
    let b = Builder::new(&X3);
    let sigma = [
        b.soft(&["x1"], &[]),
        b.soft(&["x1", "x2"], &["X"]),
        b.soft(&[], &["x3"]),
        b.soft(&["x1"], &["x3"]),
    ];
    let prime = [
        b.soft(&["x1"], &[]),
        b.soft(&["x1", "x2"], &["X"]),
        b.soft(&["X"], &["x3"]),
        b.soft(&["x1", "x2"], &["x3"]),
    ];
    let hat = || Expr::Union(Box::new(item("sigma")), Box::new(item("sigma-prime")));
    let base = example_3_1();
    Fixture {
        name: "example-4.1",
        items: vec![
            ("sigma", b.family(&sigma)),
            ("sigma-prime", b.family(&prime)),
            ("system", base.item("system").cloned().expect("shared system")),
            ("product", base.item("product").cloned().expect("shared product")),
        ],
        checks: vec![
            check("sigma is a soft topology", Expectation::IsTopology(item("sigma"), true)),
            check(
                "sigma' is a soft topology",
                Expectation::IsTopology(item("sigma-prime"), true),
            ),
            check(
                "sigma-hat = sigma u sigma' is a soft topology",
                Expectation::IsTopology(hat(), true),
            ),
            check(
                "sigma and sigma' are incomparable",
                Expectation::Compare(item("sigma"), item("sigma-prime"), Comparison::Incomparable),
            ),
            check(
                "sigma-hat strictly finer than sigma",
                Expectation::Compare(hat(), item("sigma"), Comparison::StrictlyFiner),
            ),
            check(
                "sigma-hat strictly finer than sigma'",
                Expectation::Compare(hat(), item("sigma-prime"), Comparison::StrictlyFiner),
            ),
            check(
                "sigma yields the shared system",
                Expectation::Equal(item("sigma").extract(), item("system")),
            ),
            check(
                "sigma' yields the shared system",
                Expectation::Equal(item("sigma-prime").extract(), item("system")),
            ),
            check(
                "sigma-hat yields the shared system",
                Expectation::Equal(hat().extract(), item("system")),
            ),
            check(
                "associated(sigma) = T(sigma)",
                Expectation::Equal(item("sigma").associated(), item("product")),
            ),
            check(
                "associated(sigma') = T(sigma)",
                Expectation::Equal(item("sigma-prime").associated(), item("product")),
            ),
            check(
                "associated(sigma-hat) = T(sigma)",
                Expectation::Equal(hat().associated(), item("product")),
            ),
        ],
        notes: vec![],
        context: b.ctx,
    }
}

fn example_5_1() -> Fixture {
    let b = Builder::new(&X3);
    let listed = [
        b.soft(&["X"], &[]),
        b.soft(&["x1"], &[]),
        b.soft(&["x2", "x3"], &[]),
        b.soft(&[], &["X"]),
        b.soft(&["x1"], &["X"]),
        b.soft(&["x2", "x3"], &["X"]),
        b.soft(&[], &["x1", "x2"]),
        b.soft(&["X"], &["x1", "x2"]),
        b.soft(&["x1"], &["x1", "x2"]),
        b.soft(&["x1"], &["x2"]),
        b.soft(&["x2", "x3"], &["x1", "x2"]),
        b.soft(&[], &["x3"]),
        b.soft(&["X"], &["x3"]),
        b.soft(&["x1"], &["x3"]),
        b.soft(&["x2", "x3"], &["x3"]),
    ];
    let h10 = listed[9];
    let corrected: Vec<SoftSet> = listed.iter().copied().filter(|s| *s != h10).collect();
    Fixture {
        name: "example-5.1-corrected",
        items: vec![
            (
                "system",
                b.system(
                    &[&[], &["x1"], &["x2", "x3"], &["X"]],
                    &[&[], &["x3"], &["x1", "x2"], &["X"]],
                ),
            ),
            ("listed", b.family(&listed)),
            ("product", b.family(&corrected)),
        ],
        checks: vec![
            check(
                "published listing has 17 members",
                Expectation::Size(item("listed"), 17),
            ),
            check(
                "published listing is not a soft topology",
                Expectation::IsTopology(item("listed"), false),
            ),
            check("Formula 1 has 16 members", Expectation::Size(item("system").f1(), 16)),
            check(
                "Formula 1 equals the corrected listing",
                Expectation::Equal(item("system").f1(), item("product")),
            ),
            check(
                "H10 = {(e1,{x1}),(e2,{x2})} is not in T(sigma)",
                Expectation::Excludes(item("system").f1(), h10),
            ),
            check(
                "T(sigma) is soft T0",
                Expectation::Axiom(item("system").f1(), AxiomKind::T0, true),
            ),
            check(
                "Sigma_e1 is not T0",
                Expectation::Axiom(item("system").slice("e1"), AxiomKind::T0, false),
            ),
            check(
                "Sigma_e2 is not T0",
                Expectation::Axiom(item("system").slice("e2"), AxiomKind::T0, false),
            ),
        ],
        notes: vec![
            "the published listing has 17 soft sets but the product of the two 4-element topologies has 16",
            "the listed H10 = {(e1,{x1}),(e2,{x2})} cannot be open: {x2} is not open at e2; it is dropped here",
        ],
        context: b.ctx,
    }
}

fn example_5_2() -> Fixture {
    let b = Builder::new(&["x1", "x2"]);
    let h = [
        b.soft(&[], &["X"]),
        b.soft(&["X"], &[]),
        b.soft(&[], &["x2"]),
        b.soft(&["X"], &["x2"]),
        b.soft(&["x1"], &[]),
        b.soft(&["x1"], &["X"]),
        b.soft(&["x1"], &["x2"]),
    ];
    Fixture {
        name: "example-5.2",
        items: vec![
            ("system", b.system(&[&[], &["x1"], &["X"]], &[&[], &["x2"], &["X"]])),
            ("product", b.family(&h)),
        ],
        checks: vec![
            check(
                "Formula 1 gives {Phi,H1..H7,X}",
                Expectation::Equal(item("system").f1(), item("product")),
            ),
            check("Formula 1 has 9 members", Expectation::Size(item("system").f1(), 9)),
            check(
                "T(sigma) is soft T1",
                Expectation::Axiom(item("product"), AxiomKind::T1, true),
            ),
            check(
                "H6 and H4 separate x1 and x2",
                Expectation::SeparatedBy(item("product"), AxiomKind::T1, h[5], h[3]),
            ),
            check(
                "Sigma_e1 is not T1",
                Expectation::Axiom(item("system").slice("e1"), AxiomKind::T1, false),
            ),
            check(
                "Sigma_e2 is not T1",
                Expectation::Axiom(item("system").slice("e2"), AxiomKind::T1, false),
            ),
        ],
        notes: vec![],
        context: b.ctx,
    }
}

fn example_5_5() -> Fixture {
    let b = Builder::new(&X3);
    let h = [
        b.soft(&[], &["x3"]),
        b.soft(&["x3"], &[]),
        b.soft(&["x2", "x3"], &[]),
        b.soft(&["X"], &[]),
        b.soft(&["x1", "x3"], &[]),
        b.soft(&["x3"], &["x3"]),
        b.soft(&["x2", "x3"], &["x3"]),
        b.soft(&["X"], &["x3"]),
        b.soft(&["x1", "x3"], &["x3"]),
    ];
    Fixture {
        name: "example-5.5",
        items: vec![("sigma", b.family(&h))],
        checks: vec![
            check("sigma has 11 members", Expectation::Size(item("sigma"), 11)),
            check("sigma is a soft topology", Expectation::IsTopology(item("sigma"), true)),
            check(
                "sigma is soft normal",
                Expectation::Axiom(item("sigma"), AxiomKind::Normal, true),
            ),
            check(
                "Sigma_e1 is not normal",
                Expectation::Axiom(item("sigma").slice("e1"), AxiomKind::Normal, false),
            ),
        ],
        notes: vec![],
        context: b.ctx,
    }
}

fn example_5_6() -> Fixture {
    let b = Builder::new(&["x"]);
    let f1 = b.soft(&[], &["X"]);
    let f2 = b.soft(&["X"], &[]);
    Fixture {
        name: "example-5.6",
        items: vec![
            ("system", b.system(&[&[], &["X"]], &[&[], &["X"]])),
            ("product", b.family(&[f1, f2])),
        ],
        checks: vec![
            check(
                "Formula 1 gives {Phi,F1,F2,X}",
                Expectation::Equal(item("system").f1(), item("product")),
            ),
            check(
                "T(sigma) is not soft regular",
                Expectation::Axiom(item("product"), AxiomKind::Regular, false),
            ),
            check(
                "Sigma_e1 is regular",
                Expectation::Axiom(item("system").slice("e1"), AxiomKind::Regular, true),
            ),
            check(
                "Sigma_e2 is regular",
                Expectation::Axiom(item("system").slice("e2"), AxiomKind::Regular, true),
            ),
            check(
                "x and F1^c cannot be separated",
                Expectation::Inseparable(
                    item("product"),
                    Subject::PointAndClosed {
                        x: 0,
                        closed: f1.complement(),
                    },
                ),
            ),
            check(
                "x and F2^c cannot be separated",
                Expectation::Inseparable(
                    item("product"),
                    Subject::PointAndClosed {
                        x: 0,
                        closed: f2.complement(),
                    },
                ),
            ),
        ],
        notes: vec![],
        context: b.ctx,
    }
}

fn example_5_7() -> Fixture {
    let b = Builder::new(&X3);
    let f = [
        b.soft(&[], &["x1"]),
        b.soft(&[], &["x1", "x2"]),
        b.soft(&[], &["x1", "x3"]),
        b.soft(&[], &["X"]),
        b.soft(&["X"], &[]),
        b.soft(&["X"], &["x1"]),
        b.soft(&["X"], &["x1", "x2"]),
        b.soft(&["X"], &["x1", "x3"]),
    ];
    let first = b.soft(&[], &["x3"]);
    let second = b.soft(&["X"], &["x2"]);
    Fixture {
        name: "example-5.7",
        items: vec![
            (
                "system",
                b.system(&[&[], &["X"]], &[&[], &["x1"], &["x1", "x2"], &["x1", "x3"], &["X"]]),
            ),
            ("product", b.family(&f)),
        ],
        checks: vec![
            check(
                "Formula 1 gives {Phi,F1..F8,X}",
                Expectation::Equal(item("system").f1(), item("product")),
            ),
            check("Formula 1 has 10 members", Expectation::Size(item("system").f1(), 10)),
            check(
                "T(sigma) is not soft normal",
                Expectation::Axiom(item("product"), AxiomKind::Normal, false),
            ),
            check(
                "{(e1,∅),(e2,{x3})} and {(e1,X),(e2,{x2})} cannot be separated",
                Expectation::Inseparable(item("product"), Subject::ClosedPair { first, second }),
            ),
            check(
                "Sigma_e1 is normal",
                Expectation::Axiom(item("system").slice("e1"), AxiomKind::Normal, true),
            ),
            check(
                "Sigma_e2 is not normal",
                Expectation::Axiom(item("system").slice("e2"), AxiomKind::Normal, false),
            ),
            check(
                "closed {x2} and {x3} cannot be separated in Sigma_e2",
                Expectation::InseparableCrisp(
                    item("system").slice("e2"),
                    Subject::ClosedPair {
                        first: b.points(&["x2"]),
                        second: b.points(&["x3"]),
                    },
                ),
            ),
        ],
        notes: vec![],
        context: b.ctx,
    }
}
