//! Text and JSON renderings of sets, witnesses and violations.

use serde_json::{json, Map, Value};
use softtop_core::separation::{Failure, Separation, Subject};
use softtop_core::{AxiomKind, Context, PointSet, SoftSet, Violation};

pub trait Render: Copy {
    fn text(self, ctx: &Context) -> String;
    fn json(self, ctx: &Context) -> Value;
}

impl Render for PointSet {
    fn text(self, ctx: &Context) -> String {
        ctx.display_set(self).to_string()
    }

    fn json(self, ctx: &Context) -> Value {
        Value::Array(self.iter().map(|x| Value::String(ctx.universe()[x].clone())).collect())
    }
}

impl Render for SoftSet {
    fn text(self, ctx: &Context) -> String {
        ctx.display_soft(self).to_string()
    }

    fn json(self, ctx: &Context) -> Value {
        let mut map = Map::new();
        for (j, e) in ctx.parameters().iter().enumerate() {
            map.insert(e.clone(), self.slice(j).json(ctx));
        }
        Value::Object(map)
    }
}

fn point(ctx: &Context, x: usize) -> &str {
    &ctx.universe()[x]
}

pub fn subject_text<S: Render>(ctx: &Context, subject: &Subject<S>) -> String {
    match *subject {
        Subject::Points { x, y } => format!("points {} and {}", point(ctx, x), point(ctx, y)),
        Subject::PointAndClosed { x, closed } => {
            format!("point {} and closed set {}", point(ctx, x), closed.text(ctx))
        }
        Subject::ClosedPair { first, second } => {
            format!("closed sets {} and {}", first.text(ctx), second.text(ctx))
        }
    }
}

pub fn subject_json<S: Render>(ctx: &Context, subject: &Subject<S>) -> Value {
    match *subject {
        Subject::Points { x, y } => json!({ "points": [point(ctx, x), point(ctx, y)] }),
        Subject::PointAndClosed { x, closed } => {
            json!({ "point": point(ctx, x), "closed": closed.json(ctx) })
        }
        Subject::ClosedPair { first, second } => {
            json!({ "closed_pair": [first.json(ctx), second.json(ctx)] })
        }
    }
}

pub fn failure_text<S: Render>(ctx: &Context, failure: &Failure<S>) -> String {
    let reason = match (failure.axiom, failure.subject) {
        (AxiomKind::T0, Subject::Points { x, y }) => {
            format!(
                "no open contains exactly one of {} and {}",
                point(ctx, x),
                point(ctx, y)
            )
        }
        (AxiomKind::T1, Subject::Points { x, y }) => {
            format!(
                "every open containing {} also contains {}",
                point(ctx, x),
                point(ctx, y)
            )
        }
        _ => format!("{} cannot be separated", subject_text(ctx, &failure.subject)),
    };
    format!("{reason} ({} fails)", failure.axiom.name())
}

pub fn failure_json<S: Render>(ctx: &Context, failure: &Failure<S>) -> Value {
    json!({ "axiom": failure.axiom.name(), "inseparable": subject_json(ctx, &failure.subject) })
}

fn side<S: Render>(ctx: &Context, s: Option<S>) -> String {
    s.map_or_else(|| "-".to_string(), |s| s.text(ctx))
}

pub fn separation_text<S: Render>(ctx: &Context, sep: &Separation<S>) -> String {
    format!(
        "{} separated by {} and {}",
        subject_text(ctx, &sep.subject),
        side(ctx, sep.left),
        side(ctx, sep.right)
    )
}

pub fn separation_json<S: Render>(ctx: &Context, sep: &Separation<S>) -> Value {
    json!({
        "subject": subject_json(ctx, &sep.subject),
        "left": sep.left.map(|s| s.json(ctx)),
        "right": sep.right.map(|s| s.json(ctx)),
    })
}

pub fn violation_text<S: Render>(ctx: &Context, v: &Violation<S>) -> String {
    match *v {
        Violation::ForeignMember(s) => format!("{} does not fit the context", s.text(ctx)),
        Violation::MissingBottom => "the empty set is missing".to_string(),
        Violation::MissingTop => "the whole set is missing".to_string(),
        Violation::IntersectionMissing(a, b) => {
            format!("intersection of {} and {} is missing", a.text(ctx), b.text(ctx))
        }
        Violation::UnionMissing(a, b) => {
            format!("union of {} and {} is missing", a.text(ctx), b.text(ctx))
        }
    }
}

pub fn violation_json<S: Render>(ctx: &Context, v: &Violation<S>) -> Value {
    match *v {
        Violation::ForeignMember(s) => json!({ "foreign_member": s.json(ctx) }),
        Violation::MissingBottom => json!({ "missing": "bottom" }),
        Violation::MissingTop => json!({ "missing": "top" }),
        Violation::IntersectionMissing(a, b) => {
            json!({ "intersection_missing": [a.json(ctx), b.json(ctx)] })
        }
        Violation::UnionMissing(a, b) => json!({ "union_missing": [a.json(ctx), b.json(ctx)] }),
    }
}
