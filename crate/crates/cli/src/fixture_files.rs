//! Fixtures as documents.

use softtop_core::lab::fixtures::{Fixture, Value};
use softtop_core::{is_soft_topology, Context};

use crate::document::{Document, Payload};

fn payload(ctx: &Context, value: &Value) -> Payload {
    match value {
        Value::Soft(family) if is_soft_topology(ctx, family).is_ok() => Payload::Opens(family.clone()),
        Value::Soft(family) => Payload::SoftSets(family.clone()),
        Value::Crisp(t) => Payload::Topology(t.opens().to_vec()),
        Value::System(s) => Payload::Topologies(s.topologies().iter().map(|t| t.opens().to_vec()).collect()),
    }
}

/// The fixture's first item becomes the payload; every item, the first
/// included, is also listed under `items`.
pub fn fixture_document(fixture: &Fixture) -> Document {
    let items: Vec<(String, Payload)> = fixture
        .items
        .iter()
        .map(|(name, value)| (name.to_string(), payload(&fixture.context, value)))
        .collect();
    let mut doc = Document::new(fixture.context.clone(), items[0].1.clone());
    doc.name = Some(fixture.name.to_string());
    doc.items = items;
    doc.notes = fixture.notes.iter().map(|n| n.to_string()).collect();
    doc
}
