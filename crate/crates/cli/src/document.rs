//! The JSON file format.
//!
//! ```json
//! {
//!   "schema_version": "1",
//!   "context": {"universe": ["x1", "x2"], "parameters": ["e1", "e2"]},
//!   "opens": [{"e1": [], "e2": []}, {"e1": ["x1", "x2"], "e2": ["x1", "x2"]}]
//! }
//! ```
//!
//! Exactly one payload key is allowed: `opens` (a soft topology), `topology`
//! (a crisp topology, a list of point lists), `topologies` (a crisp system,
//! one crisp topology per parameter) or `soft_sets` (an arbitrary family).
//! Fixture files may add `name`, `notes` and an `items` map of further named
//! payloads, addressed on the command line as `file.json#item`.

use std::fmt;
use std::fs;
use std::marker::PhantomData;
use std::path::Path;

use serde::de::{self, Deserializer, MapAccess, Visitor};
use serde::Deserialize;
use serde_json::error::Category;
use softtop_core::set::make_soft_set;
use softtop_core::{Context, PointSet, SoftSet};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, thiserror::Error)]
pub enum DocumentError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("schema error: {0}")]
    Schema(String),
    #[error("validation error: {0}")]
    Validation(#[from] softtop_core::Error),
    #[error("no item `{0}` in document")]
    NoSuchItem(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Payload {
    /// Intended as a soft topology; checked when used.
    Opens(Vec<SoftSet>),
    /// Intended as a crisp topology on the universe.
    Topology(Vec<PointSet>),
    /// One crisp family per parameter, in parameter order.
    Topologies(Vec<Vec<PointSet>>),
    SoftSets(Vec<SoftSet>),
}

impl Payload {
    pub fn kind(&self) -> &'static str {
        match self {
            Payload::Opens(_) => "soft topology",
            Payload::Topology(_) => "crisp topology",
            Payload::Topologies(_) => "crisp system",
            Payload::SoftSets(_) => "soft-set list",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub schema_version: String,
    pub name: Option<String>,
    pub context: Context,
    pub payload: Payload,
    pub items: Vec<(String, Payload)>,
    pub notes: Vec<String>,
}

impl Document {
    pub fn new(context: Context, payload: Payload) -> Self {
        Document {
            schema_version: SCHEMA_VERSION.to_string(),
            name: None,
            context,
            payload,
            items: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        let raw: RawDocument = serde_json::from_str(text).map_err(classify)?;
        raw.into_document()
    }

    /// Reads `path`, or `path#item` to select a named item as the payload.
    pub fn load(target: &str) -> Result<Self, DocumentError> {
        let (path, item) = match target.rsplit_once('#') {
            Some((p, i)) if !i.is_empty() => (p, Some(i)),
            _ => (target, None),
        };
        let text = fs::read_to_string(Path::new(path)).map_err(|source| DocumentError::Io {
            path: path.to_string(),
            source,
        })?;
        let doc = Document::parse(&text)?;
        match item {
            None => Ok(doc),
            Some(name) => doc.select(name),
        }
    }

    /// A document whose payload is the named item.
    pub fn select(&self, name: &str) -> Result<Self, DocumentError> {
        let payload = self
            .items
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, p)| p.clone())
            .ok_or_else(|| DocumentError::NoSuchItem(name.to_string()))?;
        Ok(Document::new(self.context.clone(), payload))
    }

    pub fn to_json(&self) -> String {
        let mut out = String::from("{\n");
        let mut fields = vec![format!("  \"schema_version\": {}", quote(&self.schema_version))];
        if let Some(name) = &self.name {
            fields.push(format!("  \"name\": {}", quote(name)));
        }
        fields.push(format!(
            "  \"context\": {{\"universe\": {}, \"parameters\": {}}}",
            labels(self.context.universe()),
            labels(self.context.parameters())
        ));
        fields.push(format!("  {}", payload_json(&self.context, &self.payload, "  ")));
        if !self.items.is_empty() {
            let items: Vec<String> = self
                .items
                .iter()
                .map(|(name, p)| {
                    format!(
                        "    {}: {{\n      {}\n    }}",
                        quote(name),
                        payload_json(&self.context, p, "      ")
                    )
                })
                .collect();
            fields.push(format!("  \"items\": {{\n{}\n  }}", items.join(",\n")));
        }
        if !self.notes.is_empty() {
            let notes: Vec<String> = self.notes.iter().map(|n| format!("    {}", quote(n))).collect();
            fields.push(format!("  \"notes\": [\n{}\n  ]", notes.join(",\n")));
        }
        out.push_str(&fields.join(",\n"));
        out.push_str("\n}\n");
        out
    }
}

fn quote(s: &str) -> String {
    serde_json::to_string(s).expect("strings serialize")
}

fn labels(list: &[String]) -> String {
    let parts: Vec<String> = list.iter().map(|l| quote(l)).collect();
    format!("[{}]", parts.join(", "))
}

pub fn point_set_json(ctx: &Context, set: PointSet) -> String {
    let names: Vec<String> = set.iter().map(|x| ctx.universe()[x].clone()).collect();
    labels(&names)
}

pub fn soft_set_json(ctx: &Context, set: SoftSet) -> String {
    let parts: Vec<String> = ctx
        .parameters()
        .iter()
        .enumerate()
        .map(|(j, e)| format!("{}: {}", quote(e), point_set_json(ctx, set.slice(j))))
        .collect();
    format!("{{{}}}", parts.join(", "))
}

fn block(lines: Vec<String>, indent: &str) -> String {
    if lines.is_empty() {
        return "[]".to_string();
    }
    let inner: Vec<String> = lines.iter().map(|l| format!("{indent}  {l}")).collect();
    format!("[\n{}\n{indent}]", inner.join(",\n"))
}

fn payload_json(ctx: &Context, payload: &Payload, indent: &str) -> String {
    match payload {
        Payload::Opens(sets) => format!(
            "\"opens\": {}",
            block(sets.iter().map(|&s| soft_set_json(ctx, s)).collect(), indent)
        ),
        Payload::SoftSets(sets) => format!(
            "\"soft_sets\": {}",
            block(sets.iter().map(|&s| soft_set_json(ctx, s)).collect(), indent)
        ),
        Payload::Topology(sets) => format!(
            "\"topology\": {}",
            block(sets.iter().map(|&s| point_set_json(ctx, s)).collect(), indent)
        ),
        Payload::Topologies(families) => {
            let rows: Vec<String> = ctx
                .parameters()
                .iter()
                .zip(families)
                .map(|(e, family)| {
                    let sets: Vec<String> = family.iter().map(|&s| point_set_json(ctx, s)).collect();
                    format!("{indent}  {}: [{}]", quote(e), sets.join(", "))
                })
                .collect();
            format!("\"topologies\": {{\n{}\n{indent}}}", rows.join(",\n"))
        }
    }
}

fn classify(err: serde_json::Error) -> DocumentError {
    match err.classify() {
        Category::Syntax | Category::Eof | Category::Io => DocumentError::Parse {
            line: err.line(),
            column: err.column(),
            message: strip_position(&err),
        },
        Category::Data => DocumentError::Schema(format!(
            "{} (line {}, column {})",
            strip_position(&err),
            err.line(),
            err.column()
        )),
    }
}

fn strip_position(err: &serde_json::Error) -> String {
    let text = err.to_string();
    match text.rfind(" at line ") {
        Some(i) => text[..i].to_string(),
        None => text,
    }
}

/// A JSON object kept in file order; repeated keys are rejected.
#[derive(Debug)]
struct Ordered<V>(Vec<(String, V)>);

impl<'de, V: Deserialize<'de>> Deserialize<'de> for Ordered<V> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct OrderedVisitor<V>(PhantomData<V>);

        impl<'de, V: Deserialize<'de>> Visitor<'de> for OrderedVisitor<V> {
            type Value = Ordered<V>;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an object")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> Result<Self::Value, A::Error> {
                let mut entries: Vec<(String, V)> = Vec::new();
                while let Some(key) = map.next_key::<String>()? {
                    if entries.iter().any(|(k, _)| *k == key) {
                        return Err(de::Error::custom(format!("duplicate key `{key}`")));
                    }
                    let value = map.next_value()?;
                    entries.push((key, value));
                }
                Ok(Ordered(entries))
            }
        }

        deserializer.deserialize_map(OrderedVisitor(PhantomData))
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawContext {
    universe: Vec<String>,
    parameters: Vec<String>,
}

type RawSoftSet = Ordered<Vec<String>>;

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct RawPayload {
    opens: Option<Vec<RawSoftSet>>,
    topology: Option<Vec<Vec<String>>>,
    topologies: Option<Ordered<Vec<Vec<String>>>>,
    soft_sets: Option<Vec<RawSoftSet>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    schema_version: Option<String>,
    name: Option<String>,
    context: RawContext,
    opens: Option<Vec<RawSoftSet>>,
    topology: Option<Vec<Vec<String>>>,
    topologies: Option<Ordered<Vec<Vec<String>>>>,
    soft_sets: Option<Vec<RawSoftSet>>,
    items: Option<Ordered<RawPayload>>,
    notes: Option<Vec<String>>,
}

impl RawDocument {
    fn into_document(self) -> Result<Document, DocumentError> {
        let schema_version = self.schema_version.unwrap_or_else(|| SCHEMA_VERSION.to_string());
        if schema_version != SCHEMA_VERSION {
            return Err(DocumentError::Schema(format!(
                "schema_version: unsupported version `{schema_version}`"
            )));
        }
        let context = build_context(self.context)?;
        let payload = RawPayload {
            opens: self.opens,
            topology: self.topology,
            topologies: self.topologies,
            soft_sets: self.soft_sets,
        }
        .build(&context, "document")?;
        let mut items = Vec::new();
        for (name, raw) in self.items.map(|o| o.0).unwrap_or_default() {
            let payload = raw.build(&context, &format!("items.{name}"))?;
            items.push((name, payload));
        }
        Ok(Document {
            schema_version,
            name: self.name,
            context,
            payload,
            items,
            notes: self.notes.unwrap_or_default(),
        })
    }
}

fn build_context(raw: RawContext) -> Result<Context, DocumentError> {
    use softtop_core::Error as E;
    Context::new(raw.universe, raw.parameters).map_err(|e| {
        let field = match e {
            E::EmptyUniverse | E::DuplicatePoint(_) => "context.universe",
            E::EmptyParameters | E::DuplicateParameter(_) => "context.parameters",
            _ => "context",
        };
        DocumentError::Schema(format!("{field}: {e}"))
    })
}

impl RawPayload {
    fn build(self, ctx: &Context, at: &str) -> Result<Payload, DocumentError> {
        let given = [
            self.opens.is_some(),
            self.topology.is_some(),
            self.topologies.is_some(),
            self.soft_sets.is_some(),
        ];
        if given.iter().filter(|&&g| g).count() != 1 {
            return Err(DocumentError::Schema(format!(
                "{at}: expected exactly one of `opens`, `topology`, `topologies`, `soft_sets`"
            )));
        }
        if let Some(sets) = self.opens {
            return Ok(Payload::Opens(soft_sets(ctx, sets)?));
        }
        if let Some(sets) = self.soft_sets {
            return Ok(Payload::SoftSets(soft_sets(ctx, sets)?));
        }
        if let Some(family) = self.topology {
            return Ok(Payload::Topology(point_sets(ctx, &family)?));
        }
        let Ordered(entries) = self.topologies.expect("one payload present");
        let mut families: Vec<Option<Vec<PointSet>>> = vec![None; ctx.params()];
        for (e, family) in entries {
            let j = ctx.parameter_index(&e)?;
            families[j] = Some(point_sets(ctx, &family)?);
        }
        let families = families
            .into_iter()
            .enumerate()
            .map(|(j, f)| f.ok_or_else(|| softtop_core::Error::MissingParameter(ctx.parameters()[j].clone())))
            .collect::<Result<_, _>>()?;
        Ok(Payload::Topologies(families))
    }
}

fn soft_sets(ctx: &Context, raw: Vec<RawSoftSet>) -> Result<Vec<SoftSet>, DocumentError> {
    raw.into_iter()
        .map(|Ordered(pairs)| {
            make_soft_set(
                ctx,
                pairs
                    .iter()
                    .map(|(e, points)| (e.as_str(), points.iter().map(String::as_str))),
            )
            .map_err(DocumentError::from)
        })
        .collect()
}

fn point_sets(ctx: &Context, raw: &[Vec<String>]) -> Result<Vec<PointSet>, DocumentError> {
    raw.iter()
        .map(|points| {
            ctx.point_set(points.iter().map(String::as_str))
                .map_err(DocumentError::from)
        })
        .collect()
}
