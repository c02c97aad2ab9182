//! Canonical JSON interchange format.
//!
//! A document file is an envelope with a format version, the notation and a
//! flat list of element records `{gid, kind, owner_gid, fields…}`. The
//! canonical form is byte-deterministic: UTF-8, LF, two-space indentation,
//! object keys sorted lexicographically, elements sorted by gid, defaulted
//! fields omitted. Saving any document yields canonical bytes; loading
//! accepts any field order and re-saving canonicalizes it.
//!
//! Loading resolves every cross-reference and rejects unresolved gids,
//! with one exception: `expression_ref` links inside strings are soft and
//! left to validation (rule SACM-W9).
//!
//! The file extension convention is `.acm.json`.

use std::collections::{BTreeSet, HashMap, HashSet};

use serde_json::{json, Map, Value};

use crate::document::ModelDocument;
use crate::element::{ChoiceGroup, ClaimData, ConnectorData, Element, Payload, RelationshipData};
use crate::error::{Error, Result};
use crate::gid::Gid;
use crate::kind::{Declaration, ElementKind, Family, Notation};
use crate::strings::{
    ImplementationConstraint, LangString, MultiLangString, Note, TaggedValue,
};

pub const FORMAT_VERSION: &str = "1.0";

/// Serializes a document to canonical bytes.
pub fn save(doc: &ModelDocument) -> Vec<u8> {
    let mut elements: Vec<&Element> = doc.iter().collect();
    elements.sort_by(|a, b| a.gid.cmp(&b.gid));
    let envelope = json!({
        "format_version": FORMAT_VERSION,
        "notation": doc.notation().as_str(),
        "elements": elements.iter().map(|e| element_to_value(e)).collect::<Vec<_>>(),
    });
    // serde_json's default map is ordered, so keys come out sorted.
    let mut bytes = serde_json::to_vec_pretty(&envelope).expect("document serializes");
    bytes.push(b'\n');
    bytes
}

/// Parses a document from envelope bytes.
pub fn load(bytes: &[u8]) -> Result<ModelDocument> {
    let value: Value = serde_json::from_slice(bytes).map_err(|e| Error::ParseError {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let envelope = value
        .as_object()
        .ok_or_else(|| schema("$", "envelope must be an object"))?;
    for key in envelope.keys() {
        if !matches!(key.as_str(), "format_version" | "notation" | "elements") {
            return Err(schema(&format!("$.{key}"), "unknown envelope key"));
        }
    }
    let version = envelope
        .get("format_version")
        .and_then(Value::as_str)
        .ok_or_else(|| schema("$.format_version", "missing format version"))?;
    if version != FORMAT_VERSION {
        return Err(schema(
            "$.format_version",
            &format!("unsupported format version '{version}', expected '{FORMAT_VERSION}'"),
        ));
    }
    let notation: Notation = envelope
        .get("notation")
        .and_then(Value::as_str)
        .ok_or_else(|| schema("$.notation", "missing notation"))?
        .parse()
        .map_err(|e| schema("$.notation", &format!("{e}")))?;
    let elements = envelope
        .get("elements")
        .and_then(Value::as_array)
        .ok_or_else(|| schema("$.elements", "missing element list"))?;

    let mut doc = ModelDocument::new(notation);
    for (index, value) in elements.iter().enumerate() {
        let path = format!("$.elements[{index}]");
        let element = element_from_value(&path, value, notation)?;
        doc.insert_unchecked(element)
            .map_err(|e| schema(&path, &format!("{e}")))?;
    }
    check_structure(&doc)?;
    Ok(doc)
}

/// Reads and parses a document file.
pub fn load_file(path: &std::path::Path) -> Result<ModelDocument> {
    let bytes = std::fs::read(path)?;
    load(&bytes)
}

/// Writes a document file in canonical form.
pub fn save_file(doc: &ModelDocument, path: &std::path::Path) -> Result<()> {
    std::fs::write(path, save(doc))?;
    Ok(())
}

/// Ownership must form a forest rooted in packages; every hard
/// cross-reference must resolve.
fn check_structure(doc: &ModelDocument) -> Result<()> {
    let mut dangling: BTreeSet<Gid> = BTreeSet::new();
    for element in doc.iter() {
        match &element.owner {
            Some(owner) => {
                if !doc.contains(owner) {
                    dangling.insert(owner.clone());
                }
            }
            None => {
                if !element.kind.is_package_like() {
                    return Err(schema(
                        &format!("$.elements ('{}')", element.gid),
                        &format!("top-level element must be a package, found {}", element.kind),
                    ));
                }
            }
        }
        for (_, gid) in element.references() {
            if !doc.contains(gid) {
                dangling.insert(gid.clone());
            }
        }
    }
    if !dangling.is_empty() {
        return Err(Error::DanglingReference(dangling.into_iter().collect()));
    }
    // Owner links resolve; rule out ownership cycles.
    for element in doc.iter() {
        let mut seen: HashSet<&Gid> = HashSet::new();
        let mut current = element;
        while let Some(owner) = &current.owner {
            if !seen.insert(&current.gid) {
                return Err(schema(
                    &format!("$.elements ('{}')", element.gid),
                    "ownership cycle",
                ));
            }
            current = doc.get(owner).expect("owner resolved above");
        }
    }
    Ok(())
}

fn schema(path: &str, message: &str) -> Error {
    Error::SchemaError {
        path: path.to_string(),
        message: message.to_string(),
    }
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

fn entry_to_value(entry: &LangString) -> Value {
    let mut map = Map::new();
    map.insert("content".into(), Value::String(entry.content.clone()));
    map.insert("lang".into(), Value::String(entry.lang.clone()));
    if let Some(expr) = &entry.expression_ref {
        map.insert("expression_ref".into(), Value::String(expr.to_string()));
    }
    Value::Object(map)
}

fn mls_to_value(mls: &MultiLangString) -> Value {
    Value::Array(mls.entries().iter().map(entry_to_value).collect())
}

fn gid_list(gids: &[Gid]) -> Value {
    Value::Array(gids.iter().map(|g| Value::String(g.to_string())).collect())
}

fn element_to_value(element: &Element) -> Value {
    let mut map = Map::new();
    let mut set = |key: &str, value: Value| {
        map.insert(key.to_string(), value);
    };
    set("gid", Value::String(element.gid.to_string()));
    set("kind", Value::String(element.kind.name().to_string()));
    if let Some(owner) = &element.owner {
        set("owner_gid", Value::String(owner.to_string()));
    }
    if element.is_citation {
        set("is_citation", Value::Bool(true));
    }
    if let Some(cited) = &element.cited_element {
        set("cited_element", Value::String(cited.to_string()));
    }
    if element.is_abstract {
        set("is_abstract", Value::Bool(true));
    }
    if let Some(form) = &element.abstract_form {
        set("abstract_form", Value::String(form.to_string()));
    }
    if let Some(name) = &element.name {
        set("name", entry_to_value(name));
    }
    if !element.description.is_empty() {
        set("description", mls_to_value(&element.description));
    }
    if !element.implementation_constraints.is_empty() {
        set(
            "implementation_constraints",
            Value::Array(
                element
                    .implementation_constraints
                    .iter()
                    .map(|c| json!({ "content": mls_to_value(&c.content) }))
                    .collect(),
            ),
        );
    }
    if !element.notes.is_empty() {
        set(
            "notes",
            Value::Array(
                element
                    .notes
                    .iter()
                    .map(|n| json!({ "content": mls_to_value(&n.content) }))
                    .collect(),
            ),
        );
    }
    if !element.tagged_values.is_empty() {
        set(
            "tagged_values",
            Value::Array(
                element
                    .tagged_values
                    .iter()
                    .map(|tv| json!({ "key": tv.key, "value": mls_to_value(&tv.value) }))
                    .collect(),
            ),
        );
    }
    let claim_fields = |map: &mut Map<String, Value>, claim: &ClaimData| {
        if !claim.content.is_empty() {
            map.insert("content".into(), mls_to_value(&claim.content));
        }
        if claim.declaration != Declaration::Asserted {
            map.insert(
                "declaration".into(),
                Value::String(claim.declaration.as_str().to_string()),
            );
        }
        if !claim.meta_claims.is_empty() {
            map.insert("meta_claims".into(), gid_list(&claim.meta_claims));
        }
    };
    match &element.payload {
        Payload::Package | Payload::Asset | Payload::Property => {}
        Payload::Binding { participants } => {
            if !participants.is_empty() {
                map.insert("participants".into(), gid_list(participants));
            }
        }
        Payload::Group { members } => {
            if !members.is_empty() {
                map.insert("members".into(), gid_list(members));
            }
        }
        Payload::Category {
            members,
            external_reference,
        } => {
            if !members.is_empty() {
                map.insert("members".into(), gid_list(members));
            }
            if let Some(ext) = external_reference {
                map.insert("external_reference".into(), Value::String(ext.clone()));
            }
        }
        Payload::AssetRelationship { sources, targets } => {
            map.insert("sources".into(), gid_list(sources));
            map.insert("targets".into(), gid_list(targets));
        }
        Payload::Term {
            value,
            external_reference,
            origin,
        } => {
            map.insert("value".into(), Value::String(value.clone()));
            if let Some(ext) = external_reference {
                map.insert("external_reference".into(), Value::String(ext.clone()));
            }
            if let Some(origin) = origin {
                map.insert("origin".into(), Value::String(origin.to_string()));
            }
        }
        Payload::Expression { value, element_refs } => {
            map.insert("value".into(), Value::String(value.clone()));
            if !element_refs.is_empty() {
                map.insert("element_refs".into(), gid_list(element_refs));
            }
        }
        Payload::Claim(claim) => claim_fields(&mut map, claim),
        Payload::Goal {
            claim,
            undeveloped,
            to_be_supported_by_contract,
            public,
        } => {
            claim_fields(&mut map, claim);
            if *undeveloped {
                map.insert("undeveloped".into(), Value::Bool(true));
            }
            if *to_be_supported_by_contract {
                map.insert("to_be_supported_by_contract".into(), Value::Bool(true));
            }
            if *public {
                map.insert("public".into(), Value::Bool(true));
            }
        }
        Payload::AwayGoal { claim, module_ref } => {
            claim_fields(&mut map, claim);
            map.insert("module_ref".into(), Value::String(module_ref.to_string()));
        }
        Payload::Relationship(rel) => {
            if !rel.content.is_empty() {
                map.insert("content".into(), mls_to_value(&rel.content));
            }
            if rel.declaration != Declaration::Asserted {
                map.insert(
                    "declaration".into(),
                    Value::String(rel.declaration.as_str().to_string()),
                );
            }
            if !rel.meta_claims.is_empty() {
                map.insert("meta_claims".into(), gid_list(&rel.meta_claims));
            }
            map.insert("sources".into(), gid_list(&rel.sources));
            map.insert("targets".into(), gid_list(&rel.targets));
            if rel.is_counter {
                map.insert("is_counter".into(), Value::Bool(true));
            }
            if let Some(reasoning) = &rel.reasoning {
                map.insert("reasoning".into(), Value::String(reasoning.to_string()));
            }
        }
        Payload::Connector(conn) => {
            map.insert("source".into(), Value::String(conn.source.to_string()));
            map.insert("target".into(), Value::String(conn.target.to_string()));
            if let Some(label) = &conn.multiplicity {
                map.insert("multiplicity".into(), Value::String(label.clone()));
            }
            if conn.optional {
                map.insert("optional".into(), Value::Bool(true));
            }
            if let Some(choice) = &conn.choice {
                map.insert(
                    "choice".into(),
                    json!({ "group": choice.group, "max": choice.max, "min": choice.min }),
                );
            }
        }
        Payload::ArtifactReference {
            content,
            referenced_artifact,
        } => {
            if !content.is_empty() {
                map.insert("content".into(), mls_to_value(content));
            }
            map.insert(
                "referenced_artifact".into(),
                Value::String(referenced_artifact.to_string()),
            );
        }
        Payload::Reasoning { content } => {
            if !content.is_empty() {
                map.insert("content".into(), mls_to_value(content));
            }
        }
        Payload::Strategy { content, undeveloped } => {
            if !content.is_empty() {
                map.insert("content".into(), mls_to_value(content));
            }
            if *undeveloped {
                map.insert("undeveloped".into(), Value::Bool(true));
            }
        }
        Payload::Context {
            statement,
            referenced_artifact,
        } => {
            if let Some(statement) = statement {
                map.insert("statement".into(), Value::String(statement.clone()));
            }
            if let Some(artifact) = referenced_artifact {
                map.insert(
                    "referenced_artifact".into(),
                    Value::String(artifact.to_string()),
                );
            }
        }
    }
    Value::Object(map)
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

/// Field reader that tracks which keys were consumed, so unknown keys can
/// be rejected with their path.
struct Fields<'a> {
    path: &'a str,
    map: &'a Map<String, Value>,
    used: HashMap<&'a str, ()>,
}

impl<'a> Fields<'a> {
    fn new(path: &'a str, map: &'a Map<String, Value>) -> Self {
        Fields {
            path,
            map,
            used: HashMap::new(),
        }
    }

    fn get(&mut self, key: &'static str) -> Option<&'a Value> {
        self.used.insert(key, ());
        self.map.get(key)
    }

    fn str_opt(&mut self, key: &'static str) -> Result<Option<String>> {
        match self.get(key) {
            None => Ok(None),
            Some(Value::String(s)) => Ok(Some(s.clone())),
            Some(_) => Err(schema(&format!("{}.{key}", self.path), "expected a string")),
        }
    }

    fn str_req(&mut self, key: &'static str) -> Result<String> {
        self.str_opt(key)?
            .ok_or_else(|| schema(&format!("{}.{key}", self.path), "missing required field"))
    }

    fn gid_opt(&mut self, key: &'static str) -> Result<Option<Gid>> {
        Ok(self.str_opt(key)?.map(Gid::new))
    }

    fn gid_req(&mut self, key: &'static str) -> Result<Gid> {
        Ok(Gid::new(self.str_req(key)?))
    }

    fn bool(&mut self, key: &'static str) -> Result<bool> {
        match self.get(key) {
            None => Ok(false),
            Some(Value::Bool(b)) => Ok(*b),
            Some(_) => Err(schema(&format!("{}.{key}", self.path), "expected a boolean")),
        }
    }

    fn gids(&mut self, key: &'static str) -> Result<Vec<Gid>> {
        match self.get(key) {
            None => Ok(Vec::new()),
            Some(Value::Array(items)) => {
                let mut gids = Vec::with_capacity(items.len());
                for item in items {
                    match item {
                        Value::String(s) => gids.push(Gid::new(s)),
                        _ => {
                            return Err(schema(
                                &format!("{}.{key}", self.path),
                                "expected an array of gids",
                            ))
                        }
                    }
                }
                Ok(gids)
            }
            Some(_) => Err(schema(&format!("{}.{key}", self.path), "expected an array")),
        }
    }

    fn array(&mut self, key: &'static str) -> Result<Option<&'a [Value]>> {
        match self.get(key) {
            None => Ok(None),
            Some(Value::Array(items)) => Ok(Some(items)),
            Some(_) => Err(schema(&format!("{}.{key}", self.path), "expected an array")),
        }
    }

    fn finish(self) -> Result<()> {
        for key in self.map.keys() {
            if !self.used.contains_key(key.as_str()) {
                return Err(schema(
                    &format!("{}.{key}", self.path),
                    "unknown field for this kind",
                ));
            }
        }
        Ok(())
    }
}

fn entry_from_value(path: &str, value: &Value) -> Result<LangString> {
    let map = value
        .as_object()
        .ok_or_else(|| schema(path, "expected a string entry object"))?;
    let mut fields = Fields::new(path, map);
    let entry = LangString {
        lang: fields.str_req("lang")?,
        content: fields.str_req("content")?,
        expression_ref: fields.gid_opt("expression_ref")?,
    };
    if entry.lang.is_empty() {
        return Err(schema(path, "lang tag must be non-empty"));
    }
    fields.finish()?;
    Ok(entry)
}

fn mls_from_values(path: &str, values: &[Value]) -> Result<MultiLangString> {
    let mut mls = MultiLangString::new();
    let mut seen: HashSet<String> = HashSet::new();
    for (i, value) in values.iter().enumerate() {
        let entry = entry_from_value(&format!("{path}[{i}]"), value)?;
        if !seen.insert(entry.lang.clone()) {
            return Err(schema(
                &format!("{path}[{i}]"),
                &format!("duplicate lang tag '{}'", entry.lang),
            ));
        }
        mls.set(entry);
    }
    Ok(mls)
}

fn content_list_from(
    fields: &mut Fields<'_>,
    key: &'static str,
    path: &str,
) -> Result<Vec<MultiLangString>> {
    let Some(items) = fields.array(key)? else {
        return Ok(Vec::new());
    };
    let mut out = Vec::with_capacity(items.len());
    for (i, item) in items.iter().enumerate() {
        let item_path = format!("{path}.{key}[{i}]");
        let map = item
            .as_object()
            .ok_or_else(|| schema(&item_path, "expected an object"))?;
        let mut inner = Fields::new(&item_path, map);
        let content = match inner.array("content")? {
            Some(values) => mls_from_values(&format!("{item_path}.content"), values)?,
            None => return Err(schema(&item_path, "missing content")),
        };
        inner.finish()?;
        out.push(content);
    }
    Ok(out)
}

fn element_from_value(path: &str, value: &Value, notation: Notation) -> Result<Element> {
    let map = value
        .as_object()
        .ok_or_else(|| schema(path, "element must be an object"))?;
    let mut fields = Fields::new(path, map);

    let gid = fields.str_req("gid")?;
    if gid.is_empty() {
        return Err(schema(&format!("{path}.gid"), "gid must be non-empty"));
    }
    let kind_name = fields.str_req("kind")?;
    let kind = ElementKind::parse(&kind_name)
        .ok_or_else(|| schema(&format!("{path}.kind"), &format!("unknown kind '{kind_name}'")))?;
    if !notation.admits(kind) {
        return Err(schema(
            &format!("{path}.kind"),
            &format!("kind {kind} is not valid in a {notation} document"),
        ));
    }

    let mut element = Element::new(gid, kind);
    element.owner = fields.gid_opt("owner_gid")?;
    element.is_citation = fields.bool("is_citation")?;
    element.cited_element = fields.gid_opt("cited_element")?;
    element.is_abstract = fields.bool("is_abstract")?;
    element.abstract_form = fields.gid_opt("abstract_form")?;
    if let Some(name) = fields.get("name") {
        element.name = Some(entry_from_value(&format!("{path}.name"), name)?);
    }
    if let Some(values) = fields.array("description")? {
        element.description = mls_from_values(&format!("{path}.description"), values)?;
    }
    element.implementation_constraints = content_list_from(&mut fields, "implementation_constraints", path)?
        .into_iter()
        .map(|content| ImplementationConstraint { content })
        .collect();
    element.notes = content_list_from(&mut fields, "notes", path)?
        .into_iter()
        .map(|content| Note { content })
        .collect();
    if let Some(items) = fields.array("tagged_values")? {
        let mut tagged = Vec::with_capacity(items.len());
        for (i, item) in items.iter().enumerate() {
            let item_path = format!("{path}.tagged_values[{i}]");
            let map = item
                .as_object()
                .ok_or_else(|| schema(&item_path, "expected an object"))?;
            let mut inner = Fields::new(&item_path, map);
            let key = inner.str_req("key")?;
            let value = match inner.array("value")? {
                Some(values) => mls_from_values(&format!("{item_path}.value"), values)?,
                None => return Err(schema(&item_path, "missing value")),
            };
            inner.finish()?;
            tagged.push(TaggedValue { key, value });
        }
        element.tagged_values = tagged;
    }

    let declaration = match fields.str_opt("declaration")? {
        Some(s) if claim_or_relationship(kind) => s
            .parse::<Declaration>()
            .map_err(|e| schema(&format!("{path}.declaration"), &format!("{e}")))?,
        Some(_) => {
            return Err(schema(
                &format!("{path}.declaration"),
                &format!("{kind} carries no declaration"),
            ))
        }
        None => Declaration::Asserted,
    };

    element.payload = match kind.family() {
        Family::Package | Family::Asset | Family::Property => Payload::default_for(kind),
        Family::Binding => Payload::Binding {
            participants: fields.gids("participants")?,
        },
        Family::Group => Payload::Group {
            members: fields.gids("members")?,
        },
        Family::Category => Payload::Category {
            members: fields.gids("members")?,
            external_reference: fields.str_opt("external_reference")?,
        },
        Family::AssetRelationship => Payload::AssetRelationship {
            sources: fields.gids("sources")?,
            targets: fields.gids("targets")?,
        },
        Family::Term => Payload::Term {
            value: fields.str_opt("value")?.unwrap_or_default(),
            external_reference: fields.str_opt("external_reference")?,
            origin: fields.gid_opt("origin")?,
        },
        Family::Expression => Payload::Expression {
            value: fields.str_opt("value")?.unwrap_or_default(),
            element_refs: fields.gids("element_refs")?,
        },
        Family::Claim => Payload::Claim(claim_data(&mut fields, path, declaration)?),
        Family::Goal => Payload::Goal {
            claim: claim_data(&mut fields, path, declaration)?,
            undeveloped: fields.bool("undeveloped")?,
            to_be_supported_by_contract: fields.bool("to_be_supported_by_contract")?,
            public: fields.bool("public")?,
        },
        Family::AwayGoal => Payload::AwayGoal {
            claim: claim_data(&mut fields, path, declaration)?,
            module_ref: fields.gid_req("module_ref")?,
        },
        Family::Relationship => Payload::Relationship(RelationshipData {
            content: match fields.array("content")? {
                Some(values) => mls_from_values(&format!("{path}.content"), values)?,
                None => MultiLangString::new(),
            },
            declaration,
            meta_claims: fields.gids("meta_claims")?,
            sources: fields.gids("sources")?,
            targets: fields.gids("targets")?,
            is_counter: fields.bool("is_counter")?,
            reasoning: fields.gid_opt("reasoning")?,
        }),
        Family::Connector => {
            let mut conn = ConnectorData::new(fields.gid_req("source")?, fields.gid_req("target")?);
            conn.multiplicity = fields.str_opt("multiplicity")?;
            conn.optional = fields.bool("optional")?;
            if let Some(choice) = fields.get("choice") {
                let choice_path = format!("{path}.choice");
                let map = choice
                    .as_object()
                    .ok_or_else(|| schema(&choice_path, "expected an object"))?;
                let mut inner = Fields::new(&choice_path, map);
                let group = inner.str_req("group")?;
                let min = int_field(&mut inner, "min", &choice_path)?;
                let max = int_field(&mut inner, "max", &choice_path)?;
                inner.finish()?;
                conn.choice = Some(ChoiceGroup { group, min, max });
            }
            Payload::Connector(conn)
        }
        Family::ArtifactReference => Payload::ArtifactReference {
            content: match fields.array("content")? {
                Some(values) => mls_from_values(&format!("{path}.content"), values)?,
                None => MultiLangString::new(),
            },
            referenced_artifact: fields.gid_req("referenced_artifact")?,
        },
        Family::Reasoning => Payload::Reasoning {
            content: match fields.array("content")? {
                Some(values) => mls_from_values(&format!("{path}.content"), values)?,
                None => MultiLangString::new(),
            },
        },
        Family::Strategy => Payload::Strategy {
            content: match fields.array("content")? {
                Some(values) => mls_from_values(&format!("{path}.content"), values)?,
                None => MultiLangString::new(),
            },
            undeveloped: fields.bool("undeveloped")?,
        },
        Family::Context => Payload::Context {
            statement: fields.str_opt("statement")?,
            referenced_artifact: fields.gid_opt("referenced_artifact")?,
        },
    };
    fields.finish()?;
    Ok(element)
}

fn claim_or_relationship(kind: ElementKind) -> bool {
    kind.is_claim_like() || kind.family() == Family::Relationship
}

fn claim_data(fields: &mut Fields<'_>, path: &str, declaration: Declaration) -> Result<ClaimData> {
    Ok(ClaimData {
        content: match fields.array("content")? {
            Some(values) => mls_from_values(&format!("{path}.content"), values)?,
            None => MultiLangString::new(),
        },
        declaration,
        meta_claims: fields.gids("meta_claims")?,
    })
}

fn int_field(fields: &mut Fields<'_>, key: &'static str, path: &str) -> Result<usize> {
    match fields.get(key) {
        Some(Value::Number(n)) => n
            .as_u64()
            .map(|v| v as usize)
            .ok_or_else(|| schema(&format!("{path}.{key}"), "expected a non-negative integer")),
        Some(_) => Err(schema(&format!("{path}.{key}"), "expected an integer")),
        None => Err(schema(&format!("{path}.{key}"), "missing required field")),
    }
}
