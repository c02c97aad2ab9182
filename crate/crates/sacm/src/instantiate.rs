//! Pattern instantiation: role extraction, binding application, connector
//! multiplicity/optional/choice expansion and abstract-form linking.
//!
//! A pattern is an abstract package (usually a GSN module). Instantiation
//! copies it, substitutes the role placeholders of abstract elements with
//! bound values, expands decorated connectors, marks every copy concrete
//! and links it back to its template element via the abstract form.
//! Implementation constraints stay on the pattern and are dropped from the
//! copies; their executable subset is exactly what the binding table
//! drives, anything else is surfaced in reports and never executed.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use crate::document::ModelDocument;
use crate::element::{ConnectorData, Element, Payload};
use crate::error::{Error, Result};
use crate::gid::Gid;
use crate::placeholder;
use crate::transform::TraceLink;
use crate::validate::{diagnostic, sort_diagnostics, Diagnostic};

/// Decision for one decorated connector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConnectorDecision {
    /// Replica count for a many connector.
    Count(usize),
    /// Whether an optional connector is kept.
    Chosen(bool),
    /// Connector gids kept from a choice group.
    Subset(Vec<Gid>),
}

/// Role values and connector decisions driving one instantiation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BindingTable {
    pub roles: BTreeMap<String, Vec<String>>,
    pub connectors: BTreeMap<Gid, ConnectorDecision>,
}

impl BindingTable {
    pub fn new() -> Self {
        BindingTable::default()
    }

    pub fn bind(mut self, role: &str, values: &[&str]) -> Self {
        self.roles
            .insert(role.to_string(), values.iter().map(|v| v.to_string()).collect());
        self
    }

    pub fn count(mut self, connector: &str, count: usize) -> Self {
        self.connectors
            .insert(Gid::new(connector), ConnectorDecision::Count(count));
        self
    }

    pub fn chosen(mut self, connector: &str, chosen: bool) -> Self {
        self.connectors
            .insert(Gid::new(connector), ConnectorDecision::Chosen(chosen));
        self
    }

    pub fn subset(mut self, connector: &str, subset: &[&str]) -> Self {
        self.connectors.insert(
            Gid::new(connector),
            ConnectorDecision::Subset(subset.iter().map(Gid::new).collect()),
        );
        self
    }

    /// Parses the binding file format:
    /// `{"roles": {"System X": ["Trainset 7"]}, "connectors": {"SB2": {"count": 2}}}`.
    pub fn from_json(text: &str) -> Result<BindingTable> {
        let value: serde_json::Value =
            serde_json::from_str(text).map_err(|e| Error::ParseError {
                line: e.line(),
                column: e.column(),
                message: e.to_string(),
            })?;
        let object = value.as_object().ok_or_else(|| schema("$", "expected an object"))?;
        let mut table = BindingTable::new();
        for (key, val) in object {
            match key.as_str() {
                "roles" => {
                    let roles = val
                        .as_object()
                        .ok_or_else(|| schema("$.roles", "expected an object"))?;
                    for (role, values) in roles {
                        let path = format!("$.roles.{role}");
                        let list = values
                            .as_array()
                            .ok_or_else(|| schema(&path, "expected an array of strings"))?;
                        if list.is_empty() {
                            return Err(schema(&path, "role needs at least one value"));
                        }
                        let mut parsed = Vec::with_capacity(list.len());
                        for v in list {
                            parsed.push(
                                v.as_str()
                                    .ok_or_else(|| schema(&path, "expected an array of strings"))?
                                    .to_string(),
                            );
                        }
                        table.roles.insert(role.clone(), parsed);
                    }
                }
                "connectors" => {
                    let connectors = val
                        .as_object()
                        .ok_or_else(|| schema("$.connectors", "expected an object"))?;
                    for (gid, decision) in connectors {
                        let path = format!("$.connectors.{gid}");
                        let entry = decision
                            .as_object()
                            .ok_or_else(|| schema(&path, "expected an object"))?;
                        let parsed = if let Some(count) = entry.get("count") {
                            ConnectorDecision::Count(
                                count
                                    .as_u64()
                                    .ok_or_else(|| schema(&path, "count must be an integer"))?
                                    as usize,
                            )
                        } else if let Some(chosen) = entry.get("chosen") {
                            ConnectorDecision::Chosen(
                                chosen
                                    .as_bool()
                                    .ok_or_else(|| schema(&path, "chosen must be a boolean"))?,
                            )
                        } else if let Some(subset) = entry.get("subset") {
                            let list = subset
                                .as_array()
                                .ok_or_else(|| schema(&path, "subset must be an array"))?;
                            let mut gids = Vec::with_capacity(list.len());
                            for v in list {
                                gids.push(Gid::new(v.as_str().ok_or_else(|| {
                                    schema(&path, "subset must be an array of gids")
                                })?));
                            }
                            ConnectorDecision::Subset(gids)
                        } else {
                            return Err(schema(&path, "expected count, chosen or subset"));
                        };
                        table.connectors.insert(Gid::new(gid), parsed);
                    }
                }
                other => return Err(schema(&format!("$.{other}"), "unknown key")),
            }
        }
        Ok(table)
    }
}

fn schema(path: &str, message: &str) -> Error {
    Error::SchemaError {
        path: path.to_string(),
        message: message.to_string(),
    }
}

/// Result of an instantiation: the input document plus the concrete copy.
#[derive(Debug, Clone)]
pub struct Instantiation {
    pub document: ModelDocument,
    /// Root of the concrete copy.
    pub package: Gid,
    pub trace: Vec<TraceLink>,
}

/// Text fields a role placeholder may live in.
fn scanned_texts(element: &Element) -> Vec<&str> {
    let mut texts = Vec::new();
    if let Some(name) = &element.name {
        texts.push(name.content.as_str());
    }
    for entry in element.description.entries() {
        texts.push(entry.content.as_str());
    }
    if let Some(content) = element.content() {
        for entry in content.entries() {
            texts.push(entry.content.as_str());
        }
    }
    match &element.payload {
        Payload::Expression { value, .. } => texts.push(value.as_str()),
        Payload::Context {
            statement: Some(statement),
            ..
        } => texts.push(statement.as_str()),
        _ => {}
    }
    texts
}

/// Role labels of an abstract element's texts.
fn element_roles(element: &Element) -> Result<BTreeSet<String>> {
    let mut roles = BTreeSet::new();
    for text in scanned_texts(element) {
        let labels = placeholder::roles(text)
            .map_err(|_| Error::UnbalancedBraces(element.gid.clone()))?;
        roles.extend(labels);
    }
    Ok(roles)
}

/// Role labels used by the abstract elements of a pattern.
pub fn extract_roles(doc: &ModelDocument, pattern: &Gid) -> Result<BTreeSet<String>> {
    let element = doc.expect(pattern)?;
    if !element.kind.is_package_like() {
        return Err(Error::InvalidArgument(format!(
            "pattern '{pattern}' is a {}, expected a package",
            element.kind
        )));
    }
    let mut roles = BTreeSet::new();
    for gid in std::iter::once(pattern.clone()).chain(doc.descendants(pattern)) {
        let element = doc.expect(&gid)?;
        if element.is_abstract {
            roles.extend(element_roles(element)?);
        }
    }
    Ok(roles)
}

/// Instantiates `pattern` against `table`. The returned document contains
/// everything the input did plus the concrete copy; the pattern itself is
/// left untouched for future instantiations.
pub fn instantiate(
    doc: &ModelDocument,
    pattern: &Gid,
    table: &BindingTable,
) -> Result<Instantiation> {
    let needed = extract_roles(doc, pattern)?;
    for role in &needed {
        if !table.roles.contains_key(role) {
            return Err(Error::MissingBinding(role.clone()));
        }
    }
    let scope: Vec<Gid> = std::iter::once(pattern.clone())
        .chain(doc.descendants(pattern))
        .collect();

    let plan = ExpansionPlan::build(doc, &scope, table)?;
    let mut out = doc.clone();
    let mut trace = Vec::new();

    // Assign output gids up front so references can be remapped in one pass.
    let mut used: HashSet<Gid> = out.gids().cloned().collect();
    let mut fresh = |base: String| -> Gid {
        let mut candidate = Gid::new(&base);
        let mut n = 2;
        while used.contains(&candidate) {
            candidate = Gid::new(format!("{base}-{n}"));
            n += 1;
        }
        used.insert(candidate.clone());
        candidate
    };
    let mut base_map: HashMap<Gid, Gid> = HashMap::new();
    let mut replica_maps: BTreeMap<usize, HashMap<Gid, Gid>> = BTreeMap::new();
    for gid in &scope {
        if plan.omitted.contains(gid) {
            continue;
        }
        match plan.replicated.get(gid) {
            None => {
                let copy = fresh(format!("{gid}.i"));
                base_map.insert(gid.clone(), copy);
            }
            Some(&(_, count)) => {
                for k in 1..=count {
                    let copy = fresh(format!("{gid}.i{k}"));
                    replica_maps.entry(k).or_default().insert(gid.clone(), copy);
                }
            }
        }
    }
    let package_copy = base_map
        .get(pattern)
        .cloned()
        .expect("pattern root is never replicated or omitted");

    for gid in &scope {
        if plan.omitted.contains(gid) {
            continue;
        }
        let original = doc.expect(gid)?;
        match plan.replicated.get(gid) {
            None => {
                let copy_gid = base_map[gid].clone();
                let copy = make_copy(original, copy_gid.clone(), table, None, &base_map)?;
                out.insert_unchecked(copy)?;
                trace.push(TraceLink {
                    source_gid: gid.clone(),
                    result_gid: copy_gid,
                    rule: "Instantiate".to_string(),
                });
            }
            Some(&(_, count)) => {
                for k in 1..=count {
                    let overlay = &replica_maps[&k];
                    let copy_gid = overlay[gid].clone();
                    let mut map = base_map.clone();
                    map.extend(overlay.iter().map(|(a, b)| (a.clone(), b.clone())));
                    let copy = make_copy(original, copy_gid.clone(), table, Some(k - 1), &map)?;
                    out.insert_unchecked(copy)?;
                    trace.push(TraceLink {
                        source_gid: gid.clone(),
                        result_gid: copy_gid,
                        rule: format!("Instantiate[{k}]"),
                    });
                }
            }
        }
    }

    Ok(Instantiation {
        document: out,
        package: package_copy,
        trace,
    })
}

/// Which elements are omitted and which replicate how often.
struct ExpansionPlan {
    omitted: HashSet<Gid>,
    /// element -> (owning many-connector, count)
    replicated: HashMap<Gid, (Gid, usize)>,
}

impl ExpansionPlan {
    fn build(doc: &ModelDocument, scope: &[Gid], table: &BindingTable) -> Result<ExpansionPlan> {
        let mut many: Vec<(Gid, usize)> = Vec::new();
        let mut dropped: Vec<Gid> = Vec::new();
        let mut choice_groups: BTreeMap<String, Vec<Gid>> = BTreeMap::new();

        for gid in scope {
            let element = doc.expect(gid)?;
            let Some(conn) = element.connector() else { continue };
            if !conn.is_decorated() {
                continue;
            }
            let decorations = [conn.multiplicity.is_some(), conn.optional, conn.choice.is_some()]
                .iter()
                .filter(|&&d| d)
                .count();
            if decorations > 1 {
                return Err(Error::InvalidArgument(format!(
                    "connector '{gid}' combines decorators; use one of many, optional, choice"
                )));
            }
            if let Some(choice) = &conn.choice {
                choice_groups.entry(choice.group.clone()).or_default().push(gid.clone());
                continue;
            }
            let decision = table
                .connectors
                .get(gid)
                .ok_or_else(|| Error::MissingConnectorDecision(gid.clone()))?;
            if conn.multiplicity.is_some() {
                let ConnectorDecision::Count(count) = decision else {
                    return Err(Error::InvalidArgument(format!(
                        "connector '{gid}' carries a many decorator; the table entry must be a count"
                    )));
                };
                if *count == 0 {
                    dropped.push(gid.clone());
                } else {
                    many.push((gid.clone(), *count));
                }
            } else {
                let ConnectorDecision::Chosen(chosen) = decision else {
                    return Err(Error::InvalidArgument(format!(
                        "connector '{gid}' is optional; the table entry must be a chosen flag"
                    )));
                };
                if !*chosen {
                    dropped.push(gid.clone());
                }
            }
        }

        // Choice groups: all table entries of one group must agree on one
        // subset of the group's alternatives, sized within the bounds.
        for (group, members) in &choice_groups {
            let mut subset: Option<&Vec<Gid>> = None;
            for gid in members {
                match table.connectors.get(gid) {
                    Some(ConnectorDecision::Subset(s)) => match subset {
                        None => subset = Some(s),
                        Some(existing) if existing == s => {}
                        Some(_) => {
                            return Err(Error::InvalidArgument(format!(
                                "choice group '{group}' has disagreeing subsets in the binding table"
                            )))
                        }
                    },
                    Some(_) => {
                        return Err(Error::InvalidArgument(format!(
                            "connector '{gid}' is a choice alternative; the table entry must be a subset"
                        )))
                    }
                    None => return Err(Error::MissingConnectorDecision(gid.clone())),
                }
            }
            let subset = subset.expect("group is non-empty");
            for gid in subset {
                if !members.contains(gid) {
                    return Err(Error::InvalidArgument(format!(
                        "subset entry '{gid}' is not an alternative of choice group '{group}'"
                    )));
                }
            }
            let bounds = doc
                .expect(&members[0])?
                .connector()
                .and_then(|c| c.choice.clone())
                .expect("choice decorator");
            if subset.len() < bounds.min || subset.len() > bounds.max {
                return Err(Error::ChoiceOutOfRange {
                    connector: members[0].clone(),
                    min: bounds.min,
                    max: bounds.max,
                    got: subset.len(),
                });
            }
            for gid in members {
                if !subset.contains(gid) {
                    dropped.push(gid.clone());
                }
            }
        }

        // Omit dropped connectors with their dependent subtrees, then every
        // connector left touching an omitted node.
        let mut omitted: HashSet<Gid> = HashSet::new();
        for gid in &dropped {
            omitted.insert(gid.clone());
            let conn = doc.expect(gid)?.connector().expect("connector").clone();
            for node in dependent_subtree(doc, scope, &conn) {
                omitted.insert(node);
            }
        }
        for gid in scope {
            if let Some(conn) = doc.expect(gid)?.connector() {
                if omitted.contains(&conn.source) || omitted.contains(&conn.target) {
                    omitted.insert(gid.clone());
                }
            }
        }

        // Replica membership for many connectors.
        let mut replicated: HashMap<Gid, (Gid, usize)> = HashMap::new();
        for (conn_gid, count) in &many {
            if omitted.contains(conn_gid) {
                continue;
            }
            let conn = doc.expect(conn_gid)?.connector().expect("connector").clone();
            let subtree = dependent_subtree(doc, scope, &conn);
            let mut members = subtree.clone();
            members.push(conn_gid.clone());
            for member in &members {
                if omitted.contains(member) {
                    continue;
                }
                if member != conn_gid {
                    if let Some(inner) = doc.expect(member)?.connector() {
                        if inner.is_decorated() {
                            return Err(Error::InvalidArgument(format!(
                                "decorated connector '{member}' is nested inside the replicated subtree of '{conn_gid}'; nested decorated connectors are not supported"
                            )));
                        }
                    }
                }
                if replicated
                    .insert(member.clone(), (conn_gid.clone(), *count))
                    .is_some()
                {
                    return Err(Error::InvalidArgument(format!(
                        "element '{member}' falls into two replicated subtrees; overlapping many connectors are not supported"
                    )));
                }
            }
            // List-valued roles inside the subtree must match the count.
            for member in &subtree {
                let element = doc.expect(member)?;
                if !element.is_abstract {
                    continue;
                }
                for label in element_roles(element)? {
                    if let Some(values) = table.roles.get(&label) {
                        if values.len() > 1 && values.len() != *count {
                            return Err(Error::CountMismatch {
                                connector: conn_gid.clone(),
                                expected: *count,
                                got: values.len(),
                            });
                        }
                    }
                }
            }
        }
        Ok(ExpansionPlan { omitted, replicated })
    }
}

/// Nodes reachable from the connector's supporting end via connectors,
/// never passing back through the supported end. Connectors whose source
/// falls inside the subtree belong to it as well.
fn dependent_subtree(doc: &ModelDocument, scope: &[Gid], conn: &ConnectorData) -> Vec<Gid> {
    let mut visited: HashSet<Gid> = HashSet::new();
    let mut order: Vec<Gid> = Vec::new();
    let mut queue: Vec<Gid> = vec![conn.target.clone()];
    while let Some(node) = queue.pop() {
        if node == conn.source || !visited.insert(node.clone()) {
            continue;
        }
        order.push(node.clone());
        for gid in scope {
            let Some(element) = doc.get(gid) else { continue };
            let Some(edge) = element.connector() else { continue };
            if edge.source == node && edge.target != conn.source {
                if visited.insert(gid.clone()) {
                    order.push(gid.clone());
                }
                queue.push(edge.target.clone());
            }
        }
    }
    order
}

/// Copies one pattern element into its concrete form.
fn make_copy(
    original: &Element,
    copy_gid: Gid,
    table: &BindingTable,
    replica_index: Option<usize>,
    map: &HashMap<Gid, Gid>,
) -> Result<Element> {
    let mut copy = original.clone();
    copy.gid = copy_gid;
    copy.is_abstract = false;
    copy.implementation_constraints.clear();
    if let Payload::Connector(conn) = &mut copy.payload {
        conn.multiplicity = None;
        conn.optional = false;
        conn.choice = None;
    }
    if original.is_abstract {
        substitute_texts(&mut copy, table, replica_index)?;
    }
    copy.remap_references(&|g: &Gid| map.get(g).cloned());
    // The abstract form must point at the template element, so it is set
    // after reference remapping.
    copy.abstract_form = Some(original.gid.clone());
    Ok(copy)
}

/// Applies role substitution to every text field of an element copy.
fn substitute_texts(
    element: &mut Element,
    table: &BindingTable,
    replica_index: Option<usize>,
) -> Result<()> {
    // A list-valued role is only meaningful inside a replicated subtree.
    for label in element_roles(element)? {
        if let Some(values) = table.roles.get(&label) {
            if values.len() > 1 && replica_index.is_none() {
                return Err(Error::CountMismatch {
                    connector: element.gid.clone(),
                    expected: 1,
                    got: values.len(),
                });
            }
        }
    }
    let gid = element.gid.clone();
    let lookup = |label: &str| -> Option<String> {
        table.roles.get(label).map(|values| {
            if values.len() == 1 {
                values[0].clone()
            } else {
                values[replica_index.unwrap_or(0)].clone()
            }
        })
    };
    let subst = |text: &str| -> Result<String> {
        placeholder::substitute(text, lookup).map_err(|_| Error::UnbalancedBraces(gid.clone()))
    };
    if let Some(name) = &mut element.name {
        name.content = subst(&name.content)?;
    }
    for entry in element.description.entries_mut() {
        entry.content = subst(&entry.content)?;
    }
    match &mut element.payload {
        Payload::Expression { value, .. } => *value = subst(value)?,
        Payload::Context {
            statement: Some(statement),
            ..
        } => *statement = subst(statement)?,
        Payload::Claim(claim) => {
            for entry in claim.content.entries_mut() {
                entry.content = subst(&entry.content)?;
            }
        }
        Payload::Goal { claim, .. } | Payload::AwayGoal { claim, .. } => {
            for entry in claim.content.entries_mut() {
                entry.content = subst(&entry.content)?;
            }
        }
        Payload::Relationship(rel) => {
            for entry in rel.content.entries_mut() {
                entry.content = subst(&entry.content)?;
            }
        }
        Payload::ArtifactReference { content, .. }
        | Payload::Reasoning { content }
        | Payload::Strategy { content, .. } => {
            for entry in content.entries_mut() {
                entry.content = subst(&entry.content)?;
            }
        }
        _ => {}
    }
    Ok(())
}

/// Checks an instantiated package against its pattern: no residual
/// placeholders, no abstract elements, every abstract form resolving into
/// the pattern.
pub fn verify_instantiation(doc: &ModelDocument, concrete: &Gid, pattern: &Gid) -> Vec<Diagnostic> {
    let mut diags = Vec::new();
    let pattern_scope: HashSet<Gid> = std::iter::once(pattern.clone())
        .chain(doc.descendants(pattern))
        .collect();
    let concrete_scope: Vec<Gid> = std::iter::once(concrete.clone())
        .chain(doc.descendants(concrete))
        .collect();
    for gid in concrete_scope {
        let Some(element) = doc.get(&gid) else { continue };
        if scanned_texts(element)
            .iter()
            .any(|text| placeholder::has_placeholders(text))
        {
            diags.push(diagnostic(
                "INST-E1",
                vec![gid.clone()],
                "instantiated element still contains placeholders".to_string(),
            ));
        }
        if element.is_abstract {
            diags.push(diagnostic(
                "INST-E2",
                vec![gid.clone()],
                "instantiated package still contains an abstract element".to_string(),
            ));
        }
        let resolves = element
            .abstract_form
            .as_ref()
            .map(|form| pattern_scope.contains(form))
            .unwrap_or(false);
        if !resolves {
            diags.push(diagnostic(
                "INST-E3",
                vec![gid.clone()],
                "abstract form does not resolve into the pattern".to_string(),
            ));
        }
    }
    sort_diagnostics(&mut diags);
    diags
}
