//! Well-formedness validation: the rule catalog and the checker.
//!
//! `check` is pure and deterministic: the same document yields the same
//! diagnostic list, ordered by (rule id, first element gid). Errors block
//! transformation and evaluation; warnings never block anything.

use std::collections::{HashMap, HashSet};

use serde_json::{json, Value};

use crate::document::ModelDocument;
use crate::element::{Element, Payload};
use crate::gid::Gid;
use crate::kind::{Declaration, ElementKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Severity {
    Error,
    Warning,
}

impl Severity {
    pub fn as_str(self) -> &'static str {
        match self {
            Severity::Error => "error",
            Severity::Warning => "warning",
        }
    }
}

/// A validation finding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub rule_id: &'static str,
    pub severity: Severity,
    pub element_gids: Vec<Gid>,
    pub message: String,
}

impl Diagnostic {
    /// Line-oriented text form: `<severity> <rule_id> <gid,…> <message>`.
    pub fn to_line(&self) -> String {
        let gids = self
            .element_gids
            .iter()
            .map(Gid::as_str)
            .collect::<Vec<_>>()
            .join(",");
        format!(
            "{} {} {} {}",
            self.severity.as_str(),
            self.rule_id,
            if gids.is_empty() { "-" } else { &gids },
            self.message
        )
    }

    pub fn to_json(&self) -> Value {
        json!({
            "rule_id": self.rule_id,
            "severity": self.severity.as_str(),
            "element_gids": self.element_gids.iter().map(Gid::as_str).collect::<Vec<_>>(),
            "message": self.message,
        })
    }
}

/// One catalog entry; the catalog is the complete list of rule ids the
/// toolkit can report.
pub struct Rule {
    pub id: &'static str,
    pub severity: Severity,
    pub summary: &'static str,
}

/// The published rule catalog.
pub const RULES: &[Rule] = &[
    Rule { id: "GSN-E1", severity: Severity::Error, summary: "SupportedBy endpoints outside goal-to-goal, goal-to-strategy, goal-to-solution, strategy-to-goal" },
    Rule { id: "GSN-E2", severity: Severity::Error, summary: "InContextOf endpoints outside {goal,strategy} x {context,assumption,justification}" },
    Rule { id: "GSN-E3", severity: Severity::Error, summary: "undeveloped goal with a supporting connector" },
    Rule { id: "SACM-E1", severity: Severity::Error, summary: "asserted relationship endpoint kind violation" },
    Rule { id: "SACM-E2", severity: Severity::Error, summary: "dangling gid reference" },
    Rule { id: "SACM-W3", severity: Severity::Warning, summary: "citation discipline violation (citation without target, or asCited/citation mismatch)" },
    Rule { id: "SACM-W4", severity: Severity::Warning, summary: "citation cycle" },
    Rule { id: "SACM-W5", severity: Severity::Warning, summary: "cycle in the inference graph" },
    Rule { id: "SACM-W6", severity: Severity::Warning, summary: "inference with multiple targets" },
    Rule { id: "SACM-W7", severity: Severity::Warning, summary: "self-relationship among artifact assets" },
    Rule { id: "SACM-W8", severity: Severity::Warning, summary: "term with both an external reference and an origin" },
    Rule { id: "SACM-W9", severity: Severity::Warning, summary: "dangling expression reference in a string entry" },
    Rule { id: "SACM-W10", severity: Severity::Warning, summary: "defeated assertion without a counter relationship targeting it" },
    Rule { id: "SACM-W11", severity: Severity::Warning, summary: "interface package containing a non-citation element" },
    Rule { id: "SACM-W12", severity: Severity::Warning, summary: "binding with fewer than two distinct participant packages" },
    Rule { id: "INST-E1", severity: Severity::Error, summary: "instantiated element with residual placeholders" },
    Rule { id: "INST-E2", severity: Severity::Error, summary: "instantiated package still containing abstract elements" },
    Rule { id: "INST-E3", severity: Severity::Error, summary: "instantiated element whose abstract form does not resolve into the pattern" },
];

pub fn rule(id: &str) -> Option<&'static Rule> {
    RULES.iter().find(|r| r.id == id)
}

pub(crate) fn diagnostic(rule_id: &'static str, gids: Vec<Gid>, message: String) -> Diagnostic {
    let severity = rule(rule_id).expect("rule id in catalog").severity;
    Diagnostic {
        rule_id,
        severity,
        element_gids: gids,
        message,
    }
}

/// Sorts diagnostics into the canonical report order.
pub(crate) fn sort_diagnostics(diags: &mut [Diagnostic]) {
    diags.sort_by(|a, b| {
        (a.rule_id, a.element_gids.first(), &a.message).cmp(&(
            b.rule_id,
            b.element_gids.first(),
            &b.message,
        ))
    });
}

/// Renders diagnostics as the line-oriented text format.
pub fn diagnostics_to_text(diags: &[Diagnostic]) -> String {
    let mut out = String::new();
    for d in diags {
        out.push_str(&d.to_line());
        out.push('\n');
    }
    out
}

/// Renders diagnostics as a canonical JSON report.
pub fn diagnostics_to_json(diags: &[Diagnostic]) -> String {
    let value = json!({
        "diagnostics": diags.iter().map(Diagnostic::to_json).collect::<Vec<_>>(),
    });
    let mut bytes = serde_json::to_vec_pretty(&value).expect("diagnostics serialize");
    bytes.push(b'\n');
    String::from_utf8(bytes).expect("utf-8")
}

/// Runs the whole rule catalog over a document.
pub fn check(doc: &ModelDocument) -> Vec<Diagnostic> {
    let mut diags = Vec::new();
    check_dangling_references(doc, &mut diags);
    check_relationship_endpoints(doc, &mut diags);
    check_gsn_connectors(doc, &mut diags);
    check_undeveloped_goals(doc, &mut diags);
    check_citation_discipline(doc, &mut diags);
    check_citation_cycles(doc, &mut diags);
    check_inference_cycles(doc, &mut diags);
    check_multi_target_inference(doc, &mut diags);
    check_asset_self_relationships(doc, &mut diags);
    check_term_references(doc, &mut diags);
    check_expression_refs(doc, &mut diags);
    check_defeated_without_counter(doc, &mut diags);
    check_interfaces(doc, &mut diags);
    check_bindings(doc, &mut diags);
    sort_diagnostics(&mut diags);
    diags
}

/// True when the diagnostics contain no errors.
pub fn is_error_free(diags: &[Diagnostic]) -> bool {
    !diags.iter().any(|d| d.severity == Severity::Error)
}

fn check_dangling_references(doc: &ModelDocument, diags: &mut Vec<Diagnostic>) {
    for element in doc.iter() {
        for (field, gid) in element.references() {
            if !doc.contains(gid) {
                diags.push(diagnostic(
                    "SACM-E2",
                    vec![element.gid.clone()],
                    format!("{field} refers to missing element '{gid}'"),
                ));
            }
        }
    }
}

fn check_relationship_endpoints(doc: &ModelDocument, diags: &mut Vec<Diagnostic>) {
    for element in doc.iter() {
        match &element.payload {
            Payload::Relationship(rel) => {
                let sources: Option<Vec<ElementKind>> = rel
                    .sources
                    .iter()
                    .map(|g| doc.get(g).map(|e| e.kind))
                    .collect();
                let targets: Option<Vec<ElementKind>> = rel
                    .targets
                    .iter()
                    .map(|g| doc.get(g).map(|e| e.kind))
                    .collect();
                // Dangling endpoints are SACM-E2's business.
                let (Some(sources), Some(targets)) = (sources, targets) else {
                    continue;
                };
                if rel.sources.is_empty() || rel.targets.is_empty() {
                    diags.push(diagnostic(
                        "SACM-E1",
                        vec![element.gid.clone()],
                        format!("{} must have at least one source and one target", element.kind),
                    ));
                    continue;
                }
                if let Some(rule) =
                    crate::argumentation::endpoint_violation(element.kind, &sources, &targets)
                {
                    diags.push(diagnostic("SACM-E1", vec![element.gid.clone()], rule));
                }
            }
            Payload::AssetRelationship { sources, targets } => {
                for gid in sources.iter().chain(targets) {
                    if let Some(endpoint) = doc.get(gid) {
                        if !endpoint.kind.is_artifact_asset() {
                            diags.push(diagnostic(
                                "SACM-E1",
                                vec![element.gid.clone()],
                                format!(
                                    "artifact asset relationship endpoint '{gid}' is a {}",
                                    endpoint.kind
                                ),
                            ));
                        }
                    }
                }
            }
            _ => {}
        }
    }
}

fn check_gsn_connectors(doc: &ModelDocument, diags: &mut Vec<Diagnostic>) {
    for element in doc.iter() {
        let Some(conn) = element.connector() else { continue };
        let (Some(source), Some(target)) = (doc.get(&conn.source), doc.get(&conn.target)) else {
            continue;
        };
        match element.kind {
            ElementKind::SupportedBy => {
                if !crate::gsn::supported_by_pair_ok(source.kind, target.kind) {
                    diags.push(diagnostic(
                        "GSN-E1",
                        vec![element.gid.clone()],
                        format!(
                            "SupportedBy from {} to {} is not permitted",
                            source.kind, target.kind
                        ),
                    ));
                }
            }
            ElementKind::InContextOf
                if !crate::gsn::in_context_of_pair_ok(source.kind, target.kind) => {
                    diags.push(diagnostic(
                        "GSN-E2",
                        vec![element.gid.clone()],
                        format!(
                            "InContextOf from {} to {} is not permitted",
                            source.kind, target.kind
                        ),
                    ));
                }
            _ => {}
        }
    }
}

fn check_undeveloped_goals(doc: &ModelDocument, diags: &mut Vec<Diagnostic>) {
    let mut supported_sources: HashSet<&Gid> = HashSet::new();
    for element in doc.iter() {
        if element.kind == ElementKind::SupportedBy {
            if let Some(conn) = element.connector() {
                supported_sources.insert(&conn.source);
            }
        }
    }
    for element in doc.iter() {
        if let Payload::Goal { undeveloped, .. } = &element.payload {
            if *undeveloped && supported_sources.contains(&element.gid) {
                diags.push(diagnostic(
                    "GSN-E3",
                    vec![element.gid.clone()],
                    "undeveloped goal has a supporting connector".to_string(),
                ));
            }
        }
    }
}

fn check_citation_discipline(doc: &ModelDocument, diags: &mut Vec<Diagnostic>) {
    for element in doc.iter() {
        if element.is_citation && element.cited_element.is_none() {
            diags.push(diagnostic(
                "SACM-W3",
                vec![element.gid.clone()],
                "citation without a cited element".to_string(),
            ));
            continue;
        }
        if element.kind.is_claim_like() {
            let declaration = element.claim_data().map(|c| c.declaration);
            let cited = element.is_citation && element.cited_element.is_some();
            match declaration {
                Some(Declaration::AsCited) if !cited => diags.push(diagnostic(
                    "SACM-W3",
                    vec![element.gid.clone()],
                    "asCited claim is not a citation".to_string(),
                )),
                Some(d) if d != Declaration::AsCited && cited => diags.push(diagnostic(
                    "SACM-W3",
                    vec![element.gid.clone()],
                    format!("citation claim is declared {d} instead of asCited"),
                )),
                _ => {}
            }
        }
    }
}

fn check_citation_cycles(doc: &ModelDocument, diags: &mut Vec<Diagnostic>) {
    let mut edges: HashMap<&Gid, Vec<&Gid>> = HashMap::new();
    for element in doc.iter() {
        if element.is_citation {
            if let Some(cited) = &element.cited_element {
                if doc.contains(cited) {
                    edges.entry(&element.gid).or_default().push(cited);
                }
            }
        }
    }
    for cycle in cycles(doc, &edges) {
        diags.push(diagnostic(
            "SACM-W4",
            cycle,
            "citation cycle".to_string(),
        ));
    }
}

fn check_inference_cycles(doc: &ModelDocument, diags: &mut Vec<Diagnostic>) {
    let mut edges: HashMap<&Gid, Vec<&Gid>> = HashMap::new();
    for element in doc.iter() {
        if !element.kind.is_inference_edge() {
            continue;
        }
        if let Some(edge) = element.edge() {
            for source in edge.sources {
                for target in edge.targets {
                    if doc.contains(source) && doc.contains(target) {
                        edges.entry(source).or_default().push(target);
                    }
                }
            }
        }
    }
    for cycle in cycles(doc, &edges) {
        diags.push(diagnostic(
            "SACM-W5",
            cycle,
            "cycle in the inference graph".to_string(),
        ));
    }
}

fn check_multi_target_inference(doc: &ModelDocument, diags: &mut Vec<Diagnostic>) {
    for element in doc.iter() {
        if element.kind.is_inference_edge() {
            if let Some(edge) = element.edge() {
                if edge.targets.len() > 1 {
                    diags.push(diagnostic(
                        "SACM-W6",
                        vec![element.gid.clone()],
                        format!("inference has {} targets", edge.targets.len()),
                    ));
                }
            }
        }
    }
}

fn check_asset_self_relationships(doc: &ModelDocument, diags: &mut Vec<Diagnostic>) {
    for element in doc.iter() {
        if let Payload::AssetRelationship { sources, targets } = &element.payload {
            if sources.iter().any(|s| targets.contains(s)) {
                diags.push(diagnostic(
                    "SACM-W7",
                    vec![element.gid.clone()],
                    "asset relationship relates an asset to itself".to_string(),
                ));
            }
        }
    }
    // Group membership closing on itself is the same kind of self-relation.
    let mut edges: HashMap<&Gid, Vec<&Gid>> = HashMap::new();
    for element in doc.iter() {
        if let Payload::Group { members } | Payload::Category { members, .. } = &element.payload {
            for member in members {
                if doc.contains(member) {
                    edges.entry(&element.gid).or_default().push(member);
                }
            }
        }
    }
    for cycle in cycles(doc, &edges) {
        diags.push(diagnostic(
            "SACM-W7",
            cycle,
            "group membership contains itself".to_string(),
        ));
    }
}

fn check_term_references(doc: &ModelDocument, diags: &mut Vec<Diagnostic>) {
    for element in doc.iter() {
        if let Payload::Term {
            external_reference: Some(_),
            origin: Some(_),
            ..
        } = &element.payload
        {
            diags.push(diagnostic(
                "SACM-W8",
                vec![element.gid.clone()],
                "term carries both an external reference and an origin".to_string(),
            ));
        }
    }
}

fn check_expression_refs(doc: &ModelDocument, diags: &mut Vec<Diagnostic>) {
    for element in doc.iter() {
        for (slot, entry) in string_entries(element) {
            if let Some(expr) = &entry.expression_ref {
                let ok = doc
                    .get(expr)
                    .map(|e| e.kind == ElementKind::Expression)
                    .unwrap_or(false);
                if !ok {
                    diags.push(diagnostic(
                        "SACM-W9",
                        vec![element.gid.clone()],
                        format!("{slot} entry ({}) references missing expression '{expr}'", entry.lang),
                    ));
                }
            }
        }
    }
}

/// All language string entries of an element, with the field they live in.
fn string_entries(element: &Element) -> Vec<(&'static str, &crate::strings::LangString)> {
    let mut out = Vec::new();
    if let Some(name) = &element.name {
        out.push(("name", name));
    }
    for entry in element.description.entries() {
        out.push(("description", entry));
    }
    for constraint in &element.implementation_constraints {
        for entry in constraint.content.entries() {
            out.push(("implementation_constraint", entry));
        }
    }
    for note in &element.notes {
        for entry in note.content.entries() {
            out.push(("note", entry));
        }
    }
    for tv in &element.tagged_values {
        for entry in tv.value.entries() {
            out.push(("tagged_value", entry));
        }
    }
    if let Some(content) = element.content() {
        for entry in content.entries() {
            out.push(("content", entry));
        }
    }
    out
}

fn check_defeated_without_counter(doc: &ModelDocument, diags: &mut Vec<Diagnostic>) {
    let mut countered: HashSet<&Gid> = HashSet::new();
    for element in doc.iter() {
        if let Some(edge) = element.edge() {
            if edge.is_counter {
                countered.extend(edge.targets.iter());
            }
        }
    }
    for element in doc.iter() {
        if !element.kind.is_assertion() {
            continue;
        }
        if element.declaration() == Some(Declaration::Defeated)
            && !countered.contains(&element.gid)
        {
            diags.push(diagnostic(
                "SACM-W10",
                vec![element.gid.clone()],
                "defeated assertion has no counter relationship targeting it".to_string(),
            ));
        }
    }
}

fn check_interfaces(doc: &ModelDocument, diags: &mut Vec<Diagnostic>) {
    for element in doc.iter() {
        if !element.kind.is_interface() {
            continue;
        }
        for child in doc.children(&element.gid) {
            if !child.is_citation {
                diags.push(diagnostic(
                    "SACM-W11",
                    vec![element.gid.clone(), child.gid.clone()],
                    format!("interface contains non-citation element '{}'", child.gid),
                ));
            }
        }
    }
}

fn check_bindings(doc: &ModelDocument, diags: &mut Vec<Diagnostic>) {
    for element in doc.iter() {
        if let Payload::Binding { participants } = &element.payload {
            let distinct: HashSet<&Gid> = participants.iter().collect();
            if distinct.len() < 2 {
                diags.push(diagnostic(
                    "SACM-W12",
                    vec![element.gid.clone()],
                    format!(
                        "binding has {} distinct participant package(s), needs at least 2",
                        distinct.len()
                    ),
                ));
            }
        }
    }
}

/// Strongly connected components with more than one node, plus single nodes
/// with a self-edge: the cycles of the given edge relation. Nodes are
/// returned sorted; the component list is sorted by first node.
fn cycles(doc: &ModelDocument, edges: &HashMap<&Gid, Vec<&Gid>>) -> Vec<Vec<Gid>> {
    // Iterative Tarjan over the document's elements.
    struct Frame<'a> {
        node: &'a Gid,
        next: usize,
    }
    let mut index: HashMap<&Gid, usize> = HashMap::new();
    let mut low: HashMap<&Gid, usize> = HashMap::new();
    let mut on_stack: HashSet<&Gid> = HashSet::new();
    let mut stack: Vec<&Gid> = Vec::new();
    let mut counter = 0usize;
    let mut components: Vec<Vec<Gid>> = Vec::new();
    let empty: Vec<&Gid> = Vec::new();

    for start in doc.gids() {
        if index.contains_key(start) {
            continue;
        }
        let mut frames = vec![Frame { node: start, next: 0 }];
        index.insert(start, counter);
        low.insert(start, counter);
        counter += 1;
        stack.push(start);
        on_stack.insert(start);
        while let Some(frame) = frames.last_mut() {
            let node = frame.node;
            let successors = edges.get(node).unwrap_or(&empty);
            if frame.next < successors.len() {
                let succ = successors[frame.next];
                frame.next += 1;
                if !index.contains_key(succ) {
                    index.insert(succ, counter);
                    low.insert(succ, counter);
                    counter += 1;
                    stack.push(succ);
                    on_stack.insert(succ);
                    frames.push(Frame { node: succ, next: 0 });
                } else if on_stack.contains(succ) {
                    let succ_index = index[succ];
                    let entry = low.get_mut(node).unwrap();
                    *entry = (*entry).min(succ_index);
                }
            } else {
                let node_low = low[node];
                if node_low == index[node] {
                    let mut component = Vec::new();
                    while let Some(top) = stack.pop() {
                        on_stack.remove(top);
                        component.push(top.clone());
                        if top == node {
                            break;
                        }
                    }
                    let self_loop = component.len() == 1
                        && edges
                            .get(node)
                            .map(|succ| succ.contains(&node))
                            .unwrap_or(false);
                    if component.len() > 1 || self_loop {
                        component.sort();
                        components.push(component);
                    }
                }
                frames.pop();
                if let Some(parent) = frames.last() {
                    let parent_low = low[parent.node];
                    let entry = low.get_mut(parent.node).unwrap();
                    *entry = parent_low.min(node_low);
                }
            }
        }
    }
    components.sort();
    components
}
