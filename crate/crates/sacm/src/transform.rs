//! Model-to-model transformation of GSN and CAE documents into the core
//! notation.
//!
//! Most mappings are one-to-one: each notation element becomes the core
//! element it extends, with names, descriptions and flags copied. The two
//! exceptions need edge analysis, because strategies and arguments are
//! nodes in their notation but reasoning attached to an edge in the core
//! notation:
//!
//! * a GSN strategy becomes an argument reasoning plus one merged inference
//!   whose sources are the goals below the strategy and whose target is the
//!   goal above it (flipped into the bottom-up direction);
//! * a CAE argument becomes an argument reasoning attached to one merged
//!   inference collecting the supported claim's sub-claims.
//!
//! Output gids are derived from source gids (suffix per result kind), so
//! two runs over the same input produce identical documents. Trace links
//! record the full provenance.

use std::collections::HashMap;

use serde_json::json;

use crate::document::ModelDocument;
use crate::element::{ClaimData, Element, Payload, RelationshipData};
use crate::error::{Error, Result};
use crate::gid::Gid;
use crate::kind::{Declaration, ElementKind, Notation};
use crate::strings::MultiLangString;
use crate::validate;

/// Provenance of one transformation result.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceLink {
    pub source_gid: Gid,
    pub result_gid: Gid,
    pub rule: String,
}

/// All results produced from a source element, in trace order.
pub fn trace_lookup(links: &[TraceLink], source: &Gid) -> Vec<Gid> {
    links
        .iter()
        .filter(|l| l.source_gid == *source)
        .map(|l| l.result_gid.clone())
        .collect()
}

/// Serializes trace links as a canonical JSON sidecar document.
pub fn trace_to_json(links: &[TraceLink]) -> Vec<u8> {
    let value = json!({
        "links": links
            .iter()
            .map(|l| {
                json!({
                    "result_gid": l.result_gid.as_str(),
                    "rule": l.rule,
                    "source_gid": l.source_gid.as_str(),
                })
            })
            .collect::<Vec<_>>(),
    });
    let mut bytes = serde_json::to_vec_pretty(&value).expect("trace serializes");
    bytes.push(b'\n');
    bytes
}

/// Result of a transformation.
#[derive(Debug, Clone)]
pub struct TransformOutput {
    /// The transformed document (core notation).
    pub document: ModelDocument,
    /// The argument package produced from the transformed module; for
    /// whole-document transforms, the first transformed module's package.
    pub package: Option<Gid>,
    pub trace: Vec<TraceLink>,
    pub warnings: Vec<String>,
}

/// Transforms a single GSN module into an argument package. The output
/// document contains only the module's transform; references leaving the
/// module (evidence artifacts, away citations) keep their original gids.
pub fn gsn_to_sacm(doc: &ModelDocument, module: &Gid) -> Result<TransformOutput> {
    if doc.notation() != Notation::Gsn {
        return Err(Error::InvalidArgument(format!(
            "gsn_to_sacm expects a gsn document, got {}",
            doc.notation()
        )));
    }
    let element = doc.expect(module)?;
    if element.kind != ElementKind::GsnModule {
        return Err(Error::KindMismatch(format!(
            "'{module}' is a {}, expected a GsnModule",
            element.kind
        )));
    }
    require_error_free(doc)?;
    let scope: Vec<Gid> = std::iter::once(module.clone())
        .chain(doc.descendants(module))
        .collect();
    let mut worker = Worker::new(doc, true);
    worker.run(&scope)?;
    Ok(worker.finish(Some(module)))
}

/// Transforms a single CAE module into an argument package.
pub fn cae_to_sacm(doc: &ModelDocument, module: &Gid) -> Result<TransformOutput> {
    if doc.notation() != Notation::Cae {
        return Err(Error::InvalidArgument(format!(
            "cae_to_sacm expects a cae document, got {}",
            doc.notation()
        )));
    }
    let element = doc.expect(module)?;
    if element.kind != ElementKind::CaeModule {
        return Err(Error::KindMismatch(format!(
            "'{module}' is a {}, expected a CAEModule",
            element.kind
        )));
    }
    require_error_free(doc)?;
    let scope: Vec<Gid> = std::iter::once(module.clone())
        .chain(doc.descendants(module))
        .collect();
    let mut worker = Worker::new(doc, true);
    worker.run(&scope)?;
    Ok(worker.finish(Some(module)))
}

/// Transforms a whole document: notation elements are mapped, core elements
/// are copied verbatim so artifact and terminology packages survive and all
/// cross-references stay resolvable.
pub fn transform_document(doc: &ModelDocument) -> Result<TransformOutput> {
    if doc.notation() == Notation::Sacm {
        return Err(Error::InvalidArgument(
            "document is already in the core notation".into(),
        ));
    }
    require_error_free(doc)?;
    let scope: Vec<Gid> = doc.gids().cloned().collect();
    let mut worker = Worker::new(doc, false);
    worker.run(&scope)?;
    let first_module = doc
        .iter()
        .find(|e| matches!(e.kind, ElementKind::GsnModule | ElementKind::CaeModule))
        .map(|e| e.gid.clone());
    Ok(worker.finish(first_module.as_ref()))
}

fn require_error_free(doc: &ModelDocument) -> Result<()> {
    let diags = validate::check(doc);
    if validate::is_error_free(&diags) {
        Ok(())
    } else {
        Err(Error::PreconditionFailed(
            diags
                .into_iter()
                .filter(|d| d.severity == validate::Severity::Error)
                .collect(),
        ))
    }
}

struct Worker<'a> {
    doc: &'a ModelDocument,
    /// Standalone module transform: the package loses its outside owner.
    detach_root: bool,
    out: ModelDocument,
    gid_map: HashMap<Gid, Gid>,
    trace: Vec<TraceLink>,
    warnings: Vec<String>,
}

impl<'a> Worker<'a> {
    fn new(doc: &'a ModelDocument, detach_root: bool) -> Self {
        Worker {
            doc,
            detach_root,
            out: ModelDocument::new(Notation::Sacm),
            gid_map: HashMap::new(),
            trace: Vec::new(),
            warnings: Vec::new(),
        }
    }

    fn run(&mut self, scope: &[Gid]) -> Result<()> {
        // Nodes first, then edges: edge mapping needs the node map. Core
        // relationship elements count as nodes here (identity copies);
        // only the notation edges need analysis.
        for gid in scope {
            let element = self.doc.expect(gid)?;
            let notation_edge =
                element.kind.notation() != Notation::Sacm && element.kind.is_edge();
            if !notation_edge {
                self.map_node(element)?;
            }
        }
        self.map_edges(scope)?;
        self.remap_all();
        Ok(())
    }

    fn finish(self, module: Option<&Gid>) -> TransformOutput {
        let package = module.and_then(|m| self.gid_map.get(m).cloned());
        TransformOutput {
            document: self.out,
            package,
            trace: self.trace,
            warnings: self.warnings,
        }
    }

    fn emit(&mut self, source: &Gid, element: Element, rule: &str) -> Result<Gid> {
        let gid = self.out.insert_unchecked(element)?;
        self.gid_map.insert(source.clone(), gid.clone());
        self.trace.push(TraceLink {
            source_gid: source.clone(),
            result_gid: gid.clone(),
            rule: rule.to_string(),
        });
        Ok(gid)
    }

    fn derived(&self, base: &Gid, suffix: &str) -> Gid {
        self.out.fresh_gid(&format!("{base}.{suffix}"))
    }

    /// Copies the common backbone and utility attachments onto a fresh
    /// element of the output kind.
    fn convert(&self, source: &Element, suffix: &str, kind: ElementKind) -> Element {
        let mut element = Element::new(self.derived(&source.gid, suffix), kind);
        element.owner = source.owner.clone();
        element.is_citation = source.is_citation;
        element.cited_element = source.cited_element.clone();
        element.is_abstract = source.is_abstract;
        element.abstract_form = source.abstract_form.clone();
        element.name = source.name.clone();
        element.description = source.description.clone();
        element.implementation_constraints = source.implementation_constraints.clone();
        element.notes = source.notes.clone();
        element.tagged_values = source.tagged_values.clone();
        element
    }

    fn map_node(&mut self, source: &Element) -> Result<()> {
        match source.kind {
            // Core elements pass through unchanged.
            kind if kind.notation() == Notation::Sacm => {
                let copy = source.clone();
                self.out.insert_unchecked(copy)?;
                self.gid_map
                    .insert(source.gid.clone(), source.gid.clone());
                Ok(())
            }
            ElementKind::GsnModule => {
                let element = self.convert(source, "ap", ElementKind::ArgumentPackage);
                self.emit(&source.gid, element, "Module2ArgumentPackage")?;
                Ok(())
            }
            ElementKind::ContractModule => {
                let mut element = self.convert(source, "apb", ElementKind::ArgumentPackageBinding);
                if let Payload::Binding { participants } = &source.payload {
                    element.payload = Payload::Binding {
                        participants: participants.clone(),
                    };
                }
                self.emit(&source.gid, element, "ContractModule2ArgumentPackageBinding")?;
                Ok(())
            }
            ElementKind::CaeModule => {
                let element = self.convert(source, "ap", ElementKind::ArgumentPackage);
                self.emit(&source.gid, element, "CAEModule2ArgumentPackage")?;
                Ok(())
            }
            ElementKind::CaeModuleInterface => {
                let element = self.convert(source, "api", ElementKind::ArgumentPackageInterface);
                self.emit(&source.gid, element, "CAEModuleInterface2ArgumentPackageInterface")?;
                Ok(())
            }
            ElementKind::CaeModuleBinding => {
                let mut element = self.convert(source, "apb", ElementKind::ArgumentPackageBinding);
                if let Payload::Binding { participants } = &source.payload {
                    element.payload = Payload::Binding {
                        participants: participants.clone(),
                    };
                }
                self.emit(&source.gid, element, "CAEModuleBinding2ArgumentPackageBinding")?;
                Ok(())
            }
            ElementKind::Goal => {
                let Payload::Goal { claim, undeveloped, .. } = &source.payload else {
                    unreachable!("goal payload");
                };
                let mut data = claim.clone();
                if *undeveloped {
                    data.declaration = Declaration::NeedsSupport;
                }
                self.emit_claim(source, data, "Goal2Claim")
            }
            ElementKind::Assumption => {
                let mut data = source.claim_data().cloned().unwrap_or_default();
                data.declaration = Declaration::Assumed;
                self.emit_claim(source, data, "Assumption2Claim")
            }
            ElementKind::Justification => {
                let mut data = source.claim_data().cloned().unwrap_or_default();
                data.declaration = Declaration::Axiomatic;
                self.emit_claim(source, data, "Justification2Claim")
            }
            ElementKind::AwayGoal => {
                let mut data = source.claim_data().cloned().unwrap_or_default();
                data.declaration = Declaration::AsCited;
                self.emit_claim(source, data, "AwayGoal2Claim")
            }
            ElementKind::CaeClaim => {
                let data = source.claim_data().cloned().unwrap_or_default();
                self.emit_claim(source, data, "CAEClaim2Claim")
            }
            ElementKind::CaeAssumption => {
                let mut data = source.claim_data().cloned().unwrap_or_default();
                data.declaration = Declaration::Assumed;
                self.emit_claim(source, data, "CAEAssumption2Claim")
            }
            ElementKind::Solution
            | ElementKind::AwaySolution
            | ElementKind::AwayContext
            | ElementKind::ModuleReference
            | ElementKind::ContractModuleReference
            | ElementKind::Evidence => {
                let Payload::ArtifactReference { content, referenced_artifact } = &source.payload
                else {
                    unreachable!("artifact reference payload");
                };
                let mut element = self.convert(source, "ar", ElementKind::ArtifactReference);
                element.payload = Payload::ArtifactReference {
                    content: content.clone(),
                    referenced_artifact: referenced_artifact.clone(),
                };
                let rule = format!("{}2ArtifactReference", source.kind.name());
                self.emit(&source.gid, element, &rule)?;
                Ok(())
            }
            ElementKind::Context => {
                let Payload::Context { statement, referenced_artifact } = &source.payload else {
                    unreachable!("context payload");
                };
                match referenced_artifact {
                    Some(artifact) => {
                        let mut element = self.convert(source, "ar", ElementKind::ArtifactReference);
                        element.payload = Payload::ArtifactReference {
                            content: MultiLangString::new(),
                            referenced_artifact: artifact.clone(),
                        };
                        self.emit(&source.gid, element, "Context2ArtifactReference")?;
                    }
                    None => {
                        // Statement-only context: accepted framing, so an
                        // axiomatic claim carrying the statement.
                        let mut element = self.convert(source, "c", ElementKind::Claim);
                        if element.description.is_empty() {
                            if let Some(statement) = statement {
                                element.description = MultiLangString::en(statement);
                            }
                        }
                        element.payload = Payload::Claim(ClaimData {
                            declaration: Declaration::Axiomatic,
                            ..Default::default()
                        });
                        self.emit(&source.gid, element, "Context2Claim")?;
                    }
                }
                Ok(())
            }
            ElementKind::Strategy | ElementKind::Argument => {
                let mut element = self.convert(source, "r", ElementKind::ArgumentReasoning);
                if let Payload::Strategy { content, .. } | Payload::Reasoning { content } =
                    &source.payload
                {
                    element.payload = Payload::Reasoning {
                        content: content.clone(),
                    };
                }
                let rule = format!("{}2ArgumentReasoning", source.kind.name());
                self.emit(&source.gid, element, &rule)?;
                Ok(())
            }
            other => Err(Error::InvalidArgument(format!(
                "no transformation rule for {other}"
            ))),
        }
    }

    fn emit_claim(&mut self, source: &Element, data: ClaimData, rule: &str) -> Result<()> {
        let mut element = self.convert(source, "c", ElementKind::Claim);
        element.payload = Payload::Claim(data);
        self.emit(&source.gid, element, rule)?;
        Ok(())
    }

    fn map_edges(&mut self, scope: &[Gid]) -> Result<()> {
        // Strategy/argument collapse bookkeeping. Per-key vectors fill in
        // document order; iteration below always runs over document-ordered
        // lists, never over the maps, to keep output deterministic.
        let mut strategy_in: HashMap<&Gid, Vec<&Element>> = HashMap::new();
        let mut strategy_out: HashMap<&Gid, Vec<&Element>> = HashMap::new();
        let mut supports_by_claim: HashMap<&Gid, Vec<&Element>> = HashMap::new();
        let mut subclaims_by_claim: HashMap<&Gid, Vec<&Element>> = HashMap::new();
        let mut all_supports: Vec<&Element> = Vec::new();
        let mut all_subclaims: Vec<&Element> = Vec::new();
        let mut strategies: Vec<&Element> = Vec::new();
        let mut arguments: Vec<&Element> = Vec::new();

        for gid in scope {
            let element = self.doc.expect(gid)?;
            match element.kind {
                ElementKind::Strategy => strategies.push(element),
                ElementKind::Argument => arguments.push(element),
                ElementKind::SupportedBy => {
                    let conn = element.connector().expect("connector payload");
                    let source_kind = self.doc.expect(&conn.source)?.kind;
                    let target_kind = self.doc.expect(&conn.target)?.kind;
                    match (source_kind, target_kind) {
                        (_, ElementKind::Strategy) => {
                            strategy_in.entry(&conn.target).or_default().push(element);
                        }
                        (ElementKind::Strategy, _) => {
                            strategy_out.entry(&conn.source).or_default().push(element);
                        }
                        (_, t) if t.is_artifact_reference_like() => {
                            // Goal-to-solution: an evidence edge, flipped.
                            let mut out = self.convert(element, "e", ElementKind::AssertedEvidence);
                            out.payload = Payload::Relationship(RelationshipData {
                                sources: vec![conn.target.clone()],
                                targets: vec![conn.source.clone()],
                                ..Default::default()
                            });
                            self.emit(&element.gid, out, "SupportedBy2AssertedEvidence")?;
                        }
                        _ => {
                            // Goal-to-goal: an inference edge, flipped.
                            let mut out = self.convert(element, "i", ElementKind::AssertedInference);
                            out.payload = Payload::Relationship(RelationshipData {
                                sources: vec![conn.target.clone()],
                                targets: vec![conn.source.clone()],
                                ..Default::default()
                            });
                            self.emit(&element.gid, out, "SupportedBy2AssertedInference")?;
                        }
                    }
                }
                ElementKind::InContextOf => {
                    let conn = element.connector().expect("connector payload");
                    let mut out = self.convert(element, "x", ElementKind::AssertedContext);
                    out.payload = Payload::Relationship(RelationshipData {
                        sources: vec![conn.target.clone()],
                        targets: vec![conn.source.clone()],
                        ..Default::default()
                    });
                    self.emit(&element.gid, out, "InContextOf2AssertedContext")?;
                }
                ElementKind::IsEvidenceFor => {
                    let rel = element.relationship().expect("relationship payload");
                    let mut out = self.convert(element, "e", ElementKind::AssertedEvidence);
                    out.payload = Payload::Relationship(RelationshipData {
                        sources: rel.sources.clone(),
                        targets: rel.targets.clone(),
                        is_counter: rel.is_counter,
                        ..Default::default()
                    });
                    self.emit(&element.gid, out, "IsEvidenceFor2AssertedEvidence")?;
                }
                ElementKind::Supports => {
                    let rel = element.relationship().expect("relationship payload");
                    for target in &rel.targets {
                        supports_by_claim.entry(target).or_default().push(element);
                    }
                    all_supports.push(element);
                }
                ElementKind::IsSubClaimOf => {
                    let rel = element.relationship().expect("relationship payload");
                    for target in &rel.targets {
                        subclaims_by_claim.entry(target).or_default().push(element);
                    }
                    all_subclaims.push(element);
                }
                _ => {}
            }
        }

        // GSN strategy collapse.
        for strategy in strategies {
            let incoming = strategy_in.remove(&strategy.gid).unwrap_or_default();
            let outgoing = strategy_out.remove(&strategy.gid).unwrap_or_default();
            if incoming.is_empty() {
                return Err(Error::StrategyDangling(strategy.gid.clone()));
            }
            let reasoning_gid = self.gid_map[&strategy.gid].clone();
            if outgoing.is_empty() {
                self.warnings.push(format!(
                    "strategy '{}' has no supporting goals; reasoning created without an inference",
                    strategy.gid
                ));
                for conn in incoming {
                    self.trace.push(TraceLink {
                        source_gid: conn.gid.clone(),
                        result_gid: reasoning_gid.clone(),
                        rule: "SupportedBy2MergedInference".to_string(),
                    });
                }
                continue;
            }
            let sources: Vec<Gid> = outgoing
                .iter()
                .map(|c| c.connector().expect("connector").target.clone())
                .collect();
            let targets: Vec<Gid> = incoming
                .iter()
                .map(|c| c.connector().expect("connector").source.clone())
                .collect();
            let mut inference = Element::new(
                self.derived(&strategy.gid, "i"),
                ElementKind::AssertedInference,
            );
            inference.owner = strategy.owner.clone();
            inference.is_abstract = strategy.is_abstract;
            inference.payload = Payload::Relationship(RelationshipData {
                sources,
                targets,
                reasoning: Some(reasoning_gid.clone()),
                ..Default::default()
            });
            let inference_gid = self.out.insert_unchecked(inference)?;
            self.trace.push(TraceLink {
                source_gid: strategy.gid.clone(),
                result_gid: inference_gid.clone(),
                rule: "Strategy2AssertedInference".to_string(),
            });
            for conn in incoming.iter().chain(&outgoing) {
                self.gid_map.insert(conn.gid.clone(), inference_gid.clone());
                self.trace.push(TraceLink {
                    source_gid: conn.gid.clone(),
                    result_gid: inference_gid.clone(),
                    rule: "SupportedBy2MergedInference".to_string(),
                });
            }
        }

        // CAE argument collapse: the first argument supporting a claim
        // (document order of the supports edges) absorbs the claim's
        // sub-claim edges into one merged inference; further arguments on
        // the same claim keep their reasoning and draw a warning.
        let mut claimed_arguments: HashMap<&Gid, &Gid> = HashMap::new();
        for edge in &all_supports {
            let rel = edge.relationship().expect("relationship");
            let argument = rel.sources.first().expect("supports source");
            for claim in &rel.targets {
                if let Some(first) = claimed_arguments.get(claim) {
                    if *first != argument {
                        self.warnings.push(format!(
                            "claim '{claim}' has multiple supporting arguments; '{argument}' keeps its reasoning without a merged inference",
                        ));
                    }
                } else {
                    claimed_arguments.insert(claim, argument);
                }
            }
        }
        let mut consumed: std::collections::HashSet<Gid> = std::collections::HashSet::new();
        for argument in arguments {
            let supports: Vec<&Element> = all_supports
                .iter()
                .filter(|e| {
                    e.relationship()
                        .map(|r| r.sources.contains(&argument.gid))
                        .unwrap_or(false)
                })
                .copied()
                .collect();
            if supports.is_empty() {
                return Err(Error::ArgumentDangling(argument.gid.clone()));
            }
            let reasoning_gid = self.gid_map[&argument.gid].clone();
            let mut emitted_inference = false;
            for edge in supports {
                let rel = edge.relationship().expect("relationship");
                for claim in &rel.targets {
                    let elected = claimed_arguments.get(claim) == Some(&&argument.gid);
                    let sub_edges: Vec<&Element> = if elected {
                        subclaims_by_claim.remove(claim).unwrap_or_default()
                    } else {
                        Vec::new()
                    };
                    if sub_edges.is_empty() {
                        if elected {
                            self.warnings.push(format!(
                                "argument '{}' supports '{claim}' which has no sub-claims; reasoning created without an inference",
                                argument.gid
                            ));
                        }
                        self.trace.push(TraceLink {
                            source_gid: edge.gid.clone(),
                            result_gid: reasoning_gid.clone(),
                            rule: "Supports2MergedInference".to_string(),
                        });
                        continue;
                    }
                    let sources: Vec<Gid> = sub_edges
                        .iter()
                        .flat_map(|e| e.relationship().expect("relationship").sources.clone())
                        .collect();
                    let mut inference = Element::new(
                        self.derived(&argument.gid, "i"),
                        ElementKind::AssertedInference,
                    );
                    inference.owner = argument.owner.clone();
                    inference.is_abstract = argument.is_abstract;
                    inference.payload = Payload::Relationship(RelationshipData {
                        sources,
                        targets: vec![(*claim).clone()],
                        reasoning: Some(reasoning_gid.clone()),
                        ..Default::default()
                    });
                    let inference_gid = self.out.insert_unchecked(inference)?;
                    if !emitted_inference {
                        self.trace.push(TraceLink {
                            source_gid: argument.gid.clone(),
                            result_gid: inference_gid.clone(),
                            rule: "Argument2AssertedInference".to_string(),
                        });
                        emitted_inference = true;
                    }
                    self.trace.push(TraceLink {
                        source_gid: edge.gid.clone(),
                        result_gid: inference_gid.clone(),
                        rule: "Supports2MergedInference".to_string(),
                    });
                    for sub in sub_edges {
                        consumed.insert(sub.gid.clone());
                        self.gid_map.insert(sub.gid.clone(), inference_gid.clone());
                        self.trace.push(TraceLink {
                            source_gid: sub.gid.clone(),
                            result_gid: inference_gid.clone(),
                            rule: "IsSubClaimOf2MergedInference".to_string(),
                        });
                    }
                }
            }
        }

        // Remaining sub-claim edges have no argument: plain inferences.
        for element in all_subclaims {
            if !consumed.insert(element.gid.clone()) {
                continue;
            }
            let rel = element.relationship().expect("relationship payload");
            let mut out = self.convert(element, "i", ElementKind::AssertedInference);
            out.payload = Payload::Relationship(RelationshipData {
                sources: rel.sources.clone(),
                targets: rel.targets.clone(),
                is_counter: rel.is_counter,
                ..Default::default()
            });
            self.emit(&element.gid, out, "IsSubClaimOf2AssertedInference")?;
        }
        Ok(())
    }

    /// Rewrites references in every output element through the gid map;
    /// gids outside the map (references leaving the scope) are kept.
    fn remap_all(&mut self) {
        let map = self.gid_map.clone();
        let detach: Option<Vec<Gid>> = if self.detach_root {
            Some(
                self.out
                    .iter()
                    .filter(|e| e.owner.as_ref().map(|o| !map.contains_key(o)).unwrap_or(false))
                    .map(|e| e.gid.clone())
                    .collect(),
            )
        } else {
            None
        };
        let gids: Vec<Gid> = self.out.gids().cloned().collect();
        for gid in gids {
            if let Some(element) = self.out.get_mut(&gid) {
                element.remap_references(&|g: &Gid| map.get(g).cloned());
            }
        }
        if let Some(detached) = detach {
            for gid in detached {
                if let Some(element) = self.out.get_mut(&gid) {
                    element.owner = None;
                }
            }
        }
    }
}
