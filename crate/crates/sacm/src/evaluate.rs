//! Argument status evaluation: bottom-up boolean propagation of claim
//! support over the inference/evidence graph, given the validity of the
//! referenced evidence.
//!
//! The status algebra is deliberately small: a claim is supported when every
//! non-counter incoming edge holds, a firing counter edge defeats it, and
//! the precedence is defeated > unsupported > supported. Unknown evidence is
//! treated as invalid (fail-safe) with a warning.

use std::collections::{BTreeMap, HashMap, HashSet};

use crate::document::ModelDocument;
use crate::element::Payload;
use crate::error::{Error, Result};
use crate::gid::Gid;
use crate::kind::{Declaration, ElementKind};
use crate::validate::{self, Diagnostic};

/// Evaluated status of a claim.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClaimStatus {
    Supported,
    Unsupported,
    Assumed,
    Axiomatic,
    Defeated,
}

impl ClaimStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            ClaimStatus::Supported => "supported",
            ClaimStatus::Unsupported => "unsupported",
            ClaimStatus::Assumed => "assumed",
            ClaimStatus::Axiomatic => "axiomatic",
            ClaimStatus::Defeated => "defeated",
        }
    }

    /// Whether the claim counts as holding for propagation purposes.
    pub fn holds(self) -> bool {
        matches!(
            self,
            ClaimStatus::Supported | ClaimStatus::Assumed | ClaimStatus::Axiomatic
        )
    }
}

impl std::fmt::Display for ClaimStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Validity of evidence, keyed by artifact reference gid.
pub type EvidenceMap = BTreeMap<Gid, bool>;

/// Parses an evidence file: a JSON object mapping gids to booleans.
pub fn parse_evidence_json(text: &str) -> Result<EvidenceMap> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(|e| Error::ParseError {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let object = value.as_object().ok_or_else(|| Error::SchemaError {
        path: "$".into(),
        message: "evidence file must be a JSON object of gid to boolean".into(),
    })?;
    let mut map = EvidenceMap::new();
    for (key, val) in object {
        let valid = val.as_bool().ok_or_else(|| Error::SchemaError {
            path: format!("$.{key}"),
            message: "evidence validity must be a boolean".into(),
        })?;
        map.insert(Gid::new(key), valid);
    }
    Ok(map)
}

/// Result of evaluating a document.
#[derive(Debug, Clone, PartialEq)]
pub struct Evaluation {
    /// Status per claim, keyed by gid (sorted).
    pub statuses: BTreeMap<Gid, ClaimStatus>,
    /// Non-fatal findings, e.g. artifact references missing from the
    /// evidence map.
    pub warnings: Vec<String>,
}

/// One semantic support edge: `sources` support (or, for counters,
/// attack) the targets it is indexed under, bottom-up.
struct SupportEdge {
    sources: Vec<Gid>,
    is_counter: bool,
    is_evidence: bool,
}

struct Evaluator<'a> {
    doc: &'a ModelDocument,
    evidence: &'a EvidenceMap,
    /// Semantic edges indexed by target gid.
    incoming: HashMap<Gid, Vec<usize>>,
    edges: Vec<SupportEdge>,
    memo: HashMap<Gid, ClaimStatus>,
    in_progress: HashSet<Gid>,
    warnings: Vec<String>,
}

/// Evaluates every claim of the document against the evidence map.
///
/// Requires an error-free document and resolvable citation chains; GSN
/// connectors are interpreted in their drawing direction (the target
/// supports the source), all other edges bottom-up as stored.
pub fn evaluate(doc: &ModelDocument, evidence: &EvidenceMap) -> Result<Evaluation> {
    let diags = validate::check(doc);
    if !validate::is_error_free(&diags) {
        let errors: Vec<Diagnostic> = diags
            .into_iter()
            .filter(|d| d.severity == validate::Severity::Error)
            .collect();
        return Err(Error::PreconditionFailed(errors));
    }
    // Citation chains must resolve before statuses can be derived.
    for element in doc.iter() {
        if element.kind.is_claim_like()
            && element.claim_data().map(|c| c.declaration) == Some(Declaration::AsCited)
        {
            if let Err(err) = doc.resolve_citation(&element.gid) {
                let gids = match &err {
                    Error::CitationCycle(cycle) => cycle.clone(),
                    _ => vec![element.gid.clone()],
                };
                return Err(Error::PreconditionFailed(vec![Diagnostic {
                    rule_id: "SACM-W4",
                    severity: validate::Severity::Error,
                    element_gids: gids,
                    message: format!("citation chain of '{}' does not resolve: {err}", element.gid),
                }]));
            }
        }
    }

    let mut evaluator = Evaluator {
        doc,
        evidence,
        incoming: HashMap::new(),
        edges: Vec::new(),
        memo: HashMap::new(),
        in_progress: HashSet::new(),
        warnings: Vec::new(),
    };
    evaluator.collect_edges();
    let mut statuses = BTreeMap::new();
    let claims: Vec<Gid> = doc
        .iter()
        .filter(|e| e.kind.is_claim_like())
        .map(|e| e.gid.clone())
        .collect();
    for gid in claims {
        let status = evaluator.status_of(&gid);
        statuses.insert(gid, status);
    }
    let mut warnings = evaluator.warnings;
    warnings.sort();
    warnings.dedup();
    Ok(Evaluation { statuses, warnings })
}

/// Claims that support nothing else: the top-level claims of the argument.
pub fn root_claims(doc: &ModelDocument) -> Vec<Gid> {
    let mut supporting: HashSet<Gid> = HashSet::new();
    for element in doc.iter() {
        if !(element.kind.is_inference_edge() || element.kind.is_evidence_edge()) {
            continue;
        }
        let Some(edge) = element.edge() else { continue };
        let semantic_sources = if element.kind.family() == crate::kind::Family::Connector {
            edge.targets
        } else {
            edge.sources
        };
        supporting.extend(semantic_sources.iter().cloned());
    }
    doc.iter()
        .filter(|e| e.kind.is_claim_like() && !supporting.contains(&e.gid))
        .map(|e| e.gid.clone())
        .collect()
}

impl<'a> Evaluator<'a> {
    fn collect_edges(&mut self) {
        for element in self.doc.iter() {
            let is_inference = element.kind.is_inference_edge();
            let is_evidence = element.kind.is_evidence_edge();
            if !is_inference && !is_evidence {
                continue;
            }
            // CAE supports edges are explanatory: the argument node names
            // the reasoning, truth flows through the sub-claim edges.
            if element.kind == ElementKind::Supports {
                continue;
            }
            let Some(edge) = element.edge() else { continue };
            // GSN connectors store the drawing direction (source is the
            // supported element); flip into the bottom-up direction.
            let (sources, targets) = if element.kind.family() == crate::kind::Family::Connector {
                (edge.targets.to_vec(), edge.sources.to_vec())
            } else {
                (edge.sources.to_vec(), edge.targets.to_vec())
            };
            let index = self.edges.len();
            for target in &targets {
                self.incoming.entry(target.clone()).or_default().push(index);
            }
            self.edges.push(SupportEdge {
                sources,
                is_counter: edge.is_counter,
                is_evidence,
            });
        }
    }

    /// Status of a claim-like element (also used for strategies, whose
    /// transient status never leaves the evaluator).
    fn status_of(&mut self, gid: &Gid) -> ClaimStatus {
        if let Some(status) = self.memo.get(gid) {
            return *status;
        }
        if !self.in_progress.insert(gid.clone()) {
            // Inference cycle (reported as a warning by validation):
            // evaluate conservatively.
            return ClaimStatus::Unsupported;
        }
        let status = self.compute_status(gid);
        self.in_progress.remove(gid);
        self.memo.insert(gid.clone(), status);
        status
    }

    fn compute_status(&mut self, gid: &Gid) -> ClaimStatus {
        let Some(element) = self.doc.get(gid) else {
            return ClaimStatus::Unsupported;
        };
        let base = match &element.payload {
            Payload::Strategy { undeveloped, .. } => {
                if *undeveloped {
                    ClaimStatus::Unsupported
                } else {
                    self.support_from_edges(gid)
                }
            }
            Payload::Goal { undeveloped, claim, .. } => {
                if *undeveloped && claim.declaration == Declaration::Asserted {
                    ClaimStatus::Unsupported
                } else {
                    self.declared_status(gid, claim.declaration)
                }
            }
            _ => match element.claim_data() {
                Some(claim) => self.declared_status(gid, claim.declaration),
                None => return ClaimStatus::Unsupported,
            },
        };
        // A firing counter edge defeats the element whatever its base
        // status was.
        if self.any_counter_fires(gid) {
            return ClaimStatus::Defeated;
        }
        base
    }

    fn declared_status(&mut self, gid: &Gid, declaration: Declaration) -> ClaimStatus {
        match declaration {
            Declaration::Axiomatic => ClaimStatus::Axiomatic,
            Declaration::Assumed => ClaimStatus::Assumed,
            Declaration::NeedsSupport => ClaimStatus::Unsupported,
            Declaration::Defeated => ClaimStatus::Defeated,
            Declaration::AsCited => match self.doc.resolve_citation(gid) {
                Ok(resolution) if resolution.terminal != *gid => {
                    self.status_of(&resolution.terminal)
                }
                _ => ClaimStatus::Unsupported,
            },
            Declaration::Asserted => self.support_from_edges(gid),
        }
    }

    /// Supported iff every non-counter incoming edge has all sources
    /// holding; an element with no incoming edges is vacuously supported
    /// (declaring unsupported leaves is the author's duty via needsSupport
    /// or the undeveloped flag).
    fn support_from_edges(&mut self, gid: &Gid) -> ClaimStatus {
        let edge_indexes = self.incoming.get(gid).cloned().unwrap_or_default();
        for index in edge_indexes {
            if self.edges[index].is_counter {
                continue;
            }
            if !self.edge_holds(index) {
                return ClaimStatus::Unsupported;
            }
        }
        ClaimStatus::Supported
    }

    fn any_counter_fires(&mut self, gid: &Gid) -> bool {
        let edge_indexes = self.incoming.get(gid).cloned().unwrap_or_default();
        for index in edge_indexes {
            if self.edges[index].is_counter && self.edge_holds(index) {
                return true;
            }
        }
        false
    }

    /// An edge holds when all its sources hold: claims by status, artifact
    /// references by evidence validity, strategies recursively.
    fn edge_holds(&mut self, index: usize) -> bool {
        let sources = self.edges[index].sources.clone();
        let is_evidence = self.edges[index].is_evidence;
        for source in sources {
            let Some(element) = self.doc.get(&source) else {
                return false;
            };
            let holds = if element.kind.is_artifact_reference_like() {
                match self.evidence.get(&source) {
                    Some(valid) => *valid,
                    None => {
                        self.warnings.push(format!(
                            "unknown evidence: artifact reference '{source}' is not in the evidence map, treated as invalid"
                        ));
                        false
                    }
                }
            } else if element.kind.is_claim_like() || element.kind == ElementKind::Strategy {
                self.status_of(&source).holds()
            } else if is_evidence {
                // Evidence edges only carry artifact references; anything
                // else fails conservatively.
                false
            } else {
                // Inference from a non-claim (e.g. reasoning): no truth
                // contribution, conservatively false.
                false
            };
            if !holds {
                return false;
            }
        }
        true
    }
}
