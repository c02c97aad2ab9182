//! Independent brute-force status oracle.
//!
//! A direct recursive transcription of the status rules, written without
//! reference to the library's evaluator: claims are supported when every
//! non-counter incoming support edge has all sources holding, declaration
//! shortcuts apply first, citations inherit the terminal claim's status.
//! Only counter-free acyclic documents are supported, which is exactly what
//! the truth-table criterion covers.

use std::collections::BTreeMap;

use sacm::{Declaration, Element, ElementKind, EvidenceMap, Gid, ModelDocument, Notation, Payload};

use crate::fixtures;

/// Artifact-reference gids acting as evidence leaves.
pub fn evidence_leaves(doc: &ModelDocument) -> Vec<Gid> {
    doc.iter()
        .filter(|e| e.kind.is_artifact_reference_like())
        .map(|e| e.gid.clone())
        .collect()
}

/// Status of every claim, keyed by gid, as status names.
pub fn statuses(doc: &ModelDocument, evidence: &EvidenceMap) -> BTreeMap<Gid, &'static str> {
    doc.iter()
        .filter(|e| e.kind.is_claim_like())
        .map(|e| (e.gid.clone(), status_of(doc, evidence, &e.gid)))
        .collect()
}

fn status_of(doc: &ModelDocument, evidence: &EvidenceMap, gid: &Gid) -> &'static str {
    let element = doc.get(gid).expect("claim exists");
    if let Payload::Goal { undeveloped: true, claim, .. } = &element.payload {
        if claim.declaration == Declaration::Asserted {
            return "unsupported";
        }
    }
    match element.claim_data().expect("claim data").declaration {
        Declaration::Axiomatic => "axiomatic",
        Declaration::Assumed => "assumed",
        Declaration::NeedsSupport => "unsupported",
        Declaration::Defeated => "defeated",
        Declaration::AsCited => {
            // Follow the citation chain by hand.
            let mut current = gid.clone();
            loop {
                let e = doc.get(&current).expect("chain resolves");
                if !e.is_citation {
                    break status_of(doc, evidence, &current);
                }
                current = e.cited_element.clone().expect("cited element set");
            }
        }
        Declaration::Asserted => {
            if supported(doc, evidence, gid) {
                "supported"
            } else {
                "unsupported"
            }
        }
    }
}

/// Conjunction over every incoming support edge.
fn supported(doc: &ModelDocument, evidence: &EvidenceMap, gid: &Gid) -> bool {
    for element in doc.iter() {
        let Some((sources, targets)) = support_edge(element) else {
            continue;
        };
        if !targets.contains(gid) {
            continue;
        }
        for source in sources {
            if !source_holds(doc, evidence, &source) {
                return false;
            }
        }
    }
    true
}

/// Semantic (bottom-up) direction of one support edge, if the element is
/// one. GSN connectors store the drawing direction and flip here; explicit
/// argument-support edges carry no claim truth.
fn support_edge(element: &Element) -> Option<(Vec<Gid>, Vec<Gid>)> {
    if element.kind == ElementKind::Supports {
        return None;
    }
    if !(element.kind.is_inference_edge() || element.kind.is_evidence_edge()) {
        return None;
    }
    let edge = element.edge()?;
    if edge.is_counter {
        return None;
    }
    if element.kind == ElementKind::SupportedBy {
        Some((edge.targets.to_vec(), edge.sources.to_vec()))
    } else {
        Some((edge.sources.to_vec(), edge.targets.to_vec()))
    }
}

fn source_holds(doc: &ModelDocument, evidence: &EvidenceMap, gid: &Gid) -> bool {
    let element = doc.get(gid).expect("source exists");
    if element.kind.is_artifact_reference_like() {
        return evidence.get(gid).copied().unwrap_or(false);
    }
    if element.kind == ElementKind::Strategy {
        if let Payload::Strategy { undeveloped: true, .. } = element.payload {
            return false;
        }
        return supported(doc, evidence, gid);
    }
    matches!(
        status_of(doc, evidence, gid),
        "supported" | "assumed" | "axiomatic"
    )
}

/// The counter-free acyclic fixtures the truth-table criterion runs on.
pub fn evaluation_fixtures() -> Vec<(&'static str, ModelDocument)> {
    vec![
        ("three-claim-tree", three_claim_tree()),
        ("ten-leaf-tree", ten_leaf_tree()),
        ("etcs", fixtures::etcs()),
        ("r1-gsn", fixtures::r1_gsn()),
    ]
}

/// Root supported by two evidence-backed claims.
fn three_claim_tree() -> ModelDocument {
    let mut doc = ModelDocument::new(Notation::Sacm);
    let xp = doc.add_artifact_package(None, "XP", "e").unwrap();
    let a1 = doc.add_asset(&xp, ElementKind::Artifact, "report A").unwrap();
    let a2 = doc.add_asset(&xp, ElementKind::Artifact, "report B").unwrap();
    let ap = doc.add_argument_package(None, "AP", "a").unwrap();
    for claim in ["C1", "C2", "C3"] {
        doc.add_claim(&ap, claim, claim, "", Declaration::Asserted).unwrap();
    }
    let s1 = doc.add_artifact_reference(&ap, "S1", &a1).unwrap();
    let s2 = doc.add_artifact_reference(&ap, "S2", &a2).unwrap();
    doc.add_relationship(
        &ap,
        "I1",
        ElementKind::AssertedInference,
        &[Gid::new("C2"), Gid::new("C3")],
        &[Gid::new("C1")],
        false,
    )
    .unwrap();
    doc.add_relationship(&ap, "E1", ElementKind::AssertedEvidence, &[s1], &[Gid::new("C2")], false)
        .unwrap();
    doc.add_relationship(&ap, "E2", ElementKind::AssertedEvidence, &[s2], &[Gid::new("C3")], false)
        .unwrap();
    doc
}

/// Ten evidence leaves over three mid claims, with an axiomatic and an
/// assumed claim feeding the root as well.
fn ten_leaf_tree() -> ModelDocument {
    let mut doc = ModelDocument::new(Notation::Sacm);
    let xp = doc.add_artifact_package(None, "XP", "e").unwrap();
    let ap = doc.add_argument_package(None, "AP", "a").unwrap();
    doc.add_claim(&ap, "R", "R", "", Declaration::Asserted).unwrap();
    doc.add_claim(&ap, "AX", "AX", "", Declaration::Axiomatic).unwrap();
    doc.add_claim(&ap, "AS", "AS", "", Declaration::Assumed).unwrap();
    for mid in ["M1", "M2", "M3"] {
        doc.add_claim(&ap, mid, mid, "", Declaration::Asserted).unwrap();
    }
    doc.add_relationship(
        &ap,
        "I0",
        ElementKind::AssertedInference,
        &[Gid::new("M1"), Gid::new("M2"), Gid::new("M3"), Gid::new("AX"), Gid::new("AS")],
        &[Gid::new("R")],
        false,
    )
    .unwrap();
    let mut leaf = 0;
    let mut add_leaves = |doc: &mut ModelDocument, mid: &str, groups: &[usize]| {
        for (g, count) in groups.iter().enumerate() {
            let mut sources = Vec::new();
            for _ in 0..*count {
                leaf += 1;
                let asset = doc
                    .add_asset(&xp, ElementKind::Artifact, &format!("evidence {leaf}"))
                    .unwrap();
                let reference = doc
                    .add_artifact_reference(&Gid::new("AP"), &format!("L{leaf}"), &asset)
                    .unwrap();
                sources.push(reference);
            }
            doc.add_relationship(
                &Gid::new("AP"),
                &format!("E-{mid}-{g}"),
                ElementKind::AssertedEvidence,
                &sources,
                &[Gid::new(mid)],
                false,
            )
            .unwrap();
        }
    };
    // M1: two edges of two leaves; M2: one edge of three; M3: three edges
    // of one. Ten leaves in total.
    add_leaves(&mut doc, "M1", &[2, 2]);
    add_leaves(&mut doc, "M2", &[3]);
    add_leaves(&mut doc, "M3", &[1, 1, 1]);
    doc
}
