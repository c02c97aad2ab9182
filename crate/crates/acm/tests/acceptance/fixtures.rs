//! Fixture builders shared by the acceptance criteria.
//!
//! Everything is built through the public API with stable gids, so the
//! fixtures are deterministic and can be compared against committed sample
//! files byte for byte.

use sacm::{
    CaeConnector, CaeNode, Declaration, Element, ElementKind, Gid, GsnConnector, GsnNode,
    LangString, ModelDocument, MultiLangString, Notation, Payload, RelationshipData,
};

pub fn gid(s: &str) -> Gid {
    Gid::new(s)
}

/// Reference GSN fixture: one goal over a strategy with two sub-goals, two
/// solutions and one statement context.
pub fn r1_gsn() -> ModelDocument {
    let mut doc = ModelDocument::new(Notation::Gsn);
    let xp = doc.add_artifact_package(None, "XP", "Evidence").unwrap();
    doc.insert(
        Element::new("XA1", ElementKind::Artifact)
            .owned_by(xp.clone())
            .named("System test report A"),
    )
    .unwrap();
    doc.insert(
        Element::new("XA2", ElementKind::Artifact)
            .owned_by(xp.clone())
            .named("System test report B"),
    )
    .unwrap();
    doc.set_external_resource(&gid("XA1"), "reports/test-a.pdf").unwrap();
    doc.set_external_resource(&gid("XA2"), "reports/test-b.pdf").unwrap();
    let module = doc.add_gsn_module(None, "M1", "Control system safety").unwrap();
    doc.build_goal_structure(
        &module,
        &[
            GsnNode::goal("G1", "Control system is acceptably safe"),
            GsnNode::strategy("S1", "Argument over all identified hazards"),
            GsnNode::goal("Ga", "Hazard A is mitigated"),
            GsnNode::goal("Gb", "Hazard B is mitigated"),
            GsnNode::solution("SnA", "System test report A", &gid("XA1")),
            GsnNode::solution("SnB", "System test report B", &gid("XA2")),
            GsnNode::context_statement("C1", "Operating context: mainline passenger service"),
        ],
        &[
            GsnConnector::supported_by("SB1", "G1", "S1"),
            GsnConnector::supported_by("SB2", "S1", "Ga"),
            GsnConnector::supported_by("SB3", "S1", "Gb"),
            GsnConnector::supported_by("SB4", "Ga", "SnA"),
            GsnConnector::supported_by("SB5", "Gb", "SnB"),
            GsnConnector::in_context_of("IC1", "G1", "C1"),
        ],
    )
    .unwrap();
    doc
}

/// Reference CAE fixture: top claim supported by an argument over two
/// sub-claims, each resting on evidence, plus an assumption.
pub fn r2_cae() -> ModelDocument {
    let mut doc = ModelDocument::new(Notation::Cae);
    let xp = doc.add_artifact_package(None, "XP", "Evidence").unwrap();
    doc.insert(
        Element::new("XA1", ElementKind::Artifact)
            .owned_by(xp.clone())
            .named("Primary brake analysis"),
    )
    .unwrap();
    doc.insert(
        Element::new("XA2", ElementKind::Artifact)
            .owned_by(xp.clone())
            .named("Backup brake analysis"),
    )
    .unwrap();
    let module = doc.add_cae_module(None, "CM1", "Braking system").unwrap();
    doc.build_cae_structure(
        &module,
        &[
            CaeNode::claim("TC", "Braking system is acceptably safe"),
            CaeNode::argument("Arg", "Argument over brake subsystems"),
            CaeNode::claim("SC1", "Primary brakes perform within limits"),
            CaeNode::claim("SC2", "Backup brakes engage on demand"),
            CaeNode::assumption("CA1", "Brake pads are maintained on schedule"),
            CaeNode::evidence("Ev1", "Primary analysis", &gid("XA1")),
            CaeNode::evidence("Ev2", "Backup analysis", &gid("XA2")),
        ],
        &[
            CaeConnector::supports("Sp1", "Arg", "TC"),
            CaeConnector::is_sub_claim_of("Sub1", "SC1", "TC"),
            CaeConnector::is_sub_claim_of("Sub2", "SC2", "TC"),
            CaeConnector::is_evidence_for("Ef1", "Ev1", "SC1"),
            CaeConnector::is_evidence_for("Ef2", "Ev2", "SC2"),
        ],
    )
    .unwrap();
    doc
}

/// GSN fixture exercising each declaration equivalence: a plain goal, an
/// undeveloped goal, an assumption, a justification, an away goal citing
/// into another module and an uninstantiated goal.
pub fn declaration_gsn() -> ModelDocument {
    let mut doc = ModelDocument::new(Notation::Gsn);
    let other = doc.add_gsn_module(None, "MO", "Referenced module").unwrap();
    doc.build_goal_structure(
        &other,
        &[GsnNode::goal("GT", "Referenced component is safe")],
        &[],
    )
    .unwrap();
    let module = doc.add_gsn_module(None, "MD", "Declarations").unwrap();
    doc.build_goal_structure(
        &module,
        &[
            GsnNode::goal("G1", "Plain asserted goal"),
            GsnNode::goal("G2", "Undeveloped goal").undeveloped(),
            GsnNode::assumption("A1", "All hazards have been identified"),
            GsnNode::justification("J1", "Tolerable risk target per railway practice"),
            GsnNode::away_goal("AG1", "Referenced component is safe", &gid("MO"), &gid("GT")),
            GsnNode::goal("G3", "Uninstantiated goal").uninstantiated(),
        ],
        &[],
    )
    .unwrap();
    doc
}

/// Train control integration fixture: two component assurance case
/// packages exposing their top claims through argument package interfaces,
/// integrated by a binding package whose claims cite through the
/// interfaces.
pub fn etcs() -> ModelDocument {
    let mut doc = ModelDocument::new(Notation::Sacm);

    // On-board component.
    let acp_ob = doc
        .insert(
            Element::new("ACP-OB", ElementKind::AssuranceCasePackage).named("On-Board ACP"),
        )
        .unwrap();
    {
        let e = doc.get_mut(&acp_ob).unwrap();
        e.description = MultiLangString::en("Assurance case for the on-board component");
        e.description.set(LangString::new(
            "de",
            "Sicherheitsnachweis der fahrzeugseitigen Komponente",
        ));
    }
    let xp_ob = doc.add_artifact_package(Some(&acp_ob), "XP-OB", "On-board evidence").unwrap();
    doc.insert(
        Element::new("XA-OB", ElementKind::Artifact)
            .owned_by(xp_ob.clone())
            .named("On-board test report"),
    )
    .unwrap();
    doc.set_external_resource(&gid("XA-OB"), "onboard-tests.pdf").unwrap();
    let tp_ob = doc.add_terminology_package(Some(&acp_ob), "TP-OB", "On-board vocabulary").unwrap();
    doc.define_term(&tp_ob, "T-OB", "hazard", Some("hazardLog.model"), None).unwrap();
    {
        let term = doc.get_mut(&gid("T-OB")).unwrap();
        term.description = MultiLangString::en("hazard");
        term.description.set(LangString::new("de", "Gefährdung"));
    }
    let ap1 = doc.add_argument_package(Some(&acp_ob), "AP1", "On-board argument").unwrap();
    doc.add_claim(&ap1, "G2", "G2", "On-board component is acceptably safe", Declaration::Asserted)
        .unwrap();
    doc.add_artifact_reference(&ap1, "AR-OB", &gid("XA-OB")).unwrap();
    doc.add_relationship(
        &ap1,
        "EV-OB",
        ElementKind::AssertedEvidence,
        &[gid("AR-OB")],
        &[gid("G2")],
        false,
    )
    .unwrap();
    let api1 = doc.add_argument_package_interface(&ap1, "API1", "On-board interface").unwrap();
    doc.add_claim(&api1, "G2-API1", "G2", "", Declaration::Asserted).unwrap();
    doc.cite(&gid("G2-API1"), &gid("G2")).unwrap();

    // Track-side component.
    let acp_ts = doc
        .insert(
            Element::new("ACP-TS", ElementKind::AssuranceCasePackage).named("Track-Side ACP"),
        )
        .unwrap();
    let xp_ts = doc.add_artifact_package(Some(&acp_ts), "XP-TS", "Track-side evidence").unwrap();
    doc.insert(
        Element::new("XA-TS", ElementKind::Artifact)
            .owned_by(xp_ts.clone())
            .named("Track-side test report"),
    )
    .unwrap();
    doc.set_external_resource(&gid("XA-TS"), "trackside-tests.pdf").unwrap();
    let ap2 = doc.add_argument_package(Some(&acp_ts), "AP2", "Track-side argument").unwrap();
    doc.add_claim(&ap2, "G3", "G3", "Track-side component is acceptably safe", Declaration::Asserted)
        .unwrap();
    doc.add_artifact_reference(&ap2, "AR-TS", &gid("XA-TS")).unwrap();
    doc.add_relationship(
        &ap2,
        "EV-TS",
        ElementKind::AssertedEvidence,
        &[gid("AR-TS")],
        &[gid("G3")],
        false,
    )
    .unwrap();
    let api2 = doc.add_argument_package_interface(&ap2, "API2", "Track-side interface").unwrap();
    doc.add_claim(&api2, "G3-API2", "G3", "", Declaration::Asserted).unwrap();
    doc.cite(&gid("G3-API2"), &gid("G3")).unwrap();

    // Integration.
    let acp_int = doc
        .insert(
            Element::new("ACP-INT", ElementKind::AssuranceCasePackage).named("Integration ACP"),
        )
        .unwrap();
    let acpb = doc
        .insert(
            Element::new("ACPB", ElementKind::AssuranceCasePackageBinding)
                .owned_by(acp_int.clone())
                .named("Integration ACPB")
                .with_payload(Payload::Binding {
                    participants: vec![acp_ob.clone(), acp_ts.clone()],
                }),
        )
        .unwrap();
    let apb1 = doc
        .add_argument_package_binding(
            Some(&acpb),
            "APB1",
            "Integration argument binding",
            &[api1.clone(), api2.clone()],
        )
        .unwrap();
    doc.add_claim(&apb1, "G1", "G1", "Train control system is acceptably safe", Declaration::Asserted)
        .unwrap();
    doc.add_claim(&apb1, "G2-APB1", "G2", "", Declaration::Asserted).unwrap();
    doc.cite(&gid("G2-APB1"), &gid("G2-API1")).unwrap();
    doc.add_claim(&apb1, "G3-APB1", "G3", "", Declaration::Asserted).unwrap();
    doc.cite(&gid("G3-APB1"), &gid("G3-API2")).unwrap();
    doc.add_relationship(
        &apb1,
        "INF1",
        ElementKind::AssertedInference,
        &[gid("G2-APB1"), gid("G3-APB1")],
        &[gid("G1")],
        false,
    )
    .unwrap();
    doc
}

/// GSN pattern with a role in the top goal and a many-decorated connector
/// below the strategy.
pub fn pattern_gsn() -> ModelDocument {
    let mut doc = ModelDocument::new(Notation::Gsn);
    let module = doc.add_gsn_module(None, "PM", "Function safety pattern").unwrap();
    doc.get_mut(&module).unwrap().is_abstract = true;
    doc.build_goal_structure(
        &module,
        &[
            GsnNode::goal("G1", "{System X} is safe").uninstantiated(),
            GsnNode::strategy("S1", "Argument over all safety-related functions of {System X}")
                .uninstantiated(),
            GsnNode::goal("G2", "{Function Y} is implemented safely").uninstantiated(),
        ],
        &[
            GsnConnector::supported_by("SB1", "G1", "S1"),
            GsnConnector::supported_by("SB2", "S1", "G2")
                .many("n = number of safety-related functions"),
        ],
    )
    .unwrap();
    doc
}

pub fn pattern_bindings_json() -> String {
    r#"{
  "connectors": {
    "SB2": {
      "count": 2
    }
  },
  "roles": {
    "Function Y": [
      "Braking",
      "Door Control"
    ],
    "System X": [
      "Trainset 7"
    ]
  }
}
"#
    .to_string()
}

pub fn etcs_evidence_json(ob_valid: bool, ts_valid: bool) -> String {
    format!(
        "{{\n  \"AR-OB\": {ob_valid},\n  \"AR-TS\": {ts_valid}\n}}\n"
    )
}

// ---------------------------------------------------------------------------
// Seeded rule-violation corpus: each document violates exactly one rule.
// ---------------------------------------------------------------------------

fn sacm_claim(doc: &mut ModelDocument, pkg: &str, gid_: &str) {
    doc.add_claim(&gid(pkg), gid_, gid_, "", Declaration::Asserted).unwrap();
}

fn raw_relationship(
    doc: &mut ModelDocument,
    pkg: &str,
    gid_: &str,
    kind: ElementKind,
    sources: &[&str],
    targets: &[&str],
    is_counter: bool,
) {
    doc.insert(
        Element::new(gid_, kind)
            .owned_by(gid(pkg))
            .with_payload(Payload::Relationship(RelationshipData {
                sources: sources.iter().map(|s| gid(s)).collect(),
                targets: targets.iter().map(|s| gid(s)).collect(),
                is_counter,
                ..Default::default()
            })),
    )
    .unwrap();
}

/// The 15 seeded fixtures, paired with the rule each one violates.
pub fn seeded_corpus() -> Vec<(&'static str, ModelDocument)> {
    let mut corpus = Vec::new();

    // GSN-E1: solution supporting a strategy.
    let mut doc = ModelDocument::new(Notation::Gsn);
    let xp = doc.add_artifact_package(None, "XP", "Evidence").unwrap();
    doc.insert(Element::new("XA", ElementKind::Artifact).owned_by(xp).named("r")).unwrap();
    let m = doc.add_gsn_module(None, "M", "m").unwrap();
    doc.build_goal_structure(
        &m,
        &[
            GsnNode::strategy("S1", "strategy"),
            GsnNode::solution("Sn1", "solution", &gid("XA")),
        ],
        &[],
    )
    .unwrap();
    doc.insert(
        Element::new("SB1", ElementKind::SupportedBy)
            .owned_by(gid("M"))
            .with_payload(Payload::Connector(sacm::ConnectorData::new(gid("Sn1"), gid("S1")))),
    )
    .unwrap();
    corpus.push(("GSN-E1", doc));

    // GSN-E2: in-context-of targeting a goal.
    let mut doc = ModelDocument::new(Notation::Gsn);
    let m = doc.add_gsn_module(None, "M", "m").unwrap();
    doc.build_goal_structure(
        &m,
        &[GsnNode::goal("G1", "a"), GsnNode::goal("G2", "b")],
        &[],
    )
    .unwrap();
    doc.insert(
        Element::new("IC1", ElementKind::InContextOf)
            .owned_by(gid("M"))
            .with_payload(Payload::Connector(sacm::ConnectorData::new(gid("G1"), gid("G2")))),
    )
    .unwrap();
    corpus.push(("GSN-E2", doc));

    // GSN-E3: undeveloped goal with a supporting connector.
    let mut doc = ModelDocument::new(Notation::Gsn);
    let m = doc.add_gsn_module(None, "M", "m").unwrap();
    doc.build_goal_structure(
        &m,
        &[
            GsnNode::goal("G1", "top").undeveloped(),
            GsnNode::goal("G2", "sub"),
        ],
        &[GsnConnector::supported_by("SB1", "G1", "G2")],
    )
    .unwrap();
    corpus.push(("GSN-E3", doc));

    // SACM-E1: evidence edge with a claim source.
    let mut doc = ModelDocument::new(Notation::Sacm);
    doc.add_argument_package(None, "AP", "a").unwrap();
    sacm_claim(&mut doc, "AP", "C1");
    sacm_claim(&mut doc, "AP", "C2");
    raw_relationship(&mut doc, "AP", "E1", ElementKind::AssertedEvidence, &["C2"], &["C1"], false);
    corpus.push(("SACM-E1", doc));

    // SACM-E2: dangling meta-claim reference.
    let mut doc = ModelDocument::new(Notation::Sacm);
    doc.add_argument_package(None, "AP", "a").unwrap();
    sacm_claim(&mut doc, "AP", "C1");
    doc.get_mut(&gid("C1"))
        .unwrap()
        .claim_data_mut()
        .unwrap()
        .meta_claims
        .push(gid("GHOST"));
    corpus.push(("SACM-E2", doc));

    // SACM-W3: citation without a cited element.
    let mut doc = ModelDocument::new(Notation::Sacm);
    doc.add_argument_package(None, "AP", "a").unwrap();
    sacm_claim(&mut doc, "AP", "C1");
    doc.get_mut(&gid("C1")).unwrap().is_citation = true;
    corpus.push(("SACM-W3", doc));

    // SACM-W4: citation cycle between two claims.
    let mut doc = ModelDocument::new(Notation::Sacm);
    doc.add_argument_package(None, "AP", "a").unwrap();
    sacm_claim(&mut doc, "AP", "CA");
    sacm_claim(&mut doc, "AP", "CB");
    doc.cite(&gid("CA"), &gid("CB")).unwrap();
    doc.cite(&gid("CB"), &gid("CA")).unwrap();
    corpus.push(("SACM-W4", doc));

    // SACM-W5: inference cycle.
    let mut doc = ModelDocument::new(Notation::Sacm);
    doc.add_argument_package(None, "AP", "a").unwrap();
    sacm_claim(&mut doc, "AP", "C1");
    sacm_claim(&mut doc, "AP", "C2");
    raw_relationship(&mut doc, "AP", "R1", ElementKind::AssertedInference, &["C1"], &["C2"], false);
    raw_relationship(&mut doc, "AP", "R2", ElementKind::AssertedInference, &["C2"], &["C1"], false);
    corpus.push(("SACM-W5", doc));

    // SACM-W6: inference with two targets.
    let mut doc = ModelDocument::new(Notation::Sacm);
    doc.add_argument_package(None, "AP", "a").unwrap();
    sacm_claim(&mut doc, "AP", "C1");
    sacm_claim(&mut doc, "AP", "C2");
    sacm_claim(&mut doc, "AP", "C3");
    raw_relationship(
        &mut doc,
        "AP",
        "R1",
        ElementKind::AssertedInference,
        &["C3"],
        &["C1", "C2"],
        false,
    );
    corpus.push(("SACM-W6", doc));

    // SACM-W7: asset related to itself.
    let mut doc = ModelDocument::new(Notation::Sacm);
    let xp = doc.add_artifact_package(None, "XP", "e").unwrap();
    let asset = doc.add_asset(&xp, ElementKind::Artifact, "log").unwrap();
    doc.relate_assets(std::slice::from_ref(&asset), &[asset], None).unwrap();
    corpus.push(("SACM-W7", doc));

    // SACM-W8: term with both an external reference and an origin.
    let mut doc = ModelDocument::new(Notation::Sacm);
    let tp = doc.add_terminology_package(None, "TP", "v").unwrap();
    doc.define_term(&tp, "T1", "H1", Some("hazardLog.model"), Some(&tp)).unwrap();
    corpus.push(("SACM-W8", doc));

    // SACM-W9: dangling expression reference in a description entry.
    let mut doc = ModelDocument::new(Notation::Sacm);
    doc.add_argument_package(None, "AP", "a").unwrap();
    sacm_claim(&mut doc, "AP", "C1");
    doc.get_mut(&gid("C1"))
        .unwrap()
        .description
        .set(LangString::new("en", "{System X} is safe").with_expression(gid("E-GONE")));
    corpus.push(("SACM-W9", doc));

    // SACM-W10: defeated claim without a counter relationship.
    let mut doc = ModelDocument::new(Notation::Sacm);
    doc.add_argument_package(None, "AP", "a").unwrap();
    doc.add_claim(&gid("AP"), "C1", "C1", "", Declaration::Defeated).unwrap();
    corpus.push(("SACM-W10", doc));

    // SACM-W11: interface containing a non-citation claim.
    let mut doc = ModelDocument::new(Notation::Sacm);
    let ap = doc.add_argument_package(None, "AP", "a").unwrap();
    let api = doc.add_argument_package_interface(&ap, "API", "i").unwrap();
    doc.add_claim(&api, "C1", "C1", "", Declaration::Asserted).unwrap();
    corpus.push(("SACM-W11", doc));

    // SACM-W12: binding with a single participant.
    let mut doc = ModelDocument::new(Notation::Sacm);
    let ap = doc.add_argument_package(None, "AP", "a").unwrap();
    doc.add_argument_package_binding(None, "APB", "b", &[ap]).unwrap();
    corpus.push(("SACM-W12", doc));

    corpus
}

/// Well-formed reconstructions of the core relationship idioms.
pub fn well_formed_corpus() -> Vec<(&'static str, ModelDocument)> {
    let mut corpus = Vec::new();

    // Asserted inference: C1 inferred from C2.
    let mut doc = ModelDocument::new(Notation::Sacm);
    doc.add_argument_package(None, "AP", "a").unwrap();
    sacm_claim(&mut doc, "AP", "C1");
    sacm_claim(&mut doc, "AP", "C2");
    doc.add_relationship(&gid("AP"), "R1", ElementKind::AssertedInference, &[gid("C2")], &[gid("C1")], false)
        .unwrap();
    corpus.push(("asserted-inference", doc));

    // Asserted context: A1 is context for C1.
    let mut doc = ModelDocument::new(Notation::Sacm);
    doc.add_argument_package(None, "AP", "a").unwrap();
    sacm_claim(&mut doc, "AP", "C1");
    sacm_claim(&mut doc, "AP", "A1");
    doc.add_relationship(&gid("AP"), "R1", ElementKind::AssertedContext, &[gid("A1")], &[gid("C1")], false)
        .unwrap();
    corpus.push(("asserted-context", doc));

    // Asserted evidence: artifact reference S1 evidences C1.
    let mut doc = ModelDocument::new(Notation::Sacm);
    let xp = doc.add_artifact_package(None, "XP", "e").unwrap();
    let asset = doc.add_asset(&xp, ElementKind::Artifact, "System test report").unwrap();
    doc.add_argument_package(None, "AP", "a").unwrap();
    sacm_claim(&mut doc, "AP", "C1");
    doc.add_artifact_reference(&gid("AP"), "S1", &asset).unwrap();
    doc.add_relationship(&gid("AP"), "R1", ElementKind::AssertedEvidence, &[gid("S1")], &[gid("C1")], false)
        .unwrap();
    corpus.push(("asserted-evidence", doc));

    // Asserted artifact support: the test plan supports the test report.
    let mut doc = ModelDocument::new(Notation::Sacm);
    let xp = doc.add_artifact_package(None, "XP", "e").unwrap();
    let report = doc.add_asset(&xp, ElementKind::Artifact, "System test report").unwrap();
    let plan = doc.add_asset(&xp, ElementKind::Artifact, "System test plan").unwrap();
    doc.add_argument_package(None, "AP", "a").unwrap();
    doc.add_artifact_reference(&gid("AP"), "S1", &report).unwrap();
    doc.add_artifact_reference(&gid("AP"), "S2", &plan).unwrap();
    doc.add_relationship(
        &gid("AP"),
        "R1",
        ElementKind::AssertedArtifactSupport,
        &[gid("S2")],
        &[gid("S1")],
        false,
    )
    .unwrap();
    corpus.push(("asserted-artifact-support", doc));

    // Argument reasoning attached to an inference.
    let mut doc = ModelDocument::new(Notation::Sacm);
    doc.add_argument_package(None, "AP", "a").unwrap();
    sacm_claim(&mut doc, "AP", "C1");
    sacm_claim(&mut doc, "AP", "C2");
    doc.add_relationship(&gid("AP"), "R1", ElementKind::AssertedInference, &[gid("C2")], &[gid("C1")], false)
        .unwrap();
    doc.add_argument_reasoning(&gid("AP"), "S1", "Argument over all identified hazards").unwrap();
    doc.attach_reasoning(&gid("R1"), &gid("S1")).unwrap();
    corpus.push(("argument-reasoning", doc));

    corpus
}

/// Counter-example fixture: a claim defeated by a counter inference.
pub fn counter_fixture() -> ModelDocument {
    let mut doc = ModelDocument::new(Notation::Sacm);
    doc.add_argument_package(None, "AP", "a").unwrap();
    sacm_claim(&mut doc, "AP", "C1");
    doc.add_claim(&gid("AP"), "C2", "C2", "Field data contradicts the claim", Declaration::Axiomatic)
        .unwrap();
    doc.add_relationship(&gid("AP"), "R1", ElementKind::AssertedInference, &[gid("C2")], &[gid("C1")], true)
        .unwrap();
    doc
}
