//! Claims-Arguments-Evidence notation: modules, claims, arguments, evidence.
//!
//! CAE edges already run bottom-up: evidence points at the claim it is
//! evidence for, sub-claims point at their parent, arguments point at the
//! claim they support.

use crate::document::ModelDocument;
use crate::element::{Element, Payload, RelationshipData};
use crate::error::{Error, Result};
use crate::gid::Gid;
use crate::kind::{Declaration, ElementKind};
use crate::strings::MultiLangString;

#[derive(Debug, Clone)]
pub struct CaeNode {
    pub gid: Gid,
    pub kind: ElementKind,
    pub text: String,
    pub artifact: Option<Gid>,
    pub declaration: Option<Declaration>,
}

impl CaeNode {
    fn new(gid: &str, kind: ElementKind, text: &str) -> CaeNode {
        CaeNode {
            gid: Gid::new(gid),
            kind,
            text: text.to_string(),
            artifact: None,
            declaration: None,
        }
    }

    pub fn claim(gid: &str, text: &str) -> CaeNode {
        CaeNode::new(gid, ElementKind::CaeClaim, text)
    }

    /// Assumptions default to the assumed declaration.
    pub fn assumption(gid: &str, text: &str) -> CaeNode {
        CaeNode::new(gid, ElementKind::CaeAssumption, text)
    }

    pub fn argument(gid: &str, text: &str) -> CaeNode {
        CaeNode::new(gid, ElementKind::Argument, text)
    }

    pub fn evidence(gid: &str, text: &str, artifact: &Gid) -> CaeNode {
        let mut node = CaeNode::new(gid, ElementKind::Evidence, text);
        node.artifact = Some(artifact.clone());
        node
    }

    pub fn declared(mut self, declaration: Declaration) -> CaeNode {
        self.declaration = Some(declaration);
        self
    }
}

#[derive(Debug, Clone)]
pub struct CaeConnector {
    pub gid: Gid,
    pub kind: ElementKind,
    pub source: Gid,
    pub target: Gid,
}

impl CaeConnector {
    pub fn is_evidence_for(gid: &str, evidence: &str, claim: &str) -> CaeConnector {
        CaeConnector {
            gid: Gid::new(gid),
            kind: ElementKind::IsEvidenceFor,
            source: Gid::new(evidence),
            target: Gid::new(claim),
        }
    }

    pub fn is_sub_claim_of(gid: &str, sub: &str, parent: &str) -> CaeConnector {
        CaeConnector {
            gid: Gid::new(gid),
            kind: ElementKind::IsSubClaimOf,
            source: Gid::new(sub),
            target: Gid::new(parent),
        }
    }

    pub fn supports(gid: &str, argument: &str, claim: &str) -> CaeConnector {
        CaeConnector {
            gid: Gid::new(gid),
            kind: ElementKind::Supports,
            source: Gid::new(argument),
            target: Gid::new(claim),
        }
    }
}

impl ModelDocument {
    pub fn add_cae_module(&mut self, owner: Option<&Gid>, gid: &str, name: &str) -> Result<Gid> {
        let mut module = Element::new(gid, ElementKind::CaeModule).named(name);
        if let Some(owner) = owner {
            self.expect(owner)?;
            module = module.owned_by(owner.clone());
        }
        self.insert(module)
    }

    /// Populates a module with CAE nodes and connectors, checking the
    /// connector endpoint kinds.
    pub fn build_cae_structure(
        &mut self,
        module: &Gid,
        nodes: &[CaeNode],
        connectors: &[CaeConnector],
    ) -> Result<()> {
        self.expect(module)?;
        for node in nodes {
            self.insert(cae_node_element(module, node)?)?;
        }
        for (index, connector) in connectors.iter().enumerate() {
            let source_kind = self.expect(&connector.source)?.kind;
            let target_kind = self.expect(&connector.target)?.kind;
            if let Some(rule) = crate::argumentation::endpoint_violation(
                connector.kind,
                &[source_kind],
                &[target_kind],
            ) {
                return Err(Error::KindMismatch(format!(
                    "connector {index} ('{}'): {rule}",
                    connector.gid
                )));
            }
            self.insert(
                Element::new(connector.gid.clone(), connector.kind)
                    .owned_by(module.clone())
                    .with_payload(Payload::Relationship(RelationshipData {
                        sources: vec![connector.source.clone()],
                        targets: vec![connector.target.clone()],
                        ..Default::default()
                    })),
            )?;
        }
        Ok(())
    }
}

fn cae_node_element(module: &Gid, node: &CaeNode) -> Result<Element> {
    let mut element = Element::new(node.gid.clone(), node.kind)
        .owned_by(module.clone())
        .named(node.gid.as_str());
    if !node.text.is_empty() {
        element.description = MultiLangString::en(&node.text);
    }
    match node.kind {
        ElementKind::CaeClaim | ElementKind::CaeAssumption => {
            let default = if node.kind == ElementKind::CaeAssumption {
                Declaration::Assumed
            } else {
                Declaration::Asserted
            };
            if let Payload::Claim(data) = &mut element.payload {
                data.declaration = node.declaration.unwrap_or(default);
            }
        }
        ElementKind::Argument => {}
        ElementKind::Evidence => {
            let artifact = node.artifact.clone().ok_or_else(|| {
                Error::InvalidArgument(format!(
                    "evidence '{}' needs a referenced artifact",
                    node.gid
                ))
            })?;
            element.payload = Payload::ArtifactReference {
                content: MultiLangString::new(),
                referenced_artifact: artifact,
            };
        }
        other => {
            return Err(Error::InvalidArgument(format!(
                "{other} is not a CAE node kind"
            )))
        }
    }
    Ok(element)
}
