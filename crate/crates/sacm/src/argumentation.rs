//! Argumentation operations: claims, typed asserted relationships,
//! reasoning and meta-claims.

use crate::document::ModelDocument;
use crate::element::{Element, Payload, RelationshipData};
use crate::error::{Error, Result};
use crate::gid::Gid;
use crate::kind::{Declaration, ElementKind};

/// Checks one endpoint set of an asserted relationship against the kind
/// table. Returns the violated rule as text for diagnostics.
pub(crate) fn endpoint_violation(
    rel_kind: ElementKind,
    source_kinds: &[ElementKind],
    target_kinds: &[ElementKind],
) -> Option<String> {
    let sources_ok: Box<dyn Fn(ElementKind) -> bool> = match rel_kind {
        ElementKind::AssertedInference => Box::new(|k: ElementKind| k.is_assertion()),
        ElementKind::AssertedEvidence => Box::new(|k: ElementKind| k.is_artifact_reference_like()),
        ElementKind::AssertedContext => {
            Box::new(|k: ElementKind| k.is_assertion() || k.is_artifact_reference_like())
        }
        ElementKind::AssertedArtifactSupport | ElementKind::AssertedArtifactContext => {
            Box::new(|k: ElementKind| k.is_artifact_reference_like())
        }
        ElementKind::IsEvidenceFor => Box::new(|k: ElementKind| k == ElementKind::Evidence),
        ElementKind::IsSubClaimOf => Box::new(|k: ElementKind| k == ElementKind::CaeClaim),
        ElementKind::Supports => Box::new(|k: ElementKind| k == ElementKind::Argument),
        _ => return Some(format!("{rel_kind} is not an asserted relationship kind")),
    };
    let targets_ok: Box<dyn Fn(ElementKind) -> bool> = match rel_kind {
        ElementKind::AssertedInference => Box::new(|k: ElementKind| k.is_assertion()),
        ElementKind::AssertedEvidence => Box::new(|k: ElementKind| k.is_assertion()),
        ElementKind::AssertedContext => {
            Box::new(|k: ElementKind| k.is_assertion() || k.is_reasoning_like())
        }
        ElementKind::AssertedArtifactSupport | ElementKind::AssertedArtifactContext => {
            Box::new(|k: ElementKind| k.is_artifact_reference_like())
        }
        ElementKind::IsEvidenceFor | ElementKind::IsSubClaimOf | ElementKind::Supports => {
            Box::new(|k: ElementKind| k == ElementKind::CaeClaim)
        }
        _ => unreachable!(),
    };
    for &k in source_kinds {
        if !sources_ok(k) {
            return Some(format!("{rel_kind} source may not be a {k}"));
        }
    }
    for &k in target_kinds {
        if !targets_ok(k) {
            return Some(format!("{rel_kind} target may not be a {k}"));
        }
    }
    None
}

impl ModelDocument {
    pub fn add_argument_package(&mut self, owner: Option<&Gid>, gid: &str, name: &str) -> Result<Gid> {
        let mut pkg = Element::new(gid, ElementKind::ArgumentPackage).named(name);
        if let Some(owner) = owner {
            pkg = pkg.owned_by(owner.clone());
        }
        self.insert(pkg)
    }

    pub fn add_argument_package_interface(&mut self, owner: &Gid, gid: &str, name: &str) -> Result<Gid> {
        self.expect(owner)?;
        self.insert(
            Element::new(gid, ElementKind::ArgumentPackageInterface)
                .owned_by(owner.clone())
                .named(name),
        )
    }

    pub fn add_argument_package_binding(
        &mut self,
        owner: Option<&Gid>,
        gid: &str,
        name: &str,
        participants: &[Gid],
    ) -> Result<Gid> {
        let mut pkg = Element::new(gid, ElementKind::ArgumentPackageBinding)
            .named(name)
            .with_payload(Payload::Binding {
                participants: participants.to_vec(),
            });
        if let Some(owner) = owner {
            self.expect(owner)?;
            pkg = pkg.owned_by(owner.clone());
        }
        self.insert(pkg)
    }

    /// Adds a claim to an argument package.
    pub fn add_claim(
        &mut self,
        pkg: &Gid,
        gid: &str,
        name: &str,
        description: &str,
        declaration: Declaration,
    ) -> Result<Gid> {
        self.expect(pkg)?;
        let mut element = Element::new(gid, ElementKind::Claim)
            .owned_by(pkg.clone())
            .named(name);
        if !description.is_empty() {
            element = element.described(description);
        }
        if let Payload::Claim(data) = &mut element.payload {
            data.declaration = declaration;
        }
        self.insert(element)
    }

    pub fn add_argument_reasoning(&mut self, pkg: &Gid, gid: &str, description: &str) -> Result<Gid> {
        self.expect(pkg)?;
        self.insert(
            Element::new(gid, ElementKind::ArgumentReasoning)
                .owned_by(pkg.clone())
                .described(description),
        )
    }

    /// Adds an artifact reference pointing at any element (all elements are
    /// artifact elements).
    pub fn add_artifact_reference(&mut self, pkg: &Gid, gid: &str, artifact: &Gid) -> Result<Gid> {
        self.expect(pkg)?;
        self.expect(artifact)?;
        self.insert(
            Element::new(gid, ElementKind::ArtifactReference)
                .owned_by(pkg.clone())
                .with_payload(Payload::ArtifactReference {
                    content: Default::default(),
                    referenced_artifact: artifact.clone(),
                }),
        )
    }

    /// Adds a typed asserted relationship, checking the endpoint kind table.
    pub fn add_relationship(
        &mut self,
        pkg: &Gid,
        gid: &str,
        kind: ElementKind,
        source_ids: &[Gid],
        target_ids: &[Gid],
        is_counter: bool,
    ) -> Result<Gid> {
        if source_ids.is_empty() || target_ids.is_empty() {
            return Err(Error::InvalidArgument(
                "relationship needs at least one source and one target".into(),
            ));
        }
        self.expect(pkg)?;
        let mut source_kinds = Vec::with_capacity(source_ids.len());
        for gid in source_ids {
            source_kinds.push(self.expect(gid)?.kind);
        }
        let mut target_kinds = Vec::with_capacity(target_ids.len());
        for gid in target_ids {
            target_kinds.push(self.expect(gid)?.kind);
        }
        if let Some(rule) = endpoint_violation(kind, &source_kinds, &target_kinds) {
            return Err(Error::KindMismatch(rule));
        }
        self.insert(
            Element::new(gid, kind)
                .owned_by(pkg.clone())
                .with_payload(Payload::Relationship(RelationshipData {
                    sources: source_ids.to_vec(),
                    targets: target_ids.to_vec(),
                    is_counter,
                    ..Default::default()
                })),
        )
    }

    /// Attaches the reasoning of an asserted relationship. Re-attaching
    /// replaces (last wins) and returns the reasoning that was displaced so
    /// callers can warn about it.
    pub fn attach_reasoning(&mut self, rel: &Gid, reasoning: &Gid) -> Result<Option<Gid>> {
        let reasoning_kind = self.expect(reasoning)?.kind;
        if !reasoning_kind.is_reasoning_like() {
            return Err(Error::KindMismatch(format!(
                "'{reasoning}' is a {reasoning_kind}, expected an ArgumentReasoning"
            )));
        }
        let element = self.expect_mut(rel)?;
        match element.relationship_mut() {
            Some(data) => Ok(data.reasoning.replace(reasoning.clone())),
            None => Err(Error::KindMismatch(format!(
                "'{rel}' is a {}, expected an AssertedRelationship",
                element.kind
            ))),
        }
    }

    /// Attaches a meta-claim arguing the trustworthiness of an assertion.
    /// The assertion may itself be a relationship.
    pub fn attach_meta_claim(&mut self, assertion: &Gid, meta: &Gid) -> Result<()> {
        if assertion == meta {
            return Err(Error::SelfReference(meta.clone()));
        }
        let meta_kind = self.expect(meta)?.kind;
        if !meta_kind.is_claim_like() {
            return Err(Error::KindMismatch(format!(
                "meta-claim '{meta}' is a {meta_kind}, expected a Claim"
            )));
        }
        let element = self.expect_mut(assertion)?;
        if !element.kind.is_assertion() {
            return Err(Error::KindMismatch(format!(
                "'{assertion}' is a {}, expected an Assertion",
                element.kind
            )));
        }
        match &mut element.payload {
            Payload::Relationship(r) => r.meta_claims.push(meta.clone()),
            _ => {
                if let Some(claim) = element.claim_data_mut() {
                    claim.meta_claims.push(meta.clone());
                }
            }
        }
        Ok(())
    }
}
