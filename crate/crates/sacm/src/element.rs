//! Model elements: the common backbone plus per-family payloads.
//!
//! Every element carries the identity/citation/abstraction backbone and the
//! utility attachments (name, description, constraints, notes, tagged
//! values). Kind-specific fields live in the [`Payload`], one variant per
//! structural family. Containment is not stored as child lists: each element
//! records its owner and child order is document order.

use crate::gid::Gid;
use crate::kind::{Declaration, ElementKind, Family};
use crate::strings::{ImplementationConstraint, LangString, MultiLangString, Note, TaggedValue};

/// Fields shared by all claims (content, declaration, meta-claims).
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ClaimData {
    pub content: MultiLangString,
    pub declaration: Declaration,
    pub meta_claims: Vec<Gid>,
}

/// Asserted relationship fields: many-to-many typed edge with counter flag
/// and optional attached reasoning. Relationships are assertions, so they
/// carry a declaration and may have meta-claims of their own.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct RelationshipData {
    pub content: MultiLangString,
    pub declaration: Declaration,
    pub meta_claims: Vec<Gid>,
    pub sources: Vec<Gid>,
    pub targets: Vec<Gid>,
    pub is_counter: bool,
    pub reasoning: Option<Gid>,
}

/// Choice decorator on a pattern connector: pick between `min` and `max`
/// of the alternative connectors sharing the same group id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChoiceGroup {
    pub group: String,
    pub min: usize,
    pub max: usize,
}

/// GSN connector fields: exactly one source (the supported element, drawn
/// above) and one target (the supporting element, drawn below), plus the
/// pattern decorators.
#[derive(Debug, Clone, PartialEq)]
pub struct ConnectorData {
    pub source: Gid,
    pub target: Gid,
    /// Verbatim label of the many decorator, e.g. "n = number of functions".
    pub multiplicity: Option<String>,
    pub optional: bool,
    pub choice: Option<ChoiceGroup>,
}

impl ConnectorData {
    pub fn new(source: Gid, target: Gid) -> Self {
        ConnectorData {
            source,
            target,
            multiplicity: None,
            optional: false,
            choice: None,
        }
    }

    pub fn is_decorated(&self) -> bool {
        self.multiplicity.is_some() || self.optional || self.choice.is_some()
    }
}

/// Kind-specific fields, one variant per structural family.
#[derive(Debug, Clone, PartialEq)]
pub enum Payload {
    Package,
    Binding {
        participants: Vec<Gid>,
    },
    Group {
        members: Vec<Gid>,
    },
    Category {
        members: Vec<Gid>,
        external_reference: Option<String>,
    },
    Asset,
    Property,
    AssetRelationship {
        sources: Vec<Gid>,
        targets: Vec<Gid>,
    },
    Term {
        value: String,
        external_reference: Option<String>,
        origin: Option<Gid>,
    },
    Expression {
        value: String,
        element_refs: Vec<Gid>,
    },
    Claim(ClaimData),
    Goal {
        claim: ClaimData,
        undeveloped: bool,
        to_be_supported_by_contract: bool,
        /// Deprecated flag, retained for import fidelity; never validated.
        public: bool,
    },
    AwayGoal {
        claim: ClaimData,
        module_ref: Gid,
    },
    Relationship(RelationshipData),
    Connector(ConnectorData),
    ArtifactReference {
        content: MultiLangString,
        referenced_artifact: Gid,
    },
    Reasoning {
        content: MultiLangString,
    },
    Strategy {
        content: MultiLangString,
        undeveloped: bool,
    },
    Context {
        statement: Option<String>,
        referenced_artifact: Option<Gid>,
    },
}

impl Payload {
    /// Default payload for a kind. Gid-valued required fields are filled
    /// with placeholder empty gids; constructors overwrite them.
    pub(crate) fn default_for(kind: ElementKind) -> Payload {
        match kind.family() {
            Family::Package => Payload::Package,
            Family::Binding => Payload::Binding {
                participants: Vec::new(),
            },
            Family::Group => Payload::Group { members: Vec::new() },
            Family::Category => Payload::Category {
                members: Vec::new(),
                external_reference: None,
            },
            Family::Asset => Payload::Asset,
            Family::Property => Payload::Property,
            Family::AssetRelationship => Payload::AssetRelationship {
                sources: Vec::new(),
                targets: Vec::new(),
            },
            Family::Term => Payload::Term {
                value: String::new(),
                external_reference: None,
                origin: None,
            },
            Family::Expression => Payload::Expression {
                value: String::new(),
                element_refs: Vec::new(),
            },
            Family::Claim => Payload::Claim(ClaimData::default()),
            Family::Goal => Payload::Goal {
                claim: ClaimData::default(),
                undeveloped: false,
                to_be_supported_by_contract: false,
                public: false,
            },
            Family::AwayGoal => Payload::AwayGoal {
                claim: ClaimData::default(),
                module_ref: Gid::new(""),
            },
            Family::Relationship => Payload::Relationship(RelationshipData::default()),
            Family::Connector => {
                Payload::Connector(ConnectorData::new(Gid::new(""), Gid::new("")))
            }
            Family::ArtifactReference => Payload::ArtifactReference {
                content: MultiLangString::new(),
                referenced_artifact: Gid::new(""),
            },
            Family::Reasoning => Payload::Reasoning {
                content: MultiLangString::new(),
            },
            Family::Strategy => Payload::Strategy {
                content: MultiLangString::new(),
                undeveloped: false,
            },
            Family::Context => Payload::Context {
                statement: None,
                referenced_artifact: None,
            },
        }
    }

    pub fn family(&self) -> Family {
        match self {
            Payload::Package => Family::Package,
            Payload::Binding { .. } => Family::Binding,
            Payload::Group { .. } => Family::Group,
            Payload::Category { .. } => Family::Category,
            Payload::Asset => Family::Asset,
            Payload::Property => Family::Property,
            Payload::AssetRelationship { .. } => Family::AssetRelationship,
            Payload::Term { .. } => Family::Term,
            Payload::Expression { .. } => Family::Expression,
            Payload::Claim(_) => Family::Claim,
            Payload::Goal { .. } => Family::Goal,
            Payload::AwayGoal { .. } => Family::AwayGoal,
            Payload::Relationship(_) => Family::Relationship,
            Payload::Connector(_) => Family::Connector,
            Payload::ArtifactReference { .. } => Family::ArtifactReference,
            Payload::Reasoning { .. } => Family::Reasoning,
            Payload::Strategy { .. } => Family::Strategy,
            Payload::Context { .. } => Family::Context,
        }
    }
}

/// Uniform view of any edge element (asserted relationship, GSN connector
/// or artifact asset relationship) in its stored direction.
#[derive(Debug, Clone, Copy)]
pub struct EdgeView<'a> {
    pub sources: &'a [Gid],
    pub targets: &'a [Gid],
    pub is_counter: bool,
    pub reasoning: Option<&'a Gid>,
}

/// A model element.
#[derive(Debug, Clone, PartialEq)]
pub struct Element {
    pub gid: Gid,
    pub kind: ElementKind,
    pub owner: Option<Gid>,
    pub is_citation: bool,
    pub cited_element: Option<Gid>,
    pub is_abstract: bool,
    pub abstract_form: Option<Gid>,
    pub name: Option<LangString>,
    pub description: MultiLangString,
    pub implementation_constraints: Vec<ImplementationConstraint>,
    pub notes: Vec<Note>,
    pub tagged_values: Vec<TaggedValue>,
    pub payload: Payload,
}

impl Element {
    /// New element of the given kind with the default payload for its family.
    pub fn new(gid: impl Into<Gid>, kind: ElementKind) -> Element {
        Element {
            gid: gid.into(),
            kind,
            owner: None,
            is_citation: false,
            cited_element: None,
            is_abstract: false,
            abstract_form: None,
            name: None,
            description: MultiLangString::new(),
            implementation_constraints: Vec::new(),
            notes: Vec::new(),
            tagged_values: Vec::new(),
            payload: Payload::default_for(kind),
        }
    }

    pub fn owned_by(mut self, owner: impl Into<Gid>) -> Element {
        self.owner = Some(owner.into());
        self
    }

    pub fn named(mut self, name: &str) -> Element {
        self.name = Some(LangString::new("en", name));
        self
    }

    pub fn described(mut self, text: &str) -> Element {
        self.description = MultiLangString::en(text);
        self
    }

    pub fn abstracted(mut self) -> Element {
        self.is_abstract = true;
        self
    }

    pub fn with_payload(mut self, payload: Payload) -> Element {
        debug_assert_eq!(payload.family(), self.kind.family());
        self.payload = payload;
        self
    }

    /// Display name: the name content when set, otherwise the gid.
    pub fn display_name(&self) -> &str {
        self.name
            .as_ref()
            .map(|n| n.content.as_str())
            .unwrap_or_else(|| self.gid.as_str())
    }

    /// Claim fields for claim-like elements.
    pub fn claim_data(&self) -> Option<&ClaimData> {
        match &self.payload {
            Payload::Claim(c) => Some(c),
            Payload::Goal { claim, .. } => Some(claim),
            Payload::AwayGoal { claim, .. } => Some(claim),
            _ => None,
        }
    }

    pub fn claim_data_mut(&mut self) -> Option<&mut ClaimData> {
        match &mut self.payload {
            Payload::Claim(c) => Some(c),
            Payload::Goal { claim, .. } => Some(claim),
            Payload::AwayGoal { claim, .. } => Some(claim),
            _ => None,
        }
    }

    /// Declaration of an assertion (claims and relationships).
    pub fn declaration(&self) -> Option<Declaration> {
        match &self.payload {
            Payload::Relationship(r) => Some(r.declaration),
            Payload::Connector(_) => Some(Declaration::Asserted),
            _ => self.claim_data().map(|c| c.declaration),
        }
    }

    /// Meta-claims attached to an assertion.
    pub fn meta_claims(&self) -> &[Gid] {
        match &self.payload {
            Payload::Relationship(r) => &r.meta_claims,
            _ => self
                .claim_data()
                .map(|c| c.meta_claims.as_slice())
                .unwrap_or(&[]),
        }
    }

    /// Uniform edge view over relationships, connectors and asset
    /// relationships. Connector direction is the GSN drawing direction
    /// (source = supported element); callers that need the inference
    /// direction flip it themselves.
    pub fn edge(&self) -> Option<EdgeView<'_>> {
        match &self.payload {
            Payload::Relationship(r) => Some(EdgeView {
                sources: &r.sources,
                targets: &r.targets,
                is_counter: r.is_counter,
                reasoning: r.reasoning.as_ref(),
            }),
            Payload::Connector(c) => Some(EdgeView {
                sources: std::slice::from_ref(&c.source),
                targets: std::slice::from_ref(&c.target),
                is_counter: false,
                reasoning: None,
            }),
            Payload::AssetRelationship { sources, targets } => Some(EdgeView {
                sources,
                targets,
                is_counter: false,
                reasoning: None,
            }),
            _ => None,
        }
    }

    pub fn connector(&self) -> Option<&ConnectorData> {
        match &self.payload {
            Payload::Connector(c) => Some(c),
            _ => None,
        }
    }

    pub fn relationship(&self) -> Option<&RelationshipData> {
        match &self.payload {
            Payload::Relationship(r) => Some(r),
            _ => None,
        }
    }

    pub fn relationship_mut(&mut self) -> Option<&mut RelationshipData> {
        match &mut self.payload {
            Payload::Relationship(r) => Some(r),
            _ => None,
        }
    }

    /// Argument asset content, for the families that carry one.
    pub fn content(&self) -> Option<&MultiLangString> {
        match &self.payload {
            Payload::Claim(c) => Some(&c.content),
            Payload::Goal { claim, .. } | Payload::AwayGoal { claim, .. } => Some(&claim.content),
            Payload::Relationship(r) => Some(&r.content),
            Payload::ArtifactReference { content, .. } => Some(content),
            Payload::Reasoning { content } => Some(content),
            Payload::Strategy { content, .. } => Some(content),
            _ => None,
        }
    }

    /// All gid-valued cross-references leaving this element, paired with the
    /// field they live in. `expression_ref` links inside multi-language
    /// strings are soft references and are not included; they are checked
    /// separately by validation.
    pub fn references(&self) -> Vec<(&'static str, &Gid)> {
        let mut refs = Vec::new();
        if let Some(cited) = &self.cited_element {
            refs.push(("cited_element", cited));
        }
        if let Some(form) = &self.abstract_form {
            refs.push(("abstract_form", form));
        }
        match &self.payload {
            Payload::Binding { participants } => {
                refs.extend(participants.iter().map(|g| ("participants", g)));
            }
            Payload::Group { members } | Payload::Category { members, .. } => {
                refs.extend(members.iter().map(|g| ("members", g)));
            }
            Payload::AssetRelationship { sources, targets } => {
                refs.extend(sources.iter().map(|g| ("sources", g)));
                refs.extend(targets.iter().map(|g| ("targets", g)));
            }
            Payload::Term { origin, .. } => {
                if let Some(origin) = origin {
                    refs.push(("origin", origin));
                }
            }
            Payload::Expression { element_refs, .. } => {
                refs.extend(element_refs.iter().map(|g| ("element_refs", g)));
            }
            Payload::Claim(c) => {
                refs.extend(c.meta_claims.iter().map(|g| ("meta_claims", g)));
            }
            Payload::Goal { claim, .. } => {
                refs.extend(claim.meta_claims.iter().map(|g| ("meta_claims", g)));
            }
            Payload::AwayGoal { claim, module_ref } => {
                refs.extend(claim.meta_claims.iter().map(|g| ("meta_claims", g)));
                refs.push(("module_ref", module_ref));
            }
            Payload::Relationship(r) => {
                refs.extend(r.meta_claims.iter().map(|g| ("meta_claims", g)));
                refs.extend(r.sources.iter().map(|g| ("sources", g)));
                refs.extend(r.targets.iter().map(|g| ("targets", g)));
                if let Some(reason) = &r.reasoning {
                    refs.push(("reasoning", reason));
                }
            }
            Payload::Connector(c) => {
                refs.push(("source", &c.source));
                refs.push(("target", &c.target));
            }
            Payload::ArtifactReference {
                referenced_artifact, ..
            } => {
                refs.push(("referenced_artifact", referenced_artifact));
            }
            Payload::Context {
                referenced_artifact, ..
            } => {
                if let Some(artifact) = referenced_artifact {
                    refs.push(("referenced_artifact", artifact));
                }
            }
            Payload::Package
            | Payload::Asset
            | Payload::Property
            | Payload::Reasoning { .. }
            | Payload::Strategy { .. } => {}
        }
        refs
    }

    /// Rewrites every cross-reference (and the owner link) through the map.
    /// Gids absent from the map are kept as-is.
    pub fn remap_references(&mut self, map: &impl Fn(&Gid) -> Option<Gid>) {
        let remap = |gid: &mut Gid| {
            if let Some(new) = map(gid) {
                *gid = new;
            }
        };
        let remap_vec = |gids: &mut Vec<Gid>| gids.iter_mut().for_each(remap);
        let remap_opt = |gid: &mut Option<Gid>| {
            if let Some(g) = gid {
                remap(g);
            }
        };
        remap_opt(&mut self.owner);
        remap_opt(&mut self.cited_element);
        remap_opt(&mut self.abstract_form);
        match &mut self.payload {
            Payload::Binding { participants } => remap_vec(participants),
            Payload::Group { members } | Payload::Category { members, .. } => remap_vec(members),
            Payload::AssetRelationship { sources, targets } => {
                remap_vec(sources);
                remap_vec(targets);
            }
            Payload::Term { origin, .. } => remap_opt(origin),
            Payload::Expression { element_refs, .. } => remap_vec(element_refs),
            Payload::Claim(c) => remap_vec(&mut c.meta_claims),
            Payload::Goal { claim, .. } => remap_vec(&mut claim.meta_claims),
            Payload::AwayGoal { claim, module_ref } => {
                remap_vec(&mut claim.meta_claims);
                remap(module_ref);
            }
            Payload::Relationship(r) => {
                remap_vec(&mut r.meta_claims);
                remap_vec(&mut r.sources);
                remap_vec(&mut r.targets);
                remap_opt(&mut r.reasoning);
            }
            Payload::Connector(c) => {
                remap(&mut c.source);
                remap(&mut c.target);
            }
            Payload::ArtifactReference {
                referenced_artifact, ..
            } => remap(referenced_artifact),
            Payload::Context {
                referenced_artifact, ..
            } => remap_opt(referenced_artifact),
            Payload::Package
            | Payload::Asset
            | Payload::Property
            | Payload::Reasoning { .. }
            | Payload::Strategy { .. } => {}
        }
    }
}
