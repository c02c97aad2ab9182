//! Goal Structuring Notation: modules, goal structures and connectors.
//!
//! Connectors keep the drawing direction: the source is the supported
//! element (drawn above), the target is the supporting element (drawn
//! below). The transformation to the core notation flips this into the
//! bottom-up inference direction.

use crate::document::ModelDocument;
use crate::element::{ChoiceGroup, ConnectorData, Element, Payload};
use crate::error::{Error, Result};
use crate::gid::Gid;
use crate::kind::{Declaration, ElementKind};
use crate::strings::MultiLangString;

/// Node of a goal structure, ready to be added to a module.
#[derive(Debug, Clone)]
pub struct GsnNode {
    pub gid: Gid,
    pub kind: ElementKind,
    pub text: String,
    pub undeveloped: bool,
    pub uninstantiated: bool,
    pub artifact: Option<Gid>,
    pub statement: Option<String>,
    pub module_ref: Option<Gid>,
    pub cited: Option<Gid>,
}

impl GsnNode {
    fn new(gid: &str, kind: ElementKind, text: &str) -> GsnNode {
        GsnNode {
            gid: Gid::new(gid),
            kind,
            text: text.to_string(),
            undeveloped: false,
            uninstantiated: false,
            artifact: None,
            statement: None,
            module_ref: None,
            cited: None,
        }
    }

    pub fn goal(gid: &str, text: &str) -> GsnNode {
        GsnNode::new(gid, ElementKind::Goal, text)
    }

    pub fn strategy(gid: &str, text: &str) -> GsnNode {
        GsnNode::new(gid, ElementKind::Strategy, text)
    }

    /// A solution referencing the artifact element holding the evidence.
    pub fn solution(gid: &str, text: &str, artifact: &Gid) -> GsnNode {
        let mut node = GsnNode::new(gid, ElementKind::Solution, text);
        node.artifact = Some(artifact.clone());
        node
    }

    pub fn assumption(gid: &str, text: &str) -> GsnNode {
        GsnNode::new(gid, ElementKind::Assumption, text)
    }

    pub fn justification(gid: &str, text: &str) -> GsnNode {
        GsnNode::new(gid, ElementKind::Justification, text)
    }

    /// A context stating framing as text.
    pub fn context_statement(gid: &str, statement: &str) -> GsnNode {
        let mut node = GsnNode::new(gid, ElementKind::Context, "");
        node.statement = Some(statement.to_string());
        node
    }

    /// A context referring to contextual information in an artifact.
    pub fn context_artifact(gid: &str, artifact: &Gid) -> GsnNode {
        let mut node = GsnNode::new(gid, ElementKind::Context, "");
        node.artifact = Some(artifact.clone());
        node
    }

    /// An away goal citing `cited` (a goal in `module`).
    pub fn away_goal(gid: &str, text: &str, module: &Gid, cited: &Gid) -> GsnNode {
        let mut node = GsnNode::new(gid, ElementKind::AwayGoal, text);
        node.module_ref = Some(module.clone());
        node.cited = Some(cited.clone());
        node
    }

    pub fn away_solution(gid: &str, text: &str, artifact: &Gid) -> GsnNode {
        let mut node = GsnNode::new(gid, ElementKind::AwaySolution, text);
        node.artifact = Some(artifact.clone());
        node
    }

    pub fn away_context(gid: &str, text: &str, artifact: &Gid) -> GsnNode {
        let mut node = GsnNode::new(gid, ElementKind::AwayContext, text);
        node.artifact = Some(artifact.clone());
        node
    }

    pub fn module_reference(gid: &str, module: &Gid) -> GsnNode {
        let mut node = GsnNode::new(gid, ElementKind::ModuleReference, "");
        node.artifact = Some(module.clone());
        node
    }

    pub fn undeveloped(mut self) -> GsnNode {
        self.undeveloped = true;
        self
    }

    pub fn uninstantiated(mut self) -> GsnNode {
        self.uninstantiated = true;
        self
    }
}

/// Connector of a goal structure.
#[derive(Debug, Clone)]
pub struct GsnConnector {
    pub gid: Gid,
    pub kind: ElementKind,
    pub source: Gid,
    pub target: Gid,
    pub multiplicity: Option<String>,
    pub optional: bool,
    pub choice: Option<ChoiceGroup>,
}

impl GsnConnector {
    pub fn supported_by(gid: &str, source: &str, target: &str) -> GsnConnector {
        GsnConnector {
            gid: Gid::new(gid),
            kind: ElementKind::SupportedBy,
            source: Gid::new(source),
            target: Gid::new(target),
            multiplicity: None,
            optional: false,
            choice: None,
        }
    }

    pub fn in_context_of(gid: &str, source: &str, target: &str) -> GsnConnector {
        GsnConnector {
            kind: ElementKind::InContextOf,
            ..GsnConnector::supported_by(gid, source, target)
        }
    }

    /// Many decorator: the connector multiplies on instantiation; the label
    /// is kept verbatim ("n = number of functions").
    pub fn many(mut self, label: &str) -> GsnConnector {
        self.multiplicity = Some(label.to_string());
        self
    }

    pub fn optional(mut self) -> GsnConnector {
        self.optional = true;
        self
    }

    pub fn choice(mut self, group: &str, min: usize, max: usize) -> GsnConnector {
        self.choice = Some(ChoiceGroup {
            group: group.to_string(),
            min,
            max,
        });
        self
    }
}

fn goal_class(kind: ElementKind) -> bool {
    matches!(kind, ElementKind::Goal | ElementKind::AwayGoal)
}

fn solution_class(kind: ElementKind) -> bool {
    matches!(kind, ElementKind::Solution | ElementKind::AwaySolution)
}

fn context_class(kind: ElementKind) -> bool {
    matches!(
        kind,
        ElementKind::Context
            | ElementKind::AwayContext
            | ElementKind::Assumption
            | ElementKind::Justification
    )
}

/// Permitted supported-by pairs: goal-to-goal, goal-to-strategy,
/// goal-to-solution and strategy-to-goal. Anything else is forbidden.
pub(crate) fn supported_by_pair_ok(source: ElementKind, target: ElementKind) -> bool {
    (goal_class(source) && (goal_class(target) || target == ElementKind::Strategy || solution_class(target)))
        || (source == ElementKind::Strategy && goal_class(target))
}

/// Permitted in-context-of pairs: goals and strategies relate to contexts,
/// assumptions and justifications.
pub(crate) fn in_context_of_pair_ok(source: ElementKind, target: ElementKind) -> bool {
    (goal_class(source) || source == ElementKind::Strategy) && context_class(target)
}

impl ModelDocument {
    pub fn add_gsn_module(&mut self, owner: Option<&Gid>, gid: &str, name: &str) -> Result<Gid> {
        let mut module = Element::new(gid, ElementKind::GsnModule).named(name);
        if let Some(owner) = owner {
            self.expect(owner)?;
            module = module.owned_by(owner.clone());
        }
        self.insert(module)
    }

    pub fn add_contract_module(
        &mut self,
        owner: Option<&Gid>,
        gid: &str,
        name: &str,
        participants: &[Gid],
    ) -> Result<Gid> {
        let mut module = Element::new(gid, ElementKind::ContractModule)
            .named(name)
            .with_payload(Payload::Binding {
                participants: participants.to_vec(),
            });
        if let Some(owner) = owner {
            self.expect(owner)?;
            module = module.owned_by(owner.clone());
        }
        self.insert(module)
    }

    /// Populates a module with nodes and connectors, checking connector
    /// endpoint kinds. Node text becomes the element description.
    pub fn build_goal_structure(
        &mut self,
        module: &Gid,
        nodes: &[GsnNode],
        connectors: &[GsnConnector],
    ) -> Result<()> {
        self.expect(module)?;
        for node in nodes {
            self.insert(gsn_node_element(module, node)?)?;
        }
        for (index, connector) in connectors.iter().enumerate() {
            let source_kind = self.expect(&connector.source)?.kind;
            let target_kind = self.expect(&connector.target)?.kind;
            let ok = match connector.kind {
                ElementKind::SupportedBy => supported_by_pair_ok(source_kind, target_kind),
                ElementKind::InContextOf => in_context_of_pair_ok(source_kind, target_kind),
                other => {
                    return Err(Error::InvalidArgument(format!(
                        "connector {index} has non-connector kind {other}"
                    )))
                }
            };
            if !ok {
                return Err(Error::KindMismatch(format!(
                    "connector {index} ('{}'): {} from {source_kind} to {target_kind} is not permitted",
                    connector.gid, connector.kind
                )));
            }
            self.insert(
                Element::new(connector.gid.clone(), connector.kind)
                    .owned_by(module.clone())
                    .with_payload(Payload::Connector(ConnectorData {
                        source: connector.source.clone(),
                        target: connector.target.clone(),
                        multiplicity: connector.multiplicity.clone(),
                        optional: connector.optional,
                        choice: connector.choice.clone(),
                    })),
            )?;
        }
        Ok(())
    }

    /// Goals of a module that are not supported-by targets of any connector,
    /// in document order: the top-level claims of the goal structure.
    pub fn gsn_roots(&self, module: &Gid) -> Result<Vec<Gid>> {
        self.expect(module)?;
        let members: Vec<&Element> = std::iter::once(self.expect(module)?)
            .chain(self.descendants(module).iter().filter_map(|g| self.get(g)))
            .collect();
        let mut supported: std::collections::HashSet<&Gid> = std::collections::HashSet::new();
        for element in &members {
            if element.kind == ElementKind::SupportedBy {
                if let Some(conn) = element.connector() {
                    supported.insert(&conn.target);
                }
            }
        }
        Ok(members
            .iter()
            .filter(|e| e.kind == ElementKind::Goal && !supported.contains(&e.gid))
            .map(|e| e.gid.clone())
            .collect())
    }
}

fn gsn_node_element(module: &Gid, node: &GsnNode) -> Result<Element> {
    let mut element = Element::new(node.gid.clone(), node.kind)
        .owned_by(module.clone())
        .named(node.gid.as_str());
    if !node.text.is_empty() {
        element.description = MultiLangString::en(&node.text);
    }
    element.is_abstract = node.uninstantiated;
    match node.kind {
        ElementKind::Goal => {
            element.payload = Payload::Goal {
                claim: Default::default(),
                undeveloped: node.undeveloped,
                to_be_supported_by_contract: false,
                public: false,
            };
        }
        ElementKind::Strategy => {
            element.payload = Payload::Strategy {
                content: MultiLangString::new(),
                undeveloped: node.undeveloped,
            };
        }
        ElementKind::Assumption | ElementKind::Justification => {
            // Claim payload with the default declaration; the declaration
            // equivalence is applied by the transformation.
        }
        ElementKind::AwayGoal => {
            let module_ref = node.module_ref.clone().ok_or_else(|| {
                Error::InvalidArgument(format!("away goal '{}' needs a module reference", node.gid))
            })?;
            let cited = node.cited.clone().ok_or_else(|| {
                Error::InvalidArgument(format!("away goal '{}' needs a cited goal", node.gid))
            })?;
            element.is_citation = true;
            element.cited_element = Some(cited);
            element.payload = Payload::AwayGoal {
                claim: crate::element::ClaimData {
                    declaration: Declaration::AsCited,
                    ..Default::default()
                },
                module_ref,
            };
        }
        ElementKind::Solution
        | ElementKind::AwaySolution
        | ElementKind::AwayContext
        | ElementKind::ModuleReference
        | ElementKind::ContractModuleReference => {
            let artifact = node.artifact.clone().ok_or_else(|| {
                Error::InvalidArgument(format!(
                    "{} '{}' needs a referenced artifact",
                    node.kind, node.gid
                ))
            })?;
            element.payload = Payload::ArtifactReference {
                content: MultiLangString::new(),
                referenced_artifact: artifact,
            };
        }
        ElementKind::Context => {
            if node.statement.is_none() && node.artifact.is_none() {
                return Err(Error::InvalidArgument(format!(
                    "context '{}' needs a statement or a referenced artifact",
                    node.gid
                )));
            }
            element.payload = Payload::Context {
                statement: node.statement.clone(),
                referenced_artifact: node.artifact.clone(),
            };
        }
        other => {
            return Err(Error::InvalidArgument(format!(
                "{other} is not a GSN node kind"
            )))
        }
    }
    Ok(element)
}
