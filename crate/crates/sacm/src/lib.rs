//! Structured assurance case models.
//!
//! This crate implements a model-based toolkit for assurance cases:
//!
//! * a core metamodel (packages, claims, asserted relationships, artifacts,
//!   terminology) with identity, citation and abstraction built into every
//!   element;
//! * GSN and CAE metamodels defined as subtypes of the core elements, with
//!   model-to-model transformations into the core notation, including the
//!   strategy/argument collapse into reasoning-attached inferences;
//! * well-formedness validation with a published rule catalog;
//! * argument status evaluation against evidence validity;
//! * pattern instantiation with role binding and connector expansion;
//! * a canonical, byte-deterministic JSON interchange format and report
//!   generation.
//!
//! A [`ModelDocument`] is a value: share it read-only freely, mutate it
//! through `&mut` methods. The flat element store plus owner links keeps
//! cross-package references (citations, bindings, evidence links) uniform.

mod argumentation;
mod artifact;
mod cae;
mod document;
mod element;
mod error;
mod evaluate;
mod gid;
mod gsn;
mod instantiate;
mod io;
mod kind;
mod placeholder;
mod report;
mod strings;
mod terminology;
mod transform;
mod validate;

pub use artifact::{ResourceResolution, PURPOSE_PROPERTY, QUERY_PROPERTY, URI_PROPERTY};
pub use cae::{CaeConnector, CaeNode};
pub use document::{CitationChain, ModelDocument};
pub use element::{
    ChoiceGroup, ClaimData, ConnectorData, EdgeView, Element, Payload, RelationshipData,
};
pub use error::{Error, Result};
pub use evaluate::{evaluate, parse_evidence_json, root_claims, ClaimStatus, Evaluation, EvidenceMap};
pub use gid::Gid;
pub use gsn::{GsnConnector, GsnNode};
pub use instantiate::{
    extract_roles, instantiate, verify_instantiation, BindingTable, ConnectorDecision,
    Instantiation,
};
pub use kind::{Declaration, ElementKind, Family, Notation, PackageComponent};
pub use strings::{ImplementationConstraint, LangString, MultiLangString, Note, TaggedValue};
pub use transform::{
    cae_to_sacm, gsn_to_sacm, trace_lookup, trace_to_json, transform_document, TraceLink,
    TransformOutput,
};
pub use validate::{
    check, diagnostics_to_json, diagnostics_to_text, is_error_free, rule, Diagnostic, Rule,
    Severity, RULES,
};

pub mod fmt {
    //! Interchange format entry points.
    pub use crate::io::{load, load_file, save, save_file, FORMAT_VERSION};
}

pub use report::{render, ReportFormat, ReportOptions};
