//! Terminology operations: controlled vocabulary and expression rendering.

use crate::document::ModelDocument;
use crate::element::{Element, Payload};
use crate::error::{Error, Result};
use crate::gid::Gid;
use crate::kind::ElementKind;
use crate::placeholder::{self, Segment};

/// Rendering recursion limit; guards against accidental expression cycles.
pub const EXPRESSION_DEPTH_LIMIT: usize = 32;

impl ModelDocument {
    pub fn add_terminology_package(&mut self, owner: Option<&Gid>, gid: &str, name: &str) -> Result<Gid> {
        let mut pkg = Element::new(gid, ElementKind::TerminologyPackage).named(name);
        if let Some(owner) = owner {
            pkg = pkg.owned_by(owner.clone());
        }
        self.insert(pkg)
    }

    /// Defines a [`ElementKind::Term`] in a terminology package. The term may
    /// point at external material (a URI) or at a model element inside this
    /// assurance case (its origin); carrying both is flagged by validation.
    pub fn define_term(
        &mut self,
        pkg: &Gid,
        gid: &str,
        value: &str,
        external_reference: Option<&str>,
        origin: Option<&Gid>,
    ) -> Result<Gid> {
        if value.is_empty() {
            return Err(Error::InvalidArgument("term value must be non-empty".into()));
        }
        self.expect(pkg)?;
        if let Some(origin) = origin {
            self.expect(origin)?;
        }
        let element = Element::new(gid, ElementKind::Term)
            .owned_by(pkg.clone())
            .named(value)
            .with_payload(Payload::Term {
                value: value.to_string(),
                external_reference: external_reference.map(str::to_string),
                origin: origin.cloned(),
            });
        self.insert(element)
    }

    /// Adds an [`ElementKind::Expression`] modelling a phrase. Placeholders in
    /// `value` refer to the terms/expressions listed in `element_refs`,
    /// matched by label.
    pub fn add_expression(
        &mut self,
        pkg: &Gid,
        gid: &str,
        value: &str,
        element_refs: &[Gid],
    ) -> Result<Gid> {
        if value.is_empty() {
            return Err(Error::InvalidArgument(
                "expression value must be non-empty".into(),
            ));
        }
        self.expect(pkg)?;
        for r in element_refs {
            self.expect(r)?;
        }
        let element = Element::new(gid, ElementKind::Expression)
            .owned_by(pkg.clone())
            .with_payload(Payload::Expression {
                value: value.to_string(),
                element_refs: element_refs.to_vec(),
            });
        self.insert(element)
    }

    pub fn add_category(
        &mut self,
        pkg: &Gid,
        gid: &str,
        name: &str,
        members: &[Gid],
        external_reference: Option<&str>,
    ) -> Result<Gid> {
        self.expect(pkg)?;
        for m in members {
            self.expect(m)?;
        }
        let element = Element::new(gid, ElementKind::Category)
            .owned_by(pkg.clone())
            .named(name)
            .with_payload(Payload::Category {
                members: members.to_vec(),
                external_reference: external_reference.map(str::to_string),
            });
        self.insert(element)
    }

    /// Renders an expression's text. Placeholders referring to concrete
    /// terms are replaced by the term value; placeholders referring to
    /// abstract elements stay verbatim (they are template roles that have
    /// not been instantiated yet). Nested expressions render recursively.
    pub fn render_expression(&self, expr: &Gid) -> Result<String> {
        self.render_expression_at(expr, 0)
    }

    fn render_expression_at(&self, expr: &Gid, depth: usize) -> Result<String> {
        if depth >= EXPRESSION_DEPTH_LIMIT {
            return Err(Error::DepthExceeded {
                element: expr.clone(),
                limit: EXPRESSION_DEPTH_LIMIT,
            });
        }
        let element = self.expect(expr)?;
        let (value, element_refs) = match &element.payload {
            Payload::Expression { value, element_refs } => (value, element_refs),
            _ => {
                return Err(Error::KindMismatch(format!(
                    "'{expr}' is a {}, not an Expression",
                    element.kind
                )))
            }
        };
        let segments =
            placeholder::parse(value).map_err(|_| Error::UnbalancedBraces(expr.clone()))?;
        let mut out = String::new();
        for segment in segments {
            match segment {
                Segment::Text(text) => out.push_str(&text),
                Segment::Role(label) => {
                    let target_gid = self.match_ref_by_label(expr, element_refs, &label)?;
                    let target = self.expect(&target_gid)?;
                    if target.is_abstract {
                        out.push('{');
                        out.push_str(&label);
                        out.push('}');
                        continue;
                    }
                    match &target.payload {
                        Payload::Term { value, .. } => out.push_str(value),
                        Payload::Expression { .. } => {
                            out.push_str(&self.render_expression_at(&target_gid, depth + 1)?)
                        }
                        _ => {
                            return Err(Error::KindMismatch(format!(
                                "expression reference '{target_gid}' is a {}, expected Term or Expression",
                                target.kind
                            )))
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Finds the element reference whose label matches a placeholder. The
    /// label of a referenced term/expression is its name when present,
    /// otherwise its value.
    fn match_ref_by_label(&self, expr: &Gid, refs: &[Gid], label: &str) -> Result<Gid> {
        for gid in refs {
            let target = self.expect(gid)?;
            if expression_label(target) == Some(label) {
                return Ok(gid.clone());
            }
        }
        Err(Error::UnboundPlaceholder {
            expression: expr.clone(),
            label: label.to_string(),
        })
    }
}

/// Placeholder label a term/expression answers to.
pub fn expression_label(element: &Element) -> Option<&str> {
    if let Some(name) = &element.name {
        return Some(&name.content);
    }
    match &element.payload {
        Payload::Term { value, .. } | Payload::Expression { value, .. } => Some(value),
        _ => None,
    }
}
