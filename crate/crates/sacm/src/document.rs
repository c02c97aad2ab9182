//! Model documents: flat element stores with owner-link containment.
//!
//! A document is a value. Mutating operations take `&mut self`; sharing a
//! document read-only between threads is safe, and concurrent mutation is
//! ruled out by the borrow checker. Document order is the element order in
//! the store: insertion order for built documents, file order after loading.

use std::collections::HashSet;

use indexmap::IndexMap;

use crate::element::Element;
use crate::error::{Error, Result};
use crate::gid::Gid;
use crate::kind::{Declaration, ElementKind, Notation, PackageComponent};

#[derive(Debug, Clone, PartialEq)]
pub struct ModelDocument {
    notation: Notation,
    elements: IndexMap<Gid, Element>,
}

/// Result of resolving a citation chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CitationChain {
    /// Elements visited, starting with the element resolution began at.
    pub chain: Vec<Gid>,
    /// First element on the chain that is not itself a citation.
    pub terminal: Gid,
}

impl ModelDocument {
    pub fn new(notation: Notation) -> Self {
        ModelDocument {
            notation,
            elements: IndexMap::new(),
        }
    }

    /// New document containing one empty assurance case package named
    /// `root_name`. Returns the document and the package gid.
    pub fn create(root_name: &str) -> Result<(ModelDocument, Gid)> {
        if root_name.is_empty() {
            return Err(Error::InvalidArgument(
                "root package name must be non-empty".into(),
            ));
        }
        let mut doc = ModelDocument::new(Notation::Sacm);
        let gid = Gid::random();
        doc.insert(Element::new(gid.clone(), ElementKind::AssuranceCasePackage).named(root_name))?;
        Ok((doc, gid))
    }

    pub fn notation(&self) -> Notation {
        self.notation
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, gid: &Gid) -> bool {
        self.elements.contains_key(gid)
    }

    pub fn get(&self, gid: &Gid) -> Option<&Element> {
        self.elements.get(gid)
    }

    pub fn get_mut(&mut self, gid: &Gid) -> Option<&mut Element> {
        self.elements.get_mut(gid)
    }

    /// Like [`get`](Self::get) but failing with `MissingElement`.
    pub fn expect(&self, gid: &Gid) -> Result<&Element> {
        self.get(gid).ok_or_else(|| Error::MissingElement(gid.clone()))
    }

    pub fn expect_mut(&mut self, gid: &Gid) -> Result<&mut Element> {
        self.elements
            .get_mut(gid)
            .ok_or_else(|| Error::MissingElement(gid.clone()))
    }

    /// Elements in document order.
    pub fn iter(&self) -> impl Iterator<Item = &Element> {
        self.elements.values()
    }

    pub fn gids(&self) -> impl Iterator<Item = &Gid> {
        self.elements.keys()
    }

    /// Inserts an element, enforcing gid uniqueness, notation admission and
    /// the containment forest (owner exists, no ownership cycle, ownerless
    /// elements are packages).
    ///
    /// Payload-level well-formedness (endpoint kinds, citation discipline)
    /// is deliberately not enforced here: loading and test seeding need to
    /// construct ill-formed documents for validation to report on.
    pub fn insert(&mut self, element: Element) -> Result<Gid> {
        if element.gid.as_str().is_empty() {
            return Err(Error::InvalidArgument("element gid must be non-empty".into()));
        }
        if self.elements.contains_key(&element.gid) {
            return Err(Error::DuplicateGid(element.gid));
        }
        if !self.notation.admits(element.kind) {
            return Err(Error::KindMismatch(format!(
                "kind {} is not admitted in a {} document",
                element.kind, self.notation
            )));
        }
        match &element.owner {
            Some(owner) => {
                if !self.elements.contains_key(owner) {
                    return Err(Error::MissingElement(owner.clone()));
                }
                if *owner == element.gid {
                    return Err(Error::SelfReference(element.gid));
                }
            }
            None => {
                if !element.kind.is_package_like() {
                    return Err(Error::InvalidArgument(format!(
                        "top-level element '{}' must be a package, found {}",
                        element.gid, element.kind
                    )));
                }
            }
        }
        let gid = element.gid.clone();
        self.elements.insert(gid.clone(), element);
        Ok(gid)
    }

    /// Inserts without the structural checks. For construction paths that
    /// validate structure themselves (loading, transformation output) and
    /// may see children before their owners.
    pub(crate) fn insert_unchecked(&mut self, element: Element) -> Result<Gid> {
        if self.elements.contains_key(&element.gid) {
            return Err(Error::DuplicateGid(element.gid));
        }
        let gid = element.gid.clone();
        self.elements.insert(gid.clone(), element);
        Ok(gid)
    }

    /// Removes an element and everything it transitively owns. References
    /// from the remaining elements are left untouched; validation reports
    /// any dangling ones.
    pub fn remove(&mut self, gid: &Gid) -> Result<Vec<Element>> {
        if !self.elements.contains_key(gid) {
            return Err(Error::MissingElement(gid.clone()));
        }
        let doomed: Vec<Gid> = std::iter::once(gid.clone())
            .chain(self.descendants(gid))
            .collect();
        let mut removed = Vec::with_capacity(doomed.len());
        for g in &doomed {
            if let Some(e) = self.elements.shift_remove(g) {
                removed.push(e);
            }
        }
        Ok(removed)
    }

    /// Direct children (elements owned by `gid`) in document order.
    pub fn children<'a>(&'a self, gid: &'a Gid) -> impl Iterator<Item = &'a Element> {
        self.elements
            .values()
            .filter(move |e| e.owner.as_ref() == Some(gid))
    }

    /// Gids of all transitively owned elements, in document order.
    pub fn descendants(&self, root: &Gid) -> Vec<Gid> {
        let mut inside: HashSet<&Gid> = HashSet::new();
        inside.insert(root);
        let mut out = Vec::new();
        // Owners precede children in document order for built documents, but
        // not necessarily in loaded ones, so iterate until a fixed point.
        loop {
            let mut grew = false;
            for element in self.elements.values() {
                if inside.contains(&element.gid) {
                    continue;
                }
                if let Some(owner) = &element.owner {
                    if inside.contains(owner) {
                        inside.insert(&element.gid);
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
        for element in self.elements.values() {
            if element.gid != *root && inside.contains(&element.gid) {
                out.push(element.gid.clone());
            }
        }
        out
    }

    /// Top-level packages in document order.
    pub fn roots(&self) -> impl Iterator<Item = &Element> {
        self.elements.values().filter(|e| e.owner.is_none())
    }

    /// Walks owner links from `gid` to its root package. Fails on broken or
    /// cyclic owner chains.
    pub fn root_of(&self, gid: &Gid) -> Result<Gid> {
        let mut seen = HashSet::new();
        let mut current = self.expect(gid)?;
        while let Some(owner) = &current.owner {
            if !seen.insert(current.gid.clone()) {
                return Err(Error::InvalidArgument(format!(
                    "ownership cycle at '{}'",
                    current.gid
                )));
            }
            current = self.expect(owner)?;
        }
        Ok(current.gid.clone())
    }

    /// A gid based on `base` that is not yet taken in this document.
    pub fn fresh_gid(&self, base: &str) -> Gid {
        let candidate = Gid::new(base);
        if !self.elements.contains_key(&candidate) {
            return candidate;
        }
        for n in 2.. {
            let candidate = Gid::new(format!("{base}-{n}"));
            if !self.elements.contains_key(&candidate) {
                return candidate;
            }
        }
        unreachable!()
    }

    /// Makes `citing` a citation of `cited`. Citing claims switch their
    /// declaration to asCited; the kind table permits claim-to-claim,
    /// artifact-reference-to-anything and package-to-same-component-package
    /// citations. Self-citation is accepted here and reported as a cycle by
    /// validation.
    pub fn cite(&mut self, citing: &Gid, cited: &Gid) -> Result<()> {
        let cited_kind = self.expect(cited)?.kind;
        let citing_kind = self.expect(citing)?.kind;
        check_citation_kinds(citing_kind, cited_kind)?;
        let element = self.expect_mut(citing)?;
        element.is_citation = true;
        element.cited_element = Some(cited.clone());
        if let Some(claim) = element.claim_data_mut() {
            claim.declaration = Declaration::AsCited;
        }
        Ok(())
    }

    /// Follows cited-element links from `start` until a non-citation element
    /// is reached. Returns the full chain including `start`.
    pub fn resolve_citation(&self, start: &Gid) -> Result<CitationChain> {
        let mut chain = Vec::new();
        let mut seen = HashSet::new();
        let mut current = start.clone();
        loop {
            let element = self.expect(&current)?;
            if !seen.insert(current.clone()) {
                // The cycle is the tail of the chain from the repeated gid.
                let from = chain.iter().position(|g| *g == current).unwrap_or(0);
                return Err(Error::CitationCycle(chain[from..].to_vec()));
            }
            chain.push(current.clone());
            if !element.is_citation {
                return Ok(CitationChain {
                    terminal: current,
                    chain,
                });
            }
            match &element.cited_element {
                Some(next) => current = next.clone(),
                None => {
                    // Citation without a target: treated as terminal here,
                    // validation reports it.
                    return Ok(CitationChain {
                        terminal: current,
                        chain,
                    });
                }
            }
        }
    }
}

fn check_citation_kinds(citing: ElementKind, cited: ElementKind) -> Result<()> {
    let ok = if citing.is_claim_like() {
        cited.is_claim_like()
    } else if citing.is_artifact_reference_like() {
        // Every element kind is an artifact element.
        true
    } else if citing.is_package_like() {
        match (citing.package_component(), cited.package_component()) {
            (Some(a), Some(b)) => component_compatible(a, b),
            _ => false,
        }
    } else {
        false
    };
    if ok {
        Ok(())
    } else {
        Err(Error::KindMismatch(format!(
            "{citing} may not cite {cited}"
        )))
    }
}

fn component_compatible(a: PackageComponent, b: PackageComponent) -> bool {
    a == b
}
