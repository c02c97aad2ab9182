//! Artifact operations: evidence assets, grouping and external resources.
//!
//! External materials are referenced through properties: a property named
//! "URI" holds the location of the material, an optional property named
//! "QUERY" holds a query into it, recorded verbatim and never executed.

use std::path::{Path, PathBuf};

use crate::document::ModelDocument;
use crate::element::{Element, Payload};
use crate::error::{Error, Result};
use crate::gid::Gid;
use crate::kind::{ElementKind, Family};

/// Property name marking the external location of an asset.
pub const URI_PROPERTY: &str = "URI";
/// Property name carrying a verbatim query into external material.
pub const QUERY_PROPERTY: &str = "QUERY";
/// Property name stating the purpose of an asset relationship.
pub const PURPOSE_PROPERTY: &str = "purpose";

/// Outcome of probing an asset's external resource on disk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResourceResolution {
    pub uri: String,
    pub resolved_path: PathBuf,
    pub exists: bool,
}

impl ModelDocument {
    pub fn add_artifact_package(&mut self, owner: Option<&Gid>, gid: &str, name: &str) -> Result<Gid> {
        let mut pkg = Element::new(gid, ElementKind::ArtifactPackage).named(name);
        if let Some(owner) = owner {
            pkg = pkg.owned_by(owner.clone());
        }
        self.insert(pkg)
    }

    /// Creates an artifact asset of the given kind inside `pkg`.
    pub fn add_asset(&mut self, pkg: &Gid, kind: ElementKind, name: &str) -> Result<Gid> {
        if kind.family() != Family::Asset {
            return Err(Error::InvalidArgument(format!(
                "{kind} is not an artifact asset kind"
            )));
        }
        self.expect(pkg)?;
        let gid = self.fresh_gid(&format!("{pkg}.{}", name_slug(name)));
        self.insert(Element::new(gid, kind).owned_by(pkg.clone()).named(name))
    }

    /// Attaches or replaces the URI property of an asset. The property is a
    /// child element whose name is exactly "URI" and whose description holds
    /// the location.
    pub fn set_external_resource(&mut self, asset: &Gid, uri: &str) -> Result<Gid> {
        self.set_named_property(asset, URI_PROPERTY, uri)
    }

    /// Attaches or replaces the QUERY property of an asset.
    pub fn set_external_query(&mut self, asset: &Gid, query: &str) -> Result<Gid> {
        self.set_named_property(asset, QUERY_PROPERTY, query)
    }

    fn set_named_property(&mut self, owner: &Gid, prop_name: &str, text: &str) -> Result<Gid> {
        let kind = self.expect(owner)?.kind;
        if !kind.is_artifact_asset() {
            return Err(Error::KindMismatch(format!(
                "'{owner}' is a {kind}, properties attach to artifact assets"
            )));
        }
        let existing: Vec<Gid> = self
            .children(owner)
            .filter(|e| e.kind == ElementKind::Property && e.display_name() == prop_name)
            .map(|e| e.gid.clone())
            .collect();
        for gid in existing {
            self.remove(&gid)?;
        }
        let gid = self.fresh_gid(&format!("{owner}.{}", prop_name.to_lowercase()));
        self.insert(
            Element::new(gid, ElementKind::Property)
                .owned_by(owner.clone())
                .named(prop_name)
                .described(text),
        )
    }

    /// The URI property value of an asset, if any.
    pub fn external_resource(&self, asset: &Gid) -> Option<String> {
        self.children(asset)
            .find(|e| e.kind == ElementKind::Property && e.display_name() == URI_PROPERTY)
            .and_then(|p| p.description.localize("en").ok().map(str::to_string))
    }

    /// Checks whether the asset's URI names an existing file. Relative URIs
    /// resolve against `base_dir` (the directory the document was loaded
    /// from). Never fails on absent files; only on a missing URI property.
    pub fn resolve_external_resource(
        &self,
        asset: &Gid,
        base_dir: &Path,
    ) -> Result<ResourceResolution> {
        self.expect(asset)?;
        let uri = self
            .external_resource(asset)
            .ok_or_else(|| Error::NoUriProperty(asset.clone()))?;
        let candidate = Path::new(&uri);
        let resolved_path = if candidate.is_absolute() {
            candidate.to_path_buf()
        } else {
            base_dir.join(candidate)
        };
        let exists = resolved_path.exists();
        Ok(ResourceResolution {
            uri,
            resolved_path,
            exists,
        })
    }

    /// Links artifact assets with an [`ElementKind::ArtifactAssetRelationship`].
    /// When `purpose` is given it is recorded as a child property named
    /// "purpose". The relationship is owned by the first source's package.
    pub fn relate_assets(
        &mut self,
        source_ids: &[Gid],
        target_ids: &[Gid],
        purpose: Option<&str>,
    ) -> Result<Gid> {
        if source_ids.is_empty() || target_ids.is_empty() {
            return Err(Error::InvalidArgument(
                "asset relationship needs at least one source and one target".into(),
            ));
        }
        for gid in source_ids.iter().chain(target_ids) {
            let kind = self.expect(gid)?.kind;
            if !kind.is_artifact_asset() {
                return Err(Error::KindMismatch(format!(
                    "asset relationship endpoint '{gid}' is a {kind}"
                )));
            }
        }
        let owner = self
            .expect(&source_ids[0])?
            .owner
            .clone()
            .ok_or_else(|| Error::InvalidArgument("source asset has no owning package".into()))?;
        let gid = self.fresh_gid(&format!("{}.rel", source_ids[0]));
        let gid = self.insert(
            Element::new(gid, ElementKind::ArtifactAssetRelationship)
                .owned_by(owner)
                .with_payload(Payload::AssetRelationship {
                    sources: source_ids.to_vec(),
                    targets: target_ids.to_vec(),
                }),
        )?;
        if let Some(purpose) = purpose {
            self.set_named_property(&gid, PURPOSE_PROPERTY, purpose)?;
        }
        Ok(gid)
    }

    /// Groups artifact elements. Rejects membership that would make a group
    /// transitively contain itself.
    pub fn add_artifact_group(&mut self, pkg: &Gid, gid: &str, name: &str, members: &[Gid]) -> Result<Gid> {
        self.expect(pkg)?;
        for m in members {
            // A member chain reaching the new gid (possible through dangling
            // forward references in seeded documents) would close a cycle.
            if m.as_str() == gid || self.group_reaches(m, &Gid::new(gid)) {
                return Err(Error::SelfReference(Gid::new(gid)));
            }
            self.expect(m)?;
        }
        self.insert(
            Element::new(gid, ElementKind::ArtifactGroup)
                .owned_by(pkg.clone())
                .named(name)
                .with_payload(Payload::Group {
                    members: members.to_vec(),
                }),
        )
    }

    fn group_reaches(&self, from: &Gid, needle: &Gid) -> bool {
        let mut stack = vec![from.clone()];
        let mut seen = std::collections::HashSet::new();
        while let Some(gid) = stack.pop() {
            if gid == *needle {
                return true;
            }
            if !seen.insert(gid.clone()) {
                continue;
            }
            if let Some(element) = self.get(&gid) {
                if let Payload::Group { members } | Payload::Category { members, .. } =
                    &element.payload
                {
                    stack.extend(members.iter().cloned());
                }
            }
        }
        false
    }
}

fn name_slug(name: &str) -> String {
    let slug: String = name
        .chars()
        .map(|c| if c.is_alphanumeric() { c.to_ascii_lowercase() } else { '-' })
        .collect();
    slug.trim_matches('-').chars().take(24).collect()
}
