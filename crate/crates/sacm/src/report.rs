//! Human-readable report generation (markdown or plain text).
//!
//! The report is deterministic for a fixed document and options: sections
//! are emitted in a fixed order, entries sorted by gid, and every element
//! of the document gets exactly one entry line of the form `- [gid] …` (or
//! one table row `| [gid] | …` in the markdown claim table).

use std::fmt::Write as _;

use crate::document::ModelDocument;
use crate::element::{Element, Payload};
use crate::error::Result;
use crate::gid::Gid;
use crate::kind::{ElementKind, Family};
use crate::validate;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Markdown,
    Text,
}

impl std::str::FromStr for ReportFormat {
    type Err = crate::error::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "md" => Ok(ReportFormat::Markdown),
            "txt" => Ok(ReportFormat::Text),
            other => Err(crate::error::Error::InvalidArgument(format!(
                "unknown report format '{other}' (expected md or txt)"
            ))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct ReportOptions {
    pub lang: String,
    pub format: ReportFormat,
    pub include_diagnostics: bool,
    pub include_terminology: bool,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            lang: "en".to_string(),
            format: ReportFormat::Markdown,
            include_diagnostics: false,
            include_terminology: true,
        }
    }
}

/// Renders the document as a report.
pub fn render(doc: &ModelDocument, options: &ReportOptions) -> Vec<u8> {
    let mut out = String::new();
    let md = options.format == ReportFormat::Markdown;
    let lang = options.lang.as_str();

    if md {
        out.push_str("# Assurance Case Report\n\n");
    } else {
        out.push_str("ASSURANCE CASE REPORT\n\n");
    }
    let _ = writeln!(out, "- Notation: {}", doc.notation());
    let _ = writeln!(out, "- Elements: {}", doc.len());
    let _ = writeln!(out, "- Language: {lang}");

    let mut sorted: Vec<&Element> = doc.iter().collect();
    sorted.sort_by(|a, b| a.gid.cmp(&b.gid));

    // Package structure as a tree, roots and children in gid order.
    let packages: Vec<&Element> = sorted
        .iter()
        .filter(|e| e.kind.is_package_like())
        .copied()
        .collect();
    if !packages.is_empty() {
        section(&mut out, md, "Package Structure");
        let mut roots: Vec<&Element> = doc.roots().filter(|e| e.kind.is_package_like()).collect();
        roots.sort_by(|a, b| a.gid.cmp(&b.gid));
        for root in roots {
            package_tree(doc, root, 0, lang, &mut out);
        }
    }

    let claims: Vec<&Element> = sorted
        .iter()
        .filter(|e| e.kind.is_claim_like())
        .copied()
        .collect();
    if !claims.is_empty() {
        section(&mut out, md, "Claims");
        if md {
            out.push_str("| Gid | Name | Declaration | Status |\n");
            out.push_str("|---|---|---|---|\n");
        }
        for claim in claims {
            let declaration = claim
                .declaration()
                .map(|d| d.as_str().to_string())
                .unwrap_or_else(|| "-".to_string());
            let text = element_text(claim, lang);
            if md {
                let _ = writeln!(
                    out,
                    "| [{}] | {} | {} | - |",
                    claim.gid,
                    escape_cell(&text),
                    declaration
                );
            } else {
                let _ = writeln!(out, "- [{}] {} ({})", claim.gid, text, declaration);
            }
        }
    }

    let argument_elements: Vec<&Element> = sorted
        .iter()
        .filter(|e| {
            matches!(
                e.kind.family(),
                Family::ArtifactReference | Family::Reasoning | Family::Strategy | Family::Context
            )
        })
        .copied()
        .collect();
    if !argument_elements.is_empty() {
        section(&mut out, md, "Argument Elements");
        for element in argument_elements {
            let text = element_text(element, lang);
            let detail = match &element.payload {
                Payload::ArtifactReference {
                    referenced_artifact, ..
                } => format!(" -> {referenced_artifact}"),
                Payload::Context {
                    statement,
                    referenced_artifact,
                } => match (statement, referenced_artifact) {
                    (Some(s), _) => format!(": {s}"),
                    (None, Some(a)) => format!(" -> {a}"),
                    (None, None) => String::new(),
                },
                _ => String::new(),
            };
            let _ = writeln!(out, "- [{}] {} {}{}", element.gid, element.kind, text, detail);
        }
    }

    let relationships: Vec<&Element> = sorted
        .iter()
        .filter(|e| e.kind.is_edge())
        .copied()
        .collect();
    if !relationships.is_empty() {
        section(&mut out, md, "Relationships");
        for element in relationships {
            let edge = element.edge().expect("edge families");
            let sources = join_gids(edge.sources);
            let targets = join_gids(edge.targets);
            let mut line = format!("- [{}] {}: {} -> {}", element.gid, element.kind, sources, targets);
            if edge.is_counter {
                line.push_str(" (counter)");
            }
            if let Some(reasoning) = edge.reasoning {
                let _ = write!(line, " (reasoning: {reasoning})");
            }
            out.push_str(&line);
            out.push('\n');
        }
    }

    if options.include_terminology {
        let terminology: Vec<&Element> = sorted
            .iter()
            .filter(|e| {
                matches!(e.kind.family(), Family::Term | Family::Expression | Family::Category)
                    || e.kind == ElementKind::TerminologyGroup
            })
            .copied()
            .collect();
        if !terminology.is_empty() {
            section(&mut out, md, "Terminology");
            for element in terminology {
                match &element.payload {
                    Payload::Term {
                        value,
                        external_reference,
                        origin,
                    } => {
                        let mut line = format!("- [{}] Term \"{value}\"", element.gid);
                        if let Ok(description) = element.description.localize(lang) {
                            if description != value {
                                let _ = write!(line, ": {description}");
                            }
                        }
                        if let Some(ext) = external_reference {
                            let _ = write!(line, " (external: {ext})");
                        }
                        if let Some(origin) = origin {
                            let _ = write!(line, " (origin: {origin})");
                        }
                        out.push_str(&line);
                        out.push('\n');
                    }
                    Payload::Expression { value, element_refs } => {
                        let mut line = format!("- [{}] Expression \"{value}\"", element.gid);
                        if !element_refs.is_empty() {
                            let _ = write!(line, " (refs: {})", join_gids(element_refs));
                        }
                        out.push_str(&line);
                        out.push('\n');
                    }
                    Payload::Category {
                        members,
                        external_reference,
                    } => {
                        let mut line =
                            format!("- [{}] Category {}", element.gid, element_text(element, lang));
                        if !members.is_empty() {
                            let _ = write!(line, " (members: {})", join_gids(members));
                        }
                        if let Some(ext) = external_reference {
                            let _ = write!(line, " (external: {ext})");
                        }
                        out.push_str(&line);
                        out.push('\n');
                    }
                    Payload::Group { members } => {
                        let _ = writeln!(
                            out,
                            "- [{}] Group {} (members: {})",
                            element.gid,
                            element_text(element, lang),
                            join_gids(members)
                        );
                    }
                    _ => {}
                }
            }
        }
    }

    let artifacts: Vec<&Element> = sorted
        .iter()
        .filter(|e| {
            matches!(e.kind.family(), Family::Asset | Family::Property)
                || e.kind == ElementKind::ArtifactGroup
        })
        .copied()
        .collect();
    if !artifacts.is_empty() {
        section(&mut out, md, "Artifact Inventory");
        for element in artifacts {
            match &element.payload {
                Payload::Asset => {
                    let mut line = format!(
                        "- [{}] {} {}",
                        element.gid,
                        element.kind,
                        element_text(element, lang)
                    );
                    if let Some(uri) = doc.external_resource(&element.gid) {
                        let _ = write!(line, " (URI: {uri})");
                    }
                    out.push_str(&line);
                    out.push('\n');
                }
                Payload::Property => {
                    let value = element
                        .description
                        .localize(lang)
                        .unwrap_or_default()
                        .to_string();
                    let owner = element
                        .owner
                        .as_ref()
                        .map(|o| format!(" of {o}"))
                        .unwrap_or_default();
                    let _ = writeln!(
                        out,
                        "- [{}] Property {}{} = \"{value}\"",
                        element.gid,
                        element.display_name(),
                        owner
                    );
                }
                Payload::Group { members } => {
                    let _ = writeln!(
                        out,
                        "- [{}] Group {} (members: {})",
                        element.gid,
                        element_text(element, lang),
                        join_gids(members)
                    );
                }
                _ => {}
            }
        }
    }

    if options.include_diagnostics {
        let diags = validate::check(doc);
        section(&mut out, md, "Diagnostics");
        if diags.is_empty() {
            out.push_str("- none\n");
        } else {
            for d in diags {
                let _ = writeln!(out, "- {}", d.to_line());
            }
        }
    }

    // When terminology is suppressed the terminology elements still need
    // their entry so the report stays a complete inventory.
    if !options.include_terminology {
        let hidden: Vec<&Element> = sorted
            .iter()
            .filter(|e| {
                matches!(e.kind.family(), Family::Term | Family::Expression | Family::Category)
                    || e.kind == ElementKind::TerminologyGroup
            })
            .copied()
            .collect();
        if !hidden.is_empty() {
            section(&mut out, md, "Other Elements");
            for element in hidden {
                let _ = writeln!(out, "- [{}] {}", element.gid, element.kind);
            }
        }
    }

    out.into_bytes()
}

fn section(out: &mut String, md: bool, title: &str) {
    if md {
        let _ = write!(out, "\n## {title}\n\n");
    } else {
        let _ = write!(out, "\n== {title} ==\n\n");
    }
}

fn package_tree(doc: &ModelDocument, package: &Element, depth: usize, lang: &str, out: &mut String) {
    let indent = "  ".repeat(depth);
    let _ = writeln!(
        out,
        "{indent}- [{}] {} ({})",
        package.gid,
        element_text(package, lang),
        package.kind
    );
    let mut children: Vec<&Element> = doc
        .children(&package.gid)
        .filter(|e| e.kind.is_package_like())
        .collect();
    children.sort_by(|a, b| a.gid.cmp(&b.gid));
    for child in children {
        package_tree(doc, child, depth + 1, lang, out);
    }
}

/// Name plus localized description, falling back to the gid.
fn element_text(element: &Element, lang: &str) -> String {
    let name = element.display_name();
    match element.description.localize(lang) {
        Ok(description) if description != name => format!("{name}: {description}"),
        _ => name.to_string(),
    }
}

fn join_gids(gids: &[Gid]) -> String {
    gids.iter()
        .map(Gid::as_str)
        .collect::<Vec<_>>()
        .join(", ")
}

fn escape_cell(text: &str) -> String {
    text.replace('|', "\\|")
}
