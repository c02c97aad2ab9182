//! Role placeholder syntax: curly-brace-delimited labels inside text.
//!
//! `"{System X} is safe"` contains the role `System X`. Literal braces are
//! escaped by doubling (`{{`, `}}`). Labels may not be empty or contain
//! braces.

/// A parsed piece of placeholder-bearing text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Segment {
    /// Literal text with escapes already resolved.
    Text(String),
    /// A role label, without the braces.
    Role(String),
}

/// Errors are positions only; callers attach the owning element's gid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BraceError {
    pub position: usize,
}

/// Splits text into literal and role segments.
pub fn parse(text: &str) -> Result<Vec<Segment>, BraceError> {
    let mut segments = Vec::new();
    let mut literal = String::new();
    let mut chars = text.char_indices().peekable();
    while let Some((pos, ch)) = chars.next() {
        match ch {
            '{' => {
                if matches!(chars.peek(), Some((_, '{'))) {
                    chars.next();
                    literal.push('{');
                    continue;
                }
                let mut label = String::new();
                let mut closed = false;
                for (p, c) in chars.by_ref() {
                    match c {
                        '}' => {
                            closed = true;
                            break;
                        }
                        '{' => return Err(BraceError { position: p }),
                        other => label.push(other),
                    }
                }
                if !closed || label.is_empty() {
                    return Err(BraceError { position: pos });
                }
                if !literal.is_empty() {
                    segments.push(Segment::Text(std::mem::take(&mut literal)));
                }
                segments.push(Segment::Role(label));
            }
            '}' => {
                if matches!(chars.peek(), Some((_, '}'))) {
                    chars.next();
                    literal.push('}');
                } else {
                    return Err(BraceError { position: pos });
                }
            }
            other => literal.push(other),
        }
    }
    if !literal.is_empty() {
        segments.push(Segment::Text(literal));
    }
    Ok(segments)
}

/// Role labels occurring in `text`, in order of first occurrence.
pub fn roles(text: &str) -> Result<Vec<String>, BraceError> {
    let mut out = Vec::new();
    for segment in parse(text)? {
        if let Segment::Role(label) = segment {
            if !out.contains(&label) {
                out.push(label);
            }
        }
    }
    Ok(out)
}

/// True when the text contains at least one role placeholder. Unbalanced
/// braces count as residual placeholder material.
pub fn has_placeholders(text: &str) -> bool {
    match parse(text) {
        Ok(segments) => segments.iter().any(|s| matches!(s, Segment::Role(_))),
        Err(_) => true,
    }
}

/// Substitutes each role via `lookup`; roles mapped to `None` are kept
/// verbatim as `{label}`. Escaped braces stay escaped so the output parses
/// the same way the input did.
pub fn substitute(
    text: &str,
    mut lookup: impl FnMut(&str) -> Option<String>,
) -> Result<String, BraceError> {
    let mut out = String::with_capacity(text.len());
    for segment in parse(text)? {
        match segment {
            Segment::Text(literal) => out.push_str(&escape(&literal)),
            Segment::Role(label) => match lookup(&label) {
                Some(value) => out.push_str(&escape(&value)),
                None => {
                    out.push('{');
                    out.push_str(&label);
                    out.push('}');
                }
            },
        }
    }
    Ok(out)
}

fn escape(text: &str) -> String {
    text.replace('{', "{{").replace('}', "}}")
}
