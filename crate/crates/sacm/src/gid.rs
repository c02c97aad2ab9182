//! Global element identifiers.

use std::fmt;
use std::sync::Arc;

use uuid::Uuid;

/// Global identifier of a model element.
///
/// Gids are opaque text. Authored files typically use short readable ids
/// ("G1", "AP2"); generated elements get UUID-style ids.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gid(Arc<str>);

impl Gid {
    pub fn new(id: impl AsRef<str>) -> Self {
        Gid(Arc::from(id.as_ref()))
    }

    /// Fresh random identifier for elements created without an explicit gid.
    pub fn random() -> Self {
        Gid(Arc::from(Uuid::new_v4().to_string().as_str()))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Gid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Gid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gid({})", self.0)
    }
}

impl From<&str> for Gid {
    fn from(s: &str) -> Self {
        Gid::new(s)
    }
}

impl From<String> for Gid {
    fn from(s: String) -> Self {
        Gid::new(s)
    }
}

impl PartialEq<str> for Gid {
    fn eq(&self, other: &str) -> bool {
        self.as_str() == other
    }
}

impl PartialEq<&str> for Gid {
    fn eq(&self, other: &&str) -> bool {
        self.as_str() == *other
    }
}
