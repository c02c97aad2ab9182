//! Element kind catalog and structural classification.
//!
//! Every element carries one leaf kind. Kinds are grouped into payload
//! families (which fields an element carries) and notation tiers (which
//! documents may contain it): core kinds are valid everywhere, GSN and CAE
//! kinds only in documents of their notation.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// Document notation tier.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Notation {
    Sacm,
    Gsn,
    Cae,
}

impl Notation {
    pub fn as_str(self) -> &'static str {
        match self {
            Notation::Sacm => "sacm",
            Notation::Gsn => "gsn",
            Notation::Cae => "cae",
        }
    }

    /// Whether a document of this notation may contain the given kind.
    pub fn admits(self, kind: ElementKind) -> bool {
        match kind.notation() {
            Notation::Sacm => true,
            other => other == self,
        }
    }
}

impl FromStr for Notation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "sacm" => Ok(Notation::Sacm),
            "gsn" => Ok(Notation::Gsn),
            "cae" => Ok(Notation::Cae),
            other => Err(Error::InvalidArgument(format!(
                "unknown notation '{other}' (expected sacm, gsn or cae)"
            ))),
        }
    }
}

impl fmt::Display for Notation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Status flag of an assertion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Declaration {
    /// Made and supported by argument/evidence (the default).
    #[default]
    Asserted,
    /// Not supported yet; needs further development.
    NeedsSupport,
    /// Truth assumed without supporting evidence.
    Assumed,
    /// Axiomatically true; needs no support.
    Axiomatic,
    /// Invalidated by counter-evidence or counter-argument.
    Defeated,
    /// Truth derived from the cited assertion.
    AsCited,
}

impl Declaration {
    pub fn as_str(self) -> &'static str {
        match self {
            Declaration::Asserted => "asserted",
            Declaration::NeedsSupport => "needsSupport",
            Declaration::Assumed => "assumed",
            Declaration::Axiomatic => "axiomatic",
            Declaration::Defeated => "defeated",
            Declaration::AsCited => "asCited",
        }
    }
}

impl FromStr for Declaration {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "asserted" => Ok(Declaration::Asserted),
            "needsSupport" => Ok(Declaration::NeedsSupport),
            "assumed" => Ok(Declaration::Assumed),
            "axiomatic" => Ok(Declaration::Axiomatic),
            "defeated" => Ok(Declaration::Defeated),
            "asCited" => Ok(Declaration::AsCited),
            other => Err(Error::InvalidArgument(format!(
                "unknown declaration '{other}'"
            ))),
        }
    }
}

impl fmt::Display for Declaration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Payload family: which field set an element of a given kind carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Package,
    Binding,
    Group,
    Category,
    Asset,
    Property,
    AssetRelationship,
    Term,
    Expression,
    Claim,
    Goal,
    AwayGoal,
    Relationship,
    Connector,
    ArtifactReference,
    Reasoning,
    Strategy,
    Context,
}

macro_rules! element_kinds {
    ($( $variant:ident => ($name:literal, $notation:ident, $family:ident) ),+ $(,)?) => {
        /// Leaf kind of a model element.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
        pub enum ElementKind {
            $( $variant, )+
        }

        impl ElementKind {
            /// Canonical kind name used in the interchange format.
            pub fn name(self) -> &'static str {
                match self {
                    $( ElementKind::$variant => $name, )+
                }
            }

            /// Lowest notation tier the kind belongs to.
            pub fn notation(self) -> Notation {
                match self {
                    $( ElementKind::$variant => Notation::$notation, )+
                }
            }

            /// Payload family the kind carries.
            pub fn family(self) -> Family {
                match self {
                    $( ElementKind::$variant => Family::$family, )+
                }
            }

            pub fn parse(name: &str) -> Option<ElementKind> {
                match name {
                    $( $name => Some(ElementKind::$variant), )+
                    _ => None,
                }
            }

            pub const ALL: &'static [ElementKind] = &[ $( ElementKind::$variant, )+ ];
        }
    };
}

element_kinds! {
    // Assurance case component
    AssuranceCasePackage => ("AssuranceCasePackage", Sacm, Package),
    AssuranceCasePackageInterface => ("AssuranceCasePackageInterface", Sacm, Package),
    AssuranceCasePackageBinding => ("AssuranceCasePackageBinding", Sacm, Binding),
    // Artifact component
    ArtifactPackage => ("ArtifactPackage", Sacm, Package),
    ArtifactPackageInterface => ("ArtifactPackageInterface", Sacm, Package),
    ArtifactPackageBinding => ("ArtifactPackageBinding", Sacm, Binding),
    ArtifactGroup => ("ArtifactGroup", Sacm, Group),
    Artifact => ("Artifact", Sacm, Asset),
    Activity => ("Activity", Sacm, Asset),
    Event => ("Event", Sacm, Asset),
    Participant => ("Participant", Sacm, Asset),
    Technique => ("Technique", Sacm, Asset),
    Resource => ("Resource", Sacm, Asset),
    Property => ("Property", Sacm, Property),
    ArtifactAssetRelationship => ("ArtifactAssetRelationship", Sacm, AssetRelationship),
    // Terminology component
    TerminologyPackage => ("TerminologyPackage", Sacm, Package),
    TerminologyInterface => ("TerminologyInterface", Sacm, Package),
    TerminologyPackageBinding => ("TerminologyPackageBinding", Sacm, Binding),
    TerminologyGroup => ("TerminologyGroup", Sacm, Group),
    Term => ("Term", Sacm, Term),
    Expression => ("Expression", Sacm, Expression),
    Category => ("Category", Sacm, Category),
    // Argumentation component
    ArgumentPackage => ("ArgumentPackage", Sacm, Package),
    ArgumentPackageInterface => ("ArgumentPackageInterface", Sacm, Package),
    ArgumentPackageBinding => ("ArgumentPackageBinding", Sacm, Binding),
    Claim => ("Claim", Sacm, Claim),
    AssertedInference => ("AssertedInference", Sacm, Relationship),
    AssertedEvidence => ("AssertedEvidence", Sacm, Relationship),
    AssertedContext => ("AssertedContext", Sacm, Relationship),
    AssertedArtifactSupport => ("AssertedArtifactSupport", Sacm, Relationship),
    AssertedArtifactContext => ("AssertedArtifactContext", Sacm, Relationship),
    ArtifactReference => ("ArtifactReference", Sacm, ArtifactReference),
    ArgumentReasoning => ("ArgumentReasoning", Sacm, Reasoning),
    // GSN notation
    GsnModule => ("GsnModule", Gsn, Package),
    ContractModule => ("ContractModule", Gsn, Binding),
    Goal => ("Goal", Gsn, Goal),
    Assumption => ("Assumption", Gsn, Claim),
    Justification => ("Justification", Gsn, Claim),
    AwayGoal => ("AwayGoal", Gsn, AwayGoal),
    Solution => ("Solution", Gsn, ArtifactReference),
    AwaySolution => ("AwaySolution", Gsn, ArtifactReference),
    AwayContext => ("AwayContext", Gsn, ArtifactReference),
    ModuleReference => ("ModuleReference", Gsn, ArtifactReference),
    ContractModuleReference => ("ContractModuleReference", Gsn, ArtifactReference),
    Context => ("Context", Gsn, Context),
    SupportedBy => ("SupportedBy", Gsn, Connector),
    InContextOf => ("InContextOf", Gsn, Connector),
    Strategy => ("Strategy", Gsn, Strategy),
    // CAE notation
    CaeModule => ("CAEModule", Cae, Package),
    CaeModuleInterface => ("CAEModuleInterface", Cae, Package),
    CaeModuleBinding => ("CAEModuleBinding", Cae, Binding),
    CaeClaim => ("CAEClaim", Cae, Claim),
    CaeAssumption => ("CAEAssumption", Cae, Claim),
    Argument => ("Argument", Cae, Reasoning),
    Evidence => ("Evidence", Cae, ArtifactReference),
    IsEvidenceFor => ("IsEvidenceFor", Cae, Relationship),
    IsSubClaimOf => ("IsSubClaimOf", Cae, Relationship),
    Supports => ("Supports", Cae, Relationship),
}

/// Component a package kind belongs to; used by the citation kind table
/// (packages may only cite packages of the same component).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PackageComponent {
    AssuranceCase,
    Artifact,
    Terminology,
    Argumentation,
}

impl ElementKind {
    /// Packages, interfaces and bindings: the containment roots.
    pub fn is_package_like(self) -> bool {
        matches!(self.family(), Family::Package | Family::Binding)
    }

    pub fn is_interface(self) -> bool {
        matches!(
            self,
            ElementKind::AssuranceCasePackageInterface
                | ElementKind::ArtifactPackageInterface
                | ElementKind::TerminologyInterface
                | ElementKind::ArgumentPackageInterface
                | ElementKind::CaeModuleInterface
        )
    }

    pub fn is_binding(self) -> bool {
        self.family() == Family::Binding
    }

    /// Claims in the SACM sense, including the GSN/CAE claim subtypes.
    pub fn is_claim_like(self) -> bool {
        matches!(self.family(), Family::Claim | Family::Goal | Family::AwayGoal)
    }

    /// Assertions: claims plus asserted relationships (relationships are
    /// themselves assertions and can carry declarations and meta-claims).
    pub fn is_assertion(self) -> bool {
        self.is_claim_like() || matches!(self.family(), Family::Relationship | Family::Connector)
    }

    pub fn is_artifact_reference_like(self) -> bool {
        self.family() == Family::ArtifactReference
    }

    pub fn is_reasoning_like(self) -> bool {
        matches!(self.family(), Family::Reasoning | Family::Strategy)
    }

    /// Artifact assets, including asset relationships.
    pub fn is_artifact_asset(self) -> bool {
        matches!(self.family(), Family::Asset | Family::AssetRelationship)
    }

    /// Inference-flavoured edges: truth of targets follows from sources.
    pub fn is_inference_edge(self) -> bool {
        matches!(
            self,
            ElementKind::AssertedInference
                | ElementKind::SupportedBy
                | ElementKind::IsSubClaimOf
                | ElementKind::Supports
        )
    }

    /// Evidence-flavoured edges: artifact references supporting assertions.
    pub fn is_evidence_edge(self) -> bool {
        matches!(self, ElementKind::AssertedEvidence | ElementKind::IsEvidenceFor)
    }

    pub fn is_context_edge(self) -> bool {
        matches!(self, ElementKind::AssertedContext | ElementKind::InContextOf)
    }

    /// Any edge element: asserted relationship, GSN connector or artifact
    /// asset relationship.
    pub fn is_edge(self) -> bool {
        matches!(
            self.family(),
            Family::Relationship | Family::Connector | Family::AssetRelationship
        )
    }

    pub fn package_component(self) -> Option<PackageComponent> {
        match self {
            ElementKind::AssuranceCasePackage
            | ElementKind::AssuranceCasePackageInterface
            | ElementKind::AssuranceCasePackageBinding => Some(PackageComponent::AssuranceCase),
            ElementKind::ArtifactPackage
            | ElementKind::ArtifactPackageInterface
            | ElementKind::ArtifactPackageBinding => Some(PackageComponent::Artifact),
            ElementKind::TerminologyPackage
            | ElementKind::TerminologyInterface
            | ElementKind::TerminologyPackageBinding => Some(PackageComponent::Terminology),
            ElementKind::ArgumentPackage
            | ElementKind::ArgumentPackageInterface
            | ElementKind::ArgumentPackageBinding
            | ElementKind::GsnModule
            | ElementKind::ContractModule
            | ElementKind::CaeModule
            | ElementKind::CaeModuleInterface
            | ElementKind::CaeModuleBinding => Some(PackageComponent::Argumentation),
            _ => None,
        }
    }
}

impl fmt::Display for ElementKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
