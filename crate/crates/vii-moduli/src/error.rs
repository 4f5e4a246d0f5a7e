//! Error taxonomy shared by every module. Each variant names the exact
//! contract it reports, so the CLI can print one-line diagnostics.

use thiserror::Error;

use crate::picard::LineBundle;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Square roots in the Picard lattice need an even canonical power.
    #[error("no square root: canonical power {0} is odd")]
    OddChernClass(i64),

    /// The requested named bundle does not exist on this surface family.
    #[error("bundle `{0}` is not defined on this surface")]
    UnsupportedName(String),

    /// A surface parameter breaks one of the family's defining relations.
    #[error("surface constraint violated: {0}")]
    ConstraintViolation(String),

    /// An operation restricted to topologically trivial bundles was handed a
    /// bundle with a nonzero canonical power.
    #[error("parameter must be topologically trivial, got canonical power {0}")]
    WrongChernClass(i64),

    /// A value the model proves impossible was computed anyway.
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    /// Extensions over this parameter form a projective line of non-simple
    /// bundles; there is no canonical member to return.
    #[error("extensions over {0} form a projective family with no canonical member")]
    AmbiguousFamily(LineBundle),

    /// Only the split extension exists over this parameter.
    #[error("only the trivial extension exists over {0}")]
    OnlyTrivialExtension(LineBundle),

    /// The requested invariant is not defined for this bundle shape.
    #[error("not applicable: {0}")]
    NotApplicable(String),

    /// No simple bundle sits at this parameter point.
    #[error("no simple bundle at parameter {0}")]
    UndefinedPoint(LineBundle),

    #[error("parse error: {0}")]
    Parse(String),
}
