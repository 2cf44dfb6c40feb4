use thiserror::Error;

use crate::linalg::{format_vec, Rational};

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// One failing basis tuple of an axiom (0-based indices) with its residual.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomFailure {
    pub at: Vec<usize>,
    pub residual: Vec<Rational>,
}

impl AxiomFailure {
    pub fn new(at: Vec<usize>, residual: Vec<Rational>) -> Self {
        Self { at, residual }
    }
}

fn list_failures(fs: &[AxiomFailure]) -> String {
    fs.iter()
        .map(|f| {
            let at: Vec<String> = f.at.iter().map(usize::to_string).collect();
            format!("({}): {}", at.join(","), format_vec(&f.residual))
        })
        .collect::<Vec<_>>()
        .join("; ")
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("image is not contained in the kernel")]
    ImageNotContained,

    #[error("map has a nonzero block outside the mixed cochain space: {k} g-inputs, {l} h-inputs, target {target}")]
    NotInM {
        k: usize,
        l: usize,
        target: &'static str,
    },

    #[error("Jacobi identity fails at {}", list_failures(.0))]
    JacobiViolation(Vec<AxiomFailure>),

    #[error("action axiom fails ({kind}) at {}", list_failures(.failures))]
    NotAnAction {
        kind: &'static str,
        failures: Vec<AxiomFailure>,
    },

    #[error("not a difference operator; residual at {}", list_failures(.0))]
    NotDifferenceOp(Vec<AxiomFailure>),

    #[error("not a representation of the difference Lie algebra ({kind}) at {}", list_failures(.failures))]
    NotARepresentation {
        kind: &'static str,
        failures: Vec<AxiomFailure>,
    },

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),

    #[error("element is not a Maurer-Cartan element")]
    NotMaurerCartan,

    #[error("not a cocycle; coboundary is {}", format_vec(.0))]
    NotCocycle(Vec<Rational>),

    #[error("linear map is not a section of the projection")]
    NotASection,

    #[error("extensions do not share base and kernel: {0}")]
    IncompatibleBaseOrKernel(String),

    #[error("nilpotency class {class} exceeds BCH order {order}")]
    ClassExceedsOrder { class: usize, order: usize },

    #[error("Lie algebra is not nilpotent")]
    NotNilpotent,

    #[error("action is not nilpotent: {0}")]
    ActionNotNilpotent(String),

    #[error("not a homomorphism of relative difference Lie algebras: {0}")]
    NotAHomomorphism(String),

    #[error("long exact sequence fails to be exact at {0}")]
    ExactnessFailure(String),

    #[error("cochain is not in the image of the embedding")]
    NotInEmbedding,
}
