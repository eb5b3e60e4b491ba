pub mod classify;
pub mod clifford;
pub mod covariants;
pub mod embed;
pub mod error;
pub mod fock;
pub mod invariants;
pub mod linalg;
pub mod oracle;
pub mod pairing;
pub mod roots;
pub mod sample;
pub mod scalar;

pub use error::{Error, Result};
pub use fock::{FockState, LadderOp, LadderWord};
pub use scalar::{GaussRat, Scalar};

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod book_introduction {}
#[doc = include_str!("../../../book/src/fock-space.md")]
pub mod book_fock_space {}
#[doc = include_str!("../../../book/src/clifford.md")]
pub mod book_clifford {}
#[doc = include_str!("../../../book/src/pairing.md")]
pub mod book_pairing {}
#[doc = include_str!("../../../book/src/embeddings.md")]
pub mod book_embeddings {}
#[doc = include_str!("../../../book/src/invariants.md")]
pub mod book_invariants {}
#[doc = include_str!("../../../book/src/semisimple.md")]
pub mod book_semisimple {}
#[doc = include_str!("../../../book/src/classification.md")]
pub mod book_classification {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod book_cli {}
