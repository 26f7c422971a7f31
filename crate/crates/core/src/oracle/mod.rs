//! Independent reference computations used to validate the closed forms.

pub mod enumerate;
pub mod fock;
pub mod gram;

pub use enumerate::{majority_vote_success, MAX_ENUMERATED};
pub use fock::{fock_channel_density, fock_single_qubit_density, FockOptions, FockOutput};
pub use gram::{
    gram_channel_density, gram_channel_mixed, gram_encoded_density, gram_flip_decomposition, CoherentSpanState,
    FlipDecomposition, GramBasis, GramMatrix,
};
