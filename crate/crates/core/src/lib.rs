//! Entangled coherent-state qubits sent through a photon-loss channel, with
//! optional repetition coding, and their concurrence.

pub mod channel;
pub mod code;
pub mod coherent;
pub mod concurrence;
pub mod errata;
pub mod error;
pub mod linalg;
pub mod oracle;

pub use channel::{
    bell_xmatrix, bell_xmatrix_weighted, damp_single_qubit, flip_prob_pair, flip_prob_single,
    flip_prob_state, transmit_direct, ChannelParams, SingleQubitMixture,
};
pub use code::{success_prob, transmit_encoded, CodeSpec};
pub use coherent::{
    cat_norm, cat_norm_flipped, chi_density, chi_flipped_density, ortho_coeffs, overlap, CatQubit,
    RealAmplitude, TwoModeCatState, TwoQubitDensity,
};
pub use concurrence::{
    concurrence, concurrence_x, evolved_concurrence, evolved_concurrence_with_flip,
    initial_concurrence, spin_flip, wootters_eigenvalues, XMatrix,
};
pub use error::{Error, Result};
