//! Probability representation of qubit states and qubit channels.
//!
//! A qubit state is carried by three tomographic probabilities and a ququart
//! state by fifteen. Through channel-state duality the dynamical (Choi) matrix
//! of a qubit channel is, after normalisation, a ququart state, so a channel is
//! also a vector of fifteen probabilities. Unitary evolution of the channel is
//! then a linear kinetic equation for those probabilities, which [`kinetics`]
//! integrates and checks against the exact `vec(U) vec(U)†` form.
//!
//! The crate is `no_std` and needs only `alloc`.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod channel;
pub mod error;
pub mod kinetics;
pub mod linalg;
pub mod probchannel;
#[cfg(feature = "random")]
pub mod random;
pub mod state;

pub use channel::{ChoiMatrix, CptpReport, KrausSet, SuperOperator, Verdict};
pub use error::{Error, Result};
pub use kinetics::{Hamiltonian, KineticGenerator, Trajectory};
pub use linalg::{ComplexMatrix, ComplexVector, C64};
pub use probchannel::{AffineConstants, ChannelProbs, ConstraintCheck};
pub use state::{Direction, DistributionSet, ProbVector15, QubitProbs};
