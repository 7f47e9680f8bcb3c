//! Random walks on the Kac–Paljutkin quantum group `KP`, the Sekine family
//! `KP_n` and the duals `\widehat{KP_n}`: convolution powers, distances to
//! the Haar state, bounds, limit classification and idempotent states.

pub mod algebra;
pub mod dual;
pub mod error;
pub mod fourier;
pub mod idempotents;
pub mod kp8;
pub mod sampling;
pub mod sekine;
pub mod walks;

pub use algebra::{AlgebraElement, AlgebraShape, CMatrix, DEFAULT_TOL};
pub use dual::{DualCentralElement, DualLabel, DualWalk, EpsilonVector};
pub use error::{Error, Result};
pub use fourier::{BlockLabel, FourierProfile, Group};
pub use idempotents::{IdempotentSpec, SignVector, Subgroup};
pub use kp8::{KpCoefficients, KpLabel, KpWalk};
pub use sekine::{CentralElement, IrrepLabel, Sekine, StateReport};
pub use walks::{LimitClassification, Outcome, Walk, WalkReport};
