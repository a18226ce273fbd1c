//! Exact arithmetic over the order-2 group ring `Z[G]` together with a
//! verifier for real quadratic extensions. The verifier compares the Fitting
//! ideal of the tame kernel, as predicted by Birch–Tate orders, with the
//! generalized Stickelberger ideal `Ann(W₂(E))·θ(−1)`.

pub mod arith;
pub mod arithmetic;
pub mod error;
pub mod group_ring;
pub mod ideal;
pub mod intmat;
pub mod job;
pub mod modules;
pub mod report;
pub mod sampling;
pub mod verifier;

pub use error::{Error, Result};
pub use group_ring::{ComponentPair, GroupRingElement, Int, Rational};
pub use ideal::{GroupRingIdeal, LocalIdealData2};
