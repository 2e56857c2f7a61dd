//! Distributed zero-order policy optimization for decentralized
//! linear-quadratic control.
//!
//! A group of agents jointly controls a linear system
//! `x(t+1) = A x(t) + B u(t) + d + w(t)`. Each agent observes a subset of the
//! state, applies a local linear (optionally affine) feedback, and receives a
//! local quadratic stage cost. The [`engine`] module implements the learning
//! loop: agents jointly sample a perturbation direction on the unit sphere
//! through gossip averaging, estimate the global average cost from local
//! stage costs by a combined spatial/temporal consensus recursion, and update
//! their local gains along single-point zero-order gradient estimates.
//!
//! The [`oracle`] module provides model-based ground truth (exact costs via
//! discrete Lyapunov equations, finite-difference gradients, a
//! gradient-descent baseline) used to verify the learner, and [`hvac`] builds
//! the multi-zone building thermal benchmark the learner is exercised on.

pub mod consensus;
pub mod engine;
pub mod hvac;
pub mod lq;
pub mod oracle;
pub mod rng;
