//! Stochastic multi-armed bandits under a hard switching-cost budget.
//!
//! A learner picks one of `k` arms per round for `T` rounds. Moving from arm
//! `i` to arm `j` costs `c[i][j]` (the *switching graph*), and the total cost
//! over the horizon must never exceed a budget `S`. This crate provides:
//!
//! - [`env`]: Gaussian and Bernoulli environments, seeded reward sampling;
//!   [`hard`]: the adversarial instance family behind the lower bounds.
//! - [`graph`]: switching graphs, Floyd–Warshall closure, exact and
//!   approximate shortest Hamiltonian paths, budget indices.
//! - [`policy`]: limited-switch successive elimination on two interval
//!   grids, its Hamiltonian-order variant for general graphs, a
//!   path-expanded variant for non-metric graphs, and a budget-capped UCB1
//!   baseline. Every policy is budget-feasible on every sample path.
//! - [`sim`]: the deterministic run engine, pseudo-regret, budget audits,
//!   cover-time and re-switch diagnostics, worst-case regret over a gap grid.
//! - [`bounds`]: closed-form regret bounds, phases and critical points.
//! - [`io`] and [`cli`]: JSON configs, CSV/JSON/SVG output and the
//!   `switchbandit` command-line front end.
//!
//! Arms are 0-based everywhere in the API and in every file format.

pub mod bounds;
pub mod cli;
pub mod env;
pub mod error;
pub mod graph;
pub mod hard;
pub mod io;
pub mod policy;
pub mod rng;
pub mod sim;

pub use env::{sample_reward, Environment, Family};
pub use error::{Error, Result};
pub use graph::{Cost, HamiltonianPath, SwitchingGraph};
pub use policy::{Policy, PolicyConfig, Variant};
pub use sim::{run_once, RunTrace};
