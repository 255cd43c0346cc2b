//! Exact gauge-parametrised R-matrices for `U_q[gl(2|1)]`, Yang–Baxter
//! verification and (1,1)-tangle knot invariants.

pub mod braid;
pub mod engine;
pub mod harness;
pub mod oracles;
pub mod ring;
pub mod rmat;
pub mod ybe;
