//! Exact verification toolkit for the combinatorics of the Boolean lattice.
//!
//! Everything the library claims is checked computationally, in exact
//! arithmetic wherever the claim is exact:
//!
//! - [`binomial`]: binomial coefficients by recurrence and by factorial
//!   ratio, and the monotonicity C(n,k) <= C(n,k+1) for k < n/2.
//! - [`subset`], [`injections`]: subsets as bitmasks; the prefix-swap
//!   injection and the Greene-Kleitman bracket-matching successor.
//! - [`chains`]: three symmetric chain decompositions of B_n and a
//!   validator.
//! - [`sperner`]: antichains, the LYM/Lubell bounds, exhaustive maximum
//!   antichains at small n, and the chain-decomposition bound.
//! - [`zpoly`]: symmetric unimodal polynomials with darga bookkeeping,
//!   atoms, and the dice generating functions.
//! - [`operators`]: raising/lowering operators between levels, commutator
//!   identities, exact ranks, and the kernel scalar identity.
//! - [`chebyshev`]: the central-binomial divisibility argument, theta
//!   bounds, and the pi(x) comparison.
//! - [`report`]: the record types the CLI streams.

pub mod binomial;
pub mod chains;
pub mod chebyshev;
pub mod injections;
pub mod operators;
pub mod report;
pub mod sperner;
pub mod subset;
pub mod zpoly;
