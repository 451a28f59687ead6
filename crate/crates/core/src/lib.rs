//! Legendre cordial labeling of complete graphs.
//!
//! Everything in this crate is pure integer arithmetic over `alloc`
//! collections, so it builds without `std`. IO, the CLI, file formats and
//! the parallel sweep driver live in the `lcordial` companion crate.
//!
//! - [`numtheory`]: validated odd primes, sieving, Euler-criterion Legendre symbols.
//! - [`legraph`]: Legendre graphs `L_n^k(f, p)` and their closed-form size and degree quantities.
//! - [`cordial`]: the induced edge labeling and three independent cordiality deciders.
//! - [`survey`]: the prime-counting survey `J(n, m)` over ranges of orders and bounds.

#![no_std]

extern crate alloc;

pub mod cordial;
pub mod error;
pub mod legraph;
pub mod numtheory;
pub mod survey;

pub use error::{Error, Result};
pub use numtheory::{LegendreValue, OddPrime};
