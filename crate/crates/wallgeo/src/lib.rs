//! Realizability of Wall n-spaces by closed highly connected manifolds,
//! plus the exact-arithmetic dimension-24 Witten genus pipeline.
//!
//! Module layout mirrors the mathematics: `exact` (Bernoulli numbers and
//! elementary number theory), `wall` (the constants j, k, a, sigma, the
//! Bezout pair, s(Q) and bP orders), `nspace` (intersection forms and
//! invariant extraction), `geography` (boundary map and the realizability
//! theorem), `qseries`/`modforms` (integral modular forms and the tmf image
//! test), `genus` (Hirzebruch multiplicative sequences, the twisted A-hat
//! genus and the Witten genus).

pub mod error;
pub mod exact;
pub mod genus;
pub mod geography;
pub mod modforms;
pub mod nspace;
pub mod qseries;
pub mod wall;

pub use error::{Error, Result};
