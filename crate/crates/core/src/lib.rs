//! Exact counts of plane curves with prescribed contact along a fixed smooth
//! conic `E`: fixed tangency points (`alpha`), moving tangency points
//! (`beta`), and fixed multiple points (`s`), through the appropriate number
//! of general points of the plane.
//!
//! [`Engine::count_irreducible`] and [`Engine::count_reducible`] evaluate the
//! two recursions; [`surfaces`] turns the irreducible counts into genus-`g`
//! Gromov-Witten invariants of the plane blown up at up to five points, and
//! evaluates the conjectural formula for the cubic surface.
//!
//! ```
//! use severi::{CurveConfig, Engine};
//!
//! let engine = Engine::new();
//! // rational plane cubics through 8 general points
//! let cubic = CurveConfig::plane(3, 0, []).unwrap();
//! assert_eq!(engine.count_irreducible(&cubic).unwrap(), 12u32.into());
//! ```


pub mod cli;
pub mod config;
pub mod engine;
pub mod error;
pub mod irreducible;
pub mod memo;
pub mod reducible;
pub mod seqcomb;
pub mod surfaces;
pub mod table1;

pub use config::{CurveConfig, MultiplicityProfile};
pub use engine::{Engine, EngineOptions};
pub use error::{Error, Result};
pub use memo::{EngineTag, MemoKey, MemoStore};
pub use seqcomb::TangencySeq;

/// Exact nonnegative count.
pub type Count = num_bigint::BigUint;
