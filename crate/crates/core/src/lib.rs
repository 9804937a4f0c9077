//! Core engine for desk-scale multi-subject video generation.
//!
//! Everything numerical lives here: the reverse-mode tensor engine, the
//! diffusion schedule and sampler, the patch autoencoder for reference
//! images, the frozen stub encoders, the alignment resampler, the
//! joint-attention denoising backbone, synthetic clip curation, the
//! optimizer recipe and the evaluation metrics. The crate is `no_std`
//! compatible (with `alloc`); file formats and the CLI live in the
//! companion `msvg-cli` crate.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod error;
pub mod math;
pub mod rng;

pub use error::{Error, Result};

/// Element type of every array in the engine. Verification builds use
/// `f64`; this alias is the single switch for a 32-bit training build.
pub type Real = f64;
