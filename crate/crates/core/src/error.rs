//! Error surface shared by every module in the core crate.

use alloc::string::String;
use alloc::vec::Vec;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// Incompatible array extents for an operation.
    #[error("{op}: shape mismatch, left {left:?} vs right {right:?}")]
    ShapeMismatch {
        op: &'static str,
        left: Vec<usize>,
        right: Vec<usize>,
    },

    /// An op produced NaN or Inf; never a silent state.
    #[error("{op}: non-finite value produced{}", detail.as_deref().map(|d| alloc::format!(" ({d})")).unwrap_or_default())]
    NonFinite {
        op: &'static str,
        detail: Option<String>,
    },

    /// Invalid configuration value.
    #[error("config error: {0}")]
    Config(String),

    /// A contract precondition was violated by the caller.
    #[error("contract violation: {0}")]
    Contract(String),

    /// Token capacity exceeded, with the per-image counts that overflowed.
    #[error("visual token capacity {capacity} exceeded: per-image counts {counts:?}")]
    Capacity { capacity: usize, counts: Vec<usize> },

    /// Diffusion timestep outside 1..=t_diff.
    #[error("timestep {t} out of range 1..={t_diff}")]
    TimestepOutOfRange { t: usize, t_diff: usize },

    /// Attention row where every key is masked out.
    #[error("joint attention: all keys masked for query row {row}")]
    AllKeysMasked { row: usize },

    /// Encoder sequence exceeding its configured maximum.
    #[error("sequence length {len} exceeds maximum {max}")]
    SequenceOverflow { len: usize, max: usize },

    /// Reference label contains a reserved template delimiter.
    #[error("label {label:?} contains reserved delimiter {delim:?}")]
    ReservedDelimiter { label: String, delim: char },

    /// Image dimensions not divisible by the patch size.
    #[error("image {width}x{height} not divisible by patch size {patch}; resize required")]
    ResizeRequired {
        width: usize,
        height: usize,
        patch: usize,
    },

    /// Reference extraction found no mask pixels for a label.
    #[error("reference extraction: empty mask for label {0:?}")]
    EmptyMask(String),

    /// Sprite placement could not satisfy the overlap constraint.
    #[error("sprite placement failed after {attempts} attempts")]
    Placement { attempts: usize },

    /// Training loss diverged.
    #[error("divergence at step {step}: loss {loss} exceeds 10x initial {initial} for {window} consecutive steps")]
    Divergence {
        step: usize,
        loss: Real,
        initial: Real,
        window: usize,
    },

    /// Metric undefined for a degenerate (uniform) reference.
    #[error("subject consistency: reference patch is uniform, NCC undefined")]
    DegenerateReference,

    /// Checkpoint/config identity mismatch.
    #[error("checkpoint config hash mismatch: expected {expected}, found {found}")]
    ConfigHashMismatch { expected: String, found: String },
}

use crate::Real;
