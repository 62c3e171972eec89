use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("particle set must contain at least one particle")]
    EmptyParticleSet,

    #[error("particle weights sum to zero")]
    ZeroWeightSum,

    #[error("length mismatch: {left} predicted states vs {right} reference points")]
    LengthMismatch { left: usize, right: usize },

    #[error("invalid trajectory: {0}")]
    InvalidTrajectory(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("non-finite value in {context}")]
    NonFinite { context: &'static str },

    #[error("training loss became non-finite at step {step} (loss = {loss})")]
    NonFiniteLoss { step: usize, loss: f64 },

    #[error("episode is already done")]
    EpisodeDone,

    #[error("task generation failed after {attempts} attempts: {reason}")]
    TaskGeneration { attempts: usize, reason: String },

    #[error("checkpoint error: {0}")]
    Checkpoint(String),

    #[error("malformed file {path}: {reason}")]
    Parse { path: String, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
