use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Input that does not describe a simple graph (self-loop, id out of
    /// range, unparsable file, ...).
    #[error("malformed input: {0}")]
    Malformed(String),

    /// A caller broke a documented precondition.
    #[error("contract violation: {0}")]
    Contract(String),

    /// An exhaustive search would exceed its configured budget.
    #[error("budget exceeded: {0}")]
    Budget(String),

    /// The structural pipeline could not classify or color a subgraph.
    /// `subgraph` holds the offending graph as JSON for triage.
    #[error("classification failure: {reason}")]
    Classification { reason: String, subgraph: String },

    /// A generator could not produce a verified instance.
    #[error("generation failed: {0}")]
    Generation(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
