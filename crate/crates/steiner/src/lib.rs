//! File formats, a shipped corpus, parallel sweeps and the `steiner` command
//! line built on `steiner-core`.

pub mod cli;
pub mod corpus;
pub mod format;
pub mod par;
pub mod report;
