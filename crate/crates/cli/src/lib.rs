//! Corpus-level tooling over `lmfkit-core`: multi-file ingestion into an
//! immutable store, indexed headword lookup, etymology traces, corpus
//! statistics, and a deterministic JSON interchange form.
//!
//! Everything here is IO and presentation; the object model, the TEI
//! serialization, and the validation rules live in `lmfkit-core`.

pub mod json;
pub mod render;
pub mod stats;
pub mod store;
