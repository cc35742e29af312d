//! Object model and constrained TEI serialization for the revised Lexical
//! Markup Framework (ISO 24613), covering the core meta-model, the
//! machine-readable-dictionary form extensions, and the etymology extension.
//!
//! The crate is organized in layers:
//!
//! - [`diag`]: coded diagnostics with a stable registry, severities, and
//!   sorted validation reports.
//! - [`id`]: node identifiers (XML NCNames), references, and language tags.
//! - [`xml`]: a small self-contained XML reader/writer with line/column
//!   tracking, sufficient for the constrained serialization (no DTDs, no
//!   namespace prefixes, UTF-8 only).
//! - [`profile`]: the serialization profile, a whitelist of elements,
//!   attributes, and content rules that closes the TEI vocabulary.
//! - [`model`], [`mrd`], [`etymology`]: the lexicon object model and its
//!   query operations.
//! - [`tei`]: parsing, serialization, and canonicalization between the
//!   object model and profile-constrained TEI XML.
//! - [`validate`]: whole-resource validation producing a diagnostic report.
//!
//! Everything here is `no_std` + `alloc`: bytes and values in, values and
//! diagnostics out. File IO, multi-file corpus handling, and the CLI live in
//! the companion `lmfkit` crate.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

pub mod diag;
pub mod etymology;
pub mod id;
pub mod model;
pub mod mrd;
pub mod profile;
pub mod tei;
pub mod validate;
pub mod xml;

#[cfg(feature = "arbitrary")]
pub mod arb;

pub use diag::{Diagnostic, Pos, Severity, ValidationReport};
pub use id::{NodeId, Ref};
pub use model::{LexicalEntry, LexicalResource, Lexicon};
pub use profile::SerializationProfile;
