//! Library half of the `ghw` binary: subcommand logic, the result document
//! schema and its text rendering.

pub mod commands;
pub mod document;
pub mod render;

pub use commands::{exit_code, IdealKind, Route};
pub use document::ResultDocument;
pub use render::render_text;
