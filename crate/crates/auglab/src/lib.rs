//! File formats and the command-line front end for `auglab-core`.
//!
//! Every JSON artifact written here parses back into the value it was
//! written from, and writing that value again reproduces the same bytes.

pub mod cli;
mod error;
pub mod jobs;
pub mod network;
pub mod records;
mod text;
pub mod trace;

pub use error::InputError;
pub use text::{Dec, QuantityText, RationalText};

/// Pretty JSON with a trailing newline.
pub fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("records serialize infallibly");
    out.push('\n');
    out
}

/// Parses JSON, naming the path of the first offending field on failure.
pub fn from_json<T: serde::de::DeserializeOwned>(text: &str) -> Result<T, InputError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|err| {
        let path = err.path().to_string();
        let field = if path == "." || path.is_empty() { String::from("document") } else { path };
        InputError::field(field, err.into_inner().to_string())
    })
}
