//! Named configurations and their recorded facts.

pub mod configs;
pub mod entries;

pub use configs::*;
pub use entries::{canonical, entries, entry, make_config, Fact, FactResult, GalleryEntry, Instance, VerifyReport};
