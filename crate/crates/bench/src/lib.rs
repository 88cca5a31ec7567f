//! Placeholder library; the crate exists for its benchmark targets.
