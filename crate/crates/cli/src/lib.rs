//! File formats, emitters and command implementations for `cyclotri`.

pub mod commands;
pub mod dot;
pub mod format;
pub mod svg;
pub mod table;
