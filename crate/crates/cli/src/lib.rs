//! Command-line front end for `hurwitzkit`: input parsing, report rendering
//! and the subcommands behind the `hurwitzkit` binary.

pub mod commands;
pub mod input;
pub mod render;
