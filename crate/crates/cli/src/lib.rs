//! File formats for the `hvconvex` command: instance files, and ascii/PBM
//! grid renderings.

pub mod instance;
pub mod render;

pub use instance::{
    parse_instance, parse_instance_lenient, InstanceFile, ParseError, ParseErrorKind,
};
pub use render::{parse_grid, render, Format};
