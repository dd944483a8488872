//! Support library for the `carlitz` command-line tool: the text wire
//! formats (parsing side) and the JSONL report encoding. The rendering
//! side of the wire format lives in the core crate so that verification
//! results can be serialized without the CLI.

pub mod report;
pub mod wire;
