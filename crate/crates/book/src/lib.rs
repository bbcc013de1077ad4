// mdbook renders the guide but cannot run its Rust snippets as tests, so
// each chapter is included here as module documentation and `cargo test
// --doc` executes every fenced code block. One module per chapter keeps
// test failures attributable to the right file.

#![doc = include_str!("../../../book/src/introduction.md")]

#[doc = include_str!("../../../book/src/semigroups.md")]
pub mod semigroups {}

#[doc = include_str!("../../../book/src/wilf-eliahou.md")]
pub mod wilf_eliahou {}

#[doc = include_str!("../../../book/src/families.md")]
pub mod families {}

#[doc = include_str!("../../../book/src/classification.md")]
pub mod classification {}

#[doc = include_str!("../../../book/src/exploration.md")]
pub mod exploration {}

#[doc = include_str!("../../../book/src/pictures.md")]
pub mod pictures {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
