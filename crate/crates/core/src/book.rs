//! The guide's code samples, compiled and run as doc-tests.

#[doc = include_str!("../../../book/src/intro.md")]
mod intro {}
#[doc = include_str!("../../../book/src/graphs.md")]
mod graphs {}
#[doc = include_str!("../../../book/src/families.md")]
mod families {}
#[doc = include_str!("../../../book/src/separators.md")]
mod separators {}
#[doc = include_str!("../../../book/src/enumeration.md")]
mod enumeration {}
#[doc = include_str!("../../../book/src/applications.md")]
mod applications {}
#[doc = include_str!("../../../book/src/cli.md")]
mod cli {}
#[doc = include_str!("../../../README.md")]
mod readme {}
