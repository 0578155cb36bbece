//! The guide's chapters, attached as module docs so that `cargo test`
//! compiles and runs every Rust listing in them.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/numbers.md")]
pub mod numbers {}
#[doc = include_str!("../../../book/src/expressions.md")]
pub mod expressions {}
#[doc = include_str!("../../../book/src/stevin.md")]
pub mod stevin {}
#[doc = include_str!("../../../book/src/fermat.md")]
pub mod fermat {}
#[doc = include_str!("../../../book/src/leibniz.md")]
pub mod leibniz {}
#[doc = include_str!("../../../book/src/gregory.md")]
pub mod gregory {}
#[doc = include_str!("../../../book/src/euler.md")]
pub mod euler {}
#[doc = include_str!("../../../book/src/cauchy.md")]
pub mod cauchy {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
