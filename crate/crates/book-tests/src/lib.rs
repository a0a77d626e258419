//! Runs the code blocks of the guide in `book/src` as doc-tests.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/permutations.md")]
pub mod permutations {}

#[doc = include_str!("../../../book/src/groups.md")]
pub mod groups {}

#[doc = include_str!("../../../book/src/double-cosets.md")]
pub mod double_cosets {}

#[doc = include_str!("../../../book/src/wreath.md")]
pub mod wreath {}

#[doc = include_str!("../../../book/src/gassmann.md")]
pub mod gassmann {}

#[doc = include_str!("../../../book/src/two-adic.md")]
pub mod two_adic {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
