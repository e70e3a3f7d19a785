//! The guide's chapters, compiled so that `cargo test --doc` runs every
//! listing in `book/src`. One module per chapter keeps failures traceable.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/exact.md")]
pub mod exact {}
#[doc = include_str!("../../../book/src/irreducibility.md")]
pub mod irreducibility {}
#[doc = include_str!("../../../book/src/coprime-covers.md")]
pub mod coprime_covers {}
#[doc = include_str!("../../../book/src/superelliptic.md")]
pub mod superelliptic {}
#[doc = include_str!("../../../book/src/small-primes.md")]
pub mod small_primes {}
#[doc = include_str!("../../../book/src/verification.md")]
pub mod verification {}
#[doc = include_str!("../../../book/src/catalog.md")]
pub mod catalog {}
