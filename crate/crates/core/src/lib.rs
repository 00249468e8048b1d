pub mod cohomology;
pub mod error;
pub mod lfactors;
pub mod modforms;
pub mod packets;
pub mod poly;
pub mod repdims;
pub mod symgroup;

pub use error::{Error, Result};

// Guide chapters compiled as doc-tests so their snippets stay current.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/symgroup.md")]
    mod symgroup {}
    #[doc = include_str!("../../../book/src/tables.md")]
    mod tables {}
    #[doc = include_str!("../../../book/src/modforms.md")]
    mod modforms {}
    #[doc = include_str!("../../../book/src/cohomology.md")]
    mod cohomology {}
    #[doc = include_str!("../../../book/src/lfactors.md")]
    mod lfactors {}
}
