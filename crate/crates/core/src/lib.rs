//! Symbol combinatorics for Weyl groups of type `B_n` with an integral ratio
//! `r` between the two parameters.
//!
//! The crate labels irreducible characters by bipartitions, encodes them as
//! two-row symbols, groups symbols into families, and builds constructible
//! characters from `r`-admissible involutions. For every family and every
//! constructible character it produces the constituent of minimal
//! `b`-invariant directly, and [`verify`] checks those constructions against
//! brute force.
//!
//! ```
//! use bsymbols::{all_constructible, Ratio};
//!
//! let chars = all_constructible(2, Ratio::Integral(1));
//! assert_eq!(chars.len(), 4);
//! ```

pub mod check;
pub mod cli;
pub mod constructible;
pub mod error;
pub mod exec;
pub mod family;
pub mod identities;
pub mod involution;
pub mod lusztig;
pub mod partition;
pub mod symbol;
pub mod verify;

pub use constructible::{
    all_constructible, constructible_character, f_iota_members, minimal_symbol, minimal_symbol_block,
    ConstructibleCharacter, Ratio,
};
pub use error::{Error, Result};
pub use exec::Execution;
pub use family::{enumerate_family, family_key, special_symbol, strip_x, FamilyKey};
pub use involution::{enumerate_admissible, is_r_admissible, AdmissibleInvolution};
pub use lusztig::{check_theorem_l, find_noncommon_family, lusztig_families, LusztigFamily};
pub use partition::{enumerate_bipartitions, Bipartition, Partition};
pub use symbol::{nabla, Symbol};
