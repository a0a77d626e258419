//! Finite permutation groups, double cosets and 2-adic arithmetic for
//! checking when two number fields have the same preadmissible groups.
//!
//! The crate is organised bottom-up:
//!
//! * [`perm`]: permutations of `{1..n}` in cycle notation.
//! * [`group`]: materialized permutation groups, subgroup enumeration,
//!   metacyclicity, Sylow and Frattini subgroups.
//! * [`groupfile`]: the plain-text group file format.
//! * [`coset`]: double coset types, split cosets and the equivalence verdict.
//! * [`wreath`]: Sylow `l`-subgroups of `S_{l^n}` as iterated wreath products.
//! * [`gassmann`]: Gassmann equivalence and subgroup conjugacy.
//! * [`padic`]: fixed-precision 2-adic integers, polynomials and local
//!   abelianization shapes.
//!
//! Permutations compose left to right: `a.compose(&b)` applies `a` first.
//!
//! ```
//! use preadm::{group::PermGroup, perm::Permutation};
//!
//! let gens: Vec<_> = ["(1,2)", "(1,3)(2,4)", "(1,5)(2,6)(3,7)(4,8)"]
//!     .iter()
//!     .map(|g| Permutation::parse_cycles(g, 8).unwrap())
//!     .collect();
//! let g = PermGroup::generate(8, &gens).unwrap();
//! assert_eq!(g.order(), 128);
//! ```

pub mod coset;
pub mod error;
pub mod gassmann;
pub mod group;
pub mod groupfile;
pub mod padic;
pub mod perm;
pub mod wreath;

pub use error::{Error, Result};
