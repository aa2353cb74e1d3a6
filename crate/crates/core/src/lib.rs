//! Finite permutation group engine: materialized group tables, classical
//! subgroup series, the coprime commutator calculus (γ*ₖ, δ*ₖ), word value
//! sets, and a harness that checks order-multiplicativity nilpotency
//! criteria against concrete groups.
//!
//! Composition convention, used everywhere: permutations compose **left to
//! right**, `(p ∘ q)(i) = q(p(i))`, i.e. groups act on the right. With this
//! convention `a^b = b⁻¹ a b` and `[a, b] = a⁻¹ b⁻¹ a b`.

pub mod coprime;
pub mod corpus;
mod error;
pub mod group;
pub mod perm;
pub mod verify;
pub mod words;

pub use coprime::{CoprimeFamily, CoprimeSetChain};
pub use corpus::{builtin_corpus, find_builtin, load_group_file, CorpusEntry, Tag};
pub use error::Error;
pub use group::{ElementSet, GroupTable, Quotient, SeriesKind, SeriesReport};
pub use perm::Permutation;
pub use verify::{StatementId, Verdict, Witness};
pub use words::WordSpec;

pub type Result<T> = std::result::Result<T, Error>;
