//! Exact computation of `k`-Schur functions at `t = 1`.
//!
//! The central routine is the generalized Bernstein recursion
//! `B^{(k)}_{λ_1} s^{(k)}_{λ̂} = s^{(k)}_λ` ([`kbernstein`]), built from
//! `(k+1)`-cores ([`cores`]), the `k`-Pieri rule ([`kpieri`]) and vertical
//! `(k,ℓ)`-strips. Its unrolled form gives a signed `h`-expansion. An
//! independent oracle inverts the `k`-Kostka matrix obtained by enumerating
//! `k`-tableaux ([`ktableaux`]), and [`involution`] makes the sign-reversing
//! involution behind the recursion executable.
//!
//! Diagrams use French notation throughout: row 1 is the bottom row.

pub mod cache;
pub mod cores;
pub mod error;
pub mod involution;
pub mod kbernstein;
pub mod kpieri;
pub mod ktableaux;
pub mod partition;
pub mod symspace;
pub mod verify;

pub use cores::{Core, ResidueSet, Ribbon};
pub use error::{Error, Result};
pub use ktableaux::{KTableau, KostkaMatrix};
pub use partition::{Cell, Partition, SkewShape};
pub use symspace::{Basis, BasisKey, LinComb};
