//! Alcove combinatorics for the affine Weyl group of `GL_n`, and the
//! filtration, Ext and global dimensions of (quantum) Schur algebras that
//! they determine.

pub mod alcoves;
pub mod cli;
pub mod error;
pub mod homdim;
pub mod lattice;
pub mod oracle;
pub mod registry;
pub mod schur;
pub mod symchar;
pub mod uporder;

pub use error::{Error, Result};
pub use lattice::{Context, Mode, Partition, PosRoot, Weight};
