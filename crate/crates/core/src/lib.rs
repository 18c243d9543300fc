//! Crossed modules, Whitehead sequences and internal groupoids over finite
//! groups, abelian groups and pointed sets, with exhaustive verification.

pub mod actionsys;
pub mod error;
pub mod fingroup;
pub mod gpd;
pub mod io;
pub mod pointedcat;
pub mod report;
pub mod simplicial;

pub use error::{Error, Result};
