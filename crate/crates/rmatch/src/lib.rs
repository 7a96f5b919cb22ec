//! File formats, reports, parallel search and the `rmatch` command line on
//! top of [`rmatch_core`].

pub mod cli;
pub mod io;
pub mod report;
pub mod search;
pub mod verify;
