//! Command-line front end for `kwall`: scenario files, the fixture
//! registry, report rendering and the acceptance checks.

pub mod eval;
pub mod registry;
pub mod report;
pub mod scenario;
pub mod verify;
