//! Exact computations of K-stability walls for log Fano pairs on surfaces.
//!
//! The crate is organised bottom-up: [`exact`] supplies rational arithmetic,
//! [`volumes`] computes volume profiles, [`valuations`] evaluates log
//! discrepancies and thresholds, [`walls`] solves for wall values,
//! [`toric_kps`] runs the centroid polystability test and [`git`] handles
//! Hilbert-Mumford weights. [`fixtures`] holds the named built-in cases.

pub mod exact;
pub mod fixtures;
pub mod git;
pub mod toric_kps;
pub mod valuations;
pub mod volumes;
pub mod walls;
