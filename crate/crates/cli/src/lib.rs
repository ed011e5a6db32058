//! Report layer over `broadcastlab-core`: published-value registry, table
//! regeneration, region scans and deterministic formatting.

pub mod golden;
pub mod region;
pub mod report;
pub mod tables;
