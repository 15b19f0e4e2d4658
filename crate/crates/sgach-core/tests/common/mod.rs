//! Shared helpers for the integration-test suites. Each test binary picks
//! what it needs, so unused items are expected.
#![allow(dead_code)]

pub mod fixtures;
pub mod naive;
