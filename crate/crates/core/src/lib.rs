//! Finite commutative rings, their zero-divisor graphs, and graph genus.

pub mod classify;
pub mod finring;
pub mod genus;
pub mod presparse;
pub mod zdg;
