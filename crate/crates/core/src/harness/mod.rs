//! Generators, file formats and verification runs.

pub mod gen;
pub mod io;
pub mod verify;

/// Seed used when none is given: `P5W4_SEED` if set and numeric, else 0.
pub fn default_seed() -> u64 {
    std::env::var("P5W4_SEED").ok().and_then(|s| s.trim().parse().ok()).unwrap_or(0)
}
