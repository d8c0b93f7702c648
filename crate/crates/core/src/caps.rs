//! Size limits for the combinatorially explosive operations.
//!
//! Defaults can be overridden through the environment:
//! `MOUFANG_MAX_BRACKETING`, `MOUFANG_MAX_ENUM_ORDER` and
//! `MOUFANG_MAX_CANON_ORDER`.

use std::env;

pub const ENV_MAX_BRACKETING: &str = "MOUFANG_MAX_BRACKETING";
pub const ENV_MAX_ENUM_ORDER: &str = "MOUFANG_MAX_ENUM_ORDER";
pub const ENV_MAX_CANON_ORDER: &str = "MOUFANG_MAX_CANON_ORDER";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Longest power term whose bracketings are enumerated (Catalan growth).
    pub bracketing_len: usize,
    /// Largest order accepted by the enumerator.
    pub enumeration_order: usize,
    /// Largest order accepted by the brute-force canonical form (n! relabelings).
    pub canonical_order: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            bracketing_len: 6,
            enumeration_order: 5,
            canonical_order: 7,
        }
    }
}

impl Caps {
    /// Defaults, with any of the three environment overrides applied.
    /// Unparseable values are ignored.
    pub fn from_env() -> Self {
        let mut caps = Caps::default();
        let read = |name: &str| {
            env::var(name)
                .ok()
                .and_then(|v| v.trim().parse::<usize>().ok())
        };
        if let Some(v) = read(ENV_MAX_BRACKETING) {
            caps.bracketing_len = v;
        }
        if let Some(v) = read(ENV_MAX_ENUM_ORDER) {
            caps.enumeration_order = v;
        }
        if let Some(v) = read(ENV_MAX_CANON_ORDER) {
            caps.canonical_order = v;
        }
        caps
    }
}
