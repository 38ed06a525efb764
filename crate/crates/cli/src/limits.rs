//! Size caps read from the environment.
//!
//! `HOMFLYPT_MAX_SIZE` bounds strand counts and shape sizes (default 6);
//! `HOMFLYPT_MAX_CROSSINGS` bounds the crossings of a diagram handed to the
//! skein oracle (default 40). Both guard against inputs whose exact
//! computation would run for hours.

use homflypt::{Error, Result};

pub const DEFAULT_MAX_SIZE: usize = 6;
pub const DEFAULT_MAX_CROSSINGS: usize = 40;

fn read(var: &str, default: usize) -> Result<usize> {
    match std::env::var(var) {
        Ok(v) => v.trim().parse().map_err(|_| Error::Parse(format!("{var} must be a nonnegative integer, got `{v}`"))),
        Err(_) => Ok(default),
    }
}

fn check(var: &str, default: usize, what: &str, value: usize) -> Result<()> {
    ensure(read(var, default)?, var, what, value)
}

fn ensure(cap: usize, var: &str, what: &str, value: usize) -> Result<()> {
    if value > cap {
        return Err(Error::OutOfRange(format!("{what} {value} exceeds the cap {cap}; raise {var} to allow it")));
    }
    Ok(())
}

pub fn size(what: &str, value: usize) -> Result<()> {
    check("HOMFLYPT_MAX_SIZE", DEFAULT_MAX_SIZE, what, value)
}

pub fn crossings(value: usize) -> Result<()> {
    check("HOMFLYPT_MAX_CROSSINGS", DEFAULT_MAX_CROSSINGS, "crossing count", value)
}
