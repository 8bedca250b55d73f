//! Enumeration caps.
//!
//! Every brute-force routine checks a cap before enumerating and fails loudly
//! when it is exceeded. The process-wide value starts from the
//! `FUSIONKIT_CAPS` environment variable (e.g. `enum=50000,subgroups=2187`)
//! and can be replaced with [`set_global`].

use std::sync::{OnceLock, RwLock};

use crate::error::{Error, Result};

pub const DEFAULT_ENUMERATION_CAP: u64 = 20_000;
pub const DEFAULT_SUBGROUP_CAP: u64 = 729;
pub const ENV_VAR: &str = "FUSIONKIT_CAPS";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Largest group whose elements may be listed.
    pub enumeration: u64,
    /// Largest group whose full subgroup lattice may be listed.
    pub subgroups: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            enumeration: DEFAULT_ENUMERATION_CAP,
            subgroups: DEFAULT_SUBGROUP_CAP,
        }
    }
}

impl Caps {
    /// Parses `key=value` pairs separated by commas. Keys: `enum`, `subgroups`.
    pub fn parse(s: &str) -> Result<Caps> {
        let mut caps = Caps::default();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = part.split_once('=').ok_or_else(|| {
                Error::ParameterOutOfRange(format!("cap entry {part:?} is not key=value"))
            })?;
            let value: u64 = value.trim().parse().map_err(|_| {
                Error::ParameterOutOfRange(format!("cap value {value:?} is not an integer"))
            })?;
            if value == 0 {
                return Err(Error::ParameterOutOfRange(format!(
                    "cap {key} must be positive"
                )));
            }
            match key.trim() {
                "enum" | "enumeration" => caps.enumeration = value,
                "subgroups" => caps.subgroups = value,
                other => return Err(Error::ParameterOutOfRange(format!("unknown cap {other:?}"))),
            }
        }
        Ok(caps)
    }

    pub fn from_env() -> Result<Caps> {
        match std::env::var(ENV_VAR) {
            Ok(s) => Caps::parse(&s),
            Err(_) => Ok(Caps::default()),
        }
    }

    pub fn check_enumeration(&self, what: &'static str, size: u64) -> Result<()> {
        if size > self.enumeration {
            return Err(Error::ScaleLimit {
                what,
                size,
                cap: self.enumeration,
            });
        }
        Ok(())
    }

    pub fn check_subgroups(&self, what: &'static str, size: u64) -> Result<()> {
        if size > self.subgroups {
            return Err(Error::ScaleLimit {
                what,
                size,
                cap: self.subgroups,
            });
        }
        Ok(())
    }
}

fn global_cell() -> &'static RwLock<Caps> {
    static CELL: OnceLock<RwLock<Caps>> = OnceLock::new();
    // A malformed environment value falls back to defaults here; the CLI
    // parses the variable itself first and reports the error.
    CELL.get_or_init(|| RwLock::new(Caps::from_env().unwrap_or_default()))
}

/// The caps currently in force.
pub fn current() -> Caps {
    *global_cell().read().unwrap_or_else(|e| e.into_inner())
}

pub fn set_global(caps: Caps) {
    *global_cell().write().unwrap_or_else(|e| e.into_inner()) = caps;
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_overrides() {
        let caps = Caps::parse("enum=50000, subgroups=2187").unwrap();
        assert_eq!(
            caps,
            Caps {
                enumeration: 50_000,
                subgroups: 2187
            }
        );
        assert_eq!(Caps::parse("").unwrap(), Caps::default());
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(Caps::parse("enum").is_err());
        assert!(Caps::parse("enum=x").is_err());
        assert!(Caps::parse("bogus=3").is_err());
        assert!(Caps::parse("enum=0").is_err());
    }

    #[test]
    fn cap_violation_names_the_cap() {
        let err = Caps::default()
            .check_enumeration("group", 1_000_000)
            .unwrap_err();
        assert_eq!(
            err,
            Error::ScaleLimit {
                what: "group",
                size: 1_000_000,
                cap: 20_000
            }
        );
        assert!(err.to_string().contains("20000"));
    }
}
