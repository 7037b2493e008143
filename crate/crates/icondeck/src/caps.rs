//! Size caps guarding every enumeration and lazy materialization.
//!
//! Hom-category sizes explode combinatorially, so all exhaustive
//! operations take a [`Caps`] value and refuse inputs beyond it.

use crate::error::{Error, Result};

/// Hard limits for exhaustive operations.
///
/// * `objects` — maximum number of objects per finite category involved
///   in an enumeration (and per materialized hom-category).
/// * `morphisms` — maximum number of morphisms per finite category.
/// * `enriched_objects` — maximum number of objects of a weakly
///   enriched category fed to functor/icon enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Caps {
    pub objects: usize,
    pub morphisms: usize,
    pub enriched_objects: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            objects: 4,
            morphisms: 12,
            enriched_objects: 2,
        }
    }
}

/// Environment variable consulted by [`Caps::from_env`].
pub const CAPS_ENV_VAR: &str = "ICONDECK_CAPS";

impl Caps {
    /// Parse a caps spec of the form
    /// `objects=N,morphisms=M,enriched-objects=K`.
    /// Every key is optional; omitted keys keep their default.
    pub fn parse(spec: &str) -> Result<Caps> {
        let mut caps = Caps::default();
        let spec = spec.trim();
        if spec.is_empty() {
            return Ok(caps);
        }
        for part in spec.split(',') {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Error::parse(format!("caps entry `{part}` is not key=value")))?;
            let value: usize = value
                .trim()
                .parse()
                .map_err(|_| Error::parse(format!("caps value `{value}` is not a number")))?;
            match key.trim() {
                "objects" => caps.objects = value,
                "morphisms" => caps.morphisms = value,
                "enriched-objects" => caps.enriched_objects = value,
                other => {
                    return Err(Error::parse(format!(
                        "unknown caps key `{other}` (expected objects, morphisms, enriched-objects)"
                    )))
                }
            }
        }
        Ok(caps)
    }

    /// Default caps, overridden by the `ICONDECK_CAPS` environment
    /// variable when set.
    pub fn from_env() -> Result<Caps> {
        match std::env::var(CAPS_ENV_VAR) {
            Ok(spec) => Caps::parse(&spec),
            Err(_) => Ok(Caps::default()),
        }
    }

    /// Check that a category of the given size may participate in an
    /// exhaustive operation.
    pub fn admit_category(&self, what: &str, objects: usize, morphisms: usize) -> Result<()> {
        if objects > self.objects {
            return Err(Error::cap(format!(
                "{what}: {objects} objects exceeds cap {}",
                self.objects
            )));
        }
        if morphisms > self.morphisms {
            return Err(Error::cap(format!(
                "{what}: {morphisms} morphisms exceeds cap {}",
                self.morphisms
            )));
        }
        Ok(())
    }

    /// Check an enriched-category object count.
    pub fn admit_enriched(&self, what: &str, objects: usize) -> Result<()> {
        if objects > self.enriched_objects {
            return Err(Error::cap(format!(
                "{what}: {objects} enriched objects exceeds cap {}",
                self.enriched_objects
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_full_spec() {
        let caps = Caps::parse("objects=6,morphisms=20,enriched-objects=3").unwrap();
        assert_eq!(
            caps,
            Caps {
                objects: 6,
                morphisms: 20,
                enriched_objects: 3
            }
        );
    }

    #[test]
    fn parse_partial_spec_keeps_defaults() {
        let caps = Caps::parse("morphisms=99").unwrap();
        assert_eq!(caps.objects, Caps::default().objects);
        assert_eq!(caps.morphisms, 99);
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(Caps::parse("objects").is_err());
        assert!(Caps::parse("objects=x").is_err());
        assert!(Caps::parse("widgets=3").is_err());
    }

    #[test]
    fn admit_checks_both_limits() {
        let caps = Caps::default();
        assert!(caps.admit_category("c", 4, 12).is_ok());
        assert!(caps.admit_category("c", 5, 1).is_err());
        assert!(caps.admit_category("c", 1, 13).is_err());
    }
}
