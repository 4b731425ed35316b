use std::path::{Path, PathBuf};

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::nf::{parse_rational, FieldKind, NumberField};

/// A validated field configuration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldConfig {
    pub kind: FieldKind,
    pub parameter: i64,
    /// Extra S-unit generators as power-basis coordinate strings.
    pub extra_generators: Vec<Vec<String>>,
    pub search_box: Option<u32>,
    pub solutions: Option<PathBuf>,
    /// Whether the supplied solution list is claimed to be complete.
    pub solutions_complete: bool,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    field: RawField,
    #[serde(default)]
    sunit: RawSunit,
    #[serde(default)]
    input: RawInput,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawField {
    kind: String,
    m: Option<i64>,
    k: Option<i64>,
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct RawSunit {
    #[serde(default)]
    extra_generators: Vec<Vec<String>>,
    search_box: Option<i64>,
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct RawInput {
    solutions: Option<String>,
    #[serde(default)]
    complete: bool,
}

fn line_of(text: &str, offset: usize) -> usize {
    text[..offset.min(text.len())].matches('\n').count() + 1
}

/// Line of the first occurrence of `key =` in the text, for diagnostics on
/// values that parse as TOML but fail validation.
fn line_of_key(text: &str, key: &str) -> usize {
    text.lines()
        .position(|l| {
            let l = l.trim_start();
            l.strip_prefix(key).is_some_and(|rest| rest.trim_start().starts_with('='))
        })
        .map_or(0, |i| i + 1)
}

impl FieldConfig {
    pub fn for_field(kind: FieldKind, parameter: i64) -> Self {
        FieldConfig {
            kind,
            parameter,
            extra_generators: Vec::new(),
            search_box: None,
            solutions: None,
            solutions_complete: false,
        }
    }

    /// Parse configuration text; relative solution paths are resolved
    /// against `base_dir`.
    pub fn parse(text: &str, base_dir: Option<&Path>) -> Result<Self> {
        let raw: RawConfig = toml::from_str(text).map_err(|e| {
            let line = e.span().map_or(0, |s| line_of(text, s.start));
            Error::parse(line, e.message().to_string())
        })?;
        let kind = FieldKind::parse(&raw.field.kind).ok_or_else(|| {
            Error::parse(
                line_of_key(text, "kind"),
                format!("unknown field kind {:?} (expected quadratic or cyclotomic2)", raw.field.kind),
            )
        })?;
        let parameter = match kind {
            FieldKind::Quadratic => raw.field.m.ok_or_else(|| {
                Error::parse(line_of_key(text, "kind"), "quadratic fields need `m`")
            })?,
            FieldKind::Cyclotomic2 => raw.field.k.ok_or_else(|| {
                Error::parse(line_of_key(text, "kind"), "cyclotomic2 fields need `k`")
            })?,
        };
        let search_box = match raw.sunit.search_box {
            None => None,
            Some(b) if (1..=u32::MAX as i64).contains(&b) => Some(b as u32),
            Some(b) => {
                return Err(Error::parse(
                    line_of_key(text, "search_box"),
                    format!("search_box must be at least 1, got {b}"),
                ))
            }
        };
        for g in &raw.sunit.extra_generators {
            for c in g {
                if parse_rational(c).is_none() {
                    return Err(Error::parse(
                        line_of_key(text, "extra_generators"),
                        format!("bad rational {c:?} in extra_generators"),
                    ));
                }
            }
        }
        let solutions = raw.input.solutions.map(|s| {
            let p = PathBuf::from(s);
            match base_dir {
                Some(dir) if p.is_relative() => dir.join(p),
                _ => p,
            }
        });
        let config = FieldConfig {
            kind,
            parameter,
            extra_generators: raw.sunit.extra_generators,
            search_box,
            solutions,
            solutions_complete: raw.input.complete,
        };
        config.field()?;
        Ok(config)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        Self::parse(&text, path.parent())
    }

    pub fn field(&self) -> Result<NumberField> {
        NumberField::make(self.kind, self.parameter)
    }
}
