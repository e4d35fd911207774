//! Run manifest: the resolved parameter map with per-parameter provenance
//! (flag | file | default), embedded under the "manifest" key of every JSON
//! summary. The wall-clock stamp lives in its own key so diff-based
//! comparisons can exclude it.

use std::collections::BTreeMap;
use std::path::Path;
use std::time::{SystemTime, UNIX_EPOCH};

use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Serialize)]
pub struct Parameter {
    pub value: Value,
    /// "flag" | "file" | "default"
    pub source: &'static str,
}

#[derive(Debug, Clone, Serialize)]
pub struct RunManifest {
    pub subcommand: String,
    pub version: &'static str,
    pub start_unix: f64,
    pub outputs: Vec<String>,
    pub parameters: BTreeMap<String, Parameter>,
}

impl RunManifest {
    pub fn new(subcommand: &str) -> Self {
        RunManifest {
            subcommand: subcommand.to_string(),
            version: env!("CARGO_PKG_VERSION"),
            start_unix: SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map(|d| d.as_secs_f64())
                .unwrap_or(0.0),
            outputs: Vec::new(),
            parameters: BTreeMap::new(),
        }
    }

    pub fn record_output(&mut self, path: &Path) {
        self.outputs.push(path.display().to_string());
    }
}

/// Merges flag values over config-file values over defaults, recording the
/// provenance of every resolved parameter in the manifest.
pub struct Resolver<'a> {
    file: Option<serde_json::Map<String, Value>>,
    manifest: &'a mut RunManifest,
}

impl<'a> Resolver<'a> {
    /// Loads the optional flat-JSON config file.
    pub fn new(
        config_path: Option<&Path>,
        manifest: &'a mut RunManifest,
    ) -> Result<Self, String> {
        let file = match config_path {
            None => None,
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| format!("cannot read config file {}: {e}", path.display()))?;
                let value: Value = serde_json::from_str(&text)
                    .map_err(|e| format!("config file {} is not valid JSON: {e}", path.display()))?;
                match value {
                    Value::Object(map) => {
                        // flat document: scalar values, or arrays of scalars
                        // (sweep grids); no objects, no nested arrays
                        let nested = map.values().any(|v| match v {
                            Value::Object(_) => true,
                            Value::Array(items) => {
                                items.iter().any(|i| i.is_object() || i.is_array())
                            }
                            _ => false,
                        });
                        if nested {
                            return Err(format!(
                                "config file {} must be a flat JSON object (no nesting)",
                                path.display()
                            ));
                        }
                        Some(map)
                    }
                    _ => {
                        return Err(format!(
                            "config file {} must contain a JSON object",
                            path.display()
                        ))
                    }
                }
            }
        };
        Ok(Resolver { file, manifest })
    }

    fn record(&mut self, name: &str, value: Value, source: &'static str) {
        self.manifest
            .parameters
            .insert(name.to_string(), Parameter { value, source });
    }

    pub fn f64(&mut self, name: &str, flag: Option<f64>, default: f64) -> Result<f64, String> {
        if let Some(v) = flag {
            self.record(name, Value::from(v), "flag");
            return Ok(v);
        }
        if let Some(v) = self.file_value(name) {
            let v = v
                .as_f64()
                .ok_or_else(|| format!("config key '{name}' must be a number"))?;
            self.record(name, Value::from(v), "file");
            return Ok(v);
        }
        self.record(name, Value::from(default), "default");
        Ok(default)
    }

    pub fn usize(&mut self, name: &str, flag: Option<usize>, default: usize) -> Result<usize, String> {
        if let Some(v) = flag {
            self.record(name, Value::from(v as u64), "flag");
            return Ok(v);
        }
        if let Some(v) = self.file_value(name) {
            let v = v
                .as_u64()
                .ok_or_else(|| format!("config key '{name}' must be a nonnegative integer"))?;
            self.record(name, Value::from(v), "file");
            return Ok(v as usize);
        }
        self.record(name, Value::from(default as u64), "default");
        Ok(default)
    }

    /// Lists of numbers are config-file-only (used by sweep grids).
    pub fn f64_list(&mut self, name: &str) -> Result<Option<Vec<f64>>, String> {
        // sweep grids are the one sanctioned array-valued key family
        let raw = match self.file.as_ref().and_then(|m| m.get(name)) {
            Some(v) => v.clone(),
            None => return Ok(None),
        };
        let list = raw
            .as_array()
            .ok_or_else(|| format!("config key '{name}' must be an array of numbers"))?
            .iter()
            .map(|v| {
                v.as_f64()
                    .ok_or_else(|| format!("config key '{name}' must contain only numbers"))
            })
            .collect::<Result<Vec<f64>, String>>()?;
        self.record(name, Value::from(list.clone()), "file");
        Ok(Some(list))
    }

    fn file_value(&self, name: &str) -> Option<Value> {
        self.file.as_ref().and_then(|m| m.get(name)).cloned()
    }
}
