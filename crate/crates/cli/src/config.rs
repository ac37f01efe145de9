//! Flag parsing shared by the subcommands.

use std::collections::BTreeMap;

use supersym::combinat::{DegreeVector, Partition};

/// Output format for every subcommand.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

/// A usage problem: reported on stderr with exit code 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Parsed `--key value` flags plus positional arguments.
pub struct Flags {
    values: BTreeMap<String, String>,
    switches: Vec<String>,
    pub positional: Vec<String>,
}

const SWITCH_NAMES: &[&str] = &["check", "count-only", "validate-only"];

impl Flags {
    pub fn parse(args: &[String]) -> Result<Flags, UsageError> {
        let mut values = BTreeMap::new();
        let mut switches = Vec::new();
        let mut positional = Vec::new();
        let mut config_path = None;
        let mut it = args.iter().peekable();
        while let Some(arg) = it.next() {
            if let Some(name) = arg.strip_prefix("--") {
                if let Some((key, value)) = name.split_once('=') {
                    values.insert(key.to_string(), value.to_string());
                } else if SWITCH_NAMES.contains(&name) {
                    switches.push(name.to_string());
                } else {
                    let value = it
                        .next()
                        .ok_or_else(|| UsageError(format!("--{name} needs a value")))?;
                    if name == "config" {
                        config_path = Some(value.clone());
                    } else {
                        values.insert(name.to_string(), value.clone());
                    }
                }
            } else {
                positional.push(arg.clone());
            }
        }
        // config file supplies defaults; explicit flags override them
        if let Some(path) = config_path {
            for (key, value) in read_config(&path)? {
                if SWITCH_NAMES.contains(&key.as_str()) {
                    if value == "true" && !switches.contains(&key) {
                        switches.push(key);
                    }
                } else {
                    values.entry(key).or_insert(value);
                }
            }
        }
        Ok(Flags {
            values,
            switches,
            positional,
        })
    }

    pub fn switch(&self, name: &str) -> bool {
        self.switches.iter().any(|s| s == name)
    }

    pub fn get(&self, name: &str) -> Option<&str> {
        self.values.get(name).map(String::as_str)
    }

    pub fn usize_or(&self, name: &str, default: usize) -> Result<usize, UsageError> {
        match self.get(name) {
            None => Ok(default),
            Some(v) => v
                .parse()
                .map_err(|_| UsageError(format!("--{name} expects an integer, got {v:?}"))),
        }
    }

    pub fn require_usize(&self, name: &str) -> Result<usize, UsageError> {
        self.get(name)
            .ok_or_else(|| UsageError(format!("--{name} is required")))?
            .parse()
            .map_err(|_| UsageError(format!("--{name} expects an integer")))
    }

    /// Integer vector flag: `--alpha 2,1` or `--alpha [2,1]`.
    pub fn vector_or(&self, name: &str, default: Vec<u32>) -> Result<Vec<u32>, UsageError> {
        match self.get(name) {
            None => Ok(default),
            Some(raw) => {
                let inner = raw.trim().trim_start_matches('[').trim_end_matches(']');
                if inner.trim().is_empty() {
                    return Ok(Vec::new());
                }
                inner
                    .split(',')
                    .map(|item| {
                        item.trim()
                            .parse()
                            .map_err(|_| UsageError(format!("--{name}: bad entry {item:?}")))
                    })
                    .collect()
            }
        }
    }

    pub fn partition(&self, name: &str) -> Result<Option<Partition>, UsageError> {
        match self.get(name) {
            None => Ok(None),
            Some(raw) => raw
                .parse()
                .map(Some)
                .map_err(|e| UsageError(format!("--{name}: {e}"))),
        }
    }

    pub fn format(&self) -> Result<Format, UsageError> {
        match self.get("format") {
            None | Some("text") => Ok(Format::Text),
            Some("json") => Ok(Format::Json),
            Some(other) => Err(UsageError(format!(
                "--format must be text or json, got {other:?}"
            ))),
        }
    }
}

/// Read a `key = value` config file (one pair per line, `#` comments).
fn read_config(path: &str) -> Result<Vec<(String, String)>, UsageError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| UsageError(format!("cannot read config {path}: {e}")))?;
    let mut pairs = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| UsageError(format!("{path}:{}: expected key = value", lineno + 1)))?;
        pairs.push((key.trim().to_string(), value.trim().to_string()));
    }
    Ok(pairs)
}

/// The component a command operates on.
pub struct Component {
    pub n: usize,
    pub m: usize,
    pub m_bar: usize,
    pub content: DegreeVector,
}

impl Component {
    /// Read `--n`, `--alpha`, `--beta`, with `--m`/`--mbar` defaulting to the
    /// vector lengths.
    pub fn from_flags(flags: &Flags) -> Result<Component, UsageError> {
        let n = flags.require_usize("n")?;
        let alpha = flags.vector_or("alpha", Vec::new())?;
        let beta = flags.vector_or("beta", Vec::new())?;
        let m = flags.usize_or("m", alpha.len())?;
        let m_bar = flags.usize_or("mbar", beta.len())?;
        if alpha.len() != m {
            return Err(UsageError(format!(
                "alpha has {} entries but m = {m}",
                alpha.len()
            )));
        }
        if beta.len() != m_bar {
            return Err(UsageError(format!(
                "beta has {} entries but m' = {m_bar}",
                beta.len()
            )));
        }
        Ok(Component {
            n,
            m,
            m_bar,
            content: DegreeVector::new(alpha, beta),
        })
    }

    pub fn json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "alpha": self.content.alpha,
            "beta": self.content.beta,
        })
    }
}
