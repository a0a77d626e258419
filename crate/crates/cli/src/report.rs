use std::process::ExitCode;

use serde::Serialize;
use serde_json::{json, Value};

/// What a command hands back for the envelope.
pub struct Outcome {
    pub inputs: Value,
    pub result: Value,
    /// Whether the command's verification passed; decides exit code 0 or 1.
    pub pass: bool,
    /// Text rendering to use instead of the generic one.
    pub text: Option<String>,
}

impl Outcome {
    pub fn new(inputs: Value, result: impl Serialize, pass: bool) -> Self {
        Outcome {
            inputs,
            result: serde_json::to_value(result).expect("reports serialize"),
            pass,
            text: None,
        }
    }

    pub fn with_text(mut self, text: String) -> Self {
        self.text = Some(text);
        self
    }
}

#[derive(Serialize)]
pub struct Envelope {
    command: String,
    inputs: Value,
    result: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    timing_ms: Option<u64>,
    version: &'static str,
}

impl Envelope {
    pub fn new(command: &str, inputs: Value, result: Value, timing_ms: Option<u64>) -> Self {
        Envelope {
            command: command.to_string(),
            inputs,
            result,
            timing_ms,
            version: env!("CARGO_PKG_VERSION"),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// One `path = value` line per leaf of the JSON report.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let value = serde_json::to_value(self).expect("reports serialize");
        flatten("", &value, &mut out);
        out
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut String) {
    let join = |k: &str| {
        if prefix.is_empty() {
            k.to_string()
        } else {
            format!("{prefix}.{k}")
        }
    };
    match v {
        Value::Object(map) => {
            for (k, v) in map {
                flatten(&join(k), v, out);
            }
        }
        Value::Array(items) if items.iter().any(|i| i.is_object() || i.is_array()) => {
            for (i, v) in items.iter().enumerate() {
                flatten(&join(&i.to_string()), v, out);
            }
        }
        other => {
            out.push_str(prefix);
            out.push_str(" = ");
            out.push_str(&other.to_string());
            out.push('\n');
        }
    }
}

#[derive(Debug)]
pub enum CliError {
    /// Bad command line.
    Usage(String),
    /// Unreadable or unwritable file.
    Io(String),
    /// A data file or argument the command could not parse.
    Malformed(String),
    Lib(preadm::Error),
}

impl From<preadm::Error> for CliError {
    fn from(e: preadm::Error) -> Self {
        CliError::Lib(e)
    }
}

impl CliError {
    fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Io(_) => "io",
            CliError::Malformed(_) => "malformed",
            CliError::Lib(preadm::Error::Malformed { .. }) => "malformed",
            CliError::Lib(preadm::Error::DegreeMismatch { .. }) => "degree-mismatch",
            CliError::Lib(preadm::Error::CapExceeded { .. }) => "cap-exceeded",
            CliError::Lib(preadm::Error::Precondition(_)) => "precondition",
            CliError::Lib(preadm::Error::NotInGroup(_)) => "not-in-group",
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Lib(preadm::Error::CapExceeded { .. }) => 3,
            _ => 2,
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Usage(m) | CliError::Io(m) | CliError::Malformed(m) => m.clone(),
            CliError::Lib(e) => e.to_string(),
        }
    }
}

/// Prints the error as one JSON line on stderr and returns its exit code.
pub fn fail(e: &CliError) -> ExitCode {
    let line = json!({
        "error": {
            "kind": e.kind(),
            "message": e.message(),
            "exit_code": e.exit_code(),
        }
    });
    eprintln!("{line}");
    ExitCode::from(e.exit_code())
}
