use std::io::{self, Write};

use clap::ValueEnum;
use serde_json::Value;

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

/// What a subcommand prints at the end, in both formats.
#[derive(Debug)]
pub struct Report {
    /// False when a check or verification failed.
    pub ok: bool,
    pub text: String,
    pub json: Value,
}

impl Report {
    pub fn new(ok: bool, text: String, json: Value) -> Self {
        Self { ok, text, json }
    }

    pub fn print(&self, format: Format) -> io::Result<()> {
        let stdout = io::stdout();
        let mut out = stdout.lock();
        match format {
            Format::Text => {
                out.write_all(self.text.as_bytes())?;
                if !self.text.is_empty() && !self.text.ends_with('\n') {
                    out.write_all(b"\n")?;
                }
            }
            Format::Json => {
                serde_json::to_writer_pretty(&mut out, &self.json)?;
                out.write_all(b"\n")?;
            }
        }
        out.flush()
    }
}

/// Appends one line to a text report.
pub fn line(text: &mut String, s: impl AsRef<str>) {
    text.push_str(s.as_ref());
    text.push('\n');
}
