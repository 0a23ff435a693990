use anyhow::{bail, Result};
use serde_json::Value;

use crate::args::Format;

/// What a command produced, in every form it supports.
pub struct Report {
    pub json: Value,
    pub text: String,
    pub csv: Option<String>,
    pub default: Format,
    pub pass: bool,
}

impl Report {
    pub fn new(json: Value, text: String) -> Self {
        Report {
            json,
            text,
            csv: None,
            default: Format::Text,
            pass: true,
        }
    }

    pub fn with_csv(mut self, csv: String) -> Self {
        self.csv = Some(csv);
        self
    }

    pub fn prefer(mut self, format: Format) -> Self {
        self.default = format;
        self
    }

    pub fn pass(mut self, pass: bool) -> Self {
        self.pass = pass;
        self
    }

    pub fn render(&self, format: Option<Format>) -> Result<String> {
        let mut s = match format.unwrap_or(self.default) {
            Format::Json => serde_json::to_string_pretty(&self.json)?,
            Format::Text => self.text.clone(),
            Format::Csv => match &self.csv {
                Some(csv) => csv.clone(),
                None => bail!("this command has no CSV output"),
            },
        };
        if !s.ends_with('\n') {
            s.push('\n');
        }
        Ok(s)
    }
}

pub fn mark(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

/// `PASS  name` lines.
pub fn check_lines<'a>(rows: impl IntoIterator<Item = (&'a str, bool)>) -> String {
    rows.into_iter()
        .map(|(name, pass)| format!("{}  {name}\n", mark(pass)))
        .collect()
}

pub fn table_csv(table: &[Vec<String>]) -> String {
    table
        .iter()
        .map(|row| format!("{}\n", row.join(",")))
        .collect()
}
