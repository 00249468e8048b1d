//! Output in the three formats. Every command builds a [`Report`] and the
//! format is chosen only at the end, so the three views stay in step.

use std::io::Write;

use clap::ValueEnum;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
    Pretty,
}

pub struct Report {
    pub json: Value,
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    /// Free text for `pretty`; the TSV table is used when empty.
    pub pretty: String,
}

impl Report {
    pub fn table(json: Value, header: Vec<&'static str>, rows: Vec<Vec<String>>) -> Self {
        Self { json, header, rows, pretty: String::new() }
    }

    pub fn with_pretty(mut self, text: String) -> Self {
        self.pretty = text;
        self
    }

    pub fn write(&self, format: Format, out: &mut dyn Write) -> std::io::Result<()> {
        match format {
            Format::Json => {
                let text = serde_json::to_string_pretty(&self.json).expect("json values always serialize");
                writeln!(out, "{text}")
            }
            Format::Tsv => {
                writeln!(out, "{}", self.header.join("\t"))?;
                for row in &self.rows {
                    writeln!(out, "{}", row.join("\t"))?;
                }
                Ok(())
            }
            Format::Pretty if !self.pretty.is_empty() => write!(out, "{}", self.pretty),
            Format::Pretty => {
                let widths: Vec<usize> = (0..self.header.len())
                    .map(|i| {
                        self.rows
                            .iter()
                            .map(|r| r[i].chars().count())
                            .chain([self.header[i].len()])
                            .max()
                            .unwrap_or(0)
                    })
                    .collect();
                let line = |cells: Vec<&str>| {
                    cells
                        .iter()
                        .zip(&widths)
                        .map(|(c, w)| format!("{c:<w$}"))
                        .collect::<Vec<_>>()
                        .join("  ")
                        .trim_end()
                        .to_string()
                };
                writeln!(out, "{}", line(self.header.clone()))?;
                for row in &self.rows {
                    writeln!(out, "{}", line(row.iter().map(String::as_str).collect()))?;
                }
                Ok(())
            }
        }
    }
}
