use std::fmt::Display;
use std::io::{self, Write};

/// Key/value report, printed as `key: value` lines (with `[group]`
/// headers) or, in machine mode, as `group.key=value` lines.
type Group = (Option<String>, Vec<(String, String)>);

#[derive(Debug, Default)]
pub struct Report {
    groups: Vec<Group>,
}

impl Report {
    pub fn new() -> Report {
        Report { groups: vec![(None, Vec::new())] }
    }

    pub fn group(&mut self, title: impl Into<String>) {
        self.groups.push((Some(title.into()), Vec::new()));
    }

    pub fn add(&mut self, key: impl Into<String>, value: impl Display) {
        self.groups.last_mut().unwrap().1.push((key.into(), value.to_string()));
    }

    pub fn write(&self, out: &mut impl Write, machine: bool) -> io::Result<()> {
        for (title, entries) in &self.groups {
            if entries.is_empty() {
                continue;
            }
            let prefix = match (title, machine) {
                (Some(t), true) => format!("{}.", slug(t)),
                (Some(t), false) => {
                    writeln!(out, "[{t}]")?;
                    String::new()
                }
                (None, _) => String::new(),
            };
            for (k, v) in entries {
                if machine {
                    writeln!(out, "{prefix}{}={v}", slug(k))?;
                } else {
                    writeln!(out, "{k}: {v}")?;
                }
            }
        }
        Ok(())
    }
}

fn slug(s: &str) -> String {
    s.chars()
        .map(|c| if c.is_whitespace() { '_' } else { c.to_ascii_lowercase() })
        .collect()
}

/// Fixed precision so reports are byte-stable.
pub fn fixed(x: f64) -> String {
    format!("{x:.4}")
}
