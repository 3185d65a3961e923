use std::fmt::Display;

/// Collects human-readable lines and `key=value` records; prints one kind.
pub struct Output {
    pub machine: bool,
    lines: Vec<String>,
    records: Vec<String>,
}

fn render_value(v: &str) -> String {
    if v.is_empty() || v.chars().any(char::is_whitespace) || v.contains('"') {
        format!("{v:?}")
    } else {
        v.to_string()
    }
}

impl Output {
    pub fn new(machine: bool) -> Self {
        Output {
            machine,
            lines: Vec::new(),
            records: Vec::new(),
        }
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    pub fn record(&mut self, fields: &[(&str, &dyn Display)]) {
        let rec: Vec<String> = fields
            .iter()
            .map(|(k, v)| format!("{k}={}", render_value(&v.to_string())))
            .collect();
        self.records.push(rec.join(" "));
    }

    pub fn print(&self) {
        let out = if self.machine {
            &self.records
        } else {
            &self.lines
        };
        for l in out {
            println!("{l}");
        }
    }
}
