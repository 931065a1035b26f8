use std::fmt;

use crate::ast::Pos;

/// An error tied to a position in the script.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    pub pos: Pos,
    pub message: String,
}

impl Diagnostic {
    pub fn new(pos: Pos, message: impl Into<String>) -> Self {
        Diagnostic {
            pos,
            message: message.into(),
        }
    }

    pub fn line(&self) -> usize {
        self.pos.line
    }

    pub fn col(&self) -> usize {
        self.pos.col
    }

    /// The message with the offending source line and a caret under the column.
    pub fn render(&self, source: &str, file: &str) -> String {
        let mut out = format!("error: {}\n --> {}:{}:{}\n", self.message, file, self.pos.line, self.pos.col);
        if let Some(text) = source.lines().nth(self.pos.line.wrapping_sub(1)) {
            let gutter = self.pos.line.to_string();
            let pad = " ".repeat(gutter.len());
            let caret = " ".repeat(text.chars().take(self.pos.col.saturating_sub(1)).count());
            out.push_str(&format!("{pad} |\n{gutter} | {text}\n{pad} | {caret}^\n"));
        }
        out
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.pos.line, self.pos.col, self.message)
    }
}

impl std::error::Error for Diagnostic {}
