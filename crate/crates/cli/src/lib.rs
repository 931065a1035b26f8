//! A small scripting language for the `homcert` algebra library: declare
//! rings, modules and deformations, run tasks, and collect the results in a
//! JSON or text report.
//!
//! ```
//! let src = "ring R = F(101)[x,y] / (x^2, y^2); task certify(R, tor_persistent);";
//! let script = homcert_cli::parse(src).unwrap();
//! let report = homcert_cli::run_script(&script, &Default::default(), Default::default()).unwrap();
//! assert_eq!(report.tasks[0].result.as_ref().unwrap()["verdict"], "certified");
//! ```

pub mod ast;
pub mod diagnostic;
pub mod fixtures;
mod lexer;
pub mod parser;
mod pretty;
pub mod run;
pub mod text;
pub mod validate;

pub use ast::Script;
pub use diagnostic::Diagnostic;
pub use parser::{parse_expr, parse_syntax};
pub use run::{run, Report, RunOptions, TaskReport};
pub use text::render_text;
pub use validate::{compile, Overrides, Program, Settings};

/// Parses and validates a script with default settings.
pub fn parse(src: &str) -> Result<Script, Diagnostic> {
    let script = parse_syntax(src)?;
    compile(&script, &Overrides::default())?;
    Ok(script)
}

/// Validates `script` under `overrides` and runs it.
pub fn run_script(script: &Script, overrides: &Overrides, opts: RunOptions) -> Result<Report, Diagnostic> {
    Ok(run(&compile(script, overrides)?, opts))
}
