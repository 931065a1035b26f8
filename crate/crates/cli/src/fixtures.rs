//! The shipped fixture corpus.

use crate::ast::Script;
use crate::diagnostic::Diagnostic;
use crate::parser::parse_fixture;

/// Rings and modules available under `--seed-fixtures`.
pub const RINGS: &str = include_str!("../fixtures/rings.hc");
/// Good-factorization and linkage-denominator tasks, self-contained.
pub const DENOMINATORS: &str = include_str!("../fixtures/denominators.hc");
/// Tasks over the fixture rings.
pub const EXAMPLES: &str = include_str!("../fixtures/examples.hc");

/// `script` with the fixture declarations in front.
pub fn seed(script: Script) -> Result<Script, Diagnostic> {
    let mut items = parse_fixture(RINGS)?.items;
    items.extend(script.items);
    Ok(Script { items })
}
