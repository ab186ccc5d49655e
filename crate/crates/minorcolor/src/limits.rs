//! Exact-search budgets. These are configuration constants, not hard-coded
//! literals in the algorithms; callers that need different trade-offs can
//! check against them before calling.

/// Largest graph for exact independence/clique number.
pub const EXACT_ALPHA_MAX_N: usize = 40;

/// Largest graph for exact chromatic number.
pub const EXACT_CHROMATIC_MAX_N: usize = 20;

/// Largest graph for exact isomorphism / canonical form.
pub const ISO_MAX_N: usize = 16;

/// Largest vertex count for exhaustive enumeration of alpha<=2 classes.
pub const ENUM_EXHAUSTIVE_MAX_N: usize = 11;

/// Largest graph accepted by cockade recognition.
pub const COCKADE_RECOGNIZE_MAX_N: usize = 60;

/// Default node budget for minor search (assignment nodes expanded).
pub const DEFAULT_MINOR_BUDGET: u64 = 10_000_000;

/// Environment variable overriding the minor-search node budget.
pub const BUDGET_ENV_VAR: &str = "MINORCOLOR_BUDGET";

/// Minor-search budget: the environment override if set and parseable,
/// otherwise [`DEFAULT_MINOR_BUDGET`].
pub fn minor_budget() -> u64 {
    std::env::var(BUDGET_ENV_VAR)
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_MINOR_BUDGET)
}
