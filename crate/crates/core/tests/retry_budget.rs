//! Kept in its own binary: it mutates the process environment.

use nodalgaps::constructions::{
    line_arrangement, retry_budget, DEFAULT_RETRY_BUDGET, RETRY_BUDGET_VAR,
};

#[test]
fn budget_follows_environment() {
    std::env::remove_var(RETRY_BUDGET_VAR);
    assert_eq!(retry_budget(), DEFAULT_RETRY_BUDGET);
    std::env::set_var(RETRY_BUDGET_VAR, "3");
    assert_eq!(retry_budget(), 3);
    assert!(line_arrangement(5, 2, 0).unwrap().attempts <= 3);
    std::env::set_var(RETRY_BUDGET_VAR, "not a number");
    assert_eq!(retry_budget(), DEFAULT_RETRY_BUDGET);
    std::env::remove_var(RETRY_BUDGET_VAR);
}
