//! Textual set literals.
//!
//! The accepted grammar is deliberately loose about separators: integers
//! (with an optional leading `-`) separated by commas and/or whitespace,
//! optionally wrapped in a single pair of braces. `{0, 2}`, `0,2`, and
//! `0 2` all denote the same set. Duplicate elements are rejected rather
//! than deduplicated, since silently collapsing them would change every
//! cardinality-sensitive result downstream.

use ztile_core::polynomials::IntegerSet;

/// Parses a set literal.
///
/// Returns a one-line diagnostic on malformed input: unbalanced braces,
/// a non-integer token, a duplicate element, or an empty set.
pub fn parse_set_literal(text: &str) -> Result<IntegerSet, String> {
    let trimmed = text.trim();
    let inner = match (trimmed.strip_prefix('{'), trimmed.strip_suffix('}')) {
        (Some(_), None) | (None, Some(_)) => {
            return Err(format!("unbalanced braces in set literal '{trimmed}'"));
        }
        (Some(_), Some(_)) => &trimmed[1..trimmed.len() - 1],
        (None, None) => trimmed,
    };
    let mut elems: Vec<i64> = Vec::new();
    for token in inner.split(|ch: char| ch == ',' || ch.is_whitespace()) {
        if token.is_empty() {
            continue;
        }
        let value: i64 = token
            .parse()
            .map_err(|_| format!("invalid integer '{token}' in set literal"))?;
        if elems.contains(&value) {
            return Err(format!("duplicate element {value} in set literal"));
        }
        elems.push(value);
    }
    if elems.is_empty() {
        return Err("set literal denotes the empty set".to_string());
    }
    Ok(IntegerSet::new(elems))
}
