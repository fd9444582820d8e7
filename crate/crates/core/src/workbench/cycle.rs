use crate::group::Permutation;

use super::WorkbenchError;

fn malformed(input: &str, reason: impl Into<String>) -> WorkbenchError {
    WorkbenchError::MalformedCycle {
        input: input.to_string(),
        reason: reason.into(),
    }
}

/// Parses 1-based cycle notation such as `"(1 2 3)(4 5)"`.
///
/// Points inside a cycle may be separated by whitespace or commas. The degree
/// is `degree` when given, otherwise the largest point mentioned (at least 1).
/// Cycles must be disjoint.
pub fn parse_cycle_notation(s: &str, degree: Option<usize>) -> Result<Permutation, WorkbenchError> {
    let cycles = parse_cycles(s)?;
    let max_point = cycles.iter().flatten().copied().max().unwrap_or(0);
    let degree = match degree {
        Some(d) if max_point > d => {
            return Err(WorkbenchError::PointExceedsDegree {
                point: max_point,
                degree: d,
            })
        }
        Some(d) => d.max(1),
        None => max_point.max(1),
    };
    let zero_based: Vec<Vec<usize>> = cycles
        .iter()
        .map(|c| c.iter().map(|&p| p - 1).collect())
        .collect();
    Permutation::from_cycles(degree, &zero_based).map_err(|_| malformed(s, "cycles are not disjoint"))
}

/// 1-based cycles as written, with repeated points rejected.
fn parse_cycles(s: &str) -> Result<Vec<Vec<usize>>, WorkbenchError> {
    let mut cycles = Vec::new();
    let mut seen = std::collections::HashSet::new();
    let mut rest = s.trim_start();
    while !rest.is_empty() {
        let Some(body) = rest.strip_prefix('(') else {
            return Err(malformed(s, format!("expected '(' at {:?}", rest)));
        };
        let close = body.find(')').ok_or_else(|| malformed(s, "unbalanced parentheses"))?;
        let inner = &body[..close];
        if inner.contains('(') {
            return Err(malformed(s, "unbalanced parentheses"));
        }
        let mut cycle = Vec::new();
        for token in inner.split(|c: char| c.is_whitespace() || c == ',') {
            if token.is_empty() {
                continue;
            }
            let point: usize = token
                .parse()
                .map_err(|_| malformed(s, format!("non-numeric token {token:?}")))?;
            if point == 0 {
                return Err(malformed(s, "points are 1-based"));
            }
            if !seen.insert(point) {
                return Err(malformed(s, format!("point {point} repeated")));
            }
            cycle.push(point);
        }
        if !cycle.is_empty() {
            cycles.push(cycle);
        }
        rest = body[close + 1..].trim_start();
    }
    Ok(cycles)
}
