use super::{CnfError, CnfFormula};

/// Parses DIMACS CNF. Comment lines start with `c`; a line starting with `%`
/// ends the input. Clauses with one or two literals are padded to three by
/// repeating the last literal; longer clauses are rejected.
pub fn parse_dimacs(text: &str) -> Result<CnfFormula, CnfError> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses: Vec<[i32; 3]> = Vec::new();
    let mut current: Vec<i32> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if line.starts_with('%') {
            break;
        }
        if line.starts_with('p') {
            if header.is_some() {
                return Err(CnfError::MalformedHeader { line: line_no });
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let parsed = match fields.as_slice() {
                ["p", "cnf", v, c] => v.parse().ok().zip(c.parse().ok()),
                _ => None,
            };
            header = Some(parsed.ok_or(CnfError::MalformedHeader { line: line_no })?);
            continue;
        }
        let Some((num_vars, _)) = header else {
            return Err(CnfError::MalformedHeader { line: line_no });
        };
        for token in line.split_whitespace() {
            let lit: i64 = token.parse().map_err(|_| CnfError::BadToken {
                line: line_no,
                token: token.to_string(),
            })?;
            if lit == 0 {
                let clause = clauses.len() + 1;
                clauses.push(pad(clause, std::mem::take(&mut current))?);
                continue;
            }
            if lit.unsigned_abs() as usize > num_vars || lit.unsigned_abs() > i32::MAX as u64 {
                return Err(CnfError::LiteralOutOfRange {
                    clause: clauses.len() + 1,
                    literal: lit,
                    num_vars,
                });
            }
            current.push(lit as i32);
        }
    }

    let (num_vars, declared) = header.ok_or(CnfError::MalformedHeader { line: 0 })?;
    if !current.is_empty() {
        return Err(CnfError::UnterminatedClause);
    }
    if declared != clauses.len() {
        return Err(CnfError::ClauseCountMismatch {
            declared,
            found: clauses.len(),
        });
    }
    CnfFormula::new(num_vars, clauses)
}

fn pad(clause: usize, lits: Vec<i32>) -> Result<[i32; 3], CnfError> {
    match *lits.as_slice() {
        [] => Err(CnfError::EmptyClause { clause }),
        [a] => Ok([a, a, a]),
        [a, b] => Ok([a, b, b]),
        [a, b, c] => Ok([a, b, c]),
        _ => Err(CnfError::ClauseTooLong {
            clause,
            len: lits.len(),
        }),
    }
}
