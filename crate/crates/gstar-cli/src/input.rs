//! Long-format group CSV ingestion: header `group,value`, exactly two
//! distinct labels, first label in file order is group i.

use std::fs;
use std::path::Path;

use crate::CliError;

/// The two groups in file order: the first label seen is group i.
pub struct Groups {
    pub values_i: Vec<f64>,
    pub values_j: Vec<f64>,
}

pub fn read_groups(path: &Path) -> Result<Groups, CliError> {
    let content = fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;

    let mut labels: Vec<String> = Vec::new();
    let mut columns: Vec<Vec<f64>> = Vec::new();
    let mut saw_header = false;

    for (idx, raw) in content.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim_end_matches('\r');
        if line.is_empty() {
            continue;
        }
        if !saw_header {
            if line != "group,value" {
                return Err(CliError::usage(format!(
                    "line {line_no}: expected header `group,value`, got `{line}`"
                )));
            }
            saw_header = true;
            continue;
        }
        let Some((label, value)) = line.split_once(',') else {
            return Err(CliError::usage(format!(
                "line {line_no}: expected `label,value`, got `{line}`"
            )));
        };
        let value: f64 = value.trim().parse().map_err(|_| {
            CliError::usage(format!("line {line_no}: `{}` is not a number", value.trim()))
        })?;
        let label = label.trim();
        match labels.iter().position(|l| l == label) {
            Some(pos) => columns[pos].push(value),
            None if labels.len() < 2 => {
                labels.push(label.to_string());
                columns.push(vec![value]);
            }
            None => {
                return Err(CliError::usage(format!(
                    "line {line_no}: third group label `{label}` (exactly two expected)"
                )));
            }
        }
    }

    if !saw_header {
        return Err(CliError::usage("input is empty; expected header `group,value`".into()));
    }
    if labels.len() < 2 {
        return Err(CliError::usage(format!(
            "need exactly two group labels, found {}",
            labels.len()
        )));
    }

    let values_j = columns.pop().expect("two columns");
    let values_i = columns.pop().expect("two columns");
    Ok(Groups { values_i, values_j })
}
