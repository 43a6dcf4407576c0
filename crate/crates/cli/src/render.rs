//! Text rendering of ideals, monomials, weight tables and base point paths.

use startrans_core::{ExponentVector, MonomialIdeal, WeightVector};

pub fn monomial(m: &ExponentVector, vars: &[String]) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exps().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(vars[i].clone()),
            _ => parts.push(format!("{}^{e}", vars[i])),
        }
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

pub fn ideal(i: &MonomialIdeal, vars: &[String]) -> String {
    let gens: Vec<String> = i.gens().iter().map(|g| monomial(g, vars)).collect();
    format!("({})", gens.join(", "))
}

pub fn weight(w: &WeightVector) -> String {
    let parts: Vec<String> = w.weights().iter().map(u64::to_string).collect();
    format!("({})", parts.join(", "))
}

/// A base point path: `root` for the empty path, otherwise the direction
/// variables joined by commas, read root-first.
pub fn path(p: &[usize], vars: &[String]) -> String {
    if p.is_empty() {
        "root".to_string()
    } else {
        p.iter()
            .map(|&j| vars[j].as_str())
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Renders a table of optional exponents; `rows[r][c]` is the entry in
/// column `c` and row `r`, blank cells drawn as dots.
pub fn exponent_table(grid: &[Vec<Option<u64>>], col_var: &str, row_var: &str) -> String {
    let cols = grid.first().map(Vec::len).unwrap_or(0);
    let mut cells: Vec<Vec<String>> = Vec::new();
    let mut head = vec![format!("{row_var}\\{col_var}")];
    head.extend((0..cols).map(|c| c.to_string()));
    cells.push(head);
    for (r, row) in grid.iter().enumerate() {
        let mut line = vec![r.to_string()];
        line.extend(row.iter().map(|e| match e {
            Some(v) => v.to_string(),
            None => ".".to_string(),
        }));
        cells.push(line);
    }
    let width = cells
        .iter()
        .flat_map(|row| row.iter().map(String::len))
        .max()
        .unwrap_or(1);
    cells
        .iter()
        .map(|row| {
            row.iter()
                .map(|c| format!("{c:>width$}"))
                .collect::<Vec<_>>()
                .join("  ")
        })
        .collect::<Vec<_>>()
        .join("\n")
}
