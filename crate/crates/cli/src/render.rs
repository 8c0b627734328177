//! Plain-text and LaTeX layouts.

use fockreg::{CanonicalBasis, DecompositionMatrix, FockVector, ShiftedSymbol};

/// Rows top to bottom as `B^{l-1}, …, B^0`, matching the text layout.
pub fn latex_symbol(sym: &ShiftedSymbol) -> String {
    let width = sym.width();
    let mut out = format!("\\left(\\begin{{array}}{{{}}}\n", "r".repeat(width));
    for row in sym.rows().iter().rev() {
        let mut cells: Vec<String> = row.iter().map(i64::to_string).collect();
        cells.resize(width, String::new());
        out.push_str(&cells.join(" & "));
        out.push_str(" \\\\\n");
    }
    out.push_str("\\end{array}\\right)\n");
    out
}

/// One `multipartition<TAB>coefficient` line per term; `0` for the zero
/// vector.
pub fn text_vector(v: &FockVector) -> String {
    if v.is_zero() {
        return "0\n".to_string();
    }
    v.terms().map(|(mp, p)| format!("{mp}\t{p}\n")).collect()
}

pub fn text_basis(basis: &CanonicalBasis) -> String {
    let mut out = String::new();
    for (label, vector) in basis.entries() {
        out.push_str(&format!("b({label})\n"));
        for line in text_vector(vector).lines() {
            out.push_str("  ");
            out.push_str(line);
            out.push('\n');
        }
    }
    out
}

/// Rows are all multipartitions, columns the cylindric ones; zeros print
/// as `.` and columns are padded to a common width.
pub fn text_matrix(matrix: &DecompositionMatrix, evaluate: bool) -> String {
    let values = matrix.evaluated();
    let cell = |r: usize, k: usize| -> String {
        if evaluate {
            let x = values[r][k].to_string();
            if x == "0" { ".".into() } else { x }
        } else {
            let p = &matrix.entries[r][k];
            if p.is_zero() { ".".into() } else { p.to_string() }
        }
    };

    let mut grid: Vec<Vec<String>> = Vec::with_capacity(matrix.rows.len() + 1);
    let mut header = vec![String::new()];
    header.extend(matrix.columns.iter().map(|c| c.to_string()));
    grid.push(header);
    for (r, row) in matrix.rows.iter().enumerate() {
        let mut line = vec![row.to_string()];
        line.extend((0..matrix.columns.len()).map(|k| cell(r, k)));
        grid.push(line);
    }
    let widths: Vec<usize> = (0..=matrix.columns.len())
        .map(|k| grid.iter().map(|line| line[k].chars().count()).max().unwrap_or(0))
        .collect();

    let mut out = String::new();
    for line in &grid {
        let padded: Vec<String> =
            line.iter().zip(&widths).map(|(s, &w)| format!("{s:<w$}")).collect();
        out.push_str(padded.join("  ").trim_end());
        out.push('\n');
    }
    out
}
