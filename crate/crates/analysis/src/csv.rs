//! Map CSV: header `x,y,log10_dre,log10_dim`, one row per cell, row-major
//! over `y` then `x`, `nan` for sentinel cells, 17 significant digits.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::error::AnalysisError;
use crate::grid::ErrorMapGrid;

pub const MAP_HEADER: &str = "x,y,log10_dre,log10_dim";

fn num(v: f64) -> String {
    if v.is_nan() {
        "nan".to_string()
    } else {
        format!("{v:.16e}")
    }
}

pub fn map_to_csv(grid: &ErrorMapGrid) -> String {
    let mut s = String::with_capacity(80 * grid.nx() * grid.ny() + 32);
    s.push_str(MAP_HEADER);
    s.push('\n');
    for (j, &y) in grid.y_axis.iter().enumerate() {
        for (i, &x) in grid.x_axis.iter().enumerate() {
            let _ = writeln!(
                s,
                "{},{},{},{}",
                num(x),
                num(y),
                num(grid.log10_dre[j][i]),
                num(grid.log10_dim[j][i])
            );
        }
    }
    s
}

/// Writes the map; the file appears only once it is complete.
pub fn emit_map_csv(grid: &ErrorMapGrid, path: &Path) -> Result<(), AnalysisError> {
    let tmp = path.with_extension("csv.tmp");
    fs::write(&tmp, map_to_csv(grid))?;
    fs::rename(&tmp, path)?;
    Ok(())
}

/// Parses a map back; axes are recovered from the row order.
pub fn parse_map_csv(text: &str) -> Result<ErrorMapGrid, AnalysisError> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, h)) if h.trim() == MAP_HEADER => {}
        _ => {
            return Err(AnalysisError::Parse {
                line: 1,
                msg: format!("expected header `{MAP_HEADER}`"),
            })
        }
    }
    let mut xs: Vec<f64> = Vec::new();
    let mut ys: Vec<f64> = Vec::new();
    let mut dre: Vec<Vec<f64>> = Vec::new();
    let mut dim: Vec<Vec<f64>> = Vec::new();
    for (i, line) in lines {
        let lineno = i + 1;
        if line.trim().is_empty() {
            continue;
        }
        let err = |m: &str| AnalysisError::Parse {
            line: lineno,
            msg: m.to_string(),
        };
        let cols: Vec<f64> = line
            .split(',')
            .map(|c| c.trim().parse::<f64>())
            .collect::<Result<_, _>>()
            .map_err(|_| err("unparsable number"))?;
        if cols.len() != 4 {
            return Err(err("expected 4 columns"));
        }
        let (x, y) = (cols[0], cols[1]);
        if ys.last() != Some(&y) {
            ys.push(y);
            dre.push(Vec::new());
            dim.push(Vec::new());
        }
        if ys.len() == 1 {
            xs.push(x);
        }
        let row = dre.len() - 1;
        let col = dre[row].len();
        if xs.get(col) != Some(&x) {
            return Err(err("cell out of row-major order"));
        }
        dre[row].push(cols[2]);
        dim[row].push(cols[3]);
    }
    ErrorMapGrid::new(xs, ys, dre, dim)
}

pub fn read_map_csv(path: &Path) -> Result<ErrorMapGrid, AnalysisError> {
    parse_map_csv(&fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid() -> ErrorMapGrid {
        ErrorMapGrid::new(
            vec![0.0, 0.1],
            vec![1e-6, 2.5],
            vec![vec![-9.123456789012345, f64::NAN], vec![-15.5, -30.0]],
            vec![vec![-11.0, -12.0], vec![-16.000000000000004, -14.25]],
        )
        .unwrap()
    }

    #[test]
    fn two_by_two_has_four_rows() {
        let s = map_to_csv(&grid());
        assert_eq!(s.lines().count(), 5);
        assert!(s.lines().nth(2).unwrap().contains(",nan,"));
    }

    #[test]
    fn round_trip_is_exact() {
        let g = grid();
        let back = parse_map_csv(&map_to_csv(&g)).unwrap();
        assert_eq!(back.x_axis, g.x_axis);
        assert_eq!(back.y_axis, g.y_axis);
        assert!(back.log10_dre[0][1].is_nan());
        assert_eq!(back.log10_dim, g.log10_dim);
        assert_eq!(back.stats, g.stats);
    }

    #[test]
    fn bad_rows_report_line_numbers() {
        let text = format!("{MAP_HEADER}\n0,1,2,3\n0,1,x,3\n");
        match parse_map_csv(&text) {
            Err(AnalysisError::Parse { line: 3, .. }) => {}
            other => panic!("{other:?}"),
        }
    }
}
