//! Grid renderings: `#`/`.` ascii art and plain PBM (`P1`).

use hvconvex::BinaryGrid;

use crate::instance::{tokenized, Line, ParseError, ParseErrorKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Ascii,
    Pbm,
}

pub fn render(g: &BinaryGrid, format: Format) -> String {
    match format {
        Format::Ascii => g.to_string(),
        Format::Pbm => {
            let mut out = format!("P1\n{} {}\n", g.width(), g.height());
            for i in 0..g.height() {
                let bits: Vec<&str> = g
                    .row(i)
                    .iter()
                    .map(|&b| if b { "1" } else { "0" })
                    .collect();
                out.push_str(&bits.join(" "));
                out.push('\n');
            }
            out
        }
    }
}

fn bad(line: usize, column: usize, msg: impl Into<String>) -> ParseError {
    ParseError::new(line, column, ParseErrorKind::BadGrid(msg.into()))
}

/// Read a grid in either format; PBM is recognized by its `P1` magic.
/// Ascii grids have no comments since `#` marks a filled cell.
pub fn parse_grid(text: &str) -> Result<BinaryGrid, ParseError> {
    let rows: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(idx, line)| (idx + 1, line.trim()))
        .filter(|(_, line)| !line.is_empty())
        .collect();
    let Some(&(_, first)) = rows.first() else {
        return Err(bad(1, 1, "empty grid"));
    };
    if first.starts_with("P1") {
        return parse_pbm(&tokenized(text));
    }
    for &(line, row) in &rows {
        if let Some(pos) = row.chars().position(|c| c != '#' && c != '.') {
            return Err(bad(line, pos + 1, "expected `#` or `.`"));
        }
    }
    let width = first.chars().count();
    if let Some(&(line, _)) = rows.iter().find(|(_, r)| r.chars().count() != width) {
        return Err(bad(line, 1, format!("row length differs from {width}")));
    }
    let rows: Vec<&str> = rows.iter().map(|&(_, r)| r).collect();
    Ok(BinaryGrid::from_ascii_rows(&rows).expect("rows checked above"))
}

fn parse_pbm(lines: &[Line<'_>]) -> Result<BinaryGrid, ParseError> {
    let mut tokens = lines.iter().flat_map(|(_, t)| t.iter()).skip(1);
    let mut dim = |what: &str| -> Result<usize, ParseError> {
        let t = tokens
            .next()
            .ok_or_else(|| bad(lines.last().unwrap().0 + 1, 1, format!("missing {what}")))?;
        t.text
            .parse()
            .map_err(|_| bad(t.line, t.column, format!("bad {what} `{}`", t.text)))
    };
    let width = dim("width")?;
    let height = dim("height")?;
    let mut cells = Vec::with_capacity(width * height);
    for t in tokens {
        for (pos, ch) in t.text.chars().enumerate() {
            match ch {
                '0' => cells.push(false),
                '1' => cells.push(true),
                _ => return Err(bad(t.line, t.column + pos, "expected 0 or 1")),
            }
        }
    }
    if cells.len() != width * height {
        let line = lines.last().map_or(1, |(l, _)| *l);
        return Err(bad(
            line,
            1,
            format!("expected {} bits, found {}", width * height, cells.len()),
        ));
    }
    Ok(BinaryGrid::from_cells(height, width, cells))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ascii() {
        assert_eq!(render(&BinaryGrid::full(1, 1), Format::Ascii), "#\n");
        assert_eq!(render(&BinaryGrid::full(2, 2), Format::Ascii), "##\n##\n");
    }

    #[test]
    fn pbm() {
        let g = BinaryGrid::from_ascii_rows(&["#..", ".##"]).unwrap();
        assert_eq!(render(&g, Format::Pbm), "P1\n3 2\n1 0 0\n0 1 1\n");
    }

    #[test]
    fn round_trips() {
        let g =
            BinaryGrid::from_ascii_rows(&[".#...", ".####", "#####", "###..", "..#.."]).unwrap();
        for format in [Format::Ascii, Format::Pbm] {
            assert_eq!(parse_grid(&render(&g, format)).unwrap(), g);
        }
        assert_eq!(
            parse_grid("P1\n# c\n2 1\n10\n").unwrap().to_string(),
            "#.\n"
        );
    }

    #[test]
    fn bad_grids() {
        assert_eq!(parse_grid("#.\n#x\n").unwrap_err().column, 2);
        assert_eq!(parse_grid("#.\n###\n").unwrap_err().line, 2);
        assert!(parse_grid("P1\n2 2\n1 0 1\n").is_err());
        assert!(parse_grid("\n").is_err());
    }
}
