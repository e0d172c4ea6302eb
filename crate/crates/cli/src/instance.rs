//! Instance files: `m n` on the first line, then the `m` row sums, then the
//! `n` column sums. Tokens are whitespace separated, `#` starts a comment
//! and blank lines are ignored.

use std::fmt;

use hvconvex::{BinaryGrid, Projections};
use thiserror::Error;

/// Position is 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("expected a non-negative integer, found `{0}`")]
    NotAnInteger(String),
    #[error("missing {0}")]
    Missing(&'static str),
    #[error("expected {expected} {what}, found {found}")]
    WrongCount {
        what: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("dimensions must be positive")]
    EmptyDimension,
    #[error("unexpected content after the column sums")]
    Trailing,
    #[error("{what} {index} is {value}, outside [1, {max}]")]
    OutOfRange {
        what: &'static str,
        index: usize,
        value: usize,
        max: usize,
    },
    #[error("{0}")]
    BadGrid(String),
}

impl ParseError {
    pub(crate) fn new(line: usize, column: usize, kind: ParseErrorKind) -> Self {
        ParseError { line, column, kind }
    }
}

/// A parsed instance. Sums are kept as written so that out-of-range values
/// can survive a lenient parse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceFile {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

impl InstanceFile {
    pub fn height(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.cols.len()
    }

    pub fn projections(&self) -> hvconvex::Result<Projections> {
        Projections::new(self.rows.clone(), self.cols.clone())
    }

    /// The instance followed by the grid as comment lines.
    pub fn with_witness(&self, witness: &BinaryGrid) -> String {
        let mut out = self.to_string();
        out.push_str("# witness\n");
        for line in witness.to_string().lines() {
            out.push_str("# ");
            out.push_str(line);
            out.push('\n');
        }
        out
    }
}

impl From<&Projections> for InstanceFile {
    fn from(p: &Projections) -> Self {
        InstanceFile {
            rows: p.rows().to_vec(),
            cols: p.cols().to_vec(),
        }
    }
}

fn join(values: &[usize]) -> String {
    values
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

impl fmt::Display for InstanceFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.height(), self.width())?;
        writeln!(f, "{}", join(&self.rows))?;
        writeln!(f, "{}", join(&self.cols))
    }
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct Token<'a> {
    pub(crate) line: usize,
    pub(crate) column: usize,
    pub(crate) text: &'a str,
}

/// Non-blank lines with comments removed, each split into tokens.
pub(crate) fn tokenized(text: &str) -> Vec<Line<'_>> {
    text.lines()
        .enumerate()
        .filter_map(|(idx, raw)| {
            let content = raw.split('#').next().unwrap_or("");
            let mut tokens = Vec::new();
            let mut start = None;
            for (pos, ch) in content.char_indices().chain([(content.len(), ' ')]) {
                match (ch.is_whitespace(), start) {
                    (false, None) => start = Some(pos),
                    (true, Some(s)) => {
                        tokens.push(Token {
                            line: idx + 1,
                            column: content[..s].chars().count() + 1,
                            text: &content[s..pos],
                        });
                        start = None;
                    }
                    _ => {}
                }
            }
            (!tokens.is_empty()).then_some((idx + 1, tokens))
        })
        .collect()
}

fn number(token: &Token<'_>) -> Result<usize, ParseError> {
    token.text.parse().map_err(|_| {
        ParseError::new(
            token.line,
            token.column,
            ParseErrorKind::NotAnInteger(token.text.to_string()),
        )
    })
}

pub(crate) type Line<'a> = (usize, Vec<Token<'a>>);

fn numbers<'a>(
    line: Option<&Line<'a>>,
    after: usize,
    what: &'static str,
    expected: usize,
) -> Result<(usize, Vec<Token<'a>>, Vec<usize>), ParseError> {
    let Some((line_no, tokens)) = line else {
        return Err(ParseError::new(after + 1, 1, ParseErrorKind::Missing(what)));
    };
    let values = tokens.iter().map(number).collect::<Result<Vec<_>, _>>()?;
    if values.len() != expected {
        let column = tokens.get(expected).map_or(1, |t| t.column);
        return Err(ParseError::new(
            *line_no,
            column,
            ParseErrorKind::WrongCount {
                what,
                expected,
                found: values.len(),
            },
        ));
    }
    Ok((*line_no, tokens.clone(), values))
}

fn parse(text: &str) -> Result<(InstanceFile, Vec<ParseError>), ParseError> {
    let lines = tokenized(text);
    let (header_line, _, header) = numbers(lines.first(), 0, "header line `m n`", 2)?;
    let (m, n) = (header[0], header[1]);
    if m == 0 || n == 0 {
        return Err(ParseError::new(
            header_line,
            1,
            ParseErrorKind::EmptyDimension,
        ));
    }
    let (row_line, row_tokens, rows) = numbers(lines.get(1), header_line, "row sums", m)?;
    let (_, col_tokens, cols) = numbers(lines.get(2), row_line, "column sums", n)?;
    if let Some((line, tokens)) = lines.get(3) {
        return Err(ParseError::new(
            *line,
            tokens[0].column,
            ParseErrorKind::Trailing,
        ));
    }

    let mut problems = Vec::new();
    let mut bound = |what, tokens: &[Token<'_>], values: &[usize], max| {
        for (idx, (token, &value)) in tokens.iter().zip(values).enumerate() {
            if value == 0 || value > max {
                problems.push(ParseError::new(
                    token.line,
                    token.column,
                    ParseErrorKind::OutOfRange {
                        what,
                        index: idx + 1,
                        value,
                        max,
                    },
                ));
            }
        }
    };
    bound("row sum", &row_tokens, &rows, n);
    bound("column sum", &col_tokens, &cols, m);
    Ok((InstanceFile { rows, cols }, problems))
}

/// Parse an instance file; sums outside `[1, n]` (rows) or `[1, m]`
/// (columns) are errors.
pub fn parse_instance(text: &str) -> Result<InstanceFile, ParseError> {
    let (instance, mut problems) = parse(text)?;
    match problems.is_empty() {
        true => Ok(instance),
        false => Err(problems.remove(0)),
    }
}

/// Like [`parse_instance`] but out-of-range sums are returned as warnings.
pub fn parse_instance_lenient(text: &str) -> Result<(InstanceFile, Vec<ParseError>), ParseError> {
    parse(text)
}
