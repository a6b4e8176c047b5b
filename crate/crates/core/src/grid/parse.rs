use super::{CellCollection, Point};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// JSON wire form: `{"cells": [[i,j], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellsJson {
    pub cells: Vec<[i32; 2]>,
}

impl From<&CellCollection> for CellsJson {
    fn from(p: &CellCollection) -> Self {
        CellsJson { cells: p.cells().map(|c| [c.i, c.j]).collect() }
    }
}

impl From<&CellsJson> for CellCollection {
    fn from(j: &CellsJson) -> Self {
        CellCollection::new(j.cells.iter().map(|&[i, jj]| Point::new(i, jj)))
    }
}

pub fn parse_cells_json(s: &str) -> Result<CellCollection> {
    let j: CellsJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    Ok(CellCollection::from(&j))
}

/// Formats lower-left corners as `{{i,j},{i,j},...}` (the Macaulay2 list encoding).
pub fn format_cells(p: &CellCollection) -> String {
    let inner: Vec<String> = p.cells().map(|c| format!("{{{},{}}}", c.i, c.j)).collect();
    format!("{{{}}}", inner.join(","))
}

/// Parses the brace list encoding. Whitespace is ignored.
pub fn parse_cells(s: &str) -> Result<CellCollection> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.trim_start().starts_with('[') {
        // accept a bare JSON array too
        let v: Vec<[i32; 2]> = serde_json::from_str(&compact).map_err(|e| Error::Parse(e.to_string()))?;
        return Ok(CellCollection::new(v.into_iter().map(|[i, j]| Point::new(i, j))));
    }
    if compact.starts_with("{\"") {
        return parse_cells_json(s);
    }
    let body = compact
        .strip_prefix('{')
        .and_then(|r| r.strip_suffix('}'))
        .ok_or_else(|| Error::Parse(format!("expected {{...}} around cell list: {s}")))?;
    if body.is_empty() {
        return Ok(CellCollection::empty());
    }
    let mut cells = Vec::new();
    let mut rest = body;
    loop {
        let r = rest.strip_prefix('{').ok_or_else(|| Error::Parse(format!("expected '{{' at: {rest}")))?;
        let close = r.find('}').ok_or_else(|| Error::Parse("unterminated cell".into()))?;
        let pair = &r[..close];
        let mut it = pair.split(',');
        let parse_int = |t: Option<&str>| -> Result<i32> {
            t.ok_or_else(|| Error::Parse(format!("bad cell {{{pair}}}")))?
                .parse::<i32>()
                .map_err(|e| Error::Parse(format!("bad coordinate in {{{pair}}}: {e}")))
        };
        let i = parse_int(it.next())?;
        let j = parse_int(it.next())?;
        if it.next().is_some() {
            return Err(Error::Parse(format!("cell with more than two coordinates: {{{pair}}}")));
        }
        cells.push(Point::new(i, j));
        rest = &r[close + 1..];
        if rest.is_empty() {
            break;
        }
        rest = rest.strip_prefix(',').ok_or_else(|| Error::Parse(format!("expected ',' at: {rest}")))?;
    }
    Ok(CellCollection::new(cells))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn macaulay2_encoding() {
        let q = parse_cells("{{1, 1}, {1, 2}, {2, 1}, {2, 2}}").unwrap();
        assert_eq!(q, CellCollection::rectangle(2, 2));
        assert_eq!(format_cells(&q), "{{1,1},{1,2},{2,1},{2,2}}");
        assert_eq!(parse_cells(&format_cells(&q)).unwrap(), q);
    }

    #[test]
    fn empty_and_errors() {
        assert!(parse_cells("{}").unwrap().is_empty());
        assert!(parse_cells("{{1,2,3}}").is_err());
        assert!(parse_cells("{{1,x}}").is_err());
        assert!(parse_cells("1,2").is_err());
    }

    #[test]
    fn json_forms() {
        let p = parse_cells_json(r#"{"cells": [[1,1],[2,1],[2,2]]}"#).unwrap();
        assert_eq!(p.rank(), 3);
        let back = serde_json::to_string(&CellsJson::from(&p)).unwrap();
        assert_eq!(parse_cells_json(&back).unwrap(), p);
        assert_eq!(parse_cells("[[1,1],[2,1],[2,2]]").unwrap(), p);
        assert_eq!(parse_cells(r#"{"cells": [[1,1],[2,1],[2,2]]}"#).unwrap(), p);
    }
}
