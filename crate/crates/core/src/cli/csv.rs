use std::fs::File;
use std::io::{Read, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::series::ObservationSeries;

/// Reads a numeric CSV file: rows are time points, columns are dimensions.
pub fn load_csv(path: impl AsRef<Path>, has_header: bool) -> Result<ObservationSeries> {
    let path = path.as_ref();
    let file = File::open(path)
        .map_err(|e| Error::Input(format!("cannot open {}: {e}", path.display())))?;
    parse_csv(file, &path.display().to_string(), has_header)
}

/// Like [`load_csv`] over any reader; `name` is used in error messages.
/// Row numbers in errors are 1-based file lines, columns 1-based.
pub fn parse_csv<R: Read>(reader: R, name: &str, has_header: bool) -> Result<ObservationSeries> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(has_header)
        .flexible(true)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(reader);
    let err = |row: u64, column: usize, message: String| Error::Csv {
        path: name.to_string(),
        row,
        column,
        message,
    };

    let mut values = Vec::new();
    let mut width: Option<usize> = None;
    for record in rdr.records() {
        let record = record.map_err(|e| {
            let row = e.position().map(|p| p.line()).unwrap_or(0);
            err(row, 0, e.to_string())
        })?;
        let row = record.position().map(|p| p.line()).unwrap_or(0);
        if record.len() == 1 && record[0].is_empty() {
            continue;
        }
        let expected = *width.get_or_insert(record.len());
        if record.len() != expected {
            return Err(err(
                row,
                record.len().min(expected) + 1,
                format!("expected {expected} columns, found {}", record.len()),
            ));
        }
        for (col, cell) in record.iter().enumerate() {
            let v: f64 = cell
                .parse()
                .map_err(|_| err(row, col + 1, format!("'{cell}' is not a number")))?;
            if !v.is_finite() {
                return Err(err(row, col + 1, format!("'{cell}' is not finite")));
            }
            values.push(v);
        }
    }
    let dim = width.ok_or_else(|| Error::Input(format!("{name}: no data rows")))?;
    ObservationSeries::new(values, dim)
}

/// Writes a series as headerless CSV with shortest round-trip formatting.
pub fn write_csv(series: &ObservationSeries, path: impl AsRef<Path>) -> Result<()> {
    let mut out = std::io::BufWriter::new(File::create(path)?);
    for i in 0..series.len() {
        let line: Vec<String> = series.row(i).iter().map(|v| v.to_string()).collect();
        writeln!(out, "{}", line.join(","))?;
    }
    out.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(text: &str, header: bool) -> Result<ObservationSeries> {
        parse_csv(text.as_bytes(), "mem.csv", header)
    }

    #[test]
    fn reads_rows_and_columns() {
        let s = parse("1.0,2.0\n3.0,4.0", false).unwrap();
        assert_eq!((s.len(), s.dim()), (2, 2));
        assert_eq!(s.row(1), &[3.0, 4.0]);
        let s = parse("x,y\n1,2", true).unwrap();
        assert_eq!((s.len(), s.dim()), (1, 2));
        let s = parse("1\n2\n\n3\n", false).unwrap();
        assert_eq!(s.len(), 3);
    }

    #[test]
    fn ragged_row_names_its_line() {
        match parse("1,2\n3", false) {
            Err(Error::Csv { row, column, .. }) => {
                assert_eq!(row, 2);
                assert_eq!(column, 2);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn non_numeric_and_empty() {
        match parse("1,2\n3,abc\n", false) {
            Err(Error::Csv { row, column, .. }) => assert_eq!((row, column), (2, 2)),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse("1,nan", false),
            Err(Error::Csv { column: 2, .. })
        ));
        assert!(parse("", false).is_err());
        assert!(parse("a,b\n", true).is_err());
    }

    #[test]
    fn write_then_read() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("s.csv");
        let s = ObservationSeries::from_rows(&[[0.1, -2.5e-7], [3.0, 1e300]]).unwrap();
        write_csv(&s, &path).unwrap();
        assert_eq!(load_csv(&path, false).unwrap(), s);
        assert!(load_csv(dir.path().join("missing.csv"), false).is_err());
    }
}
