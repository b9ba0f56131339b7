//! CSV persistence for [`TrialRow`]s. The header is always written, so an
//! empty run gives a header-only file.

use std::fs::File;
use std::io::{Read, Write};
use std::path::Path;

use super::TrialRow;
use crate::{Error, Result};

/// Column order of the CSV files, matching the fields of [`TrialRow`].
pub const CSV_FIELDS: [&str; 32] = [
    "trial",
    "seed",
    "regime",
    "n",
    "density",
    "success",
    "failure",
    "classes",
    "pairing_size",
    "k",
    "removed",
    "core_size",
    "connected",
    "expansion_ok",
    "exposed",
    "boosters",
    "verified",
    "certificate",
    "components",
    "largest_component",
    "max_diameter",
    "diameter_bound",
    "small_components",
    "checks_passed",
    "longest_path",
    "path_bound",
    "graph6",
    "chi",
    "chi_lin",
    "chi_cen",
    "error",
    "wall_time_ms",
];

fn header() -> &'static [&'static str] {
    &CSV_FIELDS
}

pub fn write_csv_to<W: Write>(rows: &[TrialRow], out: W) -> Result<()> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
    w.write_record(header())?;
    for row in rows {
        w.serialize(row)?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}

pub fn write_csv(rows: &[TrialRow], path: &Path) -> Result<()> {
    let file = File::create(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    write_csv_to(rows, file).map_err(|e| match e {
        Error::Csv(source) => Error::CsvFile {
            path: path.to_path_buf(),
            source,
        },
        other => other,
    })
}

pub fn read_csv_from<R: Read>(input: R) -> Result<Vec<TrialRow>> {
    let mut r = csv::Reader::from_reader(input);
    let found: Vec<String> = r.headers()?.iter().map(str::to_string).collect();
    if found != header() {
        return Err(Error::param(format!("unexpected CSV header {found:?}")));
    }
    r.deserialize().map(|row| row.map_err(Error::from)).collect()
}

pub fn read_csv(path: &Path) -> Result<Vec<TrialRow>> {
    let file = File::open(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    read_csv_from(file).map_err(|e| match e {
        Error::Csv(source) => Error::CsvFile {
            path: path.to_path_buf(),
            source,
        },
        other => other,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fixture() -> Vec<TrialRow> {
        vec![
            TrialRow {
                trial: 0,
                seed: 17,
                regime: "dense".into(),
                n: 10,
                density: 5.0,
                success: Some(true),
                certificate: Some("path=0 1;pairs=0-1;k=1;exposed=0/0;boosters=0;seed=3".into()),
                ..TrialRow::default()
            },
            TrialRow {
                trial: 1,
                seed: u64::MAX,
                regime: "sparse".into(),
                n: 10,
                density: 0.1 + 0.2,
                max_diameter: Some(4),
                checks_passed: Some(false),
                ..TrialRow::default()
            },
            TrialRow {
                trial: 2,
                regime: "conjecture".into(),
                graph6: Some("B\"w,".into()),
                error: Some("bad, \"quoted\"\nline".into()),
                ..TrialRow::default()
            },
        ]
    }

    #[test]
    fn round_trip() {
        let mut buf = Vec::new();
        write_csv_to(&fixture(), &mut buf).unwrap();
        assert_eq!(read_csv_from(buf.as_slice()).unwrap(), fixture());
    }

    #[test]
    fn empty_is_header_only() {
        let mut buf = Vec::new();
        write_csv_to(&[], &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text, format!("{}\n", header().join(",")));
    }

    #[test]
    fn header_matches_serialized_field_names() {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.serialize(TrialRow::default()).unwrap();
        let text = String::from_utf8(w.into_inner().unwrap()).unwrap();
        assert_eq!(text.lines().next().unwrap(), header().join(","));
    }

    #[test]
    fn file_errors_carry_the_path() {
        let err = read_csv(Path::new("/nonexistent/rows.csv")).unwrap_err();
        assert!(err.to_string().contains("/nonexistent/rows.csv"));
    }
}
