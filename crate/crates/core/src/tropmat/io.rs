//! The JSON matrix file format:
//! `{"rows": n, "cols": m, "entries": [["0", "-inf"], ...]}`.

use serde::{Deserialize, Serialize};

use super::Matrix;
use crate::error::{Error, Result};
use crate::semiring::Element;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixFile {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<Element>>,
}

impl TryFrom<MatrixFile> for Matrix {
    type Error = Error;

    fn try_from(file: MatrixFile) -> Result<Matrix> {
        if file.entries.len() != file.rows || file.entries.iter().any(|r| r.len() != file.cols) {
            return Err(Error::DimensionMismatch(format!(
                "declared {}x{} does not match the entries array",
                file.rows, file.cols
            )));
        }
        Matrix::new(file.rows, file.cols, file.entries.into_iter().flatten().collect())
    }
}

impl From<&Matrix> for MatrixFile {
    fn from(m: &Matrix) -> MatrixFile {
        MatrixFile { rows: m.rows, cols: m.cols, entries: m.to_rows() }
    }
}

impl Serialize for Matrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixFile::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let file = MatrixFile::deserialize(d)?;
        Matrix::try_from(file).map_err(serde::de::Error::custom)
    }
}

impl Matrix {
    pub fn from_json(text: &str) -> Result<Matrix> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Single-line JSON in the matrix file format.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("matrices always serialize")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_the_file_format() {
        let a = Matrix::from_json(
            r#"{"rows": 2, "cols": 3, "entries": [["1", "0", "-inf"], ["3g", "-1/2", "4"]]}"#,
        )
        .unwrap();
        assert_eq!(a.rows(), 2);
        assert_eq!(a.get(1, 1), "-1/2".parse().unwrap());
        assert_eq!(
            a.to_json(),
            r#"{"rows":2,"cols":3,"entries":[["1","0","-inf"],["3g","-1/2","4"]]}"#
        );
        assert_eq!(Matrix::from_json(&a.to_json()).unwrap(), a);
    }

    #[test]
    fn rejects_malformed_files() {
        for bad in [
            r#"{"rows": 1, "cols": 1, "entries": [["0"]], "extra": 1}"#,
            r#"{"rows": 2, "cols": 1, "entries": [["0"]]}"#,
            r#"{"rows": 1, "cols": 2, "entries": [["0"]]}"#,
            r#"{"rows": 1, "cols": 1, "entries": [["zero"]]}"#,
            r#"{"rows": 1, "cols": 1, "entries": [[0]]}"#,
            r#"{"rows": 0, "cols": 0, "entries": []}"#,
            r#"{"rows": 1, "cols": 1}"#,
        ] {
            assert!(matches!(Matrix::from_json(bad), Err(Error::Parse(_))), "accepted {bad}");
        }
    }
}
