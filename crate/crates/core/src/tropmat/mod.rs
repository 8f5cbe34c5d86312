//! Dense matrices over the supertropical semiring.

mod det;
mod forms;
mod io;

use std::fmt;
use std::ops::Index;

use crate::error::{Error, Result};
use crate::semiring::Element;

pub use det::{SingularityClass, DEFAULT_SIZE_CAP};
pub use forms::{Elementary, PseudoIdentityClass, Side};

/// A dense, row-major `rows × cols` matrix of [`Element`]s.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Element>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Element>) -> Result<Matrix> {
        if rows == 0 || cols == 0 {
            return Err(Error::DimensionMismatch(format!(
                "matrices must be non-empty, got {rows}x{cols}"
            )));
        }
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(Matrix { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<Element>>) -> Result<Matrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Matrix::new(r, c, rows.into_iter().flatten().collect())
    }

    /// Parses each cell with the scalar grammar, e.g.
    /// `Matrix::parse_rows(&[&["0", "-inf"], &["1g", "2"]])`.
    pub fn parse_rows(rows: &[&[&str]]) -> Result<Matrix> {
        let parsed = rows
            .iter()
            .map(|row| row.iter().map(|s| s.parse()).collect::<Result<Vec<Element>>>())
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_rows(parsed)
    }

    pub fn filled(rows: usize, cols: usize, value: Element) -> Matrix {
        Matrix::new(rows, cols, vec![value; rows * cols]).expect("non-empty shape")
    }

    pub fn identity(n: usize) -> Matrix {
        Matrix::diagonal(&vec![Element::ONE; n])
    }

    pub fn diagonal(diag: &[Element]) -> Matrix {
        let n = diag.len();
        let mut m = Matrix::filled(n, n, Element::ZERO);
        for (i, &d) in diag.iter().enumerate() {
            m.set(i, i, d);
        }
        m
    }

    /// `P_π` with `1_R` at `(i, π(i))`.
    pub fn permutation(perm: &[usize]) -> Result<Matrix> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::BadIndices(format!("{perm:?} is not a permutation")));
            }
        }
        let mut m = Matrix::filled(n, n, Element::ZERO);
        for (i, &p) in perm.iter().enumerate() {
            m.set(i, p, Element::ONE);
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Element] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> Element {
        self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Element) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Element] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Element>> {
        self.entries.chunks(self.cols).map(<[Element]>::to_vec).collect()
    }

    pub(crate) fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::DimensionMismatch(format!(
                "expected a square matrix, got {}x{}",
                self.rows, self.cols
            )))
        }
    }

    fn require_same_shape(&self, other: &Matrix) -> Result<()> {
        if self.rows == other.rows && self.cols == other.cols {
            Ok(())
        } else {
            Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )))
        }
    }

    fn map(&self, f: impl Fn(Element) -> Element) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|&e| f(e)).collect(),
        }
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.require_same_shape(other)?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&other.entries).map(|(&a, &b)| a + b).collect(),
        })
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                entries.push((0..self.cols).map(|k| self.get(i, k) * other.get(k, j)).sum());
            }
        }
        Matrix::new(self.rows, other.cols, entries)
    }

    pub fn scalar_mul(&self, c: Element) -> Matrix {
        self.map(|e| c * e)
    }

    /// Entrywise ghostification `A^ν`.
    pub fn nu(&self) -> Matrix {
        self.map(Element::nu)
    }

    /// Entrywise tangible lift `Â`.
    pub fn hat(&self) -> Matrix {
        self.map(Element::hat)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::filled(self.cols, self.rows, Element::ZERO);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    /// `A^k`, with `A^0 = I`.
    pub fn pow(&self, k: u32) -> Result<Matrix> {
        let n = self.require_square()?;
        let mut acc = Matrix::identity(n);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// The `(r, c)`-minor: `self` without row `r` and column `c`.
    pub fn minor(&self, r: usize, c: usize) -> Matrix {
        let entries = (0..self.rows)
            .filter(|&i| i != r)
            .flat_map(|i| (0..self.cols).filter(move |&j| j != c).map(move |j| (i, j)))
            .map(|(i, j)| self.get(i, j))
            .collect();
        Matrix { rows: self.rows - 1, cols: self.cols - 1, entries }
    }

    /// The principal sub-matrix on the given (sorted, distinct) indices.
    pub fn principal(&self, idx: &[usize]) -> Matrix {
        let entries = idx
            .iter()
            .flat_map(|&i| idx.iter().map(move |&j| (i, j)))
            .map(|(i, j)| self.get(i, j))
            .collect();
        Matrix { rows: idx.len(), cols: idx.len(), entries }
    }

    /// Entrywise `⊨`.
    pub fn ghost_surpasses(&self, other: &Matrix) -> Result<bool> {
        self.require_same_shape(other)?;
        Ok(self.entries.iter().zip(&other.entries).all(|(a, b)| a.ghost_surpasses(b)))
    }

    /// Entrywise ν-equivalence.
    pub fn nu_equiv(&self, other: &Matrix) -> Result<bool> {
        self.require_same_shape(other)?;
        Ok(self.entries.iter().zip(&other.entries).all(|(a, b)| a.nu_equiv(b)))
    }

    /// True when every entry is a ghost or `-inf`.
    pub fn is_ghost(&self) -> bool {
        self.entries.iter().all(Element::is_ghost_or_neg_inf)
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Element;

    fn index(&self, (i, j): (usize, usize)) -> &Element {
        &self.entries[i * self.cols + j]
    }
}

/// Bracketed rows, e.g. `[[1, 0], [-inf, 2g]]`.
impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for (j, e) in self.row(i).iter().enumerate() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{e}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}
