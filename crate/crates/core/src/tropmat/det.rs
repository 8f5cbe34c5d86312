//! Determinant (permanent), adjoint and the pseudo-inverse `A^∇`.

use super::Matrix;
use crate::error::{Error, Result};
use crate::semiring::Element;

/// Largest order accepted by [`Matrix::determinant`].
pub const DEFAULT_SIZE_CAP: usize = 10;

/// Singularity by the kind of the determinant.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SingularityClass {
    /// Tangible determinant: a unique, all-tangible dominant track.
    NonSingular,
    /// Ghost determinant.
    Singular,
    /// Determinant `-inf`.
    StrictlySingular,
}

/// Supertropical sum of all permutation tracks, by dynamic programming over
/// column subsets: `dp[S]` sums the partial tracks of rows `0..|S|` whose
/// columns are exactly `S`. Distributivity makes this equal to the sum over
/// all `n!` tracks, ties and ghosts included.
fn track_sums(a: &Matrix) -> Vec<Element> {
    let n = a.rows;
    let mut dp = vec![Element::ZERO; 1 << n];
    dp[0] = Element::ONE;
    for mask in 1usize..1 << n {
        let row = mask.count_ones() as usize - 1;
        let mut acc = Element::ZERO;
        let mut rest = mask;
        while rest != 0 {
            let j = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            acc = acc + dp[mask ^ (1 << j)] * a.get(row, j);
        }
        dp[mask] = acc;
    }
    dp
}

impl Matrix {
    fn check_cap(&self, cap: usize) -> Result<usize> {
        let n = self.require_square()?;
        if n > cap {
            return Err(Error::SizeCapExceeded { n, cap });
        }
        Ok(n)
    }

    /// The tropical determinant (max-permanent) with ghost bookkeeping.
    pub fn determinant(&self) -> Result<Element> {
        self.determinant_capped(DEFAULT_SIZE_CAP)
    }

    /// [`Matrix::determinant`] with an explicit size cap.
    pub fn determinant_capped(&self, cap: usize) -> Result<Element> {
        self.check_cap(cap)?;
        Ok(*track_sums(self).last().expect("dp table is non-empty"))
    }

    /// A permutation `π` (as `π[row] = col`) whose track attains the maximal
    /// ν-value, or `None` when every track is `-inf`. For a non-singular
    /// matrix this is the unique dominant track.
    pub fn dominant_track(&self) -> Result<Option<Vec<usize>>> {
        let n = self.check_cap(DEFAULT_SIZE_CAP)?;
        let dp = track_sums(self);
        let full = (1usize << n) - 1;
        if dp[full].is_neg_inf() {
            return Ok(None);
        }
        let mut perm = vec![0; n];
        let mut mask = full;
        for row in (0..n).rev() {
            let j = (0..n)
                .filter(|&j| mask & (1 << j) != 0)
                .find(|&j| (dp[mask ^ (1 << j)] * self.get(row, j)).nu_equiv(&dp[mask]))
                .expect("some column realizes the partial maximum");
            perm[row] = j;
            mask ^= 1 << j;
        }
        Ok(Some(perm))
    }

    pub fn classify(&self) -> Result<SingularityClass> {
        Ok(match self.determinant()? {
            Element::Tangible(_) => SingularityClass::NonSingular,
            Element::Ghost(_) => SingularityClass::Singular,
            Element::NegInfinity => SingularityClass::StrictlySingular,
        })
    }

    /// `adj(A)`, with entry `(i, j)` the determinant of the minor deleting
    /// row `j` and column `i`. A `1×1` matrix has adjoint `[1_R]`.
    pub fn adjugate(&self) -> Result<Matrix> {
        let n = self.check_cap(DEFAULT_SIZE_CAP)?;
        if n == 1 {
            return Ok(Matrix::identity(1));
        }
        let mut adj = Matrix::filled(n, n, Element::ZERO);
        for i in 0..n {
            for j in 0..n {
                adj.set(i, j, self.minor(j, i).determinant()?);
            }
        }
        Ok(adj)
    }

    /// The pseudo-inverse `A^∇`: `det(A)^{-1} adj(A)` for a tangible
    /// determinant, `(\hat{det(A)}^{-1})^ν adj(A)` for a ghost one.
    pub fn nabla(&self) -> Result<Matrix> {
        let det = self.determinant()?;
        let scale = match det {
            Element::NegInfinity => return Err(Error::StrictlySingular),
            Element::Tangible(_) => det.invert()?,
            Element::Ghost(_) => det.hat().invert()?.nu(),
        };
        Ok(self.adjugate()?.scalar_mul(scale))
    }

    /// `A^{∇^(k)}`, the pseudo-inverse applied `k` times.
    pub fn nabla_iter(&self, k: usize) -> Result<Matrix> {
        let mut m = self.clone();
        for _ in 0..k {
            m = m.nabla()?;
        }
        Ok(m)
    }
}

#[cfg(test)]
mod tests {
    use super::super::tests::m;
    use super::*;

    fn e(s: &str) -> Element {
        s.parse().unwrap()
    }

    fn ex61() -> Matrix {
        m(&[&["1", "0", "-inf"], &["3", "4", "-inf"], &["-inf", "-inf", "1"]])
    }

    fn ex36() -> Matrix {
        m(&[&["0", "0", "-inf"], &["-inf", "0", "0"], &["1", "-inf", "0"]])
    }

    /// Independent oracle: sum over all n! tracks by explicit recursion.
    fn permanent(a: &Matrix) -> Element {
        fn go(a: &Matrix, row: usize, used: &mut Vec<bool>) -> Element {
            if row == a.rows() {
                return Element::ONE;
            }
            let mut acc = Element::ZERO;
            for j in 0..a.cols() {
                if !used[j] {
                    used[j] = true;
                    acc = acc + a.get(row, j) * go(a, row + 1, used);
                    used[j] = false;
                }
            }
            acc
        }
        go(a, 0, &mut vec![false; a.cols()])
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(ex61().determinant().unwrap(), e("6"));
        assert_eq!(Matrix::identity(4).determinant().unwrap(), Element::ONE);
        assert_eq!(m(&[&["0", "0"], &["0", "0"]]).determinant().unwrap(), e("0g"));
        assert_eq!(ex36().determinant().unwrap(), e("1"));
        for a in [ex61(), ex36(), m(&[&["1g", "0"], &["0", "2"]])] {
            assert_eq!(a.determinant().unwrap(), permanent(&a));
        }
    }

    #[test]
    fn determinant_errors() {
        assert!(matches!(m(&[&["0", "1"]]).determinant(), Err(Error::DimensionMismatch(_))));
        let big = Matrix::identity(DEFAULT_SIZE_CAP + 1);
        assert_eq!(
            big.determinant(),
            Err(Error::SizeCapExceeded { n: DEFAULT_SIZE_CAP + 1, cap: DEFAULT_SIZE_CAP })
        );
        assert_eq!(big.determinant_capped(12).unwrap(), Element::ONE);
    }

    #[test]
    fn classification() {
        use SingularityClass::*;
        assert_eq!(m(&[&["0", "0"], &["1", "2"]]).classify().unwrap(), NonSingular);
        assert_eq!(m(&[&["0", "0"], &["0", "0"]]).classify().unwrap(), Singular);
        assert_eq!(Matrix::filled(2, 2, Element::ZERO).classify().unwrap(), StrictlySingular);
        // A dominant track through a ghost entry.
        assert_eq!(m(&[&["3g", "0"], &["0", "1"]]).classify().unwrap(), Singular);
    }

    #[test]
    fn dominant_tracks() {
        assert_eq!(ex61().dominant_track().unwrap(), Some(vec![0, 1, 2]));
        let anti = m(&[&["-inf", "2"], &["5", "-inf"]]);
        assert_eq!(anti.dominant_track().unwrap(), Some(vec![1, 0]));
        assert_eq!(Matrix::filled(3, 3, Element::ZERO).dominant_track().unwrap(), None);
    }

    #[test]
    fn adjugate_examples() {
        assert_eq!(
            ex61().adjugate().unwrap(),
            m(&[&["5", "1", "-inf"], &["4", "2", "-inf"], &["-inf", "-inf", "5"]])
        );
        assert_eq!(Matrix::identity(3).adjugate().unwrap(), Matrix::identity(3));
        let abcd = m(&[&["1", "2"], &["3", "7"]]);
        assert_eq!(abcd.adjugate().unwrap(), m(&[&["7", "2"], &["3", "1"]]));
        assert_eq!(m(&[&["4"]]).adjugate().unwrap(), Matrix::identity(1));
    }

    #[test]
    fn nabla_examples() {
        assert_eq!(
            ex61().nabla().unwrap(),
            m(&[&["-1", "-5", "-inf"], &["-2", "-4", "-inf"], &["-inf", "-inf", "-1"]])
        );
        assert_eq!(Matrix::identity(3).nabla().unwrap(), Matrix::identity(3));
        assert_eq!(
            ex36().nabla().unwrap(),
            m(&[&["-1", "-1", "-1"], &["0", "-1", "-1"], &["0", "0", "-1"]])
        );
        assert_eq!(m(&[&["4"]]).nabla().unwrap(), m(&[&["-4"]]));
        // Ghost determinant: everything is scaled by a ghost.
        assert_eq!(
            m(&[&["0", "0"], &["0", "0"]]).nabla().unwrap(),
            m(&[&["0g", "0g"], &["0g", "0g"]])
        );
        assert_eq!(Matrix::filled(2, 2, Element::ZERO).nabla(), Err(Error::StrictlySingular));
    }

    #[test]
    fn nabla_iterates() {
        let second = m(&[&["0", "0", "-1g"], &["0g", "0", "0"], &["1", "0g", "0"]]);
        assert_eq!(ex36().nabla_iter(2).unwrap(), second);
        // The third iterate only agrees with the first up to ν: the diagonal
        // minors of the second iterate tie with a ghost track.
        let third = ex36().nabla_iter(3).unwrap();
        assert_eq!(third, m(&[&["-1g", "-1", "-1"], &["0", "-1g", "-1"], &["0", "0", "-1g"]]));
        assert!(third.nu_equiv(&ex36().nabla().unwrap()).unwrap());
        assert!(ex36().nabla_iter(4).unwrap().nu_equiv(&second).unwrap());
        let a = m(&[&["1", "-2"], &["3/2", "5"]]);
        assert_eq!(a.nabla_iter(2).unwrap(), a);
        assert_eq!(a.nabla_iter(0).unwrap(), a);
    }
}
