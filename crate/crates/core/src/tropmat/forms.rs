//! Elementary and invertible matrices, pseudo-identities, definite forms and
//! the Kleene star.

use super::{Matrix, SingularityClass};
use crate::error::{Error, Result};
use crate::semiring::Element;

/// Which side the conductor multiplies from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `A = P·Ā`
    Left,
    /// `A = Ā·P`
    Right,
}

/// The three kinds of elementary matrix. Indices are 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Elementary {
    /// The identity with rows `i` and `j` swapped.
    Transposition(usize, usize),
    /// The identity with tangible `α` at `(i, i)`.
    DiagMultiplier(usize, Element),
    /// The identity with `r` at `(i, j)`, `i ≠ j`.
    Gaussian(usize, usize, Element),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PseudoIdentityClass {
    /// Non-singular, idempotent, `I + Z_G`.
    PseudoIdentity,
    /// Singular, idempotent, `I^ν + Z_G`.
    GhostPseudoIdentity,
    Neither,
}

impl Matrix {
    pub fn elementary(kind: Elementary, n: usize) -> Result<Matrix> {
        let check = |idx: &[usize]| {
            if idx.iter().any(|&i| i >= n) {
                Err(Error::BadIndices(format!("{kind:?} out of range for n = {n}")))
            } else {
                Ok(())
            }
        };
        let mut m = Matrix::identity(n);
        match kind {
            Elementary::Transposition(i, j) | Elementary::Gaussian(i, j, _) if i == j => {
                return Err(Error::BadIndices(format!("{kind:?} needs two distinct indices")));
            }
            Elementary::Transposition(i, j) => {
                check(&[i, j])?;
                m.set(i, i, Element::ZERO);
                m.set(j, j, Element::ZERO);
                m.set(i, j, Element::ONE);
                m.set(j, i, Element::ONE);
            }
            Elementary::DiagMultiplier(i, alpha) => {
                check(&[i])?;
                if !alpha.is_tangible() {
                    return Err(Error::NotInvertible(format!("diagonal multiplier {alpha}")));
                }
                m.set(i, i, alpha);
            }
            Elementary::Gaussian(i, j, r) => {
                check(&[i, j])?;
                m.set(i, j, r);
            }
        }
        Ok(m)
    }

    /// True for generalized permutation matrices: exactly one entry other
    /// than `-inf` in every row and column, and that entry tangible.
    pub fn is_invertible(&self) -> bool {
        self.generalized_permutation().is_some()
    }

    /// `π[i]` = column of the single finite entry in row `i`.
    fn generalized_permutation(&self) -> Option<Vec<usize>> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut perm = Vec::with_capacity(n);
        let mut col_used = vec![false; n];
        for i in 0..n {
            let mut finite = (0..n).filter(|&j| !self.get(i, j).is_neg_inf());
            let j = finite.next()?;
            if finite.next().is_some() || !self.get(i, j).is_tangible() || col_used[j] {
                return None;
            }
            col_used[j] = true;
            perm.push(j);
        }
        Some(perm)
    }

    /// The two-sided inverse of a generalized permutation matrix.
    pub fn inverse(&self) -> Result<Matrix> {
        let perm =
            self.generalized_permutation().ok_or_else(|| Error::NotInvertible(self.to_string()))?;
        let mut inv = Matrix::filled(self.rows, self.cols, Element::ZERO);
        for (i, &j) in perm.iter().enumerate() {
            inv.set(j, i, self.get(i, j).invert()?);
        }
        Ok(inv)
    }

    pub fn pseudo_identity_class(&self) -> PseudoIdentityClass {
        let n = match self.require_square() {
            Ok(n) => n,
            Err(_) => return PseudoIdentityClass::Neither,
        };
        let diag: Vec<Element> = (0..n).map(|i| self.get(i, i)).collect();
        let off_ghost = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|(i, j)| i != j)
            .all(|(i, j)| self.get(i, j).is_ghost_or_neg_inf());
        if !off_ghost || self.mul(self).ok().as_ref() != Some(self) {
            return PseudoIdentityClass::Neither;
        }
        match self.classify() {
            Ok(SingularityClass::NonSingular) if diag.iter().all(|&d| d == Element::ONE) => {
                PseudoIdentityClass::PseudoIdentity
            }
            Ok(SingularityClass::Singular) if diag.iter().all(|&d| d == Element::ONE.nu()) => {
                PseudoIdentityClass::GhostPseudoIdentity
            }
            _ => PseudoIdentityClass::Neither,
        }
    }

    /// Diagonal all `1_R` and determinant `1_R`.
    pub fn is_definite(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| self.get(i, i) == Element::ONE)
            && self.determinant() == Ok(Element::ONE)
    }

    /// Splits a non-singular `A` into its conductor `P` (the dominant track,
    /// as a generalized permutation matrix) and its definite form `Ā`, with
    /// `A = P·Ā` on the left or `A = Ā·P` on the right.
    pub fn definite_form(&self, side: Side) -> Result<(Matrix, Matrix)> {
        let det = self.determinant()?;
        if !det.is_tangible() {
            return Err(Error::NotNonSingular(det.to_string()));
        }
        let perm = self.dominant_track()?.expect("non-singular matrices have a track");
        let mut conductor = Matrix::filled(self.rows, self.cols, Element::ZERO);
        for (i, &j) in perm.iter().enumerate() {
            conductor.set(i, j, self.get(i, j));
        }
        let inv = conductor.inverse()?;
        let definite = match side {
            Side::Left => inv.mul(self)?,
            Side::Right => self.mul(&inv)?,
        };
        let rebuilt = match side {
            Side::Left => conductor.mul(&definite)?,
            Side::Right => definite.mul(&conductor)?,
        };
        assert_eq!(&rebuilt, self, "conductor does not reassemble the matrix");
        assert!(definite.is_definite(), "definite form is not definite: {definite}");
        Ok((conductor, definite))
    }

    /// `A* = I + A + … + A^{n-1}` for definite `A`. The sum is taken
    /// supertropically, so the diagonal comes out as `0g` once `n ≥ 2`.
    pub fn kleene_star(&self) -> Result<Matrix> {
        if !self.is_definite() {
            return Err(Error::NotDefinite);
        }
        let n = self.rows;
        let mut sum = Matrix::identity(n);
        let mut power = Matrix::identity(n);
        for _ in 1..n {
            power = power.mul(self)?;
            sum = sum.add(&power)?;
        }
        Ok(sum)
    }

    /// The Kleene star by adding powers until the sum is ν-stable. Agrees with
    /// [`Matrix::kleene_star`] up to ν-equivalence.
    pub fn kleene_star_fixpoint(&self) -> Result<Matrix> {
        if !self.is_definite() {
            return Err(Error::NotDefinite);
        }
        let n = self.rows;
        let mut sum = Matrix::identity(n);
        let mut power = Matrix::identity(n);
        loop {
            power = power.mul(self)?;
            let next = sum.add(&power)?;
            if next.nu_equiv(&sum)? {
                return Ok(sum);
            }
            sum = next;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::tests::m;
    use super::*;

    fn e(s: &str) -> Element {
        s.parse().unwrap()
    }

    #[test]
    fn elementary_matrices() {
        assert_eq!(
            Matrix::elementary(Elementary::Transposition(0, 1), 2).unwrap(),
            m(&[&["-inf", "0"], &["0", "-inf"]])
        );
        assert_eq!(
            Matrix::elementary(Elementary::DiagMultiplier(0, e("4")), 3).unwrap(),
            Matrix::diagonal(&[e("4"), e("0"), e("0")])
        );
        assert_eq!(
            Matrix::elementary(Elementary::Gaussian(1, 0, e("7")), 2).unwrap(),
            m(&[&["0", "-inf"], &["7", "0"]])
        );
        assert!(matches!(
            Matrix::elementary(Elementary::Transposition(1, 1), 2),
            Err(Error::BadIndices(_))
        ));
        assert!(matches!(
            Matrix::elementary(Elementary::Gaussian(0, 3, e("1")), 3),
            Err(Error::BadIndices(_))
        ));
        assert!(Matrix::elementary(Elementary::DiagMultiplier(0, e("1g")), 2).is_err());
    }

    #[test]
    fn invertibility() {
        assert!(Matrix::identity(3).is_invertible());
        assert!(Matrix::permutation(&[2, 0, 1]).unwrap().is_invertible());
        let g = Matrix::elementary(Elementary::Gaussian(1, 0, e("7")), 2).unwrap();
        assert!(!g.is_invertible());
        assert!(!m(&[&["1g", "-inf"], &["-inf", "0"]]).is_invertible());
        let p = m(&[&["-inf", "3"], &["-1/2", "-inf"]]);
        assert_eq!(p.mul(&p.inverse().unwrap()).unwrap(), Matrix::identity(2));
        assert_eq!(p.inverse().unwrap().mul(&p).unwrap(), Matrix::identity(2));
        assert!(matches!(g.inverse(), Err(Error::NotInvertible(_))));
    }

    #[test]
    fn pseudo_identities() {
        use PseudoIdentityClass::*;
        let a = m(&[&["1", "0", "-inf"], &["3", "4", "-inf"], &["-inf", "-inf", "1"]]);
        let ia = a.mul(&a.nabla().unwrap()).unwrap();
        assert_eq!(ia, m(&[&["0", "-4g", "-inf"], &["2g", "0", "-inf"], &["-inf", "-inf", "0"]]));
        assert_eq!(ia.pseudo_identity_class(), PseudoIdentity);
        assert_eq!(Matrix::identity(3).pseudo_identity_class(), PseudoIdentity);
        assert_eq!(Matrix::identity(2).nu().pseudo_identity_class(), GhostPseudoIdentity);
        assert_eq!(m(&[&["0", "5"], &["-inf", "0"]]).pseudo_identity_class(), Neither);
        // Idempotence fails: 1g·1g = 2g on the diagonal path.
        assert_eq!(m(&[&["0", "1g"], &["1g", "0"]]).pseudo_identity_class(), Neither);
        assert_eq!(m(&[&["0", "0"]]).pseudo_identity_class(), Neither);
    }

    #[test]
    fn definiteness() {
        assert!(Matrix::identity(3).is_definite());
        assert!(m(&[&["0", "-1"], &["-2", "0"]]).is_definite());
        assert!(!m(&[&["0", "0", "-inf"], &["-inf", "0", "0"], &["1", "-inf", "0"]]).is_definite());
        assert!(!m(&[&["0", "0"], &["0", "0"]]).is_definite());
        assert!(!m(&[&["0", "0"]]).is_definite());
    }

    #[test]
    fn definite_forms() {
        let a = m(&[&["1", "0"], &["3", "4"]]);
        let (p, d) = a.definite_form(Side::Left).unwrap();
        assert_eq!(p, Matrix::diagonal(&[e("1"), e("4")]));
        assert_eq!(d, m(&[&["0", "-1"], &["-1", "0"]]));
        let (p, d) = a.definite_form(Side::Right).unwrap();
        assert_eq!(p, Matrix::diagonal(&[e("1"), e("4")]));
        assert_eq!(d, m(&[&["0", "-4"], &["2", "0"]]));

        let i = Matrix::identity(3);
        assert_eq!(i.definite_form(Side::Left).unwrap(), (i.clone(), i.clone()));
        let diag = Matrix::diagonal(&[e("2"), e("-3"), e("1/2")]);
        assert_eq!(diag.definite_form(Side::Left).unwrap(), (diag.clone(), i.clone()));

        let anti = m(&[&["-inf", "2"], &["5", "1"]]);
        let (p, d) = anti.definite_form(Side::Left).unwrap();
        assert_eq!(p, m(&[&["-inf", "2"], &["5", "-inf"]]));
        assert_eq!(p.determinant().unwrap(), anti.determinant().unwrap());
        assert!(d.is_definite());

        assert!(matches!(
            m(&[&["0", "0"], &["0", "0"]]).definite_form(Side::Left),
            Err(Error::NotNonSingular(_))
        ));
    }

    #[test]
    fn kleene_stars() {
        let a = m(&[&["0", "-1"], &["-2", "0"]]);
        let star = a.kleene_star().unwrap();
        assert_eq!(star, m(&[&["0g", "-1"], &["-2", "0g"]]));
        assert!(star.nu_equiv(&a).unwrap());
        assert_eq!(Matrix::identity(1).kleene_star().unwrap(), Matrix::identity(1));
        assert!(Matrix::identity(3).kleene_star().unwrap().nu_equiv(&Matrix::identity(3)).unwrap());

        let b = m(&[&["0", "-5", "-5"], &["-5", "0", "-5"], &["-5", "-5", "0"]]);
        let star = b.kleene_star().unwrap();
        let powers = Matrix::identity(3).add(&b).unwrap().add(&b.pow(2).unwrap()).unwrap();
        assert_eq!(star, powers);
        assert_eq!(star.get(0, 1), e("-5g"));
        assert_eq!(star.get(1, 1), e("0g"));
        assert!(star.nu_equiv(&b.kleene_star_fixpoint().unwrap()).unwrap());
        assert!(star.nu_equiv(&b.nabla().unwrap()).unwrap());

        assert_eq!(m(&[&["1", "0"], &["0", "0"]]).kleene_star(), Err(Error::NotDefinite));
    }

    #[test]
    fn cycles_of_definite_matrices_are_not_positive() {
        let a = m(&[&["0", "-1", "2"], &["-4", "0", "-inf"], &["-3", "1", "0"]]);
        assert!(a.is_definite());
        // Every closed walk of length ≤ 3 has ν-weight ≤ 0.
        for k in 1..=3 {
            let p = a.pow(k).unwrap();
            for i in 0..3 {
                assert!(p.get(i, i).cmp_nu(&Element::ONE).is_le());
            }
        }
    }
}
