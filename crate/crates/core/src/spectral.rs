//! Characteristic polynomials, eigenvalues and conjugation `A^∇BA`.

use crate::error::{Error, Result};
use crate::maxpoly::{Polynomial, RootSet};
use crate::semiring::Element;
use crate::tropmat::{Matrix, DEFAULT_SIZE_CAP};

/// `f_A(x) = det(xI + A)`. The coefficient of `x^k` is the sum of the
/// determinants of all principal sub-matrices of order `n - k`.
pub fn char_poly(a: &Matrix) -> Result<Polynomial> {
    let n = a.require_square()?;
    if n > DEFAULT_SIZE_CAP {
        return Err(Error::SizeCapExceeded { n, cap: DEFAULT_SIZE_CAP });
    }
    let mut coeffs = vec![Element::ZERO; n + 1];
    coeffs[n] = Element::ONE;
    for mask in 1usize..1 << n {
        let idx: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
        let k = n - idx.len();
        coeffs[k] = coeffs[k] + a.principal(&idx).determinant()?;
    }
    Ok(Polynomial::new(coeffs))
}

pub fn trace(a: &Matrix) -> Result<Element> {
    let n = a.require_square()?;
    Ok((0..n).map(|i| a.get(i, i)).sum())
}

/// The roots of [`char_poly`]: tangible corner eigenvalues (and `-inf`
/// when `x` divides the essential polynomial) plus non-corner intervals.
pub fn eigenvalues(a: &Matrix) -> Result<RootSet> {
    char_poly(a)?.roots()
}

/// Whether `Av ⊨ αv` entrywise, for a tangible vector `v` and `α` tangible
/// or `-inf`.
pub fn check_eigenpair(a: &Matrix, v: &[Element], alpha: Element) -> Result<bool> {
    let n = a.require_square()?;
    if v.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "vector of length {} for a {n}x{n} matrix",
            v.len()
        )));
    }
    if let Some(i) = v.iter().position(Element::is_ghost) {
        return Err(Error::GhostInEigenvector(i));
    }
    if alpha.is_ghost() {
        return Err(Error::GhostEigenvalue(alpha.to_string()));
    }
    let col = Matrix::new(n, 1, v.to_vec())?;
    let av = a.mul(&col)?;
    av.ghost_surpasses(&col.scalar_mul(alpha))
}

/// `f(A) = Σ a_i A^i` with `A^0 = I`.
pub fn eval_at_matrix(f: &Polynomial, a: &Matrix) -> Result<Matrix> {
    let n = a.require_square()?;
    let mut acc = Matrix::filled(n, n, Element::ZERO);
    let mut power = Matrix::identity(n);
    for (i, &c) in f.coeffs().iter().enumerate() {
        if i > 0 {
            power = power.mul(a)?;
        }
        acc = acc.add(&power.scalar_mul(c))?;
    }
    Ok(acc)
}

/// `A^∇ B A`.
pub fn conjugate(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    a.nabla()?.mul(b)?.mul(a)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[&str]]) -> Matrix {
        Matrix::parse_rows(rows).unwrap()
    }

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    fn e(s: &str) -> Element {
        s.parse().unwrap()
    }

    fn ex61() -> Matrix {
        m(&[&["1", "0", "-inf"], &["3", "4", "-inf"], &["-inf", "-inf", "1"]])
    }

    #[test]
    fn characteristic_polynomials() {
        assert_eq!(char_poly(&m(&[&["0", "0"], &["1", "2"]])).unwrap(), p("2, 2, 0"));
        assert_eq!(char_poly(&m(&[&["1", "2"], &["3", "4"]])).unwrap(), p("5g, 4, 0"));
        assert_eq!(char_poly(&ex61()).unwrap(), p("6, 5g, 4, 0"));
        assert_eq!(char_poly(&ex61().nabla().unwrap()).unwrap(), p("-6, -2, -1g, 0"));
        assert_eq!(char_poly(&Matrix::identity(2)).unwrap(), p("0, 0g, 0"));
    }

    #[test]
    fn traces() {
        assert_eq!(trace(&m(&[&["1", "2"], &["3", "4"]])).unwrap(), e("4"));
        assert_eq!(trace(&Matrix::identity(2)).unwrap(), e("0g"));
        assert_eq!(trace(&m(&[&["3", "-inf"], &["1", "3"]])).unwrap(), e("3g"));
    }

    #[test]
    fn eigenvalue_sets() {
        let roots = eigenvalues(&m(&[&["0", "0"], &["1", "2"]])).unwrap();
        let values: Vec<Element> = roots.corner.iter().map(|c| c.value).collect();
        assert_eq!(values, vec![e("0"), e("2")]);
        assert!(roots.noncorner.is_empty());

        let roots = eigenvalues(&m(&[&["1", "2"], &["3", "4"]])).unwrap();
        assert_eq!(roots.to_string(), "corner: 4 (x1)\nnoncorner: [-inf, 1]");

        let roots = eigenvalues(&Matrix::diagonal(&[e("-1"), e("3")])).unwrap();
        let values: Vec<Element> = roots.corner.iter().map(|c| c.value).collect();
        assert_eq!(values, vec![e("-1"), e("3")]);

        let roots = eigenvalues(&m(&[&["-inf", "-inf"], &["5", "2"]])).unwrap();
        assert_eq!(roots.to_string(), "corner: -inf (x1), 2 (x1)\nnoncorner:");
    }

    #[test]
    fn eigenpairs() {
        let v = [e("3"), e("-1")];
        assert!(check_eigenpair(&Matrix::identity(2), &v, Element::ONE).unwrap());
        let d = Matrix::diagonal(&[e("2"), e("5")]);
        assert!(check_eigenpair(&d, &[e("0"), Element::ZERO], e("2")).unwrap());
        assert!(!check_eigenpair(&d, &[e("0"), e("0")], e("2")).unwrap());
        let a = m(&[&["0", "0"], &["1", "2"]]);
        assert!(check_eigenpair(&a, &[e("0"), e("2")], e("2")).unwrap());
        assert_eq!(
            check_eigenpair(&a, &[e("0g"), e("2")], e("2")),
            Err(Error::GhostInEigenvector(0))
        );
        assert!(matches!(check_eigenpair(&a, &[e("0")], e("2")), Err(Error::DimensionMismatch(_))));
        assert!(matches!(check_eigenpair(&a, &v, e("2g")), Err(Error::GhostEigenvalue(_))));
    }

    #[test]
    fn evaluation_at_a_matrix() {
        let a = m(&[&["0", "0"], &["1", "2"]]);
        assert_eq!(eval_at_matrix(&p("2, 2, 0"), &a).unwrap(), m(&[&["2g", "2g"], &["3g", "4g"]]));
        assert_eq!(
            eval_at_matrix(&Polynomial::constant(e("3")), &a).unwrap(),
            Matrix::identity(2).scalar_mul(e("3"))
        );
        assert_eq!(eval_at_matrix(&Polynomial::monomial(Element::ONE, 1), &a).unwrap(), a);
    }

    #[test]
    fn conjugation() {
        let a = m(&[&["2", "0"], &["1", "0"]]);
        let b = m(&[&["1", "2"], &["3", "1"]]);
        let b1 = conjugate(&a, &b).unwrap();
        assert_eq!(b1, m(&[&["3", "1"], &["5", "3"]]));
        assert_eq!(char_poly(&b1).unwrap(), p("6g, 3g, 0"));
        assert_eq!(b1, a.nabla().unwrap().mul(&b.mul(&a).unwrap()).unwrap());

        assert_eq!(conjugate(&Matrix::identity(2), &b).unwrap(), b);

        let a = m(&[&["0", "1g"], &["-inf", "0"]]);
        let b = m(&[&["0", "0"], &["1", "2"]]);
        assert_eq!(conjugate(&a, &b).unwrap(), m(&[&["2g", "3g"], &["1", "2g"]]));

        let zero = Matrix::filled(2, 2, Element::ZERO);
        assert_eq!(conjugate(&zero, &b), Err(Error::StrictlySingular));
    }
}
