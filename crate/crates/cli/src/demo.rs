//! Worked examples, recomputed and compared with stored values.

use supertrop::spectral::{char_poly, conjugate, eigenvalues};
use supertrop::{Matrix, Result};

/// One displayed quantity.
struct Line {
    label: &'static str,
    computed: String,
    expected: &'static str,
    /// The value as usually quoted, when it differs from the correct one.
    quoted: Option<&'static str>,
}

fn line(label: &'static str, computed: impl ToString, expected: &'static str) -> Line {
    Line { label, computed: computed.to_string(), expected, quoted: None }
}

fn erratum(
    label: &'static str,
    computed: impl ToString,
    expected: &'static str,
    quoted: &'static str,
) -> Line {
    Line { quoted: Some(quoted), ..line(label, computed, expected) }
}

fn m(rows: &[&[&str]]) -> Matrix {
    Matrix::parse_rows(rows).expect("demo matrices are well formed")
}

pub const IDS: [&str; 4] = ["2.30", "3.6", "5.3", "6.1"];

fn lines(id: &str) -> Result<Option<Vec<Line>>> {
    Ok(Some(match id {
        "2.30" => {
            let a = m(&[&["0", "0"], &["1", "2"]]);
            let a2 = a.pow(2)?;
            let (f, f2) = (char_poly(&a)?, char_poly(&a2)?);
            let (lhs, rhs) = (f2.inflate(2), f.pow(2));
            vec![
                line("A", &a, "[[0, 0], [1, 2]]"),
                line("det(A)", a.determinant()?, "2"),
                line("A^2", &a2, "[[1, 2], [3, 4]]"),
                line("f_A", &f, "2, 2, 0"),
                line("f_(A^2)", &f2, "5g, 4, 0"),
                line("roots f_A", eigenvalues(&a)?, "corner: 0 (x1), 2 (x1)\nnoncorner:"),
                line("roots f_(A^2)", eigenvalues(&a2)?, "corner: 4 (x1)\nnoncorner: [-inf, 1]"),
                line("f_(A^2)(x^2)", &lhs, "5g, -inf, 4, -inf, 0"),
                line("f_A(x)^2", &rhs, "4, 4g, 4, 2g, 0"),
                line(
                    "f_(A^2)(x^2) |= f_A(x)^2 as functions",
                    lhs.surpasses_as_function(&rhs),
                    "true",
                ),
                line(
                    "f_(A^2)(x^2) |= f_A(x)^2 coefficientwise",
                    lhs.ghost_surpasses(&rhs),
                    "false",
                ),
            ]
        }
        "3.6" => {
            let a = m(&[&["1", "-2"], &["3/2", "5"]]);
            let b = m(&[&["0", "0", "-inf"], &["-inf", "0", "0"], &["1", "-inf", "0"]]);
            vec![
                line("(i) A", &a, "[[1, -2], [3/2, 5]]"),
                line("(i) A^∇", a.nabla()?, "[[-1, -8], [-9/2, -5]]"),
                line("(i) A^∇∇", a.nabla_iter(2)?, "[[1, -2], [3/2, 5]]"),
                line("(ii) A", &b, "[[0, 0, -inf], [-inf, 0, 0], [1, -inf, 0]]"),
                line("(ii) A^∇", b.nabla()?, "[[-1, -1, -1], [0, -1, -1], [0, 0, -1]]"),
                line("(ii) A^∇∇", b.nabla_iter(2)?, "[[0, 0, -1g], [0g, 0, 0], [1, 0g, 0]]"),
                erratum(
                    "(ii) A^∇(3)",
                    b.nabla_iter(3)?,
                    "[[-1g, -1, -1], [0, -1g, -1], [0, 0, -1g]]",
                    "[[-1, -1, -1], [0, -1, -1], [0, 0, -1]]",
                ),
                line(
                    "(ii) A^∇(3) ν-equivalent to A^∇",
                    b.nabla_iter(3)?.nu_equiv(&b.nabla()?)?,
                    "true",
                ),
                line("(ii) A^∇(4)", b.nabla_iter(4)?, "[[0, 0, -1g], [0g, 0, 0], [1, 0g, 0]]"),
            ]
        }
        "5.3" => {
            let a = m(&[&["2", "0"], &["1", "0"]]);
            let b = m(&[&["1", "2"], &["3", "1"]]);
            let b1 = conjugate(&a, &b)?;
            let (fb1, fb) = (char_poly(&b1)?, char_poly(&b)?);
            let a2 = m(&[&["0", "1g"], &["-inf", "0"]]);
            let b2 = m(&[&["0", "0"], &["1", "2"]]);
            let target = m(&[&["1", "3"], &["1", "2"]]);
            let c2 = conjugate(&a2, &b2)?;
            let (d, d1) = (b2.determinant()?, target.determinant()?);
            vec![
                line("1. A^∇", a.nabla()?, "[[-2, -2], [-1, 0]]"),
                erratum("1. A^∇BA", &b1, "[[3, 1], [5, 3]]", "[[3, 1g], [5, 3]]"),
                line("1. f_B'", &fb1, "6g, 3g, 0"),
                line("1. f_B", &fb, "5, 1g, 0"),
                line("1. f_B' |= f_B", fb1.ghost_surpasses(&fb), "true"),
                line("2. A^∇BA", &c2, "[[2g, 3g], [1, 2g]]"),
                line("2. A^∇BA |= B'", c2.ghost_surpasses(&target)?, "true"),
                line("2. det(B)", d, "2"),
                line("2. det(B')", d1, "4"),
                line(
                    "2. det(B') |= det(B) or det(B) |= det(B')",
                    d1.ghost_surpasses(&d) || d.ghost_surpasses(&d1),
                    "false",
                ),
            ]
        }
        "6.1" => {
            let a = m(&[&["1", "0", "-inf"], &["3", "4", "-inf"], &["-inf", "-inf", "1"]]);
            let det = a.determinant()?;
            let nabla = a.nabla()?;
            let (fa, fb) = (char_poly(&a)?, char_poly(&nabla)?);
            let scaled = fb.scale(det);
            vec![
                line("f_A", &fa, "6, 5g, 4, 0"),
                line("adj(A)", a.adjugate()?, "[[5, 1, -inf], [4, 2, -inf], [-inf, -inf, 5]]"),
                line("A^∇", &nabla, "[[-1, -5, -inf], [-2, -4, -inf], [-inf, -inf, -1]]"),
                line("f_(A^∇)", &fb, "-6, -2, -1g, 0"),
                line("det(A) f_(A^∇)", &scaled, "0, 4, 5g, 6"),
                line("det(A) f_(A^∇) = x^3 f_A(1/x)", scaled == fa.reversed(), "true"),
            ]
        }
        _ => return Ok(None),
    }))
}

/// Prints the transcript; `Ok(None)` for an unknown id, otherwise whether
/// every line matched.
pub fn run(id: &str) -> Result<Option<bool>> {
    let Some(lines) = lines(id)? else {
        return Ok(None);
    };
    let mut all = true;
    for l in &lines {
        let ok = l.computed == l.expected;
        all &= ok;
        let value = l.computed.replace('\n', "; ");
        println!("{:<44} {value}", l.label);
        if !ok {
            println!("{:<44} MISMATCH, expected {}", "", l.expected.replace('\n', "; "));
        }
        if let Some(q) = l.quoted {
            println!("{:<44} note: often quoted as {q}, which holds only up to ν", "");
        }
    }
    println!("{}", if all { "all lines match" } else { "MISMATCH" });
    Ok(Some(all))
}
