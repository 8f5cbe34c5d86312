//! One checker per theorem. Each takes named input matrices and returns the
//! violated relations, so a recorded failure can be replayed from its inputs.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::gen::{Constraint, GenConfig, RETRY_BUDGET};
use crate::error::{Error, Result};
use crate::semiring::Element;
use crate::spectral::{char_poly, conjugate, eigenvalues, eval_at_matrix, trace};
use crate::tropmat::{Matrix, PseudoIdentityClass, Side, SingularityClass};

/// Named inputs of one trial, e.g. `{"A": .., "B": ..}`.
pub type Inputs = BTreeMap<String, Matrix>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckId {
    DetProduct,
    AdjRules,
    AdjProduct,
    PseudoIdentity,
    NablaPeriod,
    DefiniteStabilization,
    Similarity,
    CharpolyPowerM2,
    CharpolyPowerM3,
    HamiltonCayley,
    #[serde(rename = "conjecture_62")]
    Conjecture62,
}

impl CheckId {
    pub const ALL: [CheckId; 11] = [
        CheckId::DetProduct,
        CheckId::AdjRules,
        CheckId::AdjProduct,
        CheckId::PseudoIdentity,
        CheckId::NablaPeriod,
        CheckId::DefiniteStabilization,
        CheckId::Similarity,
        CheckId::CharpolyPowerM2,
        CheckId::CharpolyPowerM3,
        CheckId::HamiltonCayley,
        CheckId::Conjecture62,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckId::DetProduct => "det_product",
            CheckId::AdjRules => "adj_rules",
            CheckId::AdjProduct => "adj_product",
            CheckId::PseudoIdentity => "pseudo_identity",
            CheckId::NablaPeriod => "nabla_period",
            CheckId::DefiniteStabilization => "definite_stabilization",
            CheckId::Similarity => "similarity",
            CheckId::CharpolyPowerM2 => "charpoly_power_m2",
            CheckId::CharpolyPowerM3 => "charpoly_power_m3",
            CheckId::HamiltonCayley => "hamilton_cayley",
            CheckId::Conjecture62 => "conjecture_62",
        }
    }

    /// The weakest constraint the primary input `A` must satisfy.
    pub fn required_constraint(self) -> Constraint {
        match self {
            CheckId::NablaPeriod | CheckId::Similarity | CheckId::Conjecture62 => {
                Constraint::NonSingular
            }
            CheckId::DefiniteStabilization => Constraint::Definite,
            _ => Constraint::None,
        }
    }

    /// The constraint actually used for `A` when the caller asks for
    /// `requested`: the check's own requirement unless `requested` is
    /// narrower.
    pub fn effective_constraint(self, requested: Constraint) -> Result<Constraint> {
        let required = self.required_constraint();
        if requested == Constraint::None {
            Ok(required)
        } else if requested.implies(required) {
            Ok(requested)
        } else {
            Err(Error::InvalidConfig(format!(
                "{self} needs {} inputs, not {}",
                required.as_str(),
                requested.as_str()
            )))
        }
    }

    /// Draws the inputs of one trial. `cfg.constraint` applies to `A`.
    pub fn sample<R: Rng>(self, cfg: &GenConfig, rng: &mut R) -> Result<Inputs> {
        let free = GenConfig { constraint: Constraint::None, ..cfg.clone() };
        let mut inputs = Inputs::new();
        let a = match self {
            CheckId::PseudoIdentity => not_strictly_singular(cfg, rng)?,
            _ => cfg.sample(rng)?,
        };
        inputs.insert("A".into(), a);
        match self {
            CheckId::DetProduct => {
                inputs.insert("B".into(), free.sample(rng)?);
                let inv = GenConfig { constraint: Constraint::Invertible, ..cfg.clone() };
                inputs.insert("P".into(), inv.sample(rng)?);
            }
            CheckId::AdjProduct | CheckId::Similarity => {
                inputs.insert("B".into(), free.sample(rng)?);
            }
            _ => {}
        }
        Ok(inputs)
    }

    /// Runs the check on `inputs`.
    pub fn evaluate(self, inputs: &Inputs) -> Verdict {
        let mut v = Verdict::default();
        if let Err(e) = self.run(inputs, &mut v) {
            v.failures.push(format!("error: {e}"));
        }
        v
    }

    fn run(self, inputs: &Inputs, v: &mut Verdict) -> Result<()> {
        let a = input(inputs, "A")?;
        match self {
            CheckId::DetProduct => det_product(a, input(inputs, "B")?, input(inputs, "P")?, v),
            CheckId::AdjRules => adj_rules(a, v),
            CheckId::AdjProduct => adj_product(a, input(inputs, "B")?, v),
            CheckId::PseudoIdentity => pseudo_identity(a, v),
            CheckId::NablaPeriod => nabla_period(a, v),
            CheckId::DefiniteStabilization => definite_stabilization(a, v),
            CheckId::Similarity => similarity(a, input(inputs, "B")?, v),
            CheckId::CharpolyPowerM2 => charpoly_power(a, 2, v),
            CheckId::CharpolyPowerM3 => charpoly_power(a, 3, v),
            CheckId::HamiltonCayley => hamilton_cayley(a, v),
            CheckId::Conjecture62 => conjecture_62(a, v),
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckId {
    type Err = Error;

    fn from_str(s: &str) -> Result<CheckId> {
        CheckId::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown check {s:?}")))
    }
}

/// Outcome of one trial. `failures` are violated theorems; `findings` are
/// violations of statements the library does not assert (the open range of
/// the conjecture, relations used inside proofs).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Verdict {
    pub failures: Vec<String>,
    pub findings: Vec<String>,
}

impl Verdict {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn require(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }

    fn note(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.findings.push(what());
        }
    }
}

fn input<'a>(inputs: &'a Inputs, name: &str) -> Result<&'a Matrix> {
    inputs.get(name).ok_or_else(|| Error::InvalidConfig(format!("missing input {name}")))
}

fn not_strictly_singular<R: Rng>(cfg: &GenConfig, rng: &mut R) -> Result<Matrix> {
    for _ in 0..RETRY_BUDGET {
        let m = cfg.sample(rng)?;
        if m.classify()? != SingularityClass::StrictlySingular {
            return Ok(m);
        }
    }
    Err(Error::ConstraintUnsatisfiable {
        constraint: "not strictly singular".into(),
        attempts: RETRY_BUDGET,
    })
}

fn det_product(a: &Matrix, b: &Matrix, p: &Matrix, v: &mut Verdict) -> Result<()> {
    let (da, db, dp) = (a.determinant()?, b.determinant()?, p.determinant()?);
    let dab = a.mul(b)?.determinant()?;
    v.require(dab.ghost_surpasses(&(da * db)), || {
        format!("det(AB) = {dab} does not surpass det(A)det(B) = {}", da * db)
    });
    let dpa = p.mul(a)?.determinant()?;
    let dap = a.mul(p)?.determinant()?;
    v.require(dpa == dp * da && dap == dp * da, || {
        format!("det(PA) = {dpa}, det(AP) = {dap}, det(P)det(A) = {}", dp * da)
    });
    Ok(())
}

fn adj_rules(a: &Matrix, v: &mut Verdict) -> Result<()> {
    let n = a.rows() as u32;
    let det = a.determinant()?;
    let adj = a.adjugate()?;
    let lhs = a.mul(&adj)?.determinant()?;
    v.require(lhs == det.pow(n), || format!("det(A adj(A)) = {lhs}, det(A)^n = {}", det.pow(n)));
    let lhs = adj.determinant()?;
    v.require(lhs == det.pow(n - 1), || {
        format!("det(adj(A)) = {lhs}, det(A)^(n-1) = {}", det.pow(n - 1))
    });
    Ok(())
}

fn adj_product(a: &Matrix, b: &Matrix, v: &mut Verdict) -> Result<()> {
    let lhs = a.mul(b)?.adjugate()?;
    let rhs = b.adjugate()?.mul(&a.adjugate()?)?;
    v.require(lhs.ghost_surpasses(&rhs)?, || {
        format!("adj(AB) = {lhs} does not surpass adj(B)adj(A) = {rhs}")
    });
    Ok(())
}

fn pseudo_identity(a: &Matrix, v: &mut Verdict) -> Result<()> {
    let expected = match a.classify()? {
        SingularityClass::NonSingular => PseudoIdentityClass::PseudoIdentity,
        _ => PseudoIdentityClass::GhostPseudoIdentity,
    };
    let nabla = a.nabla()?;
    for (name, m) in [("A A^∇", a.mul(&nabla)?), ("A^∇ A", nabla.mul(a)?)] {
        let got = m.pseudo_identity_class();
        v.require(got == expected, || format!("{name} = {m} is {got:?}, expected {expected:?}"));
    }
    Ok(())
}

fn nabla_period(a: &Matrix, v: &mut Verdict) -> Result<()> {
    const KMAX: usize = 5;
    let mut iterates = vec![a.nabla()?];
    for k in 1..KMAX {
        iterates.push(iterates[k - 1].nabla()?);
    }
    // iterates[k - 1] is the k-th iterate.
    for k in 1..=KMAX - 2 {
        let (x, y) = (&iterates[k - 1], &iterates[k + 1]);
        v.require(x.nu_equiv(y)?, || format!("∇^({k}) = {x} but ∇^({}) = {y}", k + 2));
    }
    let (p, left) = a.definite_form(Side::Left)?;
    let (_, right) = a.definite_form(Side::Right)?;
    let (n1, n2) = (&iterates[0], &iterates[1]);
    let pnp = p.mul(n1)?.mul(&p)?;
    v.require(n2.nu_equiv(&pnp)?, || format!("A^∇∇ = {n2} but P A^∇ P = {pnp}"));

    let p_inv = p.inverse()?;
    v.require(p.nabla()? == p_inv, || format!("P^∇ differs from P^-1 for P = {p}"));
    let via_form = left.nabla()?.mul(&p_inv)?;
    v.require(*n1 == via_form, || format!("A^∇ = {n1} but Ā^∇ P^-1 = {via_form}"));

    for (name, form, id) in [("left", &left, n1.mul(a)?), ("right", &right, a.mul(n1)?)] {
        let fnabla = form.nabla()?;
        let ok = fnabla.nabla()?.nu_equiv(&fnabla)? && fnabla.nu_equiv(&id)?;
        v.require(ok, || {
            format!("{name} definite form {form}: ∇∇, ∇ and the pseudo-identity differ")
        });
    }
    if a.rows() == 2 {
        v.require(*n2 == *a, || format!("2x2 A^∇∇ = {n2} differs from A"));
    }
    Ok(())
}

fn definite_stabilization(a: &Matrix, v: &mut Verdict) -> Result<()> {
    if !a.is_definite() {
        return Err(Error::NotDefinite);
    }
    let n = a.rows();
    let nabla = a.nabla()?;
    v.require(nabla == a.adjugate()? && nabla.is_definite(), || {
        format!("A^∇ = {nabla} is not the definite adjugate")
    });
    let (left, right) = (nabla.mul(a)?, a.mul(&nabla)?);
    v.require(left.nu_equiv(&nabla)? && right.nu_equiv(&nabla)?, || {
        format!("A^∇A = {left}, A^∇ = {nabla}, AA^∇ = {right} are not ν-equivalent")
    });
    for k in n - 1..=n + 1 {
        let (x, y) = (a.pow(k as u32)?, a.pow(k as u32 + 1)?);
        v.require(x.nu_equiv(&y)?, || format!("A^{k} = {x} but A^{} = {y}", k + 1));
    }
    let star = a.kleene_star()?;
    let chain = [
        ("A^∇∇", nabla.nabla()?),
        ("A*", star.clone()),
        ("A^(n-1)", a.pow(n as u32 - 1)?),
        ("I_A", right),
        ("A* (fixpoint)", a.kleene_star_fixpoint()?),
    ];
    for (name, m) in chain {
        v.require(m.nu_equiv(&nabla)?, || format!("{name} = {m} but A^∇ = {nabla}"));
    }
    let mut walk = Matrix::identity(n);
    for k in 1..=n {
        walk = walk.mul(a)?;
        let heavy = (0..n).find(|&i| walk.get(i, i).cmp_nu(&Element::ONE).is_gt());
        v.require(heavy.is_none(), || format!("closed walk of length {k} heavier than 0"));
    }
    Ok(())
}

fn similarity(a: &Matrix, b: &Matrix, v: &mut Verdict) -> Result<()> {
    let b1 = conjugate(a, b)?;
    let (f1, f) = (char_poly(&b1)?, char_poly(b)?);
    v.require(f1.ghost_surpasses(&f), || format!("f_B' = {f1} does not surpass f_B = {f}"));
    let (d1, d) = (b1.determinant()?, b.determinant()?);
    v.require(d1.ghost_surpasses(&d), || format!("det(B') = {d1}, det(B) = {d}"));
    if d1.is_tangible() {
        v.require(d1 == d, || format!("non-singular B' but det(B') = {d1}, det(B) = {d}"));
    }
    let (t1, t) = (trace(&b1)?, trace(b)?);
    v.require(t1.ghost_surpasses(&t), || format!("tr(B') = {t1}, tr(B) = {t}"));
    if f1.is_tangible() {
        v.require(f1 == f, || format!("tangible f_B' = {f1} differs from f_B = {f}"));
    }
    let at_b = eval_at_matrix(&f1, b)?;
    v.require(at_b.is_ghost(), || format!("f_B'(B) = {at_b} is not ghost"));
    for root in eigenvalues(b)?.corner {
        let y = f1.eval(root.value);
        v.require(y.is_ghost_or_neg_inf(), || {
            format!("eigenvalue {} of B gives f_B' = {y}", root.value)
        });
    }
    let (_, abar) = a.definite_form(Side::Right)?;
    let fbar = char_poly(&conjugate(&abar, b)?)?;
    v.note(fbar == f1, || format!("f(Ā^∇BĀ) = {fbar} differs from f(A^∇BA) = {f1}"));
    Ok(())
}

fn charpoly_power(a: &Matrix, m: u32, v: &mut Verdict) -> Result<()> {
    let am = a.pow(m)?;
    let (f, fm) = (char_poly(a)?, char_poly(&am)?);
    let lhs = fm.inflate(m as usize);
    let rhs = f.pow(m);
    v.require(lhs.surpasses_as_function(&rhs), || {
        format!("f_(A^{m})(x^{m}) = {lhs} does not surpass f_A(x)^{m} = {rhs} as a function")
    });
    if fm.is_tangible() {
        v.require(lhs.equals_as_function(&rhs), || {
            format!("tangible f_(A^{m})(x^{m}) = {lhs} differs from f_A(x)^{m} = {rhs}")
        });
    }
    let (roots, roots_m) = (f.roots()?, fm.roots()?);
    for c in &roots_m.corner {
        let ok = roots.corner.iter().any(|r| r.value.pow(m) == c.value);
        v.require(ok, || format!("corner root {} of f_(A^{m}) is not an {m}-th power", c.value));
    }
    for r in &roots.corner {
        let power = r.value.pow(m);
        v.require(roots_m.contains(&power), || {
            format!("eigenvalue {} of A but {power} is not an eigenvalue of A^{m}", r.value)
        });
    }
    Ok(())
}

fn hamilton_cayley(a: &Matrix, v: &mut Verdict) -> Result<()> {
    let value = eval_at_matrix(&char_poly(a)?, a)?;
    v.require(value.is_ghost(), || format!("f_A(A) = {value} is not ghost"));
    Ok(())
}

fn is_triangular(a: &Matrix) -> bool {
    let n = a.rows();
    let below = (0..n).all(|i| (0..i).all(|j| a.get(i, j).is_neg_inf()));
    let above = (0..n).all(|i| (i + 1..n).all(|j| a.get(i, j).is_neg_inf()));
    below || above
}

/// Per-coefficient relations `det(A) b_k ⊨ a_(n-k)`.
pub fn conjecture_62_coefficients(a: &Matrix) -> Result<Vec<(Element, Element)>> {
    let det = a.determinant()?;
    if !det.is_tangible() {
        return Err(Error::NotNonSingular(det.to_string()));
    }
    let n = a.rows();
    let (fa, fb) = (char_poly(a)?, char_poly(&a.nabla()?)?);
    Ok((0..=n).map(|k| (det * fb.coeff(k), fa.coeff(n - k))).collect())
}

fn conjecture_62(a: &Matrix, v: &mut Verdict) -> Result<()> {
    let n = a.rows();
    let triangular = is_triangular(a);
    let pairs = conjecture_62_coefficients(a)?;
    for (k, (lhs, rhs)) in pairs.into_iter().enumerate() {
        let proven = k == 0 || k + 2 >= n || n <= 4 || triangular;
        let ok = lhs.ghost_surpasses(&rhs);
        let msg = || format!("k = {k}: det(A) b_k = {lhs} does not surpass a_(n-k) = {rhs}");
        if proven {
            v.require(ok, msg);
        } else {
            v.note(ok, msg);
        }
        if triangular || n <= 2 {
            v.require(!ok || lhs == rhs, || format!("k = {k}: expected equality, {lhs} vs {rhs}"));
        }
    }
    Ok(())
}
