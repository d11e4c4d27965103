//! Exact checkers. Every check forms a residual matrix and reports whether it
//! is identically zero in the Laurent ring.

use std::time::Instant;

use thiserror::Error;

use crate::constructions::{RMatrix, SystemTriple};
use crate::report::{VerificationReport, DEFAULT_WITNESS_CAP};
use crate::scalar::{Scalar, ScalarError};
use crate::structures::{HomLieAlgebra, Twisted};
use crate::tensor::{leg12, leg13, leg23, Matrix, TensorError};

pub use crate::report::Witness;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("{what}: expected {expected:?}, found {found:?}")]
    Dimension {
        what: &'static str,
        expected: (usize, usize),
        found: (usize, usize),
    },
    #[error(transparent)]
    Tensor(#[from] TensorError),
}

fn expect_shape(what: &'static str, m: &Matrix, expected: (usize, usize)) -> Result<(), VerifyError> {
    if m.shape() == expected {
        Ok(())
    } else {
        Err(VerifyError::Dimension {
            what,
            expected,
            found: m.shape(),
        })
    }
}

fn square_dim(what: &'static str, m: &Matrix) -> Result<usize, VerifyError> {
    if m.is_square() {
        Ok(m.rows())
    } else {
        Err(VerifyError::Dimension {
            what,
            expected: (m.rows(), m.rows()),
            found: m.shape(),
        })
    }
}

/// Checks `B` against `α` where `B` acts on `V ⊗ V`.
fn operator_dims(b: &Matrix, alpha: &Matrix) -> Result<usize, VerifyError> {
    let n = square_dim("alpha", alpha)?;
    expect_shape("operator", b, (n * n, n * n))?;
    Ok(n)
}

/// The Hom-Yang-Baxter commutator
/// `R¹² S¹³ T²³ − T²³ S¹³ R¹²` on `V ⊗ V' ⊗ V''`, with `R` on `V⊗V'`,
/// `S` on `V⊗V''`, `T` on `V'⊗V''`.
pub fn yb_commutator(
    r: &Matrix,
    s: &Matrix,
    t: &Matrix,
    dims: (usize, usize, usize),
    alphas: (&Matrix, &Matrix, &Matrix),
) -> Result<Matrix, VerifyError> {
    let (n1, n2, n3) = dims;
    let (a1, a2, a3) = alphas;
    expect_shape("alpha V", a1, (n1, n1))?;
    expect_shape("alpha V'", a2, (n2, n2))?;
    expect_shape("alpha V''", a3, (n3, n3))?;
    expect_shape("R", r, (n1 * n2, n1 * n2))?;
    expect_shape("S", s, (n1 * n3, n1 * n3))?;
    expect_shape("T", t, (n2 * n3, n2 * n3))?;
    let r12 = leg12(r, a3)?;
    let s13 = leg13(s, a2, dims)?;
    let t23 = leg23(t, a1)?;
    let left = Matrix::chain(&[&r12, &s13, &t23])?;
    let right = Matrix::chain(&[&t23, &s13, &r12])?;
    Ok(left.sub(&right)?)
}

/// Checker configuration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Verifier {
    pub witness_cap: usize,
}

impl Default for Verifier {
    fn default() -> Self {
        Verifier {
            witness_cap: DEFAULT_WITNESS_CAP,
        }
    }
}

impl Verifier {
    pub fn new(witness_cap: usize) -> Self {
        Verifier { witness_cap }
    }

    fn report(&self, check: &str, residual: &Matrix, start: Instant) -> VerificationReport {
        VerificationReport::from_residual(check, residual, self.witness_cap).with_elapsed(start.elapsed())
    }

    /// `(α⊗α)B = B(α⊗α)`.
    pub fn commutes_with_alpha(&self, b: &Matrix, alpha: &Matrix) -> Result<VerificationReport, VerifyError> {
        let start = Instant::now();
        operator_dims(b, alpha)?;
        let aa = alpha.kron(alpha)?;
        let residual = aa.mul(b)?.sub(&b.mul(&aa)?)?;
        Ok(self.report("commutes with α⊗α", &residual, start))
    }

    /// `(α⊗B)(B⊗α)(α⊗B) = (B⊗α)(α⊗B)(B⊗α)`.
    pub fn hybe_holds(&self, b: &Matrix, alpha: &Matrix) -> Result<VerificationReport, VerifyError> {
        let start = Instant::now();
        operator_dims(b, alpha)?;
        let ab = alpha.kron(b)?;
        let ba = b.kron(alpha)?;
        let left = Matrix::chain(&[&ab, &ba, &ab])?;
        let right = Matrix::chain(&[&ba, &ab, &ba])?;
        Ok(self.report("HYBE", &left.sub(&right)?, start))
    }

    /// `B·B⁻¹ = B⁻¹·B = id`, itemized by product order.
    pub fn inverse_holds(&self, b: &Matrix, b_inv: &Matrix) -> Result<VerificationReport, VerifyError> {
        let start = Instant::now();
        let n = square_dim("operator", b)?;
        expect_shape("inverse", b_inv, (n, n))?;
        let id = Matrix::identity(n, b.params());
        let parts = vec![
            self.report("B·B⁻¹ = id", &b.mul(b_inv)?.sub(&id)?, start),
            self.report("B⁻¹·B = id", &b_inv.mul(b)?.sub(&id)?, start),
        ];
        Ok(VerificationReport::combine("inverse", parts, self.witness_cap).with_elapsed(start.elapsed()))
    }

    /// The four conditions `[W,W,W] = [Z,Z,Z] = [W,X,X] = [X,X,Z] = 0` with
    /// all legs on `V` twisted by `α`. The four commutators run in parallel.
    pub fn system_holds(
        &self,
        w: &Matrix,
        z: &Matrix,
        x: &Matrix,
        alpha: &Matrix,
    ) -> Result<VerificationReport, VerifyError> {
        let start = Instant::now();
        let n = operator_dims(w, alpha)?;
        operator_dims(z, alpha)?;
        operator_dims(x, alpha)?;
        let triples: [(&str, &Matrix, &Matrix, &Matrix); 4] = [
            ("[W,W,W] = 0", w, w, w),
            ("[Z,Z,Z] = 0", z, z, z),
            ("[W,X,X] = 0", w, x, x),
            ("[X,X,Z] = 0", x, x, z),
        ];
        let results: Vec<Result<VerificationReport, VerifyError>> = std::thread::scope(|scope| {
            let handles: Vec<_> = triples
                .iter()
                .map(|&(name, r, s, t)| {
                    scope.spawn(move || {
                        let started = Instant::now();
                        let c = yb_commutator(r, s, t, (n, n, n), (alpha, alpha, alpha))?;
                        Ok(self.report(name, &c, started))
                    })
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("commutator thread panicked"))
                .collect()
        });
        let parts = results.into_iter().collect::<Result<Vec<_>, _>>()?;
        Ok(VerificationReport::combine("Hom-Yang-Baxter system", parts, self.witness_cap).with_elapsed(start.elapsed()))
    }

    pub fn system_triple_holds(&self, triple: &SystemTriple, alpha: &Matrix) -> Result<VerificationReport, VerifyError> {
        self.system_holds(&triple.w.matrix, &triple.z.matrix, &triple.x.matrix, alpha)
    }

    /// `[r¹²,r¹³] + [r¹²,r²³] + [r¹³,r²³] = 0` for `r = Σ aᵢ⊗bᵢ`, where
    /// `[r¹²,r¹³] = Σ [aᵢ,aⱼ]⊗α(bᵢ)⊗α(bⱼ)`,
    /// `[r¹²,r²³] = Σ α(aᵢ)⊗[bᵢ,aₖ]⊗α(bₖ)` and
    /// `[r¹³,r²³] = Σ α(aⱼ)⊗α(aₖ)⊗[bⱼ,bₖ]`.
    pub fn chybe_holds(&self, r: &RMatrix, l: &HomLieAlgebra) -> Result<VerificationReport, VerifyError> {
        let start = Instant::now();
        let n = l.dim();
        let p = l.params();
        let rc = r.column();
        expect_shape("r", &rc, (n * n, 1))?;
        if rc.params() != p {
            return Err(TensorError::from(ScalarError::ParamMismatch {
                left: p.names().to_vec(),
                right: rc.params().names().to_vec(),
            })
            .into());
        }
        let alpha = l.alpha();
        let ae: Vec<Matrix> = (0..n).map(|i| alpha.col_vec(i)).map(|v| Matrix::column(&v, p)).collect();
        let br = |i: usize, j: usize| Matrix::column(&l.bracket_matrix().col_vec(i * n + j), p);

        let terms: Vec<(usize, usize, &Scalar)> = (0..n * n)
            .map(|k| (k / n, k % n, rc.get(k, 0)))
            .filter(|(_, _, c)| !c.is_zero())
            .collect();
        let mut sum = Matrix::zeros(n * n * n, 1, p);
        for &(ap, bq, c1) in &terms {
            for &(as_, bt, c2) in &terms {
                let c = c1 * c2;
                let t12_13 = br(ap, as_).kron(&ae[bq])?.kron(&ae[bt])?;
                let t12_23 = ae[ap].kron(&br(bq, as_))?.kron(&ae[bt])?;
                let t13_23 = ae[ap].kron(&ae[as_])?.kron(&br(bq, bt))?;
                let total = t12_13.add(&t12_23)?.add(&t13_23)?;
                sum = sum.add(&total.scale(&c)?)?;
            }
        }
        let mut report = self.report("CHYBE", &sum, start);
        let basis = l.basis();
        for w in &mut report.witnesses {
            let (i, rest) = (w.row / (n * n), w.row % (n * n));
            let tuple = vec![i, rest / n, rest % n];
            w.label = Some(
                tuple
                    .iter()
                    .map(|&k| basis[k].as_str())
                    .collect::<Vec<_>>()
                    .join(" ⊗ "),
            );
            w.tuple = Some(tuple);
        }
        Ok(report.with_note(
            "the third bracket is read as [r¹³,r²³] with components [b_j,b_k]",
        ))
    }
}

pub fn commutes_with_alpha(b: &Matrix, alpha: &Matrix) -> Result<VerificationReport, VerifyError> {
    Verifier::default().commutes_with_alpha(b, alpha)
}

pub fn hybe_holds(b: &Matrix, alpha: &Matrix) -> Result<VerificationReport, VerifyError> {
    Verifier::default().hybe_holds(b, alpha)
}

pub fn inverse_holds(b: &Matrix, b_inv: &Matrix) -> Result<VerificationReport, VerifyError> {
    Verifier::default().inverse_holds(b, b_inv)
}

pub fn system_holds(w: &Matrix, z: &Matrix, x: &Matrix, alpha: &Matrix) -> Result<VerificationReport, VerifyError> {
    Verifier::default().system_holds(w, z, x, alpha)
}

pub fn chybe_holds(r: &RMatrix, l: &HomLieAlgebra) -> Result<VerificationReport, VerifyError> {
    Verifier::default().chybe_holds(r, l)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{parse_scalar, ParamSet};
    use crate::tensor::flip;

    fn mat(p: &ParamSet, rows: &[&[&str]]) -> Matrix {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|t| parse_scalar(t, p).unwrap()).collect())
                .collect(),
            p,
        )
        .unwrap()
    }

    #[test]
    fn identity_commutes_with_any_alpha() {
        let p = ParamSet::new(["l"]).unwrap();
        let alpha = mat(&p, &[&["1", "l"], &["0", "l^2"]]);
        assert!(commutes_with_alpha(&Matrix::identity(4, &p), &alpha).unwrap().holds);
    }

    #[test]
    fn non_commuting_operator_gives_witness() {
        let p = ParamSet::empty();
        let alpha = mat(&p, &[&["1", "1"], &["0", "1"]]);
        // Projection onto e_0⊗e_0.
        let mut b = Matrix::zeros(4, 4, &p);
        b.set(0, 0, Scalar::one(&p));
        let r = commutes_with_alpha(&b, &alpha).unwrap();
        assert!(!r.holds);
        assert_eq!((r.witnesses[0].row, r.witnesses[0].col), (0, 1));
        // The flip commutes with every α⊗α.
        assert!(commutes_with_alpha(&flip(2, 2, &p), &alpha).unwrap().holds);
    }

    #[test]
    fn identity_solves_hybe_only_for_trivial_twist() {
        let p = ParamSet::new(["l"]).unwrap();
        let id4 = Matrix::identity(4, &p);
        assert!(hybe_holds(&id4, &Matrix::identity(2, &p)).unwrap().holds);
        let alpha = mat(&p, &[&["1", "0"], &["0", "l"]]);
        assert!(!hybe_holds(&id4, &alpha).unwrap().holds);
    }

    #[test]
    fn flip_is_its_own_inverse() {
        let p = ParamSet::empty();
        let f = flip(3, 3, &p);
        let r = inverse_holds(&f, &f).unwrap();
        assert!(r.holds);
        assert_eq!(r.parts.len(), 2);
        assert!(!inverse_holds(&f, &Matrix::identity(9, &p)).unwrap().holds);
    }

    #[test]
    fn commutators_vanish_for_identity_and_flip() {
        let p = ParamSet::empty();
        let id2 = Matrix::identity(2, &p);
        let id4 = Matrix::identity(4, &p);
        let c = yb_commutator(&id4, &id4, &id4, (2, 2, 2), (&id2, &id2, &id2)).unwrap();
        assert!(c.is_zero());
        let f = flip(2, 2, &p);
        let c = yb_commutator(&f, &f, &f, (2, 2, 2), (&id2, &id2, &id2)).unwrap();
        assert!(c.is_zero());
        let r = system_holds(&id4, &id4, &id4, &id2).unwrap();
        assert!(r.holds);
        assert_eq!(r.parts.len(), 4);
    }

    #[test]
    fn commutator_supports_unequal_dimensions() {
        let p = ParamSet::empty();
        let (n1, n2, n3) = (1, 2, 3);
        let ids = (Matrix::identity(n1, &p), Matrix::identity(n2, &p), Matrix::identity(n3, &p));
        let c = yb_commutator(
            &Matrix::identity(n1 * n2, &p),
            &Matrix::identity(n1 * n3, &p),
            &flip(n2, n3, &p).mul(&flip(n3, n2, &p)).unwrap(),
            (n1, n2, n3),
            (&ids.0, &ids.1, &ids.2),
        )
        .unwrap();
        assert_eq!(c.shape(), (6, 6));
        assert!(c.is_zero());
    }

    #[test]
    fn dimension_errors() {
        let p = ParamSet::empty();
        let err = hybe_holds(&Matrix::identity(3, &p), &Matrix::identity(2, &p)).unwrap_err();
        assert!(matches!(err, VerifyError::Dimension { what: "operator", .. }));
    }
}
