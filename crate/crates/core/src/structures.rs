//! Hom-algebras, Hom-coalgebras and Hom-Lie algebras given by structure
//! constants, with exhaustive axiom validators.
//!
//! Every axiom is checked as one matrix identity whose columns are indexed by
//! basis tuples, so a passing check covers all `dim^k` tuples at once and, by
//! multilinearity, all elements. Witness rows are tuple indices and witness
//! columns are output coordinates.

use std::ops::Deref;

use thiserror::Error;

use crate::report::{VerificationReport, DEFAULT_WITNESS_CAP};
use crate::scalar::{ParamSet, Rational, Scalar, ScalarError};
use crate::tensor::{flip, Matrix, TensorError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("{field}: expected {expected}, found {found}")]
    Shape {
        field: String,
        expected: String,
        found: String,
    },
    #[error("{field}: basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange {
        field: String,
        index: usize,
        dim: usize,
    },
    #[error("{field}: entry is over parameters {found:?}, expected {expected:?}")]
    ForeignParams {
        field: String,
        expected: Vec<String>,
        found: Vec<String>,
    },
    #[error("{name}: axioms fail ({failed})")]
    AxiomsFailed {
        name: String,
        failed: String,
        report: Box<VerificationReport>,
    },
    #[error(transparent)]
    Tensor(#[from] TensorError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

fn shape_err(field: &str, expected: impl ToString, found: impl ToString) -> StructureError {
    StructureError::Shape {
        field: field.to_string(),
        expected: expected.to_string(),
        found: found.to_string(),
    }
}

fn check_params(field: &str, params: &ParamSet, s: &Scalar) -> Result<(), StructureError> {
    if s.params() == params {
        Ok(())
    } else {
        Err(StructureError::ForeignParams {
            field: field.to_string(),
            expected: params.names().to_vec(),
            found: s.params().names().to_vec(),
        })
    }
}

/// Checks a coordinate vector's length and parameter set.
pub fn check_vector(field: &str, v: &[Scalar], dim: usize, params: &ParamSet) -> Result<(), StructureError> {
    if v.len() != dim {
        return Err(shape_err(field, format!("length {dim}"), format!("length {}", v.len())));
    }
    v.iter().try_for_each(|s| check_params(field, params, s))
}

fn check_alpha(alpha: &Matrix, dim: usize, params: &ParamSet) -> Result<(), StructureError> {
    if alpha.shape() != (dim, dim) {
        return Err(shape_err(
            "alpha",
            format!("{dim}×{dim}"),
            format!("{}×{}", alpha.rows(), alpha.cols()),
        ));
    }
    if alpha.params() != params {
        return Err(StructureError::ForeignParams {
            field: "alpha".into(),
            expected: params.names().to_vec(),
            found: alpha.params().names().to_vec(),
        });
    }
    Ok(())
}

/// Packs a `dim × dim` table of coordinate vectors into the `dim × dim²`
/// matrix of the bilinear map.
fn bilinear_matrix(
    field: &str,
    table: &[Vec<Vec<Scalar>>],
    dim: usize,
    params: &ParamSet,
) -> Result<Matrix, StructureError> {
    let found_cols = table.first().map_or(0, Vec::len);
    if table.len() != dim || table.iter().any(|row| row.len() != dim) {
        return Err(shape_err(
            field,
            format!("{dim}×{dim}"),
            format!("{}×{}", table.len(), found_cols),
        ));
    }
    let mut m = Matrix::zeros(dim, dim * dim, params);
    for (i, row) in table.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            check_vector(&format!("{field}[{i}][{j}]"), v, dim, params)?;
            for (k, s) in v.iter().enumerate() {
                m.set(k, i * dim + j, s.clone());
            }
        }
    }
    Ok(m)
}

fn bilinear_table(m: &Matrix, dim: usize) -> Vec<Vec<Vec<Scalar>>> {
    (0..dim)
        .map(|i| (0..dim).map(|j| m.col_vec(i * dim + j)).collect())
        .collect()
}

fn check_basis(basis: &[String]) -> Result<usize, StructureError> {
    if basis.is_empty() {
        return Err(shape_err("basis", "at least one name", "none"));
    }
    Ok(basis.len())
}

/// Data shared by the three kinds of Hom-structure.
pub trait Twisted {
    fn name(&self) -> &str;
    fn basis(&self) -> &[String];
    fn params(&self) -> &ParamSet;
    fn alpha(&self) -> &Matrix;

    fn dim(&self) -> usize {
        self.basis().len()
    }

    /// Whether `α² = id` exactly.
    fn alpha_is_involutive(&self) -> bool {
        self.alpha()
            .mul(self.alpha())
            .map(|a2| a2.is_identity())
            .unwrap_or(false)
    }
}

/// A Hom-associative algebra `(A, μ, 1_A, α)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomAlgebra {
    name: String,
    basis: Vec<String>,
    params: ParamSet,
    unit: Vec<Scalar>,
    mult: Matrix,
    alpha: Matrix,
}

impl HomAlgebra {
    /// `mult[i][j]` holds the coordinates of `e_i · e_j`.
    pub fn new(
        name: impl Into<String>,
        basis: Vec<String>,
        params: ParamSet,
        unit: Vec<Scalar>,
        mult: Vec<Vec<Vec<Scalar>>>,
        alpha: Matrix,
    ) -> Result<Self, StructureError> {
        let dim = check_basis(&basis)?;
        check_vector("unit", &unit, dim, &params)?;
        let mult = bilinear_matrix("mult", &mult, dim, &params)?;
        check_alpha(&alpha, dim, &params)?;
        Ok(HomAlgebra {
            name: name.into(),
            basis,
            params,
            unit,
            mult,
            alpha,
        })
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn unit_column(&self) -> Matrix {
        Matrix::column(&self.unit, &self.params)
    }

    /// `μ` as a `dim × dim²` matrix.
    pub fn mult_matrix(&self) -> &Matrix {
        &self.mult
    }

    pub fn product(&self, i: usize, j: usize) -> Vec<Scalar> {
        self.mult.col_vec(i * self.dim() + j)
    }

    pub fn mult_table(&self) -> Vec<Vec<Vec<Scalar>>> {
        bilinear_table(&self.mult, self.dim())
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn substitute(&self, param: &str, value: &Rational) -> Result<Self, StructureError> {
        self.map_scalars(|s| s.substitute(param, value), |m| m.substitute(param, value))
    }

    /// Moves every coefficient into a larger parameter set.
    pub fn embed(&self, target: &ParamSet) -> Result<Self, StructureError> {
        let mut out = self.map_scalars(|s| s.embed(target), |m| m.embed(target))?;
        out.params = target.clone();
        Ok(out)
    }

    fn map_scalars(
        &self,
        f: impl Fn(&Scalar) -> Result<Scalar, ScalarError>,
        g: impl Fn(&Matrix) -> Result<Matrix, TensorError>,
    ) -> Result<Self, StructureError> {
        Ok(HomAlgebra {
            name: self.name.clone(),
            basis: self.basis.clone(),
            params: self.params.clone(),
            unit: self.unit.iter().map(f).collect::<Result<_, _>>()?,
            mult: g(&self.mult)?,
            alpha: g(&self.alpha)?,
        })
    }
}

impl Twisted for HomAlgebra {
    fn name(&self) -> &str {
        &self.name
    }
    fn basis(&self) -> &[String] {
        &self.basis
    }
    fn params(&self) -> &ParamSet {
        &self.params
    }
    fn alpha(&self) -> &Matrix {
        &self.alpha
    }
}

/// A Hom-coassociative coalgebra `(C, Δ, ε, α)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomCoalgebra {
    name: String,
    basis: Vec<String>,
    params: ParamSet,
    comult: Matrix,
    counit: Vec<Scalar>,
    alpha: Matrix,
}

impl HomCoalgebra {
    /// `comult[i]` lists `(j, k, c)` with `Δ(e_i) = Σ c·e_j⊗e_k`; repeated
    /// pairs are summed.
    pub fn new(
        name: impl Into<String>,
        basis: Vec<String>,
        params: ParamSet,
        comult: Vec<Vec<(usize, usize, Scalar)>>,
        counit: Vec<Scalar>,
        alpha: Matrix,
    ) -> Result<Self, StructureError> {
        let dim = check_basis(&basis)?;
        if comult.len() != dim {
            return Err(shape_err(
                "comult",
                format!("{dim} entries"),
                format!("{} entries", comult.len()),
            ));
        }
        let mut m = Matrix::zeros(dim * dim, dim, &params);
        for (i, terms) in comult.iter().enumerate() {
            for (j, k, c) in terms {
                let field = format!("comult[{i}]");
                for &index in [j, k] {
                    if index >= dim {
                        return Err(StructureError::IndexOutOfRange { field, index, dim });
                    }
                }
                check_params(&field, &params, c)?;
                let row = j * dim + k;
                let sum = m.get(row, i).checked_add(c)?;
                m.set(row, i, sum);
            }
        }
        check_vector("counit", &counit, dim, &params)?;
        check_alpha(&alpha, dim, &params)?;
        Ok(HomCoalgebra {
            name: name.into(),
            basis,
            params,
            comult: m,
            counit,
            alpha,
        })
    }

    /// `Δ` as a `dim² × dim` matrix.
    pub fn comult_matrix(&self) -> &Matrix {
        &self.comult
    }

    /// Nonzero terms of `Δ(e_i)` in `(j, k)` order.
    pub fn comult_terms(&self, i: usize) -> Vec<(usize, usize, Scalar)> {
        let n = self.dim();
        (0..n * n)
            .filter(|&r| !self.comult.get(r, i).is_zero())
            .map(|r| (r / n, r % n, self.comult.get(r, i).clone()))
            .collect()
    }

    pub fn counit(&self) -> &[Scalar] {
        &self.counit
    }

    /// `ε` as a `1 × dim` matrix.
    pub fn counit_row(&self) -> Matrix {
        Matrix::row(&self.counit, &self.params)
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn substitute(&self, param: &str, value: &Rational) -> Result<Self, StructureError> {
        self.map_scalars(|s| s.substitute(param, value), |m| m.substitute(param, value))
    }

    pub fn embed(&self, target: &ParamSet) -> Result<Self, StructureError> {
        let mut out = self.map_scalars(|s| s.embed(target), |m| m.embed(target))?;
        out.params = target.clone();
        Ok(out)
    }

    fn map_scalars(
        &self,
        f: impl Fn(&Scalar) -> Result<Scalar, ScalarError>,
        g: impl Fn(&Matrix) -> Result<Matrix, TensorError>,
    ) -> Result<Self, StructureError> {
        Ok(HomCoalgebra {
            name: self.name.clone(),
            basis: self.basis.clone(),
            params: self.params.clone(),
            comult: g(&self.comult)?,
            counit: self.counit.iter().map(f).collect::<Result<_, _>>()?,
            alpha: g(&self.alpha)?,
        })
    }
}

impl Twisted for HomCoalgebra {
    fn name(&self) -> &str {
        &self.name
    }
    fn basis(&self) -> &[String] {
        &self.basis
    }
    fn params(&self) -> &ParamSet {
        &self.params
    }
    fn alpha(&self) -> &Matrix {
        &self.alpha
    }
}

/// A Hom-Lie algebra `(L, [·,·], α)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomLieAlgebra {
    name: String,
    basis: Vec<String>,
    params: ParamSet,
    bracket: Matrix,
    alpha: Matrix,
}

impl HomLieAlgebra {
    /// `bracket[i][j]` holds the coordinates of `[e_i, e_j]`.
    pub fn new(
        name: impl Into<String>,
        basis: Vec<String>,
        params: ParamSet,
        bracket: Vec<Vec<Vec<Scalar>>>,
        alpha: Matrix,
    ) -> Result<Self, StructureError> {
        let dim = check_basis(&basis)?;
        let bracket = bilinear_matrix("bracket", &bracket, dim, &params)?;
        check_alpha(&alpha, dim, &params)?;
        Ok(HomLieAlgebra {
            name: name.into(),
            basis,
            params,
            bracket,
            alpha,
        })
    }

    /// The bracket as a `dim × dim²` matrix.
    pub fn bracket_matrix(&self) -> &Matrix {
        &self.bracket
    }

    pub fn bracket_table(&self) -> Vec<Vec<Vec<Scalar>>> {
        bilinear_table(&self.bracket, self.dim())
    }

    /// `[x, y]` for coordinate vectors.
    pub fn bracket_of(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>, StructureError> {
        check_vector("x", x, self.dim(), &self.params)?;
        check_vector("y", y, self.dim(), &self.params)?;
        let xy = Matrix::column(x, &self.params).kron(&Matrix::column(y, &self.params))?;
        Ok(self.bracket.mul(&xy)?.col_vec(0))
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn substitute(&self, param: &str, value: &Rational) -> Result<Self, StructureError> {
        Ok(HomLieAlgebra {
            bracket: self.bracket.substitute(param, value)?,
            alpha: self.alpha.substitute(param, value)?,
            ..self.clone()
        })
    }

    pub fn embed(&self, target: &ParamSet) -> Result<Self, StructureError> {
        Ok(HomLieAlgebra {
            params: target.clone(),
            bracket: self.bracket.embed(target)?,
            alpha: self.alpha.embed(target)?,
            ..self.clone()
        })
    }
}

impl Twisted for HomLieAlgebra {
    fn name(&self) -> &str {
        &self.name
    }
    fn basis(&self) -> &[String] {
        &self.basis
    }
    fn params(&self) -> &ParamSet {
        &self.params
    }
    fn alpha(&self) -> &Matrix {
        &self.alpha
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StructureKind {
    Algebra,
    Coalgebra,
    Lie,
}

impl StructureKind {
    pub fn as_str(self) -> &'static str {
        match self {
            StructureKind::Algebra => "hom-algebra",
            StructureKind::Coalgebra => "hom-coalgebra",
            StructureKind::Lie => "hom-lie",
        }
    }
}

impl std::fmt::Display for StructureKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HomStructure {
    Algebra(HomAlgebra),
    Coalgebra(HomCoalgebra),
    Lie(HomLieAlgebra),
}

impl HomStructure {
    pub fn kind(&self) -> StructureKind {
        match self {
            HomStructure::Algebra(_) => StructureKind::Algebra,
            HomStructure::Coalgebra(_) => StructureKind::Coalgebra,
            HomStructure::Lie(_) => StructureKind::Lie,
        }
    }

    fn inner(&self) -> &dyn Twisted {
        match self {
            HomStructure::Algebra(a) => a,
            HomStructure::Coalgebra(c) => c,
            HomStructure::Lie(l) => l,
        }
    }

    /// Runs the matching validator.
    pub fn validate(&self, require_multiplicative: bool) -> VerificationReport {
        match self {
            HomStructure::Algebra(a) => validate_hom_algebra(a),
            HomStructure::Coalgebra(c) => validate_hom_coalgebra(c),
            HomStructure::Lie(l) => validate_hom_lie(l, require_multiplicative),
        }
    }

    pub fn substitute(&self, param: &str, value: &Rational) -> Result<Self, StructureError> {
        Ok(match self {
            HomStructure::Algebra(a) => HomStructure::Algebra(a.substitute(param, value)?),
            HomStructure::Coalgebra(c) => HomStructure::Coalgebra(c.substitute(param, value)?),
            HomStructure::Lie(l) => HomStructure::Lie(l.substitute(param, value)?),
        })
    }

    pub fn embed(&self, target: &ParamSet) -> Result<Self, StructureError> {
        Ok(match self {
            HomStructure::Algebra(a) => HomStructure::Algebra(a.embed(target)?),
            HomStructure::Coalgebra(c) => HomStructure::Coalgebra(c.embed(target)?),
            HomStructure::Lie(l) => HomStructure::Lie(l.embed(target)?),
        })
    }
}

impl Twisted for HomStructure {
    fn name(&self) -> &str {
        self.inner().name()
    }
    fn basis(&self) -> &[String] {
        self.inner().basis()
    }
    fn params(&self) -> &ParamSet {
        self.inner().params()
    }
    fn alpha(&self) -> &Matrix {
        self.inner().alpha()
    }
}

fn decode_tuple(mut index: usize, dim: usize, arity: usize) -> Vec<usize> {
    let mut out = vec![0; arity];
    for slot in out.iter_mut().rev() {
        *slot = index % dim;
        index /= dim;
    }
    out
}

fn tuple_name(basis: &[String], tuple: &[usize]) -> String {
    tuple
        .iter()
        .map(|&i| basis[i].as_str())
        .collect::<Vec<_>>()
        .join(" ⊗ ")
}

/// Report for a residual `out × dim^arity`, one column per basis tuple.
/// `out_arity` is the tensor degree of the output space (0 for scalars).
fn axiom_report(
    check: &str,
    residual: &Matrix,
    basis: &[String],
    arity: usize,
    out_arity: usize,
) -> VerificationReport {
    let dim = basis.len();
    let mut report = VerificationReport::from_residual(check, &residual.transpose(), DEFAULT_WITNESS_CAP);
    report.cases = residual.cols();
    for w in &mut report.witnesses {
        let tuple = decode_tuple(w.row, dim, arity);
        let input = if arity == 0 {
            "unit".to_string()
        } else {
            format!("({})", tuple.iter().map(|&i| basis[i].as_str()).collect::<Vec<_>>().join(", "))
        };
        let output = if out_arity == 0 {
            "scalar".to_string()
        } else {
            tuple_name(basis, &decode_tuple(w.col, dim, out_arity))
        };
        w.label = Some(format!("{input} -> {output}"));
        w.tuple = Some(tuple);
    }
    report
}

fn timed(f: impl FnOnce() -> VerificationReport) -> VerificationReport {
    let start = std::time::Instant::now();
    let report = f();
    report.with_elapsed(start.elapsed())
}

// Shapes are fixed by the constructors, so products below cannot mismatch.
fn m(result: Result<Matrix, TensorError>) -> Matrix {
    result.expect("shapes fixed at construction")
}

/// HA1 (multiplicativity, `α(1) = 1`), HA2 (Hom-associativity) and the unit
/// laws `a·1 = 1·a = α(a)`.
pub fn validate_hom_algebra(a: &HomAlgebra) -> VerificationReport {
    let start = std::time::Instant::now();
    let basis = a.basis();
    let p = a.params();
    let n = a.dim();
    let mu = a.mult_matrix();
    let alpha = a.alpha();
    let u = a.unit_column();
    let id = Matrix::identity(n, p);

    let parts = vec![
        timed(|| {
            let r = m(m(alpha.mul(mu)).sub(&m(mu.mul(&m(alpha.kron(alpha))))));
            axiom_report("HA1 multiplicativity", &r, basis, 2, 1)
        }),
        timed(|| {
            let r = m(m(alpha.mul(&u)).sub(&u));
            axiom_report("HA1 unit fixed", &r, basis, 0, 1)
        }),
        timed(|| {
            let left = m(mu.mul(&m(alpha.kron(mu))));
            let right = m(mu.mul(&m(mu.kron(alpha))));
            axiom_report("HA2 hom-associativity", &m(left.sub(&right)), basis, 3, 1)
        }),
        timed(|| {
            let r = m(m(mu.mul(&m(id.kron(&u)))).sub(alpha));
            axiom_report("HA2 right unit", &r, basis, 1, 1)
        }),
        timed(|| {
            let r = m(m(mu.mul(&m(u.kron(&id)))).sub(alpha));
            axiom_report("HA2 left unit", &r, basis, 1, 1)
        }),
    ];
    VerificationReport::combine(format!("hom-algebra axioms ({})", a.name()), parts, DEFAULT_WITNESS_CAP)
        .with_elapsed(start.elapsed())
}

/// HC1 (`(α⊗α)Δ = Δα`, `εα = ε`), HC2 (Hom-coassociativity) and the counit
/// laws `(ε⊗id)Δ = (id⊗ε)Δ = α`.
pub fn validate_hom_coalgebra(c: &HomCoalgebra) -> VerificationReport {
    let start = std::time::Instant::now();
    let basis = c.basis();
    let p = c.params();
    let n = c.dim();
    let delta = c.comult_matrix();
    let alpha = c.alpha();
    let eps = c.counit_row();
    let id = Matrix::identity(n, p);

    let parts = vec![
        timed(|| {
            let r = m(m(m(alpha.kron(alpha)).mul(delta)).sub(&m(delta.mul(alpha))));
            axiom_report("HC1 comultiplicativity", &r, basis, 1, 2)
        }),
        timed(|| {
            let r = m(m(eps.mul(alpha)).sub(&eps));
            axiom_report("HC1 counit invariance", &r, basis, 1, 0)
        }),
        timed(|| {
            let left = m(m(alpha.kron(delta)).mul(delta));
            let right = m(m(delta.kron(alpha)).mul(delta));
            axiom_report("HC2 hom-coassociativity", &m(left.sub(&right)), basis, 1, 3)
        }),
        timed(|| {
            let r = m(m(m(eps.kron(&id)).mul(delta)).sub(alpha));
            axiom_report("HC2 left counit", &r, basis, 1, 1)
        }),
        timed(|| {
            let r = m(m(m(id.kron(&eps)).mul(delta)).sub(alpha));
            axiom_report("HC2 right counit", &r, basis, 1, 1)
        }),
    ];
    VerificationReport::combine(format!("hom-coalgebra axioms ({})", c.name()), parts, DEFAULT_WITNESS_CAP)
        .with_elapsed(start.elapsed())
}

/// Permutation `e_a⊗e_b⊗e_c ↦ e_b⊗e_c⊗e_a`.
fn cycle3(n: usize, p: &ParamSet) -> Matrix {
    let mut out = Matrix::zeros(n * n * n, n * n * n, p);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                out.set((b * n + c) * n + a, (a * n + b) * n + c, Scalar::one(p));
            }
        }
    }
    out
}

/// HL1 (antisymmetry) and HL2 (Hom-Jacobi); with `require_multiplicative`,
/// also `α[x, y] = [α(x), α(y)]`.
pub fn validate_hom_lie(l: &HomLieAlgebra, require_multiplicative: bool) -> VerificationReport {
    let start = std::time::Instant::now();
    let basis = l.basis();
    let p = l.params();
    let n = l.dim();
    let br = l.bracket_matrix();
    let alpha = l.alpha();

    let mut parts = vec![
        timed(|| {
            let r = m(br.add(&m(br.mul(&flip(n, n, p)))));
            axiom_report("HL1 antisymmetry", &r, basis, 2, 1)
        }),
        timed(|| {
            let jac = m(br.mul(&m(alpha.kron(br))));
            let cyc = cycle3(n, p);
            let cyc2 = m(cyc.mul(&cyc));
            let sum = m(m(jac.add(&m(jac.mul(&cyc)))).add(&m(jac.mul(&cyc2))));
            axiom_report("HL2 hom-Jacobi", &sum, basis, 3, 1)
        }),
    ];
    if require_multiplicative {
        parts.push(timed(|| {
            let r = m(m(alpha.mul(br)).sub(&m(br.mul(&m(alpha.kron(alpha))))));
            axiom_report("multiplicativity", &r, basis, 2, 1)
        }));
    }
    VerificationReport::combine(format!("hom-lie axioms ({})", l.name()), parts, DEFAULT_WITNESS_CAP)
        .with_elapsed(start.elapsed())
}

/// Whether `[u, e_i] = 0` for every basis vector.
pub fn is_central(l: &HomLieAlgebra, u: &[Scalar]) -> Result<bool, StructureError> {
    check_vector("u", u, l.dim(), l.params())?;
    let id = Matrix::identity(l.dim(), l.params());
    let ad = l.bracket_matrix().mul(&Matrix::column(u, l.params()).kron(&id)?)?;
    Ok(ad.is_zero())
}

/// Whether `α(u) = u` exactly.
pub fn is_alpha_invariant<S: Twisted + ?Sized>(s: &S, u: &[Scalar]) -> Result<bool, StructureError> {
    check_vector("u", u, s.dim(), s.params())?;
    let col = Matrix::column(u, s.params());
    Ok(s.alpha().mul(&col)? == col)
}

/// A structure with an axiom validator.
pub trait Axioms: Twisted {
    /// The checks a constructor relies on; for Hom-Lie algebras this includes
    /// multiplicativity of `α`.
    fn check_axioms(&self) -> VerificationReport;
}

impl Axioms for HomAlgebra {
    fn check_axioms(&self) -> VerificationReport {
        validate_hom_algebra(self)
    }
}

impl Axioms for HomCoalgebra {
    fn check_axioms(&self) -> VerificationReport {
        validate_hom_coalgebra(self)
    }
}

impl Axioms for HomLieAlgebra {
    fn check_axioms(&self) -> VerificationReport {
        validate_hom_lie(self, true)
    }
}

/// A structure accepted by the constructors: either its axioms were checked,
/// or the caller explicitly overrode the check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Validated<T> {
    inner: T,
    checked: bool,
}

impl<T: Axioms> Validated<T> {
    pub fn new(inner: T) -> Result<Self, StructureError> {
        let report = inner.check_axioms();
        if report.holds {
            Ok(Validated { inner, checked: true })
        } else {
            let failed = report
                .failures()
                .iter()
                .map(|r| r.check.as_str())
                .collect::<Vec<_>>()
                .join(", ");
            Err(StructureError::AxiomsFailed {
                name: inner.name().to_string(),
                failed,
                report: Box::new(report),
            })
        }
    }

    /// Skips validation.
    pub fn assume_valid(inner: T) -> Self {
        Validated { inner, checked: false }
    }
}

impl<T> Validated<T> {
    /// False when built through [`Validated::assume_valid`].
    pub fn is_checked(&self) -> bool {
        self.checked
    }

    pub fn into_inner(self) -> T {
        self.inner
    }
}

impl<T> Deref for Validated<T> {
    type Target = T;
    fn deref(&self) -> &T {
        &self.inner
    }
}
