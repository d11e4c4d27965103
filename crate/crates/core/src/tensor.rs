//! Dense matrices over [`Scalar`] and the tensor-product plumbing.
//!
//! Operators act on coordinate columns, so `f ∘ g` is the product `F · G`.
//! Basis vector `e_i ⊗ e_j` of `V ⊗ W` (with `dim W = m`) has flat index
//! `i·m + j`; triple tensors nest the same way, `(i·m + j)·p + k`.

use std::fmt;

use thiserror::Error;

use crate::scalar::{Assignment, ParamSet, Rational, Scalar, ScalarError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TensorError {
    #[error("dimension mismatch in {op}: {left:?} vs {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

fn mismatch(op: &'static str, a: &Matrix, b: &Matrix) -> TensorError {
    TensorError::DimensionMismatch {
        op,
        left: a.shape(),
        right: b.shape(),
    }
}

/// Row-major dense matrix whose entries share one [`ParamSet`].
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    params: ParamSet,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize, params: &ParamSet) -> Self {
        Matrix {
            rows,
            cols,
            params: params.clone(),
            data: vec![Scalar::zero(params); rows * cols],
        }
    }

    pub fn identity(n: usize, params: &ParamSet) -> Self {
        let mut m = Self::zeros(n, n, params);
        for i in 0..n {
            m.data[i * n + i] = Scalar::one(params);
        }
        m
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        params: &ParamSet,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let s = f(i, j);
                assert!(s.params() == params, "entry ({i}, {j}) has a foreign parameter set");
                data.push(s);
            }
        }
        Matrix {
            rows,
            cols,
            params: params.clone(),
            data,
        }
    }

    /// Builds from row vectors; every entry must live over `params`.
    pub fn from_rows(rows: Vec<Vec<Scalar>>, params: &ParamSet) -> Result<Self, TensorError> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(nrows * ncols);
        for row in rows {
            if row.len() != ncols {
                return Err(TensorError::DimensionMismatch {
                    op: "from_rows",
                    left: (nrows, ncols),
                    right: (1, row.len()),
                });
            }
            for s in row {
                if s.params() != params {
                    return Err(ScalarError::ParamMismatch {
                        left: params.names().to_vec(),
                        right: s.params().names().to_vec(),
                    }
                    .into());
                }
                data.push(s);
            }
        }
        Ok(Matrix {
            rows: nrows,
            cols: ncols,
            params: params.clone(),
            data,
        })
    }

    /// A single column.
    pub fn column(entries: &[Scalar], params: &ParamSet) -> Self {
        Self::from_fn(entries.len(), 1, params, |i, _| entries[i].clone())
    }

    /// A single row.
    pub fn row(entries: &[Scalar], params: &ParamSet) -> Self {
        Self::from_fn(1, entries.len(), params, |_, j| entries[j].clone())
    }

    pub fn diagonal(entries: &[Scalar], params: &ParamSet) -> Self {
        let n = entries.len();
        Self::from_fn(n, n, params, |i, j| {
            if i == j {
                entries[i].clone()
            } else {
                Scalar::zero(params)
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn params(&self) -> &ParamSet {
        &self.params
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Scalar) {
        assert!(value.params() == &self.params);
        self.data[i * self.cols + j] = value;
    }

    pub fn col_vec(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let s = self.get(i, j);
                    if i == j {
                        s.is_one()
                    } else {
                        s.is_zero()
                    }
                })
            })
    }

    /// Nonzero entries in row-major order.
    pub fn nonzero_entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.data
            .iter()
            .enumerate()
            .filter(|(_, s)| !s.is_zero())
            .map(|(k, s)| (k / self.cols, k % self.cols, s))
    }

    fn check_params(&self, other: &Matrix) -> Result<(), TensorError> {
        if self.params == other.params {
            Ok(())
        } else {
            Err(ScalarError::ParamMismatch {
                left: self.params.names().to_vec(),
                right: other.params.names().to_vec(),
            }
            .into())
        }
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix, TensorError> {
        if self.cols != rhs.rows {
            return Err(mismatch("mat_mul", self, rhs));
        }
        self.check_params(rhs)?;
        // Structure-constant operators are very sparse; iterate nonzeros only.
        let rhs_rows: Vec<Vec<(usize, &Scalar)>> = (0..rhs.rows)
            .map(|k| {
                (0..rhs.cols)
                    .map(|j| (j, rhs.get(k, j)))
                    .filter(|(_, s)| !s.is_zero())
                    .collect()
            })
            .collect();
        let mut out = Matrix::zeros(self.rows, rhs.cols, &self.params);
        for i in 0..self.rows {
            for (k, row) in rhs_rows.iter().enumerate() {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for &(j, b) in row {
                    out.data[i * rhs.cols + j].add_product(a, b);
                }
            }
        }
        Ok(out)
    }

    /// Product of a chain, applied right to left like composition.
    pub fn chain(factors: &[&Matrix]) -> Result<Matrix, TensorError> {
        let (first, rest) = factors.split_first().expect("empty product");
        rest.iter().try_fold((*first).clone(), |acc, m| acc.mul(m))
    }

    pub fn add(&self, rhs: &Matrix) -> Result<Matrix, TensorError> {
        self.zip_with(rhs, "mat_add", |a, b| a + b)
    }

    pub fn sub(&self, rhs: &Matrix) -> Result<Matrix, TensorError> {
        self.zip_with(rhs, "mat_sub", |a, b| a - b)
    }

    fn zip_with(
        &self,
        rhs: &Matrix,
        op: &'static str,
        f: impl Fn(&Scalar, &Scalar) -> Scalar,
    ) -> Result<Matrix, TensorError> {
        if self.shape() != rhs.shape() {
            return Err(mismatch(op, self, rhs));
        }
        self.check_params(rhs)?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            params: self.params.clone(),
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn scale(&self, c: &Scalar) -> Result<Matrix, TensorError> {
        if c.params() != &self.params {
            return Err(ScalarError::ParamMismatch {
                left: self.params.names().to_vec(),
                right: c.params().names().to_vec(),
            }
            .into());
        }
        Ok(self.map(|s| if s.is_zero() { s.clone() } else { s * c }))
    }

    pub fn neg(&self) -> Matrix {
        self.map(|s| -s)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, &self.params, |i, j| self.get(j, i).clone())
    }

    fn map(&self, f: impl Fn(&Scalar) -> Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            params: self.params.clone(),
            data: self.data.iter().map(f).collect(),
        }
    }

    /// Matrix power; `alpha^0` is the identity. Square matrices only.
    pub fn pow(&self, exp: u32) -> Result<Matrix, TensorError> {
        if !self.is_square() {
            return Err(mismatch("pow", self, self));
        }
        let mut out = Matrix::identity(self.rows, &self.params);
        for _ in 0..exp {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// Kronecker product: `kron(A,B)[i·p + k, j·q + l] = A[i,j]·B[k,l]`
    /// where `B` is `p × q`.
    pub fn kron(&self, rhs: &Matrix) -> Result<Matrix, TensorError> {
        self.check_params(rhs)?;
        let (p, q) = rhs.shape();
        let mut out = Matrix::zeros(self.rows * p, self.cols * q, &self.params);
        let cols = self.cols * q;
        for (i, j, a) in self.nonzero_entries() {
            for (k, l, b) in rhs.nonzero_entries() {
                out.data[(i * p + k) * cols + (j * q + l)] = a * b;
            }
        }
        Ok(out)
    }

    pub fn substitute(&self, name: &str, value: &Rational) -> Result<Matrix, TensorError> {
        let data = self
            .data
            .iter()
            .map(|s| s.substitute(name, value))
            .collect::<Result<_, _>>()?;
        Ok(Matrix {
            data,
            ..self.clone_shape()
        })
    }

    /// Evaluates every entry, producing a matrix over the empty parameter set.
    pub fn eval(&self, assignment: &Assignment) -> Result<Matrix, TensorError> {
        let data = self
            .data
            .iter()
            .map(|s| s.eval_scalar(assignment))
            .collect::<Result<_, _>>()?;
        Ok(Matrix {
            data,
            params: ParamSet::empty(),
            ..self.clone_shape()
        })
    }

    pub fn embed(&self, target: &ParamSet) -> Result<Matrix, TensorError> {
        let data = self
            .data
            .iter()
            .map(|s| s.embed(target))
            .collect::<Result<_, _>>()?;
        Ok(Matrix {
            data,
            params: target.clone(),
            ..self.clone_shape()
        })
    }

    fn clone_shape(&self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            params: self.params.clone(),
            data: Vec::new(),
        }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// The flip `V ⊗ W → W ⊗ V`, `e_i ⊗ e_j ↦ e_j ⊗ e_i`, with `dim V = n`, `dim W = m`.
pub fn flip(n: usize, m: usize, params: &ParamSet) -> Matrix {
    let mut out = Matrix::zeros(n * m, n * m, params);
    for i in 0..n {
        for j in 0..m {
            out.set(j * n + i, i * m + j, Scalar::one(params));
        }
    }
    out
}

fn require_square(op: &'static str, m: &Matrix) -> Result<usize, TensorError> {
    if m.is_square() {
        Ok(m.rows())
    } else {
        Err(mismatch(op, m, m))
    }
}

/// `R ⊗ α''` on `V ⊗ V' ⊗ V''`.
pub fn leg12(r: &Matrix, alpha3: &Matrix) -> Result<Matrix, TensorError> {
    require_square("leg12", r)?;
    require_square("leg12", alpha3)?;
    r.kron(alpha3)
}

/// `α ⊗ T` on `V ⊗ V' ⊗ V''`.
pub fn leg23(t: &Matrix, alpha1: &Matrix) -> Result<Matrix, TensorError> {
    require_square("leg23", t)?;
    require_square("leg23", alpha1)?;
    alpha1.kron(t)
}

/// `(τ ⊗ id) ∘ (α' ⊗ S) ∘ (τ ⊗ id)` on `V ⊗ V' ⊗ V''`, where `S` acts on
/// `V ⊗ V''` and `τ` swaps the first two legs. `dims = (dim V, dim V', dim V'')`.
pub fn leg13(s: &Matrix, alpha2: &Matrix, dims: (usize, usize, usize)) -> Result<Matrix, TensorError> {
    let (n1, n2, n3) = dims;
    let s_dim = require_square("leg13", s)?;
    let a_dim = require_square("leg13", alpha2)?;
    if s_dim != n1 * n3 || a_dim != n2 {
        return Err(mismatch("leg13", s, alpha2));
    }
    let params = s.params();
    let id3 = Matrix::identity(n3, params);
    let into = flip(n1, n2, params).kron(&id3)?;
    let back = flip(n2, n1, params).kron(&id3)?;
    Matrix::chain(&[&back, &alpha2.kron(s)?, &into])
}
