//! Closed-form solution operators, their inverses, r-matrices and
//! Yang-Baxter system triples built from Hom-structures.
//!
//! Parameters `λ`, `ν` are arbitrary [`Scalar`]s over the structure's
//! parameter set; passing the indeterminates themselves certifies every
//! specialization at once.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::scalar::{ParamSet, Scalar};
use crate::structures::{
    check_vector, is_alpha_invariant, is_central, HomAlgebra, HomCoalgebra, HomLieAlgebra, StructureError,
    StructureKind, Twisted, Validated,
};
use crate::tensor::{flip, Matrix, TensorError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error("{0} is not invertible in the Laurent ring (must be a single monomial)")]
    NotInvertible(&'static str),
    #[error("α is not involutive: α² ≠ id")]
    NotInvolutive,
    #[error("u is not central")]
    NotCentral,
    #[error("α^{0}(u) is not central")]
    PowerNotCentral(i64),
    #[error("negative power of α requested but no α⁻¹ supplied")]
    MissingAlphaInverse,
    #[error("supplied α⁻¹ does not invert α")]
    BadAlphaInverse,
    #[error("unknown construction {0:?}")]
    UnknownConstruction(String),
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    Tensor(#[from] TensorError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Construction {
    Alg21,
    Alg24,
    AlgInv22,
    AlgInv24,
    Coalg31,
    Coalg34,
    CoalgInv32,
    CoalgInv34,
    Lie41,
    LieInv42,
    SysW52,
    SysZ52,
    SysX52,
    SysW53,
    SysZ53,
    SysX53,
}

impl Construction {
    pub const ALL: [Construction; 16] = [
        Construction::Alg21,
        Construction::Alg24,
        Construction::AlgInv22,
        Construction::AlgInv24,
        Construction::Coalg31,
        Construction::Coalg34,
        Construction::CoalgInv32,
        Construction::CoalgInv34,
        Construction::Lie41,
        Construction::LieInv42,
        Construction::SysW52,
        Construction::SysZ52,
        Construction::SysX52,
        Construction::SysW53,
        Construction::SysZ53,
        Construction::SysX53,
    ];

    /// Identifier used on the command line and in report metadata.
    pub fn id(self) -> &'static str {
        match self {
            Construction::Alg21 => "thm2.1",
            Construction::Alg24 => "thm2.4",
            Construction::AlgInv22 => "cor2.2",
            Construction::AlgInv24 => "thm2.4-inv",
            Construction::Coalg31 => "thm3.1",
            Construction::Coalg34 => "thm3.4",
            Construction::CoalgInv32 => "cor3.2",
            Construction::CoalgInv34 => "thm3.4-inv",
            Construction::Lie41 => "thm4.1",
            Construction::LieInv42 => "cor4.2",
            Construction::SysW52 => "thm5.2-w",
            Construction::SysZ52 => "thm5.2-z",
            Construction::SysX52 => "thm5.2-x",
            Construction::SysW53 => "thm5.3-w",
            Construction::SysZ53 => "thm5.3-z",
            Construction::SysX53 => "thm5.3-x",
        }
    }

    /// The formula on `a⊗b` (or `x⊗y`).
    pub fn formula(self) -> &'static str {
        match self {
            Construction::Alg21 => "λ ab⊗1 + ν 1⊗ab − λ α(a)⊗α(b)",
            Construction::Alg24 => "λ ab⊗1 + ν 1⊗ab − ν α(a)⊗α(b)",
            Construction::AlgInv22 => "ν⁻¹ ab⊗1 + λ⁻¹ 1⊗ab − λ⁻¹ α(a)⊗α(b)",
            Construction::AlgInv24 => "ν⁻¹ ab⊗1 + λ⁻¹ 1⊗ab − ν⁻¹ α(a)⊗α(b)",
            Construction::Coalg31 => "λ ε(a)b₁⊗b₂ + ν ε(b)a₁⊗a₂ − λ α(a)⊗α(b)",
            Construction::Coalg34 => "λ ε(a)b₁⊗b₂ + ν ε(b)a₁⊗a₂ − ν α(a)⊗α(b)",
            Construction::CoalgInv32 => "ν⁻¹ ε(a)b₁⊗b₂ + λ⁻¹ ε(b)a₁⊗a₂ − λ⁻¹ α(a)⊗α(b)",
            Construction::CoalgInv34 => "ν⁻¹ ε(a)b₁⊗b₂ + λ⁻¹ ε(b)a₁⊗a₂ − ν⁻¹ α(a)⊗α(b)",
            Construction::Lie41 => "λ [x,y]⊗u − ν α(y)⊗α(x)",
            Construction::LieInv42 => "λ u⊗[x,y] − α(y)⊗α(x)",
            Construction::SysW52 => "ab⊗1 + λ 1⊗ab − α(b)⊗α(a)",
            Construction::SysZ52 => "ν ab⊗1 + 1⊗ab − α(b)⊗α(a)",
            Construction::SysX52 => "ab⊗1 + 1⊗ab − α(b)⊗α(a)",
            Construction::SysW53 => "λ ε(a)b₁⊗b₂ + ε(b)a₁⊗a₂ − α(b)⊗α(a)",
            Construction::SysZ53 => "ε(a)b₁⊗b₂ + ν ε(b)a₁⊗a₂ − α(b)⊗α(a)",
            Construction::SysX53 => "ε(a)b₁⊗b₂ + ε(b)a₁⊗a₂ − α(b)⊗α(a)",
        }
    }

    pub fn kind(self) -> StructureKind {
        use Construction::*;
        match self {
            Alg21 | Alg24 | AlgInv22 | AlgInv24 | SysW52 | SysZ52 | SysX52 => StructureKind::Algebra,
            Coalg31 | Coalg34 | CoalgInv32 | CoalgInv34 | SysW53 | SysZ53 | SysX53 => StructureKind::Coalgebra,
            Lie41 | LieInv42 => StructureKind::Lie,
        }
    }

    pub fn is_inverse(self) -> bool {
        matches!(
            self,
            Construction::AlgInv22 | Construction::AlgInv24 | Construction::CoalgInv32 | Construction::CoalgInv34 | Construction::LieInv42
        )
    }

    /// `(forward, inverse)` for constructions that come with a closed-form inverse.
    pub fn inverse_pair(self) -> Option<(Construction, Construction)> {
        use Construction::*;
        match self {
            Alg21 | AlgInv22 => Some((Alg21, AlgInv22)),
            Alg24 | AlgInv24 => Some((Alg24, AlgInv24)),
            Coalg31 | CoalgInv32 => Some((Coalg31, CoalgInv32)),
            Coalg34 | CoalgInv34 => Some((Coalg34, CoalgInv34)),
            Lie41 | LieInv42 => Some((Lie41, LieInv42)),
            _ => None,
        }
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Construction {
    type Err = BuildError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.to_ascii_lowercase();
        Construction::ALL
            .into_iter()
            .find(|c| c.id() == key)
            .ok_or_else(|| BuildError::UnknownConstruction(s.to_string()))
    }
}

/// A built operator on `V ⊗ V`, column `i·n + j` holding `B(e_i ⊗ e_j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionOperator {
    pub matrix: Matrix,
    pub construction: Construction,
    pub lambda: Scalar,
    pub nu: Scalar,
    pub source: String,
    /// Dimension of the underlying space `V`.
    pub dim: usize,
    pub warnings: Vec<String>,
}

impl SolutionOperator {
    /// Coordinates of `B(e_i ⊗ e_j)`.
    pub fn apply(&self, i: usize, j: usize) -> Vec<Scalar> {
        self.matrix.col_vec(i * self.dim + j)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlgebraVariant {
    Thm21,
    Thm24,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlgebraInverseVariant {
    Cor22,
    Thm24Inv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoalgebraVariant {
    Thm31,
    Thm34,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoalgebraInverseVariant {
    Cor32,
    Thm34Inv,
}

#[derive(Clone, Copy)]
enum Twist {
    /// `α(a) ⊗ α(b)`
    Straight,
    /// `α(b) ⊗ α(a)`
    Flipped,
}

fn check_param(name: &'static str, s: &Scalar, params: &ParamSet) -> Result<(), BuildError> {
    check_vector(name, std::slice::from_ref(s), 1, params)?;
    Ok(())
}

fn invert(name: &'static str, s: &Scalar) -> Result<Scalar, BuildError> {
    s.inverse().map_err(|_| BuildError::NotInvertible(name))
}

fn twist_matrix<S: Twisted + ?Sized>(s: &S, twist: Twist) -> Result<Matrix, TensorError> {
    let aa = s.alpha().kron(s.alpha())?;
    match twist {
        Twist::Straight => Ok(aa),
        Twist::Flipped => flip(s.dim(), s.dim(), s.params()).mul(&aa),
    }
}

/// `c1·ab⊗1 + c2·1⊗ab − c3·twist`.
fn algebra_operator(a: &HomAlgebra, c: [&Scalar; 3], twist: Twist) -> Result<Matrix, BuildError> {
    let p = a.params();
    for s in c {
        check_param("coefficient", s, p)?;
    }
    let id = Matrix::identity(a.dim(), p);
    let u = a.unit_column();
    let mu = a.mult_matrix();
    let left = id.kron(&u)?.mul(mu)?;
    let right = u.kron(&id)?.mul(mu)?;
    let t = twist_matrix(a, twist)?;
    Ok(left.scale(c[0])?.add(&right.scale(c[1])?)?.sub(&t.scale(c[2])?)?)
}

/// `c1·ε(a)b₁⊗b₂ + c2·ε(b)a₁⊗a₂ − c3·twist`.
fn coalgebra_operator(co: &HomCoalgebra, c: [&Scalar; 3], twist: Twist) -> Result<Matrix, BuildError> {
    let p = co.params();
    for s in c {
        check_param("coefficient", s, p)?;
    }
    let id = Matrix::identity(co.dim(), p);
    let eps = co.counit_row();
    let delta = co.comult_matrix();
    let left = delta.mul(&eps.kron(&id)?)?;
    let right = delta.mul(&id.kron(&eps)?)?;
    let t = twist_matrix(co, twist)?;
    Ok(left.scale(c[0])?.add(&right.scale(c[1])?)?.sub(&t.scale(c[2])?)?)
}

fn operator(
    matrix: Matrix,
    construction: Construction,
    source: &dyn Twisted,
    lambda: &Scalar,
    nu: &Scalar,
) -> SolutionOperator {
    SolutionOperator {
        matrix,
        construction,
        lambda: lambda.clone(),
        nu: nu.clone(),
        source: source.name().to_string(),
        dim: source.dim(),
        warnings: Vec::new(),
    }
}

pub fn algebra_solution(
    a: &Validated<HomAlgebra>,
    variant: AlgebraVariant,
    lambda: &Scalar,
    nu: &Scalar,
) -> Result<SolutionOperator, BuildError> {
    let (c3, construction) = match variant {
        AlgebraVariant::Thm21 => (lambda, Construction::Alg21),
        AlgebraVariant::Thm24 => (nu, Construction::Alg24),
    };
    let m = algebra_operator(a, [lambda, nu, c3], Twist::Straight)?;
    Ok(operator(m, construction, &**a, lambda, nu))
}

/// The closed-form inverse; requires `α² = id` and monomial `λ`, `ν`.
pub fn algebra_solution_inverse(
    a: &Validated<HomAlgebra>,
    variant: AlgebraInverseVariant,
    lambda: &Scalar,
    nu: &Scalar,
) -> Result<SolutionOperator, BuildError> {
    if !a.alpha_is_involutive() {
        return Err(BuildError::NotInvolutive);
    }
    algebra_inverse_formula(a, variant, lambda, nu)
}

/// The inverse formula without the involutivity check.
pub fn algebra_inverse_formula(
    a: &Validated<HomAlgebra>,
    variant: AlgebraInverseVariant,
    lambda: &Scalar,
    nu: &Scalar,
) -> Result<SolutionOperator, BuildError> {
    let inv_l = invert("λ", lambda)?;
    let inv_n = invert("ν", nu)?;
    let (c3, construction) = match variant {
        AlgebraInverseVariant::Cor22 => (&inv_l, Construction::AlgInv22),
        AlgebraInverseVariant::Thm24Inv => (&inv_n, Construction::AlgInv24),
    };
    let m = algebra_operator(a, [&inv_n, &inv_l, c3], Twist::Straight)?;
    Ok(operator(m, construction, &**a, lambda, nu))
}

pub fn coalgebra_solution(
    c: &Validated<HomCoalgebra>,
    variant: CoalgebraVariant,
    lambda: &Scalar,
    nu: &Scalar,
) -> Result<SolutionOperator, BuildError> {
    let (c3, construction) = match variant {
        CoalgebraVariant::Thm31 => (lambda, Construction::Coalg31),
        CoalgebraVariant::Thm34 => (nu, Construction::Coalg34),
    };
    let m = coalgebra_operator(c, [lambda, nu, c3], Twist::Straight)?;
    Ok(operator(m, construction, &**c, lambda, nu))
}

/// The closed-form inverse; requires `α² = id` and monomial `λ`, `ν`.
pub fn coalgebra_solution_inverse(
    c: &Validated<HomCoalgebra>,
    variant: CoalgebraInverseVariant,
    lambda: &Scalar,
    nu: &Scalar,
) -> Result<SolutionOperator, BuildError> {
    if !c.alpha_is_involutive() {
        return Err(BuildError::NotInvolutive);
    }
    coalgebra_inverse_formula(c, variant, lambda, nu)
}

/// The inverse formula without the involutivity check.
pub fn coalgebra_inverse_formula(
    c: &Validated<HomCoalgebra>,
    variant: CoalgebraInverseVariant,
    lambda: &Scalar,
    nu: &Scalar,
) -> Result<SolutionOperator, BuildError> {
    let inv_l = invert("λ", lambda)?;
    let inv_n = invert("ν", nu)?;
    let (c3, construction) = match variant {
        CoalgebraInverseVariant::Cor32 => (&inv_l, Construction::CoalgInv32),
        CoalgebraInverseVariant::Thm34Inv => (&inv_n, Construction::CoalgInv34),
    };
    let m = coalgebra_operator(c, [&inv_n, &inv_l, c3], Twist::Straight)?;
    Ok(operator(m, construction, &**c, lambda, nu))
}

fn lie_checks(l: &HomLieAlgebra, u: &[Scalar]) -> Result<Vec<String>, BuildError> {
    if !is_central(l, u)? {
        return Err(BuildError::NotCentral);
    }
    let mut warnings = Vec::new();
    if !is_alpha_invariant(l, u)? {
        warnings.push("u not α-invariant: α(u) ≠ u, so compatibility with α⊗α is not guaranteed".to_string());
    }
    Ok(warnings)
}

/// `B(x⊗y) = λ[x,y]⊗u − ν α(y)⊗α(x)` for central `u`.
pub fn lie_solution(
    l: &Validated<HomLieAlgebra>,
    u: &[Scalar],
    lambda: &Scalar,
    nu: &Scalar,
) -> Result<SolutionOperator, BuildError> {
    let warnings = lie_checks(l, u)?;
    let p = l.params();
    check_param("λ", lambda, p)?;
    check_param("ν", nu, p)?;
    let id = Matrix::identity(l.dim(), p);
    let ucol = Matrix::column(u, p);
    let bracket_term = id.kron(&ucol)?.mul(l.bracket_matrix())?;
    let m = bracket_term
        .scale(lambda)?
        .sub(&twist_matrix(&**l, Twist::Flipped)?.scale(nu)?)?;
    let mut op = operator(m, Construction::Lie41, &**l, lambda, nu);
    op.warnings = warnings;
    Ok(op)
}

/// `B⁻¹(x⊗y) = λ u⊗[x,y] − α(y)⊗α(x)`, inverting [`lie_solution`] at `ν = 1`;
/// requires `α² = id`.
pub fn lie_solution_inverse(
    l: &Validated<HomLieAlgebra>,
    u: &[Scalar],
    lambda: &Scalar,
) -> Result<SolutionOperator, BuildError> {
    if !l.alpha_is_involutive() {
        return Err(BuildError::NotInvolutive);
    }
    lie_inverse_formula(l, u, lambda)
}

/// The inverse formula without the involutivity check.
pub fn lie_inverse_formula(
    l: &Validated<HomLieAlgebra>,
    u: &[Scalar],
    lambda: &Scalar,
) -> Result<SolutionOperator, BuildError> {
    let warnings = lie_checks(l, u)?;
    let p = l.params();
    check_param("λ", lambda, p)?;
    let id = Matrix::identity(l.dim(), p);
    let ucol = Matrix::column(u, p);
    let bracket_term = ucol.kron(&id)?.mul(l.bracket_matrix())?;
    let m = bracket_term
        .scale(lambda)?
        .sub(&twist_matrix(&**l, Twist::Flipped)?)?;
    let mut op = operator(m, Construction::LieInv42, &**l, lambda, &Scalar::one(p));
    op.warnings = warnings;
    Ok(op)
}

/// An element of `L ⊗ L` as a coordinate vector of length `dim²`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RMatrix {
    pub tensor: Vec<Scalar>,
    pub dim: usize,
    pub source: String,
    /// `(m, n)` when built by [`chybe_r`].
    pub powers: Option<(i64, i64)>,
}

impl RMatrix {
    /// Wraps an arbitrary tensor over `l`.
    pub fn from_tensor(l: &HomLieAlgebra, tensor: Vec<Scalar>) -> Result<Self, BuildError> {
        check_vector("r", &tensor, l.dim() * l.dim(), l.params())?;
        Ok(RMatrix {
            tensor,
            dim: l.dim(),
            source: l.name().to_string(),
            powers: None,
        })
    }

    pub fn column(&self) -> Matrix {
        let p = self.tensor[0].params().clone();
        Matrix::column(&self.tensor, &p)
    }
}

/// `α^k`, using `alpha_inv` for negative `k`.
pub fn alpha_power(alpha: &Matrix, k: i64, alpha_inv: Option<&Matrix>) -> Result<Matrix, BuildError> {
    if k >= 0 {
        return Ok(alpha.pow(k as u32)?);
    }
    let inv = alpha_inv.ok_or(BuildError::MissingAlphaInverse)?;
    if inv.shape() != alpha.shape() || !alpha.mul(inv)?.is_identity() || !inv.mul(alpha)?.is_identity() {
        return Err(BuildError::BadAlphaInverse);
    }
    Ok(inv.pow(k.unsigned_abs() as u32)?)
}

/// `r = α^m([x,y]) ⊗ α^n(u)`. Checks that both `u` and `α^n(u)` are central.
pub fn chybe_r(
    l: &Validated<HomLieAlgebra>,
    x: &[Scalar],
    y: &[Scalar],
    u: &[Scalar],
    m: i64,
    n: i64,
    alpha_inv: Option<&Matrix>,
) -> Result<RMatrix, BuildError> {
    let p = l.params();
    if !is_central(l, u)? {
        return Err(BuildError::NotCentral);
    }
    let am = alpha_power(l.alpha(), m, alpha_inv)?;
    let an = alpha_power(l.alpha(), n, alpha_inv)?;
    let an_u = an.mul(&Matrix::column(u, p))?;
    if !is_central(l, &an_u.col_vec(0))? {
        return Err(BuildError::PowerNotCentral(n));
    }
    let xy = Matrix::column(&l.bracket_of(x, y)?, p);
    let r = am.mul(&xy)?.kron(&an_u)?;
    Ok(RMatrix {
        tensor: r.col_vec(0),
        dim: l.dim(),
        source: l.name().to_string(),
        powers: Some((m, n)),
    })
}

/// The three operators of a Hom-Yang-Baxter system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SystemTriple {
    pub w: SolutionOperator,
    pub z: SolutionOperator,
    pub x: SolutionOperator,
}

pub fn system_algebra(a: &Validated<HomAlgebra>, lambda: &Scalar, nu: &Scalar) -> Result<SystemTriple, BuildError> {
    let one = Scalar::one(a.params());
    let build = |c1: &Scalar, c2: &Scalar, construction| -> Result<SolutionOperator, BuildError> {
        let m = algebra_operator(a, [c1, c2, &one], Twist::Flipped)?;
        Ok(operator(m, construction, &**a, lambda, nu))
    };
    Ok(SystemTriple {
        w: build(&one, lambda, Construction::SysW52)?,
        z: build(nu, &one, Construction::SysZ52)?,
        x: build(&one, &one, Construction::SysX52)?,
    })
}

pub fn system_coalgebra(c: &Validated<HomCoalgebra>, lambda: &Scalar, nu: &Scalar) -> Result<SystemTriple, BuildError> {
    let one = Scalar::one(c.params());
    let build = |c1: &Scalar, c2: &Scalar, construction| -> Result<SolutionOperator, BuildError> {
        let m = coalgebra_operator(c, [c1, c2, &one], Twist::Flipped)?;
        Ok(operator(m, construction, &**c, lambda, nu))
    };
    Ok(SystemTriple {
        w: build(lambda, &one, Construction::SysW53)?,
        z: build(&one, nu, Construction::SysZ53)?,
        x: build(&one, &one, Construction::SysX53)?,
    })
}
