//! Exact coefficient ring: multivariate Laurent polynomials over the rationals.
//!
//! Every parameter of a construction (λ, ν, and whatever parameters a structure
//! carries) is an indeterminate of one [`ParamSet`]. A [`Scalar`] is a finite
//! map from integer exponent vectors, laid out in `ParamSet` order, to nonzero
//! rationals. Zero coefficients are never stored, so equality is plain
//! term-map equality.
//!
//! Inverses exist only for monomials, which is all the inverse constructions
//! ever need (they divide by λ, ν and products of those).

mod parse;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use parse::{identifiers, parse_scalar, ParseError, ParseErrorKind};

/// Exact rational number, always stored reduced with a positive denominator.
pub type Rational = num_rational::BigRational;

/// Values for parameters, keyed by parameter name.
pub type Assignment = BTreeMap<String, Rational>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("parameter set mismatch: {left:?} vs {right:?}")]
    ParamMismatch {
        left: Vec<String>,
        right: Vec<String>,
    },
    #[error("negative power of a non-monomial: {0}")]
    NonMonomialInverse(String),
    #[error("no value assigned to parameter `{0}`")]
    MissingAssignment(String),
    #[error("zero at negative exponent: parameter `{0}` is assigned 0")]
    ZeroAtNegativeExponent(String),
    #[error("invalid parameter name `{0}`")]
    InvalidParamName(String),
    #[error("duplicate parameter `{0}`")]
    DuplicateParam(String),
    #[error("unknown parameter `{0}`")]
    UnknownParam(String),
}

/// Returns true for names matching `[a-zA-Z_][a-zA-Z0-9_]*`.
pub fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Ordered set of parameter names. The order fixes the exponent-vector layout.
#[derive(Clone)]
pub struct ParamSet(Arc<[String]>);

impl ParamSet {
    pub fn new<I, S>(names: I) -> Result<Self, ScalarError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut out: Vec<String> = Vec::new();
        for name in names {
            let name = name.into();
            if !is_identifier(&name) {
                return Err(ScalarError::InvalidParamName(name));
            }
            if out.contains(&name) {
                return Err(ScalarError::DuplicateParam(name));
            }
            out.push(name);
        }
        Ok(ParamSet(out.into()))
    }

    pub fn empty() -> Self {
        ParamSet(Arc::from(Vec::<String>::new()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    /// Appends the names not already present, keeping the existing order.
    pub fn extended<I, S>(&self, names: I) -> Result<Self, ScalarError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut all: Vec<String> = self.0.to_vec();
        for name in names {
            let name = name.into();
            if !all.contains(&name) {
                all.push(name);
            }
        }
        ParamSet::new(all)
    }

    fn check_same(&self, other: &ParamSet) -> Result<(), ScalarError> {
        if self == other {
            Ok(())
        } else {
            Err(ScalarError::ParamMismatch {
                left: self.0.to_vec(),
                right: other.0.to_vec(),
            })
        }
    }
}

impl PartialEq for ParamSet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for ParamSet {}

impl fmt::Debug for ParamSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

type Exponents = Box<[i32]>;

/// Laurent polynomial with rational coefficients over a [`ParamSet`].
#[derive(Clone, PartialEq, Eq)]
pub struct Scalar {
    params: ParamSet,
    terms: BTreeMap<Exponents, Rational>,
}

impl Scalar {
    pub fn zero(params: &ParamSet) -> Self {
        Scalar {
            params: params.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(params: &ParamSet) -> Self {
        Self::constant(params, Rational::one())
    }

    pub fn constant(params: &ParamSet, value: Rational) -> Self {
        Self::monomial(params, value, vec![0; params.len()])
    }

    pub fn from_int(params: &ParamSet, value: i64) -> Self {
        Self::constant(params, Rational::from_integer(BigInt::from(value)))
    }

    /// The indeterminate named `name`.
    pub fn param(params: &ParamSet, name: &str) -> Result<Self, ScalarError> {
        let idx = params
            .index_of(name)
            .ok_or_else(|| ScalarError::UnknownParam(name.to_string()))?;
        let mut exps = vec![0; params.len()];
        exps[idx] = 1;
        Ok(Self::monomial(params, Rational::one(), exps))
    }

    /// `coeff · Π params[i]^exps[i]`.
    ///
    /// Panics if `exps` does not have one entry per parameter.
    pub fn monomial(params: &ParamSet, coeff: Rational, exps: Vec<i32>) -> Self {
        assert_eq!(exps.len(), params.len(), "exponent vector length");
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exps.into_boxed_slice(), coeff);
        }
        Scalar {
            params: params.clone(),
            terms,
        }
    }

    pub fn params(&self) -> &ParamSet {
        &self.params
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .all(|(e, c)| c.is_one() && e.iter().all(|&x| x == 0))
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// The value if this is a constant (no parameter occurs).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                e.iter().all(|&x| x == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending lexicographic order of exponent vectors.
    pub fn terms(&self) -> impl Iterator<Item = (&[i32], &Rational)> {
        self.terms.iter().map(|(e, c)| (&e[..], c))
    }

    pub fn checked_add(&self, rhs: &Scalar) -> Result<Scalar, ScalarError> {
        self.params.check_same(&rhs.params)?;
        let mut out = self.clone();
        out.add_assign_unchecked(rhs, false);
        Ok(out)
    }

    pub fn checked_sub(&self, rhs: &Scalar) -> Result<Scalar, ScalarError> {
        self.params.check_same(&rhs.params)?;
        let mut out = self.clone();
        out.add_assign_unchecked(rhs, true);
        Ok(out)
    }

    pub fn checked_mul(&self, rhs: &Scalar) -> Result<Scalar, ScalarError> {
        self.params.check_same(&rhs.params)?;
        Ok(self.mul_unchecked(rhs))
    }

    fn add_assign_unchecked(&mut self, rhs: &Scalar, negate: bool) {
        for (e, c) in &rhs.terms {
            let c = if negate { -c } else { c.clone() };
            add_term(&mut self.terms, e.clone(), c);
        }
    }

    fn mul_unchecked(&self, rhs: &Scalar) -> Scalar {
        let mut terms = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Exponents = ea.iter().zip(eb.iter()).map(|(a, b)| a + b).collect();
                add_term(&mut terms, e, ca * cb);
            }
        }
        Scalar {
            params: self.params.clone(),
            terms,
        }
    }

    /// `self += a * b`, the inner step of every matrix product.
    pub fn add_product(&mut self, a: &Scalar, b: &Scalar) {
        debug_assert!(self.params == a.params && a.params == b.params);
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e: Exponents = ea.iter().zip(eb.iter()).map(|(x, y)| x + y).collect();
                add_term(&mut self.terms, e, ca * cb);
            }
        }
    }

    pub fn scale(&self, factor: &Rational) -> Scalar {
        if factor.is_zero() {
            return Scalar::zero(&self.params);
        }
        Scalar {
            params: self.params.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c * factor))
                .collect(),
        }
    }

    /// Integer power; negative exponents require a monomial.
    pub fn pow(&self, exp: i64) -> Result<Scalar, ScalarError> {
        if exp < 0 {
            let inv = self.inverse()?;
            return inv.pow(-exp);
        }
        let mut result = Scalar::one(&self.params);
        let mut base = self.clone();
        let mut e = exp as u64;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        Ok(result)
    }

    /// Laurent inverse of a monomial.
    pub fn inverse(&self) -> Result<Scalar, ScalarError> {
        if !self.is_monomial() {
            return Err(ScalarError::NonMonomialInverse(self.to_string()));
        }
        let (e, c) = self.terms.iter().next().unwrap();
        let exps: Vec<i32> = e.iter().map(|x| -x).collect();
        Ok(Scalar::monomial(&self.params, c.recip(), exps))
    }

    /// Exact value at an assignment covering every parameter that occurs.
    pub fn eval(&self, assignment: &Assignment) -> Result<Rational, ScalarError> {
        let values = self.lookup(assignment)?;
        let mut total = Rational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (i, &x) in e.iter().enumerate() {
                if x != 0 {
                    term *= values[i].as_ref().unwrap().pow(x);
                }
            }
            total += term;
        }
        Ok(total)
    }

    fn lookup<'a>(&self, assignment: &'a Assignment) -> Result<Vec<Option<&'a Rational>>, ScalarError> {
        let names = self.params.names();
        let mut values = vec![None; names.len()];
        for e in self.terms.keys() {
            for (i, &x) in e.iter().enumerate() {
                if x == 0 || values[i].is_some() {
                    continue;
                }
                let v = assignment
                    .get(&names[i])
                    .ok_or_else(|| ScalarError::MissingAssignment(names[i].clone()))?;
                values[i] = Some(v);
            }
        }
        for e in self.terms.keys() {
            for (i, &x) in e.iter().enumerate() {
                if x < 0 && values[i].is_some_and(|v| v.is_zero()) {
                    return Err(ScalarError::ZeroAtNegativeExponent(names[i].clone()));
                }
            }
        }
        Ok(values)
    }

    /// Evaluates into the empty parameter set (a plain rational, as a Scalar).
    pub fn eval_scalar(&self, assignment: &Assignment) -> Result<Scalar, ScalarError> {
        Ok(Scalar::constant(&ParamSet::empty(), self.eval(assignment)?))
    }

    /// Substitutes a value for a single parameter, keeping the parameter set.
    pub fn substitute(&self, name: &str, value: &Rational) -> Result<Scalar, ScalarError> {
        let idx = self
            .params
            .index_of(name)
            .ok_or_else(|| ScalarError::UnknownParam(name.to_string()))?;
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let x = e[idx];
            if x < 0 && value.is_zero() {
                return Err(ScalarError::ZeroAtNegativeExponent(name.to_string()));
            }
            let coeff = if x == 0 { c.clone() } else { c * value.pow(x) };
            let mut e = e.clone();
            e[idx] = 0;
            add_term(&mut terms, e, coeff);
        }
        Ok(Scalar {
            params: self.params.clone(),
            terms,
        })
    }

    /// Re-expresses this scalar over a superset of its parameters.
    pub fn embed(&self, target: &ParamSet) -> Result<Scalar, ScalarError> {
        if self.params == *target {
            return Ok(self.clone());
        }
        let map: Vec<usize> = self
            .params
            .names()
            .iter()
            .map(|n| target.index_of(n).ok_or_else(|| ScalarError::UnknownParam(n.clone())))
            .collect::<Result<_, _>>()?;
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut out = vec![0; target.len()];
                for (i, &x) in e.iter().enumerate() {
                    out[map[i]] = x;
                }
                (out.into_boxed_slice(), c.clone())
            })
            .collect();
        Ok(Scalar {
            params: target.clone(),
            terms,
        })
    }
}

fn add_term(terms: &mut BTreeMap<Exponents, Rational>, e: Exponents, c: Rational) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match terms.entry(e) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

// Operator impls panic on a parameter-set mismatch; use the `checked_*`
// methods when the operands come from different sources.

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.checked_add(rhs).expect("Scalar + Scalar")
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.checked_sub(rhs).expect("Scalar - Scalar")
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.checked_mul(rhs).expect("Scalar * Scalar")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            params: self.params.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

/// Prints terms in ascending lexicographic exponent order, e.g. `-1/2*k^-1 + 3`.
/// The output re-parses to an equal scalar.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let names = self.params.names();
        for (k, (e, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let factors: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x != 0)
                .map(|(i, &x)| {
                    if x == 1 {
                        names[i].clone()
                    } else {
                        format!("{}^{}", names[i], x)
                    }
                })
                .collect();
            if factors.is_empty() {
                write!(f, "{}", abs)?;
            } else if abs.is_one() {
                f.write_str(&factors.join("*"))?;
            } else {
                write!(f, "{}*{}", abs, factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({})", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    fn ps(names: &[&str]) -> ParamSet {
        ParamSet::new(names.iter().copied()).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let p = ps(&["lam", "nu"]);
        let lam = Scalar::param(&p, "lam").unwrap();
        let nu = Scalar::param(&p, "nu").unwrap();
        let lhs = &(&lam + &nu) * &(&lam - &nu);
        let rhs = &lam.pow(2).unwrap() - &nu.pow(2).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.num_terms(), 2);
    }

    #[test]
    fn monomial_inverse() {
        let p = ps(&["l"]);
        let l = Scalar::param(&p, "l").unwrap();
        let inv2 = l.pow(-2).unwrap();
        assert_eq!(inv2.terms().collect::<Vec<_>>(), vec![(&[-2][..], &q(1, 1))]);
        assert!((&inv2 * &l.pow(2).unwrap()).is_one());
    }

    #[test]
    fn two_term_laurent_sum() {
        let p = ps(&["lam", "nu"]);
        let lam = Scalar::param(&p, "lam").unwrap();
        let nu = Scalar::param(&p, "nu").unwrap();
        let s = &(&lam * &nu.inverse().unwrap()) + &(&nu * &lam.inverse().unwrap());
        // Hand-built term map: lam^1 nu^-1 -> 1, lam^-1 nu^1 -> 1, in lex order.
        let terms: Vec<(Vec<i32>, Rational)> =
            s.terms().map(|(e, c)| (e.to_vec(), c.clone())).collect();
        assert_eq!(terms, vec![(vec![-1, 1], q(1, 1)), (vec![1, -1], q(1, 1))]);
    }

    #[test]
    fn negative_power_of_sum_is_rejected() {
        let p = ps(&["l"]);
        let s = &Scalar::param(&p, "l").unwrap() + &Scalar::one(&p);
        assert!(matches!(s.pow(-1), Err(ScalarError::NonMonomialInverse(_))));
        assert!(Scalar::zero(&p).inverse().is_err());
    }

    #[test]
    fn mismatched_params_are_rejected() {
        let a = Scalar::one(&ps(&["a"]));
        let b = Scalar::one(&ps(&["b"]));
        assert!(matches!(a.checked_add(&b), Err(ScalarError::ParamMismatch { .. })));
        assert!(a.checked_mul(&b).is_err());
    }

    #[test]
    fn eval_examples() {
        let p = ps(&["lam", "l"]);
        let s = parse_scalar("-lam*l^2", &p).unwrap();
        let mut a = Assignment::new();
        a.insert("lam".into(), q(1, 1));
        a.insert("l".into(), q(2, 1));
        assert_eq!(s.eval(&a).unwrap(), q(-4, 1));

        assert_eq!(Scalar::zero(&ParamSet::empty()).eval(&Assignment::new()).unwrap(), q(0, 1));

        let p = ps(&["lam", "nu"]);
        let s = parse_scalar("lam*nu^-1", &p).unwrap();
        let mut a = Assignment::new();
        a.insert("lam".into(), q(3, 1));
        a.insert("nu".into(), q(0, 1));
        assert_eq!(
            s.eval(&a),
            Err(ScalarError::ZeroAtNegativeExponent("nu".into()))
        );
        a.remove("nu");
        assert_eq!(s.eval(&a), Err(ScalarError::MissingAssignment("nu".into())));
    }

    #[test]
    fn eval_ignores_unused_parameters() {
        let p = ps(&["lam", "nu"]);
        let s = parse_scalar("3*lam", &p).unwrap();
        let mut a = Assignment::new();
        a.insert("lam".into(), q(1, 2));
        assert_eq!(s.eval(&a).unwrap(), q(3, 2));
    }

    #[test]
    fn substitute_keeps_other_parameters() {
        let p = ps(&["l", "lam"]);
        let s = parse_scalar("l^2*lam - lam + l^-1", &p).unwrap();
        let at_one = s.substitute("l", &q(1, 1)).unwrap();
        assert_eq!(at_one, Scalar::from_int(&p, 1));
        let at_two = s.substitute("l", &q(2, 1)).unwrap();
        assert_eq!(at_two, parse_scalar("3*lam + 1/2", &p).unwrap());
        assert!(s.substitute("l", &q(0, 1)).is_err());
    }

    #[test]
    fn embed_into_superset() {
        let small = ps(&["l"]);
        let big = ps(&["lam", "l"]);
        let s = parse_scalar("2*l^-1", &small).unwrap();
        assert_eq!(s.embed(&big).unwrap(), parse_scalar("2*l^-1", &big).unwrap());
        assert!(Scalar::one(&big).embed(&small).is_err());
    }

    #[test]
    fn display_format() {
        let p = ps(&["k"]);
        let s = parse_scalar("1/2*k^-1 + 3", &p).unwrap();
        assert_eq!(s.to_string(), "1/2*k^-1 + 3");
        assert_eq!(parse_scalar("-k^2 + k - 1", &p).unwrap().to_string(), "-1 + k - k^2");
        assert_eq!(Scalar::zero(&p).to_string(), "0");
    }

    #[test]
    fn param_set_validation() {
        assert!(ParamSet::new(["a", "a"]).is_err());
        assert!(ParamSet::new(["1a"]).is_err());
        assert!(ParamSet::new(["_x1", "Lam"]).is_ok());
        let p = ps(&["a"]).extended(["b", "a", "c"]).unwrap();
        assert_eq!(p.names(), &["a", "b", "c"]);
    }
}
