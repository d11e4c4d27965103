#![allow(dead_code)]

use homyb::constructions::{algebra_inverse_formula, algebra_solution, coalgebra_solution, lie_solution};
use homyb::{
    catalog, AlgebraInverseVariant, AlgebraVariant, Assignment, CoalgebraVariant, HomStructure, Matrix, ParamSet,
    Rational, Scalar, Twisted, Validated, Verifier,
};
use rand::Rng;

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// A sparse Laurent polynomial with up to four terms and exponents in `-2..=2`.
pub fn random_scalar(rng: &mut impl Rng, params: &ParamSet) -> Scalar {
    let mut s = Scalar::zero(params);
    for _ in 0..rng.gen_range(0..=4) {
        let coeff = q(rng.gen_range(-9..=9), rng.gen_range(1..=5));
        let exps = (0..params.len()).map(|_| rng.gen_range(-2..=2)).collect();
        s = &s + &Scalar::monomial(params, coeff, exps);
    }
    s
}

/// A rational avoiding 0 and ±1, where the catalog's residual factors vanish.
pub fn generic_rational(rng: &mut impl Rng) -> Rational {
    loop {
        let v = q(rng.gen_range(-40..=40), rng.gen_range(1..=13));
        let a = v.clone() * v.clone();
        if a != q(0, 1) && a != q(1, 1) {
            return v;
        }
    }
}

pub fn random_point(rng: &mut impl Rng, params: &ParamSet) -> Assignment {
    params
        .names()
        .iter()
        .map(|n| (n.clone(), generic_rational(rng)))
        .collect()
}

pub type Runner = Box<dyn Fn(&dyn Fn(&Matrix) -> Matrix) -> bool>;

/// One operator-level check run both symbolically and at evaluated points.
pub struct VerdictCase {
    pub label: String,
    pub params: ParamSet,
    pub run: Runner,
}

fn case(label: String, params: ParamSet, b: Matrix, other: Matrix, kind: &'static str) -> VerdictCase {
    VerdictCase {
        label,
        params,
        run: Box::new(move |f| {
            let v = Verifier::default();
            let (b, other) = (f(&b), f(&other));
            match kind {
                "alpha" => v.commutes_with_alpha(&b, &other).unwrap().holds,
                "hybe" => v.hybe_holds(&b, &other).unwrap().holds,
                _ => v.inverse_holds(&b, &other).unwrap().holds,
            }
        }),
    }
}

/// α-compatibility, HYBE and inverse cases drawn from every valid catalog entry.
pub fn verdict_cases() -> Vec<VerdictCase> {
    let mut out = Vec::new();
    for e in catalog() {
        let Ok(s) = e.embedded() else { continue };
        if !s.validate(true).holds {
            continue;
        }
        let p = e.build_params();
        let b = e.build().unwrap();
        let alpha = s.alpha().clone();
        out.push(case(format!("{} α-compat", e.id), p.clone(), b.matrix.clone(), alpha.clone(), "alpha"));
        out.push(case(format!("{} HYBE", e.id), p.clone(), b.matrix.clone(), alpha.clone(), "hybe"));
        let (l, n) = (e.lambda(), e.nu());
        match &s {
            HomStructure::Algebra(a) => {
                let va = Validated::assume_valid(a.clone());
                let f = algebra_solution(&va, AlgebraVariant::Thm21, &l, &n).unwrap();
                let i = algebra_inverse_formula(&va, AlgebraInverseVariant::Cor22, &l, &n).unwrap();
                out.push(case(format!("{} inverse", e.id), p.clone(), f.matrix, i.matrix, "inverse"));
            }
            HomStructure::Coalgebra(c) => {
                let vc = Validated::assume_valid(c.clone());
                let b24 = coalgebra_solution(&vc, CoalgebraVariant::Thm34, &l, &n).unwrap();
                out.push(case(format!("{} HYBE thm3.4", e.id), p.clone(), b24.matrix, alpha.clone(), "hybe"));
            }
            HomStructure::Lie(lie) => {
                let u = e.embedded_u().unwrap().unwrap();
                let vl = Validated::assume_valid(lie.clone());
                let b1 = lie_solution(&vl, &u, &l, &Scalar::one(&p)).unwrap();
                out.push(case(format!("{} HYBE ν=1", e.id), p.clone(), b1.matrix, alpha.clone(), "hybe"));
            }
        }
    }
    out
}

/// Compares the symbolic verdict with verdicts at `points` random generic points.
pub fn verdicts_agree(rng: &mut impl Rng, points: usize) -> Result<usize, String> {
    let cases = verdict_cases();
    for c in &cases {
        let symbolic = (c.run)(&|m: &Matrix| m.clone());
        for _ in 0..points {
            let at = random_point(rng, &c.params);
            let evaluated = (c.run)(&|m: &Matrix| m.eval(&at).unwrap());
            if evaluated != symbolic {
                return Err(format!("{}: symbolic {symbolic}, at {at:?} {evaluated}", c.label));
            }
        }
    }
    Ok(cases.len())
}
