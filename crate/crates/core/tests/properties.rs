mod common;

use common::{q, verdicts_agree};
use homyb::tensor::flip;
use homyb::{parse_scalar, Assignment, Matrix, ParamSet, Rational, Scalar};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn params() -> ParamSet {
    ParamSet::new(["a", "b", "c"]).unwrap()
}

prop_compose! {
    fn rational()(n in -12i64..=12, d in 1i64..=7) -> Rational {
        q(n, d)
    }
}

prop_compose! {
    fn nonzero_rational()(n in prop_oneof![-12i64..=-1, 1i64..=12], d in 1i64..=7) -> Rational {
        q(n, d)
    }
}

prop_compose! {
    fn monomial()(c in nonzero_rational(), e in prop::collection::vec(-3i32..=3, 3)) -> Scalar {
        Scalar::monomial(&params(), c, e)
    }
}

prop_compose! {
    fn scalar()(terms in prop::collection::vec((rational(), prop::collection::vec(-3i32..=3, 3)), 0..5)) -> Scalar {
        let p = params();
        terms
            .into_iter()
            .fold(Scalar::zero(&p), |s, (c, e)| &s + &Scalar::monomial(&p, c, e))
    }
}

prop_compose! {
    fn point()(v in prop::collection::vec(nonzero_rational(), 3)) -> Assignment {
        params().names().iter().cloned().zip(v).collect()
    }
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(scalar(), rows * cols).prop_map(move |v| {
        let p = params();
        Matrix::from_fn(rows, cols, &p, |i, j| v[i * cols + j].clone())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(x in scalar(), y in scalar(), z in scalar()) {
        let zero = Scalar::zero(&params());
        let one = Scalar::one(&params());
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x + &zero, x.clone());
        prop_assert_eq!(&x * &one, x.clone());
        prop_assert_eq!(&(&x - &y) + &y, x.clone());
        prop_assert_eq!(&x + &(-&x), zero);
    }

    #[test]
    fn monomials_invert(m in monomial()) {
        let inv = m.inverse().unwrap();
        prop_assert!((&m * &inv).is_one());
    }

    #[test]
    fn eval_is_a_homomorphism(x in scalar(), y in scalar(), at in point()) {
        let (ex, ey) = (x.eval(&at).unwrap(), y.eval(&at).unwrap());
        prop_assert_eq!((&x + &y).eval(&at).unwrap(), &ex + &ey);
        prop_assert_eq!((&x * &y).eval(&at).unwrap(), ex * ey);
    }

    #[test]
    fn display_parses_back(x in scalar()) {
        let text = x.to_string();
        prop_assert_eq!(parse_scalar(&text, &params()).unwrap(), x);
    }

    #[test]
    fn kron_mixed_product(a in matrix(2, 2), b in matrix(2, 1), c in matrix(2, 2), d in matrix(1, 2)) {
        let lhs = a.kron(&b).unwrap().mul(&c.kron(&d).unwrap()).unwrap();
        let rhs = a.mul(&c).unwrap().kron(&b.mul(&d).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn flip_is_an_involution(n in 1usize..=4, m in 1usize..=4) {
        let p = params();
        let f = flip(n, m, &p).mul(&flip(m, n, &p)).unwrap();
        prop_assert!(f.is_identity());
    }

    #[test]
    fn flip_swaps_tensor_factors(a in matrix(2, 2), b in matrix(3, 3)) {
        let p = params();
        let lhs = flip(2, 3, &p).mul(&a.kron(&b).unwrap()).unwrap();
        let rhs = b.kron(&a).unwrap().mul(&flip(2, 3, &p)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn evaluation_commutes_with_products(a in matrix(2, 3), b in matrix(3, 2), at in point()) {
        let lhs = a.mul(&b).unwrap().eval(&at).unwrap();
        let rhs = a.eval(&at).unwrap().mul(&b.eval(&at).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn symbolic_and_evaluated_verdicts_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let n = verdicts_agree(&mut rng, 5).unwrap();
    assert!(n >= 15, "only {n} cases");
}
