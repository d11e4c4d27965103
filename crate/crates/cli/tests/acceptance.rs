//! One PASS/FAIL line per acceptance criterion. Exits nonzero if any fails.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::process::Command;

use homyb::constructions::{algebra_inverse_formula, chybe_r, RMatrix};
use homyb::tensor::flip;
use homyb::{
    catalog, catalog_get, compare_table, parse_scalar, verify_entry, AlgebraInverseVariant, CatalogEntry,
    EntryReport, HomStructure, Matrix, ParamSet, Rational, Scalar, Twisted, Validated, Verifier,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn entry(id: &str) -> CatalogEntry {
    catalog_get(id).expect("catalog id")
}

fn report(id: &str) -> EntryReport {
    verify_entry(&entry(id)).expect("entry verifies")
}

fn holds(r: &EntryReport, check: &str) -> Result<bool, String> {
    r.check(check)
        .map(|c| c.report.holds)
        .ok_or_else(|| format!("{}: no check {check:?}", r.id))
}

fn require(r: &EntryReport, checks: &[&str]) -> Result<(), String> {
    for c in checks {
        ensure(holds(r, c)?, format!("{}: {c} fails", r.id))?;
    }
    Ok(())
}

fn mismatches(id: &str) -> Vec<String> {
    compare_table(&entry(id))
        .unwrap()
        .into_iter()
        .filter(|r| !r.matches)
        .map(|r| r.label)
        .collect()
}

fn criterion1() -> Outcome {
    let r = report("ex2.3");
    require(&r, &["axioms", "α-compat thm2.1", "HYBE thm2.1"])?;
    let e = entry("ex2.3");
    let rows = compare_table(&e).unwrap();
    ensure(rows.len() == 9, format!("{} table rows", rows.len()))?;
    let bad = mismatches("ex2.3");
    ensure(bad.is_empty(), format!("mismatched rows {bad:?}"))?;
    let corner = rows.iter().find(|r| r.label == "B(x3⊗x3)").unwrap();
    let want = parse_scalar("-lam*l^2", &e.build_params()).unwrap();
    ensure(corner.computed[8] == want, "B(x3⊗x3) ≠ −λl² x3⊗x3")?;
    Ok("ex2.3: α-compat and HYBE hold symbolically; 9/9 table rows match".into())
}

fn criterion2() -> Outcome {
    let r = report("ex2.5");
    require(&r, &["axioms", "HYBE thm2.4"])?;
    let documented = ["B(1⊗y)", "B(x⊗x)", "B(x⊗y)", "B(y⊗x)", "B(y⊗y)"];
    let bad = mismatches("ex2.5");
    let extra: Vec<_> = bad.iter().filter(|l| !documented.contains(&l.as_str())).collect();
    let missing: Vec<_> = documented.iter().filter(|l| !bad.iter().any(|b| b == *l)).collect();
    ensure(
        extra.is_empty() && missing.is_empty(),
        format!("mismatches {bad:?}; beyond the documented set: {extra:?}; documented but matching: {missing:?}"),
    )?;
    Ok("ex2.5: axioms and HYBE hold; mismatches are exactly B(1⊗y) and the −k² family".into())
}

fn criterion3() -> Outcome {
    let r33 = report("ex3.3");
    require(&r33, &["axioms", "HYBE thm3.1"])?;
    let r35 = report("ex3.5");
    require(&r35, &["axioms", "HYBE thm3.4"])?;
    let bad = mismatches("ex3.3");
    ensure(!bad.is_empty(), "no ex3.3 mismatches reported")?;
    ensure(!bad.contains(&"B(a⊗a)".to_string()), "B(a⊗a) mismatches")?;
    ensure(
        r33.notes.iter().any(|n| n.starts_with("table mismatch")),
        "ex3.3 mismatches missing from notes",
    )?;
    Ok(format!("ex3.3 and ex3.5 pass axioms and HYBE; ex3.3 mismatches {bad:?}; B(a⊗a) matches"))
}

fn criterion4() -> Outcome {
    let r23 = report("ex2.3");
    require(&r23, &["inverse thm2.1/cor2.2 (l := 1)", "inverse thm2.4/thm2.4-inv (l := 1)"])?;
    let r33 = report("ex3.3");
    require(&r33, &["inverse thm3.1/cor3.2", "inverse thm3.4/thm3.4-inv"])?;

    let e = entry("ex2.3");
    let HomStructure::Algebra(a) = e.embedded().unwrap() else { unreachable!() };
    let va = Validated::assume_valid(a);
    let v = Verifier::new(usize::MAX);
    let one = Rational::from_integer(1.into());
    let minus_one = -one.clone();
    for (fwd, inv) in [
        (homyb::AlgebraVariant::Thm21, AlgebraInverseVariant::Cor22),
        (homyb::AlgebraVariant::Thm24, AlgebraInverseVariant::Thm24Inv),
    ] {
        let b = homyb::constructions::algebra_solution(&va, fwd, &e.lambda(), &e.nu()).unwrap();
        let bi = algebra_inverse_formula(&va, inv, &e.lambda(), &e.nu()).unwrap();
        let rep = v.inverse_holds(&b.matrix, &bi.matrix).unwrap();
        ensure(!rep.holds, format!("{} inverse holds at symbolic l", bi.construction))?;
        let all: Vec<_> = rep.parts.iter().flat_map(|p| p.witnesses.iter()).collect();
        for w in all {
            let at1 = w.residual.substitute("l", &one).unwrap();
            let atm1 = w.residual.substitute("l", &minus_one).unwrap();
            ensure(at1.is_zero() && atm1.is_zero(), format!("residual {} not divisible by l²−1", w.residual))?;
        }
    }

    let r43 = report("ex4.3");
    let lie_inverse = holds(&r43, "inverse thm4.1/cor4.2 (ν = 1)")?;
    ensure(
        lie_inverse,
        "ex4.3 as-is: the thm4.1 (ν = 1) / cor4.2 pair is not inverse; B·B⁻¹ − id has entries ±2λ (α(e3) = −e3)",
    )?;
    Ok("involutive inverses hold; symbolic-l residuals are all divisible by l²−1".into())
}

fn criterion5() -> Outcome {
    let r = report("ex4.3");
    let bad = mismatches("ex4.3");
    ensure(bad.is_empty(), format!("table mismatches {bad:?}"))?;
    let mut failures = Vec::new();
    for (check, what) in [
        ("HYBE thm4.1", "B fails HYBE (residual ±2λ²ν)"),
        ("inverse thm4.1/cor4.2 (ν = 1)", "the pair is not inverse"),
        ("HYBE cor4.2", "B⁻¹ fails HYBE"),
    ] {
        if !holds(&r, check)? {
            failures.push(what);
        }
    }
    ensure(
        failures.is_empty(),
        format!(
            "9/9 table rows match, but {} (u = e3 is not α-invariant)",
            failures.join("; ")
        ),
    )?;
    Ok("ex4.3: HYBE, inverse pair and B⁻¹ HYBE hold; 9/9 rows match".into())
}

fn criterion6() -> Outcome {
    let e = entry("ex4.3");
    let HomStructure::Lie(l) = e.embedded().unwrap() else { unreachable!() };
    let p = e.build_params();
    let u = e.embedded_u().unwrap().unwrap();
    let vl = Validated::assume_valid(l.clone());
    let v = Verifier::default();
    let basis = |i: usize| -> Vec<Scalar> { (0..3).map(|k| Scalar::from_int(&p, (k == i) as i64)).collect() };
    let alpha_inv = l.alpha().clone();
    let grid: Vec<(i64, i64)> = [0, 1, 2]
        .iter()
        .flat_map(|&m| [0, 1, 2].map(|n| (m, n)))
        .chain([-1, -2].iter().flat_map(|&m| [-1, -2].map(|n| (m, n))))
        .collect();
    let mut count = 0;
    for (m, n) in &grid {
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            let r = chybe_r(&vl, &basis(i), &basis(j), &u, *m, *n, Some(&alpha_inv)).map_err(|e| e.to_string())?;
            let rep = v.chybe_holds(&r, &l).unwrap();
            ensure(rep.holds, format!("CHYBE fails at (m, n) = ({m}, {n}), pair ({i}, {j})"))?;
            count += 1;
        }
    }
    let mut t = vec![Scalar::zero(&p); 9];
    t[1] = Scalar::one(&p);
    let control = v.chybe_holds(&RMatrix::from_tensor(&l, t).unwrap(), &l).unwrap();
    ensure(!control.holds, "control r = e1⊗e2 passes")?;
    let w = &control.witnesses;
    ensure(
        w.len() == 1 && w[0].tuple == Some(vec![0, 0, 1]) && w[0].residual == Scalar::from_int(&p, -1),
        format!("control witnesses {w:?}"),
    )?;
    Ok(format!("{count} r-matrices pass CHYBE; control fails with −e1⊗e1⊗e2"))
}

fn criterion7() -> Outcome {
    for (id, check) in [
        ("ex2.3", "system thm5.2"),
        ("ex2.5", "system thm5.2"),
        ("ex3.3", "system thm5.3"),
        ("ex3.5", "system thm5.3"),
    ] {
        let r = report(id);
        let c = r.check(check).ok_or(format!("{id}: no {check}"))?;
        ensure(c.report.holds, format!("{id}: {check} fails"))?;
        ensure(c.report.parts.len() == 4, format!("{id}: {} parts", c.report.parts.len()))?;
    }
    Ok("all four commutators vanish on ex2.3, ex2.5, ex3.3, ex3.5".into())
}

fn random_matrix(rng: &mut ChaCha8Rng, r: usize, c: usize, p: &ParamSet) -> Matrix {
    Matrix::from_fn(r, c, p, |_, _| common::random_scalar(rng, p))
}

fn criterion8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let p = ParamSet::new(["a", "b"]).unwrap();
    for _ in 0..200 {
        let (x, y, z) = (
            common::random_scalar(&mut rng, &p),
            common::random_scalar(&mut rng, &p),
            common::random_scalar(&mut rng, &p),
        );
        ensure(&x + &y == &y + &x && &x * &y == &y * &x, "commutativity")?;
        ensure(&(&x * &y) * &z == &x * &(&y * &z), "associativity")?;
        ensure(&x * &(&y + &z) == &(&x * &y) + &(&x * &z), "distributivity")?;
        ensure((&(&x - &y) + &y) == x && (&x * &Scalar::one(&p)) == x, "identities")?;
        ensure(parse_scalar(&x.to_string(), &p).unwrap() == x, format!("round-trip of {x}"))?;
    }
    for _ in 0..20 {
        let a = random_matrix(&mut rng, 2, 2, &p);
        let b = random_matrix(&mut rng, 2, 1, &p);
        let c = random_matrix(&mut rng, 2, 2, &p);
        let d = random_matrix(&mut rng, 1, 2, &p);
        let lhs = a.kron(&b).unwrap().mul(&c.kron(&d).unwrap()).unwrap();
        let rhs = a.mul(&c).unwrap().kron(&b.mul(&d).unwrap()).unwrap();
        ensure(lhs == rhs, "kron mixed-product law")?;
    }
    for n in 1..=4 {
        for m in 1..=4 {
            ensure(flip(n, m, &p).mul(&flip(m, n, &p)).unwrap().is_identity(), "flip involution")?;
        }
    }
    let cases = common::verdicts_agree(&mut rng, 5)?;
    Ok(format!("ring laws, round-trip, kron, flip; {cases} verdicts agree at 5 points each"))
}

fn criterion9() -> Outcome {
    let e = entry("ex2.5-verbatim");
    let r = verify_entry(&e).unwrap();
    let axioms = &r.check("axioms").unwrap().report;
    let ha2 = axioms.find("HA2 hom-associativity").ok_or("no HA2 part")?;
    ensure(!ha2.holds, "HA2 holds")?;
    let t = ha2.witnesses[0].tuple.clone().unwrap_or_default();
    let names: Vec<&str> = t.iter().map(|&i| e.structure.basis()[i].as_str()).collect();
    ensure(names == ["g", "g", "x"], format!("first witness {names:?}"))?;
    let dir = std::env::temp_dir();
    let out = Command::new(env!("CARGO_BIN_EXE_homyb"))
        .current_dir(&dir)
        .args(["catalog", "verify-all"])
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.code() == Some(0), format!("verify-all exited {:?}", out.status.code()))?;
    Ok("HA2 fails at (g, g, x); catalog verify-all exits 0".into())
}

fn main() {
    let _ = catalog();
    let criteria: [Criterion; 9] = [
        ("thm2.1 table and HYBE (ex2.3)", criterion1),
        ("thm2.4 table and HYBE (ex2.5)", criterion2),
        ("thm3.1/thm3.4 tables and HYBE (ex3.3, ex3.5)", criterion3),
        ("inverse laws under involutive α", criterion4),
        ("thm4.1/cor4.2 (ex4.3)", criterion5),
        ("CHYBE for α-twisted r-matrices", criterion6),
        ("Hom-Yang-Baxter systems thm5.2/thm5.3", criterion7),
        ("property suites", criterion8),
        ("negative axiom control", criterion9),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(msg) => println!("criterion {}: PASS  {name}: {msg}", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {msg}", i + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
