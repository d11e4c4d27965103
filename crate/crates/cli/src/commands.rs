use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;
use std::str::FromStr;
use std::time::Instant;

use homyb::constructions::{
    algebra_inverse_formula, algebra_solution, chybe_r, coalgebra_inverse_formula, coalgebra_solution,
    lie_inverse_formula, lie_solution, system_algebra, system_coalgebra,
};
use homyb::scalar::identifiers;
use homyb::structures::{validate_hom_lie, Axioms};
use homyb::{
    catalog, catalog_get, catalog_verify_all, parse_scalar, reports_pass, AlgebraInverseVariant, AlgebraVariant,
    CoalgebraInverseVariant, CoalgebraVariant, Construction, HomStructure, Matrix, ParamSet, RMatrix, Scalar,
    SolutionOperator, StructureKind, SystemTriple, Twisted, Validated, VerificationReport, Verifier,
    DEFAULT_WITNESS_CAP,
};

use crate::files::{
    write_json, CatalogReportFile, EntryJson, Metadata, OperatorFile, ReportFile, StructureFile, FORMAT_VERSION,
};
use crate::{CatalogAction, CheckKind, CliError, ParamArgs, VerifyArgs, EXIT_FAILED, EXIT_OK};

fn io(e: std::io::Error) -> CliError {
    CliError::Input(format!("write failed: {e}"))
}

fn verdict(holds: bool) -> i32 {
    if holds {
        EXIT_OK
    } else {
        EXIT_FAILED
    }
}

/// A structure file with `λ`, `ν` and `u` parsed over a common parameter set.
struct Loaded {
    file: StructureFile,
    structure: HomStructure,
    params: ParamSet,
    lambda: Scalar,
    nu: Scalar,
    u: Option<Vec<Scalar>>,
}

fn split_list(text: &str) -> Vec<&str> {
    text.split(',').map(str::trim).collect()
}

fn parse_flag(flag: &str, text: &str, params: &ParamSet) -> Result<Scalar, CliError> {
    parse_scalar(text, params).map_err(|e| CliError::Input(format!("{flag}: {e}")))
}

fn parse_list(flag: &str, text: &str, params: &ParamSet) -> Result<Vec<Scalar>, CliError> {
    split_list(text)
        .into_iter()
        .enumerate()
        .map(|(i, t)| parse_flag(&format!("{flag}[{i}]"), t, params))
        .collect()
}

fn load(path: &Path, p: &ParamArgs, extra: &[String]) -> Result<Loaded, CliError> {
    let file = StructureFile::read(path)?;
    let base = file.to_structure()?;
    let mut names = Vec::new();
    let mut texts = vec![("--lambda", p.lambda.as_str()), ("--nu", p.nu.as_str())];
    if let Some(u) = &p.u {
        texts.extend(split_list(u).into_iter().map(|t| ("--u", t)));
    }
    for (flag, text) in texts {
        names.extend(identifiers(text).map_err(|e| CliError::Input(format!("{flag}: {e}")))?);
    }
    names.extend(extra.iter().cloned());
    let params = base.params().extended(names)?;
    let structure = base.embed(&params)?;
    Ok(Loaded {
        lambda: parse_flag("--lambda", &p.lambda, &params)?,
        nu: parse_flag("--nu", &p.nu, &params)?,
        u: p.u.as_deref().map(|u| parse_list("--u", u, &params)).transpose()?,
        file,
        structure,
        params,
    })
}

enum Built {
    Single(SolutionOperator),
    Triple(Box<SystemTriple>),
}

fn system_id(id: &str) -> Option<StructureKind> {
    match id.to_ascii_lowercase().as_str() {
        "thm5.2" => Some(StructureKind::Algebra),
        "thm5.3" => Some(StructureKind::Coalgebra),
        _ => None,
    }
}

fn kind_check(id: &str, want: StructureKind, l: &Loaded) -> Result<(), CliError> {
    let have = l.structure.kind();
    if have != want {
        return Err(CliError::Usage(format!(
            "construction {id} requires {}, but {} is {}",
            want.as_str(),
            l.file.name,
            have.as_str()
        )));
    }
    Ok(())
}

fn warn_invalid(l: &Loaded, err: &mut dyn Write) -> Result<(), CliError> {
    let report = l.structure.validate(true);
    if !report.holds {
        let failed: Vec<_> = report.failures().iter().map(|r| r.check.clone()).collect();
        writeln!(err, "warning: {} fails its axioms ({})", l.file.name, failed.join(", ")).map_err(io)?;
    }
    Ok(())
}

fn require_u(l: &Loaded, id: &str) -> Result<Vec<Scalar>, CliError> {
    l.u.clone()
        .ok_or_else(|| CliError::Usage(format!("--u is required for {id}")))
}

fn involution_warning(s: &dyn Twisted, c: Construction, err: &mut dyn Write) -> Result<(), CliError> {
    if c.is_inverse() && !s.alpha_is_involutive() {
        writeln!(
            err,
            "warning: α is not involutive; {c} is applied as a formula and need not invert its partner"
        )
        .map_err(io)?;
    }
    Ok(())
}

/// Builds a construction; inverse formulas are applied even when `α² ≠ id`.
fn construct(l: &Loaded, id: &str, nu_override: Option<&Scalar>, err: &mut dyn Write) -> Result<Built, CliError> {
    if let Some(kind) = system_id(id) {
        kind_check(id, kind, l)?;
        return Ok(Built::Triple(Box::new(match &l.structure {
            HomStructure::Algebra(a) => system_algebra(&Validated::assume_valid(a.clone()), &l.lambda, &l.nu)?,
            HomStructure::Coalgebra(c) => {
                system_coalgebra(&Validated::assume_valid(c.clone()), &l.lambda, &l.nu)?
            }
            HomStructure::Lie(_) => unreachable!(),
        })));
    }
    let c = Construction::from_str(id)?;
    kind_check(id, c.kind(), l)?;
    let (lam, nu) = (&l.lambda, nu_override.unwrap_or(&l.nu));
    use Construction::*;
    let op = match (&l.structure, c) {
        (HomStructure::Algebra(a), _) => {
            let a = Validated::assume_valid(a.clone());
            involution_warning(&*a, c, err)?;
            match c {
                Alg21 => algebra_solution(&a, AlgebraVariant::Thm21, lam, nu)?,
                Alg24 => algebra_solution(&a, AlgebraVariant::Thm24, lam, nu)?,
                AlgInv22 => algebra_inverse_formula(&a, AlgebraInverseVariant::Cor22, lam, nu)?,
                AlgInv24 => algebra_inverse_formula(&a, AlgebraInverseVariant::Thm24Inv, lam, nu)?,
                SysW52 | SysZ52 | SysX52 => {
                    let t = system_algebra(&a, lam, nu)?;
                    pick(t, c)
                }
                _ => unreachable!(),
            }
        }
        (HomStructure::Coalgebra(co), _) => {
            let co = Validated::assume_valid(co.clone());
            involution_warning(&*co, c, err)?;
            match c {
                Coalg31 => coalgebra_solution(&co, CoalgebraVariant::Thm31, lam, nu)?,
                Coalg34 => coalgebra_solution(&co, CoalgebraVariant::Thm34, lam, nu)?,
                CoalgInv32 => coalgebra_inverse_formula(&co, CoalgebraInverseVariant::Cor32, lam, nu)?,
                CoalgInv34 => coalgebra_inverse_formula(&co, CoalgebraInverseVariant::Thm34Inv, lam, nu)?,
                SysW53 | SysZ53 | SysX53 => {
                    let t = system_coalgebra(&co, lam, nu)?;
                    pick(t, c)
                }
                _ => unreachable!(),
            }
        }
        (HomStructure::Lie(lie), _) => {
            let lie = Validated::assume_valid(lie.clone());
            involution_warning(&*lie, c, err)?;
            let u = require_u(l, id)?;
            match c {
                Lie41 => lie_solution(&lie, &u, lam, nu)?,
                LieInv42 => lie_inverse_formula(&lie, &u, lam)?,
                _ => unreachable!(),
            }
        }
    };
    for w in &op.warnings {
        writeln!(err, "warning: {w}").map_err(io)?;
    }
    Ok(Built::Single(op))
}

fn pick(t: SystemTriple, c: Construction) -> SolutionOperator {
    match c {
        Construction::SysW52 | Construction::SysW53 => t.w,
        Construction::SysZ52 | Construction::SysZ53 => t.z,
        _ => t.x,
    }
}

fn metadata(l: &Loaded, construction: Option<String>, extra: &[(&str, String)]) -> Metadata {
    let mut parameters = BTreeMap::new();
    parameters.insert("lambda".to_string(), l.lambda.to_string());
    parameters.insert("nu".to_string(), l.nu.to_string());
    if let Some(u) = &l.u {
        let u: Vec<String> = u.iter().map(|s| s.to_string()).collect();
        parameters.insert("u".to_string(), u.join(","));
    }
    for (k, v) in extra {
        parameters.insert(k.to_string(), v.clone());
    }
    Metadata {
        construction,
        parameters,
        structure: l.file.name.clone(),
        typo_readings: l.file.notes.clone(),
    }
}

fn emit(
    report: &VerificationReport,
    meta: Metadata,
    json: Option<&Path>,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    if let Some(c) = &meta.construction {
        writeln!(out, "construction: {c}").map_err(io)?;
    }
    if !meta.parameters.is_empty() {
        let ps: Vec<String> = meta.parameters.iter().map(|(k, v)| format!("{k} = {v}")).collect();
        writeln!(out, "parameters: {}", ps.join(", ")).map_err(io)?;
    }
    writeln!(out, "structure: {}", meta.structure).map_err(io)?;
    for t in &meta.typo_readings {
        writeln!(out, "reading: {t}").map_err(io)?;
    }
    write!(out, "{report}").map_err(io)?;
    if let Some(path) = json {
        write_json(path, &ReportFile::new(report, meta))?;
    }
    Ok(verdict(report.holds))
}

pub fn axioms(path: &Path, require_multiplicative: bool, json: Option<&Path>, out: &mut dyn Write) -> Result<i32, CliError> {
    let file = StructureFile::read(path)?;
    let s = file.to_structure()?;
    let report = match &s {
        HomStructure::Algebra(a) => a.check_axioms(),
        HomStructure::Coalgebra(c) => c.check_axioms(),
        HomStructure::Lie(l) => validate_hom_lie(l, require_multiplicative),
    };
    let meta = Metadata {
        construction: None,
        parameters: BTreeMap::new(),
        structure: file.name.clone(),
        typo_readings: file.notes.clone(),
    };
    emit(&report, meta, json, out)
}

pub fn build(
    path: &Path,
    construction: &str,
    params: &ParamArgs,
    out_path: Option<&Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, CliError> {
    if system_id(construction).is_some() {
        return Err(CliError::Usage(format!(
            "{construction} names a triple; build {construction}-w, {construction}-z or {construction}-x"
        )));
    }
    let l = load(path, params, &[])?;
    warn_invalid(&l, err)?;
    let Built::Single(op) = construct(&l, construction, None, err)? else {
        unreachable!()
    };
    let file = OperatorFile::from_operator(&op);
    match out_path {
        Some(p) => write_json(p, &file)?,
        None => {
            let text = serde_json::to_string_pretty(&file).expect("serializable");
            writeln!(out, "{text}").map_err(io)?;
        }
    }
    Ok(EXIT_OK)
}

fn operator_matrix(file: &OperatorFile, l: &Loaded) -> Result<Matrix, CliError> {
    let n = l.structure.dim();
    file.to_matrix(n * n, &l.params)
}

fn combine_ops(check: &str, ops: &[&SolutionOperator], f: impl Fn(&Matrix) -> Result<VerificationReport, CliError>) -> Result<VerificationReport, CliError> {
    if let [op] = ops {
        return f(&op.matrix);
    }
    let parts = ops
        .iter()
        .map(|op| {
            let mut r = f(&op.matrix)?;
            r.check = format!("{check} {}", op.construction);
            Ok(r)
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(VerificationReport::combine(check, parts, DEFAULT_WITNESS_CAP))
}

pub fn verify(args: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let operator = args.operator.as_deref().map(OperatorFile::read).transpose()?;
    let inverse = args.inverse_operator.as_deref().map(OperatorFile::read).transpose()?;
    let mut extra = Vec::new();
    for f in operator.iter().chain(inverse.iter()) {
        extra.extend(f.identifiers()?);
    }
    if let Some(r) = &args.r {
        for t in split_list(r) {
            extra.extend(identifiers(t).map_err(|e| CliError::Input(format!("--r: {e}")))?);
        }
    }
    let l = load(&args.file, &args.params, &extra)?;
    warn_invalid(&l, err)?;
    let v = Verifier::default();
    let alpha = l.structure.alpha().clone();
    let construction = args.construction.clone().or_else(|| {
        operator
            .as_ref()
            .and_then(|o| o.construction.clone())
    });

    let report = match args.check {
        CheckKind::Alpha | CheckKind::Hybe => {
            let f = |m: &Matrix| -> Result<VerificationReport, CliError> {
                Ok(match args.check {
                    CheckKind::Alpha => v.commutes_with_alpha(m, &alpha)?,
                    _ => v.hybe_holds(m, &alpha)?,
                })
            };
            if let Some(op) = &operator {
                f(&operator_matrix(op, &l)?)?
            } else {
                let id = need_construction(args)?;
                let name = if args.check == CheckKind::Alpha { "commutes with α⊗α" } else { "HYBE" };
                match construct(&l, id, None, err)? {
                    Built::Single(op) => combine_ops(name, &[&op], f)?,
                    Built::Triple(t) => combine_ops(name, &[&t.w, &t.z, &t.x], f)?,
                }
            }
        }
        CheckKind::Inverse => {
            if let Some(op) = &operator {
                let inv = inverse
                    .as_ref()
                    .ok_or_else(|| CliError::Usage("--check inverse with --operator needs --inverse-operator".into()))?;
                v.inverse_holds(&operator_matrix(op, &l)?, &operator_matrix(inv, &l)?)?
            } else {
                let id = need_construction(args)?;
                let c = Construction::from_str(id)?;
                let (fwd, inv) = c
                    .inverse_pair()
                    .ok_or_else(|| CliError::Usage(format!("construction {id} has no closed-form inverse")))?;
                let one = Scalar::one(&l.params);
                let lie = fwd == Construction::Lie41;
                let Built::Single(b) = construct(&l, fwd.id(), lie.then_some(&one), err)? else {
                    unreachable!()
                };
                let Built::Single(bi) = construct(&l, inv.id(), None, err)? else {
                    unreachable!()
                };
                let r = v.inverse_holds(&b.matrix, &bi.matrix)?;
                if lie {
                    r.with_note("forward operator taken at ν = 1")
                } else {
                    r
                }
            }
        }
        CheckKind::System => {
            let id = need_construction(args)?;
            let base = id.to_ascii_lowercase();
            let base = base.trim_end_matches("-w").trim_end_matches("-z").trim_end_matches("-x");
            if system_id(base).is_none() {
                return Err(CliError::Usage(format!(
                    "--check system needs --construction thm5.2 or thm5.3, got {id}"
                )));
            }
            let Built::Triple(t) = construct(&l, base, None, err)? else {
                unreachable!()
            };
            v.system_triple_holds(&t, &alpha)?
        }
        CheckKind::Chybe => chybe(args, &l, &v)?,
    };
    let mut extra_meta = Vec::new();
    if args.check == CheckKind::Chybe {
        extra_meta.push(("m", args.m.to_string()));
        extra_meta.push(("n", args.n.to_string()));
    }
    let meta = metadata(&l, construction, &extra_meta);
    emit(&report, meta, args.json.as_deref(), out)
}

fn need_construction(args: &VerifyArgs) -> Result<&str, CliError> {
    args.construction
        .as_deref()
        .ok_or_else(|| CliError::Usage("one of --construction or --operator is required".into()))
}

fn parse_pair(text: &str, dim: usize) -> Result<(usize, usize), CliError> {
    let bad = || CliError::Usage(format!("--pair: expected i,j with indices below {dim}, got {text:?}"));
    let parts = split_list(text);
    if parts.len() != 2 {
        return Err(bad());
    }
    let i: usize = parts[0].parse().map_err(|_| bad())?;
    let j: usize = parts[1].parse().map_err(|_| bad())?;
    if i >= dim || j >= dim {
        return Err(bad());
    }
    Ok((i, j))
}

fn chybe(args: &VerifyArgs, l: &Loaded, v: &Verifier) -> Result<VerificationReport, CliError> {
    let HomStructure::Lie(lie) = &l.structure else {
        return Err(CliError::Usage(format!(
            "--check chybe requires hom-lie, but {} is {}",
            l.file.name,
            l.structure.kind().as_str()
        )));
    };
    let dim = lie.dim();
    if let Some(r) = &args.r {
        let r = RMatrix::from_tensor(lie, parse_list("--r", r, &l.params)?)?;
        return Ok(v.chybe_holds(&r, lie)?);
    }
    let u = require_u(l, "--check chybe")?;
    let vl = Validated::assume_valid(lie.clone());
    let alpha_inv = lie.alpha_is_involutive().then_some(lie.alpha());
    let pairs: Vec<(usize, usize)> = match &args.pair {
        Some(p) => vec![parse_pair(p, dim)?],
        None => (0..dim).flat_map(|i| (i + 1..dim).map(move |j| (i, j))).collect(),
    };
    let basis = lie.basis();
    let e = |i: usize| -> Vec<Scalar> { (0..dim).map(|k| Scalar::from_int(&l.params, (k == i) as i64)).collect() };
    let mut parts = Vec::new();
    for (i, j) in pairs {
        let r = chybe_r(&vl, &e(i), &e(j), &u, args.m, args.n, alpha_inv)?;
        let mut rep = v.chybe_holds(&r, lie)?;
        rep.check = format!("r = α^{}([{},{}])⊗α^{}(u)", args.m, basis[i], basis[j], args.n);
        parts.push(rep);
    }
    if parts.len() == 1 {
        return Ok(parts.pop().unwrap());
    }
    Ok(VerificationReport::combine("CHYBE", parts, DEFAULT_WITNESS_CAP))
}

pub fn catalog_cmd(action: &CatalogAction, out: &mut dyn Write) -> Result<i32, CliError> {
    match action {
        CatalogAction::List => {
            for e in catalog() {
                writeln!(out, "{:<16} {}", e.id, e.description).map_err(io)?;
            }
            Ok(EXIT_OK)
        }
        CatalogAction::Export { id, out: path } => {
            let e = catalog_get(id)?;
            let file = StructureFile::from_entry(&e);
            match path {
                Some(p) => write_json(p, &file)?,
                None => {
                    let text = serde_json::to_string_pretty(&file).expect("serializable");
                    writeln!(out, "{text}").map_err(io)?;
                }
            }
            Ok(EXIT_OK)
        }
        CatalogAction::VerifyAll { json } => {
            let start = Instant::now();
            let entries = catalog();
            let reports = catalog_verify_all();
            let holds = reports_pass(&entries, &reports);
            let mut json_entries = Vec::new();
            let mut errors = Vec::new();
            for (e, r) in entries.iter().zip(&reports) {
                match r {
                    Ok(r) => {
                        write!(out, "{r}").map_err(io)?;
                        json_entries.push(EntryJson::new(r, e.structure.basis()));
                    }
                    Err(err) => {
                        writeln!(out, "{}: error: {err}", e.id).map_err(io)?;
                        errors.push(format!("{}: {err}", e.id));
                    }
                }
            }
            let summary = if holds {
                "every reference entry behaves as declared"
            } else {
                "some reference entry FAILED"
            };
            writeln!(out, "catalog: {summary}").map_err(io)?;
            if let Some(p) = json {
                let file = CatalogReportFile {
                    format_version: FORMAT_VERSION,
                    holds,
                    entries: json_entries,
                    errors,
                    elapsed_ms: start.elapsed().as_secs_f64() * 1000.0,
                };
                write_json(p, &file)?;
            }
            Ok(verdict(holds))
        }
    }
}
