//! JSON formats read and written by the command-line tool.

use std::collections::BTreeMap;
use std::path::Path;

use homyb::scalar::ParseError;
use homyb::{
    parse_scalar, CatalogEntry, EntryReport, EntryStatus, HomAlgebra, HomCoalgebra, HomLieAlgebra, HomStructure,
    Matrix, ParamSet, Scalar, SolutionOperator, StructureKind, Twisted, VerificationReport, Witness,
};
use serde::{Deserialize, Serialize};

use crate::CliError;

pub const FORMAT_VERSION: u32 = 1;

fn default_version() -> u32 {
    FORMAT_VERSION
}

fn check_version(what: &str, v: u32) -> Result<(), CliError> {
    if v != FORMAT_VERSION {
        return Err(CliError::Input(format!(
            "{what}: unsupported format_version {v} (expected {FORMAT_VERSION})"
        )));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureFile {
    #[serde(default = "default_version")]
    pub format_version: u32,
    pub kind: String,
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    #[serde(default)]
    pub parameters: Vec<String>,
    pub alpha: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mult: Option<Vec<Vec<Vec<String>>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counit: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comult: Option<Vec<Vec<(usize, usize, String)>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bracket: Option<Vec<Vec<Vec<String>>>>,
    /// Free-form remarks, e.g. how an ambiguous source was read.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

fn shape(msg: String) -> CliError {
    CliError::Input(msg)
}

fn scalar_at(text: &str, at: &str, params: &ParamSet) -> Result<Scalar, CliError> {
    parse_scalar(text, params).map_err(|e: ParseError| CliError::Input(format!("{at}: {e}")))
}

fn vector(key: &str, v: &[String], dim: usize, params: &ParamSet) -> Result<Vec<Scalar>, CliError> {
    if v.len() != dim {
        return Err(shape(format!("{key}: expected {dim} entries, found {}", v.len())));
    }
    v.iter()
        .enumerate()
        .map(|(i, t)| scalar_at(t, &format!("{key}[{i}]"), params))
        .collect()
}

fn square_shape<T>(key: &str, rows: &[Vec<T>], dim: usize) -> Result<(), CliError> {
    let bad_row = rows.iter().find(|r| r.len() != dim);
    if rows.len() != dim || bad_row.is_some() {
        let cols = bad_row.or(rows.first()).map_or(0, |r| r.len());
        return Err(shape(format!("{key}: expected {dim}×{dim}, found {}×{cols}", rows.len())));
    }
    Ok(())
}

fn bilinear(
    key: &str,
    t: &[Vec<Vec<String>>],
    dim: usize,
    params: &ParamSet,
) -> Result<Vec<Vec<Vec<Scalar>>>, CliError> {
    square_shape(key, t, dim)?;
    t.iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, v)| vector(&format!("{key}[{i}][{j}]"), v, dim, params))
                .collect()
        })
        .collect()
}

fn required<'a, T>(field: &'a Option<T>, key: &str, kind: &str) -> Result<&'a T, CliError> {
    field
        .as_ref()
        .ok_or_else(|| shape(format!("{key}: required for kind {kind:?}")))
}

impl StructureFile {
    pub fn read(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        let file: StructureFile =
            serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        check_version(&path.display().to_string(), file.format_version)?;
        Ok(file)
    }

    pub fn params(&self) -> Result<ParamSet, CliError> {
        ParamSet::new(self.parameters.iter().map(String::as_str))
            .map_err(|e| CliError::Input(format!("parameters: {e}")))
    }

    /// Parses into a structure over the declared parameters.
    pub fn to_structure(&self) -> Result<HomStructure, CliError> {
        let params = self.params()?;
        let dim = self.dim;
        if self.basis.len() != dim {
            return Err(shape(format!("basis: expected {dim} names, found {}", self.basis.len())));
        }
        square_shape("alpha", &self.alpha, dim)?;
        let mut alpha = Matrix::zeros(dim, dim, &params);
        for (i, row) in self.alpha.iter().enumerate() {
            for (j, t) in row.iter().enumerate() {
                alpha.set(i, j, scalar_at(t, &format!("alpha[{i}][{j}]"), &params)?);
            }
        }
        let extra = |present: bool, key: &str| -> Result<(), CliError> {
            if present {
                Err(shape(format!("{key}: not allowed for kind {:?}", self.kind)))
            } else {
                Ok(())
            }
        };
        let basis = self.basis.clone();
        let s = match self.kind.as_str() {
            "hom-algebra" => {
                extra(self.counit.is_some(), "counit")?;
                extra(self.comult.is_some(), "comult")?;
                extra(self.bracket.is_some(), "bracket")?;
                let unit = vector("unit", required(&self.unit, "unit", &self.kind)?, dim, &params)?;
                let mult = bilinear("mult", required(&self.mult, "mult", &self.kind)?, dim, &params)?;
                HomStructure::Algebra(HomAlgebra::new(&self.name, basis, params, unit, mult, alpha)?)
            }
            "hom-coalgebra" => {
                extra(self.unit.is_some(), "unit")?;
                extra(self.mult.is_some(), "mult")?;
                extra(self.bracket.is_some(), "bracket")?;
                let counit = vector("counit", required(&self.counit, "counit", &self.kind)?, dim, &params)?;
                let comult = required(&self.comult, "comult", &self.kind)?;
                if comult.len() != dim {
                    return Err(shape(format!("comult: expected {dim} entries, found {}", comult.len())));
                }
                let mut terms = Vec::with_capacity(dim);
                for (i, entry) in comult.iter().enumerate() {
                    let mut row = Vec::with_capacity(entry.len());
                    for (t, (j, k, c)) in entry.iter().enumerate() {
                        let at = format!("comult[{i}][{t}]");
                        if *j >= dim || *k >= dim {
                            return Err(shape(format!("{at}: basis index out of range 0..{dim}")));
                        }
                        row.push((*j, *k, scalar_at(c, &at, &params)?));
                    }
                    terms.push(row);
                }
                HomStructure::Coalgebra(HomCoalgebra::new(&self.name, basis, params, terms, counit, alpha)?)
            }
            "hom-lie" => {
                extra(self.unit.is_some(), "unit")?;
                extra(self.mult.is_some(), "mult")?;
                extra(self.counit.is_some(), "counit")?;
                extra(self.comult.is_some(), "comult")?;
                let bracket = bilinear("bracket", required(&self.bracket, "bracket", &self.kind)?, dim, &params)?;
                HomStructure::Lie(HomLieAlgebra::new(&self.name, basis, params, bracket, alpha)?)
            }
            other => {
                return Err(shape(format!(
                    "kind: expected \"hom-algebra\", \"hom-coalgebra\" or \"hom-lie\", found {other:?}"
                )))
            }
        };
        Ok(s)
    }

    pub fn from_structure(s: &HomStructure, notes: Vec<String>) -> Self {
        let dim = s.dim();
        let strs = |v: &[Scalar]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
        let table = |t: Vec<Vec<Vec<Scalar>>>| {
            t.iter()
                .map(|row| row.iter().map(|v| strs(v)).collect())
                .collect::<Vec<Vec<Vec<String>>>>()
        };
        let alpha = (0..dim)
            .map(|i| (0..dim).map(|j| s.alpha().get(i, j).to_string()).collect())
            .collect();
        let mut file = StructureFile {
            format_version: FORMAT_VERSION,
            kind: s.kind().as_str().to_string(),
            name: s.name().to_string(),
            dim,
            basis: s.basis().to_vec(),
            parameters: s.params().names().to_vec(),
            alpha,
            unit: None,
            mult: None,
            counit: None,
            comult: None,
            bracket: None,
            notes,
        };
        match s {
            HomStructure::Algebra(a) => {
                file.unit = Some(strs(a.unit()));
                file.mult = Some(table(a.mult_table()));
            }
            HomStructure::Coalgebra(c) => {
                file.counit = Some(strs(c.counit()));
                file.comult = Some(
                    (0..dim)
                        .map(|i| c.comult_terms(i).into_iter().map(|(j, k, x)| (j, k, x.to_string())).collect())
                        .collect(),
                );
            }
            HomStructure::Lie(l) => file.bracket = Some(table(l.bracket_table())),
        }
        file
    }

    pub fn from_entry(e: &CatalogEntry) -> Self {
        Self::from_structure(&e.structure, e.notes.clone())
    }

    pub fn structure_kind(&self) -> Option<StructureKind> {
        match self.kind.as_str() {
            "hom-algebra" => Some(StructureKind::Algebra),
            "hom-coalgebra" => Some(StructureKind::Coalgebra),
            "hom-lie" => Some(StructureKind::Lie),
            _ => None,
        }
    }
}

/// A built operator; `matrix[i][j]` is row `i`, column `j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OperatorFile {
    #[serde(default = "default_version")]
    pub format_version: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub construction: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
    #[serde(default)]
    pub parameters: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nu: Option<String>,
    pub matrix: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum OperatorInput {
    File(OperatorFile),
    Bare(Vec<Vec<String>>),
}

impl OperatorFile {
    pub fn from_operator(op: &SolutionOperator) -> Self {
        OperatorFile {
            format_version: FORMAT_VERSION,
            construction: Some(op.construction.id().to_string()),
            source: Some(op.source.clone()),
            parameters: op.matrix.params().names().to_vec(),
            lambda: Some(op.lambda.to_string()),
            nu: Some(op.nu.to_string()),
            matrix: matrix_strings(&op.matrix),
            warnings: op.warnings.clone(),
        }
    }

    /// Accepts the object form or a bare array of rows.
    pub fn read(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        let input: OperatorInput =
            serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        let file = match input {
            OperatorInput::File(f) => f,
            OperatorInput::Bare(matrix) => OperatorFile {
                format_version: FORMAT_VERSION,
                construction: None,
                source: None,
                parameters: Vec::new(),
                lambda: None,
                nu: None,
                matrix,
                warnings: Vec::new(),
            },
        };
        check_version(&path.display().to_string(), file.format_version)?;
        Ok(file)
    }

    /// Identifiers appearing in the matrix entries.
    pub fn identifiers(&self) -> Result<Vec<String>, CliError> {
        let mut out = self.parameters.clone();
        for (i, row) in self.matrix.iter().enumerate() {
            for (j, t) in row.iter().enumerate() {
                let ids = homyb::scalar::identifiers(t)
                    .map_err(|e| CliError::Input(format!("matrix[{i}][{j}]: {e}")))?;
                for id in ids {
                    if !out.contains(&id) {
                        out.push(id);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn to_matrix(&self, n: usize, params: &ParamSet) -> Result<Matrix, CliError> {
        square_shape("matrix", &self.matrix, n)?;
        let mut m = Matrix::zeros(n, n, params);
        for (i, row) in self.matrix.iter().enumerate() {
            for (j, t) in row.iter().enumerate() {
                m.set(i, j, scalar_at(t, &format!("matrix[{i}][{j}]"), params)?);
            }
        }
        Ok(m)
    }
}

pub fn matrix_strings(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m.get(i, j).to_string()).collect())
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub row: usize,
    pub col: usize,
    pub residual: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tuple: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

impl From<&Witness> for WitnessJson {
    fn from(w: &Witness) -> Self {
        WitnessJson {
            row: w.row,
            col: w.col,
            residual: w.residual.to_string(),
            tuple: w.tuple.clone(),
            label: w.label.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartJson {
    pub check: String,
    pub holds: bool,
    pub cases: usize,
    pub witnesses: Vec<WitnessJson>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub parts: Vec<PartJson>,
}

impl From<&VerificationReport> for PartJson {
    fn from(r: &VerificationReport) -> Self {
        PartJson {
            check: r.check.clone(),
            holds: r.holds,
            cases: r.cases,
            witnesses: r.witnesses.iter().map(WitnessJson::from).collect(),
            notes: r.notes.clone(),
            parts: r.parts.iter().map(PartJson::from).collect(),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Metadata {
    pub construction: Option<String>,
    /// `lambda`, `nu`, `u` and similar inputs, as given.
    pub parameters: BTreeMap<String, String>,
    pub structure: String,
    /// How ambiguous or suspect inputs were read.
    pub typo_readings: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportFile {
    pub format_version: u32,
    pub check: String,
    pub holds: bool,
    pub witnesses: Vec<WitnessJson>,
    pub parts: Vec<PartJson>,
    pub notes: Vec<String>,
    pub metadata: Metadata,
    /// Wall-clock time; excluded from any golden comparison.
    pub elapsed_ms: f64,
}

impl ReportFile {
    pub fn new(r: &VerificationReport, metadata: Metadata) -> Self {
        ReportFile {
            format_version: FORMAT_VERSION,
            check: r.check.clone(),
            holds: r.holds,
            witnesses: r.witnesses.iter().map(WitnessJson::from).collect(),
            parts: r.parts.iter().map(PartJson::from).collect(),
            notes: r.notes.clone(),
            metadata,
            elapsed_ms: r.elapsed.as_secs_f64() * 1000.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRowJson {
    pub input: [usize; 2],
    pub label: String,
    pub expected: String,
    pub computed: String,
    pub matches: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckJson {
    #[serde(flatten)]
    pub report: PartJson,
    pub expected: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryJson {
    pub id: String,
    pub status: String,
    pub as_expected: bool,
    pub checks: Vec<CheckJson>,
    pub table: Vec<TableRowJson>,
    pub notes: Vec<String>,
}

pub fn status_str(s: EntryStatus) -> &'static str {
    match s {
        EntryStatus::Reference => "reference",
        EntryStatus::ExpectedFail => "expected-fail",
    }
}

impl EntryJson {
    pub fn new(r: &EntryReport, basis: &[String]) -> Self {
        EntryJson {
            id: r.id.to_string(),
            status: status_str(r.status).to_string(),
            as_expected: r.as_expected(),
            checks: r
                .checks
                .iter()
                .map(|c| CheckJson {
                    report: PartJson::from(&c.report),
                    expected: c.expected,
                })
                .collect(),
            table: r
                .table
                .iter()
                .map(|t| TableRowJson {
                    input: [t.input.0, t.input.1],
                    label: t.label.clone(),
                    expected: homyb::format_tensor(&t.expected, basis),
                    computed: homyb::format_tensor(&t.computed, basis),
                    matches: t.matches,
                })
                .collect(),
            notes: r.notes.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CatalogReportFile {
    pub format_version: u32,
    /// Every reference entry behaved as declared.
    pub holds: bool,
    pub entries: Vec<EntryJson>,
    pub errors: Vec<String>,
    pub elapsed_ms: f64,
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), CliError> {
    let mut text = serde_json::to_string_pretty(value).expect("serializable");
    text.push('\n');
    std::fs::write(path, text).map_err(|e| CliError::io(path, e))
}
