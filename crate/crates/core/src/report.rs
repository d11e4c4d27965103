use std::fmt;
use std::time::Duration;

use crate::scalar::Scalar;
use crate::tensor::Matrix;

/// Witness lists are truncated to this many entries unless a caller asks otherwise.
pub const DEFAULT_WITNESS_CAP: usize = 10;

/// A nonzero entry of a residual.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub row: usize,
    pub col: usize,
    pub residual: Scalar,
    /// Basis indices of the failing input, for residuals indexed by basis tuples.
    pub tuple: Option<Vec<usize>>,
    /// Human-readable location, e.g. `(g, g, x) -> x` for axiom residuals.
    pub label: Option<String>,
}

/// Outcome of one exact identity check, possibly itemized into parts.
///
/// `holds` is true iff the residual is exactly zero (for composites: iff every
/// part holds); `witnesses` is empty iff `holds`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub check: String,
    pub holds: bool,
    pub witnesses: Vec<Witness>,
    pub parts: Vec<VerificationReport>,
    /// Number of basis inputs examined (columns of the residual).
    pub cases: usize,
    pub notes: Vec<String>,
    pub elapsed: Duration,
}

impl VerificationReport {
    /// Report on `residual = 0`. Witnesses come out sorted by `(row, col)`.
    pub fn from_residual(check: impl Into<String>, residual: &Matrix, cap: usize) -> Self {
        let witnesses: Vec<Witness> = residual
            .nonzero_entries()
            .take(cap.max(1))
            .map(|(row, col, s)| Witness {
                row,
                col,
                residual: s.clone(),
                tuple: None,
                label: None,
            })
            .collect();
        VerificationReport {
            check: check.into(),
            holds: witnesses.is_empty(),
            witnesses,
            parts: Vec::new(),
            cases: residual.cols(),
            notes: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    /// Composite report; witnesses are the parts' witnesses in order, capped.
    pub fn combine(check: impl Into<String>, parts: Vec<VerificationReport>, cap: usize) -> Self {
        let holds = parts.iter().all(|p| p.holds);
        let witnesses = parts
            .iter()
            .flat_map(|p| p.witnesses.iter().cloned())
            .take(cap.max(1))
            .collect();
        let elapsed = parts.iter().map(|p| p.elapsed).sum();
        let cases = parts.iter().map(|p| p.cases).sum();
        VerificationReport {
            check: check.into(),
            holds,
            witnesses,
            parts,
            cases,
            notes: Vec::new(),
            elapsed,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn with_elapsed(mut self, elapsed: Duration) -> Self {
        self.elapsed = elapsed;
        self
    }

    /// Finds this report or a nested part by check name.
    pub fn find(&self, check: &str) -> Option<&VerificationReport> {
        if self.check == check {
            return Some(self);
        }
        self.parts.iter().find_map(|p| p.find(check))
    }

    /// Leaf parts that fail.
    pub fn failures(&self) -> Vec<&VerificationReport> {
        if self.parts.is_empty() {
            return if self.holds { Vec::new() } else { vec![self] };
        }
        self.parts.iter().flat_map(|p| p.failures()).collect()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_indented(f, 0)
    }
}

impl VerificationReport {
    fn write_indented(&self, f: &mut fmt::Formatter<'_>, depth: usize) -> fmt::Result {
        let pad = "  ".repeat(depth);
        let verdict = if self.holds { "holds" } else { "FAILS" };
        writeln!(f, "{pad}{}: {verdict} ({} cases)", self.check, self.cases)?;
        for note in &self.notes {
            writeln!(f, "{pad}  note: {note}")?;
        }
        if self.parts.is_empty() {
            for w in &self.witnesses {
                match &w.label {
                    Some(label) => writeln!(f, "{pad}  witness {label}: {}", w.residual)?,
                    None => writeln!(f, "{pad}  witness [{}, {}]: {}", w.row, w.col, w.residual)?,
                }
            }
        }
        for part in &self.parts {
            part.write_indented(f, depth + 1)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{parse_scalar, ParamSet};

    #[test]
    fn residual_witnesses_are_sorted_and_capped() {
        let p = ParamSet::new(["l"]).unwrap();
        let mut m = Matrix::zeros(3, 3, &p);
        m.set(2, 0, parse_scalar("l", &p).unwrap());
        m.set(0, 2, parse_scalar("1", &p).unwrap());
        m.set(0, 1, parse_scalar("l^2 - 1", &p).unwrap());
        let r = VerificationReport::from_residual("t", &m, 2);
        assert!(!r.holds);
        assert_eq!(r.cases, 3);
        let locs: Vec<_> = r.witnesses.iter().map(|w| (w.row, w.col)).collect();
        assert_eq!(locs, vec![(0, 1), (0, 2)]);

        let ok = VerificationReport::from_residual("z", &Matrix::zeros(2, 2, &p), 10);
        assert!(ok.holds && ok.witnesses.is_empty());

        let both = VerificationReport::combine("both", vec![ok, r], 10);
        assert!(!both.holds);
        assert_eq!(both.witnesses.len(), 2);
        assert_eq!(both.failures().len(), 1);
        assert!(both.find("t").is_some());
    }
}
