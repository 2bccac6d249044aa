//! Operation tables over element indices `0..n` and the axiom verifiers
//! built on them.
//!
//! Every finite structure in this crate — quandle, biquandle, group — is
//! carried by one or two [`OperationTable`]s. Verifiers check axioms
//! exhaustively and return a [`VerificationReport`] listing each violated
//! axiom instance together with the witnessing element tuple.

use std::fmt;

use crate::error::{Error, Result};
use crate::perm::Permutation;

mod biquandle;
mod group;
mod quandle;

pub use biquandle::{
    alexander_biquandle, dihedral_biquandle, verify_biquandle, wada_biquandle, FiniteBiquandle,
};
pub use group::{verify_group, FiniteGroup};
pub use quandle::{
    alexander_quandle, conjugation_quandle, core_quandle, dihedral_quandle, trivial_quandle,
    verify_quandle, FiniteQuandle,
};

pub(crate) use quandle::{is_unit, units};

/// Default bound on the number of violations a report records.
pub const DEFAULT_VIOLATION_CAP: usize = 16;

/// An `n × n` table over element indices, `entries[x][y]` being the result of
/// the operation applied to `(x, y)` with `x` the left operand.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OperationTable {
    n: usize,
    entries: Vec<usize>, // row-major
}

impl OperationTable {
    /// Validates squareness and entry range.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::ZeroOrder);
        }
        let mut entries = Vec::with_capacity(n * n);
        for (row, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(Error::NonSquareTable {
                    n,
                    row,
                    width: r.len(),
                });
            }
            for (col, &value) in r.iter().enumerate() {
                if value >= n {
                    return Err(Error::EntryOutOfRange { row, col, value, n });
                }
                entries.push(value);
            }
        }
        Ok(Self { n, entries })
    }

    /// Fills a table from a closure; the closure must stay in range.
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Self {
        assert!(n > 0, "order must be positive");
        let mut entries = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                let v = f(x, y);
                assert!(v < n, "table entry out of range");
                entries.push(v);
            }
        }
        Self { n, entries }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> usize {
        self.entries[x * self.n + y]
    }

    pub fn row(&self, x: usize) -> &[usize] {
        &self.entries[x * self.n..(x + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[usize]> {
        self.entries.chunks(self.n)
    }

    /// The column map `x ↦ entries[x][y]` for fixed `y`.
    pub fn column_images(&self, y: usize) -> Vec<usize> {
        (0..self.n).map(|x| self.get(x, y)).collect()
    }

    /// The column map as a permutation, if it is one.
    pub fn column_permutation(&self, y: usize) -> Option<Permutation> {
        Permutation::from_images(self.column_images(y)).ok()
    }
}

impl fmt::Display for OperationTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

/// Identifies which axiom an instance violated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AxiomId {
    QuandleIdempotence,
    QuandleRightTranslation,
    QuandleSelfDistributivity,
    BiquandleDiagonal,
    BiquandleUnderColumn,
    BiquandleOverColumn,
    BiquandlePairMap,
    BiquandleExchange1,
    BiquandleExchange2,
    BiquandleExchange3,
    GroupAssociativity,
    GroupIdentity,
    GroupInverse,
    StructureAutomorphism,
    StructureCoherence,
    StructureDiagonal,
}

impl AxiomId {
    pub fn as_str(self) -> &'static str {
        match self {
            AxiomId::QuandleIdempotence => "quandle.idempotence",
            AxiomId::QuandleRightTranslation => "quandle.right-translation",
            AxiomId::QuandleSelfDistributivity => "quandle.self-distributivity",
            AxiomId::BiquandleDiagonal => "biquandle.diagonal",
            AxiomId::BiquandleUnderColumn => "biquandle.under-column",
            AxiomId::BiquandleOverColumn => "biquandle.over-column",
            AxiomId::BiquandlePairMap => "biquandle.pair-map",
            AxiomId::BiquandleExchange1 => "biquandle.exchange-1",
            AxiomId::BiquandleExchange2 => "biquandle.exchange-2",
            AxiomId::BiquandleExchange3 => "biquandle.exchange-3",
            AxiomId::GroupAssociativity => "group.associativity",
            AxiomId::GroupIdentity => "group.identity",
            AxiomId::GroupInverse => "group.inverse",
            AxiomId::StructureAutomorphism => "structure.automorphism",
            AxiomId::StructureCoherence => "structure.coherence",
            AxiomId::StructureDiagonal => "structure.diagonal",
        }
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One violated axiom instance with the element tuple that witnesses it.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Violation {
    pub axiom: AxiomId,
    pub witness: Vec<usize>,
}

impl Violation {
    pub fn new(axiom: AxiomId, witness: Vec<usize>) -> Self {
        Self { axiom, witness }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} witness (", self.axiom)?;
        for (i, v) in self.witness.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// Outcome of an exhaustive axiom check.
///
/// `passed` holds exactly when `violations` is empty. When more violations
/// exist than the recording cap allows, `truncated` is set and the listed
/// ones are the first encountered in scan order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    violations: Vec<Violation>,
    truncated: bool,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    pub fn truncated(&self) -> bool {
        self.truncated
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "pass");
        }
        write!(f, "{} violation(s)", self.violations.len())?;
        if self.truncated {
            write!(f, " (truncated)")?;
        }
        if let Some(first) = self.violations.first() {
            write!(f, ", first: {first}")?;
        }
        Ok(())
    }
}

/// Accumulates violations up to a cap.
pub(crate) struct ReportBuilder {
    cap: usize,
    violations: Vec<Violation>,
    truncated: bool,
}

impl ReportBuilder {
    pub(crate) fn new(cap: usize) -> Self {
        Self {
            cap: cap.max(1),
            violations: Vec::new(),
            truncated: false,
        }
    }

    pub(crate) fn record(&mut self, axiom: AxiomId, witness: Vec<usize>) {
        if self.violations.len() < self.cap {
            self.violations.push(Violation::new(axiom, witness));
        } else {
            self.truncated = true;
        }
    }

    pub(crate) fn finish(self) -> VerificationReport {
        VerificationReport {
            violations: self.violations,
            truncated: self.truncated,
        }
    }
}
