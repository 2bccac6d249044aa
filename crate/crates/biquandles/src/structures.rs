//! Biquandle structures on a quandle, and the passage back and forth between
//! structures and biquandles.
//!
//! A structure on a quandle `Q` of order `n` is a family of `n` quandle
//! automorphisms `β_0, …, β_{n-1}` satisfying two conditions:
//!
//! 1. coherence: `β_{β_y(x*y)} ∘ β_y = β_{β_x(y)} ∘ β_x` for all `x, y`;
//! 2. diagonal bijectivity: `y ↦ β_y(y)` is a bijection.
//!
//! [`realize`] turns a structure into a biquandle (`x ⊻ y = β_y(x*y)`,
//! `x ⊼ y = β_y(x)`); [`extract_structure`] recovers a structure from any
//! biquandle over its [`underlying_quandle`]. The two are mutually inverse,
//! table-exactly, in both directions — the round-trip tests in this module
//! and the crate's acceptance suite keep that fact under permanent watch.

use crate::error::{Error, Result};
use crate::morphisms::is_quandle_hom;
use crate::perm::Permutation;
use crate::tables::{
    verify_biquandle, AxiomId, FiniteBiquandle, FiniteQuandle, OperationTable, ReportBuilder,
    VerificationReport, DEFAULT_VIOLATION_CAP,
};

/// A quandle together with a verified beta family, `betas[y] = β_y`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BiquandleStructure {
    base: FiniteQuandle,
    betas: Vec<Permutation>,
}

impl BiquandleStructure {
    /// Builds a structure, checking the automorphism, coherence and diagonal
    /// conditions.
    pub fn new(base: FiniteQuandle, betas: Vec<Permutation>) -> Result<Self> {
        let report = verify_structure(&base, &betas)?;
        if report.passed() {
            Ok(Self { base, betas })
        } else {
            Err(Error::InvalidStructure(report))
        }
    }

    /// Skips verification; the caller must know the family is a structure.
    /// Used by the enumerator, which establishes the conditions during its
    /// own search.
    pub fn new_unchecked(base: FiniteQuandle, betas: Vec<Permutation>) -> Self {
        Self { base, betas }
    }

    pub fn base(&self) -> &FiniteQuandle {
        &self.base
    }

    pub fn order(&self) -> usize {
        self.base.order()
    }

    pub fn betas(&self) -> &[Permutation] {
        &self.betas
    }

    pub fn beta(&self, y: usize) -> &Permutation {
        &self.betas[y]
    }

    /// The beta family as a table, `[x][y] = β_y(x)`; this is exactly the
    /// over table of the realized biquandle.
    pub fn beta_table(&self) -> OperationTable {
        OperationTable::from_fn(self.order(), |x, y| self.betas[y].apply(x))
    }
}

/// Checks the structure conditions for a beta family over a quandle.
///
/// Length or degree mismatches are input errors; condition failures are
/// reported with witnesses: `structure.automorphism` carries `[y]`,
/// `structure.coherence` carries `[x, y]`, `structure.diagonal` carries the
/// two colliding indices `[y1, y2]`.
pub fn verify_structure(base: &FiniteQuandle, betas: &[Permutation]) -> Result<VerificationReport> {
    verify_structure_with_cap(base, betas, DEFAULT_VIOLATION_CAP)
}

pub fn verify_structure_with_cap(
    base: &FiniteQuandle,
    betas: &[Permutation],
    cap: usize,
) -> Result<VerificationReport> {
    let n = base.order();
    if betas.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            actual: betas.len(),
        });
    }
    for beta in betas {
        if beta.degree() != n {
            return Err(Error::DegreeMismatch {
                expected: n,
                actual: beta.degree(),
            });
        }
    }
    let mut report = ReportBuilder::new(cap);

    for (y, beta) in betas.iter().enumerate() {
        if !is_quandle_hom(base, base, beta.images()) {
            report.record(AxiomId::StructureAutomorphism, vec![y]);
        }
    }

    for x in 0..n {
        for y in 0..n {
            let left = &betas[betas[y].apply(base.apply(x, y))];
            let right = &betas[betas[x].apply(y)];
            if left.compose(&betas[y]) != right.compose(&betas[x]) {
                report.record(AxiomId::StructureCoherence, vec![x, y]);
            }
        }
    }

    let mut first_with_diag = vec![usize::MAX; n];
    for (y, beta) in betas.iter().enumerate() {
        let d = beta.apply(y);
        if first_with_diag[d] != usize::MAX {
            report.record(AxiomId::StructureDiagonal, vec![first_with_diag[d], y]);
        } else {
            first_with_diag[d] = y;
        }
    }

    Ok(report.finish())
}

/// The constant structure `β_y = f` for all `y`; valid exactly when `f` is
/// an automorphism of the base.
pub fn constant_structure(base: &FiniteQuandle, f: &Permutation) -> Result<BiquandleStructure> {
    if f.degree() != base.order() {
        return Err(Error::DegreeMismatch {
            expected: base.order(),
            actual: f.degree(),
        });
    }
    if !is_quandle_hom(base, base, f.images()) {
        return Err(Error::NotAnAutomorphism);
    }
    Ok(BiquandleStructure::new_unchecked(
        base.clone(),
        vec![f.clone(); base.order()],
    ))
}

/// Builds the biquandle of a structure: under `β_y(x*y)`, over `β_y(x)`.
///
/// The input family is re-verified; [`realize_unchecked`] skips that for
/// bulk enumeration where the conditions were established upstream. The
/// output always satisfies the biquandle axioms and has the structure's base
/// as its underlying quandle.
pub fn realize(structure: &BiquandleStructure) -> Result<FiniteBiquandle> {
    let report = verify_structure(structure.base(), structure.betas())?;
    if !report.passed() {
        return Err(Error::InvalidStructure(report));
    }
    let b = realize_unchecked(structure);
    let check = verify_biquandle(b.under(), b.over())?;
    if !check.passed() {
        return Err(Error::Internal(format!(
            "realized tables violate the biquandle axioms: {check}"
        )));
    }
    Ok(b)
}

/// [`realize`] without any verification. On a family that is not actually a
/// structure the result is garbage.
pub fn realize_unchecked(structure: &BiquandleStructure) -> FiniteBiquandle {
    let n = structure.order();
    let base = structure.base();
    let under = OperationTable::from_fn(n, |x, y| structure.beta(y).apply(base.apply(x, y)));
    let over = structure.beta_table();
    FiniteBiquandle::new_unchecked(under, over)
}

/// The quandle `x * y = β_y⁻¹(x ⊻ y)` underlying a biquandle.
///
/// The result satisfying the quandle axioms is a theorem, not an assumption:
/// the table is checked and a failure is an internal-consistency error.
pub fn underlying_quandle(b: &FiniteBiquandle) -> Result<FiniteQuandle> {
    let n = b.order();
    let beta_inverses: Vec<Permutation> = (0..n).map(|y| b.beta(y).inverse()).collect();
    let op = OperationTable::from_fn(n, |x, y| beta_inverses[y].apply(b.under_at(x, y)));
    FiniteQuandle::new(op)
        .map_err(|e| Error::Internal(format!("underlying table is not a quandle: {e}")))
}

/// Reads the structure off a biquandle: base the underlying quandle, betas
/// the over columns.
///
/// That this family is always a structure is the completeness theorem for
/// the construction; the output is verified and a failure is an
/// internal-consistency error.
pub fn extract_structure(b: &FiniteBiquandle) -> Result<BiquandleStructure> {
    let base = underlying_quandle(b)?;
    let betas: Vec<Permutation> = (0..b.order()).map(|y| b.beta(y)).collect();
    let report = verify_structure(&base, &betas)?;
    if !report.passed() {
        return Err(Error::Internal(format!(
            "over columns do not form a structure on the underlying quandle: {report}"
        )));
    }
    Ok(BiquandleStructure::new_unchecked(base, betas))
}
