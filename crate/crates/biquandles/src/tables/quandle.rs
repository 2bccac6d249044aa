//! Finite quandles: idempotent, right-invertible, right self-distributive
//! operation tables, plus the standard parametric families.

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::tables::{
    AxiomId, FiniteGroup, OperationTable, ReportBuilder, VerificationReport, DEFAULT_VIOLATION_CAP,
};

/// A validated quandle table. `op.get(x, y)` is `x * y`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FiniteQuandle {
    op: OperationTable,
}

impl FiniteQuandle {
    /// Wraps a table after checking all three quandle axioms.
    pub fn new(op: OperationTable) -> Result<Self> {
        let report = verify_quandle(&op);
        if report.passed() {
            Ok(Self { op })
        } else {
            Err(Error::InvalidQuandle(report))
        }
    }

    pub(crate) fn new_unchecked(op: OperationTable) -> Self {
        debug_assert!(verify_quandle(&op).passed());
        Self { op }
    }

    pub fn op(&self) -> &OperationTable {
        &self.op
    }

    pub fn order(&self) -> usize {
        self.op.order()
    }

    /// `x * y`.
    #[inline]
    pub fn apply(&self, x: usize, y: usize) -> usize {
        self.op.get(x, y)
    }

    /// The symmetry `S_y : x ↦ x * y`, a permutation by the second axiom.
    pub fn symmetry(&self, y: usize) -> Permutation {
        self.op
            .column_permutation(y)
            .expect("column map of a valid quandle is a permutation")
    }
}

/// Checks the quandle axioms exhaustively: idempotence, bijective right
/// translations, right self-distributivity.
pub fn verify_quandle(op: &OperationTable) -> VerificationReport {
    verify_quandle_with_cap(op, DEFAULT_VIOLATION_CAP)
}

pub fn verify_quandle_with_cap(op: &OperationTable, cap: usize) -> VerificationReport {
    let n = op.order();
    let mut report = ReportBuilder::new(cap);
    for x in 0..n {
        if op.get(x, x) != x {
            report.record(AxiomId::QuandleIdempotence, vec![x]);
        }
    }
    for y in 0..n {
        if op.column_permutation(y).is_none() {
            report.record(AxiomId::QuandleRightTranslation, vec![y]);
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if op.get(op.get(x, y), z) != op.get(op.get(x, z), op.get(y, z)) {
                    report.record(AxiomId::QuandleSelfDistributivity, vec![x, y, z]);
                }
            }
        }
    }
    report.finish()
}

/// The dihedral quandle on `Z_n` with `x * y = 2y - x (mod n)`.
pub fn dihedral_quandle(n: usize) -> Result<FiniteQuandle> {
    if n == 0 {
        return Err(Error::ZeroOrder);
    }
    let op = OperationTable::from_fn(n, |x, y| (2 * y + n - x) % n);
    Ok(FiniteQuandle::new_unchecked(op))
}

/// The Alexander quandle on `Z_n` with `x * y = t·x + (1 - t)·y (mod n)`.
///
/// `t` must be a unit modulo `n`, otherwise the right translations fail to be
/// bijective.
pub fn alexander_quandle(n: usize, t: usize) -> Result<FiniteQuandle> {
    if n == 0 {
        return Err(Error::ZeroOrder);
    }
    if t >= n {
        return Err(Error::ElementOutOfRange { value: t, n });
    }
    if !is_unit(t, n) {
        return Err(Error::NotAUnit {
            value: t,
            modulus: n,
        });
    }
    let one_minus_t = (n + 1 - t) % n;
    let op = OperationTable::from_fn(n, |x, y| (t * x + one_minus_t * y) % n);
    Ok(FiniteQuandle::new_unchecked(op))
}

/// The conjugation quandle of a group: `a * b = b⁻¹ a b`.
pub fn conjugation_quandle(g: &FiniteGroup) -> FiniteQuandle {
    let op = OperationTable::from_fn(g.order(), |a, b| g.mul(g.mul(g.inv(b), a), b));
    FiniteQuandle::new(op).expect("conjugation table satisfies the quandle axioms")
}

/// The core quandle of a group: `a * b = b a⁻¹ b`.
pub fn core_quandle(g: &FiniteGroup) -> FiniteQuandle {
    let op = OperationTable::from_fn(g.order(), |a, b| g.mul(g.mul(b, g.inv(a)), b));
    FiniteQuandle::new(op).expect("core table satisfies the quandle axioms")
}

/// The trivial quandle with `x * y = x`.
pub fn trivial_quandle(n: usize) -> Result<FiniteQuandle> {
    if n == 0 {
        return Err(Error::ZeroOrder);
    }
    let op = OperationTable::from_fn(n, |x, _| x);
    Ok(FiniteQuandle::new_unchecked(op))
}

pub(crate) fn is_unit(a: usize, n: usize) -> bool {
    gcd(a % n, n) == 1
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// The units of `Z_n` in ascending order.
pub(crate) fn units(n: usize) -> Vec<usize> {
    (0..n).filter(|&a| is_unit(a, n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dihedral_3_table() {
        let q = dihedral_quandle(3).unwrap();
        let rows: Vec<Vec<usize>> = q.op().rows().map(|r| r.to_vec()).collect();
        assert_eq!(rows, vec![vec![0, 2, 1], vec![2, 1, 0], vec![1, 0, 2]]);
        assert!(verify_quandle(q.op()).passed());
    }

    #[test]
    fn dihedral_1_is_single_element() {
        let q = dihedral_quandle(1).unwrap();
        assert_eq!(q.order(), 1);
        assert_eq!(q.apply(0, 0), 0);
    }

    #[test]
    fn dihedral_4_first_row() {
        let q = dihedral_quandle(4).unwrap();
        assert_eq!(q.op().row(0), &[0, 2, 0, 2]);
    }

    #[test]
    fn dihedral_rejects_zero_order() {
        assert!(matches!(dihedral_quandle(0), Err(Error::ZeroOrder)));
    }

    #[test]
    fn trivial_quandle_tables() {
        let q = trivial_quandle(2).unwrap();
        let rows: Vec<Vec<usize>> = q.op().rows().map(|r| r.to_vec()).collect();
        assert_eq!(rows, vec![vec![0, 0], vec![1, 1]]);
        assert_eq!(trivial_quandle(1).unwrap().op().row(0), &[0]);
        assert!(verify_quandle(trivial_quandle(3).unwrap().op()).passed());
    }

    #[test]
    fn idempotence_violation_is_witnessed() {
        let op = OperationTable::from_rows(vec![vec![1, 0], vec![0, 1]]).unwrap();
        let report = verify_quandle(&op);
        assert!(!report.passed());
        assert_eq!(report.violations()[0].axiom, AxiomId::QuandleIdempotence);
        assert_eq!(report.violations()[0].witness, vec![0]);
    }

    #[test]
    fn alexander_with_t_1_is_trivial() {
        let q = alexander_quandle(5, 1).unwrap();
        assert_eq!(q, trivial_quandle(5).unwrap());
    }

    #[test]
    fn alexander_3_2_equals_dihedral_3() {
        // 2x + (1-2)y = 2x - y = 2x + 2y; same table as 2y - x over Z_3
        assert_eq!(
            alexander_quandle(3, 2).unwrap(),
            dihedral_quandle(3).unwrap()
        );
    }

    #[test]
    fn alexander_5_3_sample_entry() {
        let q = alexander_quandle(5, 3).unwrap();
        assert_eq!(q.apply(1, 0), 3);
    }

    #[test]
    fn alexander_rejects_non_units() {
        assert!(matches!(
            alexander_quandle(4, 2),
            Err(Error::NotAUnit {
                value: 2,
                modulus: 4
            })
        ));
    }

    #[test]
    fn conjugation_of_abelian_group_is_trivial() {
        let g = FiniteGroup::cyclic(4).unwrap();
        assert_eq!(conjugation_quandle(&g), trivial_quandle(4).unwrap());
    }

    #[test]
    fn conjugation_of_symmetric_group() {
        let g = FiniteGroup::symmetric(3).unwrap();
        let q = conjugation_quandle(&g);
        assert_eq!(q.order(), 6);
        assert!(verify_quandle(q.op()).passed());
    }

    #[test]
    fn conjugation_of_order_one_group() {
        let g = FiniteGroup::cyclic(1).unwrap();
        assert_eq!(conjugation_quandle(&g).order(), 1);
    }

    #[test]
    fn core_of_cyclic_3_is_dihedral_3() {
        let g = FiniteGroup::cyclic(3).unwrap();
        assert_eq!(core_quandle(&g), dihedral_quandle(3).unwrap());
    }

    #[test]
    fn core_of_small_groups() {
        let g1 = FiniteGroup::cyclic(1).unwrap();
        assert_eq!(core_quandle(&g1).order(), 1);
        let g2 = FiniteGroup::cyclic(2).unwrap();
        assert_eq!(core_quandle(&g2), trivial_quandle(2).unwrap());
    }

    #[test]
    fn symmetries_of_dihedral_3() {
        let q = dihedral_quandle(3).unwrap();
        assert_eq!(q.symmetry(0).images(), &[0, 2, 1]);
        assert_eq!(q.symmetry(1).images(), &[2, 1, 0]);
    }
}
