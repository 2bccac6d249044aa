//! Finite biquandles: a pair of operation tables subject to the diagonal
//! law, the bijectivity conditions (including the pair map `S`) and the
//! three exchange laws.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::tables::quandle::is_unit;
use crate::tables::{
    AxiomId, FiniteGroup, OperationTable, ReportBuilder, VerificationReport, DEFAULT_VIOLATION_CAP,
};

/// A validated biquandle. `under.get(x, y)` is the under operation applied to
/// `(x, y)`, `over.get(x, y)` the over operation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FiniteBiquandle {
    under: OperationTable,
    over: OperationTable,
}

impl FiniteBiquandle {
    /// Wraps a table pair after checking all biquandle axioms.
    pub fn new(under: OperationTable, over: OperationTable) -> Result<Self> {
        let report = verify_biquandle(&under, &over)?;
        if report.passed() {
            Ok(Self { under, over })
        } else {
            Err(Error::InvalidBiquandle(report))
        }
    }

    pub(crate) fn new_unchecked(under: OperationTable, over: OperationTable) -> Self {
        debug_assert!(verify_biquandle(&under, &over).is_ok_and(|r| r.passed()));
        Self { under, over }
    }

    pub fn under(&self) -> &OperationTable {
        &self.under
    }

    pub fn over(&self) -> &OperationTable {
        &self.over
    }

    pub fn order(&self) -> usize {
        self.under.order()
    }

    #[inline]
    pub fn under_at(&self, x: usize, y: usize) -> usize {
        self.under.get(x, y)
    }

    #[inline]
    pub fn over_at(&self, x: usize, y: usize) -> usize {
        self.over.get(x, y)
    }

    /// The under column map `α_y : x ↦ under[x][y]`.
    pub fn alpha(&self, y: usize) -> Permutation {
        self.under
            .column_permutation(y)
            .expect("under column of a valid biquandle is a permutation")
    }

    /// The over column map `β_y : x ↦ over[x][y]`.
    pub fn beta(&self, y: usize) -> Permutation {
        self.over
            .column_permutation(y)
            .expect("over column of a valid biquandle is a permutation")
    }
}

/// Checks the biquandle axioms exhaustively.
///
/// Both tables must have the same order; a mismatch is an input error, not a
/// report. The pair map `S(x, y) = (over[y][x], under[x][y])` is checked for
/// bijectivity on all `n²` pairs.
pub fn verify_biquandle(
    under: &OperationTable,
    over: &OperationTable,
) -> Result<VerificationReport> {
    verify_biquandle_with_cap(under, over, DEFAULT_VIOLATION_CAP)
}

pub fn verify_biquandle_with_cap(
    under: &OperationTable,
    over: &OperationTable,
    cap: usize,
) -> Result<VerificationReport> {
    let n = under.order();
    if over.order() != n {
        return Err(Error::SizeMismatch {
            left: n,
            right: over.order(),
        });
    }
    let mut report = ReportBuilder::new(cap);

    for x in 0..n {
        if under.get(x, x) != over.get(x, x) {
            report.record(AxiomId::BiquandleDiagonal, vec![x]);
        }
    }

    for y in 0..n {
        if under.column_permutation(y).is_none() {
            report.record(AxiomId::BiquandleUnderColumn, vec![y]);
        }
        if over.column_permutation(y).is_none() {
            report.record(AxiomId::BiquandleOverColumn, vec![y]);
        }
    }

    // Pair map S(x, y) = (over[y][x], under[x][y]) over all n² pairs.
    let mut seen: BTreeMap<(usize, usize), (usize, usize)> = BTreeMap::new();
    for x in 0..n {
        for y in 0..n {
            let image = (over.get(y, x), under.get(x, y));
            if let Some(&(px, py)) = seen.get(&image) {
                report.record(AxiomId::BiquandlePairMap, vec![px, py, x, y]);
            } else {
                seen.insert(image, (x, y));
            }
        }
    }

    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let xy = under.get(x, y);
                let zy = under.get(z, y);
                let xz = under.get(x, z);
                let yz_over = over.get(y, z);
                if under.get(xy, zy) != under.get(xz, yz_over) {
                    report.record(AxiomId::BiquandleExchange1, vec![x, y, z]);
                }
                let x_over_z = over.get(x, z);
                if over.get(xy, zy) != under.get(x_over_z, yz_over) {
                    report.record(AxiomId::BiquandleExchange2, vec![x, y, z]);
                }
                let x_over_y = over.get(x, y);
                let z_over_y = over.get(z, y);
                let y_under_z = under.get(y, z);
                if over.get(x_over_y, z_over_y) != over.get(x_over_z, y_under_z) {
                    report.record(AxiomId::BiquandleExchange3, vec![x, y, z]);
                }
            }
        }
    }
    Ok(report.finish())
}

/// The dihedral biquandle on `Z_n`: under `(s+1)y - x`, over `s·x`, for a
/// unit `s`.
pub fn dihedral_biquandle(n: usize, s: usize) -> Result<FiniteBiquandle> {
    if n == 0 {
        return Err(Error::ZeroOrder);
    }
    if s >= n {
        return Err(Error::ElementOutOfRange { value: s, n });
    }
    if !is_unit(s, n) {
        return Err(Error::NotAUnit {
            value: s,
            modulus: n,
        });
    }
    let under = OperationTable::from_fn(n, |x, y| ((s + 1) * y + n - x) % n);
    let over = OperationTable::from_fn(n, |x, _| (s * x) % n);
    Ok(FiniteBiquandle::new_unchecked(under, over))
}

/// The Alexander biquandle on `Z_n`: under `t·x + (s-t)·y`, over `s·x`, for
/// units `t` and `s`.
pub fn alexander_biquandle(n: usize, t: usize, s: usize) -> Result<FiniteBiquandle> {
    if n == 0 {
        return Err(Error::ZeroOrder);
    }
    for v in [t, s] {
        if v >= n {
            return Err(Error::ElementOutOfRange { value: v, n });
        }
        if !is_unit(v, n) {
            return Err(Error::NotAUnit {
                value: v,
                modulus: n,
            });
        }
    }
    let s_minus_t = (s + n - t) % n;
    let under = OperationTable::from_fn(n, |x, y| (t * x + s_minus_t * y) % n);
    let over = OperationTable::from_fn(n, |x, _| (s * x) % n);
    Ok(FiniteBiquandle::new_unchecked(under, over))
}

/// The Wada biquandle of a group: under `b⁻¹ a⁻¹ b`, over `b⁻² a`.
pub fn wada_biquandle(g: &FiniteGroup) -> FiniteBiquandle {
    let under = OperationTable::from_fn(g.order(), |a, b| g.mul(g.mul(g.inv(b), g.inv(a)), b));
    let over = OperationTable::from_fn(g.order(), |a, b| g.mul(g.mul(g.inv(b), g.inv(b)), a));
    FiniteBiquandle::new(under, over).expect("Wada tables satisfy the biquandle axioms")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tables::quandle::{dihedral_quandle, trivial_quandle, verify_quandle};

    fn columns_table(n: usize, cols: &[&[usize]]) -> OperationTable {
        OperationTable::from_fn(n, |x, y| cols[y][x])
    }

    #[test]
    fn id_swap_columns_fail_pair_map() {
        // under = over with column maps (id, swap): S(0,1) = S(1,0) = (1,1).
        let t = columns_table(2, &[&[0, 1], &[1, 0]]);
        let report = verify_biquandle(&t, &t).unwrap();
        assert!(!report.passed());
        let pair_map = report
            .violations()
            .iter()
            .find(|v| v.axiom == AxiomId::BiquandlePairMap)
            .expect("pair map violation");
        assert_eq!(pair_map.witness, vec![0, 1, 1, 0]);
    }

    #[test]
    fn trivial_pair_passes() {
        let t = OperationTable::from_fn(2, |x, _| x);
        assert!(verify_biquandle(&t, &t).unwrap().passed());
    }

    #[test]
    fn wada_tables_on_cyclic_3_match_formulas() {
        // Additive evaluation: under = -a, over = a - 2b = a + b (mod 3).
        let g = FiniteGroup::cyclic(3).unwrap();
        let b = wada_biquandle(&g);
        let expect_under = OperationTable::from_fn(3, |a, _| (3 - a) % 3);
        let expect_over = OperationTable::from_fn(3, |a, bb| (a + 6 - 2 * bb) % 3);
        assert_eq!(b.under(), &expect_under);
        assert_eq!(b.over(), &expect_over);
        assert!(verify_biquandle(b.under(), b.over()).unwrap().passed());
    }

    #[test]
    fn wada_of_order_one_group() {
        let g = FiniteGroup::cyclic(1).unwrap();
        assert_eq!(wada_biquandle(&g).order(), 1);
    }

    #[test]
    fn wada_of_symmetric_group_passes() {
        let g = FiniteGroup::symmetric(3).unwrap();
        let b = wada_biquandle(&g);
        assert_eq!(b.order(), 6);
        assert!(verify_biquandle(b.under(), b.over()).unwrap().passed());
    }

    #[test]
    fn mismatched_sizes_are_input_errors() {
        let a = OperationTable::from_fn(2, |x, _| x);
        let b = OperationTable::from_fn(3, |x, _| x);
        assert!(matches!(
            verify_biquandle(&a, &b),
            Err(Error::SizeMismatch { left: 2, right: 3 })
        ));
    }

    #[test]
    fn dihedral_biquandle_s1_recovers_dihedral_quandle() {
        let b = dihedral_biquandle(3, 1).unwrap();
        assert_eq!(b.under(), dihedral_quandle(3).unwrap().op());
        for y in 0..3 {
            assert!(b.beta(y).is_identity());
        }
    }

    #[test]
    fn dihedral_biquandle_5_2_tables() {
        let b = dihedral_biquandle(5, 2).unwrap();
        let expect_under = OperationTable::from_fn(5, |x, y| (3 * y + 5 - x) % 5);
        let expect_over = OperationTable::from_fn(5, |x, _| 2 * x % 5);
        assert_eq!(b.under(), &expect_under);
        assert_eq!(b.over(), &expect_over);
        assert_eq!(b.under_at(1, 0), 4);
    }

    #[test]
    fn dihedral_biquandle_rejects_non_units() {
        assert!(matches!(
            dihedral_biquandle(4, 2),
            Err(Error::NotAUnit {
                value: 2,
                modulus: 4
            })
        ));
    }

    #[test]
    fn alexander_biquandle_5_2_3() {
        let b = alexander_biquandle(5, 2, 3).unwrap();
        let expect_under = OperationTable::from_fn(5, |x, y| (2 * x + y) % 5);
        assert_eq!(b.under(), &expect_under);
        assert!(verify_biquandle(b.under(), b.over()).unwrap().passed());
    }

    #[test]
    fn alexander_biquandle_with_t_equal_s() {
        // s - t = 0 makes both operations x ↦ t·x, constant in y.
        let b = alexander_biquandle(5, 3, 3).unwrap();
        for x in 0..5 {
            for y in 0..5 {
                assert_eq!(b.under_at(x, y), 3 * x % 5);
                assert_eq!(b.over_at(x, y), 3 * x % 5);
                assert_eq!(b.under_at(x, x), b.over_at(x, x));
            }
        }
    }

    #[test]
    fn identity_over_columns_reduce_to_quandle_check() {
        // With all over columns the identity, the pair passes iff the under
        // table is a quandle.
        let id_over = OperationTable::from_fn(3, |x, _| x);
        let good = dihedral_quandle(3).unwrap();
        assert!(verify_biquandle(good.op(), &id_over).unwrap().passed());

        let bad =
            OperationTable::from_rows(vec![vec![1, 0, 0], vec![2, 1, 1], vec![0, 2, 2]]).unwrap();
        assert!(!verify_quandle(&bad).passed());
        assert!(!verify_biquandle(&bad, &id_over).unwrap().passed());

        let trivial = trivial_quandle(3).unwrap();
        assert!(verify_biquandle(trivial.op(), &id_over).unwrap().passed());
    }
}
