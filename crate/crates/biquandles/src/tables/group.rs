//! Finite groups as validated multiplication tables. These exist to feed the
//! conjugation, core and Wada constructions, which only need products and
//! inverses.

use crate::error::{Error, Result};
use crate::perm::{all_permutations, Permutation};
use crate::tables::{
    AxiomId, OperationTable, ReportBuilder, VerificationReport, DEFAULT_VIOLATION_CAP,
};

/// A group given by its Cayley table, with identity and inverses recovered
/// during validation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteGroup {
    mul: OperationTable,
    identity: usize,
    inv: Vec<usize>,
}

impl FiniteGroup {
    /// Validates the table and recovers the identity and inverse sequence.
    pub fn from_table(mul: OperationTable) -> Result<Self> {
        let report = verify_group(&mul);
        if !report.passed() {
            return Err(Error::InvalidGroup(report));
        }
        let n = mul.order();
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| mul.get(e, x) == x && mul.get(x, e) == x))
            .expect("verified group has an identity");
        let inv = (0..n)
            .map(|a| {
                (0..n)
                    .find(|&b| mul.get(a, b) == identity && mul.get(b, a) == identity)
                    .expect("verified group has inverses")
            })
            .collect();
        Ok(Self { mul, identity, inv })
    }

    /// The cyclic group `Z_n` under addition.
    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroOrder);
        }
        Self::from_table(OperationTable::from_fn(n, |a, b| (a + b) % n))
    }

    /// The symmetric group on `degree` letters; elements are indexed by the
    /// lexicographic order of their image sequences.
    ///
    /// The Cayley table has `(degree!)²` entries, so the degree is capped.
    pub fn symmetric(degree: usize) -> Result<Self> {
        if degree == 0 {
            return Err(Error::ZeroOrder);
        }
        if degree > 6 {
            return Err(Error::CapExceeded {
                what: "symmetric group degree",
                limit: 6,
                actual: degree,
            });
        }
        let perms = all_permutations(degree);
        let index = |p: &Permutation| perms.binary_search(p).expect("closed under composition");
        let mul = OperationTable::from_fn(perms.len(), |a, b| index(&perms[a].compose(&perms[b])));
        Self::from_table(mul)
    }

    pub fn order(&self) -> usize {
        self.mul.order()
    }

    pub fn table(&self) -> &OperationTable {
        &self.mul
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul.get(a, b)
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn inverses(&self) -> &[usize] {
        &self.inv
    }

    /// The left-regular representation: `a ↦ (x ↦ a·x)` as a permutation
    /// group on the element indices.
    pub fn regular_representation(&self) -> Vec<Permutation> {
        (0..self.order())
            .map(|a| {
                Permutation::from_images((0..self.order()).map(|x| self.mul(a, x)).collect())
                    .expect("left translations of a group are bijective")
            })
            .collect()
    }
}

/// Checks associativity, a two-sided identity and two-sided inverses,
/// exhaustively.
pub fn verify_group(mul: &OperationTable) -> VerificationReport {
    verify_group_with_cap(mul, DEFAULT_VIOLATION_CAP)
}

pub fn verify_group_with_cap(mul: &OperationTable, cap: usize) -> VerificationReport {
    let n = mul.order();
    let mut report = ReportBuilder::new(cap);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if mul.get(mul.get(x, y), z) != mul.get(x, mul.get(y, z)) {
                    report.record(AxiomId::GroupAssociativity, vec![x, y, z]);
                }
            }
        }
    }
    let identity = (0..n).find(|&e| (0..n).all(|x| mul.get(e, x) == x && mul.get(x, e) == x));
    match identity {
        None => report.record(AxiomId::GroupIdentity, vec![]),
        Some(e) => {
            for a in 0..n {
                if !(0..n).any(|b| mul.get(a, b) == e && mul.get(b, a) == e) {
                    report.record(AxiomId::GroupInverse, vec![a]);
                }
            }
        }
    }
    report.finish()
}
