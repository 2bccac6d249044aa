//! Exhaustive generation: every biquandle structure on a quandle, every
//! biquandle of a small order by raw column search, and the cross-check
//! tying the two censuses together member-for-member.
//!
//! Both searches are complete within their caps and deterministic: outputs
//! are lexicographically sorted, identical inputs give identical lists.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::morphisms::{quandle_aut_group, structures_isomorphic};
use crate::perm::{all_permutations, Permutation};
use crate::structures::{
    extract_structure, realize, realize_unchecked, verify_structure, BiquandleStructure,
};
use crate::tables::{verify_biquandle, FiniteBiquandle, FiniteQuandle, OperationTable};

/// Caps on the exhaustive searches. Exceeding one is an explicit decision:
/// construct your own limits and pass them to the `_with` variants.
#[derive(Debug, Clone)]
pub struct EnumerationLimits {
    /// Largest quandle order `enumerate_structures` accepts.
    pub max_order: usize,
    /// Largest automorphism-group order `enumerate_structures` accepts.
    pub max_aut_order: usize,
    /// Largest order `enumerate_biquandles_bruteforce` accepts; the raw
    /// search space is `(n!)^n · (n!)^n` before pruning.
    pub max_bruteforce_order: usize,
}

impl Default for EnumerationLimits {
    fn default() -> Self {
        Self {
            max_order: 6,
            max_aut_order: 24,
            max_bruteforce_order: 3,
        }
    }
}

/// All biquandle structures on one quandle, classified up to isomorphism.
#[derive(Debug, Clone)]
pub struct StructureCensus {
    base: FiniteQuandle,
    all: Vec<BiquandleStructure>,
    classes: Vec<Vec<usize>>,
    representatives: Vec<usize>,
}

impl StructureCensus {
    pub fn base(&self) -> &FiniteQuandle {
        &self.base
    }

    /// Every structure, lexicographically sorted by beta family.
    pub fn all(&self) -> &[BiquandleStructure] {
        &self.all
    }

    pub fn count(&self) -> usize {
        self.all.len()
    }

    /// Index partition of `all` under structure isomorphism.
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Lexicographically minimal member of each class.
    pub fn representatives(&self) -> impl Iterator<Item = &BiquandleStructure> {
        self.representatives.iter().map(|&i| &self.all[i])
    }

    pub fn representative_indices(&self) -> &[usize] {
        &self.representatives
    }
}

/// Finds every beta family on `q` satisfying the structure conditions, by
/// backtracking in element order with incremental pruning: the diagonal
/// condition as a partial-injectivity constraint on `y ↦ β_y(y)`, the
/// coherence condition on every pair whose four indices are assigned.
pub fn enumerate_structures(q: &FiniteQuandle) -> Result<StructureCensus> {
    enumerate_structures_with(q, &EnumerationLimits::default())
}

pub fn enumerate_structures_with(
    q: &FiniteQuandle,
    limits: &EnumerationLimits,
) -> Result<StructureCensus> {
    let n = q.order();
    if n > limits.max_order {
        return Err(Error::CapExceeded {
            what: "quandle order",
            limit: limits.max_order,
            actual: n,
        });
    }
    let aut = quandle_aut_group(q);
    if aut.order() > limits.max_aut_order {
        return Err(Error::CapExceeded {
            what: "automorphism group order",
            limit: limits.max_aut_order,
            actual: aut.order(),
        });
    }
    let auts = aut.elements();

    let mut all = Vec::new();
    let mut chosen: Vec<usize> = Vec::with_capacity(n);
    let mut diag_used = vec![false; n];
    search_structures(q, auts, &mut chosen, &mut diag_used, &mut all);
    debug_assert!(all.windows(2).all(|w| w[0] < w[1]), "search emits in order");
    debug_assert!(all
        .iter()
        .all(|s| verify_structure(s.base(), s.betas()).unwrap().passed()));

    let mut classes: Vec<Vec<usize>> = Vec::new();
    for idx in 0..all.len() {
        let home = classes
            .iter_mut()
            .find(|c| structures_isomorphic(&all[c[0]], &all[idx]).found());
        match home {
            Some(class) => class.push(idx),
            None => classes.push(vec![idx]),
        }
    }
    let representatives = classes.iter().map(|c| c[0]).collect();
    Ok(StructureCensus {
        base: q.clone(),
        all,
        classes,
        representatives,
    })
}

fn search_structures(
    q: &FiniteQuandle,
    auts: &[Permutation],
    chosen: &mut Vec<usize>,
    diag_used: &mut Vec<bool>,
    out: &mut Vec<BiquandleStructure>,
) {
    let n = q.order();
    let y = chosen.len();
    if y == n {
        let betas: Vec<Permutation> = chosen.iter().map(|&i| auts[i].clone()).collect();
        out.push(BiquandleStructure::new_unchecked(q.clone(), betas));
        return;
    }
    for idx in 0..auts.len() {
        let d = auts[idx].apply(y);
        if diag_used[d] {
            continue;
        }
        chosen.push(idx);
        diag_used[d] = true;
        if coherence_holds_so_far(q, auts, chosen) {
            search_structures(q, auts, chosen, diag_used, out);
        }
        chosen.pop();
        diag_used[d] = false;
    }
}

/// Checks the coherence pairs that became fully determined with the newest
/// assignment. A pair `(x, y)` is checkable once `β_x`, `β_y` and the two
/// derived indices `β_y(x*y)`, `β_x(y)` all have assigned betas.
fn coherence_holds_so_far(q: &FiniteQuandle, auts: &[Permutation], chosen: &[usize]) -> bool {
    let level = chosen.len();
    let newest = level - 1;
    for x in 0..level {
        for y in 0..level {
            let i1 = auts[chosen[y]].apply(q.apply(x, y));
            if i1 >= level {
                continue;
            }
            let i2 = auts[chosen[x]].apply(y);
            if i2 >= level {
                continue;
            }
            if x != newest && y != newest && i1 != newest && i2 != newest {
                continue;
            }
            let (a, b) = (&auts[chosen[i1]], &auts[chosen[y]]);
            let (c, d) = (&auts[chosen[i2]], &auts[chosen[x]]);
            if (0..q.order()).any(|t| a.apply(b.apply(t)) != c.apply(d.apply(t))) {
                return false;
            }
        }
    }
    true
}

/// All biquandles of one order found by raw search over column maps.
#[derive(Debug, Clone)]
pub struct BiquandleCensus {
    order: usize,
    all: Vec<FiniteBiquandle>,
}

impl BiquandleCensus {
    pub fn order(&self) -> usize {
        self.order
    }

    /// Every biquandle of the order, sorted by table pair, duplicate-free.
    pub fn all(&self) -> &[FiniteBiquandle] {
        &self.all
    }

    pub fn count(&self) -> usize {
        self.all.len()
    }
}

/// Enumerates every biquandle of order `n` as a raw table pair.
///
/// Both tables must have permutation columns, so candidates range over
/// `n`-tuples of permutations per table; the diagonal law is applied while
/// pairing tuples, everything else by full verification. This is the global
/// oracle the structure machinery is checked against.
pub fn enumerate_biquandles_bruteforce(n: usize) -> Result<BiquandleCensus> {
    enumerate_biquandles_bruteforce_with(n, &EnumerationLimits::default())
}

pub fn enumerate_biquandles_bruteforce_with(
    n: usize,
    limits: &EnumerationLimits,
) -> Result<BiquandleCensus> {
    if n == 0 {
        return Err(Error::ZeroOrder);
    }
    if n > limits.max_bruteforce_order {
        return Err(Error::CapExceeded {
            what: "brute-force census order",
            limit: limits.max_bruteforce_order,
            actual: n,
        });
    }
    let perms = all_permutations(n);
    // perms_with[x][v]: indices of the permutations sending x to v
    let mut perms_with = vec![vec![Vec::new(); n]; n];
    for (pi, p) in perms.iter().enumerate() {
        for x in 0..n {
            perms_with[x][p.apply(x)].push(pi);
        }
    }

    let mut all = Vec::new();
    let mut alpha = vec![0usize; n];
    loop {
        let under = OperationTable::from_fn(n, |x, y| perms[alpha[y]].apply(x));
        // the diagonal law pins each β_x to send x to under[x][x]
        let choices: Vec<&[usize]> = (0..n)
            .map(|x| perms_with[x][under.get(x, x)].as_slice())
            .collect();
        let bases: Vec<usize> = choices.iter().map(|c| c.len()).collect();
        if bases.iter().all(|&b| b > 0) {
            let mut pick = vec![0usize; n];
            loop {
                let over = OperationTable::from_fn(n, |x, y| perms[choices[y][pick[y]]].apply(x));
                let report = verify_biquandle(&under, &over).expect("orders match");
                if report.passed() {
                    all.push(FiniteBiquandle::new_unchecked(under.clone(), over));
                }
                if !advance(&mut pick, &bases) {
                    break;
                }
            }
        }
        if !advance(&mut alpha, &vec![perms.len(); n]) {
            break;
        }
    }
    all.sort();
    let before = all.len();
    all.dedup();
    debug_assert_eq!(
        before,
        all.len(),
        "distinct column tuples give distinct tables"
    );
    Ok(BiquandleCensus { order: n, all })
}

/// Odometer step over mixed radixes; false when the counters wrap around.
fn advance(counters: &mut [usize], bases: &[usize]) -> bool {
    for i in (0..counters.len()).rev() {
        counters[i] += 1;
        if counters[i] < bases[i] {
            return true;
        }
        counters[i] = 0;
    }
    false
}

/// Result of [`census_crosscheck`]; its `Display` is the one-line summary
/// the command-line front end prints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusCrosscheck {
    pub order: usize,
    pub census_count: usize,
    pub roundtrip_count: usize,
    pub underlying_quandle_count: usize,
    pub structure_total: usize,
}

impl fmt::Display for CensusCrosscheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "census={}, roundtrip={}/{}",
            self.census_count, self.roundtrip_count, self.census_count
        )
    }
}

/// Runs the full consistency check at order `n`:
///
/// - every census member extracts to a valid structure and realizes back to
///   itself, table-exactly;
/// - grouping members by underlying quandle and enumerating structures on
///   each underlying quandle reproduces the census member-for-member.
///
/// Any mismatch is a hard [`Error::Internal`] naming the counterexample
/// tables.
pub fn census_crosscheck(n: usize) -> Result<CensusCrosscheck> {
    census_crosscheck_with(n, &EnumerationLimits::default())
}

pub fn census_crosscheck_with(n: usize, limits: &EnumerationLimits) -> Result<CensusCrosscheck> {
    let census = enumerate_biquandles_bruteforce_with(n, limits)?;
    let mut roundtrip_count = 0usize;
    let mut by_quandle: BTreeMap<OperationTable, Vec<usize>> = BTreeMap::new();
    for (i, b) in census.all().iter().enumerate() {
        let s = extract_structure(b)?;
        let back = realize(&s)?;
        if &back != b {
            return Err(Error::Internal(format!(
                "round trip changed the tables\nunder:\n{}\nover:\n{}",
                b.under(),
                b.over()
            )));
        }
        roundtrip_count += 1;
        by_quandle.entry(s.base().op().clone()).or_default().push(i);
    }

    let mut structure_total = 0usize;
    for (op, members) in &by_quandle {
        let q = FiniteQuandle::new(op.clone())?;
        let structures = enumerate_structures_with(&q, limits)?;
        structure_total += structures.count();
        let member_set: BTreeSet<&FiniteBiquandle> =
            members.iter().map(|&i| &census.all()[i]).collect();
        let realized: Vec<FiniteBiquandle> =
            structures.all().iter().map(realize_unchecked).collect();
        let realized_set: BTreeSet<&FiniteBiquandle> = realized.iter().collect();
        if member_set != realized_set {
            return Err(Error::Internal(format!(
                "census and structure enumeration disagree over the quandle\n{op}"
            )));
        }
    }
    Ok(CensusCrosscheck {
        order: n,
        census_count: census.count(),
        roundtrip_count,
        underlying_quandle_count: by_quandle.len(),
        structure_total,
    })
}
