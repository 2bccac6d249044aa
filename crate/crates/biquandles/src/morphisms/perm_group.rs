//! Permutation groups as explicit element sets, with the group-theoretic
//! services the automorphism theorems are stated in: conjugacy classes,
//! centralizers, setwise normalizers and isomorphism testing.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::morphisms::IsoResult;
use crate::perm::Permutation;

/// Degrees up to this bound store their full element set eagerly; above it
/// the group keeps generators only and closes on first use.
const EAGER_DEGREE: usize = 8;

/// A finite group of permutations of `0..degree`.
///
/// Elements are kept sorted lexicographically, so `elements()[0]` of a
/// conjugacy class or a coset listing is the canonical representative and
/// every listing is deterministic.
#[derive(Debug, Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Option<Vec<Permutation>>,
    elements: OnceLock<Vec<Permutation>>,
}

impl PermGroup {
    pub fn trivial(degree: usize) -> Self {
        let elements = OnceLock::new();
        elements.set(vec![Permutation::identity(degree)]).ok();
        Self {
            degree,
            generators: Some(vec![]),
            elements,
        }
    }

    /// The full symmetric group on `0..degree`.
    pub fn symmetric(degree: usize) -> Self {
        if degree < 2 {
            return Self::trivial(degree);
        }
        let gens = vec![
            Permutation::transposition(degree, 0, 1),
            Permutation::full_cycle(degree),
        ];
        Self::generate(degree, gens).expect("generator degrees match")
    }

    /// The cyclic group generated by the full cycle.
    pub fn cyclic(degree: usize) -> Self {
        if degree < 2 {
            return Self::trivial(degree);
        }
        Self::generate(degree, vec![Permutation::full_cycle(degree)])
            .expect("generator degrees match")
    }

    /// The subgroup generated by `generators`.
    pub fn generate(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    actual: g.degree(),
                });
            }
        }
        let group = Self {
            degree,
            generators: Some(generators),
            elements: OnceLock::new(),
        };
        if degree <= EAGER_DEGREE {
            group.elements();
        }
        Ok(group)
    }

    /// Wraps an explicit element set, verifying closure, identity membership
    /// and inverse closure.
    pub fn from_elements(degree: usize, mut elements: Vec<Permutation>) -> Result<Self> {
        for p in &elements {
            if p.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    actual: p.degree(),
                });
            }
        }
        elements.sort();
        elements.dedup();
        if elements
            .binary_search(&Permutation::identity(degree))
            .is_err()
        {
            return Err(Error::NotAGroup {
                reason: "identity is missing".into(),
            });
        }
        for a in &elements {
            if elements.binary_search(&a.inverse()).is_err() {
                return Err(Error::NotAGroup {
                    reason: format!("inverse of ({a}) is missing"),
                });
            }
            for b in &elements {
                if elements.binary_search(&a.compose(b)).is_err() {
                    return Err(Error::NotAGroup {
                        reason: format!("not closed: ({a}) composed with ({b})"),
                    });
                }
            }
        }
        let cell = OnceLock::new();
        cell.set(elements).ok();
        Ok(Self {
            degree,
            generators: None,
            elements: cell,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements().len()
    }

    pub fn generators(&self) -> Option<&[Permutation]> {
        self.generators.as_deref()
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    /// The sorted element list, closing over the generators on first use.
    pub fn elements(&self) -> &[Permutation] {
        self.elements.get_or_init(|| {
            let gens = self
                .generators
                .as_ref()
                .expect("groups without stored elements carry generators");
            close_under_composition(self.degree, gens)
        })
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        p.degree() == self.degree && self.elements().binary_search(p).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.elements().iter().all(|p| other.contains(p))
    }
}

impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements() == other.elements()
    }
}

impl Eq for PermGroup {}

fn close_under_composition(degree: usize, gens: &[Permutation]) -> Vec<Permutation> {
    let mut set: BTreeSet<Permutation> = BTreeSet::new();
    let id = Permutation::identity(degree);
    set.insert(id.clone());
    let mut queue = vec![id];
    while let Some(p) = queue.pop() {
        for g in gens {
            let q = g.compose(&p);
            if set.insert(q.clone()) {
                queue.push(q);
            }
        }
    }
    set.into_iter().collect()
}

/// Partitions the group under conjugation `g ~ h g h⁻¹`.
///
/// Classes are listed in order of their lexicographically smallest member,
/// which is also each class's first element.
pub fn conjugacy_classes(group: &PermGroup) -> Vec<Vec<Permutation>> {
    let elems = group.elements();
    let mut assigned: BTreeSet<Permutation> = BTreeSet::new();
    let mut classes = Vec::new();
    for e in elems {
        if assigned.contains(e) {
            continue;
        }
        let class: BTreeSet<Permutation> = elems
            .iter()
            .map(|h| h.compose(e).compose(&h.inverse()))
            .collect();
        assigned.extend(class.iter().cloned());
        classes.push(class.into_iter().collect());
    }
    classes
}

/// The centralizer `{g ∈ G : g f = f g}`; `f` must belong to the group.
pub fn centralizer(group: &PermGroup, f: &Permutation) -> Result<PermGroup> {
    if !group.contains(f) {
        return Err(Error::NotInGroup);
    }
    let elems: Vec<Permutation> = group
        .elements()
        .iter()
        .filter(|g| g.compose(f) == f.compose(g))
        .cloned()
        .collect();
    PermGroup::from_elements(group.degree(), elems)
}

/// The setwise normalizer `{g ∈ G : g S g⁻¹ = S}`; every member of `S` must
/// belong to the group.
pub fn setwise_normalizer(group: &PermGroup, subset: &[Permutation]) -> Result<PermGroup> {
    let set: BTreeSet<Permutation> = subset.iter().cloned().collect();
    for p in &set {
        if !group.contains(p) {
            return Err(Error::NotInGroup);
        }
    }
    let elems: Vec<Permutation> = group
        .elements()
        .iter()
        .filter(|g| {
            let ginv = g.inverse();
            set.iter()
                .map(|s| g.compose(s).compose(&ginv))
                .collect::<BTreeSet<_>>()
                == set
        })
        .cloned()
        .collect();
    PermGroup::from_elements(group.degree(), elems)
}

/// Abstract-group isomorphism by backtracking over generator images.
///
/// Candidate images are restricted to elements of equal order. The witness,
/// when found, maps positions in `g1.elements()` to positions in
/// `g2.elements()`.
pub fn groups_isomorphic(g1: &PermGroup, g2: &PermGroup) -> IsoResult {
    let e1 = g1.elements();
    let e2 = g2.elements();
    let n = e1.len();
    if n != e2.len() {
        return IsoResult::not_found();
    }
    let orders1: Vec<usize> = e1.iter().map(Permutation::order).collect();
    let orders2: Vec<usize> = e2.iter().map(Permutation::order).collect();
    let mut sorted1 = orders1.clone();
    let mut sorted2 = orders2.clone();
    sorted1.sort_unstable();
    sorted2.sort_unstable();
    if sorted1 != sorted2 {
        return IsoResult::not_found();
    }

    let cay1 = cayley_indices(e1);
    let cay2 = cayley_indices(e2);
    let id1 = position_of_identity(e1);
    let id2 = position_of_identity(e2);
    let gens = greedy_generators(&cay1, id1);

    let mut state = MapState {
        map: vec![usize::MAX; n],
        used: vec![false; n],
        trail: Vec::new(),
    };
    state.force(id1, id2);

    if extend(&gens, 0, &orders1, &orders2, &cay1, &cay2, &mut state) {
        debug_assert!(state.map.iter().all(|&v| v != usize::MAX));
        debug_assert!((0..n)
            .all(|a| (0..n).all(|b| state.map[cay1[a][b]] == cay2[state.map[a]][state.map[b]])));
        let witness = Permutation::from_images(state.map).expect("bijection by construction");
        IsoResult::with_witness(witness)
    } else {
        IsoResult::not_found()
    }
}

struct MapState {
    map: Vec<usize>,
    used: Vec<bool>,
    trail: Vec<usize>,
}

impl MapState {
    fn force(&mut self, a: usize, b: usize) {
        self.map[a] = b;
        self.used[b] = true;
        self.trail.push(a);
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let a = self.trail.pop().unwrap();
            self.used[self.map[a]] = false;
            self.map[a] = usize::MAX;
        }
    }
}

fn extend(
    gens: &[usize],
    pos: usize,
    orders1: &[usize],
    orders2: &[usize],
    cay1: &[Vec<usize>],
    cay2: &[Vec<usize>],
    state: &mut MapState,
) -> bool {
    if pos == gens.len() {
        return state.map.iter().all(|&v| v != usize::MAX);
    }
    let g = gens[pos];
    for h in 0..orders2.len() {
        if state.used[h] || orders2[h] != orders1[g] {
            continue;
        }
        let mark = state.trail.len();
        if assign_and_close(g, h, cay1, cay2, state)
            && extend(gens, pos + 1, orders1, orders2, cay1, cay2, state)
        {
            return true;
        }
        state.undo_to(mark);
    }
    false
}

/// Maps `a ↦ b` and closes the partial homomorphism under all products with
/// already-mapped elements; fails on any conflict.
fn assign_and_close(
    a: usize,
    b: usize,
    cay1: &[Vec<usize>],
    cay2: &[Vec<usize>],
    state: &mut MapState,
) -> bool {
    if state.map[a] != usize::MAX {
        return state.map[a] == b;
    }
    if state.used[b] {
        return false;
    }
    state.force(a, b);
    let mut queue = vec![a];
    let n = cay1.len();
    while let Some(x) = queue.pop() {
        let fx = state.map[x];
        for y in 0..n {
            if state.map[y] == usize::MAX {
                continue;
            }
            let fy = state.map[y];
            for (p, q, fp, fq) in [(x, y, fx, fy), (y, x, fy, fx)] {
                let z = cay1[p][q];
                let w = cay2[fp][fq];
                if state.map[z] != usize::MAX {
                    if state.map[z] != w {
                        return false;
                    }
                } else {
                    if state.used[w] {
                        return false;
                    }
                    state.force(z, w);
                    queue.push(z);
                }
            }
        }
    }
    true
}

fn cayley_indices(elems: &[Permutation]) -> Vec<Vec<usize>> {
    elems
        .iter()
        .map(|a| {
            elems
                .iter()
                .map(|b| {
                    elems
                        .binary_search(&a.compose(b))
                        .expect("group is closed under composition")
                })
                .collect()
        })
        .collect()
}

fn position_of_identity(elems: &[Permutation]) -> usize {
    elems
        .iter()
        .position(Permutation::is_identity)
        .expect("group contains the identity")
}

/// A small generating sequence, chosen greedily over the sorted elements.
fn greedy_generators(cay: &[Vec<usize>], id: usize) -> Vec<usize> {
    let n = cay.len();
    let mut gens: Vec<usize> = Vec::new();
    let mut closed = subgroup_closure(cay, id, &gens);
    for e in 0..n {
        if closed.iter().filter(|&&b| b).count() == n {
            break;
        }
        if !closed[e] {
            gens.push(e);
            closed = subgroup_closure(cay, id, &gens);
        }
    }
    gens
}

fn subgroup_closure(cay: &[Vec<usize>], id: usize, gens: &[usize]) -> Vec<bool> {
    let mut member = vec![false; cay.len()];
    member[id] = true;
    let mut queue = vec![id];
    while let Some(x) = queue.pop() {
        for &g in gens {
            let y = cay[g][x];
            if !member[y] {
                member[y] = true;
                queue.push(y);
            }
        }
    }
    member
}
