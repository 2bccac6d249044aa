//! Acceptance suite: one test per criterion, each printing a pass line.
//!
//! Every quantitative anchor below was produced by an in-repo brute-force
//! oracle (exhaustive enumeration, naive `n!` filtering, direct conjugation)
//! before being frozen; the tests recompute both routes and compare.
//!
//! Run with `cargo test -p biquandles --test acceptance -- --nocapture` to
//! see the per-criterion lines.

use std::collections::BTreeSet;
use std::time::Instant;

use biquandles::enumeration::{enumerate_biquandles_bruteforce, enumerate_structures};
use biquandles::morphisms::{
    biquandle_aut_group, biquandle_aut_group_naive, centralizer, dihedral_biquandle_aut,
    is_biquandle_hom, is_quandle_hom, quandle_aut_group, quandle_aut_group_naive,
    setwise_normalizer, structures_isomorphic,
};
use biquandles::products::{
    biquandle_components, decompose_product_aut, pair_map, product_aut_group, product_biquandle,
};
use biquandles::structures::{constant_structure, extract_structure, realize, underlying_quandle};
use biquandles::tables::{
    alexander_biquandle, alexander_quandle, conjugation_quandle, core_quandle, dihedral_biquandle,
    dihedral_quandle, trivial_quandle, verify_biquandle, verify_quandle, wada_biquandle,
    FiniteBiquandle, FiniteGroup, FiniteQuandle,
};
use biquandles::{
    census_crosscheck, classify_constant_structures, BiquandleStructure, Permutation,
};

fn units(n: usize) -> Vec<usize> {
    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    (1..n).filter(|&s| gcd(s, n) == 1).collect()
}

#[test]
fn criterion_01_axiom_suite() {
    let start = Instant::now();
    for n in 1..=8 {
        assert!(verify_quandle(dihedral_quandle(n).unwrap().op()).passed());
    }
    for t in [1, 2, 3, 4] {
        assert!(verify_quandle(alexander_quandle(5, t).unwrap().op()).passed());
    }
    let groups = [
        FiniteGroup::cyclic(2).unwrap(),
        FiniteGroup::cyclic(3).unwrap(),
        FiniteGroup::symmetric(3).unwrap(),
    ];
    for g in &groups {
        assert!(verify_quandle(conjugation_quandle(g).op()).passed());
        assert!(verify_quandle(core_quandle(g).op()).passed());
        let w = wada_biquandle(g);
        assert!(verify_biquandle(w.under(), w.over()).unwrap().passed());
    }
    for n in [3, 5, 7] {
        for s in units(n) {
            let b = dihedral_biquandle(n, s).unwrap();
            assert!(verify_biquandle(b.under(), b.over()).unwrap().passed());
        }
    }
    for t in units(5) {
        for s in units(5) {
            let b = alexander_biquandle(5, t, s).unwrap();
            assert!(verify_biquandle(b.under(), b.over()).unwrap().passed());
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 5.0, "axiom suite took {elapsed:?}");
    println!("criterion 1: PASS — axiom suite green on the whole family grid in {elapsed:?}");
}

#[test]
fn criterion_02_round_trips() {
    let start = Instant::now();
    // extract ∘ realize = id on every structure in every census
    let bases = [
        trivial_quandle(2).unwrap(),
        trivial_quandle(3).unwrap(),
        dihedral_quandle(3).unwrap(),
        dihedral_quandle(4).unwrap(),
    ];
    let mut structures_checked = 0usize;
    for q in &bases {
        let census = enumerate_structures(q).unwrap();
        for s in census.all() {
            let b = realize(s).unwrap();
            assert_eq!(&extract_structure(&b).unwrap(), s, "extract ∘ realize ≠ id");
            structures_checked += 1;
        }
    }
    // realize ∘ extract = id on every member of the order ≤ 3 raw census
    let mut members_checked = 0usize;
    for n in 1..=3 {
        for b in enumerate_biquandles_bruteforce(n).unwrap().all() {
            let s = extract_structure(b).unwrap();
            assert_eq!(&realize(&s).unwrap(), b, "realize ∘ extract ≠ id");
            members_checked += 1;
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 30.0, "round trips took {elapsed:?}");
    println!(
        "criterion 2: PASS — {structures_checked} structures and {members_checked} census members \
         round-trip table-exactly in {elapsed:?}"
    );
}

#[test]
fn criterion_03_census_counts_and_crosscheck() {
    assert_eq!(enumerate_biquandles_bruteforce(1).unwrap().count(), 1);
    assert_eq!(enumerate_biquandles_bruteforce(2).unwrap().count(), 2);
    for n in 1..=3 {
        let report = census_crosscheck(n).unwrap();
        assert_eq!(report.roundtrip_count, report.census_count);
        assert_eq!(report.structure_total, report.census_count);
    }
    // output of the exhaustive search, confirmed member-for-member against
    // the structure enumeration by the crosscheck above
    assert_eq!(enumerate_biquandles_bruteforce(3).unwrap().count(), 36);
    println!("criterion 3: PASS — census counts 1/2/36 at orders 1/2/3, crosscheck green");
}

#[test]
fn criterion_04_constant_structure_classification() {
    // independent oracle: direct conjugation over the naive automorphism set
    fn class_count_oracle(q: &FiniteQuandle) -> usize {
        let elems = quandle_aut_group_naive(q).elements().to_vec();
        let mut remaining: Vec<Permutation> = elems.clone();
        let mut count = 0;
        while let Some(e) = remaining.first().cloned() {
            let class: BTreeSet<Permutation> = elems
                .iter()
                .map(|h| h.compose(&e).compose(&h.inverse()))
                .collect();
            remaining.retain(|p| !class.contains(p));
            count += 1;
        }
        count
    }

    let cases = [
        (trivial_quandle(2).unwrap(), 2),
        (trivial_quandle(3).unwrap(), 3),
        (dihedral_quandle(3).unwrap(), 3),
        (dihedral_quandle(5).unwrap(), 5),
    ];
    for (q, expected) in &cases {
        let classes = classify_constant_structures(q);
        assert_eq!(classes.len(), *expected);
        assert_eq!(classes.len(), class_count_oracle(q));
        let total: usize = classes.iter().map(|(_, size)| size).sum();
        assert_eq!(total, quandle_aut_group(q).order());
        // distinct representatives realize pairwise non-isomorphic
        // biquandles, confirmed by exhaustive search over all bijections
        let reps: Vec<BiquandleStructure> = classes
            .iter()
            .map(|(f, _)| constant_structure(q, f).unwrap())
            .collect();
        let realized: Vec<FiniteBiquandle> = reps.iter().map(|s| realize(s).unwrap()).collect();
        let perms = biquandles::perm::all_permutations(q.order());
        for (i, a) in reps.iter().enumerate() {
            for (j, b) in reps.iter().enumerate().skip(i + 1) {
                assert!(!structures_isomorphic(a, b).found());
                assert!(perms.iter().all(|p| !is_biquandle_hom(
                    &realized[i],
                    &realized[j],
                    p.images()
                )));
            }
        }
    }
    println!("criterion 4: PASS — constant classes 2/3/3/5 equal the conjugacy-class counts");
}

#[test]
fn criterion_05_constant_aut_is_the_centralizer() {
    let start = Instant::now();
    for n in [3, 5] {
        let q = dihedral_quandle(n).unwrap();
        let aut = quandle_aut_group(&q);
        for f in aut.elements() {
            let b = realize(&constant_structure(&q, f).unwrap()).unwrap();
            let left = biquandle_aut_group(&b).unwrap();
            let right = centralizer(&aut, f).unwrap();
            assert_eq!(left.elements(), right.elements(), "n={n}, f=({f})");
        }
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 10.0,
        "centralizer sweep took {elapsed:?}"
    );
    println!(
        "criterion 5: PASS — Aut of every constant-structure biquandle over R_3 and R_5 \
         equals the centralizer, elementwise, in {elapsed:?}"
    );
}

#[test]
fn criterion_06_dihedral_biquandle_formula() {
    for (n, s) in [(5, 2), (5, 3), (7, 2), (7, 4)] {
        let formula = dihedral_biquandle_aut(n, s).unwrap();
        let b = dihedral_biquandle(n, s).unwrap();
        let searched = biquandle_aut_group(&b).unwrap();
        assert_eq!(formula.elements(), searched.elements(), "(n,s)=({n},{s})");
        // oracle: all n! bijections filtered through both operations
        let naive = biquandle_aut_group_naive(&b);
        assert_eq!(formula.elements(), naive.elements(), "(n,s)=({n},{s})");
    }
    assert_eq!(dihedral_biquandle_aut(5, 2).unwrap().order(), 4);
    println!("criterion 6: PASS — centralizer formula matches the search at (5,2)(5,3)(7,2)(7,4), order 4 at (5,2)");
}

#[test]
fn criterion_07_normalizer_containment() {
    for q in [dihedral_quandle(3).unwrap(), trivial_quandle(3).unwrap()] {
        let aut_q = quandle_aut_group(&q);
        let census = enumerate_structures(&q).unwrap();
        for s in census.all() {
            let b = realize(s).unwrap();
            let aut_b = biquandle_aut_group(&b).unwrap();
            let mut beta_set: Vec<Permutation> = s.betas().to_vec();
            beta_set.sort();
            beta_set.dedup();
            let normalizer = setwise_normalizer(&aut_q, &beta_set).unwrap();
            for f in aut_b.elements() {
                assert!(
                    normalizer.contains(f),
                    "Aut(B) must sit inside the normalizer"
                );
            }
        }
    }
    println!("criterion 7: PASS — Aut(B) ⊆ setwise normalizer of the beta family, every structure");
}

#[test]
fn criterion_08_connected_product_aut() {
    let r3 = dihedral_quandle(3).unwrap();
    let result = product_aut_group(&r3, &r3).unwrap();
    assert!(result.from_factor_product);
    assert_eq!(result.group.order(), 36, "6 · 6 factor pairs");

    let pb = product_biquandle(&r3, &r3).unwrap();
    let searched = biquandle_aut_group(pb.biquandle()).unwrap();
    assert_eq!(result.group, searched, "factor-pair image = searched group");

    // (f, g) ↦ f × g is injective: 36 distinct images
    let aut = quandle_aut_group(&r3);
    let mut images = BTreeSet::new();
    for f in aut.elements() {
        for g in aut.elements() {
            images.insert(pair_map(&pb, f, g));
        }
    }
    assert_eq!(images.len(), 36);
    assert!(images.iter().all(|p| searched.contains(p)));
    println!("criterion 8: PASS — |Aut(R_3 × R_3)| = 36 and the pair map is a bijection onto it");
}

#[test]
fn criterion_09_product_decomposition() {
    let q = dihedral_quandle(4).unwrap();
    let k = dihedral_quandle(3).unwrap();
    let pb = product_biquandle(&q, &k).unwrap();

    let parts = biquandle_components(pb.biquandle());
    assert_eq!(parts.block_count(), 2);
    assert!(parts.blocks().iter().all(|b| b.len() == 6));

    let searched = biquandle_aut_group(pb.biquandle()).unwrap();
    for f in searched.elements() {
        let d = decompose_product_aut(&q, &k, f).unwrap();
        assert_eq!(d.left_components().block_count(), 2);
        assert_eq!(d.right_components().block_count(), 1);
        assert_eq!(&d.reassemble(), f, "blockwise maps must reassemble exactly");
    }
    println!(
        "criterion 9: PASS — all {} automorphisms of R_4 × R_3 decompose blockwise and \
         reassemble; component partition is 2 blocks of 6",
        searched.order()
    );
}

#[test]
fn criterion_10_functoriality() {
    // pool: every biquandle of order ≤ 3
    let mut pool: Vec<FiniteBiquandle> = Vec::new();
    for n in 1..=3 {
        pool.extend(
            enumerate_biquandles_bruteforce(n)
                .unwrap()
                .all()
                .iter()
                .cloned(),
        );
    }

    // homomorphisms as (from, to, map); seeded with identities, padded with
    // deterministic pseudo-random maps filtered by the definition
    let mut homs: Vec<(usize, usize, Vec<usize>)> = Vec::new();
    for (i, b) in pool.iter().enumerate() {
        homs.push((i, i, (0..b.order()).collect()));
    }
    let mut rng = 0x9e3779b97f4a7c15u64;
    let mut next = || {
        rng ^= rng << 13;
        rng ^= rng >> 7;
        rng ^= rng << 17;
        rng
    };
    while homs.len() < 70 {
        let from = (next() % pool.len() as u64) as usize;
        let to = (next() % pool.len() as u64) as usize;
        let (b1, b2) = (&pool[from], &pool[to]);
        let map: Vec<usize> = (0..b1.order())
            .map(|_| (next() % b2.order() as u64) as usize)
            .collect();
        if is_biquandle_hom(b1, b2, &map) {
            homs.push((from, to, map));
        }
    }
    // compositions of composable pairs round the pool out to 100
    let base = homs.clone();
    'outer: for (f_from, f_to, f_map) in &base {
        for (g_from, g_to, g_map) in &base {
            if g_from != f_to {
                continue;
            }
            let composed: Vec<usize> = f_map.iter().map(|&x| g_map[x]).collect();
            assert!(
                is_biquandle_hom(&pool[*f_from], &pool[*g_to], &composed),
                "composition of homomorphisms must be a homomorphism"
            );
            homs.push((*f_from, *g_to, composed));
            if homs.len() >= 100 {
                break 'outer;
            }
        }
    }
    assert!(
        homs.len() >= 100,
        "need 100 homomorphisms, got {}",
        homs.len()
    );
    homs.truncate(100);

    let underlying: Vec<FiniteQuandle> = pool
        .iter()
        .map(|b| underlying_quandle(b).unwrap())
        .collect();
    for (from, to, map) in &homs {
        // the induced map on underlying quandles is the same index map
        assert!(
            is_quandle_hom(&underlying[*from], &underlying[*to], map),
            "induced map must be a quandle homomorphism"
        );
    }
    // identity induces identity
    for (i, q) in underlying.iter().enumerate() {
        let id: Vec<usize> = (0..pool[i].order()).collect();
        assert!(is_quandle_hom(q, q, &id));
    }
    println!("criterion 10: PASS — 100 homomorphisms induce quandle homomorphisms, composition preserved");
}
