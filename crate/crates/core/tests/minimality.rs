use std::collections::{BTreeMap, BTreeSet};

use bsymbols::constructible::families_of_rank;
use bsymbols::identities::{block_key, standard_supports};
use bsymbols::lusztig::character_b;
use bsymbols::{
    all_constructible, enumerate_admissible, f_iota_members, lusztig_families, minimal_symbol, minimal_symbol_block,
    AdmissibleInvolution, Bipartition, FamilyKey, Ratio, Symbol,
};
use itertools::Itertools;

/// All symbols with rows `x ∪ (fixed) ∪ one element of every pair`, by trying
/// every subset of `z` of the right size and keeping those that hit each
/// orbit exactly once.
fn brute_f_iota(key: &FamilyKey, inv: &AdmissibleInvolution) -> Vec<Symbol> {
    let take = key.l() + key.r;
    let mut out = Vec::new();
    for chosen in key.z.iter().copied().combinations(take) {
        let set: BTreeSet<u32> = chosen.iter().copied().collect();
        if !inv.orbits().iter().all(|o| o.iter().filter(|v| set.contains(v)).count() == 1) {
            continue;
        }
        let rest: Vec<u32> = key.z.iter().copied().filter(|v| !set.contains(v)).collect();
        out.push(
            Symbol::from_unsorted(
                key.x.iter().copied().chain(chosen).collect(),
                key.x.iter().copied().chain(rest).collect(),
            )
            .unwrap(),
        );
    }
    out.sort();
    out
}

fn argmin_unique<T: Clone>(items: &[T], value: impl Fn(&T) -> u64) -> Option<T> {
    let min = items.iter().map(&value).min()?;
    let at: Vec<&T> = items.iter().filter(|i| value(i) == min).collect();
    (at.len() == 1).then(|| at[0].clone())
}

#[test]
fn constructed_symbol_is_the_unique_minimum() {
    for n in 0..=5 {
        for r in 1..=4 {
            for (key, _) in families_of_rank(n, r) {
                for inv in enumerate_admissible(&key.z, r).unwrap() {
                    let brute = brute_f_iota(&key, &inv);
                    assert_eq!(brute.len(), 1 << inv.l());
                    assert_eq!(f_iota_members(&key, &inv).unwrap(), brute);
                    let best = argmin_unique(&brute, Symbol::b_invariant);
                    assert_eq!(best, Some(minimal_symbol(&key, &inv).unwrap()), "n = {n}, r = {r}, {key:?}, {inv:?}");
                }
            }
        }
    }
}

#[test]
fn block_construction_is_the_unique_b_d_minimum() {
    for z in standard_supports(5) {
        let key = block_key(&z);
        for inv in enumerate_admissible(&z, 0).unwrap() {
            let members = brute_f_iota(&key, &inv);
            for d in 0..=5 {
                let best = argmin_unique(&members, |m| m.b_d_invariant(d).unwrap());
                assert_eq!(best, Some(minimal_symbol_block(&z, &inv, d).unwrap()), "Z = {z:?}, {inv:?}, d = {d}");
            }
        }
    }
}

/// Builds the block symbol by always recursing on everything except the
/// least element and its partner, with the lowered depth.
fn single_recursion(items: &[u32], inv: &AdmissibleInvolution, d: usize) -> Symbol {
    let (mut beta, mut gamma) = (Vec::new(), Vec::new());
    let mut rest = items.to_vec();
    let mut d = d;
    while let Some(&least) = rest.first() {
        let partner = inv.image(least).unwrap();
        if d >= 1 {
            beta.push(least);
            gamma.push(partner);
            d -= 1;
        } else {
            beta.push(partner);
            gamma.push(least);
            d = 1;
        }
        rest.retain(|&v| v != least && v != partner);
    }
    Symbol::from_unsorted(beta, gamma).unwrap()
}

#[test]
fn single_recursion_is_not_minimal_on_side_by_side_pairs() {
    let z = [1, 2, 3, 4];
    let inv = AdmissibleInvolution::new(z.to_vec(), vec![(1, 2), (3, 4)], vec![]).unwrap();
    let naive = single_recursion(&z, &inv, 0);
    let built = minimal_symbol_block(&z, &inv, 0).unwrap();
    assert_eq!(naive, Symbol::new(vec![2, 3], vec![1, 4]).unwrap());
    assert_eq!(built, Symbol::new(vec![2, 4], vec![1, 3]).unwrap());
    assert_eq!((naive.b_d_invariant(0).unwrap(), built.b_d_invariant(0).unwrap()), (11, 10));

    // on nested pairs the two agree
    let nested = AdmissibleInvolution::new(z.to_vec(), vec![(1, 4), (2, 3)], vec![]).unwrap();
    for d in 0..=4 {
        assert_eq!(single_recursion(&z, &nested, d), minimal_symbol_block(&z, &nested, d).unwrap());
    }
}

#[test]
fn worked_examples() {
    let inv = AdmissibleInvolution::new(vec![1, 2, 3, 4, 5], vec![(1, 2), (4, 5)], vec![3]).unwrap();
    let key = FamilyKey::new(vec![], vec![1, 2, 3, 4, 5], 2, 1).unwrap();
    let m = minimal_symbol(&key, &inv).unwrap();
    assert_eq!(m, Symbol::new(vec![1, 3, 5], vec![2, 4]).unwrap());
    assert_eq!(m.b_invariant(), 7);

    let nested = AdmissibleInvolution::new(vec![1, 2, 3, 4], vec![(1, 4), (2, 3)], vec![]).unwrap();
    let m = minimal_symbol_block(&[1, 2, 3, 4], &nested, 2).unwrap();
    assert_eq!(m, Symbol::new(vec![1, 2], vec![3, 4]).unwrap());
    assert_eq!(m.b_d_invariant(2).unwrap(), 27);
}

/// Connected components of "appear together in a constructible character",
/// by repeated merging of overlapping sets.
fn brute_components(chars: &[Vec<Bipartition>]) -> BTreeSet<BTreeSet<Bipartition>> {
    let mut comps: Vec<BTreeSet<Bipartition>> = Vec::new();
    for c in chars {
        let mut merged: BTreeSet<Bipartition> = c.iter().cloned().collect();
        comps.retain(|other| {
            if other.is_disjoint(&merged) {
                true
            } else {
                merged.extend(other.iter().cloned());
                false
            }
        });
        comps.push(merged);
    }
    comps.into_iter().collect()
}

#[test]
fn lusztig_families_are_symbol_families() {
    for n in 0..=5 {
        for r in 1..=4u32 {
            let ratio = Ratio::Integral(r);
            let chars: Vec<Vec<Bipartition>> =
                all_constructible(n, ratio).into_iter().map(|c| c.constituents).collect();
            let expected: BTreeSet<BTreeSet<Bipartition>> = families_of_rank(n, r as usize)
                .into_iter()
                .map(|(_, members)| members.into_iter().collect())
                .collect();
            assert_eq!(brute_components(&chars), expected, "n = {n}, r = {r}");

            let families = lusztig_families(n, ratio).unwrap();
            let got: BTreeSet<BTreeSet<Bipartition>> =
                families.iter().map(|f| f.members.iter().cloned().collect()).collect();
            assert_eq!(got, expected);
            for f in &families {
                let best = argmin_unique(&f.members, |m| character_b(m, ratio));
                assert_eq!(best.as_ref(), f.minimal.as_ref(), "n = {n}, r = {r}");
            }
        }
    }
}

#[test]
fn b2_structure() {
    let chars = all_constructible(2, Ratio::Integral(1));
    assert_eq!(chars.len(), 4);
    let bip = |f: &[u32], s: &[u32]| Bipartition::from_parts(f, s).unwrap();
    let big: BTreeSet<Bipartition> = [bip(&[1], &[1]), bip(&[1, 1], &[]), bip(&[], &[2])].into_iter().collect();
    let families = lusztig_families(2, Ratio::Integral(1)).unwrap();
    let family = families.iter().find(|f| f.members.iter().cloned().collect::<BTreeSet<_>>() == big).unwrap();
    let b: BTreeMap<Bipartition, u64> = family.members.iter().cloned().zip(family.b.iter().copied()).collect();
    assert_eq!(b[&bip(&[1], &[1])], 1);
    assert_eq!(b[&bip(&[1, 1], &[])], 2);
    assert_eq!(b[&bip(&[], &[2])], 2);
    for c in chars.iter().filter(|c| c.constituents.len() == 2) {
        assert_eq!(c.minimal, bip(&[1], &[1]));
    }
}

#[test]
fn nonintegral_characters_are_singletons() {
    for n in 0..=5 {
        let chars = all_constructible(n, Ratio::NonIntegral);
        assert_eq!(chars.len(), bsymbols::enumerate_bipartitions(n).len());
        assert!(chars.iter().all(|c| c.constituents == vec![c.minimal.clone()] && c.family.is_none()));
    }
}
