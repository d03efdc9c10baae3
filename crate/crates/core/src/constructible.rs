//! Constructible characters and their minimal-`b` constituents.
//!
//! For an integral ratio `r`, every constructible character of `B_n` is the sum
//! of `χ_Λ` over the members `Λ` of a family whose `β` row meets each orbit of
//! an `r`-admissible involution of `z` exactly once. Symbols are always taken
//! in `Sym_n(r)`, which is large enough for every bipartition of `n`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::family::{block_decomposition, check_support, family_key, FamilyKey};
use crate::involution::{enumerate_admissible, AdmissibleInvolution};
use crate::partition::{enumerate_bipartitions, Bipartition};
use crate::symbol::Symbol;

/// Ratio `φ(t) / φ(s_i)` of the two parameters of `B_n`. Only whether it is a
/// positive integer, and which one, matters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Ratio {
    Integral(u32),
    NonIntegral,
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ratio::Integral(r) => write!(f, "{r}"),
            Ratio::NonIntegral => write!(f, "nonintegral"),
        }
    }
}

impl std::str::FromStr for Ratio {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        if s.eq_ignore_ascii_case("nonintegral") {
            return Ok(Ratio::NonIntegral);
        }
        match s.parse::<u32>() {
            Ok(0) | Err(_) => Err(format!("expected a positive integer or \"nonintegral\", got {s:?}")),
            Ok(r) => Ok(Ratio::Integral(r)),
        }
    }
}

impl Serialize for Ratio {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Ratio::Integral(r) => ser.serialize_u32(*r),
            Ratio::NonIntegral => ser.serialize_str("nonintegral"),
        }
    }
}

impl<'de> Deserialize<'de> for Ratio {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(u32),
            Text(String),
        }
        match Raw::deserialize(de)? {
            Raw::Num(0) => Err(serde::de::Error::custom("ratio must be positive")),
            Raw::Num(r) => Ok(Ratio::Integral(r)),
            Raw::Text(t) => t.parse().map_err(serde::de::Error::custom),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructibleCharacter {
    pub n: usize,
    pub r: Ratio,
    /// Sorted, pairwise distinct.
    pub constituents: Vec<Bipartition>,
    pub minimal: Bipartition,
    /// `None` in the non-integral case, where there are no symbol families.
    pub family: Option<FamilyKey>,
    /// Every involution producing this constituent set.
    pub involutions: Vec<AdmissibleInvolution>,
}

/// Members of the family whose `β` row meets every orbit of `inv` exactly once.
pub fn f_iota_members(key: &FamilyKey, inv: &AdmissibleInvolution) -> Result<Vec<Symbol>> {
    check_support(key, inv)?;
    let pairs = inv.pairs();
    let mut out = Vec::with_capacity(1 << pairs.len());
    for mask in 0u64..(1u64 << pairs.len()) {
        let mut beta: Vec<u32> = key.x.iter().chain(inv.fixed()).copied().collect();
        let mut gamma: Vec<u32> = key.x.clone();
        for (i, &(lo, hi)) in pairs.iter().enumerate() {
            let (b, g) = if mask >> i & 1 == 0 { (lo, hi) } else { (hi, lo) };
            beta.push(b);
            gamma.push(g);
        }
        out.push(Symbol::from_unsorted(beta, gamma)?);
    }
    out.sort();
    Ok(out)
}

/// The defect-zero symbol minimizing `b_d` among those whose `β` row takes one
/// element of every pair of `inv`.
///
/// Let `z_1` be the least element and `w` its partner. When `d ≥ 1`, `z_1`
/// goes to `β` and `w` to `γ`; when `d = 0` the rows swap. The elements
/// strictly between `z_1` and `w` are built recursively with `d - 1` (or `1`
/// when `d = 0`), and the elements above `w` with the same `d`.
pub fn minimal_symbol_block(elements: &[u32], inv: &AdmissibleInvolution, d: usize) -> Result<Symbol> {
    let mut sorted = elements.to_vec();
    sorted.sort_unstable();
    if inv.support() != sorted.as_slice() {
        return Err(Error::SupportMismatch(format!(
            "involution on {:?}, block {:?}",
            inv.support(),
            sorted
        )));
    }
    if inv.r() != 0 {
        return Err(Error::NotAdmissible(0));
    }
    let (mut beta, mut gamma) = (Vec::new(), Vec::new());
    build_block(&sorted, inv, d, &mut beta, &mut gamma);
    Symbol::from_unsorted(beta, gamma)
}

fn build_block(items: &[u32], inv: &AdmissibleInvolution, d: usize, beta: &mut Vec<u32>, gamma: &mut Vec<u32>) {
    let Some(&least) = items.first() else {
        return;
    };
    let partner = inv.image(least).expect("every element of the block is paired");
    let j = items.binary_search(&partner).expect("partner lies in the block");
    if d >= 1 {
        beta.push(least);
        gamma.push(partner);
        build_block(&items[1..j], inv, d - 1, beta, gamma);
    } else {
        beta.push(partner);
        gamma.push(least);
        build_block(&items[1..j], inv, 1, beta, gamma);
    }
    build_block(&items[j + 1..], inv, d, beta, gamma);
}

/// The unique member of `F_ι` with minimal `b`, assembled block by block.
pub fn minimal_symbol(key: &FamilyKey, inv: &AdmissibleInvolution) -> Result<Symbol> {
    check_support(key, inv)?;
    let dec = block_decomposition(&key.stripped(), inv)?;
    let mut beta: Vec<u32> = key.x.iter().chain(inv.fixed()).copied().collect();
    let mut gamma: Vec<u32> = key.x.clone();
    for block in &dec.blocks {
        let part = minimal_symbol_block(&block.elements, &block.involution, block.d)?;
        beta.extend_from_slice(part.beta());
        gamma.extend_from_slice(part.gamma());
    }
    Symbol::from_unsorted(beta, gamma)
}

pub fn constructible_character(key: &FamilyKey, inv: &AdmissibleInvolution) -> Result<ConstructibleCharacter> {
    let members = f_iota_members(key, inv)?;
    let minimal = minimal_symbol(key, inv)?;
    let mut constituents: Vec<Bipartition> = members.iter().map(Symbol::bipartition).collect();
    constituents.sort();
    Ok(ConstructibleCharacter {
        n: minimal.rank() as usize,
        r: Ratio::Integral(key.r as u32),
        constituents,
        minimal: minimal.bipartition(),
        family: Some(key.clone()),
        involutions: vec![inv.clone()],
    })
}

/// Symbol families of the bipartitions of `n` in `Sym_n(r)`, ordered by key.
/// Members are listed in bipartition order.
pub fn families_of_rank(n: usize, r: usize) -> Vec<(FamilyKey, Vec<Bipartition>)> {
    let mut groups: BTreeMap<FamilyKey, Vec<Bipartition>> = BTreeMap::new();
    for bip in enumerate_bipartitions(n) {
        let s = Symbol::from_bipartition(&bip, n, r).expect("k = n holds every bipartition of n");
        groups.entry(family_key(&s)).or_default().push(bip);
    }
    groups.into_iter().collect()
}

pub fn all_constructible(n: usize, ratio: Ratio) -> Vec<ConstructibleCharacter> {
    all_constructible_with(n, ratio, Execution::default())
}

/// [`all_constructible`] with an explicit execution mode for the
/// (family × involution) sweep. Output is sorted by constituent list.
pub fn all_constructible_with(n: usize, ratio: Ratio, exec: Execution) -> Vec<ConstructibleCharacter> {
    let r = match ratio {
        Ratio::NonIntegral => {
            return enumerate_bipartitions(n)
                .into_iter()
                .map(|bip| ConstructibleCharacter {
                    n,
                    r: ratio,
                    constituents: vec![bip.clone()],
                    minimal: bip,
                    family: None,
                    involutions: Vec::new(),
                })
                .collect();
        }
        Ratio::Integral(r) => r as usize,
    };
    let mut tasks = Vec::new();
    for (key, _) in families_of_rank(n, r) {
        let invs = enumerate_admissible(&key.z, key.r).expect("|z| - r is even for a family key");
        for inv in invs {
            tasks.push((key.clone(), inv));
        }
    }
    let chars = exec.map(&tasks, |(key, inv)| {
        constructible_character(key, inv).expect("key and involution come from the same family")
    });
    let mut merged: BTreeMap<Vec<Bipartition>, ConstructibleCharacter> = BTreeMap::new();
    for c in chars {
        match merged.get_mut(&c.constituents) {
            Some(existing) => existing.involutions.extend(c.involutions),
            None => {
                merged.insert(c.constituents.clone(), c);
            }
        }
    }
    merged.into_values().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(beta: &[u32], gamma: &[u32]) -> Symbol {
        Symbol::new(beta.to_vec(), gamma.to_vec()).unwrap()
    }

    fn bip(first: &[u32], second: &[u32]) -> Bipartition {
        Bipartition::from_parts(first, second).unwrap()
    }

    fn b2_key() -> FamilyKey {
        FamilyKey::new(vec![1], vec![2, 3, 4], 2, 1).unwrap()
    }

    fn inv(support: &[u32], pairs: &[(u32, u32)], fixed: &[u32]) -> AdmissibleInvolution {
        AdmissibleInvolution::new(support.to_vec(), pairs.to_vec(), fixed.to_vec()).unwrap()
    }

    #[test]
    fn f_iota_examples() {
        let members = f_iota_members(&b2_key(), &inv(&[2, 3, 4], &[(2, 3)], &[4])).unwrap();
        assert_eq!(members, vec![sym(&[1, 2, 4], &[1, 3]), sym(&[1, 3, 4], &[1, 2])]);
        let bips: Vec<_> = members.iter().map(Symbol::bipartition).collect();
        assert_eq!(bips, vec![bip(&[1], &[1]), bip(&[1, 1], &[])]);

        let members = f_iota_members(&b2_key(), &inv(&[2, 3, 4], &[(3, 4)], &[2])).unwrap();
        let mut bips: Vec<_> = members.iter().map(Symbol::bipartition).collect();
        bips.sort();
        assert_eq!(bips, vec![bip(&[], &[2]), bip(&[1], &[1])]);

        let key = FamilyKey::new(vec![], vec![3, 5], 0, 2).unwrap();
        let members = f_iota_members(&key, &AdmissibleInvolution::identity(&[3, 5])).unwrap();
        assert_eq!(members, vec![sym(&[3, 5], &[])]);
    }

    #[test]
    fn block_minimum_examples() {
        let j = inv(&[1, 2, 3, 4], &[(1, 4), (2, 3)], &[]);
        let m = minimal_symbol_block(&[1, 2, 3, 4], &j, 2).unwrap();
        assert_eq!(m, sym(&[1, 2], &[3, 4]));
        assert_eq!(m.b_d_invariant(2).unwrap(), 27);

        let j = inv(&[1, 2], &[(1, 2)], &[]);
        let m = minimal_symbol_block(&[1, 2], &j, 0).unwrap();
        assert_eq!(m, sym(&[2], &[1]));
        assert_eq!(m.b_d_invariant(0).unwrap(), 1);
        assert_eq!(sym(&[1], &[2]).b_d_invariant(0).unwrap(), 2);

        let empty = AdmissibleInvolution::identity(&[]);
        assert_eq!(minimal_symbol_block(&[], &empty, 3).unwrap(), Symbol::empty());
        assert!(minimal_symbol_block(&[1, 2, 3], &inv(&[1, 2, 3], &[(1, 2)], &[3]), 0).is_err());
    }

    #[test]
    fn minimal_symbol_examples() {
        let key = FamilyKey::new(vec![], vec![1, 2, 3, 4, 5], 2, 1).unwrap();
        let j = inv(&[1, 2, 3, 4, 5], &[(1, 2), (4, 5)], &[3]);
        let m = minimal_symbol(&key, &j).unwrap();
        assert_eq!(m, sym(&[1, 3, 5], &[2, 4]));
        assert_eq!(m.b_invariant(), 7);
        let mut others: Vec<u64> = f_iota_members(&key, &j)
            .unwrap()
            .iter()
            .filter(|s| **s != m)
            .map(Symbol::b_invariant)
            .collect();
        others.sort();
        assert_eq!(others, vec![8, 8, 9]);

        let m = minimal_symbol(&b2_key(), &inv(&[2, 3, 4], &[(2, 3)], &[4])).unwrap();
        assert_eq!(m, sym(&[1, 2, 4], &[1, 3]));
        assert_eq!(m.bipartition(), bip(&[1], &[1]));
    }

    #[test]
    fn b2_constructibles() {
        let c = constructible_character(&b2_key(), &inv(&[2, 3, 4], &[(2, 3)], &[4])).unwrap();
        assert_eq!(c.n, 2);
        assert_eq!(c.constituents, vec![bip(&[1], &[1]), bip(&[1, 1], &[])]);
        assert_eq!(c.minimal, bip(&[1], &[1]));

        let all = all_constructible(2, Ratio::Integral(1));
        assert_eq!(all.len(), 4);
        let sets: Vec<Vec<Bipartition>> = all.iter().map(|c| c.constituents.clone()).collect();
        assert!(sets.contains(&vec![bip(&[2], &[])]));
        assert!(sets.contains(&vec![bip(&[], &[1, 1])]));
        assert!(sets.contains(&vec![bip(&[1], &[1]), bip(&[1, 1], &[])]));
        assert!(sets.contains(&vec![bip(&[], &[2]), bip(&[1], &[1])]));
    }

    #[test]
    fn small_and_nonintegral() {
        assert_eq!(all_constructible(2, Ratio::NonIntegral).len(), 5);
        for r in 1..=4 {
            let all = all_constructible(1, Ratio::Integral(r));
            assert_eq!(all.len(), 2, "r = {r}");
            assert!(all.iter().all(|c| c.constituents.len() == 1));
        }
        assert_eq!(all_constructible(0, Ratio::Integral(2)).len(), 1);
    }

    #[test]
    fn execution_modes_agree() {
        for r in 1..=3 {
            assert_eq!(
                all_constructible_with(4, Ratio::Integral(r), Execution::Sequential),
                all_constructible_with(4, Ratio::Integral(r), Execution::Parallel)
            );
        }
    }

    #[test]
    fn ratio_parsing() {
        assert_eq!("3".parse::<Ratio>(), Ok(Ratio::Integral(3)));
        assert_eq!("nonintegral".parse::<Ratio>(), Ok(Ratio::NonIntegral));
        assert!("0".parse::<Ratio>().is_err());
        assert!("1.5".parse::<Ratio>().is_err());
        assert_eq!(serde_json::to_string(&Ratio::NonIntegral).unwrap(), r#""nonintegral""#);
        assert_eq!(serde_json::from_str::<Ratio>("2").unwrap(), Ratio::Integral(2));
    }
}
