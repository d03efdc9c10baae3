//! Lusztig families as components of the constructible-character graph, and
//! the minimal-`b` checks over them.

use std::collections::{BTreeMap, BTreeSet};

use petgraph::unionfind::UnionFind;
use serde::Serialize;

use crate::constructible::{all_constructible, families_of_rank, ConstructibleCharacter, Ratio};
use crate::error::{Error, Result};
use crate::family::{special_symbol, FamilyKey};
use crate::partition::{enumerate_bipartitions, Bipartition};
use crate::symbol::Symbol;

/// `b` of the character labelled by `bip`, read off its symbol in `Sym_n(r)`.
///
/// The value does not depend on `r`; the non-integral case uses `r = 1`.
pub fn character_b(bip: &Bipartition, ratio: Ratio) -> u64 {
    let r = match ratio {
        Ratio::Integral(r) => r as usize,
        Ratio::NonIntegral => 1,
    };
    Symbol::from_bipartition(bip, bip.n(), r)
        .expect("k = n holds every bipartition of n")
        .b_invariant()
}

/// The unique minimizer of `b` over `items`, or `None` on a tie or empty input.
pub fn unique_argmin(items: &[Bipartition], b: &[u64]) -> Option<Bipartition> {
    let min = *b.iter().min()?;
    let mut hits = items.iter().zip(b).filter(|(_, &v)| v == min);
    let first = hits.next()?;
    match hits.next() {
        Some(_) => None,
        None => Some(first.0.clone()),
    }
}

#[derive(Debug, Clone)]
pub struct FamilyGraph {
    pub vertices: Vec<Bipartition>,
    pub edges: BTreeSet<(usize, usize)>,
}

impl FamilyGraph {
    pub fn from_constructibles(vertices: Vec<Bipartition>, chars: &[ConstructibleCharacter]) -> Self {
        let index: BTreeMap<&Bipartition, usize> =
            vertices.iter().enumerate().map(|(i, b)| (b, i)).collect();
        let mut edges = BTreeSet::new();
        for c in chars {
            let ids: Vec<usize> = c.constituents.iter().map(|b| index[b]).collect();
            for (a, &i) in ids.iter().enumerate() {
                for &j in &ids[a + 1..] {
                    edges.insert((i.min(j), i.max(j)));
                }
            }
        }
        FamilyGraph { vertices, edges }
    }

    /// Connected components, each sorted, listed by least vertex.
    pub fn components(&self) -> Vec<Vec<Bipartition>> {
        let mut uf = UnionFind::<usize>::new(self.vertices.len());
        for &(i, j) in &self.edges {
            uf.union(i, j);
        }
        let mut groups: BTreeMap<usize, Vec<Bipartition>> = BTreeMap::new();
        for (i, v) in self.vertices.iter().enumerate() {
            groups.entry(uf.find(i)).or_default().push(v.clone());
        }
        let mut out: Vec<Vec<Bipartition>> = groups
            .into_values()
            .map(|mut g| {
                g.sort();
                g
            })
            .collect();
        out.sort();
        out
    }
}

pub fn family_graph(n: usize, ratio: Ratio) -> FamilyGraph {
    FamilyGraph::from_constructibles(enumerate_bipartitions(n), &all_constructible(n, ratio))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LusztigFamily {
    pub members: Vec<Bipartition>,
    /// `b` of each member, aligned with `members`.
    pub b: Vec<u64>,
    /// Unique `b`-minimizer; `None` would falsify the minimality theorem.
    pub minimal: Option<Bipartition>,
    pub key: Option<FamilyKey>,
    /// Character of the special symbol of `key`.
    pub special: Option<Bipartition>,
}

fn build_families(
    n: usize,
    ratio: Ratio,
    components: Vec<Vec<Bipartition>>,
) -> (Vec<LusztigFamily>, bool) {
    let predicted: BTreeMap<Vec<Bipartition>, FamilyKey> = match ratio {
        Ratio::Integral(r) => families_of_rank(n, r as usize)
            .into_iter()
            .map(|(key, mut members)| {
                members.sort();
                (members, key)
            })
            .collect(),
        Ratio::NonIntegral => BTreeMap::new(),
    };
    let mut matches = true;
    let mut families: Vec<LusztigFamily> = components
        .into_iter()
        .map(|members| {
            let b: Vec<u64> = members.iter().map(|m| character_b(m, ratio)).collect();
            let minimal = unique_argmin(&members, &b);
            let key = predicted.get(&members).cloned();
            if matches!(ratio, Ratio::Integral(_)) && key.is_none() {
                matches = false;
            }
            let special = key.as_ref().map(|k| special_symbol(k).bipartition());
            LusztigFamily { members, b, minimal, key, special }
        })
        .collect();
    if matches!(ratio, Ratio::NonIntegral) {
        matches = families.iter().all(|f| f.members.len() == 1);
    }
    families.sort_by(|a, b| {
        let ka = a.minimal.as_ref().unwrap_or(&a.members[0]);
        let kb = b.minimal.as_ref().unwrap_or(&b.members[0]);
        ka.cmp(kb)
    });
    (families, matches)
}

/// Lusztig families of `B_n`, checked against the symbol families.
pub fn lusztig_families(n: usize, ratio: Ratio) -> Result<Vec<LusztigFamily>> {
    let (families, matches) = build_families(n, ratio, family_graph(n, ratio).components());
    if !matches {
        return Err(Error::FamilyMismatch { n, r: ratio_value(ratio) });
    }
    Ok(families)
}

fn ratio_value(ratio: Ratio) -> u32 {
    match ratio {
        Ratio::Integral(r) => r,
        Ratio::NonIntegral => 0,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ConstructibleEntry {
    pub constituents: Vec<Bipartition>,
    pub b: Vec<u64>,
    pub minimal: Option<Bipartition>,
    /// Whether the block-by-block construction picked the same constituent.
    pub construction_agrees: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct TheoremLReport {
    pub n: usize,
    pub r: Ratio,
    pub families: Vec<LusztigFamily>,
    pub constructibles: Vec<ConstructibleEntry>,
    pub families_match_symbols: bool,
    pub families_unique_minimum: bool,
    pub constructibles_unique_minimum: bool,
}

impl TheoremLReport {
    pub fn passed(&self) -> bool {
        self.families_match_symbols && self.families_unique_minimum && self.constructibles_unique_minimum
    }
}

pub fn check_theorem_l(n: usize, ratio: Ratio) -> TheoremLReport {
    let chars = all_constructible(n, ratio);
    let graph = FamilyGraph::from_constructibles(enumerate_bipartitions(n), &chars);
    let (families, families_match_symbols) = build_families(n, ratio, graph.components());
    let constructibles: Vec<ConstructibleEntry> = chars
        .iter()
        .map(|c| {
            let b: Vec<u64> = c.constituents.iter().map(|m| character_b(m, ratio)).collect();
            let minimal = unique_argmin(&c.constituents, &b);
            let construction_agrees = minimal.as_ref() == Some(&c.minimal);
            ConstructibleEntry { constituents: c.constituents.clone(), b, minimal, construction_agrees }
        })
        .collect();
    TheoremLReport {
        n,
        r: ratio,
        families_unique_minimum: families.iter().all(|f| f.minimal.is_some()),
        constructibles_unique_minimum: constructibles.iter().all(|c| c.construction_agrees),
        families,
        constructibles,
        families_match_symbols,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SpecialCheck {
    pub key: FamilyKey,
    pub special: Bipartition,
    pub argmin_is_special: bool,
    pub in_every_constructible: bool,
}

/// For each family: is the `b`-minimizer the special character, and does it
/// occur in every constructible character of the family?
pub fn special_constituent_checks(n: usize, r: u32) -> Vec<SpecialCheck> {
    let ratio = Ratio::Integral(r);
    let chars = all_constructible(n, ratio);
    families_of_rank(n, r as usize)
        .into_iter()
        .map(|(key, members)| {
            let special = special_symbol(&key).bipartition();
            let b: Vec<u64> = members.iter().map(|m| character_b(m, ratio)).collect();
            let argmin_is_special = unique_argmin(&members, &b).as_ref() == Some(&special);
            let in_every_constructible = chars
                .iter()
                .filter(|c| c.family.as_ref() == Some(&key))
                .all(|c| c.constituents.contains(&special));
            SpecialCheck { key, special, argmin_is_special, in_every_constructible }
        })
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct NoncommonWitness {
    pub n: usize,
    pub r: u32,
    pub family: FamilyKey,
    pub members: Vec<Bipartition>,
    pub constructibles: Vec<ConstructibleCharacter>,
}

/// First family (by ascending `r`, then key order) with at least two
/// constructible characters and no constituent common to all of them.
pub fn find_noncommon_family(n: usize, r_range: &[u32]) -> Option<NoncommonWitness> {
    let mut rs = r_range.to_vec();
    rs.sort_unstable();
    rs.dedup();
    for r in rs.into_iter().filter(|&r| r > 0) {
        let chars = all_constructible(n, Ratio::Integral(r));
        for (key, members) in families_of_rank(n, r as usize) {
            let group: Vec<ConstructibleCharacter> =
                chars.iter().filter(|c| c.family.as_ref() == Some(&key)).cloned().collect();
            if group.len() < 2 {
                continue;
            }
            let mut common: BTreeSet<&Bipartition> = group[0].constituents.iter().collect();
            for c in &group[1..] {
                let here: BTreeSet<&Bipartition> = c.constituents.iter().collect();
                common = common.intersection(&here).copied().collect();
            }
            if common.is_empty() {
                return Some(NoncommonWitness { n, r, family: key, members, constructibles: group });
            }
        }
    }
    None
}
