//! Families of symbols.
//!
//! Two symbols of the same shape are in the same family when their merged
//! entry sequences agree, i.e. when they share both `β ∩ γ` and `β ∪ γ`. A
//! family is therefore described by a [`FamilyKey`]: the shared entries `x`,
//! the symmetric difference `z`, and the shape `(k, r)`.

use std::collections::BTreeSet;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::involution::AdmissibleInvolution;
use crate::symbol::{nabla, Symbol};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawKey")]
pub struct FamilyKey {
    pub x: Vec<u32>,
    pub z: Vec<u32>,
    pub k: usize,
    pub r: usize,
}

#[derive(Deserialize)]
struct RawKey {
    x: Vec<u32>,
    z: Vec<u32>,
    k: usize,
    r: usize,
}

impl TryFrom<RawKey> for FamilyKey {
    type Error = Error;
    fn try_from(raw: RawKey) -> Result<Self> {
        FamilyKey::new(raw.x, raw.z, raw.k, raw.r)
    }
}

impl FamilyKey {
    pub fn new(x: Vec<u32>, z: Vec<u32>, k: usize, r: usize) -> Result<Self> {
        let increasing = |v: &[u32]| v.windows(2).all(|w| w[0] < w[1]);
        if !increasing(&x) || !increasing(&z) {
            return Err(Error::InvalidKey("x and z must be strictly increasing".into()));
        }
        if x.contains(&0) || z.contains(&0) {
            return Err(Error::InvalidKey("entries must be positive".into()));
        }
        if x.iter().any(|v| z.binary_search(v).is_ok()) {
            return Err(Error::InvalidKey("x and z must be disjoint".into()));
        }
        if x.len() > k || z.len() != 2 * (k - x.len()) + r {
            return Err(Error::InvalidKey(format!(
                "|z| = {} does not match 2(k - |x|) + r with k = {k}, |x| = {}, r = {r}",
                z.len(),
                x.len()
            )));
        }
        Ok(FamilyKey { x, z, k, r })
    }

    /// Number of 2-cycles of an `r`-admissible involution of `z`.
    pub fn l(&self) -> usize {
        self.k - self.x.len()
    }

    /// The same family with every shared entry removed (`k` drops by `|x|`).
    pub fn stripped(&self) -> FamilyKey {
        FamilyKey { x: Vec::new(), z: self.z.clone(), k: self.l(), r: self.r }
    }

    pub fn contains(&self, s: &Symbol) -> bool {
        s.k() == self.k && s.r() == self.r && &family_key(s) == self
    }
}

pub fn family_key(s: &Symbol) -> FamilyKey {
    let beta: BTreeSet<u32> = s.beta().iter().copied().collect();
    let gamma: BTreeSet<u32> = s.gamma().iter().copied().collect();
    FamilyKey {
        x: beta.intersection(&gamma).copied().collect(),
        z: beta.symmetric_difference(&gamma).copied().collect(),
        k: s.k(),
        r: s.r(),
    }
}

fn merge(x: &[u32], extra: impl IntoIterator<Item = u32>) -> Vec<u32> {
    let mut v: Vec<u32> = x.iter().copied().chain(extra).collect();
    v.sort_unstable();
    v
}

/// Every member of the family, ordered by the lexicographic order of the part
/// of `z` placed in `β`.
pub fn enumerate_family(key: &FamilyKey) -> Vec<Symbol> {
    let in_beta = key.l() + key.r;
    key.z
        .iter()
        .copied()
        .combinations(in_beta)
        .map(|chosen| {
            let chosen_set: BTreeSet<u32> = chosen.iter().copied().collect();
            let rest = key.z.iter().copied().filter(|v| !chosen_set.contains(v));
            Symbol::new(merge(&key.x, chosen), merge(&key.x, rest))
                .expect("family members are valid symbols")
        })
        .collect()
}

/// The unique special member: the first `r` entries of `z` go to `β`, then the
/// remaining entries alternate `γ, β, γ, β, …`.
pub fn special_symbol(key: &FamilyKey) -> Symbol {
    let r = key.r;
    let mut beta: Vec<u32> = key.z[..r].to_vec();
    let mut gamma = Vec::new();
    for (i, &v) in key.z[r..].iter().enumerate() {
        if i % 2 == 0 {
            gamma.push(v);
        } else {
            beta.push(v);
        }
    }
    Symbol::new(merge(&key.x, beta), merge(&key.x, gamma)).expect("special member is a valid symbol")
}

/// Removes the shared entry `entry` and reports `b(s) - b(s[entry])`.
pub fn strip_x(s: &Symbol, entry: u32) -> Result<(Symbol, i64)> {
    let stripped = s.remove_shared(entry)?;
    let offset = s.b_invariant() as i64 - stripped.b_invariant() as i64;
    Ok((stripped, offset))
}

/// Closed form of the [`strip_x`] offset, computed from the merged sequence
/// alone:
/// `-(∇_{k,r} - ∇_{k-1,r}) + e·(4k + 2r + 1 - 2·#{z ≤ e}) + 2·Σ{z < e}`.
pub fn strip_offset_closed_form(s: &Symbol, entry: u32) -> Result<i64> {
    if s.beta().binary_search(&entry).is_err() || s.gamma().binary_search(&entry).is_err() {
        return Err(Error::NotShared(entry));
    }
    let (k, r) = (s.k(), s.r());
    let z = s.z_sequence();
    let at_most = z.iter().filter(|&&v| v <= entry).count() as i64;
    let below: i64 = z.iter().filter(|&&v| v < entry).map(|&v| v as i64).sum();
    let nabla_step = nabla(k, r) as i64 - nabla(k - 1, r) as i64;
    let e = entry as i64;
    Ok(-nabla_step + e * (4 * k as i64 + 2 * r as i64 + 1 - 2 * at_most) + 2 * below)
}

/// One interval of `z` between consecutive fixed points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub d: usize,
    pub elements: Vec<u32>,
    pub involution: AdmissibleInvolution,
}

impl Block {
    /// Half the block size.
    pub fn k(&self) -> usize {
        self.elements.len() / 2
    }

    pub fn element_set(&self) -> BTreeSet<u32> {
        self.elements.iter().copied().collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Fixed points in decreasing order, `f_1 > f_2 > … > f_r`.
    pub fixed: Vec<u32>,
    /// Blocks indexed by `d = 0..=r`; block `d` lies strictly between `f_{d+1}`
    /// and `f_d` (with `f_0 = ∞`, `f_{r+1} = 0`).
    pub blocks: Vec<Block>,
}

impl BlockDecomposition {
    /// `f_d` for `1 ≤ d ≤ r`.
    pub fn f(&self, d: usize) -> u32 {
        self.fixed[d - 1]
    }
}

pub fn block_decomposition(key: &FamilyKey, inv: &AdmissibleInvolution) -> Result<BlockDecomposition> {
    if !key.x.is_empty() {
        return Err(Error::NonEmptyShared(key.x.clone()));
    }
    check_support(key, inv)?;
    let mut fixed = inv.fixed().to_vec();
    fixed.sort_unstable_by(|a, b| b.cmp(a));
    let mut blocks = Vec::with_capacity(key.r + 1);
    for d in 0..=key.r {
        let upper = if d == 0 { u32::MAX } else { fixed[d - 1] };
        let lower = if d == key.r { 0 } else { fixed[d] };
        let elements: Vec<u32> = key.z.iter().copied().filter(|&v| lower < v && v < upper).collect();
        let set: BTreeSet<u32> = elements.iter().copied().collect();
        let involution = inv.restrict(&set)?;
        debug_assert_eq!(involution.r(), 0);
        blocks.push(Block { d, elements, involution });
    }
    Ok(BlockDecomposition { fixed, blocks })
}

pub(crate) fn check_support(key: &FamilyKey, inv: &AdmissibleInvolution) -> Result<()> {
    if inv.support() != key.z.as_slice() {
        return Err(Error::SupportMismatch(format!(
            "involution on {:?}, family z = {:?}",
            inv.support(),
            key.z
        )));
    }
    if inv.r() != key.r {
        return Err(Error::SupportMismatch(format!(
            "involution has {} fixed points, family has r = {}",
            inv.r(),
            key.r
        )));
    }
    Ok(())
}
