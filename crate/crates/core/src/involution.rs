//! `r`-admissible involutions of a finite totally ordered set.
//!
//! An involution with `r` fixed points is `r`-admissible when its 2-cycles can
//! be removed one at a time, each removed pair being adjacent in what is left
//! of the support. Equivalently the pairs form a non-crossing matching and no
//! fixed point sits strictly inside a pair. Enumeration uses that structural
//! form; [`is_r_admissible`] implements the removal recursion literally.

use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawInvolution")]
pub struct AdmissibleInvolution {
    #[serde(skip)]
    support: Vec<u32>,
    pairs: Vec<(u32, u32)>,
    fixed: Vec<u32>,
}

#[derive(Deserialize)]
struct RawInvolution {
    pairs: Vec<(u32, u32)>,
    fixed: Vec<u32>,
}

impl TryFrom<RawInvolution> for AdmissibleInvolution {
    type Error = Error;
    fn try_from(raw: RawInvolution) -> Result<Self> {
        let mut support: Vec<u32> = raw.fixed.clone();
        for &(b, c) in &raw.pairs {
            support.push(b);
            support.push(c);
        }
        support.sort_unstable();
        AdmissibleInvolution::new(support, raw.pairs, raw.fixed)
    }
}

/// Checks that `pairs` and `fixed` partition `support` exactly.
fn check_partition(support: &[u32], pairs: &[(u32, u32)], fixed: &[u32]) -> Result<()> {
    let mut seen = BTreeSet::new();
    for &(b, c) in pairs {
        if b == c {
            return Err(Error::SupportMismatch(format!("degenerate pair ({b}, {c})")));
        }
        for v in [b, c] {
            if !seen.insert(v) {
                return Err(Error::SupportMismatch(format!("{v} appears twice")));
            }
        }
    }
    for &f in fixed {
        if !seen.insert(f) {
            return Err(Error::SupportMismatch(format!("{f} appears twice")));
        }
    }
    let support_set: BTreeSet<u32> = support.iter().copied().collect();
    if support_set.len() != support.len() || support_set != seen {
        return Err(Error::SupportMismatch(format!(
            "pairs and fixed points do not partition {support:?}"
        )));
    }
    Ok(())
}

/// Literal recursive admissibility test: some pair of consecutive support
/// elements is matched, and removing it leaves an admissible involution.
pub fn is_r_admissible(support: &[u32], pairs: &[(u32, u32)], fixed: &[u32]) -> bool {
    if check_partition(support, pairs, fixed).is_err() {
        return false;
    }
    let mut sorted: Vec<u32> = support.to_vec();
    sorted.sort_unstable();
    let pair_set: BTreeSet<(u32, u32)> = pairs.iter().map(|&(b, c)| (b.min(c), b.max(c))).collect();
    let mut failed = HashSet::new();
    removable(&sorted, &pair_set, &mut failed)
}

fn removable(
    support: &[u32],
    pairs: &BTreeSet<(u32, u32)>,
    failed: &mut HashSet<Vec<u32>>,
) -> bool {
    if pairs.is_empty() {
        return true;
    }
    if failed.contains(support) {
        return false;
    }
    for i in 0..support.len().saturating_sub(1) {
        let pair = (support[i], support[i + 1]);
        if pairs.contains(&pair) {
            let mut rest_support = support.to_vec();
            rest_support.drain(i..i + 2);
            let mut rest_pairs = pairs.clone();
            rest_pairs.remove(&pair);
            if removable(&rest_support, &rest_pairs, failed) {
                return true;
            }
        }
    }
    failed.insert(support.to_vec());
    false
}

impl AdmissibleInvolution {
    /// Validates and normalizes (pairs as `(low, high)`, all lists sorted).
    pub fn new(mut support: Vec<u32>, pairs: Vec<(u32, u32)>, mut fixed: Vec<u32>) -> Result<Self> {
        support.sort_unstable();
        let mut pairs: Vec<(u32, u32)> = pairs.into_iter().map(|(b, c)| (b.min(c), b.max(c))).collect();
        pairs.sort_unstable();
        fixed.sort_unstable();
        check_partition(&support, &pairs, &fixed)?;
        if !is_r_admissible(&support, &pairs, &fixed) {
            return Err(Error::NotAdmissible(fixed.len()));
        }
        Ok(AdmissibleInvolution { support, pairs, fixed })
    }

    /// The identity on `support`; admissible with `r = |support|`.
    pub fn identity(support: &[u32]) -> Self {
        let mut support = support.to_vec();
        support.sort_unstable();
        AdmissibleInvolution { fixed: support.clone(), support, pairs: Vec::new() }
    }

    pub fn support(&self) -> &[u32] {
        &self.support
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }

    pub fn fixed(&self) -> &[u32] {
        &self.fixed
    }

    pub fn r(&self) -> usize {
        self.fixed.len()
    }

    /// Number of 2-cycles.
    pub fn l(&self) -> usize {
        self.pairs.len()
    }

    pub fn image(&self, z: u32) -> Option<u32> {
        if self.fixed.binary_search(&z).is_ok() {
            return Some(z);
        }
        self.pairs.iter().find_map(|&(b, c)| match z {
            _ if z == b => Some(c),
            _ if z == c => Some(b),
            _ => None,
        })
    }

    /// Orbits sorted by least element.
    pub fn orbits(&self) -> Vec<Vec<u32>> {
        let mut out: Vec<Vec<u32>> = self
            .pairs
            .iter()
            .map(|&(b, c)| vec![b, c])
            .chain(self.fixed.iter().map(|&f| vec![f]))
            .collect();
        out.sort();
        out
    }

    /// Restriction to a stable subset.
    pub fn restrict(&self, subset: &BTreeSet<u32>) -> Result<Self> {
        let support: Vec<u32> = self.support.iter().copied().filter(|v| subset.contains(v)).collect();
        if support.len() != subset.len() {
            return Err(Error::SupportMismatch("subset leaves the support".into()));
        }
        let mut pairs = Vec::new();
        for &(b, c) in &self.pairs {
            match (subset.contains(&b), subset.contains(&c)) {
                (true, true) => pairs.push((b, c)),
                (false, false) => {}
                _ => return Err(Error::SupportMismatch(format!("subset splits the pair ({b}, {c})"))),
            }
        }
        let fixed = self.fixed.iter().copied().filter(|v| subset.contains(v)).collect();
        Ok(AdmissibleInvolution { support, pairs, fixed })
    }

    /// Relabels the support through an order-preserving map.
    pub fn relabel(&self, f: impl Fn(u32) -> u32) -> Self {
        AdmissibleInvolution {
            support: self.support.iter().map(|&v| f(v)).collect(),
            pairs: self.pairs.iter().map(|&(b, c)| (f(b), f(c))).collect(),
            fixed: self.fixed.iter().map(|&v| f(v)).collect(),
        }
    }
}

type Partial = (Vec<(u32, u32)>, Vec<u32>);

fn generate(items: &[u32], fixed_needed: usize) -> Vec<Partial> {
    if items.is_empty() {
        return if fixed_needed == 0 { vec![(Vec::new(), Vec::new())] } else { Vec::new() };
    }
    if fixed_needed > items.len() || !(items.len() - fixed_needed).is_multiple_of(2) {
        return Vec::new();
    }
    let first = items[0];
    let mut out = Vec::new();
    if fixed_needed > 0 {
        for (pairs, mut fixed) in generate(&items[1..], fixed_needed - 1) {
            fixed.insert(0, first);
            out.push((pairs, fixed));
        }
    }
    // partner at an odd offset leaves an even, fixed-point-free inside
    for j in (1..items.len()).step_by(2) {
        let inside = generate(&items[1..j], 0);
        if inside.is_empty() {
            continue;
        }
        let outside = generate(&items[j + 1..], fixed_needed);
        for (in_pairs, _) in &inside {
            for (out_pairs, out_fixed) in &outside {
                let mut pairs = Vec::with_capacity(1 + in_pairs.len() + out_pairs.len());
                pairs.push((first, items[j]));
                pairs.extend_from_slice(in_pairs);
                pairs.extend_from_slice(out_pairs);
                out.push((pairs, out_fixed.clone()));
            }
        }
    }
    out
}

/// All `r`-admissible involutions of `support`, sorted by pair list then fixed points.
pub fn enumerate_admissible(support: &[u32], r: usize) -> Result<Vec<AdmissibleInvolution>> {
    let mut sorted = support.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != support.len() {
        return Err(Error::SupportMismatch("support has repeated entries".into()));
    }
    if r > sorted.len() || !(sorted.len() - r).is_multiple_of(2) {
        return Err(Error::ParityViolation { size: sorted.len(), fixed: r });
    }
    let mut out: Vec<AdmissibleInvolution> = generate(&sorted, r)
        .into_iter()
        .map(|(mut pairs, fixed)| {
            pairs.sort_unstable();
            AdmissibleInvolution { support: sorted.clone(), pairs, fixed }
        })
        .collect();
    out.sort_by(|a, b| (&a.pairs, &a.fixed).cmp(&(&b.pairs, &b.fixed)));
    Ok(out)
}
