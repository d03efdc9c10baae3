//! Two-row symbols and their numerical invariants.
//!
//! A symbol has a `beta` row of length `k + r` and a `gamma` row of length `k`,
//! both strictly increasing sequences of positive integers. `r` is the defect.
//! All invariants fit comfortably in `u64` for entries below `2^20` and rows
//! shorter than `2^10`, which covers every size this crate is used at.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{Bipartition, Partition};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawSymbol")]
pub struct Symbol {
    beta: Vec<u32>,
    gamma: Vec<u32>,
}

#[derive(Deserialize)]
struct RawSymbol {
    beta: Vec<u32>,
    gamma: Vec<u32>,
}

impl TryFrom<RawSymbol> for Symbol {
    type Error = Error;
    fn try_from(raw: RawSymbol) -> Result<Self> {
        Symbol::new(raw.beta, raw.gamma)
    }
}

fn check_row(name: &str, row: &[u32]) -> Result<()> {
    if row.contains(&0) {
        return Err(Error::InvalidSymbol(format!("{name} row contains 0")));
    }
    if !row.windows(2).all(|w| w[0] < w[1]) {
        return Err(Error::InvalidSymbol(format!("{name} row {row:?} is not strictly increasing")));
    }
    Ok(())
}

/// `∇_{k,r}`, the constant separating the weighted entry sum from `b`.
pub fn nabla(k: usize, r: usize) -> u64 {
    let (k, r) = (k as u64, r as u64);
    let beta: u64 = (1..=k + r).map(|i| (2 * k + 2 * r - 2 * i) * i).sum();
    let gamma: u64 = (1..=k).map(|j| (2 * k + 1 - 2 * j) * j).sum();
    beta + gamma
}

impl Symbol {
    pub fn new(beta: Vec<u32>, gamma: Vec<u32>) -> Result<Self> {
        check_row("beta", &beta)?;
        check_row("gamma", &gamma)?;
        if beta.len() < gamma.len() {
            return Err(Error::InvalidSymbol(format!(
                "beta row ({}) shorter than gamma row ({})",
                beta.len(),
                gamma.len()
            )));
        }
        Ok(Symbol { beta, gamma })
    }

    /// Builds a symbol from unordered rows. Duplicates within a row are an error.
    pub fn from_unsorted(mut beta: Vec<u32>, mut gamma: Vec<u32>) -> Result<Self> {
        beta.sort_unstable();
        gamma.sort_unstable();
        Symbol::new(beta, gamma)
    }

    /// The symbol `(1..=k+r ; 1..=k)`, which carries the empty bipartition.
    pub fn identity(k: usize, r: usize) -> Self {
        Symbol {
            beta: (1..=(k + r) as u32).collect(),
            gamma: (1..=k as u32).collect(),
        }
    }

    pub fn empty() -> Self {
        Symbol { beta: Vec::new(), gamma: Vec::new() }
    }

    pub fn beta(&self) -> &[u32] {
        &self.beta
    }

    pub fn gamma(&self) -> &[u32] {
        &self.gamma
    }

    pub fn k(&self) -> usize {
        self.gamma.len()
    }

    pub fn r(&self) -> usize {
        self.beta.len() - self.gamma.len()
    }

    pub fn rank(&self) -> u64 {
        let shifted = |row: &[u32]| -> u64 {
            row.iter().enumerate().map(|(i, &v)| (v as u64) - (i as u64 + 1)).sum()
        };
        shifted(&self.beta) + shifted(&self.gamma)
    }

    pub fn b_invariant(&self) -> u64 {
        let (k, r) = (self.k() as u64, self.r() as u64);
        let beta: u64 = self
            .beta
            .iter()
            .zip(1u64..)
            .map(|(&v, i)| (2 * k + 2 * r - 2 * i) * (v as u64 - i))
            .sum();
        let gamma: u64 = self
            .gamma
            .iter()
            .zip(1u64..)
            .map(|(&v, j)| (2 * k + 1 - 2 * j) * (v as u64 - j))
            .sum();
        beta + gamma
    }

    /// Both rows merged into one non-decreasing sequence.
    pub fn z_sequence(&self) -> Vec<u32> {
        let mut z = Vec::with_capacity(self.beta.len() + self.gamma.len());
        z.extend_from_slice(&self.beta);
        z.extend_from_slice(&self.gamma);
        z.sort_unstable();
        z
    }

    /// `(β_1, …, β_r, γ_1, β_{r+1}, γ_2, …, γ_k, β_{r+k})`.
    pub fn z_prime_sequence(&self) -> Vec<u32> {
        let r = self.r();
        let mut z = Vec::with_capacity(self.beta.len() + self.gamma.len());
        z.extend_from_slice(&self.beta[..r]);
        for (g, b) in self.gamma.iter().zip(&self.beta[r..]) {
            z.push(*g);
            z.push(*b);
        }
        z
    }

    /// `b` computed from partial sums of the interleaved sequence.
    pub fn b_via_zprime(&self) -> u64 {
        let zp = self.z_prime_sequence();
        let r = self.r();
        let mut prefix = Vec::with_capacity(zp.len());
        let mut acc = 0u64;
        for &z in &zp {
            acc += z as u64;
            prefix.push(acc);
        }
        let head: u64 = prefix.iter().take(r.saturating_sub(1)).sum();
        let all: u64 = prefix.iter().take(zp.len().saturating_sub(1)).sum();
        (head + all)
            .checked_sub(nabla(self.k(), r))
            .expect("partial-sum form of b is bounded below by nabla")
    }

    /// The `b_d` weighting of a defect-zero symbol (no `∇` correction).
    pub fn b_d_invariant(&self, d: usize) -> Result<u64> {
        if self.r() != 0 {
            return Err(Error::NonZeroDefect(self.r()));
        }
        let (k, d) = (self.k() as u64, d as u64);
        let beta: u64 =
            self.beta.iter().zip(1u64..).map(|(&v, i)| (2 * k + 2 * d - 2 * i) * v as u64).sum();
        let gamma: u64 =
            self.gamma.iter().zip(1u64..).map(|(&v, j)| (2 * k + 1 - 2 * j) * v as u64).sum();
        Ok(beta + gamma)
    }

    /// Entries common to both rows.
    pub fn shared(&self) -> Vec<u32> {
        let gamma: BTreeSet<u32> = self.gamma.iter().copied().collect();
        self.beta.iter().copied().filter(|v| gamma.contains(v)).collect()
    }

    /// Removes the shared entries from both rows.
    pub fn sharp(&self) -> Symbol {
        let shared: BTreeSet<u32> = self.shared().into_iter().collect();
        Symbol {
            beta: self.beta.iter().copied().filter(|v| !shared.contains(v)).collect(),
            gamma: self.gamma.iter().copied().filter(|v| !shared.contains(v)).collect(),
        }
    }

    pub fn is_special(&self) -> bool {
        let s = self.sharp();
        s.z_sequence() == s.z_prime_sequence()
    }

    /// Swaps the rows of a defect-zero symbol.
    pub fn op(&self) -> Result<Symbol> {
        if self.r() != 0 {
            return Err(Error::NonZeroDefect(self.r()));
        }
        Ok(Symbol { beta: self.gamma.clone(), gamma: self.beta.clone() })
    }

    /// Prepends 1 to both rows and increments every old entry.
    pub fn shift(&self) -> Symbol {
        let bump = |row: &[u32]| -> Vec<u32> {
            std::iter::once(1).chain(row.iter().map(|v| v + 1)).collect()
        };
        Symbol { beta: bump(&self.beta), gamma: bump(&self.gamma) }
    }

    /// Keeps only the entries lying in `set` (both rows).
    pub fn restrict(&self, set: &BTreeSet<u32>) -> Symbol {
        Symbol {
            beta: self.beta.iter().copied().filter(|v| set.contains(v)).collect(),
            gamma: self.gamma.iter().copied().filter(|v| set.contains(v)).collect(),
        }
    }

    /// Removes `entry` from both rows; it must be shared.
    pub fn remove_shared(&self, entry: u32) -> Result<Symbol> {
        let bi = self.beta.binary_search(&entry).map_err(|_| Error::NotShared(entry))?;
        let gi = self.gamma.binary_search(&entry).map_err(|_| Error::NotShared(entry))?;
        let mut out = self.clone();
        out.beta.remove(bi);
        out.gamma.remove(gi);
        Ok(out)
    }

    pub fn bipartition(&self) -> Bipartition {
        let parts = |row: &[u32]| -> Partition {
            Partition::from_unsorted(
                row.iter().zip(1u32..).map(|(&v, i)| v - i).collect(),
            )
        };
        Bipartition::new(parts(&self.beta), parts(&self.gamma))
    }

    /// The symbol in `Sym_k(r)` whose bipartition is `bip`.
    pub fn from_bipartition(bip: &Bipartition, k: usize, r: usize) -> Result<Symbol> {
        if bip.second.len() > k || bip.first.len() > k + r {
            return Err(Error::InsufficientK {
                k,
                r,
                first: bip.first.len(),
                second: bip.second.len(),
            });
        }
        let row = |p: &Partition, len: usize| -> Vec<u32> {
            (1..=len).map(|i| i as u32 + p.part(len + 1 - i)).collect()
        };
        Ok(Symbol { beta: row(&bip.first, k + r), gamma: row(&bip.second, k) })
    }
}

fn write_row(f: &mut fmt::Formatter<'_>, row: &[u32]) -> fmt::Result {
    for (i, v) in row.iter().enumerate() {
        if i > 0 {
            write!(f, " ")?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        write_row(f, &self.beta)?;
        write!(f, " / ")?;
        write_row(f, &self.gamma)?;
        write!(f, "]")
    }
}
