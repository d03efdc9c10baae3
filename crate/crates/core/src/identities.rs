//! Closed-form relations between the invariants, checked on enumerated
//! instances.
//!
//! Each relation is evaluated here from its own closed form, independently of
//! the direct weighted sums in [`crate::symbol`]. Four of them carry constant
//! terms that differ from the commonly quoted displays; the forms below were
//! re-derived and are what the checks assert:
//!
//! * the rank is `Σ z - k(k+1)/2 - (k+r)(k+r+1)/2`;
//! * stripping a shared entry changes `b` by `-(∇_{k,r} - ∇_{k-1,r}) + …`;
//! * the block formula carries an extra `Σ_d 2(d-1) f_d` for the fixed points;
//! * the peeling step for `d ≥ 2` uses `2(l+d-1) z_1` (and `(2l-1) z_1` when
//!   `z_1` lies in `γ`).
//!
//! None of these constants depends on the member of the family, which is all
//! the minimality arguments need.

use std::collections::BTreeSet;

use crate::check::{merge_by_name, Check};
use crate::constructible::{f_iota_members, families_of_rank, minimal_symbol_block};
use crate::exec::Execution;
use crate::family::{
    block_decomposition, enumerate_family, strip_offset_closed_form, strip_x, Block, BlockDecomposition,
    FamilyKey,
};
use crate::involution::{enumerate_admissible, AdmissibleInvolution};
use crate::symbol::{nabla, Symbol};

pub const CLUBSUIT: &str = "b from interleaved partial sums";
pub const RANK_FROM_Z: &str = "rank from merged sequence";
pub const STRIP_OFFSET: &str = "shared-entry strip offset";
pub const BLOCK_FORMULA: &str = "block decomposition of b";
pub const PEELING: &str = "outer-pair peeling of b_d";
pub const OP_RELATION: &str = "row swap relation b_1 = b_0(op) + sum";
pub const TILDE_OFFSET: &str = "appended entry offset";
pub const DESCENT_GAP: &str = "peeling gap inequality";

/// `|Λ|` from the merged sequence: `Σ z - k(k+1)/2 - (k+r)(k+r+1)/2`.
pub fn rank_from_z(s: &Symbol) -> i64 {
    let sum: i64 = s.z_sequence().iter().map(|&v| v as i64).sum();
    let (k, r) = (s.k() as i64, s.r() as i64);
    sum - k * (k + 1) / 2 - (k + r) * (k + r + 1) / 2
}

/// The same count with `r(r+1)/2` in place of `k(k+1)/2`, as it is often
/// quoted. Agrees with [`rank_from_z`] only when `k = r`.
pub fn rank_from_z_quoted(s: &Symbol) -> i64 {
    let (k, r) = (s.k() as i64, s.r() as i64);
    rank_from_z(s) + k * (k + 1) / 2 - r * (r + 1) / 2
}

/// Fixed-point term missing from the usual block display: `Σ_{d=1}^r 2(d-1) f_d`.
pub fn block_fixed_point_term(dec: &BlockDecomposition) -> i64 {
    (1..dec.blocks.len()).map(|d| 2 * (d as i64 - 1) * dec.f(d) as i64).sum()
}

/// `b(Λ)` rebuilt from the `b_d` of its block restrictions, for `Λ ∈ F_ι` of a
/// family with no shared entries.
pub fn block_formula(key: &FamilyKey, dec: &BlockDecomposition, member: &Symbol) -> i64 {
    let mut total: i64 = 0;
    let mut below = 0usize;
    for block in &dec.blocks {
        let restricted = member.restrict(&block.element_set());
        total += restricted.b_d_invariant(block.d).expect("block restrictions have defect 0") as i64;
        if block.d >= 1 {
            let sum: i64 = block.elements.iter().map(|&v| v as i64).sum();
            total += 2 * below as i64 * (dec.f(block.d) as i64 + sum);
        }
        below += block.k();
    }
    total - nabla(key.k, key.r) as i64 + block_fixed_point_term(dec)
}

/// The key of a fixed-point-free block, as a family with defect 0.
pub fn block_key(elements: &[u32]) -> FamilyKey {
    FamilyKey { x: Vec::new(), z: elements.to_vec(), k: elements.len() / 2, r: 0 }
}

/// Right-hand side of the peeling relation for `Λ` in a block whose extremes
/// are paired, `d ≥ 2`. Returns `None` when the relation does not apply.
pub fn peeling_rhs(elements: &[u32], inv: &AdmissibleInvolution, d: usize, member: &Symbol) -> Option<i64> {
    let l = elements.len() / 2;
    if d < 2 || l == 0 {
        return None;
    }
    let (z1, zl) = (elements[0], elements[2 * l - 1]);
    if inv.image(z1) != Some(zl) {
        return None;
    }
    let inner: BTreeSet<u32> = elements[1..2 * l - 1].iter().copied().collect();
    let inner_sum: i64 = inner.iter().map(|&v| v as i64).sum();
    let rest = member.restrict(&inner);
    let z1_in_beta = member.beta().binary_search(&z1).is_ok();
    let (l, d64, z1, zl) = (l as i64, d as i64, z1 as i64, zl as i64);
    if z1_in_beta {
        let tail = rest.b_d_invariant(d - 1).ok()? as i64;
        Some(tail + zl + 2 * (l + d64 - 1) * z1 + 2 * inner_sum)
    } else {
        let tail = rest.b_d_invariant(d + 1).ok()? as i64;
        Some(tail + 2 * d64 * zl + (2 * l - 1) * z1)
    }
}

fn check_block(block_elements: &[u32], inv: &AdmissibleInvolution, checks: &mut [Check; 4], max_d: usize) {
    let [peel, op, tilde, gap] = checks;
    let key = block_key(block_elements);
    let members = f_iota_members(&key, inv).expect("block involution lives on the block");
    let total: i64 = block_elements.iter().map(|&v| v as i64).sum();
    let z_star = block_elements.last().copied().unwrap_or(0) + 1;
    let mut offsets = BTreeSet::new();
    for m in &members {
        let b1 = m.b_d_invariant(1).unwrap() as i64;
        let b0op = m.op().unwrap().b_d_invariant(0).unwrap() as i64;
        op.record(b1 == b0op + total, || format!("{m}: b_1 = {b1}, b_0(op) + sum = {}", b0op + total));

        let mut beta = m.beta().to_vec();
        beta.push(z_star);
        let tilde_sym = Symbol::new(beta, m.gamma().to_vec()).unwrap();
        offsets.insert(tilde_sym.b_invariant() as i64 - b1);

        for d in 2..=max_d {
            if let Some(rhs) = peeling_rhs(block_elements, inv, d, m) {
                let lhs = m.b_d_invariant(d).unwrap() as i64;
                peel.record(lhs == rhs, || format!("{m}, d = {d}: b_d = {lhs}, peeled = {rhs}"));
            }
        }
    }
    tilde.record(offsets.len() <= 1, || format!("Z = {block_elements:?}: offsets {offsets:?}"));

    let m0 = minimal_symbol_block(block_elements, inv, 0).unwrap();
    let m1 = minimal_symbol_block(block_elements, inv, 1).unwrap();
    op.record(m0.op().unwrap() == m1, || format!("Z = {block_elements:?}: op of d = 0 minimum is not the d = 1 minimum"));

    let l = block_elements.len() / 2;
    if l >= 2 && inv.image(block_elements[0]) == Some(block_elements[2 * l - 1]) {
        let inner: BTreeSet<u32> = block_elements[1..2 * l - 1].iter().copied().collect();
        let inner_vec: Vec<u32> = inner.iter().copied().collect();
        let inner_inv = inv.restrict(&inner).unwrap();
        let inner_sum: i64 = inner.iter().map(|&v| v as i64).sum();
        let spread = (block_elements[2 * l - 1] - block_elements[0]) as i64;
        for d in 2..=max_d {
            let up = minimal_symbol_block(&inner_vec, &inner_inv, d + 1).unwrap().b_d_invariant(d + 1).unwrap() as i64;
            let down = minimal_symbol_block(&inner_vec, &inner_inv, d - 1).unwrap().b_d_invariant(d - 1).unwrap() as i64;
            let margin = up - down + (2 * d as i64 - 1) * spread - 2 * inner_sum;
            gap.record(margin > 0, || format!("Z = {block_elements:?}, d = {d}: margin {margin}"));
        }
    }
}

fn block_checks() -> [Check; 4] {
    [Check::new(PEELING), Check::new(OP_RELATION), Check::new(TILDE_OFFSET), Check::new(DESCENT_GAP)]
}

/// Checks for one `(n, r)`: every symbol of every family of rank `n` in
/// `Sym_n(r)`, their stripped forms, and every admissible involution.
pub fn check_rank(n: usize, r: usize) -> Vec<Check> {
    let mut club = Check::new(CLUBSUIT);
    let mut rank = Check::new(RANK_FROM_Z);
    let mut strip = Check::new(STRIP_OFFSET);
    let mut block = Check::new(BLOCK_FORMULA);
    let mut per_block = block_checks();

    let check_symbol = |s: &Symbol, club: &mut Check, rank: &mut Check| {
        club.record(s.b_invariant() == s.b_via_zprime(), || format!("{s}: b = {}, partial sums give {}", s.b_invariant(), s.b_via_zprime()));
        rank.record(s.rank() as i64 == rank_from_z(s), || format!("{s}: rank {} vs {}", s.rank(), rank_from_z(s)));
    };

    for (key, _) in families_of_rank(n, r) {
        let members = enumerate_family(&key);
        for m in &members {
            check_symbol(m, &mut club, &mut rank);
            check_symbol(&m.shift(), &mut club, &mut rank);
        }
        for &e in &key.x {
            let mut offsets = BTreeSet::new();
            for m in &members {
                let (_, offset) = strip_x(m, e).unwrap();
                let closed = strip_offset_closed_form(m, e).unwrap();
                strip.record(offset == closed, || format!("{m}, entry {e}: offset {offset}, closed form {closed}"));
                offsets.insert(offset);
            }
            strip.record(offsets.len() == 1, || format!("{key:?}, entry {e}: member-dependent offsets {offsets:?}"));
        }

        let stripped = key.stripped();
        for m in enumerate_family(&stripped) {
            check_symbol(&m, &mut club, &mut rank);
        }
        for inv in enumerate_admissible(&stripped.z, stripped.r).unwrap() {
            let dec = block_decomposition(&stripped, &inv).unwrap();
            for m in f_iota_members(&stripped, &inv).unwrap() {
                let rebuilt = block_formula(&stripped, &dec, &m);
                block.record(rebuilt == m.b_invariant() as i64, || format!("{m} with {inv:?}: b = {}, blocks give {rebuilt}", m.b_invariant()));
            }
            for Block { elements, involution, .. } in &dec.blocks {
                check_block(elements, involution, &mut per_block, 5);
            }
        }
    }
    let mut out = vec![club, rank, strip, block];
    out.extend(per_block);
    out
}

/// Block-level relations on every 0-admissible involution of each support in
/// `supports`, for `d ≤ max_d`.
pub fn check_blocks(supports: &[Vec<u32>], max_d: usize) -> Vec<Check> {
    let mut checks = block_checks();
    for z in supports {
        for inv in enumerate_admissible(z, 0).unwrap() {
            check_block(z, &inv, &mut checks, max_d);
        }
    }
    checks.into()
}

/// Supports used for the standalone block checks: `{1..2l}` and two gapped
/// sets for every `l ≤ max_l`.
pub fn standard_supports(max_l: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for l in 0..=max_l as u32 {
        out.push((1..=2 * l).collect());
        if l > 0 {
            out.push((1..=2 * l).map(|i| 2 * i - 1).collect());
            out.push((1..=2 * l).map(|i| i * i + (i % 3)).collect());
        }
    }
    out
}

/// Every identity over `n ≤ n_max`, `1 ≤ r ≤ r_max`, plus the standalone block
/// sweep for `|Z| ≤ 10`, `d ≤ 5`.
pub fn check_all(n_max: usize, r_max: usize, exec: Execution) -> Vec<Check> {
    let tasks: Vec<(usize, usize)> =
        (0..=n_max).flat_map(|n| (1..=r_max).map(move |r| (n, r))).collect();
    let mut parts = exec.flat_map(&tasks, |&(n, r)| check_rank(n, r));
    let supports = standard_supports(5);
    parts.extend(exec.flat_map(&supports, |z| check_blocks(std::slice::from_ref(z), 5)));
    merge_by_name(parts)
}

/// Lower bound for the two constructed symbols on `Y`, for `d ≥ 1`:
/// `b_{d+1} - b_{d-1} ≥ -(2d-1)(y_max - y_min) + 2 Σ Y`.
pub fn descent_bound_holds(y: &[u32], inv: &AdmissibleInvolution, d: usize) -> bool {
    if y.is_empty() {
        return true;
    }
    let up = minimal_symbol_block(y, inv, d + 1).unwrap().b_d_invariant(d + 1).unwrap() as i64;
    let down = minimal_symbol_block(y, inv, d - 1).unwrap().b_d_invariant(d - 1).unwrap() as i64;
    let sum: i64 = y.iter().map(|&v| v as i64).sum();
    let spread = (y[y.len() - 1] - y[0]) as i64;
    up - down >= -(2 * d as i64 - 1) * spread + 2 * sum
}
