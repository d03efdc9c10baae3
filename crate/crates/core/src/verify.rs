//! Exhaustive verification sweeps over small ranks.

use serde::Serialize;

use crate::check::{merge_by_name, Check};
use crate::constructible::{f_iota_members, families_of_rank, minimal_symbol, minimal_symbol_block, Ratio};
use crate::exec::Execution;
use crate::family::{enumerate_family, special_symbol};
use crate::identities::{self, block_key};
use crate::involution::enumerate_admissible;
use crate::lusztig::{character_b, check_theorem_l, special_constituent_checks, TheoremLReport};
use crate::partition::{Bipartition, Partition};
use crate::symbol::Symbol;

pub const SPECIAL_MINIMUM: &str = "special symbol is the unique b-minimum of its family";
pub const SPECIAL_UNIQUE: &str = "exactly one special member per family";
pub const INVOLUTION_MINIMUM: &str = "constructed symbol is the unique b-minimum of F_iota";
pub const F_IOTA_SIZE: &str = "|F_iota| = 2^l";
pub const BLOCK_MINIMUM: &str = "block construction is the unique b_d-minimum";
pub const EQUAL_PARAMETER: &str = "special character lies in every constructible of its family (r = 1)";
pub const EXTREME_CHARACTERS: &str = "trivial-type b = 0 and sign-type b = n^2";

/// Unique-argmin test returning the minimizer, or `None` on a tie.
fn unique_min(items: &[Symbol], value: impl Fn(&Symbol) -> u64) -> Option<&Symbol> {
    let values: Vec<u64> = items.iter().map(&value).collect();
    let min = *values.iter().min()?;
    let mut at = values.iter().enumerate().filter(|(_, &v)| v == min).map(|(i, _)| i);
    let first = at.next()?;
    at.next().is_none().then(|| &items[first])
}

/// Family minimality and the `F_ι` minimality at one `(n, r)`, by brute force
/// over every member.
pub fn check_minimality(n: usize, r: usize) -> Vec<Check> {
    let mut special_min = Check::new(SPECIAL_MINIMUM);
    let mut special_unique = Check::new(SPECIAL_UNIQUE);
    let mut inv_min = Check::new(INVOLUTION_MINIMUM);
    let mut size = Check::new(F_IOTA_SIZE);
    for (key, _) in families_of_rank(n, r) {
        let members = enumerate_family(&key);
        let special = special_symbol(&key);
        let argmin = unique_min(&members, Symbol::b_invariant);
        special_min.record(argmin == Some(&special), || format!("{key:?}: argmin {argmin:?}, special {special}"));
        let specials: Vec<&Symbol> = members.iter().filter(|m| m.is_special()).collect();
        special_unique.record(specials == vec![&special], || format!("{key:?}: special members {specials:?}"));

        for inv in enumerate_admissible(&key.z, key.r).unwrap() {
            let f_iota = f_iota_members(&key, &inv).unwrap();
            // brute-force F_iota: filter the whole family by the orbit condition
            let filtered: Vec<Symbol> = members
                .iter()
                .filter(|m| inv.orbits().iter().all(|o| o.iter().filter(|v| m.beta().binary_search(v).is_ok()).count() == 1))
                .cloned()
                .collect();
            size.record(f_iota.len() == 1 << inv.l() && f_iota == filtered, || {
                format!("{key:?}, {inv:?}: {} members, filter gives {}", f_iota.len(), filtered.len())
            });
            let built = minimal_symbol(&key, &inv).unwrap();
            let argmin = unique_min(&f_iota, Symbol::b_invariant);
            inv_min.record(argmin == Some(&built), || format!("{key:?}, {inv:?}: argmin {argmin:?}, built {built}"));
        }
    }
    vec![special_min, special_unique, inv_min, size]
}

/// Block construction against the brute-force `b_d` minimum over `G_ι`, for
/// every 0-admissible involution of each support and every `d ≤ max_d`.
pub fn check_block_minimum(supports: &[Vec<u32>], max_d: usize, exec: Execution) -> Check {
    let parts = exec.map(supports, |z| {
        let mut check = Check::new(BLOCK_MINIMUM);
        let key = block_key(z);
        for inv in enumerate_admissible(z, 0).unwrap() {
            let members = f_iota_members(&key, &inv).unwrap();
            for d in 0..=max_d {
                let built = minimal_symbol_block(z, &inv, d).unwrap();
                let argmin = unique_min(&members, |m| m.b_d_invariant(d).unwrap());
                check.record(argmin == Some(&built), || format!("Z = {z:?}, {inv:?}, d = {d}: argmin {argmin:?}, built {built}"));
            }
        }
        check
    });
    merge_by_name(parts).pop().unwrap_or_else(|| Check::new(BLOCK_MINIMUM))
}

pub fn check_equal_parameter(n_max: usize) -> Check {
    let mut check = Check::new(EQUAL_PARAMETER);
    for n in 0..=n_max {
        for c in special_constituent_checks(n, 1) {
            check.record(c.argmin_is_special && c.in_every_constructible, || format!("n = {n}: {c:?}"));
        }
    }
    check
}

pub fn check_extreme_characters(n_max: usize, r_max: u32) -> Check {
    let mut check = Check::new(EXTREME_CHARACTERS);
    for n in 1..=n_max {
        let n32 = n as u32;
        let trivial = Bipartition::new(Partition::new(vec![n32]).unwrap(), Partition::empty());
        let sign = Bipartition::new(Partition::empty(), Partition::new(vec![1; n]).unwrap());
        for r in 1..=r_max {
            let ratio = Ratio::Integral(r);
            let (bt, bs) = (character_b(&trivial, ratio), character_b(&sign, ratio));
            check.record(bt == 0 && bs == (n * n) as u64, || format!("n = {n}, r = {r}: trivial {bt}, sign {bs}"));
        }
    }
    check
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub n_max: usize,
    pub r_max: u32,
    pub theorem_l: Vec<TheoremLReport>,
    pub checks: Vec<Check>,
    pub passed: bool,
}

/// Everything `verify` runs: the minimal-`b` checks per `(n, r)`, the
/// brute-force minimality checks, and every formula identity.
pub fn verify(n_max: usize, r_max: u32, exec: Execution) -> VerifyReport {
    let tasks: Vec<(usize, u32)> = (1..=n_max).flat_map(|n| (1..=r_max).map(move |r| (n, r))).collect();
    let theorem_l = exec.map(&tasks, |&(n, r)| check_theorem_l(n, Ratio::Integral(r)));

    let mut checks = merge_by_name(exec.flat_map(&tasks, |&(n, r)| check_minimality(n, r as usize)));
    checks.push(check_block_minimum(&identities::standard_supports(5), 5, exec));
    checks.push(check_equal_parameter(n_max));
    checks.push(check_extreme_characters(n_max, r_max));
    checks.extend(identities::check_all(n_max, r_max as usize, exec));

    let passed = theorem_l.iter().all(TheoremLReport::passed) && checks.iter().all(Check::passed);
    VerifyReport { n_max, r_max, theorem_l, checks, passed }
}
