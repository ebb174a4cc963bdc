//! Brute-force reference implementations the checks compare against.
//!
//! These deliberately avoid the fast paths they are checking: no closed-form powered test, no
//! `LevelRank` ordering, no `is_subset`.

use crate::cardinal::{SymCardinal, Verdict};
use crate::error::{Error, Result};
use crate::hf::{enumerate_universe, HfSet};
use crate::term::{NormalForm, ZermeloPart};

/// Whether `x = P(x')` for some `x'` of rank at most `rank`, by exhaustive search.
///
/// Only candidates one rank below `x` can work, since `rank(P(y)) = rank(y) + 1`.
pub fn brute_force_powered(x: &HfSet, rank: usize) -> Result<bool> {
    if rank + 1 < x.rank() {
        return Err(Error::Domain(format!(
            "search rank {rank} cannot reach a preimage of a rank-{} set",
            x.rank()
        )));
    }
    let search = rank.min(x.rank().saturating_sub(1));
    Ok(enumerate_universe(search)?
        .iter()
        .filter(|c| c.len() < 64 && 1usize << c.len() == x.len())
        .any(|c| &c.powerset() == x))
}

/// `a ⊆ b` by scanning for every element of `a` among the elements of `b`.
pub fn subset_by_scan(a: &HfSet, b: &HfSet) -> bool {
    a.iter().all(|e| b.iter().any(|f| f == e))
}

/// `∀S ∈ universe (S ⊆ a ⇒ S ⊆ b)`, the subset side of extensionality over a finite universe.
pub fn subsets_included(a: &HfSet, b: &HfSet, universe: &[HfSet]) -> bool {
    universe.iter().filter(|s| subset_by_scan(s, a)).all(|s| subset_by_scan(s, b))
}

/// Whether `members` is closed under taking subsets, subsets drawn from `universe`.
pub fn downward_closed(members: &[HfSet], universe: &[HfSet]) -> bool {
    members.iter().all(|m| {
        universe
            .iter()
            .filter(|s| subset_by_scan(s, m))
            .all(|s| members.iter().any(|n| n == s))
    })
}

/// Slot `(ρ, τ)` with ρ encoded as an integer and `-∞` as `i64::MIN`.
fn raw_slots(form: &NormalForm, len: usize) -> Vec<(i64, SymCardinal)> {
    let card = |z: &ZermeloPart| match z {
        ZermeloPart::Finite(x) => SymCardinal::Fin(x.len() as u64),
        ZermeloPart::NatTower(k) => SymCardinal::Beth(*k as u32),
    };
    let mut out = vec![(0, card(form.zermelo()))];
    out.extend(form.components().iter().map(|c| (-(c.level() as i64), card(c.payload()))));
    out.resize(len, (i64::MIN, SymCardinal::Fin(0)));
    out
}

/// The ¬CHS comparison read literally: at the first slot where `(ρ, τ)` differ, `x < y` when
/// `ρ < ρ'` with `τ ≤ τ'`, or `ρ ≤ ρ'` with `τ < τ'`. Slots where one coordinate rises while
/// the other falls decide nothing and give `Incomparable`.
pub fn literal_neg_chs(x: &NormalForm, y: &NormalForm) -> Verdict {
    let len = 1 + x.components().len().max(y.components().len());
    let (xs, ys) = (raw_slots(x, len), raw_slots(y, len));
    let Some(k) = (0..len).find(|&k| xs[k] != ys[k]) else {
        return Verdict::Equal;
    };
    let ((r1, t1), (r2, t2)) = (xs[k], ys[k]);
    if (r1 < r2 && t1 <= t2) || (r1 <= r2 && t1 < t2) {
        Verdict::Less
    } else if (r2 < r1 && t2 <= t1) || (r2 <= r1 && t2 < t1) {
        Verdict::Greater
    } else {
        Verdict::Incomparable
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hf::numeral;
    use crate::term::Component;

    #[test]
    fn brute_force_examples() {
        assert!(brute_force_powered(&numeral(2), 2).unwrap());
        assert!(!brute_force_powered(&numeral(3), 3).unwrap());
        assert!(!brute_force_powered(&HfSet::empty(), 1).unwrap());
        assert!(brute_force_powered(&numeral(3).powerset(), 3).unwrap());
        assert!(brute_force_powered(&numeral(3).powerset(), 1).is_err());
    }

    #[test]
    fn literal_order_leaves_crossed_slots_open() {
        let three = ZermeloPart::Finite(numeral(3));
        let one = ZermeloPart::Finite(numeral(1).singleton());
        let a = NormalForm::new(three.clone(), vec![Component::new(1, one).unwrap()]);
        let b = NormalForm::new(three.clone(), vec![Component::new(2, three).unwrap()]);
        assert_eq!(literal_neg_chs(&a, &b), Verdict::Incomparable);
        assert_eq!(literal_neg_chs(&a, &a), Verdict::Equal);
    }
}
