//! Symbolic cardinals and the three extended cardinality orders.
//!
//! * CH-cardinality ([`ch_card`], [`ch_leq`]) on Zermelo sets and level-1 components.
//! * ¬CH-cardinality ([`neg_ch_cmp`]), a partial order comparing union forms slot by slot.
//! * ¬CHS-cardinality ([`neg_chs_cmp`]), the lexicographic total preorder on `(ρ, τ)` slots,
//!   which is dense: [`between_witness`] builds a form strictly between any `x < y`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::term::{normalize, Component, NormalForm, SetTerm, Single, ZermeloPart};

/// A finite cardinal or `|P^k(N)|`.
///
/// `Beth(0)` is `ℵ0` and `Beth(1)` the continuum. Every finite cardinal lies below every tower
/// cardinal and the tower is strictly increasing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum SymCardinal {
    Fin(u64),
    Beth(u32),
}

impl SymCardinal {
    pub fn finite(self) -> Option<u64> {
        match self {
            SymCardinal::Fin(n) => Some(n),
            SymCardinal::Beth(_) => None,
        }
    }

    pub fn is_zero(self) -> bool {
        self == SymCardinal::Fin(0)
    }
}

impl fmt::Display for SymCardinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymCardinal::Fin(n) => write!(f, "fin:{n}"),
            SymCardinal::Beth(k) => write!(f, "beth:{k}"),
        }
    }
}

impl FromStr for SymCardinal {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || format!("not a cardinal: `{s}`");
        match s.split_once(':') {
            Some(("fin", n)) => n.parse().map(SymCardinal::Fin).map_err(|_| bad()),
            Some(("beth", k)) => k.parse().map(SymCardinal::Beth).map_err(|_| bad()),
            _ => Err(bad()),
        }
    }
}

impl From<SymCardinal> for String {
    fn from(c: SymCardinal) -> String {
        c.to_string()
    }
}

impl TryFrom<String> for SymCardinal {
    type Error = String;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

/// Value of ρ: `0`, `-m`, or `-∞`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LevelRank {
    Zero,
    Neg(usize),
    NegInfinity,
}

impl Ord for LevelRank {
    fn cmp(&self, other: &Self) -> Ordering {
        use LevelRank::*;
        match (self, other) {
            (NegInfinity, NegInfinity) | (Zero, Zero) => Ordering::Equal,
            (NegInfinity, _) | (_, Zero) => Ordering::Less,
            (_, NegInfinity) | (Zero, _) => Ordering::Greater,
            (Neg(a), Neg(b)) => b.cmp(a),
        }
    }
}

impl PartialOrd for LevelRank {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for LevelRank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LevelRank::Zero => f.write_str("0"),
            LevelRank::Neg(m) => write!(f, "-{m}"),
            LevelRank::NegInfinity => f.write_str("-inf"),
        }
    }
}

/// Outcome of comparing two extended cardinalities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Less,
    Equal,
    Greater,
    Incomparable,
}

impl Verdict {
    pub fn reverse(self) -> Verdict {
        match self {
            Verdict::Less => Verdict::Greater,
            Verdict::Greater => Verdict::Less,
            other => other,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Less => "lt",
            Verdict::Equal => "eq",
            Verdict::Greater => "gt",
            Verdict::Incomparable => "incomparable",
        }
    }
}

impl From<Ordering> for Verdict {
    fn from(o: Ordering) -> Self {
        match o {
            Ordering::Less => Verdict::Less,
            Ordering::Equal => Verdict::Equal,
            Ordering::Greater => Verdict::Greater,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One union slot of a form: its Zermelo part, a component, or empty padding.
#[derive(Debug, Clone, Copy)]
pub enum Slot<'a> {
    Zermelo(&'a ZermeloPart),
    Component(&'a Component),
    Empty,
}

pub fn rho(slot: Slot<'_>) -> LevelRank {
    match slot {
        Slot::Zermelo(_) => LevelRank::Zero,
        Slot::Component(c) => LevelRank::Neg(c.level()),
        Slot::Empty => LevelRank::NegInfinity,
    }
}

pub fn tau(slot: Slot<'_>) -> SymCardinal {
    match slot {
        Slot::Zermelo(z) => z.cardinality(),
        Slot::Component(c) => c.payload().cardinality(),
        Slot::Empty => SymCardinal::Fin(0),
    }
}

fn key(slot: Slot<'_>) -> (LevelRank, SymCardinal) {
    (rho(slot), tau(slot))
}

/// The slots of a form: the Zermelo part first, then components, then empty padding forever.
pub fn slots(form: &NormalForm) -> impl Iterator<Item = Slot<'_>> {
    std::iter::once(Slot::Zermelo(form.zermelo()))
        .chain(form.components().iter().map(Slot::Component))
        .chain(std::iter::repeat(Slot::Empty))
}

/// `0` for finite sets and `N`, `k` for `P^k(N)`.
pub fn degree(z: &ZermeloPart) -> usize {
    match z {
        ZermeloPart::Finite(_) => 0,
        ZermeloPart::NatTower(k) => *k,
    }
}

/// CH-cardinality. Classical on Zermelo sets; on `P^-1(X)` with `X` non-powered of degree `k`
/// it is `|P^(k-1)(N)|` for `k ≥ 1` and `|N|` for `k = 0`.
pub fn ch_card(t: &SetTerm) -> Result<SymCardinal> {
    let nf = normalize(t)?;
    match nf.as_single() {
        Some(Single::Zermelo(z)) => Ok(z.cardinality()),
        Some(Single::Level(c)) if c.level() == 1 => Ok(match degree(c.payload()) {
            0 => SymCardinal::Beth(0),
            k => SymCardinal::Beth(k as u32 - 1),
        }),
        Some(Single::Level(c)) => Err(Error::OutsideEzf(format!(
            "CH-cardinality is defined up to level 1, got level {}",
            c.level()
        ))),
        None => Err(Error::OutsideEzf(format!("CH-cardinality of union form {nf}"))),
    }
}

pub fn ch_leq(a: &SetTerm, b: &SetTerm) -> Result<bool> {
    Ok(ch_card(a)? <= ch_card(b)?)
}

pub fn ch_cmp(a: &SetTerm, b: &SetTerm) -> Result<Verdict> {
    Ok(ch_card(a)?.cmp(&ch_card(b)?).into())
}

/// `|x|_¬ch ≤ |y|_¬ch`.
///
/// Holds when the Zermelo parts are strictly ordered, or when they have equal cardinality, `x`
/// has no more union slots than `y`, and each of `x`'s components is dominated in both ρ and τ
/// by `y`'s component at the same index. Surplus components of `y` are unconstrained.
pub fn neg_ch_leq(x: &NormalForm, y: &NormalForm) -> bool {
    let (zx, zy) = (x.zermelo().cardinality(), y.zermelo().cardinality());
    if zx < zy {
        return true;
    }
    zx == zy
        && x.components().len() <= y.components().len()
        && x.components().iter().zip(y.components()).all(|(a, b)| {
            let (a, b) = (Slot::Component(a), Slot::Component(b));
            rho(a) <= rho(b) && tau(a) <= tau(b)
        })
}

fn neg_ch_equal(x: &NormalForm, y: &NormalForm) -> bool {
    x.zermelo().cardinality() == y.zermelo().cardinality()
        && x.components().len() == y.components().len()
        && x
            .components()
            .iter()
            .zip(y.components())
            .all(|(a, b)| key(Slot::Component(a)) == key(Slot::Component(b)))
}

/// The ¬CH order, which is partial.
pub fn neg_ch_cmp(x: &NormalForm, y: &NormalForm) -> Verdict {
    if neg_ch_equal(x, y) {
        Verdict::Equal
    } else if neg_ch_leq(x, y) {
        Verdict::Less
    } else if neg_ch_leq(y, x) {
        Verdict::Greater
    } else {
        Verdict::Incomparable
    }
}

/// The ¬CHS order: after padding both forms with empty slots, the first slot whose `(ρ, τ)`
/// pairs differ decides, ρ first and τ second. Never `Incomparable`.
pub fn neg_chs_cmp(x: &NormalForm, y: &NormalForm) -> Verdict {
    let len = 1 + x.components().len().max(y.components().len());
    slots(x)
        .zip(slots(y))
        .take(len)
        .map(|(a, b)| key(a).cmp(&key(b)))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal)
        .into()
}

/// A form strictly between `x` and `y` in the ¬CHS order, for `x < y`.
///
/// The witness is `x ∪ P^(r-1)(K)` where `r` is the least finite ρ over both forms and `K` the
/// non-powered core of the slot with the smallest nonzero τ. Slots whose core is `∅` are
/// skipped, since `P^-m(∅)` is undefined.
pub fn between_witness(x: &NormalForm, y: &NormalForm) -> Result<NormalForm> {
    let verdict = neg_chs_cmp(x, y);
    if verdict != Verdict::Less {
        return Err(Error::Ordering(format!("expected {x} < {y}, found {verdict}")));
    }
    let occupied = || {
        [x, y].into_iter().flat_map(|f| {
            std::iter::once(Slot::Zermelo(f.zermelo()))
                .chain(f.components().iter().map(Slot::Component))
        })
    };
    let deepest = occupied()
        .filter_map(|s| match s {
            Slot::Component(c) => Some(c.level()),
            _ => None,
        })
        .max()
        .unwrap_or(0);

    let mut candidates: Vec<(SymCardinal, &ZermeloPart)> = occupied()
        .filter_map(|s| match s {
            Slot::Zermelo(z) => Some((tau(s), z)),
            Slot::Component(c) => Some((tau(s), c.payload())),
            Slot::Empty => None,
        })
        .filter(|(t, _)| !t.is_zero())
        .collect();
    // stable: ties keep x's slots before y's
    candidates.sort_by_key(|(t, _)| *t);
    let core = candidates
        .into_iter()
        .map(|(_, z)| z.core().0)
        .find(|core| !core.is_empty())
        .ok_or_else(|| {
            Error::WitnessUnavailable(format!(
                "every candidate slot of {x} and {y} strips to the empty set"
            ))
        })?;
    Ok(x.with_component(Component::new(deepest + 1, core)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hf::{numeral, HfSet};

    fn fin(x: HfSet) -> ZermeloPart {
        ZermeloPart::Finite(x)
    }

    fn one_set() -> HfSet {
        numeral(1).singleton()
    }

    fn form(z: HfSet, comps: &[(usize, HfSet)]) -> NormalForm {
        NormalForm::new(
            fin(z),
            comps
                .iter()
                .map(|(m, y)| Component::new(*m, fin(y.clone())).unwrap())
                .collect(),
        )
    }

    #[test]
    fn cardinal_order_and_text() {
        assert!(SymCardinal::Fin(7) < SymCardinal::Fin(8));
        assert!(SymCardinal::Fin(u64::MAX) < SymCardinal::Beth(0));
        assert!(SymCardinal::Beth(0) < SymCardinal::Beth(1));
        assert_eq!(SymCardinal::Fin(3).to_string(), "fin:3");
        assert_eq!("beth:2".parse::<SymCardinal>().unwrap(), SymCardinal::Beth(2));
        assert!("aleph:0".parse::<SymCardinal>().is_err());
        assert_eq!(serde_json::to_string(&SymCardinal::Beth(1)).unwrap(), "\"beth:1\"");
    }

    #[test]
    fn level_rank_order() {
        use LevelRank::*;
        assert!(NegInfinity < Neg(5));
        assert!(Neg(5) < Neg(4));
        assert!(Neg(1) < Zero);
        assert_eq!(Neg(2).to_string(), "-2");
    }

    #[test]
    fn degrees() {
        assert_eq!(degree(&fin(numeral(5))), 0);
        assert_eq!(degree(&ZermeloPart::NatTower(0)), 0);
        assert_eq!(degree(&ZermeloPart::NatTower(2)), 2);
    }

    #[test]
    fn ch_card_examples() {
        assert_eq!(ch_card(&SetTerm::numeral(2)).unwrap(), SymCardinal::Fin(2));
        let t = SetTerm::inv_pow(SetTerm::numeral(3));
        assert_eq!(ch_card(&t).unwrap(), SymCardinal::Beth(0));
        let t = SetTerm::inv_pow(SetTerm::pow_n(SetTerm::Nat, 2));
        assert_eq!(ch_card(&t).unwrap(), SymCardinal::Beth(1));
        let t = SetTerm::inv_pow_n(SetTerm::numeral(3), 2);
        assert!(matches!(ch_card(&t), Err(Error::OutsideEzf(_))));
        let t = SetTerm::inv_pow(SetTerm::Nat);
        assert_eq!(ch_card(&t).unwrap(), SymCardinal::Beth(0));
    }

    #[test]
    fn ch_leq_examples() {
        let inv3 = SetTerm::inv_pow(SetTerm::numeral(3));
        assert!(!ch_leq(&inv3, &SetTerm::numeral(7)).unwrap());
        assert!(ch_leq(&inv3, &SetTerm::Nat).unwrap());
        assert!(ch_leq(&SetTerm::Nat, &inv3).unwrap());
        assert_eq!(ch_cmp(&inv3, &SetTerm::Nat).unwrap(), Verdict::Equal);
        assert!(ch_leq(&SetTerm::numeral(4), &SetTerm::numeral(4)).unwrap());
    }

    #[test]
    fn rho_tau_examples() {
        let z = fin(numeral(3));
        assert_eq!(rho(Slot::Zermelo(&z)), LevelRank::Zero);
        assert_eq!(tau(Slot::Zermelo(&z)), SymCardinal::Fin(3));
        let c = Component::new(2, fin(numeral(3))).unwrap();
        assert_eq!(rho(Slot::Component(&c)), LevelRank::Neg(2));
        let c = Component::new(2, fin(one_set())).unwrap();
        assert_eq!(tau(Slot::Component(&c)), SymCardinal::Fin(1));
        assert_eq!(rho(Slot::Empty), LevelRank::NegInfinity);
        assert_eq!(tau(Slot::Empty), SymCardinal::Fin(0));
    }

    #[test]
    fn neg_ch_examples() {
        let three = numeral(3);
        let x = form(three.clone(), &[]);
        let y = form(three.clone(), &[(1, one_set())]);
        assert_eq!(neg_ch_cmp(&x, &y), Verdict::Less);
        assert_eq!(neg_ch_cmp(&y, &x), Verdict::Greater);
        let p = form(three.powerset(), &[]);
        assert_eq!(neg_ch_cmp(&y, &p), Verdict::Less);
        let z = form(three.clone(), &[(2, three.clone())]);
        assert_eq!(neg_ch_cmp(&y, &z), Verdict::Incomparable);
        assert_eq!(neg_ch_cmp(&y, &y.clone()), Verdict::Equal);
    }

    #[test]
    fn neg_chs_examples() {
        let three = numeral(3);
        assert_eq!(neg_chs_cmp(&form(three.clone(), &[]), &form(numeral(4), &[])), Verdict::Less);
        let a = form(three.clone(), &[(2, one_set())]);
        let b = form(three.clone(), &[(1, one_set())]);
        assert_eq!(neg_chs_cmp(&a, &b), Verdict::Less);
        let c = form(three.clone(), &[(1, three.clone())]);
        assert_eq!(neg_chs_cmp(&b, &c), Verdict::Less);
        let d = form(three.clone(), &[(1, three.clone()), (1, three.clone())]);
        assert_eq!(neg_chs_cmp(&c, &d), Verdict::Less);
        assert_eq!(neg_chs_cmp(&d, &c), Verdict::Greater);
        // first differing slot is ρ-greater but τ-smaller: ρ decides
        let e = form(three.clone(), &[(2, three.clone())]);
        assert_eq!(neg_chs_cmp(&b, &e), Verdict::Greater);
    }

    #[test]
    fn between_examples() {
        let three = numeral(3);
        let x = form(three.clone(), &[]);
        let y = form(three.clone(), &[(1, one_set())]);
        let u = between_witness(&x, &y).unwrap();
        assert_eq!(u, form(three.clone(), &[(2, one_set())]));

        let x = form(three.clone(), &[(1, one_set())]);
        let y = form(three.clone(), &[(1, three.clone())]);
        let u = between_witness(&x, &y).unwrap();
        assert_eq!(u, form(three.clone(), &[(1, one_set()), (2, one_set())]));
        assert_eq!(neg_chs_cmp(&x, &u), Verdict::Less);
        assert_eq!(neg_chs_cmp(&u, &y), Verdict::Less);

        let e = form(HfSet::empty(), &[]);
        assert!(matches!(between_witness(&e, &e), Err(Error::Ordering(_))));

        // numerals 1 and 2 are power towers over ∅
        let r = between_witness(&form(numeral(1), &[]), &form(numeral(2), &[]));
        assert!(matches!(r, Err(Error::WitnessUnavailable(_))));
    }
}
