//! Zermelo parts, level-m components and well-represented union forms.

use std::cmp::Ordering;
use std::fmt;

use crate::cardinal::SymCardinal;
use crate::error::{Error, Result};
use crate::hf::HfSet;

use super::SetTerm;

/// A Zermelo set the calculus can name: a hereditarily finite set or a tower `P^k(N)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ZermeloPart {
    Finite(HfSet),
    /// `P^k(N)`.
    NatTower(usize),
}

impl ZermeloPart {
    pub fn empty() -> Self {
        ZermeloPart::Finite(HfSet::empty())
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, ZermeloPart::Finite(x) if x.is_empty())
    }

    pub fn cardinality(&self) -> SymCardinal {
        match self {
            ZermeloPart::Finite(x) => SymCardinal::Fin(x.len() as u64),
            ZermeloPart::NatTower(k) => SymCardinal::Beth(*k as u32),
        }
    }

    /// `Some(answer)` when decidable; `None` for `N` itself, whose status is left open.
    pub fn is_powered(&self) -> Option<bool> {
        match self {
            ZermeloPart::Finite(x) => Some(x.is_powered()),
            ZermeloPart::NatTower(0) => None,
            ZermeloPart::NatTower(_) => Some(true),
        }
    }

    /// Membership of a finite set in this Zermelo set.
    pub fn contains(&self, a: &HfSet) -> bool {
        match self {
            ZermeloPart::Finite(x) => x.contains(a),
            ZermeloPart::NatTower(k) => in_nat_tower(a, *k),
        }
    }

    /// `a ∈ P^n(self)` without materializing the powersets.
    pub fn contains_in_power(&self, a: &HfSet, n: usize) -> bool {
        if n == 0 {
            self.contains(a)
        } else {
            a.iter().all(|e| self.contains_in_power(e, n - 1))
        }
    }

    /// Classical inclusion. `N` is transitive, so the tower is increasing under `⊆`.
    pub fn is_subset(&self, other: &ZermeloPart) -> bool {
        match (self, other) {
            (ZermeloPart::Finite(x), ZermeloPart::Finite(y)) => x.is_subset(y),
            (ZermeloPart::Finite(x), tower) => x.iter().all(|e| tower.contains(e)),
            (ZermeloPart::NatTower(_), ZermeloPart::Finite(_)) => false,
            (ZermeloPart::NatTower(j), ZermeloPart::NatTower(k)) => j <= k,
        }
    }

    /// `self ∪ other`, exact whenever the union is again nameable.
    pub fn union(&self, other: &ZermeloPart) -> Result<ZermeloPart> {
        if self.is_subset(other) {
            return Ok(other.clone());
        }
        if other.is_subset(self) {
            return Ok(self.clone());
        }
        match (self, other) {
            (ZermeloPart::Finite(x), ZermeloPart::Finite(y)) => {
                Ok(ZermeloPart::Finite(crate::hf::union_hf([x, y])))
            }
            _ => Err(Error::UnsupportedOperand(format!(
                "union of {} and {} mixes a finite set with the tower over N",
                self.to_term(),
                other.to_term()
            ))),
        }
    }

    /// `P^height(core)` with `core` non-powered; `N` counts as a core.
    pub fn core(&self) -> (ZermeloPart, usize) {
        match self {
            ZermeloPart::Finite(x) => {
                let d = x.strip_power();
                (ZermeloPart::Finite(d.core), d.height)
            }
            ZermeloPart::NatTower(k) => (ZermeloPart::NatTower(0), *k),
        }
    }

    pub fn to_term(&self) -> SetTerm {
        match self {
            ZermeloPart::Finite(x) => SetTerm::lit(x.clone()),
            ZermeloPart::NatTower(k) => SetTerm::pow_n(SetTerm::Nat, *k),
        }
    }
}

fn in_nat_tower(a: &HfSet, k: usize) -> bool {
    if k == 0 {
        a.is_numeral()
    } else {
        a.iter().all(|e| in_nat_tower(e, k - 1))
    }
}

/// Cardinality first, then the canonical order on finite sets.
impl Ord for ZermeloPart {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cardinality().cmp(&other.cardinality()).then_with(|| match (self, other) {
            (ZermeloPart::Finite(x), ZermeloPart::Finite(y)) => x.cmp(y),
            _ => Ordering::Equal,
        })
    }
}

impl PartialOrd for ZermeloPart {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ZermeloPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.to_term(), f)
    }
}

/// `P^-level(payload)` with a nonempty, non-powered payload and `level ≥ 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Component {
    level: usize,
    payload: ZermeloPart,
}

impl Component {
    pub fn new(level: usize, payload: ZermeloPart) -> Result<Self> {
        if level == 0 {
            return Err(Error::Domain("a component has level at least 1".into()));
        }
        match &payload {
            ZermeloPart::Finite(x) if x.is_empty() => {
                return Err(Error::Domain(format!(
                    "P^-{level} of the empty set is undefined"
                )))
            }
            ZermeloPart::Finite(x) if x.is_powered() => {
                return Err(Error::Domain(format!("payload {x} is powered")))
            }
            ZermeloPart::NatTower(k) if *k > 0 => {
                return Err(Error::Domain("payload P^k(N) with k > 0 is powered".into()))
            }
            _ => {}
        }
        Ok(Component { level, payload })
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn payload(&self) -> &ZermeloPart {
        &self.payload
    }

    pub(crate) fn raise(&self) -> Component {
        Component { level: self.level + 1, payload: self.payload.clone() }
    }

    pub(crate) fn lower(&self) -> Option<Component> {
        (self.level > 1).then(|| Component { level: self.level - 1, payload: self.payload.clone() })
    }

    pub fn to_term(&self) -> SetTerm {
        SetTerm::inv_pow_n(self.payload.to_term(), self.level)
    }
}

/// Well-represented order: level ascending, then payload cardinality descending, then payload
/// descending so equal multisets sort identically.
impl Ord for Component {
    fn cmp(&self, other: &Self) -> Ordering {
        self.level
            .cmp(&other.level)
            .then_with(|| other.payload.cmp(&self.payload))
    }
}

impl PartialOrd for Component {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.to_term(), f)
    }
}

/// A union form `X ∪ P^-m1(Y1) ∪ ...` with one Zermelo part and a sorted multiset of
/// components. Equality is formal: equal Zermelo part and equal component multiset.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NormalForm {
    zermelo: ZermeloPart,
    components: Vec<Component>,
}

impl NormalForm {
    pub fn new(zermelo: ZermeloPart, mut components: Vec<Component>) -> Self {
        components.sort();
        NormalForm { zermelo, components }
    }

    pub fn zermelo_only(zermelo: ZermeloPart) -> Self {
        NormalForm { zermelo, components: Vec::new() }
    }

    pub fn zermelo(&self) -> &ZermeloPart {
        &self.zermelo
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn is_zermelo(&self) -> bool {
        self.components.is_empty()
    }

    /// The form with one more component, re-sorted.
    pub fn with_component(&self, c: Component) -> NormalForm {
        let mut components = self.components.clone();
        components.push(c);
        NormalForm::new(self.zermelo.clone(), components)
    }

    /// Whether this form names a single Zermelo set or a single component.
    pub fn as_single(&self) -> Option<Single> {
        match self.components.as_slice() {
            [] => Some(Single::Zermelo(self.zermelo.clone())),
            [c] if self.zermelo.is_empty() => Some(Single::Level(c.clone())),
            _ => None,
        }
    }

    /// The Zermelo part first (omitted when empty and components exist), then the
    /// components in well-represented order.
    pub fn to_term(&self) -> SetTerm {
        let mut pieces = Vec::with_capacity(self.components.len() + 1);
        if !self.zermelo.is_empty() || self.components.is_empty() {
            pieces.push(self.zermelo.to_term());
        }
        pieces.extend(self.components.iter().map(Component::to_term));
        SetTerm::union(pieces)
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.to_term(), f)
    }
}

/// The value of a union-free term.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Single {
    Zermelo(ZermeloPart),
    Level(Component),
}

impl Single {
    pub fn level(&self) -> usize {
        match self {
            Single::Zermelo(_) => 0,
            Single::Level(c) => c.level(),
        }
    }

    pub fn to_term(&self) -> SetTerm {
        match self {
            Single::Zermelo(z) => z.to_term(),
            Single::Level(c) => c.to_term(),
        }
    }

    pub fn into_normal_form(self) -> NormalForm {
        match self {
            Single::Zermelo(z) => NormalForm::zermelo_only(z),
            Single::Level(c) => NormalForm::new(ZermeloPart::empty(), vec![c]),
        }
    }
}
