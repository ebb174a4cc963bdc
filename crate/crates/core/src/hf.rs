//! Canonical hereditarily finite sets.
//!
//! An [`HfSet`] stores its elements sorted in a fixed total order and free of duplicates, so
//! structural equality is extensional equality. Nodes are reference counted and immutable; a
//! structural hash and the von Neumann rank are cached on every node.

use std::cmp::Ordering;
use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest rank [`enumerate_universe`] will materialize by default (`|V_4| = 65536`).
pub const DEFAULT_UNIVERSE_LIMIT: usize = 4;

/// Largest input cardinality [`HfSet::try_powerset`] accepts by default.
pub const DEFAULT_POWERSET_LIMIT: usize = 16;

struct Node {
    rank: usize,
    hash: u64,
    elems: Box<[HfSet]>,
}

/// A hereditarily finite (pure) set in canonical form.
#[derive(Clone)]
pub struct HfSet(Arc<Node>);

/// `input = P^height(core)` with `core` non-powered and `height` maximal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PowerDecomposition {
    pub core: HfSet,
    pub height: usize,
}

impl HfSet {
    /// The empty set.
    pub fn empty() -> Self {
        Self::from_sorted(Vec::new())
    }

    /// Builds a set from arbitrary elements, sorting and removing duplicates.
    pub fn new<I: IntoIterator<Item = HfSet>>(elems: I) -> Self {
        let mut v: Vec<HfSet> = elems.into_iter().collect();
        v.sort();
        v.dedup();
        Self::from_sorted(v)
    }

    // `elems` must already be strictly increasing.
    fn from_sorted(elems: Vec<HfSet>) -> Self {
        debug_assert!(elems.windows(2).all(|w| w[0] < w[1]));
        let rank = elems.iter().map(|e| e.rank() + 1).max().unwrap_or(0);
        let mut h = DefaultHasher::new();
        elems.len().hash(&mut h);
        for e in &elems {
            e.0.hash.hash(&mut h);
        }
        HfSet(Arc::new(Node {
            rank,
            hash: h.finish(),
            elems: elems.into_boxed_slice(),
        }))
    }

    /// `{self}`.
    pub fn singleton(&self) -> Self {
        Self::from_sorted(vec![self.clone()])
    }

    /// The von Neumann numeral `n = {0, 1, ..., n-1}`.
    pub fn numeral(n: usize) -> Self {
        let mut acc: Vec<HfSet> = Vec::with_capacity(n);
        let mut current = HfSet::empty();
        for _ in 0..n {
            // numerals are increasing in the canonical order, so pushing keeps `acc` sorted
            acc.push(current.clone());
            current = Self::from_sorted(acc.clone());
        }
        current
    }

    pub fn rank(&self) -> usize {
        self.0.rank
    }

    pub fn len(&self) -> usize {
        self.0.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.elems.is_empty()
    }

    pub fn elements(&self) -> &[HfSet] {
        &self.0.elems
    }

    pub fn iter(&self) -> std::slice::Iter<'_, HfSet> {
        self.0.elems.iter()
    }

    /// `elem ∈ self`.
    pub fn contains(&self, elem: &HfSet) -> bool {
        self.0.elems.binary_search(elem).is_ok()
    }

    /// `self ⊆ other`.
    pub fn is_subset(&self, other: &HfSet) -> bool {
        if self.len() > other.len() {
            return false;
        }
        // both sides are sorted, so a merge walk suffices
        let mut rest = other.elements();
        for e in self.iter() {
            match rest.binary_search(e) {
                Ok(i) => rest = &rest[i + 1..],
                Err(_) => return false,
            }
        }
        true
    }

    /// The set of all subsets. Panics if `self` has 64 or more elements.
    pub fn powerset(&self) -> HfSet {
        let n = self.len();
        assert!(n < 64, "powerset of a {n}-element set is not representable");
        let mut subsets: Vec<HfSet> = (0u64..(1u64 << n))
            .map(|mask| {
                Self::from_sorted(
                    self.iter()
                        .enumerate()
                        .filter(|(i, _)| mask & (1 << i) != 0)
                        .map(|(_, e)| e.clone())
                        .collect(),
                )
            })
            .collect();
        subsets.sort();
        Self::from_sorted(subsets)
    }

    /// [`HfSet::powerset`] with an explicit bound on the input cardinality.
    pub fn try_powerset(&self, max_len: usize) -> Result<HfSet> {
        if self.len() > max_len {
            return Err(Error::ResourceLimit(format!(
                "powerset of a {}-element set exceeds the limit of {max_len} elements",
                self.len()
            )));
        }
        Ok(self.powerset())
    }

    /// `∪self`, the union of the elements.
    pub fn big_union(&self) -> HfSet {
        union_hf(self.iter())
    }

    /// Whether `self = P(x)` for some hereditarily finite `x`.
    ///
    /// Such an `x` must be `∪self`, so the test is `self = P(∪self)`; the cardinality check
    /// rules out most candidates before any powerset is built.
    pub fn is_powered(&self) -> bool {
        if self.is_empty() {
            return false;
        }
        let u = self.big_union();
        if u.len() >= 64 || (1u64 << u.len()) != self.len() as u64 {
            return false;
        }
        u.powerset() == *self
    }

    /// Strips powersets until a non-powered core remains.
    pub fn strip_power(&self) -> PowerDecomposition {
        let mut core = self.clone();
        let mut height = 0;
        while core.is_powered() {
            core = core.big_union();
            height += 1;
        }
        PowerDecomposition { core, height }
    }

    /// `x ∪ {x}`.
    pub fn successor(&self) -> HfSet {
        Self::new(self.iter().cloned().chain(std::iter::once(self.clone())))
    }

    /// Whether `self` is a von Neumann numeral.
    pub fn is_numeral(&self) -> bool {
        *self == HfSet::numeral(self.len())
    }
}

impl PowerDecomposition {
    /// Applies the powerset `height` times to `core`.
    pub fn recompose(&self) -> HfSet {
        (0..self.height).fold(self.core.clone(), |acc, _| acc.powerset())
    }
}

/// Canonical constructor.
pub fn make_set<I: IntoIterator<Item = HfSet>>(elems: I) -> HfSet {
    HfSet::new(elems)
}

pub fn numeral(n: usize) -> HfSet {
    HfSet::numeral(n)
}

/// Element-wise union of a family of sets.
pub fn union_hf<'a, I: IntoIterator<Item = &'a HfSet>>(sets: I) -> HfSet {
    HfSet::new(sets.into_iter().flat_map(|s| s.iter().cloned()))
}

/// All sets of rank at most `rank`, in canonical order, capped at [`DEFAULT_UNIVERSE_LIMIT`].
pub fn enumerate_universe(rank: usize) -> Result<Vec<HfSet>> {
    enumerate_universe_with_limit(rank, DEFAULT_UNIVERSE_LIMIT)
}

pub fn enumerate_universe_with_limit(rank: usize, limit: usize) -> Result<Vec<HfSet>> {
    if rank > limit || rank > DEFAULT_UNIVERSE_LIMIT {
        return Err(Error::ResourceLimit(format!(
            "universe of rank {rank} exceeds the limit of {}",
            limit.min(DEFAULT_UNIVERSE_LIMIT)
        )));
    }
    let mut level = vec![HfSet::empty()];
    for _ in 0..rank {
        // V_{r+1} = P(V_r), whose elements are exactly the subsets of the current level
        level = HfSet::from_sorted(level).powerset().elements().to_vec();
    }
    Ok(level)
}

impl PartialEq for HfSet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.hash == other.0.hash
                && self.0.rank == other.0.rank
                && self.0.elems == other.0.elems)
    }
}

impl Eq for HfSet {}

impl Hash for HfSet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        state.write_u64(self.0.hash);
    }
}

/// Rank first, then cardinality, then lexicographic on the sorted elements.
impl Ord for HfSet {
    fn cmp(&self, other: &Self) -> Ordering {
        if Arc::ptr_eq(&self.0, &other.0) {
            return Ordering::Equal;
        }
        self.rank()
            .cmp(&other.rank())
            .then_with(|| self.len().cmp(&other.len()))
            .then_with(|| self.elements().cmp(other.elements()))
    }
}

impl PartialOrd for HfSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Default for HfSet {
    fn default() -> Self {
        HfSet::empty()
    }
}

/// Canonical text form: `{e1,e2,...}` in canonical order, no whitespace.
impl fmt::Display for HfSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for HfSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(k: usize) -> HfSet {
        HfSet::numeral(k)
    }

    fn set(elems: &[HfSet]) -> HfSet {
        HfSet::new(elems.iter().cloned())
    }

    #[test]
    fn make_set_basics() {
        assert_eq!(make_set([]), HfSet::empty());
        assert_eq!(make_set([n(0), n(0)]), n(1));
        assert_eq!(make_set([n(1), n(0)]), make_set([n(0), n(1)]));
    }

    #[test]
    fn numerals() {
        assert!(n(0).is_empty());
        assert_eq!(n(2), set(&[HfSet::empty(), set(&[HfSet::empty()])]));
        assert_eq!(n(3).len(), 3);
        assert_eq!(n(3), set(&[n(0), n(1), n(2)]));
        assert_eq!(n(4), n(3).successor());
        assert!(n(7).is_numeral());
        assert!(!set(&[n(1)]).is_numeral());
    }

    #[test]
    fn membership() {
        assert!(n(1).contains(&HfSet::empty()));
        assert!(!HfSet::empty().contains(&HfSet::empty()));
        // numeral 3 = {0, 1, 2}
        assert!(n(3).contains(&n(1)));
        assert!(!n(3).contains(&n(3)));
    }

    #[test]
    fn subsets() {
        for x in enumerate_universe(3).unwrap() {
            assert!(HfSet::empty().is_subset(&x));
        }
        assert!(set(&[n(1)]).is_subset(&n(2)));
        assert!(!n(2).is_subset(&set(&[n(1)])));
    }

    #[test]
    fn powersets() {
        assert_eq!(HfSet::empty().powerset(), n(1));
        // P(2) = {0, 1, {1}, 2}
        assert_eq!(n(2).powerset(), set(&[n(0), n(1), set(&[n(1)]), n(2)]));
        assert_eq!(n(3).powerset().len(), 8);
        assert!(matches!(n(5).try_powerset(4), Err(Error::ResourceLimit(_))));
    }

    #[test]
    fn unions() {
        assert_eq!(union_hf(std::iter::empty()), HfSet::empty());
        assert_eq!(union_hf([&n(1), &set(&[n(1)])]), n(2));
        for x in enumerate_universe(3).unwrap() {
            assert_eq!(x.powerset().big_union(), x);
        }
    }

    #[test]
    fn powered_detection() {
        assert!(!HfSet::empty().is_powered());
        assert!(n(2).is_powered());
        assert!(!n(3).is_powered());
        // {0, 1, {1}} is closed under subsets but still not a powerset
        assert!(!set(&[n(0), n(1), set(&[n(1)])]).is_powered());
    }

    #[test]
    fn stripping() {
        assert_eq!(n(3).strip_power(), PowerDecomposition { core: n(3), height: 0 });
        assert_eq!(n(2).strip_power(), PowerDecomposition { core: HfSet::empty(), height: 2 });
        assert_eq!(n(3).powerset().strip_power(), PowerDecomposition { core: n(3), height: 1 });
    }

    #[test]
    fn cardinalities() {
        assert_eq!(HfSet::empty().len(), 0);
        assert_eq!(n(5).len(), 5);
        assert_eq!(n(3).powerset().len(), 8);
    }

    #[test]
    fn universe_sizes() {
        let sizes: Vec<usize> = (0..=3).map(|r| enumerate_universe(r).unwrap().len()).collect();
        assert_eq!(sizes, vec![1, 2, 4, 16]);
        assert_eq!(enumerate_universe(0).unwrap(), vec![HfSet::empty()]);
        assert!(matches!(enumerate_universe(5), Err(Error::ResourceLimit(_))));
        assert!(matches!(enumerate_universe_with_limit(4, 3), Err(Error::ResourceLimit(_))));
        let v3 = enumerate_universe(3).unwrap();
        assert!(v3.windows(2).all(|w| w[0] < w[1]));
        assert!(v3.iter().all(|x| x.rank() <= 3));
    }

    #[test]
    fn text_form() {
        assert_eq!(HfSet::empty().to_string(), "{}");
        assert_eq!(n(2).to_string(), "{{},{{}}}");
        assert_eq!(n(3).to_string(), "{{},{{}},{{},{{}}}}");
    }
}
