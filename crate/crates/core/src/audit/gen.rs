//! Seeded generators for forms, terms and sets used by the checks.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::hf::HfSet;
use crate::term::{Component, NormalForm, SetTerm, ZermeloPart};

/// Parameters of [`generate_forms`].
#[derive(Debug, Clone)]
pub struct FormGenConfig {
    /// Zermelo parts are drawn from here (and `∅`); payloads from its nonempty non-powered members.
    pub pool: Vec<HfSet>,
    pub max_components: usize,
    pub max_level: usize,
    pub seed: u64,
}

/// An endless, reproducible stream of normal forms.
///
/// About a quarter of the forms have an empty Zermelo part, and a component repeats its
/// predecessor about a quarter of the time, so duplicated components are common.
pub fn generate_forms(config: FormGenConfig) -> FormStream {
    assert!(!config.pool.is_empty(), "form pool must be nonempty");
    let payloads = non_powered(&config.pool);
    FormStream {
        rng: ChaCha8Rng::seed_from_u64(config.seed),
        payloads,
        config,
    }
}

pub struct FormStream {
    rng: ChaCha8Rng,
    payloads: Vec<HfSet>,
    config: FormGenConfig,
}

impl Iterator for FormStream {
    type Item = NormalForm;

    fn next(&mut self) -> Option<NormalForm> {
        let rng = &mut self.rng;
        let zermelo = if rng.gen_ratio(1, 4) {
            HfSet::empty()
        } else {
            self.config.pool.choose(rng).unwrap().clone()
        };
        let count = if self.payloads.is_empty() || self.config.max_level == 0 {
            0
        } else {
            rng.gen_range(0..=self.config.max_components)
        };
        let mut comps: Vec<Component> = Vec::with_capacity(count);
        for _ in 0..count {
            let c = match comps.last() {
                Some(prev) if rng.gen_ratio(1, 4) => prev.clone(),
                _ => {
                    let level = rng.gen_range(1..=self.config.max_level);
                    let payload = self.payloads.choose(rng).unwrap().clone();
                    Component::new(level, ZermeloPart::Finite(payload)).unwrap()
                }
            };
            comps.push(c);
        }
        Some(NormalForm::new(ZermeloPart::Finite(zermelo), comps))
    }
}

/// Nonempty non-powered members of `pool`: the sets that may appear as payloads.
pub fn non_powered(pool: &[HfSet]) -> Vec<HfSet> {
    pool.iter().filter(|x| !x.is_empty() && !x.is_powered()).cloned().collect()
}

/// Every form whose Zermelo part is in `pool` with at most `max_components` components of
/// level at most `max_level`, payloads taken from the nonempty non-powered members of `pool`.
pub fn bounded_family(pool: &[HfSet], max_components: usize, max_level: usize) -> Vec<NormalForm> {
    let payloads = non_powered(pool);
    let atoms: Vec<Component> = (1..=max_level)
        .flat_map(|m| {
            payloads
                .iter()
                .map(move |y| Component::new(m, ZermeloPart::Finite(y.clone())).unwrap())
        })
        .collect();
    // multisets of atoms as non-decreasing index sequences
    let mut multisets: Vec<Vec<usize>> = vec![vec![]];
    let mut frontier = multisets.clone();
    for _ in 0..max_components {
        let mut next = Vec::new();
        for seq in &frontier {
            let from = seq.last().copied().unwrap_or(0);
            for i in from..atoms.len() {
                let mut s = seq.clone();
                s.push(i);
                next.push(s);
            }
        }
        multisets.extend(next.iter().cloned());
        frontier = next;
    }
    let mut out = Vec::with_capacity(pool.len() * multisets.len());
    for z in pool {
        for ms in &multisets {
            let comps = ms.iter().map(|&i| atoms[i].clone()).collect();
            out.push(NormalForm::new(ZermeloPart::Finite(z.clone()), comps));
        }
    }
    out
}

/// Whether the Zermelo part is empty or strips to a nonempty core. Payloads always have
/// nonempty cores, so on such forms a density witness can always be built.
pub fn has_no_empty_core(form: &NormalForm) -> bool {
    let z = form.zermelo();
    z.is_empty() || !z.core().0.is_empty()
}

/// A random member of the next universe layer: a random subset of `universe`.
pub fn sample_subset(rng: &mut impl Rng, universe: &[HfSet]) -> HfSet {
    HfSet::new(universe.iter().filter(|_| rng.gen_bool(0.5)).cloned())
}

/// A random term whose CH-cardinality is defined: a finite set, a tower `P^k(N)`, or the inverse
/// powerset of one of those.
pub fn random_ezf_term(rng: &mut impl Rng, universe: &[HfSet]) -> SetTerm {
    match rng.gen_range(0..5) {
        0 => SetTerm::lit(finite(rng, universe)),
        1 => SetTerm::pow_n(SetTerm::Nat, rng.gen_range(0..4)),
        2 => loop {
            let y = finite(rng, universe);
            if !y.is_empty() {
                break SetTerm::inv_pow(SetTerm::lit(y));
            }
        },
        3 => SetTerm::inv_pow(SetTerm::pow_n(SetTerm::Nat, rng.gen_range(0..4))),
        _ => SetTerm::inv_pow(SetTerm::pow(SetTerm::lit(universe.choose(rng).unwrap().clone()))),
    }
}

fn finite(rng: &mut impl Rng, universe: &[HfSet]) -> HfSet {
    if rng.gen_ratio(1, 3) {
        sample_subset(rng, universe)
    } else {
        universe.choose(rng).unwrap().clone()
    }
}

/// A random syntax tree. Not necessarily evaluable: only the shape matters to the printer.
pub fn random_term(rng: &mut impl Rng, universe: &[HfSet], depth: usize) -> SetTerm {
    let leaf = depth == 0 || rng.gen_ratio(1, 3);
    if leaf {
        return match rng.gen_range(0..8) {
            0 => SetTerm::Nat,
            1 => SetTerm::numeral(rng.gen_range(0..=8)),
            2 => SetTerm::lit(sample_subset(rng, universe)),
            _ => SetTerm::lit(universe.choose(rng).unwrap().clone()),
        };
    }
    match rng.gen_range(0..4) {
        0 => SetTerm::pow_n(random_term(rng, universe, depth - 1), rng.gen_range(1..4)),
        1 => SetTerm::inv_pow_n(random_term(rng, universe, depth - 1), rng.gen_range(1..4)),
        2 => SetTerm::union((0..rng.gen_range(2..4)).map(|_| random_term(rng, universe, depth - 1))),
        _ => SetTerm::pow(random_term(rng, universe, depth - 1)),
    }
}

/// The union pieces of a form in random order, each possibly disguised as `P^-1(P(piece))`.
pub fn scrambled_pieces(rng: &mut impl Rng, form: &NormalForm) -> SetTerm {
    let mut pieces: Vec<SetTerm> = Vec::new();
    if !form.zermelo().is_empty() || form.components().is_empty() {
        pieces.push(form.zermelo().to_term());
    }
    pieces.extend(form.components().iter().map(Component::to_term));
    pieces.shuffle(rng);
    let pieces = pieces.into_iter().map(|p| {
        if rng.gen_ratio(1, 3) {
            SetTerm::inv_pow(SetTerm::pow(p))
        } else {
            p
        }
    });
    SetTerm::union(pieces.collect::<Vec<_>>())
}
