//! Checks on finite sets, the term calculus and the parser.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::Rng;

use super::gen::{generate_forms, non_powered, random_term, scrambled_pieces, FormGenConfig};
use super::oracle::{brute_force_powered, downward_closed, subset_by_scan, subsets_included};
use super::{case, holds, AuditConfig, Tally};
use crate::error::Result;
use crate::hf::{make_set, HfSet};
use crate::syntax::parse;
use crate::term::{
    ext_equal, ext_subset, is_zermelo, normalize, subset_member, NormalForm, SetTerm, ZermeloPart,
};

pub const PARSER_SAMPLES: usize = 10_000;

fn lit(x: &HfSet) -> SetTerm {
    SetTerm::lit(x.clone())
}

fn inv(x: &HfSet) -> SetTerm {
    SetTerm::inv_pow(lit(x))
}

fn finite_form(x: &HfSet) -> NormalForm {
    NormalForm::zermelo_only(ZermeloPart::Finite(x.clone()))
}

fn nonempty(universe: &[HfSet]) -> Vec<HfSet> {
    universe.iter().filter(|x| !x.is_empty()).cloned().collect()
}

/// `V_r` together with the powersets of its members, sorted and deduplicated.
fn with_powersets(universe: &[HfSet]) -> Vec<HfSet> {
    let mut all: Vec<HfSet> = universe.iter().flat_map(|x| [x.clone(), x.powerset()]).collect();
    all.sort();
    all.dedup();
    all
}

/// `P^-m(Y)` for `m` in `levels` and every non-powered nonempty `Y` in the universe.
fn level_terms(universe: &[HfSet], levels: std::ops::RangeInclusive<usize>) -> Vec<Vec<SetTerm>> {
    let payloads = non_powered(universe);
    levels
        .map(|m| payloads.iter().map(|y| SetTerm::inv_pow_n(lit(y), m)).collect())
        .collect()
}

pub fn extensionality(cfg: &AuditConfig) -> Result<Tally> {
    let u = cfg.universe()?;
    let mut rng = cfg.rng("extensionality");
    let mut t = Tally::default();
    let scramble = |x: &HfSet, rng: &mut rand_chacha::ChaCha8Rng| {
        let mut v = x.elements().to_vec();
        v.extend(x.elements().iter().filter(|_| rng.gen_bool(0.5)).cloned());
        v.shuffle(rng);
        v
    };
    for x in &u {
        for y in &u {
            let (a, b) = (scramble(x, &mut rng), scramble(y, &mut rng));
            let same = a.iter().all(|e| b.contains(e)) && b.iter().all(|e| a.contains(e));
            let (sa, sb) = (make_set(a), make_set(b));
            t.record((sa == sb) == same && &sa == x && &sb == y, || case![x, y]);
        }
    }
    Ok(t)
}

pub fn powerset_monotone(cfg: &AuditConfig) -> Result<Tally> {
    let u = cfg.universe()?;
    let mut t = Tally::default();
    for x in &u {
        for y in &u {
            let sub = subset_by_scan(x, y);
            let ok = x.is_subset(y) == sub && x.powerset().is_subset(&y.powerset()) == sub;
            t.record(ok, || case![x, y]);
        }
    }
    Ok(t)
}

pub fn equiv(cfg: &AuditConfig) -> Result<Tally> {
    let u = cfg.universe()?;
    let mut t = Tally::default();
    for a in &u {
        for b in &u {
            let by_subsets = subsets_included(a, b, &u);
            let by_members = a.iter().all(|x| b.contains(x));
            t.record(by_subsets == by_members, || case![a, b]);
        }
    }
    Ok(t)
}

pub fn powered_oracle(cfg: &AuditConfig) -> Result<Tally> {
    let u = cfg.universe()?;
    let mut t = Tally::default();
    for x in with_powersets(&u) {
        let brute = brute_force_powered(&x, x.rank())?;
        t.record(x.is_powered() == brute, || case![x]);
    }
    Ok(t)
}

pub fn strip_roundtrip(cfg: &AuditConfig) -> Result<Tally> {
    let u = cfg.universe()?;
    let mut t = Tally::default();
    for x in with_powersets(&u) {
        let d = x.strip_power();
        let mut rebuilt = d.core.clone();
        for _ in 0..d.height {
            rebuilt = rebuilt.powerset();
        }
        let ok = rebuilt == x && (d.height == 0) == !x.is_powered() && !d.core.is_powered();
        t.record(ok, || case![x]);
    }
    Ok(t)
}

pub fn powerset_cardinality(cfg: &AuditConfig) -> Result<Tally> {
    let u = cfg.universe()?;
    let mut t = Tally::default();
    for x in &u {
        t.record(x.powerset().len() == 1 << x.len(), || case![x]);
    }
    Ok(t)
}

pub fn subset_assignment(cfg: &AuditConfig) -> Result<Tally> {
    let u = cfg.universe()?;
    let mut t = Tally::default();
    for a in &u {
        for x in &u {
            let r = subset_member(&lit(a), &lit(x), 1);
            t.record(r == Ok(subset_by_scan(a, x)), || case![a, x]);
        }
    }
    Ok(t)
}

pub fn inverse_powerset_axiom(cfg: &AuditConfig) -> Result<Tally> {
    let u = cfg.universe()?;
    let mut t = Tally::default();
    for x in nonempty(&u) {
        let px = inv(&x);
        for a in &u {
            let expected = x.iter().any(|e| e == a);
            t.record(subset_member(&lit(a), &px, 1) == Ok(expected), || case![a, px]);
        }
    }
    Ok(t)
}

pub fn inverse(cfg: &AuditConfig) -> Result<Tally> {
    let u = cfg.universe()?;
    let mut t = Tally::default();
    for x in nonempty(&u) {
        let term = SetTerm::pow(inv(&x));
        t.record(normalize(&term) == Ok(finite_form(&x)), || case![term]);
    }
    Ok(t)
}

pub fn inverse2(cfg: &AuditConfig) -> Result<Tally> {
    let u = cfg.universe()?;
    let mut t = Tally::default();
    for x in nonempty(&u) {
        let term = SetTerm::inv_pow(SetTerm::pow(lit(&x)));
        t.record(normalize(&term) == Ok(finite_form(&x)), || case![term]);
    }
    Ok(t)
}

pub fn uniqueness(cfg: &AuditConfig) -> Result<Tally> {
    let u = cfg.universe()?;
    let candidates: Vec<SetTerm> =
        u.iter().map(lit).chain(non_powered(&u).iter().map(inv)).collect();
    let mut t = Tally::default();
    for x in nonempty(&u) {
        let target = finite_form(&x);
        let hits: Vec<&SetTerm> = candidates
            .iter()
            .filter(|c| normalize(&SetTerm::pow((*c).clone())).as_ref() == Ok(&target))
            .collect();
        let ok = hits.len() == 1 && normalize(hits[0]) == normalize(&inv(&x));
        t.record(ok, || case![x]);
    }
    Ok(t)
}

pub fn suppesinverse(cfg: &AuditConfig) -> Result<Tally> {
    let u = cfg.universe()?;
    let ne = nonempty(&u);
    let mut t = Tally::default();
    for x in &ne {
        for y in &ne {
            let (px, py) = (inv(x), inv(y));
            let expected = subset_by_scan(x, y);
            let by_members = u.iter().try_fold(true, |acc, a| {
                let a = lit(a);
                Ok::<_, crate::Error>(
                    acc && (!subset_member(&a, &px, 1)? || subset_member(&a, &py, 1)?),
                )
            });
            let ext_ok = match ext_subset(&px, &py) {
                Ok(s) => s == expected,
                Err(_) => true,
            };
            t.record(by_members == Ok(expected) && ext_ok, || case![px, py]);
        }
    }
    Ok(t)
}

pub fn suppes(cfg: &AuditConfig) -> Result<Tally> {
    let u = cfg.universe()?;
    let mut t = Tally::default();
    let mut pools: Vec<Vec<SetTerm>> = vec![u.iter().map(lit).collect()];
    pools.extend(level_terms(&u, 1..=2));
    for pool in &pools {
        for a in pool {
            for b in pool {
                let (pa, pb) = (SetTerm::pow(a.clone()), SetTerm::pow(b.clone()));
                let ok = match (ext_subset(a, b), ext_subset(&pa, &pb)) {
                    (Ok(p), Ok(q)) => p == q,
                    _ => false,
                };
                t.record(ok, || case![a, b]);
            }
        }
    }
    Ok(t)
}

pub fn inversesuppecor(cfg: &AuditConfig) -> Result<Tally> {
    let u = cfg.universe()?;
    let ne = nonempty(&u);
    let mut t = Tally::default();
    for x in &ne {
        for y in &ne {
            let (px, py) = (inv(x), inv(y));
            t.record(ext_equal(&px, &py) == Ok(x == y), || case![px, py]);
        }
    }
    Ok(t)
}

pub fn suppescor(cfg: &AuditConfig) -> Result<Tally> {
    let u = cfg.universe()?;
    let mut t = Tally::default();
    for x in &u {
        for y in &u {
            let (px, py) = (SetTerm::pow(lit(x)), SetTerm::pow(lit(y)));
            t.record(ext_equal(&px, &py) == Ok(x == y), || case![px, py]);
        }
    }
    Ok(t)
}

pub fn subsetequals0(cfg: &AuditConfig) -> Result<Tally> {
    let u = cfg.universe()?;
    let mut t = Tally::default();
    let terms = u.iter().map(lit).chain(level_terms(&u, 1..=3).into_iter().flatten());
    for a in terms {
        t.record(holds(ext_subset(&a, &a)), || case![a]);
    }
    Ok(t)
}

pub fn subsetequals(cfg: &AuditConfig) -> Result<Tally> {
    let u = cfg.universe()?;
    let pool: Vec<SetTerm> =
        u.iter().map(lit).chain(level_terms(&u, 1..=2).into_iter().flatten()).collect();
    let mut t = Tally::default();
    for a in &pool {
        for b in &pool {
            let eq = ext_equal(a, b);
            let ok = match (ext_subset(a, b), ext_subset(b, a)) {
                (Ok(p), Ok(q)) => eq == Ok(p && q),
                _ => eq == Ok(false),
            };
            t.record(ok, || case![a, b]);
        }
    }
    Ok(t)
}

fn subset_matrix(pool: &[SetTerm]) -> Result<Vec<Vec<bool>>> {
    pool.iter().map(|a| pool.iter().map(|b| ext_subset(a, b)).collect()).collect()
}

pub fn transitivity(cfg: &AuditConfig) -> Result<Tally> {
    let u = cfg.universe()?;
    let mut pools: Vec<Vec<SetTerm>> = vec![u.iter().map(lit).collect()];
    pools.extend(level_terms(&u, 1..=2));
    let mut t = Tally::default();
    for pool in &pools {
        let s = subset_matrix(pool)?;
        let n = pool.len();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let ok = !(s[i][j] && s[j][k]) || s[i][k];
                    t.record(ok, || case![pool[i], pool[j], pool[k]]);
                }
            }
        }
    }
    Ok(t)
}

fn members_1(term: &SetTerm, universe: &[HfSet]) -> Result<Vec<HfSet>> {
    let mut out = Vec::new();
    for a in universe {
        if subset_member(&lit(a), term, 1)? {
            out.push(a.clone());
        }
    }
    Ok(out)
}

/// `is_zermelo(T)` against: the `∈_1`-members of `T` are closed under subsets and the payload
/// is powered. Closure alone is not enough: `P^-1({0,1,{1}})` has closed members `0, 1, {1}`.
pub fn zermelo_prop(cfg: &AuditConfig) -> Result<Tally> {
    let u = cfg.universe()?;
    let mut t = Tally::default();
    for x in &u {
        let term = lit(x);
        let closed = downward_closed(&members_1(&term, &u)?, &u);
        t.record(closed && holds(is_zermelo(&term)), || case![term]);
    }
    for x in nonempty(&u) {
        let term = inv(&x);
        let expected = downward_closed(&members_1(&term, &u)?, &u) && x.is_powered();
        t.record(is_zermelo(&term) == Ok(expected), || case![term]);
    }
    Ok(t)
}

pub fn pow_is_zermelo(cfg: &AuditConfig) -> Result<Tally> {
    let u = cfg.universe()?;
    let mut t = Tally::default();
    let terms = u.iter().map(lit).chain(nonempty(&u).into_iter().map(|x| inv(&x)));
    for a in terms {
        let p = SetTerm::pow(a);
        t.record(holds(is_zermelo(&p)), || case![p]);
    }
    Ok(t)
}

fn sample_forms(cfg: &AuditConfig, check: &str, universe: &[HfSet]) -> super::FormStream {
    generate_forms(FormGenConfig {
        pool: universe.to_vec(),
        max_components: 3,
        max_level: 3,
        seed: rand::Rng::gen(&mut cfg.rng(check)),
    })
}

pub fn normalize_idempotent(cfg: &AuditConfig) -> Result<Tally> {
    let u = cfg.universe()?;
    let mut rng = cfg.rng("normalize-idempotent/scramble");
    let mut t = Tally::default();
    for nf in sample_forms(cfg, "normalize-idempotent", &u).take(cfg.samples) {
        let scrambled = scrambled_pieces(&mut rng, &nf);
        let ok = normalize(&nf.to_term()).as_ref() == Ok(&nf)
            && normalize(&scrambled).as_ref() == Ok(&nf);
        t.record(ok, || case![nf, scrambled]);
    }
    Ok(t)
}

pub fn parser_roundtrip(cfg: &AuditConfig) -> Result<Tally> {
    let u = cfg.universe()?;
    let mut rng = cfg.rng("parser-roundtrip");
    let mut t = Tally::default();
    let mut printed: HashMap<String, SetTerm> = HashMap::new();
    for _ in 0..PARSER_SAMPLES {
        let term = random_term(&mut rng, &u, 4);
        let text = term.to_string();
        let back = parse(&text);
        let unambiguous = printed.entry(text.clone()).or_insert_with(|| term.clone()) == &term;
        t.record(back.as_ref() == Ok(&term) && unambiguous && text.is_ascii(), || case![text]);
    }
    for nf in sample_forms(cfg, "parser-roundtrip/forms", &u).take(cfg.samples) {
        let text = nf.to_string();
        let ok = parse(&text).and_then(|term| normalize(&term)).as_ref() == Ok(&nf);
        t.record(ok, || case![text]);
    }
    Ok(t)
}
