//! Checks on the cardinality orders.
//!
//! The ¬CH and ¬CHS verdicts depend on a form only through its signature: the Zermelo
//! cardinality and the `(ρ, τ)` sequence of its components. Laws over the bounded family are
//! therefore checked on one representative per signature class, and a congruence pass
//! confirms that every form compares exactly like its representative.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::Rng;

use super::gen::{
    bounded_family, generate_forms, has_no_empty_core, non_powered, random_ezf_term,
    sample_subset, scrambled_pieces, FormGenConfig,
};
use super::oracle::literal_neg_chs;
use super::{case, holds, AuditConfig, Tally};
use crate::cardinal::{
    between_witness, ch_card, ch_cmp, ch_leq, neg_ch_cmp, neg_ch_leq, neg_chs_cmp, rho, tau,
    LevelRank, Slot, SymCardinal, Verdict,
};
use crate::error::Result;
use crate::hf::HfSet;
use crate::syntax::parse;
use crate::term::{normalize, NormalForm, SetTerm, ZermeloPart};

pub const DENSITY_PAIRS: usize = 500;
const FAMILY_COMPONENTS: usize = 2;
const FAMILY_LEVELS: usize = 3;

fn lit(x: &HfSet) -> SetTerm {
    SetTerm::lit(x.clone())
}

pub fn cardsubsetofch(cfg: &AuditConfig) -> Result<Tally> {
    let u = cfg.universe()?;
    let mut t = Tally::default();
    for x in &u {
        let n = SymCardinal::Fin(x.len() as u64);
        let ok = ch_card(&lit(x)) == Ok(n) && ch_card(&SetTerm::numeral(x.len())) == Ok(n);
        t.record(ok, || case![x]);
    }
    for k in 0..4 {
        let tower = SetTerm::pow_n(SetTerm::Nat, k);
        t.record(ch_card(&tower) == Ok(SymCardinal::Beth(k as u32)), || case![tower]);
    }
    Ok(t)
}

pub fn ch_minimality(cfg: &AuditConfig) -> Result<Tally> {
    let u = cfg.universe()?;
    let mut t = Tally::default();
    let towers = [SetTerm::Nat, SetTerm::pow(SetTerm::Nat)];
    let terms = non_powered(&u).into_iter().map(SetTerm::lit).chain(towers);
    for a in terms {
        let p = SetTerm::inv_pow(a);
        t.record(ch_card(&p) == Ok(SymCardinal::Beth(0)), || case![p]);
    }
    Ok(t)
}

pub fn ch_squeeze(cfg: &AuditConfig) -> Result<Tally> {
    let u = cfg.universe()?;
    let mut t = Tally::default();
    for x in &u {
        let p = SetTerm::inv_pow(SetTerm::pow(lit(x)));
        t.record(ch_card(&p) == Ok(SymCardinal::Fin(x.len() as u64)), || case![p]);
    }
    Ok(t)
}

fn ezf_terms(cfg: &AuditConfig, check: &str, count: usize) -> Result<Vec<SetTerm>> {
    let u = cfg.universe()?;
    let mut rng = cfg.rng(check);
    Ok((0..count).map(|_| random_ezf_term(&mut rng, &u)).collect())
}

pub fn ch_bernstein(cfg: &AuditConfig) -> Result<Tally> {
    let terms = ezf_terms(cfg, "ch-bernstein", 2 * cfg.samples)?;
    let mut t = Tally::default();
    for pair in terms.chunks(2) {
        let (a, b) = (&pair[0], &pair[1]);
        let ok = match (ch_leq(a, b), ch_leq(b, a), ch_cmp(a, b), ch_cmp(b, a)) {
            (Ok(ab), Ok(ba), Ok(v), Ok(w)) => {
                (!(ab && ba) || ch_card(a) == ch_card(b)) && v == w.reverse()
            }
            _ => false,
        };
        t.record(ok, || case![a, b]);
    }
    Ok(t)
}

pub fn ch_transitivity(cfg: &AuditConfig) -> Result<Tally> {
    let terms = ezf_terms(cfg, "ch-transitivity", 3 * cfg.samples)?;
    let mut t = Tally::default();
    for triple in terms.chunks(3) {
        let (a, b, c) = (&triple[0], &triple[1], &triple[2]);
        let ok = match (ch_leq(a, b), ch_leq(b, c), ch_leq(a, c)) {
            (Ok(ab), Ok(bc), Ok(ac)) => !(ab && bc) || ac,
            _ => false,
        };
        t.record(ok, || case![a, b, c]);
    }
    Ok(t)
}

pub fn ch_total(cfg: &AuditConfig) -> Result<Tally> {
    let terms = ezf_terms(cfg, "ch-total", 2 * cfg.samples)?;
    let mut t = Tally::default();
    for pair in terms.chunks(2) {
        let (a, b) = (&pair[0], &pair[1]);
        let ok = holds(ch_leq(a, a))
            && match (ch_leq(a, b), ch_leq(b, a)) {
                (Ok(ab), Ok(ba)) => ab || ba,
                _ => false,
            };
        t.record(ok, || case![a, b]);
    }
    Ok(t)
}

type Signature = (SymCardinal, Vec<(LevelRank, SymCardinal)>);

fn signature(f: &NormalForm) -> Signature {
    let slots = f.components().iter().map(|c| (rho(Slot::Component(c)), tau(Slot::Component(c))));
    (f.zermelo().cardinality(), slots.collect())
}

/// The bounded family split into signature classes.
struct Classes {
    forms: Vec<NormalForm>,
    class_of: Vec<usize>,
    reps: Vec<NormalForm>,
}

impl Classes {
    fn new(cfg: &AuditConfig) -> Result<Classes> {
        let forms = bounded_family(&cfg.universe()?, FAMILY_COMPONENTS, FAMILY_LEVELS);
        let mut index: BTreeMap<Signature, usize> = BTreeMap::new();
        let mut reps = Vec::new();
        let class_of = forms
            .iter()
            .map(|f| {
                *index.entry(signature(f)).or_insert_with(|| {
                    reps.push(f.clone());
                    reps.len() - 1
                })
            })
            .collect();
        Ok(Classes { forms, class_of, reps })
    }

    fn matrix<T>(&self, f: impl Fn(&NormalForm, &NormalForm) -> T) -> Vec<Vec<T>> {
        self.reps.iter().map(|a| self.reps.iter().map(|b| f(a, b)).collect()).collect()
    }

    /// Every form compares against every representative, in both directions, exactly as its
    /// own representative does.
    fn congruence(
        &self,
        t: &mut Tally,
        m: &[Vec<Verdict>],
        cmp: impl Fn(&NormalForm, &NormalForm) -> Verdict,
    ) {
        for (f, &c) in self.forms.iter().zip(&self.class_of) {
            for (j, r) in self.reps.iter().enumerate() {
                let ok = cmp(f, r) == m[c][j] && cmp(r, f) == m[j][c];
                t.record(ok, || case![f, r]);
            }
        }
    }
}

pub fn neg_ch_bernstein(cfg: &AuditConfig) -> Result<Tally> {
    let classes = Classes::new(cfg)?;
    let m = classes.matrix(neg_ch_cmp);
    let leq = classes.matrix(neg_ch_leq);
    let reps = &classes.reps;
    let mut t = Tally::default();
    for i in 0..reps.len() {
        for j in 0..reps.len() {
            let ok = m[i][j] == m[j][i].reverse()
                && (!(leq[i][j] && leq[j][i]) || m[i][j] == Verdict::Equal)
                && (m[i][j] != Verdict::Less || leq[i][j]);
            t.record(ok, || case![reps[i], reps[j]]);
        }
    }
    classes.congruence(&mut t, &m, neg_ch_cmp);
    Ok(t)
}

pub fn neg_ch_partial_order(cfg: &AuditConfig) -> Result<Tally> {
    let classes = Classes::new(cfg)?;
    let leq = classes.matrix(neg_ch_leq);
    let reps = &classes.reps;
    let n = reps.len();
    let mut t = Tally::default();
    for i in 0..n {
        t.record(leq[i][i], || case![reps[i]]);
        for j in 0..n {
            t.record(i == j || !(leq[i][j] && leq[j][i]), || case![reps[i], reps[j]]);
            if !leq[i][j] {
                t.add_tested(n);
                continue;
            }
            for k in 0..n {
                t.record(!leq[j][k] || leq[i][k], || case![reps[i], reps[j], reps[k]]);
            }
        }
    }
    Ok(t)
}

pub fn neg_chs_laws(cfg: &AuditConfig) -> Result<Tally> {
    let classes = Classes::new(cfg)?;
    let m = classes.matrix(neg_chs_cmp);
    let reps = &classes.reps;
    let n = reps.len();
    let mut t = Tally::default();
    for i in 0..n {
        for j in 0..n {
            let v = m[i][j];
            let ok = v != Verdict::Incomparable
                && v == m[j][i].reverse()
                && (v == Verdict::Equal) == (i == j);
            t.record(ok, || case![reps[i], reps[j]]);
            if v != Verdict::Less {
                t.add_tested(n);
                continue;
            }
            for k in 0..n {
                let ok = m[j][k] != Verdict::Less || m[i][k] == Verdict::Less;
                t.record(ok, || case![reps[i], reps[j], reps[k]]);
            }
        }
    }
    classes.congruence(&mut t, &m, neg_chs_cmp);
    Ok(t)
}

/// Whenever the literal slot clauses decide a pair, the lexicographic order agrees.
pub fn neg_chs_refines_definition(cfg: &AuditConfig) -> Result<Tally> {
    let classes = Classes::new(cfg)?;
    let reps = &classes.reps;
    let mut t = Tally::default();
    for a in reps {
        for b in reps {
            let lit = literal_neg_chs(a, b);
            let lex = neg_chs_cmp(a, b);
            t.record(lit == Verdict::Incomparable || lit == lex, || case![a, b]);
        }
    }
    Ok(t)
}

fn form_stream(cfg: &AuditConfig, check: &str, u: &[HfSet]) -> super::FormStream {
    generate_forms(FormGenConfig {
        pool: u.to_vec(),
        max_components: 3,
        max_level: 3,
        seed: cfg.rng(check).gen(),
    })
}

pub fn neg_ch_commutative(cfg: &AuditConfig) -> Result<Tally> {
    let u = cfg.universe()?;
    let forms: Vec<NormalForm> =
        form_stream(cfg, "neg-ch-commutative", &u).take(2 * cfg.samples).collect();
    let mut rng = cfg.rng("neg-ch-commutative/scramble");
    let mut t = Tally::default();
    for pair in forms.chunks(2) {
        let (x, y) = (&pair[0], &pair[1]);
        let (sx, sy) = (scrambled_pieces(&mut rng, x), scrambled_pieces(&mut rng, y));
        let ok = match (normalize(&sx), normalize(&sy)) {
            (Ok(nx), Ok(ny)) => {
                neg_ch_cmp(&nx, &ny) == neg_ch_cmp(x, y)
                    && neg_chs_cmp(&nx, &ny) == neg_chs_cmp(x, y)
            }
            _ => false,
        };
        t.record(ok, || case![sx, sy]);
    }
    Ok(t)
}

pub fn neg_ch_theorem(cfg: &AuditConfig) -> Result<Tally> {
    let u = cfg.universe()?;
    let mut t = Tally::default();
    for z in u.iter().filter(|z| !z.is_empty()) {
        let low = SetTerm::lit(z.clone());
        let high = SetTerm::pow(low.clone());
        for z1 in non_powered(&u) {
            for n in 1..=5 {
                let mid = SetTerm::union([low.clone(), SetTerm::inv_pow_n(lit(&z1), n)]);
                let ok = match (normalize(&low), normalize(&mid), normalize(&high)) {
                    (Ok(a), Ok(b), Ok(c)) => {
                        neg_ch_cmp(&a, &b) == Verdict::Less && neg_ch_cmp(&b, &c) == Verdict::Less
                    }
                    _ => false,
                };
                t.record(ok, || case![low, mid, high]);
            }
        }
    }
    Ok(t)
}

pub fn zermelo_order_consistency(cfg: &AuditConfig) -> Result<Tally> {
    let u = cfg.universe()?;
    let mut rng = cfg.rng("zermelo-order-consistency");
    let finite = |x: &HfSet| (ZermeloPart::Finite(x.clone()), SymCardinal::Fin(x.len() as u64));
    let mut parts: Vec<(ZermeloPart, SymCardinal)> = u.iter().map(finite).collect();
    parts.extend((0..3).map(|k| (ZermeloPart::NatTower(k), SymCardinal::Beth(k as u32))));
    let mut pairs: Vec<(usize, usize)> =
        (0..parts.len()).flat_map(|i| (0..parts.len()).map(move |j| (i, j))).collect();
    for _ in 0..cfg.samples {
        parts.push(finite(&sample_subset(&mut rng, &u)));
        parts.push(finite(&sample_subset(&mut rng, &u)));
        pairs.push((parts.len() - 2, parts.len() - 1));
    }
    let mut t = Tally::default();
    for (i, j) in pairs {
        let (x, y) = (NormalForm::zermelo_only(parts[i].0.clone()), NormalForm::zermelo_only(parts[j].0.clone()));
        let classical = Verdict::from(parts[i].1.cmp(&parts[j].1));
        let ok = neg_ch_cmp(&x, &y) == classical && neg_chs_cmp(&x, &y) == classical;
        t.record(ok, || case![x, y]);
    }
    Ok(t)
}

/// Pairs `x < y` from the bounded family, restricted to forms without empty cores, each with a
/// witness `x < U < y` confirmed by `neg_chs_cmp` and by a print/parse round trip.
pub fn density(cfg: &AuditConfig) -> Result<Tally> {
    let family: Vec<NormalForm> =
        bounded_family(&cfg.universe()?, FAMILY_COMPONENTS, FAMILY_LEVELS)
            .into_iter()
            .filter(has_no_empty_core)
            .collect();
    let mut rng = cfg.rng("density");
    let mut t = Tally::default();
    let mut found = 0;
    for _ in 0..DENSITY_PAIRS * 100 {
        if found == DENSITY_PAIRS {
            break;
        }
        let (a, b) = (family.choose(&mut rng).unwrap(), family.choose(&mut rng).unwrap());
        let (x, y) = match neg_chs_cmp(a, b) {
            Verdict::Less => (a, b),
            Verdict::Greater => (b, a),
            _ => continue,
        };
        found += 1;
        let ok = match between_witness(x, y) {
            Ok(w) => {
                neg_chs_cmp(x, &w) == Verdict::Less
                    && neg_chs_cmp(&w, y) == Verdict::Less
                    && parse(&w.to_string()).and_then(|p| normalize(&p)).as_ref() == Ok(&w)
            }
            Err(_) => false,
        };
        t.record(ok, || case![x, y]);
    }
    Ok(t)
}
