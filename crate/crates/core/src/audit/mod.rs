//! Executable checks of the laws the calculus should satisfy.
//!
//! Each check is a pure function of an [`AuditConfig`]: exhaustive over `V_r` (`r ≤ 3`) and
//! the bounded form family built from it, or randomized from the configured seed. Sampled
//! checks draw rank-4 sets as random subsets of `V_3` rather than enumerating `V_4`.

mod gen;
mod laws;
pub mod oracle;
mod orders;

use std::fmt;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hf::{enumerate_universe, HfSet};

pub use gen::{
    bounded_family, generate_forms, has_no_empty_core, non_powered, random_ezf_term, random_term,
    sample_subset, scrambled_pieces, FormGenConfig, FormStream,
};
pub use oracle::brute_force_powered;

/// Largest rank exhaustive checks will enumerate.
pub const MAX_EXHAUSTIVE_RANK: usize = 3;

/// Counterexamples kept per report; further failures are dropped.
pub const MAX_REPORTED_FAILURES: usize = 50;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AuditConfig {
    pub rank: usize,
    pub samples: usize,
    pub seed: u64,
}

impl Default for AuditConfig {
    fn default() -> Self {
        AuditConfig { rank: 3, samples: 1000, seed: 42 }
    }
}

impl AuditConfig {
    /// `V_rank`, refusing ranks too large to enumerate pairwise.
    pub fn universe(&self) -> Result<Vec<HfSet>> {
        if self.rank > MAX_EXHAUSTIVE_RANK {
            return Err(Error::ResourceLimit(format!(
                "exhaustive checks need rank <= {MAX_EXHAUSTIVE_RANK}, got {}",
                self.rank
            )));
        }
        enumerate_universe(self.rank)
    }

    /// A generator private to one check, so reports do not depend on execution order.
    pub fn rng(&self, check: &str) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        // FNV-1a of the check name selects the stream
        let stream = check
            .bytes()
            .fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x100_0000_01b3));
        rng.set_stream(stream);
        rng
    }
}

/// Outcome of one check. Each counterexample is a list of terms in canonical syntax.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub name: String,
    pub domain: String,
    pub tested: usize,
    pub failures: Vec<Vec<String>>,
    pub seed: u64,
    pub millis: Option<u64>,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for AuditReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "ok" } else { "FAIL" };
        write!(f, "{status:4} {:28} {:>9} tested  {}", self.name, self.tested, self.domain)?;
        if let Some(ms) = self.millis {
            write!(f, "  ({ms} ms)")?;
        }
        for case in &self.failures {
            write!(f, "\n     counterexample: {}", case.join(" ; "))?;
        }
        Ok(())
    }
}

/// Running count of instances and failures.
#[derive(Debug, Default)]
pub(crate) struct Tally {
    tested: usize,
    failures: Vec<Vec<String>>,
}

impl Tally {
    pub(crate) fn record(&mut self, ok: bool, case: impl FnOnce() -> Vec<String>) {
        self.tested += 1;
        if !ok && self.failures.len() < MAX_REPORTED_FAILURES {
            self.failures.push(case());
        }
    }

    /// Counts `n` instances that were covered without individual records.
    pub(crate) fn add_tested(&mut self, n: usize) {
        self.tested += n;
    }
}

/// `[a.to_string(), b.to_string(), ...]`.
macro_rules! case {
    ($($t:expr),* $(,)?) => { vec![$($t.to_string()),*] };
}
pub(crate) use case;

/// `true` only for `Ok(true)`.
pub(crate) fn holds(r: Result<bool>) -> bool {
    matches!(r, Ok(true))
}

struct Check {
    name: &'static str,
    domain: &'static str,
    run: fn(&AuditConfig) -> Result<Tally>,
}

macro_rules! registry {
    ($($name:literal => $run:path, $domain:literal;)*) => {
        const CHECKS: &[Check] = &[$(Check { name: $name, domain: $domain, run: $run }),*];
    };
}

registry! {
    "extensionality" => laws::extensionality, "pairs in V_r, element lists reordered and duplicated";
    "powerset-monotone" => laws::powerset_monotone, "pairs in V_r";
    "equiv" => laws::equiv, "pairs in V_r, subsets drawn from V_r";
    "powered-oracle" => laws::powered_oracle, "V_r and powersets of V_r members";
    "strip-roundtrip" => laws::strip_roundtrip, "V_r and powersets of V_r members";
    "powerset-cardinality" => laws::powerset_cardinality, "V_r";
    "subset-assignment" => laws::subset_assignment, "pairs in V_r";
    "inverse-powerset-axiom" => laws::inverse_powerset_axiom, "A in V_r, nonempty X in V_r";
    "inverse" => laws::inverse, "nonempty V_r";
    "inverse2" => laws::inverse2, "nonempty V_r";
    "uniqueness" => laws::uniqueness, "nonempty V_r against V_r and level-1 terms over V_r";
    "suppesinverse" => laws::suppesinverse, "pairs of nonempty V_r sets";
    "suppes" => laws::suppes, "pairs in V_r and same-level pairs, levels 1-2";
    "inversesuppecor" => laws::inversesuppecor, "pairs of nonempty V_r sets";
    "suppescor" => laws::suppescor, "pairs in V_r";
    "subsetequals0" => laws::subsetequals0, "V_r and levels 1-3 over non-powered V_r payloads";
    "subsetequals" => laws::subsetequals, "pairs from V_r and levels 1-2 over non-powered V_r payloads";
    "transitivity" => laws::transitivity, "triples in V_r and same-level triples, levels 1-2";
    "zermelo-prop" => laws::zermelo_prop, "V_r and P^-1 of nonempty V_r sets";
    "pow-is-zermelo" => laws::pow_is_zermelo, "V_r and level-1 terms over V_r";
    "normalize-idempotent" => laws::normalize_idempotent, "sampled forms over V_r, pieces shuffled";
    "parser-roundtrip" => laws::parser_roundtrip, "10000 sampled terms and sampled forms";
    "cardsubsetofch" => orders::cardsubsetofch, "V_r and towers P^k(N), k < 4";
    "ch-minimality" => orders::ch_minimality, "non-powered nonempty V_r, P^-1(N), P^-1(P(N))";
    "ch-squeeze" => orders::ch_squeeze, "V_r";
    "ch-bernstein" => orders::ch_bernstein, "sampled pairs of level <= 1 terms";
    "ch-transitivity" => orders::ch_transitivity, "sampled triples of level <= 1 terms";
    "ch-total" => orders::ch_total, "sampled pairs of level <= 1 terms";
    "neg-ch-bernstein" => orders::neg_ch_bernstein, "bounded family over V_r: class pairs and congruence";
    "neg-ch-partial-order" => orders::neg_ch_partial_order, "bounded family over V_r: class triples";
    "neg-ch-commutative" => orders::neg_ch_commutative, "sampled form pairs over V_r, pieces scrambled";
    "neg-ch-theorem" => orders::neg_ch_theorem, "nonempty Z, non-powered Z' in V_r, n in 1..5";
    "zermelo-order-consistency" => orders::zermelo_order_consistency, "pairs in V_r, sampled rank-4 pairs, towers";
    "neg-chs-laws" => orders::neg_chs_laws, "bounded family over V_r: class triples and congruence";
    "neg-chs-refines-definition" => orders::neg_chs_refines_definition, "bounded family over V_r: class pairs";
    "density" => orders::density, "500 sampled pairs x < y without empty cores";
}

/// Names of all registered checks, in report order.
pub fn check_names() -> Vec<&'static str> {
    CHECKS.iter().map(|c| c.name).collect()
}

fn find(name: &str) -> Result<&'static Check> {
    CHECKS.iter().find(|c| c.name == name).ok_or_else(|| Error::UnknownCheck(name.to_string()))
}

pub fn run_check(name: &str, config: &AuditConfig) -> Result<AuditReport> {
    let check = find(name)?;
    let start = Instant::now();
    let tally = (check.run)(config)?;
    Ok(AuditReport {
        name: check.name.to_string(),
        domain: check.domain.replace("V_r", &format!("V{}", config.rank)),
        tested: tally.tested,
        failures: tally.failures,
        seed: config.seed,
        millis: Some(start.elapsed().as_millis() as u64),
    })
}

/// Runs the named checks concurrently; results come back in the order of `names`.
pub fn run_checks(names: &[&str], config: &AuditConfig) -> Vec<(String, Result<AuditReport>)> {
    std::thread::scope(|s| {
        let handles: Vec<_> = names
            .iter()
            .map(|&name| (name, s.spawn(move || run_check(name, config))))
            .collect();
        handles
            .into_iter()
            .map(|(name, h)| (name.to_string(), h.join().expect("audit check panicked")))
            .collect()
    })
}

pub fn run_all(config: &AuditConfig) -> Vec<(String, Result<AuditReport>)> {
    run_checks(&check_names(), config)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_check() {
        let r = run_check("no-such", &AuditConfig::default());
        assert_eq!(r, Err(Error::UnknownCheck("no-such".into())));
    }

    #[test]
    fn names_are_unique() {
        let mut names = check_names();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), CHECKS.len());
    }

    #[test]
    fn streams_differ_per_check() {
        use rand::Rng;
        let cfg = AuditConfig::default();
        let a: u64 = cfg.rng("inverse").gen();
        let b: u64 = cfg.rng("inverse2").gen();
        assert_ne!(a, b);
        assert_eq!(a, cfg.rng("inverse").gen::<u64>());
    }
}
