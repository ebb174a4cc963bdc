//! Terms over hereditarily finite sets and the symbolic tower `P^k(N)`, built with `P`, `P^-1`
//! and finite unions, together with their evaluation to well-represented union forms.
//!
//! Evaluation is innermost-first. Every `P^-1` step on a powered Zermelo set strips one
//! powerset (`P^-1(P(X)) = X`), every `P` step on a component lowers its level
//! (`P(P^-1(X)) = X`), so components always carry non-powered payloads.

mod normal;
mod relations;

use std::fmt;

pub use normal::{Component, NormalForm, Single, ZermeloPart};
pub use relations::{ext_equal, ext_subset, is_zermelo, level_of, subset_member};

use crate::error::{Error, Result};
use crate::hf::{HfSet, DEFAULT_POWERSET_LIMIT};

/// An expression of the set calculus.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SetTerm {
    Zermelo(HfSet),
    /// The symbol `N`.
    Nat,
    Pow(Box<SetTerm>),
    InvPow(Box<SetTerm>),
    /// At least two components, none of them a union.
    Union(Vec<SetTerm>),
}

impl SetTerm {
    pub fn lit(x: HfSet) -> Self {
        SetTerm::Zermelo(x)
    }

    pub fn numeral(n: usize) -> Self {
        SetTerm::Zermelo(HfSet::numeral(n))
    }

    pub fn pow(t: SetTerm) -> Self {
        SetTerm::Pow(Box::new(t))
    }

    pub fn inv_pow(t: SetTerm) -> Self {
        SetTerm::InvPow(Box::new(t))
    }

    pub fn pow_n(t: SetTerm, n: usize) -> Self {
        (0..n).fold(t, |acc, _| SetTerm::pow(acc))
    }

    pub fn inv_pow_n(t: SetTerm, n: usize) -> Self {
        (0..n).fold(t, |acc, _| SetTerm::inv_pow(acc))
    }

    /// Flattening union constructor. One piece is returned as is; no pieces give `{}`.
    pub fn union<I: IntoIterator<Item = SetTerm>>(pieces: I) -> Self {
        let mut flat = Vec::new();
        for p in pieces {
            match p {
                SetTerm::Union(inner) => flat.extend(inner),
                other => flat.push(other),
            }
        }
        match flat.len() {
            0 => SetTerm::Zermelo(HfSet::empty()),
            1 => flat.pop().unwrap(),
            _ => SetTerm::Union(flat),
        }
    }

    pub fn is_union(&self) -> bool {
        matches!(self, SetTerm::Union(_))
    }
}

/// `P(t)` evaluated: a Zermelo set for Zermelo or level-1 input, one level lower otherwise.
pub fn apply_pow(t: &SetTerm) -> Result<SetTerm> {
    if t.is_union() {
        return Err(Error::UnsupportedOperand(format!("P applied to union form {t}")));
    }
    Ok(pow_single(eval_single(t)?)?.to_term())
}

/// `P^-1(t)` evaluated: strips a powerset when possible, otherwise raises the level.
pub fn apply_inv_pow(t: &SetTerm) -> Result<SetTerm> {
    if t.is_union() {
        return Err(Error::UnsupportedOperand(format!("P^-1 applied to union form {t}")));
    }
    Ok(inv_pow_single(eval_single(t)?)?.to_term())
}

/// Evaluates `t` to its well-represented union form.
pub fn normalize(t: &SetTerm) -> Result<NormalForm> {
    let mut leaves = Vec::new();
    collect_union_leaves(t, &mut leaves);
    let mut zermelo = ZermeloPart::empty();
    let mut components = Vec::new();
    for leaf in leaves {
        match eval_single(leaf)? {
            Single::Zermelo(z) => zermelo = zermelo.union(&z)?,
            Single::Level(c) => components.push(c),
        }
    }
    Ok(NormalForm::new(zermelo, components))
}

fn collect_union_leaves<'a>(t: &'a SetTerm, out: &mut Vec<&'a SetTerm>) {
    match t {
        SetTerm::Union(parts) => parts.iter().for_each(|p| collect_union_leaves(p, out)),
        other => out.push(other),
    }
}

/// Evaluates a union-free term.
pub fn eval_single(t: &SetTerm) -> Result<Single> {
    match t {
        SetTerm::Zermelo(x) => Ok(Single::Zermelo(ZermeloPart::Finite(x.clone()))),
        SetTerm::Nat => Ok(Single::Zermelo(ZermeloPart::NatTower(0))),
        SetTerm::Pow(inner) => {
            if inner.is_union() {
                return Err(Error::UnsupportedOperand(format!("P applied to union form {inner}")));
            }
            pow_single(eval_single(inner)?)
        }
        SetTerm::InvPow(inner) => {
            if inner.is_union() {
                return Err(Error::UnsupportedOperand(format!(
                    "P^-1 applied to union form {inner}"
                )));
            }
            inv_pow_single(eval_single(inner)?)
        }
        SetTerm::Union(_) => Err(Error::UnsupportedOperand(format!(
            "union form {t} does not denote a single set"
        ))),
    }
}

fn pow_single(s: Single) -> Result<Single> {
    Ok(match s {
        Single::Zermelo(ZermeloPart::Finite(x)) => {
            Single::Zermelo(ZermeloPart::Finite(x.try_powerset(DEFAULT_POWERSET_LIMIT)?))
        }
        Single::Zermelo(ZermeloPart::NatTower(k)) => Single::Zermelo(ZermeloPart::NatTower(k + 1)),
        Single::Level(c) => match c.lower() {
            Some(lower) => Single::Level(lower),
            None => Single::Zermelo(c.payload().clone()),
        },
    })
}

fn inv_pow_single(s: Single) -> Result<Single> {
    Ok(match s {
        Single::Zermelo(ZermeloPart::Finite(x)) => {
            if x.is_empty() {
                return Err(Error::Domain(
                    "P^-1 is undefined on the empty set".to_string(),
                ));
            }
            if x.is_powered() {
                Single::Zermelo(ZermeloPart::Finite(x.big_union()))
            } else {
                Single::Level(Component::new(1, ZermeloPart::Finite(x))?)
            }
        }
        Single::Zermelo(ZermeloPart::NatTower(0)) => {
            Single::Level(Component::new(1, ZermeloPart::NatTower(0))?)
        }
        Single::Zermelo(ZermeloPart::NatTower(k)) => Single::Zermelo(ZermeloPart::NatTower(k - 1)),
        Single::Level(c) => Single::Level(c.raise()),
    })
}

/// Canonical ASCII form; see [`crate::syntax`] for the grammar.
impl fmt::Display for SetTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SetTerm::Zermelo(x) => write!(f, "{x}"),
            SetTerm::Nat => f.write_str("N"),
            SetTerm::Pow(inner) => write!(f, "P({inner})"),
            SetTerm::InvPow(_) => {
                let mut depth = 0;
                let mut cur = self;
                while let SetTerm::InvPow(inner) = cur {
                    depth += 1;
                    cur = inner;
                }
                write!(f, "P^-{depth}({cur})")
            }
            SetTerm::Union(parts) => {
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" u ")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hf::numeral;

    fn lit(x: HfSet) -> SetTerm {
        SetTerm::lit(x)
    }

    fn one_set() -> HfSet {
        numeral(1).singleton()
    }

    #[test]
    fn pow_examples() {
        assert_eq!(apply_pow(&SetTerm::inv_pow(SetTerm::numeral(3))).unwrap(), SetTerm::numeral(3));
        let p2 = HfSet::new([numeral(0), numeral(1), one_set(), numeral(2)]);
        assert_eq!(apply_pow(&SetTerm::numeral(2)).unwrap(), lit(p2));
        assert_eq!(apply_pow(&SetTerm::Nat).unwrap(), SetTerm::pow(SetTerm::Nat));
        let u = SetTerm::union([SetTerm::numeral(3), SetTerm::numeral(4)]);
        assert!(matches!(apply_pow(&u), Err(Error::UnsupportedOperand(_))));
    }

    #[test]
    fn inv_pow_examples() {
        let p3 = numeral(3).powerset();
        assert_eq!(apply_inv_pow(&lit(p3)).unwrap(), SetTerm::numeral(3));
        let p2 = HfSet::new([numeral(0), numeral(1), one_set(), numeral(2)]);
        assert_eq!(apply_inv_pow(&lit(p2)).unwrap(), SetTerm::numeral(2));
        assert!(matches!(apply_inv_pow(&lit(HfSet::empty())), Err(Error::Domain(_))));
        assert_eq!(
            apply_inv_pow(&SetTerm::inv_pow(SetTerm::numeral(3))).unwrap(),
            SetTerm::inv_pow_n(SetTerm::numeral(3), 2)
        );
        assert_eq!(apply_inv_pow(&SetTerm::pow(SetTerm::Nat)).unwrap(), SetTerm::Nat);
    }

    #[test]
    fn normalize_examples() {
        let t = SetTerm::inv_pow_n(SetTerm::pow_n(SetTerm::numeral(3), 2), 2);
        let nf = normalize(&t).unwrap();
        assert_eq!(nf, NormalForm::zermelo_only(ZermeloPart::Finite(numeral(3))));

        let t = SetTerm::union([
            SetTerm::numeral(3),
            SetTerm::inv_pow(lit(one_set())),
            SetTerm::inv_pow_n(SetTerm::numeral(3), 2),
        ]);
        let nf = normalize(&t).unwrap();
        assert_eq!(nf.zermelo(), &ZermeloPart::Finite(numeral(3)));
        let comps: Vec<(usize, HfSet)> = nf
            .components()
            .iter()
            .map(|c| match c.payload() {
                ZermeloPart::Finite(x) => (c.level(), x.clone()),
                _ => unreachable!(),
            })
            .collect();
        assert_eq!(comps, vec![(1, one_set()), (2, numeral(3))]);

        let t = SetTerm::union([SetTerm::inv_pow(lit(one_set())), SetTerm::inv_pow(SetTerm::numeral(3))]);
        let nf = normalize(&t).unwrap();
        assert!(nf.zermelo().is_empty());
        let payloads: Vec<usize> = nf
            .components()
            .iter()
            .map(|c| c.payload().cardinality().finite().unwrap() as usize)
            .collect();
        assert_eq!(payloads, vec![3, 1]);

        let t = SetTerm::inv_pow_n(SetTerm::numeral(1), 2);
        assert!(matches!(normalize(&t), Err(Error::Domain(_))));
    }

    #[test]
    fn normalize_keeps_duplicates_and_merges_zermelo() {
        let c = SetTerm::inv_pow(SetTerm::numeral(3));
        let t = SetTerm::union([c.clone(), SetTerm::numeral(1), c, SetTerm::numeral(2)]);
        let nf = normalize(&t).unwrap();
        assert_eq!(nf.components().len(), 2);
        assert_eq!(nf.zermelo(), &ZermeloPart::Finite(numeral(2)));
    }

    #[test]
    fn union_constructor_flattens() {
        let a = SetTerm::union([SetTerm::numeral(1), SetTerm::numeral(2)]);
        let b = SetTerm::union([a, SetTerm::numeral(3)]);
        assert!(matches!(&b, SetTerm::Union(v) if v.len() == 3));
        assert_eq!(SetTerm::union([SetTerm::Nat]), SetTerm::Nat);
    }

    #[test]
    fn display() {
        assert_eq!(SetTerm::lit(HfSet::empty()).to_string(), "{}");
        let t = SetTerm::inv_pow(SetTerm::pow(SetTerm::numeral(2)));
        assert_eq!(t.to_string(), "P^-1(P({{},{{}}}))");
        let t = SetTerm::union([SetTerm::numeral(1), SetTerm::inv_pow_n(SetTerm::Nat, 2)]);
        assert_eq!(t.to_string(), "{{}} u P^-2(N)");
    }

    #[test]
    fn powerset_size_is_bounded() {
        let t = SetTerm::pow_n(SetTerm::numeral(5), 3);
        assert!(matches!(normalize(&t), Err(Error::ResourceLimit(_))));
    }
}
