//! Subset-membership `∈_n`, extended subset and equality, levels.

use crate::error::{Error, Result};
use crate::hf::HfSet;

use super::normal::{NormalForm, Single, ZermeloPart};
use super::{normalize, SetTerm};

fn finite_zermelo(t: &SetTerm) -> Result<HfSet> {
    let nf = normalize(t)?;
    match nf.as_single() {
        Some(Single::Zermelo(ZermeloPart::Finite(x))) => Ok(x),
        _ => Err(Error::RelationUndefined(format!(
            "subset-members must be finite Zermelo sets, got {nf}"
        ))),
    }
}

/// `a ∈_n x`, where `a ∈_(n+1) X ⇔ a ∈_n P(X)` and `∈_0` is classical membership.
///
/// On a Zermelo `x` this is `a ∈ P^n(x)`; on `P^-m(Y)` it is `a ∈ P^(n-m)(Y)` and undefined
/// for `n < m`. A union form is searched component-wise, skipping components whose level
/// exceeds `n`.
pub fn subset_member(a: &SetTerm, x: &SetTerm, n: usize) -> Result<bool> {
    let a = finite_zermelo(a)?;
    let nf = normalize(x)?;
    if let Some(single) = nf.as_single() {
        return single_member(&a, &single, n);
    }
    let mut defined = false;
    let mut found = false;
    let zermelo = (!nf.zermelo().is_empty()).then(|| Single::Zermelo(nf.zermelo().clone()));
    let comps = nf.components().iter().cloned().map(Single::Level);
    for piece in zermelo.into_iter().chain(comps) {
        if let Ok(hit) = single_member(&a, &piece, n) {
            defined = true;
            found |= hit;
        }
    }
    if defined {
        Ok(found)
    } else {
        Err(Error::RelationUndefined(format!("no component of {nf} has members of type {n}")))
    }
}

fn single_member(a: &HfSet, x: &Single, n: usize) -> Result<bool> {
    match x {
        Single::Zermelo(z) => Ok(z.contains_in_power(a, n)),
        Single::Level(c) if n >= c.level() => Ok(c.payload().contains_in_power(a, n - c.level())),
        Single::Level(c) => Err(Error::RelationUndefined(format!(
            "a level-{} set has no members of type {n}",
            c.level()
        ))),
    }
}

/// Whether `t` denotes a Zermelo set.
pub fn is_zermelo(t: &SetTerm) -> Result<bool> {
    Ok(normalize(t)?.is_zermelo())
}

fn single_of(t: &SetTerm) -> Result<(NormalForm, Option<Single>)> {
    let nf = normalize(t)?;
    let single = nf.as_single();
    Ok((nf, single))
}

/// Extended subset between two Zermelo sets or two components of the same level.
///
/// Same-level components compare their payloads: `P^-m(X) ⊆ P^-m(Y) ⇔ X ⊆ Y`.
pub fn ext_subset(x: &SetTerm, y: &SetTerm) -> Result<bool> {
    let (nx, sx) = single_of(x)?;
    let (ny, sy) = single_of(y)?;
    match (sx, sy) {
        (Some(Single::Zermelo(a)), Some(Single::Zermelo(b))) => Ok(a.is_subset(&b)),
        (Some(Single::Level(a)), Some(Single::Level(b))) if a.level() == b.level() => {
            Ok(a.payload().is_subset(b.payload()))
        }
        (Some(a), Some(b)) => Err(Error::RelationUndefined(format!(
            "subset between level {} and level {}",
            a.level(),
            b.level()
        ))),
        _ => Err(Error::RelationUndefined(format!("subset involving union form {nx} / {ny}"))),
    }
}

/// Extended equality: mutual inclusion for single sets, formal equality for union forms.
pub fn ext_equal(x: &SetTerm, y: &SetTerm) -> Result<bool> {
    let (nx, sx) = single_of(x)?;
    let (ny, sy) = single_of(y)?;
    match (sx, sy) {
        (Some(a), Some(b)) if a.level() != b.level() => Ok(false),
        (Some(_), Some(_)) => Ok(ext_subset(x, y)? && ext_subset(y, x)?),
        _ => Ok(nx == ny),
    }
}

/// 0 for a Zermelo set, `m` for `P^-m(Y)`.
pub fn level_of(t: &SetTerm) -> Result<usize> {
    let nf = normalize(t)?;
    nf.as_single()
        .map(|s| s.level())
        .ok_or_else(|| Error::UndefinedLevel(format!("{nf} is a union form")))
}
