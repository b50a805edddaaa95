//! Radicals, family recognizers, and the classification of Cohen–Macaulay
//! polymatroidal ideals.
//!
//! The families: a *principal* ideal has a single generator; the *Veronese*
//! ideal of degree `d` on a variable set `A` is generated by all degree-`d`
//! monomials in those variables; the *squarefree Veronese* ideal is generated
//! by all squarefree degree-`d` monomials in them. The classification
//! theorem: a polymatroidal ideal is Cohen–Macaulay exactly when it is, up to
//! the ambient ring, principal, Veronese, or squarefree Veronese.
//! [`classify`] computes the verdict from the exchange check plus the
//! `h == q + 1` criterion and fails loudly if the two routes ever disagree.

use serde::Serialize;
use std::fmt;

use crate::covers::minimal_vertex_covers;
use crate::error::Error;
use crate::exchange::{polymatroidal_check, ExchangeWitness};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::quotients::linear_quotients_revlex;

/// Binomial coefficient `C(n, k)` in exact `u128` arithmetic, or `None` on
/// overflow. The running product after `i` factors equals `C(n - k + i, i)`,
/// an integer, so every intermediate division is exact.
pub(crate) fn binomial(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 1..=k {
        acc = acc.checked_mul(u128::from(n - k + i))? / u128::from(i);
    }
    Some(acc)
}

/// The radical: squarefree parts of the generators, minimalized. Degenerate
/// ideals are their own radicals.
pub fn radical(ideal: &MonomialIdeal) -> MonomialIdeal {
    let raw: Vec<Monomial> = ideal.gens().iter().map(Monomial::squarefree_part).collect();
    MonomialIdeal::new(ideal.num_vars(), raw).expect("radical preserves the ambient ring")
}

/// The shape of a recognized Veronese or squarefree Veronese ideal: the
/// 1-based variables it lives on and its generating degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyShape {
    pub vars: Vec<usize>,
    pub degree: u64,
}

/// Whether the ideal has a single minimal generator.
pub fn is_principal(ideal: &MonomialIdeal) -> bool {
    ideal.num_gens() == 1
}

/// Recognizes Veronese ideals by a counting argument: the generators are
/// distinct degree-`d` monomials supported on the `t` variables of the
/// support union, and there are `C(t + d - 1, d)` such monomials in total, so
/// the cardinalities match exactly when every one of them occurs.
pub fn veronese_shape(ideal: &MonomialIdeal) -> Result<Option<FamilyShape>, Error> {
    let degree = ideal.ensure_equigenerated()?;
    let vars = ideal.support_union();
    let all = binomial(vars.len() as u64 + degree - 1, degree)
        .ok_or_else(|| Error::Precondition("Veronese cardinality overflows u128".into()))?;
    Ok((ideal.num_gens() as u128 == all).then_some(FamilyShape { vars, degree }))
}

/// Recognizes squarefree Veronese ideals by the same counting argument with
/// `C(t, d)` squarefree monomials available.
pub fn squarefree_veronese_shape(ideal: &MonomialIdeal) -> Result<Option<FamilyShape>, Error> {
    let degree = ideal.ensure_equigenerated()?;
    if !ideal.gens().iter().all(Monomial::is_squarefree) {
        return Ok(None);
    }
    let vars = ideal.support_union();
    let all = binomial(vars.len() as u64, degree)
        .ok_or_else(|| Error::Precondition("Veronese cardinality overflows u128".into()))?;
    Ok((ideal.num_gens() as u128 == all).then_some(FamilyShape { vars, degree }))
}

/// The classification verdict. The three family verdicts imply
/// Cohen–Macaulayness; the precedence Principal, then squarefree Veronese,
/// then Veronese resolves overlaps (a principal squarefree generator is also
/// a one-element squarefree Veronese family, for example).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Principal,
    Veronese,
    SquarefreeVeronese,
    NotCohenMacaulay,
    NotPolymatroidal,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Verdict::Principal => "Principal",
            Verdict::Veronese => "Veronese",
            Verdict::SquarefreeVeronese => "SquarefreeVeronese",
            Verdict::NotCohenMacaulay => "NotCohenMacaulay",
            Verdict::NotPolymatroidal => "NotPolymatroidal",
        };
        f.write_str(name)
    }
}

/// Everything [`classify`] derives about one ideal. `q`, `depth`, and
/// `cohen_macaulay` are present exactly when the descending reverse
/// lexicographic order yields linear quotients; `violation` is present
/// exactly when the exchange check fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub n: usize,
    pub num_gens: usize,
    pub degree: u64,
    pub h: usize,
    pub unmixed: bool,
    pub dim: usize,
    pub linear: bool,
    pub q: Option<usize>,
    pub depth: Option<usize>,
    pub polymatroidal: bool,
    pub matroidal: bool,
    pub violation: Option<ExchangeWitness>,
    pub principal: bool,
    pub veronese: Option<FamilyShape>,
    pub squarefree_veronese: Option<FamilyShape>,
    pub cohen_macaulay: Option<bool>,
    pub verdict: Verdict,
}

/// Computes the full classification without passing judgment on internal
/// consistency, so callers can inspect contradictory data before aborting.
pub(crate) fn analyze(ideal: &MonomialIdeal) -> Result<(Classification, Option<String>), Error> {
    let degree = ideal.ensure_equigenerated()?;
    let covers = minimal_vertex_covers(ideal)?;
    let quotients = linear_quotients_revlex(ideal)?;
    let exchange = polymatroidal_check(ideal)?;
    let polymatroidal = exchange.holds();
    let violation = exchange.witness().cloned();
    let squarefree = ideal.gens().iter().all(Monomial::is_squarefree);

    let principal = is_principal(ideal);
    let veronese = veronese_shape(ideal)?;
    let squarefree_veronese = squarefree_veronese_shape(ideal)?;
    let in_family = principal || veronese.is_some() || squarefree_veronese.is_some();

    let cohen_macaulay = quotients.q.map(|q| covers.h == q + 1);
    let verdict = if !polymatroidal {
        Verdict::NotPolymatroidal
    } else if cohen_macaulay != Some(true) {
        Verdict::NotCohenMacaulay
    } else if principal {
        Verdict::Principal
    } else if squarefree_veronese.is_some() {
        Verdict::SquarefreeVeronese
    } else if veronese.is_some() {
        Verdict::Veronese
    } else {
        // Contradicts the classification theorem; reported below.
        Verdict::NotCohenMacaulay
    };

    let consistency = if in_family && !polymatroidal {
        Some(format!(
            "family-shaped ideal fails the exchange property: {ideal}"
        ))
    } else if polymatroidal && !quotients.linear {
        Some(format!(
            "polymatroidal ideal lacks linear quotients in descending revlex order: {ideal}"
        ))
    } else if polymatroidal && cohen_macaulay == Some(true) && !in_family {
        Some(format!(
            "Cohen-Macaulay polymatroidal ideal matches no family shape: {ideal}"
        ))
    } else if polymatroidal && cohen_macaulay == Some(false) && in_family {
        Some(format!(
            "family-shaped ideal has h = {} but q + 1 = {}: {ideal}",
            covers.h,
            quotients.q.map(|q| q + 1).unwrap_or_default(),
        ))
    } else {
        None
    };

    let classification = Classification {
        n: ideal.num_vars(),
        num_gens: ideal.num_gens(),
        degree,
        h: covers.h,
        unmixed: covers.unmixed,
        dim: covers.dim,
        linear: quotients.linear,
        q: quotients.q,
        depth: quotients.depth,
        polymatroidal,
        matroidal: polymatroidal && squarefree,
        violation,
        principal,
        veronese,
        squarefree_veronese,
        cohen_macaulay,
        verdict,
    };
    Ok((classification, consistency))
}

/// Classifies a nonzero proper ideal generated in one degree.
///
/// Two independent routes must agree: the family recognizers on one side and
/// the `h == q + 1` Cohen–Macaulay criterion on the other. Any disagreement
/// is a bug in this crate or a counterexample to the classification theorem,
/// and surfaces as [`Error::Inconsistency`] rather than a quiet verdict.
pub fn classify(ideal: &MonomialIdeal) -> Result<Classification, Error> {
    let (classification, consistency) = analyze(ideal)?;
    match consistency {
        Some(message) => Err(Error::Inconsistency(message)),
        None => Ok(classification),
    }
}

/// Verifies, for a Cohen–Macaulay polymatroidal ideal, that the radical
/// restricted to its support is squarefree Veronese, returning that shape.
/// Rejects inapplicable inputs with [`Error::Precondition`]; a failure of the
/// statement itself is an [`Error::Inconsistency`].
pub fn check_radical_lemma(ideal: &MonomialIdeal) -> Result<FamilyShape, Error> {
    let classification = classify(ideal)?;
    if !classification.polymatroidal {
        return Err(Error::Precondition(
            "the radical statement applies to polymatroidal ideals only".into(),
        ));
    }
    if classification.cohen_macaulay != Some(true) {
        return Err(Error::Precondition(
            "the radical statement applies to Cohen-Macaulay ideals only".into(),
        ));
    }
    let (shrunk, _) = radical(ideal).shrink_to_support();
    squarefree_veronese_shape(&shrunk)?.ok_or_else(|| {
        Error::Inconsistency(format!(
            "radical of a Cohen-Macaulay polymatroidal ideal is not squarefree Veronese: {shrunk}"
        ))
    })
}
