//! The polymatroidal exchange property, its dual form, constructive exchange
//! paths, and products of ideals.
//!
//! An ideal generated in one degree is *polymatroidal* when for all minimal
//! generators `u = x^a` and `v = x^b` and every `i` with `a_i > b_i` there is
//! a `j` with `a_j < b_j` such that `x_j * u / x_i` is again a minimal
//! generator. It is *matroidal* when additionally squarefree. The dual form
//! swaps the roles: for every `i` with `a_i < b_i` some `j` with `a_j > b_j`
//! has `x_i * u / x_j` a minimal generator. The dual form is a consequence of
//! the exchange property; [`exchange_path`] realizes the constructive proof.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::Error;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// A single exchange statement about a generator pair.
///
/// For a *violation* of the exchange property, `j` and `result` are absent:
/// no balancing index exists for `(u, v, i)`. For a *successful* exchange,
/// `j` is the balancing index and `result` the exchanged monomial, a minimal
/// generator. All indices are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExchangeWitness {
    pub u: Monomial,
    pub v: Monomial,
    pub i: usize,
    pub j: Option<usize>,
    pub result: Option<Monomial>,
}

/// Outcome of an exchange-property check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExchangeCheck {
    Holds,
    /// The first violation in the canonical scan order: generators in stored
    /// (descending revlex) order for `u`, then `v`, then ascending `i`.
    Fails(ExchangeWitness),
}

impl ExchangeCheck {
    pub fn holds(&self) -> bool {
        matches!(self, ExchangeCheck::Holds)
    }

    pub fn witness(&self) -> Option<&ExchangeWitness> {
        match self {
            ExchangeCheck::Holds => None,
            ExchangeCheck::Fails(w) => Some(w),
        }
    }
}

/// The witnessed path produced by [`exchange_path`].
///
/// `steps[0]` is the starting generator `v`; each later entry moves one unit
/// of exponent and stays a minimal generator; the last entry is the terminal
/// monomial `w*`. `distances[t]` is the exchange distance from `u` to
/// `steps[t]`, strictly decreasing along the path. `witness` records the
/// final dual exchange: `witness.result == x_i * u / x_j` is a minimal
/// generator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExchangePath {
    pub steps: Vec<Monomial>,
    pub distances: Vec<u64>,
    pub witness: ExchangeWitness,
}

/// The exchange distance: half the l1-distance of the exponent vectors, i.e.
/// the total exponent surplus of `a` over `b`. For monomials of equal degree
/// this counts the unit exchanges needed to transform one into the other.
///
/// Panics if the ambient variable counts differ.
pub fn distance(a: &Monomial, b: &Monomial) -> u64 {
    assert_eq!(
        a.num_vars(),
        b.num_vars(),
        "monomials live in different rings"
    );
    a.exponents()
        .iter()
        .zip(b.exponents())
        .map(|(&ea, &eb)| u64::from(ea.saturating_sub(eb)))
        .sum()
}

fn generator_set(ideal: &MonomialIdeal) -> HashSet<&Monomial> {
    ideal.gens().iter().collect()
}

fn check_exchange(ideal: &MonomialIdeal, dual: bool) -> Result<ExchangeCheck, Error> {
    ideal.ensure_equigenerated()?;
    let gens = ideal.gens();
    let set = generator_set(ideal);
    let n = ideal.num_vars();
    for u in gens {
        for v in gens {
            let a = u.exponents();
            let b = v.exponents();
            for i in 0..n {
                let deficient = if dual { a[i] < b[i] } else { a[i] > b[i] };
                if !deficient {
                    continue;
                }
                let found = (0..n).any(|j| {
                    let balancing = if dual { a[j] > b[j] } else { a[j] < b[j] };
                    // Forward: x_j * u / x_i; dual: x_i * u / x_j.
                    balancing
                        && set.contains(&if dual {
                            u.shift_unit(j, i)
                        } else {
                            u.shift_unit(i, j)
                        })
                });
                if !found {
                    return Ok(ExchangeCheck::Fails(ExchangeWitness {
                        u: u.clone(),
                        v: v.clone(),
                        i: i + 1,
                        j: None,
                        result: None,
                    }));
                }
            }
        }
    }
    Ok(ExchangeCheck::Holds)
}

/// Checks the exchange property over every ordered generator pair, reporting
/// the first violation in canonical scan order. Requires a nonzero proper
/// ideal generated in one degree.
pub fn polymatroidal_check(ideal: &MonomialIdeal) -> Result<ExchangeCheck, Error> {
    check_exchange(ideal, false)
}

/// Whether the ideal is polymatroidal.
pub fn is_polymatroidal(ideal: &MonomialIdeal) -> Result<bool, Error> {
    Ok(polymatroidal_check(ideal)?.holds())
}

/// Whether the ideal is matroidal: squarefree and polymatroidal.
pub fn is_matroidal(ideal: &MonomialIdeal) -> Result<bool, Error> {
    if !ideal.gens().iter().all(Monomial::is_squarefree) {
        return Ok(false);
    }
    is_polymatroidal(ideal)
}

/// Checks the dual exchange form over every ordered generator pair. For
/// polymatroidal ideals this always holds; it is checked directly, making the
/// implication testable.
pub fn dual_exchange_check(ideal: &MonomialIdeal) -> Result<ExchangeCheck, Error> {
    check_exchange(ideal, true)
}

/// Constructively realizes the dual exchange for generators `u`, `v` and a
/// 1-based index `i` with a smaller `u`-exponent than `v`-exponent.
///
/// Starting from `w = v`, while some index `k != i` has a larger exponent in
/// `w` than in `u`, one exponent unit is moved from `k` to an index where `w`
/// falls short of `u` (smallest such `k`, then smallest landing index whose
/// exchange stays inside the generators). Every move decreases the exchange
/// distance to `u` by one and keeps the exponent of `x_i` pinned at `v`'s
/// value, so the walk terminates at a generator `w*` with
/// `(w*)_i = v_i > u_i` and `(w*)_j <= u_j` elsewhere. The final witness
/// index `j0` then satisfies `(w*)_{j0} < u_{j0}` with `x_i * u / x_{j0}`
/// again a generator.
///
/// Requires `u` and `v` to be minimal generators of a nonzero proper ideal
/// generated in one degree. When the ideal is not actually polymatroidal a
/// required exchange may not exist; that stuck state is reported as
/// [`Error::ExchangeAxiomViolated`].
pub fn exchange_path(
    ideal: &MonomialIdeal,
    u: &Monomial,
    v: &Monomial,
    i: usize,
) -> Result<ExchangePath, Error> {
    ideal.ensure_equigenerated()?;
    let n = ideal.num_vars();
    if i == 0 || i > n {
        return Err(Error::VariableOutOfRange { index: i, n });
    }
    for m in [u, v] {
        if !ideal.is_generator(m) {
            return Err(Error::Precondition(format!(
                "{m} is not a minimal generator"
            )));
        }
    }
    let idx = i - 1;
    let a = u.exponents();
    if a[idx] >= v.exponents()[idx] {
        return Err(Error::Precondition(format!(
            "exponent of x{i} in {u} is not smaller than in {v}"
        )));
    }

    let set = generator_set(ideal);
    let mut w = v.clone();
    let mut steps = vec![w.clone()];
    let mut distances = vec![distance(u, &w)];
    // Walk while some k != i has surplus in w over u.
    while let Some(k) = (0..n).find(|&k| k != idx && w.exponents()[k] > a[k]) {
        let next = (0..n)
            .filter(|&l| w.exponents()[l] < a[l])
            .map(|l| w.shift_unit(k, l))
            .find(|cand| set.contains(cand));
        let Some(next) = next else {
            return Err(Error::ExchangeAxiomViolated {
                current: w.to_string(),
                target: u.to_string(),
                index: k + 1,
            });
        };
        w = next;
        steps.push(w.clone());
        distances.push(distance(u, &w));
    }
    // Termination: w* matches v at i and nowhere exceeds u elsewhere.
    debug_assert_eq!(w.exponents()[idx], v.exponents()[idx]);
    debug_assert!((0..n).all(|j| j == idx || w.exponents()[j] <= a[j]));

    let witness = (0..n)
        .filter(|&j| w.exponents()[j] < a[j])
        .map(|j| (j, u.shift_unit(j, idx)))
        .find(|(_, result)| set.contains(result));
    let Some((j0, result)) = witness else {
        return Err(Error::ExchangeAxiomViolated {
            current: w.to_string(),
            target: u.to_string(),
            index: i,
        });
    };
    Ok(ExchangePath {
        steps,
        distances,
        witness: ExchangeWitness {
            u: u.clone(),
            v: v.clone(),
            i,
            j: Some(j0 + 1),
            result: Some(result),
        },
    })
}

/// The product ideal `I * J`: pairwise products of generators, minimalized.
/// Both ideals must share one ambient ring.
pub fn product(left: &MonomialIdeal, right: &MonomialIdeal) -> Result<MonomialIdeal, Error> {
    if left.num_vars() != right.num_vars() {
        return Err(Error::AmbientMismatch {
            left: left.num_vars(),
            right: right.num_vars(),
        });
    }
    let raw: Vec<Monomial> = left
        .gens()
        .iter()
        .flat_map(|a| right.gens().iter().map(move |b| a.multiply(b)))
        .collect();
    MonomialIdeal::new(left.num_vars(), raw)
}
