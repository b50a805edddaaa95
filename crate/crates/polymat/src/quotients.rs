//! Linear quotients in the reverse-lexicographic order, and the derived
//! depth and Cohen-Macaulay tests.
//!
//! For generators `u_1 > u_2 > ... > u_s` (descending revlex) the j-th colon
//! ideal is `(u_1, ..., u_{j-1}) : u_j`, minimally generated by the monomials
//! `u_k / gcd(u_k, u_j)`. The ordering has linear quotients when every colon
//! ideal is generated by variables; `q` is the largest number of variables
//! appearing in one step (0 for a single generator), and then
//! `depth = n - q - 1` while `dim = n - h`, so the quotient ring is
//! Cohen-Macaulay exactly when `h = q + 1`.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::covers::minimal_vertex_covers;
use crate::error::Error;
use crate::ideal::{minimal_generators, MonomialIdeal};
use crate::monomial::{revlex_cmp, Monomial};

/// Budget for the factorial search over generator orderings.
const ORDERING_SEARCH_MAX_GENS: usize = 8;

/// One colon step of a linear-quotients run.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct ColonStep {
    /// Position `j` of this step in the ordering, 2-based like the colon
    /// sequence itself.
    pub index: usize,
    /// Minimal generators of `(u_1, ..., u_{j-1}) : u_j`.
    pub colon_gens: Vec<Monomial>,
    /// The 1-based variables generating the colon ideal, when it is generated
    /// by variables; `None` when some minimal generator has degree > 1.
    pub vars: Option<Vec<usize>>,
}

/// Outcome of running the colon sequence in descending revlex order.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct QuotientReport {
    /// The generators in the order used, descending reverse-lexicographic.
    pub ordering: Vec<Monomial>,
    /// Colon steps for `j = 2, ..., s`; empty for a principal ideal.
    pub steps: Vec<ColonStep>,
    /// Whether every colon ideal is generated by variables.
    pub linear: bool,
    /// First failing step index when not linear.
    pub first_nonlinear_step: Option<usize>,
    /// Largest count of colon variables over all steps (0 when `s == 1`);
    /// `None` when the ordering is not linear.
    pub q: Option<usize>,
    /// `n - q - 1`; `None` when the ordering is not linear.
    pub depth: Option<usize>,
}

impl QuotientReport {
    /// The per-step colon variable counts, when linear.
    pub fn q_values(&self) -> Option<Vec<usize>> {
        self.steps
            .iter()
            .map(|s| s.vars.as_ref().map(Vec::len))
            .collect()
    }
}

/// Minimal generators of the colon ideal `(gens) : u`, i.e. of
/// `{ v / gcd(v, u) : v in gens }` minimalized. The result is sorted
/// descending revlex; colonning by a member of `gens` yields the unit ideal's
/// generator `1`.
///
/// Panics if the ambient variable counts differ.
pub fn colon_by_monomial(gens: &[Monomial], u: &Monomial) -> Vec<Monomial> {
    minimal_generators(
        gens.iter()
            .map(|v| v.divide(&v.gcd(u)).expect("gcd divides"))
            .collect(),
    )
}

fn analyze_ordering(ordering: &[Monomial]) -> (Vec<ColonStep>, Option<usize>) {
    let mut steps = Vec::with_capacity(ordering.len().saturating_sub(1));
    let mut first_nonlinear = None;
    for j in 1..ordering.len() {
        let colon_gens = colon_by_monomial(&ordering[..j], &ordering[j]);
        let vars = colon_gens
            .iter()
            .map(|g| (g.degree() == 1).then(|| g.support()[0]))
            .collect::<Option<Vec<usize>>>()
            .map(|mut v| {
                v.sort_unstable();
                v
            });
        if vars.is_none() && first_nonlinear.is_none() {
            first_nonlinear = Some(j + 1);
        }
        steps.push(ColonStep {
            index: j + 1,
            colon_gens,
            vars,
        });
    }
    (steps, first_nonlinear)
}

/// Runs the colon sequence for the descending reverse-lexicographic ordering
/// of the minimal generators. Requires a nonzero proper ideal generated in
/// one degree.
///
/// When some colon ideal is not generated by variables the report has
/// `linear == false` and still carries every step, so the offending colon
/// generators are available for inspection.
pub fn linear_quotients_revlex(ideal: &MonomialIdeal) -> Result<QuotientReport, Error> {
    ideal.ensure_equigenerated()?;
    let mut ordering = ideal.gens().to_vec();
    // Stored order is already descending revlex; restated here degree-first so
    // the ordering stays valid if mixed degrees are ever admitted.
    ordering.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| revlex_cmp(b, a)));
    let (steps, first_nonlinear_step) = analyze_ordering(&ordering);
    let linear = first_nonlinear_step.is_none();
    let q = linear.then(|| {
        steps
            .iter()
            .map(|s| s.vars.as_ref().expect("linear step").len())
            .max()
            .unwrap_or(0)
    });
    let depth = q.map(|q| {
        let n = ideal.num_vars();
        assert!(q < n, "colon variables exceed ambient ring");
        n - q - 1
    });
    Ok(QuotientReport {
        ordering,
        steps,
        linear,
        first_nonlinear_step,
        q,
        depth,
    })
}

/// Depth of the quotient ring, `n - q - 1`, via linear quotients in revlex
/// order. Fails with [`Error::NoLinearQuotients`] when that ordering is not
/// linear (the depth is then unknown to this toolkit, never guessed).
pub fn depth_quotient(ideal: &MonomialIdeal) -> Result<usize, Error> {
    let report = linear_quotients_revlex(ideal)?;
    match report.depth {
        Some(depth) => Ok(depth),
        None => Err(Error::NoLinearQuotients {
            step: report.first_nonlinear_step.expect("nonlinear report"),
        }),
    }
}

/// Whether the quotient ring is Cohen-Macaulay, decided by `h == q + 1`.
/// Fails with [`Error::NoLinearQuotients`] when the revlex ordering is not
/// linear.
pub fn is_cohen_macaulay(ideal: &MonomialIdeal) -> Result<bool, Error> {
    let report = linear_quotients_revlex(ideal)?;
    let Some(q) = report.q else {
        return Err(Error::NoLinearQuotients {
            step: report.first_nonlinear_step.expect("nonlinear report"),
        });
    };
    let h = minimal_vertex_covers(ideal)?.h;
    Ok(h == q + 1)
}

/// Exhaustive search scaffolding: the set of `q` values over *every*
/// generator ordering with linear quotients. Requires a nonzero proper ideal
/// generated in one degree and at most [`ORDERING_SEARCH_MAX_GENS`]
/// generators (factorial cost). The returned set is empty when no ordering is
/// linear.
pub fn q_values_all_linear_orderings(ideal: &MonomialIdeal) -> Result<BTreeSet<usize>, Error> {
    ideal.ensure_equigenerated()?;
    let s = ideal.num_gens();
    if s > ORDERING_SEARCH_MAX_GENS {
        let factorial: u128 = (1..=s as u128).product();
        return Err(Error::BudgetExceeded {
            required: factorial,
            budget: (1..=ORDERING_SEARCH_MAX_GENS as u128).product(),
        });
    }
    let mut qs = BTreeSet::new();
    for ordering in ideal.gens().iter().cloned().permutations(s) {
        let (steps, first_nonlinear) = analyze_ordering(&ordering);
        if first_nonlinear.is_none() {
            qs.insert(
                steps
                    .iter()
                    .map(|st| st.vars.as_ref().expect("linear step").len())
                    .max()
                    .unwrap_or(0),
            );
        }
    }
    Ok(qs)
}
