//! Exhaustive enumeration of equigenerated monomial ideals at desk scale,
//! the end-to-end verifier of the classification, and the census of unmixed
//! non-Cohen–Macaulay polymatroidal ideals.
//!
//! The search space of an [`EnumSpec`] is every nonempty subset of the pool
//! of degree-`degree` monomials with exponents at most `cap`: equal degrees
//! make every subset an antichain, hence a canonical minimal generating set.
//! Subsets stream in binary-counter order over the pool (sorted descending
//! reverse-lexicographically), partitioned into fixed blocks so the stream is
//! identical for every worker count.

use std::time::{Duration, Instant};

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::classify::{analyze, binomial, radical, squarefree_veronese_shape, Verdict};
use crate::covers::minimal_vertex_covers;
use crate::error::Error;
use crate::exchange::{distance, dual_exchange_check, exchange_path, ExchangePath};
use crate::ideal::MonomialIdeal;
use crate::monomial::{revlex_cmp, Monomial};

/// Hard ceiling on the number of generator subsets a single scan may visit.
pub const SUBSET_BUDGET: u128 = 1 << 24;

/// Largest pool a subset scan can index (subsets are 64-bit masks with the
/// top bit reserved).
const POOL_LIMIT: u128 = 63;

/// Binary-counter scans are used up to this pool size; beyond it the scan
/// iterates combinations per cardinality, which requires generator-count
/// bounds tight enough to fit the budget.
const COUNTER_LIMIT: usize = 24;

/// Degrees beyond this are pointless to enumerate (the pool alone would blow
/// every budget) and are rejected up front.
const DEGREE_LIMIT: u64 = 1 << 20;

/// Masks per scan block. Block boundaries are fixed, so the concatenated
/// stream does not depend on how blocks are distributed over workers.
const BLOCK_MASKS: u64 = 1 << 16;

/// Pool counts at or above this sentinel threshold are reported as
/// `u128::MAX`; they exceed every representable scan anyway.
const COUNT_CEILING: u128 = 1 << 100;

/// A search space of equigenerated ideals: all nonempty generator subsets,
/// within the cardinality bounds, of the pool of degree-`degree` monomials in
/// `n` variables with exponents at most `cap`. With `modulo_symmetry` set,
/// only one subset per variable-permutation orbit is kept (the one whose
/// pool-index mask is numerically smallest).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EnumSpec {
    pub n: usize,
    pub degree: u64,
    pub cap: u32,
    pub min_gens: usize,
    pub max_gens: Option<usize>,
    pub modulo_symmetry: bool,
}

impl EnumSpec {
    /// A spec over the full subset space: no cardinality bounds, no symmetry
    /// reduction. Adjust the public fields to narrow it.
    pub fn new(n: usize, degree: u64, cap: u32) -> Self {
        EnumSpec {
            n,
            degree,
            cap,
            min_gens: 1,
            max_gens: None,
            modulo_symmetry: false,
        }
    }

    fn validate(&self) -> Result<(), Error> {
        let fail = |msg: &str| Err(Error::Precondition(msg.into()));
        if self.n == 0 {
            return fail("enumeration needs at least one variable");
        }
        if self.degree == 0 {
            return fail("enumeration degree must be at least 1");
        }
        if self.degree > DEGREE_LIMIT {
            return fail("enumeration degree exceeds the supported range");
        }
        if self.cap == 0 || u64::from(self.cap) > self.degree {
            return fail("exponent cap must lie in 1..=degree");
        }
        if self.min_gens == 0 {
            return fail("min_gens must be at least 1; the zero ideal is not enumerated");
        }
        if self.max_gens.is_some_and(|hi| hi < self.min_gens) {
            return fail("max_gens must be at least min_gens");
        }
        if self.modulo_symmetry && self.n > 7 {
            return fail("symmetry reduction enumerates all n! permutations and requires n <= 7");
        }
        Ok(())
    }
}

/// All monomials of the given degree in `n` variables with every exponent at
/// most `cap`, sorted descending reverse-lexicographically.
pub fn monomial_pool(n: usize, degree: u64, cap: u32) -> Vec<Monomial> {
    fn fill(exps: &mut Vec<u32>, left: u64, slots: usize, cap: u32, out: &mut Vec<Monomial>) {
        if slots == 0 {
            if left == 0 {
                out.push(Monomial::new(exps.clone()));
            }
            return;
        }
        let top = u64::from(cap).min(left) as u32;
        for e in 0..=top {
            if left - u64::from(e) <= (slots as u64 - 1) * u64::from(cap) {
                exps.push(e);
                fill(exps, left - u64::from(e), slots - 1, cap, out);
                exps.pop();
            }
        }
    }
    let mut out = Vec::new();
    fill(&mut Vec::with_capacity(n), degree, n, cap, &mut out);
    out.sort_by(|a, b| revlex_cmp(b, a));
    out
}

/// Counts the pool of [`monomial_pool`] without materializing it, saturating
/// to `u128::MAX` for astronomically large pools. Compositions of `degree`
/// into `n` parts bounded by `cap` are counted by a sliding-window dynamic
/// program over the variables.
fn pool_count(n: usize, degree: u64, cap: u32) -> u128 {
    if degree > (n as u64).saturating_mul(u64::from(cap)) {
        return 0;
    }
    let d = degree as usize;
    let cap = cap as usize;
    let mut ways = vec![0u128; d + 1];
    ways[0] = 1;
    for _ in 0..n {
        let mut prefix = vec![0u128; d + 2];
        for i in 0..=d {
            prefix[i + 1] = prefix[i] + ways[i];
        }
        if prefix[d + 1] >= COUNT_CEILING {
            return u128::MAX;
        }
        for (t, slot) in ways.iter_mut().enumerate() {
            *slot = prefix[t + 1] - prefix[t.saturating_sub(cap)];
        }
    }
    ways[d]
}

/// `Σ_{k=lo..=hi} C(p, k)`, saturating, with an early exit once the running
/// total already exceeds [`SUBSET_BUDGET`].
fn subsets_required(p: u128, lo: usize, hi: usize) -> u128 {
    if p > u128::from(u64::MAX) {
        return u128::MAX;
    }
    let p64 = p as u64;
    let hi = u128::from(hi as u64).min(p) as u64;
    let mut acc: u128 = 0;
    for k in lo as u64..=hi {
        acc = acc.saturating_add(binomial(p64, k).unwrap_or(u128::MAX));
        if acc > SUBSET_BUDGET {
            break;
        }
    }
    acc
}

/// One pool-index table per variable permutation: entry `i` is the pool
/// position of the permuted image of pool monomial `i`.
fn symmetry_tables(pool: &[Monomial], n: usize) -> Vec<Vec<usize>> {
    (0..n)
        .permutations(n)
        .map(|perm| {
            pool.iter()
                .map(|m| {
                    let image = m.permute_vars(&perm);
                    pool.binary_search_by(|g| revlex_cmp(&image, g))
                        .expect("the pool is closed under variable permutations")
                })
                .collect()
        })
        .collect()
}

fn permuted_mask(mask: u64, table: &[usize]) -> u64 {
    let mut rest = mask;
    let mut out = 0u64;
    while rest != 0 {
        out |= 1u64 << table[rest.trailing_zeros() as usize];
        rest &= rest - 1;
    }
    out
}

/// The orbit representative is the numerically smallest mask; a subset is
/// kept exactly when no permutation maps it to a smaller one. Stateless, so
/// blocks can apply it independently.
fn is_orbit_min(mask: u64, tables: &[Vec<usize>]) -> bool {
    tables.iter().all(|t| permuted_mask(mask, t) >= mask)
}

#[derive(Clone, Copy, Debug)]
enum BlockSpec {
    /// Binary-counter masks in `start..end`.
    MaskRange { start: u64, end: u64 },
    /// All `k`-element index combinations of the pool.
    Cardinality { k: usize },
}

/// A validated, budgeted scan: the pool plus the iteration strategy.
struct Scan {
    n: usize,
    pool: Vec<Monomial>,
    lo: usize,
    hi: usize,
    tables: Option<Vec<Vec<usize>>>,
    counter: bool,
}

impl Scan {
    fn new(spec: &EnumSpec) -> Result<Scan, Error> {
        spec.validate()?;
        let count = pool_count(spec.n, spec.degree, spec.cap);
        let required = subsets_required(count, spec.min_gens, spec.max_gens.unwrap_or(usize::MAX));
        if required > SUBSET_BUDGET {
            return Err(Error::BudgetExceeded {
                required,
                budget: SUBSET_BUDGET,
            });
        }
        if count > POOL_LIMIT {
            return Err(Error::Precondition(format!(
                "pool of {count} monomials exceeds the {POOL_LIMIT}-monomial subset limit; \
                 lower n, the degree, or the cap"
            )));
        }
        let pool = monomial_pool(spec.n, spec.degree, spec.cap);
        assert_eq!(
            pool.len() as u128,
            count,
            "pool generation disagrees with the pool count"
        );
        let tables = spec
            .modulo_symmetry
            .then(|| symmetry_tables(&pool, spec.n));
        Ok(Scan {
            n: spec.n,
            lo: spec.min_gens,
            hi: spec.max_gens.unwrap_or(pool.len()).min(pool.len()),
            counter: pool.len() <= COUNTER_LIMIT,
            pool,
            tables,
        })
    }

    fn blocks(&self) -> Vec<BlockSpec> {
        if self.lo > self.hi {
            return Vec::new();
        }
        if self.counter {
            let total = 1u64 << self.pool.len();
            let mut blocks = Vec::new();
            let mut start = 1;
            while start < total {
                let end = total.min(start + BLOCK_MASKS);
                blocks.push(BlockSpec::MaskRange { start, end });
                start = end;
            }
            blocks
        } else {
            (self.lo..=self.hi)
                .map(|k| BlockSpec::Cardinality { k })
                .collect()
        }
    }

    fn accept(&self, mask: u64) -> Option<MonomialIdeal> {
        let k = mask.count_ones() as usize;
        if k < self.lo || k > self.hi {
            return None;
        }
        if let Some(tables) = &self.tables {
            if !is_orbit_min(mask, tables) {
                return None;
            }
        }
        // Ascending pool indices walk the pool in descending revlex order,
        // and equal-degree subsets are antichains: the subset is already a
        // canonical generating set.
        let gens = (0..self.pool.len())
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| self.pool[i].clone())
            .collect();
        Some(MonomialIdeal::from_canonical_gens(self.n, gens))
    }

    fn run_block(&self, block: &BlockSpec) -> Vec<MonomialIdeal> {
        match *block {
            BlockSpec::MaskRange { start, end } => {
                (start..end).filter_map(|mask| self.accept(mask)).collect()
            }
            BlockSpec::Cardinality { k } => (0..self.pool.len())
                .combinations(k)
                .filter_map(|indices| {
                    let mask = indices.iter().fold(0u64, |m, &i| m | (1 << i));
                    self.accept(mask)
                })
                .collect(),
        }
    }
}

/// Streams every ideal of the search space exactly once, in the canonical
/// scan order (binary counter over the pool, or by ascending generator count
/// for bounded scans over pools larger than 24).
pub fn enumerate_ideals(
    spec: &EnumSpec,
) -> Result<Box<dyn Iterator<Item = MonomialIdeal> + Send>, Error> {
    let scan = Scan::new(spec)?;
    let blocks = scan.blocks();
    Ok(Box::new(
        blocks.into_iter().flat_map(move |b| scan.run_block(&b)),
    ))
}

/// Applies `map` to every enumerated ideal and concatenates the results in
/// canonical scan order. With `workers > 1` the fixed blocks are distributed
/// over a dedicated thread pool; the merged output (and the reported error,
/// if any) is the same for every worker count.
pub(crate) fn scan_fold<T, F>(spec: &EnumSpec, workers: usize, map: F) -> Result<Vec<T>, Error>
where
    T: Send,
    F: Fn(MonomialIdeal) -> Result<Option<T>, Error> + Sync,
{
    let scan = Scan::new(spec)?;
    let blocks = scan.blocks();
    let run = |block: &BlockSpec| -> Result<Vec<T>, Error> {
        let mut out = Vec::new();
        for ideal in scan.run_block(block) {
            if let Some(item) = map(ideal)? {
                out.push(item);
            }
        }
        Ok(out)
    };
    let per_block: Vec<Result<Vec<T>, Error>> = if workers <= 1 {
        blocks.iter().map(run).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .map_err(|e| Error::Precondition(format!("cannot start {workers} workers: {e}")))?;
        pool.install(|| blocks.par_iter().map(run).collect())
    };
    let mut merged = Vec::new();
    for block in per_block {
        merged.extend(block?);
    }
    Ok(merged)
}

/// One enumerated ideal with every computed invariant, as emitted by the
/// census and carried by verification failures.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub ideal: MonomialIdeal,
    pub is_polymatroidal: bool,
    pub is_matroidal: bool,
    pub h: usize,
    pub q: Option<usize>,
    pub linear: bool,
    pub dim: usize,
    pub depth: Option<usize>,
    pub cm: Option<bool>,
    pub verdict: Verdict,
    pub unmixed: bool,
}

/// Column header matching [`CensusRow::tsv_line`].
pub const CENSUS_TSV_HEADER: &str =
    "n\tgens\tis_polymatroidal\tis_matroidal\th\tq\tlinear\tdim\tdepth\tcm\tverdict\tunmixed";

fn opt_col<T: std::fmt::Display>(value: &Option<T>) -> String {
    value
        .as_ref()
        .map_or_else(|| "-".to_string(), T::to_string)
}

impl CensusRow {
    fn gens_column(&self) -> String {
        self.ideal.gens().iter().join(",")
    }

    /// The row as one tab-separated line in the order of
    /// [`CENSUS_TSV_HEADER`]; absent values print as `-`.
    pub fn tsv_line(&self) -> String {
        [
            self.ideal.num_vars().to_string(),
            self.gens_column(),
            self.is_polymatroidal.to_string(),
            self.is_matroidal.to_string(),
            self.h.to_string(),
            opt_col(&self.q),
            self.linear.to_string(),
            self.dim.to_string(),
            opt_col(&self.depth),
            opt_col(&self.cm),
            self.verdict.to_string(),
            self.unmixed.to_string(),
        ]
        .join("\t")
    }
}

impl std::fmt::Display for CensusRow {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "n={} gens={} polymatroidal={} matroidal={} h={} q={} linear={} dim={} depth={} \
             cm={} verdict={} unmixed={}",
            self.ideal.num_vars(),
            self.gens_column(),
            self.is_polymatroidal,
            self.is_matroidal,
            self.h,
            opt_col(&self.q),
            self.linear,
            self.dim,
            opt_col(&self.depth),
            opt_col(&self.cm),
            self.verdict,
            self.unmixed,
        )
    }
}

/// Verdict tallies over one scan.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerdictCounts {
    pub principal: u64,
    pub veronese: u64,
    pub squarefree_veronese: u64,
    pub not_cohen_macaulay: u64,
    pub not_polymatroidal: u64,
}

impl VerdictCounts {
    fn bump(&mut self, verdict: Verdict) {
        match verdict {
            Verdict::Principal => self.principal += 1,
            Verdict::Veronese => self.veronese += 1,
            Verdict::SquarefreeVeronese => self.squarefree_veronese += 1,
            Verdict::NotCohenMacaulay => self.not_cohen_macaulay += 1,
            Verdict::NotPolymatroidal => self.not_polymatroidal += 1,
        }
    }

    /// Ideals that are polymatroidal and Cohen–Macaulay, i.e. carry one of
    /// the three family verdicts.
    pub fn cohen_macaulay(&self) -> u64 {
        self.principal + self.veronese + self.squarefree_veronese
    }

    pub fn total(&self) -> u64 {
        self.cohen_macaulay() + self.not_cohen_macaulay + self.not_polymatroidal
    }
}

/// Outcome of [`verify_classification`]: a violation-free sweep with its
/// verdict tallies. `paths_checked` counts the constructive dual-exchange
/// paths that were built and validated step by step.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub spec: EnumSpec,
    pub ideals_checked: u64,
    pub paths_checked: u64,
    pub counts: VerdictCounts,
    pub elapsed: Duration,
}

/// Outcome of [`census_unmixed`]: how much was scanned and what was kept.
#[derive(Clone, Debug, Serialize)]
pub struct CensusSummary {
    pub spec: EnumSpec,
    pub ideals_scanned: u64,
    pub rows_emitted: u64,
    pub counts: VerdictCounts,
    pub elapsed: Duration,
}

fn row_from(ideal: &MonomialIdeal, c: &crate::classify::Classification) -> CensusRow {
    CensusRow {
        ideal: ideal.clone(),
        is_polymatroidal: c.polymatroidal,
        is_matroidal: c.matroidal,
        h: c.h,
        q: c.q,
        linear: c.linear,
        dim: c.dim,
        depth: c.depth,
        cm: c.cohen_macaulay,
        verdict: c.verdict,
        unmixed: c.unmixed,
    }
}

fn violation(check: impl Into<String>, row: &CensusRow) -> Error {
    Error::Violation {
        check: check.into(),
        row: Box::new(row.clone()),
    }
}

/// Validates every structural claim an [`ExchangePath`] makes: it starts at
/// `v`, moves one exponent unit per step while staying inside the minimal
/// generators, loses exactly one unit of distance to `u` per step, pins the
/// exponent of `x_i`, and ends in a monomial certifying the dual exchange.
fn validate_path(
    ideal: &MonomialIdeal,
    u: &Monomial,
    v: &Monomial,
    i: usize,
    path: &ExchangePath,
) -> Result<(), String> {
    let idx = i - 1;
    if path.steps.first() != Some(v) {
        return Err("path does not start at v".into());
    }
    if path.steps.len() != path.distances.len() {
        return Err("path steps and distances disagree in length".into());
    }
    for (t, step) in path.steps.iter().enumerate() {
        if !ideal.is_generator(step) {
            return Err(format!("path step {t} is not a minimal generator"));
        }
        if path.distances[t] != distance(u, step) {
            return Err(format!("path distance at step {t} is wrong"));
        }
        if t > 0 {
            if path.distances[t] + 1 != path.distances[t - 1] {
                return Err(format!("path distance does not drop by 1 at step {t}"));
            }
            let moved: u64 = path.steps[t - 1]
                .exponents()
                .iter()
                .zip(step.exponents())
                .map(|(&a, &b)| u64::from(a.abs_diff(b)))
                .sum();
            if moved != 2 {
                return Err(format!("step {t} does not move exactly one exponent unit"));
            }
        }
    }
    let last = path.steps.last().expect("path is never empty");
    if last.exponents()[idx] != v.exponents()[idx] {
        return Err("terminal monomial does not pin the exponent at i".into());
    }
    if (0..ideal.num_vars()).any(|j| j != idx && last.exponents()[j] > u.exponents()[j]) {
        return Err("terminal monomial exceeds u away from i".into());
    }
    let w = &path.witness;
    if w.u != *u || w.v != *v || w.i != i {
        return Err("witness does not name (u, v, i)".into());
    }
    let (Some(j), Some(result)) = (w.j, w.result.as_ref()) else {
        return Err("witness of a successful path lacks j or its monomial".into());
    };
    if last.exponents()[j - 1] >= u.exponents()[j - 1] {
        return Err("witness index j is not deficient in the terminal monomial".into());
    }
    if *result != u.shift_unit(j - 1, idx) || !ideal.is_generator(result) {
        return Err("witness monomial is not the generator x_i * u / x_j".into());
    }
    Ok(())
}

/// Runs the full per-ideal obligations and returns the census row plus the
/// number of exchange paths validated.
fn verify_ideal(ideal: &MonomialIdeal) -> Result<(CensusRow, u64), Error> {
    let (classification, consistency) = analyze(ideal)?;
    let row = row_from(ideal, &classification);
    if let Some(message) = consistency {
        return Err(violation(message, &row));
    }
    if minimal_vertex_covers(&radical(ideal))?.h != classification.h {
        return Err(violation("h differs between the ideal and its radical", &row));
    }
    let mut paths = 0u64;
    if classification.polymatroidal {
        if !dual_exchange_check(ideal)?.holds() {
            return Err(violation("dual exchange fails on a polymatroidal ideal", &row));
        }
        for u in ideal.gens() {
            for v in ideal.gens() {
                if u == v {
                    continue;
                }
                for i in 1..=ideal.num_vars() {
                    if u.exponents()[i - 1] >= v.exponents()[i - 1] {
                        continue;
                    }
                    let path = match exchange_path(ideal, u, v, i) {
                        Ok(path) => path,
                        Err(Error::ExchangeAxiomViolated { .. }) => {
                            return Err(violation(
                                format!("no exchange path from {v} toward {u} at x{i}"),
                                &row,
                            ));
                        }
                        Err(other) => return Err(other),
                    };
                    validate_path(ideal, u, v, i, &path)
                        .map_err(|message| violation(message, &row))?;
                    paths += 1;
                }
            }
        }
        if classification.cohen_macaulay == Some(true) {
            let (shrunk, _) = radical(ideal).shrink_to_support();
            if squarefree_veronese_shape(&shrunk)?.is_none() {
                return Err(violation(
                    "radical of a Cohen-Macaulay ideal is not squarefree Veronese",
                    &row,
                ));
            }
        }
    }
    Ok((row, paths))
}

/// Enumerates the whole search space and checks, ideal by ideal, everything
/// the classification asserts: internal consistency of the verdict, linear
/// quotients and the dual exchange for polymatroidal ideals, a validated
/// constructive exchange path for every generator pair and deficient index,
/// the radical statement for the Cohen–Macaulay ones, and cover invariance
/// under radicals. The first violation aborts the sweep as
/// [`Error::Violation`]; a clean sweep reports verdict tallies.
pub fn verify_classification(spec: &EnumSpec, workers: usize) -> Result<VerificationReport, Error> {
    let start = Instant::now();
    let outcomes = scan_fold(spec, workers, |ideal| {
        let (row, paths) = verify_ideal(&ideal)?;
        Ok(Some((row.verdict, paths)))
    })?;
    let mut counts = VerdictCounts::default();
    let mut paths_checked = 0;
    for &(verdict, paths) in &outcomes {
        counts.bump(verdict);
        paths_checked += paths;
    }
    Ok(VerificationReport {
        spec: spec.clone(),
        ideals_checked: outcomes.len() as u64,
        paths_checked,
        counts,
        elapsed: start.elapsed(),
    })
}

/// Enumerates the search space and emits one [`CensusRow`] per polymatroidal,
/// unmixed, non-Cohen–Macaulay ideal: raw data for the open question of
/// classifying the unmixed ones. Inconsistent verdicts abort as violations,
/// exactly as in [`verify_classification`].
pub fn census_unmixed(
    spec: &EnumSpec,
    workers: usize,
) -> Result<(Vec<CensusRow>, CensusSummary), Error> {
    let start = Instant::now();
    let scanned = scan_fold(spec, workers, |ideal| {
        let (classification, consistency) = analyze(&ideal)?;
        let row = row_from(&ideal, &classification);
        if let Some(message) = consistency {
            return Err(violation(message, &row));
        }
        let keep =
            classification.polymatroidal && row.unmixed && classification.cohen_macaulay == Some(false);
        Ok(Some((row, keep)))
    })?;
    let mut counts = VerdictCounts::default();
    let mut rows = Vec::new();
    let ideals_scanned = scanned.len() as u64;
    for (row, keep) in scanned {
        counts.bump(row.verdict);
        if keep {
            rows.push(row);
        }
    }
    let summary = CensusSummary {
        spec: spec.clone(),
        ideals_scanned,
        rows_emitted: rows.len() as u64,
        counts,
        elapsed: start.elapsed(),
    };
    Ok((rows, summary))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    fn collect(spec: &EnumSpec) -> Vec<MonomialIdeal> {
        enumerate_ideals(spec)
            .map_err(|e| e.to_string())
            .unwrap()
            .collect()
    }

    fn expect_rejection(spec: &EnumSpec) -> Error {
        match enumerate_ideals(spec) {
            Ok(_) => panic!("spec should have been rejected: {spec:?}"),
            Err(e) => e,
        }
    }

    #[test]
    fn pool_sizes_match_counting() {
        for (n, d, cap, expect) in [
            (4, 2, 1, 6),
            (3, 2, 2, 6),
            (6, 2, 1, 15),
            (5, 2, 1, 10),
            (2, 3, 3, 4),
            (2, 3, 1, 0),
        ] {
            let pool = monomial_pool(n, d, cap);
            assert_eq!(pool.len(), expect, "pool size for n={n} d={d} cap={cap}");
            assert_eq!(pool_count(n, d, cap), expect as u128);
        }
    }

    #[test]
    fn pool_is_sorted_descending() {
        let pool = monomial_pool(3, 2, 2);
        let expect = vec![
            m(&[2, 0, 0]),
            m(&[1, 1, 0]),
            m(&[0, 2, 0]),
            m(&[1, 0, 1]),
            m(&[0, 1, 1]),
            m(&[0, 0, 2]),
        ];
        assert_eq!(pool, expect);
    }

    #[test]
    fn full_scans_visit_every_nonempty_subset_once() {
        let ideals = collect(&EnumSpec::new(4, 2, 1));
        assert_eq!(ideals.len(), 63);
        let distinct: HashSet<_> = ideals.iter().map(|i| i.gens().to_vec()).collect();
        assert_eq!(distinct.len(), 63);
        assert!(ideals.iter().all(|i| i.is_generated_in_one_degree()));
        assert_eq!(collect(&EnumSpec::new(3, 2, 2)).len(), 63);
        assert_eq!(collect(&EnumSpec::new(6, 2, 1)).len(), 32767);
        assert!(collect(&EnumSpec::new(2, 3, 1)).is_empty());
    }

    #[test]
    fn generator_bounds_restrict_the_scan() {
        let mut spec = EnumSpec::new(4, 2, 1);
        spec.min_gens = 2;
        spec.max_gens = Some(2);
        let ideals = collect(&spec);
        assert_eq!(ideals.len(), 15);
        assert!(ideals.iter().all(|i| i.num_gens() == 2));
        spec.min_gens = 7;
        spec.max_gens = Some(9);
        assert!(collect(&spec).is_empty());
    }

    #[test]
    fn oversized_scans_are_refused() {
        let spec = EnumSpec::new(30, 2, 1);
        assert!(matches!(
            expect_rejection(&spec),
            Error::BudgetExceeded { budget, .. } if budget == SUBSET_BUDGET
        ));
        // Within budget thanks to the bound, but the pool of C(30,2) = 435
        // monomials cannot be indexed by subset masks.
        let mut bounded = spec.clone();
        bounded.max_gens = Some(1);
        assert!(matches!(
            expect_rejection(&bounded),
            Error::Precondition(_)
        ));
    }

    #[test]
    fn bad_specs_are_rejected() {
        for spec in [
            EnumSpec::new(0, 2, 1),
            EnumSpec::new(3, 0, 1),
            EnumSpec::new(3, 2, 0),
            EnumSpec::new(3, 2, 3),
            EnumSpec {
                min_gens: 0,
                ..EnumSpec::new(3, 2, 1)
            },
            EnumSpec {
                min_gens: 3,
                max_gens: Some(2),
                ..EnumSpec::new(3, 2, 1)
            },
            EnumSpec {
                modulo_symmetry: true,
                ..EnumSpec::new(8, 2, 1)
            },
        ] {
            assert!(
                matches!(expect_rejection(&spec), Error::Precondition(_)),
                "spec should be rejected: {spec:?}"
            );
        }
    }

    #[test]
    fn symmetry_reduction_keeps_one_subset_per_orbit() {
        // Graph edge sets up to relabeling: the counts of unlabeled graphs
        // with at least one edge.
        for (n, orbits) in [(3, 3), (4, 10), (5, 33), (6, 155)] {
            let spec = EnumSpec {
                modulo_symmetry: true,
                ..EnumSpec::new(n, 2, 1)
            };
            assert_eq!(collect(&spec).len(), orbits, "orbits for n={n}");
        }
    }

    #[test]
    fn symmetry_orbits_partition_the_space() {
        let spec = EnumSpec {
            modulo_symmetry: true,
            ..EnumSpec::new(3, 2, 1)
        };
        let reps = collect(&spec);
        let mut seen: HashSet<MonomialIdeal> = HashSet::new();
        for rep in &reps {
            for perm in (0..3usize).permutations(3) {
                seen.insert(rep.permute_vars(&perm));
            }
        }
        // The orbits of the representatives cover all 7 subsets exactly.
        assert_eq!(seen.len(), 7);
        assert_eq!(collect(&EnumSpec::new(3, 2, 1)).len(), 7);
    }

    #[test]
    fn worker_count_does_not_change_the_stream() {
        let spec = EnumSpec::new(4, 2, 1);
        let sequential = census_unmixed(&spec, 1).unwrap();
        let parallel = census_unmixed(&spec, 3).unwrap();
        assert_eq!(sequential.0, parallel.0);
        assert_eq!(sequential.1.counts, parallel.1.counts);
        let a = verify_classification(&spec, 1).unwrap();
        let b = verify_classification(&spec, 4).unwrap();
        assert_eq!(a.counts, b.counts);
        assert_eq!(a.paths_checked, b.paths_checked);
        assert_eq!(a.ideals_checked, b.ideals_checked);
    }

    #[test]
    fn verify_small_squarefree_space() {
        let report = verify_classification(&EnumSpec::new(3, 2, 1), 1).unwrap();
        assert_eq!(report.ideals_checked, 7);
        assert_eq!(report.counts.principal, 3);
        assert_eq!(report.counts.squarefree_veronese, 1);
        assert_eq!(report.counts.veronese, 0);
        assert_eq!(report.counts.not_cohen_macaulay, 3);
        assert_eq!(report.counts.not_polymatroidal, 0);
        assert_eq!(report.counts.cohen_macaulay(), 4);
        assert!(report.paths_checked > 0);
    }

    #[test]
    fn verify_two_variable_cubics() {
        let report = verify_classification(&EnumSpec::new(2, 3, 3), 1).unwrap();
        assert_eq!(report.ideals_checked, 15);
        assert_eq!(report.counts.principal, 4);
        assert_eq!(report.counts.veronese, 1);
        assert_eq!(report.counts.squarefree_veronese, 0);
        assert_eq!(report.counts.not_cohen_macaulay, 5);
        assert_eq!(report.counts.not_polymatroidal, 5);
    }

    #[test]
    fn census_is_empty_in_small_squarefree_spaces() {
        let (rows, summary) = census_unmixed(&EnumSpec::new(3, 2, 1), 1).unwrap();
        assert!(rows.is_empty());
        assert_eq!(summary.ideals_scanned, 7);
        let (rows, _) = census_unmixed(&EnumSpec::new(2, 2, 1), 1).unwrap();
        assert!(rows.is_empty());
    }

    #[test]
    fn census_finds_unmixed_non_cm_ideals_in_two_variables() {
        let (rows, summary) = census_unmixed(&EnumSpec::new(2, 3, 3), 1).unwrap();
        assert_eq!(rows.len(), 5);
        assert_eq!(summary.rows_emitted, 5);
        let first =
            MonomialIdeal::new(2, vec![m(&[3, 0]), m(&[2, 1])]).unwrap();
        assert_eq!(rows[0].ideal, first);
        for row in &rows {
            assert!(row.is_polymatroidal && row.unmixed);
            assert_eq!(row.cm, Some(false));
            assert_eq!(row.verdict, Verdict::NotCohenMacaulay);
        }
    }

    #[test]
    fn census_row_renders_one_line() {
        let (rows, _) = census_unmixed(&EnumSpec::new(2, 3, 3), 1).unwrap();
        let row = &rows[0];
        assert_eq!(
            row.tsv_line(),
            "2\tx1^3,x1^2*x2\ttrue\tfalse\t1\t1\ttrue\t1\t0\tfalse\tNotCohenMacaulay\ttrue"
        );
        assert_eq!(
            row.to_string(),
            "n=2 gens=x1^3,x1^2*x2 polymatroidal=true matroidal=false h=1 q=1 linear=true \
             dim=1 depth=0 cm=false verdict=NotCohenMacaulay unmixed=true"
        );
        assert_eq!(CENSUS_TSV_HEADER.split('\t').count(), 12);
        assert_eq!(row.tsv_line().split('\t').count(), 12);
    }
}
