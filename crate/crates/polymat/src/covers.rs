//! Minimal vertex covers of the support hypergraph.
//!
//! The support hypergraph of a nonzero proper monomial ideal has the ambient
//! variables as vertices and the generator supports as edges. A vertex cover
//! (transversal) meets every edge; the cover number `h` is the least size of
//! a cover, the quotient ring dimension is `n - h`, and the ideal is unmixed
//! when all inclusion-minimal covers share one cardinality.

use std::collections::BTreeSet;

use crate::error::Error;
use crate::ideal::MonomialIdeal;

/// Everything the cover enumeration establishes about one ideal.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct CoverReport {
    /// Every inclusion-minimal vertex cover as ascending 1-based variable
    /// indices; the list itself is sorted lexicographically.
    pub minimal_covers: Vec<Vec<usize>>,
    /// Cardinality of the smallest cover.
    pub h: usize,
    /// Whether all minimal covers share one cardinality.
    pub unmixed: bool,
    /// Krull dimension of the quotient ring, `n - h`.
    pub dim: usize,
}

/// Whether the 1-based variable set `vars` meets the support of every
/// generator. Fails on degenerate ideals and out-of-range indices.
pub fn is_vertex_cover(ideal: &MonomialIdeal, vars: &[usize]) -> Result<bool, Error> {
    ideal.ensure_proper()?;
    let n = ideal.num_vars();
    let mut member = vec![false; n];
    for &v in vars {
        if v == 0 || v > n {
            return Err(Error::VariableOutOfRange { index: v, n });
        }
        member[v - 1] = true;
    }
    Ok(ideal
        .gens()
        .iter()
        .all(|g| g.exponents().iter().zip(&member).any(|(&e, &m)| e > 0 && m)))
}

/// 0-based generator supports, deduplicated and reduced to the inclusion-
/// minimal edges (a transversal of the minimal edges covers every edge).
fn minimal_edges(ideal: &MonomialIdeal) -> Vec<Vec<usize>> {
    let mut edges: Vec<Vec<usize>> = ideal
        .gens()
        .iter()
        .map(|g| g.support().iter().map(|v| v - 1).collect())
        .collect();
    edges.sort_by_key(|e| e.len());
    edges.dedup();
    let mut kept: Vec<Vec<usize>> = Vec::new();
    for e in edges {
        if !kept
            .iter()
            .any(|small| small.iter().all(|v| e.binary_search(v).is_ok()))
        {
            kept.push(e);
        }
    }
    kept
}

/// Depth-first branching on an uncovered edge. Every minimal transversal is
/// reached along some branch; non-minimal candidates are filtered out by the
/// private-edge test before insertion.
fn branch(
    edges: &[Vec<usize>],
    uncovered: &[usize],
    member: &mut Vec<bool>,
    chosen: &mut Vec<usize>,
    out: &mut BTreeSet<Vec<usize>>,
) {
    let Some(&edge_idx) = uncovered.iter().min_by_key(|&&i| edges[i].len()) else {
        // `chosen` is a transversal; keep it only if every vertex has a
        // private edge, i.e. no vertex can be removed.
        let minimal = chosen.iter().all(|&v| {
            edges
                .iter()
                .any(|e| e.contains(&v) && e.iter().all(|&w| w == v || !member[w]))
        });
        if minimal {
            let mut cover: Vec<usize> = chosen.iter().map(|&v| v + 1).collect();
            cover.sort_unstable();
            out.insert(cover);
        }
        return;
    };
    for &v in &edges[edge_idx] {
        member[v] = true;
        chosen.push(v);
        let remaining: Vec<usize> = uncovered
            .iter()
            .copied()
            .filter(|&i| !edges[i].contains(&v))
            .collect();
        branch(edges, &remaining, member, chosen, out);
        chosen.pop();
        member[v] = false;
    }
}

/// Enumerates every inclusion-minimal vertex cover of the support hypergraph.
pub fn minimal_vertex_covers(ideal: &MonomialIdeal) -> Result<CoverReport, Error> {
    ideal.ensure_proper()?;
    let n = ideal.num_vars();
    let edges = minimal_edges(ideal);
    let mut out = BTreeSet::new();
    let all: Vec<usize> = (0..edges.len()).collect();
    branch(
        &edges,
        &all,
        &mut vec![false; n],
        &mut Vec::new(),
        &mut out,
    );
    let minimal_covers: Vec<Vec<usize>> = out.into_iter().collect();
    debug_assert!(!minimal_covers.is_empty());
    let h = minimal_covers.iter().map(Vec::len).min().unwrap_or(0);
    let unmixed = minimal_covers.iter().all(|c| c.len() == h);
    Ok(CoverReport {
        h,
        unmixed,
        dim: n - h,
        minimal_covers,
    })
}

/// Krull dimension of the quotient ring, `n - h`.
pub fn dim_quotient(ideal: &MonomialIdeal) -> Result<usize, Error> {
    Ok(minimal_vertex_covers(ideal)?.dim)
}
