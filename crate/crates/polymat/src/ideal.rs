//! Monomial ideals represented by their minimal generating set.
//!
//! A [`MonomialIdeal`] always stores the canonical form of its generators:
//! duplicate-free, a divisibility antichain (no generator divides another),
//! and sorted descending in the reverse-lexicographic order. Two values are
//! equal as Rust values exactly when they are equal as ideals.

use std::fmt;

use crate::error::{Degeneracy, Error};
use crate::monomial::{revlex_cmp, Monomial};

/// A monomial ideal in `k[x1..xn]`, held as its unique minimal generating set.
///
/// The zero ideal (no generators) and the unit ideal (generated by 1) are
/// representable so parsing and set arithmetic stay total; the invariant
/// computations reject them with [`Error::Degenerate`].
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

/// Reduces a raw generator list to the minimal generating set of the ideal it
/// spans: duplicates are removed and a monomial is dropped exactly when a
/// distinct remaining monomial divides it. The result is sorted descending in
/// reverse-lexicographic order.
pub fn minimal_generators(mut raw: Vec<Monomial>) -> Vec<Monomial> {
    // Ascending revlex sorts by degree first, so every proper divisor of a
    // monomial precedes it and one forward pass suffices.
    raw.sort_by(revlex_cmp);
    raw.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(raw.len());
    for m in raw {
        if !kept.iter().any(|g| g.divides(&m)) {
            kept.push(m);
        }
    }
    kept.reverse();
    kept
}

impl MonomialIdeal {
    /// Builds the ideal generated by `raw`, minimalizing to canonical form.
    ///
    /// Fails with [`Error::LengthMismatch`] when a generator's exponent vector
    /// does not have length `n`.
    pub fn new(n: usize, raw: Vec<Monomial>) -> Result<Self, Error> {
        for g in &raw {
            if g.num_vars() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    found: g.num_vars(),
                });
            }
        }
        Ok(MonomialIdeal {
            n,
            gens: minimal_generators(raw),
        })
    }

    /// The zero ideal in `n` variables.
    pub fn zero(n: usize) -> Self {
        MonomialIdeal { n, gens: Vec::new() }
    }

    /// The whole ring, generated by 1.
    pub fn unit(n: usize) -> Self {
        MonomialIdeal {
            n,
            gens: vec![Monomial::one(n)],
        }
    }

    /// Wraps generators that are already duplicate-free, antichain and sorted
    /// descending revlex, skipping the minimalization pass.
    pub(crate) fn from_canonical_gens(n: usize, gens: Vec<Monomial>) -> Self {
        debug_assert!(gens.iter().all(|g| g.num_vars() == n));
        debug_assert!(gens
            .windows(2)
            .all(|w| revlex_cmp(&w[0], &w[1]) == std::cmp::Ordering::Greater));
        debug_assert_eq!(minimal_generators(gens.clone()), gens);
        MonomialIdeal { n, gens }
    }

    /// Number of ambient variables.
    pub fn num_vars(&self) -> usize {
        self.n
    }

    /// The minimal generators, sorted descending in reverse-lexicographic
    /// order.
    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    /// Whether `m` is one of the minimal generators.
    pub fn is_generator(&self, m: &Monomial) -> bool {
        if m.num_vars() != self.n {
            return false;
        }
        // Generators are sorted descending revlex.
        self.gens
            .binary_search_by(|g| revlex_cmp(m, g))
            .is_ok()
    }

    /// Whether all generators share one total degree. Vacuously true for the
    /// zero ideal.
    pub fn is_generated_in_one_degree(&self) -> bool {
        match self.gens.split_first() {
            None => true,
            Some((first, rest)) => {
                let d = first.degree();
                rest.iter().all(|g| g.degree() == d)
            }
        }
    }

    /// The common generator degree, when the ideal is nonzero and generated
    /// in one degree.
    pub fn common_degree(&self) -> Option<u64> {
        let d = self.gens.first()?.degree();
        self.is_generated_in_one_degree().then_some(d)
    }

    /// The 1-based indices of all variables dividing some generator,
    /// ascending.
    pub fn support_union(&self) -> Vec<usize> {
        let mut used = vec![false; self.n];
        for g in &self.gens {
            for (i, &e) in g.exponents().iter().enumerate() {
                if e > 0 {
                    used[i] = true;
                }
            }
        }
        used.iter()
            .enumerate()
            .filter(|(_, &u)| u)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Renames away the variables dividing no generator. Returns the shrunk
    /// ideal together with the kept variables: entry `j` of the vector is the
    /// original 1-based index now called `x{j+1}`.
    ///
    /// Dropping all-zero exponent positions preserves the reverse-
    /// lexicographic order, so the generators stay canonical.
    pub fn shrink_to_support(&self) -> (MonomialIdeal, Vec<usize>) {
        let kept = self.support_union();
        let mut position = vec![usize::MAX; self.n];
        for (new, &old) in kept.iter().enumerate() {
            position[old - 1] = new;
        }
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut exps = vec![0; kept.len()];
                for (i, &e) in g.exponents().iter().enumerate() {
                    if e > 0 {
                        exps[position[i]] = e;
                    }
                }
                Monomial::new(exps)
            })
            .collect();
        (
            MonomialIdeal::from_canonical_gens(kept.len(), gens),
            kept,
        )
    }

    /// Applies a variable renaming to every generator and restores canonical
    /// order. `perm` maps 0-based positions as in [`Monomial::permute_vars`].
    pub fn permute_vars(&self, perm: &[usize]) -> MonomialIdeal {
        let mut gens: Vec<Monomial> = self.gens.iter().map(|g| g.permute_vars(perm)).collect();
        gens.sort_by(|a, b| revlex_cmp(b, a));
        MonomialIdeal { n: self.n, gens }
    }

    /// Rejects the zero and unit ideals.
    pub(crate) fn ensure_proper(&self) -> Result<(), Error> {
        if self.is_zero() {
            return Err(Error::Degenerate(Degeneracy::Zero));
        }
        if self.is_unit() {
            return Err(Error::Degenerate(Degeneracy::Unit));
        }
        Ok(())
    }

    /// Rejects degenerate ideals and mixed generator degrees; returns the
    /// common degree.
    pub(crate) fn ensure_equigenerated(&self) -> Result<u64, Error> {
        self.ensure_proper()?;
        self.common_degree().ok_or(Error::NotEquigenerated)
    }
}

impl fmt::Display for MonomialIdeal {
    /// Renders the textual file format: a `n=<count>` header line followed by
    /// one generator per line in canonical order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n={}", self.n)?;
        for g in &self.gens {
            writeln!(f, "{g}")?;
        }
        Ok(())
    }
}

impl serde::Serialize for MonomialIdeal {
    /// Serializes to the same shape as the structured file format:
    /// `{"n": …, "gens": [[exponents…], …]}`.
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut state = serializer.serialize_struct("MonomialIdeal", 2)?;
        state.serialize_field("n", &self.n)?;
        let exps: Vec<&[u32]> = self.gens.iter().map(Monomial::exponents).collect();
        state.serialize_field("gens", &exps)?;
        state.end()
    }
}
