//! Exponent-vector monomials and the degree-reverse-lexicographic order.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

/// Largest exponent a single variable may carry. Arithmetic that would push
/// an exponent past this cap panics rather than wrapping.
pub const EXP_CAP: u32 = i32::MAX as u32;

/// A monomial in a fixed polynomial ring `k[x1..xn]`, stored as its exponent
/// vector. The ambient variable count is the vector length; all arithmetic
/// requires both operands to live in the same ring.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    /// Builds a monomial from its exponent vector.
    ///
    /// Panics if any exponent exceeds [`EXP_CAP`].
    pub fn new(exps: Vec<u32>) -> Self {
        assert!(
            exps.iter().all(|&e| e <= EXP_CAP),
            "exponent exceeds cap {EXP_CAP}"
        );
        Monomial { exps }
    }

    /// The unit monomial 1 in `n` variables.
    pub fn one(n: usize) -> Self {
        Monomial { exps: vec![0; n] }
    }

    /// The variable `x_index` (1-based) in `n` variables.
    ///
    /// Panics if `index` is not in `1..=n`.
    pub fn variable(index: usize, n: usize) -> Self {
        assert!(
            (1..=n).contains(&index),
            "variable index {index} out of range 1..={n}"
        );
        let mut exps = vec![0; n];
        exps[index - 1] = 1;
        Monomial { exps }
    }

    /// Number of ambient variables.
    pub fn num_vars(&self) -> usize {
        self.exps.len()
    }

    /// The exponent vector, indexed from 0.
    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    /// Total degree.
    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// The 1-based indices of the variables dividing this monomial, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Whether `self` divides `other` componentwise.
    ///
    /// Panics if the ambient variable counts differ.
    pub fn divides(&self, other: &Self) -> bool {
        assert_eq!(
            self.exps.len(),
            other.exps.len(),
            "monomials live in different rings"
        );
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// The product `self * other`.
    ///
    /// Panics if the ambient variable counts differ or an exponent would
    /// exceed [`EXP_CAP`].
    pub fn multiply(&self, other: &Self) -> Self {
        assert_eq!(
            self.exps.len(),
            other.exps.len(),
            "monomials live in different rings"
        );
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| {
                let sum = a.checked_add(*b).expect("exponent overflow");
                assert!(sum <= EXP_CAP, "exponent exceeds cap {EXP_CAP}");
                sum
            })
            .collect();
        Monomial { exps }
    }

    /// The quotient `self / other`, or `None` when `other` does not divide
    /// `self`. Panics if the ambient variable counts differ.
    pub fn divide(&self, other: &Self) -> Option<Self> {
        if !other.divides(self) {
            return None;
        }
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect();
        Some(Monomial { exps })
    }

    /// Componentwise minimum, i.e. the greatest common divisor.
    ///
    /// Panics if the ambient variable counts differ.
    pub fn gcd(&self, other: &Self) -> Self {
        assert_eq!(
            self.exps.len(),
            other.exps.len(),
            "monomials live in different rings"
        );
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.min(b))
            .collect();
        Monomial { exps }
    }

    /// The squarefree monomial with the same support.
    pub fn squarefree_part(&self) -> Self {
        Monomial {
            exps: self.exps.iter().map(|&e| e.min(1)).collect(),
        }
    }

    /// Renames variables: the exponent at position `i` moves to position
    /// `perm[i]`. `perm` must be a permutation of `0..n`.
    pub fn permute_vars(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.exps.len(), "permutation length mismatch");
        let mut exps = vec![0; self.exps.len()];
        for (i, &target) in perm.iter().enumerate() {
            debug_assert_eq!(exps[target], 0, "perm is not a permutation");
            exps[target] = self.exps[i];
        }
        Monomial { exps }
    }

    /// Moves one unit of exponent from position `from` to position `to`
    /// (0-based), i.e. multiplies by `x_to / x_from`.
    pub(crate) fn shift_unit(&self, from: usize, to: usize) -> Self {
        debug_assert!(self.exps[from] >= 1);
        debug_assert!(self.exps[to] < EXP_CAP);
        let mut exps = self.exps.clone();
        exps[from] -= 1;
        exps[to] += 1;
        Monomial { exps }
    }
}

/// Compares in the degree-reverse-lexicographic order induced by
/// `x1 > x2 > ... > xn`: `u` is smaller than `v` when `deg u < deg v`, or the
/// degrees agree and at the *last* index where the exponent vectors differ the
/// exponent of `u` is *strictly greater*. So for n = 2:
/// `x1^2 > x1*x2 > x2^2`.
///
/// Panics if the ambient variable counts differ.
pub fn revlex_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    assert_eq!(
        a.exps.len(),
        b.exps.len(),
        "monomials live in different rings"
    );
    match a.degree().cmp(&b.degree()) {
        Ordering::Equal => {}
        ord => return ord,
    }
    for (ea, eb) in a.exps.iter().zip(&b.exps).rev() {
        match ea.cmp(eb) {
            Ordering::Equal => continue,
            // Greater exponent at the last differing index means smaller.
            Ordering::Greater => return Ordering::Less,
            Ordering::Less => return Ordering::Greater,
        }
    }
    Ordering::Equal
}

/// `true` when `a` precedes `b` strictly in the reverse-lexicographic order.
pub fn revlex_less(a: &Monomial, b: &Monomial) -> bool {
    revlex_cmp(a, b) == Ordering::Less
}

impl fmt::Display for Monomial {
    /// Renders in the textual grammar: `1` for the unit, otherwise `*`-joined
    /// factors `x<i>` or `x<i>^<e>` with ascending variable index.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
