//! The one-parameter enveloping algebra U_t(g) in PBW normal form.
//!
//! Elements are stored on the ordered monomial basis
//! `X_1^{e1} .. X_n^{en}` with coefficients in `Q[t]`. Multiplication
//! normal-orders words with the rewrite
//! `X_j X_i -> X_i X_j + t * sum_k c^k_ji X_k` for `j > i`; every swap
//! either lowers the inversion count at fixed length or shortens the word,
//! so the rewriting terminates, and the PBW theorem makes the result
//! independent of the rewrite order. Setting `t = 0` recovers S(g) and
//! `t = 1` the ordinary enveloping algebra.

use std::collections::BTreeMap;

use num_traits::One;

use crate::lie::LieAlgebra;
use crate::poly::{Mono, SymPoly};
use crate::rat::Rat;
use crate::tpoly::TPoly;

/// Element of U_t(g) in PBW normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UEElement {
    n: usize,
    terms: BTreeMap<Mono, TPoly>,
}

impl UEElement {
    pub fn zero(n: usize) -> Self {
        UEElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Mono::unit(n), TPoly::one());
        UEElement { n, terms }
    }

    pub fn generator(n: usize, i: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Mono::generator(n, i), TPoly::one());
        UEElement { n, terms }
    }

    pub fn gens(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &TPoly)> {
        self.terms.iter()
    }

    pub(crate) fn insert(&mut self, m: Mono, c: TPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &UEElement) -> UEElement {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &UEElement) -> UEElement {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert(m.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> UEElement {
        UEElement {
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> UEElement {
        self.scale_t(&TPoly::constant(c.clone()))
    }

    pub fn scale_t(&self, c: &TPoly) -> UEElement {
        let mut out = UEElement::zero(self.n);
        for (m, a) in &self.terms {
            out.insert(m.clone(), a * c);
        }
        out
    }

    /// Total degree of the highest normal-form monomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Mono::degree).max()
    }

    /// The coefficients and exponents read verbatim as an S(g) element
    /// (the associated-graded symbol map on normal forms).
    pub fn as_symbol(&self) -> SymPoly {
        let mut out = SymPoly::zero(self.n);
        for (m, c) in &self.terms {
            out = out.add(&SymPoly::monomial(m.clone(), c.clone()));
        }
        out
    }

    /// Interpret a commutative polynomial as the normal-form element with
    /// the same coefficients.
    pub fn from_symbol(a: &SymPoly) -> UEElement {
        let mut out = UEElement::zero(a.gens());
        for (m, c) in a.terms() {
            out.insert(m.clone(), c.clone());
        }
        out
    }

    /// Substitute a rational value for `t` (e.g. 1 for U(g) output).
    pub fn eval_t(&self, t: &Rat) -> UEElement {
        let mut out = UEElement::zero(self.n);
        for (m, c) in &self.terms {
            out.insert(m.clone(), TPoly::constant(c.eval(t)));
        }
        out
    }

    /// Exact division of every coefficient by `t`; panics unless every
    /// coefficient vanishes at `t = 0` (commutators always do).
    pub fn div_t_exact(&self) -> UEElement {
        UEElement {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.div_t_exact()))
                .collect(),
        }
    }

    /// Terms of total degree exactly `d`, as a symbol polynomial.
    fn symbol_of_degree(&self, d: u32) -> SymPoly {
        let mut out = SymPoly::zero(self.n);
        for (m, c) in &self.terms {
            if m.degree() == d {
                out = out.add(&SymPoly::monomial(m.clone(), c.clone()));
            }
        }
        out
    }

    pub fn display(&self, names: &[String]) -> String {
        self.as_symbol().display(names)
    }
}

/// Work set of unordered words awaiting normalization, with like words
/// merged eagerly so the rewrite tree never branches into duplicates.
/// Keys sort by (length, word), and words are drained longest first:
/// rewriting a length-L word only produces lexicographically smaller
/// length-L words and length-(L-1) corrections, so every distinct word is
/// rewritten at most once.
type Pending = BTreeMap<(usize, Vec<usize>), TPoly>;

fn merge_pending(pending: &mut Pending, word: Vec<usize>, coeff: TPoly) {
    if coeff.is_zero() {
        return;
    }
    match pending.entry((word.len(), word)) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(coeff);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let s = e.get() + &coeff;
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

/// Drain the pending set, rewriting the leftmost inversion of each word
/// with `X_j X_i = X_i X_j + t [X_j, X_i]` until all words are ordered.
fn normalize_pending(lie: &LieAlgebra, mut pending: Pending) -> UEElement {
    let mut acc = UEElement::zero(lie.dim());
    while let Some(((_, w), c)) = pending.pop_last() {
        match (0..w.len().saturating_sub(1)).find(|&p| w[p] > w[p + 1]) {
            None => acc.insert(Mono::from_word(lie.dim(), &w), c),
            Some(p) => {
                for (k, v) in lie.bracket_terms(w[p], w[p + 1]) {
                    let mut shorter = Vec::with_capacity(w.len() - 1);
                    shorter.extend_from_slice(&w[..p]);
                    shorter.push(*k);
                    shorter.extend_from_slice(&w[p + 2..]);
                    merge_pending(&mut pending, shorter, &c * &TPoly::t_power(v.clone(), 1));
                }
                let mut swapped = w;
                swapped.swap(p, p + 1);
                merge_pending(&mut pending, swapped, c);
            }
        }
    }
    acc
}

/// PBW symmetrization of a single monomial: the average of its distinct
/// letter arrangements weighted by multiplicity.
pub(crate) fn symmetrize_mono(lie: &LieAlgebra, m: &Mono) -> UEElement {
    let n = lie.dim();
    let deg = m.degree() as u64;
    let mut out = UEElement::zero(n);
    if deg == 0 {
        out.insert(m.clone(), TPoly::one());
        return out;
    }
    // weight = (prod e_i!) / deg!: each distinct arrangement stands for
    // prod e_i! of the deg! permutations.
    let mut weight = Rat::one();
    for &e in &m.0 {
        for v in 1..=e as u64 {
            weight *= Rat::from_integer(v.into());
        }
    }
    for v in 1..=deg {
        weight /= Rat::from_integer(v.into());
    }
    let coeff = TPoly::constant(weight);
    let mut pending = Pending::new();
    let mut word = m.to_word();
    loop {
        merge_pending(&mut pending, word.clone(), coeff.clone());
        if !next_permutation(&mut word) {
            break;
        }
    }
    out.add(&normalize_pending(lie, pending))
}

/// In-place next lexicographic permutation; false when exhausted.
fn next_permutation(w: &mut [usize]) -> bool {
    if w.len() < 2 {
        return false;
    }
    let Some(i) = (0..w.len() - 1).rev().find(|&i| w[i] < w[i + 1]) else {
        return false;
    };
    let j = (i + 1..w.len()).rev().find(|&j| w[j] > w[i]).unwrap();
    w.swap(i, j);
    w[i + 1..].reverse();
    true
}

/// Filtration-descending inverse of the symmetrization map: peel the top
/// symbol, subtract its symmetrization, recurse on the strictly lower
/// degree remainder.
pub(crate) fn pbw_inverse_with(
    lie: &LieAlgebra,
    u: &UEElement,
    sym: &mut dyn FnMut(&Mono) -> UEElement,
) -> SymPoly {
    let mut result = SymPoly::zero(lie.dim());
    let mut rem = u.clone();
    while let Some(d) = rem.degree() {
        let top = rem.symbol_of_degree(d);
        if top.is_zero() {
            break;
        }
        let mut sym_top = UEElement::zero(lie.dim());
        for (m, c) in top.terms() {
            sym_top = sym_top.add(&sym(m).scale_t(c));
        }
        rem = rem.sub(&sym_top);
        result = result.add(&top);
        debug_assert!(rem.degree().is_none_or(|d2| d2 < d));
    }
    result
}

impl LieAlgebra {
    /// Product in U_t(g), normal-ordering the concatenated words.
    pub fn ue_mul(&self, u: &UEElement, v: &UEElement) -> UEElement {
        assert_eq!(u.gens(), self.dim());
        assert_eq!(v.gens(), self.dim());
        let mut pending = Pending::new();
        for (mu, cu) in u.terms() {
            let wu = mu.to_word();
            for (mv, cv) in v.terms() {
                let mut word = wu.clone();
                word.extend(mv.to_word());
                merge_pending(&mut pending, word, cu * cv);
            }
        }
        normalize_pending(self, pending)
    }

    /// `u v - v u` in U_t(g).
    pub fn ue_commutator(&self, u: &UEElement, v: &UEElement) -> UEElement {
        self.ue_mul(u, v).sub(&self.ue_mul(v, u))
    }

    /// PBW symmetrization `S(g) -> U_t(g)`.
    pub fn pbw_symmetrize(&self, a: &SymPoly) -> UEElement {
        let mut out = UEElement::zero(self.dim());
        for (m, c) in a.terms() {
            out = out.add(&symmetrize_mono(self, m).scale_t(c));
        }
        out
    }

    /// Inverse of [`LieAlgebra::pbw_symmetrize`].
    pub fn pbw_inverse(&self, u: &UEElement) -> SymPoly {
        pbw_inverse_with(self, u, &mut |m| symmetrize_mono(self, m))
    }
}
