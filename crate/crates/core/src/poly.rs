//! Sparse multivariate polynomials over `Q[t]`: the symmetric algebra S(g).
//!
//! A `SymPoly` is a map from exponent vectors to `Q[t]` coefficients with a
//! graded-lexicographic term order. The representation is canonical (zero
//! coefficients are never stored), so structural equality is polynomial
//! equality. Commutative multiplication and formal partial derivatives are
//! the only calculus the rest of the kernel needs.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};

use crate::rat::{fmt_rat, is_negative, Rat};
use crate::tpoly::TPoly;

/// Exponent vector of a monomial in the generators `X_1 .. X_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mono(pub Vec<u32>);

impl Mono {
    pub fn unit(n: usize) -> Self {
        Mono(vec![0; n])
    }

    pub fn generator(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Mono(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        Mono(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// Flatten to the word `[i, i, .., j, ..]` listing each generator index
    /// with its multiplicity, in increasing index order.
    pub fn to_word(&self) -> Vec<usize> {
        let mut w = Vec::with_capacity(self.degree() as usize);
        for (i, &e) in self.0.iter().enumerate() {
            for _ in 0..e {
                w.push(i);
            }
        }
        w
    }

    pub fn from_word(n: usize, word: &[usize]) -> Mono {
        let mut e = vec![0u32; n];
        for &i in word {
            e[i] += 1;
        }
        Mono(e)
    }
}

/// Graded lexicographic: total degree first, then exponents left to right.
impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Element of S(g) with coefficients in `Q[t]`.
///
/// Plain polynomials over the rationals are the special case where every
/// coefficient is constant in `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymPoly {
    n: usize,
    terms: BTreeMap<Mono, TPoly>,
}

impl SymPoly {
    pub fn zero(n: usize) -> Self {
        SymPoly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        SymPoly::monomial(Mono::unit(n), TPoly::one())
    }

    pub fn constant(n: usize, c: Rat) -> Self {
        SymPoly::monomial(Mono::unit(n), TPoly::constant(c))
    }

    /// The generator `X_i` (zero-based index).
    pub fn generator(n: usize, i: usize) -> Self {
        assert!(i < n, "generator index {i} out of range for {n} generators");
        SymPoly::monomial(Mono::generator(n, i), TPoly::one())
    }

    pub fn monomial(m: Mono, c: TPoly) -> Self {
        let n = m.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        SymPoly { n, terms }
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

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Total degree in the generators, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Mono::degree).max()
    }

    pub fn coeff(&self, m: &Mono) -> TPoly {
        self.terms.get(m).cloned().unwrap_or_else(TPoly::zero)
    }

    fn insert(&mut self, m: Mono, c: TPoly) {
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

    pub fn add(&self, other: &SymPoly) -> SymPoly {
        assert_eq!(self.n, other.n, "generator count mismatch");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &SymPoly) -> SymPoly {
        assert_eq!(self.n, other.n, "generator count mismatch");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert(m.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> SymPoly {
        SymPoly {
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    /// Commutative product in S(g).
    pub fn mul(&self, other: &SymPoly) -> SymPoly {
        assert_eq!(self.n, other.n, "generator count mismatch");
        let mut out = SymPoly::zero(self.n);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.insert(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> SymPoly {
        if c.is_zero() {
            return SymPoly::zero(self.n);
        }
        SymPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a.scale(c)))
                .collect(),
        }
    }

    pub fn scale_t(&self, c: &TPoly) -> SymPoly {
        let mut out = SymPoly::zero(self.n);
        for (m, a) in &self.terms {
            out.insert(m.clone(), a * c);
        }
        out
    }

    /// Formal partial derivative with respect to `X_i` (zero-based).
    pub fn partial(&self, i: usize) -> SymPoly {
        assert!(i < self.n, "generator index {i} out of range");
        let mut out = SymPoly::zero(self.n);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut em = m.clone();
            em.0[i] -= 1;
            out.insert(em, c.scale(&Rat::from_integer(e.into())));
        }
        out
    }

    /// Coefficient of `t^k`, as a polynomial with constant coefficients.
    pub fn t_coefficient(&self, k: usize) -> SymPoly {
        let mut out = SymPoly::zero(self.n);
        for (m, c) in &self.terms {
            out.insert(m.clone(), TPoly::constant(c.coeff(k)));
        }
        out
    }

    /// Highest power of `t` appearing in any coefficient.
    pub fn t_degree(&self) -> usize {
        self.terms
            .values()
            .filter_map(|c| c.degree())
            .max()
            .unwrap_or(0)
    }

    /// Substitute a rational value for `t`.
    pub fn eval_t(&self, t: &Rat) -> SymPoly {
        let mut out = SymPoly::zero(self.n);
        for (m, c) in &self.terms {
            out.insert(m.clone(), TPoly::constant(c.eval(t)));
        }
        out
    }

    /// The terms of total degree exactly `d`.
    pub fn homogeneous_part(&self, d: u32) -> SymPoly {
        SymPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Substitute each generator by a linear combination of new generators:
    /// `X_k := sum_j subst[k][j] * Y_j`. Used by base-change transport.
    pub fn substitute_linear(&self, subst: &[Vec<Rat>]) -> SymPoly {
        assert_eq!(subst.len(), self.n);
        let m = subst.first().map_or(self.n, Vec::len);
        let images: Vec<SymPoly> = subst
            .iter()
            .map(|row| {
                let mut img = SymPoly::zero(m);
                for (j, c) in row.iter().enumerate() {
                    img = img.add(&SymPoly::generator(m, j).scale(c));
                }
                img
            })
            .collect();
        let mut out = SymPoly::zero(m);
        for (mono, c) in &self.terms {
            let mut term = SymPoly::one(m).scale_t(c);
            for (k, &e) in mono.0.iter().enumerate() {
                for _ in 0..e {
                    term = term.mul(&images[k]);
                }
            }
            out = out.add(&term);
        }
        out
    }

    /// Render with the given generator names; deterministic: terms in
    /// descending graded-lex order.
    pub fn display(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let mono_str = mono_display(m, names);
            // A coefficient with several t-terms is printed parenthesized;
            // single-term coefficients join sign-aware.
            let multi = c.term_count() > 1;
            if multi {
                if !first {
                    out.push_str(" + ");
                }
                out.push('(');
                out.push_str(&c.to_string());
                out.push(')');
                if !mono_str.is_empty() {
                    out.push('*');
                    out.push_str(&mono_str);
                }
            } else {
                let low = c.lowest_coeff();
                let neg = is_negative(&low);
                if first {
                    if neg {
                        out.push('-');
                    }
                } else if neg {
                    out.push_str(" - ");
                } else {
                    out.push_str(" + ");
                }
                let mag = low.clone().abs();
                let tk = c.degree().unwrap_or(0);
                let mut parts: Vec<String> = Vec::new();
                if !mag.is_one() || (tk == 0 && mono_str.is_empty()) {
                    parts.push(fmt_rat(&mag));
                }
                if tk == 1 {
                    parts.push("t".to_string());
                } else if tk > 1 {
                    parts.push(format!("t^{tk}"));
                }
                if !mono_str.is_empty() {
                    parts.push(mono_str);
                }
                out.push_str(&parts.join("*"));
            }
            first = false;
        }
        out
    }
}

fn mono_display(m: &Mono, names: &[String]) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.0.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(names[i].clone()),
            _ => parts.push(format!("{}^{}", names[i], e)),
        }
    }
    parts.join("*")
}

/// All monomials in `n` generators of total degree exactly `d`, sorted.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Mono> {
    let mut out = Vec::new();
    let mut current = vec![0u32; n];
    fill(&mut out, &mut current, 0, d);
    out.sort();
    return out;

    fn fill(out: &mut Vec<Mono>, current: &mut Vec<u32>, pos: usize, remaining: u32) {
        if pos + 1 == current.len() {
            current[pos] = remaining;
            out.push(Mono(current.clone()));
            current[pos] = 0;
            return;
        }
        for e in 0..=remaining {
            current[pos] = e;
            fill(out, current, pos + 1, remaining - e);
        }
        current[pos] = 0;
    }
}

/// All monomials of total degree at most `d`, in graded-lex order.
pub fn monomials_up_to(n: usize, d: u32) -> Vec<Mono> {
    let mut out = Vec::new();
    for k in 0..=d {
        out.extend(monomials_of_degree(n, k));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn names3() -> Vec<String> {
        vec!["e".into(), "f".into(), "h".into()]
    }

    #[test]
    fn monomial_product_and_identity() {
        let e = SymPoly::generator(3, 0);
        let f = SymPoly::generator(3, 1);
        let ef = e.mul(&f);
        assert_eq!(ef.display(&names3()), "e*f");
        assert_eq!(e.mul(&SymPoly::one(3)), e);
    }

    #[test]
    fn difference_of_squares() {
        let e = SymPoly::generator(3, 0);
        let f = SymPoly::generator(3, 1);
        let lhs = e.add(&f).mul(&e.sub(&f));
        let rhs = e.mul(&e).sub(&f.mul(&f));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn partial_derivatives() {
        let e = SymPoly::generator(3, 0);
        let f = SymPoly::generator(3, 1);
        // d/de (e^2 f) = 2 e f
        let p = e.mul(&e).mul(&f);
        assert_eq!(p.partial(0), e.mul(&f).scale(&rat(2, 1)));
        // d/dh (e f) = 0
        assert!(e.mul(&f).partial(2).is_zero());
        // d/de d/df (e f) = 1
        assert_eq!(e.mul(&f).partial(1).partial(0), SymPoly::one(3));
    }

    #[test]
    #[should_panic(expected = "out of range")]
    fn partial_index_out_of_range() {
        SymPoly::one(3).partial(3);
    }

    #[test]
    fn monomial_enumeration_counts() {
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_up_to(3, 2).len(), 10);
        assert_eq!(monomials_up_to(2, 3).len(), 10);
        let ms = monomials_up_to(3, 2);
        let mut sorted = ms.clone();
        sorted.sort();
        assert_eq!(ms, sorted);
    }

    #[test]
    fn substitution_is_ring_homomorphism() {
        // X0 -> Y0 + Y1, X1 -> 2 Y1 in two variables.
        let subst = vec![
            vec![rat(1, 1), rat(1, 1)],
            vec![rat(0, 1), rat(2, 1)],
        ];
        let x0 = SymPoly::generator(2, 0);
        let x1 = SymPoly::generator(2, 1);
        let p = x0.mul(&x1); // X0 X1
        let img = p.substitute_linear(&subst);
        let y0 = SymPoly::generator(2, 0);
        let y1 = SymPoly::generator(2, 1);
        let expect = y0.add(&y1).mul(&y1.scale(&rat(2, 1)));
        assert_eq!(img, expect);
    }

    #[test]
    fn display_is_sign_aware() {
        let e = SymPoly::generator(3, 0);
        let h = SymPoly::generator(3, 2);
        let p = e.mul(&e).sub(&h.scale(&rat(1, 2)));
        assert_eq!(p.display(&names3()), "e^2 - 1/2*h");
    }
}
