//! The PBW star product on S(g) and its deformation expansion.
//!
//! `a *_t b` pulls the U_t(g) multiplication back through the
//! symmetrization map, so it is associative by construction and reduces to
//! the commutative product at `t = 0`. For polynomial inputs the expansion
//! in `t` terminates, and the coefficient of `t^k` is the k-th deformation
//! term `m_k(a, b)`. The closed second-order form and its rescaling `phi`
//! are implemented independently so the two routes can be compared exactly.

use std::collections::HashMap;
use std::sync::RwLock;

use crate::lie::LieAlgebra;
use crate::poly::{Mono, SymPoly};
use crate::rat::{rat, Rat};
use crate::ue::{pbw_inverse_with, symmetrize_mono, UEElement};

/// Finite `t`-expansion of a star product value: entry `k` is `m_k(a, b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarExpansion {
    pub coefficients: Vec<SymPoly>,
}

impl LieAlgebra {
    /// `a *_t b = I^-1(I(a) I(b))` with `I` the PBW symmetrization.
    pub fn star_product(&self, a: &SymPoly, b: &SymPoly) -> SymPoly {
        let u = self.ue_mul(&self.pbw_symmetrize(a), &self.pbw_symmetrize(b));
        self.pbw_inverse(&u)
    }

    /// Coefficient of `t^k` in `a *_t b`.
    pub fn star_coefficient(&self, a: &SymPoly, b: &SymPoly, k: usize) -> SymPoly {
        self.star_product(a, b).t_coefficient(k)
    }

    /// All deformation terms of `a *_t b` (finitely many for polynomials).
    pub fn star_expansion(&self, a: &SymPoly, b: &SymPoly) -> StarExpansion {
        let s = self.star_product(a, b);
        let coefficients = (0..=s.t_degree()).map(|k| s.t_coefficient(k)).collect();
        StarExpansion { coefficients }
    }

    /// Closed form of the second deformation term:
    /// `(1/8) c^s_ij c^t_kl X_s X_t d^i d^k a d^j d^l b
    ///  + (1/12) c^t_ks c^s_ji X_t (d^k d^j a d^i b + d^i a d^k d^j b)`.
    pub fn m2_closed_form(&self, a: &SymPoly, b: &SymPoly) -> SymPoly {
        self.order_two_form(a, b, &rat(1, 8), &rat(1, 12))
    }

    /// The same bilinear form with weights `(1/2, 1/3)`; equal to four times
    /// [`LieAlgebra::m2_closed_form`].
    pub fn phi_closed_form(&self, a: &SymPoly, b: &SymPoly) -> SymPoly {
        self.order_two_form(a, b, &rat(1, 2), &rat(1, 3))
    }

    fn order_two_form(&self, a: &SymPoly, b: &SymPoly, w1: &Rat, w2: &Rat) -> SymPoly {
        let n = self.dim();
        assert_eq!(a.gens(), n);
        assert_eq!(b.gens(), n);
        let mut out = SymPoly::zero(n);

        // First summand: pairs of structure constants contracted against
        // second derivatives of both arguments.
        for i in 0..n {
            for j in 0..n {
                for (s, c1) in self.bracket_terms(i, j) {
                    for k in 0..n {
                        let daik = a.partial(i).partial(k);
                        if daik.is_zero() {
                            continue;
                        }
                        for l in 0..n {
                            for (t, c2) in self.bracket_terms(k, l) {
                                let dbjl = b.partial(j).partial(l);
                                if dbjl.is_zero() {
                                    continue;
                                }
                                let xs = self.gen_poly(*s).mul(&self.gen_poly(*t));
                                let w = w1 * c1 * c2;
                                out = out.add(&xs.mul(&daik).mul(&dbjl).scale(&w));
                            }
                        }
                    }
                }
            }
        }

        // Second summand: c^t_ks c^s_ji X_t (d^k d^j a d^i b + d^i a d^k d^j b).
        for j in 0..n {
            for i in 0..n {
                for (s, c1) in self.bracket_terms(j, i) {
                    for k in 0..n {
                        for (t, c2) in self.bracket_terms(k, *s) {
                            let xt = self.gen_poly(*t);
                            let w = w2 * c2 * c1;
                            let t1 = a.partial(k).partial(j).mul(&b.partial(i));
                            let t2 = a.partial(i).mul(&b.partial(k).partial(j));
                            out = out.add(&xt.mul(&t1.add(&t2)).scale(&w));
                        }
                    }
                }
            }
        }
        out
    }
}

/// Memoized star-product evaluation.
///
/// Star products are bilinear, so every polynomial product reduces to
/// monomial pairs; those and the per-monomial symmetrizations are the
/// expensive part and recur constantly in the identity suites. The cache is
/// safe to share across suite workers.
#[derive(Default)]
pub struct StarCache {
    sym: RwLock<HashMap<Mono, UEElement>>,
    star: RwLock<HashMap<(Mono, Mono), SymPoly>>,
}

impl StarCache {
    pub fn new() -> Self {
        StarCache::default()
    }

    fn symmetrize_mono(&self, lie: &LieAlgebra, m: &Mono) -> UEElement {
        if let Some(hit) = self.sym.read().unwrap().get(m) {
            return hit.clone();
        }
        let val = symmetrize_mono(lie, m);
        self.sym
            .write()
            .unwrap()
            .entry(m.clone())
            .or_insert_with(|| val.clone());
        val
    }

    pub fn pbw_symmetrize(&self, lie: &LieAlgebra, a: &SymPoly) -> UEElement {
        let mut out = UEElement::zero(lie.dim());
        for (m, c) in a.terms() {
            out = out.add(&self.symmetrize_mono(lie, m).scale_t(c));
        }
        out
    }

    pub fn pbw_inverse(&self, lie: &LieAlgebra, u: &UEElement) -> SymPoly {
        pbw_inverse_with(lie, u, &mut |m| self.symmetrize_mono(lie, m))
    }

    fn star_mono(&self, lie: &LieAlgebra, ma: &Mono, mb: &Mono) -> SymPoly {
        let key = (ma.clone(), mb.clone());
        if let Some(hit) = self.star.read().unwrap().get(&key) {
            return hit.clone();
        }
        let u = lie.ue_mul(
            &self.symmetrize_mono(lie, ma),
            &self.symmetrize_mono(lie, mb),
        );
        let val = self.pbw_inverse(lie, &u);
        self.star
            .write()
            .unwrap()
            .entry(key)
            .or_insert_with(|| val.clone());
        val
    }

    /// Cached `a *_t b`, expanded bilinearly over the term maps.
    pub fn star(&self, lie: &LieAlgebra, a: &SymPoly, b: &SymPoly) -> SymPoly {
        let mut out = SymPoly::zero(lie.dim());
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                let coeff = ca * cb;
                out = out.add(&self.star_mono(lie, ma, mb).scale_t(&coeff));
            }
        }
        out
    }

    pub fn star_coefficient(&self, lie: &LieAlgebra, a: &SymPoly, b: &SymPoly, k: usize) -> SymPoly {
        self.star(lie, a, b).t_coefficient(k)
    }
}
