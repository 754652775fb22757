//! Matrix-valued polynomial and enveloping-algebra elements.
//!
//! `MatPoly` models `End(V) (x) S(g)` stored entrywise: tensor
//! decompositions `sum_i A_i (x) a^i` are non-unique, while the matrix of
//! entry polynomials is canonical and every operator defined on
//! decompositions factors through it (the matrix and polynomial legs
//! commute). `MatUE` is the same shape over U_t(g).

use num_traits::Zero;

use crate::linalg::QMatrix;
use crate::poly::SymPoly;
use crate::rat::Rat;
use crate::tpoly::TPoly;
use crate::ue::UEElement;

/// `d x d` matrix with S(g) entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatPoly {
    d: usize,
    n: usize,
    entries: Vec<SymPoly>,
}

impl MatPoly {
    pub fn zero(d: usize, n: usize) -> Self {
        MatPoly {
            d,
            n,
            entries: vec![SymPoly::zero(n); d * d],
        }
    }

    pub fn identity(d: usize, n: usize) -> Self {
        let mut m = MatPoly::zero(d, n);
        for i in 0..d {
            *m.entry_mut(i, i) = SymPoly::one(n);
        }
        m
    }

    /// Scalar embedding `Id (x) a`.
    pub fn scalar(d: usize, a: &SymPoly) -> Self {
        let mut m = MatPoly::zero(d, a.gens());
        for i in 0..d {
            *m.entry_mut(i, i) = a.clone();
        }
        m
    }

    /// Elementary tensor `E_pq (x) a`.
    pub fn unit_tensor(d: usize, p: usize, q: usize, a: &SymPoly) -> Self {
        let mut m = MatPoly::zero(d, a.gens());
        *m.entry_mut(p, q) = a.clone();
        m
    }

    /// Tensor `A (x) a` for a rational matrix `A`.
    pub fn tensor(mat: &QMatrix, a: &SymPoly) -> Self {
        let d = mat.rows();
        let mut m = MatPoly::zero(d, a.gens());
        for p in 0..d {
            for q in 0..d {
                *m.entry_mut(p, q) = a.scale(&mat[(p, q)]);
            }
        }
        m
    }

    pub fn from_entries(d: usize, entries: Vec<SymPoly>) -> Self {
        assert_eq!(entries.len(), d * d);
        let n = entries[0].gens();
        assert!(entries.iter().all(|e| e.gens() == n));
        MatPoly { d, n, entries }
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn gens(&self) -> usize {
        self.n
    }

    pub fn entry(&self, p: usize, q: usize) -> &SymPoly {
        &self.entries[p * self.d + q]
    }

    pub fn entry_mut(&mut self, p: usize, q: usize) -> &mut SymPoly {
        &mut self.entries[p * self.d + q]
    }

    pub fn entries(&self) -> &[SymPoly] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(SymPoly::is_zero)
    }

    pub fn add(&self, other: &MatPoly) -> MatPoly {
        self.check_shape(other);
        self.zip(other, SymPoly::add)
    }

    pub fn sub(&self, other: &MatPoly) -> MatPoly {
        self.check_shape(other);
        self.zip(other, SymPoly::sub)
    }

    pub fn neg(&self) -> MatPoly {
        self.map(SymPoly::neg)
    }

    pub fn scale(&self, c: &Rat) -> MatPoly {
        self.map(|e| e.scale(c))
    }

    pub fn scale_t(&self, c: &TPoly) -> MatPoly {
        self.map(|e| e.scale_t(c))
    }

    /// Product in `End(V) (x) S(g)`: matrix product with polynomial entries.
    pub fn mat_mul(&self, other: &MatPoly) -> MatPoly {
        self.check_shape(other);
        let mut out = MatPoly::zero(self.d, self.n);
        for p in 0..self.d {
            for r in 0..self.d {
                let a = self.entry(p, r);
                if a.is_zero() {
                    continue;
                }
                for q in 0..self.d {
                    let b = other.entry(r, q);
                    if b.is_zero() {
                        continue;
                    }
                    *out.entry_mut(p, q) = out.entry(p, q).add(&a.mul(b));
                }
            }
        }
        out
    }

    /// Left and right multiplication by a rational matrix.
    pub fn const_mul_left(&self, mat: &QMatrix) -> MatPoly {
        assert_eq!(mat.cols(), self.d);
        let mut out = MatPoly::zero(self.d, self.n);
        for p in 0..self.d {
            for r in 0..self.d {
                if mat[(p, r)].is_zero() {
                    continue;
                }
                for q in 0..self.d {
                    let e = self.entry(r, q).scale(&mat[(p, r)]);
                    *out.entry_mut(p, q) = out.entry(p, q).add(&e);
                }
            }
        }
        out
    }

    pub fn const_mul_right(&self, mat: &QMatrix) -> MatPoly {
        assert_eq!(mat.rows(), self.d);
        let mut out = MatPoly::zero(self.d, self.n);
        for p in 0..self.d {
            for r in 0..self.d {
                let a = self.entry(p, r);
                if a.is_zero() {
                    continue;
                }
                for q in 0..self.d {
                    if mat[(r, q)].is_zero() {
                        continue;
                    }
                    *out.entry_mut(p, q) = out.entry(p, q).add(&a.scale(&mat[(r, q)]));
                }
            }
        }
        out
    }

    /// Matrix commutator `[A, self]` with a rational matrix acting on the
    /// `End(V)` leg.
    pub fn const_commutator(&self, mat: &QMatrix) -> MatPoly {
        self.const_mul_left(mat).sub(&self.const_mul_right(mat))
    }

    pub fn map<F: Fn(&SymPoly) -> SymPoly>(&self, f: F) -> MatPoly {
        MatPoly {
            d: self.d,
            n: self.n,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    fn zip<F: Fn(&SymPoly, &SymPoly) -> SymPoly>(&self, other: &MatPoly, f: F) -> MatPoly {
        MatPoly {
            d: self.d,
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    fn check_shape(&self, other: &MatPoly) {
        assert_eq!(self.d, other.d, "matrix dimension mismatch");
        assert_eq!(self.n, other.n, "generator count mismatch");
    }

    /// Highest total S(g)-degree over all entries.
    pub fn degree(&self) -> Option<u32> {
        self.entries.iter().filter_map(SymPoly::degree).max()
    }

    pub fn display(&self, names: &[String]) -> String {
        let rows: Vec<String> = (0..self.d)
            .map(|p| {
                let cells: Vec<String> =
                    (0..self.d).map(|q| self.entry(p, q).display(names)).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        format!("[{}]", rows.join(", "))
    }
}

/// `d x d` matrix with U_t(g) entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatUE {
    d: usize,
    n: usize,
    entries: Vec<UEElement>,
}

impl MatUE {
    pub fn zero(d: usize, n: usize) -> Self {
        MatUE {
            d,
            n,
            entries: vec![UEElement::zero(n); d * d],
        }
    }

    pub fn from_entries(d: usize, entries: Vec<UEElement>) -> Self {
        assert_eq!(entries.len(), d * d);
        let n = entries[0].gens();
        MatUE { d, n, entries }
    }

    /// Scalar embedding `Id (x) u`.
    pub fn scalar(d: usize, u: &UEElement) -> Self {
        let mut m = MatUE::zero(d, u.gens());
        for i in 0..d {
            *m.entry_mut(i, i) = u.clone();
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn gens(&self) -> usize {
        self.n
    }

    pub fn entry(&self, p: usize, q: usize) -> &UEElement {
        &self.entries[p * self.d + q]
    }

    pub fn entry_mut(&mut self, p: usize, q: usize) -> &mut UEElement {
        &mut self.entries[p * self.d + q]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(UEElement::is_zero)
    }

    pub fn add(&self, other: &MatUE) -> MatUE {
        assert_eq!(self.d, other.d);
        MatUE {
            d: self.d,
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &MatUE) -> MatUE {
        assert_eq!(self.d, other.d);
        MatUE {
            d: self.d,
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn const_mul_left(&self, mat: &QMatrix) -> MatUE {
        let mut out = MatUE::zero(self.d, self.n);
        for p in 0..self.d {
            for r in 0..self.d {
                if mat[(p, r)].is_zero() {
                    continue;
                }
                for q in 0..self.d {
                    let e = self.entry(r, q).scale(&mat[(p, r)]);
                    *out.entry_mut(p, q) = out.entry(p, q).add(&e);
                }
            }
        }
        out
    }

    pub fn const_mul_right(&self, mat: &QMatrix) -> MatUE {
        let mut out = MatUE::zero(self.d, self.n);
        for p in 0..self.d {
            for r in 0..self.d {
                let a = self.entry(p, r);
                if a.is_zero() {
                    continue;
                }
                for q in 0..self.d {
                    if mat[(r, q)].is_zero() {
                        continue;
                    }
                    *out.entry_mut(p, q) = out.entry(p, q).add(&a.scale(&mat[(r, q)]));
                }
            }
        }
        out
    }

    pub fn const_commutator(&self, mat: &QMatrix) -> MatUE {
        self.const_mul_left(mat).sub(&self.const_mul_right(mat))
    }

    /// `t = 0` specialization, reading entries as S(g) symbols.
    pub fn at_t_zero(&self) -> MatPoly {
        MatPoly::from_entries(
            self.d,
            self.entries
                .iter()
                .map(|u| u.eval_t(&Rat::from_integer(0.into())).as_symbol())
                .collect(),
        )
    }

    pub fn display(&self, names: &[String]) -> String {
        let rows: Vec<String> = (0..self.d)
            .map(|p| {
                let cells: Vec<String> =
                    (0..self.d).map(|q| self.entry(p, q).display(names)).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        format!("[{}]", rows.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::sl2;
    use crate::rat::rat;

    /// The invariant element of the sl2 standard family algebra.
    pub(crate) fn sl2_m() -> MatPoly {
        let lie = sl2();
        let e = lie.gen_poly(0);
        let f = lie.gen_poly(1);
        let h = lie.gen_poly(2);
        MatPoly::from_entries(
            2,
            vec![h.scale(&rat(1, 2)), f, e, h.scale(&rat(-1, 2))],
        )
    }

    #[test]
    fn identity_is_neutral() {
        let m = sl2_m();
        let id = MatPoly::identity(2, 3);
        assert_eq!(id.mat_mul(&m), m);
        assert_eq!(m.mat_mul(&id), m);
    }

    #[test]
    fn m_squared_is_a_scalar() {
        // M^2 = (h^2/4 + ef) Id
        let lie = sl2();
        let m = sl2_m();
        let sq = m.mat_mul(&m);
        let scalar = lie
            .mono_poly(&[0, 0, 2])
            .scale(&rat(1, 4))
            .add(&lie.mono_poly(&[1, 1, 0]));
        assert_eq!(sq, MatPoly::scalar(2, &scalar));
    }

    #[test]
    fn scalar_embedding_is_multiplicative() {
        let lie = sl2();
        let a = lie.mono_poly(&[1, 0, 1]);
        let b = lie.mono_poly(&[0, 2, 0]);
        let lhs = MatPoly::scalar(2, &a).mat_mul(&MatPoly::scalar(2, &b));
        assert_eq!(lhs, MatPoly::scalar(2, &a.mul(&b)));
    }

    #[test]
    fn mat_mul_is_associative() {
        let lie = sl2();
        let m = sl2_m();
        let a = MatPoly::unit_tensor(2, 0, 1, &lie.gen_poly(0));
        let b = MatPoly::unit_tensor(2, 1, 0, &lie.gen_poly(2));
        let lhs = a.mat_mul(&m).mat_mul(&b);
        let rhs = a.mat_mul(&m.mat_mul(&b));
        assert_eq!(lhs, rhs);
    }
}
