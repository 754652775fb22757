//! Family algebras: invariance criteria and the operators acting on them.
//!
//! A `Family` couples a Lie algebra with a representation `tau` and exposes
//! the infinitesimal invariance criteria cutting the classical and quantum
//! family algebras out of `End(V) (x) S(g)` and `End(V) (x) U_t(g)`, the
//! noncommutative Poisson bracket, the degree-lowering operator `nabla` and
//! its mirror, the first Chern class, the entrywise PBW map, and exact
//! invariant-basis computation by degree.
//!
//! Group invariance is checked through its Lie-algebra form (the generator
//! criteria below); for a connected, simply connected group the two notions
//! agree, and the kernel only ever works at the Lie-algebra level.

use num_traits::Zero;

use crate::error::KernelError;
use crate::lie::LieAlgebra;
use crate::linalg::QMatrix;
use crate::matpoly::{MatPoly, MatUE};
use crate::poly::{monomials_of_degree, SymPoly};
use crate::rat::Rat;
use crate::rep::Representation;
use crate::star::StarCache;
use crate::tpoly::TPoly;
use crate::ue::UEElement;

/// A Lie algebra together with a representation; the ambient context for
/// all family-algebra computations.
pub struct Family {
    lie: LieAlgebra,
    rep: Representation,
    star_cache: StarCache,
}

impl Family {
    pub fn new(lie: LieAlgebra, rep: Representation) -> Self {
        assert_eq!(
            rep.mats().len(),
            lie.dim(),
            "representation must provide one matrix per generator"
        );
        Family {
            lie,
            rep,
            star_cache: StarCache::new(),
        }
    }

    pub fn lie(&self) -> &LieAlgebra {
        &self.lie
    }

    pub fn rep(&self) -> &Representation {
        &self.rep
    }

    pub fn mat_dim(&self) -> usize {
        self.rep.dim()
    }

    pub fn names(&self) -> &[String] {
        self.lie.names()
    }

    /// Infinitesimal action of the generator `X_g` on `End(V) (x) S(g)`:
    /// `[tau(X_g), A] + {X_g, -}` applied entrywise. Classical invariance is
    /// the joint kernel of these operators.
    pub fn classical_action(&self, g: usize, a: &MatPoly) -> MatPoly {
        let commutator = a.const_commutator(self.rep.mat(g));
        let bracket = a.map(|e| self.lie.poisson(&self.lie.gen_poly(g), e));
        commutator.add(&bracket)
    }

    pub fn is_classical_invariant(&self, a: &MatPoly) -> bool {
        (0..self.lie.dim()).all(|g| self.classical_action(g, a).is_zero())
    }

    /// Infinitesimal action on `End(V) (x) U_t(g)`:
    /// `[tau(X_g), U] + (X_g U - U X_g) / t` entrywise. The enveloping
    /// commutator of any two elements vanishes at `t = 0`, so the division
    /// is exact; at `t = 1` this is literally the commutator criterion, and
    /// requiring the quotient to vanish checks invariance at every `t` at
    /// once.
    pub fn quantum_action(&self, g: usize, u: &MatUE) -> MatUE {
        let commutator = u.const_commutator(self.rep.mat(g));
        let xg = UEElement::generator(self.lie.dim(), g);
        let mut inner = MatUE::zero(u.dim(), u.gens());
        for p in 0..u.dim() {
            for q in 0..u.dim() {
                let e = u.entry(p, q);
                if e.is_zero() {
                    continue;
                }
                *inner.entry_mut(p, q) = self.lie.ue_commutator(&xg, e).div_t_exact();
            }
        }
        commutator.add(&inner)
    }

    pub fn is_quantum_invariant(&self, u: &MatUE) -> bool {
        (0..self.lie.dim()).all(|g| self.quantum_action(g, u).is_zero())
    }

    /// Noncommutative Poisson bracket
    /// `{A_i (x) a^i, B_j (x) b^j} = A_i B_j (x) {a^i, b^j}`; entrywise this
    /// is the matrix product with entry multiplication replaced by the
    /// bracket, which is decomposition-independent.
    pub fn nc_poisson(&self, a: &MatPoly, b: &MatPoly) -> MatPoly {
        assert_eq!(a.dim(), b.dim(), "matrix dimension mismatch");
        let d = a.dim();
        let mut out = MatPoly::zero(d, self.lie.dim());
        for p in 0..d {
            for q in 0..d {
                let x = a.entry(p, q);
                if x.is_zero() {
                    continue;
                }
                for s in 0..d {
                    let y = b.entry(q, s);
                    if y.is_zero() {
                        continue;
                    }
                    *out.entry_mut(p, s) = out.entry(p, s).add(&self.lie.poisson(x, y));
                }
            }
        }
        out
    }

    /// `nabla(A_i (x) a^i) = A_i tau(X_k) (x) d^k a^i`, computed entrywise
    /// as `d^k(A) tau(X_k)`. Lowers S(g)-degree by one, preserves classical
    /// invariance, and does not depend on the choice of basis.
    pub fn nabla(&self, a: &MatPoly) -> MatPoly {
        let mut out = MatPoly::zero(a.dim(), a.gens());
        for k in 0..self.lie.dim() {
            let da = a.map(|e| e.partial(k));
            if da.is_zero() {
                continue;
            }
            out = out.add(&da.const_mul_right(self.rep.mat(k)));
        }
        out
    }

    /// Mirror of [`Family::nabla`] with `tau(X_k)` acting from the left.
    pub fn nabla_prime(&self, a: &MatPoly) -> MatPoly {
        let mut out = MatPoly::zero(a.dim(), a.gens());
        for k in 0..self.lie.dim() {
            let da = a.map(|e| e.partial(k));
            if da.is_zero() {
                continue;
            }
            out = out.add(&da.const_mul_left(self.rep.mat(k)));
        }
        out
    }

    /// First Chern class `A (x) a -> A (x) c^j_ij d^i a`: the trace of the
    /// adjoint representation contracted against the gradient. Vanishes
    /// identically for semisimple algebras.
    pub fn chern_c1(&self, a: &MatPoly) -> MatPoly {
        let mut out = MatPoly::zero(a.dim(), a.gens());
        for i in 0..self.lie.dim() {
            let tr = self.lie.adjoint_trace(i);
            if tr.is_zero() {
                continue;
            }
            out = out.add(&a.map(|e| e.partial(i).scale(&tr)));
        }
        out
    }

    /// Entrywise PBW symmetrization `Id (x) I_PBW`.
    pub fn fpbw(&self, a: &MatPoly) -> MatUE {
        let mut out = MatUE::zero(a.dim(), a.gens());
        for p in 0..a.dim() {
            for q in 0..a.dim() {
                *out.entry_mut(p, q) = self.star_cache.pbw_symmetrize(&self.lie, a.entry(p, q));
            }
        }
        out
    }

    /// Product in `End(V) (x) U_t(g)`: matrix product with entries
    /// multiplied in the enveloping algebra.
    pub fn mat_ue_mul(&self, a: &MatUE, b: &MatUE) -> MatUE {
        assert_eq!(a.dim(), b.dim(), "matrix dimension mismatch");
        let d = a.dim();
        let mut out = MatUE::zero(d, self.lie.dim());
        for p in 0..d {
            for q in 0..d {
                let x = a.entry(p, q);
                if x.is_zero() {
                    continue;
                }
                for s in 0..d {
                    let y = b.entry(q, s);
                    if y.is_zero() {
                        continue;
                    }
                    *out.entry_mut(p, s) = out.entry(p, s).add(&self.lie.ue_mul(x, y));
                }
            }
        }
        out
    }

    /// Entrywise inverse of [`Family::fpbw`].
    pub fn fpbw_inverse(&self, u: &MatUE) -> MatPoly {
        let d = u.dim();
        let mut out = MatPoly::zero(d, u.gens());
        for p in 0..d {
            for q in 0..d {
                *out.entry_mut(p, q) = self.star_cache.pbw_inverse(&self.lie, u.entry(p, q));
            }
        }
        out
    }

    /// Star product on matrix polynomials: the pullback of the `MatUE`
    /// product through [`Family::fpbw`], which works out to the matrix
    /// product with `*_t` as entry multiplication.
    pub fn mat_star(&self, a: &MatPoly, b: &MatPoly) -> MatPoly {
        assert_eq!(a.dim(), b.dim(), "matrix dimension mismatch");
        let d = a.dim();
        let mut out = MatPoly::zero(d, self.lie.dim());
        for p in 0..d {
            for q in 0..d {
                let x = a.entry(p, q);
                if x.is_zero() {
                    continue;
                }
                for s in 0..d {
                    let y = b.entry(q, s);
                    if y.is_zero() {
                        continue;
                    }
                    *out.entry_mut(p, s) =
                        out.entry(p, s).add(&self.star_cache.star(&self.lie, x, y));
                }
            }
        }
        out
    }

    /// Coefficient of `t^k` in the matrix star product.
    pub fn mat_star_coefficient(&self, a: &MatPoly, b: &MatPoly, k: usize) -> MatPoly {
        self.mat_star(a, b).map(|e| e.t_coefficient(k))
    }

    /// Cached scalar star product (shared with the matrix-level routines).
    pub fn star(&self, a: &SymPoly, b: &SymPoly) -> SymPoly {
        self.star_cache.star(&self.lie, a, b)
    }

    pub fn star_coefficient(&self, a: &SymPoly, b: &SymPoly, k: usize) -> SymPoly {
        self.star_cache.star_coefficient(&self.lie, a, b, k)
    }

    /// Deterministic spanning set `E_pq (x) m` of the degree `<= max_deg`
    /// truncation, monomials outermost in graded-lex order.
    pub fn spanning_set(&self, max_deg: u32) -> Vec<MatPoly> {
        let d = self.rep.dim();
        let mut out = Vec::new();
        for m in crate::poly::monomials_up_to(self.lie.dim(), max_deg) {
            let a = SymPoly::monomial(m, TPoly::one());
            for p in 0..d {
                for q in 0..d {
                    out.push(MatPoly::unit_tensor(d, p, q, &a));
                }
            }
        }
        out
    }

    /// Exact basis of the classical invariants of S(g)-degree `<= max_deg`.
    ///
    /// The generator actions preserve total degree, so each homogeneous
    /// layer is one stacked nullspace problem over all generators; the
    /// per-layer bases are concatenated in degree order, giving homogeneous
    /// elements and a reproducible ordering.
    pub fn invariant_basis(&self, max_deg: u32) -> Vec<MatPoly> {
        let n = self.lie.dim();
        let d = self.rep.dim();
        let mut out = Vec::new();
        for deg in 0..=max_deg {
            let monos = monomials_of_degree(n, deg);
            // coordinates: (mono, p, q) with mono outermost
            let coords: Vec<(usize, usize, usize)> = (0..monos.len())
                .flat_map(|mi| {
                    (0..d).flat_map(move |p| (0..d).map(move |q| (mi, p, q)))
                })
                .collect();
            let basis_elems: Vec<MatPoly> = coords
                .iter()
                .map(|&(mi, p, q)| {
                    MatPoly::unit_tensor(d, p, q, &SymPoly::monomial(monos[mi].clone(), TPoly::one()))
                })
                .collect();
            let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(n * coords.len());
            for g in 0..n {
                let images: Vec<MatPoly> = basis_elems
                    .iter()
                    .map(|b| self.classical_action(g, b))
                    .collect();
                for &(mi, p, q) in &coords {
                    rows.push(
                        images
                            .iter()
                            .map(|img| img.entry(p, q).coeff(&monos[mi]).coeff(0))
                            .collect(),
                    );
                }
            }
            let system = QMatrix::from_rows(rows);
            for v in system.nullspace() {
                let mut elem = MatPoly::zero(d, n);
                for (col, &(mi, p, q)) in coords.iter().enumerate() {
                    let c = v[(col, 0)].clone();
                    if c.is_zero() {
                        continue;
                    }
                    let term = MatPoly::unit_tensor(
                        d,
                        p,
                        q,
                        &SymPoly::monomial(monos[mi].clone(), TPoly::constant(c)),
                    );
                    elem = elem.add(&term);
                }
                out.push(elem);
            }
        }
        out
    }

    /// Transport a matrix polynomial along the base change
    /// `Y_j = sum_k T^k_j X_k` (the representation must be transported
    /// alongside; see [`Representation::transport`]).
    pub fn transport_matpoly(&self, a: &MatPoly, t: &QMatrix) -> Result<MatPoly, KernelError> {
        let mut entries = Vec::with_capacity(a.dim() * a.dim());
        for p in 0..a.dim() {
            for q in 0..a.dim() {
                entries.push(self.lie.transport_poly(a.entry(p, q), t)?);
            }
        }
        Ok(MatPoly::from_entries(a.dim(), entries))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{abelian, affine2, sl2};
    use crate::rat::{rat, rat_int};
    use crate::rep::{abelian_standard, affine2_standard, sl2_standard};

    fn sl2_family() -> Family {
        Family::new(sl2(), sl2_standard())
    }

    /// `M = [[h/2, f], [e, -h/2]]`, the degree-one invariant.
    fn m_elem(fam: &Family) -> MatPoly {
        let lie = fam.lie();
        MatPoly::from_entries(
            2,
            vec![
                lie.gen_poly(2).scale(&rat(1, 2)),
                lie.gen_poly(1),
                lie.gen_poly(0),
                lie.gen_poly(2).scale(&rat(-1, 2)),
            ],
        )
    }

    #[test]
    fn m_is_classical_invariant() {
        let fam = sl2_family();
        assert!(fam.is_classical_invariant(&m_elem(&fam)));
        // L_h(M) = 0 in particular
        assert!(fam.classical_action(2, &m_elem(&fam)).is_zero());
    }

    #[test]
    fn scalar_embeddings_track_ad_invariance() {
        let fam = sl2_family();
        let cas = fam.lie().casimir().unwrap();
        assert!(fam.is_classical_invariant(&MatPoly::scalar(2, &cas)));
        let e = fam.lie().gen_poly(0);
        assert!(!fam.is_classical_invariant(&MatPoly::scalar(2, &e)));
    }

    #[test]
    fn constant_matrix_action_is_pure_commutator() {
        let fam = sl2_family();
        let a = MatPoly::tensor(&QMatrix::identity(2), &fam.lie().const_poly(rat_int(1)));
        for g in 0..3 {
            assert!(fam.classical_action(g, &a).is_zero());
        }
        let b = MatPoly::unit_tensor(2, 0, 1, &fam.lie().const_poly(rat_int(1)));
        // residual equals [tau(X), E_01] tensor 1
        let res = fam.classical_action(0, &b);
        assert_eq!(res, b.const_commutator(fam.rep().mat(0)));
    }

    #[test]
    fn nc_poisson_on_scalars_and_units() {
        let fam = sl2_family();
        let lie = fam.lie();
        let a = lie.mono_poly(&[1, 0, 1]);
        let b = lie.mono_poly(&[0, 1, 0]);
        let lhs = fam.nc_poisson(&MatPoly::scalar(2, &a), &MatPoly::scalar(2, &b));
        assert_eq!(lhs, MatPoly::scalar(2, &lie.poisson(&a, &b)));
        // rank-one tensors multiply as A B (x) {a, b}
        let ma = QMatrix::from_rows(vec![
            vec![rat_int(1), rat_int(2)],
            vec![rat_int(0), rat_int(1)],
        ]);
        let mb = QMatrix::from_rows(vec![
            vec![rat_int(0), rat_int(1)],
            vec![rat_int(3), rat_int(0)],
        ]);
        let lhs = fam.nc_poisson(&MatPoly::tensor(&ma, &a), &MatPoly::tensor(&mb, &b));
        assert_eq!(lhs, MatPoly::tensor(&ma.mul(&mb), &lie.poisson(&a, &b)));
    }

    #[test]
    fn nc_poisson_of_m_with_itself() {
        // {M, M} = -2M: the bracket is not antisymmetric on matrix elements.
        let fam = sl2_family();
        let m = m_elem(&fam);
        assert_eq!(fam.nc_poisson(&m, &m), m.scale(&rat_int(-2)));
    }

    #[test]
    fn nabla_of_scalar_casimir_is_half_m() {
        let fam = sl2_family();
        let cas = fam.lie().casimir().unwrap();
        let nabla = fam.nabla(&MatPoly::scalar(2, &cas));
        assert_eq!(nabla, m_elem(&fam).scale(&rat(1, 2)));
        let nabla_p = fam.nabla_prime(&MatPoly::scalar(2, &cas));
        assert_eq!(nabla_p, nabla);
        // degree-drop witness: degree 1, nonzero, and not a scalar matrix
        // (so the invariant algebra is strictly bigger than I(g) scalars)
        assert_eq!(nabla.degree(), Some(1));
        assert!(!nabla.entry(0, 1).is_zero());
        assert!(fam.is_classical_invariant(&nabla));
    }

    #[test]
    fn nabla_basics() {
        let fam = sl2_family();
        let lie = fam.lie();
        // constant polynomial part: nabla = 0
        let a = MatPoly::unit_tensor(2, 0, 1, &lie.const_poly(rat_int(3)));
        assert!(fam.nabla(&a).is_zero());
        assert!(fam.nabla_prime(&a).is_zero());
        // single generator: nabla(Id (x) X_i) = tau(X_i)
        for i in 0..3 {
            let s = MatPoly::scalar(2, &lie.gen_poly(i));
            let expect = MatPoly::tensor(fam.rep().mat(i), &lie.const_poly(rat_int(1)));
            assert_eq!(fam.nabla(&s), expect);
            assert_eq!(fam.nabla_prime(&s), expect);
        }
    }

    #[test]
    fn chern_class_vanishes_for_sl2_but_not_affine() {
        let fam = sl2_family();
        for elem in fam.spanning_set(2) {
            assert!(fam.chern_c1(&elem).is_zero());
        }
        let aff = Family::new(affine2(), affine2_standard());
        let lie = aff.lie();
        let a = MatPoly::unit_tensor(2, 1, 0, &lie.gen_poly(0));
        let expect = MatPoly::unit_tensor(2, 1, 0, &lie.const_poly(rat_int(1)));
        assert_eq!(aff.chern_c1(&a), expect);
        assert!(aff.chern_c1(&MatPoly::unit_tensor(2, 1, 0, &lie.gen_poly(1))).is_zero());
        assert!(aff
            .chern_c1(&MatPoly::unit_tensor(2, 1, 0, &lie.const_poly(rat_int(1))))
            .is_zero());
    }

    #[test]
    fn fpbw_examples() {
        let fam = sl2_family();
        let lie = fam.lie();
        let m = m_elem(&fam);
        // degree <= 1 entries are fixed
        let fm = fam.fpbw(&m);
        for p in 0..2 {
            for q in 0..2 {
                assert_eq!(fm.entry(p, q).as_symbol(), *m.entry(p, q));
            }
        }
        assert!(fam.is_quantum_invariant(&fm));
        // Id (x) ef maps to Id (x) (ef - t/2 h)
        let ef = lie.mono_poly(&[1, 1, 0]);
        let f = fam.fpbw(&MatPoly::scalar(2, &ef));
        assert_eq!(f, MatUE::scalar(2, &lie.pbw_symmetrize(&ef)));
        // round trip
        assert_eq!(fam.fpbw_inverse(&f), MatPoly::scalar(2, &ef));
    }

    #[test]
    fn quantum_invariance_examples() {
        let fam = sl2_family();
        let lie = fam.lie();
        let cas = lie.casimir().unwrap();
        let central = MatUE::scalar(2, &lie.pbw_symmetrize(&cas));
        assert!(fam.is_quantum_invariant(&central));
        let e = MatUE::scalar(2, &UEElement::generator(3, 0));
        assert!(!fam.is_quantum_invariant(&e));
    }

    #[test]
    fn invariant_basis_dimensions_sl2_standard() {
        let fam = sl2_family();
        assert_eq!(fam.invariant_basis(0).len(), 1);
        let basis1 = fam.invariant_basis(1);
        assert_eq!(basis1.len(), 2);
        for b in &basis1 {
            assert!(fam.is_classical_invariant(b));
        }
        let basis2 = fam.invariant_basis(2);
        assert_eq!(basis2.len(), 3);
        for b in &basis2 {
            assert!(fam.is_classical_invariant(b));
        }
    }

    #[test]
    fn invariant_basis_trivial_rep_is_scalar() {
        let lie = sl2();
        let fam = Family::new(lie, crate::rep::Representation::trivial(&sl2()));
        let basis = fam.invariant_basis(0);
        assert_eq!(basis.len(), 1);
    }

    #[test]
    fn abelian_diag_rep_invariants_are_commutant_valued() {
        let fam = Family::new(abelian(2), abelian_standard(2));
        // commutant of the diagonal is diagonal: 2 matrix dims x monomials
        assert_eq!(fam.invariant_basis(0).len(), 2);
        assert_eq!(fam.invariant_basis(1).len(), 6);
        for b in fam.invariant_basis(1) {
            assert!(fam.is_classical_invariant(&b));
        }
    }

    #[test]
    fn invariants_are_closed_under_product_bracket_and_operators() {
        let fam = sl2_family();
        let basis = fam.invariant_basis(2);
        for a in &basis {
            assert!(fam.is_classical_invariant(&fam.nabla(a)));
            assert!(fam.is_classical_invariant(&fam.nabla_prime(a)));
            assert!(fam.is_classical_invariant(&fam.chern_c1(a)));
            for b in &basis {
                assert!(fam.is_classical_invariant(&a.mat_mul(b)));
                assert!(fam.is_classical_invariant(&fam.nc_poisson(a, b)));
            }
        }
    }

    #[test]
    fn classical_action_is_a_derivation_of_the_product() {
        let fam = sl2_family();
        let lie = fam.lie();
        let a = MatPoly::unit_tensor(2, 0, 1, &lie.mono_poly(&[1, 1, 0]));
        let b = MatPoly::unit_tensor(2, 1, 0, &lie.mono_poly(&[0, 0, 2]))
            .add(&MatPoly::scalar(2, &lie.gen_poly(0)));
        for g in 0..3 {
            let lhs = fam.classical_action(g, &a.mat_mul(&b));
            let rhs = fam
                .classical_action(g, &a)
                .mat_mul(&b)
                .add(&a.mat_mul(&fam.classical_action(g, &b)));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn scalar_embedding_invariance_matches_ad_invariance() {
        let fam = sl2_family();
        let lie = fam.lie();
        let cas = lie.casimir().unwrap();
        let samples = [
            lie.const_poly(rat_int(5)),
            lie.gen_poly(0),
            lie.gen_poly(2),
            cas.clone(),
            cas.mul(&cas),
            lie.mono_poly(&[1, 1, 0]),
            lie.mono_poly(&[0, 0, 2]),
            cas.add(&lie.gen_poly(1)),
        ];
        for a in samples {
            assert_eq!(
                fam.is_classical_invariant(&MatPoly::scalar(2, &a)),
                lie.sym_ad_invariant(&a),
                "embedding mismatch on {}",
                a.display(lie.names())
            );
        }
    }

    #[test]
    fn trivial_rep_over_abelian_accepts_everything() {
        let lie = abelian(2);
        let fam = Family::new(lie.clone(), crate::rep::Representation::trivial(&lie));
        for elem in fam.spanning_set(2) {
            assert!(fam.is_classical_invariant(&elem));
        }
    }

    #[test]
    fn mat_star_first_order_matches_nc_poisson() {
        let fam = sl2_family();
        let m = m_elem(&fam);
        let lhs = fam.mat_star_coefficient(&m, &m, 1);
        assert_eq!(lhs, fam.nc_poisson(&m, &m).scale(&rat(1, 2)));
        assert_eq!(fam.mat_star_coefficient(&m, &m, 0), m.mat_mul(&m));
    }

    #[test]
    fn fpbw_turns_star_into_the_ue_product() {
        let fam = sl2_family();
        let lie = fam.lie();
        let m = m_elem(&fam);
        let samples = [
            m.clone(),
            MatPoly::scalar(2, &lie.casimir().unwrap()),
            MatPoly::unit_tensor(2, 0, 1, &lie.mono_poly(&[1, 1, 0])),
            MatPoly::unit_tensor(2, 1, 1, &lie.mono_poly(&[0, 0, 2])),
        ];
        for a in &samples {
            for b in &samples {
                let lhs = fam.fpbw(&fam.mat_star(a, b));
                let rhs = fam.mat_ue_mul(&fam.fpbw(a), &fam.fpbw(b));
                assert_eq!(lhs, rhs);
            }
        }
        // rank-one tensors: (A (x) a) * (B (x) b) = AB (x) (a * b)
        let ma = QMatrix::from_rows(vec![
            vec![rat_int(1), rat_int(2)],
            vec![rat_int(0), rat_int(1)],
        ]);
        let mb = QMatrix::from_rows(vec![
            vec![rat_int(0), rat_int(1)],
            vec![rat_int(1), rat_int(3)],
        ]);
        let a = lie.mono_poly(&[2, 0, 0]);
        let b = lie.mono_poly(&[0, 1, 0]);
        let lhs = fam.mat_star(&MatPoly::tensor(&ma, &a), &MatPoly::tensor(&mb, &b));
        let mut expect = MatPoly::zero(2, 3);
        let star = fam.star(&a, &b);
        let prod = ma.mul(&mb);
        for p in 0..2 {
            for q in 0..2 {
                *expect.entry_mut(p, q) = star.scale(&prod[(p, q)]);
            }
        }
        assert_eq!(lhs, expect);
    }

    #[test]
    fn quantum_invariants_are_closed_under_the_ue_product() {
        let fam = sl2_family();
        let images: Vec<MatUE> = fam
            .invariant_basis(2)
            .iter()
            .map(|b| fam.fpbw(b))
            .collect();
        for a in &images {
            for b in &images {
                assert!(fam.is_quantum_invariant(&fam.mat_ue_mul(a, b)));
            }
        }
    }

    #[test]
    fn invariance_transports_along_base_change() {
        let fam = sl2_family();
        let m = m_elem(&fam);
        let t = QMatrix::from_rows(vec![
            vec![rat_int(2), rat_int(1), rat_int(0)],
            vec![rat_int(0), rat_int(1), rat_int(1)],
            vec![rat_int(1), rat_int(0), rat_int(1)],
        ]);
        let lie2 = fam.lie().change_basis(&t).unwrap();
        let rep2 = fam.rep().transport(&t);
        let fam2 = Family::new(lie2, rep2);
        let moved = fam.transport_matpoly(&m, &t).unwrap();
        assert!(fam2.is_classical_invariant(&moved));
    }

    #[test]
    fn transport_round_trip() {
        let fam = sl2_family();
        let m = m_elem(&fam);
        let t = QMatrix::from_rows(vec![
            vec![rat_int(1), rat_int(1), rat_int(0)],
            vec![rat_int(0), rat_int(1), rat_int(1)],
            vec![rat_int(1), rat_int(0), rat_int(1)],
        ]);
        let t_inv = t.inverse().unwrap();
        let there = fam.transport_matpoly(&m, &t).unwrap();
        let back = fam.transport_matpoly(&there, &t_inv).unwrap();
        assert_eq!(back, m);
    }
}
