//! The Poisson bracket on S(g) and the invariant subalgebra I(g).
//!
//! `{a, b} = c^k_ij X_k (d a / d X_i) (d b / d X_j)`, summing over all
//! repeated indices. The bracket restricts the coadjoint structure to
//! polynomials and detects I(g) membership through `{X_j, a} = 0`.

use crate::lie::LieAlgebra;
use crate::poly::{monomials_of_degree, SymPoly};
use crate::linalg::QMatrix;
use crate::tpoly::TPoly;
use num_traits::Zero;

impl LieAlgebra {
    /// Poisson bracket of two elements of S(g).
    pub fn poisson(&self, a: &SymPoly, b: &SymPoly) -> SymPoly {
        let n = self.dim();
        assert_eq!(a.gens(), n, "generator count mismatch");
        assert_eq!(b.gens(), n, "generator count mismatch");
        let mut out = SymPoly::zero(n);
        for i in 0..n {
            let da = a.partial(i);
            if da.is_zero() {
                continue;
            }
            for j in 0..n {
                if self.bracket_terms(i, j).is_empty() {
                    continue;
                }
                let db = b.partial(j);
                if db.is_zero() {
                    continue;
                }
                out = out.add(&self.bracket_poly(i, j).mul(&da).mul(&db));
            }
        }
        out
    }

    /// Membership test for I(g): true iff `{X_j, a} = 0` for every generator.
    pub fn sym_ad_invariant(&self, a: &SymPoly) -> bool {
        (0..self.dim()).all(|j| self.poisson(&self.gen_poly(j), a).is_zero())
    }

    /// Exact basis of the ad-invariant polynomials of degree at most `max_deg`,
    /// graded degree by degree.
    ///
    /// The bracket with a generator preserves total degree, so each
    /// homogeneous layer is solved as one stacked nullspace problem over all
    /// generators.
    pub fn invariant_polynomials(&self, max_deg: u32) -> Vec<SymPoly> {
        let n = self.dim();
        let mut out = Vec::new();
        for d in 0..=max_deg {
            let monos = monomials_of_degree(n, d);
            let dim = monos.len();
            // Row block per generator: coordinates of {X_g, mono}.
            let mut rows: Vec<Vec<crate::rat::Rat>> = Vec::with_capacity(n * dim);
            for g in 0..n {
                let images: Vec<SymPoly> = monos
                    .iter()
                    .map(|m| {
                        self.poisson(
                            &self.gen_poly(g),
                            &SymPoly::monomial(m.clone(), TPoly::one()),
                        )
                    })
                    .collect();
                for row_mono in &monos {
                    rows.push(
                        images
                            .iter()
                            .map(|img| img.coeff(row_mono).coeff(0))
                            .collect(),
                    );
                }
            }
            let system = QMatrix::from_rows(rows);
            for v in system.nullspace() {
                let mut p = SymPoly::zero(n);
                for (idx, m) in monos.iter().enumerate() {
                    let c = v[(idx, 0)].clone();
                    if !c.is_zero() {
                        p = p.add(&SymPoly::monomial(m.clone(), TPoly::constant(c)));
                    }
                }
                out.push(p);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{abelian, heisenberg3, sl2};
    use crate::poly::monomials_up_to;
    use crate::rat::rat;

    #[test]
    fn generator_brackets_reproduce_structure_constants() {
        let lie = sl2();
        let e = lie.gen_poly(0);
        let f = lie.gen_poly(1);
        let h = lie.gen_poly(2);
        assert_eq!(lie.poisson(&e, &f), h);
        assert_eq!(lie.poisson(&h, &e), e.scale(&rat(2, 1)));
        assert_eq!(lie.poisson(&h, &f), f.scale(&rat(-2, 1)));
    }

    #[test]
    fn abelian_bracket_vanishes() {
        let lie = abelian(3);
        for a in monomials_up_to(3, 2) {
            for b in monomials_up_to(3, 2) {
                let pa = lie.mono_poly(&a.0);
                let pb = lie.mono_poly(&b.0);
                assert!(lie.poisson(&pa, &pb).is_zero());
            }
        }
    }

    #[test]
    fn jacobi_and_leibniz_on_spanning_monomials() {
        let lie = sl2();
        let monos = monomials_up_to(3, 2);
        let polys: Vec<SymPoly> = monos.iter().map(|m| lie.mono_poly(&m.0)).collect();
        // Sampled triples: stride through the full cube to keep this quick.
        for (i, a) in polys.iter().enumerate().step_by(2) {
            for (j, b) in polys.iter().enumerate().step_by(3) {
                for c in polys.iter().skip((i + j) % 3).step_by(4) {
                    let jac = lie
                        .poisson(a, &lie.poisson(b, c))
                        .add(&lie.poisson(b, &lie.poisson(c, a)))
                        .add(&lie.poisson(c, &lie.poisson(a, b)));
                    assert!(jac.is_zero(), "Jacobi fails");
                    let lhs = lie.poisson(a, &b.mul(c));
                    let rhs = lie.poisson(a, b).mul(c).add(&b.mul(&lie.poisson(a, c)));
                    assert_eq!(lhs, rhs, "Leibniz fails");
                }
            }
        }
    }

    #[test]
    fn casimir_is_invariant_and_generators_are_not() {
        let lie = sl2();
        let cas = lie.casimir().unwrap();
        assert!(lie.sym_ad_invariant(&cas));
        assert!(!lie.sym_ad_invariant(&lie.gen_poly(0)));
        let ab = abelian(2);
        assert!(ab.sym_ad_invariant(&ab.mono_poly(&[2, 1])));
    }

    #[test]
    fn invariant_polynomials_sl2_up_to_degree_two() {
        let lie = sl2();
        let inv = lie.invariant_polynomials(2);
        // constants and the Casimir line
        assert_eq!(inv.len(), 2);
        assert!(inv.iter().all(|p| lie.sym_ad_invariant(p)));
        assert_eq!(inv[0].degree(), Some(0));
        assert_eq!(inv[1].degree(), Some(2));
        // The degree-2 element is proportional to the Casimir: 4*Cas = 2ef + h^2/2... scaled primitive is 4ef + h^2.
        let cas = lie.casimir().unwrap();
        let scaled = cas.scale(&rat(8, 1)); // 4 e f + h^2, primitive integer form
        assert_eq!(inv[1], scaled);
    }

    #[test]
    fn invariant_polynomials_heisenberg_are_powers_of_center() {
        let lie = heisenberg3();
        let inv = lie.invariant_polynomials(2);
        // 1, z, z^2
        assert_eq!(inv.len(), 3);
        for p in &inv {
            assert!(lie.sym_ad_invariant(p));
        }
        assert_eq!(inv[1], lie.gen_poly(2));
        assert_eq!(inv[2], lie.gen_poly(2).mul(&lie.gen_poly(2)));
    }
}
