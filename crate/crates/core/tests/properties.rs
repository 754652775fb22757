//! Property tests for the algebraic laws the kernel relies on.
//!
//! Everything here is exact: equality means equality of canonical forms.

use proptest::prelude::*;

use famalg_core::lie::{heisenberg3, sl2, LieAlgebra};
use famalg_core::linalg::QMatrix;
use famalg_core::poly::{Mono, SymPoly};
use famalg_core::rat::Rat;
use famalg_core::tpoly::TPoly;
use famalg_core::ue::UEElement;

fn rat_strategy() -> impl Strategy<Value = Rat> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| Rat::new(p.into(), q.into()))
}

/// Sparse polynomial in 3 generators, few terms, low degree.
fn poly3() -> impl Strategy<Value = SymPoly> {
    prop::collection::vec(
        (prop::collection::vec(0u32..=2, 3), rat_strategy()),
        1..4,
    )
    .prop_map(|terms| {
        let mut p = SymPoly::zero(3);
        for (exps, c) in terms {
            p = p.add(&SymPoly::monomial(Mono(exps), TPoly::constant(c)));
        }
        p
    })
}

fn qmatrix(rows: usize, cols: usize) -> impl Strategy<Value = QMatrix> {
    prop::collection::vec(prop::collection::vec(rat_strategy(), cols), rows)
        .prop_map(QMatrix::from_rows)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn poly_mul_commutes_and_associates(a in poly3(), b in poly3(), c in poly3()) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn poly_mul_distributes(a in poly3(), b in poly3(), c in poly3()) {
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn partials_commute(a in poly3(), i in 0usize..3, j in 0usize..3) {
        prop_assert_eq!(a.partial(i).partial(j), a.partial(j).partial(i));
    }

    #[test]
    fn partial_satisfies_leibniz(a in poly3(), b in poly3(), i in 0usize..3) {
        let lhs = a.mul(&b).partial(i);
        let rhs = a.partial(i).mul(&b).add(&a.mul(&b.partial(i)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn degree_is_additive_over_products(a in poly3(), b in poly3()) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        // S(g) over a field is an integral domain
        let prod = a.mul(&b);
        prop_assert_eq!(prod.degree(), Some(a.degree().unwrap() + b.degree().unwrap()));
    }

    #[test]
    fn poisson_is_antisymmetric_and_leibniz(a in poly3(), b in poly3(), c in poly3()) {
        let lie = sl2();
        prop_assert_eq!(lie.poisson(&a, &b), lie.poisson(&b, &a).neg());
        let lhs = lie.poisson(&a, &b.mul(&c));
        let rhs = lie.poisson(&a, &b).mul(&c).add(&b.mul(&lie.poisson(&a, &c)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn poisson_satisfies_jacobi(a in poly3(), b in poly3(), c in poly3()) {
        for lie in [sl2(), heisenberg3()] {
            let total = lie
                .poisson(&a, &lie.poisson(&b, &c))
                .add(&lie.poisson(&b, &lie.poisson(&c, &a)))
                .add(&lie.poisson(&c, &lie.poisson(&a, &b)));
            prop_assert!(total.is_zero());
        }
    }

    #[test]
    fn pbw_round_trips(a in poly3()) {
        for lie in [sl2(), heisenberg3()] {
            prop_assert_eq!(lie.pbw_inverse(&lie.pbw_symmetrize(&a)), a.clone());
            let u = UEElement::from_symbol(&a);
            prop_assert_eq!(lie.pbw_symmetrize(&lie.pbw_inverse(&u)), u);
        }
    }

    #[test]
    fn ue_product_is_associative(a in poly3(), b in poly3(), c in poly3()) {
        let lie = sl2();
        let (u, v, w) = (
            UEElement::from_symbol(&a),
            UEElement::from_symbol(&b),
            UEElement::from_symbol(&c),
        );
        let lhs = lie.ue_mul(&lie.ue_mul(&u, &v), &w);
        let rhs = lie.ue_mul(&u, &lie.ue_mul(&v, &w));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn star_first_coefficients(a in poly3(), b in poly3()) {
        let lie = sl2();
        prop_assert_eq!(lie.star_coefficient(&a, &b, 0), a.mul(&b));
        let half = Rat::new(1.into(), 2.into());
        prop_assert_eq!(lie.star_coefficient(&a, &b, 1), lie.poisson(&a, &b).scale(&half));
    }

    #[test]
    fn nullspace_is_exact_and_independent(m in qmatrix(3, 5)) {
        let ns = m.nullspace();
        for v in &ns {
            prop_assert!(m.mul(v).is_zero());
        }
        prop_assert_eq!(m.rank() + ns.len(), m.cols());
        if !ns.is_empty() {
            let rows: Vec<Vec<Rat>> = (0..ns.len())
                .map(|k| (0..m.cols()).map(|i| ns[k][(i, 0)].clone()).collect())
                .collect();
            prop_assert_eq!(QMatrix::from_rows(rows).rank(), ns.len());
        }
    }

    #[test]
    fn inverse_round_trips(m in qmatrix(3, 3)) {
        if let Ok(inv) = m.inverse() {
            prop_assert_eq!(m.mul(&inv), QMatrix::identity(3));
        } else {
            prop_assert!(m.rank() < 3);
        }
    }

    #[test]
    fn base_change_preserves_validity(entries in prop::collection::vec(-3i64..=3, 9)) {
        let lie = sl2();
        let rows: Vec<Vec<Rat>> = entries
            .chunks(3)
            .map(|r| r.iter().map(|&x| Rat::from_integer(x.into())).collect())
            .collect();
        let t = QMatrix::from_rows(rows);
        if let Ok(new) = lie.change_basis(&t) {
            prop_assert!(new.validate().is_valid());
        }
    }
}

/// The bracket with a generator agrees between the three routes: structure
/// constants, Poisson bracket, and the UE commutator divided by t.
#[test]
fn generator_bracket_routes_agree() {
    for lie in [sl2(), heisenberg3()] {
        let n = lie.dim();
        for i in 0..n {
            for j in 0..n {
                let poisson = lie.poisson(&lie.gen_poly(i), &lie.gen_poly(j));
                assert_eq!(poisson, lie.bracket_poly(i, j));
                let ue = lie
                    .ue_commutator(&UEElement::generator(n, i), &UEElement::generator(n, j))
                    .div_t_exact();
                assert_eq!(ue.as_symbol(), lie.bracket_poly(i, j));
            }
        }
    }
}

/// Killing form transport along sampled base changes (exact tensoriality).
#[test]
fn killing_transport_along_shears() {
    let lie = sl2();
    let shears = [
        QMatrix::from_rows(vec![
            vec![Rat::from_integer(1.into()), Rat::from_integer(1.into()), Rat::from_integer(0.into())],
            vec![Rat::from_integer(0.into()), Rat::from_integer(1.into()), Rat::from_integer(0.into())],
            vec![Rat::from_integer(0.into()), Rat::from_integer(2.into()), Rat::from_integer(1.into())],
        ]),
        QMatrix::from_rows(vec![
            vec![Rat::from_integer(2.into()), Rat::from_integer(0.into()), Rat::from_integer(1.into())],
            vec![Rat::from_integer(0.into()), Rat::from_integer(1.into()), Rat::from_integer(0.into())],
            vec![Rat::from_integer(1.into()), Rat::from_integer(0.into()), Rat::from_integer(1.into())],
        ]),
    ];
    for t in shears {
        let moved = lie.change_basis(&t).unwrap();
        assert_eq!(moved.killing_form(), t.transpose().mul(&lie.killing_form()).mul(&t));
    }
}

fn _assert_thread_safe<T: Send + Sync>() {}

#[test]
fn values_are_shareable_across_workers() {
    _assert_thread_safe::<LieAlgebra>();
    _assert_thread_safe::<SymPoly>();
    _assert_thread_safe::<UEElement>();
    _assert_thread_safe::<QMatrix>();
    _assert_thread_safe::<famalg_core::Family>();
    _assert_thread_safe::<famalg_core::star::StarCache>();
}
