//! Finite-dimensional representations by explicit rational matrices.

use crate::lie::{LieAlgebra, ValidityReport};
use crate::linalg::QMatrix;
use crate::rat::{rat_int, Rat};
use num_traits::{One, Zero};

/// A representation `tau`: one `d x d` matrix per generator.
#[derive(Clone, Debug)]
pub struct Representation {
    d: usize,
    mats: Vec<QMatrix>,
}

impl Representation {
    pub fn new(mats: Vec<QMatrix>) -> Self {
        let d = mats.first().map_or(0, QMatrix::rows);
        assert!(
            mats.iter().all(|m| m.rows() == d && m.cols() == d),
            "representation matrices must be square of equal size"
        );
        Representation { d, mats }
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn mat(&self, i: usize) -> &QMatrix {
        &self.mats[i]
    }

    pub fn mats(&self) -> &[QMatrix] {
        &self.mats
    }

    /// Check the homomorphism property
    /// `tau(X_i) tau(X_j) - tau(X_j) tau(X_i) = sum_k c^k_ij tau(X_k)`
    /// for every pair, reporting each failing pair.
    pub fn validate(&self, lie: &LieAlgebra) -> ValidityReport {
        let mut report = ValidityReport::default();
        if self.mats.len() != lie.dim() {
            report.violations.push(format!(
                "expected {} matrices, got {}",
                lie.dim(),
                self.mats.len()
            ));
            return report;
        }
        for i in 0..lie.dim() {
            for j in 0..lie.dim() {
                let lhs = self.mats[i].mul(&self.mats[j]).sub(&self.mats[j].mul(&self.mats[i]));
                let mut rhs = QMatrix::zero(self.d, self.d);
                for (k, v) in lie.bracket_terms(i, j) {
                    rhs = rhs.add(&self.mats[*k].scale(v));
                }
                if lhs != rhs {
                    report.violations.push(format!(
                        "bracket relation fails on ({}, {})",
                        lie.names()[i],
                        lie.names()[j]
                    ));
                }
            }
        }
        report
    }

    /// One-dimensional trivial representation.
    pub fn trivial(lie: &LieAlgebra) -> Self {
        Representation::new(vec![QMatrix::zero(1, 1); lie.dim()])
    }

    /// Adjoint representation: `tau(X_i) = ad X_i`.
    pub fn adjoint(lie: &LieAlgebra) -> Self {
        Representation::new((0..lie.dim()).map(|i| lie.ad_matrix(i)).collect())
    }

    /// Transport along the base change `Y_j = sum_k T^k_j X_k`:
    /// the new generator matrices are `tau(Y_j) = sum_k T^k_j tau(X_k)`.
    pub fn transport(&self, t: &QMatrix) -> Self {
        let n = self.mats.len();
        let mats = (0..n)
            .map(|j| {
                let mut m = QMatrix::zero(self.d, self.d);
                for k in 0..n {
                    if !t[(k, j)].is_zero() {
                        m = m.add(&self.mats[k].scale(&t[(k, j)]));
                    }
                }
                m
            })
            .collect();
        Representation::new(mats)
    }
}

fn from_i64(rows: &[&[i64]]) -> QMatrix {
    QMatrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|&x| rat_int(x)).collect())
            .collect(),
    )
}

/// Defining two-dimensional representation of sl(2).
pub fn sl2_standard() -> Representation {
    Representation::new(vec![
        from_i64(&[&[0, 1], &[0, 0]]),  // e
        from_i64(&[&[0, 0], &[1, 0]]),  // f
        from_i64(&[&[1, 0], &[0, -1]]), // h
    ])
}

/// Three-dimensional representation of the Heisenberg algebra by strictly
/// upper triangular matrices.
pub fn heisenberg3_standard() -> Representation {
    Representation::new(vec![
        from_i64(&[&[0, 1, 0], &[0, 0, 0], &[0, 0, 0]]), // p
        from_i64(&[&[0, 0, 0], &[0, 0, 1], &[0, 0, 0]]), // q
        from_i64(&[&[0, 0, 1], &[0, 0, 0], &[0, 0, 0]]), // z
    ])
}

/// Two-dimensional representation of the `[a,b] = b` algebra coming from the
/// affine action `x -> ax + b` of the line.
pub fn affine2_standard() -> Representation {
    Representation::new(vec![
        from_i64(&[&[1, 0], &[0, 0]]), // a
        from_i64(&[&[0, 1], &[0, 0]]), // b
    ])
}

/// Diagonal representation of the abelian algebra: `tau(X_i) = E_ii`.
pub fn abelian_standard(n: usize) -> Representation {
    let mats = (0..n)
        .map(|i| {
            let mut m = QMatrix::zero(n, n);
            m[(i, i)] = Rat::one();
            m
        })
        .collect();
    Representation::new(mats)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{abelian, affine2, heisenberg3, sl2};

    #[test]
    fn standard_reps_satisfy_bracket_relations() {
        assert!(sl2_standard().validate(&sl2()).is_valid());
        assert!(heisenberg3_standard().validate(&heisenberg3()).is_valid());
        assert!(affine2_standard().validate(&affine2()).is_valid());
        assert!(abelian_standard(4).validate(&abelian(4)).is_valid());
    }

    #[test]
    fn trivial_and_adjoint_are_valid() {
        for lie in [sl2(), heisenberg3(), affine2(), abelian(3)] {
            assert!(Representation::trivial(&lie).validate(&lie).is_valid());
            assert!(Representation::adjoint(&lie).validate(&lie).is_valid());
        }
    }

    #[test]
    fn broken_rep_reports_the_failing_pair() {
        let lie = sl2();
        let mut mats = sl2_standard().mats().to_vec();
        mats[2] = QMatrix::identity(2); // replace tau(h)
        let report = Representation::new(mats).validate(&lie);
        assert!(!report.is_valid());
        assert!(report.violations.iter().any(|v| v.contains("(e, h)")));
    }

    #[test]
    fn transported_rep_matches_new_structure_constants() {
        let lie = sl2();
        let rep = sl2_standard();
        let t = QMatrix::from_rows(vec![
            vec![rat_int(1), rat_int(2), rat_int(0)],
            vec![rat_int(0), rat_int(1), rat_int(0)],
            vec![rat_int(1), rat_int(0), rat_int(1)],
        ]);
        let new_lie = lie.change_basis(&t).unwrap();
        let new_rep = rep.transport(&t);
        assert!(new_rep.validate(&new_lie).is_valid());
    }
}
