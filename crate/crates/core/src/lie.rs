//! Lie algebras presented by structure constants.
//!
//! An algebra is a named basis `X_1 .. X_n` together with the exact rational
//! constants `c^k_ij` of `[X_i, X_j] = sum_k c^k_ij X_k`. Validity
//! (antisymmetry and the Jacobi identity) is checked instance by instance
//! and reported rather than assumed.

use num_traits::{One, Zero};

use crate::error::KernelError;
use crate::linalg::QMatrix;
use crate::poly::SymPoly;
use crate::rat::Rat;
use crate::tpoly::TPoly;

/// Finite-dimensional Lie algebra over the rationals, given by structure
/// constants in a fixed basis.
#[derive(Clone, Debug)]
pub struct LieAlgebra {
    names: Vec<String>,
    /// `c[(i*n + j)*n + k]` is `c^k_ij`.
    c: Vec<Rat>,
    /// Nonzero bracket terms per ordered pair, `bracket[i][j] = [(k, c^k_ij)]`.
    bracket: Vec<Vec<Vec<(usize, Rat)>>>,
}

/// Outcome of a structural validity check; empty means valid.
#[derive(Clone, Debug, Default)]
pub struct ValidityReport {
    pub violations: Vec<String>,
}

impl ValidityReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl LieAlgebra {
    /// Build from a bracket list. Each `(i, j, k, v)` contributes
    /// `c^k_ij = v` and, by antisymmetry, `c^k_ji = -v` (zero-based indices).
    pub fn from_brackets(
        names: Vec<String>,
        brackets: &[(usize, usize, usize, Rat)],
    ) -> Result<Self, KernelError> {
        let n = names.len();
        let mut c = vec![Rat::zero(); n * n * n];
        for (i, j, k, v) in brackets {
            if *i >= n || *j >= n || *k >= n {
                return Err(KernelError::InvalidLieAlgebra(format!(
                    "bracket ({i},{j},{k}) out of range for dimension {n}"
                )));
            }
            c[(i * n + j) * n + k] = c[(i * n + j) * n + k].clone() + v;
            c[(j * n + i) * n + k] = c[(j * n + i) * n + k].clone() - v;
        }
        Ok(Self::from_constants(names, c))
    }

    /// Build from a full structure-constant tensor (no antisymmetry
    /// completion; used by base change and by explicit constant tables).
    pub fn from_constants(names: Vec<String>, c: Vec<Rat>) -> Self {
        let n = names.len();
        assert_eq!(c.len(), n * n * n, "structure constant tensor size");
        let mut bracket = vec![vec![Vec::new(); n]; n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let v = &c[(i * n + j) * n + k];
                    if !v.is_zero() {
                        bracket[i][j].push((k, v.clone()));
                    }
                }
            }
        }
        LieAlgebra { names, c, bracket }
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Index of a generator by name.
    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|s| s == name)
    }

    /// `c^k_ij`.
    pub fn c(&self, i: usize, j: usize, k: usize) -> &Rat {
        let n = self.dim();
        &self.c[(i * n + j) * n + k]
    }

    /// Nonzero terms of `[X_i, X_j]` as `(k, c^k_ij)` pairs.
    pub fn bracket_terms(&self, i: usize, j: usize) -> &[(usize, Rat)] {
        &self.bracket[i][j]
    }

    /// `[X_i, X_j]` as a linear polynomial.
    pub fn bracket_poly(&self, i: usize, j: usize) -> SymPoly {
        let n = self.dim();
        let mut out = SymPoly::zero(n);
        for (k, v) in self.bracket_terms(i, j) {
            out = out.add(&SymPoly::generator(n, *k).scale(v));
        }
        out
    }

    /// Report every violated antisymmetry or Jacobi instance.
    pub fn validate(&self) -> ValidityReport {
        let n = self.dim();
        let mut report = ValidityReport::default();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let lhs = self.c(i, j, k).clone() + self.c(j, i, k);
                    if !lhs.is_zero() {
                        report.violations.push(format!(
                            "antisymmetry violated at (i={}, j={}, k={}): c^k_ij + c^k_ji = {}",
                            i + 1,
                            j + 1,
                            k + 1,
                            lhs
                        ));
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        let mut sum = Rat::zero();
                        for m in 0..n {
                            sum += self.c(i, j, m) * self.c(m, k, l)
                                + self.c(j, k, m) * self.c(m, i, l)
                                + self.c(k, i, m) * self.c(m, j, l);
                        }
                        if !sum.is_zero() {
                            report.violations.push(format!(
                                "Jacobi violated at (i={}, j={}, k={}, l={}): residual {}",
                                i + 1,
                                j + 1,
                                k + 1,
                                l + 1,
                                sum
                            ));
                        }
                    }
                }
            }
        }
        report
    }

    /// Matrix of `ad X_i` in the chosen basis: column `j` holds `[X_i, X_j]`.
    pub fn ad_matrix(&self, i: usize) -> QMatrix {
        let n = self.dim();
        let mut m = QMatrix::zero(n, n);
        for j in 0..n {
            for (k, v) in self.bracket_terms(i, j) {
                m[(*k, j)] = v.clone();
            }
        }
        m
    }

    /// Killing form `B_ij = tr(ad X_i ad X_j)`.
    pub fn killing_form(&self) -> QMatrix {
        let n = self.dim();
        let ads: Vec<QMatrix> = (0..n).map(|i| self.ad_matrix(i)).collect();
        let mut b = QMatrix::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                let prod = ads[i].mul(&ads[j]);
                let mut tr = Rat::zero();
                for k in 0..n {
                    tr += prod[(k, k)].clone();
                }
                b[(i, j)] = tr;
            }
        }
        b
    }

    /// Quadratic Casimir element `sum B^ij X_i X_j` built from the inverse
    /// Killing form. Fails when the Killing form is degenerate.
    pub fn casimir(&self) -> Result<SymPoly, KernelError> {
        let n = self.dim();
        let inv = self
            .killing_form()
            .inverse()
            .map_err(|_| KernelError::NotSemisimple)?;
        let mut cas = SymPoly::zero(n);
        for i in 0..n {
            for j in 0..n {
                if inv[(i, j)].is_zero() {
                    continue;
                }
                let term = SymPoly::generator(n, i)
                    .mul(&SymPoly::generator(n, j))
                    .scale(&inv[(i, j)]);
                cas = cas.add(&term);
            }
        }
        Ok(cas)
    }

    /// Trace of the adjoint representation, `tr_i = c^j_ij`; the linear form
    /// behind the first Chern class.
    pub fn adjoint_trace(&self, i: usize) -> Rat {
        let n = self.dim();
        let mut s = Rat::zero();
        for j in 0..n {
            s += self.c(i, j, j);
        }
        s
    }

    /// Structure constants in the basis `Y_j = sum_k T^k_j X_k`.
    ///
    /// Composing two changes equals changing by the matrix product, and the
    /// result of a valid algebra is again valid.
    pub fn change_basis(&self, t: &QMatrix) -> Result<LieAlgebra, KernelError> {
        let n = self.dim();
        if t.rows() != n || t.cols() != n {
            return Err(KernelError::DimensionMismatch(format!(
                "base change must be {n}x{n}"
            )));
        }
        let t_inv = t.inverse()?;
        let mut c = vec![Rat::zero(); n * n * n];
        for i in 0..n {
            for j in 0..n {
                for p in 0..n {
                    if t[(p, i)].is_zero() {
                        continue;
                    }
                    for q in 0..n {
                        if t[(q, j)].is_zero() {
                            continue;
                        }
                        let w = &t[(p, i)] * &t[(q, j)];
                        for (r, v) in self.bracket_terms(p, q) {
                            for s in 0..n {
                                if t_inv[(s, *r)].is_zero() {
                                    continue;
                                }
                                c[(i * n + j) * n + s] =
                                    c[(i * n + j) * n + s].clone() + &w * v * &t_inv[(s, *r)];
                            }
                        }
                    }
                }
            }
        }
        Ok(LieAlgebra::from_constants(self.names.clone(), c))
    }

    /// Rewrite a polynomial in the old generators as a polynomial in the new
    /// ones, for the same base change as [`LieAlgebra::change_basis`]:
    /// `X_k = sum_j (T^-1)^j_k Y_j`.
    pub fn transport_poly(&self, a: &SymPoly, t: &QMatrix) -> Result<SymPoly, KernelError> {
        let n = self.dim();
        let t_inv = t.inverse()?;
        let subst: Vec<Vec<Rat>> = (0..n)
            .map(|k| (0..n).map(|j| t_inv[(j, k)].clone()).collect())
            .collect();
        Ok(a.substitute_linear(&subst))
    }

    /// Decompose a linear polynomial into generator coefficients; `None`
    /// when the input has terms of degree other than one or involves `t`.
    pub fn linear_coefficients(&self, a: &SymPoly) -> Option<Vec<Rat>> {
        let n = self.dim();
        let mut coeffs = vec![Rat::zero(); n];
        for (m, c) in a.terms() {
            if m.degree() != 1 || !c.is_constant() {
                return None;
            }
            let i = m.0.iter().position(|&e| e == 1).unwrap();
            coeffs[i] = c.coeff(0);
        }
        Some(coeffs)
    }

    /// The generator `X_i` as a polynomial.
    pub fn gen_poly(&self, i: usize) -> SymPoly {
        SymPoly::generator(self.dim(), i)
    }

    /// Constant polynomial in this algebra's symmetric algebra.
    pub fn const_poly(&self, c: Rat) -> SymPoly {
        SymPoly::constant(self.dim(), c)
    }

    /// Shorthand used by tests and the CLI: polynomial with one `t`-free term.
    pub fn mono_poly(&self, exps: &[u32]) -> SymPoly {
        SymPoly::monomial(crate::poly::Mono(exps.to_vec()), TPoly::one())
    }
}

/// sl(2): basis `e, f, h` with `[e,f] = h`, `[h,e] = 2e`, `[h,f] = -2f`.
pub fn sl2() -> LieAlgebra {
    LieAlgebra::from_brackets(
        vec!["e".into(), "f".into(), "h".into()],
        &[
            (0, 1, 2, Rat::one()),
            (2, 0, 0, Rat::from_integer(2.into())),
            (2, 1, 1, Rat::from_integer((-2).into())),
        ],
    )
    .expect("sl2 preset")
}

/// Heisenberg algebra: basis `p, q, z` with `[p,q] = z`.
pub fn heisenberg3() -> LieAlgebra {
    LieAlgebra::from_brackets(
        vec!["p".into(), "q".into(), "z".into()],
        &[(0, 1, 2, Rat::one())],
    )
    .expect("heisenberg3 preset")
}

/// Two-dimensional non-abelian algebra: basis `a, b` with `[a,b] = b`.
/// The minimal case where the adjoint representation has nonzero trace.
pub fn affine2() -> LieAlgebra {
    LieAlgebra::from_brackets(vec!["a".into(), "b".into()], &[(0, 1, 1, Rat::one())])
        .expect("affine2 preset")
}

/// Abelian algebra of dimension `n`: all brackets vanish.
pub fn abelian(n: usize) -> LieAlgebra {
    let names = (1..=n).map(|i| format!("x{i}")).collect();
    LieAlgebra::from_brackets(names, &[]).expect("abelian preset")
}
