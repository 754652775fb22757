//! Evaluable Hochschild cochains on the matrix-polynomial algebra.
//!
//! A `Cochain` is an arity together with a total evaluator on tuples of
//! `MatPoly`; identities between cochains are checked by evaluation on
//! spanning tuples, and multilinearity upgrades spanning-set success to the
//! whole truncation. The differential, the circle insertion product
//! (signed `(-1)^((k-i-1)(l-1))` per insertion slot) and the Gerstenhaber
//! bracket built from it follow one fixed convention throughout; the suites
//! exercise the identities that pin that convention down empirically.

use std::sync::Arc;

use crate::family::Family;
use crate::matpoly::MatPoly;
use crate::rat::Rat;

type Eval = Arc<dyn Fn(&[MatPoly]) -> MatPoly + Send + Sync>;

/// Multilinear operator `C^k(A, A)` evaluated pointwise.
#[derive(Clone)]
pub struct Cochain {
    arity: usize,
    label: String,
    eval: Eval,
}

impl Cochain {
    pub fn new<F>(arity: usize, label: impl Into<String>, eval: F) -> Self
    where
        F: Fn(&[MatPoly]) -> MatPoly + Send + Sync + 'static,
    {
        Cochain {
            arity,
            label: label.into(),
            eval: Arc::new(eval),
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn apply(&self, args: &[MatPoly]) -> MatPoly {
        assert_eq!(args.len(), self.arity, "cochain arity mismatch");
        (self.eval)(args)
    }

    // ---- Atoms ----

    /// Multiplication as a 2-cochain.
    pub fn mu() -> Self {
        Cochain::new(2, "mu", |args| args[0].mat_mul(&args[1]))
    }

    /// Identity 1-cochain.
    pub fn id() -> Self {
        Cochain::new(1, "id", |args| args[0].clone())
    }

    /// Noncommutative Poisson bracket as a 2-cochain.
    pub fn poisson(fam: Arc<Family>) -> Self {
        Cochain::new(2, "P", move |args| fam.nc_poisson(&args[0], &args[1]))
    }

    pub fn nabla(fam: Arc<Family>) -> Self {
        Cochain::new(1, "nabla", move |args| fam.nabla(&args[0]))
    }

    pub fn nabla_prime(fam: Arc<Family>) -> Self {
        Cochain::new(1, "nabla'", move |args| fam.nabla_prime(&args[0]))
    }

    pub fn chern_c1(fam: Arc<Family>) -> Self {
        Cochain::new(1, "c1", move |args| fam.chern_c1(&args[0]))
    }

    /// The matrix lift of the closed second-order form, entry for entry on
    /// the tensor legs: `Phi(A (x) a, B (x) b) = AB (x) phi(a, b)`.
    pub fn phi(fam: Arc<Family>) -> Self {
        Cochain::new(2, "Phi", move |args| {
            let (a, b) = (&args[0], &args[1]);
            let d = a.dim();
            let mut out = MatPoly::zero(d, fam.lie().dim());
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
                            out.entry(p, s).add(&fam.lie().phi_closed_form(x, y));
                    }
                }
            }
            out
        })
    }

    /// Deformation term `m_k` of the matrix star product as a 2-cochain.
    pub fn star_m(fam: Arc<Family>, k: usize) -> Self {
        Cochain::new(2, format!("m{k}"), move |args| {
            fam.mat_star_coefficient(&args[0], &args[1], k)
        })
    }

    // ---- Combinators ----

    pub fn add(&self, other: &Cochain) -> Cochain {
        assert_eq!(self.arity, other.arity, "cochain arity mismatch");
        let (f, g) = (self.eval.clone(), other.eval.clone());
        Cochain::new(
            self.arity,
            format!("({} + {})", self.label, other.label),
            move |args| f(args).add(&g(args)),
        )
    }

    pub fn sub(&self, other: &Cochain) -> Cochain {
        assert_eq!(self.arity, other.arity, "cochain arity mismatch");
        let (f, g) = (self.eval.clone(), other.eval.clone());
        Cochain::new(
            self.arity,
            format!("({} - {})", self.label, other.label),
            move |args| f(args).sub(&g(args)),
        )
    }

    pub fn scale(&self, c: Rat) -> Cochain {
        let f = self.eval.clone();
        Cochain::new(
            self.arity,
            format!("{}*{}", crate::rat::fmt_rat(&c), self.label),
            move |args| f(args).scale(&c),
        )
    }

    /// Hochschild differential: for an n-cochain `f`,
    /// `(d f)(a_0, .., a_n) = a_0 f(a_1, .., a_n)
    ///   + sum_{k=1..n} (-1)^k f(a_0, .., a_{k-1} a_k, .., a_n)
    ///   + (-1)^{n+1} f(a_0, .., a_{n-1}) a_n`.
    pub fn d_hochschild(&self) -> Cochain {
        let n = self.arity;
        let f = self.eval.clone();
        Cochain::new(n + 1, format!("dH({})", self.label), move |args| {
            let mut out = args[0].mat_mul(&f(&args[1..]));
            for k in 1..=n {
                let mut inner: Vec<MatPoly> = Vec::with_capacity(n);
                inner.extend_from_slice(&args[..k - 1]);
                inner.push(args[k - 1].mat_mul(&args[k]));
                inner.extend_from_slice(&args[k + 1..]);
                let term = f(&inner);
                out = if k.is_multiple_of(2) { out.add(&term) } else { out.sub(&term) };
            }
            let last = f(&args[..n]).mat_mul(&args[n]);
            out = if (n + 1).is_multiple_of(2) { out.add(&last) } else { out.sub(&last) };
            out
        })
    }

    /// Circle insertion product of a k-cochain with an l-cochain:
    /// `sum_{i=0..k-1} (-1)^{(k-i-1)(l-1)}
    ///    f(a_1, .., a_i, g(a_{i+1}, .., a_{i+l}), .., a_{k+l-1})`.
    pub fn circ(&self, other: &Cochain) -> Cochain {
        assert!(self.arity >= 1 && other.arity >= 1, "circ needs arity >= 1");
        let (k, l) = (self.arity, other.arity);
        let (f, g) = (self.eval.clone(), other.eval.clone());
        Cochain::new(
            k + l - 1,
            format!("({} o {})", self.label, other.label),
            move |args| {
                let mut out: Option<MatPoly> = None;
                for i in 0..k {
                    let mut inner: Vec<MatPoly> = Vec::with_capacity(k);
                    inner.extend_from_slice(&args[..i]);
                    inner.push(g(&args[i..i + l]));
                    inner.extend_from_slice(&args[i + l..]);
                    let term = f(&inner);
                    let negative = ((k - i - 1) * (l - 1)) % 2 == 1;
                    out = Some(match out {
                        None => {
                            if negative {
                                term.neg()
                            } else {
                                term
                            }
                        }
                        Some(acc) => {
                            if negative {
                                acc.sub(&term)
                            } else {
                                acc.add(&term)
                            }
                        }
                    });
                }
                out.expect("arity >= 1")
            },
        )
    }

    /// Gerstenhaber bracket `[f, g] = f o g - (-1)^{(k-1)(l-1)} g o f`.
    pub fn gerstenhaber(&self, other: &Cochain) -> Cochain {
        let fg = self.circ(other);
        let gf = other.circ(self);
        let sign = ((self.arity - 1) * (other.arity - 1)) % 2 == 1;
        let label = format!("[{}, {}]", self.label, other.label);
        let mut out = if sign { fg.add(&gf) } else { fg.sub(&gf) };
        out.label = label;
        out
    }
}
