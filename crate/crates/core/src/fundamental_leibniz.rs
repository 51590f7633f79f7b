//! The fundamental set L = g (x) g with its circle product, and checkers for
//! the Leibniz-algebra structure and Leibniz-representation axioms.
//!
//! Elements of L are stored as n x n coefficient matrices over the basis
//! (e_i, e_j), flattened row-major (index i*n + j). That ordering is part of
//! the serialization contract. The full tensor square is kept; nothing is
//! antisymmetrized.

use crate::error::{Error, Result};
use crate::exact_linalg::{vec_add_scaled, Field, Matrix, Scalar};
use crate::lts_core::LieTripleSystem;

/// An element of the fundamental set, `sum a[i][j] (e_i, e_j)`.
#[derive(Debug, Clone, PartialEq)]
pub struct FundamentalElement {
    field: Field,
    dim: usize,
    coeffs: Vec<Scalar>,
}

impl FundamentalElement {
    pub fn zero(field: Field, dim: usize) -> FundamentalElement {
        FundamentalElement {
            field,
            dim,
            coeffs: vec![field.zero(); dim * dim],
        }
    }

    /// The fundamental object `(e_i, e_j)`.
    pub fn basis_pair(field: Field, dim: usize, i: usize, j: usize) -> FundamentalElement {
        let mut e = FundamentalElement::zero(field, dim);
        e.coeffs[i * dim + j] = field.one();
        e
    }

    /// The rank-one fundamental object `(x, y)`.
    pub fn from_pair(field: Field, x: &[Scalar], y: &[Scalar]) -> FundamentalElement {
        let dim = x.len();
        assert_eq!(dim, y.len(), "pair components of unequal length");
        let mut e = FundamentalElement::zero(field, dim);
        for (i, xi) in x.iter().enumerate() {
            for (j, yj) in y.iter().enumerate() {
                e.coeffs[i * dim + j] = xi.mul_ref(yj);
            }
        }
        e
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeff(&self, i: usize, j: usize) -> &Scalar {
        &self.coeffs[i * self.dim + j]
    }

    pub fn set_coeff(&mut self, i: usize, j: usize, v: Scalar) {
        self.coeffs[i * self.dim + j] = v;
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    pub fn iter_nonzero(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        let n = self.dim;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, s)| !s.is_zero())
            .map(move |(p, s)| (p / n, p % n, s))
    }
}

/// Bilinear extension of the circle product
/// `(x1,x2) o (y1,y2) = ([x1,x2,y1], y2) + (y1, [x1,x2,y2])`.
pub fn circle(
    t: &LieTripleSystem,
    a: &FundamentalElement,
    b: &FundamentalElement,
) -> Result<FundamentalElement> {
    let n = t.dim();
    if a.dim != n || b.dim != n {
        return Err(Error::DimensionMismatch(
            "fundamental element dimension differs from system".to_string(),
        ));
    }
    if a.field != t.field() || b.field != t.field() {
        return Err(Error::FieldMismatch(
            "fundamental element field differs from system".to_string(),
        ));
    }
    let mut out = FundamentalElement::zero(t.field(), n);
    for (i, j, ca) in a.iter_nonzero() {
        for (k, l, cb) in b.iter_nonzero() {
            let c = ca.mul_ref(cb);
            for (s, v) in t.bracket_basis(i, j, k).iter().enumerate() {
                if !v.is_zero() {
                    let w = out.coeff(s, l).add_ref(&v.mul_ref(&c));
                    out.set_coeff(s, l, w);
                }
            }
            for (s, v) in t.bracket_basis(i, j, l).iter().enumerate() {
                if !v.is_zero() {
                    let w = out.coeff(k, s).add_ref(&v.mul_ref(&c));
                    out.set_coeff(k, s, w);
                }
            }
        }
    }
    Ok(out)
}

/// The matrix of `ad^L(x): w -> [x1, x2, w]` extended linearly over L.
pub fn ad_matrix(t: &LieTripleSystem, x: &FundamentalElement) -> Matrix {
    let n = t.dim();
    let mut m = Matrix::zero(t.field(), n, n);
    for (i, j, c) in x.iter_nonzero() {
        m = m.add(&t.ad_left_basis(i, j).scale(c)).expect("same shape");
    }
    m
}

/// Does the circle product satisfy the left Leibniz identity
/// `x o (y o z) = (x o y) o z + y o (x o z)` on all basis triples of L?
pub fn verify_leibniz(t: &LieTripleSystem) -> bool {
    let n = t.dim();
    let f = t.field();
    let basis =
        |p: usize| FundamentalElement::basis_pair(f, n, p / n, p % n);
    for p in 0..n * n {
        let x = basis(p);
        for q in 0..n * n {
            let y = basis(q);
            let xy = circle(t, &x, &y).unwrap();
            for r in 0..n * n {
                let z = basis(r);
                let lhs = circle(t, &x, &circle(t, &y, &z).unwrap()).unwrap();
                let mut rhs = circle(t, &xy, &z).unwrap();
                let t2 = circle(t, &y, &circle(t, &x, &z).unwrap()).unwrap();
                for s in 0..n * n {
                    rhs.coeffs[s] = rhs.coeffs[s].add_ref(&t2.coeffs[s]);
                }
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

/// Does `ad^L(x) ad^L(y) - ad^L(y) ad^L(x) = ad^L(x o y)` hold for all basis
/// x, y in L? This is the statement that ad^L is a homomorphism of Leibniz
/// algebras into gl(g).
pub fn ad_homomorphism_check(t: &LieTripleSystem) -> bool {
    let n = t.dim();
    let f = t.field();
    for p in 0..n * n {
        let x = FundamentalElement::basis_pair(f, n, p / n, p % n);
        let ax = ad_matrix(t, &x);
        for q in 0..n * n {
            let y = FundamentalElement::basis_pair(f, n, q / n, q % n);
            let ay = ad_matrix(t, &y);
            let comm = ax.mul(&ay).unwrap().sub(&ay.mul(&ax).unwrap()).unwrap();
            let axy = ad_matrix(t, &circle(t, &x, &y).unwrap());
            if comm != axy {
                return false;
            }
        }
    }
    true
}

/// The four Leibniz-representation axioms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LeibnizRepAxiom {
    Llm,
    Mll,
    Lml,
    Mmm,
}

#[derive(Debug, Clone)]
pub struct LeibnizRepViolation {
    pub axiom: LeibnizRepAxiom,
    /// (L-basis index of x, L-basis index of y, M-basis index).
    pub indices: (usize, usize, usize),
}

/// For each of MLL, LML, MMM: `Some(conclusion holds)` when LLM and the other
/// two hold, `None` when the premises fail on this instance.
#[derive(Debug, Clone)]
pub struct ImpliedAxioms {
    pub mll_from_others: Option<bool>,
    pub lml_from_others: Option<bool>,
    pub mmm_from_others: Option<bool>,
}

#[derive(Debug, Clone)]
pub struct LeibnizRepReport {
    pub llm_ok: bool,
    pub mll_ok: bool,
    pub lml_ok: bool,
    pub mmm_ok: bool,
    pub violations: Vec<LeibnizRepViolation>,
    pub implied: ImpliedAxioms,
}

impl LeibnizRepReport {
    pub fn all_ok(&self) -> bool {
        self.llm_ok && self.mll_ok && self.lml_ok && self.mmm_ok
    }
}

/// Check the Leibniz-representation axioms for a pair of actions of L on a
/// module of dimension `dim_m`. `act_l(p, m)` is `[x_p, m]_L` for the p-th
/// basis element of L; `act_r(m, p)` is `[m, x_p]_R`. Both are extended
/// linearly over L internally, so only basis actions need to be supplied.
pub fn verify_leibniz_rep(
    t: &LieTripleSystem,
    act_l: &dyn Fn(usize, &[Scalar]) -> Vec<Scalar>,
    act_r: &dyn Fn(&[Scalar], usize) -> Vec<Scalar>,
    dim_m: usize,
) -> LeibnizRepReport {
    let n = t.dim();
    let f = t.field();
    let nn = n * n;

    let ext_l = |x: &FundamentalElement, m: &[Scalar]| -> Vec<Scalar> {
        let mut out = vec![f.zero(); dim_m];
        for (i, j, c) in x.iter_nonzero() {
            vec_add_scaled(&mut out, &act_l(i * n + j, m), c);
        }
        out
    };
    let ext_r = |m: &[Scalar], x: &FundamentalElement| -> Vec<Scalar> {
        let mut out = vec![f.zero(); dim_m];
        for (i, j, c) in x.iter_nonzero() {
            vec_add_scaled(&mut out, &act_r(m, i * n + j), c);
        }
        out
    };

    let mut violations = Vec::new();
    let mut push = |axiom, px, py, mi| {
        violations.push(LeibnizRepViolation {
            axiom,
            indices: (px, py, mi),
        });
    };

    for px in 0..nn {
        let x = FundamentalElement::basis_pair(f, n, px / n, px % n);
        for py in 0..nn {
            let y = FundamentalElement::basis_pair(f, n, py / n, py % n);
            let xy = circle(t, &x, &y).unwrap();
            for mi in 0..dim_m {
                let mut m = vec![f.zero(); dim_m];
                m[mi] = f.one();

                // (LLM)  [x o y, m]_L = [x, [y, m]_L]_L - [y, [x, m]_L]_L
                let lhs = ext_l(&xy, &m);
                let mut rhs = act_l(px, &act_l(py, &m));
                let t2 = act_l(py, &act_l(px, &m));
                for (a, b) in rhs.iter_mut().zip(&t2) {
                    *a = a.sub_ref(b);
                }
                if lhs != rhs {
                    push(LeibnizRepAxiom::Llm, px, py, mi);
                }

                // (MLL)  [m, x o y]_R = [[m, x]_R, y]_R + [x, [m, y]_R]_L
                let lhs = ext_r(&m, &xy);
                let mut rhs = act_r(&act_r(&m, px), py);
                let t2 = act_l(px, &act_r(&m, py));
                for (a, b) in rhs.iter_mut().zip(&t2) {
                    *a = a.add_ref(b);
                }
                if lhs != rhs {
                    push(LeibnizRepAxiom::Mll, px, py, mi);
                }

                // (LML)  [x, [m, y]_R]_L = [[x, m]_L, y]_R + [m, x o y]_R
                let lhs = act_l(px, &act_r(&m, py));
                let mut rhs = act_r(&act_l(px, &m), py);
                let t2 = ext_r(&m, &xy);
                for (a, b) in rhs.iter_mut().zip(&t2) {
                    *a = a.add_ref(b);
                }
                if lhs != rhs {
                    push(LeibnizRepAxiom::Lml, px, py, mi);
                }

                // (MMM)  [[m, x]_R + [x, m]_L, y]_R = 0
                let mut s = act_r(&m, px);
                let t2 = act_l(px, &m);
                for (a, b) in s.iter_mut().zip(&t2) {
                    *a = a.add_ref(b);
                }
                let out = act_r(&s, py);
                if out.iter().any(|v| !v.is_zero()) {
                    push(LeibnizRepAxiom::Mmm, px, py, mi);
                }
            }
        }
    }

    let ok = |ax: LeibnizRepAxiom| !violations.iter().any(|v| v.axiom == ax);
    let (llm_ok, mll_ok, lml_ok, mmm_ok) = (
        ok(LeibnizRepAxiom::Llm),
        ok(LeibnizRepAxiom::Mll),
        ok(LeibnizRepAxiom::Lml),
        ok(LeibnizRepAxiom::Mmm),
    );
    let implied = ImpliedAxioms {
        mll_from_others: (llm_ok && lml_ok && mmm_ok).then_some(mll_ok),
        lml_from_others: (llm_ok && mll_ok && mmm_ok).then_some(lml_ok),
        mmm_from_others: (llm_ok && mll_ok && lml_ok).then_some(mmm_ok),
    };
    LeibnizRepReport {
        llm_ok,
        mll_ok,
        lml_ok,
        mmm_ok,
        violations,
        implied,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lts_core::test_fixtures::{sl2_lts, t2};

    fn qi(v: i64) -> Scalar {
        Field::Rational.from_i64(v)
    }

    #[test]
    fn circle_on_t2() {
        let t = t2();
        let f = t.field();
        let x = FundamentalElement::basis_pair(f, 2, 0, 1);
        let got = circle(&t, &x, &x).unwrap();
        // ([e1,e2,e1], e2) + (e1, [e1,e2,e2]) = (e2, e2)
        let mut want = FundamentalElement::zero(f, 2);
        want.set_coeff(1, 1, qi(1));
        assert_eq!(got, want);
    }

    #[test]
    fn circle_kills_diagonal_pairs() {
        let t = t2();
        let f = t.field();
        let xx = FundamentalElement::from_pair(f, &[qi(2), qi(3)], &[qi(2), qi(3)]);
        for q in 0..4 {
            let y = FundamentalElement::basis_pair(f, 2, q / 2, q % 2);
            assert!(circle(&t, &xx, &y).unwrap().is_zero());
        }
    }

    #[test]
    fn circle_zero_system() {
        let t = LieTripleSystem::zero(Field::Rational, 3);
        let a = FundamentalElement::basis_pair(t.field(), 3, 0, 2);
        let b = FundamentalElement::basis_pair(t.field(), 3, 1, 1);
        assert!(circle(&t, &a, &b).unwrap().is_zero());
    }

    #[test]
    fn leibniz_identity_on_fixtures() {
        assert!(verify_leibniz(&t2()));
        assert!(verify_leibniz(&LieTripleSystem::zero(Field::Rational, 2)));
        assert!(verify_leibniz(&sl2_lts()));
    }

    #[test]
    fn ad_is_leibniz_homomorphism() {
        assert!(ad_homomorphism_check(&t2()));
        assert!(ad_homomorphism_check(&LieTripleSystem::zero(Field::Rational, 3)));
        assert!(ad_homomorphism_check(&sl2_lts()));
    }

    #[test]
    fn zero_actions_satisfy_all_axioms() {
        let t = t2();
        let dim_m = 3;
        let zl = |_: usize, _: &[Scalar]| vec![qi(0); 3];
        let zr = |_: &[Scalar], _: usize| vec![qi(0); 3];
        let report = verify_leibniz_rep(&t, &zl, &zr, dim_m);
        assert!(report.all_ok());
        assert_eq!(report.implied.mmm_from_others, Some(true));
    }
}
