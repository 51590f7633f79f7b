//! Representations (V, theta) of a Lie triple system, the derived operator D,
//! the adjoint representation, and the brackets that make Hom(g, V) a module
//! over the Leibniz algebra of the fundamental set.
//!
//! theta is stored as raw bilinear data theta(e_i, e_j); no symmetry is
//! assumed. D(x1, x2) := theta(x2, x1) - theta(x1, x2).

use crate::error::{Error, Result};
use crate::exact_linalg::{Field, Matrix, Scalar};
use crate::fundamental_leibniz::{circle, FundamentalElement};
use crate::lts_core::LieTripleSystem;

/// A bilinear map theta: g x g -> End(V), stored as an n x n array of
/// m x m matrices.
#[derive(Debug, Clone, PartialEq)]
pub struct Representation {
    field: Field,
    dim_g: usize,
    dim_v: usize,
    theta: Vec<Matrix>,
}

impl Representation {
    pub fn new(field: Field, dim_g: usize, dim_v: usize, theta: Vec<Matrix>) -> Result<Representation> {
        if theta.len() != dim_g * dim_g {
            return Err(Error::DimensionMismatch(format!(
                "theta has {} blocks, expected {}^2",
                theta.len(),
                dim_g
            )));
        }
        for m in &theta {
            if m.rows() != dim_v || m.cols() != dim_v {
                return Err(Error::DimensionMismatch(format!(
                    "theta block is {}x{}, expected {}x{}",
                    m.rows(),
                    m.cols(),
                    dim_v,
                    dim_v
                )));
            }
            if m.field() != field {
                return Err(Error::FieldMismatch(
                    "theta block over a different field".to_string(),
                ));
            }
        }
        Ok(Representation {
            field,
            dim_g,
            dim_v,
            theta,
        })
    }

    pub fn zero(field: Field, dim_g: usize, dim_v: usize) -> Representation {
        Representation {
            field,
            dim_g,
            dim_v,
            theta: vec![Matrix::zero(field, dim_v, dim_v); dim_g * dim_g],
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim_g(&self) -> usize {
        self.dim_g
    }

    pub fn dim_v(&self) -> usize {
        self.dim_v
    }

    pub fn theta(&self, i: usize, j: usize) -> &Matrix {
        &self.theta[i * self.dim_g + j]
    }

    /// `D(e_i, e_j) = theta(e_j, e_i) - theta(e_i, e_j)`.
    pub fn dee_basis(&self, i: usize, j: usize) -> Matrix {
        self.theta(j, i).sub(self.theta(i, j)).expect("same shape")
    }

    /// theta extended bilinearly.
    pub fn theta_at(&self, x: &[Scalar], y: &[Scalar]) -> Result<Matrix> {
        if x.len() != self.dim_g || y.len() != self.dim_g {
            return Err(Error::DimensionMismatch(
                "theta argument length differs from dim g".to_string(),
            ));
        }
        let mut out = Matrix::zero(self.field, self.dim_v, self.dim_v);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                out = out.add(&self.theta(i, j).scale(&xi.mul_ref(yj)))?;
            }
        }
        Ok(out)
    }
}

/// Bilinear extension of `D(x1, x2) = theta(x2, x1) - theta(x1, x2)`.
pub fn dee(rep: &Representation, x1: &[Scalar], x2: &[Scalar]) -> Result<Matrix> {
    rep.theta_at(x2, x1)?.sub(&rep.theta_at(x1, x2)?)
}

/// The adjoint representation on V = g: `theta(x1, x2) w = [w, x1, x2]`.
pub fn adjoint_rep(t: &LieTripleSystem) -> Representation {
    let n = t.dim();
    let f = t.field();
    let mut theta = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let mut m = Matrix::zero(f, n, n);
            for k in 0..n {
                for (l, s) in t.bracket_basis(k, i, j).iter().enumerate() {
                    m.set(l, k, s.clone());
                }
            }
            theta.push(m);
        }
    }
    Representation {
        field: f,
        dim_g: n,
        dim_v: n,
        theta,
    }
}

/// The representation axioms. R3 is the derived commutator identity for D;
/// the report records it separately because R1 implies R3 but not conversely.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RepAxiom {
    R1,
    R2,
    R3,
}

#[derive(Debug, Clone)]
pub struct RepViolation {
    pub axiom: RepAxiom,
    pub indices: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct RepReport {
    pub r1_ok: bool,
    pub r2_ok: bool,
    pub r3_ok: bool,
    pub violations: Vec<RepViolation>,
    /// `Some(r3_ok)` when R1 holds: records that the implication R1 => R3 was
    /// confirmed on this instance.
    pub r1_implies_r3: Option<bool>,
}

impl RepReport {
    pub fn ok(&self) -> bool {
        self.r1_ok && self.r2_ok
    }
}

/// Check (R1), (R2) and the derived (R3) exhaustively on basis tuples.
pub fn verify_representation(t: &LieTripleSystem, rep: &Representation) -> Result<RepReport> {
    if rep.dim_g != t.dim() {
        return Err(Error::DimensionMismatch(
            "representation dim_g differs from system dimension".to_string(),
        ));
    }
    if rep.field != t.field() {
        return Err(Error::FieldMismatch(
            "representation field differs from system field".to_string(),
        ));
    }
    let n = t.dim();
    let f = t.field();
    let mut violations = Vec::new();

    // theta(x o y) for basis x = (i,j), y = (k,l) in L.
    let theta_of = |elt: &FundamentalElement| -> Matrix {
        let mut out = Matrix::zero(f, rep.dim_v, rep.dim_v);
        for (a, b, c) in elt.iter_nonzero() {
            out = out.add(&rep.theta(a, b).scale(c)).expect("same shape");
        }
        out
    };
    let dee_of = |elt: &FundamentalElement| -> Matrix {
        let mut out = Matrix::zero(f, rep.dim_v, rep.dim_v);
        for (a, b, c) in elt.iter_nonzero() {
            out = out.add(&rep.dee_basis(a, b).scale(c)).expect("same shape");
        }
        out
    };

    for i in 0..n {
        for j in 0..n {
            let d_ij = rep.dee_basis(i, j);
            let x = FundamentalElement::basis_pair(f, n, i, j);
            for k in 0..n {
                for l in 0..n {
                    let y = FundamentalElement::basis_pair(f, n, k, l);
                    let xy = circle(t, &x, &y)?;
                    // (R1) [D(x), theta(y)] = theta(x o y)
                    let th = rep.theta(k, l);
                    let comm = d_ij.mul(th)?.sub(&th.mul(&d_ij)?)?;
                    if comm != theta_of(&xy) {
                        violations.push(RepViolation {
                            axiom: RepAxiom::R1,
                            indices: vec![i, j, k, l],
                        });
                    }
                    // (R3) [D(x), D(y)] = D(x o y)
                    let d_kl = rep.dee_basis(k, l);
                    let comm = d_ij.mul(&d_kl)?.sub(&d_kl.mul(&d_ij)?)?;
                    if comm != dee_of(&xy) {
                        violations.push(RepViolation {
                            axiom: RepAxiom::R3,
                            indices: vec![i, j, k, l],
                        });
                    }
                }
            }
        }
    }

    // (R2) theta(x1, [y1,y2,y3]) =
    //      theta(y2,y3) theta(x1,y1) - theta(y1,y3) theta(x1,y2)
    //      + D(y1,y2) theta(x1,y3)
    for x1 in 0..n {
        for y1 in 0..n {
            for y2 in 0..n {
                for y3 in 0..n {
                    let mut lhs = Matrix::zero(f, rep.dim_v, rep.dim_v);
                    for (l, s) in t.bracket_basis(y1, y2, y3).iter().enumerate() {
                        if !s.is_zero() {
                            lhs = lhs.add(&rep.theta(x1, l).scale(s))?;
                        }
                    }
                    let rhs = rep
                        .theta(y2, y3)
                        .mul(rep.theta(x1, y1))?
                        .sub(&rep.theta(y1, y3).mul(rep.theta(x1, y2))?)?
                        .add(&rep.dee_basis(y1, y2).mul(rep.theta(x1, y3))?)?;
                    if lhs != rhs {
                        violations.push(RepViolation {
                            axiom: RepAxiom::R2,
                            indices: vec![x1, y1, y2, y3],
                        });
                    }
                }
            }
        }
    }

    let ok = |ax: RepAxiom| !violations.iter().any(|v| v.axiom == ax);
    let (r1_ok, r2_ok, r3_ok) = (ok(RepAxiom::R1), ok(RepAxiom::R2), ok(RepAxiom::R3));
    Ok(RepReport {
        r1_ok,
        r2_ok,
        r3_ok,
        violations,
        r1_implies_r3: r1_ok.then_some(r3_ok),
    })
}

/// A linear map phi: g -> V as an m x n matrix (column i is phi(e_i)).
#[derive(Debug, Clone, PartialEq)]
pub struct HomCochain1 {
    pub matrix: Matrix,
}

impl HomCochain1 {
    pub fn zero(field: Field, dim_v: usize, dim_g: usize) -> HomCochain1 {
        HomCochain1 {
            matrix: Matrix::zero(field, dim_v, dim_g),
        }
    }

    pub fn identity(field: Field, dim: usize) -> HomCochain1 {
        HomCochain1 {
            matrix: Matrix::identity(field, dim),
        }
    }

    /// Flat coordinates, g-index major with the V-component fastest:
    /// `v[i*m + a] = phi(e_i)_a`. This matches the level-0 cochain layout.
    pub fn to_flat(&self) -> Vec<Scalar> {
        let m = self.matrix.rows();
        let n = self.matrix.cols();
        let mut out = Vec::with_capacity(n * m);
        for i in 0..n {
            for a in 0..m {
                out.push(self.matrix.get(a, i).clone());
            }
        }
        out
    }

    pub fn from_flat(field: Field, dim_v: usize, dim_g: usize, flat: &[Scalar]) -> Result<HomCochain1> {
        if flat.len() != dim_v * dim_g {
            return Err(Error::DimensionMismatch(format!(
                "flat length {} != {} * {}",
                flat.len(),
                dim_g,
                dim_v
            )));
        }
        let mut m = Matrix::zero(field, dim_v, dim_g);
        for i in 0..dim_g {
            for a in 0..dim_v {
                m.set(a, i, flat[i * dim_v + a].clone());
            }
        }
        Ok(HomCochain1 { matrix: m })
    }
}

/// `[(x1,x2), phi]_L (x3) = D(x1,x2) phi(x3) - phi([x1,x2,x3])`, extended
/// linearly over the fundamental set.
pub fn hom_bracket_l(
    t: &LieTripleSystem,
    rep: &Representation,
    x: &FundamentalElement,
    phi: &HomCochain1,
) -> Result<HomCochain1> {
    check_hom_args(t, rep, x, phi)?;
    let mut out = Matrix::zero(rep.field, rep.dim_v, rep.dim_g);
    for (i, j, c) in x.iter_nonzero() {
        let term = rep
            .dee_basis(i, j)
            .mul(&phi.matrix)?
            .sub(&phi.matrix.mul(&t.ad_left_basis(i, j))?)?;
        out = out.add(&term.scale(c))?;
    }
    Ok(HomCochain1 { matrix: out })
}

/// `[phi, (x1,x2)]_R (x3) = phi([x1,x2,x3]) - D(x1,x2) phi(x3) + theta(x1,x3) phi(x2) - theta(x2,x3) phi(x1)`,
/// extended linearly.
pub fn hom_bracket_r(
    t: &LieTripleSystem,
    rep: &Representation,
    phi: &HomCochain1,
    x: &FundamentalElement,
) -> Result<HomCochain1> {
    check_hom_args(t, rep, x, phi)?;
    let n = rep.dim_g;
    let mut out = Matrix::zero(rep.field, rep.dim_v, n);
    for (i, j, c) in x.iter_nonzero() {
        let mut term = phi
            .matrix
            .mul(&t.ad_left_basis(i, j))?
            .sub(&rep.dee_basis(i, j).mul(&phi.matrix)?)?;
        let phi_i = phi.matrix.col(i);
        let phi_j = phi.matrix.col(j);
        for w in 0..n {
            let a1 = rep.theta(i, w).mul_vec(&phi_j)?;
            let a2 = rep.theta(j, w).mul_vec(&phi_i)?;
            for r in 0..rep.dim_v {
                let v = term.get(r, w).add_ref(&a1[r]).sub_ref(&a2[r]);
                term.set(r, w, v);
            }
        }
        out = out.add(&term.scale(c))?;
    }
    Ok(HomCochain1 { matrix: out })
}

fn check_hom_args(
    t: &LieTripleSystem,
    rep: &Representation,
    x: &FundamentalElement,
    phi: &HomCochain1,
) -> Result<()> {
    if rep.dim_g != t.dim() || x.dim() != t.dim() {
        return Err(Error::DimensionMismatch(
            "fundamental element or representation dimension differs from system".to_string(),
        ));
    }
    if phi.matrix.rows() != rep.dim_v || phi.matrix.cols() != rep.dim_g {
        return Err(Error::DimensionMismatch(format!(
            "hom cochain is {}x{}, expected {}x{}",
            phi.matrix.rows(),
            phi.matrix.cols(),
            rep.dim_v,
            rep.dim_g
        )));
    }
    Ok(())
}

/// Basis actions of L on Hom(g, V) in flat coordinates, suitable for
/// `verify_leibniz_rep`. The module dimension is `dim_g * dim_v`.
pub fn hom_module_actions<'a>(
    t: &'a LieTripleSystem,
    rep: &'a Representation,
) -> (
    impl Fn(usize, &[Scalar]) -> Vec<Scalar> + 'a,
    impl Fn(&[Scalar], usize) -> Vec<Scalar> + 'a,
) {
    let n = t.dim();
    let m = rep.dim_v();
    let f = t.field();
    let act_l = move |p: usize, mv: &[Scalar]| -> Vec<Scalar> {
        let phi = HomCochain1::from_flat(f, m, n, mv).expect("flat length");
        let x = FundamentalElement::basis_pair(f, n, p / n, p % n);
        hom_bracket_l(t, rep, &x, &phi).expect("validated dims").to_flat()
    };
    let act_r = move |mv: &[Scalar], p: usize| -> Vec<Scalar> {
        let phi = HomCochain1::from_flat(f, m, n, mv).expect("flat length");
        let x = FundamentalElement::basis_pair(f, n, p / n, p % n);
        hom_bracket_r(t, rep, &phi, &x).expect("validated dims").to_flat()
    };
    (act_l, act_r)
}
