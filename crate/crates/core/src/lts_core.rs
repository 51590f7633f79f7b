//! Lie triple systems given by structure constants: axiom verification,
//! construction from Lie algebras, bracket evaluation, and left multiplication
//! operators.
//!
//! The bracket is stored as a dense tensor `c` with
//! `[e_i, e_j, e_k] = sum_l c[i][j][k][l] e_l`, flattened with `l` fastest.
//! All axiom checks are exhaustive over basis tuples; multilinearity makes
//! that sufficient.

use std::fmt;

use crate::error::{Error, Result};
use crate::exact_linalg::{vec_add_scaled, vec_is_zero, Field, Matrix, Scalar};

/// The three defining identities. `Alternating` is the vanishing of
/// `[x, x, y]` (equivalently antisymmetry in the first two slots),
/// `Jacobi` the cyclic sum, `Fundamental` the derivation identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LtsAxiom {
    Alternating,
    Jacobi,
    Fundamental,
}

impl fmt::Display for LtsAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LtsAxiom::Alternating => write!(f, "alternating"),
            LtsAxiom::Jacobi => write!(f, "jacobi"),
            LtsAxiom::Fundamental => write!(f, "fundamental"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct LtsViolation {
    pub axiom: LtsAxiom,
    pub indices: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct LtsReport {
    pub ok: bool,
    pub violations: Vec<LtsViolation>,
}

/// Exhaustively check the triple-system axioms on basis tuples.
///
/// The alternating axiom is checked in polarized form
/// `[e_i,e_j,e_k] + [e_j,e_i,e_k] = 0`, which over a field of characteristic
/// != 2 is equivalent to `[x,x,y] = 0` for all x.
pub fn verify_lts(field: Field, dim: usize, c: &[Scalar]) -> Result<LtsReport> {
    check_tensor_shape_ok(field, dim, c)?;
    let mut violations = Vec::new();
    let n = dim;
    let idx = |i: usize, j: usize, k: usize| ((i * n + j) * n + k) * n;

    for i in 0..n {
        for j in i..n {
            for k in 0..n {
                let a = &c[idx(i, j, k)..idx(i, j, k) + n];
                let b = &c[idx(j, i, k)..idx(j, i, k) + n];
                if a.iter().zip(b).any(|(x, y)| !x.add_ref(y).is_zero()) {
                    violations.push(LtsViolation {
                        axiom: LtsAxiom::Alternating,
                        indices: vec![i, j, k],
                    });
                }
            }
        }
    }

    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let a = &c[idx(i, j, k)..idx(i, j, k) + n];
                let b = &c[idx(j, k, i)..idx(j, k, i) + n];
                let d = &c[idx(k, i, j)..idx(k, i, j) + n];
                let bad = (0..n).any(|l| !a[l].add_ref(&b[l]).add_ref(&d[l]).is_zero());
                if bad {
                    violations.push(LtsViolation {
                        axiom: LtsAxiom::Jacobi,
                        indices: vec![i, j, k],
                    });
                }
            }
        }
    }

    let bracket_basis = |i: usize, j: usize, k: usize| &c[idx(i, j, k)..idx(i, j, k) + n];
    let bracket_right = |i: usize, j: usize, v: &[Scalar]| {
        // [e_i, e_j, v]
        let mut out = vec![field.zero(); n];
        for (k, coeff) in v.iter().enumerate() {
            vec_add_scaled(&mut out, bracket_basis(i, j, k), coeff);
        }
        out
    };
    for a in 0..n {
        for b in 0..n {
            for p in 0..n {
                for q in 0..n {
                    for r in 0..n {
                        let lhs = bracket_right(a, b, bracket_basis(p, q, r));
                        let mut rhs = vec![field.zero(); n];
                        // [[e_a,e_b,e_p], e_q, e_r]
                        for (s, coeff) in bracket_basis(a, b, p).iter().enumerate() {
                            vec_add_scaled(&mut rhs, bracket_basis(s, q, r), coeff);
                        }
                        // [e_p, [e_a,e_b,e_q], e_r]
                        for (s, coeff) in bracket_basis(a, b, q).iter().enumerate() {
                            vec_add_scaled(&mut rhs, bracket_basis(p, s, r), coeff);
                        }
                        // [e_p, e_q, [e_a,e_b,e_r]]
                        let t = bracket_right(p, q, bracket_basis(a, b, r));
                        for l in 0..n {
                            rhs[l] = rhs[l].add_ref(&t[l]);
                        }
                        if lhs != rhs {
                            violations.push(LtsViolation {
                                axiom: LtsAxiom::Fundamental,
                                indices: vec![a, b, p, q, r],
                            });
                        }
                    }
                }
            }
        }
    }

    Ok(LtsReport {
        ok: violations.is_empty(),
        violations,
    })
}

fn check_tensor_shape_ok(field: Field, dim: usize, c: &[Scalar]) -> Result<()> {
    if c.len() != dim * dim * dim * dim {
        return Err(Error::DimensionMismatch(format!(
            "structure tensor has {} entries, expected {}^4",
            c.len(),
            dim
        )));
    }
    for s in c {
        if s.field() != field {
            return Err(Error::FieldMismatch(format!(
                "structure constant over {} in a system over {}",
                s.field(),
                field
            )));
        }
    }
    Ok(())
}

/// A validated Lie triple system. Construction runs the full axiom check.
#[derive(Debug, Clone, PartialEq)]
pub struct LieTripleSystem {
    field: Field,
    dim: usize,
    c: Vec<Scalar>,
}

impl LieTripleSystem {
    pub fn new(field: Field, dim: usize, c: Vec<Scalar>) -> Result<LieTripleSystem> {
        let report = verify_lts(field, dim, &c)?;
        if !report.ok {
            let first = &report.violations[0];
            return Err(Error::NotALieTripleSystem {
                violations: report.violations.len(),
                first: format!("{} at {:?}", first.axiom, first.indices),
            });
        }
        Ok(LieTripleSystem { field, dim, c })
    }

    /// The abelian system of a given dimension (all brackets zero).
    pub fn zero(field: Field, dim: usize) -> LieTripleSystem {
        LieTripleSystem {
            field,
            dim,
            c: vec![field.zero(); dim * dim * dim * dim],
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn constants(&self) -> &[Scalar] {
        &self.c
    }

    /// Coordinates of `[e_i, e_j, e_k]`.
    pub fn bracket_basis(&self, i: usize, j: usize, k: usize) -> &[Scalar] {
        let n = self.dim;
        let off = ((i * n + j) * n + k) * n;
        &self.c[off..off + n]
    }

    fn check_vec(&self, v: &[Scalar]) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} in a system of dimension {}",
                v.len(),
                self.dim
            )));
        }
        for s in v {
            if s.field() != self.field {
                return Err(Error::FieldMismatch(
                    "vector field differs from system field".to_string(),
                ));
            }
        }
        Ok(())
    }

    /// Trilinear extension of the structure constants.
    pub fn bracket(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Result<Vec<Scalar>> {
        self.check_vec(x)?;
        self.check_vec(y)?;
        self.check_vec(z)?;
        let n = self.dim;
        let mut out = vec![self.field.zero(); n];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let cij = xi.mul_ref(yj);
                for (k, zk) in z.iter().enumerate() {
                    if zk.is_zero() {
                        continue;
                    }
                    vec_add_scaled(&mut out, self.bracket_basis(i, j, k), &cij.mul_ref(zk));
                }
            }
        }
        Ok(out)
    }

    /// Matrix of `w -> [e_i, e_j, w]`.
    pub fn ad_left_basis(&self, i: usize, j: usize) -> Matrix {
        let n = self.dim;
        let mut m = Matrix::zero(self.field, n, n);
        for k in 0..n {
            for (l, s) in self.bracket_basis(i, j, k).iter().enumerate() {
                m.set(l, k, s.clone());
            }
        }
        m
    }

    /// Matrix of `w -> [x, y, w]`, bilinear in `(x, y)`.
    pub fn ad_left(&self, x: &[Scalar], y: &[Scalar]) -> Result<Matrix> {
        self.check_vec(x)?;
        self.check_vec(y)?;
        let n = self.dim;
        let mut m = Matrix::zero(self.field, n, n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                m = m.add(&self.ad_left_basis(i, j).scale(&xi.mul_ref(yj)))?;
            }
        }
        Ok(m)
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.dim];
        v[i] = self.field.one();
        v
    }
}

/// Build the triple system `[x,y,z] := [[x,y],z]` from Lie-algebra structure
/// constants `lie_c` (shape n^3, last index fastest). The input must satisfy
/// antisymmetry and the Lie Jacobi identity; violations are reported as a
/// `NotALieAlgebra` error.
pub fn from_lie_algebra(field: Field, dim: usize, lie_c: &[Scalar]) -> Result<LieTripleSystem> {
    let n = dim;
    if lie_c.len() != n * n * n {
        return Err(Error::DimensionMismatch(format!(
            "Lie structure tensor has {} entries, expected {}^3",
            lie_c.len(),
            n
        )));
    }
    for s in lie_c {
        if s.field() != field {
            return Err(Error::FieldMismatch(
                "Lie structure constant field differs".to_string(),
            ));
        }
    }
    let pair = |i: usize, j: usize| &lie_c[(i * n + j) * n..(i * n + j) * n + n];
    let mut bad: Vec<Vec<usize>> = Vec::new();
    for i in 0..n {
        for j in i..n {
            if (0..n).any(|l| !pair(i, j)[l].add_ref(&pair(j, i)[l]).is_zero()) {
                bad.push(vec![i, j]);
            }
        }
    }
    let lie_bracket = |x: &[Scalar], v: usize| {
        // [x, e_v]
        let mut out = vec![field.zero(); n];
        for (i, xi) in x.iter().enumerate() {
            vec_add_scaled(&mut out, pair(i, v), xi);
        }
        out
    };
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                // [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] = 0
                let mut sum = lie_bracket(pair(i, j), k);
                let t = lie_bracket(pair(j, k), i);
                for l in 0..n {
                    sum[l] = sum[l].add_ref(&t[l]);
                }
                let t = lie_bracket(pair(k, i), j);
                for l in 0..n {
                    sum[l] = sum[l].add_ref(&t[l]);
                }
                if !vec_is_zero(&sum) {
                    bad.push(vec![i, j, k]);
                }
            }
        }
    }
    if !bad.is_empty() {
        return Err(Error::NotALieAlgebra {
            violations: bad.len(),
            first: bad[0].clone(),
        });
    }
    let mut c = vec![field.zero(); n * n * n * n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let v = lie_bracket(pair(i, j), k);
                let off = ((i * n + j) * n + k) * n;
                c[off..off + n].clone_from_slice(&v);
            }
        }
    }
    LieTripleSystem::new(field, n, c)
}

/// A linear map between triple systems, stored as a (target dim) x (source
/// dim) matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct LtsMorphism {
    pub matrix: Matrix,
}

/// Does `phi[x,y,z] = [phi x, phi y, phi z]` hold on all basis triples of `t`?
pub fn is_homomorphism(t: &LieTripleSystem, s: &LieTripleSystem, phi: &LtsMorphism) -> Result<bool> {
    if phi.matrix.rows() != s.dim() || phi.matrix.cols() != t.dim() {
        return Err(Error::DimensionMismatch(format!(
            "morphism matrix is {}x{}, expected {}x{}",
            phi.matrix.rows(),
            phi.matrix.cols(),
            s.dim(),
            t.dim()
        )));
    }
    if phi.matrix.field() != t.field() || t.field() != s.field() {
        return Err(Error::FieldMismatch(
            "morphism and systems must share one field".to_string(),
        ));
    }
    let n = t.dim();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let lhs = phi.matrix.mul_vec(t.bracket_basis(i, j, k))?;
                let rhs = s.bracket(
                    &phi.matrix.col(i),
                    &phi.matrix.col(j),
                    &phi.matrix.col(k),
                )?;
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
pub(crate) mod test_fixtures {
    use super::*;

    /// Minimal nonabelian fixture: dim 2, [e1,e2,e1] = e2, [e2,e1,e1] = -e2.
    pub fn t2() -> LieTripleSystem {
        let f = Field::Rational;
        let n = 2;
        let mut c = vec![f.zero(); 16];
        let idx = |i: usize, j: usize, k: usize, l: usize| ((i * n + j) * n + k) * n + l;
        c[idx(0, 1, 0, 1)] = f.one();
        c[idx(1, 0, 0, 1)] = f.from_i64(-1);
        LieTripleSystem::new(f, n, c).unwrap()
    }

    /// sl2-derived system: basis h,e,f with [h,e]=2e, [h,f]=-2f, [e,f]=h and
    /// triple bracket [[x,y],z].
    pub fn sl2_lts() -> LieTripleSystem {
        let f = Field::Rational;
        let n = 3;
        let mut lie = vec![f.zero(); 27];
        let mut set = |i: usize, j: usize, coords: [i64; 3]| {
            for (l, v) in coords.iter().enumerate() {
                lie[(i * n + j) * n + l] = f.from_i64(*v);
                lie[(j * n + i) * n + l] = f.from_i64(-v);
            }
        };
        set(0, 1, [0, 2, 0]);
        set(0, 2, [0, 0, -2]);
        set(1, 2, [1, 0, 0]);
        from_lie_algebra(f, n, &lie).unwrap()
    }
}
