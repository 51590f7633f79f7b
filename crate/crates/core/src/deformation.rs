//! Infinitesimal deformations and Nijenhuis operators.
//!
//! A trilinear map omega deforms the bracket to [.,.,.] + lambda*omega. The
//! formal parameter is never materialized: the deformation is valid for
//! formal lambda exactly when omega is itself a triple-system structure and a
//! 3-cocycle in the adjoint representation, and those are the two checks
//! reported here. Nijenhuis operators produce the trivial deformations.

use crate::cochain_complex::{is_3_cocycle, Cochain};
use crate::error::{Error, Result};
use crate::exact_linalg::{vec_is_zero, Matrix, Scalar};
use crate::lts_core::{verify_lts, LieTripleSystem, LtsViolation};
use crate::representation::adjoint_rep;

#[derive(Debug, Clone)]
pub struct DeformationReport {
    /// omega satisfies the three triple-system identities.
    pub lts_ok: bool,
    /// omega is a 3-cocycle in the adjoint representation.
    pub cocycle_ok: bool,
    pub lts_violations: Vec<LtsViolation>,
}

impl DeformationReport {
    pub fn valid(&self) -> bool {
        self.lts_ok && self.cocycle_ok
    }
}

/// Decide whether `w` generates a one-parameter infinitesimal deformation of
/// `t`. `w` must be a level-1 cochain with coefficients in g itself.
pub fn check_infinitesimal_deformation(
    t: &LieTripleSystem,
    w: &Cochain,
) -> Result<DeformationReport> {
    if w.level() != 1 {
        return Err(Error::UnsupportedLevel(w.level()));
    }
    if w.dim_g() != t.dim() || w.dim_v() != t.dim() {
        return Err(Error::DimensionMismatch(
            "deformation direction must map g^3 to g".to_string(),
        ));
    }
    if w.field() != t.field() {
        return Err(Error::FieldMismatch(
            "deformation direction over a different field".to_string(),
        ));
    }
    let lts_report = verify_lts(t.field(), t.dim(), w.as_flat())?;
    let cocycle_ok = is_3_cocycle(t, &adjoint_rep(t), w)?;
    Ok(DeformationReport {
        lts_ok: lts_report.ok,
        cocycle_ok,
        lts_violations: lts_report.violations,
    })
}

#[derive(Debug, Clone)]
pub struct NijenhuisReport {
    /// `[Nx, Ny, Nz] = 0` on all basis triples.
    pub image_bracket_zero: bool,
    /// The N^2 compatibility identity on all basis triples.
    pub square_identity: bool,
    pub violations: Vec<[usize; 3]>,
}

impl NijenhuisReport {
    pub fn ok(&self) -> bool {
        self.image_bracket_zero && self.square_identity
    }
}

fn check_operator(t: &LieTripleSystem, n_matrix: &Matrix) -> Result<()> {
    if n_matrix.rows() != t.dim() || n_matrix.cols() != t.dim() {
        return Err(Error::DimensionMismatch(format!(
            "operator is {}x{}, expected {}x{}",
            n_matrix.rows(),
            n_matrix.cols(),
            t.dim(),
            t.dim()
        )));
    }
    if n_matrix.field() != t.field() {
        return Err(Error::FieldMismatch(
            "operator over a different field".to_string(),
        ));
    }
    Ok(())
}

/// Check the two defining Nijenhuis conditions on all basis triples.
pub fn nijenhuis_report(t: &LieTripleSystem, n_matrix: &Matrix) -> Result<NijenhuisReport> {
    check_operator(t, n_matrix)?;
    let n = t.dim();
    let mut image_violations = Vec::new();
    let mut square_violations = Vec::new();
    for i in 0..n {
        let ni = n_matrix.col(i);
        for j in 0..n {
            let nj = n_matrix.col(j);
            for k in 0..n {
                let nk = n_matrix.col(k);
                if !vec_is_zero(&t.bracket(&ni, &nj, &nk)?) {
                    image_violations.push([i, j, k]);
                }
                let ei = t.basis_vector(i);
                let ej = t.basis_vector(j);
                let ek = t.basis_vector(k);
                // N^2 [x,y,z] = N([Nx,y,z] + [x,Ny,z] + [x,y,Nz])
                //   - ([Nx,Ny,z] + [Nx,y,Nz] + [x,Ny,Nz])
                let lhs = n_matrix.mul_vec(&n_matrix.mul_vec(t.bracket_basis(i, j, k))?)?;
                let mut inner = t.bracket(&ni, &ej, &ek)?;
                for (a, b) in inner.iter_mut().zip(t.bracket(&ei, &nj, &ek)?) {
                    *a = a.add_ref(&b);
                }
                for (a, b) in inner.iter_mut().zip(t.bracket(&ei, &ej, &nk)?) {
                    *a = a.add_ref(&b);
                }
                let mut rhs = n_matrix.mul_vec(&inner)?;
                for (a, b) in rhs.iter_mut().zip(t.bracket(&ni, &nj, &ek)?) {
                    *a = a.sub_ref(&b);
                }
                for (a, b) in rhs.iter_mut().zip(t.bracket(&ni, &ej, &nk)?) {
                    *a = a.sub_ref(&b);
                }
                for (a, b) in rhs.iter_mut().zip(t.bracket(&ei, &nj, &nk)?) {
                    *a = a.sub_ref(&b);
                }
                if lhs != rhs {
                    square_violations.push([i, j, k]);
                }
            }
        }
    }
    let image_bracket_zero = image_violations.is_empty();
    let square_identity = square_violations.is_empty();
    let mut violations = image_violations;
    violations.extend(square_violations);
    violations.sort_unstable();
    violations.dedup();
    Ok(NijenhuisReport {
        image_bracket_zero,
        square_identity,
        violations,
    })
}

pub fn is_nijenhuis(t: &LieTripleSystem, n_matrix: &Matrix) -> Result<bool> {
    Ok(nijenhuis_report(t, n_matrix)?.ok())
}

/// A verified Nijenhuis operator on a particular system.
#[derive(Debug, Clone)]
pub struct NijenhuisOperator {
    matrix: Matrix,
}

impl NijenhuisOperator {
    pub fn verify(t: &LieTripleSystem, matrix: Matrix) -> Result<NijenhuisOperator> {
        if is_nijenhuis(t, &matrix)? {
            Ok(NijenhuisOperator { matrix })
        } else {
            Err(Error::NotNijenhuis)
        }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn power(&self, t: &LieTripleSystem, k: u32) -> Result<Matrix> {
        check_operator(t, &self.matrix)?;
        self.matrix.pow(k)
    }
}

/// The deformed bracket
/// `[x,y,z]_N = [Nx,y,z] + [x,Ny,z] + [x,y,Nz] - N[x,y,z]`,
/// defined for any linear operator.
pub fn bracket_n(
    t: &LieTripleSystem,
    n_matrix: &Matrix,
    x: &[Scalar],
    y: &[Scalar],
    z: &[Scalar],
) -> Result<Vec<Scalar>> {
    check_operator(t, n_matrix)?;
    let nx = n_matrix.mul_vec(x)?;
    let ny = n_matrix.mul_vec(y)?;
    let nz = n_matrix.mul_vec(z)?;
    let mut out = t.bracket(&nx, y, z)?;
    for (a, b) in out.iter_mut().zip(t.bracket(x, &ny, z)?) {
        *a = a.add_ref(&b);
    }
    for (a, b) in out.iter_mut().zip(t.bracket(x, y, &nz)?) {
        *a = a.add_ref(&b);
    }
    for (a, b) in out.iter_mut().zip(n_matrix.mul_vec(&t.bracket(x, y, z)?)?) {
        *a = a.sub_ref(&b);
    }
    Ok(out)
}

/// The trivial deformation induced by a verified Nijenhuis operator:
/// `omega(x,y,z) = [x,y,z]_N` as a level-1 cochain with coefficients in g.
pub fn trivial_deformation(t: &LieTripleSystem, op: &NijenhuisOperator) -> Result<Cochain> {
    let n = t.dim();
    let mut w = Cochain::zero(t.field(), n, n, 1);
    for i in 0..n {
        let ei = t.basis_vector(i);
        for j in 0..n {
            let ej = t.basis_vector(j);
            for k in 0..n {
                let ek = t.basis_vector(k);
                let v = bracket_n(t, &op.matrix, &ei, &ej, &ek)?;
                for (a, s) in v.into_iter().enumerate() {
                    if !s.is_zero() {
                        w.set_value(&[i, j, k], a, s);
                    }
                }
            }
        }
    }
    Ok(w)
}

#[derive(Debug, Clone)]
pub struct CompatibilityReport {
    /// The mixed-bracket identity
    /// `N1 [x,y,z]_{N2} + N2 [x,y,z]_{N1} = sum of the six mixed brackets`.
    pub bracket_identity: bool,
    /// The four-term mixed triple identity.
    pub triple_identity: bool,
    /// Cross-check: `N1 + N2` passes the Nijenhuis conditions directly.
    pub sum_is_nijenhuis: bool,
}

impl CompatibilityReport {
    pub fn compatible(&self) -> bool {
        self.bracket_identity && self.triple_identity
    }
}

/// Check the two displayed compatibility identities on all basis triples and
/// cross-check against `is_nijenhuis(N1 + N2)`.
pub fn compatibility_report(
    t: &LieTripleSystem,
    n1: &NijenhuisOperator,
    n2: &NijenhuisOperator,
) -> Result<CompatibilityReport> {
    let n = t.dim();
    let m1 = &n1.matrix;
    let m2 = &n2.matrix;
    let mut bracket_identity = true;
    let mut triple_identity = true;
    'outer: for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let ei = t.basis_vector(i);
                let ej = t.basis_vector(j);
                let ek = t.basis_vector(k);
                let mut lhs = m1.mul_vec(&bracket_n(t, m2, &ei, &ej, &ek)?)?;
                for (a, b) in lhs
                    .iter_mut()
                    .zip(m2.mul_vec(&bracket_n(t, m1, &ei, &ej, &ek)?)?)
                {
                    *a = a.add_ref(&b);
                }
                let (n1i, n1j, n1k) = (m1.col(i), m1.col(j), m1.col(k));
                let (n2i, n2j, n2k) = (m2.col(i), m2.col(j), m2.col(k));
                let mut rhs = t.bracket(&n2i, &n1j, &ek)?;
                for term in [
                    t.bracket(&n2i, &ej, &n1k)?,
                    t.bracket(&ei, &n2j, &n1k)?,
                    t.bracket(&n1i, &n2j, &ek)?,
                    t.bracket(&n1i, &ej, &n2k)?,
                    t.bracket(&ei, &n1j, &n2k)?,
                ] {
                    for (a, b) in rhs.iter_mut().zip(term) {
                        *a = a.add_ref(&b);
                    }
                }
                if lhs != rhs {
                    bracket_identity = false;
                }
                // [N1x,N1y,N2z] + [N1x,N2y,N2z] + [N2x,N1y,N1z] + [N2x,N2y,N1z] = 0
                let mut s = t.bracket(&n1i, &n1j, &n2k)?;
                for term in [
                    t.bracket(&n1i, &n2j, &n2k)?,
                    t.bracket(&n2i, &n1j, &n1k)?,
                    t.bracket(&n2i, &n2j, &n1k)?,
                ] {
                    for (a, b) in s.iter_mut().zip(term) {
                        *a = a.add_ref(&b);
                    }
                }
                if !vec_is_zero(&s) {
                    triple_identity = false;
                }
                if !bracket_identity && !triple_identity {
                    break 'outer;
                }
            }
        }
    }
    let sum = m1.add(m2)?;
    Ok(CompatibilityReport {
        bracket_identity,
        triple_identity,
        sum_is_nijenhuis: is_nijenhuis(t, &sum)?,
    })
}

pub fn are_compatible(
    t: &LieTripleSystem,
    n1: &NijenhuisOperator,
    n2: &NijenhuisOperator,
) -> Result<bool> {
    Ok(compatibility_report(t, n1, n2)?.compatible())
}

/// `sum_d coeffs[d] N^d`. The constant coefficient slot must be zero: the
/// closure theorem covers polynomials without constant term only.
pub fn operator_polynomial(n_matrix: &Matrix, coeffs: &[Scalar]) -> Result<Matrix> {
    if let Some(c0) = coeffs.first() {
        if !c0.is_zero() {
            return Err(Error::ConstantTermRejected);
        }
    }
    if n_matrix.rows() != n_matrix.cols() {
        return Err(Error::DimensionMismatch(
            "polynomial of a non-square operator".to_string(),
        ));
    }
    let mut out = Matrix::zero(n_matrix.field(), n_matrix.rows(), n_matrix.cols());
    let mut power = Matrix::identity(n_matrix.field(), n_matrix.rows());
    for c in coeffs.iter().skip(1) {
        power = power.mul(n_matrix)?;
        if !c.is_zero() {
            out = out.add(&power.scale(c))?;
        }
    }
    Ok(out)
}
