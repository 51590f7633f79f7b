//! Abelian extensions of a Lie triple system by a module, their induced
//! representations and 3-cocycles, equivalence, and classification by the
//! third cohomology group.
//!
//! Built extensions fix the canonical basis ordering (g-part first, V-part
//! second) and the canonical section x -> (x, 0), which makes roundtrips
//! exact rather than up-to-isomorphism.

use crate::cochain_complex::{cohomology_dim, is_3_cocycle, is_coboundary, yamaguti_delta, Cochain};
use crate::error::{Error, Result};
use crate::exact_linalg::{vec_is_zero, Matrix, Scalar};
use crate::lts_core::{LieTripleSystem, LtsMorphism};
use crate::representation::{verify_representation, HomCochain1, Representation};

/// A short exact sequence 0 -> V -> total -> g -> 0 with V an abelian ideal,
/// given by the total system, the injection `inj: V -> total` and the
/// projection `proj: total -> g`.
#[derive(Debug, Clone)]
pub struct AbelianExtension {
    total: LieTripleSystem,
    inj: Matrix,
    proj: Matrix,
}

impl AbelianExtension {
    /// Validate exactness (proj . inj = 0 with full ranks, so ker proj =
    /// im inj), the ideal property, and abelianness of the ideal.
    pub fn new(total: LieTripleSystem, inj: Matrix, proj: Matrix) -> Result<AbelianExtension> {
        let nm = total.dim();
        let m = inj.cols();
        let n = proj.rows();
        if inj.rows() != nm || proj.cols() != nm || n + m != nm {
            return Err(Error::DimensionMismatch(format!(
                "extension shapes: total dim {}, inj {}x{}, proj {}x{}",
                nm,
                inj.rows(),
                inj.cols(),
                proj.rows(),
                proj.cols()
            )));
        }
        if inj.field() != total.field() || proj.field() != total.field() {
            return Err(Error::FieldMismatch(
                "injection/projection over a different field".to_string(),
            ));
        }
        if !proj.mul(&inj)?.is_zero() {
            return Err(Error::NotAnExtension("proj . inj != 0".to_string()));
        }
        if inj.rank() != m {
            return Err(Error::NotAnExtension("injection is not injective".to_string()));
        }
        if proj.rank() != n {
            return Err(Error::NotAnExtension("projection is not surjective".to_string()));
        }
        // Ideal property: brackets with one argument in im(inj) stay in
        // ker(proj) = im(inj). One slot suffices by antisymmetry and the
        // cyclic identity.
        for a in 0..m {
            let u = inj.col(a);
            for i in 0..nm {
                let ei = total.basis_vector(i);
                for j in 0..nm {
                    let ej = total.basis_vector(j);
                    if !vec_is_zero(&proj.mul_vec(&total.bracket(&u, &ei, &ej)?)?) {
                        return Err(Error::NotAnExtension(format!(
                            "im(inj) is not an ideal: [v_{}, e_{}, e_{}] escapes",
                            a, i, j
                        )));
                    }
                }
            }
        }
        // Abelian: brackets with two arguments in the ideal vanish.
        for a in 0..m {
            let u = inj.col(a);
            for b in 0..m {
                let v = inj.col(b);
                for i in 0..nm {
                    let w = total.basis_vector(i);
                    let all_zero = vec_is_zero(&total.bracket(&u, &v, &w)?)
                        && vec_is_zero(&total.bracket(&u, &w, &v)?)
                        && vec_is_zero(&total.bracket(&w, &u, &v)?);
                    if !all_zero {
                        return Err(Error::NotAnExtension(format!(
                            "ideal is not abelian at (v_{}, v_{}, e_{})",
                            a, b, i
                        )));
                    }
                }
            }
        }
        Ok(AbelianExtension { total, inj, proj })
    }

    pub fn total(&self) -> &LieTripleSystem {
        &self.total
    }
    pub fn inj(&self) -> &Matrix {
        &self.inj
    }
    pub fn proj(&self) -> &Matrix {
        &self.proj
    }
    pub fn base_dim(&self) -> usize {
        self.proj.rows()
    }
    pub fn fiber_dim(&self) -> usize {
        self.inj.cols()
    }

    /// The deterministic section obtained by solving `proj . sigma = id` with
    /// free variables zeroed. For built extensions this is x -> (x, 0).
    pub fn canonical_section(&self) -> Result<Matrix> {
        let n = self.base_dim();
        let f = self.total.field();
        let mut sigma = Matrix::zero(f, self.total.dim(), n);
        for i in 0..n {
            let mut e = vec![f.zero(); n];
            e[i] = f.one();
            let col = self
                .proj
                .solve(&e)?
                .ok_or_else(|| Error::NotAnExtension("projection is not surjective".to_string()))?;
            for (r, s) in col.into_iter().enumerate() {
                sigma.set(r, i, s);
            }
        }
        Ok(sigma)
    }
}

/// Build g (+)_omega V from a module and a 3-cocycle, with the bracket
/// `[x1+u1, x2+u2, x3+u3] = [x1,x2,x3] + omega(x1,x2,x3) + D(x1,x2)u3 - theta(x1,x3)u2 + theta(x2,x3)u1`.
/// The result is validated as a Lie triple system and as an abelian
/// extension.
pub fn build_extension(
    t: &LieTripleSystem,
    rep: &Representation,
    w: &Cochain,
) -> Result<AbelianExtension> {
    if !is_3_cocycle(t, rep, w)? {
        return Err(Error::NotACocycle);
    }
    let n = t.dim();
    let m = rep.dim_v();
    let f = t.field();
    let nm = n + m;
    let mut c = vec![f.zero(); nm * nm * nm * nm];
    let mut set = |i: usize, j: usize, k: usize, l: usize, v: Scalar| {
        c[((i * nm + j) * nm + k) * nm + l] = v;
    };
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for (l, s) in t.bracket_basis(i, j, k).iter().enumerate() {
                    set(i, j, k, l, s.clone());
                }
                for (a, s) in w.value(&[i, j, k]).iter().enumerate() {
                    set(i, j, k, n + a, s.clone());
                }
            }
            // [e_i, e_j, v_a] = D(e_i, e_j) v_a
            let d = rep.dee_basis(i, j);
            for a in 0..m {
                for b in 0..m {
                    set(i, j, n + a, n + b, d.get(b, a).clone());
                }
            }
        }
    }
    for i in 0..n {
        for k in 0..n {
            let th = rep.theta(i, k);
            for a in 0..m {
                for b in 0..m {
                    // [e_i, v_a, e_k] = -theta(e_i, e_k) v_a
                    set(i, n + a, k, n + b, th.get(b, a).neg_ref());
                    // [v_a, e_i, e_k] = theta(e_i, e_k) v_a
                    set(n + a, i, k, n + b, th.get(b, a).clone());
                }
            }
        }
    }
    let total = LieTripleSystem::new(f, nm, c)?;
    let mut inj = Matrix::zero(f, nm, m);
    for a in 0..m {
        inj.set(n + a, a, f.one());
    }
    let mut proj = Matrix::zero(f, n, nm);
    for i in 0..n {
        proj.set(i, i, f.one());
    }
    AbelianExtension::new(total, inj, proj)
}

/// Representation and 3-cocycle induced by a section. Returns the base system
/// (the quotient bracket pushed through `proj`) together with
/// `theta(x1,x2)u = [u, s x1, s x2]` and
/// `omega(x1,x2,x3) = [s x1, s x2, s x3] - s([x1,x2,x3])`, both read through
/// the injection.
pub struct InducedData {
    pub base: LieTripleSystem,
    pub rep: Representation,
    pub cocycle: Cochain,
}

pub fn induced_data(ext: &AbelianExtension, sigma: &Matrix) -> Result<InducedData> {
    let n = ext.base_dim();
    let m = ext.fiber_dim();
    let nm = ext.total.dim();
    let f = ext.total.field();
    if sigma.rows() != nm || sigma.cols() != n {
        return Err(Error::DimensionMismatch(format!(
            "section is {}x{}, expected {}x{}",
            sigma.rows(),
            sigma.cols(),
            nm,
            n
        )));
    }
    if ext.proj.mul(sigma)? != Matrix::identity(f, n) {
        return Err(Error::NotASection);
    }

    // Change coordinates so the ideal is the trailing block: columns of
    // [sigma | inj] form a basis of the total space.
    let mut p = Matrix::zero(f, nm, nm);
    for i in 0..n {
        for r in 0..nm {
            p.set(r, i, sigma.get(r, i).clone());
        }
    }
    for a in 0..m {
        for r in 0..nm {
            p.set(r, n + a, ext.inj.get(r, a).clone());
        }
    }
    // Solve p * y = v for each needed vector; p is invertible because sigma
    // is a section and inj spans the complement.
    let to_new_coords = |v: &[Scalar]| -> Result<Vec<Scalar>> { p.solve(v)?.ok_or(Error::NotASection) };

    let mut base_c = vec![f.zero(); n * n * n * n];
    let mut cocycle = Cochain::zero(f, n, m, 1);
    let mut theta = vec![Matrix::zero(f, m, m); n * n];

    for i in 0..n {
        let si = p.col(i);
        for j in 0..n {
            let sj = p.col(j);
            for k in 0..n {
                let sk = p.col(k);
                let br = ext.total.bracket(&si, &sj, &sk)?;
                let y = to_new_coords(&br)?;
                for l in 0..n {
                    base_c[((i * n + j) * n + k) * n + l] = y[l].clone();
                }
                for a in 0..m {
                    if !y[n + a].is_zero() {
                        cocycle.set_value(&[i, j, k], a, y[n + a].clone());
                    }
                }
            }
            // theta(e_i, e_j) column a = coords of [inj v_a, s e_i, s e_j]
            for a in 0..m {
                let u = ext.inj.col(a);
                let br = ext.total.bracket(&u, &si, &sj)?;
                let y = to_new_coords(&br)?;
                if !vec_is_zero(&y[..n]) {
                    return Err(Error::BracketEscapesIdeal);
                }
                for b in 0..m {
                    theta[i * n + j].set(b, a, y[n + b].clone());
                }
            }
        }
    }

    let base = LieTripleSystem::new(f, n, base_c)?;
    let rep = Representation::new(f, n, m, theta)?;
    debug_assert!(verify_representation(&base, &rep)?.ok());
    debug_assert!(is_3_cocycle(&base, &rep, &cocycle)?);
    Ok(InducedData { base, rep, cocycle })
}

/// Decide whether two 3-cocycles give equivalent extensions by solving
/// `delta nu = w - w2` for a witness.
pub fn are_equivalent(
    t: &LieTripleSystem,
    rep: &Representation,
    w: &Cochain,
    w2: &Cochain,
) -> Result<Option<HomCochain1>> {
    if !is_3_cocycle(t, rep, w)? || !is_3_cocycle(t, rep, w2)? {
        return Err(Error::NotACocycle);
    }
    is_coboundary(t, rep, &w.sub(w2)?)
}

/// The equivalence `F(x + u) = x + nu(x) + u` as a morphism of the two built
/// extensions. The witness must satisfy `delta nu = w - w2`; the morphism is
/// verified to be a homomorphism commuting with injections and projections.
pub fn equivalence_map(
    t: &LieTripleSystem,
    rep: &Representation,
    w: &Cochain,
    w2: &Cochain,
    nu: &HomCochain1,
) -> Result<LtsMorphism> {
    let diff = w.sub(w2)?;
    let d_nu = yamaguti_delta(t, rep, &Cochain::from_hom(nu))?;
    if d_nu != diff {
        return Err(Error::InvalidWitness);
    }
    let n = t.dim();
    let m = rep.dim_v();
    let f = t.field();
    let mut mat = Matrix::identity(f, n + m);
    for i in 0..n {
        for a in 0..m {
            mat.set(n + a, i, nu.matrix.get(a, i).clone());
        }
    }
    let morphism = LtsMorphism { matrix: mat };
    let e1 = build_extension(t, rep, w)?;
    let e2 = build_extension(t, rep, w2)?;
    if !crate::lts_core::is_homomorphism(e1.total(), e2.total(), &morphism)? {
        return Err(Error::InvalidWitness);
    }
    if morphism.matrix.mul(e1.inj())? != *e2.inj()
        || e2.proj().mul(&morphism.matrix)? != *e1.proj()
    {
        return Err(Error::InvalidWitness);
    }
    Ok(morphism)
}

#[derive(Debug)]
pub struct Classification {
    pub h3_dim: usize,
    pub representatives: Vec<Cochain>,
}

/// Equivalence classes of abelian extensions of `t` by the module correspond
/// to H^3; the representatives build pairwise non-equivalent extensions.
pub fn classify_extensions(t: &LieTripleSystem, rep: &Representation) -> Result<Classification> {
    let h3 = cohomology_dim(t, rep, 3)?;
    Ok(Classification {
        h3_dim: h3.dim,
        representatives: h3.representatives,
    })
}

/// Equivalence of two arbitrary abelian extensions: extract (theta, omega)
/// with canonical sections; the extensions are comparable only when the base
/// brackets and thetas agree, and equivalent when the omegas differ by a
/// coboundary.
pub fn extensions_equivalent(
    e1: &AbelianExtension,
    e2: &AbelianExtension,
) -> Result<Option<HomCochain1>> {
    if e1.base_dim() != e2.base_dim() || e1.fiber_dim() != e2.fiber_dim() {
        return Err(Error::DimensionMismatch(
            "extensions with different base or fiber dimensions".to_string(),
        ));
    }
    let d1 = induced_data(e1, &e1.canonical_section()?)?;
    let d2 = induced_data(e2, &e2.canonical_section()?)?;
    if d1.base != d2.base || d1.rep != d2.rep {
        return Ok(None);
    }
    are_equivalent(&d1.base, &d1.rep, &d1.cocycle, &d2.cocycle)
}
