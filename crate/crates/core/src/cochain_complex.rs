//! Cochain spaces C^(2n+1)(g, V), the Yamaguti coboundary, the
//! Loday-Pirashvili coboundary on Hom((x)^n L, Hom(g, V)), cocycle checkers,
//! and cohomology dimensions with deterministic representatives.
//!
//! Cochains are stored as full tensors (shape n^(2n+1) x m, tuple-major with
//! the V-component fastest). The constrained subspace - tensors vanishing when
//! the two slots before the last coincide and killed by the cyclic sum in the
//! last three slots - is a computed kernel with a deterministic rref basis.
//! The coboundary formulas act on full tensors; cohomology restricts to the
//! constrained subspace. Supported domain levels are 0, 1, 2 (degrees 1, 3,
//! 5); degree-7 tensors appear only as codomains.

use crate::error::{Error, Result};
use crate::exact_linalg::{quotient_dim, vec_is_zero, EchelonSet, Field, Matrix, Scalar};
use crate::fundamental_leibniz::{circle, FundamentalElement};
use crate::lts_core::LieTripleSystem;
use crate::representation::{hom_bracket_l, hom_bracket_r, HomCochain1, Representation};

/// A (2*level+1)-linear map into V, stored as a full tensor.
#[derive(Debug, Clone, PartialEq)]
pub struct Cochain {
    field: Field,
    dim_g: usize,
    dim_v: usize,
    level: usize,
    data: Vec<Scalar>,
}

impl Cochain {
    pub fn zero(field: Field, dim_g: usize, dim_v: usize, level: usize) -> Cochain {
        let len = dim_g.pow(2 * level as u32 + 1) * dim_v;
        Cochain {
            field,
            dim_g,
            dim_v,
            level,
            data: vec![field.zero(); len],
        }
    }

    pub fn from_flat(
        field: Field,
        dim_g: usize,
        dim_v: usize,
        level: usize,
        data: Vec<Scalar>,
    ) -> Result<Cochain> {
        let len = dim_g.pow(2 * level as u32 + 1) * dim_v;
        if data.len() != len {
            return Err(Error::DimensionMismatch(format!(
                "cochain data length {} != {}^{} * {}",
                data.len(),
                dim_g,
                2 * level + 1,
                dim_v
            )));
        }
        for s in &data {
            if s.field() != field {
                return Err(Error::FieldMismatch(
                    "cochain entry over a different field".to_string(),
                ));
            }
        }
        Ok(Cochain {
            field,
            dim_g,
            dim_v,
            level,
            data,
        })
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
    pub fn level(&self) -> usize {
        self.level
    }
    pub fn degree(&self) -> usize {
        2 * self.level + 1
    }
    pub fn as_flat(&self) -> &[Scalar] {
        &self.data
    }

    fn fold(&self, idx: &[usize]) -> usize {
        idx.iter().fold(0, |acc, &i| acc * self.dim_g + i)
    }

    /// V-coordinates of the evaluation on a basis tuple.
    pub fn value(&self, idx: &[usize]) -> &[Scalar] {
        debug_assert_eq!(idx.len(), self.degree());
        let off = self.fold(idx) * self.dim_v;
        &self.data[off..off + self.dim_v]
    }

    pub fn set_value(&mut self, idx: &[usize], component: usize, v: Scalar) {
        let off = self.fold(idx) * self.dim_v + component;
        self.data[off] = v;
    }

    pub fn is_zero(&self) -> bool {
        vec_is_zero(&self.data)
    }

    pub fn add(&self, other: &Cochain) -> Result<Cochain> {
        self.zip_with(other, Scalar::add_ref)
    }

    pub fn sub(&self, other: &Cochain) -> Result<Cochain> {
        self.zip_with(other, Scalar::sub_ref)
    }

    fn zip_with(&self, other: &Cochain, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Result<Cochain> {
        if self.level != other.level || self.dim_g != other.dim_g || self.dim_v != other.dim_v {
            return Err(Error::DimensionMismatch(
                "cochains of different shapes".to_string(),
            ));
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch("cochains over different fields".to_string()));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect();
        Ok(Cochain {
            field: self.field,
            dim_g: self.dim_g,
            dim_v: self.dim_v,
            level: self.level,
            data,
        })
    }

    pub fn scale(&self, c: &Scalar) -> Cochain {
        Cochain {
            field: self.field,
            dim_g: self.dim_g,
            dim_v: self.dim_v,
            level: self.level,
            data: self.data.iter().map(|s| s.mul_ref(c)).collect(),
        }
    }

    /// Level-0 cochains are linear maps g -> V.
    pub fn to_hom(&self) -> Result<HomCochain1> {
        if self.level != 0 {
            return Err(Error::UnsupportedLevel(self.level));
        }
        HomCochain1::from_flat(self.field, self.dim_v, self.dim_g, &self.data)
    }

    pub fn from_hom(phi: &HomCochain1) -> Cochain {
        let dim_v = phi.matrix.rows();
        let dim_g = phi.matrix.cols();
        Cochain {
            field: phi.matrix.field(),
            dim_g,
            dim_v,
            level: 0,
            data: phi.to_flat(),
        }
    }

    /// Reinterpret the structure tensor of `t` as a level-1 cochain with
    /// coefficients in g (the layouts agree).
    pub fn from_structure_constants(t: &LieTripleSystem) -> Cochain {
        Cochain {
            field: t.field(),
            dim_g: t.dim(),
            dim_v: t.dim(),
            level: 1,
            data: t.constants().to_vec(),
        }
    }

    /// Does the cochain lie in the constrained space: antisymmetric in the two
    /// slots before the last, killed by the cyclic sum over the last three?
    /// Level-0 cochains are unconstrained.
    pub fn is_constrained(&self) -> bool {
        if self.level == 0 {
            return true;
        }
        let n = self.dim_g;
        let d = self.degree();
        let m = self.dim_v;
        let mut ok = true;
        for_each_tuple(n, d - 3, |pre| {
            if !ok {
                return;
            }
            let mut idx = pre.to_vec();
            idx.extend_from_slice(&[0, 0, 0]);
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        idx[d - 3] = i;
                        idx[d - 2] = j;
                        idx[d - 1] = k;
                        let a = self.value(&idx).to_vec();
                        idx[d - 3] = j;
                        idx[d - 2] = i;
                        let b = self.value(&idx);
                        if (0..m).any(|r| !a[r].add_ref(&b[r]).is_zero()) {
                            ok = false;
                            return;
                        }
                        idx[d - 3] = j;
                        idx[d - 2] = k;
                        idx[d - 1] = i;
                        let c = self.value(&idx).to_vec();
                        idx[d - 3] = k;
                        idx[d - 2] = i;
                        idx[d - 1] = j;
                        let e = self.value(&idx);
                        if (0..m).any(|r| !a[r].add_ref(&c[r]).add_ref(&e[r]).is_zero()) {
                            ok = false;
                            return;
                        }
                    }
                }
            }
        });
        ok
    }
}

/// Visit all tuples in `{0..n}^len` in lexicographic order.
pub(crate) fn for_each_tuple(n: usize, len: usize, mut f: impl FnMut(&[usize])) {
    let mut t = vec![0usize; len];
    loop {
        f(&t);
        let mut pos = len;
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            t[pos] += 1;
            if t[pos] < n {
                break;
            }
            t[pos] = 0;
        }
    }
}

/// Kernel of the constraint system on the last three tensor slots: vectors
/// over {0..n}^3 with T(i,j,k) + T(j,i,k) = 0 and the cyclic sum zero. The
/// basis is the canonical rref kernel basis, so embedding it per (prefix,
/// component) reproduces the kernel basis of the full stacked constraint
/// matrix.
fn last3_kernel(field: Field, n: usize) -> Vec<Vec<Scalar>> {
    let n3 = n * n * n;
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    let at = |i: usize, j: usize, k: usize| (i * n + j) * n + k;
    for i in 0..n {
        for j in i..n {
            for k in 0..n {
                let mut row = vec![field.zero(); n3];
                row[at(i, j, k)] = row[at(i, j, k)].add_ref(&field.one());
                row[at(j, i, k)] = row[at(j, i, k)].add_ref(&field.one());
                rows.push(row);
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut row = vec![field.zero(); n3];
                row[at(i, j, k)] = row[at(i, j, k)].add_ref(&field.one());
                row[at(j, k, i)] = row[at(j, k, i)].add_ref(&field.one());
                row[at(k, i, j)] = row[at(k, i, j)].add_ref(&field.one());
                rows.push(row);
            }
        }
    }
    Matrix::from_rows(field, rows).expect("constraint rows").kernel_basis()
}

/// Deterministic basis of the constrained cochain space. Level 0 is the
/// standard basis of Hom(g, V); levels 1 and 2 are the kernel of the stacked
/// constraint matrix in its canonical rref parameterization.
pub fn cochain_space_basis(
    t: &LieTripleSystem,
    dim_v: usize,
    level: usize,
) -> Result<Vec<Cochain>> {
    let n = t.dim();
    let f = t.field();
    let m = dim_v;
    match level {
        0 => {
            let mut out = Vec::with_capacity(n * m);
            for flat in 0..n * m {
                let mut c = Cochain::zero(f, n, m, 0);
                c.data[flat] = f.one();
                out.push(c);
            }
            Ok(out)
        }
        1 | 2 => {
            let kern = last3_kernel(f, n);
            let d = 2 * level + 1;
            let prefixes = n.pow(d as u32 - 3);
            let n3 = n * n * n;
            let mut out = Vec::with_capacity(prefixes * kern.len() * m);
            for pre in 0..prefixes {
                for kv in &kern {
                    for a in 0..m {
                        let mut c = Cochain::zero(f, n, m, level);
                        for (tail, s) in kv.iter().enumerate() {
                            if !s.is_zero() {
                                c.data[(pre * n3 + tail) * m + a] = s.clone();
                            }
                        }
                        out.push(c);
                    }
                }
            }
            Ok(out)
        }
        other => Err(Error::UnsupportedLevel(other)),
    }
}

fn check_delta_args(t: &LieTripleSystem, rep: &Representation, w: &Cochain) -> Result<()> {
    if w.level > 2 {
        return Err(Error::UnsupportedLevel(w.level));
    }
    if w.dim_g != t.dim() || rep.dim_g() != t.dim() || w.dim_v != rep.dim_v() {
        return Err(Error::DimensionMismatch(
            "cochain/representation dimensions differ from system".to_string(),
        ));
    }
    if w.field != t.field() || rep.field() != t.field() {
        return Err(Error::FieldMismatch(
            "cochain/representation field differs from system".to_string(),
        ));
    }
    Ok(())
}

/// The Yamaguti coboundary. Defined here on arbitrary full tensors; on the
/// constrained subspace it is the coboundary of the cochain complex. For
/// level 0 it specializes to `d nu (x1,x2,x3) =`
/// `D(x1,x2) nu(x3) - theta(x1,x3) nu(x2) + theta(x2,x3) nu(x1) - nu([x1,x2,x3])`.
pub fn yamaguti_delta(
    t: &LieTripleSystem,
    rep: &Representation,
    w: &Cochain,
) -> Result<Cochain> {
    check_delta_args(t, rep, w)?;
    let n = t.dim();
    let m = rep.dim_v();
    let f = t.field();
    let level = w.level;
    let big_n = level + 1; // the paper-side index: delta^{2n-1} with n = level+1
    let d_out = 2 * big_n + 1;

    let mut dees = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            dees.push(rep.dee_basis(i, j));
        }
    }

    let mut out = Cochain::zero(f, n, m, level + 1);
    let mut acc = vec![f.zero(); m];
    let mut scratch = Vec::with_capacity(d_out);

    for_each_tuple(n, d_out, |x| {
        for a in acc.iter_mut() {
            *a = f.zero();
        }

        // theta(x_{2N}, x_{2N+1}) w(x_1..x_{2N-1})
        let v = w.value(&x[..2 * big_n - 1]);
        acc_matvec(&mut acc, rep.theta(x[2 * big_n - 1], x[2 * big_n]), v, 1);

        // -theta(x_{2N-1}, x_{2N+1}) w(x_1..x_{2N-2}, x_{2N})
        scratch.clear();
        scratch.extend_from_slice(&x[..2 * big_n - 2]);
        scratch.push(x[2 * big_n - 1]);
        let v = w.value(&scratch);
        acc_matvec(&mut acc, rep.theta(x[2 * big_n - 2], x[2 * big_n]), v, -1);

        // sum_k (-1)^{N+k} D(x_{2k-1}, x_{2k}) w(.. hat pair k .., x_{2N+1})
        for k in 1..=big_n {
            scratch.clear();
            scratch.extend_from_slice(&x[..2 * k - 2]);
            scratch.extend_from_slice(&x[2 * k..]);
            let v = w.value(&scratch);
            let sign = if (big_n + k) % 2 == 0 { 1 } else { -1 };
            acc_matvec(&mut acc, &dees[x[2 * k - 2] * n + x[2 * k - 1]], v, sign);
        }

        // sum_k sum_{j=2k+1}^{2N+1} (-1)^{N+k+1}
        //   w(.. hat pair k .., [x_{2k-1}, x_{2k}, x_j] at j, ..)
        for k in 1..=big_n {
            let sign = if (big_n + k + 1) % 2 == 0 { 1 } else { -1 };
            for j in (2 * k + 1)..=(2 * big_n + 1) {
                let br = t.bracket_basis(x[2 * k - 2], x[2 * k - 1], x[j - 1]);
                scratch.clear();
                scratch.extend_from_slice(&x[..2 * k - 2]);
                scratch.extend_from_slice(&x[2 * k..]);
                let pos = j - 3;
                for (l, coeff) in br.iter().enumerate() {
                    if coeff.is_zero() {
                        continue;
                    }
                    scratch[pos] = l;
                    let v = w.value(&scratch);
                    for (airef, vi) in acc.iter_mut().zip(v) {
                        if !vi.is_zero() {
                            let term = coeff.mul_ref(vi);
                            *airef = if sign > 0 {
                                airef.add_ref(&term)
                            } else {
                                airef.sub_ref(&term)
                            };
                        }
                    }
                }
                scratch[pos] = x[j - 1];
            }
        }

        if !vec_is_zero(&acc) {
            let off = out.fold(x) * m;
            out.data[off..off + m].clone_from_slice(&acc);
        }
    });
    Ok(out)
}

/// `acc += sign * mat * v`, skipping zero entries.
fn acc_matvec(acc: &mut [Scalar], mat: &Matrix, v: &[Scalar], sign: i32) {
    for (col, vi) in v.iter().enumerate() {
        if vi.is_zero() {
            continue;
        }
        for (row, a) in acc.iter_mut().enumerate() {
            let e = mat.get(row, col);
            if e.is_zero() {
                continue;
            }
            let term = e.mul_ref(vi);
            *a = if sign > 0 { a.add_ref(&term) } else { a.sub_ref(&term) };
        }
    }
}

/// The Loday-Pirashvili coboundary on Hom((x)^level L, Hom(g, V)), with the
/// module brackets [.,.]_L and [.,.]_R, under the identification of full
/// (2*level+1)-tensors with Hom((x)^level L, Hom(g, V)).
pub fn loday_delta(t: &LieTripleSystem, rep: &Representation, w: &Cochain) -> Result<Cochain> {
    check_delta_args(t, rep, w)?;
    let n = t.dim();
    let m = rep.dim_v();
    let f = t.field();
    let ell = w.level;

    // Evaluate w on a list of L-basis pairs, as a Hom(g, V) block. None when
    // the whole block vanishes.
    let eval_block = |pairs: &[(usize, usize)]| -> Option<Matrix> {
        let mut gidx = Vec::with_capacity(2 * ell + 1);
        for (i, j) in pairs {
            gidx.push(*i);
            gidx.push(*j);
        }
        gidx.push(0);
        let mut any = false;
        let mut mat = Matrix::zero(f, m, n);
        for wv in 0..n {
            gidx[2 * ell] = wv;
            for (a, s) in w.value(&gidx).iter().enumerate() {
                if !s.is_zero() {
                    mat.set(a, wv, s.clone());
                    any = true;
                }
            }
        }
        any.then_some(mat)
    };

    // Evaluate with one general L element in the given slot.
    let eval_with = |pairs: &[(usize, usize)], slot: usize, gen: &FundamentalElement| -> Option<Matrix> {
        let mut acc: Option<Matrix> = None;
        let mut work = pairs.to_vec();
        for (i, j, c) in gen.iter_nonzero() {
            work[slot] = (i, j);
            if let Some(b) = eval_block(&work) {
                let scaled = b.scale(c);
                acc = Some(match acc {
                    None => scaled,
                    Some(prev) => prev.add(&scaled).expect("same shape"),
                });
            }
        }
        acc
    };

    let mut out = Cochain::zero(f, n, m, ell + 1);
    let mut pairs = vec![(0usize, 0usize); ell + 1];

    for_each_tuple(n * n, ell + 1, |lt| {
        for (p, q) in lt.iter().zip(pairs.iter_mut()) {
            *q = (p / n, p % n);
        }
        let mut res: Option<Matrix> = None;
        let mut add_term = |term: Matrix, positive: bool| {
            let signed = if positive {
                term
            } else {
                term.scale(&f.from_i64(-1))
            };
            res = Some(match res.take() {
                None => signed,
                Some(prev) => prev.add(&signed).expect("same shape"),
            });
        };

        // sum_{k=1}^{ell} (-1)^{k+1} [x^k, w(.. hat x^k ..)]_L
        for k in 1..=ell {
            let rest: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != k - 1)
                .map(|(_, p)| *p)
                .collect();
            if let Some(block) = eval_block(&rest) {
                let x = FundamentalElement::basis_pair(f, n, pairs[k - 1].0, pairs[k - 1].1);
                let b = hom_bracket_l(t, rep, &x, &HomCochain1 { matrix: block })
                    .expect("validated dims");
                add_term(b.matrix, k % 2 == 1);
            }
        }

        // (-1)^{ell+1} [w(x^1..x^ell), x^{ell+1}]_R
        if let Some(block) = eval_block(&pairs[..ell]) {
            let x = FundamentalElement::basis_pair(f, n, pairs[ell].0, pairs[ell].1);
            let b = hom_bracket_r(t, rep, &HomCochain1 { matrix: block }, &x)
                .expect("validated dims");
            add_term(b.matrix, (ell + 1) % 2 == 0);
        }

        // sum_{k<l} (-1)^k w(.. hat x^k .., x^k o x^l at l, ..)
        for k in 1..=ell + 1 {
            for l in (k + 1)..=ell + 1 {
                let xk = FundamentalElement::basis_pair(f, n, pairs[k - 1].0, pairs[k - 1].1);
                let xl = FundamentalElement::basis_pair(f, n, pairs[l - 1].0, pairs[l - 1].1);
                let prod = circle(t, &xk, &xl).expect("validated dims");
                if prod.is_zero() {
                    continue;
                }
                let rest: Vec<(usize, usize)> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != k - 1)
                    .map(|(_, p)| *p)
                    .collect();
                if let Some(term) = eval_with(&rest, l - 2, &prod) {
                    add_term(term, k % 2 == 0);
                }
            }
        }

        if let Some(res) = res {
            if !res.is_zero() {
                let mut gidx = Vec::with_capacity(2 * ell + 3);
                for (i, j) in &pairs {
                    gidx.push(*i);
                    gidx.push(*j);
                }
                gidx.push(0);
                for wv in 0..n {
                    gidx[2 * ell + 2] = wv;
                    let off = out.fold(&gidx) * m;
                    for a in 0..m {
                        out.data[off + a] = res.get(a, wv).clone();
                    }
                }
            }
        }
    });
    Ok(out)
}

/// The sign relating the two coboundaries at this domain level:
/// yamaguti = sign * loday, with sign = (-1)^(n+1) for n = level + 1.
pub fn comparison_sign(level: usize) -> i64 {
    if level % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Matrix of the Yamaguti coboundary on the full tensor space at the given
/// domain level: columns are the images of the unit tensors.
pub fn delta_matrix(t: &LieTripleSystem, rep: &Representation, level: usize) -> Result<Matrix> {
    let basis = full_tensor_basis(t, rep.dim_v(), level)?;
    delta_matrix_on(t, rep, &basis, yamaguti_delta)
}

/// Matrix of the Loday-Pirashvili coboundary on the full tensor space.
pub fn loday_delta_matrix(
    t: &LieTripleSystem,
    rep: &Representation,
    level: usize,
) -> Result<Matrix> {
    let basis = full_tensor_basis(t, rep.dim_v(), level)?;
    delta_matrix_on(t, rep, &basis, loday_delta)
}

fn full_tensor_basis(t: &LieTripleSystem, dim_v: usize, level: usize) -> Result<Vec<Cochain>> {
    if level > 2 {
        return Err(Error::UnsupportedLevel(level));
    }
    let len = t.dim().pow(2 * level as u32 + 1) * dim_v;
    let mut out = Vec::with_capacity(len);
    for flat in 0..len {
        let mut c = Cochain::zero(t.field(), t.dim(), dim_v, level);
        c.data[flat] = t.field().one();
        out.push(c);
    }
    Ok(out)
}

/// Columns are images of the given cochains under `op`.
pub fn delta_matrix_on(
    t: &LieTripleSystem,
    rep: &Representation,
    basis: &[Cochain],
    op: fn(&LieTripleSystem, &Representation, &Cochain) -> Result<Cochain>,
) -> Result<Matrix> {
    let Some(first) = basis.first() else {
        return Ok(Matrix::zero(
            t.field(),
            t.dim().pow(3) * rep.dim_v(),
            0,
        ));
    };
    let out_len = t.dim().pow(2 * first.level as u32 + 3) * rep.dim_v();
    let mut m = Matrix::zero(t.field(), out_len, basis.len());
    for (col, b) in basis.iter().enumerate() {
        let image = op(t, rep, b)?;
        for (row, s) in image.data.iter().enumerate() {
            if !s.is_zero() {
                m.set(row, col, s.clone());
            }
        }
    }
    Ok(m)
}

/// The three displayed 3-cocycle conditions, checked verbatim on basis tuples.
pub fn is_3_cocycle(t: &LieTripleSystem, rep: &Representation, w: &Cochain) -> Result<bool> {
    if w.level != 1 {
        return Err(Error::UnsupportedLevel(w.level));
    }
    check_delta_args(t, rep, w)?;
    if !w.is_constrained() {
        return Ok(false);
    }
    let n = t.dim();
    let m = rep.dim_v();
    // w(x1, x2, [y1,y2,y3]) + D(x1,x2) w(y1,y2,y3)
    //   = w([x1,x2,y1], y2, y3) + w(y1, [x1,x2,y2], y3) + w(y1, y2, [x1,x2,y3])
    //   + theta(y2,y3) w(x1,x2,y1) - theta(y1,y3) w(x1,x2,y2)
    //   + D(y1,y2) w(x1,x2,y3)
    let mut ok = true;
    for_each_tuple(n, 5, |x| {
        if !ok {
            return;
        }
        let (x1, x2, y1, y2, y3) = (x[0], x[1], x[2], x[3], x[4]);
        let mut lhs = vec![t.field().zero(); m];
        add_bracket_slot(&mut lhs, t, w, &[x1, x2, usize::MAX], 2, (y1, y2, y3), 1);
        acc_matvec(&mut lhs, &rep.dee_basis(x1, x2), w.value(&[y1, y2, y3]), 1);

        let mut rhs = vec![t.field().zero(); m];
        add_bracket_slot(&mut rhs, t, w, &[usize::MAX, y2, y3], 0, (x1, x2, y1), 1);
        add_bracket_slot(&mut rhs, t, w, &[y1, usize::MAX, y3], 1, (x1, x2, y2), 1);
        add_bracket_slot(&mut rhs, t, w, &[y1, y2, usize::MAX], 2, (x1, x2, y3), 1);
        acc_matvec(&mut rhs, rep.theta(y2, y3), w.value(&[x1, x2, y1]), 1);
        acc_matvec(&mut rhs, rep.theta(y1, y3), w.value(&[x1, x2, y2]), -1);
        acc_matvec(&mut rhs, &rep.dee_basis(y1, y2), w.value(&[x1, x2, y3]), 1);
        if lhs != rhs {
            ok = false;
        }
    });
    Ok(ok)
}

/// `acc += sign * w(idx with slot <- [a,b,c])`.
fn add_bracket_slot(
    acc: &mut [Scalar],
    t: &LieTripleSystem,
    w: &Cochain,
    idx: &[usize],
    slot: usize,
    abc: (usize, usize, usize),
    sign: i32,
) {
    let mut work = idx.to_vec();
    for (l, coeff) in t.bracket_basis(abc.0, abc.1, abc.2).iter().enumerate() {
        if coeff.is_zero() {
            continue;
        }
        work[slot] = l;
        for (a, vi) in acc.iter_mut().zip(w.value(&work)) {
            if !vi.is_zero() {
                let term = coeff.mul_ref(vi);
                *a = if sign > 0 { a.add_ref(&term) } else { a.sub_ref(&term) };
            }
        }
    }
}

/// The three displayed 5-cocycle conditions, checked verbatim on basis tuples.
pub fn is_5_cocycle(t: &LieTripleSystem, rep: &Representation, w: &Cochain) -> Result<bool> {
    if w.level != 2 {
        return Err(Error::UnsupportedLevel(w.level));
    }
    check_delta_args(t, rep, w)?;
    if !w.is_constrained() {
        return Ok(false);
    }
    let n = t.dim();
    let m = rep.dim_v();
    let mut ok = true;
    for_each_tuple(n, 7, |x| {
        if !ok {
            return;
        }
        let (x1, x2, y1, y2, z1, z2, z3) = (x[0], x[1], x[2], x[3], x[4], x[5], x[6]);
        let mut s = vec![t.field().zero(); m];
        acc_matvec(&mut s, &rep.dee_basis(x1, x2), w.value(&[y1, y2, z1, z2, z3]), 1);
        acc_matvec(&mut s, &rep.dee_basis(y1, y2), w.value(&[x1, x2, z1, z2, z3]), -1);
        acc_matvec(&mut s, &rep.dee_basis(z1, z2), w.value(&[x1, x2, y1, y2, z3]), 1);
        acc_matvec(&mut s, rep.theta(z1, z3), w.value(&[x1, x2, y1, y2, z2]), -1);
        acc_matvec(&mut s, rep.theta(z2, z3), w.value(&[x1, x2, y1, y2, z1]), 1);
        add_bracket_slot(&mut s, t, w, &[usize::MAX, y2, z1, z2, z3], 0, (x1, x2, y1), -1);
        add_bracket_slot(&mut s, t, w, &[y1, usize::MAX, z1, z2, z3], 1, (x1, x2, y2), -1);
        add_bracket_slot(&mut s, t, w, &[y1, y2, usize::MAX, z2, z3], 2, (x1, x2, z1), -1);
        add_bracket_slot(&mut s, t, w, &[y1, y2, z1, usize::MAX, z3], 3, (x1, x2, z2), -1);
        add_bracket_slot(&mut s, t, w, &[y1, y2, z1, z2, usize::MAX], 4, (x1, x2, z3), -1);
        add_bracket_slot(&mut s, t, w, &[x1, x2, usize::MAX, z2, z3], 2, (y1, y2, z1), 1);
        add_bracket_slot(&mut s, t, w, &[x1, x2, z1, usize::MAX, z3], 3, (y1, y2, z2), 1);
        add_bracket_slot(&mut s, t, w, &[x1, x2, z1, z2, usize::MAX], 4, (y1, y2, z3), 1);
        add_bracket_slot(&mut s, t, w, &[x1, x2, y1, y2, usize::MAX], 4, (z1, z2, z3), -1);
        if !vec_is_zero(&s) {
            ok = false;
        }
    });
    Ok(ok)
}

#[derive(Debug, Clone)]
pub struct CohomologyReport {
    pub degree: usize,
    /// Dimension of the constrained cochain space at this degree.
    pub cochain_space_dim: usize,
    pub cocycle_dim: usize,
    pub coboundary_dim: usize,
    pub dim: usize,
    pub representatives: Vec<Cochain>,
}

/// Cohomology in degree 1, 3 or 5. Cocycles are the kernel of the coboundary
/// restricted to the constrained subspace; coboundaries come from one level
/// below. Degree 1 has no incoming differential, so B is taken to be zero.
/// Representatives are the rref kernel basis vectors filtered against B by
/// incremental rank.
pub fn cohomology_dim(
    t: &LieTripleSystem,
    rep: &Representation,
    degree: usize,
) -> Result<CohomologyReport> {
    if !matches!(degree, 1 | 3 | 5) {
        return Err(Error::UnsupportedLevel(degree));
    }
    let level = (degree - 1) / 2;
    let m = rep.dim_v();
    let n = t.dim();
    let cons = cochain_space_basis(t, m, level)?;

    let delta_on_cons = delta_matrix_on(t, rep, &cons, yamaguti_delta)?;
    let coeff_kernel = delta_on_cons.kernel_basis();
    let flat_len = n.pow(2 * level as u32 + 1) * m;
    let mut cocycles: Vec<Vec<Scalar>> = Vec::with_capacity(coeff_kernel.len());
    for coeffs in &coeff_kernel {
        let mut v = vec![t.field().zero(); flat_len];
        for (ci, a) in coeffs.iter().enumerate() {
            if !a.is_zero() {
                for (slot, s) in cons[ci].data.iter().enumerate() {
                    if !s.is_zero() {
                        v[slot] = v[slot].add_ref(&s.mul_ref(a));
                    }
                }
            }
        }
        cocycles.push(v);
    }

    let boundaries: Vec<Vec<Scalar>> = if level == 0 {
        Vec::new()
    } else {
        let lower = cochain_space_basis(t, m, level - 1)?;
        let mut out = Vec::with_capacity(lower.len());
        for b in &lower {
            out.push(yamaguti_delta(t, rep, b)?.data);
        }
        out
    };

    let dim = quotient_dim(&cocycles, &boundaries)?;

    let mut ech = EchelonSet::new();
    for b in &boundaries {
        ech.insert(b);
    }
    let coboundary_dim = ech.rank();
    let mut representatives = Vec::with_capacity(dim);
    for z in &cocycles {
        if ech.insert(z) {
            representatives.push(Cochain::from_flat(t.field(), n, m, level, z.clone())?);
        }
    }
    debug_assert_eq!(representatives.len(), dim);

    Ok(CohomologyReport {
        degree,
        cochain_space_dim: cons.len(),
        cocycle_dim: cocycles.len(),
        coboundary_dim,
        dim,
        representatives,
    })
}

/// Solve `delta nu = w` for a level-1 constrained cochain; the witness has its
/// free variables zeroed, so it is deterministic.
pub fn is_coboundary(
    t: &LieTripleSystem,
    rep: &Representation,
    w: &Cochain,
) -> Result<Option<HomCochain1>> {
    if w.level != 1 {
        return Err(Error::UnsupportedLevel(w.level));
    }
    check_delta_args(t, rep, w)?;
    if !w.is_constrained() {
        return Err(Error::NotConstrained);
    }
    let d0 = delta_matrix(t, rep, 0)?;
    match d0.solve(&w.data)? {
        Some(flat) => Ok(Some(HomCochain1::from_flat(
            t.field(),
            rep.dim_v(),
            t.dim(),
            &flat,
        )?)),
        None => Ok(None),
    }
}
