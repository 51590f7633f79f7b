//! Exact dense linear algebra over the rationals and prime fields F_p (p >= 5).
//!
//! This is the engine behind every cohomology and classification computation:
//! reduced row echelon form, rank, kernel bases, particular solutions, and
//! quotient dimensions, all with exact arithmetic. Pivoting is deterministic
//! (first nonzero entry scanning left to right, top to bottom) so kernel bases
//! and solutions are reproducible across runs.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Deterministic Miller-Rabin, valid for all u64.
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut b: u64, mut e: u64| {
        let mut acc = 1u64;
        b %= n;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(acc, b);
            }
            b = mulmod(b, b);
            e >>= 1;
        }
        acc
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// The coefficient field: the rationals, or F_p for a prime p >= 5.
///
/// Characteristic 2 and 3 are excluded; the triple-system identities need
/// division by 2 and 3 to polarize.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    pub fn prime(p: u64) -> Result<Field> {
        if p >= 5 && is_prime_u64(p) {
            Ok(Field::Prime(p))
        } else {
            Err(Error::BadModulus(p))
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Rational => Scalar::Q(BigRational::zero()),
            Field::Prime(p) => Scalar::Fp { p: *p, value: 0 },
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Q(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => {
                let m = v.rem_euclid(*p as i64) as u64;
                Scalar::Fp { p: *p, value: m }
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F{}", p),
        }
    }
}

/// An exact field element. Rationals are kept in lowest terms with positive
/// denominator (the representation `BigRational` maintains); prime-field
/// residues live in `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(BigRational),
    Fp { p: u64, value: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(_) => Field::Rational,
            Scalar::Fp { p, .. } => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_zero(),
            Scalar::Fp { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_one(),
            Scalar::Fp { value, .. } => *value == 1,
        }
    }

    pub fn rational(num: i64, den: i64) -> Scalar {
        assert!(den != 0, "zero denominator");
        Scalar::Q(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    fn check_same(&self, other: &Scalar, op: &str) {
        if self.field() != other.field() {
            panic!(
                "scalar {} on mixed fields {} and {}",
                op,
                self.field(),
                other.field()
            );
        }
    }

    pub fn add_ref(&self, other: &Scalar) -> Scalar {
        self.check_same(other, "add");
        match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            (Scalar::Fp { p, value: a }, Scalar::Fp { value: b, .. }) => Scalar::Fp {
                p: *p,
                value: ((*a as u128 + *b as u128) % *p as u128) as u64,
            },
            _ => unreachable!(),
        }
    }

    pub fn sub_ref(&self, other: &Scalar) -> Scalar {
        self.add_ref(&other.neg_ref())
    }

    pub fn mul_ref(&self, other: &Scalar) -> Scalar {
        self.check_same(other, "mul");
        match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::Fp { p, value: a }, Scalar::Fp { value: b, .. }) => Scalar::Fp {
                p: *p,
                value: ((*a as u128 * *b as u128) % *p as u128) as u64,
            },
            _ => unreachable!(),
        }
    }

    pub fn neg_ref(&self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Fp { p, value } => Scalar::Fp {
                p: *p,
                value: if *value == 0 { 0 } else { p - value },
            },
        }
    }

    /// Multiplicative inverse. Panics on zero; elimination code only ever
    /// inverts pivots it has checked to be nonzero.
    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Q(a) => {
                assert!(!a.is_zero(), "inverse of zero");
                Scalar::Q(a.recip())
            }
            Scalar::Fp { p, value } => {
                assert!(*value != 0, "inverse of zero");
                let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % *p as u128) as u64;
                let mut acc = 1u64;
                let mut b = *value;
                let mut e = p - 2;
                while e > 0 {
                    if e & 1 == 1 {
                        acc = mulmod(acc, b);
                    }
                    b = mulmod(b, b);
                    e >>= 1;
                }
                Scalar::Fp { p: *p, value: acc }
            }
        }
    }

    pub fn div_ref(&self, other: &Scalar) -> Scalar {
        self.mul_ref(&other.inv())
    }

    /// Parse a scalar literal in the given field. Rationals read `"p"` or
    /// `"p/q"` and are normalized to lowest terms with positive denominator;
    /// prime-field elements read any integer and are reduced into `[0, p)`.
    pub fn parse(s: &str, field: Field) -> Result<Scalar> {
        let bad = |reason: &str| Error::BadScalar {
            literal: s.to_string(),
            reason: reason.to_string(),
        };
        let parse_int = |t: &str| -> Result<BigInt> {
            t.parse::<BigInt>().map_err(|_| bad("not an integer"))
        };
        match field {
            Field::Rational => {
                if let Some((num, den)) = s.split_once('/') {
                    let n = parse_int(num.trim())?;
                    let d = parse_int(den.trim())?;
                    if d.is_zero() {
                        return Err(bad("zero denominator"));
                    }
                    Ok(Scalar::Q(BigRational::new(n, d)))
                } else {
                    Ok(Scalar::Q(BigRational::from_integer(parse_int(s.trim())?)))
                }
            }
            Field::Prime(p) => {
                let n = parse_int(s.trim())?;
                let pp = BigInt::from(p);
                let mut r = n % &pp;
                if r.is_negative() {
                    r += &pp;
                }
                let (_, digits) = r.to_u64_digits();
                Ok(Scalar::Fp {
                    p,
                    value: digits.first().copied().unwrap_or(0),
                })
            }
        }
    }

    /// Canonical string form: `"p"` or `"p/q"` (lowest terms, q > 0) over the
    /// rationals, the residue in `[0, p)` over a prime field.
    pub fn to_literal(&self) -> String {
        match self {
            Scalar::Q(r) => {
                if r.denom().is_one() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Fp { value, .. } => value.to_string(),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_literal())
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.add_ref(rhs)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.sub_ref(rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.mul_ref(rhs)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

/// `dst += coeff * src`, elementwise.
pub fn vec_add_scaled(dst: &mut [Scalar], src: &[Scalar], coeff: &Scalar) {
    if coeff.is_zero() {
        return;
    }
    for (d, s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            *d = d.add_ref(&s.mul_ref(coeff));
        }
    }
}

pub fn vec_is_zero(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// Dense row-major matrix over a single field.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn new(field: Field, rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Matrix> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "matrix data length {} != {}x{}",
                data.len(),
                rows,
                cols
            )));
        }
        for s in &data {
            if s.field() != field {
                return Err(Error::FieldMismatch(format!(
                    "entry over {} in a matrix over {}",
                    s.field(),
                    field
                )));
            }
        }
        Ok(Matrix {
            field,
            rows,
            cols,
            data,
        })
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Result<Matrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".to_string()));
        }
        Matrix::new(field, r, c, rows.into_iter().flatten().collect())
    }

    pub fn zero(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn field(&self) -> Field {
        self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        assert_eq!(v.field(), self.field, "entry field mismatch");
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        vec_is_zero(&self.data)
    }

    fn check_field(&self, other: &Matrix, op: &str) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(format!(
                "{} on matrices over {} and {}",
                op, self.field, other.field
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.check_field(other, "add")?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "add {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.add_ref(b))
            .collect();
        Ok(Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.add(&other.scale(&self.field.from_i64(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        let data = self.data.iter().map(|a| a.mul_ref(c)).collect();
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.check_field(other, "mul")?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "mul {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zero(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j).add_ref(&a.mul_ref(b));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "mul {}x{} by vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        let mut out = vec![self.field.zero(); self.rows];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for i in 0..self.rows {
                let a = self.get(i, j);
                if !a.is_zero() {
                    out[i] = out[i].add_ref(&a.mul_ref(x));
                }
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zero(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "pow of non-square {}x{}",
                self.rows, self.cols
            )));
        }
        let mut out = Matrix::identity(self.field, self.rows);
        for _ in 0..k {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// Reduced row echelon form plus pivot column indices. Deterministic:
    /// pivots are the first nonzero entries scanning left to right, top to
    /// bottom. Rank is the pivot count.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pr = 0usize;
        for pc in 0..m.cols {
            if pr == m.rows {
                break;
            }
            let Some(sel) = (pr..m.rows).find(|&r| !m.get(r, pc).is_zero()) else {
                continue;
            };
            if sel != pr {
                for j in 0..m.cols {
                    m.data.swap(sel * m.cols + j, pr * m.cols + j);
                }
            }
            let inv = m.get(pr, pc).inv();
            for j in pc..m.cols {
                let v = m.get(pr, j).mul_ref(&inv);
                m.set(pr, j, v);
            }
            for r in 0..m.rows {
                if r == pr || m.get(r, pc).is_zero() {
                    continue;
                }
                let f = m.get(r, pc).clone();
                for j in pc..m.cols {
                    let v = m.get(r, j).sub_ref(&f.mul_ref(m.get(pr, j)));
                    m.set(r, j, v);
                }
            }
            pivots.push(pc);
            pr += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space in the canonical free-variable
    /// parameterization from rref: one vector per free column f, with entry 1
    /// at f and the negated rref entries at the pivot coordinates.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        let piv_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = Some(row);
            }
            v
        };
        let mut basis = Vec::new();
        for f in 0..self.cols {
            if piv_set[f].is_some() {
                continue;
            }
            let mut vec = vec![self.field.zero(); self.cols];
            vec[f] = self.field.one();
            for (row, &pc) in pivots.iter().enumerate() {
                vec[pc] = r.get(row, f).neg_ref();
            }
            basis.push(vec);
        }
        basis
    }

    /// A particular solution of `self * x = b`, or `None` when inconsistent.
    /// Deterministic: free variables are set to zero under the rref
    /// parameterization.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "solve {}x{} with rhs of length {}",
                self.rows,
                self.cols,
                b.len()
            )));
        }
        for s in b {
            if s.field() != self.field {
                return Err(Error::FieldMismatch(
                    "rhs field differs from matrix field".to_string(),
                ));
            }
        }
        let mut aug = Matrix::zero(self.field, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = r.get(row, self.cols).clone();
        }
        Ok(Some(x))
    }
}

fn stack_rank(field: Field, vecs: &[Vec<Scalar>]) -> Result<usize> {
    if vecs.is_empty() {
        return Ok(0);
    }
    Ok(Matrix::from_rows(field, vecs.to_vec())?.rank())
}

/// Dimension of span(Z)/span(B). Verifies span(B) is contained in span(Z) and
/// reports `NotASubspace` otherwise.
pub fn quotient_dim(z: &[Vec<Scalar>], b: &[Vec<Scalar>]) -> Result<usize> {
    let Some(first) = z.first().or_else(|| b.first()) else {
        return Ok(0);
    };
    let field = first
        .first()
        .map(Scalar::field)
        .ok_or_else(|| Error::DimensionMismatch("zero-length vector".to_string()))?;
    let len = first.len();
    if z.iter().chain(b.iter()).any(|v| v.len() != len) {
        return Err(Error::DimensionMismatch(
            "quotient_dim vectors of unequal length".to_string(),
        ));
    }
    let rz = stack_rank(field, z)?;
    let rb = stack_rank(field, b)?;
    let mut all = z.to_vec();
    all.extend(b.iter().cloned());
    if stack_rank(field, &all)? != rz {
        return Err(Error::NotASubspace);
    }
    Ok(rz - rb)
}

/// Incrementally maintained row-echelon spanning set, used to pick
/// deterministic coset representatives.
#[derive(Default)]
pub struct EchelonSet {
    rows: Vec<(usize, Vec<Scalar>)>, // (lead column, normalized row)
}

impl EchelonSet {
    pub fn new() -> EchelonSet {
        EchelonSet::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the current set; if a nonzero remainder is left,
    /// insert it and return true.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        let mut w = v.to_vec();
        for (lead, row) in &self.rows {
            if !w[*lead].is_zero() {
                let f = w[*lead].clone();
                for (a, b) in w.iter_mut().zip(row) {
                    *a = a.sub_ref(&f.mul_ref(b));
                }
            }
        }
        let Some(lead) = w.iter().position(|s| !s.is_zero()) else {
            return false;
        };
        let inv = w[lead].inv();
        for a in w.iter_mut() {
            *a = a.mul_ref(&inv);
        }
        self.rows.push((lead, w));
        self.rows.sort_by_key(|(l, _)| *l);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::rational(n, d)
    }

    fn qi(n: i64) -> Scalar {
        Scalar::rational(n, 1)
    }

    fn qmat(rows: Vec<Vec<i64>>) -> Matrix {
        Matrix::from_rows(
            Field::Rational,
            rows.into_iter()
                .map(|r| r.into_iter().map(qi).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn rref_identity_is_fixed() {
        let m = Matrix::identity(Field::Rational, 2);
        let (r, piv) = m.rref();
        assert_eq!(r, m);
        assert_eq!(piv, vec![0, 1]);
    }

    #[test]
    fn rref_rank_one() {
        let m = qmat(vec![vec![1, 2], vec![2, 4]]);
        let (r, piv) = m.rref();
        assert_eq!(r, qmat(vec![vec![1, 2], vec![0, 0]]));
        assert_eq!(piv, vec![0]);
    }

    #[test]
    fn rref_prime_field_invertible() {
        // det [[2,1],[1,1]] = 1 != 0 mod 5; cross-checked by direct inversion:
        // [[2,1],[1,1]] * [[1,4],[4,2]] = I over F5.
        let f = Field::prime(5).unwrap();
        let e = |v: i64| f.from_i64(v);
        let m = Matrix::from_rows(f, vec![vec![e(2), e(1)], vec![e(1), e(1)]]).unwrap();
        let inv = Matrix::from_rows(f, vec![vec![e(1), e(4)], vec![e(4), e(2)]]).unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(f, 2));
        let (r, piv) = m.rref();
        assert_eq!(r, Matrix::identity(f, 2));
        assert_eq!(piv, vec![0, 1]);
    }

    #[test]
    fn bad_modulus_rejected() {
        assert!(Field::prime(4).is_err());
        assert!(Field::prime(3).is_err());
        assert!(Field::prime(9).is_err());
        assert!(Field::prime(7).is_ok());
        assert!(Field::prime(1_000_000_007).is_ok());
    }

    #[test]
    fn mixed_field_matrix_rejected() {
        let err = Matrix::new(
            Field::Rational,
            1,
            2,
            vec![qi(1), Field::prime(5).unwrap().zero()],
        );
        assert!(matches!(err, Err(Error::FieldMismatch(_))));
    }

    #[test]
    fn kernel_of_zero_map_is_standard_basis() {
        let m = Matrix::zero(Field::Rational, 2, 3);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 3);
        for (i, v) in k.iter().enumerate() {
            for (j, s) in v.iter().enumerate() {
                assert_eq!(s, &qi((i == j) as i64));
            }
        }
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        assert!(Matrix::identity(Field::Rational, 3).kernel_basis().is_empty());
    }

    #[test]
    fn kernel_canonical_parameterization() {
        // x0 + x1 = 0, x2 = 0: canonical rref vector has 1 at the free column.
        let m = qmat(vec![vec![1, 1, 0], vec![0, 0, 1]]);
        let k = m.kernel_basis();
        assert_eq!(k, vec![vec![qi(-1), qi(1), qi(0)]]);
    }

    #[test]
    fn solve_identity_returns_rhs() {
        let m = Matrix::identity(Field::Rational, 3);
        let b = vec![qi(4), q(1, 2), qi(-7)];
        assert_eq!(m.solve(&b).unwrap(), Some(b));
    }

    #[test]
    fn solve_inconsistent_is_none() {
        let m = qmat(vec![vec![1, 2], vec![2, 4]]);
        assert_eq!(m.solve(&[qi(1), qi(3)]).unwrap(), None);
    }

    #[test]
    fn solve_free_variables_zeroed() {
        let m = qmat(vec![vec![1, 2], vec![2, 4]]);
        assert_eq!(m.solve(&[qi(1), qi(2)]).unwrap(), Some(vec![qi(1), qi(0)]));
    }

    #[test]
    fn quotient_dim_examples() {
        let e1 = vec![qi(1), qi(0)];
        let e2 = vec![qi(0), qi(1)];
        assert_eq!(quotient_dim(&[e1.clone(), e2.clone()], &[]).unwrap(), 2);
        assert_eq!(
            quotient_dim(&[e1.clone(), e2.clone()], &[e1.clone()]).unwrap(),
            1
        );
        assert!(matches!(
            quotient_dim(&[e1], &[e2]),
            Err(Error::NotASubspace)
        ));
    }

    #[test]
    fn prime_field_kernel_and_solve() {
        let f = Field::prime(5).unwrap();
        let e = |v: i64| f.from_i64(v);
        // rank-1 over F5: second row is 3 times the first
        let m = Matrix::from_rows(f, vec![vec![e(1), e(2)], vec![e(3), e(6)]]).unwrap();
        assert_eq!(m.rank(), 1);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 1);
        assert!(vec_is_zero(&m.mul_vec(&k[0]).unwrap()));
        let x = m.solve(&[e(4), e(12)]).unwrap().unwrap();
        assert_eq!(m.mul_vec(&x).unwrap(), vec![e(4), e(2)]);
        assert_eq!(m.solve(&[e(1), e(0)]).unwrap(), None);
    }

    #[test]
    fn scalar_parse_normalizes() {
        let s = Scalar::parse("3/-6", Field::Rational).unwrap();
        assert_eq!(s.to_literal(), "-1/2");
        let s = Scalar::parse("-7", Field::prime(5).unwrap()).unwrap();
        assert_eq!(s.to_literal(), "3");
        assert!(Scalar::parse("1/0", Field::Rational).is_err());
        assert!(Scalar::parse("x", Field::Rational).is_err());
    }

    prop_compose! {
        fn small_scalar()(n in -6i64..=6, d in 1i64..=4) -> Scalar {
            Scalar::rational(n, d)
        }
    }

    prop_compose! {
        fn small_matrix()(rows in 1usize..5, cols in 1usize..5)
            (rows in Just(rows), cols in Just(cols),
             data in prop::collection::vec(small_scalar(), rows * cols)) -> Matrix {
            Matrix::new(Field::Rational, rows, cols, data).unwrap()
        }
    }

    proptest! {
        #[test]
        fn rref_is_idempotent(m in small_matrix()) {
            let (r, _) = m.rref();
            let (rr, _) = r.rref();
            prop_assert_eq!(r, rr);
        }

        #[test]
        fn rank_nullity(m in small_matrix()) {
            prop_assert_eq!(m.rank() + m.kernel_basis().len(), m.cols());
        }

        #[test]
        fn kernel_vectors_annihilate(m in small_matrix()) {
            for v in m.kernel_basis() {
                prop_assert!(vec_is_zero(&m.mul_vec(&v).unwrap()));
            }
        }

        #[test]
        fn solve_exact_or_rank_jump(m in small_matrix(),
                                    bdata in prop::collection::vec(small_scalar(), 8)) {
            let b: Vec<Scalar> = bdata.into_iter().take(m.rows()).collect();
            prop_assume!(b.len() == m.rows());
            match m.solve(&b).unwrap() {
                Some(x) => {
                    prop_assert_eq!(m.mul_vec(&x).unwrap(), b);
                }
                None => {
                    let mut aug_rows = Vec::new();
                    for i in 0..m.rows() {
                        let mut row = m.row(i).to_vec();
                        row.push(b[i].clone());
                        aug_rows.push(row);
                    }
                    let aug = Matrix::from_rows(Field::Rational, aug_rows).unwrap();
                    prop_assert!(aug.rank() > m.rank());
                }
            }
        }
    }
}
