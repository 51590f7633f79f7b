//! Shared fixtures, generators, and independent oracles for the integration
//! and acceptance suites.
//!
//! The oracles deliberately avoid the library's elimination and coboundary
//! paths: ranks come from fraction-free Bareiss elimination over big
//! integers, and constrained-space dimensions from a monolithic stacked
//! constraint matrix.

#![allow(dead_code)]

use std::path::PathBuf;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha20Rng;

use ltscalc::exact_linalg::{Field, Matrix, Scalar};
use ltscalc::lts_core::{from_lie_algebra, verify_lts, LieTripleSystem};
use ltscalc::representation::Representation;

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

pub fn qi(v: i64) -> Scalar {
    Field::Rational.from_i64(v)
}

/// dim 2, [e1,e2,e1] = e2, [e2,e1,e1] = -e2.
pub fn t2() -> LieTripleSystem {
    let f = Field::Rational;
    let n = 2;
    let mut c = vec![f.zero(); 16];
    c[((0 * n + 1) * n) * n + 1] = f.one();
    c[((n + 0) * n) * n + 1] = f.from_i64(-1);
    LieTripleSystem::new(f, n, c).unwrap()
}

/// Triple system of sl2 with basis h, e, f.
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

pub fn zero_lts(n: usize) -> LieTripleSystem {
    LieTripleSystem::zero(Field::Rational, n)
}

/// Fixture corpus for the axiom-level criteria.
pub fn fixture_systems() -> Vec<(String, LieTripleSystem)> {
    let mut out = vec![
        ("t2".to_string(), t2()),
        ("sl2".to_string(), sl2_lts()),
    ];
    for n in 1..=4 {
        out.push((format!("zero{}", n), zero_lts(n)));
    }
    out
}

/// The pair corpus for the cochain-complex criteria.
pub fn fixture_pairs() -> Vec<(String, LieTripleSystem, Representation)> {
    let mut out = Vec::new();
    let push = |out: &mut Vec<(String, LieTripleSystem, Representation)>,
                name: &str,
                t: LieTripleSystem,
                rep: Representation| {
        out.push((name.to_string(), t, rep));
    };
    let t = t2();
    push(&mut out, "t2/adjoint", t.clone(), ltscalc::representation::adjoint_rep(&t));
    push(&mut out, "t2/zero2", t.clone(), Representation::zero(Field::Rational, 2, 2));
    push(&mut out, "t2/zero1", t, Representation::zero(Field::Rational, 2, 1));
    let z2 = zero_lts(2);
    push(&mut out, "zero2/zero1", z2.clone(), Representation::zero(Field::Rational, 2, 1));
    push(&mut out, "zero2/adjoint", z2.clone(), ltscalc::representation::adjoint_rep(&z2));
    let s = sl2_lts();
    push(&mut out, "sl2/adjoint", s.clone(), ltscalc::representation::adjoint_rep(&s));
    push(&mut out, "sl2/zero2", s, Representation::zero(Field::Rational, 3, 2));
    out
}

/// Direct sum of two systems on the concatenated basis.
pub fn direct_sum(a: &LieTripleSystem, b: &LieTripleSystem) -> LieTripleSystem {
    let f = a.field();
    let (na, nb) = (a.dim(), b.dim());
    let n = na + nb;
    let mut c = vec![f.zero(); n * n * n * n];
    let mut set = |i: usize, j: usize, k: usize, l: usize, v: Scalar| {
        c[((i * n + j) * n + k) * n + l] = v;
    };
    for i in 0..na {
        for j in 0..na {
            for k in 0..na {
                for (l, s) in a.bracket_basis(i, j, k).iter().enumerate() {
                    set(i, j, k, l, s.clone());
                }
            }
        }
    }
    for i in 0..nb {
        for j in 0..nb {
            for k in 0..nb {
                for (l, s) in b.bracket_basis(i, j, k).iter().enumerate() {
                    set(na + i, na + j, na + k, na + l, s.clone());
                }
            }
        }
    }
    LieTripleSystem::new(f, n, c).unwrap()
}

/// All valid two-dimensional systems with bracket parameters in
/// [-bound, bound]: [e1,e2,e1] = a e1 + b e2, [e1,e2,e2] = c e1 + d e2.
pub fn search_n2_systems(bound: i64) -> Vec<LieTripleSystem> {
    let f = Field::Rational;
    let n = 2;
    let mut out = Vec::new();
    let range = -bound..=bound;
    for a in range.clone() {
        for b in range.clone() {
            for c in range.clone() {
                for d in range.clone() {
                    let mut t = vec![f.zero(); 16];
                    let mut set = |i: usize, j: usize, k: usize, l: usize, v: i64| {
                        t[((i * n + j) * n + k) * n + l] = f.from_i64(v);
                    };
                    set(0, 1, 0, 0, a);
                    set(0, 1, 0, 1, b);
                    set(0, 1, 1, 0, c);
                    set(0, 1, 1, 1, d);
                    set(1, 0, 0, 0, -a);
                    set(1, 0, 0, 1, -b);
                    set(1, 0, 1, 0, -c);
                    set(1, 0, 1, 1, -d);
                    if let Ok(sys) = LieTripleSystem::new(f, n, t) {
                        out.push(sys);
                    }
                }
            }
        }
    }
    out
}

/// Random three-dimensional systems obtained from randomly sampled Lie
/// algebra structure constants that happen to satisfy the Jacobi identity.
pub fn random_n3_systems(count: usize, rng: &mut ChaCha20Rng) -> Vec<LieTripleSystem> {
    let f = Field::Rational;
    let n = 3;
    let mut out = Vec::new();
    let mut attempts = 0;
    while out.len() < count && attempts < 100_000 {
        attempts += 1;
        let mut lie = vec![f.zero(); 27];
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            for l in 0..n {
                let v = rng.gen_range(-1i64..=1);
                lie[(i * n + j) * n + l] = f.from_i64(v);
                lie[(j * n + i) * n + l] = f.from_i64(-v);
            }
        }
        if let Ok(sys) = from_lie_algebra(f, n, &lie) {
            if !out.contains(&sys) {
                out.push(sys);
            }
        }
    }
    out
}

/// A deterministic corpus of at least `min` valid systems at n = 2 and 3,
/// interleaved so prefixes of the corpus exercise both dimensions.
pub fn random_valid_systems(min: usize, seed: u64) -> Vec<LieTripleSystem> {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let n2 = search_n2_systems(2);
    let mut n3 = random_n3_systems(12, &mut rng);
    n3.push(direct_sum(&t2(), &zero_lts(1)));
    let mut out = Vec::with_capacity(n2.len() + n3.len());
    let mut n3_iter = n3.into_iter();
    for (i, sys) in n2.into_iter().enumerate() {
        out.push(sys);
        if i % 4 == 3 {
            out.extend(n3_iter.next());
        }
    }
    out.extend(n3_iter);
    assert!(out.len() >= min, "only {} valid systems found", out.len());
    out
}

/// Perturb one structure constant (or an antisymmetric pair) of a valid
/// system until the result fails the axiom check; returns the raw tensor.
pub fn failing_perturbation(
    t: &LieTripleSystem,
    rng: &mut ChaCha20Rng,
) -> Vec<Scalar> {
    let n = t.dim();
    loop {
        let mut c = t.constants().to_vec();
        let i = rng.gen_range(0..n);
        let j = rng.gen_range(0..n);
        let k = rng.gen_range(0..n);
        let l = rng.gen_range(0..n);
        let delta = qi(*[-2i64, -1, 1, 2].iter().nth(rng.gen_range(0..4)).unwrap());
        let idx = ((i * n + j) * n + k) * n + l;
        if rng.gen_bool(0.5) || i == j {
            c[idx] = c[idx].add_ref(&delta);
        } else {
            // antisymmetry-preserving pair perturbation
            let idx2 = ((j * n + i) * n + k) * n + l;
            c[idx] = c[idx].add_ref(&delta);
            c[idx2] = c[idx2].sub_ref(&delta);
        }
        let report = verify_lts(t.field(), n, &c).unwrap();
        if !report.ok {
            return c;
        }
    }
}

// ---------------------------------------------------------------------------
// Independent oracles
// ---------------------------------------------------------------------------

fn scalar_to_ratio(s: &Scalar) -> (BigInt, BigInt) {
    match s {
        Scalar::Q(r) => (r.numer().clone(), r.denom().clone()),
        Scalar::Fp { .. } => panic!("oracle works over Q"),
    }
}

fn bigint_gcd(a: &BigInt, b: &BigInt) -> BigInt {
    let mut a = a.abs();
    let mut b = b.abs();
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

/// Clear denominators of a rational row into integers.
fn integer_row(row: &[Scalar]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for s in row {
        let (_, d) = scalar_to_ratio(s);
        let g = bigint_gcd(&lcm, &d);
        lcm = &lcm / &g * &d;
    }
    row.iter()
        .map(|s| {
            let (n, d) = scalar_to_ratio(s);
            n * (&lcm / d)
        })
        .collect()
}

/// Rank via fraction-free Bareiss elimination over the integers. An
/// elimination path independent of the library's rref.
pub fn bareiss_rank(vectors: &[Vec<Scalar>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    let mut m: Vec<Vec<BigInt>> = vectors.iter().map(|r| integer_row(r)).collect();
    let rows = m.len();
    let cols = m[0].len();
    let mut prev = BigInt::one();
    let mut r = 0usize;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let num = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                debug_assert!((&num % &prev).is_zero());
                m[i][j] = num / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        r += 1;
    }
    r
}

/// Kernel dimension of the monolithic stacked constraint matrix for the
/// constrained cochain space, built directly from its defining equations and
/// ranked with the Bareiss oracle.
pub fn oracle_constrained_dim(n: usize, m: usize, level: usize) -> usize {
    assert!(level >= 1);
    let d = 2 * level + 1;
    let flat_len = n.pow(d as u32) * m;
    let fold = |idx: &[usize]| idx.iter().fold(0, |acc, &i| acc * n + i);
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    let mut prefixes = vec![vec![]];
    for _ in 0..d - 3 {
        let mut next = Vec::new();
        for p in &prefixes {
            for v in 0..n {
                let mut q: Vec<usize> = p.clone();
                q.push(v);
                next.push(q);
            }
        }
        prefixes = next;
    }
    for pre in &prefixes {
        for i in 0..n {
            for j in i..n {
                for k in 0..n {
                    for a in 0..m {
                        let mut row = vec![qi(0); flat_len];
                        for t in [[i, j, k], [j, i, k]] {
                            let mut idx = pre.clone();
                            idx.extend_from_slice(&t);
                            let slot = fold(&idx) * m + a;
                            row[slot] = row[slot].add_ref(&qi(1));
                        }
                        rows.push(row);
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for a in 0..m {
                        let mut row = vec![qi(0); flat_len];
                        for t in [[i, j, k], [j, k, i], [k, i, j]] {
                            let mut idx = pre.clone();
                            idx.extend_from_slice(&t);
                            let slot = fold(&idx) * m + a;
                            row[slot] = row[slot].add_ref(&qi(1));
                        }
                        rows.push(row);
                    }
                }
            }
        }
    }
    flat_len - bareiss_rank(&rows)
}

/// Direct evaluation of a single axiom at an index tuple on a raw tensor,
/// written against the trilinear extension rather than the verifier's loops.
pub fn axiom_violated_at(
    field: Field,
    dim: usize,
    c: &[Scalar],
    axiom: &ltscalc::lts_core::LtsAxiom,
    idx: &[usize],
) -> bool {
    let n = dim;
    let bracket = |x: &[Scalar], y: &[Scalar], z: &[Scalar]| -> Vec<Scalar> {
        let mut out = vec![field.zero(); n];
        for (i, xi) in x.iter().enumerate() {
            for (j, yj) in y.iter().enumerate() {
                for (k, zk) in z.iter().enumerate() {
                    let coeff = xi.mul_ref(yj).mul_ref(zk);
                    if coeff.is_zero() {
                        continue;
                    }
                    for l in 0..n {
                        let s = &c[((i * n + j) * n + k) * n + l];
                        if !s.is_zero() {
                            out[l] = out[l].add_ref(&s.mul_ref(&coeff));
                        }
                    }
                }
            }
        }
        out
    };
    let basis = |i: usize| {
        let mut v = vec![field.zero(); n];
        v[i] = field.one();
        v
    };
    use ltscalc::lts_core::LtsAxiom;
    match axiom {
        LtsAxiom::Alternating => {
            let (i, j, k) = (idx[0], idx[1], idx[2]);
            let a = bracket(&basis(i), &basis(j), &basis(k));
            let b = bracket(&basis(j), &basis(i), &basis(k));
            a.iter().zip(&b).any(|(x, y)| !x.add_ref(y).is_zero())
        }
        LtsAxiom::Jacobi => {
            let (i, j, k) = (idx[0], idx[1], idx[2]);
            let a = bracket(&basis(i), &basis(j), &basis(k));
            let b = bracket(&basis(j), &basis(k), &basis(i));
            let d = bracket(&basis(k), &basis(i), &basis(j));
            (0..n).any(|l| !a[l].add_ref(&b[l]).add_ref(&d[l]).is_zero())
        }
        LtsAxiom::Fundamental => {
            let (a, b, p, q, r) = (idx[0], idx[1], idx[2], idx[3], idx[4]);
            let lhs = bracket(&basis(a), &basis(b), &bracket(&basis(p), &basis(q), &basis(r)));
            let t1 = bracket(&bracket(&basis(a), &basis(b), &basis(p)), &basis(q), &basis(r));
            let t2 = bracket(&basis(p), &bracket(&basis(a), &basis(b), &basis(q)), &basis(r));
            let t3 = bracket(&basis(p), &basis(q), &bracket(&basis(a), &basis(b), &basis(r)));
            (0..n).any(|l| lhs[l] != t1[l].add_ref(&t2[l]).add_ref(&t3[l]))
        }
    }
}

/// A seeded random linear map g -> V with small integer entries.
pub fn random_hom(
    rng: &mut ChaCha20Rng,
    dim_v: usize,
    dim_g: usize,
) -> ltscalc::representation::HomCochain1 {
    let mut m = Matrix::zero(Field::Rational, dim_v, dim_g);
    for i in 0..dim_v {
        for j in 0..dim_g {
            m.set(i, j, qi(rng.gen_range(-3i64..=3)));
        }
    }
    ltscalc::representation::HomCochain1 { matrix: m }
}
