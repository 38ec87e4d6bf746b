//! Seeded generators of ADHM data and `C(sl₂)` points.
//!
//! Entries are integers in `[−10, 10]`. Commuting pairs are built
//! structurally (polynomials in a common matrix, square-zero algebras,
//! block sums) so that `[x, y] = 0` holds exactly.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{is_commuting, sl2_param_point, stability_check, AdhmDatum, Sl2Point};
use crate::linalg::Matrix;
use crate::rational::{rat, Rational};

pub type SeededRng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub const ENTRY_BOUND: i64 = 10;

pub fn entry<R: Rng>(rng: &mut R) -> Rational {
    rat(rng.gen_range(-ENTRY_BOUND..=ENTRY_BOUND))
}

fn nonzero_entry<R: Rng>(rng: &mut R) -> Rational {
    loop {
        let v = rng.gen_range(-ENTRY_BOUND..=ENTRY_BOUND);
        if v != 0 {
            return rat(v);
        }
    }
}

pub fn random_vector<R: Rng>(rng: &mut R, l: usize) -> Vec<Rational> {
    (0..l).map(|_| entry(rng)).collect()
}

pub fn random_matrix<R: Rng>(rng: &mut R, l: usize) -> Matrix {
    Matrix::from_rows((0..l).map(|_| random_vector(rng, l)).collect()).unwrap()
}

pub fn random_invertible<R: Rng>(rng: &mut R, l: usize) -> Matrix {
    loop {
        let g = random_matrix(rng, l);
        if g.rank() == l {
            return g;
        }
    }
}

/// `Σ c_k m^k` with small random coefficients, `k < l`.
fn random_polynomial_in<R: Rng>(rng: &mut R, m: &Matrix) -> Matrix {
    let l = m.nrows();
    let mut acc = Matrix::zeros(l, l);
    let mut power = Matrix::identity(l);
    for _ in 0..l {
        acc = acc.add(&power.scale(&rat(rng.gen_range(-3..=3))));
        power = power.mul(m);
    }
    acc
}

fn conjugate(m: &Matrix, g: &Matrix, g_inv: &Matrix) -> Matrix {
    g.mul(m).mul(g_inv)
}

/// Jordan-type matrix: random block sizes, eigenvalues drawn from a small
/// pool so that repeats occur.
fn random_jordan<R: Rng>(rng: &mut R, l: usize) -> Matrix {
    let mut m = Matrix::zeros(l, l);
    let mut start = 0;
    while start < l {
        let size = rng.gen_range(1..=l - start);
        let ev = rat(rng.gen_range(-2..=2));
        for i in start..start + size {
            m[(i, i)] = ev.clone();
            if i + 1 < start + size {
                m[(i, i + 1)] = rat(1);
            }
        }
        start += size;
    }
    m
}

/// Regular semisimple commuting pair with a cyclic first vector:
/// `x = g·diag(distinct)·g⁻¹`, `y = g·diag(·)·g⁻¹`, `v₁ = g·w` with every
/// coordinate of `w` nonzero.
pub fn regular_semisimple_cyclic<R: Rng>(rng: &mut R, l: usize, r: usize) -> AdhmDatum {
    let mut pool: Vec<i64> = (-ENTRY_BOUND..=ENTRY_BOUND).collect();
    pool.shuffle(rng);
    let eig: Vec<Rational> = pool[..l].iter().map(|&a| rat(a)).collect();
    let other: Vec<Rational> = (0..l).map(|_| entry(rng)).collect();
    let g = random_invertible(rng, l);
    let g_inv = g.inverse().unwrap();
    let x = conjugate(&Matrix::diagonal(&eig), &g, &g_inv);
    let y = conjugate(&Matrix::diagonal(&other), &g, &g_inv);
    let w: Vec<Rational> = (0..l).map(|_| nonzero_entry(rng)).collect();
    let mut v = vec![g.mul_vec(&w)];
    v.extend((1..r).map(|_| random_vector(rng, l)));
    AdhmDatum::new(x, y, v).unwrap()
}

/// The shape of a structurally commuting pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairFamily {
    /// `x` random, `y` a polynomial in `x`.
    PolynomialInX,
    /// Both polynomials in a conjugated Jordan-type matrix.
    PolynomialInJordan,
    /// Scalars plus elements of the square-zero algebra spanned by `E_{1j}`.
    SquareZero,
    /// Scalar matrices.
    Scalar,
    /// Block sum of two smaller polynomial pairs.
    BlockSum,
}

pub const PAIR_FAMILIES: [PairFamily; 5] = [
    PairFamily::PolynomialInX,
    PairFamily::PolynomialInJordan,
    PairFamily::SquareZero,
    PairFamily::Scalar,
    PairFamily::BlockSum,
];

pub fn commuting_pair<R: Rng>(rng: &mut R, l: usize, family: PairFamily) -> (Matrix, Matrix) {
    match family {
        PairFamily::PolynomialInX => {
            let x = random_matrix(rng, l);
            let y = random_polynomial_in(rng, &x);
            (x, y)
        }
        PairFamily::PolynomialInJordan => {
            let z = random_jordan(rng, l);
            let g = random_invertible(rng, l);
            let g_inv = g.inverse().unwrap();
            let x = random_polynomial_in(rng, &z);
            let y = random_polynomial_in(rng, &z);
            (conjugate(&x, &g, &g_inv), conjugate(&y, &g, &g_inv))
        }
        PairFamily::SquareZero => {
            let mut x = Matrix::identity(l).scale(&entry(rng));
            let mut y = Matrix::identity(l).scale(&entry(rng));
            for j in 1..l {
                x[(0, j)] += entry(rng);
                y[(0, j)] += entry(rng);
            }
            let g = random_invertible(rng, l);
            let g_inv = g.inverse().unwrap();
            (conjugate(&x, &g, &g_inv), conjugate(&y, &g, &g_inv))
        }
        PairFamily::Scalar => (
            Matrix::identity(l).scale(&entry(rng)),
            Matrix::identity(l).scale(&entry(rng)),
        ),
        PairFamily::BlockSum => {
            if l < 2 {
                return commuting_pair(rng, l, PairFamily::PolynomialInX);
            }
            let k = rng.gen_range(1..l);
            let (x1, y1) = commuting_pair(rng, k, PairFamily::PolynomialInJordan);
            let (x2, y2) = commuting_pair(rng, l - k, PairFamily::PolynomialInX);
            (block_sum(&x1, &x2), block_sum(&y1, &y2))
        }
    }
}

fn block_sum(a: &Matrix, b: &Matrix) -> Matrix {
    let (n, m) = (a.nrows(), b.nrows());
    let mut out = Matrix::zeros(n + m, n + m);
    for i in 0..n {
        for j in 0..n {
            out[(i, j)] = a[(i, j)].clone();
        }
    }
    for i in 0..m {
        for j in 0..m {
            out[(n + i, n + j)] = b[(i, j)].clone();
        }
    }
    out
}

/// Random vectors; sometimes sparse so that boundary cases of the
/// stability condition show up.
fn framing<R: Rng>(rng: &mut R, l: usize, r: usize) -> Vec<Vec<Rational>> {
    let sparse = rng.gen_bool(0.3);
    (0..r)
        .map(|_| {
            (0..l)
                .map(|_| {
                    if sparse && rng.gen_bool(0.6) {
                        rat(0)
                    } else {
                        entry(rng)
                    }
                })
                .collect()
        })
        .collect()
}

/// A commuting datum from a random structural family; stable or not.
pub fn random_commuting<R: Rng>(rng: &mut R, l: usize, r: usize) -> AdhmDatum {
    let family = *PAIR_FAMILIES.choose(rng).unwrap();
    let (x, y) = commuting_pair(rng, l, family);
    AdhmDatum::new(x, y, framing(rng, l, r)).unwrap()
}

/// A stable commuting datum, drawn by rejection over the structural
/// families. `None` if `max_attempts` draws were all unstable.
pub fn stable_commuting<R: Rng>(
    rng: &mut R,
    l: usize,
    r: usize,
    max_attempts: usize,
) -> Option<AdhmDatum> {
    for _ in 0..max_attempts {
        let family = *PAIR_FAMILIES.choose(rng).unwrap();
        let (x, y) = commuting_pair(rng, l, family);
        let d = AdhmDatum::new(x, y, framing(rng, l, r)).unwrap();
        debug_assert!(is_commuting(&d));
        if stability_check(&d) {
            return Some(d);
        }
    }
    None
}

/// Rank-one-on-a-line `2×2` datum: `x, y` are `g·T·g⁻¹` with `T` upper
/// triangular, so the first column `w` of `g` is a common eigenvector.
fn common_eigenline_pair<R: Rng>(rng: &mut R) -> (Matrix, Matrix, Vec<Rational>) {
    let g = random_invertible(rng, 2);
    let g_inv = g.inverse().unwrap();
    let mut tri = || {
        let mut t = random_matrix(rng, 2);
        t[(1, 0)] = rat(0);
        t
    };
    let (tx, ty) = (tri(), tri());
    (
        conjugate(&tx, &g, &g_inv),
        conjugate(&ty, &g, &g_inv),
        g.column(0),
    )
}

/// `l = 2` data for exercising the stability test: a mix of generic data,
/// data with all `v_i` on a common eigenline, parallel `v_i` on a
/// non-invariant line, zero framings and commuting pairs. Not necessarily
/// commuting.
pub fn structured_l2<R: Rng>(rng: &mut R, r: usize) -> AdhmDatum {
    let (x, y, v) = match rng.gen_range(0..6) {
        0 => (random_matrix(rng, 2), random_matrix(rng, 2), framing(rng, 2, r)),
        1 | 2 => {
            let (x, y, w) = common_eigenline_pair(rng);
            let v = (0..r)
                .map(|_| {
                    let t = entry(rng);
                    w.iter().map(|c| c * &t).collect()
                })
                .collect();
            (x, y, v)
        }
        3 => {
            let w = random_vector(rng, 2);
            let v = (0..r)
                .map(|_| {
                    let t = entry(rng);
                    w.iter().map(|c| c * &t).collect()
                })
                .collect();
            (random_matrix(rng, 2), random_matrix(rng, 2), v)
        }
        4 => {
            let family = *PAIR_FAMILIES.choose(rng).unwrap();
            let (x, y) = commuting_pair(rng, 2, family);
            (x, y, framing(rng, 2, r))
        }
        _ => {
            let (x, y, _) = common_eigenline_pair(rng);
            let v = if rng.gen_bool(0.5) {
                vec![vec![rat(0), rat(0)]; r]
            } else {
                framing(rng, 2, r)
            };
            (x, y, v)
        }
    };
    AdhmDatum::new(x, y, v).unwrap()
}

/// Parameters `(a, b, z)` for [`sl2_param_point`].
pub fn sl2_parameters<R: Rng>(rng: &mut R) -> (Rational, Rational, [Rational; 3]) {
    (entry(rng), entry(rng), [entry(rng), entry(rng), entry(rng)])
}

/// A parametrised point away from the origin (`(a, b) ≠ 0` and `z ≠ 0`).
pub fn generic_sl2_point<R: Rng>(rng: &mut R) -> Sl2Point {
    loop {
        let (a, b, z) = sl2_parameters(rng);
        let p = sl2_param_point(&a, &b, &z);
        if !p.is_origin() {
            return p;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adhm::tangent_dim_quotient;

    #[test]
    fn families_commute() {
        let mut rng = rng_from_seed(7);
        for l in 1..=4 {
            for family in PAIR_FAMILIES {
                for _ in 0..5 {
                    let (x, y) = commuting_pair(&mut rng, l, family);
                    assert!(x.commutator(&y).is_zero(), "{family:?} l={l}");
                }
            }
        }
    }

    #[test]
    fn regular_semisimple_is_stable() {
        let mut rng = rng_from_seed(11);
        for l in 1..=4 {
            let d = regular_semisimple_cyclic(&mut rng, l, 1);
            assert!(is_commuting(&d));
            assert!(stability_check(&d));
            assert_eq!(tangent_dim_quotient(&d).unwrap(), 2 * l);
        }
    }

    #[test]
    fn same_seed_same_data() {
        let a = stable_commuting(&mut rng_from_seed(3), 3, 2, 1000);
        let b = stable_commuting(&mut rng_from_seed(3), 3, 2, 1000);
        assert!(a.is_some());
        assert_eq!(a, b);
    }
}
