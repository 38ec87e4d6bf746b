//! Exact laboratory for ADHM data `(x, y, v₁, …, v_r)` on `V = Q^l`, and for
//! the commuting variety of `sl₂`.
//!
//! Every rank here is computed over the rationals; nothing is floating point.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{precondition, Error, Result};
use crate::linalg::{rank_of_rows, Matrix};
use crate::rational::{format_rational, Rational};

pub mod sampling;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdhmDatum {
    x: Matrix,
    y: Matrix,
    v: Vec<Vec<Rational>>,
}

impl AdhmDatum {
    pub fn new(x: Matrix, y: Matrix, v: Vec<Vec<Rational>>) -> Result<Self> {
        let l = x.nrows();
        if l == 0 {
            return precondition("l must be positive");
        }
        for m in [&x, &y] {
            if m.nrows() != l || m.ncols() != l {
                return Err(Error::Dimension {
                    expected: l,
                    found: if m.nrows() != l { m.nrows() } else { m.ncols() },
                });
            }
        }
        if v.is_empty() {
            return precondition("r must be positive");
        }
        for vi in &v {
            if vi.len() != l {
                return Err(Error::Dimension {
                    expected: l,
                    found: vi.len(),
                });
            }
        }
        Ok(AdhmDatum { x, y, v })
    }

    pub fn l(&self) -> usize {
        self.x.nrows()
    }

    pub fn r(&self) -> usize {
        self.v.len()
    }

    pub fn x(&self) -> &Matrix {
        &self.x
    }

    pub fn y(&self) -> &Matrix {
        &self.y
    }

    pub fn v(&self) -> &[Vec<Rational>] {
        &self.v
    }

    /// `(gxg⁻¹, gyg⁻¹, gv)`.
    pub fn conjugate(&self, g: &Matrix) -> Result<AdhmDatum> {
        let g_inv = g
            .inverse()
            .ok_or_else(|| Error::Precondition("conjugating matrix is singular".into()))?;
        AdhmDatum::new(
            g.mul(&self.x).mul(&g_inv),
            g.mul(&self.y).mul(&g_inv),
            self.v.iter().map(|vi| g.mul_vec(vi)).collect(),
        )
    }
}

impl fmt::Display for AdhmDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vs: Vec<String> = self
            .v
            .iter()
            .map(|vi| {
                let c: Vec<String> = vi.iter().map(format_rational).collect();
                format!("({})", c.join(" "))
            })
            .collect();
        write!(f, "x={} y={} v={}", self.x, self.y, vs.join(","))
    }
}

/// `xy − yx`.
pub fn commutator_residual(d: &AdhmDatum) -> Matrix {
    d.x.commutator(&d.y)
}

pub fn is_commuting(d: &AdhmDatum) -> bool {
    commutator_residual(d).is_zero()
}

/// Dimension of the smallest subspace containing every `v_i` and invariant
/// under `x` and `y`.
pub fn invariant_closure_dim(d: &AdhmDatum) -> usize {
    let mut basis: Vec<Vec<Rational>> = Vec::new();
    let mut queue: Vec<Vec<Rational>> = d.v.clone();
    while let Some(w) = queue.pop() {
        if basis.len() == d.l() {
            break;
        }
        if w.iter().all(Zero::is_zero) {
            continue;
        }
        basis.push(w);
        if rank_of_rows(basis.iter().map(Vec::as_slice)) < basis.len() {
            basis.pop();
            continue;
        }
        let w = basis.last().unwrap();
        queue.push(d.x.mul_vec(w));
        queue.push(d.y.mul_vec(w));
    }
    basis.len()
}

/// True iff no proper `x,y`-invariant subspace contains all `v_i`.
pub fn stability_check(d: &AdhmDatum) -> bool {
    invariant_closure_dim(d) == d.l()
}

/// Matrix of `A ↦ A·m − m·A` on row-major vectorised `l×l` matrices.
fn right_commutator_operator(m: &Matrix) -> Matrix {
    let l = m.nrows();
    let mut op = Matrix::zeros(l * l, l * l);
    for p in 0..l {
        for q in 0..l {
            let row = p * l + q;
            for k in 0..l {
                // a_{pk} m_{kq}
                op[(row, p * l + k)] += &m[(k, q)];
                // − m_{pk} a_{kq}
                op[(row, k * l + q)] -= &m[(p, k)];
            }
        }
    }
    op
}

/// Dimension of `{A : [A,x] = [A,y] = 0, A·v_i = 0}`, the Lie algebra of the
/// stabiliser in `GL(V)`.
pub fn stabilizer_dim(d: &AdhmDatum) -> usize {
    let l = d.l();
    let cx = right_commutator_operator(&d.x);
    let cy = right_commutator_operator(&d.y);
    let mut rows: Vec<Vec<Rational>> = cx.rows().chain(cy.rows()).map(<[_]>::to_vec).collect();
    for vi in &d.v {
        for p in 0..l {
            let mut row = vec![Rational::zero(); l * l];
            for (k, vk) in vi.iter().enumerate() {
                row[p * l + k] = vk.clone();
            }
            rows.push(row);
        }
    }
    l * l - rank_of_rows(rows.iter().map(Vec::as_slice))
}

/// Rank of `dμ(ξ, η) = [ξ, y] + [x, η]` at `(x, y)`.
pub fn moment_differential_rank(d: &AdhmDatum) -> usize {
    let cy = right_commutator_operator(&d.y);
    let cx = right_commutator_operator(&d.x);
    // [x, η] = −(ηx − xη)
    let rows: Vec<Vec<Rational>> = cy
        .rows()
        .zip(cx.rows())
        .map(|(a, b)| a.iter().cloned().chain(b.iter().map(|t| -t)).collect())
        .collect();
    rank_of_rows(rows.iter().map(Vec::as_slice))
}

/// Embedding dimension of `Quot^l(O^{⊕r})` at the orbit of a stable commuting
/// datum: `2l² + rl − rank(dμ) − l²`.
pub fn tangent_dim_quotient(d: &AdhmDatum) -> Result<usize> {
    if !is_commuting(d) {
        return precondition("datum does not satisfy [x, y] = 0");
    }
    if !stability_check(d) {
        return precondition("datum is not stable");
    }
    let l = d.l();
    Ok(l * l + d.r() * l - moment_differential_rank(d))
}

/// A point `(x₁, x₂, x₃, y₁, y₂, y₃)` of `A⁶ ⊃ C(sl₂)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sl2Point {
    pub x: [Rational; 3],
    pub y: [Rational; 3],
}

impl Sl2Point {
    pub fn new(x: [Rational; 3], y: [Rational; 3]) -> Self {
        Sl2Point { x, y }
    }

    pub fn origin() -> Self {
        let z = || Rational::zero();
        Sl2Point::new([z(), z(), z()], [z(), z(), z()])
    }

    pub fn is_origin(&self) -> bool {
        self.x.iter().chain(&self.y).all(Zero::is_zero)
    }
}

impl fmt::Display for Sl2Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.x.iter().chain(&self.y).map(format_rational).collect();
        write!(f, "({})", c.join(", "))
    }
}

/// `(x₁y₂ − x₂y₁, x₁y₃ − x₃y₁, x₂y₃ − x₃y₂)`.
pub fn sl2_minor_residual(p: &Sl2Point) -> [Rational; 3] {
    let [x1, x2, x3] = &p.x;
    let [y1, y2, y3] = &p.y;
    [x1 * y2 - x2 * y1, x1 * y3 - x3 * y1, x2 * y3 - x3 * y2]
}

pub fn sl2_on_variety(p: &Sl2Point) -> bool {
    sl2_minor_residual(p).iter().all(Zero::is_zero)
}

/// `x_i = a·z_i`, `y_i = b·z_i`.
pub fn sl2_param_point(a: &Rational, b: &Rational, z: &[Rational; 3]) -> Sl2Point {
    Sl2Point::new(
        [a * &z[0], a * &z[1], a * &z[2]],
        [b * &z[0], b * &z[1], b * &z[2]],
    )
}

/// Jacobian of the three minors in the variables `(x₁, x₂, x₃, y₁, y₂, y₃)`.
pub fn sl2_jacobian(p: &Sl2Point) -> Matrix {
    let [x1, x2, x3] = p.x.clone();
    let [y1, y2, y3] = p.y.clone();
    let z = Rational::zero;
    Matrix::from_rows(vec![
        vec![y2.clone(), -y1.clone(), z(), -x2.clone(), x1.clone(), z()],
        vec![y3.clone(), z(), -y1, -x3.clone(), z(), x1],
        vec![z(), y3, -y2, z(), -x3, x2],
    ])
    .expect("3×6 literal")
}

pub fn sl2_jacobian_rank(p: &Sl2Point) -> Result<usize> {
    if !sl2_on_variety(p) {
        return precondition(format!("point {p} is not on the commuting variety"));
    }
    Ok(sl2_jacobian(p).rank())
}

/// Dimension of the degree-`n` part of `C[az_i, bz_j]`, i.e. the number of
/// monomials `a^s b^t z^e` with `s + t = |e| = n`: `(n+1)·C(n+2, 2)`.
pub fn sl2_hilbert_coefficient(n: u64) -> BigInt {
    let n = BigInt::from(n);
    (&n + 1u32) * (&n + 2u32) * (&n + 1u32) / 2u32
}

/// Whether an h-vector reads the same backwards.
pub fn is_palindromic<T: PartialEq>(h: &[T]) -> bool {
    h.iter().eq(h.iter().rev())
}

/// The `h`-polynomial `1 + 2q` of `C(sl₂)` fails the symmetry a Gorenstein
/// ring would need.
pub fn gorenstein_symmetry_test() -> bool {
    is_palindromic(&[1, 2])
}
