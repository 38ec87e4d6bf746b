//! Numerical Chow ring of a smooth projective surface.
//!
//! A class is truncated at degree 2 and its degree-2 part is kept only as an
//! integral, which is enough for every intersection number computed here.

use num_traits::{One, Zero};

use crate::bundle::BundleData;
use crate::error::{precondition, Error, Result};
use crate::rational::Rational;

/// Divisor lattice with its intersection pairing and cotangent-bundle data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceModel {
    pub name: String,
    pub divisors: Vec<String>,
    /// `pairing[i][j] = ∫ D_i·D_j`.
    pub pairing: Vec<Vec<Rational>>,
    /// `c₁(Ω¹_S)` in the divisor basis.
    pub omega_c1: Vec<Rational>,
    /// `∫ c₂(Ω¹_S)`.
    pub omega_c2_int: Rational,
    /// Topological Euler characteristic.
    pub chi_top: Rational,
}

impl SurfaceModel {
    /// Builds and validates a surface model.
    pub fn new(
        name: impl Into<String>,
        divisors: Vec<String>,
        pairing: Vec<Vec<Rational>>,
        omega_c1: Vec<Rational>,
        omega_c2_int: Rational,
        chi_top: Rational,
    ) -> Result<Self> {
        let s = SurfaceModel {
            name: name.into(),
            divisors,
            pairing,
            omega_c1,
            omega_c2_int,
            chi_top,
        };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.rank();
        if self.pairing.len() != n {
            return Err(Error::Dimension {
                expected: n,
                found: self.pairing.len(),
            });
        }
        for (i, row) in self.pairing.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Dimension {
                    expected: n,
                    found: row.len(),
                });
            }
            for j in 0..i {
                if row[j] != self.pairing[j][i] {
                    return precondition(format!(
                        "pairing of surface {:?} is not symmetric at ({i},{j})",
                        self.name
                    ));
                }
            }
        }
        self.check_divisor(&self.omega_c1)?;
        if self.chi_top != self.omega_c2_int {
            return precondition(format!(
                "surface {:?}: chi_top {} differs from ∫c₂(Ω¹) {}",
                self.name, self.chi_top, self.omega_c2_int
            ));
        }
        Ok(())
    }

    /// Number of divisor classes in the basis.
    pub fn rank(&self) -> usize {
        self.divisors.len()
    }

    pub fn check_divisor(&self, v: &[Rational]) -> Result<()> {
        if v.len() == self.rank() {
            Ok(())
        } else {
            Err(Error::Dimension {
                expected: self.rank(),
                found: v.len(),
            })
        }
    }

    pub fn check_class(&self, a: &GradedClass) -> Result<()> {
        self.check_divisor(&a.deg1)
    }

    /// `uᵀ·P·v`.
    pub fn pair(&self, u: &[Rational], v: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                acc += ui * &self.pairing[i][j] * vj;
            }
        }
        acc
    }

    pub fn zero_divisor(&self) -> Vec<Rational> {
        vec![Rational::zero(); self.rank()]
    }

    pub fn zero(&self) -> GradedClass {
        GradedClass::scalar(Rational::zero(), self.rank())
    }

    pub fn one(&self) -> GradedClass {
        GradedClass::scalar(Rational::one(), self.rank())
    }

    pub fn divisor_class(&self, v: Vec<Rational>) -> Result<GradedClass> {
        self.check_divisor(&v)?;
        Ok(GradedClass {
            deg0: Rational::zero(),
            deg1: v,
            deg2int: Rational::zero(),
        })
    }

    pub fn point_class(&self, integral: Rational) -> GradedClass {
        GradedClass {
            deg0: Rational::zero(),
            deg1: self.zero_divisor(),
            deg2int: integral,
        }
    }

    /// Truncated product: terms of degree above 2 are dropped.
    pub fn mul(&self, a: &GradedClass, b: &GradedClass) -> Result<GradedClass> {
        self.check_class(a)?;
        self.check_class(b)?;
        Ok(self.mul_unchecked(a, b))
    }

    pub(crate) fn mul_unchecked(&self, a: &GradedClass, b: &GradedClass) -> GradedClass {
        let deg1 = a
            .deg1
            .iter()
            .zip(&b.deg1)
            .map(|(x, y)| &a.deg0 * y + &b.deg0 * x)
            .collect();
        GradedClass {
            deg0: &a.deg0 * &b.deg0,
            deg1,
            deg2int: &a.deg0 * &b.deg2int + &b.deg0 * &a.deg2int + self.pair(&a.deg1, &b.deg1),
        }
    }

    pub fn pow(&self, a: &GradedClass, n: u32) -> Result<GradedClass> {
        self.check_class(a)?;
        let mut acc = self.one();
        for _ in 0..n {
            acc = self.mul_unchecked(&acc, a);
        }
        Ok(acc)
    }

    /// Multiplicative inverse in the truncated ring; requires `deg0 ≠ 0`.
    pub fn inverse(&self, a: &GradedClass) -> Result<GradedClass> {
        self.check_class(a)?;
        if a.deg0.is_zero() {
            return precondition("class with zero degree-0 part is not invertible");
        }
        let inv0 = a.deg0.recip();
        let inv0_sq = &inv0 * &inv0;
        Ok(GradedClass {
            deg1: a.deg1.iter().map(|x| -(x * &inv0_sq)).collect(),
            deg2int: self.pair(&a.deg1, &a.deg1) * &inv0_sq * &inv0 - &a.deg2int * &inv0_sq,
            deg0: inv0,
        })
    }

    /// The cotangent bundle `Ω¹_S` as rank-2 bundle data.
    pub fn cotangent(&self) -> BundleData {
        BundleData {
            rank: 2,
            c1: self.omega_c1.clone(),
            c2int: self.omega_c2_int.clone(),
        }
    }

    /// `∫_S c₁(M)²` style shortcut for divisor vectors.
    pub fn self_intersection(&self, v: &[Rational]) -> Rational {
        self.pair(v, v)
    }
}

/// A class on a surface: scalar, divisor vector, and the integral of its
/// degree-2 part.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedClass {
    pub deg0: Rational,
    pub deg1: Vec<Rational>,
    pub deg2int: Rational,
}

impl GradedClass {
    pub fn new(deg0: Rational, deg1: Vec<Rational>, deg2int: Rational) -> Self {
        GradedClass {
            deg0,
            deg1,
            deg2int,
        }
    }

    pub fn scalar(c: Rational, rank: usize) -> Self {
        GradedClass {
            deg0: c,
            deg1: vec![Rational::zero(); rank],
            deg2int: Rational::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.deg0.is_zero() && self.deg2int.is_zero() && self.deg1.iter().all(Zero::is_zero)
    }

    fn check_same(&self, other: &GradedClass) -> Result<()> {
        if self.deg1.len() == other.deg1.len() {
            Ok(())
        } else {
            Err(Error::Dimension {
                expected: self.deg1.len(),
                found: other.deg1.len(),
            })
        }
    }

    pub fn add(&self, other: &GradedClass) -> Result<GradedClass> {
        self.check_same(other)?;
        Ok(self.add_unchecked(other))
    }

    pub(crate) fn add_unchecked(&self, other: &GradedClass) -> GradedClass {
        GradedClass {
            deg0: &self.deg0 + &other.deg0,
            deg1: self.deg1.iter().zip(&other.deg1).map(|(a, b)| a + b).collect(),
            deg2int: &self.deg2int + &other.deg2int,
        }
    }

    pub fn sub(&self, other: &GradedClass) -> Result<GradedClass> {
        self.check_same(other)?;
        Ok(self.add_unchecked(&other.scale(&-Rational::one())))
    }

    pub fn scale(&self, c: &Rational) -> GradedClass {
        GradedClass {
            deg0: &self.deg0 * c,
            deg1: self.deg1.iter().map(|x| x * c).collect(),
            deg2int: &self.deg2int * c,
        }
    }

    /// Keeps only the component of the given degree (0, 1 or 2).
    pub fn homogeneous(&self, degree: usize) -> GradedClass {
        let rank = self.deg1.len();
        let mut out = GradedClass::scalar(Rational::zero(), rank);
        match degree {
            0 => out.deg0 = self.deg0.clone(),
            1 => out.deg1 = self.deg1.clone(),
            2 => out.deg2int = self.deg2int.clone(),
            _ => {}
        }
        out
    }

    /// `∫_S a`: the degree-2 part.
    pub fn integrate(&self) -> Rational {
        self.deg2int.clone()
    }
}

/// The four ring operations on classes over one surface.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassOp {
    Add,
    Sub,
    /// Multiply `a` by the scalar `b.deg0`.
    Scale,
    Mul,
}

pub fn class_arithmetic(
    surface: &SurfaceModel,
    a: &GradedClass,
    b: &GradedClass,
    op: ClassOp,
) -> Result<GradedClass> {
    surface.check_class(a)?;
    surface.check_class(b)?;
    match op {
        ClassOp::Add => a.add(b),
        ClassOp::Sub => a.sub(b),
        ClassOp::Scale => Ok(a.scale(&b.deg0)),
        ClassOp::Mul => surface.mul(a, b),
    }
}

pub fn integrate(a: &GradedClass) -> Rational {
    a.integrate()
}

/// Builtin surface models.
pub mod surfaces {
    use super::SurfaceModel;
    use crate::rational::{rat, Rational};

    pub fn projective_plane() -> SurfaceModel {
        SurfaceModel::new(
            "p2",
            vec!["H".into()],
            vec![vec![rat(1)]],
            vec![rat(-3)],
            rat(3),
            rat(3),
        )
        .unwrap()
    }

    pub fn p1_x_p1() -> SurfaceModel {
        SurfaceModel::new(
            "p1xp1",
            vec!["F1".into(), "F2".into()],
            vec![vec![rat(0), rat(1)], vec![rat(1), rat(0)]],
            vec![rat(-2), rat(-2)],
            rat(4),
            rat(4),
        )
        .unwrap()
    }

    /// A surface whose pairing and cotangent data all vanish.
    pub fn zero_surface() -> SurfaceModel {
        SurfaceModel::new(
            "zero",
            vec!["D".into()],
            vec![vec![rat(0)]],
            vec![rat(0)],
            rat(0),
            rat(0),
        )
        .unwrap()
    }

    /// Two-parameter-family style abstract surface with basis `(H, K)`,
    /// `K = c₁(Ω¹)`, pairing `[[h2, hk], [hk, k2]]` and `∫c₂(Ω¹) = e`.
    pub fn abstract_surface(
        name: &str,
        h2: Rational,
        hk: Rational,
        k2: Rational,
        e: Rational,
    ) -> SurfaceModel {
        SurfaceModel::new(
            name,
            vec!["H".into(), "K".into()],
            vec![vec![h2, hk.clone()], vec![hk, k2]],
            vec![rat(0), rat(1)],
            e.clone(),
            e,
        )
        .unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::surfaces::*;
    use super::*;
    use crate::rational::{frac, rat};

    fn cls(s: &SurfaceModel, d0: i64, d1: &[i64], d2: i64) -> GradedClass {
        assert_eq!(d1.len(), s.rank());
        GradedClass::new(rat(d0), d1.iter().map(|&x| rat(x)).collect(), rat(d2))
    }

    #[test]
    fn unit_is_identity() {
        let s = p1_x_p1();
        let x = cls(&s, 3, &[2, -5], 7);
        assert_eq!(s.mul(&s.one(), &x).unwrap(), x);
    }

    #[test]
    fn divisor_product_is_pairing() {
        let s = p1_x_p1();
        let u = cls(&s, 0, &[1, 2], 0);
        let v = cls(&s, 0, &[3, -1], 0);
        // uᵀPv = 1·(-1) + 2·3
        assert_eq!(s.mul(&u, &v).unwrap(), cls(&s, 0, &[0, 0], 5));
    }

    #[test]
    fn cube_of_hyperplane_truncates() {
        let s = projective_plane();
        let h = cls(&s, 0, &[1], 0);
        assert_eq!(s.integrate_mul(&h, &h), rat(1));
        assert!(s.pow(&h, 3).unwrap().is_zero());
    }

    #[test]
    fn integrate_examples() {
        let s = projective_plane();
        assert_eq!(integrate(&s.one()), rat(0));
        assert_eq!(integrate(&cls(&s, 0, &[0], 5)), rat(5));
    }

    #[test]
    fn mismatched_basis_is_dimension_error() {
        let p2 = projective_plane();
        let q = p1_x_p1();
        let a = p2.one();
        let b = q.one();
        assert!(matches!(
            class_arithmetic(&p2, &a, &b, ClassOp::Add),
            Err(Error::Dimension { .. })
        ));
        assert!(a.add(&b).is_err());
    }

    #[test]
    fn inverse_of_unit() {
        let s = p1_x_p1();
        let a = GradedClass::new(frac(2, 3), vec![rat(1), rat(-2)], rat(4));
        let inv = s.inverse(&a).unwrap();
        assert_eq!(s.mul(&a, &inv).unwrap(), s.one());
        assert!(s.inverse(&s.point_class(rat(1))).is_err());
    }

    #[test]
    fn builtin_surfaces_satisfy_gauss_bonnet() {
        for s in [projective_plane(), p1_x_p1(), zero_surface()] {
            assert_eq!(s.chi_top, s.omega_c2_int);
        }
    }

    #[test]
    fn asymmetric_pairing_rejected() {
        let r = SurfaceModel::new(
            "bad",
            vec!["A".into(), "B".into()],
            vec![vec![rat(0), rat(1)], vec![rat(2), rat(0)]],
            vec![rat(0), rat(0)],
            rat(0),
            rat(0),
        );
        assert!(r.is_err());
    }

    impl SurfaceModel {
        fn integrate_mul(&self, a: &GradedClass, b: &GradedClass) -> Rational {
            self.mul(a, b).unwrap().integrate()
        }
    }
}
