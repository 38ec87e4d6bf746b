//! Classes on the projectivisation `p: P(E) → S` as polynomials in
//! `ζ = c₁(O(1))` with surface coefficients.
//!
//! No Grothendieck relation is imposed on the polynomials. Integration is
//! defined through the pushforward rule `p_*ζ^l = (−1)^{l+1−r} s_{l+1−r}(E)`.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::bundle::{segre_component, segre_total, BundleData};
use crate::chow::{GradedClass, SurfaceModel};
use crate::error::{precondition, Result};
use crate::rational::{binomial, format_rational, rat, sign, Rational};

/// The projective bundle `P(E)` over a modelled surface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectiveBundle {
    surface: SurfaceModel,
    bundle: BundleData,
    /// `s₀(E), s₁(E), s₂(E)`.
    segre: [GradedClass; 3],
}

impl ProjectiveBundle {
    pub fn new(surface: SurfaceModel, bundle: BundleData) -> Result<Arc<Self>> {
        bundle.validate_on(&surface)?;
        let segre = [
            segre_component(&surface, &bundle, 0)?,
            segre_component(&surface, &bundle, 1)?,
            segre_component(&surface, &bundle, 2)?,
        ];
        Ok(Arc::new(ProjectiveBundle {
            surface,
            bundle,
            segre,
        }))
    }

    pub fn surface(&self) -> &SurfaceModel {
        &self.surface
    }

    pub fn bundle(&self) -> &BundleData {
        &self.bundle
    }

    /// Rank `r` of `E`.
    pub fn rank(&self) -> usize {
        self.bundle.rank as usize
    }

    /// `dim P(E) = r + 1`.
    pub fn dim(&self) -> usize {
        self.rank() + 1
    }

    /// Highest ζ-degree kept by Segre series expansions.
    pub fn series_degree(&self) -> usize {
        self.rank() + 3
    }

    /// `s_j(E)`, zero outside `0..=2`.
    fn segre_of_bundle(&self, j: i64) -> Option<&GradedClass> {
        if (0..=2).contains(&j) {
            Some(&self.segre[j as usize])
        } else {
            None
        }
    }

    /// Pullback `p^*α`, a ζ-constant class.
    pub fn pullback(self: &Arc<Self>, a: GradedClass) -> Result<ZetaClass> {
        self.surface.check_class(&a)?;
        Ok(ZetaClass {
            space: Arc::clone(self),
            coeffs: vec![a],
        })
    }

    pub fn one(self: &Arc<Self>) -> ZetaClass {
        ZetaClass {
            space: Arc::clone(self),
            coeffs: vec![self.surface.one()],
        }
    }

    pub fn zero(self: &Arc<Self>) -> ZetaClass {
        ZetaClass {
            space: Arc::clone(self),
            coeffs: Vec::new(),
        }
    }

    /// `ζ^k`.
    pub fn zeta_power(self: &Arc<Self>, k: usize) -> ZetaClass {
        let mut coeffs = vec![self.surface.zero(); k + 1];
        coeffs[k] = self.surface.one();
        ZetaClass {
            space: Arc::clone(self),
            coeffs,
        }
    }

    /// `ζ + p^*c₁(L)`, i.e. `c₁(p^*L ⊗ O(1))`.
    pub fn twisted_hyperplane(self: &Arc<Self>, l: &BundleData) -> Result<ZetaClass> {
        if !l.is_line() {
            return precondition("twisting sheaf must be invertible");
        }
        let lc = self.surface.divisor_class(l.c1.clone())?;
        Ok(ZetaClass {
            space: Arc::clone(self),
            coeffs: vec![lc, self.surface.one()],
        })
    }

    /// `p_*a = Σ_k (−1)^{k+1−r} s_{k+1−r}(E)·a_k`, truncated on `S`.
    pub fn pushforward(&self, a: &ZetaClass) -> Result<GradedClass> {
        self.check_space(a)?;
        let r = self.rank() as i64;
        let mut acc = self.surface.zero();
        for (k, coeff) in a.coeffs.iter().enumerate() {
            let j = k as i64 + 1 - r;
            let Some(s) = self.segre_of_bundle(j) else {
                continue;
            };
            let term = self.surface.mul_unchecked(s, coeff).scale(&sign(j));
            acc = acc.add_unchecked(&term);
        }
        Ok(acc)
    }

    /// `∫_{P(E)} a = ∫_S p_*a`.
    pub fn integrate(&self, a: &ZetaClass) -> Result<Rational> {
        Ok(self.pushforward(a)?.integrate())
    }

    /// Total Segre class of `p^*F ⊗ O(n)`, kept up to ζ-degree
    /// [`series_degree`](Self::series_degree).
    pub fn segre_twisted_pull(self: &Arc<Self>, f: &BundleData, n: i64) -> Result<ZetaClass> {
        f.validate_on(&self.surface)?;
        let chern = self.chern_twisted_pull(f, n);
        self.invert_series(&chern, self.series_degree())
    }

    /// `c(p^*F ⊗ O(n)) = Σ_i c_i(F)(1 + nζ)^{rk F − i}`.
    pub fn chern_twisted_pull(self: &Arc<Self>, f: &BundleData, n: i64) -> ZetaClass {
        let rank = f.rank as i64;
        let cs = [
            self.surface.one(),
            GradedClass::new(Rational::zero(), f.c1.clone(), Rational::zero()),
            self.surface.point_class(f.c2int.clone()),
        ];
        let mut coeffs = vec![self.surface.zero(); rank as usize + 1];
        for (i, ci) in cs.iter().enumerate() {
            let m = rank - i as i64;
            if m < 0 || ci.is_zero() {
                continue;
            }
            for j in 0..=m {
                let factor = binomial(m, j) * rat(n).pow(j as i32);
                if factor.is_zero() {
                    continue;
                }
                coeffs[j as usize] = coeffs[j as usize].add_unchecked(&ci.scale(&factor));
            }
        }
        ZetaClass {
            space: Arc::clone(self),
            coeffs,
        }
        .trimmed()
    }

    /// Inverse of a ζ-series whose constant term is invertible, up to
    /// ζ-degree `max_degree`.
    pub fn invert_series(self: &Arc<Self>, c: &ZetaClass, max_degree: usize) -> Result<ZetaClass> {
        self.check_space(c)?;
        let s = &self.surface;
        let c0 = c.coeff(0);
        let c0_inv = s.inverse(&c0)?;
        let mut out: Vec<GradedClass> = Vec::with_capacity(max_degree + 1);
        out.push(c0_inv.clone());
        for j in 1..=max_degree {
            let mut acc = s.zero();
            for i in 1..=j.min(c.coeffs.len().saturating_sub(1)) {
                acc = acc.add_unchecked(&s.mul_unchecked(&c.coeffs[i], &out[j - i]));
            }
            out.push(s.mul_unchecked(&c0_inv, &acc).scale(&-Rational::one()));
        }
        Ok(ZetaClass {
            space: Arc::clone(self),
            coeffs: out,
        })
    }

    /// `s(Ω¹_{P(E)}) = s(p^*Ω¹_S)·s(p^*E ⊗ O(−1))`.
    pub fn segre_omega(self: &Arc<Self>) -> Result<ZetaClass> {
        let base = segre_total(&self.surface, &self.surface.cotangent())?;
        let relative = self.segre_twisted_pull(&self.bundle, -1)?;
        self.pullback(base)?.mul(&relative)
    }

    fn check_space(&self, a: &ZetaClass) -> Result<()> {
        if *a.space == *self {
            Ok(())
        } else {
            precondition("class lives on a different projective bundle")
        }
    }
}

/// A polynomial `Σ_k a_k ζ^k` on `P(E)` with surface classes `a_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZetaClass {
    space: Arc<ProjectiveBundle>,
    coeffs: Vec<GradedClass>,
}

impl ZetaClass {
    pub fn space(&self) -> &Arc<ProjectiveBundle> {
        &self.space
    }

    pub fn coeffs(&self) -> &[GradedClass] {
        &self.coeffs
    }

    /// Coefficient of `ζ^k` (zero past the end).
    pub fn coeff(&self, k: usize) -> GradedClass {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| self.space.surface.zero())
    }

    fn trimmed(mut self) -> Self {
        while self.coeffs.last().is_some_and(GradedClass::is_zero) {
            self.coeffs.pop();
        }
        self
    }

    fn check_same(&self, other: &ZetaClass) -> Result<()> {
        if self.space == other.space {
            Ok(())
        } else {
            precondition("classes live on different projective bundles")
        }
    }

    pub fn add(&self, other: &ZetaClass) -> Result<ZetaClass> {
        self.check_same(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|k| self.coeff(k).add_unchecked(&other.coeff(k)))
            .collect();
        Ok(ZetaClass {
            space: Arc::clone(&self.space),
            coeffs,
        }
        .trimmed())
    }

    pub fn scale(&self, c: &Rational) -> ZetaClass {
        ZetaClass {
            space: Arc::clone(&self.space),
            coeffs: self.coeffs.iter().map(|a| a.scale(c)).collect(),
        }
        .trimmed()
    }

    /// Polynomial product; coefficients multiply in the truncated surface ring.
    pub fn mul(&self, other: &ZetaClass) -> Result<ZetaClass> {
        self.check_same(other)?;
        let s = &self.space.surface;
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Ok(self.space.zero());
        }
        let mut coeffs = vec![s.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].add_unchecked(&s.mul_unchecked(a, b));
            }
        }
        Ok(ZetaClass {
            space: Arc::clone(&self.space),
            coeffs,
        }
        .trimmed())
    }

    pub fn pow(&self, n: u32) -> Result<ZetaClass> {
        let mut acc = self.space.one();
        for _ in 0..n {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// The part of total degree `k` (ζ-degree plus surface degree).
    pub fn degree_part(&self, k: usize) -> ZetaClass {
        let coeffs = (0..=k)
            .map(|j| self.coeff(j).homogeneous(k - j))
            .collect();
        ZetaClass {
            space: Arc::clone(&self.space),
            coeffs,
        }
        .trimmed()
    }
}

impl fmt::Display for ZetaClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let d1: Vec<String> = c.deg1.iter().map(format_rational).collect();
            terms.push(format!(
                "({}, [{}], {})·ζ^{k}",
                format_rational(&c.deg0),
                d1.join(", "),
                format_rational(&c.deg2int)
            ));
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

pub fn zeta_mul(a: &ZetaClass, b: &ZetaClass) -> Result<ZetaClass> {
    a.mul(b)
}

pub fn pushforward_zeta(a: &ZetaClass) -> GradedClass {
    a.space
        .pushforward(a)
        .expect("a class always lives on its own bundle")
}

pub fn integrate_proj(a: &ZetaClass) -> Rational {
    pushforward_zeta(a).integrate()
}

pub fn segre_twisted_pull(
    space: &Arc<ProjectiveBundle>,
    f: &BundleData,
    n: i64,
) -> Result<ZetaClass> {
    space.segre_twisted_pull(f, n)
}

pub fn segre_omega_proj(space: &Arc<ProjectiveBundle>) -> Result<ZetaClass> {
    space.segre_omega()
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::bundle::direct_sum;
    use crate::chow::surfaces::{p1_x_p1, projective_plane, zero_surface};
    use crate::rational::frac;

    fn o(a: i64) -> BundleData {
        BundleData::line(vec![rat(a)])
    }

    fn plane_bundle(bundle: BundleData) -> Arc<ProjectiveBundle> {
        ProjectiveBundle::new(projective_plane(), bundle).unwrap()
    }

    #[test]
    fn multiply_by_one() {
        let pb = plane_bundle(direct_sum(&projective_plane(), &o(1), &o(2)).unwrap());
        let a = pb.twisted_hyperplane(&o(3)).unwrap();
        assert_eq!(pb.one().mul(&a).unwrap(), a);
    }

    #[test]
    fn zeta_squared() {
        let pb = plane_bundle(o(0));
        let z = pb.zeta_power(1);
        let z2 = zeta_mul(&z, &z).unwrap();
        assert_eq!(z2, pb.zeta_power(2));
        assert_eq!(z2.coeff(2), pb.surface().one());
    }

    #[test]
    fn binomial_square() {
        let s = projective_plane();
        let pb = plane_bundle(BundleData::trivial(2, &s));
        let l = pb.twisted_hyperplane(&o(2)).unwrap();
        let sq = l.mul(&l).unwrap();
        assert_eq!(sq.coeff(2), s.one());
        assert_eq!(sq.coeff(1), GradedClass::new(rat(0), vec![rat(4)], rat(0)));
        assert_eq!(sq.coeff(0), s.point_class(rat(4)));
    }

    #[test]
    fn pushforward_low_powers() {
        let s = projective_plane();
        let e = direct_sum(&s, &o(1), &o(3)).unwrap();
        let pb = plane_bundle(e.clone());
        let r = pb.rank();
        let pt = pb.pullback(s.point_class(rat(1))).unwrap();
        let top = pb.zeta_power(r - 1).mul(&pt).unwrap();
        assert_eq!(pushforward_zeta(&top), s.point_class(rat(1)));
        assert!(pushforward_zeta(&pb.zeta_power(r - 2)).is_zero());
        assert_eq!(
            pushforward_zeta(&pb.zeta_power(r)),
            GradedClass::new(rat(0), e.c1.clone(), rat(0))
        );
    }

    #[test]
    fn integrate_proj_examples() {
        let s = projective_plane();
        let triv = plane_bundle(BundleData::trivial(2, &s));
        let h2 = triv.pullback(s.point_class(rat(1))).unwrap();
        assert_eq!(integrate_proj(&triv.zeta_power(1).mul(&h2).unwrap()), rat(1));
        assert_eq!(integrate_proj(&triv.zeta_power(3)), rat(0));

        // on P(O(1)⊕O(1)): ∫ζ³ = ∫s₂(E) = 4 − 1
        let pb = plane_bundle(direct_sum(&s, &o(1), &o(1)).unwrap());
        assert_eq!(integrate_proj(&pb.zeta_power(3)), rat(3));
    }

    #[test]
    fn segre_twisted_pull_trivial_cases() {
        let s = p1_x_p1();
        let pb = ProjectiveBundle::new(s.clone(), BundleData::trivial(2, &s)).unwrap();
        let one = pb.segre_twisted_pull(&BundleData::trivial(3, &s), 0).unwrap();
        assert_eq!(one.coeff(0), s.one());
        assert!((1..=pb.series_degree()).all(|k| one.coeff(k).is_zero()));

        let geo = pb.segre_twisted_pull(&BundleData::trivial(1, &s), -1).unwrap();
        for k in 0..=pb.series_degree() {
            assert_eq!(geo.coeff(k), s.one(), "ζ^{k}");
        }
    }

    #[test]
    fn segre_twisted_pull_constant_term() {
        let s = projective_plane();
        let e = direct_sum(&s, &o(1), &o(1)).unwrap();
        let pb = plane_bundle(e.clone());
        let seg = pb.segre_twisted_pull(&e, -1).unwrap();
        assert_eq!(seg.coeff(0), segre_total(&s, &e).unwrap());
    }

    #[test]
    fn segre_omega_on_flat_surface() {
        let s = zero_surface();
        let pb = ProjectiveBundle::new(s.clone(), BundleData::trivial(2, &s)).unwrap();
        let so = pb.segre_omega().unwrap();
        // (1 − ζ)^{−2} = Σ (k+1) ζ^k
        for k in 0..=pb.series_degree() {
            assert_eq!(so.coeff(k), s.one().scale(&rat(k as i64 + 1)));
        }
    }

    #[test]
    fn segre_omega_constant_term_is_one() {
        let s = p1_x_p1();
        let e = BundleData::new(2, vec![rat(1), frac(-1, 2)], rat(3)).unwrap();
        let pb = ProjectiveBundle::new(s.clone(), e).unwrap();
        assert_eq!(pb.segre_omega().unwrap().degree_part(0).coeff(0), s.one());
    }

    #[test]
    fn segre_omega_for_line_bundle_integrates_like_surface() {
        // P(L) = S; every integral of a ζ-polynomial is a substitution ζ ↦ c₁(L)
        let s = projective_plane();
        let pb = plane_bundle(o(2));
        let so = pb.segre_omega().unwrap();
        let total = pb.integrate(&so.degree_part(2)).unwrap();
        assert_eq!(total, segre_total(&s, &s.cotangent()).unwrap().deg2int);
    }

    #[test]
    fn mixing_bundles_is_an_error() {
        let a = plane_bundle(o(0));
        let b = plane_bundle(o(1));
        assert!(a.zeta_power(1).mul(&b.zeta_power(1)).is_err());
        assert!(a.pushforward(&b.one()).is_err());
    }
}
