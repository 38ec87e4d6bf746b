//! Segre integrals over `X^[2]`, `Quot¹(E)` and `Quot²(E)`.
//!
//! The `X^[2]` number is reached only through the λ-vector
//! `λ_k = ∫_X c₁(L)^{d−k} s_k(Ω¹_X)`:
//!
//! ```text
//! 2∫_{X^[2]} s_{2d}(L^[2]) = λ₀² − Σ_{k=0}^{d} (−1)^k C(2d+1, d−k) λ_k
//! ```
//!
//! For `Quot²(E)` the same formula is applied on `X = P(E)` with the line
//! bundle `p^*L ⊗ O(1)`, and compared against the closed form in terms of
//! `E ⊗ L` and `Ω¹_S`.

use std::sync::Arc;

use num_traits::{One, Zero};

use crate::bundle::{segre_total, twist_bundle, BundleData};
use crate::chow::{GradedClass, SurfaceModel};
use crate::error::{precondition, Result};
use crate::projbundle::ProjectiveBundle;
use crate::rational::{binomial, binomial_rational, frac, rat, sign, Rational};

/// `λ₀, …, λ_d` for a variety of dimension `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaVector {
    d: usize,
    values: Vec<Rational>,
}

impl LambdaVector {
    pub fn new(d: usize, values: Vec<Rational>) -> Result<Self> {
        if d == 0 {
            return precondition("λ-vector dimension must be positive");
        }
        if values.len() != d + 1 {
            return precondition(format!(
                "λ-vector of dimension {d} needs {} entries, got {}",
                d + 1,
                values.len()
            ));
        }
        Ok(LambdaVector { d, values })
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn get(&self, k: usize) -> &Rational {
        &self.values[k]
    }
}

fn require_line(l: &BundleData, what: &str) -> Result<()> {
    if l.is_line() {
        Ok(())
    } else {
        precondition(format!("{what} must have rank 1, got rank {}", l.rank))
    }
}

/// `λ_k = ∫_S c₁(M)^{2−k} s_k(Ω¹_S)`.
pub fn lambda_surface_direct(s: &SurfaceModel, m: &BundleData) -> Result<LambdaVector> {
    require_line(m, "M")?;
    m.validate_on(s)?;
    let omega = segre_total(s, &s.cotangent())?;
    let c1m = s.divisor_class(m.c1.clone())?;
    let values = (0..=2u32)
        .map(|k| {
            let power = s.pow(&c1m, 2 - k)?;
            let sk = omega.homogeneous(k as usize);
            Ok(s.mul(&power, &sk)?.integrate())
        })
        .collect::<Result<Vec<_>>>()?;
    LambdaVector::new(2, values)
}

/// λ-vector of `(P(E), p^*L ⊗ O(1))`, computed by expanding
/// `(ζ + c₁L)^{r+1−k} · s_k(Ω¹_{P(E)})` and pushing forward to `S`.
pub fn lambda_proj_direct(s: &SurfaceModel, e: &BundleData, l: &BundleData) -> Result<LambdaVector> {
    require_line(l, "L")?;
    let pb = ProjectiveBundle::new(s.clone(), e.clone())?;
    lambda_on(&pb, l)
}

fn lambda_on(pb: &Arc<ProjectiveBundle>, l: &BundleData) -> Result<LambdaVector> {
    let d = pb.dim();
    let omega = pb.segre_omega()?;
    let h = pb.twisted_hyperplane(l)?;
    let values = (0..=d)
        .map(|k| {
            let integrand = h.pow((d - k) as u32)?.mul(&omega.degree_part(k))?;
            pb.integrate(&integrand)
        })
        .collect::<Result<Vec<_>>>()?;
    LambdaVector::new(d, values)
}

/// Intersection numbers of `E ⊗ L` and `Ω¹_S` that the closed forms use.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistedNumbers {
    pub rank: i64,
    /// `∫ s₂(E⊗L)`
    pub s2: Rational,
    /// `∫ s₁(E⊗L)²`
    pub s1_sq: Rational,
    /// `∫ s₁(E⊗L)·s₁(Ω¹_S)`
    pub s1_omega: Rational,
    /// `∫ s₂(Ω¹_S)`
    pub s2_omega: Rational,
}

impl TwistedNumbers {
    pub fn compute(s: &SurfaceModel, e: &BundleData, l: &BundleData) -> Result<Self> {
        require_line(l, "L")?;
        let el = twist_bundle(s, e, l)?;
        let seg = segre_total(s, &el)?;
        let omega = segre_total(s, &s.cotangent())?;
        Ok(TwistedNumbers {
            rank: i64::from(e.rank),
            s2: seg.deg2int.clone(),
            s1_sq: s.pair(&seg.deg1, &seg.deg1),
            s1_omega: s.pair(&seg.deg1, &omega.deg1),
            s2_omega: omega.deg2int,
        })
    }
}

/// Closed form of `λ_k` on `P(E)` in terms of `E ⊗ L` and `Ω¹_S`.
pub fn lambda_closed_form(s: &SurfaceModel, e: &BundleData, l: &BundleData, k: usize) -> Result<Rational> {
    let t = TwistedNumbers::compute(s, e, l)?;
    lambda_closed_form_from(&t, k)
}

pub fn lambda_closed_form_from(t: &TwistedNumbers, k: usize) -> Result<Rational> {
    let r = t.rank;
    if k as i64 > r + 1 {
        return precondition(format!("k = {k} outside 0..={}", r + 1));
    }
    let k = k as i64;
    let c_s2 = (frac(k * (k - 1), r * (r + 1)) + Rational::one()) * binomial(r + k - 1, k);
    let c_s1_sq = binomial(r + k - 1, k - 1);
    let c_mixed = (frac(k - 1, r) - Rational::one()) * binomial(r + k - 2, k - 1);
    let c_omega = binomial(r + k - 3, k - 2);
    Ok(c_s2 * &t.s2 - c_s1_sq * &t.s1_sq + c_mixed * &t.s1_omega + c_omega * &t.s2_omega)
}

/// `∫_{X^[2]} s_{2d}(L^[2])` from the λ-vector of `(X, L)`.
pub fn segre_hilb2(lambda: &LambdaVector) -> Rational {
    let d = lambda.dim() as i64;
    let lambda0 = lambda.get(0);
    let mut twice = lambda0 * lambda0;
    for (k, lk) in lambda.values().iter().enumerate() {
        let k = k as i64;
        twice -= sign(k) * binomial(2 * d + 1, d - k) * lk;
    }
    twice / rat(2)
}

/// Coefficients `a_k` in `2∫ = λ₀² + Σ a_k λ_k`, read off by evaluating
/// [`segre_hilb2`] on unit λ-vectors.
pub fn segre_hilb2_linear_coefficients(d: usize) -> Result<Vec<Rational>> {
    (0..=d)
        .map(|k| {
            let mut values = vec![Rational::zero(); d + 1];
            values[k] = Rational::one();
            let unit = LambdaVector::new(d, values)?;
            let mut twice = segre_hilb2(&unit) * rat(2);
            if k == 0 {
                twice -= Rational::one();
            }
            Ok(twice)
        })
        .collect()
}

/// `∫_{Quot²(E)} s_{2r+2}(L^[2])` by the closed formula in `E ⊗ L`.
pub fn segre_quot2_theorem(s: &SurfaceModel, e: &BundleData, l: &BundleData) -> Result<Rational> {
    let t = TwistedNumbers::compute(s, e, l)?;
    Ok(segre_quot2_from(&t))
}

pub fn segre_quot2_from(t: &TwistedNumbers) -> Rational {
    let r = t.rank;
    let c2 = binomial(r + 2, 2);
    let bracket = rat(r * r + 3 * r + 3) * &t.s2
        + &c2 * &t.s1_sq
        + frac(1, 3) * &c2 * rat(2 * r + 3) * &t.s1_omega
        + binomial(r + 3, 4) * &t.s2_omega;
    (&t.s2 * &t.s2 - bracket) / rat(2)
}

/// Same number routed through `P(E)^[2]`: the λ-vector of
/// `(P(E), p^*L ⊗ O(1))` fed to [`segre_hilb2`].
pub fn segre_quot2_pipeline(s: &SurfaceModel, e: &BundleData, l: &BundleData) -> Result<Rational> {
    Ok(segre_hilb2(&lambda_proj_direct(s, e, l)?))
}

/// `∫_{Quot¹(E)} s_{r+1}(L^[1]) = (−1)^{r+1} ∫_S s₂(E⊗L)`.
pub fn segre_quot1(s: &SurfaceModel, e: &BundleData, l: &BundleData) -> Result<Rational> {
    let t = TwistedNumbers::compute(s, e, l)?;
    Ok(sign(t.rank + 1) * t.s2)
}

/// `Quot¹(E) = P(E)` with `L^[1] = p^*L ⊗ O(1)`: integrate
/// `(−1)^{r+1}(ζ + c₁L)^{r+1}` over `P(E)`.
pub fn segre_quot1_expansion(s: &SurfaceModel, e: &BundleData, l: &BundleData) -> Result<Rational> {
    require_line(l, "L")?;
    let pb = ProjectiveBundle::new(s.clone(), e.clone())?;
    let r = pb.rank() as i64;
    let integrand = pb.twisted_hyperplane(l)?.pow((r + 1) as u32)?.scale(&sign(r + 1));
    pb.integrate(&integrand)
}

/// Third route for `Quot¹`: degree `r+1` part of the inverted Chern series
/// of `p^*L ⊗ O(1)`.
pub fn segre_quot1_series(s: &SurfaceModel, e: &BundleData, l: &BundleData) -> Result<Rational> {
    require_line(l, "L")?;
    let pb = ProjectiveBundle::new(s.clone(), e.clone())?;
    let seg = pb.segre_twisted_pull(l, 1)?;
    pb.integrate(&seg.degree_part(pb.dim()))
}

/// `∫_{P(O^{⊕r})} ζ^{r−1}(ζ + c₁L₁)(ζ + c₁L₂)`.
pub fn insertion_integral_l1(s: &SurfaceModel, r: u32, l1: &BundleData, l2: &BundleData) -> Result<Rational> {
    require_line(l1, "L1")?;
    require_line(l2, "L2")?;
    if r == 0 {
        return precondition("rank must be positive");
    }
    let pb = ProjectiveBundle::new(s.clone(), BundleData::trivial(r, s))?;
    let integrand = pb
        .zeta_power(r as usize - 1)
        .mul(&pb.twisted_hyperplane(l1)?)?
        .mul(&pb.twisted_hyperplane(l2)?)?;
    pb.integrate(&integrand)
}

/// Coefficient of `q¹` in `(1 − q)^{∫c₁(L₁)c₁(L₂)}`.
pub fn insertion_series_q1(s: &SurfaceModel, l1: &BundleData, l2: &BundleData) -> Result<Rational> {
    require_line(l1, "L1")?;
    require_line(l2, "L2")?;
    l1.validate_on(s)?;
    l2.validate_on(s)?;
    let exponent = s.pair(&l1.c1, &l2.c1);
    Ok(binomial_rational(&exponent, 1) * sign(1))
}

/// `∫_S c₁(L₁)c₁(L₂)`.
pub fn line_pairing(s: &SurfaceModel, l1: &BundleData, l2: &BundleData) -> Result<Rational> {
    let a = s.divisor_class(l1.c1.clone())?;
    let b = s.divisor_class(l2.c1.clone())?;
    Ok(s.mul(&a, &b)?.integrate())
}

/// `∫_{P(E)} ζ^k · p^*α`.
pub fn integrate_zeta_power(s: &SurfaceModel, e: &BundleData, k: usize, alpha: &GradedClass) -> Result<Rational> {
    let pb = ProjectiveBundle::new(s.clone(), e.clone())?;
    pb.integrate(&pb.zeta_power(k).mul(&pb.pullback(alpha.clone())?)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bundle::direct_sum;
    use crate::chow::surfaces::{abstract_surface, p1_x_p1, projective_plane, zero_surface};

    fn o(a: i64) -> BundleData {
        BundleData::line(vec![rat(a)])
    }

    #[test]
    fn lambda_surface_examples() {
        let z = zero_surface();
        let lz = lambda_surface_direct(&z, &o(3)).unwrap();
        assert!(lz.values().iter().all(Zero::is_zero));

        let p2 = projective_plane();
        for c in [-2, 0, 1, 5] {
            let l = lambda_surface_direct(&p2, &o(c)).unwrap();
            assert_eq!(l.values(), &[rat(c * c), rat(3 * c), rat(6)]);
        }
    }

    #[test]
    fn lambda_surface_rejects_higher_rank() {
        let p2 = projective_plane();
        assert!(lambda_surface_direct(&p2, &BundleData::trivial(2, &p2)).is_err());
    }

    #[test]
    fn hilb2_coefficients() {
        assert_eq!(
            segre_hilb2_linear_coefficients(2).unwrap(),
            vec![rat(-10), rat(5), rat(-1)]
        );
        assert_eq!(
            segre_hilb2_linear_coefficients(3).unwrap(),
            vec![rat(-35), rat(21), rat(-7), rat(1)]
        );
        let zero = LambdaVector::new(4, vec![Rational::zero(); 5]).unwrap();
        assert_eq!(segre_hilb2(&zero), rat(0));
    }

    #[test]
    fn lambda_vector_length_checked() {
        assert!(LambdaVector::new(2, vec![rat(1)]).is_err());
        assert!(LambdaVector::new(0, vec![rat(1)]).is_err());
    }

    #[test]
    fn plane_hilbert_scheme_value() {
        // λ = (1, 3, 6) for O(1) on P²: (1 − 10 + 15 − 6)/2 = 0
        let p2 = projective_plane();
        let lam = lambda_surface_direct(&p2, &o(1)).unwrap();
        assert_eq!(segre_hilb2(&lam), rat(0));
    }

    #[test]
    fn closed_form_first_value() {
        let s = p1_x_p1();
        let e = BundleData::new(3, vec![rat(1), rat(2)], rat(-1)).unwrap();
        let l = BundleData::line(vec![rat(-1), rat(1)]);
        let t = TwistedNumbers::compute(&s, &e, &l).unwrap();
        assert_eq!(lambda_closed_form(&s, &e, &l, 0).unwrap(), t.s2);
        assert!(lambda_closed_form(&s, &e, &l, 5).is_err());
    }

    #[test]
    fn zero_surface_gives_zero() {
        let z = zero_surface();
        let e = BundleData::new(2, vec![rat(1)], rat(0)).unwrap();
        let l = o(1);
        for k in 0..=3 {
            assert_eq!(lambda_closed_form(&z, &e, &l, k).unwrap(), rat(0));
        }
        assert_eq!(segre_quot2_theorem(&z, &e, &l).unwrap(), rat(0));
        assert_eq!(segre_quot1(&z, &e, &l).unwrap(), rat(0));
    }

    #[test]
    fn closed_form_matches_pipeline_on_plane() {
        let s = projective_plane();
        let e = direct_sum(&s, &o(1), &o(-2)).unwrap();
        let l = o(3);
        let direct = lambda_proj_direct(&s, &e, &l).unwrap();
        for k in 0..=3 {
            assert_eq!(&lambda_closed_form(&s, &e, &l, k).unwrap(), direct.get(k), "k={k}");
        }
        assert_eq!(
            segre_quot2_theorem(&s, &e, &l).unwrap(),
            segre_quot2_pipeline(&s, &e, &l).unwrap()
        );
    }

    #[test]
    fn rank_one_reduces_to_surface() {
        let s = abstract_surface("t", rat(3), frac(1, 2), rat(-1), rat(7));
        let e = BundleData::line(vec![rat(1), rat(2)]);
        let l = BundleData::line(vec![frac(-1, 3), rat(1)]);
        let el = twist_bundle(&s, &e, &l).unwrap();
        assert_eq!(
            lambda_proj_direct(&s, &e, &l).unwrap(),
            lambda_surface_direct(&s, &el).unwrap()
        );
        assert_eq!(
            segre_quot2_theorem(&s, &e, &l).unwrap(),
            segre_hilb2(&lambda_surface_direct(&s, &el).unwrap())
        );
    }

    #[test]
    fn quot1_three_routes() {
        let s = p1_x_p1();
        let e = BundleData::new(2, vec![rat(2), rat(-1)], rat(5)).unwrap();
        let l = BundleData::line(vec![rat(1), rat(1)]);
        let a = segre_quot1(&s, &e, &l).unwrap();
        assert_eq!(a, segre_quot1_expansion(&s, &e, &l).unwrap());
        assert_eq!(a, segre_quot1_series(&s, &e, &l).unwrap());
    }

    #[test]
    fn quot1_for_hilbert_scheme_of_one_point() {
        let p2 = projective_plane();
        let l = o(4);
        assert_eq!(segre_quot1(&p2, &o(0), &l).unwrap(), rat(16));
    }

    #[test]
    fn insertion_examples() {
        let s = p1_x_p1();
        let l1 = BundleData::line(vec![rat(1), rat(0)]);
        assert_eq!(insertion_integral_l1(&s, 3, &l1, &l1).unwrap(), rat(0));
        let l2 = BundleData::line(vec![rat(2), rat(3)]);
        for r in 1..=4 {
            assert_eq!(insertion_integral_l1(&s, r, &l1, &l2).unwrap(), rat(3));
        }
        assert_eq!(insertion_series_q1(&s, &l1, &l2).unwrap(), rat(-3));
    }
}
