//! Chern and Segre classes of bundles on a surface.
//!
//! Segre classes follow `s = 1/c`, so `s₁ = −c₁` and `s₂ = c₁² − c₂`.

use num_traits::Zero;

use crate::chow::{GradedClass, SurfaceModel};
use crate::error::{precondition, Result};
use crate::rational::{binomial, rat, Rational};

/// Rank, first Chern class and second Chern number of a locally free sheaf.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BundleData {
    pub rank: u32,
    pub c1: Vec<Rational>,
    pub c2int: Rational,
}

impl BundleData {
    pub fn new(rank: u32, c1: Vec<Rational>, c2int: Rational) -> Result<Self> {
        let b = BundleData { rank, c1, c2int };
        b.validate()?;
        Ok(b)
    }

    pub fn line(c1: Vec<Rational>) -> Self {
        BundleData {
            rank: 1,
            c1,
            c2int: Rational::zero(),
        }
    }

    pub fn trivial(rank: u32, surface: &SurfaceModel) -> Self {
        BundleData {
            rank,
            c1: surface.zero_divisor(),
            c2int: Rational::zero(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.rank == 0 {
            return precondition("bundle rank must be at least 1");
        }
        if self.rank == 1 && !self.c2int.is_zero() {
            return precondition("an invertible sheaf has c₂ = 0");
        }
        Ok(())
    }

    pub fn validate_on(&self, surface: &SurfaceModel) -> Result<()> {
        self.validate()?;
        surface.check_divisor(&self.c1)
    }

    pub fn is_line(&self) -> bool {
        self.rank == 1
    }

    pub fn dual(&self) -> BundleData {
        BundleData {
            rank: self.rank,
            c1: self.c1.iter().map(|x| -x).collect(),
            c2int: self.c2int.clone(),
        }
    }
}

/// `c(E) = 1 + c₁ + c₂`.
pub fn chern_total(e: &BundleData) -> GradedClass {
    GradedClass::new(rat(1), e.c1.clone(), e.c2int.clone())
}

/// `s(E) = c(E)⁻¹` truncated at degree 2.
pub fn segre_total(surface: &SurfaceModel, e: &BundleData) -> Result<GradedClass> {
    e.validate_on(surface)?;
    Ok(GradedClass::new(
        rat(1),
        e.c1.iter().map(|x| -x).collect(),
        surface.self_intersection(&e.c1) - &e.c2int,
    ))
}

/// Segre class `s_j(E)` for any `j`, zero outside `0..=2`.
pub fn segre_component(surface: &SurfaceModel, e: &BundleData, j: i64) -> Result<GradedClass> {
    let s = segre_total(surface, e)?;
    Ok(match j {
        0..=2 => s.homogeneous(j as usize),
        _ => surface.zero(),
    })
}

/// `E ⊗ L` for an invertible sheaf `L`.
pub fn twist_bundle(surface: &SurfaceModel, e: &BundleData, l: &BundleData) -> Result<BundleData> {
    if !l.is_line() {
        return precondition(format!("twisting bundle must have rank 1, got {}", l.rank));
    }
    e.validate_on(surface)?;
    l.validate_on(surface)?;
    let r = i64::from(e.rank);
    let c1 = e
        .c1
        .iter()
        .zip(&l.c1)
        .map(|(a, b)| a + rat(r) * b)
        .collect();
    let c2int = &e.c2int
        + rat(r - 1) * surface.pair(&e.c1, &l.c1)
        + binomial(r, 2) * surface.self_intersection(&l.c1);
    Ok(BundleData {
        rank: e.rank,
        c1,
        c2int,
    })
}

/// Whitney sum `E ⊕ F`.
pub fn direct_sum(surface: &SurfaceModel, e: &BundleData, f: &BundleData) -> Result<BundleData> {
    e.validate_on(surface)?;
    f.validate_on(surface)?;
    Ok(BundleData {
        rank: e.rank + f.rank,
        c1: e.c1.iter().zip(&f.c1).map(|(a, b)| a + b).collect(),
        c2int: &e.c2int + &f.c2int + surface.pair(&e.c1, &f.c1),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chow::surfaces::{p1_x_p1, projective_plane};

    fn o(a: i64) -> BundleData {
        BundleData::line(vec![rat(a)])
    }

    #[test]
    fn trivial_bundle_classes() {
        let s = p1_x_p1();
        let e = BundleData::trivial(3, &s);
        assert_eq!(chern_total(&e), s.one());
        assert_eq!(segre_total(&s, &e).unwrap(), s.one());
    }

    #[test]
    fn line_bundle_classes() {
        let s = projective_plane();
        let m = o(4);
        assert_eq!(chern_total(&m), GradedClass::new(rat(1), vec![rat(4)], rat(0)));
        let seg = segre_total(&s, &m).unwrap();
        assert_eq!(seg.deg1, vec![rat(-4)]);
        assert_eq!(seg.deg2int, rat(16));
    }

    #[test]
    fn split_bundle_on_plane() {
        let s = projective_plane();
        // O(a) ⊕ O(b): c = (1+aH)(1+bH)
        for (a, b) in [(1, 1), (2, -3), (0, 5)] {
            let e = direct_sum(&s, &o(a), &o(b)).unwrap();
            assert_eq!(chern_total(&e), GradedClass::new(rat(1), vec![rat(a + b)], rat(a * b)));
        }
        let e = direct_sum(&s, &o(1), &o(1)).unwrap();
        let seg = segre_total(&s, &e).unwrap();
        assert_eq!(seg.deg1, vec![rat(-2)]);
        assert_eq!(seg.deg2int, rat(3));
    }

    #[test]
    fn twist_examples() {
        let s = projective_plane();
        let e = direct_sum(&s, &o(2), &o(-1)).unwrap();
        assert_eq!(twist_bundle(&s, &e, &o(0)).unwrap(), e);
        let t = twist_bundle(&s, &e, &o(3)).unwrap();
        // (2+3)(-1+3)
        assert_eq!(t.c2int, rat(10));
        assert_eq!(t.c1, vec![rat(7)]);
        let t = twist_bundle(&s, &o(2), &o(5)).unwrap();
        assert_eq!(t, o(7));
    }

    #[test]
    fn twist_needs_line_bundle() {
        let s = projective_plane();
        let e = BundleData::trivial(2, &s);
        assert!(twist_bundle(&s, &o(1), &e).is_err());
    }

    #[test]
    fn rank_one_with_c2_rejected() {
        assert!(BundleData::new(1, vec![rat(0)], rat(1)).is_err());
        assert!(BundleData::new(0, vec![rat(0)], rat(0)).is_err());
    }

    #[test]
    fn segre_components_vanish_outside_range() {
        let s = projective_plane();
        let e = direct_sum(&s, &o(1), &o(2)).unwrap();
        assert!(segre_component(&s, &e, 3).unwrap().is_zero());
        assert!(segre_component(&s, &e, -1).unwrap().is_zero());
        assert_eq!(segre_component(&s, &e, 0).unwrap(), s.one());
    }
}
