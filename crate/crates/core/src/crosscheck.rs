//! Cross-validation sweep over a catalog.
//!
//! Each check compares two independent routes to the same number (or a
//! computed value against a reference computation) and reports one line.
//! The reference computations here (partition counting, the `l = 2`
//! eigenline test, monomial counting) do not share code with the routes they
//! check.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;

use crate::adhm::sampling::{
    generic_sl2_point, random_invertible, regular_semisimple_cyclic, rng_from_seed,
    sl2_parameters, stable_commuting, structured_l2, SeededRng,
};
use crate::adhm::{
    gorenstein_symmetry_test, is_commuting, sl2_hilbert_coefficient, sl2_jacobian_rank,
    sl2_on_variety, sl2_param_point, stability_check, stabilizer_dim, tangent_dim_quotient,
    AdhmDatum, Sl2Point,
};
use crate::bundle::{chern_total, segre_total, twist_bundle, BundleData};
use crate::catalog::Catalog;
use crate::chow::{GradedClass, SurfaceModel};
use crate::error::Result;
use crate::linalg::Matrix;
use crate::projbundle::ProjectiveBundle;
use crate::rational::{binomial, format_rational, frac, is_nonnegative_integer, rat, Rational};
use crate::segre::{
    insertion_integral_l1, insertion_series_q1, lambda_closed_form, lambda_proj_direct,
    lambda_surface_direct, line_pairing, segre_hilb2, segre_hilb2_linear_coefficients,
    segre_quot1, segre_quot1_expansion, segre_quot2_pipeline, segre_quot2_theorem,
};
use crate::series::{eta_power_expand, quot_euler_series, PowerSeries};

pub const DEFAULT_SEED: u64 = 20_240_601;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub id: String,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} [{}] {}: {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.detail
        )
    }
}

/// Collects mismatches; a check passes iff none were recorded.
#[derive(Default)]
struct Tally {
    checked: usize,
    failures: Vec<String>,
}

impl Tally {
    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn expect_eq(&mut self, a: &Rational, b: &Rational, what: impl FnOnce() -> String) {
        self.expect(a == b, || {
            format!("{}: {} ≠ {}", what(), format_rational(a), format_rational(b))
        });
    }

    fn error(&mut self, context: &str, e: crate::Error) {
        self.checked += 1;
        self.failures.push(format!("{context}: {e}"));
    }

    fn report(self, id: &str, title: &'static str, summary: String) -> CheckReport {
        let passed = self.failures.is_empty();
        let detail = if passed {
            format!("{summary} ({} comparisons)", self.checked)
        } else {
            let shown: Vec<&String> = self.failures.iter().take(3).collect();
            format!(
                "{} of {} comparisons failed; first: {}",
                self.failures.len(),
                self.checked,
                shown.iter().map(|s| s.as_str()).collect::<Vec<_>>().join(" | ")
            )
        };
        CheckReport {
            id: id.to_string(),
            title,
            passed,
            detail,
        }
    }
}

fn small_rational(rng: &mut SeededRng) -> Rational {
    frac(rng.gen_range(-10..=10), rng.gen_range(1..=5))
}

fn random_divisor(rng: &mut SeededRng, s: &SurfaceModel) -> Vec<Rational> {
    (0..s.rank()).map(|_| rat(rng.gen_range(-5..=5))).collect()
}

pub fn random_line(rng: &mut SeededRng, s: &SurfaceModel) -> BundleData {
    BundleData::line(random_divisor(rng, s))
}

pub fn random_bundle(rng: &mut SeededRng, s: &SurfaceModel, rank: u32) -> BundleData {
    if rank == 1 {
        return random_line(rng, s);
    }
    BundleData {
        rank,
        c1: random_divisor(rng, s),
        c2int: rat(rng.gen_range(-10..=10)),
    }
}

pub fn random_class(rng: &mut SeededRng, s: &SurfaceModel) -> GradedClass {
    GradedClass::new(
        small_rational(rng),
        (0..s.rank()).map(|_| small_rational(rng)).collect(),
        small_rational(rng),
    )
}

/// One `(S, E, L)` evaluation point of the sweep.
#[derive(Clone, Debug)]
pub struct Triple {
    pub label: String,
    pub surface: SurfaceModel,
    pub e: BundleData,
    pub l: BundleData,
}

/// Catalog bundles on each surface, plus two seeded random bundles of every
/// rank `1..=max_rank`, paired with every catalog line bundle and one seeded
/// random line bundle.
pub fn sweep_triples(catalog: &Catalog, seed: u64, max_rank: u32) -> Vec<Triple> {
    let mut rng = rng_from_seed(seed);
    let mut out = Vec::new();
    for s in &catalog.surfaces {
        let mut es: Vec<(String, BundleData)> = catalog
            .bundles_on(&s.name)
            .filter(|b| b.bundle.rank <= max_rank)
            .map(|b| (b.name.clone(), b.bundle.clone()))
            .collect();
        for rank in 1..=max_rank {
            for i in 0..2 {
                es.push((format!("{}/rand-r{rank}-{i}", s.name), random_bundle(&mut rng, s, rank)));
            }
        }
        let mut ls: Vec<(String, BundleData)> = catalog
            .line_bundles_on(&s.name)
            .map(|b| (b.name.clone(), b.bundle.clone()))
            .collect();
        ls.push((format!("{}/rand-line", s.name), random_line(&mut rng, s)));
        for (en, e) in &es {
            for (ln, l) in &ls {
                out.push(Triple {
                    label: format!("E={en} L={ln}"),
                    surface: s.clone(),
                    e: e.clone(),
                    l: l.clone(),
                });
            }
        }
    }
    out
}

/// Criterion 1: the `d = 2` linear coefficients are `(−10, +5, −1)` and the
/// quadratic term is `λ₀²`.
pub fn check_severi_pattern() -> CheckReport {
    let mut t = Tally::default();
    match segre_hilb2_linear_coefficients(2) {
        Ok(c) => {
            let expected = [rat(-10), rat(5), rat(-1)];
            for (k, (a, b)) in c.iter().zip(&expected).enumerate() {
                t.expect_eq(a, b, || format!("coefficient of λ_{k}"));
            }
        }
        Err(e) => t.error("coefficients", e),
    }
    for l0 in [rat(3), frac(-7, 2)] {
        let lam = crate::segre::LambdaVector::new(2, vec![l0.clone(), rat(0), rat(0)]).unwrap();
        let twice = segre_hilb2(&lam) * rat(2);
        t.expect_eq(&(twice + rat(10) * &l0), &(&l0 * &l0), || "quadratic term".into());
    }
    t.report("C1", "Severi pattern λ₀²−10λ₀+5λ₁−λ₂", "coefficients (−10, 5, −1)".into())
}

/// Criterion 2: rank-one `E` reduces to the surface Severi formula for `E⊗L`.
pub fn check_rank_one_reduction(catalog: &Catalog, seed: u64) -> CheckReport {
    let mut t = Tally::default();
    let mut rng = rng_from_seed(seed ^ 0x2);
    for s in &catalog.surfaces {
        let mut pairs: Vec<(BundleData, BundleData)> = Vec::new();
        let lines: Vec<BundleData> = catalog.line_bundles_on(&s.name).map(|b| b.bundle.clone()).collect();
        for a in &lines {
            for b in &lines {
                pairs.push((a.clone(), b.clone()));
            }
        }
        while pairs.len() < 12 {
            pairs.push((random_line(&mut rng, s), random_line(&mut rng, s)));
        }
        for (e, l) in &pairs {
            let lhs = segre_quot2_theorem(s, e, l);
            let rhs = twist_bundle(s, e, l)
                .and_then(|el| lambda_surface_direct(s, &el))
                .map(|lam| segre_hilb2(&lam));
            match (lhs, rhs) {
                (Ok(a), Ok(b)) => t.expect_eq(&a, &b, || format!("{} E={:?} L={:?}", s.name, e.c1, l.c1)),
                (Err(e), _) | (_, Err(e)) => t.error(&s.name, e),
            }
        }
    }
    t.report("C2", "rank-one reduction to X^[2]", format!("{} surfaces", catalog.surfaces.len()))
}

/// Criterion 3: closed-form `λ_k` against the `P(E)` pushforward.
pub fn check_lambda_dual_path(triples: &[Triple]) -> CheckReport {
    let mut t = Tally::default();
    for tr in triples {
        let direct = match lambda_proj_direct(&tr.surface, &tr.e, &tr.l) {
            Ok(d) => d,
            Err(e) => {
                t.error(&tr.label, e);
                continue;
            }
        };
        for (k, value) in direct.values().iter().enumerate() {
            match lambda_closed_form(&tr.surface, &tr.e, &tr.l, k) {
                Ok(c) => t.expect_eq(&c, value, || format!("{} k={k}", tr.label)),
                Err(e) => t.error(&tr.label, e),
            }
        }
        let s2 = twist_bundle(&tr.surface, &tr.e, &tr.l)
            .and_then(|el| segre_total(&tr.surface, &el))
            .map(|s| s.deg2int);
        match s2 {
            Ok(s2) => t.expect_eq(direct.get(0), &s2, || format!("{} λ₀", tr.label)),
            Err(e) => t.error(&tr.label, e),
        }
    }
    t.report("C3", "λ_k closed form = P(E) pushforward", format!("{} triples", triples.len()))
}

/// Criterion 4: theorem against the `P(E)^[2]` pipeline.
pub fn check_theorem_vs_pipeline(triples: &[Triple]) -> CheckReport {
    let mut t = Tally::default();
    for tr in triples {
        match (
            segre_quot2_theorem(&tr.surface, &tr.e, &tr.l),
            segre_quot2_pipeline(&tr.surface, &tr.e, &tr.l),
        ) {
            (Ok(a), Ok(b)) => t.expect_eq(&a, &b, || tr.label.clone()),
            (Err(e), _) | (_, Err(e)) => t.error(&tr.label, e),
        }
    }
    t.report("C4", "Quot² theorem = pipeline through P(E)^[2]", format!("{} triples", triples.len()))
}

/// Criterion 5: `Quot¹` closed form against the ζ-expansion.
pub fn check_quot1_dual_path(triples: &[Triple]) -> CheckReport {
    let mut t = Tally::default();
    for tr in triples {
        match (
            segre_quot1(&tr.surface, &tr.e, &tr.l),
            segre_quot1_expansion(&tr.surface, &tr.e, &tr.l),
        ) {
            (Ok(a), Ok(b)) => t.expect_eq(&a, &b, || tr.label.clone()),
            (Err(e), _) | (_, Err(e)) => t.error(&tr.label, e),
        }
    }
    t.report("C5", "Quot¹ closed form = ζ-expansion", format!("{} triples", triples.len()))
}

/// Criterion 6: moving a line bundle between `E` and `L` changes nothing.
pub fn check_twist_invariance(triples: &[Triple], seed: u64) -> CheckReport {
    let mut t = Tally::default();
    let mut rng = rng_from_seed(seed ^ 0x6);
    for tr in triples {
        let s = &tr.surface;
        for _ in 0..5 {
            let m = random_line(&mut rng, s);
            let moved = (|| -> Result<_> {
                let em = twist_bundle(s, &tr.e, &m)?;
                let lm = twist_bundle(s, &tr.l, &m)?;
                Ok((
                    segre_quot2_theorem(s, &em, &tr.l)?,
                    segre_quot2_theorem(s, &tr.e, &lm)?,
                    segre_quot1(s, &em, &tr.l)?,
                    segre_quot1(s, &tr.e, &lm)?,
                ))
            })();
            match moved {
                Ok((a, b, c, d)) => {
                    t.expect_eq(&a, &b, || format!("Quot² {} M={:?}", tr.label, m.c1));
                    t.expect_eq(&c, &d, || format!("Quot¹ {} M={:?}", tr.label, m.c1));
                }
                Err(e) => t.error(&tr.label, e),
            }
        }
    }
    t.report("C6", "twist invariance E⊗M,L ↔ E,L⊗M", format!("{} triples × 5 M", triples.len()))
}

/// Criterion 7: Grothendieck vanishing and the projection formula on
/// `P(O^{⊕r})`.
pub fn check_grothendieck_vanishing(catalog: &Catalog, seed: u64) -> CheckReport {
    let mut t = Tally::default();
    let mut rng = rng_from_seed(seed ^ 0x7);
    for s in &catalog.surfaces {
        for r in 1..=6u32 {
            let pb = match ProjectiveBundle::new(s.clone(), BundleData::trivial(r, s)) {
                Ok(pb) => pb,
                Err(e) => {
                    t.error(&s.name, e);
                    continue;
                }
            };
            for _ in 0..3 {
                let alpha = random_class(&mut rng, s);
                let pulled = pb.pullback(alpha.clone()).unwrap();
                let r = r as usize;
                for j in 1..=3 {
                    let v = pb.integrate(&pb.zeta_power(r + j).mul(&pulled).unwrap()).unwrap();
                    t.expect_eq(&v, &rat(0), || format!("{} r={r} j={j}", s.name));
                }
                let v = pb.integrate(&pb.zeta_power(r - 1).mul(&pulled).unwrap()).unwrap();
                t.expect_eq(&v, &alpha.integrate(), || format!("{} r={r} projection formula", s.name));
            }
        }
    }
    t.report("C7", "Grothendieck vanishing on P(O^r), r ≤ 6", "j ∈ {1,2,3} and projection formula".into())
}

/// Criterion 8: insertion integral is `∫c₁(L₁)c₁(L₂)` for all `r ≤ 6`; the
/// `q¹` coefficient of `(1−q)^{∫c₁(L₁)c₁(L₂)}` is reported next to it.
pub fn check_insertion_integral(catalog: &Catalog) -> CheckReport {
    let mut t = Tally::default();
    let mut opposite = 0usize;
    let mut agree = 0usize;
    for s in &catalog.surfaces {
        let lines: Vec<&BundleData> = catalog.line_bundles_on(&s.name).map(|b| &b.bundle).collect();
        for l1 in &lines {
            for l2 in &lines {
                let expected = line_pairing(s, l1, l2).unwrap();
                for r in 1..=6 {
                    match insertion_integral_l1(s, r, l1, l2) {
                        Ok(v) => t.expect_eq(&v, &expected, || format!("{} r={r}", s.name)),
                        Err(e) => t.error(&s.name, e),
                    }
                }
                let q1 = insertion_series_q1(s, l1, l2).unwrap();
                if expected.is_zero() {
                    continue;
                }
                if q1 == -expected.clone() {
                    opposite += 1;
                } else if q1 == expected {
                    agree += 1;
                }
            }
        }
    }
    let relation = if agree == 0 && opposite > 0 {
        "series q¹ coefficient = −(integral) on every nonzero pair"
    } else if opposite == 0 && agree > 0 {
        "series q¹ coefficient = +(integral) on every nonzero pair"
    } else {
        "series q¹ coefficient sign relation is mixed"
    };
    t.report(
        "C8",
        "insertion integral at l = 1",
        format!("integral = ∫c₁(L₁)c₁(L₂) for r = 1..6; {relation} ({} pairs)", opposite + agree),
    )
}

/// Number of partitions of `0..=n`, by counting with parts `1..=n`.
fn partition_counts(n: usize) -> Vec<BigInt> {
    let mut p = vec![BigInt::zero(); n + 1];
    p[0] = BigInt::one();
    for part in 1..=n {
        for total in part..=n {
            let prev = p[total - part].clone();
            p[total] += prev;
        }
    }
    p
}

/// `a`-fold convolution power of the partition generating function.
fn partition_convolution_power(a: usize, n: usize) -> Vec<BigInt> {
    let p = partition_counts(n);
    let mut acc = vec![BigInt::zero(); n + 1];
    acc[0] = BigInt::one();
    for _ in 0..a {
        let mut next = vec![BigInt::zero(); n + 1];
        for i in 0..=n {
            for j in 0..=n - i {
                next[i + j] += &acc[i] * &p[j];
            }
        }
        acc = next;
    }
    acc
}

/// Criterion 9: Euler characteristic series.
pub fn check_euler_series(seed: u64) -> CheckReport {
    let mut t = Tally::default();
    let k3 = quot_euler_series(&rat(24), 1, 10).unwrap();
    let oracle = partition_convolution_power(24, 10);
    for (n, want) in oracle.iter().enumerate() {
        t.expect_eq(&k3.coeff(n), &Rational::from_integer(want.clone()), || format!("K3 q^{n}"));
    }
    let mut rng = rng_from_seed(seed ^ 0x9);
    for _ in 0..20 {
        let chi = small_rational(&mut rng);
        let r = rng.gen_range(1..=6u32);
        let s = quot_euler_series(&chi, r, 4).unwrap();
        t.expect_eq(&s.coeff(1), &(&chi * rat(i64::from(r))), || format!("χ={chi} r={r} q¹"));
    }
    for _ in 0..20 {
        let a = small_rational(&mut rng);
        let b = small_rational(&mut rng);
        let lhs = eta_power_expand(&(&a + &b), 8);
        let rhs = eta_power_expand(&a, 8).mul(&eta_power_expand(&b, 8));
        t.expect(lhs == rhs, || format!("multiplicativity a={a} b={b}"));
    }
    t.report("C9", "Euler characteristic series", format!("K3 q⁰..q¹⁰ = {}", PowerSeries::from_coeffs(k3.coeffs()[..4].to_vec()).unwrap()))
}

/// Criterion 10: embedding dimensions at ADHM points.
pub fn check_adhm_dimensions(seed: u64) -> CheckReport {
    let mut t = Tally::default();
    for (l, r) in [(2usize, 2usize), (2, 3), (3, 3)] {
        let mut v = Vec::new();
        for i in 0..r {
            v.push((0..l).map(|j| rat(i64::from(i == j))).collect());
        }
        let d = AdhmDatum::new(Matrix::zeros(l, l), Matrix::zeros(l, l), v).unwrap();
        match tangent_dim_quotient(&d) {
            Ok(dim) => t.expect(dim == l * l + l * r, || format!("origin l={l} r={r}: {dim}")),
            Err(e) => t.error("origin", e),
        }
    }
    let mut rng = rng_from_seed(seed ^ 0xA);
    for l in 1..=4 {
        for r in 1..=4 {
            for _ in 0..100 {
                let d = regular_semisimple_cyclic(&mut rng, l, r);
                match tangent_dim_quotient(&d) {
                    Ok(dim) => t.expect(dim == l * (r + 1), || format!("regular semisimple l={l} r={r}: {dim}")),
                    Err(e) => t.error("regular semisimple", e),
                }
            }
        }
    }
    let mut sampled = 0;
    let mut above_generic = 0;
    for i in 0..1000 {
        let l = 1 + i % 4;
        let r = 1 + (i / 4) % 4;
        let Some(d) = stable_commuting(&mut rng, l, r, 10_000) else {
            t.expect(false, || format!("no stable datum found for l={l} r={r}"));
            continue;
        };
        sampled += 1;
        match tangent_dim_quotient(&d) {
            Ok(dim) => {
                if dim > l * (r + 1) {
                    above_generic += 1;
                }
                t.expect(l * (r + 1) <= dim && dim <= 2 * l * r, || {
                    format!("bound violated l={l} r={r}: {dim} for {d}")
                })
            }
            Err(e) => t.error("stable sample", e),
        }
    }
    t.report(
        "C10",
        "ADHM embedding dimensions",
        format!("l²+lr at origin, l(r+1) at regular semisimple, bounds on {sampled} stable data ({above_generic} singular)"),
    )
}

/// Reference stability test for `l = 2`: a proper invariant subspace
/// containing every `v_i` is `0` (all `v_i` vanish) or the line through the
/// first nonzero `v_i`, which must then contain the others and be an
/// eigenline of both `x` and `y`.
fn stable_l2_reference(d: &AdhmDatum) -> bool {
    let parallel = |a: &[Rational], b: &[Rational]| &a[0] * &b[1] - &a[1] * &b[0] == Rational::zero();
    let Some(w) = d.v().iter().find(|v| v.iter().any(|c| !c.is_zero())) else {
        return false;
    };
    let all_on_line = d.v().iter().all(|v| parallel(v, w));
    let invariant = parallel(&d.x().mul_vec(w), w) && parallel(&d.y().mul_vec(w), w);
    !(all_on_line && invariant)
}

/// Criterion 11: stability against the `l = 2` reference, and freeness.
pub fn check_stability(seed: u64) -> CheckReport {
    let mut t = Tally::default();
    let mut rng = rng_from_seed(seed ^ 0xB);
    let mut stable_count = 0;
    for i in 0..200 {
        let r = 1 + i % 3;
        let d = structured_l2(&mut rng, r);
        let krylov = stability_check(&d);
        t.expect(krylov == stable_l2_reference(&d), || format!("l=2 disagreement on {d}"));
        if krylov {
            stable_count += 1;
            let dim = stabilizer_dim(&d);
            t.expect(dim == 0, || format!("stable datum with stabilizer dim {dim}: {d}"));
        }
    }
    for i in 0..200 {
        let l = 1 + i % 4;
        let r = 1 + (i / 4) % 4;
        if let Some(d) = stable_commuting(&mut rng, l, r, 10_000) {
            stable_count += 1;
            let dim = stabilizer_dim(&d);
            t.expect(dim == 0, || format!("stable datum with stabilizer dim {dim}: {d}"));
        }
    }
    t.report("C11", "stability and free action", format!("{stable_count} stable data have trivial stabilizer"))
}

/// Monomials `a^s b^t z₁^{e₁} z₂^{e₂} z₃^{e₃}` with `s+t = e₁+e₂+e₃ = n`.
fn count_bidegree_monomials(n: u64) -> u64 {
    let mut count = 0;
    for _s in 0..=n {
        for e1 in 0..=n {
            for e2 in 0..=n - e1 {
                let _e3 = n - e1 - e2;
                count += 1;
            }
        }
    }
    count
}

/// Criterion 12: the commuting variety of `sl₂`.
pub fn check_sl2(seed: u64) -> CheckReport {
    let mut t = Tally::default();
    let mut rng = rng_from_seed(seed ^ 0xC);
    for _ in 0..200 {
        let (a, b, z) = sl2_parameters(&mut rng);
        let p = sl2_param_point(&a, &b, &z);
        t.expect(sl2_on_variety(&p), || format!("{p} off the variety"));
    }
    for _ in 0..100 {
        let p = generic_sl2_point(&mut rng);
        match sl2_jacobian_rank(&p) {
            Ok(rank) => t.expect(rank == 2, || format!("rank {rank} at {p}")),
            Err(e) => t.error("jacobian", e),
        }
    }
    match sl2_jacobian_rank(&Sl2Point::origin()) {
        Ok(rank) => t.expect(rank == 0, || format!("rank {rank} at origin")),
        Err(e) => t.error("origin", e),
    }
    let n_max = 50;
    let series = PowerSeries::from_coeffs(vec![rat(1), rat(2)])
        .map(|h| {
            let mut padded = h.coeffs().to_vec();
            padded.resize(n_max + 1, rat(0));
            PowerSeries::from_coeffs(padded)
                .unwrap()
                .mul(&PowerSeries::inverse_binomial_factor(&rat(4), 1, n_max))
        })
        .unwrap();
    for n in 0..=n_max as u64 {
        let c = Rational::from_integer(sl2_hilbert_coefficient(n));
        let n_i = n as i64;
        let closed = binomial(n_i + 3, 3) + rat(2) * binomial(n_i + 2, 3);
        t.expect_eq(&c, &closed, || format!("n={n} vs C(n+3,3)+2C(n+2,3)"));
        t.expect_eq(&c, &series.coeff(n as usize), || format!("n={n} vs (1+2q)/(1−q)⁴"));
        t.expect_eq(&c, &rat(count_bidegree_monomials(n) as i64), || format!("n={n} vs monomial count"));
    }
    t.expect(!gorenstein_symmetry_test(), || "h-vector (1,2) reported palindromic".into());
    t.report("C12", "commuting variety of sl₂", "minors, Jacobian ranks, Hilbert series, non-Gorenstein h-vector".into())
}

/// Ring axioms and Gauss–Bonnet on every catalog surface.
pub fn check_chow_invariants(catalog: &Catalog, seed: u64) -> CheckReport {
    let mut t = Tally::default();
    let mut rng = rng_from_seed(seed ^ 0x101);
    for s in &catalog.surfaces {
        t.expect_eq(&s.chi_top, &s.omega_c2_int, || format!("{} Gauss–Bonnet", s.name));
        for _ in 0..10 {
            let a = random_class(&mut rng, s);
            let b = random_class(&mut rng, s);
            let c = random_class(&mut rng, s);
            let m = |x: &GradedClass, y: &GradedClass| s.mul(x, y).unwrap();
            t.expect(m(&a, &b) == m(&b, &a), || format!("{} commutativity", s.name));
            t.expect(m(&m(&a, &b), &c) == m(&a, &m(&b, &c)), || format!("{} associativity", s.name));
            t.expect(
                m(&a, &b.add(&c).unwrap()) == m(&a, &b).add(&m(&a, &c)).unwrap(),
                || format!("{} distributivity", s.name),
            );
            let k = small_rational(&mut rng);
            let lin = a.scale(&k).add(&b).unwrap().integrate();
            t.expect_eq(&lin, &(&k * a.integrate() + b.integrate()), || format!("{} linearity", s.name));
        }
    }
    t.report("I-chow", "numerical Chow ring axioms", format!("{} surfaces", catalog.surfaces.len()))
}

/// `s·c = 1`, twist/untwist, and the splitting principle on `P²`.
pub fn check_bundle_invariants(catalog: &Catalog, seed: u64) -> CheckReport {
    let mut t = Tally::default();
    let mut rng = rng_from_seed(seed ^ 0x102);
    for s in &catalog.surfaces {
        for rank in 1..=4 {
            let e = random_bundle(&mut rng, s, rank);
            let l = random_line(&mut rng, s);
            let sc = s.mul(&segre_total(s, &e).unwrap(), &chern_total(&e)).unwrap();
            t.expect(sc == s.one(), || format!("{} s·c ≠ 1", s.name));
            let back = twist_bundle(s, &twist_bundle(s, &e, &l).unwrap(), &l.dual()).unwrap();
            t.expect(back == e, || format!("{} twist round trip", s.name));
        }
    }
    let p2 = crate::chow::surfaces::projective_plane();
    for _ in 0..20 {
        let n = rng.gen_range(1..=4);
        let degrees: Vec<i64> = (0..n).map(|_| rng.gen_range(-4..=4)).collect();
        let c = rng.gen_range(-4..=4);
        let mut e = BundleData::line(vec![rat(degrees[0])]);
        for &a in &degrees[1..] {
            e = crate::bundle::direct_sum(&p2, &e, &BundleData::line(vec![rat(a)])).unwrap();
        }
        let twisted = twist_bundle(&p2, &e, &BundleData::line(vec![rat(c)])).unwrap();
        let shifted: Vec<i64> = degrees.iter().map(|a| a + c).collect();
        let e1: i64 = shifted.iter().sum();
        let mut e2 = 0;
        for i in 0..shifted.len() {
            for j in i + 1..shifted.len() {
                e2 += shifted[i] * shifted[j];
            }
        }
        t.expect(
            chern_total(&twisted) == GradedClass::new(rat(1), vec![rat(e1)], rat(e2)),
            || format!("splitting principle {degrees:?} ⊗ O({c})"),
        );
    }
    t.report("I-bundle", "Chern/Segre calculus", "s·c = 1, twist round trip, splitting principle".into())
}

/// Projection formula and linearity of the pushforward.
pub fn check_projbundle_invariants(triples: &[Triple], seed: u64) -> CheckReport {
    let mut t = Tally::default();
    let mut rng = rng_from_seed(seed ^ 0x103);
    for tr in triples.iter().step_by(7) {
        let pb = ProjectiveBundle::new(tr.surface.clone(), tr.e.clone()).unwrap();
        let r = pb.rank();
        let alpha = random_class(&mut rng, &tr.surface);
        let lhs = pb
            .integrate(&pb.zeta_power(r - 1).mul(&pb.pullback(alpha.clone()).unwrap()).unwrap())
            .unwrap();
        t.expect_eq(&lhs, &alpha.integrate(), || format!("projection formula {}", tr.label));
        let a = pb.twisted_hyperplane(&tr.l).unwrap().pow(r as u32 + 1).unwrap();
        let b = pb.segre_omega().unwrap();
        let k = small_rational(&mut rng);
        let sum = a.scale(&k).add(&b).unwrap();
        let lin = pb.pushforward(&sum).unwrap();
        let parts = pb
            .pushforward(&a)
            .unwrap()
            .scale(&k)
            .add(&pb.pushforward(&b).unwrap())
            .unwrap();
        t.expect(lin == parts, || format!("pushforward linearity {}", tr.label));
    }
    t.report("I-proj", "projective bundle pushforward", "projection formula, linearity".into())
}

/// Series identities beyond criterion 9.
pub fn check_series_invariants(seed: u64) -> CheckReport {
    let mut t = Tally::default();
    let mut rng = rng_from_seed(seed ^ 0x104);
    for _ in 0..10 {
        let chi = small_rational(&mut rng);
        let r = rng.gen_range(1..=5u32);
        let a = quot_euler_series(&chi, r, 6).unwrap();
        let b = quot_euler_series(&(&chi * rat(i64::from(r))), 1, 6).unwrap();
        t.expect(a == b, || format!("χ={chi} r={r} rank folding"));
        let chi = rat(rng.gen_range(0..=30));
        let s = quot_euler_series(&chi, r, 6).unwrap();
        t.expect(s.coeffs().iter().all(is_nonnegative_integer), || format!("χ={chi} r={r} integrality"));
    }
    t.report("I-series", "Euler series identities", "rank folding, integrality".into())
}

/// Conjugation invariance of the ADHM checks.
pub fn check_conjugation_invariance(seed: u64) -> CheckReport {
    let mut t = Tally::default();
    let mut rng = rng_from_seed(seed ^ 0x105);
    let mut data = Vec::new();
    for i in 0..8 {
        let l = 1 + i % 3;
        let r = 1 + i % 2;
        data.extend(stable_commuting(&mut rng, l, r, 10_000));
        data.push(structured_l2(&mut rng, r));
    }
    for d in &data {
        let base = (stability_check(d), stabilizer_dim(d), tangent_dim_quotient(d).ok());
        for _ in 0..50 {
            let g = random_invertible(&mut rng, d.l());
            let c = d.conjugate(&g).unwrap();
            t.expect(is_commuting(&c) == is_commuting(d), || format!("commutation changed for {d}"));
            let moved = (stability_check(&c), stabilizer_dim(&c), tangent_dim_quotient(&c).ok());
            t.expect(moved == base, || format!("invariants changed under conjugation of {d}"));
        }
    }
    t.report("I-adhm", "GL(V)-conjugation invariance", format!("{} data × 50 conjugations", data.len()))
}

/// Runs every check on the catalog with the given seed.
pub fn run_all(catalog: &Catalog, seed: u64) -> Vec<CheckReport> {
    let triples = sweep_triples(catalog, seed, 4);
    vec![
        check_severi_pattern(),
        check_rank_one_reduction(catalog, seed),
        check_lambda_dual_path(&triples),
        check_theorem_vs_pipeline(&triples),
        check_quot1_dual_path(&triples),
        check_twist_invariance(&triples, seed),
        check_grothendieck_vanishing(catalog, seed),
        check_insertion_integral(catalog),
        check_euler_series(seed),
        check_adhm_dimensions(seed),
        check_stability(seed),
        check_sl2(seed),
        check_chow_invariants(catalog, seed),
        check_bundle_invariants(catalog, seed),
        check_projbundle_invariants(&triples, seed),
        check_series_invariants(seed),
        check_conjugation_invariance(seed),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_oracle_small_values() {
        let p: Vec<i64> = partition_counts(7).iter().map(|x| x.try_into().unwrap()).collect();
        assert_eq!(p, vec![1, 1, 2, 3, 5, 7, 11, 15]);
        let k3: Vec<i64> = partition_convolution_power(24, 3).iter().map(|x| x.try_into().unwrap()).collect();
        assert_eq!(k3, vec![1, 24, 324, 3200]);
    }

    #[test]
    fn monomial_count_small_values() {
        assert_eq!(count_bidegree_monomials(0), 1);
        assert_eq!(count_bidegree_monomials(1), 6);
        assert_eq!(count_bidegree_monomials(2), 18);
    }

    #[test]
    fn reference_stability_cases() {
        let e1 = vec![rat(1), rat(0)];
        let z = Matrix::zeros(2, 2);
        let d = AdhmDatum::new(z.clone(), z.clone(), vec![e1.clone()]).unwrap();
        assert!(!stable_l2_reference(&d));
        let shift = Matrix::from_i64(&[&[0, 0], &[1, 0]]);
        let d = AdhmDatum::new(shift, z.clone(), vec![e1]).unwrap();
        assert!(stable_l2_reference(&d));
        let d = AdhmDatum::new(z.clone(), z, vec![vec![rat(0), rat(0)]]).unwrap();
        assert!(!stable_l2_reference(&d));
    }

    #[test]
    fn sweep_is_deterministic() {
        let c = Catalog::builtin();
        let a = sweep_triples(&c, 5, 2);
        let b = sweep_triples(&c, 5, 2);
        assert_eq!(a.len(), b.len());
        assert!(a.iter().zip(&b).all(|(x, y)| x.e == y.e && x.l == y.l));
    }

    #[test]
    fn failing_tally_reports_fail() {
        let mut t = Tally::default();
        t.expect_eq(&rat(1), &rat(2), || "one vs two".into());
        let r = t.report("X", "demo", String::new());
        assert!(!r.passed);
        assert!(r.to_string().starts_with("FAIL [X]"));
    }
}
