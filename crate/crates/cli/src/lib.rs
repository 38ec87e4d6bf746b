//! Command-line front end for `quot-core`.
//!
//! Exit codes: 0 on success, 1 when a check or precondition fails, 2 on a
//! usage error (bad flags, unknown catalog entries).

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use quot_core::adhm::sampling::{
    generic_sl2_point, random_commuting, rng_from_seed, sl2_parameters, stable_commuting,
};
use quot_core::adhm::{
    gorenstein_symmetry_test, invariant_closure_dim, is_commuting, sl2_hilbert_coefficient,
    sl2_jacobian_rank, sl2_minor_residual, sl2_on_variety, sl2_param_point, stability_check,
    stabilizer_dim, tangent_dim_quotient,
};
use quot_core::crosscheck::{self, DEFAULT_SEED};
use quot_core::rational::{format_rational, parse_rational, rat, Rational};
use quot_core::segre::{
    lambda_closed_form, lambda_proj_direct, lambda_surface_direct, segre_hilb2, segre_quot1,
    segre_quot2_theorem,
};
use quot_core::series::quot_euler_series;
use quot_core::{BundleData, Catalog, Error, SurfaceModel};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILURE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

const QUOT2_FORMULA: &str = "2∫_{Quot²(E)} s_{2r+2}(L^[2]) = (∫s₂(E⊗L))² − ∫{(r²+3r+3)s₂(E⊗L) + C(r+2,2)s₁(E⊗L)² + (1/3)C(r+2,2)(2r+3)s₁(E⊗L)s₁(Ω¹_S) + C(r+3,4)s₂(Ω¹_S)}";
const QUOT1_FORMULA: &str = "∫_{Quot¹(E)} s_{r+1}(L^[1]) = (−1)^{r+1}∫_S s₂(E⊗L)";
const HILB2_FORMULA: &str = "2∫_{S^[2]} s₄(L^[2]) = λ₀² − 10λ₀ + 5λ₁ − λ₂, λ_k = ∫_S c₁(L)^{2−k}s_k(Ω¹_S)";
const LAMBDA_FORMULA: &str = "λ_k = ∫_{P(E)} c₁(p^*L(1))^{r+1−k}s_k(Ω¹_{P(E)}) via p_*ζ^l = (−1)^{l+1−r}s_{l+1−r}(E), against the closed form in E⊗L and Ω¹_S";
const EULER_FORMULA: &str = "Σ_l χ(Quot^l(E)) q^l = ∏_{m≥1} (1 − q^m)^{−r·χ(S)}";

#[derive(Parser, Debug)]
#[command(name = "quot", version, about = "Segre integrals on Quot schemes of surfaces and ADHM experiments")]
struct Cli {
    /// Catalog file (defaults to $QUOT_CATALOG, then the shipped catalog).
    #[arg(long, global = true)]
    catalog: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate a Segre integral for catalog entries.
    Segre {
        #[arg(value_enum)]
        space: SegreSpace,
        #[command(flatten)]
        target: Target,
    },
    /// Compare both routes to λ_k on P(E).
    Lambda {
        #[command(flatten)]
        target: Target,
        /// Only this k (default: all k = 0..=r+1).
        #[arg(long)]
        k: Option<usize>,
    },
    /// Run the full cross-validation sweep on the catalog.
    Crosscheck {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Euler characteristics of Quot^l(E) for l ≤ order.
    Euler {
        #[arg(long, allow_hyphen_values = true)]
        chi: String,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        order: usize,
    },
    /// ADHM and commuting-variety experiments.
    Adhm {
        #[arg(value_enum)]
        experiment: AdhmExperiment,
        #[command(flatten)]
        opts: AdhmOpts,
    },
}

#[derive(Args, Debug)]
struct Target {
    #[arg(long)]
    surface: String,
    /// Bundle E (defaults to the trivial line bundle).
    #[arg(long)]
    bundle: Option<String>,
    /// Invertible sheaf L.
    #[arg(long)]
    line: String,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum SegreSpace {
    Quot1,
    Quot2,
    Hilb2,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum AdhmExperiment {
    Stability,
    Tangent,
    Sl2Minors,
    Sl2Hilbert,
    Sl2Jacobian,
}

#[derive(Args, Debug)]
struct AdhmOpts {
    #[arg(long, default_value_t = 2)]
    l: usize,
    #[arg(long, default_value_t = 2)]
    r: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, default_value_t = 10)]
    trials: u64,
}

/// An outcome that maps to an exit code.
enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Unknown { .. } => Failure::Usage(e.to_string()),
            other => Failure::Check(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Check(e.to_string())
    }
}

type CliResult = std::result::Result<u8, Failure>;

/// Parses `args` (including the program name), runs the command, writes
/// the report to `out` and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Check(msg)) => {
            let _ = writeln!(out, "error: {msg}");
            eprintln!("error: {msg}");
            EXIT_FAILURE
        }
    }
}

fn load_catalog(path: &Option<PathBuf>) -> std::result::Result<Catalog, Failure> {
    let catalog = match path {
        Some(p) => Catalog::load(p),
        None => Catalog::from_env(),
    };
    catalog.map_err(|e| Failure::Check(e.to_string()))
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> CliResult {
    match cli.command {
        Command::Segre { space, target } => {
            let catalog = load_catalog(&cli.catalog)?;
            segre(&catalog, space, &target, out)
        }
        Command::Lambda { target, k } => {
            let catalog = load_catalog(&cli.catalog)?;
            lambda(&catalog, &target, k, out)
        }
        Command::Crosscheck { seed } => {
            let catalog = load_catalog(&cli.catalog)?;
            run_crosscheck(&catalog, seed, out)
        }
        Command::Euler { chi, r, order } => euler(&chi, r, order, out),
        Command::Adhm { experiment, opts } => adhm(experiment, &opts, out),
    }
}

fn describe(b: &BundleData) -> String {
    let c1: Vec<String> = b.c1.iter().map(format_rational).collect();
    format!("rank {}, c1 [{}], c2 {}", b.rank, c1.join(", "), format_rational(&b.c2int))
}

struct Resolved<'a> {
    surface: &'a SurfaceModel,
    e: BundleData,
    l: BundleData,
}

fn resolve<'a>(catalog: &'a Catalog, t: &Target, out: &mut dyn Write) -> std::result::Result<Resolved<'a>, Failure> {
    let surface = catalog.surface(&t.surface)?;
    let e = match &t.bundle {
        Some(name) => catalog.bundle(&t.surface, name)?.clone(),
        None => BundleData::trivial(1, surface),
    };
    let l = catalog.bundle(&t.surface, &t.line)?.clone();
    writeln!(out, "surface: {}", surface.name)?;
    writeln!(out, "bundle: {} ({})", t.bundle.as_deref().unwrap_or("O"), describe(&e))?;
    writeln!(out, "line: {} ({})", t.line, describe(&l))?;
    Ok(Resolved { surface, e, l })
}

fn segre(catalog: &Catalog, space: SegreSpace, t: &Target, out: &mut dyn Write) -> CliResult {
    let name = match space {
        SegreSpace::Quot1 => "quot1",
        SegreSpace::Quot2 => "quot2",
        SegreSpace::Hilb2 => "hilb2",
    };
    writeln!(out, "command: segre {name}")?;
    let res = resolve(catalog, t, out)?;
    let (formula, value) = match space {
        SegreSpace::Quot1 => (QUOT1_FORMULA, segre_quot1(res.surface, &res.e, &res.l)?),
        SegreSpace::Quot2 => (QUOT2_FORMULA, segre_quot2_theorem(res.surface, &res.e, &res.l)?),
        SegreSpace::Hilb2 => {
            if t.bundle.is_some() {
                return Err(Failure::Usage("segre hilb2 takes only --surface and --line".into()));
            }
            let lam = lambda_surface_direct(res.surface, &res.l)?;
            (HILB2_FORMULA, segre_hilb2(&lam))
        }
    };
    writeln!(out, "formula: {formula}")?;
    writeln!(out, "result: {}", format_rational(&value))?;
    Ok(EXIT_OK)
}

fn lambda(catalog: &Catalog, t: &Target, k: Option<usize>, out: &mut dyn Write) -> CliResult {
    writeln!(out, "command: lambda")?;
    let res = resolve(catalog, t, out)?;
    writeln!(out, "formula: {LAMBDA_FORMULA}")?;
    let direct = lambda_proj_direct(res.surface, &res.e, &res.l)?;
    let ks: Vec<usize> = match k {
        Some(k) if k < direct.values().len() => vec![k],
        Some(k) => {
            return Err(Failure::Check(format!("k = {k} outside 0..={}", direct.dim())));
        }
        None => (0..direct.values().len()).collect(),
    };
    let mut disagreements = 0;
    for k in ks {
        let closed = lambda_closed_form(res.surface, &res.e, &res.l, k)?;
        let agree = &closed == direct.get(k);
        if !agree {
            disagreements += 1;
        }
        writeln!(
            out,
            "k={k} closed_form={} pushforward={} {}",
            format_rational(&closed),
            format_rational(direct.get(k)),
            if agree { "agree" } else { "DISAGREE" }
        )?;
    }
    Ok(if disagreements == 0 { EXIT_OK } else { EXIT_FAILURE })
}

fn run_crosscheck(catalog: &Catalog, seed: u64, out: &mut dyn Write) -> CliResult {
    writeln!(out, "command: crosscheck")?;
    writeln!(out, "seed: {seed}")?;
    writeln!(out, "surfaces: {}", catalog.surfaces.len())?;
    let reports = crosscheck::run_all(catalog, seed);
    let failed = reports.iter().filter(|r| !r.passed).count();
    for r in &reports {
        writeln!(out, "{r}")?;
    }
    writeln!(out, "summary: {} passed, {failed} failed", reports.len() - failed)?;
    Ok(if failed == 0 { EXIT_OK } else { EXIT_FAILURE })
}

fn euler(chi: &str, r: u32, order: usize, out: &mut dyn Write) -> CliResult {
    let chi: Rational = parse_rational(chi).map_err(|e| Failure::Usage(e.to_string()))?;
    writeln!(out, "command: euler")?;
    writeln!(out, "chi: {} r: {r} order: {order}", format_rational(&chi))?;
    writeln!(out, "formula: {EULER_FORMULA}")?;
    let s = quot_euler_series(&chi, r, order)?;
    for (l, c) in s.coeffs().iter().enumerate() {
        writeln!(out, "l={l} chi={}", format_rational(c))?;
    }
    writeln!(out, "{s}")?;
    Ok(EXIT_OK)
}

fn adhm(experiment: AdhmExperiment, o: &AdhmOpts, out: &mut dyn Write) -> CliResult {
    if o.l == 0 || o.r == 0 {
        return Err(Failure::Usage("--l and --r must be positive".into()));
    }
    let name = experiment
        .to_possible_value()
        .map(|v| v.get_name().to_string())
        .unwrap_or_default();
    writeln!(out, "command: adhm {name}")?;
    writeln!(out, "l: {} r: {} seed: {} trials: {}", o.l, o.r, o.seed, o.trials)?;
    let mut failures = 0;
    match experiment {
        AdhmExperiment::Stability => {
            writeln!(out, "formula: stable iff the x,y-closure of span(v_i) is V; stable implies trivial stabilizer")?;
            for trial in 0..o.trials {
                let seed = o.seed.wrapping_add(trial);
                let d = random_commuting(&mut rng_from_seed(seed), o.l, o.r);
                let stable = stability_check(&d);
                let stab = stabilizer_dim(&d);
                let ok = !stable || stab == 0;
                failures += usize::from(!ok);
                writeln!(
                    out,
                    "trial={trial} seed={seed} input={d} closure_dim={} stable={stable} stabilizer_dim={stab} free={}",
                    invariant_closure_dim(&d),
                    if stable { (stab == 0).to_string() } else { "n/a".into() }
                )?;
            }
        }
        AdhmExperiment::Tangent => {
            let (l, r) = (o.l, o.r);
            writeln!(out, "formula: dim T = 2l² + rl − rank dμ − l², expected l(r+1) ≤ dim T ≤ 2lr")?;
            for trial in 0..o.trials {
                let seed = o.seed.wrapping_add(trial);
                let Some(d) = stable_commuting(&mut rng_from_seed(seed), l, r, 10_000) else {
                    writeln!(out, "trial={trial} seed={seed} no stable datum found")?;
                    continue;
                };
                let dim = tangent_dim_quotient(&d)?;
                let ok = l * (r + 1) <= dim && dim <= 2 * l * r;
                failures += usize::from(!ok);
                writeln!(
                    out,
                    "trial={trial} seed={seed} input={d} commuting={} tangent_dim={dim} smooth={} within_bounds={ok}",
                    is_commuting(&d),
                    dim == l * (r + 1)
                )?;
            }
        }
        AdhmExperiment::Sl2Minors => {
            writeln!(out, "formula: x_i = a·z_i, y_i = b·z_i satisfies x₁y₂−x₂y₁ = x₁y₃−x₃y₁ = x₂y₃−x₃y₂ = 0")?;
            for trial in 0..o.trials {
                let seed = o.seed.wrapping_add(trial);
                let (a, b, z) = sl2_parameters(&mut rng_from_seed(seed));
                let p = sl2_param_point(&a, &b, &z);
                let m = sl2_minor_residual(&p);
                let on = sl2_on_variety(&p);
                failures += usize::from(!on);
                let ms: Vec<String> = m.iter().map(format_rational).collect();
                writeln!(
                    out,
                    "trial={trial} seed={seed} a={} b={} z=({}) point={p} minors=({}) on_variety={on}",
                    format_rational(&a),
                    format_rational(&b),
                    z.iter().map(format_rational).collect::<Vec<_>>().join(", "),
                    ms.join(", ")
                )?;
            }
        }
        AdhmExperiment::Sl2Jacobian => {
            writeln!(out, "formula: Jacobian of the three minors has rank 2 away from the origin, 0 at it")?;
            for trial in 0..o.trials {
                let seed = o.seed.wrapping_add(trial);
                let p = generic_sl2_point(&mut rng_from_seed(seed));
                let rank = sl2_jacobian_rank(&p)?;
                failures += usize::from(rank != 2);
                writeln!(out, "trial={trial} seed={seed} point={p} jacobian_rank={rank}")?;
            }
        }
        AdhmExperiment::Sl2Hilbert => {
            writeln!(out, "formula: Hilbert series (1+2q)/(1−q)⁴, coefficient C(n+3,3)+2C(n+2,3)")?;
            for n in 0..o.trials {
                let c = Rational::from_integer(sl2_hilbert_coefficient(n));
                let ni = n as i64;
                let series = quot_core::rational::binomial(ni + 3, 3) + rat(2) * quot_core::rational::binomial(ni + 2, 3);
                let ok = c == series;
                failures += usize::from(!ok);
                writeln!(out, "n={n} dim={} series={} match={ok}", format_rational(&c), format_rational(&series))?;
            }
            let gorenstein = gorenstein_symmetry_test();
            writeln!(out, "h_vector: 1, 2 palindromic={gorenstein}")?;
            failures += usize::from(gorenstein);
        }
    }
    writeln!(out, "summary: {failures} failures")?;
    Ok(if failures == 0 { EXIT_OK } else { EXIT_FAILURE })
}
