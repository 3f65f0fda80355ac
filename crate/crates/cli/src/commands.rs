use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use qwl_core::matrix::ComplexMatrix;
use qwl_core::register::{
    build_x_family, build_z_family, pairing_checks, quantum_plane_report, verify_power_identity,
};
use qwl_core::sic::{search_fiducial, verify_sic, DEFAULT_FRAME_TOL};
use qwl_core::tomography::{
    mub_prime, mub_report, random_density, reconstruct, simulate_measurements, DensityMatrix,
};
use qwl_core::universality::{
    is_universal, qutrit_example_set, theorem1_set, theorem2_set, theorem3_set, HamiltonianSet,
    DEFAULT_CLOSURE_TOL,
};
use qwl_core::weyl::relation_report;
use qwl_core::{build_weyl, Error, RandomSource};

use crate::report::RunReport;

/// Tolerance for identities that hold exactly by construction.
const EXACT_TOL: f64 = 1e-12;

#[derive(Debug, Parser)]
#[command(name = "qwl", version, about = "Discrete Weyl operators for qudits")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print U, V, X, Y, Z for one qudit and check their relations.
    Weyl(WeylArgs),
    /// Build an n-qudit operator family and optionally verify its algebra.
    Family(FamilyArgs),
    /// Lie-closure dimension and universality verdict of a Hamiltonian set.
    Universality(UniversalityArgs),
    /// Mutually unbiased bases for prime d.
    Mub(MubArgs),
    /// Simulate MUB measurements of a state and reconstruct it.
    Tomography(TomographyArgs),
    /// Search for a SIC fiducial vector.
    Sic(SicArgs),
}

#[derive(Debug, Args, Serialize)]
pub struct WeylArgs {
    #[arg(long)]
    pub d: usize,
    /// JSON report (default).
    #[arg(long, conflicts_with = "pretty")]
    pub json: bool,
    /// Human-readable matrices instead of JSON.
    #[arg(long)]
    pub pretty: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyChoice {
    X,
    Z,
}

#[derive(Debug, Args, Serialize)]
pub struct FamilyArgs {
    #[arg(long)]
    pub d: usize,
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum)]
    pub family: FamilyChoice,
    /// Check the quantum-plane relations, the power identity and (z-family,
    /// n ≥ 2) the pairing identities.
    #[arg(long)]
    pub verify: bool,
    /// Seed for the random power-identity coefficients.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum SetChoice {
    Theorem1,
    Theorem2,
    Theorem3,
    QutritExample,
}

#[derive(Debug, Args, Serialize)]
pub struct UniversalityArgs {
    #[arg(long)]
    pub d: usize,
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, required_unless_present = "custom")]
    pub set: Option<SetChoice>,
    /// JSON list of `{"label": ..., "matrix": {...}}` generators.
    #[arg(long, conflicts_with = "set")]
    pub custom: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_CLOSURE_TOL)]
    pub tol: f64,
}

#[derive(Debug, Args, Serialize)]
pub struct MubArgs {
    #[arg(long)]
    pub d: usize,
    #[arg(long)]
    pub verify: bool,
}

#[derive(Debug, Args, Serialize)]
pub struct TomographyArgs {
    #[arg(long)]
    pub d: usize,
    /// Shots per basis.
    #[arg(long)]
    pub shots: u64,
    #[arg(long)]
    pub seed: u64,
    /// Density matrix to measure, in the matrix JSON format. Defaults to a
    /// random state drawn from the seed.
    #[arg(long)]
    pub state: Option<PathBuf>,
    /// Write counts as CSV (`basis_index,outcome_index,count`) to this file.
    #[arg(long)]
    pub csv: Option<PathBuf>,
}

#[derive(Debug, Args, Serialize)]
pub struct SicArgs {
    #[arg(long)]
    pub d: usize,
    #[arg(long, default_value_t = 20)]
    pub restarts: usize,
    #[arg(long)]
    pub seed: u64,
    #[arg(long, default_value_t = DEFAULT_FRAME_TOL)]
    pub tol: f64,
}

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Verification {
        message: String,
        partial: Option<String>,
    },
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Verification {
            message: e.to_string(),
            partial: None,
        }
    }
}

/// Runs one subcommand and returns the report text for stdout.
pub fn run(cli: Cli) -> Result<String, Failure> {
    let started = Instant::now();
    match cli.command {
        Command::Weyl(a) => weyl(a, started),
        Command::Family(a) => family(a, started),
        Command::Universality(a) => universality(a, started),
        Command::Mub(a) => mub(a, started),
        Command::Tomography(a) => tomography(a, started),
        Command::Sic(a) => sic(a, started),
    }
}

fn check(report: RunReport, ok: bool, message: impl FnOnce() -> String) -> Result<String, Failure> {
    if ok {
        Ok(report.to_json())
    } else {
        Err(Failure::Verification {
            message: message(),
            partial: Some(report.to_json()),
        })
    }
}

fn cpx(z: Complex64) -> Value {
    json!([z.re, z.im])
}

fn mat(m: &ComplexMatrix) -> Value {
    serde_json::to_value(m).expect("matrix serializes")
}

fn render(name: &str, m: &ComplexMatrix, out: &mut String) {
    let _ = writeln!(out, "{name} =");
    for i in 0..m.rows() {
        out.push_str("  ");
        for j in 0..m.cols() {
            let z = m[(i, j)];
            let _ = write!(out, "{:>8.4}{:+.4}i  ", z.re, z.im);
        }
        out.push('\n');
    }
}

fn weyl(a: WeylArgs, started: Instant) -> Result<String, Failure> {
    let w = build_weyl(a.d)?;
    let rel = relation_report(&w);
    let max = rel.max();
    if a.pretty {
        let mut out = format!(
            "d = {}, zeta = {:.6}{:+.6}i\n",
            a.d,
            w.zeta().re,
            w.zeta().im
        );
        for (name, m) in [
            ("U", w.u()),
            ("V", w.v()),
            ("X", w.x()),
            ("Y", w.y()),
            ("Z", w.z()),
        ] {
            render(name, m, &mut out);
        }
        let _ = write!(
            out,
            "relations: |UV-zVU|={:.3e} |XY-zYX|={:.3e} |YZ-zZY|={:.3e} |XZ-zZX|={:.3e} |ZX-z^-1XZ|={:.3e} powers={:.3e}",
            rel.uv, rel.xy, rel.yz, rel.xz, rel.zx_reversed, rel.powers
        );
        return if max <= EXACT_TOL {
            Ok(out)
        } else {
            Err(Failure::Verification {
                message: format!("relation deviation {max:.3e} exceeds {EXACT_TOL:e}"),
                partial: Some(out),
            })
        };
    }
    let results = json!({
        "d": a.d,
        "zeta": cpx(w.zeta()),
        "U": mat(w.u()),
        "V": mat(w.v()),
        "X": mat(w.x()),
        "Y": mat(w.y()),
        "Z": mat(w.z()),
        "relations": rel,
        "max_deviation": max,
    });
    let report = RunReport::new("weyl", &a, results, started);
    check(report, max <= EXACT_TOL, || {
        format!("relation deviation {max:.3e} exceeds {EXACT_TOL:e}")
    })
}

fn family(a: FamilyArgs, started: Instant) -> Result<String, Failure> {
    let (ops, prefix) = match a.family {
        FamilyChoice::X => (build_x_family(a.d, a.n)?, "x"),
        FamilyChoice::Z => (build_z_family(a.d, a.n)?, "z"),
    };
    let operators: Vec<Value> = ops
        .iter()
        .map(|o| json!({"index": o.index, "label": format!("{prefix}_{}", o.index), "matrix": mat(&o.matrix)}))
        .collect();
    let mut results = json!({"d": a.d, "n": a.n, "family": a.family, "operators": operators});
    let mut ok = true;
    if a.verify {
        let plane = quantum_plane_report(&ops, a.d)?;
        let mut rng = RandomSource::new(a.seed);
        let mut power: f64 = 0.0;
        for _ in 0..20 {
            let coeffs: Vec<Complex64> = (0..ops.len()).map(|_| rng.complex_normal()).collect();
            power = power.max(verify_power_identity(&ops, &coeffs, a.d)?);
        }
        ok &= plane.max() <= EXACT_TOL && power <= 1e-9;
        let mut verification =
            json!({"quantum_plane": plane, "power_identity": power, "power_identity_draws": 20});
        if matches!(a.family, FamilyChoice::Z) && a.n >= 2 {
            let pairs = pairing_checks(a.d, a.n)?;
            ok &= pairs.iter().all(|p| p.deviation <= EXACT_TOL);
            verification["pairing"] = serde_json::to_value(pairs).expect("serializes");
        }
        results["verification"] = verification;
    }
    let report = RunReport::new("family", &a, results, started);
    check(report, ok, || {
        "family verification exceeded tolerance".into()
    })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CustomGenerator {
    label: String,
    matrix: ComplexMatrix,
}

fn read_file(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

fn parse_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, Failure> {
    let text = read_file(path)?;
    serde_json::from_str(&text).map_err(|e| {
        Failure::Usage(format!(
            "malformed JSON in {} at line {}, column {}: {e}",
            path.display(),
            e.line(),
            e.column()
        ))
    })
}

fn universality(a: UniversalityArgs, started: Instant) -> Result<String, Failure> {
    let set: HamiltonianSet = match (&a.custom, a.set) {
        (Some(path), _) => {
            let gens: Vec<CustomGenerator> = parse_json(path)?;
            let mut set = HamiltonianSet::new(a.d, a.n, "custom");
            for g in gens {
                set.push(g.label, g.matrix);
            }
            set
        }
        (None, Some(choice)) => {
            if matches!(choice, SetChoice::Theorem1 | SetChoice::Theorem2) && a.d != 2 {
                let name = choice.to_possible_value().expect("not skipped");
                return Err(Failure::Usage(format!(
                    "{} is a qubit set; use --d 2",
                    name.get_name()
                )));
            }
            if choice == SetChoice::QutritExample && a.d != 3 {
                return Err(Failure::Usage(
                    "qutrit-example is a qutrit set; use --d 3".into(),
                ));
            }
            match choice {
                SetChoice::Theorem1 => theorem1_set(a.n)?,
                SetChoice::Theorem2 => theorem2_set(a.n)?,
                SetChoice::Theorem3 => theorem3_set(a.d, a.n)?,
                SetChoice::QutritExample => qutrit_example_set(a.n)?,
            }
        }
        (None, None) => {
            return Err(Failure::Usage(
                "either --set or --custom is required".into(),
            ))
        }
    };
    set.validate()?;
    let expected = match (a.custom.is_some(), a.set) {
        (true, _) => None,
        (false, Some(SetChoice::Theorem1)) => Some(a.n * (2 * a.n - 1)),
        (false, _) => Some(a.d.pow(2 * a.n as u32) - 1),
    };
    let closure_started = Instant::now();
    let r = is_universal(&set, a.tol)?;
    let seconds = closure_started.elapsed().as_secs_f64();
    let results = json!({
        "set": set.name,
        "generators": set.labels(),
        "dimension": r.traceless_dimension,
        "dimension_with_identity": r.dimension,
        "expected": expected,
        "universal": r.universal,
        "iterations": r.iterations,
        "converged": r.converged,
        "seconds": seconds,
    });
    let ok = r.converged && expected.is_none_or(|e| e == r.traceless_dimension);
    let report = RunReport::new("universality", &a, results, started);
    check(report, ok, || {
        format!(
            "closure dimension {} differs from expected {expected:?}",
            r.traceless_dimension
        )
    })
}

fn mub(a: MubArgs, started: Instant) -> Result<String, Failure> {
    let set = mub_prime(a.d)?;
    let mut results = json!({
        "d": a.d,
        "labels": set.labels,
        "bases": set.bases.iter().map(mat).collect::<Vec<_>>(),
    });
    let mut ok = true;
    if a.verify {
        let r = mub_report(&set);
        ok = r.max() <= 1e-10;
        results["verification"] = serde_json::to_value(r).expect("serializes");
    }
    let report = RunReport::new("mub", &a, results, started);
    check(report, ok, || "MUB verification exceeded 1e-10".into())
}

/// Salt separating the random-state stream from the per-basis sampling streams.
const STATE_STREAM: u64 = 1 << 63;

fn tomography(a: TomographyArgs, started: Instant) -> Result<String, Failure> {
    let set = mub_prime(a.d)?;
    let rho = match &a.state {
        Some(path) => {
            let m: ComplexMatrix = parse_json(path)?;
            if m.rows() != a.d {
                return Err(Failure::Usage(format!(
                    "state is {}x{}, expected d = {}",
                    m.rows(),
                    m.cols(),
                    a.d
                )));
            }
            DensityMatrix::new(m)?
        }
        None => random_density(a.d, &mut RandomSource::new(a.seed).derive(STATE_STREAM))?,
    };
    let records = simulate_measurements(&rho, &set, a.shots, &RandomSource::new(a.seed))?;
    if let Some(path) = &a.csv {
        let mut csv = String::from("basis_index,outcome_index,count\n");
        for r in &records {
            for (k, c) in r.counts.iter().enumerate() {
                let _ = writeln!(csv, "{},{k},{c}", r.basis);
            }
        }
        std::fs::write(path, csv)
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
    }
    let rec = reconstruct(&records, &set)?;
    let error = rec.state.matrix().distance(rho.matrix());
    let results = json!({
        "d": a.d,
        "labels": set.labels,
        "counts": records.iter().map(|r| &r.counts).collect::<Vec<_>>(),
        "true_state": mat(rho.matrix()),
        "estimate": mat(rec.state.matrix()),
        "linear_estimate": mat(&rec.linear),
        "diagnostics": rec.diagnostics,
        "frobenius_error": error,
    });
    Ok(RunReport::new("tomography", &a, results, started).to_json())
}

fn sic(a: SicArgs, started: Instant) -> Result<String, Failure> {
    let search = search_fiducial(a.d, a.restarts, &RandomSource::new(a.seed), a.tol)?;
    let c = search.candidate();
    let deviation = verify_sic(c);
    let results = json!({
        "found": search.found(),
        "fiducial": c.fiducial.iter().map(|z| cpx(*z)).collect::<Vec<_>>(),
        "frame_error": c.frame_error,
        "max_pair_deviation": deviation,
        "restarts_used": search.restarts_used(),
    });
    let report = RunReport::new("sic", &a, results, started);
    let best = c.frame_error;
    check(report, search.found(), || {
        format!(
            "no fiducial within tolerance {:e} after {} restarts (best frame error {best:.3e}); \
             a failed search is not evidence against existence",
            a.tol, a.restarts
        )
    })
}
