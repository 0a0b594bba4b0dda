//! Command-line front end: analyze / decompose / random / check.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use fermi4::io::{self, ReportFile, StateFile};
use fermi4::linalg::CMatrix;
use fermi4::{decomposition, geometry, measures, random, FermionState};

#[derive(Parser)]
#[command(name = "fermi4", version, about = "Entanglement analysis of two-fermion four-mode pure states")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute eta, spectrum, entropies, geodesic distance, and Slater rank
    Analyze {
        /// State file (fermi-state-v1 JSON)
        file: PathBuf,
        /// Renyi orders, comma separated (integers >= 2)
        #[arg(long, value_delimiter = ',', default_value = "2")]
        alpha: Vec<u32>,
        /// Emit a fermi-report-v1 JSON document instead of text
        #[arg(long)]
        json: bool,
    },
    /// Compute the real canonical form R = V P V^T
    Decompose {
        /// State file (fermi-state-v1 JSON)
        file: PathBuf,
        /// Emit a fermi-report-v1 JSON document instead of text
        #[arg(long)]
        json: bool,
    },
    /// Generate seeded random state files
    Random(RandomArgs),
    /// Run the per-state consistency suite on a file or directory
    Check {
        /// State file or directory of state files
        path: PathBuf,
        /// Tolerance for every identity in the suite
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
}

#[derive(Args)]
struct RandomArgs {
    /// Number of states to generate
    #[arg(long, default_value_t = 1)]
    count: u32,
    /// RNG seed; identical seeds reproduce identical files
    #[arg(long)]
    seed: u64,
    /// Target correlation measure in [0, 1]
    #[arg(long, conflicts_with = "rank1")]
    eta: Option<f64>,
    /// Generate separable (Slater rank one) states
    #[arg(long)]
    rank1: bool,
    /// Output directory (created if missing)
    #[arg(long)]
    out: PathBuf,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Analyze { file, alpha, json } => cmd_analyze(&file, &alpha, json),
        Command::Decompose { file, json } => cmd_decompose(&file, json),
        Command::Random(args) => cmd_random(&args),
        Command::Check { path, tol } => cmd_check(&path, tol),
    }
}

fn load(path: &std::path::Path) -> Result<(FermionState, Vec<u8>), String> {
    let (_, state, bytes) = io::read_state_file(path).map_err(|e| e.to_string())?;
    Ok((state, bytes))
}

fn cmd_analyze(file: &std::path::Path, alphas: &[u32], json: bool) -> Result<ExitCode, String> {
    let (state, bytes) = load(file)?;
    let report = measures::analyze(&state, alphas).map_err(|e| e.to_string())?;
    if json {
        let doc = ReportFile::new(&bytes).with_analysis(&report);
        print!("{}", String::from_utf8(io::to_json_bytes(&doc)).unwrap());
    } else {
        println!("eta            {:.12}", report.eta);
        println!(
            "spectrum       lambda+ = {:.12} (x2)  lambda- = {:.12} (x2)",
            report.spectrum.lambda_plus, report.spectrum.lambda_minus
        );
        println!("von Neumann    {:.12}", report.von_neumann);
        for (a, s) in &report.renyi {
            println!("Renyi alpha={a}  {s:.12}");
        }
        println!("geodesic       {:.12}", report.geodesic);
        println!("Slater rank    {}", report.slater_rank);
        println!("on quadric     {}", report.on_quadric);
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_decompose(file: &std::path::Path, json: bool) -> Result<ExitCode, String> {
    let (state, bytes) = load(file)?;
    let form = decomposition::slater_decompose(&state);
    let residual = form.residual(&state);
    if residual >= 1e-9 {
        return Err(format!("canonical reconstruction residual {residual:.3e} exceeds 1e-9"));
    }
    if json {
        let doc = ReportFile::new(&bytes).with_canonical(&form, residual);
        print!("{}", String::from_utf8(io::to_json_bytes(&doc)).unwrap());
    } else {
        println!("r1        {:.12}", form.r1);
        println!("r2        {:.12}", form.r2);
        println!("residual  {residual:.3e}");
        println!("V =");
        for i in 0..4 {
            let row: Vec<String> = (0..4)
                .map(|j| {
                    let z = form.v[(i, j)];
                    format!("{:+.6}{:+.6}i", z.re, z.im)
                })
                .collect();
            println!("  [ {} ]", row.join("  "));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_random(args: &RandomArgs) -> Result<ExitCode, String> {
    if let Some(eta) = args.eta {
        if !(0.0..=1.0).contains(&eta) {
            return Err(format!("--eta {eta} outside [0, 1]"));
        }
    }
    std::fs::create_dir_all(&args.out)
        .map_err(|e| format!("create {}: {e}", args.out.display()))?;
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    for k in 0..args.count {
        let state = if args.rank1 {
            random::random_rank1(&mut rng)
        } else if let Some(eta) = args.eta {
            random::random_fixed_eta(&mut rng, eta).map_err(|e| e.to_string())?
        } else {
            random::random_state(&mut rng)
        };
        let file = StateFile::from_pluecker(&state);
        let path = args.out.join(format!("state-{:04}.json", k));
        io::write_file(&path, &io::to_json_bytes(&file)).map_err(|e| e.to_string())?;
        println!("{}", path.display());
    }
    Ok(ExitCode::SUCCESS)
}

struct CheckOutcome {
    name: &'static str,
    value: f64,
    pass: bool,
}

fn check_state(state: &FermionState, tol: f64) -> Result<Vec<CheckOutcome>, String> {
    let mut out = Vec::new();
    let eta = measures::eta(state).map_err(|e| e.to_string())?;

    // Lambda^2 = (1 - eta^2) I in the magic frame
    let md = measures::lambda_matrix(state).map_err(|e| e.to_string())?;
    let want = CMatrix::identity(4).scale(Complex64::new(1.0 - eta * eta, 0.0));
    let dev = (&md.lambda * &md.lambda).max_abs_diff(&want).map_err(|e| e.to_string())?;
    out.push(CheckOutcome { name: "lambda-square", value: dev, pass: dev < tol });

    // eta from the Pluecker amplitudes vs the dual-pairing trace
    let dev = (eta - geometry::eta_invariant(state)).abs();
    out.push(CheckOutcome { name: "eta-two-path", value: dev, pass: dev < tol });

    // closed-form spectrum vs the brute-force eigensolver
    let spec = measures::spectrum_closed_form(eta).map_err(|e| e.to_string())?;
    let oracle = fermi4::linalg::hermitian_eigensystem(&measures::density_matrix(state))
        .map_err(|e| e.to_string())?;
    let expect = [
        spec.lambda_minus,
        spec.lambda_minus,
        spec.lambda_plus,
        spec.lambda_plus,
    ];
    let dev = oracle
        .values
        .iter()
        .zip(&expect)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    out.push(CheckOutcome { name: "spectrum-oracle", value: dev, pass: dev < tol });

    // canonical form reconstruction
    let form = decomposition::slater_decompose(state);
    let dev = form.residual(state);
    out.push(CheckOutcome { name: "canonical-residual", value: dev, pass: dev < tol });

    // occupation-number bound for two fermions
    let pauli = measures::pauli_check(&measures::density_matrix(state), 2)
        .map_err(|e| e.to_string())?;
    out.push(CheckOutcome {
        name: "pauli-bound",
        value: if pauli { 0.0 } else { 1.0 },
        pass: pauli,
    });

    // entropy ordering S2 <= S1
    let s1 = measures::von_neumann(eta).map_err(|e| e.to_string())?;
    let s2 = measures::renyi(eta, 2).map_err(|e| e.to_string())?;
    let dev = (s2 - s1).max(0.0);
    out.push(CheckOutcome { name: "entropy-order", value: dev, pass: dev < tol });

    Ok(out)
}

fn cmd_check(path: &std::path::Path, tol: f64) -> Result<ExitCode, String> {
    if tol <= 0.0 {
        return Err("--tol must be positive".into());
    }
    let files: Vec<PathBuf> = if path.is_dir() {
        let mut v: Vec<PathBuf> = std::fs::read_dir(path)
            .map_err(|e| format!("read {}: {e}", path.display()))?
            .filter_map(|r| r.ok().map(|d| d.path()))
            .filter(|p| p.extension().is_some_and(|e| e == "json"))
            .collect();
        v.sort();
        v
    } else {
        vec![path.to_path_buf()]
    };
    if files.is_empty() {
        return Err(format!("no .json state files under {}", path.display()));
    }

    let mut failures = 0u32;
    for file in &files {
        let (state, _) = load(file)?;
        let outcomes = check_state(&state, tol)?;
        for o in &outcomes {
            let verdict = if o.pass { "ok  " } else { "FAIL" };
            println!("{verdict} {:<20} {:>12.3e}  {}", o.name, o.value, file.display());
            if !o.pass {
                failures += 1;
            }
        }
    }
    if failures > 0 {
        eprintln!("{failures} check(s) failed");
        return Ok(ExitCode::from(2));
    }
    println!("all checks passed ({} file(s))", files.len());
    Ok(ExitCode::SUCCESS)
}
