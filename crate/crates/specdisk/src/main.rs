use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use specdisk::cli::{self, Action, Overrides};
use specdisk::config::RunConfig;

/// Gershgorin-disk spectral bounds and Hill-method spectra for periodic
/// traveling waves of dispersive Hamiltonian PDEs.
#[derive(Parser)]
#[command(name = "specdisk", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Fourier coefficients and norms of the wave potential
    Potential(RunArgs),
    /// Gershgorin disk tables, intersection components, and tail bounds
    Disks(RunArgs),
    /// Hill-method spectra over the configured mu grid
    Spectrum(RunArgs),
    /// Verify containment, counting, symmetry, and imaginary certificates
    Verify(RunArgs),
    /// Static SVG figures: disks in blue, eigenvalues in red
    Figure(RunArgs),
}

#[derive(Args)]
struct RunArgs {
    /// Path to the JSON run configuration
    #[arg(long)]
    config: PathBuf,
    /// Replace the configured mu grid with this single value
    #[arg(long)]
    mu: Option<f64>,
    /// Override the Hill truncation half-width N
    #[arg(long)]
    n: Option<usize>,
    /// Override the output directory
    #[arg(long)]
    out: Option<PathBuf>,
}

fn init_thread_pool() {
    if let Ok(text) = std::env::var("SPECDISK_THREADS") {
        if let Ok(threads) = text.parse::<usize>() {
            if threads > 0 {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(threads)
                    .build_global();
            }
        }
    }
}

fn execute(action: Action, args: &RunArgs) -> specdisk::Result<i32> {
    let text = std::fs::read_to_string(&args.config).map_err(|e| {
        specdisk::Error::Config(format!("cannot read {}: {e}", args.config.display()))
    })?;
    let config = RunConfig::from_json(&text)?;
    let overrides = Overrides {
        mu: args.mu,
        n: args.n,
        out: args.out.clone(),
    };
    cli::run(action, config, &overrides)
}

fn main() -> ExitCode {
    init_thread_pool();
    let cli = Cli::parse();
    let (action, args) = match &cli.command {
        Command::Potential(a) => (Action::Potential, a),
        Command::Disks(a) => (Action::Disks, a),
        Command::Spectrum(a) => (Action::Spectrum, a),
        Command::Verify(a) => (Action::Verify, a),
        Command::Figure(a) => (Action::Figure, a),
    };
    match execute(action, args) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("specdisk: {e}");
            ExitCode::from(2)
        }
    }
}
