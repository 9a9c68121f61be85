use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use runge_lab::error::{Error, Result};
use runge_lab::harness::{
    default_output_dir, figure_title, methods, run_experiment, run_figure_with, run_sweep, ExperimentConfig,
    FigureOptions, ParamKind, ReportBundle, EXCLUDED_FIGURES, SUPPORTED_FIGURES,
};
use runge_lab::metrics::DEFAULT_GRID_SIZE;

/// Reproduce Runge-phenomenon experiments as CSV data and SVG plots.
#[derive(Parser)]
#[command(name = "runge-lab", version)]
struct Cli {
    /// Output directory (default: $RUNGE_LAB_OUT or ./runge-lab-out).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Also write an SVG plot.
    #[arg(long, global = true)]
    svg: bool,
    /// Number of evaluation points.
    #[arg(long, global = true)]
    grid_size: Option<usize>,
    /// Number of sample nodes.
    #[arg(long, global = true)]
    n_samples: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reproduce one figure.
    Figure { id: u32 },
    /// Run one method.
    Run(RunArgs),
    /// Run one method over several sample counts.
    Sweep {
        #[command(flatten)]
        run: RunArgs,
        /// Comma-separated sample counts, e.g. 5,10,15,20.
        #[arg(long, value_delimiter = ',', required = true)]
        grid: Vec<usize>,
    },
    /// List methods, their parameters and the supported figures.
    ListMethods,
}

#[derive(Args)]
struct RunArgs {
    /// Method name (see list-methods).
    #[arg(long)]
    method: Option<String>,
    /// Method parameter, repeatable.
    #[arg(long = "param", value_name = "KEY=VALUE")]
    params: Vec<String>,
    /// Target function: runge, sin, constant:<c>, power:<k>, chebyshev:<k>.
    #[arg(long)]
    function: Option<String>,
    /// Polynomial degree for fitting methods.
    #[arg(long)]
    degree: Option<usize>,
    /// Key = value config file; flags override its entries.
    #[arg(long)]
    config: Option<PathBuf>,
}

impl RunArgs {
    fn into_config(self, cli: &CliFlags) -> Result<ExperimentConfig> {
        let mut cfg = match &self.config {
            Some(path) => ExperimentConfig::from_file(path)?,
            None => ExperimentConfig::default(),
        };
        if let Some(m) = self.method {
            cfg.method = m;
        }
        if let Some(f) = self.function {
            cfg.function = f;
        }
        if self.degree.is_some() {
            cfg.degree = self.degree;
        }
        for p in &self.params {
            cfg.set_param_pair(p)?;
        }
        if let Some(n) = cli.n_samples {
            cfg.n_samples = n;
        }
        if let Some(g) = cli.grid_size {
            cfg.grid_size = g;
        }
        cfg.emit_svg |= cli.svg;
        cfg.output_dir = Some(cli.out.clone().or(cfg.output_dir).unwrap_or_else(default_output_dir));
        Ok(cfg)
    }
}

struct CliFlags {
    out: Option<PathBuf>,
    svg: bool,
    grid_size: Option<usize>,
    n_samples: Option<usize>,
}

fn print_summary(bundle: &ReportBundle, dir: &std::path::Path) {
    println!("{}", bundle.title);
    for r in &bundle.reports {
        println!(
            "  {:<45} params {:>3}  max {:<12.4e} rms {:<12.4e} endpoint {:.4e}",
            r.method, r.n_params, r.max_abs, r.rms, r.endpoint_max_abs
        );
    }
    for n in &bundle.notes {
        eprintln!("  note: {n}");
    }
    println!("written to {}", dir.display());
}

fn list_methods() {
    for m in methods() {
        println!("{:<28} {}", m.name, m.summary);
        for p in m.params {
            let kind = match p.kind {
                ParamKind::Real => "real".to_string(),
                ParamKind::Integer => "integer".to_string(),
                ParamKind::Flag => "flag".to_string(),
                ParamKind::Choice(c) => c.join("|"),
            };
            println!("    {:<20} {:<45} {}", p.key, kind, p.help);
        }
    }
    println!();
    println!("figures:");
    for id in SUPPORTED_FIGURES {
        println!("  {id:>2}  {}", figure_title(id).unwrap_or(""));
    }
    for (id, why) in EXCLUDED_FIGURES {
        println!("  {id:>2}  {why}");
    }
}

fn run(cli: Cli) -> Result<()> {
    let flags = CliFlags {
        out: cli.out,
        svg: cli.svg,
        grid_size: cli.grid_size,
        n_samples: cli.n_samples,
    };
    match cli.command {
        Command::ListMethods => list_methods(),
        Command::Figure { id } => {
            let opts = FigureOptions {
                grid_size: flags.grid_size.unwrap_or(DEFAULT_GRID_SIZE),
                n_samples: flags.n_samples,
            };
            let bundle = run_figure_with(id, &opts)?;
            let dir = flags.out.unwrap_or_else(default_output_dir);
            bundle.write_to(&dir, &format!("figure{id}"), flags.svg)?;
            print_summary(&bundle, &dir);
        }
        Command::Run(args) => {
            let cfg = args.into_config(&flags)?;
            let bundle = run_experiment(&cfg)?;
            print_summary(&bundle, cfg.output_dir.as_deref().expect("set above"));
        }
        Command::Sweep { run, grid } => {
            if grid.is_empty() {
                return Err(Error::Usage("--grid needs at least one value".into()));
            }
            let cfg = run.into_config(&flags)?;
            let bundle = run_sweep(&cfg, &grid)?;
            print_summary(&bundle, cfg.output_dir.as_deref().expect("set above"));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("runge-lab: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
