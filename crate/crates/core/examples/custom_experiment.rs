//! Drive the harness from key = value text, as the `--config` flag does.
//!
//! cargo run --example custom_experiment

use runge_lab::error::Result;
use runge_lab::harness::{run_experiment, run_sweep, ExperimentConfig};

const CONFIG: &str = "
# elastic net on a sine, degree 9
method = elastic-net
function = sin
n_samples = 15
degree = 9
param.alpha = 1e-4
param.rho = 0.3
";

fn main() -> Result<()> {
    let cfg = ExperimentConfig::from_kv_text(CONFIG)?;
    let bundle = run_experiment(&cfg)?;
    println!("{}", bundle.title);
    for r in &bundle.reports {
        println!("  {}: max {:.4e}, rms {:.4e}", r.method, r.max_abs, r.rms);
    }

    let sweep = run_sweep(&ExperimentConfig::for_method("spline"), &[5, 9, 17, 33, 65])?;
    for r in &sweep.reports {
        println!("  {:<12} {:.4e}", r.method, r.max_abs);
    }
    Ok(())
}
