//! Regenerate every supported figure as CSV + SVG.
//!
//! cargo run --example reproduce_figures -- [out-dir]

use std::path::PathBuf;

use runge_lab::error::Result;
use runge_lab::harness::{default_output_dir, figure_title, run_figure, EXCLUDED_FIGURES, SUPPORTED_FIGURES};

fn main() -> Result<()> {
    let dir = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(default_output_dir);
    for id in SUPPORTED_FIGURES {
        let bundle = run_figure(id)?;
        bundle.write_to(&dir, &format!("figure{id}"), true)?;
        println!("figure {id:>2}: {}", figure_title(id).unwrap_or_default());
        for r in &bundle.reports {
            println!("    {:<40} {:.4e}", r.method, r.max_abs);
        }
        for note in &bundle.notes {
            println!("    note: {note}");
        }
    }
    for (id, why) in EXCLUDED_FIGURES {
        println!("figure {id:>2}: skipped, {why}");
    }
    println!("written to {}", dir.display());
    Ok(())
}
