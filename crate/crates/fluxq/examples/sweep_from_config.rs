//! Config-driven parameter sweep.
//!
//! Loads the JSON experiment plan shipped next to this example, validates it,
//! runs the coupling-strength sweep in parallel, and writes the fixed-column
//! CSV to stdout. The same plan file works with the `fluxq sweep` CLI:
//!
//!   fluxq sweep --config crates/fluxq/examples/configs/capacitive_reference.json
//!
//! Run with: cargo run --release --example sweep_from_config

use fluxq::plan::{parse_config, run_sweep, write_csv};
use std::io::Write;

fn main() {
    let path = concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/configs/capacitive_reference.json"
    );
    let text = std::fs::read_to_string(path).expect("read plan file");
    let plan = parse_config(&text).expect("parse plan");
    plan.validate().expect("validate plan");
    eprintln!("plan hash {:016x}, {} grid points", plan.hash(), plan.grid().len());

    let rows = run_sweep(&plan).expect("run sweep");
    let mut out = std::io::stdout().lock();
    write_csv(&plan, &rows, &mut out).expect("write csv");
    out.flush().expect("flush");
}
