//! The full verification suite as a library call, with the canonical
//! JSON report (byte-identical across runs and thread counts).

use skewpairs::suite::run_suite;

fn main() {
    let report = run_suite(3, 42, "all", 25, false).expect("suite runs");
    println!("{}", report.canonical_json());
    eprintln!("overall: {}", report.overall);
}
