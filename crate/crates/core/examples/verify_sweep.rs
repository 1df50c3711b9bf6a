// Runs every theorem check over the small end of the default catalog and
// prints the per-statement tally.

use ccsgraph::sweep::{select_catalog, sweep_pairs, GroupFilter};
use ccsgraph::theorems::{run_suite, SuiteOptions};
use ccsgraph::DEFAULT_ORDER_CAP;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let families = select_catalog(&GroupFilter::default(), 60, false);
    let pairs = sweep_pairs(&families, DEFAULT_ORDER_CAP)?;
    let report = run_suite(&pairs, &SuiteOptions::default());
    print!("{}", report.summary());
    assert_eq!(report.total_violations, 0);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
