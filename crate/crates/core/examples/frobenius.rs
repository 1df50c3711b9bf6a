// Frobenius-kernel detection and the two-component characterization of the
// class-size graph of a group.

use ccsgraph::catalog::Family;
use ccsgraph::theorems::{check_two_component_characterization, is_frobenius, is_quasi_frobenius_abelian};
use ccsgraph::DEFAULT_ORDER_CAP;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for name in ["S3", "A4", "D10", "Aff5", "Aff7", "D8", "Q8", "S4", "S3xC2", "C12"] {
        let g = Family::parse(name)?.build(DEFAULT_ORDER_CAP)?;
        let kernel = is_frobenius(&g).map(|d| d.kernel.order());
        let qf = is_quasi_frobenius_abelian(&g)?;
        let outcome = check_two_component_characterization(&g)?;
        println!(
            "{name:<6} Frobenius kernel {:<8} quasi-Frobenius (abelian parts) {:<5} -> {:?}",
            format!("{kernel:?}"),
            qf,
            outcome.status
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
