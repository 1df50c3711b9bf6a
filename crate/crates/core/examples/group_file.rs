// Reading a group from the `degree` / `gen` text format.

use ccsgraph::groupfile::GroupSpec;
use ccsgraph::{ClassData, Subgroup, DEFAULT_ORDER_CAP};

const TEXT: &str = "\
# the Frobenius group of order 21 acting on 7 points
degree 7
gen (1 2 3 4 5 6 7)
gen (2 3 5)(4 7 6)
";

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let spec = GroupSpec::parse(TEXT)?;
    let g = spec.build(DEFAULT_ORDER_CAP)?;
    let cd = ClassData::compute(&g, &Subgroup::whole(g.order()))?;
    println!("order {}, cs = {:?}, components {}", g.order(), cd.cs_values(), cd.graph().component_count());
    assert_eq!(g.order(), 21);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
