// DOT and JSON export of Γ_G(N).

use ccsgraph::report::{to_dot, GraphDocument};
use ccsgraph::{catalog::Family, ClassData, Subgroup, DEFAULT_ORDER_CAP};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let g = Family::parse("S3xS3")?.build(DEFAULT_ORDER_CAP)?;
    let cd = ClassData::compute(&g, &Subgroup::whole(g.order()))?;
    let graph = cd.graph();
    print!("{}", to_dot(&graph));
    println!("{}", serde_json::to_string(&GraphDocument::from(&graph))?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
