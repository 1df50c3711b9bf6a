// Searches the catalog for pairs (G, N) whose graph is connected, incomplete
// and regular, and evaluates the p-group conclusion on each hit.

use ccsgraph::sweep::{search, select_catalog, sweep_pairs, GroupFilter};
use ccsgraph::DEFAULT_ORDER_CAP;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let pairs = sweep_pairs(&select_catalog(&GroupFilter::default(), 120, false), DEFAULT_ORDER_CAP)?;
    let hits = search(&pairs)?;
    println!("searched {} pairs", pairs.len());
    if hits.is_empty() {
        println!("no instances found");
    }
    for h in &hits {
        println!("{} / {}: {:?} -> {:?} (p = {:?})", h.group, h.subgroup, h.vertices, h.main_theorem, h.prime);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
