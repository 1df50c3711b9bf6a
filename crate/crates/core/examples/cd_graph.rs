// The common-divisor graph on a set of integers: adjacency, degrees,
// regularity, completeness, components and partner classes.

use ccsgraph::CDGraph;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for sizes in [&[2u64, 3][..], &[4, 6, 9], &[6, 10, 15], &[2, 4], &[6, 10, 35, 21]] {
        let g = CDGraph::build(sizes)?;
        println!("vertices {:?}", g.vertices());
        println!("  edges      {:?}", g.edges());
        println!("  degrees    {:?}", g.degrees());
        println!(
            "  regular {} complete {} connected {} components {}",
            g.is_regular(),
            g.is_complete(),
            g.is_connected(),
            g.component_count()
        );
        println!("  partners   {:?}", g.partner_classes());
    }
    // a 4-cycle: connected, incomplete and 2-regular
    let cycle = CDGraph::build(&[6, 10, 35, 21])?;
    assert!(cycle.is_connected() && !cycle.is_complete() && cycle.is_regular());
    println!("closed neighborhood of 6: {:?}", cycle.closed_neighborhood(6)?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
