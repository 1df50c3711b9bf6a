// G-conjugacy class sizes cs_G(N) for every normal subgroup N of a few groups,
// with the central subgroups N ∩ Z(G) and Z(N).

use ccsgraph::{catalog::Family, ClassData, DEFAULT_ORDER_CAP};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for name in ["S3", "S4", "D8", "Aff5", "D8xC3"] {
        let g = Family::parse(name)?.build(DEFAULT_ORDER_CAP)?;
        println!("{name} (order {})", g.order());
        for (k, n) in g.normal_subgroups().iter().enumerate() {
            let cd = ClassData::compute(&g, n)?;
            println!(
                "  N[{k}] |N| = {:<3} |N∩Z(G)| = {:<2} |Z(N)| = {:<2} cs_G(N) = {:?}",
                n.order(),
                cd.normal_cap_center().order(),
                cd.center_of_normal().order(),
                cd.cs_values()
            );
        }
    }

    let s4 = Family::Symmetric(4).build(DEFAULT_ORDER_CAP)?;
    let a4 = s4.normal_subgroups().into_iter().find(|n| n.order() == 12).unwrap();
    let cd = ClassData::compute(&s4, &a4)?;
    assert_eq!(cd.cs_values(), &[1, 3, 8]);
    for c in cd.classes() {
        println!("  A4 in S4: {} has a class of size {}", s4.label(c.representative), c.size);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
