// Normal-subgroup enumeration, centers, and table-backed quotient groups.

use ccsgraph::{catalog::Family, DEFAULT_ORDER_CAP};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let s4 = Family::Symmetric(4).build(DEFAULT_ORDER_CAP)?;
    let normals = s4.normal_subgroups();
    println!("S4 has {} normal subgroups of orders {:?}", normals.len(),
        normals.iter().map(|n| n.order()).collect::<Vec<_>>());

    let klein = &normals[1];
    let q = s4.quotient_group(klein)?;
    println!("S4 / V4: order {}, abelian {}", q.order(), q.is_abelian());
    for a in 0..q.order() {
        let row: Vec<usize> = (0..q.order()).map(|b| q.mul(a, b)).collect();
        println!("  {:<10} {:?}", q.label(a), row);
    }
    assert!(q.check_axioms());

    let d8 = Family::Dihedral(8).build(DEFAULT_ORDER_CAP)?;
    let z = d8.center();
    let dz = d8.quotient_group(&z)?;
    println!("D8 / Z(D8): order {}, abelian {}", dz.order(), dz.is_abelian());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
