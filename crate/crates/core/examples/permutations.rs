// Permutations in cycle notation, the composition convention, and closing a
// generating set into a full group.

use ccsgraph::{FiniteGroup, Permutation, DEFAULT_ORDER_CAP};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let p = Permutation::parse("(1 2)", 3)?;
    let q = Permutation::parse("(2 3)", 3)?;
    // q is applied first: 1 -> 1 -> 2, 2 -> 3 -> 3, 3 -> 2 -> 1
    let pq = p.compose(&q)?;
    println!("(1 2)·(2 3) = {pq}, images {:?}", pq.images());
    assert_eq!(pq, Permutation::parse("(1 2 3)", 3)?);

    let gens = [Permutation::parse("(1 2 3 4)", 4)?, Permutation::parse("(1 3)", 4)?];
    let d8 = FiniteGroup::generate(4, &gens, DEFAULT_ORDER_CAP)?;
    println!("<(1 2 3 4), (1 3)> has order {}", d8.order());
    for x in 0..d8.order() {
        println!("  [{x}] {:<12} order {}", d8.label(x), d8.element_order(x));
    }
    let r = d8.index_of(&gens[0]).expect("generator is an element");
    println!("r^-1 = {}", d8.label(d8.power(r, -1)));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
