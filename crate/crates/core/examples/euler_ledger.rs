//! Track the topological Euler characteristic through conifold transitions.

use graded_rings::geometry::{chi_conifold, ConifoldLedger};

fn main() {
    println!("Z_3,3 with 24 nodes resolved: {}", chi_conifold(-144, 24));
    println!("Z_3,3 with 23 nodes resolved: {}", chi_conifold(-144, 23));

    let jerry = ConifoldLedger::new(0).resolve_nodes(12).contract_plane();
    let tom = ConifoldLedger::new(0).resolve_nodes(11).contract_plane();
    for (name, l) in [("12 nodes", &jerry), ("11 nodes", &tom)] {
        let steps: Vec<String> = l.steps.iter().map(|(s, v)| format!("{s} -> {v}")).collect();
        println!("{name}: {}", steps.join(", "));
    }
    println!("difference (11-node side minus 12-node side): {}", tom.current() - jerry.current());
}
