//! Degree calculus for 5x5 skew matrices: entry weights, Pfaffian degrees, numerators.

use graded_rings::pfaffian::{numerator_overlaps, pfaffian_numerator, solve_entry_weights, SkewDegreeMatrix5};

fn main() {
    for text in ["1,1,2,2;1,2,2;2,2;3", "1,3,3,3;3,3,3;5,5;5", "2,2,2,2;2,2,2;2,2;2"] {
        let d: SkewDegreeMatrix5 = text.parse().unwrap();
        let w = solve_entry_weights(&d).unwrap();
        let n = pfaffian_numerator(&w.pfaffian_degrees, w.k).unwrap();
        println!("{d}");
        println!("  Pfaffian degrees {:?}, k = {}", w.pfaffian_degrees, w.k);
        println!("  numerator {n}  ({} cancelling pairs)", numerator_overlaps(&w.pfaffian_degrees, w.k));
    }
    let bad: SkewDegreeMatrix5 = "1,1,2,2;1,2,2;2,2;4".parse().unwrap();
    println!("{bad}: {}", solve_entry_weights(&bad).unwrap_err());
}
