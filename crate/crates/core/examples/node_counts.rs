//! Count nodes two ways: weighted Bezout over complete-intersection pieces and determinantal length.

use graded_rings::geometry::{
    determinantal_length, standard_choice_nodes, DeterminantalData, DivisorPieces, WeightedPlane,
};

fn main() {
    let p2 = WeightedPlane::projective();
    let p113 = WeightedPlane::new(1, 1, 3).unwrap();
    let d = DivisorPieces { name: "D".into(), plane: p2, pairs: vec![(3, 3); 3] };
    let e = DivisorPieces { name: "E".into(), plane: p113, pairs: vec![(3, 3), (3, 5), (3, 5)] };
    let report = standard_choice_nodes(&[d, e], 3).unwrap();
    println!("{:?}, shared {}, total {}", report.counts, report.shared, report.total);
    println!("left on D after unprojecting E: {:?}", report.surviving_on("D"));

    for (cols, plane) in [([2, 2, 2], p2), ([3, 3, 3], p2), ([5, 3, 3], p113)] {
        let dd = DeterminantalData { row_degrees: [0, 0], col_degrees: cols, plane };
        println!("2x3 matrix with column degrees {cols:?} on {plane}: length {}", determinantal_length(&dd).unwrap());
    }
}
