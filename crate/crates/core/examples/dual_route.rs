//! Reach the same Hilbert series by unprojecting planes from a complete intersection.

use graded_rings::geometry::{ci_series, numerator_over, unproject_term, WeightedPlane};
use graded_rings::orbifold::{assemble, standard_basket, InitialData};
use graded_rings::series::WeightVector;

fn w(v: &[u32]) -> WeightVector {
    WeightVector::new(v.to_vec()).unwrap()
}

fn main() {
    let p2 = WeightedPlane::projective();
    let z = ci_series(&w(&[1; 6]), &[3, 3]);
    let y = z.add(&unproject_term(p2, 3));
    let x = y.add(&unproject_term(p2, 3));
    println!("Y: numerator over P(1^6,3): {}", numerator_over(&y, &w(&[1, 1, 1, 1, 1, 1, 3])).unwrap());
    println!("X: numerator over P(1^6,3^2): {}", numerator_over(&x, &w(&[1, 1, 1, 1, 1, 1, 3, 3])).unwrap());
    let rr = assemble(InitialData { p1: 6, p2: 21 }, &standard_basket(2, 0)).unwrap();
    println!("X agrees with the orbifold series: {}", x.equals(&rr));

    let z66 = ci_series(&w(&[1, 1, 1, 3, 3, 3]), &[6, 6]);
    let both = z66.add(&unproject_term(p2, 3)).add(&unproject_term(WeightedPlane::new(1, 1, 3).unwrap(), 5));
    let rr = assemble(InitialData { p1: 3, p2: 6 }, &standard_basket(4, 1)).unwrap();
    println!("Z_6,6 plus two unprojections agrees with (3, 6, 4 x 1/3 + 1/5): {}", both.equals(&rr));
}
