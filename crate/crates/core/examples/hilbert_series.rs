//! Assemble a Hilbert series from h^0(A), h^0(2A) and a basket, then read off A^3.

use graded_rings::orbifold::{assemble, Basket, InitialData};
use num_traits::ToPrimitive;

fn main() {
    let basket: Basket = "4x1/3(1,1,1),1x1/5(1,1,3)".parse().expect("basket");
    let p = assemble(InitialData { p1: 3, p2: 6 }, &basket).expect("registered singularities");
    println!("P(t) = {p}");
    println!("first terms: {}", p.expand(10));

    let two_points: Basket = "2x1/3(1,1,1)".parse().unwrap();
    let q = assemble(InitialData { p1: 6, p2: 21 }, &two_points).unwrap();
    let (order, a3) = q.leading_coefficient_at_one().unwrap();
    println!("\nP(t) = {q}\npole of order {order}, A^3 = {a3}");
    for m in [50usize, 100, 200] {
        let c = q.expand(m).coefficient(m).to_f64().unwrap();
        println!("  6 c_{m} / {m}^3 = {:.5}", 6.0 * c / (m as f64).powi(3));
    }
}
