//! Recognise a Hilbert series as a weighted embedding and inspect the result.

use graded_rings::orbifold::{assemble, standard_basket, InitialData};
use graded_rings::recognition::{analyse, recognize, RecognitionConfig};

fn main() {
    let p = assemble(InitialData { p1: 3, p2: 6 }, &standard_basket(4, 1)).unwrap();
    let c = recognize(&p, &RecognitionConfig::default()).expect("recognisable");
    println!("{}", c.describe());
    println!("numerator {}", c.numerator);
    println!("k = {}, codimension {}, A^3 = {}", c.k, c.codim, c.degree_a3);
    println!("equations {:?}", c.equation_degrees);
    println!("syzygies  {:?}", c.syzygy_degrees);

    // Without hints the greedy loop over-shoots here; the basket-driven retry finds P(1^6,3^2).
    let d = InitialData { p1: 6, p2: 21 };
    let basket = standard_basket(2, 0);
    let plain = recognize(&assemble(d, &basket).unwrap(), &RecognitionConfig::default());
    println!("\nplain greedy on (6, 21, 2 x 1/3): {:?}", plain.map(|c| c.describe()));
    let a = analyse(d, &basket, &Default::default(), &RecognitionConfig::default()).unwrap();
    let c = a.candidate().unwrap();
    println!("with the retry ladder: {} ({})", c.describe(), a.status());
}
