//! Fit equation and syzygy degrees to a Gorenstein numerator.

use graded_rings::orbifold::{assemble, standard_basket, InitialData};
use graded_rings::recognition::{fit_resolution_shape, recognize, sign_changes, RecognitionConfig};

fn main() {
    for (n, m) in [(2, 0), (2, 2), (1, 2)] {
        let p1p2 = if (n, m) == (2, 0) { (6, 21) } else { (3, 6) };
        let hints = if (n, m) == (2, 0) { vec![3, 3] } else { vec![] };
        let p = assemble(InitialData { p1: p1p2.0, p2: p1p2.1 }, &standard_basket(n, m)).unwrap();
        let c = recognize(&p, &RecognitionConfig::default().with_hints(hints)).unwrap();
        let fit = fit_resolution_shape(&c.numerator, c.k, c.codim).unwrap();
        println!("{}  numerator {}", c.describe(), c.numerator);
        println!(
            "  sign changes {}, {} candidate shapes, {} balanced",
            sign_changes(&c.numerator),
            fit.candidates.len(),
            fit.ambiguity()
        );
        println!("  equations {:?}\n  syzygies  {:?}", fit.best().equations, fit.best().syzygies);
    }
}
