//! Build skew matrices from text, compute maximal Pfaffians, test Tom and Jerry formats.

use graded_rings::pfaffian::{maximal_pfaffians, parse_format_file, satisfies, Format};

const TOM: &str = "
var x 1
var y 1
var z 1
var t 3
var u 3
var v 3
var w 5
matrix = [ x, y*z*(y - z) + u, y^3, z^3 ;
              t, -v, -u ;
                 x^2*t, w + z^2*v ;
                    w ]
ideal = t, u, v, w
";

fn main() {
    let f = parse_format_file(TOM).expect("valid file");
    let m = f.matrix.as_ref().unwrap();
    let ideal = f.ideal().unwrap();
    for (i, p) in maximal_pfaffians(m).iter().enumerate() {
        println!("Pf_{} = {p}", i + 1);
    }
    let formats = (1..=5).map(Format::Tom).chain((1..=5).flat_map(|i| (i + 1..=5).map(move |j| Format::Jerry(i, j))));
    let hits: Vec<String> = formats.filter(|&fmt| satisfies(m, &ideal, fmt)).map(|f| f.to_string()).collect();
    println!("formats: {}", hits.join(", "));
}
