//! Search the baskets n x 1/3(1,1,1) + m x 1/5(1,1,3) for P1 = 3, P2 = 6.

use graded_rings::recognition::{search, Analysis, RecognitionConfig, SearchQuery};

fn main() {
    let rows = search(&SearchQuery::grid(3..=3, 6..=6, 0..=6, 0..=3), &RecognitionConfig::default());
    for m in 0..=3 {
        for n in 0..=6 {
            let row = rows.iter().find(|r| r.n == n && r.m == m).unwrap();
            let cell = match &row.analysis {
                Analysis::Embedded(c) => c.describe(),
                Analysis::NonArising { .. } => "(does not arise)".into(),
                _ => "codim >= 5".into(),
            };
            println!("n={n} m={m}  {cell}");
        }
    }
}
