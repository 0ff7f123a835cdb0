//! Build the projection graph between the realised families and print it as DOT.

use graded_rings::geometry::{build_web, known_family_counts};
use graded_rings::recognition::{search, RecognitionConfig, SearchQuery};

fn main() {
    let rows = search(&SearchQuery::grid(3..=3, 6..=6, 0..=6, 0..=3), &RecognitionConfig::default());
    let g = build_web(&rows, &known_family_counts());
    eprintln!("{} nodes, {} edges, connected: {}", g.nodes.len(), g.edges.len(), g.is_connected());
    print!("{}", g.to_dot());
}
