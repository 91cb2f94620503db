//! Enumerate Dyck graphs and move between their three encodings:
//! Hessenberg vector, edge list and staircase diagram.

use chromatic_hopf::graphs::{enumerate_dyck, DyckGraph};

fn main() {
    for n in 0..=4 {
        println!("Dyck graphs on [{}]: {} = Catalan({})", n, enumerate_dyck(n).len(), n);
    }

    println!("\nAll Dyck graphs on [3]:");
    for g in enumerate_dyck(3) {
        let edges: Vec<String> = g.edges().iter().map(|(i, j)| format!("{}-{}", i, j)).collect();
        println!("  {}  edges=[{}]  diagram={}", g, edges.join(","), g.to_diagram());
    }

    // the three encodings are interchangeable
    let g = DyckGraph::new(vec![2, 3, 5, 5, 5]).unwrap();
    println!("\n{}:", g);
    println!("  edges   = {:?}", g.edges());
    println!("  diagram = {}", g.to_diagram());
    let back = DyckGraph::from_diagram(&g.to_diagram()).unwrap();
    assert_eq!(back, g);
    println!("  diagram -> graph round trip ok");

    println!("  mirror  = {}", g.mirror());
    assert_eq!(g.mirror().mirror(), g);

    let h = DyckGraph::path(2);
    println!("  {} . {} = {}", g, h, g.shifted_concat(&h));
}
