//! Symmetric functions in noncommuting variables: set partitions,
//! denesting, the triangular basis, and the rank argument showing the
//! chromatic map separates Dyck graphs.

use chromatic_hopf::algebra::{m_to_mt, mt_to_m, Basis, Element, Key};
use chromatic_hopf::chromatic::{graph_partition, rank_at_t1, x1_mt};
use chromatic_hopf::graphs::{catalan, enumerate_dyck};
use chromatic_hopf::partitions::{eta, nonnesting_partitions, SetPartition};

fn main() {
    // denesting sends every set partition to a nonnesting one
    let pi = SetPartition::from_letters(vec![1, 2, 2, 1]).unwrap();
    println!("dn({}) = {}", pi, pi.denest());
    for n in 1..=5 {
        println!(
            "nonnesting partitions of [{}]: {} = Catalan({})",
            n,
            nonnesting_partitions(n).len(),
            n
        );
    }

    // the triangular basis sums denesting fibers
    let mt = Element::from_key(Basis::WSymMt, Key::new(vec![1, 2, 2, 3])).unwrap();
    println!("\nmt[1223] = {}", mt_to_m(&mt).unwrap());
    assert_eq!(m_to_mt(&mt_to_m(&mt).unwrap()).unwrap(), mt);

    // nonnesting partitions match diagrams in the staircase
    for pi in nonnesting_partitions(3) {
        println!("eta({}) = {}", pi, eta(&pi).unwrap());
    }

    // each Dyck graph has a t = 1 expansion supported on an interval
    println!();
    for g in enumerate_dyck(3) {
        println!("X({})(1) = {}   (top partition {})", g, x1_mt(&g), graph_partition(&g));
    }

    // those expansions are linearly independent: the rank is Catalan
    for n in 1..=5 {
        let r = rank_at_t1(n).unwrap();
        assert_eq!(r, catalan(n));
        println!("rank of the t=1 chromatic span at n = {}: {}", n, r);
    }
}
