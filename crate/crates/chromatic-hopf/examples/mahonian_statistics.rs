//! Graph statistics on permutations: inversions, descents, the
//! Mahonian statistic, the insertion order and the interpolating code.

use chromatic_hopf::graphs::{
    code, decode, des_set_g, descent_bottoms, insertion_increments, insertion_order, inv_g,
    maj_g, st_g, DyckGraph,
};
use chromatic_hopf::ratfun::q_factorial;
use chromatic_hopf::verify::st_distribution;
use chromatic_hopf::words::{permutations, Permutation};

fn main() {
    let g = DyckGraph::new(vec![2, 3, 5, 5, 5]).unwrap();
    let gg = g.to_graph();
    let sigma = Permutation::new(vec![3, 5, 1, 4, 2]).unwrap();

    println!("graph {}  permutation {}", g, sigma);
    println!("  inv    = {}", inv_g(&gg, &sigma));
    println!("  des    = {:?}", des_set_g(&gg, &sigma));
    println!("  maj    = {}", maj_g(&gg, &sigma));
    println!("  bottoms= {:?}", descent_bottoms(&gg, &sigma));
    println!("  st     = {}", st_g(&gg, &sigma));

    // st is Mahonian: its distribution over S_n is the t-factorial
    assert_eq!(st_distribution(&g), q_factorial(5));
    println!("\nsum of t^st over S_5 = {}   ([5]_t!)", q_factorial(5));

    // inserting n realizes every increment 0..n-1 exactly once
    let g6 = DyckGraph::new(vec![2, 4, 4, 6, 6, 6]).unwrap();
    let s = Permutation::new(vec![5, 2, 3, 1, 4]).unwrap();
    let incs = insertion_increments(&g6, &s).unwrap();
    let order = insertion_order(&g6, &s).unwrap();
    println!("\ninserting 6 into {} on {}:", s, g6);
    println!("  increments by slot: {:?}", incs);
    println!("  visiting order:     {:?}", order);
    for (k, &slot) in order.iter().enumerate() {
        assert_eq!(incs[slot], k);
    }

    // the code interpolates between the Lehmer code and the maj-code
    println!("\ncodes on {}:", g);
    for sigma in permutations(5).into_iter().take(4) {
        let c = code(&g, &sigma);
        assert_eq!(decode(&g, &c).unwrap(), sigma);
        println!("  {} -> {:?}", sigma, c);
    }
}
