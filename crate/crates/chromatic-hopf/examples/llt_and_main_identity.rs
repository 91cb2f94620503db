//! Unicellular LLT polynomials and the identity relating them to the
//! chromatic functions through the 1/(t-1) alphabet.

use chromatic_hopf::chromatic::{
    llt_wqsym, main_identity_check, x2llt_check, x_wqsym,
};
use chromatic_hopf::graphs::enumerate_dyck;
use chromatic_hopf::ratfun::{t_minus_one, RationalFunction};
use chromatic_hopf::transforms::{wqsym_transform, VirtualAlphabet};

fn main() {
    for g in enumerate_dyck(2) {
        println!("LLT({}) = {}", g, llt_wqsym(&g.to_graph()));
    }

    // (t-1)^n X_G(t, A/(t-1)) written out once, step by step
    let g = enumerate_dyck(2)[1].clone(); // the edge graph
    let x = x_wqsym(&g.to_graph());
    println!("\nX({}) = {}", g, x);
    let transformed = wqsym_transform(&x, &VirtualAlphabet::one_over_t_minus_one()).unwrap();
    println!("X(A/(t-1)) = {}", transformed);
    let scaled = transformed.scale(&RationalFunction::from_poly(t_minus_one()).pow(2));
    println!("(t-1)^2 X(A/(t-1)) = {}", scaled);
    assert_eq!(scaled, llt_wqsym(&g.to_graph()));

    for n in 0..=4 {
        let mut checked = 0;
        for g in enumerate_dyck(n) {
            assert!(main_identity_check(&g).unwrap());
            assert!(x2llt_check(&g).unwrap());
            checked += 1;
        }
        println!(
            "n = {}: (t-1)^n X(A/(t-1)) = LLT and its commutative image hold for {} graphs",
            n, checked
        );
    }
}
