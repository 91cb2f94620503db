//! The graph Hopf algebra: shifted concatenation, the t-weighted
//! coproduct, and the morphism property of the chromatic map.

use chromatic_hopf::algebra::{wqsym_m_coproduct_element, wqsym_m_mul, TensorElement, Basis};
use chromatic_hopf::chromatic::{gp_coproduct, gp_product, x_wqsym};
use chromatic_hopf::graphs::{enumerate_dyck, DyckGraph};

fn main() {
    let g = DyckGraph::new(vec![2, 2, 3]).unwrap().to_graph();

    println!("coproduct of the single-edge graph on [3]:");
    for (factors, c) in gp_coproduct(&g, 2).terms() {
        println!("  {} * ({} (x) {})", c, factors[0], factors[1]);
    }

    // X is an algebra morphism: X(G . H) = X(G) X(H)
    let a = DyckGraph::edgeless(1).to_graph();
    let b = DyckGraph::new(vec![2, 2]).unwrap().to_graph();
    let prod = gp_product(&a, &b);
    println!("\nG . H = {}", prod);
    assert_eq!(
        x_wqsym(&prod),
        wqsym_m_mul(&x_wqsym(&a), &x_wqsym(&b)).unwrap()
    );
    println!("X(G . H) = X(G) X(H) holds");

    // ... and a coalgebra morphism for the t-weighted coproduct
    for n in 0..=4 {
        for g in enumerate_dyck(n) {
            let gg = g.to_graph();
            let lhs = wqsym_m_coproduct_element(&x_wqsym(&gg)).unwrap();
            let mut rhs = TensorElement::zero(Basis::WQSymM, Basis::WQSymM);
            for (factors, c) in gp_coproduct(&gg, 2).terms() {
                let t = TensorElement::of(&x_wqsym(&factors[0]), &x_wqsym(&factors[1]));
                rhs = rhs.add(&t.scale(c)).unwrap();
            }
            assert_eq!(lhs, rhs);
        }
        println!("coproduct compatibility checked for all Dyck graphs on [{}]", n);
    }
}
