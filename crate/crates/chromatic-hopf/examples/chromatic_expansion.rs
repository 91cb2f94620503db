//! Expand chromatic functions of small Dyck graphs in the monomial,
//! Phi, PhiCheck and quasi-symmetric bases.

use chromatic_hopf::algebra::{phi_to_m, wqsym_to_qsym};
use chromatic_hopf::chromatic::{sw_f_expansion, x_phi, x_phicheck, x_qsym, x_wqsym};
use chromatic_hopf::graphs::{enumerate_dyck, DyckGraph};

fn main() {
    println!("Noncommutative chromatic functions of the 3-vertex Dyck graphs:\n");
    for g in enumerate_dyck(3) {
        println!("X({}) = {}", g, x_wqsym(&g.to_graph()));
    }

    let g = DyckGraph::new(vec![2, 2, 3]).unwrap();
    println!("\nThe single-edge graph {} in other bases:", g);
    println!("  Phi basis:      {}", x_phi(&g));
    println!("  PhiCheck basis: {}", x_phicheck(&g));
    println!("  QSym monomial:  {}", x_qsym(&g.to_graph()));
    println!("  QSym fundamental: {}", sw_f_expansion(&g));

    // the Phi expansion is an exact rewriting of the monomial one
    assert_eq!(phi_to_m(&x_phi(&g)).unwrap(), x_wqsym(&g.to_graph()));
    println!("\nPhi expansion agrees with the direct monomial expansion.");

    // and the commutative image recovers the quasi-symmetric function
    assert_eq!(wqsym_to_qsym(&x_wqsym(&g.to_graph())).unwrap(), x_qsym(&g.to_graph()));
    println!("Commutative image agrees with the direct QSym expansion.");
}
