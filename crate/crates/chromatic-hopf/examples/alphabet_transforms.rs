//! Virtual alphabets and their transforms: closed-form
//! specializations, the QSym and WQSym transforms, and inverse pairs.

use chromatic_hopf::algebra::{Basis, Element, Key};
use chromatic_hopf::transforms::{
    qsym_transform, specialize_m, wqsym_transform, VirtualAlphabet,
};
use chromatic_hopf::words::Composition;

fn main() {
    let alphabets = [
        VirtualAlphabet::one_over_one_minus_t(),
        VirtualAlphabet::one_over_t_minus_one(),
        VirtualAlphabet::one_minus_t(),
        VirtualAlphabet::t_minus_one(),
    ];
    println!("Values of the monomial functions on the built-in alphabets:");
    for i in [vec![1], vec![2], vec![1, 1], vec![2, 1], vec![1, 2]] {
        let comp = Composition::new(i.clone()).unwrap();
        print!("  M_{:?}:", i);
        for a in &alphabets {
            print!("  {} -> {}", a.name(), specialize_m(a, &comp));
        }
        println!();
    }

    // a transform and its inverse compose to the identity
    let m = Element::from_key(Basis::QSymM, Key::new(vec![1, 2])).unwrap();
    let fwd = qsym_transform(&m, &VirtualAlphabet::one_over_one_minus_t()).unwrap();
    println!("\nM[(1,2)] under X/(1-t): {}", fwd);
    let back = qsym_transform(&fwd, &VirtualAlphabet::one_minus_t()).unwrap();
    assert_eq!(back, m);
    println!("... and back under X(1-t): {}", back);

    // the WQSym transform refines the QSym one
    let u = Element::from_key(Basis::WQSymM, Key::new(vec![2, 1, 2])).unwrap();
    let img = wqsym_transform(&u, &VirtualAlphabet::t_minus_one()).unwrap();
    println!("\nM[212] under A(t-1): {}", img);
    let back = wqsym_transform(&img, &VirtualAlphabet::one_over_t_minus_one()).unwrap();
    assert_eq!(back, u);
    println!("inverse transform recovers M[212]");

    // user-defined alphabets are ordinary closures
    let squares = VirtualAlphabet::custom("t->t^2 of (t-1)", |i| {
        let base = VirtualAlphabet::t_minus_one().value_on_m(i);
        // substitute t := t^2 by reinterpreting the coefficient sequence
        let stretch = |p: &chromatic_hopf::ratfun::Poly| {
            let mut coeffs = Vec::new();
            for c in p.coeffs() {
                coeffs.push(c.clone());
                coeffs.push(chromatic_hopf::ratfun::QRat::from_integer(0.into()));
            }
            chromatic_hopf::ratfun::Poly::new(coeffs)
        };
        chromatic_hopf::ratfun::RationalFunction::new(
            stretch(base.numerator()),
            stretch(base.denominator()),
        )
        .unwrap()
    });
    let v = specialize_m(&squares, &Composition::new(vec![1]).unwrap());
    println!("\ncustom alphabet value on M_(1): {}", v);
}
