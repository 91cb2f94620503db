//! Path graphs: elementary expansions of their LLT polynomials, the
//! sigma/lambda series of the t-1 transform, and the Smirnov-word
//! inverse at t = 1.

use chromatic_hopf::algebra::{wqsym_m_mul, Basis, Element};
use chromatic_hopf::chromatic::{path_llt_checks, x_wqsym};
use chromatic_hopf::graphs::DyckGraph;
use chromatic_hopf::ratfun::QRat;
use chromatic_hopf::transforms::{graded_series_inverse, sigma_series, SeriesKind};

fn main() {
    for n in 1..=5 {
        let checks = path_llt_checks(n).unwrap();
        assert!(checks.llt_lambda && checks.x_lambda);
        println!("path graph on [{}]: Lambda expansions of LLT and X hold", n);
    }

    // sigma_1(A(t-1)) and lambda_-1(A(t-1)) are inverse series
    let deg = 4;
    let sigma: Vec<Element> =
        (0..=deg).map(|k| sigma_series(SeriesKind::Sigma1TMinusOne, k)).collect();
    let lambda: Vec<Element> =
        (0..=deg).map(|k| sigma_series(SeriesKind::LambdaMinus1TMinusOne, k)).collect();
    println!("\nsigma_1(A(t-1)) degree 2: {}", sigma[2]);
    println!("lambda_-1(A(t-1)) degree 2: {}", lambda[2]);
    for n in 0..=deg {
        let mut acc = Element::zero(Basis::WQSymM);
        for k in 0..=n {
            acc = acc.add(&wqsym_m_mul(&sigma[k], &lambda[n - k]).unwrap()).unwrap();
        }
        assert_eq!(acc.is_zero(), n != 0);
    }
    println!("sigma . lambda = 1 through degree {}", deg);

    // at t = 1 the chromatic series of the paths sums the Smirnov
    // words, whose inverse is the alternating sum of constant words
    let one = QRat::from_integer(1.into());
    let components: Vec<Element> = (0..=deg)
        .map(|k| {
            x_wqsym(&DyckGraph::path(k).to_graph())
                .evaluate_coeffs(&one)
                .unwrap()
        })
        .collect();
    let inverse = graded_series_inverse(&components).unwrap();
    for (n, inv) in inverse.iter().enumerate().skip(1) {
        println!("degree {} of the inverse: {}", n, inv);
        assert_eq!(inv.term_count(), 1);
    }
}
