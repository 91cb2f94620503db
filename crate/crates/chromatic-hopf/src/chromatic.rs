//! Chromatic quasi-symmetric functions and unicellular LLT polynomials,
//! commutative and noncommutative, the graph Hopf algebra operations,
//! and the expansion theorems into the Phi, PhiCheck, triangular-WSym
//! and fundamental bases.

use crate::algebra::{
    f_to_m, m_to_f, m_to_mt, phi_to_m, phicheck_to_m, wqsym_m_mul, wqsym_to_qsym,
    wsym_from_wqsym, AlgebraError, Basis, Element, Key, TensorElement,
};
use crate::graphs::{asc, enumerate_dyck, min_g, min_g_prime, DyckGraph, LabeledGraph};
use crate::partitions::{eta, eta_inverse, nonnesting_partitions, SetPartition};
use crate::ratfun::{QRat, RationalFunction};
use crate::transforms::{wqsym_transform, VirtualAlphabet};
use crate::words::{
    compositions, evaluation, packed_words, permutations, Composition,
};
use std::collections::BTreeMap;

/// The noncommutative chromatic function: proper packed colorings
/// weighted by `t^asc`, in the M basis of WQSym.
pub fn x_wqsym(g: &LabeledGraph) -> Element {
    let mut out = Element::zero(Basis::WQSymM);
    for c in packed_words(g.n()) {
        if crate::graphs::is_proper(g, c.letters()).unwrap() {
            let a = asc(g, c.letters()).unwrap();
            out.add_term(Key::from(&c), RationalFunction::t_power(a));
        }
    }
    out
}

/// The chromatic quasi-symmetric function in the monomial basis.
pub fn x_qsym(g: &LabeledGraph) -> Element {
    let mut out = Element::zero(Basis::QSymM);
    for c in packed_words(g.n()) {
        if crate::graphs::is_proper(g, c.letters()).unwrap() {
            let a = asc(g, c.letters()).unwrap();
            out.add_term(Key::from(&evaluation(c.letters())), RationalFunction::t_power(a));
        }
    }
    out
}

/// The noncommutative unicellular LLT polynomial: all packed words
/// weighted by `t^asc`.
pub fn llt_wqsym(g: &LabeledGraph) -> Element {
    let mut out = Element::zero(Basis::WQSymM);
    for c in packed_words(g.n()) {
        let a = asc(g, c.letters()).unwrap();
        out.add_term(Key::from(&c), RationalFunction::t_power(a));
    }
    out
}

/// The unicellular LLT polynomial in the monomial basis of QSym.
pub fn llt_qsym(g: &LabeledGraph) -> Element {
    let mut out = Element::zero(Basis::QSymM);
    for c in packed_words(g.n()) {
        let a = asc(g, c.letters()).unwrap();
        out.add_term(Key::from(&evaluation(c.letters())), RationalFunction::t_power(a));
    }
    out
}

/// Shifted concatenation, the product of the graph Hopf algebra.
pub fn gp_product(g: &LabeledGraph, h: &LabeledGraph) -> LabeledGraph {
    g.shifted_concat(h)
}

/// A formal sum of `r`-tuples of graphs with coefficients in Q(t).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GraphTensor {
    terms: BTreeMap<Vec<LabeledGraph>, RationalFunction>,
}

impl GraphTensor {
    pub fn zero() -> Self {
        GraphTensor { terms: BTreeMap::new() }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<LabeledGraph>, &RationalFunction)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, factors: &[LabeledGraph]) -> RationalFunction {
        self.terms.get(factors).cloned().unwrap_or_else(RationalFunction::zero)
    }

    fn add_term(&mut self, factors: Vec<LabeledGraph>, coeff: RationalFunction) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(factors).or_insert_with(RationalFunction::zero);
        *entry = &*entry + &coeff;
        if entry.is_zero() {
            let key: Vec<LabeledGraph> = self
                .terms
                .iter()
                .find(|(_, c)| c.is_zero())
                .map(|(k, _)| k.clone())
                .unwrap();
            self.terms.remove(&key);
        }
    }
}

/// The `r`-fold coproduct of the graph Hopf algebra: restrictions to
/// the color classes of every coloring by `1..=r`, weighted by
/// `t^asc`.
pub fn gp_coproduct(g: &LabeledGraph, r: usize) -> GraphTensor {
    assert!(r >= 1, "coproduct arity must be at least 1");
    let n = g.n();
    let mut out = GraphTensor::zero();
    let mut w = vec![1u8; n];
    loop {
        let a = asc(g, &w).unwrap();
        let mut factors = Vec::with_capacity(r);
        for color in 1..=r as u8 {
            let verts: Vec<usize> =
                (1..=n).filter(|&v| w[v - 1] == color).collect();
            factors.push(g.restrict(&verts).unwrap());
        }
        out.add_term(factors, RationalFunction::t_power(a));
        // next word in [r]^n
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            if w[i] < r as u8 {
                w[i] += 1;
                break;
            }
            w[i] = 1;
            i += 1;
        }
    }
}

/// The main comparison: `(t-1)^n X_G(t, A/(t-1))` against the LLT sum.
pub fn main_identity_check(g: &DyckGraph) -> Result<bool, AlgebraError> {
    let n = g.n();
    let gg = g.to_graph();
    let transformed =
        wqsym_transform(&x_wqsym(&gg), &VirtualAlphabet::one_over_t_minus_one())?;
    let scale = RationalFunction::from_poly(crate::ratfun::t_minus_one()).pow(n);
    Ok(transformed.scale(&scale) == llt_wqsym(&gg))
}

/// Phi expansion of the chromatic function over permutations.
pub fn x_phi(g: &DyckGraph) -> Element {
    let gg = g.to_graph();
    let mut out = Element::zero(Basis::WQSymPhi);
    for sigma in permutations(g.n()) {
        let a = asc(&gg, sigma.letters()).unwrap();
        out.add_term(Key::from(&min_g(&gg, &sigma)), RationalFunction::t_power(a));
    }
    out
}

/// PhiCheck expansion of the chromatic function.
pub fn x_phicheck(g: &DyckGraph) -> Element {
    let gg = g.to_graph();
    let mut out = Element::zero(Basis::WQSymPhiCheck);
    for sigma in permutations(g.n()) {
        let a = asc(&gg, sigma.letters()).unwrap();
        out.add_term(Key::from(&min_g_prime(&gg, &sigma)), RationalFunction::t_power(a));
    }
    out
}

/// PhiCheck expansion of the LLT polynomial: ascents of `G` against
/// the minimal words of the edgeless graph.
pub fn llt_phicheck(g: &DyckGraph) -> Element {
    let gg = g.to_graph();
    let edgeless = LabeledGraph::edgeless(g.n());
    let mut out = Element::zero(Basis::WQSymPhiCheck);
    for sigma in permutations(g.n()) {
        let a = asc(&gg, sigma.letters()).unwrap();
        out.add_term(
            Key::from(&min_g_prime(&edgeless, &sigma)),
            RationalFunction::t_power(a),
        );
    }
    out
}

/// The nonnesting partition whose diagram encodes `g`.
pub fn graph_partition(g: &DyckGraph) -> SetPartition {
    eta_inverse(&g.to_diagram())
}

/// The `t = 1` expansion in the triangular basis: the sum of `mt` over
/// nonnesting partitions below the partition of `g` in diagram order.
pub fn x1_mt(g: &DyckGraph) -> Element {
    let pi_g = eta(&graph_partition(g)).unwrap();
    let mut out = Element::zero(Basis::WSymMt);
    for pi in nonnesting_partitions(g.n()) {
        if pi_g.contains(&eta(&pi).unwrap()).unwrap() {
            out.add_term(Key::new(pi.word().letters().to_vec()), RationalFunction::one());
        }
    }
    out
}

fn rank_over_q(mut rows: Vec<Vec<QRat>>) -> usize {
    use num::Zero;
    let cols = rows.first().map(|r| r.len()).unwrap_or(0);
    let mut rank = 0usize;
    let mut row = 0usize;
    for col in 0..cols {
        let pivot = (row..rows.len()).find(|&r| !rows[r][col].is_zero());
        let Some(p) = pivot else { continue };
        rows.swap(row, p);
        let inv = QRat::new(
            rows[row][col].denom().clone(),
            rows[row][col].numer().clone(),
        );
        for c in col..cols {
            let v = &rows[row][c] * &inv;
            rows[row][c] = v;
        }
        for r in 0..rows.len() {
            if r != row && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in col..cols {
                    let v = &rows[r][c] - &factor * &rows[row][c];
                    rows[r][c] = v;
                }
            }
        }
        row += 1;
        rank += 1;
        if row == rows.len() {
            break;
        }
    }
    rank
}

/// Rank of the set of `t = 1` chromatic functions of all Dyck graphs
/// on `[n]`, computed in the monomial basis of WSym over Q.
pub fn rank_at_t1(n: usize) -> Result<usize, AlgebraError> {
    let columns: Vec<Key> = crate::partitions::set_partitions(n)
        .into_iter()
        .map(|p| Key::new(p.word().letters().to_vec()))
        .collect();
    let index: BTreeMap<Key, usize> =
        columns.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
    let one = QRat::from_integer(1.into());
    let mut rows = Vec::new();
    for g in enumerate_dyck(n) {
        let x1 = x_wqsym(&g.to_graph()).evaluate_coeffs(&one)?;
        let m = wsym_from_wqsym(&x1)?;
        let mut row = vec![QRat::from_integer(0.into()); columns.len()];
        for (k, c) in m.terms() {
            row[index[k]] = c.evaluate(&one)?;
        }
        rows.push(row);
    }
    Ok(rank_over_q(rows))
}

/// The fundamental-basis expansion over permutations: graph inversions
/// against the conjugates of the graph descent compositions.
pub fn sw_f_expansion(g: &DyckGraph) -> Element {
    let gg = g.to_graph();
    let n = g.n();
    let mut out = Element::zero(Basis::QSymF);
    for sigma in permutations(n) {
        let inv = crate::graphs::inv_g(&gg, &sigma);
        let des = crate::graphs::des_set_g(&gg, &sigma);
        let comp = Composition::from_descents(n, &des).conjugate();
        out.add_term(Key::from(&comp), RationalFunction::t_power(inv));
    }
    out
}

/// Results of the path-graph identity checks at a given size.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PathChecks {
    /// `LLT(path) = sum over I of (t-1)^(n - l(I)) Lambda^I`.
    pub llt_lambda: bool,
    /// `X(path) = sum over I of (t-1)^(-l(I)) Lambda^I(A(t-1))`.
    pub x_lambda: bool,
}

/// Verify the closed expansions of the path-graph chromatic and LLT
/// functions in terms of products of strictly increasing words.
pub fn path_llt_checks(n: usize) -> Result<PathChecks, AlgebraError> {
    let path = DyckGraph::path(n).to_graph();
    let tm1 = RationalFunction::from_poly(crate::ratfun::t_minus_one());
    let alphabet = VirtualAlphabet::t_minus_one();

    let lambda_image = |i: &Composition| -> Result<Element, AlgebraError> {
        let mut acc = Element::unit(Basis::WQSymM);
        for &p in i.parts() {
            let increasing = Key::new((1..=p).collect());
            acc = wqsym_m_mul(&acc, &Element::from_key(Basis::WQSymM, increasing)?)?;
        }
        Ok(acc)
    };

    let mut llt_sum = Element::zero(Basis::WQSymM);
    let mut x_sum = Element::zero(Basis::WQSymM);
    for i in compositions(n) {
        let l = i.length();
        let img = lambda_image(&i)?;
        llt_sum = llt_sum.add(&img.scale(&tm1.pow(n - l)))?;
        let transformed = wqsym_transform(&img, &alphabet)?;
        x_sum = x_sum.add(&transformed.scale(&tm1.pow(l).inverse()?))?;
    }
    Ok(PathChecks {
        llt_lambda: llt_sum == llt_wqsym(&path),
        x_lambda: x_sum == x_wqsym(&path),
    })
}

/// `X_G(t, X)` equals `(t-1)^(-n) LLT_G(t, (t-1)X)` in QSym.
pub fn x2llt_check(g: &DyckGraph) -> Result<bool, AlgebraError> {
    let gg = g.to_graph();
    let n = g.n();
    let llt = llt_qsym(&gg);
    let transformed =
        crate::transforms::qsym_transform(&llt, &VirtualAlphabet::t_minus_one())?;
    let scale = RationalFunction::from_poly(crate::ratfun::t_minus_one()).pow(n).inverse()?;
    Ok(transformed.scale(&scale) == x_qsym(&gg))
}

/// `X_G(t, 1/(t-1)) = (t-1)^(-n)` exactly.
pub fn dyck_specialization_check(g: &DyckGraph) -> Result<bool, AlgebraError> {
    let gg = g.to_graph();
    let alphabet = VirtualAlphabet::one_over_t_minus_one();
    let mut acc = RationalFunction::zero();
    for (k, c) in x_qsym(&gg).terms() {
        acc = &acc + &(c * &alphabet.value_on_m(&k.as_composition()?));
    }
    let expected =
        RationalFunction::from_poly(crate::ratfun::t_minus_one()).pow(g.n()).inverse()?;
    Ok(acc == expected)
}

/// Rearranging the parts of a composition must not change the
/// coefficient: the chromatic function of a Dyck graph is symmetric.
pub fn symmetry_check(g: &DyckGraph) -> Result<bool, AlgebraError> {
    let x = x_qsym(&g.to_graph());
    let mut canonical: BTreeMap<Vec<u8>, RationalFunction> = BTreeMap::new();
    for (k, c) in x.terms() {
        let mut sorted = k.entries().to_vec();
        sorted.sort_unstable();
        match canonical.get(&sorted) {
            None => {
                canonical.insert(sorted, c.clone());
            }
            Some(existing) => {
                if existing != c {
                    return Ok(false);
                }
            }
        }
    }
    // every rearrangement class must be fully present
    for (sorted, c) in &canonical {
        let mut parts = sorted.clone();
        // iterate distinct permutations of the multiset
        parts.sort_unstable();
        loop {
            if x.coeff(&Key::new(parts.clone())) != *c {
                return Ok(false);
            }
            if !next_permutation(&mut parts) {
                break;
            }
        }
    }
    Ok(true)
}

fn next_permutation(v: &mut [u8]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// All five noncommutative Hopf-morphism statements for one pair:
/// multiplicativity of `x_wqsym` under shifted concatenation.
pub fn hopf_mul_check(g: &DyckGraph, h: &DyckGraph) -> Result<bool, AlgebraError> {
    let prod = gp_product(&g.to_graph(), &h.to_graph());
    let lhs = x_wqsym(&prod);
    let rhs = wqsym_m_mul(&x_wqsym(&g.to_graph()), &x_wqsym(&h.to_graph()))?;
    Ok(lhs == rhs)
}

/// Comultiplicativity with the `t`-weights of the graph coproduct:
/// the coproduct of `x_wqsym(G)` equals `(x (x) x)` of the graph
/// coproduct.
pub fn hopf_comul_check(g: &DyckGraph) -> Result<bool, AlgebraError> {
    let gg = g.to_graph();
    let lhs = crate::algebra::wqsym_m_coproduct_element(&x_wqsym(&gg))?;
    let mut rhs = TensorElement::zero(Basis::WQSymM, Basis::WQSymM);
    for (factors, c) in gp_coproduct(&gg, 2).terms() {
        let left = x_wqsym(&factors[0]);
        let right = x_wqsym(&factors[1]);
        rhs = rhs.add(&TensorElement::of(&left, &right).scale(c))?;
    }
    Ok(lhs == rhs)
}

/// Coefficient-wise equality of the Phi route with the direct M-basis
/// computation.
pub fn phi_route_check(g: &DyckGraph) -> Result<bool, AlgebraError> {
    let direct = x_wqsym(&g.to_graph());
    Ok(phi_to_m(&x_phi(g))? == direct
        && phicheck_to_m(&x_phicheck(g))? == direct
        && phicheck_to_m(&llt_phicheck(g))? == llt_wqsym(&g.to_graph()))
}

/// The `t = 1` route through WSym agrees with the diagram-order sum.
pub fn mt_route_check(g: &DyckGraph) -> Result<bool, AlgebraError> {
    let one = QRat::from_integer(1.into());
    let x1 = x_wqsym(&g.to_graph()).evaluate_coeffs(&one)?;
    let direct = m_to_mt(&wsym_from_wqsym(&x1)?)?;
    Ok(direct == x1_mt(g))
}

/// The fundamental-basis route agrees with the monomial route.
pub fn sw_route_check(g: &DyckGraph) -> Result<bool, AlgebraError> {
    let via_m = wqsym_to_qsym(&x_wqsym(&g.to_graph()))?;
    Ok(f_to_m(&sw_f_expansion(g))? == via_m && m_to_f(&via_m)? == sw_f_expansion(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::key;
    use crate::graphs::catalan;
    use crate::words::Permutation;

    fn dyck(h: &[u8]) -> DyckGraph {
        DyckGraph::new(h.to_vec()).unwrap()
    }

    fn t_pow(k: usize) -> RationalFunction {
        RationalFunction::t_power(k)
    }

    fn elem(basis: Basis, terms: &[(&str, usize)]) -> Element {
        let mut e = Element::zero(basis);
        for (w, a) in terms {
            e.add_term(key(w), t_pow(*a));
        }
        e
    }

    #[test]
    fn x_wqsym_reference_expansions() {
        // one vertex
        assert_eq!(x_wqsym(&DyckGraph::edgeless(1).to_graph()), elem(Basis::WQSymM, &[("1", 0)]));
        // two vertices
        assert_eq!(
            x_wqsym(&DyckGraph::edgeless(2).to_graph()),
            elem(Basis::WQSymM, &[("11", 0), ("12", 0), ("21", 0)])
        );
        assert_eq!(
            x_wqsym(&dyck(&[2, 2]).to_graph()),
            elem(Basis::WQSymM, &[("12", 1), ("21", 0)])
        );
        // all packed words of length 3 for the edgeless graph
        let x3 = x_wqsym(&DyckGraph::edgeless(3).to_graph());
        assert_eq!(x3.term_count(), 13);
        assert!(x3.terms().all(|(_, c)| c.is_one()));
        // single edge (1,2)
        assert_eq!(
            x_wqsym(&dyck(&[2, 2, 3]).to_graph()),
            elem(
                Basis::WQSymM,
                &[
                    ("121", 1),
                    ("122", 1),
                    ("123", 1),
                    ("132", 1),
                    ("211", 0),
                    ("212", 0),
                    ("213", 0),
                    ("231", 1),
                    ("312", 0),
                    ("321", 0),
                ]
            )
        );
        // single edge (2,3)
        assert_eq!(
            x_wqsym(&dyck(&[1, 3, 3]).to_graph()),
            elem(
                Basis::WQSymM,
                &[
                    ("112", 1),
                    ("121", 0),
                    ("123", 1),
                    ("132", 0),
                    ("212", 1),
                    ("213", 1),
                    ("221", 0),
                    ("231", 0),
                    ("312", 1),
                    ("321", 0),
                ]
            )
        );
        // path
        assert_eq!(
            x_wqsym(&dyck(&[2, 3, 3]).to_graph()),
            elem(
                Basis::WQSymM,
                &[
                    ("121", 1),
                    ("123", 2),
                    ("132", 1),
                    ("212", 1),
                    ("213", 1),
                    ("231", 1),
                    ("312", 1),
                    ("321", 0),
                ]
            )
        );
        // complete
        assert_eq!(
            x_wqsym(&DyckGraph::complete(3).to_graph()),
            elem(
                Basis::WQSymM,
                &[("123", 3), ("132", 2), ("213", 2), ("231", 1), ("312", 1), ("321", 0)]
            )
        );
    }

    #[test]
    fn llt_reference_expansions() {
        assert_eq!(
            llt_wqsym(&dyck(&[2, 2]).to_graph()),
            elem(Basis::WQSymM, &[("11", 0), ("12", 1), ("21", 0)])
        );
        // at t = 1 the LLT sum is the full packed-word sum
        let one = QRat::from_integer(1.into());
        let l = llt_wqsym(&dyck(&[2, 3, 3]).to_graph()).evaluate_coeffs(&one).unwrap();
        assert_eq!(l.term_count(), 13);
        assert!(l.terms().all(|(_, c)| c.is_one()));
        // commutative image
        let g = dyck(&[2, 2, 3]).to_graph();
        assert_eq!(wqsym_to_qsym(&llt_wqsym(&g)).unwrap(), llt_qsym(&g));
        // every coefficient is a single power of t
        for g in enumerate_dyck(4) {
            for (_, c) in llt_wqsym(&g.to_graph()).terms() {
                assert!(c.as_monomial().is_some());
            }
        }
    }

    #[test]
    fn product_reference_examples() {
        // X(1-vertex) X(edgeless-2) = X(edgeless-3)
        let one_v = DyckGraph::edgeless(1).to_graph();
        let e2 = DyckGraph::edgeless(2).to_graph();
        assert!(hopf_mul_check(&DyckGraph::edgeless(1), &DyckGraph::edgeless(2)).unwrap());
        // X(1-vertex) X(edge-2) = X(edge (2,3) on 3)
        let prod = gp_product(&one_v, &dyck(&[2, 2]).to_graph());
        assert_eq!(prod, dyck(&[1, 3, 3]).to_graph());
        assert_eq!(
            wqsym_m_mul(&x_wqsym(&one_v), &x_wqsym(&dyck(&[2, 2]).to_graph())).unwrap(),
            x_wqsym(&prod)
        );
        let _ = e2;
    }

    #[test]
    fn coproduct_reference_example() {
        // the displayed coproduct of the single-edge 3-vertex graph,
        // with its (1+t) coefficients
        let g = dyck(&[2, 2, 3]).to_graph();
        let cop = gp_coproduct(&g, 2);
        let empty = LabeledGraph::edgeless(0);
        let v1 = LabeledGraph::edgeless(1);
        let e2un = LabeledGraph::edgeless(2);
        let e2deux = dyck(&[2, 2]).to_graph();
        let one = RationalFunction::one();
        let one_plus_t = &one + &RationalFunction::t();
        assert_eq!(cop.coeff(&[g.clone(), empty.clone()]), one);
        assert_eq!(cop.coeff(&[empty.clone(), g.clone()]), one);
        assert_eq!(cop.coeff(&[v1.clone(), e2un.clone()]), one_plus_t);
        assert_eq!(cop.coeff(&[e2un.clone(), v1.clone()]), one_plus_t);
        assert_eq!(cop.coeff(&[v1.clone(), e2deux.clone()]), one);
        assert_eq!(cop.coeff(&[e2deux.clone(), v1.clone()]), one);
        assert_eq!(cop.term_count(), 6);
        assert!(hopf_comul_check(&dyck(&[2, 2, 3])).unwrap());
    }

    #[test]
    fn cocommutative_at_t_one() {
        let one = QRat::from_integer(1.into());
        for n in 0..=4 {
            for g in enumerate_dyck(n) {
                let cop = gp_coproduct(&g.to_graph(), 2);
                for (factors, c) in cop.terms() {
                    let swapped = vec![factors[1].clone(), factors[0].clone()];
                    assert_eq!(
                        cop.coeff(&swapped).evaluate(&one).unwrap(),
                        c.evaluate(&one).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn main_identity_small() {
        for n in 0..=3 {
            for g in enumerate_dyck(n) {
                assert!(main_identity_check(&g).unwrap(), "main identity for {}", g);
            }
        }
    }

    #[test]
    fn x2llt_small() {
        for n in 0..=4 {
            for g in enumerate_dyck(n) {
                assert!(x2llt_check(&g).unwrap(), "X2LLT for {}", g);
            }
        }
    }

    #[test]
    fn dyck_specialization_small() {
        for n in 1..=4 {
            for g in enumerate_dyck(n) {
                assert!(dyck_specialization_check(&g).unwrap(), "specialization for {}", g);
            }
        }
    }

    #[test]
    fn phi_reference_expansions() {
        // X(edge-2) = t Phi_12 + Phi_21
        assert_eq!(x_phi(&dyck(&[2, 2])), elem(Basis::WQSymPhi, &[("12", 1), ("21", 0)]));
        // X(single edge (1,2) on 3)
        assert_eq!(
            x_phi(&dyck(&[2, 2, 3])),
            elem(
                Basis::WQSymPhi,
                &[("122", 1), ("121", 1), ("212", 0), ("231", 1), ("211", 0), ("321", 0)]
            )
        );
        // all five 3-vertex graphs, as displayed
        assert_eq!(
            x_phi(&DyckGraph::edgeless(3)),
            elem(
                Basis::WQSymPhi,
                &[("111", 0), ("121", 0), ("212", 0), ("221", 0), ("211", 0), ("321", 0)]
            )
        );
        assert_eq!(
            x_phi(&dyck(&[1, 3, 3])),
            elem(
                Basis::WQSymPhi,
                &[("112", 1), ("121", 0), ("212", 1), ("221", 0), ("312", 1), ("321", 0)]
            )
        );
        assert_eq!(
            x_phi(&dyck(&[2, 3, 3])),
            elem(
                Basis::WQSymPhi,
                &[("123", 2), ("121", 1), ("212", 1), ("231", 1), ("312", 1), ("321", 0)]
            )
        );
        assert_eq!(
            x_phi(&DyckGraph::complete(3)),
            elem(
                Basis::WQSymPhi,
                &[("123", 3), ("132", 2), ("213", 2), ("231", 1), ("312", 1), ("321", 0)]
            )
        );
    }

    #[test]
    fn phicheck_reference_expansions() {
        // X in the PhiCheck basis for the four non-complete graphs
        assert_eq!(
            x_phicheck(&DyckGraph::edgeless(3)),
            elem(
                Basis::WQSymPhiCheck,
                &[("123", 0), ("122", 0), ("112", 0), ("121", 0), ("212", 0), ("111", 0)]
            )
        );
        assert_eq!(
            x_phicheck(&dyck(&[2, 2, 3])),
            elem(
                Basis::WQSymPhiCheck,
                &[("123", 1), ("122", 1), ("213", 0), ("121", 1), ("212", 0), ("211", 0)]
            )
        );
        // the displayed expansion with the typo corrected: t PhiC_112
        assert_eq!(
            x_phicheck(&dyck(&[1, 3, 3])),
            elem(
                Basis::WQSymPhiCheck,
                &[("123", 1), ("132", 0), ("112", 1), ("121", 0), ("212", 1), ("221", 0)]
            )
        );
        // the displayed expansion with the duplicated-key typo
        // corrected: the missing term is t PhiC_213
        assert_eq!(
            x_phicheck(&dyck(&[2, 3, 3])),
            elem(
                Basis::WQSymPhiCheck,
                &[("123", 2), ("132", 1), ("213", 1), ("121", 1), ("212", 1), ("321", 0)]
            )
        );
    }

    #[test]
    fn llt_phicheck_reference_expansions() {
        assert_eq!(
            llt_phicheck(&DyckGraph::edgeless(3)),
            elem(
                Basis::WQSymPhiCheck,
                &[("123", 0), ("122", 0), ("112", 0), ("121", 0), ("212", 0), ("111", 0)]
            )
        );
        assert_eq!(
            llt_phicheck(&dyck(&[2, 2, 3])),
            elem(
                Basis::WQSymPhiCheck,
                &[("123", 1), ("122", 1), ("112", 0), ("121", 1), ("212", 0), ("111", 0)]
            )
        );
        assert_eq!(
            llt_phicheck(&dyck(&[1, 3, 3])),
            elem(
                Basis::WQSymPhiCheck,
                &[("123", 1), ("122", 0), ("112", 1), ("121", 0), ("212", 1), ("111", 0)]
            )
        );
        assert_eq!(
            llt_phicheck(&dyck(&[2, 3, 3])),
            elem(
                Basis::WQSymPhiCheck,
                &[("123", 2), ("122", 1), ("112", 1), ("121", 1), ("212", 1), ("111", 0)]
            )
        );
    }

    #[test]
    fn phi_routes_agree_small() {
        for n in 0..=4 {
            for g in enumerate_dyck(n) {
                assert!(phi_route_check(&g).unwrap(), "phi routes for {}", g);
            }
        }
        // Phi-positivity: single powers of t
        for g in enumerate_dyck(4) {
            for (_, c) in x_phi(&g).terms() {
                assert!(c.as_monomial().is_some());
            }
        }
    }

    #[test]
    fn contribution_bookkeeping_example() {
        // the 6-vertex graph with edges 12,23,24,34,45,46,56
        let g = dyck(&[2, 4, 4, 6, 6, 6]);
        let sigma = Permutation::new(vec![3, 1, 4, 6, 5, 2]).unwrap();
        let gg = g.to_graph();
        assert_eq!(asc(&gg, sigma.letters()).unwrap(), 3);
        assert_eq!(
            min_g(&gg, &sigma),
            crate::words::PackedWord::new(vec![2, 1, 2, 3, 2, 1]).unwrap()
        );
        // and the mirrored contribution on the fundamental side
        let tau = Permutation::new(vec![4, 5, 3, 1, 6, 2]).unwrap();
        assert_eq!(crate::graphs::inv_g(&gg, &tau), 3);
        let des = crate::graphs::des_set_g(&gg, &tau);
        let comp = Composition::from_descents(6, &des).conjugate();
        assert_eq!(comp.parts(), &[2, 3, 1]);
    }

    #[test]
    fn x1_mt_reference_expansions() {
        let mt = |terms: &[&str]| {
            let mut e = Element::zero(Basis::WSymMt);
            for w in terms {
                e.add_term(key(w), RationalFunction::one());
            }
            e
        };
        assert_eq!(x1_mt(&DyckGraph::edgeless(1)), mt(&["1"]));
        assert_eq!(x1_mt(&DyckGraph::edgeless(2)), mt(&["11", "12"]));
        assert_eq!(x1_mt(&dyck(&[2, 2])), mt(&["12"]));
        assert_eq!(
            x1_mt(&DyckGraph::edgeless(3)),
            mt(&["111", "112", "122", "121", "123"])
        );
        assert_eq!(x1_mt(&dyck(&[2, 2, 3])), mt(&["122", "121", "123"]));
        assert_eq!(x1_mt(&dyck(&[1, 3, 3])), mt(&["112", "121", "123"]));
        assert_eq!(x1_mt(&dyck(&[2, 3, 3])), mt(&["121", "123"]));
        assert_eq!(x1_mt(&DyckGraph::complete(3)), mt(&["123"]));
    }

    #[test]
    fn mt_routes_agree_small() {
        for n in 1..=4 {
            for g in enumerate_dyck(n) {
                assert!(mt_route_check(&g).unwrap(), "mt route for {}", g);
            }
        }
    }

    #[test]
    fn rank_small() {
        assert_eq!(rank_at_t1(1).unwrap(), 1);
        assert_eq!(rank_at_t1(3).unwrap(), 5);
        assert_eq!(rank_at_t1(4).unwrap(), catalan(4));
    }

    #[test]
    fn sw_routes_agree_small() {
        for n in 1..=4 {
            for g in enumerate_dyck(n) {
                assert!(sw_route_check(&g).unwrap(), "F-expansion route for {}", g);
            }
        }
        // complete graph: no graph descents, so every permutation
        // contributes on the conjugate of (n), and inv_G is Mahonian
        let complete = DyckGraph::complete(3);
        let f = sw_f_expansion(&complete);
        assert_eq!(f.term_count(), 1);
        assert_eq!(f.coeff(&Key::new(vec![1, 1, 1])), crate::ratfun::q_factorial(3));
    }

    #[test]
    fn path_identities_small() {
        for n in 1..=4 {
            let checks = path_llt_checks(n).unwrap();
            assert!(checks.llt_lambda, "LLT Lambda expansion at n = {}", n);
            assert!(checks.x_lambda, "X Lambda expansion at n = {}", n);
        }
    }

    #[test]
    fn symmetry_small() {
        for n in 1..=4 {
            for g in enumerate_dyck(n) {
                assert!(symmetry_check(&g).unwrap(), "symmetry for {}", g);
            }
        }
    }
}
