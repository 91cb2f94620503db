//! WSym, symmetric functions in noncommuting variables: the monomial
//! basis on set partitions, its product, and the triangular basis
//! supported on nonnesting partitions via denesting fibers.

use super::{AlgebraError, Basis, Element, Key};
use crate::partitions::{set_partitions, SetPartition};
use crate::ratfun::RationalFunction;
use crate::words::pack;
use std::collections::BTreeMap;

fn partition_key(p: &SetPartition) -> Key {
    Key::new(p.word().letters().to_vec())
}

fn key_partition(k: &Key) -> Result<SetPartition, AlgebraError> {
    SetPartition::from_letters(k.entries().to_vec())
        .map_err(|_| AlgebraError::InvalidKey(Basis::WSymM.name(), k.entries().to_vec()))
}

/// Support of `m_p . m_q`: partitions whose parts are parts of `p`,
/// parts of the shifted `q`, or a union of one of each.
fn m_mul_keys(p: &SetPartition, q: &SetPartition) -> Vec<SetPartition> {
    let shift = p.n();
    let left = p.blocks();
    let right: Vec<Vec<usize>> = q
        .blocks()
        .into_iter()
        .map(|b| b.into_iter().map(|x| x + shift).collect())
        .collect();
    // enumerate partial injective matchings of right blocks into left blocks
    let mut out = Vec::new();
    let mut assignment: Vec<Option<usize>> = vec![None; right.len()];
    fn rec(
        left: &[Vec<usize>],
        right: &[Vec<usize>],
        r: usize,
        used: &mut Vec<bool>,
        assignment: &mut Vec<Option<usize>>,
        out: &mut Vec<SetPartition>,
    ) {
        if r == right.len() {
            let mut blocks: Vec<Vec<usize>> = Vec::new();
            let mut merged: Vec<Vec<usize>> = left.to_vec();
            for (rb, a) in assignment.iter().enumerate() {
                match a {
                    Some(l) => merged[*l].extend(right[rb].iter().copied()),
                    None => blocks.push(right[rb].clone()),
                }
            }
            blocks.extend(merged);
            out.push(SetPartition::from_blocks(&blocks));
            return;
        }
        assignment[r] = None;
        rec(left, right, r + 1, used, assignment, out);
        for l in 0..left.len() {
            if !used[l] {
                used[l] = true;
                assignment[r] = Some(l);
                rec(left, right, r + 1, used, assignment, out);
                assignment[r] = None;
                used[l] = false;
            }
        }
    }
    let mut used = vec![false; left.len()];
    rec(&left, &right, 0, &mut used, &mut assignment, &mut out);
    out
}

/// Bilinear product on the monomial basis of WSym.
pub fn wsym_m_mul(a: &Element, b: &Element) -> Result<Element, AlgebraError> {
    for e in [a, b] {
        if e.basis() != Basis::WSymM {
            return Err(AlgebraError::BasisMismatch(Basis::WSymM.name(), e.basis().name()));
        }
    }
    let mut out = Element::zero(Basis::WSymM);
    for (ka, ca) in a.terms() {
        let p = key_partition(ka)?;
        for (kb, cb) in b.terms() {
            let q = key_partition(kb)?;
            let c = ca * cb;
            for r in m_mul_keys(&p, &q) {
                out.add_term(partition_key(&r), c.clone());
            }
        }
    }
    Ok(out)
}

/// Denesting fiber of a nonnesting partition: all partitions whose
/// denesting is `pi`.
pub fn denesting_fiber(pi: &SetPartition) -> Vec<SetPartition> {
    set_partitions(pi.n()).into_iter().filter(|p| p.denest() == *pi).collect()
}

/// Expand the triangular basis in the monomial basis:
/// `mt_pi = sum of m over the denesting fiber of pi`.
pub fn mt_to_m(x: &Element) -> Result<Element, AlgebraError> {
    if x.basis() != Basis::WSymMt {
        return Err(AlgebraError::BasisMismatch(Basis::WSymMt.name(), x.basis().name()));
    }
    x.linear_map(Basis::WSymM, |k| {
        let pi = key_partition(k)?;
        let mut out = Element::zero(Basis::WSymM);
        for p in denesting_fiber(&pi) {
            out.add_term(partition_key(&p), RationalFunction::one());
        }
        Ok(out)
    })
}

/// Solve for the triangular-basis coordinates of a monomial-basis
/// element; fails when the element is outside the span (the fibers of
/// denesting partition the monomial basis, so membership amounts to
/// coefficient constancy on each fiber).
pub fn m_to_mt(x: &Element) -> Result<Element, AlgebraError> {
    if x.basis() != Basis::WSymM {
        return Err(AlgebraError::BasisMismatch(Basis::WSymM.name(), x.basis().name()));
    }
    let mut coords: BTreeMap<Key, RationalFunction> = BTreeMap::new();
    for (k, c) in x.terms() {
        let pi = key_partition(k)?.denest();
        let key = partition_key(&pi);
        if let Some(existing) = coords.get(&key) {
            if existing != c {
                return Err(AlgebraError::NotInSpan(format!(
                    "conflicting coefficients on the fiber of {}",
                    pi
                )));
            }
        } else {
            coords.insert(key, c.clone());
        }
    }
    // every fiber member must actually be present
    let mut out = Element::zero(Basis::WSymMt);
    for (k, c) in coords {
        let pi = key_partition(&k)?;
        for p in denesting_fiber(&pi) {
            if x.coeff(&partition_key(&p)) != c {
                return Err(AlgebraError::NotInSpan(format!(
                    "missing fiber member {} of {}",
                    p, pi
                )));
            }
        }
        out.add_term(k, c);
    }
    Ok(out)
}

/// Push a WQSym element with constant coefficients into WSym by
/// grouping words with the same equal-letter pattern; fails when some
/// orbit has unequal coefficients.
pub fn wsym_from_wqsym(x: &Element) -> Result<Element, AlgebraError> {
    if x.basis() != Basis::WQSymM {
        return Err(AlgebraError::BasisMismatch(Basis::WQSymM.name(), x.basis().name()));
    }
    let mut groups: BTreeMap<Key, RationalFunction> = BTreeMap::new();
    for (k, c) in x.terms() {
        let pi = SetPartition::from_word(&k.as_packed()?);
        let key = partition_key(&pi);
        if let Some(existing) = groups.get(&key) {
            if existing != c {
                return Err(AlgebraError::NotInSpan(format!(
                    "orbit of {} has unequal coefficients",
                    pi
                )));
            }
        } else {
            groups.insert(key, c.clone());
        }
    }
    let mut out = Element::zero(Basis::WSymM);
    for (k, c) in groups {
        // all orderings of the blocks must appear
        let pi = key_partition(&k)?;
        let m = pi.word().max_letter() as usize;
        let mut count = 0usize;
        for sigma in crate::words::permutations(m) {
            let relabeled: Vec<u8> =
                pi.word().letters().iter().map(|&a| sigma.letters()[(a - 1) as usize]).collect();
            let w = pack(&relabeled);
            if x.coeff(&Key::new(w.letters().to_vec())) == c {
                count += 1;
            }
        }
        if count != (1..=m).product::<usize>() {
            return Err(AlgebraError::NotInSpan(format!(
                "orbit of {} is incomplete",
                pi
            )));
        }
        out.add_term(k, c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::key;
    use crate::graphs::catalan;
    use crate::partitions::nonnesting_partitions;

    fn m(digits: &str) -> Element {
        Element::from_key(Basis::WSymM, key(digits)).unwrap()
    }

    fn mt(digits: &str) -> Element {
        Element::from_key(Basis::WSymMt, key(digits)).unwrap()
    }

    fn m_sum(words: &[&str]) -> Element {
        let mut e = Element::zero(Basis::WSymM);
        for w in words {
            e.add_term(key(w), RationalFunction::one());
        }
        e
    }

    #[test]
    fn product_reference_examples() {
        // m_1 . m_1123 and m_1123 . m_1
        assert_eq!(
            wsym_m_mul(&m("1"), &m("1123")).unwrap(),
            m_sum(&["12234", "11123", "12213", "12231"])
        );
        assert_eq!(
            wsym_m_mul(&m("1123"), &m("1")).unwrap(),
            m_sum(&["11234", "11233", "11232", "11231"])
        );
        let unit = Element::unit(Basis::WSymM);
        assert_eq!(wsym_m_mul(&unit, &m("121")).unwrap(), m("121"));
    }

    #[test]
    fn mt_expansions_match_reference() {
        assert_eq!(mt_to_m(&mt("1223")).unwrap(), m_sum(&["1223", "1221"]));
        assert_eq!(mt_to_m(&mt("12334")).unwrap(), m_sum(&["12334", "12331", "12332"]));
        assert_eq!(mt_to_m(&mt("12233")).unwrap(), m_sum(&["12233", "12211"]));
        // fiber of 12324, computed by brute force rather than transcribed
        assert_eq!(mt_to_m(&mt("12324")).unwrap(), m_sum(&["12324", "12321"]));
    }

    #[test]
    fn mt_round_trip_and_span_detection() {
        for n in 0..=5 {
            for pi in nonnesting_partitions(n) {
                let e = Element::from_key(Basis::WSymMt, partition_key(&pi)).unwrap();
                assert_eq!(m_to_mt(&mt_to_m(&e).unwrap()).unwrap(), e);
            }
        }
        // 1221 alone is not in the span
        assert!(m_to_mt(&m("1221")).is_err());
        // 1223 alone is not (its fiber also contains 1221)
        assert!(m_to_mt(&m("1223")).is_err());
        // but the fiber sum is
        assert!(m_to_mt(&m_sum(&["1223", "1221"])).is_ok());
    }

    #[test]
    fn mt_span_is_closed_under_multiplication() {
        // degree <= 6, nonnegative integer structure constants
        for n1 in 1..=3usize {
            for n2 in 1..=(6 - n1).min(3) {
                for p1 in nonnesting_partitions(n1) {
                    for p2 in nonnesting_partitions(n2) {
                        let a = Element::from_key(Basis::WSymMt, partition_key(&p1)).unwrap();
                        let b = Element::from_key(Basis::WSymMt, partition_key(&p2)).unwrap();
                        let prod =
                            wsym_m_mul(&mt_to_m(&a).unwrap(), &mt_to_m(&b).unwrap()).unwrap();
                        let back = m_to_mt(&prod).expect("product stays in the span");
                        for (_, c) in back.terms() {
                            let v = c
                                .evaluate(&crate::ratfun::QRat::from_integer(0.into()))
                                .unwrap();
                            assert!(c.is_polynomial());
                            assert!(v >= crate::ratfun::QRat::from_integer(0.into()));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn graded_dimensions_are_catalan() {
        for n in 1..=6 {
            assert_eq!(nonnesting_partitions(n).len(), catalan(n));
        }
    }

    #[test]
    fn wqsym_push_examples() {
        use crate::algebra::m_elem;
        // M_121 + M_212 collapses to m_121
        let mut x = Element::zero(Basis::WQSymM);
        x.add_term(key("121"), RationalFunction::one());
        x.add_term(key("212"), RationalFunction::one());
        assert_eq!(wsym_from_wqsym(&x).unwrap(), m("121"));
        // a lone ordering is rejected
        assert!(wsym_from_wqsym(&m_elem("121")).is_err());
    }
}
