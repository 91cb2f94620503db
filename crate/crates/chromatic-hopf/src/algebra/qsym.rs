//! QSym: the quasi-shuffle product of monomial functions, the
//! fundamental basis, and the commutative image of WQSym.

use super::{AlgebraError, Basis, Element, Key};
use crate::ratfun::RationalFunction;
use crate::words::{evaluation, Composition};
use std::collections::BTreeSet;

/// Overlapping shuffles of two compositions, with multiplicity.
pub fn quasi_shuffle(i: &Composition, j: &Composition) -> Vec<Composition> {
    fn rec(a: &[u8], b: &[u8], cur: &mut Vec<u8>, out: &mut Vec<Composition>) {
        if a.is_empty() {
            let mut whole = cur.clone();
            whole.extend_from_slice(b);
            out.push(Composition::new(whole).unwrap());
            return;
        }
        if b.is_empty() {
            let mut whole = cur.clone();
            whole.extend_from_slice(a);
            out.push(Composition::new(whole).unwrap());
            return;
        }
        cur.push(a[0]);
        rec(&a[1..], b, cur, out);
        cur.pop();
        cur.push(b[0]);
        rec(a, &b[1..], cur, out);
        cur.pop();
        cur.push(a[0] + b[0]);
        rec(&a[1..], &b[1..], cur, out);
        cur.pop();
    }
    let mut out = Vec::new();
    rec(i.parts(), j.parts(), &mut Vec::new(), &mut out);
    out
}

/// Bilinear quasi-shuffle product on the monomial basis of QSym.
pub fn qsym_m_mul(a: &Element, b: &Element) -> Result<Element, AlgebraError> {
    for e in [a, b] {
        if e.basis() != Basis::QSymM {
            return Err(AlgebraError::BasisMismatch(Basis::QSymM.name(), e.basis().name()));
        }
    }
    let mut out = Element::zero(Basis::QSymM);
    for (ka, ca) in a.terms() {
        let i = ka.as_composition()?;
        for (kb, cb) in b.terms() {
            let j = kb.as_composition()?;
            let c = ca * cb;
            for w in quasi_shuffle(&i, &j) {
                out.add_term(Key::from(&w), c.clone());
            }
        }
    }
    Ok(out)
}

fn supersets_within(n: usize, base: &BTreeSet<usize>) -> Vec<BTreeSet<usize>> {
    let free: Vec<usize> = (1..n).filter(|d| !base.contains(d)).collect();
    let mut out = Vec::with_capacity(1 << free.len());
    for mask in 0u32..(1 << free.len()) {
        let mut s = base.clone();
        for (k, &d) in free.iter().enumerate() {
            if mask >> k & 1 == 1 {
                s.insert(d);
            }
        }
        out.push(s);
    }
    out
}

/// `F_I = sum of M_J over J finer than I`.
pub fn f_to_m(x: &Element) -> Result<Element, AlgebraError> {
    if x.basis() != Basis::QSymF {
        return Err(AlgebraError::BasisMismatch(Basis::QSymF.name(), x.basis().name()));
    }
    x.linear_map(Basis::QSymM, |k| {
        let i = k.as_composition()?;
        let n = i.weight();
        let mut out = Element::zero(Basis::QSymM);
        for s in supersets_within(n, &i.descent_set()) {
            out.add_term(Key::from(&Composition::from_descents(n, &s)), RationalFunction::one());
        }
        Ok(out)
    })
}

/// Moebius inverse of [`f_to_m`].
pub fn m_to_f(x: &Element) -> Result<Element, AlgebraError> {
    if x.basis() != Basis::QSymM {
        return Err(AlgebraError::BasisMismatch(Basis::QSymM.name(), x.basis().name()));
    }
    x.linear_map(Basis::QSymF, |k| {
        let i = k.as_composition()?;
        let n = i.weight();
        let des = i.descent_set();
        let mut out = Element::zero(Basis::QSymF);
        for s in supersets_within(n, &des) {
            let sign = if (s.len() - des.len()) % 2 == 0 {
                RationalFunction::one()
            } else {
                -&RationalFunction::one()
            };
            out.add_term(Key::from(&Composition::from_descents(n, &s)), sign);
        }
        Ok(out)
    })
}

/// The commutative image: `M_u` goes to `M_(ev(u))`.
pub fn wqsym_to_qsym(x: &Element) -> Result<Element, AlgebraError> {
    if x.basis() != Basis::WQSymM {
        return Err(AlgebraError::BasisMismatch(Basis::WQSymM.name(), x.basis().name()));
    }
    x.linear_map(Basis::QSymM, |k| {
        Element::from_key(Basis::QSymM, Key::from(&evaluation(k.entries())))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{key, m_elem};
    use crate::words::{compositions, packed_words};

    fn qm(parts: &[u8]) -> Element {
        Element::from_key(Basis::QSymM, Key::new(parts.to_vec())).unwrap()
    }

    #[test]
    fn quasi_shuffle_basics() {
        // M_(1) . M_(1) = 2 M_(1,1) + M_(2)
        let p = qsym_m_mul(&qm(&[1]), &qm(&[1])).unwrap();
        assert_eq!(p.coeff(&Key::new(vec![1, 1])), RationalFunction::from_i64(2));
        assert_eq!(p.coeff(&Key::new(vec![2])), RationalFunction::one());
        assert_eq!(p.term_count(), 2);
        // M_(2,1) . M_(1) = 2 M_(2,1,1) + M_(2,2) + M_(1,2,1) + M_(3,1)
        let q = qsym_m_mul(&qm(&[2, 1]), &qm(&[1])).unwrap();
        assert_eq!(q.coeff(&Key::new(vec![2, 1, 1])), RationalFunction::from_i64(2));
        assert_eq!(q.coeff(&Key::new(vec![2, 2])), RationalFunction::one());
        assert_eq!(q.coeff(&Key::new(vec![1, 2, 1])), RationalFunction::one());
        assert_eq!(q.coeff(&Key::new(vec![3, 1])), RationalFunction::one());
        assert_eq!(q.term_count(), 4);
    }

    #[test]
    fn f_and_m_are_mutually_inverse() {
        assert_eq!(
            f_to_m(&Element::from_key(Basis::QSymF, key("1")).unwrap()).unwrap(),
            qm(&[1])
        );
        for n in 0..=5 {
            for i in compositions(n) {
                let m = Element::from_key(Basis::QSymM, Key::from(&i)).unwrap();
                assert_eq!(f_to_m(&m_to_f(&m).unwrap()).unwrap(), m);
                let f = Element::from_key(Basis::QSymF, Key::from(&i)).unwrap();
                assert_eq!(m_to_f(&f_to_m(&f).unwrap()).unwrap(), f);
            }
        }
        // F_(2) = M_(2) + M_(1,1)
        let f2 = f_to_m(&Element::from_key(Basis::QSymF, Key::new(vec![2])).unwrap()).unwrap();
        assert_eq!(f2.term_count(), 2);
        assert_eq!(f2.coeff(&Key::new(vec![2])), RationalFunction::one());
    }

    #[test]
    fn commutative_image_examples() {
        let x = wqsym_to_qsym(&m_elem("13132")).unwrap();
        assert_eq!(x, qm(&[2, 1, 2]));
        assert_eq!(
            wqsym_to_qsym(&Element::unit(Basis::WQSymM)).unwrap(),
            Element::unit(Basis::QSymM)
        );
    }

    #[test]
    fn commutative_image_is_multiplicative() {
        use crate::algebra::wqsym_m_mul;
        for n1 in 1..=3usize {
            for n2 in 1..=3usize {
                for u in packed_words(n1) {
                    for v in packed_words(n2) {
                        let mu = Element::from_key(Basis::WQSymM, Key::from(&u)).unwrap();
                        let mv = Element::from_key(Basis::WQSymM, Key::from(&v)).unwrap();
                        let lhs = wqsym_to_qsym(&wqsym_m_mul(&mu, &mv).unwrap()).unwrap();
                        let rhs = qsym_m_mul(
                            &wqsym_to_qsym(&mu).unwrap(),
                            &wqsym_to_qsym(&mv).unwrap(),
                        )
                        .unwrap();
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }
}
