//! Products, coproducts and internal products on WQSym and its graded
//! dual, plus the multiplicative Phi bases and the duality pairing.

use super::{AlgebraError, Basis, Element, Key, TensorElement};
use crate::ratfun::RationalFunction;
use crate::words::{
    bar, biletter_pack, dst_words, pack, standardize, strong_refinement_set, Composition,
    PackedWord, Permutation,
};

fn combinations(pool: &[u8], k: usize) -> Vec<Vec<u8>> {
    if k > pool.len() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(pool: &[u8], start: usize, k: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..pool.len() {
            if pool.len() - i < k - cur.len() {
                break;
            }
            cur.push(pool[i]);
            rec(pool, i + 1, k, cur, out);
            cur.pop();
        }
    }
    rec(pool, 0, k, &mut cur, &mut out);
    out
}

/// Support of the convolution product `M_u M_v`: all packed words that
/// concatenate a word packing to `u` with one packing to `v`.
pub fn wqsym_m_mul_keys(u: &PackedWord, v: &PackedWord) -> Vec<PackedWord> {
    let m1 = u.max_letter() as usize;
    let m2 = v.max_letter() as usize;
    let mut out = Vec::new();
    for m in m1.max(m2)..=m1 + m2 {
        let values: Vec<u8> = (1..=m as u8).collect();
        for a in combinations(&values, m1) {
            let forced: Vec<u8> = values.iter().copied().filter(|x| !a.contains(x)).collect();
            if forced.len() > m2 {
                continue;
            }
            for extra in combinations(&a, m2 - forced.len()) {
                let mut b = forced.clone();
                b.extend(extra);
                b.sort_unstable();
                let mut w = Vec::with_capacity(u.len() + v.len());
                w.extend(u.letters().iter().map(|&x| a[(x - 1) as usize]));
                w.extend(v.letters().iter().map(|&x| b[(x - 1) as usize]));
                out.push(PackedWord::new(w).expect("convolution word is packed"));
            }
        }
    }
    out
}

/// Bilinear extension of the `M` basis product of WQSym.
pub fn wqsym_m_mul(a: &Element, b: &Element) -> Result<Element, AlgebraError> {
    for e in [a, b] {
        if e.basis() != Basis::WQSymM {
            return Err(AlgebraError::BasisMismatch(Basis::WQSymM.name(), e.basis().name()));
        }
    }
    let mut out = Element::zero(Basis::WQSymM);
    for (ka, ca) in a.terms() {
        let u = ka.as_packed()?;
        for (kb, cb) in b.terms() {
            let v = kb.as_packed()?;
            let c = ca * cb;
            for w in wqsym_m_mul_keys(&u, &v) {
                out.add_term(Key::from(&w), c.clone());
            }
        }
    }
    Ok(out)
}

/// Coproduct of `M_u`: split the letter values at each threshold.
pub fn wqsym_m_coproduct(u: &PackedWord) -> Vec<(PackedWord, PackedWord)> {
    let m = u.max_letter();
    (0..=m)
        .map(|k| {
            let left: Vec<u8> = u.letters().iter().copied().filter(|&a| a <= k).collect();
            let right: Vec<u8> =
                u.letters().iter().copied().filter(|&a| a > k).map(|a| a - k).collect();
            (
                PackedWord::new(left).expect("lower letters stay packed"),
                PackedWord::new(right).expect("upper letters repack"),
            )
        })
        .collect()
}

/// Linear extension of the coproduct to WQSym elements.
pub fn wqsym_m_coproduct_element(x: &Element) -> Result<TensorElement, AlgebraError> {
    if x.basis() != Basis::WQSymM {
        return Err(AlgebraError::BasisMismatch(Basis::WQSymM.name(), x.basis().name()));
    }
    let mut out = TensorElement::zero(Basis::WQSymM, Basis::WQSymM);
    for (k, c) in x.terms() {
        for (l, r) in wqsym_m_coproduct(&k.as_packed()?) {
            out.add_term(Key::from(&l), Key::from(&r), c.clone());
        }
    }
    Ok(out)
}

/// Internal product `N_u * N_v = N_(pack of the biletter word)`;
/// defined within one homogeneous component only.
pub fn n_internal(a: &Element, b: &Element) -> Result<Element, AlgebraError> {
    for e in [a, b] {
        if e.basis() != Basis::WQSymDualN {
            return Err(AlgebraError::BasisMismatch(Basis::WQSymDualN.name(), e.basis().name()));
        }
    }
    let mut out = Element::zero(Basis::WQSymDualN);
    for (ka, ca) in a.terms() {
        for (kb, cb) in b.terms() {
            if ka.len() != kb.len() {
                return Err(AlgebraError::DegreeMismatch(ka.len(), kb.len()));
            }
            let w = biletter_pack(ka.entries(), kb.entries())?;
            out.add_term(Key::from(&w), ca * cb);
        }
    }
    Ok(out)
}

/// The embedding of Sym into WQSym*: the sum of `N_u` over packed
/// words of evaluation `I`.
pub fn hat_s(i: &Composition) -> Element {
    let mut out = Element::zero(Basis::WQSymDualN);
    let mut counts: Vec<u8> = i.parts().to_vec();
    let n: usize = i.weight();
    let mut word = Vec::with_capacity(n);
    fn rec(counts: &mut Vec<u8>, word: &mut Vec<u8>, n: usize, out: &mut Element) {
        if word.len() == n {
            out.add_term(Key::new(word.clone()), RationalFunction::one());
            return;
        }
        for a in 0..counts.len() {
            if counts[a] > 0 {
                counts[a] -= 1;
                word.push(a as u8 + 1);
                rec(counts, word, n, out);
                word.pop();
                counts[a] += 1;
            }
        }
    }
    rec(&mut counts, &mut word, n, &mut out);
    out
}

/// Key-wise right action of a permutation on WQSym*.
pub fn n_right_action(x: &Element, sigma: &Permutation) -> Result<Element, AlgebraError> {
    if x.basis() != Basis::WQSymDualN {
        return Err(AlgebraError::BasisMismatch(Basis::WQSymDualN.name(), x.basis().name()));
    }
    let mut out = Element::zero(Basis::WQSymDualN);
    for (k, c) in x.terms() {
        let u = k.as_packed()?;
        out.add_term(Key::from(&u.act(sigma)?), c.clone());
    }
    Ok(out)
}

/// The Hopf inclusion of FQSym into WQSym on a single permutation:
/// `G_sigma = sum of M_u over words standardizing to sigma`.
pub fn iota_perm(sigma: &Permutation) -> Element {
    let mut out = Element::zero(Basis::WQSymM);
    for u in dst_words(sigma) {
        out.add_term(Key::from(&u), RationalFunction::one());
    }
    out
}

/// Linear extension of [`iota_perm`] to FQSym G-basis elements.
pub fn iota(x: &Element) -> Result<Element, AlgebraError> {
    if x.basis() != Basis::FQSymG {
        return Err(AlgebraError::BasisMismatch(Basis::FQSymG.name(), x.basis().name()));
    }
    x.linear_map(Basis::WQSymM, |k| Ok(iota_perm(&k.as_permutation()?)))
}

/// Expand Phi-basis elements in the M basis:
/// `Phi_u = sum of M_v over v strongly finer than u`.
pub fn phi_to_m(x: &Element) -> Result<Element, AlgebraError> {
    if x.basis() != Basis::WQSymPhi {
        return Err(AlgebraError::BasisMismatch(Basis::WQSymPhi.name(), x.basis().name()));
    }
    x.linear_map(Basis::WQSymM, |k| {
        let mut out = Element::zero(Basis::WQSymM);
        for v in strong_refinement_set(&k.as_packed()?) {
            out.add_term(Key::from(&v), RationalFunction::one());
        }
        Ok(out)
    })
}

/// Inverse of [`phi_to_m`]:
/// `M_u = sum of (-1)^(max v - max u) Phi_v over v strongly finer`.
pub fn m_to_phi(x: &Element) -> Result<Element, AlgebraError> {
    if x.basis() != Basis::WQSymM {
        return Err(AlgebraError::BasisMismatch(Basis::WQSymM.name(), x.basis().name()));
    }
    x.linear_map(Basis::WQSymPhi, |k| {
        let u = k.as_packed()?;
        let mut out = Element::zero(Basis::WQSymPhi);
        for v in strong_refinement_set(&u) {
            let sign = if (v.max_letter() - u.max_letter()) % 2 == 0 {
                RationalFunction::one()
            } else {
                -&RationalFunction::one()
            };
            out.add_term(Key::from(&v), sign);
        }
        Ok(out)
    })
}

/// Expand PhiCheck-basis elements in the M basis: the mirror image of
/// the Phi expansion.
pub fn phicheck_to_m(x: &Element) -> Result<Element, AlgebraError> {
    if x.basis() != Basis::WQSymPhiCheck {
        return Err(AlgebraError::BasisMismatch(Basis::WQSymPhiCheck.name(), x.basis().name()));
    }
    x.linear_map(Basis::WQSymM, |k| {
        let u_bar = pack(&bar(k.entries()));
        let mut out = Element::zero(Basis::WQSymM);
        for v in strong_refinement_set(&u_bar) {
            out.add_term(Key::new(bar(v.letters())), RationalFunction::one());
        }
        Ok(out)
    })
}

/// Inverse of [`phicheck_to_m`].
pub fn m_to_phicheck(x: &Element) -> Result<Element, AlgebraError> {
    if x.basis() != Basis::WQSymM {
        return Err(AlgebraError::BasisMismatch(Basis::WQSymM.name(), x.basis().name()));
    }
    x.linear_map(Basis::WQSymPhiCheck, |k| {
        let u_bar = pack(&bar(k.entries()));
        let mut out = Element::zero(Basis::WQSymPhiCheck);
        for v in strong_refinement_set(&u_bar) {
            let sign = if (v.max_letter() - u_bar.max_letter()).is_multiple_of(2) {
                RationalFunction::one()
            } else {
                -&RationalFunction::one()
            };
            out.add_term(Key::new(bar(v.letters())), sign);
        }
        Ok(out)
    })
}

/// Bilinear pairing with `<N_u, M_v> = [u = v]`; mixed degrees pair
/// to zero.
pub fn duality_pairing(x: &Element, y: &Element) -> Result<RationalFunction, AlgebraError> {
    if x.basis() != Basis::WQSymDualN {
        return Err(AlgebraError::BasisMismatch(Basis::WQSymDualN.name(), x.basis().name()));
    }
    if y.basis() != Basis::WQSymM {
        return Err(AlgebraError::BasisMismatch(Basis::WQSymM.name(), y.basis().name()));
    }
    let mut acc = RationalFunction::zero();
    for (k, c) in x.terms() {
        let m = y.coeff(&Key::new(k.entries().to_vec()));
        if !m.is_zero() {
            acc = &acc + &(c * &m);
        }
    }
    Ok(acc)
}

/// `std(u)` applied key-wise: the projection dual to the inclusion.
pub(crate) fn std_key(k: &Key) -> Key {
    Key::from(&standardize(k.entries()))
}
