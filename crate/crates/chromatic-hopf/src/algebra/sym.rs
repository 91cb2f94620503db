//! Sym inside the tower: the internal product on the complete basis,
//! the embedding into FQSym, and the embeddings into WQSym used by the
//! path-graph series.

use super::{wqsym_m_mul, AlgebraError, Basis, Element, Key};
use crate::ratfun::RationalFunction;
use crate::words::{packed_words, permutations, Composition};

/// Nonnegative integer matrices with row sums `i` and column sums `j`,
/// each encoded by the row-reading word of its nonzero entries.
fn matrices(i: &Composition, j: &Composition) -> Vec<Composition> {
    let rows = i.parts().to_vec();
    let cols = j.parts().to_vec();
    let mut out = Vec::new();
    let mut remaining: Vec<u8> = cols.clone();
    let mut reading: Vec<u8> = Vec::new();
    fn rec(
        rows: &[u8],
        r: usize,
        remaining: &mut Vec<u8>,
        reading: &mut Vec<u8>,
        out: &mut Vec<Composition>,
    ) {
        if r == rows.len() {
            if remaining.iter().all(|&x| x == 0) {
                out.push(Composition::new(reading.clone()).unwrap());
            }
            return;
        }
        // distribute rows[r] over the columns
        fn fill(
            rows: &[u8],
            r: usize,
            c: usize,
            left: u8,
            remaining: &mut Vec<u8>,
            reading: &mut Vec<u8>,
            out: &mut Vec<Composition>,
        ) {
            if c == remaining.len() {
                if left == 0 {
                    rec(rows, r + 1, remaining, reading, out);
                }
                return;
            }
            let cap = left.min(remaining[c]);
            for v in 0..=cap {
                if v > 0 {
                    remaining[c] -= v;
                    reading.push(v);
                }
                fill(rows, r, c + 1, left - v, remaining, reading, out);
                if v > 0 {
                    remaining[c] += v;
                    reading.pop();
                }
            }
        }
        fill(rows, r, 0, rows[r], remaining, reading, out);
    }
    rec(&rows, 0, &mut remaining, &mut reading, &mut out);
    out
}

/// Internal product on the complete basis of Sym:
/// `S^I * S^J = sum over matrices with row sums I and column sums J`.
pub fn sym_internal(a: &Element, b: &Element) -> Result<Element, AlgebraError> {
    for e in [a, b] {
        if e.basis() != Basis::SymS {
            return Err(AlgebraError::BasisMismatch(Basis::SymS.name(), e.basis().name()));
        }
    }
    let mut out = Element::zero(Basis::SymS);
    for (ka, ca) in a.terms() {
        let i = ka.as_composition()?;
        for (kb, cb) in b.terms() {
            let j = kb.as_composition()?;
            if i.weight() != j.weight() {
                return Err(AlgebraError::DegreeMismatch(i.weight(), j.weight()));
            }
            let c = ca * cb;
            for m in matrices(&i, &j) {
                out.add_term(Key::from(&m), c.clone());
            }
        }
    }
    Ok(out)
}

/// The embedding of Sym into FQSym on the F basis:
/// `S^I = sum of F_sigma over Des(sigma^{-1})` contained in `Des(I)`.
pub fn s_to_fqsym_f(x: &Element) -> Result<Element, AlgebraError> {
    if x.basis() != Basis::SymS {
        return Err(AlgebraError::BasisMismatch(Basis::SymS.name(), x.basis().name()));
    }
    x.linear_map(Basis::FQSymF, |k| {
        let i = k.as_composition()?;
        let n = i.weight();
        let des = i.descent_set();
        let mut out = Element::zero(Basis::FQSymF);
        for sigma in permutations(n) {
            if sigma.inverse().descents().is_subset(&des) {
                out.add_term(Key::from(&sigma), RationalFunction::one());
            }
        }
        Ok(out)
    })
}

/// The embedding of Sym into WQSym sending `S_n` to the sum of
/// nonincreasing words; extended multiplicatively over `S^I`.
pub fn s_to_wqsym(x: &Element) -> Result<Element, AlgebraError> {
    if x.basis() != Basis::SymS {
        return Err(AlgebraError::BasisMismatch(Basis::SymS.name(), x.basis().name()));
    }
    x.linear_map(Basis::WQSymM, |k| {
        let i = k.as_composition()?;
        let mut acc = Element::unit(Basis::WQSymM);
        for &p in i.parts() {
            let mut factor = Element::zero(Basis::WQSymM);
            for u in packed_words(p as usize) {
                if u.letters().windows(2).all(|w| w[0] >= w[1]) {
                    factor.add_term(Key::from(&u), RationalFunction::one());
                }
            }
            acc = wqsym_m_mul(&acc, &factor)?;
        }
        Ok(acc)
    })
}

/// The embedding sending `Lambda_n` to `M_(12...n)`, extended
/// multiplicatively over `Lambda^I`.
pub fn lambda_to_wqsym(x: &Element) -> Result<Element, AlgebraError> {
    if x.basis() != Basis::SymLambda {
        return Err(AlgebraError::BasisMismatch(Basis::SymLambda.name(), x.basis().name()));
    }
    x.linear_map(Basis::WQSymM, |k| {
        let i = k.as_composition()?;
        let mut acc = Element::unit(Basis::WQSymM);
        for &p in i.parts() {
            let increasing = Key::new((1..=p).collect());
            let factor = Element::from_key(Basis::WQSymM, increasing)?;
            acc = wqsym_m_mul(&acc, &factor)?;
        }
        Ok(acc)
    })
}
