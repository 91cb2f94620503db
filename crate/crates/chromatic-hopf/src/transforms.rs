//! Virtual alphabets and the alphabet transforms they induce on QSym,
//! Sym, WQSym and WQSym*, together with the series expansions of the
//! `t-1` transform and graded series inversion.
//!
//! A virtual alphabet is an algebra morphism on the monomial basis of
//! QSym; the four built-ins `1/(1-t)`, `1/(t-1)`, `1-t` and `t-1` carry
//! closed forms.

use crate::algebra::{AlgebraError, Basis, Element, Key};
use crate::ratfun::{t_pow_minus_one, Poly, QRat, RationalFunction};
use crate::words::{
    compositions, evaluation, pack, packed_words, refines, Composition, PackedWord,
};
use num::One;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

#[derive(Clone)]
enum AlphabetKind {
    OneOverOneMinusT,
    OneOverTMinusOne,
    OneMinusT,
    TMinusOne,
    Custom(Arc<dyn Fn(&Composition) -> RationalFunction + Send + Sync>),
}

/// A virtual alphabet: a name together with its values on the monomial
/// basis, consumed only through products of such values.
#[derive(Clone)]
pub struct VirtualAlphabet {
    name: String,
    kind: AlphabetKind,
}

impl VirtualAlphabet {
    pub fn one_over_one_minus_t() -> Self {
        VirtualAlphabet { name: "1/(1-t)".into(), kind: AlphabetKind::OneOverOneMinusT }
    }

    pub fn one_over_t_minus_one() -> Self {
        VirtualAlphabet { name: "1/(t-1)".into(), kind: AlphabetKind::OneOverTMinusOne }
    }

    pub fn one_minus_t() -> Self {
        VirtualAlphabet { name: "1-t".into(), kind: AlphabetKind::OneMinusT }
    }

    pub fn t_minus_one() -> Self {
        VirtualAlphabet { name: "t-1".into(), kind: AlphabetKind::TMinusOne }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "1/(1-t)" => Some(Self::one_over_one_minus_t()),
            "1/(t-1)" => Some(Self::one_over_t_minus_one()),
            "1-t" => Some(Self::one_minus_t()),
            "t-1" => Some(Self::t_minus_one()),
            _ => None,
        }
    }

    /// A user-defined alphabet given by any map on compositions; the
    /// empty composition is forced to 1.
    pub fn custom(
        name: impl Into<String>,
        f: impl Fn(&Composition) -> RationalFunction + Send + Sync + 'static,
    ) -> Self {
        VirtualAlphabet { name: name.into(), kind: AlphabetKind::Custom(Arc::new(f)) }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// The value `M_I(T)`.
    pub fn value_on_m(&self, i: &Composition) -> RationalFunction {
        if i.is_empty() {
            return RationalFunction::one();
        }
        let n = i.weight();
        let r = i.length();
        let partial_sums = || {
            let mut acc = 0usize;
            i.parts().iter().map(move |&p| {
                acc += p as usize;
                acc
            })
        };
        let sign = |f: RationalFunction| if r.is_multiple_of(2) { -&f } else { f };
        match &self.kind {
            AlphabetKind::OneOverOneMinusT => {
                let num = Poly::monomial(QRat::one(), i.maj());
                let mut den = Poly::one();
                for s in partial_sums() {
                    den = &den * &-&t_pow_minus_one(s);
                }
                RationalFunction::new(num, den).unwrap()
            }
            AlphabetKind::OneOverTMinusOne => {
                let mut den = Poly::one();
                for s in partial_sums() {
                    den = &den * &t_pow_minus_one(s);
                }
                RationalFunction::new(Poly::one(), den).unwrap()
            }
            // the reciprocal alphabets use prefix partial sums, which
            // pins these two to the last part: inverting the transform
            // matrices forces (-1)^(l-1)(t^(n-i_r) - t^n) and
            // (-1)^(l-1)(t^(i_r) - 1)
            AlphabetKind::OneMinusT => {
                let ir = *i.parts().last().unwrap() as usize;
                let f = RationalFunction::from_poly(
                    &Poly::monomial(QRat::one(), n - ir) - &Poly::monomial(QRat::one(), n),
                );
                sign(f)
            }
            AlphabetKind::TMinusOne => {
                let ir = *i.parts().last().unwrap() as usize;
                let f = RationalFunction::from_poly(t_pow_minus_one(ir));
                sign(f)
            }
            AlphabetKind::Custom(f) => f(i),
        }
    }
}

impl fmt::Debug for VirtualAlphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VirtualAlphabet({})", self.name)
    }
}

/// `M_I(T)` for a single composition.
pub fn specialize_m(t: &VirtualAlphabet, i: &Composition) -> RationalFunction {
    t.value_on_m(i)
}

fn segment_cuts(len: usize) -> Vec<Vec<(usize, usize)>> {
    // all ways to cut 0..len into consecutive nonempty segments
    let mut out = Vec::new();
    if len == 0 {
        out.push(Vec::new());
        return out;
    }
    for mask in 0u32..(1 << (len - 1)) {
        let mut cut = Vec::new();
        let mut start = 0usize;
        for gap in 1..len {
            if mask >> (gap - 1) & 1 == 1 {
                cut.push((start, gap));
                start = gap;
            }
        }
        cut.push((start, len));
        out.push(cut);
    }
    out
}

/// The XT transform on the monomial basis of QSym: the coefficient of
/// `M_J` in `M_I(XT)` sums `prod M_(I_k)(T)` over the cuts of `I` into
/// consecutive segments of weights `J`.
pub fn qsym_transform(x: &Element, t: &VirtualAlphabet) -> Result<Element, AlgebraError> {
    if x.basis() != Basis::QSymM {
        return Err(AlgebraError::BasisMismatch(Basis::QSymM.name(), x.basis().name()));
    }
    x.linear_map(Basis::QSymM, |k| {
        let i = k.as_composition()?;
        let mut out = Element::zero(Basis::QSymM);
        for cut in segment_cuts(i.length()) {
            let mut coeff = RationalFunction::one();
            let mut weights = Vec::with_capacity(cut.len());
            for &(a, b) in &cut {
                let seg = Composition::new(i.parts()[a..b].to_vec()).unwrap();
                weights.push(seg.weight() as u8);
                coeff = &coeff * &t.value_on_m(&seg);
            }
            out.add_term(Key::new(weights), coeff);
        }
        Ok(out)
    })
}

/// The TA transform on the complete basis of Sym:
/// `S_n(TA) = sum of M_I(T) S^I over I of weight n`, extended
/// multiplicatively.
pub fn sym_transform(x: &Element, t: &VirtualAlphabet) -> Result<Element, AlgebraError> {
    if x.basis() != Basis::SymS {
        return Err(AlgebraError::BasisMismatch(Basis::SymS.name(), x.basis().name()));
    }
    x.linear_map(Basis::SymS, |k| {
        let j = k.as_composition()?;
        let mut acc = Element::unit(Basis::SymS);
        for &part in j.parts() {
            let mut factor = Element::zero(Basis::SymS);
            for i in compositions(part as usize) {
                factor.add_term(Key::from(&i), t.value_on_m(&i));
            }
            // concatenation product on the S basis
            let mut next = Element::zero(Basis::SymS);
            for (ka, ca) in acc.terms() {
                for (kb, cb) in factor.terms() {
                    let mut parts = ka.entries().to_vec();
                    parts.extend_from_slice(kb.entries());
                    next.add_term(Key::new(parts), ca * cb);
                }
            }
            acc = next;
        }
        Ok(acc)
    })
}

/// Merge the value classes of `u` along a composition of `max(u)`.
fn merge_by_cut(u: &PackedWord, cut: &[(usize, usize)]) -> PackedWord {
    let mut target = vec![0u8; u.max_letter() as usize];
    for (seg, &(a, b)) in cut.iter().enumerate() {
        for v in a..b {
            target[v] = seg as u8 + 1;
        }
    }
    PackedWord::new(u.letters().iter().map(|&x| target[(x - 1) as usize]).collect()).unwrap()
}

/// The AT transform on the monomial basis of WQSym: `M_u(AT)` expands
/// over the coarsenings of `u`, the coefficient of each being the
/// product of the values of `T` on the induced segments of `ev(u)`.
pub fn wqsym_transform(x: &Element, t: &VirtualAlphabet) -> Result<Element, AlgebraError> {
    if x.basis() != Basis::WQSymM {
        return Err(AlgebraError::BasisMismatch(Basis::WQSymM.name(), x.basis().name()));
    }
    // coefficient products memoized per (evaluation, cut); output
    // accumulated per key with numerators grouped by denominator so
    // repeated denominators cost only polynomial additions
    let mut memo: HashMap<(Vec<u8>, Vec<u8>), RationalFunction> = HashMap::new();
    let mut acc: std::collections::BTreeMap<Key, HashMap<Poly, Poly>> = Default::default();
    for (k, c) in x.terms() {
        let u = k.as_packed()?;
        let ev = evaluation(u.letters());
        for cut in segment_cuts(u.max_letter() as usize) {
            let cut_key: Vec<u8> = cut.iter().map(|&(_, b)| b as u8).collect();
            let coeff = memo
                .entry((ev.parts().to_vec(), cut_key))
                .or_insert_with(|| {
                    let mut prod = RationalFunction::one();
                    for &(a, b) in &cut {
                        let seg = Composition::new(ev.parts()[a..b].to_vec()).unwrap();
                        prod = &prod * &t.value_on_m(&seg);
                    }
                    prod
                })
                .clone();
            let v = merge_by_cut(&u, &cut);
            let total = c * &coeff;
            if total.is_zero() {
                continue;
            }
            let groups = acc.entry(Key::from(&v)).or_default();
            let entry = groups.entry(total.denominator().clone()).or_insert_with(Poly::zero);
            *entry = &*entry + total.numerator();
        }
    }
    let mut out = Element::zero(Basis::WQSymM);
    for (key, groups) in acc {
        let mut sum = RationalFunction::zero();
        for (den, num) in groups {
            sum = &sum + &RationalFunction::new(num, den).unwrap();
        }
        out.add_term(key, sum);
    }
    Ok(out)
}

/// The packed subwords `w^(i)` of `w` on the value classes of `u`.
pub fn split_words(u: &PackedWord, w: &PackedWord) -> Result<Vec<PackedWord>, AlgebraError> {
    if u.len() != w.len() {
        return Err(AlgebraError::Word(crate::words::WordError::LengthMismatch(
            u.len(),
            w.len(),
        )));
    }
    Ok((1..=u.max_letter())
        .map(|i| {
            let sub: Vec<u8> = u
                .letters()
                .iter()
                .zip(w.letters())
                .filter(|(&a, _)| a == i)
                .map(|(_, &b)| b)
                .collect();
            pack(&sub)
        })
        .collect())
}

/// `V(u, w)`: the packed words `v` with `pack(u over v) = w`.
pub fn v_set(u: &PackedWord, w: &PackedWord) -> Result<Vec<PackedWord>, AlgebraError> {
    if u.len() != w.len() {
        return Err(AlgebraError::Word(crate::words::WordError::LengthMismatch(
            u.len(),
            w.len(),
        )));
    }
    Ok(packed_words(u.len())
        .into_iter()
        .filter(|v| crate::words::biletter_pack(u.letters(), v.letters()).unwrap() == *w)
        .collect())
}

/// The TA transform on WQSym*: `N_u(TA) = N_u * sigma_1(TA)` expands
/// over the packed words refining `u`.
pub fn wqsymdual_transform(x: &Element, t: &VirtualAlphabet) -> Result<Element, AlgebraError> {
    if x.basis() != Basis::WQSymDualN {
        return Err(AlgebraError::BasisMismatch(Basis::WQSymDualN.name(), x.basis().name()));
    }
    x.linear_map(Basis::WQSymDualN, |k| {
        let u = k.as_packed()?;
        let mut out = Element::zero(Basis::WQSymDualN);
        for w in packed_words(u.len()) {
            if !refines(&w, &u)? {
                continue;
            }
            let mut coeff = RationalFunction::one();
            for piece in split_words(&u, &w)? {
                coeff = &coeff * &t.value_on_m(&evaluation(piece.letters()));
            }
            out.add_term(Key::from(&w), coeff);
        }
        Ok(out)
    })
}

/// Apply the alphabet transform matching the element's basis.
pub fn transform_element(x: &Element, t: &VirtualAlphabet) -> Result<Element, AlgebraError> {
    match x.basis() {
        Basis::QSymM => qsym_transform(x, t),
        Basis::WQSymM => wqsym_transform(x, t),
        Basis::SymS => sym_transform(x, t),
        Basis::WQSymDualN => wqsymdual_transform(x, t),
        other => Err(AlgebraError::BasisMismatch("an M-type basis", other.name())),
    }
}

/// Named series whose homogeneous components have closed forms.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SeriesKind {
    /// `sigma_1(A(t-1))`: nonincreasing words weighted by
    /// `t^(n - max) (t-1)^max`.
    Sigma1TMinusOne,
    /// `lambda_{-1}(A(t-1))`: nondecreasing words weighted by
    /// `(1-t)^max`.
    LambdaMinus1TMinusOne,
}

/// Homogeneous component of degree `n` of the named series.
pub fn sigma_series(kind: SeriesKind, n: usize) -> Element {
    let mut out = Element::zero(Basis::WQSymM);
    if n == 0 {
        return Element::unit(Basis::WQSymM);
    }
    let one = RationalFunction::one();
    let t = RationalFunction::t();
    for u in packed_words(n) {
        let m = u.max_letter() as usize;
        match kind {
            SeriesKind::Sigma1TMinusOne => {
                if u.letters().windows(2).all(|w| w[0] >= w[1]) {
                    let coeff = &t.pow(n - m) * &(&t - &one).pow(m);
                    out.add_term(Key::from(&u), coeff);
                }
            }
            SeriesKind::LambdaMinus1TMinusOne => {
                if u.letters().windows(2).all(|w| w[0] <= w[1]) {
                    let coeff = (&one - &t).pow(m);
                    out.add_term(Key::from(&u), coeff);
                }
            }
        }
    }
    out
}

/// Invert a graded series given by homogeneous components
/// `f_0, f_1, ...` in WQSym; `f_0` must be an invertible multiple of
/// the unit.
pub fn graded_series_inverse(components: &[Element]) -> Result<Vec<Element>, AlgebraError> {
    use crate::algebra::wqsym_m_mul;
    if components.is_empty() {
        return Ok(Vec::new());
    }
    for c in components {
        if c.basis() != Basis::WQSymM {
            return Err(AlgebraError::BasisMismatch(Basis::WQSymM.name(), c.basis().name()));
        }
    }
    let unit_key = Key::new(Vec::new());
    let c0 = components[0].coeff(&unit_key);
    if c0.is_zero() || components[0].term_count() != 1 {
        return Err(AlgebraError::NotInSpan(
            "series inverse requires an invertible degree-0 term".into(),
        ));
    }
    let c0_inv = c0.inverse()?;
    let mut inv: Vec<Element> = vec![Element::unit(Basis::WQSymM).scale(&c0_inv)];
    for n in 1..components.len() {
        let mut acc = Element::zero(Basis::WQSymM);
        for k in 1..=n {
            let prod = wqsym_m_mul(&components[k], &inv[n - k])?;
            acc = acc.add(&prod)?;
        }
        inv.push(acc.scale(&-&c0_inv));
    }
    Ok(inv)
}
