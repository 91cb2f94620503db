//! Linear combinations over Q(t) with typed basis keys, and the
//! product, coproduct, internal-product and basis-change operations of
//! WQSym, WQSym*, QSym, Sym, FQSym and WSym.
//!
//! A single container, [`Element`], carries a `(space, basis)` tag; keys
//! are packed words, permutations, canonical set-partition words or
//! compositions depending on the tag, and operations on mismatched tags
//! are rejected.

mod fqsym;
mod qsym;
mod sym;
mod wqsym;
mod wsym;

pub use fqsym::{fqsym_internal, g_to_f, f_to_g, iota_star};
pub use qsym::{f_to_m, m_to_f, qsym_m_mul, quasi_shuffle, wqsym_to_qsym};
pub use sym::{lambda_to_wqsym, s_to_fqsym_f, s_to_wqsym, sym_internal};
pub use wqsym::{
    duality_pairing, hat_s, iota, iota_perm, m_to_phi, m_to_phicheck, n_internal,
    n_right_action, phi_to_m, phicheck_to_m, wqsym_m_coproduct, wqsym_m_coproduct_element,
    wqsym_m_mul, wqsym_m_mul_keys,
};
pub use wsym::{mt_to_m, m_to_mt, wsym_from_wqsym, wsym_m_mul};

use crate::ratfun::{QRat, RationalFunction};
use crate::words::{is_packed, Composition, PackedWord, Permutation, WordError};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("basis mismatch: expected {0}, got {1}")]
    BasisMismatch(&'static str, &'static str),
    #[error("key {1:?} is not valid for basis {0}")]
    InvalidKey(&'static str, Vec<u8>),
    #[error("internal product requires equal degrees: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("element is not in the target span: {0}")]
    NotInSpan(String),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Arith(#[from] crate::ratfun::ArithError),
}

/// The `(space, basis)` tags available to [`Element`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Basis {
    QSymM,
    QSymF,
    SymS,
    SymLambda,
    WQSymM,
    WQSymPhi,
    WQSymPhiCheck,
    WQSymDualN,
    WSymM,
    WSymMt,
    FQSymG,
    FQSymF,
}

impl Basis {
    pub fn name(self) -> &'static str {
        match self {
            Basis::QSymM => "QSym.M",
            Basis::QSymF => "QSym.F",
            Basis::SymS => "Sym.S",
            Basis::SymLambda => "Sym.Lambda",
            Basis::WQSymM => "WQSym.M",
            Basis::WQSymPhi => "WQSym.Phi",
            Basis::WQSymPhiCheck => "WQSym.PhiCheck",
            Basis::WQSymDualN => "WQSymDual.N",
            Basis::WSymM => "WSym.m",
            Basis::WSymMt => "WSym.mt",
            Basis::FQSymG => "FQSym.G",
            Basis::FQSymF => "FQSym.F",
        }
    }

    pub fn from_name(name: &str) -> Option<Basis> {
        [
            Basis::QSymM,
            Basis::QSymF,
            Basis::SymS,
            Basis::SymLambda,
            Basis::WQSymM,
            Basis::WQSymPhi,
            Basis::WQSymPhiCheck,
            Basis::WQSymDualN,
            Basis::WSymM,
            Basis::WSymMt,
            Basis::FQSymG,
            Basis::FQSymF,
        ]
        .into_iter()
        .find(|b| b.name() == name)
    }

    /// Symbol used when rendering a term of this basis.
    pub fn symbol(self) -> &'static str {
        match self {
            Basis::QSymM | Basis::WQSymM => "M",
            Basis::QSymF | Basis::FQSymF => "F",
            Basis::SymS => "S",
            Basis::SymLambda => "L",
            Basis::WQSymPhi => "Phi",
            Basis::WQSymPhiCheck => "PhiC",
            Basis::WQSymDualN => "N",
            Basis::WSymM => "m",
            Basis::WSymMt => "mt",
            Basis::FQSymG => "G",
        }
    }

    /// True for bases keyed by compositions rather than words.
    pub fn composition_keys(self) -> bool {
        matches!(self, Basis::QSymM | Basis::QSymF | Basis::SymS | Basis::SymLambda)
    }

    pub fn validate_key(self, key: &[u8]) -> Result<(), AlgebraError> {
        let ok = match self {
            Basis::QSymM | Basis::QSymF | Basis::SymS | Basis::SymLambda => {
                key.iter().all(|&p| p > 0)
            }
            Basis::WQSymM | Basis::WQSymPhi | Basis::WQSymPhiCheck | Basis::WQSymDualN => {
                is_packed(key)
            }
            Basis::FQSymG | Basis::FQSymF => Permutation::new(key.to_vec()).is_ok(),
            Basis::WSymM => is_canonical_partition_word(key),
            Basis::WSymMt => {
                is_canonical_partition_word(key)
                    && crate::partitions::SetPartition::from_letters(key.to_vec())
                        .map(|p| p.is_nonnesting())
                        .unwrap_or(false)
            }
        };
        if ok {
            Ok(())
        } else {
            Err(AlgebraError::InvalidKey(self.name(), key.to_vec()))
        }
    }
}

/// First occurrences of 1, 2, 3, ... appear in this order.
fn is_canonical_partition_word(key: &[u8]) -> bool {
    if !is_packed(key) {
        return false;
    }
    let mut seen_max = 0u8;
    for &a in key {
        if a > seen_max + 1 {
            return false;
        }
        seen_max = seen_max.max(a);
    }
    true
}

/// Basis key: a word or a composition, ordered by length then
/// lexicographically.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Key(Vec<u8>);

impl Key {
    pub fn new(entries: Vec<u8>) -> Self {
        Key(entries)
    }

    pub fn entries(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Total degree: the length for word keys, the weight for
    /// composition keys.
    pub fn degree(&self, basis: Basis) -> usize {
        if basis.composition_keys() {
            self.0.iter().map(|&p| p as usize).sum()
        } else {
            self.0.len()
        }
    }

    pub fn as_packed(&self) -> Result<PackedWord, AlgebraError> {
        PackedWord::new(self.0.clone()).map_err(AlgebraError::from)
    }

    pub fn as_permutation(&self) -> Result<Permutation, AlgebraError> {
        Permutation::new(self.0.clone()).map_err(AlgebraError::from)
    }

    pub fn as_composition(&self) -> Result<Composition, AlgebraError> {
        Composition::new(self.0.clone()).map_err(AlgebraError::from)
    }

    pub fn render(&self, basis: Basis) -> String {
        if basis.composition_keys() {
            let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
            format!("({})", parts.join(","))
        } else if self.0.iter().all(|&a| a <= 9) {
            self.0.iter().map(|a| a.to_string()).collect()
        } else {
            let parts: Vec<String> = self.0.iter().map(|a| a.to_string()).collect();
            parts.join(",")
        }
    }
}

impl From<&PackedWord> for Key {
    fn from(w: &PackedWord) -> Key {
        Key(w.letters().to_vec())
    }
}

impl From<&Permutation> for Key {
    fn from(p: &Permutation) -> Key {
        Key(p.letters().to_vec())
    }
}

impl From<&Composition> for Key {
    fn from(c: &Composition) -> Key {
        Key(c.parts().to_vec())
    }
}

impl fmt::Debug for Key {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl PartialOrd for Key {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Key {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

/// A finite formal sum of basis keys with coefficients in Q(t),
/// tagged by its `(space, basis)` pair. Zero coefficients are never
/// stored, so equality is canonical.
#[derive(Clone, PartialEq, Eq)]
pub struct Element {
    basis: Basis,
    terms: BTreeMap<Key, RationalFunction>,
}

impl Element {
    pub fn zero(basis: Basis) -> Self {
        Element { basis, terms: BTreeMap::new() }
    }

    /// The degree-0 unit `1` of the tagged algebra.
    pub fn unit(basis: Basis) -> Self {
        let mut e = Element::zero(basis);
        e.add_term(Key::new(Vec::new()), RationalFunction::one());
        e
    }

    pub fn from_key(basis: Basis, key: Key) -> Result<Self, AlgebraError> {
        Element::from_term(basis, key, RationalFunction::one())
    }

    pub fn from_term(basis: Basis, key: Key, coeff: RationalFunction) -> Result<Self, AlgebraError> {
        basis.validate_key(key.entries())?;
        let mut e = Element::zero(basis);
        e.add_term(key, coeff);
        Ok(e)
    }

    /// Build an element from a term list; coefficients on repeated keys
    /// accumulate.
    pub fn from_terms(
        basis: Basis,
        terms: impl IntoIterator<Item = (Key, RationalFunction)>,
    ) -> Result<Self, AlgebraError> {
        let mut e = Element::zero(basis);
        for (key, coeff) in terms {
            basis.validate_key(key.entries())?;
            e.add_term(key, coeff);
        }
        Ok(e)
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Key, &RationalFunction)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &Key> {
        self.terms.keys()
    }

    pub fn coeff(&self, key: &Key) -> RationalFunction {
        self.terms.get(key).cloned().unwrap_or_else(RationalFunction::zero)
    }

    /// Accumulate `coeff` on `key`, dropping the term if it cancels.
    pub(crate) fn add_term(&mut self, key: Key, coeff: RationalFunction) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(key);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn check_basis(&self, other: &Element) -> Result<(), AlgebraError> {
        if self.basis != other.basis {
            return Err(AlgebraError::BasisMismatch(self.basis.name(), other.basis.name()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Element) -> Result<Element, AlgebraError> {
        self.check_basis(other)?;
        let mut out = self.clone();
        for (k, c) in other.terms() {
            out.add_term(k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Element) -> Result<Element, AlgebraError> {
        self.add(&other.scale(&-&RationalFunction::one()))
    }

    pub fn scale(&self, c: &RationalFunction) -> Element {
        if c.is_zero() {
            return Element::zero(self.basis);
        }
        let mut out = Element::zero(self.basis);
        for (k, v) in self.terms() {
            out.add_term(k.clone(), v * c);
        }
        out
    }

    /// Replace every coefficient through `f`, dropping zeros.
    pub fn map_coeffs(
        &self,
        mut f: impl FnMut(&RationalFunction) -> RationalFunction,
    ) -> Element {
        let mut out = Element::zero(self.basis);
        for (k, v) in self.terms() {
            out.add_term(k.clone(), f(v));
        }
        out
    }

    /// Exact evaluation of every coefficient at `t = value`, as an
    /// element with constant coefficients.
    pub fn evaluate_coeffs(&self, value: &QRat) -> Result<Element, AlgebraError> {
        let mut out = Element::zero(self.basis);
        for (k, v) in self.terms() {
            out.add_term(k.clone(), RationalFunction::constant(v.evaluate(value)?));
        }
        Ok(out)
    }

    /// Linear extension of a map on keys.
    pub fn linear_map(
        &self,
        target: Basis,
        mut f: impl FnMut(&Key) -> Result<Element, AlgebraError>,
    ) -> Result<Element, AlgebraError> {
        let mut out = Element::zero(target);
        for (k, c) in self.terms() {
            let image = f(k)?;
            if image.basis != target {
                return Err(AlgebraError::BasisMismatch(target.name(), image.basis.name()));
            }
            for (k2, c2) in image.terms() {
                out.add_term(k2.clone(), c2 * c);
            }
        }
        Ok(out)
    }

    /// Degree of a homogeneous element; `None` when mixed or zero.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut deg = None;
        for k in self.terms.keys() {
            let d = k.degree(self.basis);
            match deg {
                None => deg = Some(d),
                Some(existing) if existing != d => return None,
                _ => {}
            }
        }
        deg
    }
}

fn term_string(coeff: &RationalFunction, key: &str, symbol: &str) -> String {
    let body = format!("{}[{}]", symbol, key);
    if coeff.is_one() {
        return body;
    }
    if (-coeff).is_one() {
        return format!("-{}", body);
    }
    if coeff.as_monomial().is_some() {
        // single monomials render bare: t^2*M[...] or -2*t*M[...]
        return format!("{}*{}", coeff, body);
    }
    if coeff.is_polynomial() {
        format!("({})*{}", coeff, body)
    } else {
        format!("{}*{}", coeff, body)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.terms() {
            let s = term_string(c, &k.render(self.basis), self.basis.symbol());
            if first {
                write!(f, "{}", s)?;
                first = false;
            } else if let Some(rest) = s.strip_prefix('-') {
                write!(f, " - {}", rest)?;
            } else {
                write!(f, " + {}", s)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// A finite sum of key pairs with coefficients, tagged component-wise.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorElement {
    left: Basis,
    right: Basis,
    terms: BTreeMap<(Key, Key), RationalFunction>,
}

impl TensorElement {
    pub fn zero(left: Basis, right: Basis) -> Self {
        TensorElement { left, right, terms: BTreeMap::new() }
    }

    pub fn left_basis(&self) -> Basis {
        self.left
    }

    pub fn right_basis(&self) -> Basis {
        self.right
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Key, Key), &RationalFunction)> {
        self.terms.iter()
    }

    pub fn coeff(&self, left: &Key, right: &Key) -> RationalFunction {
        self.terms
            .get(&(left.clone(), right.clone()))
            .cloned()
            .unwrap_or_else(RationalFunction::zero)
    }

    pub(crate) fn add_term(&mut self, left: Key, right: Key, coeff: RationalFunction) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry((left, right));
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &TensorElement) -> Result<TensorElement, AlgebraError> {
        if self.left != other.left || self.right != other.right {
            return Err(AlgebraError::BasisMismatch(self.left.name(), other.left.name()));
        }
        let mut out = self.clone();
        for ((l, r), c) in other.terms() {
            out.add_term(l.clone(), r.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &RationalFunction) -> TensorElement {
        let mut out = TensorElement::zero(self.left, self.right);
        for ((l, r), v) in self.terms() {
            out.add_term(l.clone(), r.clone(), v * c);
        }
        out
    }

    /// Swap the tensor factors.
    pub fn flip(&self) -> TensorElement {
        let mut out = TensorElement::zero(self.right, self.left);
        for ((l, r), c) in self.terms() {
            out.add_term(r.clone(), l.clone(), c.clone());
        }
        out
    }

    /// Tensor product of elements.
    pub fn of(a: &Element, b: &Element) -> TensorElement {
        let mut out = TensorElement::zero(a.basis(), b.basis());
        for (l, cl) in a.terms() {
            for (r, cr) in b.terms() {
                out.add_term(l.clone(), r.clone(), cl * cr);
            }
        }
        out
    }

    /// Component-wise product, given product maps for the two factors.
    pub fn mul_with(
        &self,
        other: &TensorElement,
        mut left_mul: impl FnMut(&Key, &Key) -> Result<Element, AlgebraError>,
        mut right_mul: impl FnMut(&Key, &Key) -> Result<Element, AlgebraError>,
    ) -> Result<TensorElement, AlgebraError> {
        let mut out = TensorElement::zero(self.left, self.right);
        for ((l1, r1), c1) in self.terms() {
            for ((l2, r2), c2) in other.terms() {
                let lp = left_mul(l1, l2)?;
                let rp = right_mul(r1, r2)?;
                let c = c1 * c2;
                for (lk, lc) in lp.terms() {
                    for (rk, rc) in rp.terms() {
                        out.add_term(lk.clone(), rk.clone(), &(&c * lc) * rc);
                    }
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((l, r), c) in self.terms() {
            let key = format!(
                "{}]x{}[{}",
                l.render(self.left),
                self.right.symbol(),
                r.render(self.right)
            );
            let s = term_string(c, &key, self.left.symbol());
            if first {
                write!(f, "{}", s)?;
                first = false;
            } else if let Some(rest) = s.strip_prefix('-') {
                write!(f, " - {}", rest)?;
            } else {
                write!(f, " + {}", s)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
pub(crate) fn pw(digits: &str) -> PackedWord {
    PackedWord::new(digits.bytes().map(|b| b - b'0').collect()).unwrap()
}

#[cfg(test)]
pub(crate) fn key(digits: &str) -> Key {
    Key::new(digits.bytes().map(|b| b - b'0').collect())
}

#[cfg(test)]
pub(crate) fn m_elem(digits: &str) -> Element {
    Element::from_key(Basis::WQSymM, key(digits)).unwrap()
}
