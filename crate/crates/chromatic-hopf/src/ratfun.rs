//! Exact arithmetic in Q(t), the field of rational functions in one
//! parameter `t` with arbitrary-precision rational coefficients.
//!
//! Every scalar in this crate is a [`RationalFunction`]: a gcd-reduced
//! fraction of dense polynomials with a monic denominator, so equality is
//! syntactic and rendering is stable. No floating point is used anywhere.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

/// Exact rational scalar.
pub type QRat = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArithError {
    #[error("division by zero rational function")]
    DivisionByZero,
    #[error("pole: denominator vanishes at t = {0}")]
    Pole(String),
}

/// Dense univariate polynomial over Q. Coefficients are stored in
/// ascending degree order with no trailing zeros; the zero polynomial
/// is the empty coefficient list.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly {
    coeffs: Vec<QRat>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<QRat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(QRat::one())
    }

    pub fn constant(c: QRat) -> Self {
        Poly::new(vec![c])
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| QRat::from_integer(c.into())).collect())
    }

    /// The monomial `c * t^k`.
    pub fn monomial(c: QRat, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![QRat::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    pub fn t() -> Self {
        Poly::monomial(QRat::one(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[QRat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> QRat {
        self.coeffs.get(k).cloned().unwrap_or_else(QRat::zero)
    }

    pub fn leading(&self) -> Option<&QRat> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &QRat) -> QRat {
        let mut acc = QRat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Reverse of the coefficient sequence, i.e. `t^deg * p(1/t)`.
    pub fn reversed(&self) -> Poly {
        let mut c = self.coeffs.clone();
        c.reverse();
        Poly::new(c)
    }

    pub fn pow(&self, mut e: usize) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Euclidean division: `self = q * d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &Poly) -> Result<(Poly, Poly), ArithError> {
        if d.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        let dd = d.coeffs.len() - 1;
        let lead = d.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(), Poly::new(rem)));
        }
        let mut quot = vec![QRat::zero(); rem.len() - dd];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let c = rem.last().unwrap() / lead;
            for i in 0..dd {
                let v = &rem[k + i] - &c * &d.coeffs[i];
                rem[k + i] = v;
            }
            rem.pop();
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
            quot[k] = c;
            if rem.len() <= dd {
                break;
            }
        }
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    /// Monic gcd, computed by a primitive remainder sequence over the
    /// integers to keep intermediate coefficients small.
    pub fn gcd(&self, other: &Poly) -> Poly {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        let mut a = to_primitive_int(self);
        let mut b = to_primitive_int(other);
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_empty() {
            let r = int_pseudo_rem(&a, &b);
            a = b;
            b = int_primitive(r);
        }
        from_int(&a).monic()
    }

    /// Scale so the leading coefficient is 1 (zero stays zero).
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(l) if l.is_one() => self.clone(),
            Some(l) => {
                let inv = QRat::one() / l;
                Poly::new(self.coeffs.iter().map(|c| c * &inv).collect())
            }
        }
    }
}

fn to_primitive_int(p: &Poly) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for c in p.coeffs() {
        lcm = lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = p.coeffs().iter().map(|c| c.numer() * &lcm / c.denom()).collect();
    int_primitive(ints)
}

fn int_primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    if v.is_empty() {
        return v;
    }
    let mut g = BigInt::zero();
    for c in &v {
        g = g.gcd(c);
    }
    if !g.is_one() {
        for c in v.iter_mut() {
            *c = &*c / &g;
        }
    }
    v
}

fn int_pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lead = b.last().unwrap().clone();
    let mut rem: Vec<BigInt> = a.to_vec();
    while rem.len() > db {
        let k = rem.len() - 1 - db;
        let c = rem.last().unwrap().clone();
        for x in rem.iter_mut() {
            *x = &*x * &lead;
        }
        for i in 0..=db {
            let v = &rem[k + i] - &c * &b[i];
            rem[k + i] = v;
        }
        while rem.last().is_some_and(|x| x.is_zero()) {
            rem.pop();
        }
        // keep numbers small between steps
        rem = int_primitive(rem);
    }
    rem
}

fn from_int(v: &[BigInt]) -> Poly {
    Poly::new(v.iter().map(|c| QRat::from_integer(c.clone())).collect())
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + rhs.coeff(i));
        }
        Poly::new(out)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - rhs.coeff(i));
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![QRat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let v = &out[i + j] + a * b;
                out[i + j] = v;
            }
        }
        Poly::new(out)
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}
impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}
impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}
impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() { ("-", -c.clone()) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            let show_coeff = !mag.is_one() || k == 0;
            if show_coeff {
                write!(f, "{}", mag)?;
            }
            if k > 0 {
                if show_coeff {
                    write!(f, "*")?;
                }
                if k == 1 {
                    write!(f, "t")?;
                } else {
                    write!(f, "t^{}", k)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Element of Q(t): a reduced fraction `num/den` with monic `den`.
/// Zero is represented as `0/1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    pub fn new(num: Poly, den: Poly) -> Result<Self, ArithError> {
        if den.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: Poly, den: Poly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return RationalFunction { num: Poly::zero(), den: Poly::one() };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_rem(&g).unwrap().0, den.div_rem(&g).unwrap().0)
        };
        // normalize: monic denominator
        let lead = den.leading().unwrap().clone();
        if lead.is_one() {
            RationalFunction { num, den }
        } else {
            let inv = QRat::one() / lead;
            let num = Poly::new(num.coeffs().iter().map(|c| c * &inv).collect());
            RationalFunction { num, den: den.monic() }
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        RationalFunction { num: p, den: Poly::one() }
    }

    pub fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    pub fn t() -> Self {
        Self::from_poly(Poly::t())
    }

    pub fn constant(c: QRat) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn from_i64(n: i64) -> Self {
        Self::constant(QRat::from_integer(n.into()))
    }

    /// The monomial `c * t^k`.
    pub fn monomial(c: QRat, k: usize) -> Self {
        Self::from_poly(Poly::monomial(c, k))
    }

    /// `t^k`.
    pub fn t_power(k: usize) -> Self {
        Self::monomial(QRat::one(), k)
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// `Some((c, k))` when the value is the single monomial `c * t^k`.
    pub fn as_monomial(&self) -> Option<(QRat, usize)> {
        if !self.den.is_one() || self.num.is_zero() {
            return None;
        }
        let nonzero: Vec<usize> =
            (0..self.num.coeffs().len()).filter(|&k| !self.num.coeff(k).is_zero()).collect();
        if nonzero.len() == 1 {
            Some((self.num.coeff(nonzero[0]), nonzero[0]))
        } else {
            None
        }
    }

    pub fn inverse(&self) -> Result<Self, ArithError> {
        if self.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Self::reduced(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, rhs: &Self) -> Result<Self, ArithError> {
        if rhs.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Self::reduced(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    pub fn pow(&self, e: usize) -> Self {
        RationalFunction { num: self.num.pow(e), den: self.den.pow(e) }
    }

    /// Exact substitution `t := value`; fails on a pole.
    pub fn evaluate(&self, value: &QRat) -> Result<QRat, ArithError> {
        let d = self.den.eval(value);
        if d.is_zero() {
            return Err(ArithError::Pole(value.to_string()));
        }
        Ok(self.num.eval(value) / d)
    }

    /// The substitution `t := 1/t`.
    pub fn subst_t_inverse(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let a = self.num.degree().unwrap_or(0);
        let b = self.den.degree().unwrap_or(0);
        // f(1/t) = rev(num) t^b / (rev(den) t^a), shifted to clear negative powers
        let (num, den) = if a >= b {
            (self.num.reversed(), &self.den.reversed() * &Poly::monomial(QRat::one(), a - b))
        } else {
            (&self.num.reversed() * &Poly::monomial(QRat::one(), b - a), self.den.reversed())
        };
        Self::reduced(num, den)
    }
}

/// `[n]_t = 1 + t + ... + t^(n-1)`.
pub fn q_integer(n: usize) -> RationalFunction {
    RationalFunction::from_poly(Poly::new(vec![QRat::one(); n]))
}

/// `[n]_t! = [1]_t [2]_t ... [n]_t`, with `[0]_t! = 1`.
pub fn q_factorial(n: usize) -> RationalFunction {
    let mut acc = RationalFunction::one();
    for k in 1..=n {
        acc = &acc * &q_integer(k);
    }
    acc
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RationalFunction::reduced(&self.num + &rhs.num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RationalFunction::reduced(num, &self.den * &rhs.den)
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        // cross-reduce before multiplying to keep degrees low
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let n1 = if g1.is_one() { self.num.clone() } else { self.num.div_rem(&g1).unwrap().0 };
        let d2 = if g1.is_one() { rhs.den.clone() } else { rhs.den.div_rem(&g1).unwrap().0 };
        let n2 = if g2.is_one() { rhs.num.clone() } else { rhs.num.div_rem(&g2).unwrap().0 };
        let d1 = if g2.is_one() { self.den.clone() } else { self.den.div_rem(&g2).unwrap().0 };
        RationalFunction::reduced(&n1 * &n2, &d1 * &d2)
    }
}

impl Add for RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: RationalFunction) -> RationalFunction {
        &self + &rhs
    }
}
impl Sub for RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: RationalFunction) -> RationalFunction {
        &self - &rhs
    }
}
impl Mul for RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: RationalFunction) -> RationalFunction {
        &self * &rhs
    }
}
impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// `t - 1` as a polynomial.
pub fn t_minus_one() -> Poly {
    Poly::from_i64(&[-1, 1])
}

/// `t^k - 1` as a polynomial.
pub fn t_pow_minus_one(k: usize) -> Poly {
    let mut c = vec![QRat::zero(); k + 1];
    c[0] = -QRat::one();
    c[k] = QRat::one();
    Poly::new(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rf(num: &[i64], den: &[i64]) -> RationalFunction {
        RationalFunction::new(Poly::from_i64(num), Poly::from_i64(den)).unwrap()
    }

    #[test]
    fn inverse_pair_multiplies_to_one() {
        let tm1 = rf(&[-1, 1], &[1]);
        let inv = rf(&[1], &[-1, 1]);
        assert!((&tm1 * &inv).is_one());
    }

    #[test]
    fn additive_inverse_cancels() {
        let a = rf(&[1, -1], &[1]); // 1 - t
        let b = rf(&[-1, 1], &[1]); // t - 1
        assert!((&a + &b).is_zero());
    }

    #[test]
    fn reduction_matches_long_division() {
        // long-division oracle: (t^2 - 1) = (t + 1)(t - 1) + 0
        let num = Poly::from_i64(&[-1, 0, 1]);
        let den = Poly::from_i64(&[-1, 1]);
        let (q, r) = num.div_rem(&den).unwrap();
        assert!(r.is_zero());
        assert_eq!(q, Poly::from_i64(&[1, 1]));
        let reduced = RationalFunction::new(num, den).unwrap();
        assert_eq!(reduced, rf(&[1, 1], &[1]));
    }

    #[test]
    fn q_integers_and_factorials() {
        assert_eq!(q_integer(3), rf(&[1, 1, 1], &[1]));
        assert!(q_factorial(1).is_one());
        assert_eq!(q_factorial(3), rf(&[1, 2, 2, 1], &[1]));
    }

    #[test]
    fn evaluation_and_poles() {
        let f = rf(&[1, 1, 1], &[1]);
        assert_eq!(f.evaluate(&QRat::one()).unwrap(), QRat::from_integer(3.into()));
        let g = rf(&[0, 1], &[-1, 1]); // t/(t-1)
        assert!(matches!(g.evaluate(&QRat::one()), Err(ArithError::Pole(_))));
        // reduces to t + 1 before substitution
        let h = rf(&[-1, 0, 1], &[-1, 1]);
        assert_eq!(
            h.evaluate(&QRat::from_integer(2.into())).unwrap(),
            QRat::from_integer(3.into())
        );
    }

    #[test]
    fn zero_is_canonical() {
        let z = rf(&[0], &[3, 7]);
        assert!(z.is_zero());
        assert_eq!(z, RationalFunction::zero());
        assert!(z.denominator().is_one());
    }

    #[test]
    fn monic_denominator_normalization() {
        // 1/(2t - 2) == (1/2)/(t - 1)
        let f = rf(&[1], &[-2, 2]);
        assert!(f.denominator().leading().unwrap().is_one());
        let half = QRat::new(1.into(), 2.into());
        assert_eq!(f.numerator().coeff(0), half);
    }

    #[test]
    fn display_formats() {
        let f = rf(&[0, -1, 1], &[1, 1]);
        assert_eq!(f.to_string(), "(t^2 - t)/(t + 1)");
        assert_eq!(rf(&[-1, 1], &[1]).to_string(), "t - 1");
        assert_eq!(RationalFunction::zero().to_string(), "0");
    }

    #[test]
    fn subst_t_inverse_involution() {
        let f = rf(&[0, 1, 2], &[-1, 1]);
        let g = f.subst_t_inverse();
        assert_eq!(g.subst_t_inverse(), f);
        // f(1/t) at t=2 equals f at 1/2
        let two = QRat::from_integer(2.into());
        let half = QRat::new(1.into(), 2.into());
        assert_eq!(g.evaluate(&two).unwrap(), f.evaluate(&half).unwrap());
    }

    fn arb_poly() -> impl Strategy<Value = Poly> {
        prop::collection::vec(-4i64..=4, 0..4).prop_map(|v| Poly::from_i64(&v))
    }

    fn arb_rf() -> impl Strategy<Value = RationalFunction> {
        (arb_poly(), arb_poly()).prop_map(|(n, d)| {
            let d = if d.is_zero() { Poly::one() } else { d };
            RationalFunction::new(n, d).unwrap()
        })
    }

    proptest! {
        #[test]
        fn field_axioms(a in arb_rf(), b in arb_rf(), c in arb_rf()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert!((&a - &a).is_zero());
            if !a.is_zero() {
                prop_assert!((&a * &a.inverse().unwrap()).is_one());
            }
        }

        #[test]
        fn canonical_equality(a in arb_rf()) {
            // a == b iff identical components
            let b = RationalFunction::new(a.numerator().clone(), a.denominator().clone()).unwrap();
            prop_assert_eq!(a.numerator(), b.numerator());
            prop_assert_eq!(a.denominator(), b.denominator());
        }
    }
}
