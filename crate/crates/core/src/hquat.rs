//! Exact quaternion arithmetic.
//!
//! [`Hq`] is a Hurwitz integer stored in doubled coordinates, [`Quat`] is a
//! quaternion over an exact field (rationals for [`Qq`], `Q(√2)` for
//! [`R2Quat`]) and [`R2`] is the ordered field `Q(√2)` itself.

use std::cmp::Ordering;
use std::fmt;
use std::hash::Hash;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::ParseError;

/// Rational numbers used throughout.
pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn ck(v: Option<i64>) -> i64 {
    v.expect("Hurwitz arithmetic overflow")
}

/// A Hurwitz integer `(d0 + d1 i + d2 j + d3 k) / 2` with `d0 ≡ d1 ≡ d2 ≡ d3 (mod 2)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Hq {
    d: [i64; 4],
}

impl Hq {
    pub const ZERO: Hq = Hq { d: [0, 0, 0, 0] };
    pub const ONE: Hq = Hq { d: [2, 0, 0, 0] };
    pub const I: Hq = Hq { d: [0, 2, 0, 0] };
    pub const J: Hq = Hq { d: [0, 0, 2, 0] };
    pub const K: Hq = Hq { d: [0, 0, 0, 2] };
    /// α = (1+i+j+k)/2
    pub const ALPHA: Hq = Hq { d: [1, 1, 1, 1] };
    /// ω = (−1+i+j+k)/2
    pub const OMEGA: Hq = Hq { d: [-1, 1, 1, 1] };
    /// p = 1 − i
    pub const P: Hq = Hq { d: [2, -2, 0, 0] };
    /// ε = (1−i−j+k)/2
    pub const EPSILON: Hq = Hq { d: [1, -1, -1, 1] };

    /// Builds from doubled coordinates, checking the Hurwitz parity condition.
    pub fn from_doubled(d: [i64; 4]) -> Option<Hq> {
        let par = d[0].rem_euclid(2);
        if d.iter().all(|x| x.rem_euclid(2) == par) {
            Some(Hq { d })
        } else {
            None
        }
    }

    /// `a + b i + c j + d k` with integer coefficients.
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Hq {
        Hq { d: [ck(a.checked_mul(2)), ck(b.checked_mul(2)), ck(c.checked_mul(2)), ck(d.checked_mul(2))] }
    }

    pub fn from_int(n: i64) -> Hq {
        Hq::new(n, 0, 0, 0)
    }

    pub fn doubled(&self) -> [i64; 4] {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.d == [0; 4]
    }

    pub fn conj(&self) -> Hq {
        Hq { d: [self.d[0], -self.d[1], -self.d[2], -self.d[3]] }
    }

    /// `|x|² = x̄x`, always a nonnegative integer.
    pub fn norm(&self) -> i64 {
        let s = self.d.iter().fold(0i64, |acc, &x| ck(acc.checked_add(ck(x.checked_mul(x)))));
        debug_assert_eq!(s % 4, 0);
        s / 4
    }

    /// Twice the real part.
    pub fn re2(&self) -> i64 {
        self.d[0]
    }

    pub fn is_real(&self) -> bool {
        self.d[1] == 0 && self.d[2] == 0 && self.d[3] == 0
    }

    pub fn is_imaginary(&self) -> bool {
        self.d[0] == 0
    }

    /// Imaginary part, which is Hurwitz only when the coordinates are integral.
    pub fn im(&self) -> Qq {
        let q = self.to_qq();
        q.im()
    }

    pub fn re(&self) -> Rational {
        rat(self.d[0], 2)
    }

    pub fn to_qq(&self) -> Qq {
        Quat::new(rat(self.d[0], 2), rat(self.d[1], 2), rat(self.d[2], 2), rat(self.d[3], 2))
    }

    pub fn to_r2q(&self) -> R2Quat {
        self.to_qq().map(R2::from_rational)
    }

    pub fn from_qq(q: &Qq) -> Option<Hq> {
        let mut d = [0i64; 4];
        for (slot, c) in d.iter_mut().zip(q.c.iter()) {
            let two = c * rat(2, 1);
            if !two.is_integer() {
                return None;
            }
            *slot = two.to_integer().to_i64()?;
        }
        Hq::from_doubled(d)
    }

    /// Exact halving; `None` if `x/2` is not Hurwitz.
    pub fn half(&self) -> Option<Hq> {
        if self.d.iter().any(|x| x % 2 != 0) {
            return None;
        }
        Hq::from_doubled([self.d[0] / 2, self.d[1] / 2, self.d[2] / 2, self.d[3] / 2])
    }

    /// Membership in the two-sided ideal `pH`.
    pub fn in_p_ideal(&self) -> bool {
        // p⁻¹x = p̄x/2
        (Hq::P.conj() * *self).half().is_some()
    }

    /// A Hurwitz integer nearest to `q`; the distance is at most `1/√2`.
    pub fn nearest(q: &Qq) -> Hq {
        let round = |x: &Rational, offset: &Rational| -> i64 {
            // nearest integer to x − offset, then shifted back
            let y = x - offset + rat(1, 2);
            y.floor().to_integer().to_i64().expect("small coordinate")
        };
        let lip = Hq::new(round(&q.c[0], &rat(0, 1)), round(&q.c[1], &rat(0, 1)), round(&q.c[2], &rat(0, 1)), round(&q.c[3], &rat(0, 1)));
        let half = rat(1, 2);
        let shifted: [i64; 4] = std::array::from_fn(|t| 2 * round(&q.c[t], &half) + 1);
        let other = Hq::from_doubled(shifted).expect("odd doubled coordinates");
        let dist = |h: &Hq| (q.clone() - h.to_qq()).norm();
        if dist(&other) < dist(&lip) {
            other
        } else {
            lip
        }
    }

    /// `p̄⁻¹·x` when it is Hurwitz.
    pub fn pbar_inv_mul(&self) -> Option<Hq> {
        (Hq::P * *self).half()
    }

    pub fn inverse(&self) -> Option<Qq> {
        self.to_qq().inv()
    }

    /// The 24 units of the Hurwitz order.
    pub fn units() -> Vec<Hq> {
        let mut out = Vec::with_capacity(24);
        for s in [2i64, -2] {
            for axis in 0..4 {
                let mut d = [0; 4];
                d[axis] = s;
                out.push(Hq { d });
            }
        }
        for mask in 0..16u32 {
            let d = [0, 1, 2, 3].map(|b| if mask & (1 << b) != 0 { -1 } else { 1 });
            out.push(Hq { d });
        }
        out
    }

    /// The six order-four units `±i, ±j, ±k`.
    pub fn order_four_units() -> [Hq; 6] {
        [Hq::I, -Hq::I, Hq::J, -Hq::J, Hq::K, -Hq::K]
    }

    pub fn is_unit(&self) -> bool {
        self.norm() == 1
    }

    /// Unit inverse (conjugate); only valid for units.
    pub fn unit_inv(&self) -> Hq {
        debug_assert!(self.is_unit());
        self.conj()
    }

    pub fn residue_mod_p(&self) -> F4 {
        for r in [F4::Zero, F4::One, F4::Alpha, F4::AlphaBar] {
            if (*self - r.representative()).in_p_ideal() {
                return r;
            }
        }
        unreachable!("H/pH has four residues")
    }

    /// All Hurwitz integers of the given norm.
    pub fn of_norm(n: i64) -> Vec<Hq> {
        let target = 4 * n;
        let bound = (target as f64).sqrt() as i64 + 1;
        let mut out = Vec::new();
        for a in -bound..=bound {
            for b in -bound..=bound {
                let ab = a * a + b * b;
                if ab > target {
                    continue;
                }
                for c in -bound..=bound {
                    let abc = ab + c * c;
                    if abc > target {
                        continue;
                    }
                    let rest = target - abc;
                    let d = (rest as f64).sqrt().round() as i64;
                    for dd in [d, -d] {
                        if dd * dd == rest {
                            if let Some(h) = Hq::from_doubled([a, b, c, dd]) {
                                if !out.contains(&h) {
                                    out.push(h);
                                }
                            }
                        }
                    }
                }
            }
        }
        out.sort();
        out
    }

    pub fn to_f64(&self) -> [f64; 4] {
        self.d.map(|x| x as f64 / 2.0)
    }
}

impl Add for Hq {
    type Output = Hq;
    fn add(self, o: Hq) -> Hq {
        Hq { d: [0, 1, 2, 3].map(|t| ck(self.d[t].checked_add(o.d[t]))) }
    }
}

impl Sub for Hq {
    type Output = Hq;
    fn sub(self, o: Hq) -> Hq {
        Hq { d: [0, 1, 2, 3].map(|t| ck(self.d[t].checked_sub(o.d[t]))) }
    }
}

impl AddAssign for Hq {
    fn add_assign(&mut self, o: Hq) {
        *self = *self + o;
    }
}

impl SubAssign for Hq {
    fn sub_assign(&mut self, o: Hq) {
        *self = *self - o;
    }
}

impl Neg for Hq {
    type Output = Hq;
    fn neg(self) -> Hq {
        Hq { d: self.d.map(|x| -x) }
    }
}

fn qmul<T>(x: [T; 4], y: [T; 4]) -> [T; 4]
where
    T: Clone + Add<Output = T> + Sub<Output = T> + Mul<Output = T>,
{
    let [a1, b1, c1, d1] = x;
    let [a2, b2, c2, d2] = y;
    let m = |u: &T, v: &T| u.clone() * v.clone();
    [
        m(&a1, &a2) - m(&b1, &b2) - m(&c1, &c2) - m(&d1, &d2),
        m(&a1, &b2) + m(&b1, &a2) + m(&c1, &d2) - m(&d1, &c2),
        m(&a1, &c2) - m(&b1, &d2) + m(&c1, &a2) + m(&d1, &b2),
        m(&a1, &d2) + m(&b1, &c2) - m(&c1, &b2) + m(&d1, &a2),
    ]
}

impl Mul for Hq {
    type Output = Hq;
    fn mul(self, o: Hq) -> Hq {
        let x = self.d.map(i128::from);
        let y = o.d.map(i128::from);
        let prod = qmul(x, y);
        let d = prod.map(|v| {
            debug_assert_eq!(v % 2, 0);
            i64::try_from(v / 2).expect("Hurwitz arithmetic overflow")
        });
        Hq { d }
    }
}

impl fmt::Display for Hq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})/2", self.d[0], self.d[1], self.d[2], self.d[3])
    }
}

impl fmt::Debug for Hq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Hq {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Hq, ParseError> {
        let bad = || ParseError::Quaternion(s.to_string());
        let body = s.trim().strip_prefix('(').and_then(|r| r.strip_suffix(")/2")).ok_or_else(bad)?;
        let parts: Vec<i64> = body
            .split(',')
            .map(|t| t.trim().parse::<i64>())
            .collect::<Result<_, _>>()
            .map_err(|_| bad())?;
        let d: [i64; 4] = parts.try_into().map_err(|_| bad())?;
        Hq::from_doubled(d).ok_or_else(bad)
    }
}

impl serde::Serialize for Hq {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for Hq {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Hq, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Residues of `H/pH ≅ F₄`, named by their canonical representatives.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum F4 {
    Zero,
    One,
    Alpha,
    AlphaBar,
}

impl F4 {
    pub fn representative(self) -> Hq {
        match self {
            F4::Zero => Hq::ZERO,
            F4::One => Hq::ONE,
            F4::Alpha => Hq::ALPHA,
            F4::AlphaBar => Hq::ALPHA.conj(),
        }
    }

    // 0, 1, x, x+1 with x² = x + 1
    fn bits(self) -> u8 {
        match self {
            F4::Zero => 0,
            F4::One => 1,
            F4::Alpha => 2,
            F4::AlphaBar => 3,
        }
    }

    fn from_bits(b: u8) -> F4 {
        match b & 3 {
            0 => F4::Zero,
            1 => F4::One,
            2 => F4::Alpha,
            _ => F4::AlphaBar,
        }
    }
}

impl Add for F4 {
    type Output = F4;
    fn add(self, o: F4) -> F4 {
        F4::from_bits(self.bits() ^ o.bits())
    }
}

impl Mul for F4 {
    type Output = F4;
    fn mul(self, o: F4) -> F4 {
        let (a, b) = (self.bits(), o.bits());
        let (a1, a0, b1, b0) = (a >> 1, a & 1, b >> 1, b & 1);
        let hi = a1 & b1;
        let c1 = (a1 & b0) ^ (a0 & b1) ^ hi;
        let c0 = (a0 & b0) ^ hi;
        F4::from_bits((c1 << 1) | c0)
    }
}

/// Exact fields that quaternion coefficients may live in.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_rational(r: Rational) -> Self;
}

impl Field for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_rational(r: Rational) -> Self {
        r
    }
}

/// `a + b√2` with rational `a`, `b`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct R2 {
    pub a: Rational,
    pub b: Rational,
}

impl R2 {
    pub fn new(a: Rational, b: Rational) -> R2 {
        R2 { a, b }
    }

    pub fn int(n: i64) -> R2 {
        R2::new(rat(n, 1), rat(0, 1))
    }

    pub fn sqrt2() -> R2 {
        R2::new(rat(0, 1), rat(1, 1))
    }

    /// `(a − b√2)`
    pub fn galois_conj(&self) -> R2 {
        R2::new(self.a.clone(), -self.b.clone())
    }

    /// `a² − 2b²`
    pub fn field_norm(&self) -> Rational {
        &self.a * &self.a - rat(2, 1) * &self.b * &self.b
    }

    pub fn inv(&self) -> Option<R2> {
        let n = self.field_norm();
        if Zero::is_zero(&n) {
            return None;
        }
        let c = self.galois_conj();
        Some(R2::new(c.a / &n, c.b / n))
    }

    pub fn signum(&self) -> Ordering {
        let sa = self.a.cmp(&Zero::zero());
        let sb = self.b.cmp(&Zero::zero());
        match (sa, sb) {
            (Ordering::Equal, s) | (s, Ordering::Equal) => s,
            (s1, s2) if s1 == s2 => s1,
            _ => {
                // opposite signs: compare a² with 2b²
                let a2 = &self.a * &self.a;
                let b2 = rat(2, 1) * &self.b * &self.b;
                match a2.cmp(&b2) {
                    Ordering::Greater => sa,
                    Ordering::Less => sb,
                    Ordering::Equal => Ordering::Equal,
                }
            }
        }
    }

    pub fn is_rational(&self) -> bool {
        Zero::is_zero(&self.b)
    }

    pub fn to_f64(&self) -> f64 {
        self.a.to_f64().unwrap_or(f64::NAN) + self.b.to_f64().unwrap_or(f64::NAN) * std::f64::consts::SQRT_2
    }

    pub fn abs(&self) -> R2 {
        if self.signum() == Ordering::Less {
            -self.clone()
        } else {
            self.clone()
        }
    }
}

/// Total order on `Q(√2)` through its real embedding.
pub fn r2_compare(x: &R2, y: &R2) -> Ordering {
    (x.clone() - y.clone()).signum()
}

impl PartialOrd for R2 {
    fn partial_cmp(&self, other: &R2) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for R2 {
    fn cmp(&self, other: &R2) -> Ordering {
        r2_compare(self, other)
    }
}

impl Add for R2 {
    type Output = R2;
    fn add(self, o: R2) -> R2 {
        R2::new(self.a + o.a, self.b + o.b)
    }
}

impl Sub for R2 {
    type Output = R2;
    fn sub(self, o: R2) -> R2 {
        R2::new(self.a - o.a, self.b - o.b)
    }
}

impl Mul for R2 {
    type Output = R2;
    fn mul(self, o: R2) -> R2 {
        let a = &self.a * &o.a + rat(2, 1) * &self.b * &o.b;
        let b = &self.a * &o.b + &self.b * &o.a;
        R2::new(a, b)
    }
}

impl Div for R2 {
    type Output = R2;
    fn div(self, o: R2) -> R2 {
        self * o.inv().expect("division by zero in Q(√2)")
    }
}

impl Neg for R2 {
    type Output = R2;
    fn neg(self) -> R2 {
        R2::new(-self.a, -self.b)
    }
}

impl Field for R2 {
    fn zero() -> Self {
        R2::int(0)
    }
    fn one() -> Self {
        R2::int(1)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.a) && Zero::is_zero(&self.b)
    }
    fn from_rational(r: Rational) -> Self {
        R2::new(r, rat(0, 1))
    }
}

fn fmt_rat(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn parse_rat(s: &str) -> Option<Rational> {
    let (n, d) = s.split_once('/').unwrap_or((s, "1"));
    let n: BigInt = n.trim().parse().ok()?;
    let d: BigInt = d.trim().parse().ok()?;
    if Zero::is_zero(&d) {
        return None;
    }
    Some(BigRational::new(n, d))
}

impl fmt::Display for R2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+{}*s2", fmt_rat(&self.a), fmt_rat(&self.b))
    }
}

impl fmt::Debug for R2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for R2 {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<R2, ParseError> {
        let bad = || ParseError::R2(s.to_string());
        let s = s.trim();
        // the rational part never contains '+', so the first '+' separates the two
        let (a, b) = s.split_once('+').ok_or_else(bad)?;
        let b = b.strip_suffix("*s2").ok_or_else(bad)?;
        Ok(R2::new(parse_rat(a).ok_or_else(bad)?, parse_rat(b).ok_or_else(bad)?))
    }
}

impl serde::Serialize for R2 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A quaternion with coefficients in an exact field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Quat<F> {
    pub c: [F; 4],
}

/// Rational quaternions.
pub type Qq = Quat<Rational>;
/// Quaternions over `Q(√2)`.
pub type R2Quat = Quat<R2>;

impl<F: Field> Quat<F> {
    pub fn new(a: F, b: F, c: F, d: F) -> Self {
        Quat { c: [a, b, c, d] }
    }

    pub fn scalar(a: F) -> Self {
        Quat::new(a, F::zero(), F::zero(), F::zero())
    }

    pub fn zero() -> Self {
        Quat::scalar(F::zero())
    }

    pub fn one() -> Self {
        Quat::scalar(F::one())
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Field::is_zero)
    }

    pub fn conj(&self) -> Self {
        let [a, b, c, d] = self.c.clone();
        Quat::new(a, -b, -c, -d)
    }

    pub fn norm(&self) -> F {
        self.c.iter().fold(F::zero(), |acc, x| acc + x.clone() * x.clone())
    }

    pub fn re(&self) -> F {
        self.c[0].clone()
    }

    pub fn im(&self) -> Self {
        let [_, b, c, d] = self.c.clone();
        Quat::new(F::zero(), b, c, d)
    }

    pub fn scale(&self, s: &F) -> Self {
        Quat { c: self.c.clone().map(|x| x * s.clone()) }
    }

    pub fn inv(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        Some(Quat { c: self.conj().c.map(|x| x / n.clone()) })
    }

    pub fn map<G: Field>(&self, f: impl Fn(F) -> G) -> Quat<G> {
        Quat { c: self.c.clone().map(f) }
    }
}

impl Qq {
    pub fn to_hq(&self) -> Option<Hq> {
        Hq::from_qq(self)
    }

    pub fn is_hurwitz(&self) -> bool {
        Hq::from_qq(self).is_some()
    }

    pub fn to_r2q(&self) -> R2Quat {
        self.map(R2::from_rational)
    }

    pub fn to_f64(&self) -> [f64; 4] {
        self.c.clone().map(|x| x.to_f64().unwrap_or(f64::NAN))
    }
}

impl R2Quat {
    /// ξ = (1+i)/√2, a primitive eighth root of unity with ξ² = i.
    pub fn xi() -> R2Quat {
        let h = R2::new(rat(0, 1), rat(1, 2));
        Quat::new(h.clone(), h, R2::int(0), R2::int(0))
    }
}

impl<F: Field> Add for Quat<F> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let [a, b, c, d] = self.c;
        let [e, f, g, h] = o.c;
        Quat::new(a + e, b + f, c + g, d + h)
    }
}

impl<F: Field> Sub for Quat<F> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        let [a, b, c, d] = self.c;
        let [e, f, g, h] = o.c;
        Quat::new(a - e, b - f, c - g, d - h)
    }
}

impl<F: Field> Neg for Quat<F> {
    type Output = Self;
    fn neg(self) -> Self {
        Quat { c: self.c.map(|x| -x) }
    }
}

impl<F: Field> Mul for Quat<F> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Quat { c: qmul(self.c, o.c) }
    }
}

impl<F: Field> fmt::Debug for Quat<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:?},{:?},{:?},{:?}]", self.c[0], self.c[1], self.c[2], self.c[3])
    }
}

impl fmt::Display for Qq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(h) = self.to_hq() {
            return write!(f, "{h}");
        }
        let parts: Vec<String> = self.c.iter().map(fmt_rat).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl fmt::Display for R2Quat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.c.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl From<Hq> for Qq {
    fn from(h: Hq) -> Qq {
        h.to_qq()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiplication_table() {
        assert_eq!(Hq::I * Hq::J, Hq::K);
        assert_eq!(Hq::J * Hq::K, Hq::I);
        assert_eq!(Hq::K * Hq::I, Hq::J);
        assert_eq!(Hq::I * Hq::J * Hq::K, Hq::from_int(-1));
        assert_eq!(Hq::I * Hq::I, Hq::from_int(-1));
    }

    #[test]
    fn p_times_alpha() {
        assert_eq!(Hq::P * Hq::ALPHA, Hq::ONE + Hq::J);
        assert_eq!(Hq::P * Hq::P.conj(), Hq::from_int(2));
    }

    #[test]
    fn conj_and_norm() {
        assert_eq!(Hq::P.conj(), Hq::new(1, 1, 0, 0));
        assert_eq!(Hq::P.norm(), 2);
        assert_eq!(Hq::ALPHA.norm(), 1);
        let x = Hq::new(2, 2, 0, 0);
        assert_eq!(x.conj(), Hq::new(2, -2, 0, 0));
        assert_eq!(x.norm(), 8);
    }

    #[test]
    fn twenty_four_units() {
        let u = Hq::units();
        assert_eq!(u.len(), 24);
        assert!(u.contains(&Hq::ALPHA));
        for a in &u {
            assert_eq!(a.norm(), 1);
            assert!(u.contains(&a.conj()));
            for b in &u {
                assert!(u.contains(&(*a * *b)));
            }
        }
        assert_eq!(Hq::of_norm(1), {
            let mut s = u.clone();
            s.sort();
            s
        });
    }

    #[test]
    fn residues() {
        assert_eq!(Hq::J.residue_mod_p(), F4::One);
        assert_eq!(Hq::I.residue_mod_p(), F4::One);
        assert_eq!(Hq::K.residue_mod_p(), F4::One);
        assert_eq!(Hq::P.residue_mod_p(), F4::Zero);
        assert_eq!(Hq::ALPHA.residue_mod_p(), F4::Alpha);
        assert_eq!(Hq::ALPHA.conj().residue_mod_p(), F4::AlphaBar);
        assert_eq!(F4::Alpha * F4::AlphaBar, F4::One);
        assert_eq!(F4::Alpha * F4::Alpha, F4::AlphaBar);
    }

    #[test]
    fn epsilon_bar_minus_one_is_unit() {
        assert!((Hq::EPSILON.conj() - Hq::ONE).is_unit());
    }

    #[test]
    fn norm_two_and_four_counts() {
        assert_eq!(Hq::of_norm(2).len(), 24);
        assert_eq!(Hq::of_norm(4).len(), 24);
        for x in Hq::of_norm(2) {
            assert!(x.in_p_ideal());
        }
    }

    #[test]
    fn r2_ordering_examples() {
        let rho2 = R2::new(rat(-2, 14), rat(3, 14));
        assert_eq!(r2_compare(&rho2, &R2::int(0)), Ordering::Greater);
        // it really is 1/(2+3√2)
        let d = R2::new(rat(2, 1), rat(3, 1));
        assert_eq!(d.inv().unwrap(), rho2);
        assert_eq!(R2::sqrt2() * R2::sqrt2(), R2::int(2));
        let x = R2::new(rat(3, 1), rat(1, 1));
        assert_eq!(r2_compare(&x, &R2::int(3)), Ordering::Greater);
    }

    #[test]
    fn xi_squares_to_i() {
        let xi = R2Quat::xi();
        assert_eq!(xi.clone() * xi.clone(), Hq::I.to_r2q());
        assert_eq!(xi.norm(), R2::int(1));
    }

    #[test]
    fn text_encodings() {
        assert_eq!(Hq::P.to_string(), "(2,-2,0,0)/2");
        assert_eq!("(2,-2,0,0)/2".parse::<Hq>().unwrap(), Hq::P);
        assert!("(1,0,0,0)/2".parse::<Hq>().is_err());
        let r = R2::new(rat(-1, 7), rat(3, 14));
        assert_eq!(r.to_string(), "-1/7+3/14*s2");
        assert_eq!(r.to_string().parse::<R2>().unwrap(), r);
    }
}
