//! Arbitrary-precision integers and rationals with an inline fast path.
//!
//! Almost every entry met while reducing coinvariant relations fits in a
//! machine word, so both types keep small values unboxed and only promote to
//! `BigInt` when an intermediate result leaves the `i64` range.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// An integer that stays inline while it fits in an `i64`.
///
/// Invariant: the `Big` variant never holds a value representable as `i64`.
#[derive(Clone, Debug)]
pub enum Int {
    Small(i64),
    Big(BigInt),
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Int {
    pub const ZERO: Int = Int::Small(0);
    pub const ONE: Int = Int::Small(1);

    pub fn from_i128(v: i128) -> Int {
        match i64::try_from(v) {
            Ok(s) => Int::Small(s),
            Err(_) => Int::Big(BigInt::from(v)),
        }
    }

    pub fn from_big(b: BigInt) -> Int {
        match b.to_i64() {
            Some(s) => Int::Small(s),
            None => Int::Big(b),
        }
    }

    pub fn to_big(&self) -> BigInt {
        match self {
            Int::Small(s) => BigInt::from(*s),
            Int::Big(b) => b.clone(),
        }
    }

    pub fn as_i64(&self) -> Option<i64> {
        match self {
            Int::Small(s) => Some(*s),
            Int::Big(_) => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Int::Small(0))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Int::Small(1))
    }

    pub fn signum(&self) -> i32 {
        match self {
            Int::Small(s) => s.signum() as i32,
            Int::Big(b) => {
                if b.is_negative() {
                    -1
                } else {
                    1
                }
            }
        }
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    pub fn abs(&self) -> Int {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Nonnegative greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Int) -> Int {
        match (self, other) {
            (Int::Small(a), Int::Small(b)) => {
                let g = gcd_u128(a.unsigned_abs() as u128, b.unsigned_abs() as u128);
                Int::from_i128(g as i128)
            }
            _ => Int::from_big(self.to_big().gcd(&other.to_big())),
        }
    }

    /// Quotient of a division known to be exact.
    pub fn div_exact(&self, other: &Int) -> Int {
        match (self, other) {
            (Int::Small(a), Int::Small(b)) => Int::from_i128(*a as i128 / *b as i128),
            _ => Int::from_big(self.to_big() / other.to_big()),
        }
    }

    pub fn pow(&self, e: u32) -> Int {
        let mut acc = Int::ONE;
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn factorial(k: u32) -> Int {
        (1..=k as i64).fold(Int::ONE, |acc, i| &acc * &Int::Small(i))
    }

    /// Falling factorial `a (a-1) ... (a-k+1)`.
    pub fn falling(a: u32, k: u32) -> Int {
        (0..k).fold(Int::ONE, |acc, i| &acc * &Int::Small(a as i64 - i as i64))
    }
}

impl From<i64> for Int {
    fn from(v: i64) -> Self {
        Int::Small(v)
    }
}

impl From<i32> for Int {
    fn from(v: i32) -> Self {
        Int::Small(v as i64)
    }
}

impl From<BigInt> for Int {
    fn from(v: BigInt) -> Self {
        Int::from_big(v)
    }
}

impl PartialEq for Int {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Int::Small(a), Int::Small(b)) => a == b,
            (Int::Big(a), Int::Big(b)) => a == b,
            _ => false,
        }
    }
}

impl Eq for Int {}

impl Hash for Int {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match self {
            Int::Small(s) => {
                0u8.hash(state);
                s.hash(state)
            }
            Int::Big(b) => {
                1u8.hash(state);
                b.hash(state)
            }
        }
    }
}

impl Ord for Int {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Int::Small(a), Int::Small(b)) => a.cmp(b),
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl PartialOrd for Int {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Neg for &Int {
    type Output = Int;
    fn neg(self) -> Int {
        match self {
            Int::Small(s) => Int::from_i128(-(*s as i128)),
            Int::Big(b) => Int::from_big(-b),
        }
    }
}

impl Neg for Int {
    type Output = Int;
    fn neg(self) -> Int {
        -&self
    }
}

impl Add for &Int {
    type Output = Int;
    fn add(self, rhs: &Int) -> Int {
        match (self, rhs) {
            (Int::Small(a), Int::Small(b)) => Int::from_i128(*a as i128 + *b as i128),
            _ => Int::from_big(self.to_big() + rhs.to_big()),
        }
    }
}

impl Sub for &Int {
    type Output = Int;
    fn sub(self, rhs: &Int) -> Int {
        match (self, rhs) {
            (Int::Small(a), Int::Small(b)) => Int::from_i128(*a as i128 - *b as i128),
            _ => Int::from_big(self.to_big() - rhs.to_big()),
        }
    }
}

impl Mul for &Int {
    type Output = Int;
    fn mul(self, rhs: &Int) -> Int {
        match (self, rhs) {
            (Int::Small(a), Int::Small(b)) => Int::from_i128(*a as i128 * *b as i128),
            _ => Int::from_big(self.to_big() * rhs.to_big()),
        }
    }
}

impl fmt::Display for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Int::Small(s) => write!(f, "{s}"),
            Int::Big(b) => write!(f, "{b}"),
        }
    }
}

/// Exact rational number in canonical form: `gcd(|num|, den) = 1`, `den > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rational {
    num: Int,
    den: Int,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal {0:?}")]
pub struct ParseRationalError(pub String);

impl Rational {
    pub fn zero() -> Rational {
        Rational {
            num: Int::ZERO,
            den: Int::ONE,
        }
    }

    pub fn one() -> Rational {
        Rational {
            num: Int::ONE,
            den: Int::ONE,
        }
    }

    pub fn from_int(v: Int) -> Rational {
        Rational {
            num: v,
            den: Int::ONE,
        }
    }

    /// Builds `num / den`; panics on a zero denominator.
    pub fn new(num: Int, den: Int) -> Rational {
        assert!(!den.is_zero(), "zero denominator");
        Self::normalize(num, den)
    }

    pub fn ratio(num: i64, den: i64) -> Rational {
        Self::new(Int::Small(num), Int::Small(den))
    }

    fn from_i128_parts(num: i128, den: i128) -> Rational {
        debug_assert!(den != 0);
        let g = gcd_u128(num.unsigned_abs(), den.unsigned_abs()) as i128;
        let (mut n, mut d) = (num / g, den / g);
        if d < 0 {
            n = -n;
            d = -d;
        }
        Rational {
            num: Int::from_i128(n),
            den: Int::from_i128(d),
        }
    }

    fn normalize(num: Int, den: Int) -> Rational {
        if let (Int::Small(n), Int::Small(d)) = (&num, &den) {
            return Self::from_i128_parts(*n as i128, *d as i128);
        }
        if num.is_zero() {
            return Rational::zero();
        }
        let g = num.gcd(&den);
        let (mut n, mut d) = (num.div_exact(&g), den.div_exact(&g));
        if d.is_negative() {
            n = -n;
            d = -d;
        }
        Rational { num: n, den: d }
    }

    pub fn numer(&self) -> &Int {
        &self.num
    }

    pub fn denom(&self) -> &Int {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    pub fn signum(&self) -> i32 {
        self.num.signum()
    }

    pub fn recip(&self) -> Rational {
        Rational::new(self.den.clone(), self.num.clone())
    }

    pub fn abs(&self) -> Rational {
        Rational {
            num: self.num.abs(),
            den: self.den.clone(),
        }
    }

    pub fn pow(&self, e: u32) -> Rational {
        Rational {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::zero()
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational::from_int(Int::Small(v))
    }
}

impl From<i32> for Rational {
    fn from(v: i32) -> Self {
        Rational::from(v as i64)
    }
}

impl From<Int> for Rational {
    fn from(v: Int) -> Self {
        Rational::from_int(v)
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.num * &other.den).cmp(&(&other.num * &self.den))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        -&self
    }
}

impl Add for &Rational {
    type Output = Rational;
    fn add(self, rhs: &Rational) -> Rational {
        if let (Int::Small(a), Int::Small(b), Int::Small(c), Int::Small(d)) =
            (&self.num, &self.den, &rhs.num, &rhs.den)
        {
            if b == d {
                return Rational::from_i128_parts(*a as i128 + *c as i128, *b as i128);
            }
            let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
            if let Some(n) = (a * d).checked_add(c * b) {
                return Rational::from_i128_parts(n, b * d);
            }
        }
        Rational::normalize(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &Rational {
    type Output = Rational;
    fn sub(self, rhs: &Rational) -> Rational {
        self + &(-rhs)
    }
}

impl Mul for &Rational {
    type Output = Rational;
    fn mul(self, rhs: &Rational) -> Rational {
        if self.is_zero() || rhs.is_zero() {
            return Rational::zero();
        }
        if let (Int::Small(a), Int::Small(b), Int::Small(c), Int::Small(d)) =
            (&self.num, &self.den, &rhs.num, &rhs.den)
        {
            return Rational::from_i128_parts(*a as i128 * *c as i128, *b as i128 * *d as i128);
        }
        Rational::normalize(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero");
        self * &rhs.recip()
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Rational {
            type Output = Rational;
            fn $m(self, rhs: Rational) -> Rational {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Rational> for Rational {
            type Output = Rational;
            fn $m(self, rhs: &Rational) -> Rational {
                (&self).$m(rhs)
            }
        }
        impl $tr<Rational> for &Rational {
            type Output = Rational;
            fn $m(self, rhs: Rational) -> Rational {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        *self = &*self + rhs;
    }
}

impl AddAssign for Rational {
    fn add_assign(&mut self, rhs: Rational) {
        *self = &*self + &rhs;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        *self = &*self * rhs;
    }
}

impl Zero for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
}

impl One for Rational {
    fn one() -> Self {
        Rational::one()
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl Product for Rational {
    fn product<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::one(), |acc, x| acc * x)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl FromStr for Rational {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseRationalError(s.to_string());
        let parse_int = |t: &str| -> Result<Int, ParseRationalError> {
            t.trim()
                .parse::<BigInt>()
                .map(Int::from_big)
                .map_err(|_| err())
        };
        match s.split_once('/') {
            None => Ok(Rational::from_int(parse_int(s)?)),
            Some((n, d)) => {
                let d = parse_int(d)?;
                if d.is_zero() {
                    return Err(err());
                }
                Ok(Rational::new(parse_int(n)?, d))
            }
        }
    }
}

impl serde::Serialize for Rational {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for Rational {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(serde::Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Int(i64),
            Text(String),
        }
        match Repr::deserialize(deserializer)? {
            Repr::Int(v) => Ok(Rational::from(v)),
            Repr::Text(s) => s.parse().map_err(serde::de::Error::custom),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn big_ratio(r: &Rational) -> (BigInt, BigInt) {
        (r.numer().to_big(), r.denom().to_big())
    }

    #[test]
    fn canonical_form() {
        let r = Rational::ratio(6, -4);
        assert_eq!(r.to_string(), "-3/2");
        assert_eq!(Rational::ratio(0, -7), Rational::zero());
        assert_eq!("10/4".parse::<Rational>().unwrap(), Rational::ratio(5, 2));
        assert!("1/0".parse::<Rational>().is_err());
    }

    #[test]
    fn promotes_on_overflow() {
        let big = Rational::from(i64::MAX);
        let sq = &big * &big;
        assert_eq!(
            sq.numer().to_big(),
            BigInt::from(i64::MAX) * BigInt::from(i64::MAX)
        );
        // demotes again once the value fits
        let back = &sq / &big;
        assert_eq!(back, big);
        assert!(matches!(back.numer(), Int::Small(_)));
        let min = Rational::from(i64::MIN);
        assert_eq!((-&min).numer().to_big(), -BigInt::from(i64::MIN));
    }

    fn arb_small() -> impl Strategy<Value = Rational> {
        (any::<i64>(), 1i64..=i64::MAX).prop_map(|(n, d)| Rational::ratio(n, d))
    }

    proptest! {
        #[test]
        fn matches_bigrational(a in arb_small(), b in arb_small()) {
            use num_rational::BigRational;
            let to_br = |r: &Rational| {
                let (n, d) = big_ratio(r);
                BigRational::new(n, d)
            };
            let from_br = |r: BigRational| {
                Rational::new(Int::from_big(r.numer().clone()), Int::from_big(r.denom().clone()))
            };
            let (x, y) = (to_br(&a), to_br(&b));
            prop_assert_eq!(&a + &b, from_br(&x + &y));
            prop_assert_eq!(&a - &b, from_br(&x - &y));
            prop_assert_eq!(&a * &b, from_br(&x * &y));
            if !b.is_zero() {
                prop_assert_eq!(&a / &b, from_br(&x / &y));
            }
            prop_assert_eq!(a.cmp(&b), x.cmp(&y));
            let text = a.to_string();
            prop_assert_eq!(text.parse::<Rational>().unwrap(), a);
        }
    }
}
