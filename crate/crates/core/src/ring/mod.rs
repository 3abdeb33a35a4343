//! Coefficient rings and the designated unit `q`.
//!
//! Every algebraic structure in the crate is generic over [`Ring`], a
//! context object that owns the arithmetic (and the value of `q`) so that
//! element types can stay plain data. Three rings are provided: the
//! rationals, prime fields `F_p`, and the integers with `q = ±1`.

pub mod fp;
mod rational;

use std::cmp::Ordering;
use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

pub use rational::Rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {0} is too large (must be below 2^31)")]
    PrimeTooLarge(u64),
    #[error("q = {0} is not a unit in {1}")]
    NotAUnit(String, String),
    #[error("cannot parse ring descriptor {0:?}")]
    BadDescriptor(String),
}

/// Commutative ring with a designated unit `q` and enough Euclidean
/// structure for echelon forms and Smith normal form.
pub trait Ring: Clone + fmt::Debug + Send + Sync + 'static {
    type Elem: Clone + fmt::Debug + PartialEq + Eq + Hash + Send + Sync + 'static;

    fn spec(&self) -> RingSpec;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    /// Multiplicative inverse if `a` is a unit.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_field(&self) -> bool;
    fn q(&self) -> Self::Elem;
    fn format(&self, a: &Self::Elem) -> String;
    /// Inverse of [`Ring::format`].
    fn parse_elem(&self, s: &str) -> Option<Self::Elem>;
    /// Reduction modulo a word-sized prime, `None` if undefined.
    fn reduce_mod(&self, a: &Self::Elem, p: u64) -> Option<u64>;
    /// Euclidean division `a = quot * b + rem`, with `rem` smaller than `b`.
    fn div_rem(&self, a: &Self::Elem, b: &Self::Elem) -> (Self::Elem, Self::Elem);
    /// Compares Euclidean norms.
    fn norm_cmp(&self, a: &Self::Elem, b: &Self::Elem) -> Ordering;
    /// A unit `u` such that `u * a` is the canonical associate of `a`.
    fn canonical_unit(&self, a: &Self::Elem) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn is_unit(&self, a: &Self::Elem) -> bool {
        self.inv(a).is_some()
    }

    fn add_assign(&self, a: &mut Self::Elem, b: &Self::Elem) {
        *a = self.add(a, b);
    }

    fn pow(&self, a: &Self::Elem, e: i64) -> Self::Elem {
        let base = if e < 0 {
            self.inv(a).expect("negative power of a non-unit")
        } else {
            a.clone()
        };
        let mut acc = self.one();
        for _ in 0..e.unsigned_abs() {
            acc = self.mul(&acc, &base);
        }
        acc
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RingKind {
    Rationals,
    PrimeField(u64),
    Integers,
}

/// Description of a coefficient ring together with the value of `q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingSpec {
    pub kind: RingKind,
    pub q: Rational,
}

impl RingSpec {
    pub fn new(kind: RingKind, q: Rational) -> Result<Self, RingError> {
        let spec = RingSpec { kind, q };
        match kind {
            RingKind::Rationals => {
                if spec.q.is_zero() {
                    return Err(RingError::NotAUnit(spec.q.to_string(), spec.kind_name()));
                }
            }
            RingKind::PrimeField(p) => {
                if !fp::is_prime(p) {
                    return Err(RingError::NotPrime(p));
                }
                if p >= 1 << 31 {
                    return Err(RingError::PrimeTooLarge(p));
                }
                match spec.q.mod_p(p) {
                    Some(v) if v != 0 => {}
                    _ => return Err(RingError::NotAUnit(spec.q.to_string(), spec.kind_name())),
                }
            }
            RingKind::Integers => {
                if spec.q != Rational::one() && spec.q != Rational::from_int(-1) {
                    return Err(RingError::NotAUnit(spec.q.to_string(), spec.kind_name()));
                }
            }
        }
        Ok(spec)
    }

    pub fn rationals(q: Rational) -> Result<Self, RingError> {
        Self::new(RingKind::Rationals, q)
    }

    pub fn prime_field(p: u64, q: i64) -> Result<Self, RingError> {
        Self::new(RingKind::PrimeField(p), Rational::from_int(q))
    }

    pub fn integers(q: i64) -> Result<Self, RingError> {
        Self::new(RingKind::Integers, Rational::from_int(q))
    }

    /// Parses the command-line ring descriptor (`q`, `zz`, `fp:<p>`).
    pub fn parse(ring: &str, q: &str) -> Result<Self, RingError> {
        let qv = Rational::parse(q).ok_or_else(|| RingError::BadDescriptor(q.to_string()))?;
        let kind = match ring {
            "q" | "Q" => RingKind::Rationals,
            "zz" | "ZZ" | "z" => RingKind::Integers,
            other => match other.strip_prefix("fp:") {
                Some(p) => RingKind::PrimeField(
                    p.parse().map_err(|_| RingError::BadDescriptor(other.to_string()))?,
                ),
                None => return Err(RingError::BadDescriptor(other.to_string())),
            },
        };
        Self::new(kind, qv)
    }

    pub fn kind_name(&self) -> String {
        match self.kind {
            RingKind::Rationals => "Q".to_string(),
            RingKind::PrimeField(p) => format!("F_{p}"),
            RingKind::Integers => "Z".to_string(),
        }
    }

    /// Filesystem-safe tag, e.g. `Q_q1d3`, `F5_q2`, `Z_qm1`.
    pub fn tag(&self) -> String {
        let q = self.q.to_string().replace('-', "m").replace('/', "d");
        match self.kind {
            RingKind::Rationals => format!("Q_q{q}"),
            RingKind::PrimeField(p) => format!("F{p}_q{q}"),
            RingKind::Integers => format!("Z_q{q}"),
        }
    }

    pub fn build(&self) -> AnyRing {
        match self.kind {
            RingKind::Rationals => AnyRing::Rationals(Rationals { q: self.q.clone() }),
            RingKind::PrimeField(p) => AnyRing::PrimeField(PrimeField {
                p,
                q: self.q.mod_p(p).expect("validated"),
            }),
            RingKind::Integers => AnyRing::Integers(Integers {
                q_positive: self.q == Rational::one(),
            }),
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (q = {})", self.kind_name(), self.q)
    }
}

/// The rational numbers.
#[derive(Clone, Debug)]
pub struct Rationals {
    pub q: Rational,
}

impl Rationals {
    pub fn new(q: Rational) -> Self {
        assert!(!q.is_zero());
        Rationals { q }
    }
}

impl Ring for Rationals {
    type Elem = Rational;

    fn spec(&self) -> RingSpec {
        RingSpec { kind: RingKind::Rationals, q: self.q.clone() }
    }
    fn zero(&self) -> Rational {
        Rational::zero()
    }
    fn one(&self) -> Rational {
        Rational::one()
    }
    fn from_i64(&self, n: i64) -> Rational {
        Rational::from_int(n)
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a.add(b)
    }
    fn neg(&self, a: &Rational) -> Rational {
        a.neg()
    }
    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a.sub(b)
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a.mul(b)
    }
    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }
    fn inv(&self, a: &Rational) -> Option<Rational> {
        a.inv()
    }
    fn is_field(&self) -> bool {
        true
    }
    fn q(&self) -> Rational {
        self.q.clone()
    }
    fn format(&self, a: &Rational) -> String {
        a.to_string()
    }
    fn parse_elem(&self, s: &str) -> Option<Rational> {
        Rational::parse(s)
    }
    fn reduce_mod(&self, a: &Rational, p: u64) -> Option<u64> {
        a.mod_p(p)
    }
    fn div_rem(&self, a: &Rational, b: &Rational) -> (Rational, Rational) {
        (a.div(b).expect("division by zero"), Rational::zero())
    }
    fn norm_cmp(&self, a: &Rational, b: &Rational) -> Ordering {
        a.is_zero().cmp(&b.is_zero()).reverse()
    }
    fn canonical_unit(&self, a: &Rational) -> Rational {
        a.inv().unwrap_or_else(Rational::one)
    }
}

/// The prime field `F_p`, `p < 2^31`.
#[derive(Clone, Debug)]
pub struct PrimeField {
    pub p: u64,
    pub q: u64,
}

impl PrimeField {
    pub fn new(p: u64, q: u64) -> Self {
        assert!(fp::is_prime(p) && p < 1 << 31);
        assert!(q % p != 0);
        PrimeField { p, q: q % p }
    }
}

impl Ring for PrimeField {
    type Elem = u64;

    fn spec(&self) -> RingSpec {
        RingSpec { kind: RingKind::PrimeField(self.p), q: Rational::from_int(self.q as i64) }
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn from_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        fp::add_mod(*a, *b, self.p)
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        fp::sub_mod(*a, *b, self.p)
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        fp::mul_mod(*a, *b, self.p)
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        (*a != 0).then(|| fp::inv_mod(*a, self.p))
    }
    fn is_field(&self) -> bool {
        true
    }
    fn q(&self) -> u64 {
        self.q
    }
    fn format(&self, a: &u64) -> String {
        a.to_string()
    }
    fn parse_elem(&self, s: &str) -> Option<u64> {
        s.parse().ok().filter(|&x| x < self.p)
    }
    fn reduce_mod(&self, a: &u64, p: u64) -> Option<u64> {
        (p == self.p).then_some(*a)
    }
    fn div_rem(&self, a: &u64, b: &u64) -> (u64, u64) {
        (self.mul(a, &self.inv(b).expect("division by zero")), 0)
    }
    fn norm_cmp(&self, a: &u64, b: &u64) -> Ordering {
        (*a == 0).cmp(&(*b == 0)).reverse()
    }
    fn canonical_unit(&self, a: &u64) -> u64 {
        self.inv(a).unwrap_or(1)
    }
}

/// The integers; `q` is restricted to `±1`.
#[derive(Clone, Debug)]
pub struct Integers {
    pub q_positive: bool,
}

impl Ring for Integers {
    type Elem = BigInt;

    fn spec(&self) -> RingSpec {
        RingSpec {
            kind: RingKind::Integers,
            q: Rational::from_int(if self.q_positive { 1 } else { -1 }),
        }
    }
    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn from_i64(&self, n: i64) -> BigInt {
        BigInt::from(n)
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn inv(&self, a: &BigInt) -> Option<BigInt> {
        (a.abs().is_one()).then(|| a.clone())
    }
    fn is_field(&self) -> bool {
        false
    }
    fn q(&self) -> BigInt {
        BigInt::from(if self.q_positive { 1 } else { -1 })
    }
    fn format(&self, a: &BigInt) -> String {
        a.to_string()
    }
    fn parse_elem(&self, s: &str) -> Option<BigInt> {
        s.parse().ok()
    }
    fn reduce_mod(&self, a: &BigInt, p: u64) -> Option<u64> {
        a.mod_floor(&BigInt::from(p)).to_u64()
    }
    fn div_rem(&self, a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
        // Rounded division keeps remainders small in absolute value.
        let (quot, rem) = a.div_mod_floor(b);
        let twice: BigInt = &rem * 2;
        if twice.abs() > b.abs() {
            (quot + 1, rem - b)
        } else {
            (quot, rem)
        }
    }
    fn norm_cmp(&self, a: &BigInt, b: &BigInt) -> Ordering {
        a.abs().cmp(&b.abs())
    }
    fn canonical_unit(&self, a: &BigInt) -> BigInt {
        if a.is_negative() {
            BigInt::from(-1)
        } else {
            BigInt::one()
        }
    }
}

/// A ring chosen at run time.
#[derive(Clone, Debug)]
pub enum AnyRing {
    Rationals(Rationals),
    PrimeField(PrimeField),
    Integers(Integers),
}

/// Runs `$body` with `$r` bound to the concrete ring inside an [`AnyRing`].
#[macro_export]
macro_rules! with_ring {
    ($any:expr, $r:ident => $body:expr) => {
        match $any {
            $crate::ring::AnyRing::Rationals($r) => $body,
            $crate::ring::AnyRing::PrimeField($r) => $body,
            $crate::ring::AnyRing::Integers($r) => $body,
        }
    };
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_validation() {
        assert!(RingSpec::prime_field(4, 1).is_err());
        assert!(RingSpec::prime_field(5, 5).is_err());
        assert!(RingSpec::integers(2).is_err());
        assert!(RingSpec::rationals(Rational::zero()).is_err());
        assert!(RingSpec::parse("fp:5", "4").is_ok());
        assert!(RingSpec::parse("q", "1/3").is_ok());
        assert!(RingSpec::parse("qq", "1").is_err());
    }

    #[test]
    fn tags_are_filesystem_safe() {
        let s = RingSpec::parse("q", "-1/3").unwrap();
        assert_eq!(s.tag(), "Q_qm1d3");
        assert_eq!(RingSpec::parse("fp:5", "2").unwrap().tag(), "F5_q2");
        assert_eq!(RingSpec::parse("zz", "-1").unwrap().tag(), "Z_qm1");
    }

    #[test]
    fn integer_division_is_euclidean() {
        let z = Integers { q_positive: true };
        for a in -20i64..20 {
            for b in [-7i64, -3, 2, 5] {
                let (qq, r) = z.div_rem(&BigInt::from(a), &BigInt::from(b));
                assert_eq!(&qq * BigInt::from(b) + &r, BigInt::from(a));
                assert!(r.abs() < BigInt::from(b).abs());
            }
        }
    }

    #[test]
    fn dispatch_macro() {
        let any = RingSpec::parse("fp:7", "3").unwrap().build();
        let s = with_ring!(&any, r => r.format(&r.mul(&r.q(), &r.q())));
        assert_eq!(s, "2");
    }
}
