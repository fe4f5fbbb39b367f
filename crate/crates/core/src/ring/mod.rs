//! Exact arithmetic over the supported coefficient rings: `Z`, `Z/m` and `Q[x]`.
//!
//! Elements are always kept in canonical form (residues reduced into `[0, m)`,
//! polynomials without trailing zero coefficients), so derived equality is ring
//! equality. Binary operations check that both operands live in the same ring.

mod ideal;
mod poly;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use ideal::Ideal;
pub use poly::QPoly;

/// A modulus `m >= 2` for `Z/m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Modulus(u64);

impl Modulus {
    pub fn new(m: u64) -> Result<Self> {
        if m < 2 {
            return Err(Error::BadModulus(m));
        }
        Ok(Modulus(m))
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RingSpec {
    Integers,
    IntegersMod(Modulus),
    PolyRational,
}

impl RingSpec {
    pub fn integers_mod(m: u64) -> Result<Self> {
        Modulus::new(m).map(RingSpec::IntegersMod)
    }

    pub fn modulus(self) -> Option<u64> {
        match self {
            RingSpec::IntegersMod(m) => Some(m.get()),
            _ => None,
        }
    }

    /// `Z` and `Q[x]` always; `Z/m` exactly when `m` is prime.
    pub fn is_integral_domain(self) -> bool {
        match self {
            RingSpec::Integers | RingSpec::PolyRational => true,
            RingSpec::IntegersMod(m) => is_prime(m.get()),
        }
    }

    pub fn is_euclidean(self) -> bool {
        !matches!(self, RingSpec::IntegersMod(_))
    }

    pub fn is_finite(self) -> bool {
        matches!(self, RingSpec::IntegersMod(_))
    }

    pub fn zero(self) -> RingElement {
        RingElement::from_i64(self, 0)
    }

    pub fn one(self) -> RingElement {
        RingElement::from_i64(self, 1)
    }

    pub fn kind_name(self) -> &'static str {
        match self {
            RingSpec::Integers => "integers",
            RingSpec::IntegersMod(_) => "integers-mod",
            RingSpec::PolyRational => "poly-rational",
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Integers => f.write_str("Z"),
            RingSpec::IntegersMod(m) => write!(f, "Z/{}", m.get()),
            RingSpec::PolyRational => f.write_str("Q[x]"),
        }
    }
}

/// Deterministic Miller-Rabin for the full `u64` range.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for p in WITNESSES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    acc
}

/// An element of `Z/m`, always reduced into `[0, m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Residue {
    value: u64,
    modulus: Modulus,
}

impl Residue {
    pub fn new(value: u64, modulus: Modulus) -> Self {
        Residue {
            value: value % modulus.get(),
            modulus,
        }
    }

    pub fn from_bigint(value: &BigInt, modulus: Modulus) -> Self {
        let r = value.mod_floor(&BigInt::from(modulus.get()));
        Residue {
            value: u64::try_from(r).expect("residue below a u64 modulus"),
            modulus,
        }
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> Modulus {
        self.modulus
    }
}

/// An exact element of one of the supported rings.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RingElement {
    Int(BigInt),
    Mod(Residue),
    Poly(QPoly),
}

impl RingElement {
    /// Image of an integer under the canonical map `Z -> R`.
    pub fn from_i64(ring: RingSpec, n: i64) -> Self {
        Self::from_bigint(ring, &BigInt::from(n))
    }

    pub fn from_bigint(ring: RingSpec, n: &BigInt) -> Self {
        match ring {
            RingSpec::Integers => RingElement::Int(n.clone()),
            RingSpec::IntegersMod(m) => RingElement::Mod(Residue::from_bigint(n, m)),
            RingSpec::PolyRational => RingElement::Poly(QPoly::constant(BigRational::from_integer(n.clone()))),
        }
    }

    pub fn int(n: i64) -> Self {
        RingElement::Int(BigInt::from(n))
    }

    pub fn residue(value: u64, modulus: u64) -> Result<Self> {
        Ok(RingElement::Mod(Residue::new(value, Modulus::new(modulus)?)))
    }

    /// Integer-coefficient polynomial, lowest degree first.
    pub fn poly(coeffs: &[i64]) -> Self {
        RingElement::Poly(QPoly::from_ints(coeffs))
    }

    pub fn ring(&self) -> RingSpec {
        match self {
            RingElement::Int(_) => RingSpec::Integers,
            RingElement::Mod(r) => RingSpec::IntegersMod(r.modulus),
            RingElement::Poly(_) => RingSpec::PolyRational,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            RingElement::Int(n) => n.is_zero(),
            RingElement::Mod(r) => r.value == 0,
            RingElement::Poly(p) => p.is_zero(),
        }
    }

    pub fn is_unit(&self) -> bool {
        match self {
            RingElement::Int(n) => n.abs().is_one(),
            RingElement::Mod(r) => r.value.gcd(&r.modulus.get()) == 1,
            RingElement::Poly(p) => p.is_unit(),
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.ring() != other.ring() {
            return Err(Error::RingMismatch {
                expected: self.ring(),
                found: other.ring(),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(match (self, other) {
            (RingElement::Int(a), RingElement::Int(b)) => RingElement::Int(a + b),
            (RingElement::Mod(a), RingElement::Mod(b)) => {
                let m = a.modulus.get() as u128;
                let v = (a.value as u128 + b.value as u128) % m;
                RingElement::Mod(Residue::new(v as u64, a.modulus))
            }
            (RingElement::Poly(a), RingElement::Poly(b)) => RingElement::Poly(a + b),
            _ => unreachable!("rings checked equal"),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(match (self, other) {
            (RingElement::Int(a), RingElement::Int(b)) => RingElement::Int(a * b),
            (RingElement::Mod(a), RingElement::Mod(b)) => {
                RingElement::Mod(Residue::new(mul_mod(a.value, b.value, a.modulus.get()), a.modulus))
            }
            (RingElement::Poly(a), RingElement::Poly(b)) => RingElement::Poly(a * b),
            _ => unreachable!("rings checked equal"),
        })
    }

    /// Greatest common divisor in a Euclidean ring, normalized to be
    /// nonnegative (`Z`) or monic (`Q[x]`).
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        match (self, other) {
            (RingElement::Int(a), RingElement::Int(b)) => Ok(RingElement::Int(a.gcd(b))),
            (RingElement::Poly(a), RingElement::Poly(b)) => Ok(RingElement::Poly(QPoly::gcd(a, b))),
            _ => Err(Error::UnsupportedRing {
                op: "gcd",
                ring: self.ring(),
            }),
        }
    }

    /// Least common multiple, normalized like [`RingElement::gcd`].
    pub fn lcm(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        if !self.ring().is_euclidean() {
            return Err(Error::UnsupportedRing {
                op: "lcm",
                ring: self.ring(),
            });
        }
        if self.is_zero() && other.is_zero() {
            return Err(Error::LcmOfZeros);
        }
        if self.is_zero() || other.is_zero() {
            return Ok(self.ring().zero());
        }
        let g = self.gcd(other)?;
        let prod = self.try_mul(other)?;
        let l = prod.exact_div(&g).expect("gcd divides the product");
        Ok(l.normalized())
    }

    /// Associate normal form: `|n|` over `Z`, monic over `Q[x]`, identity on `Z/m`.
    pub fn normalized(&self) -> Self {
        match self {
            RingElement::Int(n) => RingElement::Int(n.abs()),
            RingElement::Mod(_) => self.clone(),
            RingElement::Poly(p) => RingElement::Poly(p.monic()),
        }
    }

    /// `true` iff `self` divides `other` (Euclidean rings only; zero divides only zero).
    pub fn divides(&self, other: &Self) -> Result<bool> {
        self.check_same(other)?;
        match (self, other) {
            (RingElement::Int(a), RingElement::Int(b)) => Ok(if a.is_zero() { b.is_zero() } else { (b % a).is_zero() }),
            (RingElement::Poly(a), RingElement::Poly(b)) => Ok(a.divides(b)),
            _ => Err(Error::UnsupportedRing {
                op: "divides",
                ring: self.ring(),
            }),
        }
    }

    /// `self / divisor` when the division is exact in a Euclidean ring.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        match (self, divisor) {
            (RingElement::Int(a), RingElement::Int(b)) => {
                if b.is_zero() {
                    return None;
                }
                let (q, r) = a.div_rem(b);
                r.is_zero().then_some(RingElement::Int(q))
            }
            (RingElement::Poly(a), RingElement::Poly(b)) => {
                let (q, r) = a.div_rem(b)?;
                r.is_zero().then_some(RingElement::Poly(q))
            }
            _ => None,
        }
    }

    pub fn as_int(&self) -> Option<&BigInt> {
        match self {
            RingElement::Int(n) => Some(n),
            _ => None,
        }
    }

    pub fn as_residue(&self) -> Option<Residue> {
        match self {
            RingElement::Mod(r) => Some(*r),
            _ => None,
        }
    }

    pub fn as_poly(&self) -> Option<&QPoly> {
        match self {
            RingElement::Poly(p) => Some(p),
            _ => None,
        }
    }
}

impl std::ops::Neg for &RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        match self {
            RingElement::Int(n) => RingElement::Int(-n),
            RingElement::Mod(r) => {
                let m = r.modulus.get();
                RingElement::Mod(Residue::new((m - r.value) % m, r.modulus))
            }
            RingElement::Poly(p) => RingElement::Poly(-p),
        }
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingElement::Int(n) => write!(f, "{n}"),
            RingElement::Mod(r) => write!(f, "{}", r.value),
            RingElement::Poly(p) => write!(f, "{p}"),
        }
    }
}
