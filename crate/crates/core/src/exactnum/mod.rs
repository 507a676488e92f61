//! Exact arithmetic on `q0 + Σ qi·√pi` with rational `qi` and distinct primes `pi`.
//!
//! Values form a ℚ-vector space with basis `{1, √2, √3, √5, …}`, so a value is
//! zero exactly when every coefficient is zero. Signs of nonzero values are
//! decided by fixed-point interval evaluation at doubling precision.

mod interval;
pub mod primes;
mod rational;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
pub use interval::{MAX_BITS, START_BITS};
pub use rational::{format_rational, parse_rational, pow2_floor};

/// A rational linear combination of `1` and square roots of distinct primes.
///
/// Zero coefficients are never stored, so derived equality and hashing are
/// value equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ExactReal {
    unit: BigRational,
    roots: BTreeMap<u64, BigRational>,
}

/// A closed rational interval `[lo, hi]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RationalInterval {
    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, q: &BigRational) -> bool {
        &self.lo <= q && q <= &self.hi
    }

    pub fn contains_interval(&self, other: &RationalInterval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2))
    }
}

impl ExactReal {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_rational(q: BigRational) -> Self {
        Self {
            unit: q,
            roots: BTreeMap::new(),
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(n.into()))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Self::from_rational(BigRational::new(num.into(), den.into()))
    }

    /// `√p` for a prime `p`.
    pub fn sqrt_prime(p: u64) -> Result<Self> {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(p, BigRational::from_integer(1.into()));
        Self::make(BigRational::zero(), coeffs)
    }

    /// `unit + Σ coeff·√prime`, rejecting non-prime keys.
    pub fn make(unit: BigRational, coeffs: BTreeMap<u64, BigRational>) -> Result<Self> {
        if let Some(&p) = coeffs.keys().find(|&&p| !primes::is_prime(p)) {
            return Err(Error::NotPrime(p));
        }
        let roots = coeffs.into_iter().filter(|(_, q)| !q.is_zero()).collect();
        Ok(Self { unit, roots })
    }

    pub fn unit(&self) -> &BigRational {
        &self.unit
    }

    pub fn roots(&self) -> &BTreeMap<u64, BigRational> {
        &self.roots
    }

    /// Coefficient of `√p` (zero when absent).
    pub fn root_coeff(&self, p: u64) -> BigRational {
        self.roots.get(&p).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn basis_primes(&self) -> Vec<u64> {
        self.roots.keys().copied().collect()
    }

    pub fn is_rational(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        self.is_rational().then_some(&self.unit)
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        Self {
            unit: &self.unit * q,
            roots: self.roots.iter().map(|(&p, c)| (p, c * q)).collect(),
        }
    }

    pub fn half(&self) -> Self {
        self.scale(&BigRational::new(1.into(), 2.into()))
    }

    pub fn abs(&self) -> Self {
        if self.sign() == Ordering::Less {
            -self
        } else {
            self.clone()
        }
    }

    /// Sign of the value, or [`Error::PrecisionLimit`] if the interval engine
    /// cannot separate it from zero within [`MAX_BITS`].
    pub fn try_sign(&self) -> Result<Ordering> {
        if self.roots.is_empty() {
            return Ok(self.unit.cmp(&BigRational::zero()));
        }
        match interval::separating_enclosure(self) {
            Some((_, lo, _)) if lo.is_positive() => Ok(Ordering::Greater),
            Some(_) => Ok(Ordering::Less),
            // roots nonempty means nonzero
            None => Err(Error::PrecisionLimit { bits: MAX_BITS }),
        }
    }

    /// Sign of the value. Panics only if [`try_sign`](Self::try_sign) errors.
    pub fn sign(&self) -> Ordering {
        self.try_sign()
            .expect("exact sign determination exceeded precision cap")
    }

    pub fn signum(&self) -> i32 {
        match self.sign() {
            Ordering::Less => -1,
            Ordering::Equal => 0,
            Ordering::Greater => 1,
        }
    }

    pub fn try_compare(&self, other: &Self) -> Result<Ordering> {
        if self == other {
            return Ok(Ordering::Equal);
        }
        (self - other).try_sign()
    }

    pub fn compare(&self, other: &Self) -> Ordering {
        self.cmp(other)
    }

    /// Rational enclosure `[lo, hi]` of width at most `10^-digits`.
    pub fn approximate(&self, digits: u32) -> RationalInterval {
        if self.roots.is_empty() {
            return RationalInterval {
                lo: self.unit.clone(),
                hi: self.unit.clone(),
            };
        }
        let tol = BigRational::new(1.into(), BigInt::from(10u8).pow(digits));
        let mut bits = START_BITS;
        loop {
            let (lo, hi) = interval::enclosure(self, bits);
            if interval::width(&lo, &hi, bits) <= tol {
                return RationalInterval {
                    lo: interval::to_rational(&lo, bits),
                    hi: interval::to_rational(&hi, bits),
                };
            }
            bits *= 2;
        }
    }

    /// Nearest `f64`, for display only.
    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        let mid = self.approximate(17).midpoint();
        mid.to_f64().unwrap_or(f64::NAN)
    }
}

/// A power of two `L > 0` with `L <= |a - v|` for every anchor `a` and value `v`.
///
/// A value exactly equal to an anchor is reported as [`Error::Coincidence`].
pub fn min_positive_gap(values: &[ExactReal], anchors: &[ExactReal]) -> Result<BigRational> {
    let mut best: Option<BigRational> = None;
    for a in anchors {
        for v in values {
            let d = a - v;
            if d.is_zero() {
                return Err(Error::Coincidence {
                    anchor: a.to_string(),
                    value: v.to_string(),
                });
            }
            let (bits, lo, hi) = interval::separating_enclosure(&d).ok_or(Error::PrecisionLimit { bits: MAX_BITS })?;
            let lower = if lo.is_positive() {
                interval::to_rational(&lo, bits)
            } else {
                interval::to_rational(&-hi, bits)
            };
            if best.as_ref().is_none_or(|b| &lower < b) {
                best = Some(lower);
            }
        }
    }
    best.map(|b| pow2_floor(&b)).ok_or(Error::EmptyGapSet)
}

impl Ord for ExactReal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.try_compare(other)
            .expect("exact comparison exceeded precision cap")
    }
}

impl PartialOrd for ExactReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ExactReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        if !self.unit.is_zero() || self.roots.is_empty() {
            write!(f, "{}", self.unit)?;
            wrote = true;
        }
        for (p, q) in &self.roots {
            let neg = q.is_negative();
            let mag = q.abs();
            if wrote {
                f.write_str(if neg { " - " } else { " + " })?;
            } else if neg {
                f.write_str("-")?;
            }
            if mag == BigRational::from_integer(1.into()) {
                write!(f, "√{p}")?;
            } else {
                write!(f, "{mag}·√{p}")?;
            }
            wrote = true;
        }
        Ok(())
    }
}

impl From<BigRational> for ExactReal {
    fn from(q: BigRational) -> Self {
        Self::from_rational(q)
    }
}

impl From<i64> for ExactReal {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

fn add_into(acc: &mut ExactReal, rhs: &ExactReal, negate: bool) {
    if negate {
        acc.unit -= &rhs.unit;
    } else {
        acc.unit += &rhs.unit;
    }
    for (&p, q) in &rhs.roots {
        let entry = acc.roots.entry(p).or_insert_with(BigRational::zero);
        if negate {
            *entry -= q;
        } else {
            *entry += q;
        }
        if entry.is_zero() {
            acc.roots.remove(&p);
        }
    }
}

impl Add<&ExactReal> for &ExactReal {
    type Output = ExactReal;
    fn add(self, rhs: &ExactReal) -> ExactReal {
        let mut out = self.clone();
        add_into(&mut out, rhs, false);
        out
    }
}

impl Sub<&ExactReal> for &ExactReal {
    type Output = ExactReal;
    fn sub(self, rhs: &ExactReal) -> ExactReal {
        let mut out = self.clone();
        add_into(&mut out, rhs, true);
        out
    }
}

impl Add for ExactReal {
    type Output = ExactReal;
    fn add(mut self, rhs: ExactReal) -> ExactReal {
        add_into(&mut self, &rhs, false);
        self
    }
}

impl Sub for ExactReal {
    type Output = ExactReal;
    fn sub(mut self, rhs: ExactReal) -> ExactReal {
        add_into(&mut self, &rhs, true);
        self
    }
}

impl Add<&ExactReal> for ExactReal {
    type Output = ExactReal;
    fn add(mut self, rhs: &ExactReal) -> ExactReal {
        add_into(&mut self, rhs, false);
        self
    }
}

impl Sub<&ExactReal> for ExactReal {
    type Output = ExactReal;
    fn sub(mut self, rhs: &ExactReal) -> ExactReal {
        add_into(&mut self, rhs, true);
        self
    }
}

impl Neg for &ExactReal {
    type Output = ExactReal;
    fn neg(self) -> ExactReal {
        ExactReal {
            unit: -&self.unit,
            roots: self.roots.iter().map(|(&p, q)| (p, -q)).collect(),
        }
    }
}

impl Neg for ExactReal {
    type Output = ExactReal;
    fn neg(self) -> ExactReal {
        -&self
    }
}

impl Mul<&BigRational> for &ExactReal {
    type Output = ExactReal;
    fn mul(self, rhs: &BigRational) -> ExactReal {
        self.scale(rhs)
    }
}

impl Zero for ExactReal {
    fn zero() -> Self {
        ExactReal::default()
    }

    fn is_zero(&self) -> bool {
        self.unit.is_zero() && self.roots.is_empty()
    }
}

impl FromPrimitive for ExactReal {
    fn from_i64(n: i64) -> Option<Self> {
        Some(Self::from_integer(n))
    }

    fn from_u64(n: u64) -> Option<Self> {
        Some(Self::from_rational(BigRational::from_integer(n.into())))
    }

    fn from_f64(x: f64) -> Option<Self> {
        BigRational::from_float(x).map(Self::from_rational)
    }
}

#[derive(Serialize, Deserialize)]
struct ExactRealRepr {
    #[serde(default)]
    roots: BTreeMap<String, String>,
    unit: String,
}

impl Serialize for ExactReal {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        ExactRealRepr {
            roots: self
                .roots
                .iter()
                .map(|(p, q)| (p.to_string(), format_rational(q)))
                .collect(),
            unit: format_rational(&self.unit),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ExactReal {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = ExactRealRepr::deserialize(deserializer)?;
        let unit = parse_rational(&repr.unit).map_err(D::Error::custom)?;
        let mut coeffs = BTreeMap::new();
        for (k, v) in &repr.roots {
            let p: u64 = k
                .trim()
                .parse()
                .map_err(|_| D::Error::custom(format!("bad prime key {k:?}")))?;
            coeffs.insert(p, parse_rational(v).map_err(D::Error::custom)?);
        }
        ExactReal::make(unit, coeffs).map_err(D::Error::custom)
    }
}
