//! Fixed-point enclosures of `q0 + Σ qi·√pi`.
//!
//! At precision `bits` every quantity is an integer multiple of `2^-bits`.
//! `√p` is bracketed by `isqrt(p·4^bits)` and its successor, and each
//! rational product is rounded outward, so the integer pair `(lo, hi)`
//! always satisfies `lo·2^-bits <= x <= hi·2^-bits`. Doubling `bits` yields a
//! nested enclosure.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::ExactReal;

pub const START_BITS: u32 = 32;
pub const MAX_BITS: u32 = 4096;

fn floor_div(a: &BigInt, b: &BigInt) -> BigInt {
    a.div_floor(b)
}

fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    -((-a).div_floor(b))
}

/// Outward-rounded enclosure of `q·[root_lo, root_hi]` at the working scale.
fn scaled_product(q: &BigRational, root_lo: &BigInt, root_hi: &BigInt) -> (BigInt, BigInt) {
    let (num, den) = (q.numer(), q.denom());
    if num.is_negative() {
        (floor_div(&(num * root_hi), den), ceil_div(&(num * root_lo), den))
    } else {
        (floor_div(&(num * root_lo), den), ceil_div(&(num * root_hi), den))
    }
}

/// Integer endpoints of the enclosure at `bits` fractional bits.
pub fn enclosure(x: &ExactReal, bits: u32) -> (BigInt, BigInt) {
    let scale = BigInt::from(1u8) << (bits as usize);
    let unit = x.unit();
    let mut lo = floor_div(&(unit.numer() * &scale), unit.denom());
    let mut hi = ceil_div(&(unit.numer() * &scale), unit.denom());
    for (&p, q) in x.roots() {
        let s = (BigInt::from(p) << (2 * bits as usize)).sqrt();
        let s1 = &s + 1;
        let (l, h) = scaled_product(q, &s, &s1);
        lo += l;
        hi += h;
    }
    (lo, hi)
}

/// Smallest doubling precision whose enclosure excludes zero, with the
/// enclosure itself. `None` when `x` is exactly zero or the cap is hit.
pub fn separating_enclosure(x: &ExactReal) -> Option<(u32, BigInt, BigInt)> {
    if x.is_zero() {
        return None;
    }
    let mut bits = START_BITS;
    loop {
        let (lo, hi) = enclosure(x, bits);
        if lo.is_positive() || hi.is_negative() {
            return Some((bits, lo, hi));
        }
        if bits >= MAX_BITS {
            return None;
        }
        bits *= 2;
    }
}

pub fn to_rational(v: &BigInt, bits: u32) -> BigRational {
    BigRational::new(v.clone(), BigInt::from(1u8) << (bits as usize))
}

/// Enclosure width at `bits`, as a rational.
pub fn width(lo: &BigInt, hi: &BigInt, bits: u32) -> BigRational {
    let w = hi - lo;
    debug_assert!(!w.is_negative());
    if w.is_zero() {
        BigRational::zero()
    } else {
        to_rational(&w, bits)
    }
}
