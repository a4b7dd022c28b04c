//! Exact rational arithmetic, certified rational enclosures of π and ln 2,
//! and correctly rounded decimal rendering.
//!
//! Every certified quantity in this crate is an [`ExactRational`]; floating
//! point is never used on a certified path. An enclosure is a rational
//! interval proven to contain its constant strictly, so comparing a rational
//! against an enclosure decides a transcendental inequality by pure integer
//! arithmetic.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

/// Arbitrary-precision signed rational. Values built through
/// [`BigRational::new`] and arithmetic are always stored normalized:
/// positive denominator, gcd(|numerator|, denominator) = 1.
pub type ExactRational = BigRational;

/// Shorthand constructor. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> ExactRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Integer as a rational.
pub fn rat_int(n: i64) -> ExactRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn pow10(digits: u32) -> BigInt {
    num::pow::pow(BigInt::from(10), digits as usize)
}

/// Exact sum by pairwise reduction. Equal to left-to-right addition but keeps
/// intermediate denominators small when summing long series.
pub fn sum_exact(mut terms: Vec<ExactRational>) -> ExactRational {
    if terms.is_empty() {
        return ExactRational::zero();
    }
    while terms.len() > 1 {
        let mut merged = Vec::with_capacity(terms.len().div_ceil(2));
        let mut iter = terms.into_iter();
        while let Some(a) = iter.next() {
            match iter.next() {
                Some(b) => merged.push(a + b),
                None => merged.push(a),
            }
        }
        terms = merged;
    }
    terms.pop().expect("nonempty")
}

/// The two constants this crate certifies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConstantTarget {
    Pi,
    Ln2,
}

impl fmt::Display for ConstantTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstantTarget::Pi => write!(f, "pi"),
            ConstantTarget::Ln2 => write!(f, "ln2"),
        }
    }
}

/// Rational interval with `lo < c < hi` and `hi − lo < 10^(−requested_precision)`.
///
/// Containment is strict by construction: both endpoints are partial sums of
/// a series for the constant offset by a bound on its (nonzero) remainder.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstantEnclosure {
    target: ConstantTarget,
    lo: ExactRational,
    hi: ExactRational,
    requested_precision: u32,
}

impl ConstantEnclosure {
    pub fn target(&self) -> ConstantTarget {
        self.target
    }

    pub fn lo(&self) -> &ExactRational {
        &self.lo
    }

    pub fn hi(&self) -> &ExactRational {
        &self.hi
    }

    pub fn requested_precision(&self) -> u32 {
        self.requested_precision
    }

    pub fn width(&self) -> ExactRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> ExactRational {
        (&self.lo + &self.hi) / rat_int(2)
    }

    /// Endpoints scaled by a positive rational factor; encloses `factor · c`.
    pub fn scaled(&self, factor: &ExactRational) -> (ExactRational, ExactRational) {
        assert!(factor.is_positive(), "scale factor must be positive");
        (factor * &self.lo, factor * &self.hi)
    }
}

type Interval = (ExactRational, ExactRational);

fn enclosure_cache() -> &'static Mutex<HashMap<(ConstantTarget, u32), Interval>> {
    static CACHE: OnceLock<Mutex<HashMap<(ConstantTarget, u32), Interval>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn cached_interval(target: ConstantTarget, digits: u32, compute: fn(u32) -> Interval) -> Interval {
    if let Some(iv) = enclosure_cache().lock().unwrap().get(&(target, digits)) {
        return iv.clone();
    }
    let iv = compute(digits);
    enclosure_cache()
        .lock()
        .unwrap()
        .insert((target, digits), iv.clone());
    iv
}

/// Rational enclosure of π with width below `10^(−digits)`.
///
/// Machin's identity π = 16·arctan(1/5) − 4·arctan(1/239) is evaluated in
/// exact rational arithmetic; each arctangent series is alternating with
/// strictly decreasing terms, so consecutive partial sums bracket the limit.
pub fn pi_enclosure(digits: u32) -> ConstantEnclosure {
    assert!(digits >= 1, "digits must be >= 1");
    let (lo, hi) = cached_interval(ConstantTarget::Pi, digits, compute_pi_interval);
    ConstantEnclosure {
        target: ConstantTarget::Pi,
        lo,
        hi,
        requested_precision: digits,
    }
}

fn compute_pi_interval(digits: u32) -> Interval {
    // Overshoot the requested width by 10^3 so that midpoints stay clear of
    // decimal rounding boundaries at the requested precision.
    let eps = BigRational::new(BigInt::one(), pow10(digits) * BigInt::from(1000));
    let (lo5, hi5) = arctan_recip_interval(5, &(&eps / rat_int(32)));
    let (lo239, hi239) = arctan_recip_interval(239, &(&eps / rat_int(8)));
    let lo = rat_int(16) * lo5 - rat_int(4) * hi239;
    let hi = rat_int(16) * hi5 - rat_int(4) * lo239;
    (lo, hi)
}

/// Interval for arctan(1/x), integer x ≥ 2, of width at most `budget`.
///
/// Terms are accumulated until the next one drops to `budget` or below; the
/// remainder of an alternating series with strictly decreasing terms lies
/// strictly between 0 and the first omitted term.
fn arctan_recip_interval(x: u64, budget: &ExactRational) -> Interval {
    let x = BigInt::from(x);
    let x_sq = &x * &x;
    let mut x_pow = x; // x^(2i+1)
    let mut i: u64 = 0;
    let mut terms: Vec<ExactRational> = Vec::new();
    loop {
        let term = BigRational::new(BigInt::one(), BigInt::from(2 * i + 1) * &x_pow);
        if term <= *budget {
            let partial = sum_exact(terms);
            let other = if i % 2 == 0 {
                &partial + term
            } else {
                &partial - term
            };
            return if other > partial {
                (partial, other)
            } else {
                (other, partial)
            };
        }
        terms.push(if i % 2 == 0 { term } else { -term });
        x_pow *= &x_sq;
        i += 1;
    }
}

/// Rational enclosure of ln 2 with width below `10^(−digits)`.
///
/// Uses ln 2 = Σ_{i≥1} 1/(i·2^i); the terms are positive and the tail after
/// N is below 1/(N·2^N), giving a one-sided bound that closes the interval.
pub fn ln2_enclosure(digits: u32) -> ConstantEnclosure {
    assert!(digits >= 1, "digits must be >= 1");
    let (lo, hi) = cached_interval(ConstantTarget::Ln2, digits, compute_ln2_interval);
    ConstantEnclosure {
        target: ConstantTarget::Ln2,
        lo,
        hi,
        requested_precision: digits,
    }
}

fn compute_ln2_interval(digits: u32) -> Interval {
    let eps_den = pow10(digits) * BigInt::from(1000);
    // smallest N with N·2^N above the inverse width
    let mut n: u64 = 1;
    let mut two_pow_n = BigInt::from(2);
    while BigInt::from(n) * &two_pow_n <= eps_den {
        n += 1;
        two_pow_n *= 2;
    }
    let mut pow = BigInt::from(2);
    let mut terms = Vec::with_capacity(n as usize);
    for i in 1..=n {
        terms.push(BigRational::new(BigInt::one(), BigInt::from(i) * &pow));
        pow *= 2;
    }
    let lo = sum_exact(terms);
    let hi = &lo + BigRational::new(BigInt::one(), BigInt::from(n) * two_pow_n);
    (lo, hi)
}

/// Certified sign of `q + p·π + l·ln2` over the enclosure box.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AffineSign {
    Positive,
    Negative,
    /// The box straddles zero; callers double the precision and retry.
    Indeterminate,
}

/// Evaluates the sign of `q + p·π + l·ln2` for every (π, ln2) in the box
/// formed by the two enclosures. `Indeterminate` is an expected outcome near
/// zero, not an error.
pub fn sign_of_affine_combination(
    q: &ExactRational,
    p: &ExactRational,
    l: &ExactRational,
    pi: &ConstantEnclosure,
    ln2: &ConstantEnclosure,
) -> AffineSign {
    assert_eq!(
        pi.target(),
        ConstantTarget::Pi,
        "first enclosure must be pi"
    );
    assert_eq!(
        ln2.target(),
        ConstantTarget::Ln2,
        "second enclosure must be ln2"
    );
    let lo = q + coeff_times_lo(p, pi) + coeff_times_lo(l, ln2);
    if lo.is_positive() {
        return AffineSign::Positive;
    }
    let hi = q + coeff_times_hi(p, pi) + coeff_times_hi(l, ln2);
    if hi.is_negative() {
        AffineSign::Negative
    } else {
        AffineSign::Indeterminate
    }
}

fn coeff_times_lo(c: &ExactRational, e: &ConstantEnclosure) -> ExactRational {
    if c.is_negative() {
        c * e.hi()
    } else {
        c * e.lo()
    }
}

fn coeff_times_hi(c: &ExactRational, e: &ConstantEnclosure) -> ExactRational {
    if c.is_negative() {
        c * e.lo()
    } else {
        c * e.hi()
    }
}

/// Fixed-point decimal rendering: `[-]d.ddd…d` with exactly `digits`
/// fractional digits, rounded to nearest with ties away from zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecimalString {
    text: String,
    digits: u32,
}

impl DecimalString {
    pub fn text(&self) -> &str {
        &self.text
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }
}

impl fmt::Display for DecimalString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

/// Renders `x` with exactly `digits` fractional digits, round-to-nearest,
/// ties away from zero.
pub fn to_decimal(x: &ExactRational, digits: u32) -> DecimalString {
    assert!(digits >= 1, "digits must be >= 1");
    let scaled = x * BigRational::from_integer(pow10(digits));
    // Ratio::round rounds half-way cases away from zero.
    let rounded = scaled.round().to_integer();
    let negative = rounded.is_negative();
    let mag = rounded.magnitude().to_string();
    let digits_us = digits as usize;
    let padded = if mag.len() <= digits_us {
        format!("{}{}", "0".repeat(digits_us + 1 - mag.len()), mag)
    } else {
        mag
    };
    let (int_part, frac_part) = padded.split_at(padded.len() - digits_us);
    DecimalString {
        text: format!(
            "{}{}.{}",
            if negative { "-" } else { "" },
            int_part,
            frac_part
        ),
        digits,
    }
}

/// Parses `[-]d[.ddd…]` back to an exact rational. Returns `None` on
/// malformed input.
pub fn parse_decimal(text: &str) -> Option<ExactRational> {
    let (negative, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text),
    };
    let (int_s, frac_s) = match body.split_once('.') {
        Some((i, f)) => (i, f),
        None => (body, ""),
    };
    if int_s.is_empty() || !int_s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    if !frac_s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let int: BigInt = int_s.parse().ok()?;
    let den = pow10(u32::try_from(frac_s.len()).ok()?);
    let frac: BigInt = if frac_s.is_empty() {
        BigInt::zero()
    } else {
        frac_s.parse().ok()?
    };
    let value = BigRational::new(int * &den + frac, den);
    Some(if negative { -value } else { value })
}
