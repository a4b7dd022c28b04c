//! Symbolic evaluation of `I(m,n) = ∫₀¹ xᵐ(1−x)ⁿ/(1+x²) dx`.
//!
//! Expanding the numerator and dividing by `1+x²` leaves a polynomial plus a
//! linear remainder `a + b·x` over `1+x²`; with `∫₀¹ dx/(1+x²) = π/4` and
//! `∫₀¹ x dx/(1+x²) = (ln 2)/2` the integral evaluates exactly to
//! `q + p·π + l·ln2` with rational `q`, `p = a/4`, `l = b/2`.
//!
//! The residue of `2m−n mod 4` decides which coefficient survives (the
//! Backhouse condition): residue 0 keeps only π, residue 2 keeps only ln 2,
//! odd residues keep both. Each integral is strictly positive, so in the two
//! even classes `I(m,n) > 0` certifies a one-sided rational approximation of
//! π or ln 2.

use std::fmt;

use num::bigint::BigInt;
use num::integer::binomial;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::exactnum::{
    ln2_enclosure, pi_enclosure, rat_int, sign_of_affine_combination, sum_exact, AffineSign,
    ConstantEnclosure, ConstantTarget, ExactRational,
};

/// Dense polynomial over [`ExactRational`], coefficients in ascending degree
/// order. The stored coefficient vector never ends in a zero (the zero
/// polynomial stores an empty vector).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<ExactRational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<ExactRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^i` (zero beyond the stored range).
    pub fn coeff(&self, i: usize) -> ExactRational {
        self.coeffs.get(i).cloned().unwrap_or_else(Zero::zero)
    }

    pub fn coeffs(&self) -> &[ExactRational] {
        &self.coeffs
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(other.coeffs.len());
        Polynomial::new((0..len).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(other.coeffs.len());
        Polynomial::new((0..len).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![ExactRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::new(coeffs)
    }
}

/// `xᵐ(1−x)ⁿ` expanded: the coefficient of `x^(m+j)` is `(−1)ʲ·C(n,j)`.
pub fn expand_integrand(m: u64, n: u64) -> Polynomial {
    let m_us = usize::try_from(m).expect("m exceeds the address space");
    let n_us = usize::try_from(n).expect("n exceeds the address space");
    let mut coeffs = vec![ExactRational::zero(); m_us + n_us + 1];
    for j in 0..=n_us {
        let b = binomial(BigInt::from(n), BigInt::from(j as u64));
        coeffs[m_us + j] = BigRational::from_integer(if j % 2 == 1 { -b } else { b });
    }
    Polynomial::new(coeffs)
}

/// Long division by `1 + x²`: returns `(quotient, remainder)` with
/// `p = quotient·(1+x²) + remainder` and `deg(remainder) ≤ 1`, exactly.
pub fn divide_by_circle(p: &Polynomial) -> (Polynomial, Polynomial) {
    let mut work: Vec<ExactRational> = p.coeffs().to_vec();
    if work.len() <= 2 {
        return (Polynomial::zero(), p.clone());
    }
    let mut quotient = vec![ExactRational::zero(); work.len() - 2];
    // c·x^i = c·x^(i−2)·(1+x²) − c·x^(i−2)
    for i in (2..work.len()).rev() {
        let c = std::mem::replace(&mut work[i], ExactRational::zero());
        if !c.is_zero() {
            work[i - 2] -= &c;
            quotient[i - 2] = c;
        }
    }
    let remainder = Polynomial::new(vec![work[0].clone(), work[1].clone()]);
    (Polynomial::new(quotient), remainder)
}

/// `∫₀¹ p dx = Σ cᵢ/(i+1)`, exactly.
pub fn integrate_unit(p: &Polynomial) -> ExactRational {
    sum_exact(
        p.coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| c / BigRational::from_integer(BigInt::from(i as u64 + 1)))
            .collect(),
    )
}

/// Exact value of `I(m,n)` as the triple `q + p·π + l·ln2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DalzellValue {
    pub q: ExactRational,
    pub p: ExactRational,
    pub l: ExactRational,
    pub m: u64,
    pub n: u64,
}

impl DalzellValue {
    /// Certified sign over the given enclosure box.
    pub fn sign(&self, pi: &ConstantEnclosure, ln2: &ConstantEnclosure) -> AffineSign {
        sign_of_affine_combination(&self.q, &self.p, &self.l, pi, ln2)
    }

    /// Certifies strict positivity, doubling the enclosure precision on an
    /// indeterminate box (max 5 retries).
    pub fn certified_positive(&self) -> bool {
        for attempt in 0..=5u32 {
            let digits = 10u32 << attempt;
            match self.sign(&pi_enclosure(digits), &ln2_enclosure(digits)) {
                AffineSign::Positive => return true,
                AffineSign::Negative => return false,
                AffineSign::Indeterminate => continue,
            }
        }
        false
    }

    /// Rational interval containing the exact value, built from enclosures of
    /// the requested precision.
    pub fn value_interval(&self, digits: u32) -> (ExactRational, ExactRational) {
        let pi = pi_enclosure(digits);
        let ln2 = ln2_enclosure(digits);
        let lo = &self.q + coeff_lo(&self.p, &pi) + coeff_lo(&self.l, &ln2);
        let hi = &self.q + coeff_hi(&self.p, &pi) + coeff_hi(&self.l, &ln2);
        (lo, hi)
    }

    pub fn value_midpoint(&self, digits: u32) -> ExactRational {
        let (lo, hi) = self.value_interval(digits);
        (lo + hi) / rat_int(2)
    }
}

fn coeff_lo(c: &ExactRational, e: &ConstantEnclosure) -> ExactRational {
    if c.is_negative() {
        c * e.hi()
    } else {
        c * e.lo()
    }
}

fn coeff_hi(c: &ExactRational, e: &ConstantEnclosure) -> ExactRational {
    if c.is_negative() {
        c * e.lo()
    } else {
        c * e.hi()
    }
}

impl fmt::Display for DalzellValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<(ExactRational, &str)> = Vec::new();
        if !self.q.is_zero() {
            parts.push((self.q.clone(), ""));
        }
        if !self.p.is_zero() {
            parts.push((self.p.clone(), "π"));
        }
        if !self.l.is_zero() {
            parts.push((self.l.clone(), "ln2"));
        }
        if parts.is_empty() {
            return write!(f, "0");
        }
        for (idx, (coeff, symbol)) in parts.iter().enumerate() {
            let negative = coeff.is_negative();
            if idx == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = coeff.abs();
            if symbol.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{symbol}")?;
            } else {
                write!(f, "{mag}·{symbol}")?;
            }
        }
        Ok(())
    }
}

/// Evaluates `I(m,n)` exactly.
pub fn dalzell_integral(m: u64, n: u64) -> DalzellValue {
    let (quotient, remainder) = divide_by_circle(&expand_integrand(m, n));
    let q = integrate_unit(&quotient);
    let p = remainder.coeff(0) / rat_int(4);
    let l = remainder.coeff(1) / rat_int(2);
    debug_assert!(match classify(m, n) {
        BackhouseClass::PiClass => l.is_zero(),
        BackhouseClass::Ln2Class => p.is_zero(),
        BackhouseClass::MixedClass => true,
    });
    DalzellValue { q, p, l, m, n }
}

/// Which constant survives in `I(m,n)`, by the residue of `2m−n mod 4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BackhouseClass {
    /// `2m−n ≡ 0 (mod 4)`: value is `q + p·π`.
    PiClass,
    /// `2m−n ≡ 2 (mod 4)`: value is `q + l·ln2`.
    Ln2Class,
    /// `2m−n` odd (n odd): both constants appear.
    MixedClass,
}

impl fmt::Display for BackhouseClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BackhouseClass::PiClass => write!(f, "pi"),
            BackhouseClass::Ln2Class => write!(f, "ln2"),
            BackhouseClass::MixedClass => write!(f, "mixed"),
        }
    }
}

pub fn classify(m: u64, n: u64) -> BackhouseClass {
    match (2 * m as i128 - n as i128).rem_euclid(4) {
        0 => BackhouseClass::PiClass,
        2 => BackhouseClass::Ln2Class,
        _ => BackhouseClass::MixedClass,
    }
}

/// Side of a one-sided approximation, named from the target's viewpoint:
/// `TargetBelow` means the target is below ρ.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ApproxSide {
    /// target < ρ
    TargetBelow,
    /// target > ρ
    TargetAbove,
}

impl fmt::Display for ApproxSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ApproxSide::TargetBelow => write!(f, "target-below"),
            ApproxSide::TargetAbove => write!(f, "target-above"),
        }
    }
}

/// One-sided rational approximation ρ of π or ln 2, certified by
/// `I(m,n) > 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalApproximation {
    pub target: ConstantTarget,
    pub value: ExactRational,
    pub side: ApproxSide,
    pub m: u64,
    pub n: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ApproxError {
    #[error("I({m},{n}) mixes π and ln 2 (2m−n odd); no single-constant approximation")]
    MixedClass { m: u64, n: u64 },
    #[error("I({m},{n}) has a vanishing coefficient for its class constant")]
    ZeroCoefficient { m: u64, n: u64 },
}

/// Extracts ρ = −q/p (π class) or −q/l (ln 2 class) together with its
/// certified side. A negative coefficient pins the target below ρ, since
/// `q + c·t > 0` with `c < 0` forces `t < −q/c`.
pub fn constant_approximation(m: u64, n: u64) -> Result<RationalApproximation, ApproxError> {
    let v = dalzell_integral(m, n);
    let (target, coeff) = match classify(m, n) {
        BackhouseClass::PiClass => (ConstantTarget::Pi, &v.p),
        BackhouseClass::Ln2Class => (ConstantTarget::Ln2, &v.l),
        BackhouseClass::MixedClass => return Err(ApproxError::MixedClass { m, n }),
    };
    if coeff.is_zero() {
        return Err(ApproxError::ZeroCoefficient { m, n });
    }
    let value = -&v.q / coeff;
    let side = if coeff.is_negative() {
        ApproxSide::TargetBelow
    } else {
        ApproxSide::TargetAbove
    };
    Ok(RationalApproximation {
        target,
        value,
        side,
        m,
        n,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use std::str::FromStr;

    #[test]
    fn expansion_examples() {
        assert_eq!(
            expand_integrand(4, 0),
            Polynomial::from_i64(&[0, 0, 0, 0, 1])
        );
        assert_eq!(expand_integrand(1, 2), Polynomial::from_i64(&[0, 1, -2, 1]));
        assert_eq!(
            expand_integrand(4, 4),
            Polynomial::from_i64(&[0, 0, 0, 0, 1, -4, 6, -4, 1])
        );
    }

    #[test]
    fn expansion_matches_repeated_multiplication() {
        let one_minus_x = Polynomial::from_i64(&[1, -1]);
        for m in 0..=10u64 {
            for n in 0..=10u64 {
                let mut oracle = Polynomial::new(
                    (0..=m as usize)
                        .map(|i| {
                            if i == m as usize {
                                ExactRational::one()
                            } else {
                                ExactRational::zero()
                            }
                        })
                        .collect(),
                );
                for _ in 0..n {
                    oracle = oracle.mul(&one_minus_x);
                }
                assert_eq!(expand_integrand(m, n), oracle, "m={m} n={n}");
            }
        }
    }

    #[test]
    fn division_examples() {
        let (q, r) = divide_by_circle(&Polynomial::from_i64(&[0, 0, 1]));
        assert_eq!(q, Polynomial::from_i64(&[1]));
        assert_eq!(r, Polynomial::from_i64(&[-1]));

        let (q, r) = divide_by_circle(&Polynomial::zero());
        assert!(q.is_zero() && r.is_zero());

        let (q, r) = divide_by_circle(&Polynomial::from_i64(&[7, -3]));
        assert!(q.is_zero());
        assert_eq!(r, Polynomial::from_i64(&[7, -3]));
    }

    #[test]
    fn division_of_dalzell_integrand() {
        let p = expand_integrand(4, 4);
        let (q, r) = divide_by_circle(&p);
        // x⁶ − 4x⁵ + 5x⁴ − 4x² + 4, remainder −4: reconstruction and the
        // classical identity I(4,4) = 22/7 − π both pin the remainder sign.
        assert_eq!(q, Polynomial::from_i64(&[4, 0, -4, 0, 5, -4, 1]));
        assert_eq!(r, Polynomial::from_i64(&[-4]));
        let circle = Polynomial::from_i64(&[1, 0, 1]);
        assert_eq!(q.mul(&circle).add(&r), p);
    }

    #[test]
    fn division_reconstructs_exactly() {
        let circle = Polynomial::from_i64(&[1, 0, 1]);
        for m in 0..=40u64 {
            for n in 0..=40u64 {
                let p = expand_integrand(m, n);
                let (q, r) = divide_by_circle(&p);
                assert!(r.degree().unwrap_or(0) <= 1);
                assert_eq!(q.mul(&circle).add(&r), p, "m={m} n={n}");
            }
        }
    }

    #[test]
    fn integration_examples() {
        assert_eq!(integrate_unit(&Polynomial::from_i64(&[1])), rat_int(1));
        assert_eq!(
            integrate_unit(&Polynomial::from_i64(&[0, 1, -2, 1])),
            rat(1, 12)
        );
        assert_eq!(integrate_unit(&Polynomial::zero()), ExactRational::zero());
    }

    #[test]
    fn integral_values() {
        let v = dalzell_integral(0, 0);
        assert_eq!((v.q, v.p, v.l), (rat_int(0), rat(1, 4), rat_int(0)));

        let v = dalzell_integral(4, 4);
        assert_eq!((v.q, v.p, v.l), (rat(22, 7), rat_int(-1), rat_int(0)));

        let v = dalzell_integral(2, 2);
        assert_eq!((v.q, v.p, v.l), (rat(-2, 3), rat_int(0), rat_int(1)));

        let v = dalzell_integral(4, 2);
        assert_eq!((v.q, v.p, v.l), (rat(7, 10), rat_int(0), rat_int(-1)));
    }

    #[test]
    fn integral_32_32() {
        let rho =
            ExactRational::from_str("19809071774292917047896724979/6305423381881718760060595200")
                .unwrap();
        let v = dalzell_integral(32, 32);
        assert_eq!(v.p, rat_int(16384));
        assert_eq!(v.l, rat_int(0));
        assert_eq!(v.q, -rat_int(16384) * &rho);
    }

    #[test]
    fn classification_examples() {
        assert_eq!(classify(4, 4), BackhouseClass::PiClass);
        assert_eq!(classify(2, 2), BackhouseClass::Ln2Class);
        assert_eq!(classify(1, 1), BackhouseClass::MixedClass);
        // negative residue: 2·0 − 2 = −2 ≡ 2 (mod 4)
        assert_eq!(classify(0, 2), BackhouseClass::Ln2Class);
        assert_eq!(classify(0, 0), BackhouseClass::PiClass);
    }

    #[test]
    fn approximation_examples() {
        let a = constant_approximation(4, 4).unwrap();
        assert_eq!(a.target, ConstantTarget::Pi);
        assert_eq!(a.value, rat(22, 7));
        assert_eq!(a.side, ApproxSide::TargetBelow);

        let a = constant_approximation(2, 2).unwrap();
        assert_eq!(a.target, ConstantTarget::Ln2);
        assert_eq!(a.value, rat(2, 3));
        assert_eq!(a.side, ApproxSide::TargetAbove);

        let a = constant_approximation(4, 2).unwrap();
        assert_eq!(a.target, ConstantTarget::Ln2);
        assert_eq!(a.value, rat(7, 10));
        assert_eq!(a.side, ApproxSide::TargetBelow);

        assert_eq!(
            constant_approximation(1, 1),
            Err(ApproxError::MixedClass { m: 1, n: 1 })
        );
    }

    #[test]
    fn small_sweep_is_positive() {
        for m in 0..=8u64 {
            for n in 0..=8u64 {
                assert!(dalzell_integral(m, n).certified_positive(), "m={m} n={n}");
            }
        }
    }

    // The remainder of x^m(1−x)^n mod (1+x²) equals the value at x = i:
    // a + b·i = i^m·(1−i)^n. An independent route to the (p, l) coefficients.
    #[test]
    fn remainder_matches_complex_evaluation() {
        fn gaussian_mul(a: (BigInt, BigInt), b: (&BigInt, &BigInt)) -> (BigInt, BigInt) {
            (&a.0 * b.0 - &a.1 * b.1, &a.0 * b.1 + &a.1 * b.0)
        }
        for m in 0..=12u64 {
            for n in 0..=12u64 {
                let mut z = (BigInt::one(), BigInt::zero());
                for _ in 0..m {
                    z = gaussian_mul(z, (&BigInt::zero(), &BigInt::one()));
                }
                for _ in 0..n {
                    z = gaussian_mul(z, (&BigInt::one(), &BigInt::from(-1)));
                }
                let (_, r) = divide_by_circle(&expand_integrand(m, n));
                assert_eq!(r.coeff(0), BigRational::from_integer(z.0), "m={m} n={n}");
                assert_eq!(r.coeff(1), BigRational::from_integer(z.1), "m={m} n={n}");
            }
        }
    }

    #[test]
    fn display_formatting() {
        assert_eq!(dalzell_integral(4, 4).to_string(), "22/7 - π");
        assert_eq!(dalzell_integral(0, 0).to_string(), "1/4·π");
        assert_eq!(dalzell_integral(2, 2).to_string(), "-2/3 + ln2");
        assert_eq!(dalzell_integral(1, 1).to_string(), "-1 + 1/4·π + 1/2·ln2");
    }

    #[test]
    fn value_interval_brackets_value() {
        let v = dalzell_integral(4, 4);
        let (lo, hi) = v.value_interval(20);
        assert!(lo.is_positive());
        assert!(lo < hi);
        // I(4,4) = 22/7 − π ≈ 0.001264489267
        let approx = rat(1264489267, 1_000_000_000_000);
        assert!((lo - approx).abs() < rat(1, 1_000_000_000));
    }
}
