//! Partial sums of the three alternating series and certified error bounds
//! for them: the generic integral-derived construction, the six closed-form
//! propositions, and the classical Leibniz, Calabrese and Johnsonbaugh
//! comparison bounds.
//!
//! Every bound is an exact rational; orientation (which side of the target a
//! bound certificate sits on) is verified at runtime from coefficient signs
//! and enclosure comparisons, never assumed.

use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::exactnum::{
    ln2_enclosure, pi_enclosure, rat, rat_int, sum_exact, to_decimal, DecimalString, ExactRational,
};
use crate::integral::{constant_approximation, ApproxError, ApproxSide, BackhouseClass};

/// The three alternating series with certified error bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeriesKind {
    /// Gregory-Leibniz: 1 − 1/3 + 1/5 − … = π/4.
    Gls,
    /// Half-scale: 1/2 − 1/4 + 1/6 − … = ln √2.
    HalfLn2,
    /// Alternating harmonic: 1 − 1/2 + 1/3 − … = ln 2.
    Ahs,
}

impl SeriesKind {
    pub const ALL: [SeriesKind; 3] = [SeriesKind::Gls, SeriesKind::HalfLn2, SeriesKind::Ahs];

    /// i-th unsigned term, i ≥ 1: 1/(2i−1), 1/(2i), or 1/i.
    pub fn term(self, i: u64) -> ExactRational {
        assert!(i >= 1, "terms are indexed from 1");
        let denom = match self {
            SeriesKind::Gls => 2 * i - 1,
            SeriesKind::HalfLn2 => 2 * i,
            SeriesKind::Ahs => i,
        };
        BigRational::new(BigInt::one(), BigInt::from(denom))
    }

    pub fn target(self) -> TargetConstant {
        match self {
            SeriesKind::Gls => TargetConstant::PiOver4,
            SeriesKind::HalfLn2 => TargetConstant::LnSqrt2,
            SeriesKind::Ahs => TargetConstant::Ln2,
        }
    }

    /// Which integral class feeds this series' bounds.
    pub fn backhouse_class(self) -> BackhouseClass {
        match self {
            SeriesKind::Gls => BackhouseClass::PiClass,
            SeriesKind::HalfLn2 | SeriesKind::Ahs => BackhouseClass::Ln2Class,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SeriesKind::Gls => "gls",
            SeriesKind::HalfLn2 => "lnsqrt2",
            SeriesKind::Ahs => "ahs",
        }
    }
}

impl fmt::Display for SeriesKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Limit constant of a series.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TargetConstant {
    PiOver4,
    LnSqrt2,
    Ln2,
}

impl TargetConstant {
    /// Rational interval strictly containing the constant, width below
    /// `10^(−digits)`.
    pub fn enclosure(self, digits: u32) -> (ExactRational, ExactRational) {
        match self {
            TargetConstant::PiOver4 => pi_enclosure(digits).scaled(&rat(1, 4)),
            TargetConstant::LnSqrt2 => ln2_enclosure(digits).scaled(&rat(1, 2)),
            TargetConstant::Ln2 => {
                let e = ln2_enclosure(digits);
                (e.lo().clone(), e.hi().clone())
            }
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            TargetConstant::PiOver4 => "pi/4",
            TargetConstant::LnSqrt2 => "ln(sqrt2)",
            TargetConstant::Ln2 => "ln(2)",
        }
    }
}

/// Exact alternating partial sum Σ_{i=1}^{k} (−1)^(i+1)·term(i); k = 0 gives 0.
pub fn partial_sum(series: SeriesKind, k: u64) -> ExactRational {
    sum_exact(
        (1..=k)
            .map(|i| {
                let t = series.term(i);
                if i % 2 == 1 {
                    t
                } else {
                    -t
                }
            })
            .collect(),
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SumSide {
    AboveTarget,
    BelowTarget,
}

/// Which side of its target the k-th partial sum falls on. Odd k overshoots
/// for all three series; the enclosure comparison certifies this rather than
/// assuming the parity rule.
pub fn side_of_partial_sum(series: SeriesKind, k: u64) -> SumSide {
    assert!(k >= 1, "k must be >= 1");
    let ps = partial_sum(series, k);
    let side = side_of_value(series, &ps);
    debug_assert_eq!(matches!(side, SumSide::AboveTarget), k % 2 == 1);
    side
}

fn side_of_value(series: SeriesKind, value: &ExactRational) -> SumSide {
    let mut digits = 20u32;
    for _ in 0..6 {
        let (lo, hi) = series.target().enclosure(digits);
        if *value > hi {
            return SumSide::AboveTarget;
        }
        if *value < lo {
            return SumSide::BelowTarget;
        }
        digits *= 2;
    }
    panic!("value indistinguishable from the target at 640 digits");
}

/// Selector for a bound construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundMethod {
    Leibniz,
    Calabrese,
    Johnsonbaugh { j: u32 },
    Proposition { id: u8 },
    DalzellGeneric { n: u64 },
}

impl BoundMethod {
    pub fn label(&self) -> String {
        match self {
            BoundMethod::Leibniz => "Leibniz".to_string(),
            BoundMethod::Calabrese => "Calabrese".to_string(),
            BoundMethod::Johnsonbaugh { j } => format!("Johnsonbaugh (j={j})"),
            BoundMethod::Proposition { id } => format!("Proposition {id}"),
            BoundMethod::DalzellGeneric { n } => format!("Dalzell (n={n})"),
        }
    }
}

impl fmt::Display for BoundMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Certified two-sided error estimate: `lower < |target − partial_sum(k)| < upper`.
/// `lower` is absent for methods that only give an upper bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundPair {
    pub k: u64,
    pub method: BoundMethod,
    pub lower: Option<ExactRational>,
    pub upper: ExactRational,
    /// (m_upper, m_lower) exponents, for integral-derived bounds.
    pub exponents: Option<(u64, u64)>,
    /// Attached when the Johnsonbaugh hypothesis window check fails.
    pub warning: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BoundsError {
    #[error("k must be >= 1 for bound computations")]
    InvalidK,
    #[error("n must be an even integer >= 2, got {0}")]
    InvalidN(u64),
    #[error("j must be >= 1")]
    InvalidJ,
    #[error("proposition {prop} does not apply to the {series} series")]
    SeriesMismatch { prop: u8, series: &'static str },
    #[error("unknown proposition {0}; valid ids are 1..=6")]
    UnknownProposition(u8),
    #[error("{method} applies to the gls series only")]
    GlsOnly { method: &'static str },
    #[error("orientation check failed for {which} bound of {series} at k={k}, n={n}")]
    Orientation {
        series: &'static str,
        k: u64,
        n: u64,
        which: &'static str,
    },
    #[error(transparent)]
    Approx(#[from] ApproxError),
}

/// Exponents (m_upper, m_lower) used by the generic construction for
/// (series, k, n). Requires k ≥ 1 and n ≥ 2.
///
/// The remainder of (1−x)ⁿ mod (1+x²) is the constant (−2i)^(n/2), whose
/// sign alternates every other even n. A negative constant makes I(m,n) > 0
/// an upper-type certificate at the index tied to m, so the lower bound
/// needs the next integral out (m_up + 2); a positive constant certifies a
/// lower bound directly at that index, putting the lower integral two steps
/// back (m_up − 2).
pub fn dalzell_exponents(series: SeriesKind, k: u64, n: u64) -> (u64, u64) {
    let m_up = match series {
        SeriesKind::Gls => 2 * k + n / 2 - 2,
        SeriesKind::HalfLn2 | SeriesKind::Ahs => 2 * k + n / 2 - 1,
    };
    let m_lo = if n % 8 == 2 || n % 8 == 4 {
        m_up + 2
    } else {
        m_up - 2
    };
    (m_up, m_lo)
}

/// Generic integral-derived bound pair.
///
/// For the π/4 target take `m_up = 2k + n/2 − 2` and for the ln-targets
/// `m_up = 2k + n/2 − 1`; both keep `2m−n` in the right residue class for
/// every k. The approximation from `I(m_up, n)` lands on the far side of the
/// target from the partial sum (upper bound); the companion exponent from
/// [`dalzell_exponents`] lands strictly between partial sum and target
/// (lower bound). Both placements are verified: the ρ side comes from an
/// exact coefficient sign and the partial-sum side from
/// [`side_of_partial_sum`], so a violated placement is an error, never a
/// silent misbound.
pub fn dalzell_bounds(series: SeriesKind, k: u64, n: u64) -> Result<BoundPair, BoundsError> {
    if k == 0 {
        return Err(BoundsError::InvalidK);
    }
    if n < 2 || n % 2 != 0 {
        return Err(BoundsError::InvalidN(n));
    }
    if series == SeriesKind::Ahs {
        // AHS_k = 2·S_k exactly, so every AHS bound is twice the half-scale one.
        let base = dalzell_bounds(SeriesKind::HalfLn2, k, n)?;
        return Ok(BoundPair {
            k,
            method: BoundMethod::DalzellGeneric { n },
            lower: base.lower.map(|v| v * rat_int(2)),
            upper: base.upper * rat_int(2),
            exponents: base.exponents,
            warning: None,
        });
    }

    let (m_up, m_lo) = dalzell_exponents(series, k, n);
    let approx_up = constant_approximation(m_up, n)?;
    let approx_lo = constant_approximation(m_lo, n)?;
    let scale = match series {
        SeriesKind::Gls => rat(1, 4),
        SeriesKind::HalfLn2 => rat(1, 2),
        SeriesKind::Ahs => unreachable!(),
    };
    let rho_up = &approx_up.value * &scale;
    let rho_lo = &approx_lo.value * &scale;
    let ps = partial_sum(series, k);
    let ps_side = side_of_partial_sum(series, k);

    let up_ok = match ps_side {
        SumSide::AboveTarget => approx_up.side == ApproxSide::TargetAbove,
        SumSide::BelowTarget => approx_up.side == ApproxSide::TargetBelow,
    };
    if !up_ok {
        return Err(BoundsError::Orientation {
            series: series.name(),
            k,
            n,
            which: "upper",
        });
    }
    let lo_ok = match ps_side {
        SumSide::AboveTarget => approx_lo.side == ApproxSide::TargetBelow && rho_lo < ps,
        SumSide::BelowTarget => approx_lo.side == ApproxSide::TargetAbove && rho_lo > ps,
    };
    if !lo_ok {
        return Err(BoundsError::Orientation {
            series: series.name(),
            k,
            n,
            which: "lower",
        });
    }

    let upper = (&rho_up - &ps).abs();
    let lower = (&rho_lo - &ps).abs();
    debug_assert!(lower < upper);
    Ok(BoundPair {
        k,
        method: BoundMethod::DalzellGeneric { n },
        lower: Some(lower),
        upper,
        exponents: Some((m_up, m_lo)),
        warning: None,
    })
}

fn eval_int_poly(coeffs: &[i64], k: u64) -> BigInt {
    let k = BigInt::from(k);
    let mut acc = BigInt::zero();
    for c in coeffs.iter().rev() {
        acc = acc * &k + BigInt::from(*c);
    }
    acc
}

fn closed_form(k: u64, num: &[i64], den: &[i64]) -> ExactRational {
    BigRational::new(eval_int_poly(num, k), eval_int_poly(den, k))
}

/// Closed-form proposition bounds, transcribed literally (coefficients listed
/// from the constant term up). Propositions 1–4 bound the Gregory-Leibniz
/// error, 5–6 the alternating harmonic error. Kept independent of
/// [`dalzell_bounds`] so the two routes cross-validate each other.
pub fn proposition_bounds(
    series: SeriesKind,
    k: u64,
    prop_id: u8,
) -> Result<BoundPair, BoundsError> {
    if !(1..=6).contains(&prop_id) {
        return Err(BoundsError::UnknownProposition(prop_id));
    }
    match (series, prop_id) {
        (SeriesKind::Gls, 1..=4) | (SeriesKind::Ahs, 5 | 6) => {}
        _ => {
            return Err(BoundsError::SeriesMismatch {
                prop: prop_id,
                series: series.name(),
            })
        }
    }
    if k == 0 {
        return Err(BoundsError::InvalidK);
    }
    #[rustfmt::skip]
    let (lo_num, lo_den, up_num, up_den): (&[i64], &[i64], &[i64], &[i64]) = match prop_id {
        1 => (&[3, 2], &[4, 12, 8], &[1], &[0, 4]),
        2 => (
            &[47, 58, 26, 4], &[60, 214, 236, 104, 16],
            &[5, 6, 2], &[6, 22, 24, 8],
        ),
        3 => (
            &[-3, 40, 68, 40, 8], &[0, 48, 200, 280, 160, 32],
            &[567, 1454, 1428, 696, 168, 16], &[720, 3528, 6496, 5880, 2800, 672, 64],
        ),
        4 => (
            &[981, 2828, 3226, 1932, 642, 112, 8],
            &[1260, 6534, 13132, 13538, 7840, 2576, 448, 32],
            &[35631, 82854, 83320, 46730, 15678, 3132, 344, 16],
            &[45360, 211284, 375066, 348614, 190036, 63056, 12544, 1376, 64],
        ),
        5 => (&[3, 2], &[5, 9, 4], &[1], &[1, 2]),
        6 => (
            &[83, 87, 32, 4], &[120, 268, 208, 68, 8],
            &[17, 16, 4], &[24, 52, 36, 8],
        ),
        _ => unreachable!(),
    };
    Ok(BoundPair {
        k,
        method: BoundMethod::Proposition { id: prop_id },
        lower: Some(closed_form(k, lo_num, lo_den)),
        upper: closed_form(k, up_num, up_den),
        exponents: None,
        warning: None,
    })
}

/// Leibniz criterion: the error is bounded above by the next term.
pub fn leibniz_bound(series: SeriesKind, k: u64) -> Result<ExactRational, BoundsError> {
    if k == 0 {
        return Err(BoundsError::InvalidK);
    }
    Ok(series.term(k + 1))
}

/// Calabrese sandwich for the Gregory-Leibniz series:
/// `1/(4k+2) < |π/4 − GLS_k| < 1/(4k−2)`.
pub fn calabrese_bounds(k: u64) -> Result<BoundPair, BoundsError> {
    if k == 0 {
        return Err(BoundsError::InvalidK);
    }
    let k_i = k as i64;
    Ok(BoundPair {
        k,
        method: BoundMethod::Calabrese,
        lower: Some(rat(1, 4 * k_i + 2)),
        upper: rat(1, 4 * k_i - 2),
        exponents: None,
        warning: None,
    })
}

/// r-th forward difference of the unsigned term sequence,
/// Δ⁰aₖ = aₖ and Δʳaₖ = Δ^(r−1)aₖ − Δ^(r−1)a_(k+1).
pub fn forward_difference(series: SeriesKind, r: u32, k: u64) -> ExactRational {
    assert!(k >= 1, "k must be >= 1");
    let mut row: Vec<ExactRational> = (0..=r as u64).map(|t| series.term(k + t)).collect();
    for _ in 0..r {
        row = row.windows(2).map(|w| &w[0] - &w[1]).collect();
    }
    row.into_iter().next().expect("nonempty difference row")
}

/// 1/2^(r+1)
fn half_power(r: u32) -> ExactRational {
    BigRational::new(BigInt::one(), BigInt::one() << (r + 1))
}

pub const DEFAULT_HYPOTHESIS_WINDOW: u64 = 64;

/// Johnsonbaugh two-sided estimate of order j:
/// lower = Σ_{r=0}^{j} Δʳa_(k+1)/2^(r+1), upper = aₖ/2 − Σ_{r=1}^{j} Δʳaₖ/2^(r+1).
///
/// The theorem needs every (Δʳaᵢ) for r ≤ j to decrease monotonically to
/// zero; that hypothesis is sampled on a finite window and a violation
/// attaches a warning instead of failing.
pub fn johnsonbaugh_bounds(series: SeriesKind, k: u64, j: u32) -> Result<BoundPair, BoundsError> {
    johnsonbaugh_bounds_with_window(series, k, j, DEFAULT_HYPOTHESIS_WINDOW)
}

pub fn johnsonbaugh_bounds_with_window(
    series: SeriesKind,
    k: u64,
    j: u32,
    window: u64,
) -> Result<BoundPair, BoundsError> {
    if k == 0 {
        return Err(BoundsError::InvalidK);
    }
    if j == 0 {
        return Err(BoundsError::InvalidJ);
    }
    let warning = hypothesis_warning(|i| series.term(i), k, j, window);
    let lower = sum_exact(
        (0..=j)
            .map(|r| forward_difference(series, r, k + 1) * half_power(r))
            .collect(),
    );
    let upper = series.term(k) * half_power(0)
        - sum_exact(
            (1..=j)
                .map(|r| forward_difference(series, r, k) * half_power(r))
                .collect(),
        );
    Ok(BoundPair {
        k,
        method: BoundMethod::Johnsonbaugh { j },
        lower: Some(lower),
        upper,
        exponents: None,
        warning,
    })
}

/// Checks Δʳaᵢ > 0 and strictly decreasing for r = 1..=j over i in
/// [k, k+window]. Returns a description of the first violation.
pub(crate) fn hypothesis_warning(
    term: impl Fn(u64) -> ExactRational,
    k: u64,
    j: u32,
    window: u64,
) -> Option<String> {
    let width = window + j as u64 + 2;
    let mut row: Vec<ExactRational> = (0..width).map(|t| term(k + t)).collect();
    for r in 1..=j {
        row = row.windows(2).map(|w| &w[0] - &w[1]).collect();
        for i in 0..=window as usize {
            if row[i] <= ExactRational::zero() {
                return Some(format!("Δ^{} a_{} is not positive", r, k + i as u64));
            }
            if row[i] <= row[i + 1] {
                return Some(format!(
                    "Δ^{} is not strictly decreasing at index {}",
                    r,
                    k + i as u64
                ));
            }
        }
    }
    None
}

/// Certified rational interval for `|target − partial_sum(k)|`, of width
/// below `10^(−digits)`. Escalates the enclosure precision until the partial
/// sum separates from the target interval.
pub fn certified_error_interval(
    series: SeriesKind,
    k: u64,
    digits: u32,
) -> (ExactRational, ExactRational) {
    assert!(k >= 1, "k must be >= 1");
    assert!(digits >= 1, "digits must be >= 1");
    let ps = partial_sum(series, k);
    let mut attempt_digits = digits;
    for _ in 0..8 {
        let (lo_t, hi_t) = series.target().enclosure(attempt_digits);
        if ps > hi_t {
            return (&ps - hi_t, ps - lo_t);
        }
        if ps < lo_t {
            return (lo_t - &ps, hi_t - ps);
        }
        attempt_digits *= 2;
    }
    panic!("partial sum indistinguishable from the target at {attempt_digits} digits");
}

/// `|target − partial_sum(k)|` rendered to `digits` decimals, certified
/// correct to the last digit ±1 ulp.
pub fn true_error(series: SeriesKind, k: u64, digits: u32) -> DecimalString {
    let (lo, hi) = certified_error_interval(series, k, digits + 3);
    let midpoint = (lo + hi) / rat_int(2);
    to_decimal(&midpoint, digits)
}
