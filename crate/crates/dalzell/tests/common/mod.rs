//! Shared fixtures for the integration suites: the published comparison
//! tables (frozen digit strings), a ulp-tolerance comparator, and an
//! independent Simpson quadrature oracle.

use dalzell::exactnum::{parse_decimal, pow10, to_decimal, ExactRational};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed};

/// Published upper-bound table: (row label, value at k=10, value at k=20).
pub const TABLE1: &[(&str, &str, &str)] = &[
    ("Leibniz", "0.047619047619", "0.024390243902"),
    ("Calabrese", "0.026315789474", "0.012820512821"),
    ("Johnsonbaugh (j=1)", "0.025062656642", "0.012507817386"),
    ("Proposition 1", "0.025000000000", "0.012500000000"),
    ("Johnsonbaugh (j=2)", "0.024953688569", "0.012493273412"),
    ("Johnsonbaugh (j=3)", "0.024940612401", "0.012492303814"),
    ("Proposition 2", "0.024938829287", "0.012492234557"),
    ("Johnsonbaugh (j=4)", "0.024938675190", "0.012492221295"),
    ("Johnsonbaugh (j=5)", "0.024938341189", "0.012492212875"),
    ("Proposition 3", "0.024938268253", "0.012492211870"),
    ("Proposition 4", "0.024938258893", "0.012492211732"),
    ("True error", "0.024938258665", "0.012492211731"),
];

/// Published lower-bound table: (row label, value at k=10, value at k=20).
pub const TABLE2: &[(&str, &str, &str)] = &[
    ("Calabrese", "0.023809523810", "0.012195121951"),
    ("Johnsonbaugh (j=1)", "0.024844720497", "0.012478729438"),
    ("Proposition 1", "0.024891774892", "0.012485481998"),
    ("Johnsonbaugh (j=2)", "0.024927536232", "0.012491334216"),
    ("Johnsonbaugh (j=3)", "0.024936737980", "0.012492138776"),
    ("Proposition 2", "0.024937888199", "0.012492193632"),
    ("Johnsonbaugh (j=4)", "0.024938007187", "0.012492204454"),
    ("Johnsonbaugh (j=5)", "0.024938211898", "0.012492210893"),
    ("Proposition 3", "0.024938241107", "0.012492211537"),
    ("Proposition 4", "0.024938258199", "0.012492211728"),
    ("True error", "0.024938258665", "0.012492211731"),
];

/// True within one unit in the last place at `digits` fractional digits.
pub fn within_one_ulp(expected: &str, actual: &str, digits: u32) -> bool {
    let (Some(e), Some(a)) = (parse_decimal(expected), parse_decimal(actual)) else {
        return false;
    };
    (e - a).abs() <= BigRational::new(BigInt::one(), pow10(digits))
}

/// Rational to f64 through a 17-digit decimal rendering; safe for the huge
/// numerators and denominators certified values carry.
pub fn rat_to_f64(x: &ExactRational) -> f64 {
    to_decimal(x, 17)
        .text()
        .parse()
        .expect("decimal renders parse as f64")
}

/// Composite Simpson quadrature of xᵐ(1−x)ⁿ/(1+x²) on [0,1]; `panels` even.
pub fn simpson_dalzell(m: u32, n: u32, panels: usize) -> f64 {
    assert!(panels % 2 == 0);
    let f = |x: f64| x.powi(m as i32) * (1.0 - x).powi(n as i32) / (1.0 + x * x);
    let h = 1.0 / panels as f64;
    let mut acc = f(0.0) + f(1.0);
    for i in 1..panels {
        acc += f(i as f64 * h) * if i % 2 == 1 { 4.0 } else { 2.0 };
    }
    acc * h / 3.0
}
