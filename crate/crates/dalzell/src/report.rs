//! Comparison tables, render formats, and the invariant check suite behind
//! the command-line interface.

use serde::{Deserialize, Serialize};

use crate::bounds::{
    calabrese_bounds, certified_error_interval, dalzell_bounds, dalzell_exponents,
    forward_difference, johnsonbaugh_bounds, leibniz_bound, partial_sum, proposition_bounds,
    BoundMethod, BoundPair, BoundsError, SeriesKind,
};
use crate::exactnum::{rat, rat_int, to_decimal, DecimalString, ExactRational};
use crate::integral::{
    classify, dalzell_integral, divide_by_circle, expand_integrand, BackhouseClass, Polynomial,
};
use num::{Signed, Zero};

/// Default cap on the exponents fed to the symbolic integrator. Coefficients
/// stay exact at any size; the cap only keeps accidental huge requests from
/// eating the machine.
pub const EXPONENT_LIMIT: u64 = 512;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableSide {
    Upper,
    Lower,
}

impl TableSide {
    pub fn name(self) -> &'static str {
        match self {
            TableSide::Upper => "upper",
            TableSide::Lower => "lower",
        }
    }
}

/// What to tabulate: one series, a list of k columns, an ordered list of
/// methods, one side, and the rendered precision.
#[derive(Debug, Clone)]
pub struct TableSpec {
    pub series: SeriesKind,
    pub ks: Vec<u64>,
    pub methods: Vec<BoundMethod>,
    pub side: TableSide,
    pub digits: u32,
}

fn table1_methods() -> Vec<BoundMethod> {
    vec![
        BoundMethod::Leibniz,
        BoundMethod::Calabrese,
        BoundMethod::Johnsonbaugh { j: 1 },
        BoundMethod::Proposition { id: 1 },
        BoundMethod::Johnsonbaugh { j: 2 },
        BoundMethod::Johnsonbaugh { j: 3 },
        BoundMethod::Proposition { id: 2 },
        BoundMethod::Johnsonbaugh { j: 4 },
        BoundMethod::Johnsonbaugh { j: 5 },
        BoundMethod::Proposition { id: 3 },
        BoundMethod::Proposition { id: 4 },
    ]
}

fn table2_methods() -> Vec<BoundMethod> {
    table1_methods()
        .into_iter()
        .filter(|m| *m != BoundMethod::Leibniz)
        .collect()
}

/// Built-in table layouts: `table1` (upper bounds) and `table2` (lower
/// bounds), both for the Gregory-Leibniz series at k = 10 and k = 20.
pub fn preset(name: &str) -> Option<TableSpec> {
    match name {
        "table1" => Some(TableSpec {
            series: SeriesKind::Gls,
            ks: vec![10, 20],
            methods: table1_methods(),
            side: TableSide::Upper,
            digits: 12,
        }),
        "table2" => Some(TableSpec {
            series: SeriesKind::Gls,
            ks: vec![10, 20],
            methods: table2_methods(),
            side: TableSide::Lower,
            digits: 12,
        }),
        _ => None,
    }
}

/// One table cell; failed cells carry the reason instead of aborting the
/// whole table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cell {
    Value {
        decimal: DecimalString,
        rational: ExactRational,
    },
    Invalid(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub label: String,
    pub cells: Vec<Cell>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableResult {
    pub ks: Vec<u64>,
    pub digits: u32,
    pub rows: Vec<TableRow>,
    /// Certified true-error row, appended after the method rows.
    pub footer: TableRow,
}

/// Evaluates one method at one k. `limit` caps the integrator exponents for
/// the generic construction.
pub fn evaluate_method(
    series: SeriesKind,
    k: u64,
    method: BoundMethod,
    limit: u64,
) -> Result<BoundPair, String> {
    let to_msg = |e: BoundsError| e.to_string();
    match method {
        BoundMethod::Leibniz => Ok(BoundPair {
            k,
            method,
            lower: None,
            upper: leibniz_bound(series, k).map_err(to_msg)?,
            exponents: None,
            warning: None,
        }),
        BoundMethod::Calabrese => {
            if series != SeriesKind::Gls {
                return Err(BoundsError::GlsOnly {
                    method: "calabrese",
                }
                .to_string());
            }
            calabrese_bounds(k).map_err(to_msg)
        }
        BoundMethod::Johnsonbaugh { j } => johnsonbaugh_bounds(series, k, j).map_err(to_msg),
        BoundMethod::Proposition { id } => proposition_bounds(series, k, id).map_err(to_msg),
        BoundMethod::DalzellGeneric { n } => {
            if k >= 1 && n >= 2 {
                let (m_up, m_lo) = dalzell_exponents(series, k, n);
                let needed = m_up.max(m_lo).max(n);
                if needed > limit {
                    return Err(format!(
                        "resource limit exceeded: exponent {needed} is over the cap {limit}"
                    ));
                }
            }
            dalzell_bounds(series, k, n).map_err(to_msg)
        }
    }
}

pub fn build_table(spec: &TableSpec) -> TableResult {
    build_table_with_limit(spec, EXPONENT_LIMIT)
}

pub fn build_table_with_limit(spec: &TableSpec, limit: u64) -> TableResult {
    let rows = spec
        .methods
        .iter()
        .map(|method| TableRow {
            label: method.label(),
            cells: spec
                .ks
                .iter()
                .map(|&k| match evaluate_method(spec.series, k, *method, limit) {
                    Ok(pair) => {
                        let value = match spec.side {
                            TableSide::Upper => Some(pair.upper),
                            TableSide::Lower => pair.lower,
                        };
                        match value {
                            Some(rational) => Cell::Value {
                                decimal: to_decimal(&rational, spec.digits),
                                rational,
                            },
                            None => Cell::Invalid("no lower bound".to_string()),
                        }
                    }
                    Err(reason) => Cell::Invalid(reason),
                })
                .collect(),
        })
        .collect();
    let footer = TableRow {
        label: "True error".to_string(),
        cells: spec
            .ks
            .iter()
            .map(|&k| {
                if k == 0 {
                    return Cell::Invalid("k must be >= 1".to_string());
                }
                let (lo, hi) = certified_error_interval(spec.series, k, spec.digits + 3);
                let rational = (lo + hi) / rat_int(2);
                Cell::Value {
                    decimal: to_decimal(&rational, spec.digits),
                    rational,
                }
            })
            .collect(),
    };
    TableResult {
        ks: spec.ks.clone(),
        digits: spec.digits,
        rows,
        footer,
    }
}

/// Flat record of one table cell, the unit of the CSV and JSON formats.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellRecord {
    pub method: String,
    pub k: u64,
    pub decimal: String,
    pub rational: String,
}

impl TableResult {
    pub fn records(&self) -> Vec<CellRecord> {
        let mut out = Vec::new();
        for row in self.rows.iter().chain(std::iter::once(&self.footer)) {
            for (i, cell) in row.cells.iter().enumerate() {
                let (decimal, rational) = match cell {
                    Cell::Value { decimal, rational } => {
                        (decimal.text().to_string(), rational.to_string())
                    }
                    Cell::Invalid(reason) => (format!("ERR({reason})"), String::new()),
                };
                out.push(CellRecord {
                    method: row.label.clone(),
                    k: self.ks[i],
                    decimal,
                    rational,
                });
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderFormat {
    Text,
    Csv,
    Json,
}

/// Renders a table; output is byte-deterministic for a given table.
pub fn render(table: &TableResult, format: RenderFormat) -> String {
    match format {
        RenderFormat::Text => render_text(table),
        RenderFormat::Csv => render_csv_records(&table.records()),
        RenderFormat::Json => render_json_records(&table.records()),
    }
}

fn cell_text(cell: &Cell) -> String {
    match cell {
        Cell::Value { decimal, .. } => decimal.text().to_string(),
        Cell::Invalid(reason) => format!("ERR({reason})"),
    }
}

fn render_text(table: &TableResult) -> String {
    let headers: Vec<String> = table.ks.iter().map(|k| format!("k={k}")).collect();
    let all_rows: Vec<&TableRow> = table
        .rows
        .iter()
        .chain(std::iter::once(&table.footer))
        .collect();
    let label_width = all_rows.iter().map(|r| r.label.len()).max().unwrap_or(0);
    let col_widths: Vec<usize> = headers
        .iter()
        .enumerate()
        .map(|(i, h)| {
            all_rows
                .iter()
                .map(|r| cell_text(&r.cells[i]).len())
                .max()
                .unwrap_or(0)
                .max(h.len())
        })
        .collect();
    let mut out = String::new();
    let mut line = format!("{:label_width$}", "");
    for (h, w) in headers.iter().zip(&col_widths) {
        line.push_str(&format!("  {h:w$}"));
    }
    out.push_str(line.trim_end());
    out.push('\n');
    for row in all_rows {
        let mut line = format!("{:label_width$}", row.label);
        for (cell, w) in row.cells.iter().zip(&col_widths) {
            line.push_str(&format!("  {:w$}", cell_text(cell)));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

pub const CSV_HEADER: &str = "method,k,value_decimal,value_rational";

pub fn render_csv_records(records: &[CellRecord]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in records {
        out.push_str(&format!(
            "{},{},{},{}\n",
            r.method, r.k, r.decimal, r.rational
        ));
    }
    out
}

pub fn parse_csv(text: &str) -> Option<Vec<CellRecord>> {
    let mut lines = text.lines();
    if lines.next()? != CSV_HEADER {
        return None;
    }
    let mut out = Vec::new();
    for line in lines {
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 4 {
            return None;
        }
        out.push(CellRecord {
            method: fields[0].to_string(),
            k: fields[1].parse().ok()?,
            decimal: fields[2].to_string(),
            rational: fields[3].to_string(),
        });
    }
    Some(out)
}

pub fn render_json_records(records: &[CellRecord]) -> String {
    let mut out = serde_json::to_string(records).expect("plain strings and integers");
    out.push('\n');
    out
}

pub fn parse_json(text: &str) -> Option<Vec<CellRecord>> {
    serde_json::from_str(text).ok()
}

/// Limits for the invariant check suite.
#[derive(Debug, Clone, Copy)]
pub struct CheckLimits {
    pub m_max: u64,
    pub n_max: u64,
    pub k_max: u64,
    pub digits: u32,
}

impl Default for CheckLimits {
    fn default() -> Self {
        CheckLimits {
            m_max: 40,
            n_max: 8,
            k_max: 50,
            digits: 30,
        }
    }
}

#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CheckOutcome {
    fn pass(name: &'static str, detail: String) -> Self {
        CheckOutcome {
            name,
            passed: true,
            detail,
        }
    }

    fn fail(name: &'static str, detail: String) -> Self {
        CheckOutcome {
            name,
            passed: false,
            detail,
        }
    }
}

#[derive(Debug, Clone)]
pub struct CheckReport {
    pub outcomes: Vec<CheckOutcome>,
}

impl CheckReport {
    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.passed)
    }

    /// 0 when every check passed, 2 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.all_passed() {
            0
        } else {
            2
        }
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for o in &self.outcomes {
            out.push_str(&format!(
                "{} {}: {}\n",
                if o.passed { "PASS" } else { "FAIL" },
                o.name,
                o.detail
            ));
        }
        let failed = self.outcomes.iter().filter(|o| !o.passed).count();
        if failed == 0 {
            out.push_str(&format!(
                "check suite: {}/{} passed\n",
                self.outcomes.len(),
                self.outcomes.len()
            ));
        } else {
            out.push_str(&format!(
                "check suite: {} of {} checks FAILED\n",
                failed,
                self.outcomes.len()
            ));
        }
        out
    }
}

/// Signature used by the closed-form equivalence checks, injectable so tests
/// can feed a corrupted proposition table.
pub type PropositionFn<'a> = &'a dyn Fn(SeriesKind, u64, u8) -> Result<BoundPair, BoundsError>;

/// `I(m,n) > 0` for the whole sweep, certified against enclosures.
pub fn check_positivity(m_max: u64, n_max: u64) -> CheckOutcome {
    const NAME: &str = "positivity";
    let mut count = 0u64;
    for m in 0..=m_max {
        for n in 0..=n_max {
            if !dalzell_integral(m, n).certified_positive() {
                return CheckOutcome::fail(
                    NAME,
                    format!("I({m},{n}) could not be certified positive"),
                );
            }
            count += 1;
        }
    }
    CheckOutcome::pass(NAME, format!("{count} integrals certified positive"))
}

/// Coefficient-vanishing pattern matches the residue class, and the class
/// coefficient never vanishes.
pub fn check_classification(m_max: u64, n_max: u64) -> CheckOutcome {
    const NAME: &str = "classification";
    for m in 0..=m_max {
        for n in 0..=n_max {
            let v = dalzell_integral(m, n);
            let ok = match classify(m, n) {
                BackhouseClass::PiClass => v.l.is_zero() && !v.p.is_zero(),
                BackhouseClass::Ln2Class => v.p.is_zero() && !v.l.is_zero(),
                BackhouseClass::MixedClass => !v.p.is_zero() && !v.l.is_zero(),
            };
            if !ok {
                return CheckOutcome::fail(
                    NAME,
                    format!(
                        "I({m},{n}) has coefficients (p={}, l={}) inconsistent with class {}",
                        v.p,
                        v.l,
                        classify(m, n)
                    ),
                );
            }
        }
    }
    CheckOutcome::pass(
        NAME,
        format!("coefficient pattern matches 2m−n mod 4 for all m ≤ {m_max}, n ≤ {n_max}"),
    )
}

/// quotient·(1+x²) + remainder reproduces the expanded integrand exactly.
pub fn check_reconstruction(m_max: u64, n_max: u64) -> CheckOutcome {
    const NAME: &str = "reconstruction";
    let circle = Polynomial::from_i64(&[1, 0, 1]);
    for m in 0..=m_max {
        for n in 0..=n_max {
            let p = expand_integrand(m, n);
            let (q, r) = divide_by_circle(&p);
            if r.degree().unwrap_or(0) > 1 || q.mul(&circle).add(&r) != p {
                return CheckOutcome::fail(NAME, format!("division identity fails at ({m},{n})"));
            }
        }
    }
    CheckOutcome::pass(
        NAME,
        format!("division identity holds for all m ≤ {m_max}, n ≤ {n_max}"),
    )
}

/// Generic construction equals Propositions 1–4 for the Gregory-Leibniz
/// series, as exact rationals on both sides.
pub fn check_equivalence_gls(k_max: u64, prop: PropositionFn) -> CheckOutcome {
    const NAME: &str = "closed-form-equivalence-gls";
    for k in 1..=k_max {
        for (n, id) in [(2u64, 1u8), (4, 2), (6, 3), (8, 4)] {
            let d = match dalzell_bounds(SeriesKind::Gls, k, n) {
                Ok(d) => d,
                Err(e) => return CheckOutcome::fail(NAME, format!("k={k} n={n}: {e}")),
            };
            let p = match prop(SeriesKind::Gls, k, id) {
                Ok(p) => p,
                Err(e) => return CheckOutcome::fail(NAME, format!("k={k} prop={id}: {e}")),
            };
            if d.upper != p.upper || d.lower != p.lower {
                return CheckOutcome::fail(
                    NAME,
                    format!("n={n} and proposition {id} disagree at k={k}"),
                );
            }
        }
    }
    CheckOutcome::pass(
        NAME,
        format!("n ∈ {{2,4,6,8}} equals propositions 1–4 for k ≤ {k_max}"),
    )
}

/// Generic construction vs Propositions 5 and 6 for the alternating harmonic
/// series: the n=2 upper bound and the whole n=4 pair must match exactly.
pub fn check_equivalence_ahs(k_max: u64, prop: PropositionFn) -> CheckOutcome {
    const NAME: &str = "closed-form-equivalence-ahs";
    for k in 1..=k_max {
        let d2 = match dalzell_bounds(SeriesKind::Ahs, k, 2) {
            Ok(d) => d,
            Err(e) => return CheckOutcome::fail(NAME, format!("k={k} n=2: {e}")),
        };
        let p5 = match prop(SeriesKind::Ahs, k, 5) {
            Ok(p) => p,
            Err(e) => return CheckOutcome::fail(NAME, format!("k={k} prop=5: {e}")),
        };
        if d2.upper != p5.upper {
            return CheckOutcome::fail(
                NAME,
                format!("n=2 upper and proposition 5 upper disagree at k={k}"),
            );
        }
        let d4 = match dalzell_bounds(SeriesKind::Ahs, k, 4) {
            Ok(d) => d,
            Err(e) => return CheckOutcome::fail(NAME, format!("k={k} n=4: {e}")),
        };
        let p6 = match prop(SeriesKind::Ahs, k, 6) {
            Ok(p) => p,
            Err(e) => return CheckOutcome::fail(NAME, format!("k={k} prop=6: {e}")),
        };
        if d4.upper != p6.upper || d4.lower != p6.lower {
            return CheckOutcome::fail(NAME, format!("n=4 and proposition 6 disagree at k={k}"));
        }
    }
    CheckOutcome::pass(
        NAME,
        format!("n=2 upper equals proposition 5, n=4 equals proposition 6, for k ≤ {k_max}"),
    )
}

/// The generic n=2 lower bound for the alternating harmonic series is
/// (k+2)/((k+1)(2k+3)), which beats the printed Proposition 5 lower bound
/// (2k+3)/(4k²+9k+5); both must stay below the true error. The gap is a
/// documented discrepancy, reported here rather than papered over.
pub fn check_prop5_gap(k_max: u64, digits: u32) -> CheckOutcome {
    const NAME: &str = "prop5-lower-discrepancy";
    for k in 1..=k_max {
        let d = match dalzell_bounds(SeriesKind::Ahs, k, 2) {
            Ok(d) => d,
            Err(e) => return CheckOutcome::fail(NAME, format!("k={k}: {e}")),
        };
        let d_lower = d.lower.expect("generic bounds carry a lower bound");
        let k_i = k as i64;
        let expected = rat(k_i + 2, (k_i + 1) * (2 * k_i + 3));
        if d_lower != expected {
            return CheckOutcome::fail(
                NAME,
                format!("generic lower bound is not (k+2)/((k+1)(2k+3)) at k={k}"),
            );
        }
        let p5_lower = proposition_bounds(SeriesKind::Ahs, k, 5)
            .expect("proposition 5 applies")
            .lower
            .expect("proposition 5 has a lower bound");
        if d_lower < p5_lower {
            return CheckOutcome::fail(
                NAME,
                format!("generic lower bound drops below the printed one at k={k}"),
            );
        }
        let (err_lo, _) = certified_error_interval(SeriesKind::Ahs, k, digits);
        if d_lower >= err_lo || p5_lower >= err_lo {
            return CheckOutcome::fail(
                NAME,
                format!("a lower bound is not certified below the true error at k={k}"),
            );
        }
    }
    CheckOutcome::pass(
        NAME,
        format!(
            "for k ≤ {k_max} the generic n=2 lower bound (k+2)/((k+1)(2k+3)) dominates the \
             printed (2k+3)/(4k²+9k+5); both certified below the true error (the printed \
             form matches a 1/(2m+1) tail, the generic one the tighter 1/(2(m+1)))"
        ),
    )
}

/// Forward-difference recursion matches the closed forms, and the j=1, j=2
/// bounds match their printed fractions, k ≤ 200.
pub fn check_johnsonbaugh_closed_forms() -> CheckOutcome {
    const NAME: &str = "johnsonbaugh-closed-forms";
    for k in 1..=200u64 {
        let k_i = k as i64;
        if forward_difference(SeriesKind::Gls, 1, k) != rat(2, 4 * k_i * k_i - 1) {
            return CheckOutcome::fail(NAME, format!("Δ¹ closed form fails at k={k}"));
        }
        if forward_difference(SeriesKind::Gls, 2, k)
            != rat(8, 8 * k_i.pow(3) + 12 * k_i.pow(2) - 2 * k_i - 3)
        {
            return CheckOutcome::fail(NAME, format!("Δ² closed form fails at k={k}"));
        }
        let j1 = johnsonbaugh_bounds(SeriesKind::Gls, k, 1).expect("valid arguments");
        if j1.lower != Some(rat(k_i + 2, 4 * k_i * k_i + 8 * k_i + 3))
            || j1.upper != rat(k_i, 4 * k_i * k_i - 1)
        {
            return CheckOutcome::fail(NAME, format!("j=1 closed form fails at k={k}"));
        }
        let j2 = johnsonbaugh_bounds(SeriesKind::Gls, k, 2).expect("valid arguments");
        if j2.lower
            != Some(rat(
                2 * k_i * k_i + 9 * k_i + 11,
                8 * k_i.pow(3) + 36 * k_i.pow(2) + 46 * k_i + 15,
            ))
            || j2.upper
                != rat(
                    2 * k_i * k_i + 3 * k_i - 1,
                    8 * k_i.pow(3) + 12 * k_i.pow(2) - 2 * k_i - 3,
                )
        {
            return CheckOutcome::fail(NAME, format!("j=2 closed form fails at k={k}"));
        }
    }
    CheckOutcome::pass(
        NAME,
        "recursion matches the closed forms for Δ¹, Δ² and j ∈ {1,2}, k ≤ 200".to_string(),
    )
}

/// (2k²+3k−1)(8k³+24k²+22k+6) − (2k²+6k+5)(8k³+12k²−2k−3) = 12k²+24k+9 as a
/// polynomial identity, and the proposition 2 upper bound stays under the
/// j=2 upper bound for k ≤ 1000.
pub fn check_polynomial_identity() -> CheckOutcome {
    const NAME: &str = "polynomial-identity";
    let lhs = Polynomial::from_i64(&[-1, 3, 2])
        .mul(&Polynomial::from_i64(&[6, 22, 24, 8]))
        .sub(&Polynomial::from_i64(&[5, 6, 2]).mul(&Polynomial::from_i64(&[-3, -2, 12, 8])));
    if lhs != Polynomial::from_i64(&[9, 24, 12]) {
        return CheckOutcome::fail(NAME, "difference polynomial is not 12k²+24k+9".to_string());
    }
    for k in 1..=1000u64 {
        let p2 = proposition_bounds(SeriesKind::Gls, k, 2).expect("valid arguments");
        let j2 = johnsonbaugh_bounds(SeriesKind::Gls, k, 2).expect("valid arguments");
        if p2.upper >= j2.upper {
            return CheckOutcome::fail(
                NAME,
                format!("proposition 2 upper does not beat j=2 upper at k={k}"),
            );
        }
    }
    CheckOutcome::pass(
        NAME,
        "difference polynomial is 12k²+24k+9; proposition 2 < j=2 upper for k ≤ 1000".to_string(),
    )
}

/// Every alternating-harmonic bound is exactly twice the half-scale bound.
pub fn check_scaling_lock(k_max: u64, n_max: u64) -> CheckOutcome {
    const NAME: &str = "scaling-lock";
    for k in 1..=k_max {
        if partial_sum(SeriesKind::Ahs, k) != partial_sum(SeriesKind::HalfLn2, k) * rat_int(2) {
            return CheckOutcome::fail(NAME, format!("partial sums break the 2× lock at k={k}"));
        }
        for n in (2..=n_max).step_by(2) {
            let ahs = match dalzell_bounds(SeriesKind::Ahs, k, n) {
                Ok(b) => b,
                Err(e) => return CheckOutcome::fail(NAME, format!("k={k} n={n}: {e}")),
            };
            let half = match dalzell_bounds(SeriesKind::HalfLn2, k, n) {
                Ok(b) => b,
                Err(e) => return CheckOutcome::fail(NAME, format!("k={k} n={n}: {e}")),
            };
            if ahs.upper != half.upper * rat_int(2)
                || ahs.lower != half.lower.map(|v| v * rat_int(2))
            {
                return CheckOutcome::fail(
                    NAME,
                    format!("bounds break the 2× lock at k={k}, n={n}"),
                );
            }
        }
    }
    CheckOutcome::pass(
        NAME,
        format!("ahs values are exactly twice the lnsqrt2 values for k ≤ {k_max}"),
    )
}

fn sandwich_methods(series: SeriesKind, n_max: u64) -> Vec<BoundMethod> {
    let mut methods = vec![BoundMethod::Leibniz];
    if series == SeriesKind::Gls {
        methods.push(BoundMethod::Calabrese);
    }
    for j in 1..=5u32 {
        methods.push(BoundMethod::Johnsonbaugh { j });
    }
    match series {
        SeriesKind::Gls => {
            for id in 1..=4u8 {
                methods.push(BoundMethod::Proposition { id });
            }
        }
        SeriesKind::Ahs => {
            for id in 5..=6u8 {
                methods.push(BoundMethod::Proposition { id });
            }
        }
        SeriesKind::HalfLn2 => {}
    }
    for n in (2..=n_max).step_by(2) {
        methods.push(BoundMethod::DalzellGeneric { n });
    }
    methods
}

/// Every implemented method strictly brackets the certified true error.
pub fn check_sandwich(k_max: u64, n_max: u64, digits: u32) -> CheckOutcome {
    const NAME: &str = "sandwich";
    let mut cells = 0u64;
    for series in SeriesKind::ALL {
        let methods = sandwich_methods(series, n_max);
        for k in 1..=k_max {
            let (err_lo, err_hi) = certified_error_interval(series, k, digits);
            for method in &methods {
                let pair = match evaluate_method(series, k, *method, EXPONENT_LIMIT) {
                    Ok(p) => p,
                    Err(e) => {
                        return CheckOutcome::fail(
                            NAME,
                            format!("{series} k={k} {}: {e}", method.label()),
                        )
                    }
                };
                if pair.upper <= err_hi {
                    return CheckOutcome::fail(
                        NAME,
                        format!(
                            "{series} k={k}: {} upper is not above the error",
                            method.label()
                        ),
                    );
                }
                if let Some(lower) = pair.lower {
                    if lower.is_negative() || lower >= err_lo {
                        return CheckOutcome::fail(
                            NAME,
                            format!(
                                "{series} k={k}: {} lower is not below the error",
                                method.label()
                            ),
                        );
                    }
                }
                cells += 1;
            }
        }
    }
    CheckOutcome::pass(
        NAME,
        format!("{cells} bound evaluations strictly bracket the certified error"),
    )
}

/// The printed row order of the two built-in tables is a dominance order:
/// upper bounds weakly decrease down table 1 and lower bounds weakly increase
/// down table 2, at k = 10 and k = 20, ending at the true error.
pub fn check_dominance(digits: u32) -> CheckOutcome {
    const NAME: &str = "dominance";
    for k in [10u64, 20] {
        let (err_lo, err_hi) = certified_error_interval(SeriesKind::Gls, k, digits);
        let mut prev: Option<ExactRational> = None;
        for method in table1_methods() {
            let upper = match evaluate_method(SeriesKind::Gls, k, method, EXPONENT_LIMIT) {
                Ok(p) => p.upper,
                Err(e) => return CheckOutcome::fail(NAME, format!("k={k}: {e}")),
            };
            if let Some(prev) = &prev {
                if upper > *prev {
                    return CheckOutcome::fail(
                        NAME,
                        format!("upper bounds not ordered at k={k}, {}", method.label()),
                    );
                }
            }
            prev = Some(upper);
        }
        if prev.expect("nonempty method list") <= err_hi {
            return CheckOutcome::fail(NAME, format!("tightest upper bound under error at k={k}"));
        }
        let mut prev: Option<ExactRational> = None;
        for method in table2_methods() {
            let lower = match evaluate_method(SeriesKind::Gls, k, method, EXPONENT_LIMIT) {
                Ok(p) => p.lower.expect("lower-bound methods"),
                Err(e) => return CheckOutcome::fail(NAME, format!("k={k}: {e}")),
            };
            if let Some(prev) = &prev {
                if lower < *prev {
                    return CheckOutcome::fail(
                        NAME,
                        format!("lower bounds not ordered at k={k}, {}", method.label()),
                    );
                }
            }
            prev = Some(lower);
        }
        if prev.expect("nonempty method list") >= err_lo {
            return CheckOutcome::fail(NAME, format!("tightest lower bound over error at k={k}"));
        }
    }
    CheckOutcome::pass(
        NAME,
        "printed row order is a dominance order at k = 10 and k = 20".to_string(),
    )
}

/// Runs every invariant check. The process exit code contract is
/// [`CheckReport::exit_code`]: 0 iff all checks pass.
pub fn run_check_suite(limits: &CheckLimits) -> CheckReport {
    let outcomes = vec![
        check_positivity(limits.m_max, limits.n_max),
        check_classification(limits.m_max, limits.n_max),
        check_reconstruction(limits.m_max, limits.n_max),
        check_equivalence_gls(limits.k_max, &proposition_bounds),
        check_equivalence_ahs(limits.k_max, &proposition_bounds),
        check_prop5_gap(limits.k_max, limits.digits),
        check_johnsonbaugh_closed_forms(),
        check_polynomial_identity(),
        check_scaling_lock(limits.k_max, limits.n_max),
        check_sandwich(limits.k_max, limits.n_max, limits.digits),
        check_dominance(limits.digits),
    ];
    CheckReport { outcomes }
}
