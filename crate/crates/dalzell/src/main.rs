use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use dalzell::bounds::{dalzell_exponents, BoundMethod, SeriesKind};
use dalzell::exactnum::to_decimal;
use dalzell::integral::{classify, constant_approximation, dalzell_integral};
use dalzell::report::{
    build_table_with_limit, evaluate_method, preset, render, run_check_suite, CheckLimits,
    RenderFormat, TableSide, TableSpec, EXPONENT_LIMIT,
};

/// Exit codes: 0 success, 1 usage error, 2 check-suite failure,
/// 3 resource-limit exceeded.
const EXIT_OK: i32 = 0;
const EXIT_USAGE: i32 = 1;
const EXIT_LIMIT: i32 = 3;

#[derive(Parser)]
#[command(
    name = "dalzell",
    version,
    about = "Exact integral-derived error bounds for the Gregory-Leibniz and alternating harmonic series"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesArg {
    Gls,
    Ahs,
    Lnsqrt2,
}

impl From<SeriesArg> for SeriesKind {
    fn from(value: SeriesArg) -> Self {
        match value {
            SeriesArg::Gls => SeriesKind::Gls,
            SeriesArg::Ahs => SeriesKind::Ahs,
            SeriesArg::Lnsqrt2 => SeriesKind::HalfLn2,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Leibniz,
    Calabrese,
    Johnsonbaugh,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Upper,
    Lower,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate I(m,n) = ∫₀¹ xᵐ(1−x)ⁿ/(1+x²) dx exactly
    Integral {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u64,
        /// Decimal digits for the numeric approximation
        #[arg(long, default_value_t = 12)]
        digits: u32,
        /// Cap on the exponents m, n
        #[arg(long, default_value_t = EXPONENT_LIMIT)]
        limit: u64,
    },
    /// One-sided rational approximation of π or ln 2 certified by I(m,n) > 0
    Approx {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = EXPONENT_LIMIT)]
        limit: u64,
    },
    /// Certified error bounds for one series at one k
    Bounds {
        #[arg(long)]
        series: SeriesArg,
        #[arg(long)]
        k: u64,
        /// Generic integral-derived bounds with this even n
        #[arg(long)]
        n: Option<u64>,
        /// Closed-form proposition id (1-4 for gls, 5-6 for ahs)
        #[arg(long)]
        prop: Option<u8>,
        /// Classical comparison bound
        #[arg(long, value_enum)]
        method: Option<MethodArg>,
        /// Johnsonbaugh order (required with --method johnsonbaugh)
        #[arg(long)]
        j: Option<u32>,
        #[arg(long, default_value_t = 12)]
        digits: u32,
        #[arg(long, default_value_t = EXPONENT_LIMIT)]
        limit: u64,
    },
    /// Build a comparison table of bound methods
    Table {
        /// Built-in layout: table1 (upper bounds) or table2 (lower bounds)
        #[arg(long)]
        preset: Option<String>,
        #[arg(long)]
        series: Option<SeriesArg>,
        /// Comma-separated list of k values
        #[arg(long, value_delimiter = ',')]
        k: Vec<u64>,
        #[arg(long, value_enum)]
        side: Option<SideArg>,
        /// Comma-separated method list: leibniz, calabrese, johnsonbaugh=J,
        /// prop=P, dalzell=N
        #[arg(long, value_delimiter = ',')]
        methods: Vec<String>,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
        #[arg(long, default_value_t = 12)]
        digits: u32,
        #[arg(long, default_value_t = EXPONENT_LIMIT)]
        limit: u64,
    },
    /// Run the invariant check suite
    Check {
        #[arg(long = "m-max", default_value_t = 40)]
        m_max: u64,
        #[arg(long = "n-max", default_value_t = 8)]
        n_max: u64,
        #[arg(long = "k-max", default_value_t = 50)]
        k_max: u64,
        #[arg(long, default_value_t = 30)]
        digits: u32,
    },
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return code;
        }
    };
    match cli.command {
        Command::Integral {
            m,
            n,
            digits,
            limit,
        } => cmd_integral(m, n, digits, limit),
        Command::Approx { m, n, limit } => cmd_approx(m, n, limit),
        Command::Bounds {
            series,
            k,
            n,
            prop,
            method,
            j,
            digits,
            limit,
        } => cmd_bounds(series.into(), k, n, prop, method, j, digits, limit),
        Command::Table {
            preset,
            series,
            k,
            side,
            methods,
            format,
            digits,
            limit,
        } => cmd_table(preset, series, k, side, methods, format, digits, limit),
        Command::Check {
            m_max,
            n_max,
            k_max,
            digits,
        } => cmd_check(m_max, n_max, k_max, digits),
    }
}

fn limit_exceeded(what: &str, value: u64, limit: u64) -> i32 {
    eprintln!("error: resource limit exceeded: {what} = {value} is over the cap {limit} (raise --limit to override)");
    EXIT_LIMIT
}

fn cmd_integral(m: u64, n: u64, digits: u32, limit: u64) -> i32 {
    if m.max(n) > limit {
        return limit_exceeded("max exponent", m.max(n), limit);
    }
    if digits < 1 {
        eprintln!("error: --digits must be >= 1");
        return EXIT_USAGE;
    }
    let v = dalzell_integral(m, n);
    println!("I({m},{n}) = {v}");
    println!(
        "class: {} (2m-n ≡ {} mod 4)",
        classify(m, n),
        (2 * m as i128 - n as i128).rem_euclid(4)
    );
    let mid = v.value_midpoint(digits + 3);
    println!(
        "value ≈ {} ({digits} digits, certified enclosure)",
        to_decimal(&mid, digits)
    );
    EXIT_OK
}

fn cmd_approx(m: u64, n: u64, limit: u64) -> i32 {
    if m.max(n) > limit {
        return limit_exceeded("max exponent", m.max(n), limit);
    }
    let a = match constant_approximation(m, n) {
        Ok(a) => a,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let relation = match a.side {
        dalzell::integral::ApproxSide::TargetBelow => "<",
        dalzell::integral::ApproxSide::TargetAbove => ">",
    };
    println!(
        "I({m},{n}) > 0 certifies {} {relation} {}",
        a.target, a.value
    );
    println!("target: {}", a.target);
    println!("rho: {}", a.value);
    println!("side: {}", a.side);
    let enc = match a.target {
        dalzell::exactnum::ConstantTarget::Pi => dalzell::exactnum::pi_enclosure(15),
        dalzell::exactnum::ConstantTarget::Ln2 => dalzell::exactnum::ln2_enclosure(15),
    };
    let err = num::Signed::abs(&(enc.midpoint() - &a.value));
    println!("|target - rho| ≈ {} (12 digits)", to_decimal(&err, 12));
    EXIT_OK
}

#[allow(clippy::too_many_arguments)]
fn cmd_bounds(
    series: SeriesKind,
    k: u64,
    n: Option<u64>,
    prop: Option<u8>,
    method: Option<MethodArg>,
    j: Option<u32>,
    digits: u32,
    limit: u64,
) -> i32 {
    let selectors =
        usize::from(n.is_some()) + usize::from(prop.is_some()) + usize::from(method.is_some());
    if selectors != 1 {
        eprintln!("error: choose exactly one of --n, --prop, or --method");
        return EXIT_USAGE;
    }
    if digits < 1 {
        eprintln!("error: --digits must be >= 1");
        return EXIT_USAGE;
    }
    let bound_method = if let Some(n) = n {
        if k >= 1 && n >= 2 {
            let (m_up, m_lo) = dalzell_exponents(series, k, n);
            let needed = m_up.max(m_lo).max(n);
            if needed > limit {
                return limit_exceeded("required exponent", needed, limit);
            }
        }
        BoundMethod::DalzellGeneric { n }
    } else if let Some(id) = prop {
        BoundMethod::Proposition { id }
    } else {
        match method.expect("selector count checked") {
            MethodArg::Leibniz => {
                if j.is_some() {
                    eprintln!("error: --j only applies to --method johnsonbaugh");
                    return EXIT_USAGE;
                }
                BoundMethod::Leibniz
            }
            MethodArg::Calabrese => {
                if j.is_some() {
                    eprintln!("error: --j only applies to --method johnsonbaugh");
                    return EXIT_USAGE;
                }
                BoundMethod::Calabrese
            }
            MethodArg::Johnsonbaugh => match j {
                Some(j) => BoundMethod::Johnsonbaugh { j },
                None => {
                    eprintln!("error: --method johnsonbaugh requires --j");
                    return EXIT_USAGE;
                }
            },
        }
    };
    let pair = match evaluate_method(series, k, bound_method, limit) {
        Ok(pair) => pair,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    println!("series: {series}, k = {k}");
    println!("method: {}", pair.method.label());
    if let Some((m_up, m_lo)) = pair.exponents {
        println!("exponents: m_upper = {m_up}, m_lower = {m_lo}");
    }
    match &pair.lower {
        Some(lower) => println!("lower = {} ≈ {}", lower, to_decimal(lower, digits)),
        None => println!("lower = (none)"),
    }
    println!(
        "upper = {} ≈ {}",
        pair.upper,
        to_decimal(&pair.upper, digits)
    );
    if let Some(warning) = &pair.warning {
        println!("warning: {warning}");
    }
    EXIT_OK
}

fn parse_method_token(token: &str) -> Result<BoundMethod, String> {
    match token {
        "leibniz" => return Ok(BoundMethod::Leibniz),
        "calabrese" => return Ok(BoundMethod::Calabrese),
        _ => {}
    }
    if let Some((name, value)) = token.split_once('=') {
        let parse = |v: &str| -> Result<u64, String> {
            v.parse()
                .map_err(|_| format!("invalid number in method token '{token}'"))
        };
        return match name {
            "johnsonbaugh" => Ok(BoundMethod::Johnsonbaugh {
                j: parse(value)? as u32,
            }),
            "prop" => Ok(BoundMethod::Proposition {
                id: parse(value)? as u8,
            }),
            "dalzell" => Ok(BoundMethod::DalzellGeneric { n: parse(value)? }),
            _ => Err(format!("unknown method '{name}' in token '{token}'")),
        };
    }
    Err(format!(
        "unknown method token '{token}' (expected leibniz, calabrese, johnsonbaugh=J, prop=P, or dalzell=N)"
    ))
}

#[allow(clippy::too_many_arguments)]
fn cmd_table(
    preset_name: Option<String>,
    series: Option<SeriesArg>,
    ks: Vec<u64>,
    side: Option<SideArg>,
    methods: Vec<String>,
    format: FormatArg,
    digits: u32,
    limit: u64,
) -> i32 {
    if digits < 1 {
        eprintln!("error: --digits must be >= 1");
        return EXIT_USAGE;
    }
    let spec = if let Some(name) = preset_name {
        if series.is_some() || !ks.is_empty() || side.is_some() || !methods.is_empty() {
            eprintln!("error: --preset cannot be combined with --series/--k/--side/--methods");
            return EXIT_USAGE;
        }
        match preset(&name) {
            Some(mut spec) => {
                spec.digits = digits;
                spec
            }
            None => {
                eprintln!("error: unknown preset '{name}' (available: table1, table2)");
                return EXIT_USAGE;
            }
        }
    } else {
        let (Some(series), Some(side)) = (series, side) else {
            eprintln!("error: without --preset, --series, --k, --side and --methods are required");
            return EXIT_USAGE;
        };
        if ks.is_empty() || methods.is_empty() {
            eprintln!("error: without --preset, --series, --k, --side and --methods are required");
            return EXIT_USAGE;
        }
        let mut parsed = Vec::with_capacity(methods.len());
        for token in &methods {
            match parse_method_token(token) {
                Ok(m) => parsed.push(m),
                Err(e) => {
                    eprintln!("error: {e}");
                    return EXIT_USAGE;
                }
            }
        }
        TableSpec {
            series: series.into(),
            ks,
            methods: parsed,
            side: match side {
                SideArg::Upper => TableSide::Upper,
                SideArg::Lower => TableSide::Lower,
            },
            digits,
        }
    };
    let table = build_table_with_limit(&spec, limit);
    let format = match format {
        FormatArg::Text => RenderFormat::Text,
        FormatArg::Csv => RenderFormat::Csv,
        FormatArg::Json => RenderFormat::Json,
    };
    print!("{}", render(&table, format));
    EXIT_OK
}

fn cmd_check(m_max: u64, n_max: u64, k_max: u64, digits: u32) -> i32 {
    if digits < 1 || k_max < 1 {
        eprintln!("error: limits must be positive");
        return EXIT_USAGE;
    }
    let report = run_check_suite(&CheckLimits {
        m_max,
        n_max,
        k_max,
        digits,
    });
    print!("{}", report.render_text());
    report.exit_code()
}
