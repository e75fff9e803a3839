//! mocktheta: evaluate mock theta functions, completions and superconformal
//! characters; print q-expansions, S-matrices and characteristic numbers;
//! run the identity verification suite.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error,
//! 3 evaluation error.

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64 as C64;

use mocktheta_core::characters::{
    affine_character, affine_denominator, characteristic_numbers, omega_n2, omega_n3,
    reduction_character, reduction_denominator, reduction_smatrix, CharacterIndex, Reduction,
    ReductionSector, SectorLabel,
};
use mocktheta_core::error::EvalError;
use mocktheta_core::halfint::{HalfInt, QuarterInt};
use mocktheta_core::numerators::{
    g_direct, g_via_sum, phi, phi1, phi_add, phi_tilde, FamilyParams,
};
use mocktheta_core::point::{ModularPoint, Truncation, UVPoint};
use mocktheta_core::qexp::{qexp_eta, qexp_phi1, qexp_theta, qexp_vartheta, QExpansion};
use mocktheta_core::theta::{dedekind_eta, jacobi_theta_ab, theta_jm, theta_minus_jm};
use mocktheta_core::verifier::run_suite_with;
use mocktheta_core::zwegers::{a_tilde_a, a_tilde_b, gauss_e, r_a, r_b};

#[derive(Parser)]
#[command(name = "mocktheta", version, about, disable_help_subcommand = true)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Global {
    /// Absolute tail tolerance of every series truncation
    #[arg(long, global = true)]
    tail_tol: Option<f64>,
    /// Pole rejection radius in lattice coordinates
    #[arg(long, global = true)]
    pole_guard: Option<f64>,
    /// Seed of the verifier's deterministic sampler
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Points per registry entry (overrides each entry's default)
    #[arg(long, global = true)]
    points: Option<usize>,
    /// Output format
    #[arg(long, global = true, value_enum)]
    output: Option<Output>,
    /// Config file with key = value lines (tail_tol, pole_guard, seed, output)
    #[arg(long, global = true)]
    config: Option<String>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Output {
    Json,
    Csv,
    Pretty,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a library function at a point: key=value parameters
    Eval {
        /// Function name (see `mocktheta list`)
        function: String,
        /// Parameters, e.g. m=1 s=0 tau=1.2i z1=0.2 z2=-0.3+0.1i t=0
        params: Vec<String>,
    },
    /// First N q-expansion coefficients with exact rational exponents
    Qexp {
        function: String,
        params: Vec<String>,
        #[arg(long, default_value_t = 8)]
        order: usize,
    },
    /// Closed-form modular S-matrix over the reduction's index set
    Smatrix {
        /// n2 or n3
        family: String,
        #[arg(long = "level-den", short = 'M')]
        level_den: i64,
        #[arg(long)]
        m: i64,
        #[arg(long, default_value_t = 0)]
        s: i64,
        /// Sector of the source characters: ns or r
        #[arg(long, default_value = "ns")]
        from: String,
        /// Sector of the target characters: ns or r
        #[arg(long, default_value = "ns")]
        to: String,
    },
    /// Characteristic numbers (c, h, spin) over the reduction's index set
    Charnums {
        family: String,
        #[arg(long = "level-den", short = 'M')]
        level_den: i64,
        #[arg(long)]
        m: i64,
        #[arg(long, default_value_t = 0)]
        s: i64,
        #[arg(long, default_value = "ns")]
        sector: String,
    },
    /// Run the identity verification suite
    Verify {
        /// Glob over registry ids, e.g. 'Thm1.12*'
        #[arg(long, default_value = "")]
        filter: String,
        /// Where to write the JSON report
        #[arg(long, default_value = "mocktheta-report.json")]
        report_path: String,
        /// Include wall-clock timings (breaks byte-for-byte determinism)
        #[arg(long)]
        timings: bool,
    },
    /// List evaluable functions and registry entries
    List,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = match Config::resolve(&cli.global) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let code = match run(cli.command, &cfg) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            2
        }
        Err(CliError::Eval(e)) => {
            eprintln!("evaluation error: {e}");
            3
        }
        Err(CliError::Io(e)) => {
            eprintln!("io error: {e}");
            3
        }
    };
    ExitCode::from(code)
}

enum CliError {
    Usage(String),
    Eval(EvalError),
    Io(std::io::Error),
}

impl From<EvalError> for CliError {
    fn from(e: EvalError) -> Self {
        match e {
            EvalError::BadRequest(m) => CliError::Usage(m),
            // precondition surface: domain and parameter constraints are usage errors
            EvalError::UpperHalfPlane => CliError::Usage("Im tau must be strictly positive".into()),
            EvalError::ConstraintViolation(m) => CliError::Usage(m),
            EvalError::NotCoprime { q, p } => CliError::Usage(format!("gcd({q}, {p}) != 1")),
            other => CliError::Eval(other),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

struct Config {
    tr: Truncation,
    seed: u64,
    points: Option<usize>,
    output: Output,
}

impl Config {
    /// Precedence: flags over environment over config file over defaults.
    fn resolve(g: &Global) -> Result<Self, String> {
        let mut file: BTreeMap<String, String> = BTreeMap::new();
        let path = g.config.clone().or_else(|| {
            std::path::Path::new("mocktheta.conf").exists().then(|| "mocktheta.conf".to_string())
        });
        if let Some(p) = path {
            let text = std::fs::read_to_string(&p).map_err(|e| format!("config {p}: {e}"))?;
            for line in text.lines() {
                let line = line.trim();
                if line.is_empty() || line.starts_with('#') {
                    continue;
                }
                let (k, v) = line.split_once('=').ok_or_else(|| format!("config line without '=': {line}"))?;
                file.insert(k.trim().to_string(), v.trim().to_string());
            }
        }
        let pick = |flag: Option<String>, env: &str, key: &str| -> Option<String> {
            flag.or_else(|| std::env::var(env).ok()).or_else(|| file.get(key).cloned())
        };
        let tail_tol = pick(g.tail_tol.map(|v| v.to_string()), "MOCKTHETA_TAIL_TOL", "tail_tol")
            .map(|s| s.parse::<f64>().map_err(|e| format!("tail_tol: {e}")))
            .transpose()?
            .unwrap_or(1e-14);
        let pole_guard = pick(g.pole_guard.map(|v| v.to_string()), "MOCKTHETA_POLE_GUARD", "pole_guard")
            .map(|s| s.parse::<f64>().map_err(|e| format!("pole_guard: {e}")))
            .transpose()?
            .unwrap_or(1e-6);
        let seed = pick(g.seed.map(|v| v.to_string()), "MOCKTHETA_SEED", "seed")
            .map(|s| s.parse::<u64>().map_err(|e| format!("seed: {e}")))
            .transpose()?
            .unwrap_or(7);
        let output = match pick(
            g.output.map(|o| match o {
                Output::Json => "json".to_string(),
                Output::Csv => "csv".to_string(),
                Output::Pretty => "pretty".to_string(),
            }),
            "MOCKTHETA_OUTPUT",
            "output",
        )
        .as_deref()
        {
            Some("json") => Output::Json,
            Some("csv") => Output::Csv,
            Some("pretty") | None => Output::Pretty,
            Some(other) => return Err(format!("unknown output mode {other}")),
        };
        let tr = Truncation::new(tail_tol, 200_000, pole_guard)
            .map_err(|e| format!("invalid truncation policy: {e}"))?;
        Ok(Config { tr, seed, points: g.points, output })
    }
}

// ------------------------------------------------------------ parameters

struct Params(BTreeMap<String, String>);

impl Params {
    fn parse(items: &[String]) -> Result<Self, CliError> {
        let mut map = BTreeMap::new();
        for item in items {
            let (k, v) = item
                .split_once('=')
                .ok_or_else(|| CliError::Usage(format!("parameter without '=': {item}")))?;
            map.insert(k.to_string(), v.to_string());
        }
        Ok(Params(map))
    }

    fn complex(&self, key: &str, default: Option<C64>) -> Result<C64, CliError> {
        match self.0.get(key) {
            Some(s) => parse_complex(s).ok_or_else(|| CliError::Usage(format!("bad complex for {key}: {s}"))),
            None => default.ok_or_else(|| CliError::Usage(format!("missing parameter {key}"))),
        }
    }

    fn int(&self, key: &str, default: Option<i64>) -> Result<i64, CliError> {
        match self.0.get(key) {
            Some(s) => s.parse().map_err(|_| CliError::Usage(format!("bad integer for {key}: {s}"))),
            None => default.ok_or_else(|| CliError::Usage(format!("missing parameter {key}"))),
        }
    }

    fn half(&self, key: &str, default: Option<HalfInt>) -> Result<HalfInt, CliError> {
        match self.0.get(key) {
            Some(s) => parse_half(s).ok_or_else(|| CliError::Usage(format!("bad half-integer for {key}: {s}"))),
            None => default.ok_or_else(|| CliError::Usage(format!("missing parameter {key}"))),
        }
    }

    fn quarter(&self, key: &str) -> Result<QuarterInt, CliError> {
        let s = self.0.get(key).ok_or_else(|| CliError::Usage(format!("missing parameter {key}")))?;
        parse_quarter(s).ok_or_else(|| CliError::Usage(format!("bad quarter-integer for {key}: {s}")))
    }

    fn flag(&self, key: &str) -> bool {
        matches!(self.0.get(key).map(|s| s.as_str()), Some("1") | Some("true") | Some("yes"))
    }

    fn family(&self, tr_big_m: i64) -> Result<FamilyParams, CliError> {
        let fam = self.0.get("family").map(|s| s.as_str()).unwrap_or("A");
        let m = self.int("m", None)?;
        let big_m = self.int("M", Some(tr_big_m))?;
        Ok(match fam {
            "A" | "a" => FamilyParams::new_a(m, self.int("s", Some(0))?, big_m)?,
            "B" | "b" => FamilyParams::new_b(m, big_m)?,
            other => return Err(CliError::Usage(format!("unknown family {other}"))),
        })
    }

    fn sector(&self) -> Result<SectorLabel, CliError> {
        let eps = self.half("eps", Some(HalfInt::ZERO))?;
        let eps_prime = self.half("eps_prime", Some(HalfInt::ZERO))?;
        Ok(SectorLabel::new(eps, eps_prime)?)
    }

    fn modular_point(&self) -> Result<ModularPoint, CliError> {
        let zero = C64::new(0.0, 0.0);
        Ok(ModularPoint::new(
            self.complex("tau", None)?,
            self.complex("z1", Some(zero))?,
            self.complex("z2", Some(zero))?,
            self.complex("t", Some(zero))?,
        )?)
    }
}

/// Complex literals: `1.2`, `-0.3i`, `1.2i`, `0.1+2i`, `1-0.5i`, `i`.
fn parse_complex(s: &str) -> Option<C64> {
    let s = s.trim();
    if let Ok(re) = s.parse::<f64>() {
        return Some(C64::new(re, 0.0));
    }
    if let Some(body) = s.strip_suffix('i') {
        // pure imaginary or a+bi: find the split sign after the mantissa
        let body = body.trim_end();
        if body.is_empty() || body == "+" {
            return Some(C64::new(0.0, 1.0));
        }
        if body == "-" {
            return Some(C64::new(0.0, -1.0));
        }
        if let Ok(im) = body.parse::<f64>() {
            return Some(C64::new(0.0, im));
        }
        // search for the last +/- that is not part of an exponent
        let b = body.as_bytes();
        for i in (1..b.len()).rev() {
            if (b[i] == b'+' || b[i] == b'-') && !matches!(b[i - 1], b'e' | b'E') {
                let re: f64 = body[..i].parse().ok()?;
                let imtext = &body[i..];
                let im: f64 = if imtext == "+" {
                    1.0
                } else if imtext == "-" {
                    -1.0
                } else {
                    imtext.parse().ok()?
                };
                return Some(C64::new(re, im));
            }
        }
        return None;
    }
    None
}

/// Half-integers: `2`, `-1`, `1/2`, `-3/2`, `0.5`.
fn parse_half(s: &str) -> Option<HalfInt> {
    if let Some((n, d)) = s.split_once('/') {
        let n: i64 = n.parse().ok()?;
        let d: i64 = d.parse().ok()?;
        return match d {
            1 => Some(HalfInt::from_int(n)),
            2 => Some(HalfInt::from_twice(n)),
            _ => None,
        };
    }
    if let Ok(n) = s.parse::<i64>() {
        return Some(HalfInt::from_int(n));
    }
    let x: f64 = s.parse().ok()?;
    let t = (2.0 * x).round();
    ((2.0 * x - t).abs() < 1e-12).then(|| HalfInt::from_twice(t as i64))
}

fn parse_quarter(s: &str) -> Option<QuarterInt> {
    if let Some((n, d)) = s.split_once('/') {
        let n: i64 = n.parse().ok()?;
        let d: i64 = d.parse().ok()?;
        return match d {
            1 => Some(QuarterInt::from_int(n)),
            2 => Some(QuarterInt::from_times4(2 * n)),
            4 => Some(QuarterInt::from_times4(n)),
            _ => None,
        };
    }
    if let Ok(n) = s.parse::<i64>() {
        return Some(QuarterInt::from_int(n));
    }
    let x: f64 = s.parse().ok()?;
    let t = (4.0 * x).round();
    ((4.0 * x - t).abs() < 1e-12).then(|| QuarterInt::from_times4(t as i64))
}

// ------------------------------------------------------------ commands

const EVAL_FUNCTIONS: &[&str] = &[
    "theta", "theta_minus", "vartheta", "eta", "gauss_e", "r_a", "r_b", "a_tilde_a", "a_tilde_b",
    "phi1", "phi", "phi_add", "phi_tilde", "g_direct", "g_via_sum", "psi", "affine_char",
    "affine_denom", "n2_char", "n3_char", "n2_denom", "n3_denom",
];

fn run(cmd: Command, cfg: &Config) -> Result<u8, CliError> {
    match cmd {
        Command::Eval { function, params } => cmd_eval(&function, &Params::parse(&params)?, cfg),
        Command::Qexp { function, params, order } => {
            cmd_qexp(&function, &Params::parse(&params)?, order, cfg)
        }
        Command::Smatrix { family, level_den, m, s, from, to } => {
            cmd_smatrix(&family, level_den, m, s, &from, &to, cfg)
        }
        Command::Charnums { family, level_den, m, s, sector } => {
            cmd_charnums(&family, level_den, m, s, &sector, cfg)
        }
        Command::Verify { filter, report_path, timings } => cmd_verify(&filter, &report_path, timings, cfg),
        Command::List => {
            println!("evaluable functions:");
            for f in EVAL_FUNCTIONS {
                println!("  {f}");
            }
            println!("\nregistry entries:");
            for case in mocktheta_core::verifier::registry() {
                println!("  {:24} {}", case.id, case.paper_ref);
            }
            Ok(0)
        }
    }
}

fn cmd_eval(function: &str, p: &Params, cfg: &Config) -> Result<u8, CliError> {
    let tr = &cfg.tr;
    let zero = C64::new(0.0, 0.0);
    let value: C64 = match function {
        "theta" => theta_jm(
            p.half("j", None)?,
            p.int("m", None)?,
            p.complex("tau", None)?,
            p.complex("z", Some(zero))?,
            p.complex("t", Some(zero))?,
            tr,
        )?,
        "theta_minus" => theta_minus_jm(
            p.half("j", None)?,
            p.quarter("m")?,
            p.complex("tau", None)?,
            p.complex("z", Some(zero))?,
            p.complex("t", Some(zero))?,
            tr,
        )?,
        "vartheta" => jacobi_theta_ab(
            p.int("a", None)? as u8,
            p.int("b", None)? as u8,
            p.complex("tau", None)?,
            p.complex("z", Some(zero))?,
            tr,
        )?,
        "eta" => dedekind_eta(p.complex("tau", None)?, tr)?,
        "gauss_e" => C64::new(gauss_e(p.complex("x", None)?.re), 0.0),
        "r_a" => r_a(p.int("j", None)?, p.int("m", None)?, p.complex("tau", None)?, p.complex("v", None)?, tr)?,
        "r_b" => r_b(p.int("j", None)?, p.int("m", None)?, p.complex("tau", None)?, p.complex("v", None)?, tr)?,
        "a_tilde_a" => a_tilde_a(
            p.int("j", None)?,
            p.int("m", None)?,
            p.int("s", Some(0))?,
            p.complex("tau", None)?,
            p.complex("v", None)?,
            tr,
        )?,
        "a_tilde_b" => a_tilde_b(p.int("j", None)?, p.int("m", None)?, p.complex("tau", None)?, p.complex("v", None)?, tr)?,
        "phi1" => phi1(&p.family(1)?, &p.modular_point()?, tr)?,
        "phi" => phi(&p.family(1)?, &p.modular_point()?, tr)?,
        "phi_add" => phi_add(&p.family(1)?, &p.modular_point()?, tr)?,
        "phi_tilde" => phi_tilde(&p.family(1)?, &p.modular_point()?, tr)?,
        "g_direct" | "g_via_sum" => {
            let fp = p.family(1)?;
            let up = UVPoint::new(
                p.complex("tau", None)?,
                p.complex("u", None)?,
                p.complex("v", None)?,
                p.complex("t", Some(zero))?,
            )?;
            if function == "g_direct" {
                g_direct(&fp, &up, tr)?
            } else {
                g_via_sum(&fp, &up, tr)?
            }
        }
        "psi" => mocktheta_core::characters::psi(
            &p.family(3)?,
            p.half("eps", Some(HalfInt::ZERO))?,
            p.half("a", None)?,
            p.half("b", None)?,
            &p.modular_point()?,
            tr,
            p.flag("modified"),
        )?,
        "affine_char" => affine_character(
            &p.family(3)?,
            &p.sector()?,
            &CharacterIndex::new(p.half("j", None)?, p.half("k", None)?),
            &p.modular_point()?,
            tr,
            p.flag("modified"),
        )?,
        "affine_denom" => affine_denominator(&p.family(3)?, &p.sector()?, &p.modular_point()?, tr)?,
        "n2_char" | "n3_char" => {
            let red = if function == "n2_char" { Reduction::N2 } else { Reduction::N3 };
            reduction_character(
                red,
                &p.family(3)?,
                &p.sector()?,
                &CharacterIndex::new(p.half("j", None)?, p.half("k", None)?),
                p.complex("tau", None)?,
                p.complex("z", None)?,
                tr,
                p.flag("modified"),
            )?
        }
        "n2_denom" | "n3_denom" => {
            let red = if function == "n2_denom" { Reduction::N2 } else { Reduction::N3 };
            reduction_denominator(red, &p.sector()?, p.complex("tau", None)?, p.complex("z", None)?, tr)?
        }
        other => return Err(CliError::Usage(format!("unknown function {other} (see `mocktheta list`)"))),
    };
    let bound = 2.0 * cfg.tr.tail_tol;
    match cfg.output {
        Output::Json => println!(
            "{}",
            serde_json::json!({"function": function, "re": value.re, "im": value.im, "error_bound": bound})
        ),
        Output::Csv => println!("function,re,im,error_bound\n{function},{:.15e},{:.15e},{bound:e}", value.re, value.im),
        Output::Pretty => println!(
            "{function} = {:.15e} {} {:.15e} i   (abs error <= {bound:.1e})",
            value.re,
            if value.im < 0.0 { "-" } else { "+" },
            value.im.abs()
        ),
    }
    Ok(0)
}

fn print_expansion(x: &QExpansion, cfg: &Config) {
    match cfg.output {
        Output::Json => {
            let rows: Vec<_> = x
                .terms
                .iter()
                .map(|(e, c)| serde_json::json!({"exponent": format!("{}/{}", e.numer(), e.denom()), "re": c.re, "im": c.im}))
                .collect();
            println!("{}", serde_json::json!({"terms": rows}));
        }
        Output::Csv => {
            println!("exponent,re,im");
            for (e, c) in &x.terms {
                println!("{}/{},{:.15e},{:.15e}", e.numer(), e.denom(), c.re, c.im);
            }
        }
        Output::Pretty => {
            for (e, c) in &x.terms {
                println!("q^({:>7}/{:<3})  {:+.15e} {:+.15e} i", e.numer(), e.denom(), c.re, c.im);
            }
        }
    }
}

fn cmd_qexp(function: &str, p: &Params, order: usize, cfg: &Config) -> Result<u8, CliError> {
    let zero = C64::new(0.0, 0.0);
    let x = match function {
        "eta" => qexp_eta(order),
        "theta" => qexp_theta(
            p.half("j", None)?,
            p.quarter("m")?,
            false,
            p.complex("z", Some(zero))?,
            order,
        )?,
        "theta_minus" => qexp_theta(p.half("j", None)?, p.quarter("m")?, true, p.complex("z", Some(zero))?, order)?,
        "vartheta" => qexp_vartheta(
            p.int("a", None)? as u8,
            p.int("b", None)? as u8,
            p.complex("z", Some(zero))?,
            order,
        )?,
        "phi1" => qexp_phi1(&p.family(1)?, p.complex("z1", None)?, p.complex("z2", None)?, order)?,
        "phi_tilde" | "phi_add" | "r_a" | "r_b" | "a_tilde_a" | "a_tilde_b" | "g_direct" | "g_via_sum" => {
            return Err(CliError::Eval(EvalError::NotExpandable(format!(
                "{function} is real-analytic in tau; it has no q-expansion"
            ))));
        }
        other => return Err(CliError::Usage(format!("no q-expansion for {other}"))),
    };
    print_expansion(&x, cfg);
    Ok(0)
}

fn parse_sector_word(word: &str) -> Result<HalfInt, CliError> {
    match word {
        "ns" | "NS" => Ok(HalfInt::HALF),
        "r" | "R" => Ok(HalfInt::ZERO),
        other => Err(CliError::Usage(format!("sector must be ns or r, got {other}"))),
    }
}

fn cmd_smatrix(family: &str, big_m: i64, m: i64, s: i64, from: &str, to: &str, cfg: &Config) -> Result<u8, CliError> {
    let eps_prime = parse_sector_word(from)?;
    let eps = parse_sector_word(to)?;
    let (red, fp) = match family {
        "n2" | "N2" => (Reduction::N2, FamilyParams::new_a(m, s, big_m)?),
        "n3" | "N3" => (Reduction::N3, FamilyParams::new_b(m, big_m)?),
        other => return Err(CliError::Usage(format!("family must be n2 or n3, got {other}"))),
    };
    let sec = SectorLabel::new(eps, eps_prime)?;
    let (rows, cols) = match red {
        Reduction::N2 => (omega_n2(big_m, eps_prime), omega_n2(big_m, eps)),
        Reduction::N3 => (omega_n3(big_m, eps_prime), omega_n3(big_m, eps)),
    };
    let label = |i: &CharacterIndex| format!("({},{})", i.j, i.k);
    let mut table: Vec<Vec<C64>> = Vec::new();
    for r in &rows {
        table.push(cols.iter().map(|c| reduction_smatrix(red, &fp, &sec, r, c)).collect::<Result<_, _>>()?);
    }
    match cfg.output {
        Output::Json => {
            let body = serde_json::json!({
                "rows": rows.iter().map(&label).collect::<Vec<_>>(),
                "cols": cols.iter().map(&label).collect::<Vec<_>>(),
                "entries": table.iter().map(|r| r.iter().map(|v| serde_json::json!({"re": v.re, "im": v.im})).collect::<Vec<_>>()).collect::<Vec<_>>(),
            });
            println!("{body}");
        }
        Output::Csv => {
            println!("row,col,re,im");
            for (r, row) in rows.iter().zip(&table) {
                for (c, v) in cols.iter().zip(row) {
                    println!("{},{},{:.15e},{:.15e}", label(r), label(c), v.re, v.im);
                }
            }
        }
        Output::Pretty => {
            print!("{:12}", "");
            for c in &cols {
                print!("{:>24}", label(c));
            }
            println!();
            for (r, row) in rows.iter().zip(&table) {
                print!("{:12}", label(r));
                for v in row {
                    print!("{:>24}", format!("{:+.4}{:+.4}i", v.re, v.im));
                }
                println!();
            }
        }
    }
    Ok(0)
}

fn cmd_charnums(family: &str, big_m: i64, m: i64, s: i64, sector: &str, cfg: &Config) -> Result<u8, CliError> {
    let eps_prime = parse_sector_word(sector)?;
    let (red, fp, sec) = match family {
        "n2" | "N2" => (Reduction::N2, FamilyParams::new_a(m, s, big_m)?, sector_of(eps_prime)),
        "n3" | "N3" => (Reduction::N3, FamilyParams::new_b(m, big_m)?, sector_of(eps_prime)),
        other => return Err(CliError::Usage(format!("family must be n2 or n3, got {other}"))),
    };
    let om = match red {
        Reduction::N2 => omega_n2(big_m, eps_prime),
        Reduction::N3 => omega_n3(big_m, eps_prime),
    };
    let mut rows = Vec::new();
    for idx in &om {
        let n = characteristic_numbers(red, &fp, idx, sec)?;
        rows.push((idx, n));
    }
    match cfg.output {
        Output::Json => {
            let body: Vec<_> = rows
                .iter()
                .map(|(i, n)| {
                    serde_json::json!({
                        "j": i.j.to_string(), "k": i.k.to_string(),
                        "c": n.central_charge.to_string(),
                        "h": n.lowest_energy.to_string(),
                        "spin": n.spin.to_string(),
                    })
                })
                .collect();
            println!("{}", serde_json::Value::Array(body));
        }
        Output::Csv => {
            println!("j,k,c,h,spin");
            for (i, n) in &rows {
                println!("{},{},{},{},{}", i.j, i.k, n.central_charge, n.lowest_energy, n.spin);
            }
        }
        Output::Pretty => {
            println!("{:>6} {:>6} {:>10} {:>12} {:>10}", "j", "k", "c", "h", "spin");
            for (i, n) in &rows {
                println!(
                    "{:>6} {:>6} {:>10} {:>12} {:>10}",
                    i.j.to_string(),
                    i.k.to_string(),
                    n.central_charge.to_string(),
                    n.lowest_energy.to_string(),
                    n.spin.to_string()
                );
            }
        }
    }
    Ok(0)
}

fn sector_of(eps_prime: HalfInt) -> ReductionSector {
    if eps_prime == HalfInt::HALF {
        ReductionSector::NeveuSchwarz
    } else {
        ReductionSector::Ramond
    }
}

fn cmd_verify(filter: &str, report_path: &str, timings: bool, cfg: &Config) -> Result<u8, CliError> {
    let report = run_suite_with(filter, cfg.seed, &cfg.tr, timings, cfg.points);
    let json = serde_json::to_string_pretty(&report).expect("report serialization");
    std::fs::write(report_path, &json)?;
    match cfg.output {
        Output::Json => println!("{json}"),
        _ => {
            for e in &report.entries {
                println!(
                    "{} {:26} max rel {:.3e} ({} points)",
                    if e.pass { "PASS" } else { "FAIL" },
                    e.id,
                    e.max_rel_residual,
                    e.points
                );
                if let Some(note) = &e.note {
                    if !e.pass && !note.is_empty() {
                        println!("     {note}");
                    }
                }
            }
            println!(
                "{} of {} entries pass; report written to {report_path}",
                report.entries.iter().filter(|e| e.pass).count(),
                report.entries.len()
            );
        }
    }
    Ok(if report.pass { 0 } else { 1 })
}
