mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigUint;
use serde_json::json;

use tpe_core::arith::{least_index, LeastIndex, DEFAULT_LEAST_INDEX_CAP};
use tpe_core::checks::{all_criteria, criterion};
use tpe_core::families::{
    classify_nine, derive_w, gen_family, in_family, known_anomalous_match, FamilyParams, FamilySearch, FamilyTag,
    NineTuple,
};
use tpe_core::search::{
    direct_search_resumable, generate_equations, ingest_reader, run_pipeline, DirectBounds, SearchConfig,
};
use tpe_core::solve::{enumerate_solutions, DEFAULT_MAX_BITS};
use tpe_core::triple::build_triple;
use tpe_core::Error;

use render::{Format, Out};

const EXIT_USAGE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_INVARIANT: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "tpe", version, about = "Solutions of a^x + b^y = c^z with gcd(a, b) > 1")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Global {
    /// Enumerate solutions with c^z below 2^MAX_BITS
    #[arg(long, global = true, env = "TPE_MAX_BITS", default_value_t = DEFAULT_MAX_BITS, value_parser = clap::value_parser!(u64).range(1..))]
    max_bits: u64,
    /// Iteration cap for least-index searches
    #[arg(long, global = true, env = "TPE_LEAST_INDEX_CAP", default_value_t = DEFAULT_LEAST_INDEX_CAP, value_parser = clap::value_parser!(u64).range(1..))]
    least_index_cap: u64,
    /// Bit budget for family membership searches [default: twice the largest term]
    #[arg(long, global = true, env = "TPE_FAMILY_BUDGET", value_parser = clap::value_parser!(u64).range(1..))]
    family_budget: Option<u64>,
    /// Worker threads for searches
    #[arg(long, global = true, env = "TPE_WORKERS", value_parser = clap::value_parser!(u64).range(1..))]
    workers: Option<u64>,
    #[arg(long, global = true, env = "TPE_FORMAT", value_enum, default_value_t = Format::Human)]
    format: Format,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List all solutions of a^x + b^y = c^z below the bound
    Enumerate { a: BigUint, b: BigUint, c: BigUint },
    /// Classify a triple with two solutions: family member or anomalous
    Classify {
        #[arg(num_args = 9, value_names = ["A", "B", "C", "X1", "Y1", "Z1", "X2", "Y2", "Z2"])]
        nine: Vec<BigUint>,
    },
    /// Generate or look up members of the infinite families
    #[command(subcommand)]
    Family(FamilyCmd),
    /// Search for triples with two solutions
    #[command(subcommand)]
    Search(SearchCmd),
    /// Least t with M | R^t - S^t (or R^t + S^t with --plus)
    LeastIndex {
        r: u64,
        s: u64,
        m: u64,
        #[arg(long)]
        plus: bool,
    },
    /// Run the acceptance checks
    #[command(alias = "verify-paper")]
    Verify {
        /// Run only this criterion
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=9))]
        criterion: Option<u8>,
    },
}

#[derive(Subcommand, Debug)]
enum FamilyCmd {
    /// Instantiate a family, e.g. `family gen III g=7 j=1 u=2 d=1 k=3`
    Gen {
        family: FamilyTag,
        /// Parameters as key=value
        params: Vec<String>,
    },
    /// Search for a family member corresponding to a nine-tuple
    Check {
        #[arg(num_args = 9, value_names = ["A", "B", "C", "X1", "Y1", "Z1", "X2", "Y2", "Z2"])]
        nine: Vec<BigUint>,
    },
}

#[derive(Subcommand, Debug)]
enum SearchCmd {
    /// Enumerate shape pairs in a box of bases and exponents
    Direct {
        #[arg(long, default_value_t = 20)]
        a1_max: u64,
        #[arg(long, default_value_t = 20)]
        g_max: u64,
        #[arg(long, default_value_t = 200)]
        b1_max: u64,
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..))]
        exp_max: u32,
        /// Save progress here and resume from it
        #[arg(long)]
        checkpoint: Option<PathBuf>,
    },
    /// Pair up shapes from a list of coprime equations A + B = C
    Pipeline {
        /// File with one "A B C" per line; '#' starts a comment
        input: Option<PathBuf>,
        /// Generate equations with rad(ABC) <= this bound instead of reading a file
        #[arg(long, requires = "gen_height")]
        gen_rad: Option<u64>,
        #[arg(long, requires = "gen_rad")]
        gen_height: Option<u64>,
    },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Input(String),
    Invariant(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Invariant(_) => Failure::Invariant(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

type CmdResult = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(n) = cli.global.workers {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n as usize).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    let mut out = Out::new(cli.global.format);
    let result = run(&cli, &mut out);
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            let (code, msg) = match f {
                Failure::Usage(m) => (EXIT_USAGE, m),
                Failure::Input(m) => (EXIT_INPUT, m),
                Failure::Invariant(m) => (EXIT_INVARIANT, m),
            };
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}

fn run(cli: &Cli, out: &mut Out) -> CmdResult {
    let g = &cli.global;
    match &cli.command {
        Command::Enumerate { a, b, c } => enumerate(g, out, a, b, c),
        Command::Classify { nine } => classify(g, out, nine),
        Command::Family(FamilyCmd::Gen { family, params }) => family_gen(out, *family, params),
        Command::Family(FamilyCmd::Check { nine }) => family_check(g, out, nine),
        Command::Search(cmd) => search(g, out, cmd),
        Command::LeastIndex { r, s, m, plus } => {
            let li = least_index(*r, *s, *m, *plus as u8, g.least_index_cap)
                .map_err(|e| Failure::Input(e.to_string()))?;
            let (value, code) = match li {
                LeastIndex::Found(t) => (json!(t), 0),
                LeastIndex::CapExhausted { .. } => (serde_json::Value::Null, EXIT_INPUT),
            };
            let sign = if *plus { "+" } else { "-" };
            out.record(
                &json!({"r": r, "s": s, "m": m, "sign": sign, "least_index": value, "cap": g.least_index_cap}),
                || match li {
                    LeastIndex::Found(t) => format!("least t with {m} | {r}^t {sign} {s}^t: {t}"),
                    LeastIndex::CapExhausted { cap } => format!("no t <= {cap} with {m} | {r}^t {sign} {s}^t"),
                },
            );
            Ok(code)
        }
        Command::Verify { criterion: only } => {
            let reports = match only {
                Some(id) => criterion(*id).into_iter().collect(),
                None => all_criteria(),
            };
            for r in &reports {
                out.record(&serde_json::to_value(r).expect("serializable"), || {
                    let mut s = r.line();
                    for f in r.failures.iter().take(10) {
                        s.push_str(&format!("\n    {f}"));
                    }
                    s
                });
            }
            Ok(if reports.iter().all(|r| r.passed) { 0 } else { EXIT_INVARIANT })
        }
    }
}

fn to_u32(v: &BigUint, what: &str) -> Result<u32, Failure> {
    u32::try_from(v).map_err(|_| Failure::Input(format!("{what} = {v} is too large")))
}

fn nine_tuple(v: &[BigUint]) -> Result<NineTuple, Failure> {
    let e: Vec<u32> = v[3..].iter().map(|x| to_u32(x, "exponent")).collect::<Result<_, _>>()?;
    let sol = |i: usize| tpe_core::solve::Solution { x: e[i], y: e[i + 1], z: e[i + 2] };
    Ok(NineTuple::new(v[0].clone(), v[1].clone(), v[2].clone(), sol(0), sol(3))?)
}

fn enumerate(g: &Global, out: &mut Out, a: &BigUint, b: &BigUint, c: &BigUint) -> CmdResult {
    let t = build_triple(a, b, c)?;
    let set = enumerate_solutions(&t, g.max_bits);
    render::enumeration(out, &t, &set, g.family_budget)?;
    Ok(if set.bound_too_small { EXIT_INPUT } else { 0 })
}

fn classify(g: &Global, out: &mut Out, nine: &[BigUint]) -> CmdResult {
    let n = nine_tuple(nine)?;
    let class = classify_nine(&n, g.family_budget)?;
    render::classification(out, &n, &class, known_anomalous_match(&n));
    Ok(0)
}

fn parse_params(family: FamilyTag, raw: &[String]) -> Result<FamilyParams, Failure> {
    let mut map = std::collections::BTreeMap::new();
    for kv in raw {
        let (k, v) = kv
            .split_once('=')
            .ok_or_else(|| Failure::Usage(format!("parameter {kv:?} is not key=value")))?;
        let v: BigUint = v.parse().map_err(|_| Failure::Usage(format!("parameter {k} = {v:?} is not a number")))?;
        map.insert(k.trim().to_string(), v);
    }
    let allowed: &[&str] = match family {
        FamilyTag::I => &["u", "h"],
        FamilyTag::II => &["t"],
        FamilyTag::III => &["g", "j", "u", "d", "k", "w"],
        FamilyTag::IV => &["g", "i", "j", "u", "d", "k", "w", "h", "v"],
    };
    if let Some(k) = map.keys().find(|k| !allowed.contains(&k.as_str())) {
        return Err(Failure::Usage(format!("family {family} has no parameter {k}")));
    }
    let big = |k: &str| map.get(k).cloned().ok_or_else(|| Failure::Usage(format!("missing parameter {k}")));
    let small = |k: &str| big(k).and_then(|v| to_u32(&v, k));
    Ok(match family {
        FamilyTag::I => FamilyParams::I { u: small("u")?, h: small("h")? },
        FamilyTag::II => FamilyParams::II { t: small("t")? },
        FamilyTag::III => {
            let (gg, d, k) = (big("g")?, big("d")?, small("k")?);
            let w = match map.get("w") {
                Some(w) => to_u32(w, "w")?,
                None => derive_w(FamilyTag::III, &gg, &d, k).unwrap_or(1),
            };
            FamilyParams::III { g: gg, j: small("j")?, u: small("u")?, d, k, w }
        }
        FamilyTag::IV => {
            let (gg, d, k) = (big("g")?, big("d")?, small("k")?);
            let w = match map.get("w") {
                Some(w) => to_u32(w, "w")?,
                None => derive_w(FamilyTag::IV, &gg, &d, k).unwrap_or(1),
            };
            let mut p = FamilyParams::iv(gg, small("i")?, small("j")?, small("u")?, d, k, w);
            if let FamilyParams::IV { h, v, .. } = &mut p {
                if map.contains_key("h") {
                    *h = small("h")?;
                }
                if map.contains_key("v") {
                    *v = small("v")?;
                }
            }
            p
        }
    })
}

fn family_gen(out: &mut Out, family: FamilyTag, raw: &[String]) -> CmdResult {
    let params = parse_params(family, raw)?;
    match gen_family(&params) {
        Ok(n) => {
            render::family_member(out, &params, &n);
            Ok(0)
        }
        Err(violations) => {
            render::violations(out, &params, &violations);
            Ok(EXIT_INPUT)
        }
    }
}

fn family_check(g: &Global, out: &mut Out, nine: &[BigUint]) -> CmdResult {
    let n = nine_tuple(nine)?;
    let class = classify_nine(&n, g.family_budget)?;
    render::classification(out, &n, &class, known_anomalous_match(&n));
    if let FamilySearch::Exhausted { .. } = in_family(&n, g.family_budget) {
        return Ok(EXIT_INPUT);
    }
    Ok(0)
}

fn search(g: &Global, out: &mut Out, cmd: &SearchCmd) -> CmdResult {
    let cfg = SearchConfig { max_bits: g.max_bits, family_budget: g.family_budget };
    match cmd {
        SearchCmd::Direct { a1_max, g_max, b1_max, exp_max, checkpoint } => {
            let bounds = DirectBounds { a1_max: *a1_max, g_max: *g_max, b1_max: *b1_max, exp_max: *exp_max };
            let report = direct_search_resumable(bounds, &cfg, checkpoint.as_deref())
                .map_err(|e| Failure::Input(format!("checkpoint: {e}")))?;
            render::search_results(out, &report.results, &report.stats, &[("units", report.units)]);
            Ok(0)
        }
        SearchCmd::Pipeline { input, gen_rad, gen_height } => {
            let records = match (input, gen_rad, gen_height) {
                (Some(path), None, None) => {
                    let file = std::fs::File::open(path)
                        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
                    let rep = ingest_reader(std::io::BufReader::new(file))
                        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
                    for d in &rep.diagnostics {
                        eprintln!("{}:{}: {}", path.display(), d.line, d.message);
                    }
                    if !rep.diagnostics.is_empty() {
                        eprintln!("{} line(s) rejected", rep.rejected());
                    }
                    rep.records
                }
                (None, Some(r), Some(h)) => {
                    if *r < 6 {
                        return Err(Failure::Usage("--gen-rad must be at least 6".into()));
                    }
                    generate_equations(*r, *h)
                }
                _ => {
                    return Err(Failure::Usage(
                        "pipeline needs either an equation file or --gen-rad with --gen-height".into(),
                    ))
                }
            };
            let report = run_pipeline(&records, &cfg);
            render::search_results(
                out,
                &report.results,
                &report.stats,
                &[("records", report.records), ("shapes53", report.shapes53), ("shapes54", report.shapes54)],
            );
            Ok(0)
        }
    }
}
