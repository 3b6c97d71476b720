use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;
use serde_json::{json, Value};

use milnorhodge::arrangement::{epoly_v, intersection_data};
use milnorhodge::assembly::{fermat_table, CheckResult};
use milnorhodge::localhodge::{link_hodge_table, local_spectrum, milnor_basis};
use milnorhodge::pointcount::{self, complement_crosscheck, good_primes, with_threads, Extraction};
use milnorhodge::repring::{decode_cyclotomic, encode_characters};
use milnorhodge::{
    assemble_all, check_identities, comb_invariants, local_hodge_table, parse_arrangement, spectrum, weak_comb_data,
    HodgeTable, LineArrangement, OrdinarySing, ReprClass, SurfaceH3Data, WeakCombData,
};

#[derive(Parser)]
#[command(name = "milnorhodge", version, about = "Equivariant Hodge data of line arrangement Milnor fibers")]
struct Cli {
    /// Indented JSON.
    #[arg(long, global = true)]
    pretty: bool,
    /// Worker threads for point counting.
    #[arg(long, global = true, env = "MILNORHODGE_THREADS")]
    threads: Option<usize>,
    /// Seed for the randomized parts of `check`.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum TargetArg {
    Fiber,
    Complement,
}

impl From<TargetArg> for pointcount::Target {
    fn from(t: TargetArg) -> Self {
        match t {
            TargetArg::Fiber => pointcount::Target::Fiber,
            TargetArg::Complement => pointcount::Target::Complement,
        }
    }
}

#[derive(clap::Args)]
struct PrimeArgs {
    /// Comma-separated primes, each 1 mod d.
    #[arg(long, value_delimiter = ',')]
    primes: Option<Vec<u64>>,
    /// Number of primes to pick when --primes is absent (default: degree bound + 3).
    #[arg(long)]
    num_primes: Option<usize>,
    /// Smallest prime considered when picking primes.
    #[arg(long, default_value_t = 7)]
    min_q: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Intersection points, multiplicity census, Betti numbers, E(V).
    Combinatorics {
        #[arg(long)]
        arrangement: PathBuf,
    },
    /// Local Hodge table of an ordinary k-fold point on the degree-d surface.
    LocalHodge {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: usize,
    },
    /// Hodge table of the primitive cohomology of the Fermat surface.
    Fermat {
        #[arg(long)]
        d: usize,
    },
    /// Spectrum from the weak combinatorial data.
    Spectrum {
        #[arg(long)]
        arrangement: PathBuf,
    },
    /// Assembled tables of H^1(F) and H^2(F), given H^3(X).
    H2f {
        #[arg(long)]
        arrangement: PathBuf,
        #[arg(long)]
        h3x: PathBuf,
    },
    /// Twisted point counts and per-twist polynomial fits.
    Count {
        #[arg(long)]
        arrangement: PathBuf,
        #[arg(long, value_enum)]
        target: TargetArg,
        #[command(flatten)]
        primes: PrimeArgs,
    },
    /// Diagonal E-polynomial extracted from the point counts.
    HodgeFromCounts {
        #[arg(long)]
        arrangement: PathBuf,
        #[arg(long, value_enum)]
        target: TargetArg,
        #[command(flatten)]
        primes: PrimeArgs,
    },
    /// Run every consistency check; nonzero exit if any fails.
    Check {
        #[arg(long)]
        arrangement: PathBuf,
        #[arg(long)]
        h3x: Option<PathBuf>,
    },
}

enum Failure {
    Domain(milnorhodge::Error),
    Input { code: &'static str, message: String },
}

impl From<milnorhodge::Error> for Failure {
    fn from(e: milnorhodge::Error) -> Self {
        Failure::Domain(e)
    }
}

impl Failure {
    fn to_json(&self) -> Value {
        let (code, message) = match self {
            Failure::Domain(e) => (e.code(), e.to_string()),
            Failure::Input { code, message } => (*code, message.clone()),
        };
        json!({ "error": { "code": code, "message": message } })
    }
}

type Outcome = Result<(Value, bool), Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::Input { code: "io_error", message: format!("{}: {e}", path.display()) })
}

fn load_arrangement(path: &Path) -> Result<LineArrangement, Failure> {
    Ok(parse_arrangement(&read(path)?)?)
}

fn load_h3(path: &Path) -> Result<SurfaceH3Data, Failure> {
    let table: HodgeTable = serde_json::from_str(&read(path)?)
        .map_err(|e| Failure::Input { code: "invalid_json", message: format!("{}: {e}", path.display()) })?;
    Ok(SurfaceH3Data::new(table)?)
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

fn pick_primes(a: &LineArrangement, target: pointcount::Target, args: &PrimeArgs) -> Result<Vec<u64>, Failure> {
    match &args.primes {
        Some(p) => Ok(p.clone()),
        None => Ok(good_primes(a, args.num_primes.unwrap_or(target.degree_bound() + 3), args.min_q)?),
    }
}

fn extraction_json(ex: &Extraction, with_counts: bool) -> Value {
    let mut v = json!({
        "target": ex.target,
        "degree_bound": ex.degree_bound,
        "certification": ex.certification,
        "primes": ex.primes,
    });
    if with_counts {
        v["counts"] = to_value(&ex.counts);
    }
    v["fits"] = to_value(&ex.fits);
    v
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Combinatorics { arrangement } => {
            let a = load_arrangement(arrangement)?;
            let w = weak_comb_data(&a);
            Ok((
                json!({
                    "arrangement": a.describe(),
                    "d": a.degree(),
                    "points": intersection_data(&a),
                    "weak": w,
                    "invariants": comb_invariants(&w),
                    "e_v": epoly_v(&w),
                }),
                true,
            ))
        }
        Command::LocalHodge { k, d } => {
            let s = OrdinarySing::new(*k, *d)?;
            let sp: Vec<String> = local_spectrum(&s).iter().map(ToString::to_string).collect();
            Ok((
                json!({
                    "k": k,
                    "d": d,
                    "milnor_number": s.milnor_number(),
                    "table": local_hodge_table(&s).table,
                    "spectrum": sp,
                    "basis": milnor_basis(&s),
                    "link": link_hodge_table(&s).degrees,
                }),
                true,
            ))
        }
        Command::Fermat { d } => Ok((to_value(&fermat_table(*d)?), true)),
        Command::Spectrum { arrangement } => {
            let w = weak_comb_data(&load_arrangement(arrangement)?);
            Ok((to_value(&spectrum(&w)?), true))
        }
        Command::H2f { arrangement, h3x } => {
            let w = weak_comb_data(&load_arrangement(arrangement)?);
            let report = assemble_all(&w, Some(&load_h3(h3x)?))?;
            Ok((to_value(&report), true))
        }
        Command::Count { arrangement, target, primes } => {
            let a = load_arrangement(arrangement)?;
            let target = (*target).into();
            let primes = pick_primes(&a, target, primes)?;
            let ex = with_threads(cli.threads, || pointcount::extract(&a, target, &primes))?;
            Ok((extraction_json(&ex, true), true))
        }
        Command::HodgeFromCounts { arrangement, target, primes } => {
            let a = load_arrangement(arrangement)?;
            let target = (*target).into();
            let primes = pick_primes(&a, target, primes)?;
            let ex = with_threads(cli.threads, || pointcount::extract(&a, target, &primes))?;
            let out = match (&ex.epoly, ex.witness) {
                (Some(e), _) => {
                    let mut v = extraction_json(&ex, false);
                    v["result"] = json!("polynomial");
                    v["epoly"] = to_value(e);
                    v
                }
                (None, witness) => json!({ "result": "not_polynomial_count", "witness": witness }),
            };
            Ok((out, true))
        }
        Command::Check { arrangement, h3x } => {
            let a = load_arrangement(arrangement)?;
            let h3 = h3x.as_deref().map(load_h3).transpose()?;
            let checks = with_threads(cli.threads, || run_checks(&a, h3.as_ref(), cli.seed))?;
            let passed = checks.iter().all(|c| c.passed);
            Ok((json!({ "arrangement": a.describe(), "passed": passed, "checks": checks }), passed))
        }
    }
}

fn run_checks(a: &LineArrangement, h3: Option<&SurfaceH3Data>, seed: u64) -> Result<Vec<CheckResult>, Failure> {
    let w = weak_comb_data(a);
    let mut checks = check_identities(&assemble_all(&w, h3)?);

    let primes = good_primes(a, 2, 7)?;
    for row in complement_crosscheck(a, &primes)? {
        checks.push(CheckResult {
            name: format!("complement_count_q{}", row.q),
            passed: row.agrees,
            detail: format!("|N(F_q)| = {}, charpoly(q) = {}", row.count, row.charpoly),
        });
    }
    for &q in &primes {
        let t = pointcount::count_classes(a, q)?;
        let total: u64 = t.class_counts.iter().sum::<u64>() + t.zero_count;
        checks.push(CheckResult {
            name: format!("count_partition_q{q}"),
            passed: total == q.pow(3),
            detail: format!("sum of classes and zeros = {total}, q^3 = {}", q.pow(3)),
        });
    }

    checks.push(seeded_round_trips(&w, seed));
    Ok(checks)
}

/// Character round trips on random classes of `R(mu_d)`.
fn seeded_round_trips(w: &WeakCombData, seed: u64) -> CheckResult {
    let mut rng = StdRng::seed_from_u64(seed);
    let d = w.d;
    let bad = (0..32).find_map(|_| {
        let r = ReprClass::from_mult((0..d).map(|_| rng.random_range(-20..=20)).collect());
        (decode_cyclotomic(&encode_characters(&r)).ok().as_ref() != Some(&r)).then_some(r)
    });
    CheckResult {
        name: "character_round_trip".into(),
        passed: bad.is_none(),
        detail: bad.map_or_else(|| format!("32 random classes, seed {seed}"), |r| format!("fails on {r}")),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (value, ok) = match run(&cli) {
        Ok(v) => v,
        Err(f) => (f.to_json(), false),
    };
    let text = if cli.pretty { serde_json::to_string_pretty(&value) } else { serde_json::to_string(&value) }
        .expect("json values serialize");
    println!("{text}");
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
