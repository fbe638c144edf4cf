//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure, 2 parse error, 3 singular
//! curve, 4 inadequate image level.

use itg_cli::cache;
use itg_cli::groups;
use itg_cli::parse;
use itg_cli::report;
use itg_cli::suites;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use itg_core::ec::WeierstrassCurve;
use itg_core::families::{family_curve, FamilyId};
use itg_core::galois::{predicted_graph, GaloisError};
use itg_core::gl2::generate;
use itg_core::isogeny::isogeny_class;

const EXIT_VERIFY: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_SINGULAR: u8 = 3;
const EXIT_LEVEL: u8 = 4;

#[derive(Parser)]
#[command(
    name = "itg",
    about = "Isogeny classes and isogeny-torsion graphs of elliptic curves over Q",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the Q-isogeny class of a curve and classify its
    /// isogeny-torsion graph.
    Classify(ClassifyArgs),
    /// Predict the isogeny-torsion graph symbolically from mod-p^k Galois
    /// images.
    Predict(PredictArgs),
    /// Run a verification suite.
    Verify {
        /// lemmas | table1 | families | census
        suite: String,
    },
}

#[derive(Args)]
struct ClassifyArgs {
    /// Curve as "[a1,a2,a3,a4,a6]" or "y^2=x^3+A*x+B" (exact rationals)
    #[arg(long, allow_hyphen_values = true)]
    curve: Option<String>,
    /// j-invariant as an exact rational p/q
    #[arg(long, allow_hyphen_values = true)]
    j: Option<String>,
    /// Family id (Z7, Z9, Z10, Z12, SZ5_L3_25, R6_split, X24e_j)
    #[arg(long)]
    family: Option<String>,
    /// Family parameter t as an exact rational
    #[arg(long, allow_hyphen_values = true)]
    t: Option<String>,
    /// Emit the report as JSON
    #[arg(long)]
    json: bool,
    /// Emit the graph in DOT format
    #[arg(long)]
    dot: bool,
    /// Result cache path (also via ITG_CACHE)
    #[arg(long)]
    cache: Option<PathBuf>,
}

#[derive(Args)]
struct PredictArgs {
    /// Image levels, one per image (prime powers)
    #[arg(long = "level")]
    levels: Vec<u32>,
    /// Image generators "a,b,c,d;a,b,c,d;..." paired with --level by position
    #[arg(long = "gens")]
    gens: Vec<String>,
    /// Optional prime per image (inferred from the level when omitted)
    #[arg(long = "prime")]
    primes: Vec<u32>,
    /// Use a named image (H_24e .. H_215, B<N>, D<p>, GL<N>); repeatable
    #[arg(long = "named")]
    named: Vec<String>,
    /// Emit the report as JSON
    #[arg(long)]
    json: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Classify(args) => run_classify(args),
        Command::Predict(args) => run_predict(args),
        Command::Verify { suite } => run_verify(&suite),
    }
}

fn fail(code: u8, msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(code)
}

fn resolve_curve(args: &ClassifyArgs) -> Result<WeierstrassCurve, (u8, String)> {
    let picked = [args.curve.is_some(), args.j.is_some(), args.family.is_some()]
        .iter()
        .filter(|b| **b)
        .count();
    if picked != 1 {
        return Err((
            EXIT_PARSE,
            "provide exactly one of --curve, --j, --family".into(),
        ));
    }
    if let Some(spec) = &args.curve {
        return parse::parse_curve(spec).map_err(|e| {
            if e.to_string().contains("singular") {
                (EXIT_SINGULAR, e.to_string())
            } else {
                (EXIT_PARSE, e.to_string())
            }
        });
    }
    if let Some(j) = &args.j {
        let j = parse::parse_rat(j).map_err(|e| (EXIT_PARSE, e.to_string()))?;
        return Ok(WeierstrassCurve::from_j(&j));
    }
    let family = args.family.as_deref().unwrap();
    let id = FamilyId::parse(family)
        .ok_or_else(|| (EXIT_PARSE, format!("unknown family '{family}'")))?;
    let t = args
        .t
        .as_deref()
        .ok_or_else(|| (EXIT_PARSE, "--family requires --t".to_string()))?;
    let t = parse::parse_rat(t).map_err(|e| (EXIT_PARSE, e.to_string()))?;
    family_curve(id, &t).map_err(|e| (EXIT_SINGULAR, e.to_string()))
}

fn run_classify(args: ClassifyArgs) -> ExitCode {
    let started = Instant::now();
    let e = match resolve_curve(&args) {
        Ok(e) => e,
        Err((code, msg)) => return fail(code, msg),
    };
    let cache_path = args
        .cache
        .clone()
        .or_else(|| std::env::var_os("ITG_CACHE").map(PathBuf::from));
    let key = cache::cache_key(&e);
    let mut cached = false;
    let report = if let Some(hit) = cache_path.as_ref().and_then(|p| cache::lookup(p, &key)) {
        cached = true;
        hit
    } else {
        let cls = match isogeny_class(&e) {
            Ok(c) => c,
            Err(err) => return fail(EXIT_VERIFY, err),
        };
        let report = match report::class_report(&cls) {
            Ok(r) => r,
            Err(err) => return fail(EXIT_VERIFY, err),
        };
        if let Some(p) = &cache_path {
            if let Err(err) = cache::append(p, &key, &report) {
                eprintln!("warning: cache write failed: {err}");
            }
        }
        report
    };
    if args.dot {
        print!("{}", report::class_dot(&report));
    } else if args.json {
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
    } else {
        eprintln!("input: {}", report::curve_summary(&e));
        println!("class of {}", report.input);
        for (i, c) in report.curves.iter().enumerate() {
            println!(
                "  E{}: [{}] j = {} torsion {}",
                i + 1,
                c.a.join(","),
                c.j,
                c.torsion
            );
        }
        for (i, j, l) in &report.edges {
            println!("  E{} -- E{} degree {}", i + 1, j + 1, l);
        }
        println!("shape: {}", report.shape);
        println!(
            "label: {}  configuration {}",
            report.label, report.configuration
        );
        match report.finiteness.kind.as_str() {
            "finite" => println!(
                "finiteness: finite, j in {{{}}}",
                report.finiteness.j_invariants.join(", ")
            ),
            _ => println!("finiteness: infinite family"),
        }
        eprintln!(
            "timing: {} ms{}",
            started.elapsed().as_millis(),
            if cached { " (cache hit)" } else { "" }
        );
    }
    ExitCode::SUCCESS
}

fn run_predict(args: PredictArgs) -> ExitCode {
    if args.levels.len() != args.gens.len() {
        return fail(EXIT_PARSE, "--level and --gens must be paired");
    }
    if args.levels.is_empty() && args.named.is_empty() {
        return fail(EXIT_PARSE, "provide --level/--gens pairs or --named groups");
    }
    let mut images = BTreeMap::new();
    let mut descriptions = Vec::new();
    for name in &args.named {
        let g = match groups::named_group(name) {
            Ok(g) => g,
            Err(e) => return fail(EXIT_PARSE, e),
        };
        let p = match groups::group_prime(&g) {
            Ok(p) => p,
            Err(e) => return fail(EXIT_PARSE, e),
        };
        descriptions.push(report::image_report(p, &g));
        images.insert(p, g);
    }
    for (i, (level, gens)) in args.levels.iter().zip(&args.gens).enumerate() {
        let mats = match parse::parse_gens(*level, gens) {
            Ok(m) => m,
            Err(e) => return fail(EXIT_PARSE, e),
        };
        let g = match generate(*level, &mats) {
            Ok(g) => g,
            Err(e) => return fail(EXIT_PARSE, e),
        };
        let p = match args.primes.get(i) {
            Some(p) => *p,
            None => match groups::group_prime(&g) {
                Ok(p) => p,
                Err(e) => return fail(EXIT_PARSE, e),
            },
        };
        if g.level % p != 0 {
            return fail(
                EXIT_PARSE,
                format!("level {} is not a power of {}", g.level, p),
            );
        }
        descriptions.push(report::image_report(p, &g));
        images.insert(p, g);
    }
    let graph = match predicted_graph(&images) {
        Ok(g) => g,
        Err(GaloisError::LevelInadequate { supplied, required }) => {
            return fail(
                EXIT_LEVEL,
                format!("image level {supplied} inadequate; supply or lift to level {required}"),
            )
        }
        Err(e) => return fail(EXIT_PARSE, e),
    };
    for (p, (minus_id, cc)) in &graph.image_flags {
        if !minus_id {
            eprintln!(
                "note: mod-{p} image lacks -Id; the torsion configuration is \
                 pinned (no quadratic-twist ambiguity)"
            );
        }
        if !cc {
            eprintln!(
                "warning: mod-{p} image has no representative of complex \
                 conjugation; it cannot be the image of a real Galois \
                 representation"
            );
        }
    }
    let report = match report::predict_report(descriptions, &graph) {
        Ok(r) => r,
        Err(e) => return fail(EXIT_VERIFY, e),
    };
    if args.json {
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
    } else {
        println!("predicted label: {}", report.label);
        println!("configuration:   {}", report.configuration);
        println!("shape:           {}", report.shape);
        for (i, v) in report.vertices.iter().enumerate() {
            let kernels: Vec<String> = v
                .kernels
                .iter()
                .map(|(p, g, o)| format!("p={p} <{g}> order {o}"))
                .collect();
            println!(
                "  V{}: torsion {} kernels [{}]",
                i + 1,
                v.torsion,
                kernels.join("; ")
            );
        }
        for (i, j, l) in &report.edges {
            println!("  V{} -- V{} degree {}", i + 1, j + 1, l);
        }
    }
    ExitCode::SUCCESS
}

fn run_verify(suite: &str) -> ExitCode {
    let started = Instant::now();
    let outcome = match suites::run_suite(suite) {
        Ok(o) => o,
        Err(e) => return fail(EXIT_PARSE, e),
    };
    let mut failures = 0;
    for item in &outcome.items {
        let status = if item.pass { "PASS" } else { "FAIL" };
        println!("{status} {}: {}", item.name, item.detail);
        if !item.pass {
            failures += 1;
        }
    }
    println!(
        "suite {suite}: {}/{} passed in {} ms",
        outcome.items.len() - failures,
        outcome.items.len(),
        started.elapsed().as_millis()
    );
    if failures > 0 {
        ExitCode::from(EXIT_VERIFY)
    } else {
        ExitCode::SUCCESS
    }
}
