//! `wilf`: numerical-semigroup invariants, family constructors, property
//! checks, exhaustive genus-tree verification and grid pictures.
//!
//! Exit codes: 0 success, 1 usage error, 2 invalid semigroup spec,
//! 3 a verification found a mathematical counterexample.

use std::io::Write as _;
use std::path::PathBuf;
use std::str::FromStr;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use numsgps::classify::{self, PropertyId};
use numsgps::explore::{self, Checks, EnumerateOptions};
use numsgps::families;
use numsgps::render;
use numsgps::semigroup::{GeneratorSpec, NumericalSemigroup};

const EXIT_OK: i32 = 0;
const EXIT_USAGE: i32 = 1;
const EXIT_BAD_SPEC: i32 = 2;
const EXIT_COUNTEREXAMPLE: i32 = 3;

#[derive(Parser)]
#[command(
    name = "wilf",
    version,
    about = "Numerical semigroups: invariants, families, classification, exhaustive Wilf-conjecture verification, pictures"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Invariants of one semigroup given by a generator spec
    Info {
        /// Generator spec: "g1,g2,...[@t]", e.g. "5,13@20"
        #[arg(long)]
        gens: String,
        /// Emit the invariant record as one JSON object
        #[arg(long)]
        json: bool,
    },
    /// Evaluate named property predicates on one semigroup
    Check {
        #[arg(long)]
        gens: String,
        /// Comma-separated properties from: S, W, E, D3, D, M, G60, P4, SPIRITO, KW
        #[arg(long)]
        props: String,
        #[arg(long)]
        json: bool,
    },
    /// Construct a member of a named family and print its generator spec
    Family {
        #[command(subcommand)]
        family: FamilyCmd,
    },
    /// Walk the genus tree exhaustively, tallying statistics and checks
    Explore {
        #[arg(long = "max-genus")]
        max_genus: u32,
        /// Comma-separated checks from: wilf, eliahou, froberg,
        /// wilf-zero-form, eliahou-m, identity, all
        #[arg(long)]
        verify: Option<String>,
        /// Worker threads (default: WILF_THREADS env var, then all cores)
        #[arg(long)]
        threads: Option<usize>,
        /// Write per-genus statistics as a JSON array to this file
        #[arg(long = "stats-out")]
        stats_out: Option<PathBuf>,
    },
    /// Count semigroups satisfying Q but not P up to a genus bound
    Compare {
        #[arg(long)]
        p: String,
        #[arg(long)]
        q: String,
        #[arg(long = "max-genus")]
        max_genus: u32,
        #[arg(long)]
        json: bool,
    },
    /// Draw the grid picture of a semigroup as SVG or TikZ
    Draw {
        #[arg(long)]
        gens: String,
        /// Output format
        #[arg(long, value_parser = ["svg", "tikz"])]
        format: String,
        /// Highlight the pseudo-Frobenius numbers
        #[arg(long)]
        pf: bool,
        /// Filled cells only, no numerals
        #[arg(long = "shape-only")]
        shape_only: bool,
        /// Output file (stdout when absent)
        #[arg(short = 'o')]
        out: Option<PathBuf>,
    },
    /// Brute-force per-genus counts, independent of the genus tree
    Oracle {
        #[arg(long = "max-genus")]
        max_genus: u32,
    },
}

#[derive(Args)]
struct JsonFlag {
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum FamilyCmd {
    /// Generalized arithmetic: <m, hm+d, ..., hm+ld>
    Ga {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        h: u64,
        #[arg(long)]
        d: u64,
        #[arg(long)]
        l: u64,
        #[command(flatten)]
        json: JsonFlag,
    },
    /// Maximal embedding dimension: <m>_km
    Med {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        k: u64,
        #[command(flatten)]
        json: JsonFlag,
    },
    /// Dilation D(S,a) of the semigroup given by --gens
    Dilation {
        #[arg(long)]
        gens: String,
        #[arg(long)]
        a: u64,
        #[command(flatten)]
        json: JsonFlag,
    },
    /// S(p) = <mu, gamma, gamma+1>_p*mu for even p
    Sp {
        #[arg(long)]
        p: u64,
        #[command(flatten)]
        json: JsonFlag,
    },
    /// Eliahou-Fromentin <{m} u A>_4m for a B3 set A
    Ef {
        #[arg(long)]
        m: u64,
        /// Comma-separated elements of A, e.g. "22,23"
        #[arg(long)]
        a: String,
        #[command(flatten)]
        json: JsonFlag,
    },
    /// The c <= 3m family with small embedding dimension
    Y {
        #[arg(long)]
        m: u64,
        #[command(flatten)]
        json: JsonFlag,
    },
}

/// A failure with a chosen exit code; message goes to stderr.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn bad_spec(e: impl std::fmt::Display) -> Failure {
        Failure {
            code: EXIT_BAD_SPEC,
            message: e.to_string(),
        }
    }

    fn usage(e: impl std::fmt::Display) -> Failure {
        Failure {
            code: EXIT_USAGE,
            message: e.to_string(),
        }
    }
}

fn parse_semigroup(gens: &str) -> Result<NumericalSemigroup, Failure> {
    let spec = GeneratorSpec::from_str(gens).map_err(Failure::bad_spec)?;
    NumericalSemigroup::from_spec(&spec).map_err(Failure::bad_spec)
}

fn cmd_info(gens: &str, json: bool) -> Result<i32, Failure> {
    let s = parse_semigroup(gens)?;
    let record = s.invariant_record();
    if json {
        println!("{}", serde_json::to_string(&record).expect("record serializes"));
    } else {
        let gens_text: Vec<String> = s
            .minimal_generators()
            .iter()
            .map(u64::to_string)
            .collect();
        println!("minimal generators: {}", gens_text.join(","));
        println!("m     = {}", record.multiplicity);
        println!("F     = {}", record.frobenius);
        println!("c     = {}", record.conductor);
        println!("g     = {}", record.genus);
        println!("L     = {}", record.left_count);
        println!("e     = {}", record.embedding_dimension);
        println!("t     = {}", record.semigroup_type);
        println!("q     = {}", record.depth);
        println!("rho   = {}", record.rho);
        match record.ratio {
            Some(r) => println!("ratio = {r}"),
            None => println!("ratio = -"),
        }
        println!("W     = {}", record.wilf);
        println!("E     = {}", record.eliahou);
    }
    Ok(EXIT_OK)
}

fn cmd_check(gens: &str, props: &str, json: bool) -> Result<i32, Failure> {
    let s = parse_semigroup(gens)?;
    let mut ids = Vec::new();
    for name in props.split(',') {
        let id = PropertyId::from_str(name.trim()).map_err(Failure::usage)?;
        if !ids.contains(&id) {
            ids.push(id);
        }
    }
    if ids.is_empty() {
        return Err(Failure::usage("no properties given"));
    }
    let mut wilf_failed = false;
    let mut results = Vec::new();
    for id in &ids {
        let value = classify::property(&s, *id);
        if *id == PropertyId::Wilf && !value {
            wilf_failed = true;
        }
        results.push((id.name(), value));
    }
    if json {
        let mut map = serde_json::Map::new();
        for (name, value) in &results {
            map.insert(name.to_string(), serde_json::Value::Bool(*value));
        }
        println!("{}", serde_json::Value::Object(map));
    } else {
        for (name, value) in &results {
            println!("{name}: {value}");
        }
    }
    // a false Wilf predicate is a counterexample to the conjecture
    Ok(if wilf_failed { EXIT_COUNTEREXAMPLE } else { EXIT_OK })
}

fn family_output(spec_text: String, json: bool) -> i32 {
    if json {
        println!("{}", serde_json::json!({ "spec": spec_text }));
    } else {
        println!("{spec_text}");
    }
    EXIT_OK
}

fn cmd_family(cmd: FamilyCmd) -> Result<i32, Failure> {
    match cmd {
        FamilyCmd::Ga { m, h, d, l, json } => {
            families::generalized_arithmetic(m, h, d, l).map_err(Failure::bad_spec)?;
            let gens: Vec<String> = std::iter::once(m)
                .chain((1..=l).map(|i| h * m + i * d))
                .map(|g| g.to_string())
                .collect();
            Ok(family_output(gens.join(","), json.json))
        }
        FamilyCmd::Med { m, k, json } => {
            families::med_family(m, k).map_err(Failure::bad_spec)?;
            Ok(family_output(format!("{m}@{}", k * m), json.json))
        }
        FamilyCmd::Dilation { gens, a, json } => {
            let s = parse_semigroup(&gens)?;
            let d = families::dilation(&s, a).map_err(Failure::bad_spec)?;
            Ok(family_output(d.to_spec().to_string(), json.json))
        }
        FamilyCmd::Sp { p, json } => {
            families::delgado_sp(p).map_err(Failure::bad_spec)?;
            let half = p / 2;
            let mu = half * half + 2 * p + 2;
            let gamma = 2 * mu - (half + 4);
            Ok(family_output(
                format!("{mu},{gamma},{}@{}", gamma + 1, p * mu),
                json.json,
            ))
        }
        FamilyCmd::Ef { m, a, json } => {
            let mut elems = Vec::new();
            for tok in a.split(',') {
                let v: u64 = tok
                    .trim()
                    .parse()
                    .map_err(|_| Failure::usage(format!("bad element {tok:?} in --a")))?;
                elems.push(v);
            }
            families::eliahou_fromentin(m, &elems).map_err(Failure::bad_spec)?;
            let mut gens = vec![m.to_string()];
            gens.extend(elems.iter().map(u64::to_string));
            Ok(family_output(format!("{}@{}", gens.join(","), 4 * m), json.json))
        }
        FamilyCmd::Y { m, json } => {
            let s = families::y_family(m).map_err(Failure::bad_spec)?;
            Ok(family_output(s.to_spec().to_string(), json.json))
        }
    }
}

fn parse_checks(verify: Option<&str>) -> Result<Checks, Failure> {
    let mut checks = Checks::none();
    let Some(list) = verify else {
        return Ok(checks);
    };
    for name in list.split(',') {
        match name.trim().to_ascii_lowercase().as_str() {
            "wilf" => checks.wilf = true,
            "eliahou" => checks.eliahou = true,
            "froberg" => checks.froberg = true,
            "wilf-zero-form" | "wilf-zero" => checks.wilf_zero_form = true,
            "eliahou-m" => checks.eliahou_m = true,
            "identity" => checks.identity = true,
            "all" => checks = Checks::all(),
            other => {
                return Err(Failure::usage(format!(
                    "unknown check {other:?}; expected wilf, eliahou, froberg, wilf-zero-form, eliahou-m, identity or all"
                )))
            }
        }
    }
    Ok(checks)
}

fn threads_from_env() -> Option<usize> {
    std::env::var("WILF_THREADS").ok().and_then(|v| v.parse().ok())
}

fn cmd_explore(
    max_genus: u32,
    verify: Option<&str>,
    threads: Option<usize>,
    stats_out: Option<&PathBuf>,
) -> Result<i32, Failure> {
    let checks = parse_checks(verify)?;
    let opts = EnumerateOptions::new(max_genus)
        .with_checks(checks)
        .with_threads(threads.or_else(threads_from_env));
    let stats = explore::enumerate(&opts).map_err(Failure::usage)?;

    println!("genus      N          t          p         eE       minW");
    for (g, row) in stats.per_genus.iter().enumerate() {
        println!(
            "{g:>5} {:>10} {:>10} {:>10} {:>10} {:>10}",
            row.total, row.small_conductor, row.large_embdim, row.eliahou_nonneg, row.min_wilf
        );
    }
    println!(
        "total {} semigroups, min Wilf number {}",
        stats.total(),
        stats.min_wilf()
    );
    for spec in &stats.wilf_violations {
        println!("WILF VIOLATION: {spec}");
    }
    for spec in &stats.eliahou_negatives {
        println!("negative Eliahou number: {spec}");
    }
    for failure in &stats.check_failures {
        println!("CHECK FAILED: {failure}");
    }

    if let Some(path) = stats_out {
        let json = serde_json::to_string_pretty(&stats.per_genus).expect("rows serialize");
        let mut file = std::fs::File::create(path)
            .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))?;
        file.write_all(json.as_bytes())
            .and_then(|()| file.write_all(b"\n"))
            .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))?;
    }

    Ok(if stats.has_findings() {
        EXIT_COUNTEREXAMPLE
    } else {
        EXIT_OK
    })
}

fn cmd_compare(p: &str, q: &str, max_genus: u32, json: bool) -> Result<i32, Failure> {
    let p = PropertyId::from_str(p).map_err(Failure::usage)?;
    let q = PropertyId::from_str(q).map_err(Failure::usage)?;
    let report = classify::quasi_compare(p, q, max_genus).map_err(Failure::usage)?;
    if json {
        println!("{}", serde_json::to_string(&report).expect("report serializes"));
    } else {
        println!(
            "|{{S : g <= {}, S satisfies {} but not {}}}| = {}",
            report.bound, report.q, report.p, report.count
        );
        println!("verdict: {}", report.verdict);
        for w in &report.witnesses {
            println!("witness: {w}");
        }
    }
    Ok(EXIT_OK)
}

fn cmd_draw(
    gens: &str,
    format: &str,
    pf: bool,
    shape_only: bool,
    out: Option<&PathBuf>,
) -> Result<i32, Failure> {
    let s = parse_semigroup(gens)?;
    let grid = render::grid_model(
        &s,
        render::RenderOptions {
            highlight_pf: pf,
            shape_only,
        },
    );
    let palette = render::Palette::default();
    let text = match format {
        "svg" => render::emit_svg(&grid, &palette),
        "tikz" => render::emit_tikz(&grid, &palette),
        other => return Err(Failure::usage(format!("unknown format {other:?}"))),
    };
    match out {
        None => print!("{text}"),
        Some(path) => {
            std::fs::write(path, text)
                .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_oracle(max_genus: u32) -> Result<i32, Failure> {
    let counts = explore::oracle_enumerate(max_genus).map_err(Failure::usage)?;
    for (g, n) in counts.iter().enumerate() {
        println!("{g} {n}");
    }
    Ok(EXIT_OK)
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
    let result = match cli.cmd {
        Cmd::Info { gens, json } => cmd_info(&gens, json),
        Cmd::Check { gens, props, json } => cmd_check(&gens, &props, json),
        Cmd::Family { family } => cmd_family(family),
        Cmd::Explore {
            max_genus,
            verify,
            threads,
            stats_out,
        } => cmd_explore(max_genus, verify.as_deref(), threads, stats_out.as_ref()),
        Cmd::Compare {
            p,
            q,
            max_genus,
            json,
        } => cmd_compare(&p, &q, max_genus, json),
        Cmd::Draw {
            gens,
            format,
            pf,
            shape_only,
            out,
        } => cmd_draw(&gens, &format, pf, shape_only, out.as_ref()),
        Cmd::Oracle { max_genus } => cmd_oracle(max_genus),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

fn main() {
    std::process::exit(run());
}
