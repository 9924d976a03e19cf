use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use latticelab::dynamics::{
    edge_labeling, orbits, pop_down, pop_up, Operator, OrbitDecomposition, ShardVariant,
};
use latticelab::generators::{
    boolean_with_limit, cambrian_with_limit, chain_with_limit, figure_lattice, root_poset,
    tamari_with_limit, weak_order_with_limit, CoxeterElementSpec, CoxeterType, DEFAULT_MAX_SIZE,
    FIGURE_IDS,
};
use latticelab::ideals::order_ideal_lattice_with_limit;
use latticelab::pairing::unique_pairing;
use latticelab::{classify, galois::galois_graph, Error, Lattice, Semidistrim};
use latticelab_cli::document::{DocumentError, LatticeDocument};
use latticelab_cli::dot;
use latticelab_cli::random::{random_lattice, RandomLatticeParams};
use latticelab_cli::report::Classification;
use latticelab_cli::theorems::{Limits, Outcome};
use latticelab_cli::verify::{self, CorpusEntry, VerificationReport};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

/// Writes to stdout, exiting quietly once the reader has gone away.
macro_rules! out {
    ($($t:tt)*) => {{
        use std::io::Write as _;
        if let Err(e) = write!(std::io::stdout(), $($t)*) {
            if e.kind() == std::io::ErrorKind::BrokenPipe {
                std::process::exit(0);
            }
            panic!("writing to stdout: {e}");
        }
    }};
}

macro_rules! outln {
    ($($t:tt)*) => {{
        out!($($t)*);
        out!("\n");
    }};
}

#[derive(Parser)]
#[command(
    name = "latticelab",
    version,
    about = "Finite lattice classification and dynamics"
)]
struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    /// Largest lattice to generate or check.
    #[arg(long, global = true)]
    max_size: Option<usize>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Cap on enumerations (pairings, independent sets, tight pairs).
    #[arg(long, global = true, default_value_t = 100_000)]
    cap: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a lattice document for a generated family member.
    Gen(GenArgs),
    /// Print every classification predicate.
    Classify {
        /// Document path, `-` for stdin, or a figure id.
        input: String,
    },
    Dynamics {
        #[command(subcommand)]
        op: DynamicsOp,
    },
    Export {
        #[arg(long, value_enum)]
        format: ExportFormat,
        input: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the theorem checks and/or the enumerative tables.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Chain,
    Boolean,
    WeakOrder,
    Tamari,
    Cambrian,
    RootIdeals,
    Figure,
    Random,
}

#[derive(Clone, Copy, ValueEnum)]
enum TypeArg {
    A,
    B,
    I2,
}

impl From<TypeArg> for CoxeterType {
    fn from(t: TypeArg) -> CoxeterType {
        match t {
            TypeArg::A => CoxeterType::A,
            TypeArg::B => CoxeterType::B,
            TypeArg::I2 => CoxeterType::I2,
        }
    }
}

#[derive(Args)]
struct GenArgs {
    #[arg(value_enum)]
    family: Family,
    #[arg(long = "type", value_enum, default_value = "a")]
    ty: TypeArg,
    /// Rank for types A and B.
    #[arg(long)]
    rank: Option<usize>,
    /// `m` for type I2.
    #[arg(long)]
    m: Option<usize>,
    /// Tamari parameter, or the size of a random lattice.
    #[arg(long)]
    n: Option<usize>,
    /// Chain length or Boolean rank.
    #[arg(long)]
    k: Option<usize>,
    /// Figure id.
    #[arg(long)]
    id: Option<String>,
    /// `linear`, `bipartite`, or a comma-separated word of 1-based generators.
    #[arg(long, default_value = "linear")]
    coxeter: String,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum DynamicsOp {
    /// Orbits of rowmotion.
    RowOrbits {
        input: String,
        /// Use the meet-semidistributive rowmotion, which need not be invertible.
        #[arg(long)]
        meet_sd: bool,
    },
    /// Pop-stack sorting on every element.
    Pop {
        input: String,
        /// Dual pop-stack sorting instead.
        #[arg(long)]
        up: bool,
    },
    PopPolynomial {
        input: String,
    },
    PoppingPairs {
        input: String,
    },
    /// Shard sets and the core label preorder.
    Shards {
        input: String,
        #[arg(long, value_enum, default_value = "pop")]
        variant: ShardArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ShardArg {
    Pop,
    Row,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportFormat {
    DotHasse,
    DotGalois,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Theorems,
    Tables,
    All,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_enum, default_value = "all")]
    suite: Suite,
    /// Restrict the theorem suite to these documents or figure ids.
    inputs: Vec<String>,
    /// Number of random semidistrim lattices in the corpus.
    #[arg(long, default_value_t = verify::DEFAULT_RANDOM_COUNT)]
    random: usize,
    /// Also check the rank-7 weak order row (by permutations).
    #[arg(long)]
    a7: bool,
    /// Include per-lattice wall times (output is then not reproducible).
    #[arg(long)]
    timings: bool,
    /// Print every record, not just failures and per-check totals.
    #[arg(long)]
    verbose: bool,
}

enum Failure {
    Usage(String),
    Lattice(Error),
    Checks,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Lattice(e)
    }
}

impl From<DocumentError> for Failure {
    fn from(e: DocumentError) -> Failure {
        match e {
            DocumentError::Lattice(e) => Failure::Lattice(e),
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::NotALattice(..) => 3,
        Error::NotSemidistrim => 4,
        Error::NotUniquelyPaired(_) | Error::NotPaired => 5,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Lattice(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Gen(args) => gen(cli, args),
        Command::Classify { input } => {
            let (_, l) = load(input)?;
            let c = Classification::new(&l, &classify(&l));
            if cli.json {
                print_json(&c);
            } else {
                out!("{}", c.to_text());
            }
            Ok(())
        }
        Command::Dynamics { op } => dynamics(cli, op),
        Command::Export { format, input, out } => {
            let (_, l) = load(input)?;
            let text = match format {
                ExportFormat::DotHasse => dot::hasse(&l, edge_labeling(&l).ok().as_ref()),
                ExportFormat::DotGalois => {
                    let kappa = unique_pairing(&l)?;
                    dot::galois(&l, &galois_graph(&l, &kappa))
                }
            };
            write_out(out.as_deref(), &text)
        }
        Command::Verify(args) => verify_cmd(cli, args),
    }
}

fn print_json<T: serde::Serialize>(v: &T) {
    outln!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn write_out(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => {
            std::fs::write(p, text).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))
        }
        None => {
            out!("{text}");
            Ok(())
        }
    }
}

/// A path, `-` for stdin, or a figure id.
fn load(input: &str) -> Result<(String, Lattice), Failure> {
    let text = if input == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Usage(format!("stdin: {e}")))?;
        s
    } else if Path::new(input).exists() {
        std::fs::read_to_string(input).map_err(|e| Failure::Usage(format!("{input}: {e}")))?
    } else if FIGURE_IDS.contains(&input) {
        return Ok((input.to_string(), figure_lattice(input)?));
    } else {
        return Err(Failure::Usage(format!(
            "{input}: no such file or figure id"
        )));
    };
    let doc = LatticeDocument::from_json(&text)?;
    let name = doc.name.clone().unwrap_or_else(|| input.to_string());
    Ok((name, doc.to_lattice()?))
}

fn need(v: Option<usize>, flag: &str) -> Result<usize, Failure> {
    v.ok_or_else(|| Failure::Usage(format!("--{flag} is required for this family")))
}

fn coxeter_spec(ty: CoxeterType, param: usize, word: &str) -> Result<CoxeterElementSpec, Failure> {
    Ok(match word {
        "linear" => CoxeterElementSpec::linear(ty, param),
        "bipartite" => CoxeterElementSpec::bipartite(ty, param),
        w => {
            let word = w
                .split(',')
                .map(|s| s.trim().parse::<usize>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| Failure::Usage(format!("bad Coxeter word {w:?}")))?;
            CoxeterElementSpec::custom(ty, param, word)
                .map_err(|e| Failure::Usage(e.to_string()))?
        }
    })
}

fn gen(cli: &Cli, a: &GenArgs) -> Result<(), Failure> {
    let limit = cli.max_size.unwrap_or(DEFAULT_MAX_SIZE);
    let ty: CoxeterType = a.ty.into();
    let param = || match ty {
        CoxeterType::I2 => need(a.m, "m"),
        _ => need(a.rank, "rank"),
    };
    let (name, l) = match a.family {
        Family::Chain => {
            let k = need(a.k, "k")?;
            (format!("chain({k})"), chain_with_limit(k, limit)?)
        }
        Family::Boolean => {
            let k = need(a.k, "k")?;
            (format!("boolean({k})"), boolean_with_limit(k, limit)?)
        }
        Family::WeakOrder => {
            let p = param()?;
            (
                format!("weak({ty:?},{p})"),
                weak_order_with_limit(ty, p, limit)?,
            )
        }
        Family::Tamari => {
            let n = need(a.n, "n")?;
            (format!("tamari({n})"), tamari_with_limit(n, limit)?)
        }
        Family::Cambrian => {
            let p = param()?;
            let spec = coxeter_spec(ty, p, &a.coxeter)?;
            (
                format!("cambrian({ty:?},{p},{})", a.coxeter),
                cambrian_with_limit(&spec, limit)?,
            )
        }
        Family::RootIdeals => {
            let p = need(a.rank, "rank")?;
            let (poset, _) = root_poset(ty, p)?;
            (
                format!("root_ideals({ty:?},{p})"),
                order_ideal_lattice_with_limit(&poset, limit)?.lattice,
            )
        }
        Family::Figure => {
            let id =
                a.id.as_deref()
                    .ok_or_else(|| Failure::Usage("--id is required".into()))?;
            (
                id.to_string(),
                figure_lattice(id).map_err(|e| Failure::Usage(e.to_string()))?,
            )
        }
        Family::Random => {
            let n = need(a.n, "n")?;
            let params = RandomLatticeParams {
                size: n,
                max_height: (n / 2).max(1),
                edge_probability: 0.35,
            };
            let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
            let l = random_lattice(&mut rng, params, 10_000)
                .ok_or_else(|| Failure::Usage("no lattice drawn; try another seed".into()))?;
            (format!("random({n},{})", cli.seed), l)
        }
    };
    let text = LatticeDocument::from_lattice(Some(&name), &l).to_json() + "\n";
    write_out(a.out.as_deref(), &text)
}

fn names(l: &Lattice, xs: impl IntoIterator<Item = usize>) -> Vec<String> {
    xs.into_iter().map(|x| l.name(x).to_string()).collect()
}

fn orbit_json(l: &Lattice, o: &OrbitDecomposition) -> serde_json::Value {
    match o {
        OrbitDecomposition::Cycles(cs) => json!({
            "bijective": true,
            "orbits": cs.iter().map(|c| names(l, c.iter().copied())).collect::<Vec<_>>(),
        }),
        OrbitDecomposition::Functional {
            image_size,
            preimage_histogram,
            cycles,
        } => json!({
            "bijective": false,
            "image_size": image_size,
            "preimage_histogram": preimage_histogram,
            "cycles": cycles.iter().map(|c| names(l, c.iter().copied())).collect::<Vec<_>>(),
        }),
    }
}

fn orbit_text(l: &Lattice, o: &OrbitDecomposition) -> String {
    let cycle = |c: &Vec<usize>| names(l, c.iter().copied()).join(" ");
    match o {
        OrbitDecomposition::Cycles(cs) => {
            let plural = if cs.len() == 1 { "" } else { "s" };
            let mut s = format!("{} orbit{plural}\n", cs.len());
            for c in cs {
                s += &format!("length {}: {}\n", c.len(), cycle(c));
            }
            s
        }
        OrbitDecomposition::Functional {
            image_size,
            preimage_histogram,
            cycles,
        } => {
            let mut s = format!("not bijective; image size {image_size}\n");
            s += &format!("preimage histogram: {preimage_histogram:?}\n");
            for c in cycles {
                s += &format!("cycle of length {}: {}\n", c.len(), cycle(c));
            }
            s
        }
    }
}

fn dynamics(cli: &Cli, op: &DynamicsOp) -> Result<(), Failure> {
    match op {
        DynamicsOp::RowOrbits { input, meet_sd } => {
            let (_, l) = load(input)?;
            let o = orbits(
                &l,
                if *meet_sd {
                    Operator::RowMeetSd
                } else {
                    Operator::Row
                },
            )?;
            if cli.json {
                print_json(&orbit_json(&l, &o));
            } else {
                out!("{}", orbit_text(&l, &o));
            }
        }
        DynamicsOp::Pop { input, up } => {
            let (_, l) = load(input)?;
            let f: Vec<usize> = (0..l.len())
                .map(|x| if *up { pop_up(&l, x) } else { pop_down(&l, x) })
                .collect();
            let o = OrbitDecomposition::of_map(&f);
            if cli.json {
                let map: Vec<[String; 2]> = f
                    .iter()
                    .enumerate()
                    .map(|(x, &y)| [l.name(x).into(), l.name(y).into()])
                    .collect();
                print_json(&json!({ "map": map, "orbits": orbit_json(&l, &o) }));
            } else {
                for (x, &y) in f.iter().enumerate() {
                    outln!("{} -> {}", l.name(x), l.name(y));
                }
                out!("{}", orbit_text(&l, &o));
            }
        }
        DynamicsOp::PopPolynomial { input } => {
            let (_, l) = load(input)?;
            let p = Semidistrim::new(&l)?.pop_polynomial()?;
            if cli.json {
                print_json(&json!({
                    "coefficients": p.dense(),
                    "polynomial": p.to_string(),
                    "at_one": p.at_one(),
                }));
            } else {
                outln!("{p}");
                let coeffs: Vec<String> = p.dense().iter().map(u64::to_string).collect();
                outln!("coefficients (ascending): {}", coeffs.join(" "));
                outln!("Pop(1) = {}", p.at_one());
            }
        }
        DynamicsOp::PoppingPairs { input } => {
            let (_, l) = load(input)?;
            let pairs = Semidistrim::new(&l)?.popping_pairs()?;
            let named: Vec<[String; 2]> = pairs
                .iter()
                .map(|&(x, y)| [l.name(x).into(), l.name(y).into()])
                .collect();
            if cli.json {
                print_json(&json!({ "count": pairs.len(), "pairs": named }));
            } else {
                outln!("{} popping pairs", pairs.len());
                for [x, y] in named {
                    outln!("({x}, {y})");
                }
            }
        }
        DynamicsOp::Shards { input, variant } => {
            let (_, l) = load(input)?;
            let s = Semidistrim::new(&l)?;
            let v = match variant {
                ShardArg::Pop => ShardVariant::Pop,
                ShardArg::Row => ShardVariant::Row,
            };
            let r = s.core_label_preorder(v);
            let js = s.pairing.joins();
            let shards: Vec<Vec<String>> = r
                .shards
                .iter()
                .map(|b| names(&l, b.iter().map(|a| js[a])))
                .collect();
            if cli.json {
                print_json(&json!({
                    "shards": (0..l.len()).map(|x| json!({"element": l.name(x), "shard": shards[x]})).collect::<Vec<_>>(),
                    "classes": r.classes.iter().map(|c| names(&l, c.iter().copied())).collect::<Vec<_>>(),
                    "antisymmetric": r.antisymmetric,
                    "meet_semilattice": r.meet_semilattice,
                }));
            } else {
                for (x, sh) in shards.iter().enumerate() {
                    outln!("{}: {{{}}}", l.name(x), sh.join(", "));
                }
                outln!("classes: {}", r.classes.len());
                outln!("antisymmetric: {}", r.antisymmetric);
                outln!("meet_semilattice: {}", r.meet_semilattice);
            }
        }
    }
    Ok(())
}

fn verify_cmd(cli: &Cli, a: &VerifyArgs) -> Result<(), Failure> {
    let mut report = VerificationReport {
        seed: cli.seed,
        ..Default::default()
    };
    if a.suite != Suite::Tables {
        let max = cli.max_size.unwrap_or(verify::DEFAULT_THEOREM_MAX_SIZE);
        let corpus: Vec<CorpusEntry> = if a.inputs.is_empty() {
            let mut c = verify::family_corpus(max);
            c.extend(verify::random_corpus(cli.seed, a.random));
            c
        } else {
            a.inputs
                .iter()
                .map(|i| load(i).map(|(id, lattice)| CorpusEntry { id, lattice }))
                .collect::<Result<_, _>>()?
        };
        let limits = Limits {
            cap: cli.cap,
            ..Limits::default()
        };
        report.lattices = corpus.len();
        report.records = verify::run_theorems(&corpus, limits, a.timings);
        if a.inputs.is_empty() {
            report.records.extend(verify::run_products(a.timings));
        }
    }
    if a.suite != Suite::Theorems {
        let max = cli.max_size.unwrap_or(verify::DEFAULT_TABLE_MAX_SIZE);
        report.tables = verify::run_tables(max, a.a7);
    }
    if cli.json {
        print_json(&report);
    } else {
        out!("{}", report_text(&report, a.verbose));
    }
    if report.any_failed() {
        Err(Failure::Checks)
    } else {
        Ok(())
    }
}

fn report_text(r: &VerificationReport, verbose: bool) -> String {
    let mut s = String::new();
    let mut per_check: std::collections::BTreeMap<&str, [usize; 3]> = Default::default();
    for rec in &r.records {
        let slot = per_check.entry(rec.check).or_default();
        let (i, line) = match &rec.outcome {
            Outcome::Pass => (0, format!("PASS {} {}", rec.lattice, rec.check)),
            Outcome::Fail(w) => (1, format!("FAIL {} {}: {w}", rec.lattice, rec.check)),
            Outcome::Skip(why) => (2, format!("SKIP {} {} ({why})", rec.lattice, rec.check)),
        };
        slot[i] += 1;
        if verbose || i == 1 || (i == 2 && r.lattices <= 10) {
            s += &line;
            if let Some(ms) = rec.millis {
                s += &format!(" [{ms:.1} ms]");
            }
            s.push('\n');
        }
    }
    if !per_check.is_empty() {
        s += &format!(
            "theorem checks over {} lattices (seed {}):\n",
            r.lattices, r.seed
        );
        for (id, [p, f, k]) in &per_check {
            s += &format!("  {id}: {p} passed, {f} failed, {k} skipped\n");
        }
    }
    if !r.tables.is_empty() {
        s += "tables:\n";
    }
    for row in &r.tables {
        let status = match (row.pass, &row.computed) {
            (true, _) => "PASS",
            (false, None)
                if row
                    .note
                    .as_deref()
                    .is_some_and(|n| n.starts_with("skipped")) =>
            {
                "SKIP"
            }
            _ => "FAIL",
        };
        s += &format!(
            "  {status} {}: expected {} (Pop(1) = {}), computed {}",
            row.row,
            row.expected,
            row.expected_at_one,
            row.computed.as_deref().unwrap_or("-")
        );
        if let Some(n) = &row.note {
            s += &format!(" [{n}]");
        }
        s.push('\n');
    }
    let t = r.tally();
    s += &format!(
        "summary: {} passed, {} failed, {} skipped\n",
        t.passed, t.failed, t.skipped
    );
    s
}
