mod input;
mod output;

use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use stripless::bijection::{stripless_to_syt, syt_to_stripless};
use stripless::klyachko::{gamma_klyachko, gamma_stripless, klyachko_class, stripless_class};
use stripless::mondrian::{
    bold_strips, gap_table, refill, restrict_shift, summed_m_class, unrefill, GapVector, SplitSequence,
};
use stripless::schubert::berget_fink_class;
use stripless::tableau::has_pair_strip;
use stripless::verify::{run_suite, Suite};
use stripless::{GrassmannianContext, Partition, SchubertClass};

use input::{parse_partition, parse_range, parse_tableau};

#[derive(Parser)]
#[command(name = "stripless", version, about = "Schubert expansions of torus orbit closures in Gr(r,n)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print one coefficient of the orbit class
    Gamma {
        #[arg(short)]
        r: usize,
        #[arg(short)]
        n: usize,
        /// Partition such as 2,1 (0 for the empty partition)
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
        #[arg(long, value_enum, default_value_t = Formula::Klyachko)]
        formula: Formula,
        /// Compute with every formula and fail if they disagree
        #[arg(long)]
        check: bool,
    },
    /// Print the whole orbit class
    OrbitClass {
        #[arg(short)]
        r: usize,
        #[arg(short)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long, value_enum, default_value_t = Formula::BergetFink)]
        formula: Formula,
    },
    /// Run verification sweeps
    Verify {
        /// Comma-separated suites, or `all`
        #[arg(long, default_value = "all")]
        suite: String,
        /// Range such as 2..4
        #[arg(short, value_parser = parse_range, default_value = "2..3")]
        r: RangeInclusive<usize>,
        #[arg(short, value_parser = parse_range, default_value = "4..7")]
        n: RangeInclusive<usize>,
    },
    /// Map between descent-counted SYT and 1-strip-less SSYT
    Bijection {
        #[arg(long, value_enum)]
        direction: Direction,
        #[arg(long)]
        file: PathBuf,
        #[arg(short)]
        r: usize,
        #[arg(short)]
        n: usize,
    },
    /// Refill a tableau of one split type into the refined type, or back
    Refill {
        #[arg(long, value_enum, default_value_t = Direction::Forward)]
        direction: Direction,
        #[arg(long)]
        file: PathBuf,
        /// Full gap vector 1,a_1,...,n
        #[arg(long, value_delimiter = ',', required = true)]
        gap: Vec<usize>,
        /// Split sequence 0,s_1,...,r
        #[arg(long, value_delimiter = ',', required = true)]
        split: Vec<usize>,
        /// Also list the strips of the refilled tableau
        #[arg(long)]
        strips: bool,
    },
    /// Tabulate lambda, its complement, the gap vector and the shifted weights
    Gaps {
        #[arg(short)]
        r: usize,
        #[arg(short)]
        n: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Formula {
    Klyachko,
    BergetFink,
    Stripless,
    MondrianSum,
}

impl Formula {
    const ALL: [Formula; 4] = [Formula::Klyachko, Formula::BergetFink, Formula::Stripless, Formula::MondrianSum];

    fn tag(self) -> &'static str {
        match self {
            Formula::Klyachko => "klyachko",
            Formula::BergetFink => "berget-fink",
            Formula::Stripless => "stripless",
            Formula::MondrianSum => "mondrian-sum",
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Ascii,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Direction {
    Forward,
    Backward,
}

/// Exit code 2 for bad input, 1 for failed checks and preconditions.
struct Failure {
    code: u8,
    error: anyhow::Error,
}

fn usage(error: impl Into<anyhow::Error>) -> Failure {
    Failure { code: 2, error: error.into() }
}

fn failed(error: impl Into<anyhow::Error>) -> Failure {
    Failure { code: 1, error: error.into() }
}

type Outcome = Result<(), Failure>;

fn context(r: usize, n: usize) -> Result<GrassmannianContext, Failure> {
    GrassmannianContext::new(r, n).map_err(usage)
}

fn orbit_class(ctx: GrassmannianContext, formula: Formula) -> SchubertClass {
    match formula {
        Formula::Klyachko => klyachko_class(ctx),
        Formula::BergetFink => berget_fink_class(ctx),
        Formula::Stripless => stripless_class(ctx),
        Formula::MondrianSum => {
            let (class, _) = restrict_shift(&summed_m_class(ctx), ctx.r() - 1).expect("shift fits");
            class
        }
    }
}

fn gamma(ctx: &GrassmannianContext, mu: &Partition, formula: Formula) -> stripless::Result<BigInt> {
    match formula {
        Formula::Klyachko => gamma_klyachko(mu, ctx),
        Formula::Stripless => gamma_stripless(mu, ctx),
        Formula::BergetFink | Formula::MondrianSum => {
            ctx.check_fits(mu)?;
            Ok(orbit_class(*ctx, formula).coefficient(mu))
        }
    }
}

fn cmd_gamma(r: usize, n: usize, mu: Partition, formula: Formula, check: bool) -> Outcome {
    let ctx = context(r, n)?;
    let value = gamma(&ctx, &mu, formula).map_err(usage)?;
    if check {
        for other in Formula::ALL {
            let v = gamma(&ctx, &mu, other).map_err(usage)?;
            if v != value {
                return Err(failed(anyhow!(
                    "{} gives {value} but {} gives {v}",
                    formula.tag(),
                    other.tag()
                )));
            }
        }
    }
    println!("{value}");
    Ok(())
}

fn cmd_orbit_class(r: usize, n: usize, format: Format, formula: Formula) -> Outcome {
    let ctx = context(r, n)?;
    let class = orbit_class(ctx, formula);
    let degree = ctx.orbit_degree();
    let text = match format {
        Format::Json => output::json(&class, formula.tag(), degree),
        Format::Csv => output::csv(&class),
        Format::Ascii => output::ascii(&class, formula.tag(), degree),
    };
    print!("{text}");
    Ok(())
}

fn thread_pool() -> Result<rayon::ThreadPool, Failure> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var("STRIPLESS_THREADS") {
        let threads: usize = v
            .parse()
            .ok()
            .filter(|&t| t > 0)
            .ok_or_else(|| usage(anyhow!("STRIPLESS_THREADS must be a positive integer, got `{v}`")))?;
        builder = builder.num_threads(threads);
    }
    builder.build().map_err(failed)
}

fn cmd_verify(suites: &str, r: RangeInclusive<usize>, n: RangeInclusive<usize>) -> Outcome {
    let selected: Vec<Suite> = if suites == "all" {
        Suite::ALL.to_vec()
    } else {
        suites
            .split(',')
            .map(|s| s.trim().parse::<Suite>())
            .collect::<Result<_, _>>()
            .map_err(|e| usage(anyhow!(e)))?
    };
    let pool = thread_pool()?;
    let mut all_passed = true;
    for suite in selected {
        let report = pool.install(|| run_suite(suite, r.clone(), n.clone()));
        match &report.counterexample {
            None => println!("PASS {suite} ({} checks)", report.checks),
            Some(why) => {
                all_passed = false;
                println!("FAIL {suite} ({} checks): {why}", report.checks);
            }
        }
        if suite == Suite::Bijection {
            println!("  r  n  mu  syt  stripless");
            for row in &report.table {
                println!("  {}  {}  {}  {}  {}", row.r, row.n, row.mu, row.syt, row.stripless);
            }
        }
    }
    if all_passed {
        Ok(())
    } else {
        Err(failed(anyhow!("verification failed")))
    }
}

fn read_tableau(path: &PathBuf) -> Result<stripless::Tableau, Failure> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))
        .map_err(usage)?;
    parse_tableau(&text)
        .with_context(|| format!("cannot parse {}", path.display()))
        .map_err(usage)
}

fn cmd_bijection(direction: Direction, file: &PathBuf, r: usize, n: usize) -> Outcome {
    let ctx = context(r, n)?;
    let t = read_tableau(file)?;
    let out = match direction {
        Direction::Forward => syt_to_stripless(&t, &ctx),
        Direction::Backward => stripless_to_syt(&t, &ctx),
    }
    .map_err(failed)?;
    print!("{}", out.to_grid());
    Ok(())
}

fn cmd_refill(direction: Direction, file: &PathBuf, gap: Vec<usize>, split: Vec<usize>, strips: bool) -> Outcome {
    let g = GapVector::new(gap).map_err(usage)?;
    let s = SplitSequence::new(split, g.r()).map_err(usage)?;
    let t = read_tableau(file)?;
    let out = match direction {
        Direction::Forward => refill(&t, &g, &s),
        Direction::Backward => unrefill(&t, &g, &s),
    }
    .map_err(failed)?;
    print!("{}", out.to_grid());
    if strips {
        let refilled = if direction == Direction::Forward { &out } else { &t };
        let width = g.n() - 1;
        let found: Vec<String> = (1..g.r())
            .filter(|&i| has_pair_strip(refilled, i, width))
            .map(|i| i.to_string())
            .collect();
        println!("strips: {}", found.join(" "));
        for (i, boxes) in bold_strips(refilled, &g, &s).map_err(failed)? {
            let cells: Vec<String> = boxes.iter().map(|(row, col)| format!("{},{}", row + 1, col + 1)).collect();
            println!("({},{}): {}", i, i + 1, cells.join(" "));
        }
    }
    Ok(())
}

fn cmd_gaps(r: usize, n: usize) -> Outcome {
    let ctx = context(r, n)?;
    let tuple = |xs: &[usize]| format!("({})", xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(","));
    for row in gap_table(&ctx) {
        let interior = &row.gap.values()[1..row.gap.r()];
        println!("{} {} {} {}", row.lambda, row.tilde, tuple(interior), tuple(&row.weights));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gamma { r, n, mu, formula, check } => cmd_gamma(r, n, mu, formula, check),
        Command::OrbitClass { r, n, format, formula } => cmd_orbit_class(r, n, format, formula),
        Command::Verify { suite, r, n } => cmd_verify(&suite, r, n),
        Command::Bijection { direction, file, r, n } => cmd_bijection(direction, &file, r, n),
        Command::Refill { direction, file, gap, split, strips } => cmd_refill(direction, &file, gap, split, strips),
        Command::Gaps { r, n } => cmd_gaps(r, n),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {:#}", f.error);
            ExitCode::from(f.code)
        }
    }
}
