//! Command-line front end: reads graphs, runs one claim per graph and prints
//! self-validated certificates.

pub mod cert;
pub mod claims;
pub mod validate;

use std::io::{Read, Write};
use std::time::Instant;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use pmcover::io::{parse_stream, write_any};
use pmcover::matching::DEFAULT_PM_CAP;
use pmcover::{families, CubicGraph};
use rayon::prelude::*;

use cert::{Certificate, Claim, TSV_HEADER};
use claims::{certify, recheck, Options};

#[derive(Parser, Debug)]
#[command(name = "pmcover", version, about = "Perfect matching invariants of cubic graphs with checkable certificates")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Upper limit on the number of perfect matchings enumerated per graph.
    #[arg(long, global = true, default_value_t = DEFAULT_PM_CAP)]
    pub pm_cap: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Seed for the random generators.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads; output order always follows input order.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
    /// Record wall-clock time in each certificate (breaks byte-identical output).
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

#[derive(Args, Debug)]
pub struct Input {
    /// graph6/sparse6 lines or cmg blocks; stdin when absent.
    pub file: Option<std::path::PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Colouring defect with an optimal 3-array.
    Defect(Input),
    /// Perfect matching index with a minimum cover.
    Pmi(Input),
    /// A cover by at most five perfect matchings.
    BergeCover(Input),
    /// Core of an optimal 3-array; a hexagon certificate when the defect is 3.
    Core(Input),
    /// Perfect matching or barrier for the side of a 6-edge-cut.
    SixCut {
        #[command(flatten)]
        input: Input,
        /// Comma-separated vertices of the side.
        #[arg(long, value_delimiter = ',', required = true)]
        side: Vec<usize>,
    },
    /// Bipartite index.
    Bi(Input),
    /// Oddness.
    Oddness(Input),
    /// Cyclic edge connectivity.
    CyclicConn(Input),
    /// Five-matching cover of a defect-3 graph built from its hexagonal core.
    CoverDefect3(Input),
    /// Four-matching cover or Petersen verdict for a cyclically 4-edge-connected defect-3 graph.
    FourCover(Input),
    /// Defect, perfect matching index and cyclic connectivity of a Petersen join.
    JoinVerify(Input),
    /// Print built-in or random graphs.
    Gen(Gen),
    /// Re-validate a file of JSONL certificates.
    Verify { file: std::path::PathBuf },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    K4,
    K33,
    Prism,
    Q3,
    Petersen,
    Heawood,
    Dipole,
    Flower,
    Join,
    Dot,
    Random,
    RandomSimple,
    Bipartite,
    AlmostBipartite,
    Corpus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Base {
    K33,
    Q3,
    Heawood,
}

#[derive(Args, Debug)]
pub struct Gen {
    #[arg(value_enum)]
    pub family: Family,
    /// Flower snark parameter.
    #[arg(long, default_value_t = 5)]
    pub k: usize,
    /// Bipartite part of a Petersen join.
    #[arg(long, value_enum, default_value_t = Base::K33)]
    pub base: Base,
    /// Vertex removed from the bipartite part of a join.
    #[arg(long, default_value_t = 0)]
    pub vertex: usize,
    /// Which of the two dot products (1 or 2).
    #[arg(long, default_value_t = 1)]
    pub index: usize,
    /// Order of random graphs.
    #[arg(long, default_value_t = 10)]
    pub n: usize,
    /// Number of random graphs, seeded consecutively from --seed.
    #[arg(long, default_value_t = 1)]
    pub count: usize,
}

fn generate(gen: &Gen, seed: u64) -> anyhow::Result<Vec<CubicGraph>> {
    let one = |g: CubicGraph| Ok(vec![g]);
    let random = |f: &dyn Fn(usize, u64) -> pmcover::Result<CubicGraph>| -> anyhow::Result<Vec<CubicGraph>> {
        (0..gen.count as u64).map(|i| Ok(f(gen.n, seed.wrapping_add(i))?)).collect()
    };
    match gen.family {
        Family::K4 => one(families::k4()),
        Family::K33 => one(families::k33()),
        Family::Prism => one(families::prism3()),
        Family::Q3 => one(families::cube_q3()),
        Family::Petersen => one(families::petersen()),
        Family::Heawood => one(families::heawood()),
        Family::Dipole => one(families::dipole3()),
        Family::Flower => one(families::flower_snark(gen.k)?),
        Family::Join => {
            let b = match gen.base {
                Base::K33 => families::k33(),
                Base::Q3 => families::cube_q3(),
                Base::Heawood => families::heawood(),
            };
            one(families::petersen_join(&b, gen.vertex)?)
        }
        Family::Dot => {
            let [a, b] = families::petersen_dot_products();
            match gen.index {
                1 => one(a),
                2 => one(b),
                i => bail!("dot product index must be 1 or 2, got {i}"),
            }
        }
        Family::Random => random(&families::random_bridgeless_cubic),
        Family::RandomSimple => random(&families::random_bridgeless_simple_cubic),
        Family::Bipartite => random(&families::random_bipartite_cubic),
        Family::AlmostBipartite => random(&|n, s| families::random_almost_bipartite(n, s).map(|(g, ..)| g)),
        Family::Corpus => Ok(families::corpus().into_iter().map(|(_, g)| g).collect()),
    }
}

fn read_input(input: &Input, stdin: &mut dyn Read) -> anyhow::Result<Vec<CubicGraph>> {
    let text = match &input.file {
        Some(p) => std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?,
        None => {
            let mut s = String::new();
            stdin.read_to_string(&mut s).context("reading stdin")?;
            s
        }
    };
    parse_stream(&text)
        .into_iter()
        .enumerate()
        .map(|(i, r)| r.with_context(|| format!("input graph {}", i + 1)))
        .collect()
}

fn emit(certs: &[Certificate], format: Format, out: &mut dyn Write) -> anyhow::Result<i32> {
    if format == Format::Tsv {
        writeln!(out, "{TSV_HEADER}")?;
    }
    for (i, c) in certs.iter().enumerate() {
        match format {
            Format::Json => writeln!(out, "{}", serde_json::to_string(c)?)?,
            Format::Tsv => writeln!(out, "{}", c.tsv_row(i))?,
        }
    }
    Ok(if certs.iter().all(|c| c.verified) { 0 } else { 2 })
}

fn pool(jobs: usize) -> anyhow::Result<rayon::ThreadPool> {
    Ok(rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build()?)
}

fn run_claim(cli: &Cli, claim: Claim, input: &Input, side: Vec<usize>, stdin: &mut dyn Read, out: &mut dyn Write) -> anyhow::Result<i32> {
    let graphs = read_input(input, stdin)?;
    let opts = Options { pm_cap: cli.pm_cap, side };
    let timing = cli.timing;
    let certs: Vec<Certificate> = pool(cli.jobs)?.install(|| {
        graphs
            .par_iter()
            .map(|g| {
                let start = Instant::now();
                let mut c = certify(claim, g, &opts);
                if timing {
                    c.runtime_ms = Some(start.elapsed().as_millis() as u64);
                }
                c
            })
            .collect()
    });
    emit(&certs, cli.format, out)
}

fn dispatch(cli: &Cli, stdin: &mut dyn Read, out: &mut dyn Write) -> anyhow::Result<i32> {
    let simple = |claim: Claim, input: &Input, stdin: &mut dyn Read, out: &mut dyn Write| {
        run_claim(cli, claim, input, Vec::new(), stdin, out)
    };
    match &cli.command {
        Command::Defect(i) => simple(Claim::Defect, i, stdin, out),
        Command::Pmi(i) => simple(Claim::Pmi, i, stdin, out),
        Command::BergeCover(i) => simple(Claim::BergeCover, i, stdin, out),
        Command::Core(i) => simple(Claim::HexCore, i, stdin, out),
        Command::SixCut { input, side } => run_claim(cli, Claim::SixCut, input, side.clone(), stdin, out),
        Command::Bi(i) => simple(Claim::BipartiteIndex, i, stdin, out),
        Command::Oddness(i) => simple(Claim::Oddness, i, stdin, out),
        Command::CyclicConn(i) => simple(Claim::CyclicConnectivity, i, stdin, out),
        Command::CoverDefect3(i) => simple(Claim::CoverDefect3, i, stdin, out),
        Command::FourCover(i) => simple(Claim::FourCover, i, stdin, out),
        Command::JoinVerify(i) => simple(Claim::JoinVerify, i, stdin, out),
        Command::Gen(gen) => {
            for g in generate(gen, cli.seed)? {
                let text = write_any(&g);
                write!(out, "{text}")?;
                if text.starts_with("cmg") {
                    writeln!(out)?;
                }
            }
            Ok(0)
        }
        Command::Verify { file } => {
            let text = std::fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?;
            let certs = text
                .lines()
                .filter(|l| !l.trim().is_empty())
                .enumerate()
                .map(|(i, l)| {
                    serde_json::from_str::<Certificate>(l).with_context(|| format!("certificate on line {}", i + 1))
                })
                .collect::<anyhow::Result<Vec<_>>>()?;
            let certs: Vec<Certificate> = pool(cli.jobs)?.install(|| certs.into_par_iter().map(recheck).collect());
            emit(&certs, cli.format, out)
        }
    }
}

/// Runs the tool on `args` (including the program name) and returns the
/// exit code: 0 when every claim verified, 2 when some did not, 1 on usage
/// or input errors.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    match dispatch(&cli, stdin, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            1
        }
    }
}
